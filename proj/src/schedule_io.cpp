#include "csitdof/schedule_io.hpp"

#include "csitdof/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace csitdof {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("schedule: field '" + where + "' " + what);
}

std::size_t positive(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        fail(where, "must be a positive integer");
    }
    return v.get<std::size_t>();
}

// 1-based index in the file, 0-based in memory.
std::size_t index(const json& v, const std::string& where, std::size_t limit) {
    const std::size_t i = positive(v, where);
    if (i > limit) {
        fail(where, "is " + std::to_string(i) + ", larger than " + std::to_string(limit));
    }
    return i - 1;
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_array()) {
        fail(where + "." + key, "must be an array");
    }
    return obj.at(key);
}

Stream parse_stream(const json& j, const std::string& where, const Schedule& s, std::size_t slot) {
    if (!j.is_object()) {
        fail(where, "must be an object");
    }
    Stream stream;
    if (!j.contains("owner")) {
        fail(where + ".owner", "is missing");
    }
    stream.owner = index(j.at("owner"), where + ".owner", s.users);
    const int kinds = int(j.contains("fresh")) + int(j.contains("retransmit")) + int(j.contains("overheard"));
    if (kinds != 1) {
        fail(where, "must have exactly one of 'fresh', 'retransmit', 'overheard'");
    }
    if (j.contains("fresh")) {
        stream.payload = FreshSymbols{positive(j.at("fresh"), where + ".fresh")};
    } else if (j.contains("retransmit")) {
        ResendSymbols r;
        const json& ids = array_field(j, "retransmit", where);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            r.ids.push_back(positive(ids[i], where + ".retransmit[" + std::to_string(i) + "]") - 1);
        }
        stream.payload = std::move(r);
    } else {
        ResendObservations r;
        const json& terms = array_field(j, "overheard", where);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string at = where + ".overheard[" + std::to_string(i) + "]";
            const json& t = terms[i];
            if (!t.is_object() || !t.contains("slot") || !t.contains("user") || !t.contains("antenna")) {
                fail(at, "must be an object with 'slot', 'user' and 'antenna'");
            }
            const std::size_t user = index(t.at("user"), at + ".user", s.users);
            r.terms.push_back({index(t.at("slot"), at + ".slot", slot + 1),
                               user,
                               index(t.at("antenna"), at + ".antenna", s.rx_antennas[user])});
        }
        stream.payload = std::move(r);
    }
    if (j.contains("precode")) {
        const json& p = j.at("precode");
        if (!p.is_object()) {
            fail(where + ".precode", "must be an object");
        }
        if (p.contains("orthogonal_to")) {
            const json& users = array_field(p, "orthogonal_to", where + ".precode");
            for (std::size_t i = 0; i < users.size(); ++i) {
                stream.orthogonal_to.push_back(
                    index(users[i], where + ".precode.orthogonal_to[" + std::to_string(i) + "]", s.users));
            }
        }
    }
    if (j.contains("note")) {
        if (!j.at("note").is_string()) {
            fail(where + ".note", "must be a string");
        }
        stream.note = j.at("note").get<std::string>();
    }
    return stream;
}

}  // namespace

Schedule parse_schedule(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("schedule: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("schedule: top level must be an object");
    }
    Schedule s;
    const json& slots = array_field(doc, "slots", "schedule");
    if (doc.contains("users")) {
        s.users = positive(doc.at("users"), "users");
    } else if (!slots.empty() && slots[0].is_object() && slots[0].contains("csit") &&
               slots[0].at("csit").is_string()) {
        s.users = slots[0].at("csit").get<std::string>().size();
    } else {
        fail("users", "is missing and cannot be inferred");
    }
    if (!doc.contains("tx_antennas")) {
        fail("tx_antennas", "is missing");
    }
    s.tx_antennas = positive(doc.at("tx_antennas"), "tx_antennas");
    if (doc.contains("antennas")) {
        const json& a = array_field(doc, "antennas", "schedule");
        if (a.size() != s.users) {
            fail("antennas", "must list one count per user");
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            s.rx_antennas.push_back(positive(a[i], "antennas[" + std::to_string(i) + "]"));
        }
    } else {
        s.rx_antennas.assign(s.users, 1);
    }
    for (std::size_t t = 0; t < slots.size(); ++t) {
        const std::string where = "slots[" + std::to_string(t) + "]";
        const json& j = slots[t];
        if (!j.is_object() || !j.contains("csit") || !j.at("csit").is_string()) {
            fail(where + ".csit", "must be a string over {P,D,N}");
        }
        Slot slot;
        try {
            slot.csit = parse_state_tuple(j.at("csit").get<std::string>());
        } catch (const std::exception& e) {
            fail(where + ".csit", e.what());
        }
        if (slot.csit.size() != s.users) {
            fail(where + ".csit", "must have one state per user");
        }
        const json& streams = array_field(j, "streams", where);
        for (std::size_t i = 0; i < streams.size(); ++i) {
            slot.streams.push_back(parse_stream(streams[i], where + ".streams[" + std::to_string(i) + "]", s, t));
        }
        s.slots.push_back(std::move(slot));
    }
    return s;
}

Schedule load_schedule(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("schedule: cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_schedule(text.str());
}

std::string schedule_to_json(const Schedule& schedule) {
    json doc;
    doc["users"] = schedule.users;
    doc["tx_antennas"] = schedule.tx_antennas;
    doc["antennas"] = schedule.rx_antennas;
    json slots = json::array();
    for (const Slot& slot : schedule.slots) {
        json streams = json::array();
        for (const Stream& stream : slot.streams) {
            json j;
            j["owner"] = stream.owner + 1;
            if (const auto* f = std::get_if<FreshSymbols>(&stream.payload)) {
                j["fresh"] = f->count;
            } else if (const auto* r = std::get_if<ResendSymbols>(&stream.payload)) {
                json ids = json::array();
                for (SymbolId id : r->ids) {
                    ids.push_back(id + 1);
                }
                j["retransmit"] = ids;
            } else {
                json terms = json::array();
                for (const auto& ref : std::get<ResendObservations>(stream.payload).terms) {
                    terms.push_back({{"slot", ref.slot + 1}, {"user", ref.user + 1}, {"antenna", ref.antenna + 1}});
                }
                j["overheard"] = terms;
            }
            if (!stream.orthogonal_to.empty()) {
                json users = json::array();
                for (std::size_t u : stream.orthogonal_to) {
                    users.push_back(u + 1);
                }
                j["precode"] = {{"orthogonal_to", users}};
            }
            if (!stream.note.empty()) {
                j["note"] = stream.note;
            }
            streams.push_back(std::move(j));
        }
        slots.push_back({{"csit", to_string(slot.csit)}, {"streams", streams}});
    }
    doc["slots"] = slots;
    return doc.dump(2) + "\n";
}

}  // namespace csitdof
