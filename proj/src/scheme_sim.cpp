#include "csitdof/scheme_sim.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace csitdof {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string slot_text(std::size_t slot) {
    return "slot " + std::to_string(slot + 1);
}

// Stacked channel rows of the given users in one slot.
RationalMatrix stacked_channels(const ChannelRealization& r, std::size_t slot, const std::vector<std::size_t>& users) {
    RationalMatrix rows;
    for (std::size_t u : users) {
        const auto& h = r.channels[slot][u];
        rows.insert(rows.end(), h.begin(), h.end());
    }
    return rows;
}

// Precoding vectors (one per signal dimension) and the symbol-space content
// of every dimension, slot by slot.
struct PrecodedSlot {
    std::vector<RationalVector> precoders;  // M-vectors
    std::vector<RationalVector> contents;   // symbol_count-vectors
    std::vector<std::size_t> stream_of;     // dimension -> stream index
};

struct Transmission {
    std::vector<PrecodedSlot> slots;
    // received[slot][user] is N_user x symbol_count
    std::vector<std::vector<RationalMatrix>> received;
};

RationalMatrix receive(const RationalMatrix& channel, const PrecodedSlot& slot, std::size_t symbols) {
    RationalMatrix y(channel.size(), RationalVector(symbols, 0));
    for (std::size_t d = 0; d < slot.precoders.size(); ++d) {
        for (std::size_t a = 0; a < channel.size(); ++a) {
            const Rational gain = dot(channel[a], slot.precoders[d]);
            if (sgn(gain) == 0) {
                continue;
            }
            const auto& content = slot.contents[d];
            for (std::size_t s = 0; s < symbols; ++s) {
                if (sgn(content[s]) != 0) {
                    y[a][s] += gain * content[s];
                }
            }
        }
    }
    return y;
}

Transmission transmit(const Schedule& schedule, const ChannelRealization& r) {
    const std::size_t symbols = schedule.symbol_count();
    const std::size_t m = schedule.tx_antennas;
    Transmission out;
    out.slots.resize(schedule.slots.size());
    out.received.resize(schedule.slots.size());
    SymbolId next_symbol = 0;

    for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
        const Slot& slot = schedule.slots[t];
        PrecodedSlot& pre = out.slots[t];
        std::size_t dim = 0;
        for (std::size_t si = 0; si < slot.streams.size(); ++si) {
            const Stream& stream = slot.streams[si];
            RationalMatrix basis;
            if (!stream.orthogonal_to.empty()) {
                basis = null_space(stacked_channels(r, t, stream.orthogonal_to), m);
            }
            const auto precoder = [&](std::size_t d) {
                const RationalVector& mix = r.mixing[t][d];
                if (stream.orthogonal_to.empty()) {
                    return mix;
                }
                RationalVector p(m, 0);
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    for (std::size_t k = 0; k < m; ++k) {
                        p[k] += mix[b] * basis[b][k];
                    }
                }
                return p;
            };
            const auto add = [&](RationalVector content) {
                pre.precoders.push_back(precoder(dim++));
                pre.contents.push_back(std::move(content));
                pre.stream_of.push_back(si);
            };
            std::visit(overloaded{
                           [&](const FreshSymbols& f) {
                               for (std::size_t i = 0; i < f.count; ++i) {
                                   RationalVector c(symbols, 0);
                                   c[next_symbol++] = 1;
                                   add(std::move(c));
                               }
                           },
                           [&](const ResendSymbols& rs) {
                               for (SymbolId id : rs.ids) {
                                   RationalVector c(symbols, 0);
                                   c[id] = 1;
                                   add(std::move(c));
                               }
                           },
                           [&](const ResendObservations& ro) {
                               RationalVector c(symbols, 0);
                               for (const auto& ref : ro.terms) {
                                   const auto& row = out.received[ref.slot][ref.user][ref.antenna];
                                   for (std::size_t s = 0; s < symbols; ++s) {
                                       c[s] += row[s];
                                   }
                               }
                               add(std::move(c));
                           },
                       },
                       stream.payload);
        }
        out.received[t].reserve(schedule.users);
        for (std::size_t u = 0; u < schedule.users; ++u) {
            out.received[t].push_back(receive(r.channels[t][u], pre, symbols));
        }
    }
    return out;
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-kChannelEntryRange, kChannelEntryRange);
    RationalVector v(n);
    for (auto& x : v) {
        x = Rational(entry(rng), kChannelDenominator);
        x.canonicalize();
    }
    return v;
}

}  // namespace

std::size_t Stream::dimensions() const {
    return std::visit(overloaded{
                          [](const FreshSymbols& f) { return f.count; },
                          [](const ResendSymbols& r) { return r.ids.size(); },
                          [](const ResendObservations&) { return std::size_t{1}; },
                      },
                      payload);
}

std::size_t Schedule::symbol_count() const {
    std::size_t total = 0;
    for (const auto& slot : slots) {
        for (const auto& stream : slot.streams) {
            if (const auto* f = std::get_if<FreshSymbols>(&stream.payload)) {
                total += f->count;
            }
        }
    }
    return total;
}

std::vector<std::size_t> Schedule::symbol_owners() const {
    std::vector<std::size_t> owners;
    for (const auto& slot : slots) {
        for (const auto& stream : slot.streams) {
            if (const auto* f = std::get_if<FreshSymbols>(&stream.payload)) {
                owners.insert(owners.end(), f->count, stream.owner);
            }
        }
    }
    return owners;
}

CsitPattern Schedule::csit_pattern() const {
    std::vector<StateTuple> columns;
    columns.reserve(slots.size());
    for (const auto& slot : slots) {
        columns.push_back(slot.csit);
    }
    return CsitPattern(users, std::move(columns));
}

std::vector<Violation> validate_schedule(const Schedule& schedule) {
    std::vector<Violation> out;
    const auto fail = [&](std::size_t slot, std::string message) { out.push_back({slot, std::move(message)}); };

    if (schedule.users == 0) {
        fail(0, "schedule has no users");
        return out;
    }
    if (schedule.rx_antennas.size() != schedule.users) {
        fail(0, "rx_antennas lists " + std::to_string(schedule.rx_antennas.size()) + " users, expected " +
                    std::to_string(schedule.users));
        return out;
    }
    for (std::size_t u = 0; u < schedule.users; ++u) {
        if (schedule.rx_antennas[u] == 0) {
            fail(0, "user " + std::to_string(u + 1) + " has no receive antennas");
            return out;
        }
    }
    if (schedule.tx_antennas == 0) {
        fail(0, "schedule has no transmit antennas");
        return out;
    }

    std::size_t symbols_before = 0;
    for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
        const Slot& slot = schedule.slots[t];
        if (slot.csit.size() != schedule.users) {
            fail(t, slot_text(t) + ": CSIT lists " + std::to_string(slot.csit.size()) + " users, expected " +
                        std::to_string(schedule.users));
            continue;
        }
        std::size_t dims = 0;
        std::size_t fresh_here = 0;
        std::map<std::vector<std::size_t>, std::size_t> zf_dims;
        for (std::size_t si = 0; si < slot.streams.size(); ++si) {
            const Stream& stream = slot.streams[si];
            const std::string where = slot_text(t) + ", stream " + std::to_string(si + 1);
            if (stream.owner >= schedule.users) {
                fail(t, where + ": owner " + std::to_string(stream.owner + 1) + " does not exist");
            }
            if (stream.dimensions() == 0) {
                fail(t, where + ": carries no symbols");
            }
            dims += stream.dimensions();

            std::set<std::size_t> protected_users;
            std::size_t protected_antennas = 0;
            for (std::size_t u : stream.orthogonal_to) {
                if (u >= schedule.users) {
                    fail(t, where + ": orthogonal_to user " + std::to_string(u + 1) + " does not exist");
                    continue;
                }
                if (!protected_users.insert(u).second) {
                    fail(t, where + ": orthogonal_to lists user " + std::to_string(u + 1) + " twice");
                    continue;
                }
                protected_antennas += schedule.rx_antennas[u];
                if (slot.csit[u] != CsitState::P) {
                    fail(t, where + ": zero-forcing to user " + std::to_string(u + 1) +
                                " needs perfect CSIT, state is " + std::string(1, to_char(slot.csit[u])));
                }
            }
            if (!protected_users.empty()) {
                std::vector<std::size_t> key(protected_users.begin(), protected_users.end());
                const std::size_t used = (zf_dims[key] += stream.dimensions());
                if (protected_antennas > schedule.tx_antennas || used > schedule.tx_antennas - protected_antennas) {
                    fail(t, where + ": null space of the protected users' channels is too small for " +
                                std::to_string(used) + " zero-forced dimensions");
                }
            }

            std::visit(overloaded{
                           [&](const FreshSymbols& f) { fresh_here += f.count; },
                           [&](const ResendSymbols& r) {
                               for (SymbolId id : r.ids) {
                                   if (id >= symbols_before) {
                                       fail(t, where + ": resends symbol " + std::to_string(id + 1) +
                                                   ", which is not sent in an earlier slot");
                                   }
                               }
                           },
                           [&](const ResendObservations& r) {
                               for (const auto& ref : r.terms) {
                                   if (ref.slot >= t) {
                                       fail(t, where + ": resends an observation of " + slot_text(ref.slot) +
                                                   ", which is not an earlier slot");
                                       continue;
                                   }
                                   if (ref.user >= schedule.users || ref.antenna >= schedule.rx_antennas[ref.user]) {
                                       fail(t, where + ": observation reference names a missing user/antenna");
                                       continue;
                                   }
                                   const CsitState known = schedule.slots[ref.slot].csit.size() > ref.user
                                                               ? schedule.slots[ref.slot].csit[ref.user]
                                                               : CsitState::N;
                                   if (known == CsitState::N) {
                                       fail(t, where + ": resending what user " + std::to_string(ref.user + 1) +
                                                   " observed in " + slot_text(ref.slot) +
                                                   " needs its channel there, but its CSIT was N");
                                   }
                               }
                           },
                       },
                       stream.payload);
        }
        if (dims > schedule.tx_antennas) {
            fail(t, slot_text(t) + ": " + std::to_string(dims) + " signal dimensions exceed " +
                        std::to_string(schedule.tx_antennas) + " transmit antennas");
        }
        symbols_before += fresh_here;
    }
    return out;
}

namespace {

std::string violation_text(const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << "invalid schedule:";
    for (const auto& v : violations) {
        out << "\n  " << v.message;
    }
    return out.str();
}

}  // namespace

ScheduleError::ScheduleError(std::vector<Violation> violations)
    : PreconditionError(violation_text(violations)), violations_(std::move(violations)) {}

ChannelRealization generate_channels(const Schedule& schedule, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ChannelRealization r;
    r.seed = seed;
    const std::size_t m = schedule.tx_antennas;
    r.channels.resize(schedule.slots.size());
    r.mixing.resize(schedule.slots.size());
    for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
        for (std::size_t u = 0; u < schedule.users; ++u) {
            const std::size_t n = schedule.rx_antennas.at(u);
            for (;;) {
                RationalMatrix h;
                for (std::size_t a = 0; a < n; ++a) {
                    h.push_back(random_vector(rng, m));
                }
                if (rank(h) == std::min(n, m)) {
                    r.channels[t].push_back(std::move(h));
                    break;
                }
                ++r.redraws;
            }
        }
        std::size_t dims = 0;
        for (const auto& stream : schedule.slots[t].streams) {
            dims += stream.dimensions();
        }
        for (std::size_t d = 0; d < dims; ++d) {
            r.mixing[t].push_back(random_vector(rng, m));
        }
    }
    return r;
}

Rational DecodeLedger::dof(std::size_t user) const {
    if (slots == 0) {
        return 0;
    }
    Rational value(static_cast<unsigned long>(users.at(user).decodable), static_cast<unsigned long>(slots));
    value.canonicalize();
    return value;
}

RationalVector DecodeLedger::dof() const {
    RationalVector out;
    for (std::size_t u = 0; u < users.size(); ++u) {
        out.push_back(dof(u));
    }
    return out;
}

DecodeLedger simulate_decode(const Schedule& schedule, const ChannelRealization& realization) {
    if (auto violations = validate_schedule(schedule); !violations.empty()) {
        throw ScheduleError(std::move(violations));
    }
    if (realization.channels.size() != schedule.slots.size()) {
        throw PreconditionError("channel realization does not match the schedule's slot count");
    }
    const Transmission tx = transmit(schedule, realization);
    const auto owners = schedule.symbol_owners();
    const std::size_t symbols = owners.size();

    DecodeLedger ledger;
    ledger.slots = schedule.slots.size();
    ledger.users.resize(schedule.users);
    for (std::size_t u = 0; u < schedule.users; ++u) {
        RationalMatrix all;
        RationalMatrix others;
        for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
            for (const auto& row : tx.received[t][u]) {
                all.push_back(row);
                RationalVector interference;
                for (std::size_t s = 0; s < symbols; ++s) {
                    if (owners[s] != u) {
                        interference.push_back(row[s]);
                    }
                }
                others.push_back(std::move(interference));
            }
        }
        ledger.users[u].intended = static_cast<std::size_t>(std::count(owners.begin(), owners.end(), u));
        if (all.empty()) {
            continue;
        }
        const std::size_t interference_rank = others.front().empty() ? 0 : rank(std::move(others));
        ledger.users[u].decodable = rank(std::move(all)) - interference_rank;
    }
    return ledger;
}

std::vector<ZfLeak> zero_forcing_leaks(const Schedule& schedule, const ChannelRealization& realization) {
    if (auto violations = validate_schedule(schedule); !violations.empty()) {
        throw ScheduleError(std::move(violations));
    }
    const Transmission tx = transmit(schedule, realization);
    std::vector<ZfLeak> leaks;
    for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
        const PrecodedSlot& pre = tx.slots[t];
        for (std::size_t d = 0; d < pre.precoders.size(); ++d) {
            const Stream& stream = schedule.slots[t].streams[pre.stream_of[d]];
            for (std::size_t u : stream.orthogonal_to) {
                for (const auto& row : realization.channels[t][u]) {
                    if (sgn(dot(row, pre.precoders[d])) != 0) {
                        leaks.push_back({t, pre.stream_of[d], u});
                        break;
                    }
                }
            }
        }
    }
    return leaks;
}

}  // namespace csitdof
