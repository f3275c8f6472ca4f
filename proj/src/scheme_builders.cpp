#include "csitdof/scheme_sim.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace csitdof {

namespace {

Rational from_size(std::size_t n) {
    return Rational(static_cast<long>(n));
}

std::size_t to_count(const Rational& value) {
    if (value.get_den() != 1 || sgn(value) < 0) {
        throw std::logic_error("slot count " + to_string(value) + " is not a nonnegative integer");
    }
    return value.get_num().get_ui();
}

std::string strip_label(const std::string& label) {
    const std::string prefix = "mimo:";
    return label.rfind(prefix, 0) == 0 ? label.substr(prefix.size()) : label;
}

// Appends slots in order and hands out symbol ids as fresh streams are added.
class ScheduleWriter {
public:
    ScheduleWriter(std::size_t users, std::vector<std::size_t> rx, std::size_t tx) {
        schedule_.users = users;
        schedule_.rx_antennas = std::move(rx);
        schedule_.tx_antennas = tx;
    }

    Slot& slot(const std::string& csit) {
        schedule_.slots.push_back({parse_state_tuple(csit), {}});
        return schedule_.slots.back();
    }

    std::vector<SymbolId> fresh(Slot& slot, std::size_t owner, std::size_t count, std::vector<std::size_t> orth,
                                std::string note) {
        std::vector<SymbolId> ids;
        if (count == 0) {
            return ids;
        }
        for (std::size_t i = 0; i < count; ++i) {
            ids.push_back(next_++);
        }
        slot.streams.push_back({owner, FreshSymbols{count}, std::move(orth), std::move(note)});
        return ids;
    }

    static void resend(Slot& slot, std::size_t owner, std::deque<SymbolId>& queue, std::size_t count,
                       std::string note) {
        if (count == 0) {
            return;
        }
        if (queue.size() < count) {
            throw std::logic_error("resend queue underflow");
        }
        std::vector<SymbolId> ids(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(count));
        queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(count));
        slot.streams.push_back({owner, ResendSymbols{std::move(ids)}, {}, std::move(note)});
    }

    Schedule take() { return std::move(schedule_); }

private:
    Schedule schedule_;
    SymbolId next_ = 0;
};

void push_all(std::deque<SymbolId>& queue, const std::vector<SymbolId>& ids) {
    queue.insert(queue.end(), ids.begin(), ids.end());
}

// Per-n slot-count coefficients used by a corner's phases.
std::vector<Rational> phase_coefficients(const MimoScenario& s, const std::string& label) {
    const Rational N1 = from_size(s.n1());
    const Rational N2 = from_size(s.n2());
    std::vector<Rational> c{s.pp(), s.pn(), s.np(), s.nn()};
    if (label == "A1" || label == "B1") {
        c.push_back(N1 * s.pn() / N2);
    } else if (label == "A2") {
        c.push_back(N1 * s.pn() / N2);
        c.push_back((N1 - N2) * s.nn() / N2);
    } else if (label == "B2" || label == "B3") {
        c.push_back(N1 * s.pn() / N2);
        c.push_back((N2 * s.np() - N1 * s.pn()) / (N1 - N2));
    } else {
        c.push_back(N2 * s.np() / N1);
    }
    return c;
}

void check_label(const MimoScenario& s, const std::string& label) {
    std::string available;
    for (const auto& corner : mimo_corners(s)) {
        if (corner.label == "mimo:" + label) {
            return;
        }
        available += (available.empty() ? "" : ", ") + corner.label.substr(5);
    }
    throw PreconditionError("corner " + label + " does not belong to this scenario's branch (available: " +
                            available + ")");
}

}  // namespace

Schedule build_zfbf_case_a_schedule(std::size_t users, const Rational& perfect, std::size_t target,
                                    std::size_t slots) {
    if (users == 0) {
        throw PreconditionError("zfbf schedule needs at least one user");
    }
    if (target >= users) {
        throw PreconditionError("target user " + std::to_string(target + 1) + " does not exist");
    }
    if (sgn(perfect) < 0 || perfect > 1) {
        throw PreconditionError("lambda_P must lie in [0, 1]");
    }
    if (slots == 0) {
        slots = perfect.get_den().get_ui();
    }
    const Rational zf_slots = perfect * from_size(slots);
    if (zf_slots.get_den() != 1) {
        throw PreconditionError("lambda_P * T is not an integer for T = " + std::to_string(slots));
    }
    const std::size_t tp = zf_slots.get_num().get_ui();
    ScheduleWriter w(users, std::vector<std::size_t>(users, 1), users);
    for (std::size_t t = 0; t < slots; ++t) {
        if (t < tp) {
            Slot& slot = w.slot(std::string(users, 'P'));
            for (std::size_t k = 0; k < users; ++k) {
                std::vector<std::size_t> others;
                for (std::size_t j = 0; j < users; ++j) {
                    if (j != k) {
                        others.push_back(j);
                    }
                }
                w.fresh(slot, k, 1, std::move(others), "zero forcing");
            }
        } else {
            Slot& slot = w.slot(std::string(users, 'N'));
            w.fresh(slot, target, 1, {}, "single user");
        }
    }
    return w.take();
}

Schedule build_mat2_schedule(std::size_t blocks) {
    ScheduleWriter w(2, {1, 1}, 2);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = 3 * b;
        w.fresh(w.slot("DD"), 0, 2, {}, "order-1 symbols for user 1");
        w.fresh(w.slot("DD"), 1, 2, {}, "order-1 symbols for user 2");
        Slot& slot = w.slot("DD");
        slot.streams.push_back({0,
                                ResendObservations{{{first, 1, 0}, {first + 1, 0, 0}}},
                                {},
                                "order-2 symbol: sum of the overheard observations"});
    }
    return w.take();
}

std::size_t minimal_mimo_block(const MimoScenario& s, const std::string& label_in) {
    const std::string label = strip_label(label_in);
    check_label(s, label);
    mpz_class n = 1;
    for (const Rational& c : phase_coefficients(s, label)) {
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), c.get_den().get_mpz_t());
        if (n > static_cast<unsigned long>(kMaxMimoBlock)) {
            throw PreconditionError("minimal block length for corner " + label + " exceeds " +
                                    std::to_string(kMaxMimoBlock) + " slots");
        }
    }
    return n.get_ui();
}

Schedule build_mimo_schedule(const MimoScenario& s, const std::string& label_in, std::size_t n) {
    const std::string label = strip_label(label_in);
    const std::size_t n_min = minimal_mimo_block(s, label);
    if (n == 0 || n % n_min != 0) {
        throw PreconditionError("n = " + std::to_string(n) + " gives non-integral phase slot counts for corner " +
                                label + "; the minimal valid n is " + std::to_string(n_min));
    }
    const auto coeffs = phase_coefficients(s, label);
    std::vector<std::size_t> count;
    for (const Rational& c : coeffs) {
        count.push_back(to_count(c * from_size(n)));
    }
    const std::size_t npp = count[0], npn = count[1], nnp = count[2], nnn = count[3];
    const std::size_t N1 = s.n1(), N2 = s.n2();
    const std::string side1 = "resend: side information for user 1";
    const std::string side2 = "resend: side information for user 2";

    ScheduleWriter w(2, {N1, N2}, N1 + N2);
    std::deque<SymbolId> queue;
    std::deque<SymbolId> queue3;

    const auto both_zf = [&](const std::string& note) {
        for (std::size_t t = 0; t < npp; ++t) {
            Slot& slot = w.slot("PP");
            w.fresh(slot, 0, N1, {1}, note);
            w.fresh(slot, 1, N2, {0}, note);
        }
    };

    if (label == "A1" || label == "B1") {
        const std::size_t k = count[4];
        for (std::size_t t = 0; t < npn; ++t) {
            Slot& slot = w.slot("PN");
            push_all(queue, w.fresh(slot, 0, N1, {}, "phase 1"));
            w.fresh(slot, 1, N2, {0}, "phase 1");
        }
        for (std::size_t t = 0; t < k; ++t) {
            Slot& slot = w.slot("NP");
            ScheduleWriter::resend(slot, 0, queue, N2, "phase 2; " + side2);
            w.fresh(slot, 0, N1, {1}, "phase 2");
        }
        for (std::size_t t = 0; t < nnp - k; ++t) {
            w.fresh(w.slot("NP"), 0, N1, {}, "phase 3");
        }
        for (std::size_t t = 0; t < nnn; ++t) {
            w.fresh(w.slot("NN"), 0, N1, {}, "phase 3");
        }
        both_zf("phase 4");
    } else if (label == "A2" || label == "B2" || label == "B3") {
        const bool a_branch = label == "A2";
        const std::size_t k1 = count[4];
        const std::size_t k3 = a_branch ? count[5] : nnp - k1;
        const std::size_t k4 = a_branch ? nnn : count[5];
        for (std::size_t t = 0; t < k1; ++t) {
            Slot& slot = w.slot("NP");
            push_all(queue, w.fresh(slot, 1, N2, {}, "phase 1"));
            w.fresh(slot, 0, N1, {1}, "phase 1");
        }
        for (std::size_t t = 0; t < npn; ++t) {
            Slot& slot = w.slot("PN");
            ScheduleWriter::resend(slot, 1, queue, N1, "phase 2; " + side1);
            w.fresh(slot, 1, N2, {0}, "phase 2");
        }
        for (std::size_t t = 0; t < k3; ++t) {
            Slot& slot = w.slot("NP");
            push_all(queue3, w.fresh(slot, 1, N2, {}, "phase 3"));
            w.fresh(slot, 0, N1, {1}, "phase 3");
        }
        for (std::size_t t = 0; t < k4; ++t) {
            Slot& slot = w.slot("NN");
            w.fresh(slot, 1, N2, {}, "phase 4");
            ScheduleWriter::resend(slot, 1, queue3, N1 - N2, "phase 4; " + side1);
        }
        if (a_branch) {
            for (std::size_t t = 0; t < nnp - k1 - k3; ++t) {
                Slot& slot = w.slot("NP");
                w.fresh(slot, 1, N2, {}, "phase 5");
                w.fresh(slot, 0, N1 - N2, {1}, "phase 5");
            }
        } else {
            for (std::size_t t = 0; t < nnn - k4; ++t) {
                Slot& slot = w.slot("NN");
                if (label == "B2") {
                    w.fresh(slot, 1, N2, {}, "phase 5");
                } else {
                    w.fresh(slot, 0, N1, {}, "phase 5");
                }
            }
        }
        both_zf("phase 6");
    } else if (label == "C1") {
        const std::size_t k1 = count[4];
        for (std::size_t t = 0; t < k1; ++t) {
            Slot& slot = w.slot("PN");
            push_all(queue, w.fresh(slot, 0, N1, {}, "phase 1"));
            w.fresh(slot, 1, N2, {0}, "phase 1");
        }
        for (std::size_t t = 0; t < nnp; ++t) {
            Slot& slot = w.slot("NP");
            ScheduleWriter::resend(slot, 0, queue, N2, "phase 2; " + side2);
            w.fresh(slot, 0, N1, {1}, "phase 2");
        }
        for (std::size_t t = 0; t < npn - k1; ++t) {
            w.fresh(w.slot("PN"), 0, N1, {}, "phase 3");
        }
        for (std::size_t t = 0; t < nnn; ++t) {
            w.fresh(w.slot("NN"), 0, N1, {}, "phase 3");
        }
        both_zf("phase 4");
    } else {
        const std::size_t k2 = count[4];
        for (std::size_t t = 0; t < nnp; ++t) {
            Slot& slot = w.slot("NP");
            push_all(queue, w.fresh(slot, 1, N2, {}, "phase 1"));
            w.fresh(slot, 0, N1, {1}, "phase 1");
        }
        for (std::size_t t = 0; t < k2; ++t) {
            Slot& slot = w.slot("PN");
            ScheduleWriter::resend(slot, 1, queue, N1, "phase 2; " + side1);
            w.fresh(slot, 1, N2, {0}, "phase 2");
        }
        const bool c2 = label == "C2";
        const auto filler = [&](const std::string& csit) {
            Slot& slot = w.slot(csit);
            if (c2) {
                w.fresh(slot, 1, N2, {}, "phase 3");
            } else {
                w.fresh(slot, 0, N1, {}, "phase 3");
            }
        };
        for (std::size_t t = 0; t < npn - k2; ++t) {
            filler("PN");
        }
        for (std::size_t t = 0; t < nnn; ++t) {
            filler("NN");
        }
        both_zf("phase 4");
    }
    if (!queue.empty() || !queue3.empty()) {
        throw std::logic_error("build_mimo_schedule: side information left unsent");
    }
    return w.take();
}

}  // namespace csitdof
