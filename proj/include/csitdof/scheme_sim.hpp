#pragma once

#include "csitdof/achievability.hpp"
#include "csitdof/csit_model.hpp"
#include "csitdof/errors.hpp"
#include "csitdof/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace csitdof {

// Fresh symbols are numbered 0, 1, ... in order of appearance (slot order,
// then stream order within a slot).
using SymbolId = std::size_t;

// Noise-free received signal of one receive antenna in an earlier slot.
struct ObservationRef {
    std::size_t slot;
    std::size_t user;
    std::size_t antenna;

    bool operator==(const ObservationRef&) const = default;
};

// `count` new symbols, one signal dimension each.
struct FreshSymbols {
    std::size_t count;
    bool operator==(const FreshSymbols&) const = default;
};

// Earlier symbols sent again, one signal dimension each.
struct ResendSymbols {
    std::vector<SymbolId> ids;
    bool operator==(const ResendSymbols&) const = default;
};

// One signal dimension carrying the sum of the referenced observations.
// The transmitter can only form it with the referenced users' channels,
// so each referenced (slot, user) must have P or D CSIT.
struct ResendObservations {
    std::vector<ObservationRef> terms;
    bool operator==(const ResendObservations&) const = default;
};

using Payload = std::variant<FreshSymbols, ResendSymbols, ResendObservations>;

struct Stream {
    std::size_t owner = 0;  // intended user; informational for resends
    Payload payload;
    std::vector<std::size_t> orthogonal_to;  // empty: generic precoding
    std::string note;

    std::size_t dimensions() const;
    bool operator==(const Stream&) const = default;
};

struct Slot {
    StateTuple csit;
    std::vector<Stream> streams;

    bool operator==(const Slot&) const = default;
};

struct Schedule {
    std::size_t users = 0;
    std::vector<std::size_t> rx_antennas;  // per user
    std::size_t tx_antennas = 0;
    std::vector<Slot> slots;

    std::size_t symbol_count() const;
    // Owner of every fresh symbol, indexed by SymbolId.
    std::vector<std::size_t> symbol_owners() const;
    // The slots' CSIT as a pattern (requires at least one slot).
    CsitPattern csit_pattern() const;

    bool operator==(const Schedule&) const = default;
};

struct Violation {
    std::size_t slot;  // 0-based
    std::string message;
};

std::vector<Violation> validate_schedule(const Schedule& schedule);

// Raised by simulate_decode on an invalid schedule.
class ScheduleError : public PreconditionError {
public:
    explicit ScheduleError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

inline constexpr long kChannelEntryRange = 1'000'000;  // numerators in [-range, range]
inline constexpr long kChannelDenominator = 1'000'000;

struct ChannelRealization {
    std::uint64_t seed = 0;
    // channels[slot][user] is N_user x M
    std::vector<std::vector<RationalMatrix>> channels;
    // mixing[slot][d] is an M-vector drawn for the d-th signal dimension of
    // the slot: a generic precoder directly, or the combination of the
    // null-space basis for a zero-forcing precoder.
    std::vector<std::vector<RationalVector>> mixing;
    std::size_t redraws = 0;  // rank-deficient channel draws that were rejected
};

ChannelRealization generate_channels(const Schedule& schedule, std::uint64_t seed);

struct UserLedger {
    std::size_t intended = 0;
    std::size_t decodable = 0;

    bool operator==(const UserLedger&) const = default;
};

struct DecodeLedger {
    std::size_t slots = 0;
    std::vector<UserLedger> users;

    Rational dof(std::size_t user) const;  // decodable / slots
    RationalVector dof() const;
    bool operator==(const DecodeLedger&) const = default;
};

// Counts, for every user, the intended symbols recoverable by linear
// processing of everything that user receives over the whole schedule:
// rank([A | B]) - rank(B), A = own symbols, B = all others.
DecodeLedger simulate_decode(const Schedule& schedule, const ChannelRealization& realization);

struct ZfLeak {
    std::size_t slot;
    std::size_t stream;
    std::size_t user;
};

// Zero-forced streams whose effective channel at a protected user is not
// exactly zero. Empty for a correct precoder construction.
std::vector<ZfLeak> zero_forcing_leaks(const Schedule& schedule, const ChannelRealization& realization);

// lambda_P = T_P / T of the slots use ZF to all K users (all-P CSIT, one
// symbol each); the remaining slots (no CSIT) serve `target` alone.
// `slots` = 0 picks the denominator of lambda_P.
Schedule build_zfbf_case_a_schedule(std::size_t users, const Rational& perfect, std::size_t target,
                                    std::size_t slots = 0);

// Two-user MAT with delayed CSIT: 3 slots per block, two transmit antennas.
Schedule build_mat2_schedule(std::size_t blocks = 1);

// Smallest block length for which every phase of the corner's scheme has an
// integral slot count.
std::size_t minimal_mimo_block(const MimoScenario& s, const std::string& label);

inline constexpr std::size_t kMaxMimoBlock = 10'000;

// Phase-by-phase schedule reaching the MIMO corner `label` ("A1", "B3", ...)
// over n slots. n must be a multiple of minimal_mimo_block().
Schedule build_mimo_schedule(const MimoScenario& s, const std::string& label, std::size_t n);

}  // namespace csitdof
