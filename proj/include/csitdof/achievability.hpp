#pragma once

#include "csitdof/csit_model.hpp"
#include "csitdof/polytope.hpp"
#include "csitdof/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace csitdof {

struct CornerPoint {
    RationalVector coords;
    std::string label;                          // "caseA:1", "caseB:{1,3}", "mimo:B3"
    std::map<std::string, std::string> params;  // scheme parameters, rendered
};

// Two-user MIMO setting with P/N-only CSIT and N1 >= N2 receive antennas.
class MimoScenario {
public:
    MimoScenario(std::size_t n1, std::size_t n2, JointCsitDistribution joint);

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    const JointCsitDistribution& joint() const { return joint_; }

    const Rational& pp() const { return pp_; }
    const Rational& pn() const { return pn_; }
    const Rational& np() const { return np_; }
    const Rational& nn() const { return nn_; }
    Rational perfect1() const { return pp_ + pn_; }  // lambda_P^1
    Rational perfect2() const { return pp_ + np_; }  // lambda_P^2

    // N1 lambda_PN <= N2 lambda_NP: the inner bound meets the outer bound.
    bool interference_balanced() const;

private:
    std::size_t n1_;
    std::size_t n2_;
    JointCsitDistribution joint_;
    Rational pp_, pn_, np_, nn_;
};

// Minimum fraction of delayed CSIT needed to run MAT phases j..K:
//   1 - (K - j + 1) / (K * sum_{i=j}^{K} 1/i).
Rational lambda_d_min(unsigned users, unsigned order);

// Same quantity by counting phase repetitions, slots and feedbacks of the
// K-user MAT scheme directly.
Rational lambda_d_min_oracle(unsigned users, unsigned order);

// Threshold on lambda_N under which ZF + MAT reaches the outer bound:
// lambda_D / sum_{j=2}^{K} 1/j.
Rational case_b_none_threshold(std::size_t users, const Rational& delayed);

// Corners (1, lP, ..., lP) and permutations, for lambda_D = 0. Duplicates
// (lambda_P = 1) are merged.
std::vector<CornerPoint> case_a_corners(std::size_t users, const Rational& perfect);

// One corner per nonempty subset S: value
//   (1 + lP sum_{i=2}^{|S|} 1/i) / (sum_{i=1}^{|S|} 1/i)
// on S and lP elsewhere.
std::vector<CornerPoint> case_b_corners(std::size_t users, const Rational& perfect, const Rational& delayed,
                                        const Rational& none);

std::vector<CornerPoint> mimo_corners(const MimoScenario& s);

// Achievable region of the MIMO schemes plus the caps d_k <= N_k.
HPolytope mimo_inner_bound(const MimoScenario& s);

HPolytope mimo_outer_bound(const MimoScenario& s);

// Slot-level accounting for the ZF + MAT corner on subset S: checks the
// delayed-CSIT budget lambda_D >= lambda_D^min(|S|, 1) (1 - lambda_P) and
// returns the per-user DoF.
RationalVector case_b_accounting(std::size_t users, const std::vector<std::size_t>& subset, const Rational& perfect,
                                 const Rational& delayed, const Rational& none);
// Subset {0, ..., j-1}.
RationalVector case_b_accounting(std::size_t users, std::size_t order, const Rational& perfect,
                                 const Rational& delayed, const Rational& none);

struct VertexVerdict {
    RationalVector vertex;
    bool achievable;
};

struct TightnessReport {
    std::vector<VertexVerdict> vertices;
    bool tight() const;
};

TightnessReport tightness_report(const HPolytope& outer, const std::vector<CornerPoint>& corners);

}  // namespace csitdof
