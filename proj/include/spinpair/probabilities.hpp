// Joint and marginal measurement probabilities as squared moduli of the
// closed-form compound amplitudes.
#pragma once

#include "spinpair/core.hpp"

#include <array>

namespace spinpair {

// The four joint outcome probabilities in canonical order.
struct ProbabilityQuadruple {
    std::array<double, 4> p{};

    double operator[](JointOutcome out) const { return p[outcome_index(out)]; }
    double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

// |Psi|^2 for each outcome, from the closed-form amplitudes. Values are
// clamped into [0, 1] only after the quadruple passes the normalization
// check; anything outside [-1e-9, 1 + 1e-9] throws std::runtime_error
// instead of being clamped.
ProbabilityQuadruple joint_probabilities(const CompoundState& state,
                                         const Direction& c1,
                                         const Direction& c2);

// Probability of finding projection m on one subsystem irrespective of the
// other: the sum of the two consistent joint probabilities. subsystem is
// 1 or 2; anything else throws std::invalid_argument.
double marginal_probability(const CompoundState& state, int subsystem,
                            SpinHalfProjection m, const Direction& c1,
                            const Direction& c2);

}  // namespace spinpair
