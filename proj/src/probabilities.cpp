#include "spinpair/probabilities.hpp"

#include "spinpair/compounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinpair {

ProbabilityQuadruple joint_probabilities(const CompoundState& state, const Direction& c1,
                                         const Direction& c2) {
    ProbabilityQuadruple q;
    for (const auto& out : joint_outcomes()) {
        const Amplitude amp = compound_amplitude(state, out, c1, c2);
        q.p[static_cast<std::size_t>(outcome_index(out))] = std::norm(amp);
    }

    // Values meaningfully outside [0, 1] or a broken total signal a bug in
    // the amplitude formulas, not numerical noise; refuse to mask it.
    if (std::abs(q.sum() - 1.0) > 1e-12) {
        throw std::runtime_error("joint_probabilities: outcome probabilities sum to " +
                                 std::to_string(q.sum()) + ", expected 1");
    }
    for (double value : q.p) {
        if (value < -1e-9 || value > 1.0 + 1e-9) {
            throw std::runtime_error("joint_probabilities: probability " +
                                     std::to_string(value) + " outside [0, 1]");
        }
    }
    for (auto& value : q.p) value = std::clamp(value, 0.0, 1.0);
    return q;
}

double marginal_probability(const CompoundState& state, int subsystem, SpinHalfProjection m,
                            const Direction& c1, const Direction& c2) {
    if (subsystem != 1 && subsystem != 2) {
        throw std::invalid_argument("marginal_probability: subsystem must be 1 or 2, got " +
                                    std::to_string(subsystem));
    }
    const ProbabilityQuadruple q = joint_probabilities(state, c1, c2);
    double total = 0.0;
    for (const auto& out : joint_outcomes()) {
        const SpinHalfProjection mine = (subsystem == 1) ? out.m1 : out.m2;
        if (mine == m) total += q[out];
    }
    return total;
}

}  // namespace spinpair
