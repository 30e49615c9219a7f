#include "spinpair/entanglement.hpp"

#include "spinpair/probabilities.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace spinpair {

namespace {

// Correlation of the state measured along (c1, c2), dispatched on total spin.
double state_correlation(const CompoundState& state, const Direction& c1,
                         const Direction& c2) {
    if (state.s() == TotalSpin::Singlet) {
        return singlet_correlation(c1, c2).value;
    }
    return triplet_correlation(state.m(), state.axis(), c1, c2).value;
}

double wrap_angle(double alpha) {
    double a = std::fmod(alpha, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

}  // namespace

double SampleCounts::empirical_correlation() const {
    const double same = static_cast<double>(counts[0] + counts[3]);
    const double opposite = static_cast<double>(counts[1] + counts[2]);
    return (same - opposite) / static_cast<double>(n);
}

OutcomeValues correlation_values() {
    OutcomeValues r;
    r.r = {1.0, -1.0, -1.0, 1.0};
    return r;
}

CorrelationResult singlet_correlation(const Direction& c1, const Direction& c2) {
    const double half_dphi = 0.5 * (c2.phi() - c1.phi());
    const double s = std::sin(half_dphi);
    return {-(std::cos(c2.theta() - c1.theta()) -
              2.0 * std::sin(c1.theta()) * std::sin(c2.theta()) * s * s)};
}

CorrelationResult triplet_correlation(TripletProjection m, const Direction& a,
                                      const Direction& c1, const Direction& c2) {
    const double th = a.theta(), ph = a.phi();
    const double th1 = c1.theta(), ph1 = c1.phi();
    const double th2 = c2.theta(), ph2 = c2.phi();

    if (m == TripletProjection::Zero) {
        return {-std::cos(2.0 * th) * std::cos(th1) * std::cos(th2) +
                std::sin(th1) * std::sin(th2) * std::cos(ph2 - ph1) -
                2.0 * std::sin(th) * std::sin(th) * std::sin(th1) * std::sin(th2) *
                    std::cos(ph - ph2) * std::cos(ph - ph1) -
                std::sin(2.0 * th) * std::sin(th1) * std::cos(th2) * std::cos(ph - ph1) -
                std::sin(2.0 * th) * std::sin(th2) * std::cos(th1) * std::cos(ph - ph2)};
    }

    // M = +1 and M = -1 share one expression (the product of the projections
    // of both detectors onto the compound axis).
    return {std::cos(th) * std::cos(th) * std::cos(th1) * std::cos(th2) +
            std::sin(th) * std::sin(th) * std::sin(th1) * std::sin(th2) *
                std::cos(ph - ph2) * std::cos(ph - ph1) +
            std::sin(th) * std::sin(th1) * std::cos(th) * std::cos(th2) * std::cos(ph - ph1) +
            std::sin(th) * std::sin(th2) * std::cos(th) * std::cos(th1) * std::cos(ph - ph2)};
}

double chsh(const CompoundState& state, const Direction& a1, const Direction& a2,
            const Direction& b1, const Direction& b2) {
    return state_correlation(state, a1, b1) + state_correlation(state, a1, b2) +
           state_correlation(state, a2, b1) - state_correlation(state, a2, b2);
}

Direction planar_direction(double alpha, double plane_phi) {
    const double a = wrap_angle(alpha);
    if (a <= kPi) return Direction(a, plane_phi);
    return Direction(kTwoPi - a, plane_phi + kPi);
}

ChshScanResult chsh_coplanar_scan(const CompoundState& state, double plane_phi,
                                  int coarse_points, int refine_rounds) {
    if (coarse_points < 2) {
        throw std::invalid_argument("chsh_coplanar_scan: need at least 2 grid points per angle");
    }
    ChshScanResult result;

    const auto evaluate = [&](const std::array<double, 4>& angles) {
        const double value = chsh(state, planar_direction(angles[0], plane_phi),
                                  planar_direction(angles[1], plane_phi),
                                  planar_direction(angles[2], plane_phi),
                                  planar_direction(angles[3], plane_phi));
        ++result.evaluations;
        const double mag = std::abs(value);
        if (mag > result.max_abs_seen) result.max_abs_seen = mag;
        return value;
    };

    const double coarse_step = kTwoPi / coarse_points;
    std::array<double, 4> best{};
    double best_abs = -1.0;
    for (int i1 = 0; i1 < coarse_points; ++i1) {
        for (int i2 = 0; i2 < coarse_points; ++i2) {
            for (int j1 = 0; j1 < coarse_points; ++j1) {
                for (int j2 = 0; j2 < coarse_points; ++j2) {
                    const std::array<double, 4> angles = {i1 * coarse_step, i2 * coarse_step,
                                                          j1 * coarse_step, j2 * coarse_step};
                    const double value = evaluate(angles);
                    if (std::abs(value) > best_abs) {
                        best_abs = std::abs(value);
                        best = angles;
                        result.best_value = value;
                    }
                }
            }
        }
    }

    // Pattern search around the coarse winner: at each scale try all moves of
    // +-step per coordinate (including diagonals), recentre while improving,
    // then halve the step. Deterministic; the move guard only bounds runaway
    // drift and is never reached on the smooth correlation surfaces here.
    double step = coarse_step;
    for (int round = 0; round < refine_rounds; ++round) {
        step *= 0.5;
        for (int move = 0; move < 64; ++move) {
            bool improved = false;
            std::array<double, 4> centre = best;
            for (int code = 0; code < 81; ++code) {
                if (code == 40) continue;  // the all-zero offset is the centre itself
                std::array<double, 4> candidate = centre;
                int rest = code;
                for (std::size_t k = 0; k < 4; ++k) {
                    candidate[k] += ((rest % 3) - 1) * step;
                    rest /= 3;
                }
                const double value = evaluate(candidate);
                if (std::abs(value) > best_abs) {
                    best_abs = std::abs(value);
                    best = candidate;
                    result.best_value = value;
                    improved = true;
                }
            }
            if (!improved) break;
        }
    }

    for (std::size_t k = 0; k < 4; ++k) result.best_angles[k] = wrap_angle(best[k]);
    return result;
}

SampleCounts sample_outcomes(const CompoundState& state, const Direction& c1,
                             const Direction& c2, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("sample_outcomes: need at least one draw, got n = 0");
    }
    const ProbabilityQuadruple q = joint_probabilities(state, c1, c2);

    std::array<double, 4> cdf{};
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += q.p[k];
        cdf[k] = acc;
        if (q.p[k] > 0.0) last_nonzero = k;
    }

    SampleCounts counts;
    counts.n = n;
    counts.seed = seed;

    std::mt19937_64 rng(seed);
    for (std::uint64_t draw = 0; draw < n; ++draw) {
        // 53-bit uniform built directly from the engine word so the stream
        // is identical on every platform (uniform_real_distribution is not).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::size_t pick = last_nonzero;
        for (std::size_t k = 0; k < 4; ++k) {
            if (q.p[k] > 0.0 && u < cdf[k]) {
                pick = k;
                break;
            }
        }
        ++counts.counts[pick];
    }
    return counts;
}

}  // namespace spinpair
