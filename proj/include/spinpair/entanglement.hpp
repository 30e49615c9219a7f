// The +/-1 correlation observable for joint spin measurements, analytic
// correlation functions for singlet and triplet states, CHSH evaluation and
// coplanar scanning, and a seeded Monte Carlo outcome sampler.
#pragma once

#include "spinpair/core.hpp"
#include "spinpair/matrix_rep.hpp"

#include <array>
#include <cstdint>

namespace spinpair {

// A correlation expectation value; always within [-1, 1] up to rounding.
struct CorrelationResult {
    double value;
};

// Outcome tallies from a sampling run, reproducible from (inputs, seed).
struct SampleCounts {
    std::uint64_t n;
    std::uint64_t seed;
    std::array<std::uint64_t, 4> counts{};  // canonical outcome order

    // (n_same - n_opposite) / n, the sampled estimate of the correlation.
    double empirical_correlation() const;
};

// r(++) = r(--) = +1, r(+-) = r(-+) = -1: the product of the two outcomes.
OutcomeValues correlation_values();

// Singlet correlation -[cos(t2 - t1) - 2 sin t1 sin t2 sin^2((p2 - p1)/2)],
// identically equal to -direction_dot(c1, c2).
CorrelationResult singlet_correlation(const Direction& c1, const Direction& c2);

// Triplet correlation for projection m along a; M = +1 and M = -1 share one
// closed form, M = 0 has its own.
CorrelationResult triplet_correlation(TripletProjection m, const Direction& a,
                                      const Direction& c1, const Direction& c2);

// E(a1,b1) + E(a1,b2) + E(a2,b1) - E(a2,b2) with E taken from the state's
// correlation function, detectors replacing (c1, c2).
double chsh(const CompoundState& state, const Direction& a1,
            const Direction& a2, const Direction& b1, const Direction& b2);

// Direction at planar angle alpha (measured from the z-axis) rotating in
// the half-plane phi = plane_phi; alpha in [0, 2pi), angles past pi fold
// into the opposite half-plane.
Direction planar_direction(double alpha, double plane_phi);

struct ChshScanResult {
    double best_value = 0.0;                 // signed CHSH at the extremum
    std::array<double, 4> best_angles{};     // planar angles a1, a2, b1, b2
    std::uint64_t evaluations = 0;
    double max_abs_seen = 0.0;               // max |chsh| over every setting tried
};

// Grid search for the extremal |chsh| over coplanar settings: a coarse 4-D
// grid of `coarse_points` per angle followed by `refine_rounds` rounds of
// shrinking local refinement. Deterministic.
ChshScanResult chsh_coplanar_scan(const CompoundState& state, double plane_phi,
                                  int coarse_points = 24,
                                  int refine_rounds = 40);

// Draw n outcomes by inverse CDF over the canonical outcome order, using
// mt19937_64 seeded with `seed` and uniforms built as (x >> 11) * 2^-53 so
// runs are bit-identical across platforms. Zero-probability outcomes are
// never drawn. Parallel batch convention: batch k uses seed + k.
SampleCounts sample_outcomes(const CompoundState& state, const Direction& c1,
                             const Direction& c2, std::uint64_t n,
                             std::uint64_t seed);

}  // namespace spinpair
