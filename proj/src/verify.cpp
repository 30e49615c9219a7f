#include "spinpair/verify.hpp"

#include "spinpair/compounding.hpp"
#include "spinpair/core.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/matrix_rep.hpp"
#include "spinpair/probabilities.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <utility>

namespace spinpair {

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Direction random_direction(std::mt19937_64& rng) {
    const double theta = std::acos(1.0 - 2.0 * uniform01(rng));
    const double phi = kTwoPi * uniform01(rng);
    return Direction(theta, phi);
}

// Accumulates checks for one suite: counts them, keeps the worst deviation,
// and keeps the first failure message as the detail.
class Suite {
  public:
    explicit Suite(std::string name) {
        result_.name = std::move(name);
        result_.passed = true;
    }

    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    void check_near(double got, double want, double tol, const std::string& what) {
        const double err = std::abs(got - want);
        if (err > result_.max_error) result_.max_error = err;
        if (err > tol) {
            std::ostringstream msg;
            msg.precision(3);
            msg << std::scientific << what << " deviates by " << err;
            check(false, msg.str());
        } else {
            check(true, "");
        }
    }

    void check_near(Amplitude got, Amplitude want, double tol, const std::string& what) {
        check_near(std::abs(got - want), 0.0, tol, what);
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

std::array<CompoundState, 4> all_states(const Direction& axis) {
    return {CompoundState::singlet(axis),
            CompoundState::triplet(TripletProjection::Plus, axis),
            CompoundState::triplet(TripletProjection::Zero, axis),
            CompoundState::triplet(TripletProjection::Minus, axis)};
}

SuiteResult suite_singlet_anticorrelation(std::uint64_t seed) {
    Suite suite("singlet anticorrelation at coincident detectors");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        const Direction c = random_direction(rng);
        const auto q = joint_probabilities(CompoundState::singlet(random_direction(rng)), c, c);
        suite.check_near(q.p[0], 0.0, 1e-12, "P(++) at coincident detectors");
        suite.check_near(q.p[1], 0.5, 1e-12, "P(+-) at coincident detectors");
        suite.check_near(q.p[2], 0.5, 1e-12, "P(-+) at coincident detectors");
        suite.check_near(q.p[3], 0.0, 1e-12, "P(--) at coincident detectors");
    }
    return suite.take();
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed) {
    Suite suite("closed forms vs expansion chain");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
        const Direction a = random_direction(rng);
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        for (const auto& state : all_states(a)) {
            for (const auto& out : joint_outcomes()) {
                suite.check_near(compound_amplitude(state, out, c1, c2),
                                 compound_amplitude_oracle(state, out, c1, c2), 1e-12,
                                 "closed form vs oracle");
            }
            suite.check_near(joint_probabilities(state, c1, c2).sum(), 1.0, 1e-12,
                             "probability normalization");
        }
    }
    return suite.take();
}

// Worst deviation of |Psi| from the standard CG magnitudes when the compound
// axis and both detectors coincide, over the z-axis and 50 tilted axes.
double coupling_reduction_error(PhaseConvention conv, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 51; ++i) {
        const Direction a = (i == 0) ? z_axis() : random_direction(rng);
        for (const auto& state : all_states(a)) {
            for (const auto& out : joint_outcomes()) {
                const double got = std::abs(compound_amplitude_oracle(state, out, a, a, conv));
                const double want =
                    std::abs(clebsch_gordan(state.s(), state.m(), out.m1, out.m2));
                worst = std::max(worst, std::abs(got - want));
            }
        }
    }
    return worst;
}

SuiteResult suite_phase_convention(std::uint64_t seed) {
    Suite suite("phase convention discrimination");
    std::mt19937_64 rng(seed);
    const double accepted = coupling_reduction_error(PhaseConvention::Accepted, rng);
    const double rejected = coupling_reduction_error(PhaseConvention::Rejected, rng);
    suite.check_near(accepted, 0.0, 1e-12, "accepted convention CG reduction");
    std::ostringstream msg;
    msg.precision(3);
    msg << std::scientific << "rejected convention only deviates by " << rejected;
    suite.check(rejected > 1e-6, msg.str());
    return suite.take();
}

SuiteResult suite_generalized_cg(std::uint64_t seed) {
    Suite suite("generalized CG magnitudes are axis independent");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        const Direction a = random_direction(rng);
        for (const auto& state : all_states(a)) {
            for (const auto& out : joint_outcomes()) {
                suite.check_near(
                    std::abs(generalized_cg(state.s(), state.m(), out.m1, out.m2, a)),
                    std::abs(clebsch_gordan(state.s(), state.m(), out.m1, out.m2)), 1e-12,
                    "generalized CG magnitude");
            }
        }
    }
    return suite.take();
}

SuiteResult suite_singlet_axis_independence(std::uint64_t seed) {
    Suite suite("singlet amplitudes ignore the state axis");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        const CompoundState reference = CompoundState::singlet(z_axis());
        const CompoundState tilted = CompoundState::singlet(random_direction(rng));
        for (const auto& out : joint_outcomes()) {
            suite.check_near(compound_amplitude_oracle(tilted, out, c1, c2),
                             compound_amplitude_oracle(reference, out, c1, c2), 1e-12,
                             "singlet axis independence");
        }
    }
    return suite.take();
}

SuiteResult suite_representation_agreement(std::uint64_t seed) {
    Suite suite("matrix representations agree with probability weighting");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 300; ++i) {
        const Direction a = random_direction(rng);
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        OutcomeValues r;
        for (auto& v : r.r) v = 4.0 * uniform01(rng) - 2.0;

        for (const auto& state : all_states(a)) {
            const auto q = joint_probabilities(state, c1, c2);
            double weighted = 0.0;
            for (const auto& out : joint_outcomes()) weighted += q[out] * r[out];

            const StateVector v4 = (state.s() == TotalSpin::Singlet)
                                       ? singlet_state_vector()
                                       : triplet_state_vector_4d(state.m(), a);
            suite.check_near(expectation(v4, observable_matrix_4d(r, c1, c2)), weighted, 1e-12,
                             "4-dim expectation");
            if (state.s() == TotalSpin::Triplet) {
                suite.check_near(expectation(triplet_state_vector_3d(state.m(), a),
                                             observable_matrix_3d(r, c1, c2)),
                                 weighted, 1e-12, "3-dim expectation");
            }
            const auto [sv, sm] = scalar_representation(state, r, c1, c2);
            suite.check_near(expectation(sv, sm), weighted, 1e-12, "scalar expectation");
        }
    }
    return suite.take();
}

SuiteResult suite_correlation_identities(std::uint64_t seed) {
    Suite suite("correlation identities and limits");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
        const Direction a = random_direction(rng);
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        const double singlet = singlet_correlation(c1, c2).value;
        suite.check_near(singlet, -direction_dot(c1, c2), 1e-12,
                         "singlet correlation vs scalar product");
        suite.check_near(singlet, singlet_correlation(c2, c1).value, 1e-12,
                         "singlet correlation symmetry");

        const double plus = triplet_correlation(TripletProjection::Plus, a, c1, c2).value;
        const double zero = triplet_correlation(TripletProjection::Zero, a, c1, c2).value;
        suite.check_near(plus, direction_dot(a, c1) * direction_dot(a, c2), 1e-12,
                         "aligned triplet factorization");
        suite.check_near(triplet_correlation(TripletProjection::Minus, a, c1, c2).value, plus,
                         1e-12, "M=+1 equals M=-1");
        suite.check_near(zero,
                         direction_dot(c1, c2) -
                             2.0 * direction_dot(a, c1) * direction_dot(a, c2),
                         1e-12, "M=0 complement identity");
    }
    for (int i = 0; i < 100; ++i) {
        const double th1 = kPi * (i + 0.5) / 100.0;
        const Direction c1(th1, 0.4);
        suite.check_near(triplet_correlation(TripletProjection::Plus, z_axis(), c1, c1).value,
                         std::cos(th1) * std::cos(th1), 1e-12,
                         "M=+1 coincident z-axis limit");
        suite.check_near(triplet_correlation(TripletProjection::Zero, z_axis(), c1, c1).value,
                         -std::cos(2.0 * th1), 1e-12, "M=0 coincident z-axis limit");
    }
    return suite.take();
}

SuiteResult suite_marginals(std::uint64_t seed) {
    Suite suite("marginal probabilities");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        const Direction a = random_direction(rng);
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        for (int subsystem : {1, 2}) {
            for (auto m : {SpinHalfProjection::Up, SpinHalfProjection::Down}) {
                suite.check_near(marginal_probability(CompoundState::singlet(a), subsystem, m,
                                                      c1, c2),
                                 0.5, 1e-12, "singlet marginal");
                suite.check_near(
                    marginal_probability(CompoundState::triplet(TripletProjection::Zero, a),
                                         subsystem, m, c1, c2),
                    0.5, 1e-12, "M=0 triplet marginal");
            }
        }
        // The M=+1 subsystem-1 marginal has a compact half-angle closed form
        // in the axis and first-detector angles alone.
        const double hc = std::cos(a.theta() / 2), hs = std::sin(a.theta() / 2);
        const double dc = std::cos(c1.theta() / 2), ds = std::sin(c1.theta() / 2);
        const double expected = hc * hc * dc * dc + hs * hs * ds * ds +
                                0.5 * std::sin(a.theta()) * std::sin(c1.theta()) *
                                    std::cos(c1.phi() - a.phi());
        suite.check_near(
            marginal_probability(CompoundState::triplet(TripletProjection::Plus, a), 1,
                                 SpinHalfProjection::Up, c1, c2),
            expected, 1e-12, "M=+1 subsystem-1 marginal");
    }
    return suite.take();
}

SuiteResult suite_chsh(std::uint64_t) {
    Suite suite("chsh extremum and quantum bound");
    const double plane = kPi / 2;
    const CompoundState singlet = CompoundState::singlet(z_axis());
    suite.check_near(chsh(singlet, planar_direction(kPi / 2, plane),
                          planar_direction(0.0, plane), planar_direction(kPi / 4, plane),
                          planar_direction(3 * kPi / 4, plane)),
                     -kTsirelson, 1e-12, "chsh at the standard settings");

    const ChshScanResult res = chsh_coplanar_scan(singlet, plane, 16, 40);
    suite.check_near(std::abs(res.best_value), kTsirelson, 1e-6, "scan extremum");
    std::ostringstream msg;
    msg.precision(17);
    msg << "scan saw |chsh| = " << res.max_abs_seen << " above the quantum bound";
    suite.check(res.max_abs_seen <= kTsirelson + 1e-9, msg.str());
    return suite.take();
}

SuiteResult suite_sampler(std::uint64_t seed) {
    Suite suite("sampler reproducibility and statistics");
    std::mt19937_64 rng(seed);
    const std::uint64_t n = 50000;
    for (int trial = 0; trial < 3; ++trial) {
        const Direction a = random_direction(rng);
        const Direction c1 = random_direction(rng);
        const Direction c2 = random_direction(rng);
        const CompoundState state = (trial % 2 == 0)
                                        ? CompoundState::singlet(a)
                                        : CompoundState::triplet(TripletProjection::Zero, a);
        const std::uint64_t draw_seed = seed + 17 * static_cast<std::uint64_t>(trial + 1);
        const SampleCounts first = sample_outcomes(state, c1, c2, n, draw_seed);
        const SampleCounts second = sample_outcomes(state, c1, c2, n, draw_seed);
        suite.check(first.counts == second.counts, "rerun with the same seed differs");

        const auto q = joint_probabilities(state, c1, c2);
        for (std::size_t k = 0; k < 4; ++k) {
            const double p = q.p[k];
            const double freq = static_cast<double>(first.counts[k]) / static_cast<double>(n);
            const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
            suite.check_near(freq, p, 5.0 * sigma + 1e-12, "sampled frequency band");
        }
        double expected = 0.0;
        for (const auto& out : joint_outcomes()) expected += correlation_values()[out] * q[out];
        const double sigma_corr =
            std::sqrt((1.0 - expected * expected) / static_cast<double>(n));
        suite.check_near(first.empirical_correlation(), expected, 5.0 * sigma_corr + 1e-12,
                         "sampled correlation band");
    }
    return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_verification(std::uint64_t seed) {
    std::vector<SuiteResult> results;
    results.push_back(suite_singlet_anticorrelation(seed + 1));
    results.push_back(suite_oracle_equivalence(seed + 2));
    results.push_back(suite_phase_convention(seed + 3));
    results.push_back(suite_generalized_cg(seed + 4));
    results.push_back(suite_singlet_axis_independence(seed + 5));
    results.push_back(suite_representation_agreement(seed + 6));
    results.push_back(suite_correlation_identities(seed + 7));
    results.push_back(suite_marginals(seed + 8));
    results.push_back(suite_chsh(seed + 9));
    results.push_back(suite_sampler(seed + 10));
    return results;
}

}  // namespace spinpair
