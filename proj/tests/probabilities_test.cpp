#include "doctest.h"

#include "spinpair/compounding.hpp"
#include "spinpair/probabilities.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace spinpair;
using testsupport::near;
using testsupport::random_direction;

namespace {

constexpr SpinHalfProjection kUp = SpinHalfProjection::Up;
constexpr SpinHalfProjection kDown = SpinHalfProjection::Down;

// Half-angle shorthand used by every reference formula below.
struct Angles {
    double th, ph;        // compound axis
    double th1, ph1;      // detector 1
    double th2, ph2;      // detector 2
    double c{}, s{};      // cos, sin of th/2
    double c1{}, s1{};    // cos, sin of th1/2
    double c2{}, s2{};    // cos, sin of th2/2

    Angles(const Direction& a, const Direction& d1, const Direction& d2)
        : th(a.theta()), ph(a.phi()),
          th1(d1.theta()), ph1(d1.phi()),
          th2(d2.theta()), ph2(d2.phi()) {
        c = std::cos(th / 2); s = std::sin(th / 2);
        c1 = std::cos(th1 / 2); s1 = std::sin(th1 / 2);
        c2 = std::cos(th2 / 2); s2 = std::sin(th2 / 2);
    }
};

double sq(double x) { return x * x; }

// Reference closed forms for the four singlet outcome probabilities.
double singlet_pp_reference(const Angles& g) {
    return 0.5 * (sq(std::sin((g.th2 - g.th1) / 2)) +
                  std::sin(g.th1) * std::sin(g.th2) * sq(std::sin((g.ph2 - g.ph1) / 2)));
}

double singlet_pm_reference(const Angles& g) {
    return 0.5 * (sq(std::cos((g.th2 - g.th1) / 2)) -
                  std::sin(g.th1) * std::sin(g.th2) * sq(std::sin((g.ph2 - g.ph1) / 2)));
}

// Reference closed forms for the aligned triplet state (M = +1). The mixed
// angular terms couple the detector azimuths to the compound axis azimuth.
double triplet_plus_reference(const Angles& g, int index) {
    const double s2t = sq(std::sin(g.th));
    const double cross = 0.25 * s2t * std::sin(g.th1) * std::sin(g.th2) *
                         std::cos(g.ph - g.ph1) * std::cos(g.ph - g.ph2);
    const double k1 = 0.5 * std::sin(g.th) * std::sin(g.th1) * std::cos(g.ph1 - g.ph);
    const double k2 = 0.5 * std::sin(g.th) * std::sin(g.th2) * std::cos(g.ph2 - g.ph);
    switch (index) {
        case 0:
            return sq(sq(g.c)) * sq(g.c1) * sq(g.c2) + sq(sq(g.s)) * sq(g.s1) * sq(g.s2) +
                   0.25 * s2t * (sq(g.c1) * sq(g.s2) + sq(g.s1) * sq(g.c2)) + cross +
                   k1 * (sq(g.c) * sq(g.c2) + sq(g.s) * sq(g.s2)) +
                   k2 * (sq(g.c) * sq(g.c1) + sq(g.s) * sq(g.s1));
        case 1:
            return sq(sq(g.c)) * sq(g.c1) * sq(g.s2) + sq(sq(g.s)) * sq(g.s1) * sq(g.c2) +
                   0.25 * s2t * (sq(g.c1) * sq(g.c2) + sq(g.s1) * sq(g.s2)) - cross +
                   k1 * (sq(g.c) * sq(g.s2) + sq(g.s) * sq(g.c2)) -
                   k2 * (sq(g.c) * sq(g.c1) + sq(g.s) * sq(g.s1));
        case 2:
            return sq(sq(g.c)) * sq(g.s1) * sq(g.c2) + sq(sq(g.s)) * sq(g.c1) * sq(g.s2) +
                   0.25 * s2t * (sq(g.c1) * sq(g.c2) + sq(g.s1) * sq(g.s2)) - cross -
                   k1 * (sq(g.c) * sq(g.c2) + sq(g.s) * sq(g.s2)) +
                   k2 * (sq(g.c) * sq(g.s1) + sq(g.s) * sq(g.c1));
        default:
            return sq(sq(g.c)) * sq(g.s1) * sq(g.s2) + sq(sq(g.s)) * sq(g.c1) * sq(g.c2) +
                   0.25 * s2t * (sq(g.s1) * sq(g.c2) + sq(g.c1) * sq(g.s2)) + cross -
                   k1 * (sq(g.c) * sq(g.s2) + sq(g.s) * sq(g.c2)) -
                   k2 * (sq(g.c) * sq(g.s1) + sq(g.s) * sq(g.c1));
    }
}

// Reference closed forms for the M = 0 triplet state; only two independent
// outcomes exist because (++) matches (--) and (+-) matches (-+).
double triplet_zero_pp_reference(const Angles& g) {
    const double s2t = sq(std::sin(g.th));
    const double c2t = sq(std::cos(g.th));
    return 0.5 * s2t * sq(g.s1) * sq(g.s2) + 0.5 * s2t * sq(g.c1) * sq(g.c2) +
           0.5 * c2t * sq(g.c1) * sq(g.s2) + 0.5 * c2t * sq(g.s1) * sq(g.c2) -
           0.5 * s2t * std::sin(g.th1) * std::sin(g.th2) *
               std::cos(g.ph - g.ph1) * std::cos(g.ph - g.ph2) +
           0.25 * std::sin(g.th1) * std::sin(g.th2) * std::cos(g.ph2 - g.ph1) -
           0.5 * std::sin(g.th) * std::cos(g.th) * std::sin(g.th1) * std::cos(g.th2) *
               std::cos(g.ph1 - g.ph) -
           0.5 * std::sin(g.th) * std::cos(g.th) * std::sin(g.th2) * std::cos(g.th1) *
               std::cos(g.ph2 - g.ph);
}

double triplet_zero_pm_reference(const Angles& g) {
    const double s2t = sq(std::sin(g.th));
    const double c2t = sq(std::cos(g.th));
    return 0.5 * s2t * sq(g.c1) * sq(g.s2) + 0.5 * s2t * sq(g.s1) * sq(g.c2) +
           0.5 * c2t * sq(g.c1) * sq(g.c2) + 0.5 * c2t * sq(g.s1) * sq(g.s2) +
           0.5 * s2t * std::sin(g.th1) * std::sin(g.th2) *
               std::cos(g.ph - g.ph1) * std::cos(g.ph - g.ph2) -
           0.25 * std::sin(g.th1) * std::sin(g.th2) * std::cos(g.ph2 - g.ph1) +
           0.5 * std::sin(g.th) * std::cos(g.th) * std::sin(g.th1) * std::cos(g.th2) *
               std::cos(g.ph1 - g.ph) +
           0.5 * std::sin(g.th) * std::cos(g.th) * std::sin(g.th2) * std::cos(g.th1) *
               std::cos(g.ph2 - g.ph);
}

// Reference closed forms for the anti-aligned triplet state (M = -1).
double triplet_minus_reference(const Angles& g, int index) {
    const double s2t = sq(std::sin(g.th));
    const double cross = 0.25 * s2t * std::sin(g.th1) * std::sin(g.th2) *
                         std::cos(g.ph - g.ph1) * std::cos(g.ph - g.ph2);
    const double k1 = 0.5 * std::sin(g.th) * std::sin(g.th1) * std::cos(g.ph1 - g.ph);
    const double k2 = 0.5 * std::sin(g.th) * std::sin(g.th2) * std::cos(g.ph2 - g.ph);
    switch (index) {
        case 0:
            return sq(sq(g.s)) * sq(g.c1) * sq(g.c2) + sq(sq(g.c)) * sq(g.s1) * sq(g.s2) +
                   0.25 * s2t * (sq(g.c1) * sq(g.s2) + sq(g.s1) * sq(g.c2)) + cross -
                   k1 * (sq(g.s) * sq(g.c2) + sq(g.c) * sq(g.s2)) -
                   k2 * (sq(g.s) * sq(g.c1) + sq(g.c) * sq(g.s1));
        case 1:
            return sq(sq(g.s)) * sq(g.c1) * sq(g.s2) + sq(sq(g.c)) * sq(g.s1) * sq(g.c2) +
                   0.25 * s2t * (sq(g.s1) * sq(g.s2) + sq(g.c1) * sq(g.c2)) - cross -
                   k1 * (sq(g.s) * sq(g.s2) + sq(g.c) * sq(g.c2)) +
                   k2 * (sq(g.s) * sq(g.c1) + sq(g.c) * sq(g.s1));
        case 2:
            return sq(sq(g.s)) * sq(g.s1) * sq(g.c2) + sq(sq(g.c)) * sq(g.c1) * sq(g.s2) +
                   0.25 * s2t * (sq(g.s1) * sq(g.s2) + sq(g.c1) * sq(g.c2)) - cross +
                   k1 * (sq(g.s) * sq(g.c2) + sq(g.c) * sq(g.s2)) -
                   k2 * (sq(g.s) * sq(g.s1) + sq(g.c) * sq(g.c1));
        default:
            return sq(sq(g.s)) * sq(g.s1) * sq(g.s2) + sq(sq(g.c)) * sq(g.c1) * sq(g.c2) +
                   0.25 * s2t * (sq(g.c1) * sq(g.s2) + sq(g.s1) * sq(g.c2)) + cross +
                   k1 * (sq(g.s) * sq(g.s2) + sq(g.c) * sq(g.c2)) +
                   k2 * (sq(g.s) * sq(g.s1) + sq(g.c) * sq(g.c1));
    }
}

}  // namespace

TEST_CASE("joint probabilities are normalized and within range") {
    std::mt19937_64 rng(31);
    const CompoundState states[4] = {
        CompoundState::singlet(Direction()),
        CompoundState::triplet(TripletProjection::Plus, Direction(0.4, 0.9)),
        CompoundState::triplet(TripletProjection::Zero, Direction(2.2, 5.1)),
        CompoundState::triplet(TripletProjection::Minus, Direction(1.3, 3.3)),
    };
    for (int i = 0; i < 400; ++i) {
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        for (const auto& state : states) {
            const ProbabilityQuadruple q = joint_probabilities(state, c1, c2);
            CHECK(near(q.sum(), 1.0));
            for (const auto& out : joint_outcomes()) {
                CHECK(q[out] >= 0.0);
                CHECK(q[out] <= 1.0);
            }
        }
    }
}

TEST_CASE("joint probabilities equal the squared amplitude magnitudes") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        for (auto m : {TripletProjection::Plus, TripletProjection::Zero,
                       TripletProjection::Minus}) {
            CompoundState state = CompoundState::triplet(m, a);
            const ProbabilityQuadruple q = joint_probabilities(state, c1, c2);
            for (const auto& out : joint_outcomes()) {
                CHECK(near(q[out], std::norm(compound_amplitude(state, out, c1, c2))));
            }
        }
    }
}

TEST_CASE("singlet probabilities match the angle-difference closed forms") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 300; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        const Angles g(a, c1, c2);
        const ProbabilityQuadruple q = joint_probabilities(CompoundState::singlet(a), c1, c2);
        CHECK(near(q.p[0], singlet_pp_reference(g)));
        CHECK(near(q.p[1], singlet_pm_reference(g)));
        CHECK(near(q.p[2], q.p[1]));
        CHECK(near(q.p[3], q.p[0]));
    }
}

TEST_CASE("singlet with coincident detectors never fires the same way twice") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        Direction c = random_direction(rng);
        const ProbabilityQuadruple q =
            joint_probabilities(CompoundState::singlet(random_direction(rng)), c, c);
        CHECK(near(q.p[0], 0.0));
        CHECK(near(q.p[1], 0.5));
        CHECK(near(q.p[2], 0.5));
        CHECK(near(q.p[3], 0.0));
    }
}

TEST_CASE("aligned triplet probabilities match the reference closed forms") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 300; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        const Angles g(a, c1, c2);
        const ProbabilityQuadruple q =
            joint_probabilities(CompoundState::triplet(TripletProjection::Plus, a), c1, c2);
        for (int k = 0; k < 4; ++k) {
            CHECK(near(q.p[static_cast<std::size_t>(k)], triplet_plus_reference(g, k)));
        }
    }
}

TEST_CASE("M=0 triplet probabilities match the reference closed forms") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 300; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        const Angles g(a, c1, c2);
        const ProbabilityQuadruple q =
            joint_probabilities(CompoundState::triplet(TripletProjection::Zero, a), c1, c2);
        CHECK(near(q.p[0], triplet_zero_pp_reference(g)));
        CHECK(near(q.p[1], triplet_zero_pm_reference(g)));
        CHECK(near(q.p[2], q.p[1]));
        CHECK(near(q.p[3], q.p[0]));
    }
}

TEST_CASE("anti-aligned triplet probabilities match the reference closed forms") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        const Angles g(a, c1, c2);
        const ProbabilityQuadruple q =
            joint_probabilities(CompoundState::triplet(TripletProjection::Minus, a), c1, c2);
        for (int k = 0; k < 4; ++k) {
            CHECK(near(q.p[static_cast<std::size_t>(k)], triplet_minus_reference(g, k)));
        }
    }
}

TEST_CASE("singlet marginals are one half regardless of the detectors") {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 100; ++i) {
        CompoundState state = CompoundState::singlet(random_direction(rng));
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        for (int sub : {1, 2}) {
            for (auto m : {kUp, kDown}) {
                CHECK(near(marginal_probability(state, sub, m, c1, c2), 0.5));
            }
        }
    }
}

TEST_CASE("M=0 triplet marginals are one half regardless of the detectors") {
    std::mt19937_64 rng(39);
    for (int i = 0; i < 100; ++i) {
        CompoundState state =
            CompoundState::triplet(TripletProjection::Zero, random_direction(rng));
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        for (int sub : {1, 2}) {
            for (auto m : {kUp, kDown}) {
                CHECK(near(marginal_probability(state, sub, m, c1, c2), 0.5));
            }
        }
    }
}

TEST_CASE("aligned triplet subsystem-1 marginal matches its closed form") {
    std::mt19937_64 rng(40);
    for (int i = 0; i < 200; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        CompoundState state = CompoundState::triplet(TripletProjection::Plus, a);
        const double expected = sq(std::cos(a.theta() / 2)) * sq(std::cos(c1.theta() / 2)) +
                                sq(std::sin(a.theta() / 2)) * sq(std::sin(c1.theta() / 2)) +
                                0.5 * std::sin(a.theta()) * std::sin(c1.theta()) *
                                    std::cos(c1.phi() - a.phi());
        CHECK(near(marginal_probability(state, 1, kUp, c1, c2), expected));
        CHECK(near(marginal_probability(state, 1, kDown, c1, c2), 1.0 - expected));
    }
}

TEST_CASE("anti-aligned triplet marginals match the summed joint forms") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        Direction a = random_direction(rng);
        Direction c1 = random_direction(rng);
        Direction c2 = random_direction(rng);
        const Angles g(a, c1, c2);
        CompoundState state = CompoundState::triplet(TripletProjection::Minus, a);
        const double up1 = triplet_minus_reference(g, 0) + triplet_minus_reference(g, 1);
        const double down2 = triplet_minus_reference(g, 1) + triplet_minus_reference(g, 3);
        CHECK(near(marginal_probability(state, 1, kUp, c1, c2), up1));
        CHECK(near(marginal_probability(state, 2, kDown, c1, c2), down2));

        // The subsystem-1 marginal also has a compact closed form.
        const double compact = sq(g.s) * sq(g.c1) + sq(g.c) * sq(g.s1) -
                               0.5 * std::sin(g.th) * std::sin(g.th1) *
                                   std::cos(g.ph1 - g.ph);
        CHECK(near(up1, compact));
    }
}

TEST_CASE("marginal_probability rejects unknown subsystem indices") {
    CompoundState state = CompoundState::singlet(Direction());
    CHECK_THROWS_AS(marginal_probability(state, 0, kUp, Direction(), Direction()),
                    std::invalid_argument);
    CHECK_THROWS_AS(marginal_probability(state, 3, kUp, Direction(), Direction()),
                    std::invalid_argument);
}

TEST_CASE("probability quadruple indexing follows the canonical outcome order") {
    ProbabilityQuadruple q;
    q.p = {0.1, 0.2, 0.3, 0.4};
    const auto& outs = joint_outcomes();
    CHECK(q[outs[0]] == 0.1);
    CHECK(q[outs[1]] == 0.2);
    CHECK(q[outs[2]] == 0.3);
    CHECK(q[outs[3]] == 0.4);
    CHECK(near(q.sum(), 1.0));
}
