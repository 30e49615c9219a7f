#include "spinpair/compounding.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace spinpair {

namespace {

constexpr SpinHalfProjection kUp = SpinHalfProjection::Up;
constexpr SpinHalfProjection kDown = SpinHalfProjection::Down;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_valid_projection(TotalSpin s, TripletProjection m, const char* who) {
    if (s == TotalSpin::Singlet && m != TripletProjection::Zero) {
        throw std::invalid_argument(std::string(who) +
                                    ": the singlet only admits total projection M = 0");
    }
}

}  // namespace

const std::array<CgEntry, 6>& cg_table() {
    static const std::array<CgEntry, 6> table = {{
        {TotalSpin::Singlet, TripletProjection::Zero, kUp, kDown, kInvSqrt2},
        {TotalSpin::Singlet, TripletProjection::Zero, kDown, kUp, -kInvSqrt2},
        {TotalSpin::Triplet, TripletProjection::Plus, kUp, kUp, 1.0},
        {TotalSpin::Triplet, TripletProjection::Zero, kUp, kDown, kInvSqrt2},
        {TotalSpin::Triplet, TripletProjection::Zero, kDown, kUp, kInvSqrt2},
        {TotalSpin::Triplet, TripletProjection::Minus, kDown, kDown, 1.0},
    }};
    return table;
}

double clebsch_gordan(TotalSpin s, TripletProjection m, SpinHalfProjection m1,
                      SpinHalfProjection m2) {
    require_valid_projection(s, m, "clebsch_gordan");
    for (const auto& entry : cg_table()) {
        if (entry.s == s && entry.m == m && entry.m1 == m1 && entry.m2 == m2) {
            return entry.value;
        }
    }
    return 0.0;
}

Amplitude joint_uncoupled_amplitude(JointOutcome alpha, JointOutcome out,
                                    const Direction& c1, const Direction& c2,
                                    PhaseConvention conv) {
    const Direction k = z_axis();
    return spin_half_amplitude(conv, alpha.m1, k, out.m1, c1) *
           spin_half_amplitude(conv, alpha.m2, k, out.m2, c2);
}

Amplitude xi_amplitude(TripletProjection m_j, TotalSpin s, JointOutcome out,
                       const Direction& c1, const Direction& c2, PhaseConvention conv) {
    require_valid_projection(s, m_j, "xi_amplitude");
    Amplitude total{0.0, 0.0};
    for (const auto& alpha : joint_outcomes()) {
        const double weight = clebsch_gordan(s, m_j, alpha.m1, alpha.m2);
        if (weight == 0.0) continue;
        total += weight * joint_uncoupled_amplitude(alpha, out, c1, c2, conv);
    }
    return total;
}

Amplitude compound_amplitude_oracle(const CompoundState& state, JointOutcome out,
                                    const Direction& c1, const Direction& c2,
                                    PhaseConvention conv) {
    if (state.s() == TotalSpin::Singlet) {
        // The compound rotation amplitude for spin 0 is a pure phase, fixed
        // to 1, so the chain collapses to the first expansion stage.
        return xi_amplitude(TripletProjection::Zero, TotalSpin::Singlet, out, c1, c2, conv);
    }
    Amplitude total{0.0, 0.0};
    for (auto m_j : {TripletProjection::Plus, TripletProjection::Zero,
                     TripletProjection::Minus}) {
        total += spin_one_amplitude(state.m(), state.axis(), m_j) *
                 xi_amplitude(m_j, TotalSpin::Triplet, out, c1, c2, conv);
    }
    return total;
}

Amplitude singlet_amplitude(JointOutcome out, const Direction& c1, const Direction& c2) {
    const double h1 = std::cos(c1.theta() / 2);
    const double g1 = std::sin(c1.theta() / 2);
    const double h2 = std::cos(c2.theta() / 2);
    const double g2 = std::sin(c2.theta() / 2);
    const Amplitude e1 = std::polar(1.0, -c1.phi());
    const Amplitude e2 = std::polar(1.0, -c2.phi());

    switch (outcome_index(out)) {
        case 0: return kInvSqrt2 * (h1 * g2 * e2 - g1 * h2 * e1);
        case 1: return kInvSqrt2 * (h1 * h2 * e2 + g1 * g2 * e1);
        case 2: return -kInvSqrt2 * (g1 * g2 * e2 + h1 * h2 * e1);
        default: return kInvSqrt2 * (h1 * g2 * e1 - g1 * h2 * e2);
    }
}

Amplitude triplet_amplitude(TripletProjection m, const Direction& a, JointOutcome out,
                            const Direction& c1, const Direction& c2) {
    const double h1 = std::cos(c1.theta() / 2);
    const double g1 = std::sin(c1.theta() / 2);
    const double h2 = std::cos(c2.theta() / 2);
    const double g2 = std::sin(c2.theta() / 2);
    const Amplitude e1 = std::polar(1.0, -c1.phi());
    const Amplitude e2 = std::polar(1.0, -c2.phi());

    const double th = a.theta();
    const double ph = a.phi();
    const double ch = std::cos(th / 2);
    const double sh = std::sin(th / 2);

    if (m == TripletProjection::Plus) {
        const Amplitude big_a = ch * ch * std::polar(1.0, -ph);
        const Amplitude big_b = sh * sh * std::polar(1.0, ph - c1.phi() - c2.phi());
        const double t = 0.5 * std::sin(th);
        switch (outcome_index(out)) {
            case 0:
                return big_a * (h1 * h2) + big_b * (g1 * g2) +
                       t * (h1 * g2 * e2 + g1 * h2 * e1);
            case 1:
                return -big_a * (h1 * g2) + big_b * (g1 * h2) +
                       t * (h1 * h2 * e2 - g1 * g2 * e1);
            case 2:
                return -big_a * (g1 * h2) + big_b * (h1 * g2) +
                       t * (h1 * h2 * e1 - g1 * g2 * e2);
            default:
                return big_a * (g1 * g2) + big_b * (h1 * h2) -
                       t * (h1 * g2 * e1 + g1 * h2 * e2);
        }
    }

    if (m == TripletProjection::Zero) {
        const double s = kInvSqrt2 * std::sin(th);
        const double c = kInvSqrt2 * std::cos(th);
        const Amplitude tilt = std::polar(1.0, ph - c1.phi() - c2.phi());
        const Amplitude back = std::polar(1.0, -ph);
        switch (outcome_index(out)) {
            case 0:
                return s * (g1 * g2 * tilt - h1 * h2 * back) +
                       c * (h1 * g2 * e2 + g1 * h2 * e1);
            case 1:
                return s * (g1 * h2 * tilt + h1 * g2 * back) +
                       c * (h1 * h2 * e2 - g1 * g2 * e1);
            case 2:
                return s * (h1 * g2 * tilt + g1 * h2 * back) +
                       c * (h1 * h2 * e1 - g1 * g2 * e2);
            default:
                return s * (h1 * h2 * tilt - g1 * g2 * back) -
                       c * (g1 * h2 * e2 + h1 * g2 * e1);
        }
    }

    const Amplitude big_a = sh * sh * std::polar(1.0, -ph);
    const Amplitude big_b = ch * ch * std::polar(1.0, ph - c1.phi() - c2.phi());
    const double t = 0.5 * std::sin(th);
    switch (outcome_index(out)) {
        case 0:
            return -big_a * (h1 * h2) - big_b * (g1 * g2) +
                   t * (g1 * h2 * e1 + h1 * g2 * e2);
        case 1:
            return big_a * (h1 * g2) - big_b * (g1 * h2) +
                   t * (h1 * h2 * e2 - g1 * g2 * e1);
        case 2:
            return big_a * (g1 * h2) - big_b * (h1 * g2) +
                   t * (h1 * h2 * e1 - g1 * g2 * e2);
        default:
            return -big_a * (g1 * g2) - big_b * (h1 * h2) -
                   t * (h1 * g2 * e1 + g1 * h2 * e2);
    }
}

Amplitude compound_amplitude(const CompoundState& state, JointOutcome out,
                             const Direction& c1, const Direction& c2) {
    if (state.s() == TotalSpin::Singlet) {
        return singlet_amplitude(out, c1, c2);
    }
    return triplet_amplitude(state.m(), state.axis(), out, c1, c2);
}

Amplitude generalized_cg(TotalSpin s, TripletProjection m, SpinHalfProjection m1,
                         SpinHalfProjection m2, const Direction& a) {
    const CompoundState state(s, m, a);
    return compound_amplitude(state, JointOutcome{m1, m2}, a, a);
}

}  // namespace spinpair
