#include "spinpair/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

double wrap_two_pi(double phi) {
    double wrapped = std::fmod(phi, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    // fmod can land exactly on 2*pi after the correction when phi is a tiny
    // negative number; fold that back to zero.
    if (wrapped >= kTwoPi) wrapped = 0.0;
    return wrapped;
}

}  // namespace

Direction::Direction(double theta, double phi) : theta_(theta), phi_(wrap_two_pi(phi)) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::domain_error("Direction: polar angle " + std::to_string(theta) +
                                " outside [0, pi]");
    }
}

std::array<double, 3> Direction::unit_vector() const {
    const double st = std::sin(theta_);
    return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

double direction_dot(const Direction& a, const Direction& b) {
    return std::sin(a.theta()) * std::sin(b.theta()) * std::cos(a.phi() - b.phi()) +
           std::cos(a.theta()) * std::cos(b.theta());
}

bool approx_equal(const Direction& a, const Direction& b, double tol) {
    if (std::abs(a.theta() - b.theta()) > tol) return false;
    double dphi = std::abs(a.phi() - b.phi());
    dphi = std::min(dphi, kTwoPi - dphi);
    return dphi <= tol;
}

int projection_value(TripletProjection m) {
    switch (m) {
        case TripletProjection::Plus: return 1;
        case TripletProjection::Zero: return 0;
        case TripletProjection::Minus: return -1;
    }
    return 0;  // unreachable
}

const std::array<JointOutcome, 4>& joint_outcomes() {
    static const std::array<JointOutcome, 4> outcomes = {{
        {SpinHalfProjection::Up, SpinHalfProjection::Up},
        {SpinHalfProjection::Up, SpinHalfProjection::Down},
        {SpinHalfProjection::Down, SpinHalfProjection::Up},
        {SpinHalfProjection::Down, SpinHalfProjection::Down},
    }};
    return outcomes;
}

int outcome_index(JointOutcome out) {
    const int first = (out.m1 == SpinHalfProjection::Up) ? 0 : 2;
    const int second = (out.m2 == SpinHalfProjection::Up) ? 0 : 1;
    return first + second;
}

std::string outcome_label(JointOutcome out) {
    std::string label;
    label += (out.m1 == SpinHalfProjection::Up) ? '+' : '-';
    label += (out.m2 == SpinHalfProjection::Up) ? '+' : '-';
    return label;
}

CompoundState::CompoundState(TotalSpin s, TripletProjection m, Direction axis)
    : s_(s), m_(m), axis_(axis) {
    if (s == TotalSpin::Singlet && m != TripletProjection::Zero) {
        throw std::invalid_argument(
            "CompoundState: the singlet only admits total projection M = 0");
    }
}

CompoundState CompoundState::singlet(Direction axis) {
    return CompoundState(TotalSpin::Singlet, TripletProjection::Zero, axis);
}

CompoundState CompoundState::triplet(TripletProjection m, Direction axis) {
    return CompoundState(TotalSpin::Triplet, m, axis);
}

}  // namespace spinpair
