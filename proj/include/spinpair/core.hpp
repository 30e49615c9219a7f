// Core value types shared by every module: directions on the unit sphere,
// complex amplitudes, spin projection labels, joint outcomes, compound states.
// All types are immutable values and safe to share across threads.
#pragma once

#include <array>
#include <complex>
#include <string>

namespace spinpair {

using Amplitude = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// A quantization direction given by polar angles, theta in [0, pi] and
// phi wrapped into [0, 2pi) on construction. At the poles phi is kept as
// given rather than canonicalized: the amplitude formulas use phi even
// when theta is 0 or pi, so callers must not assume pole-phi uniqueness.
class Direction {
  public:
    Direction() = default;  // the z-axis
    Direction(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    // Cartesian unit vector (sin t cos p, sin t sin p, cos t).
    std::array<double, 3> unit_vector() const;

  private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

// k-hat, the z-axis reference direction.
inline Direction z_axis() { return Direction(0.0, 0.0); }

// cos(angle between a and b); algebraically in [-1, 1].
double direction_dot(const Direction& a, const Direction& b);

// Tolerance-based equality: |d theta| <= tol and the angular distance of
// the phis mod 2pi <= tol. Never bitwise.
bool approx_equal(const Direction& a, const Direction& b, double tol = 1e-12);

enum class SpinHalfProjection { Up, Down };   // m = +1/2, -1/2
enum class TripletProjection { Plus, Zero, Minus };  // M = +1, 0, -1

// Signed integer value of a triplet projection: +1, 0, -1.
int projection_value(TripletProjection m);

// Ordered pair of subsystem projections measured along (c1, c2).
struct JointOutcome {
    SpinHalfProjection m1;
    SpinHalfProjection m2;

    friend bool operator==(JointOutcome a, JointOutcome b) {
        return a.m1 == b.m1 && a.m2 == b.m2;
    }
};

// The canonical outcome enumeration (++), (+-), (-+), (--), in that order.
// Every loop over outcomes in the library iterates this array left to right
// so floating-point summation order is reproducible.
const std::array<JointOutcome, 4>& joint_outcomes();

// Index of an outcome in the canonical enumeration, 0..3.
int outcome_index(JointOutcome out);

// Two-character label used in JSON/CSV: "++", "+-", "-+", "--".
std::string outcome_label(JointOutcome out);

enum class TotalSpin { Singlet = 0, Triplet = 1 };

// A compound spin state (s, M) quantized along `axis`. The singlet admits
// only M = 0; constructing a singlet with M != 0 throws std::invalid_argument.
class CompoundState {
  public:
    CompoundState(TotalSpin s, TripletProjection m, Direction axis);

    static CompoundState singlet(Direction axis);
    static CompoundState triplet(TripletProjection m, Direction axis);

    TotalSpin s() const { return s_; }
    TripletProjection m() const { return m_; }
    const Direction& axis() const { return axis_; }

  private:
    TotalSpin s_;
    TripletProjection m_;
    Direction axis_;
};

}  // namespace spinpair
