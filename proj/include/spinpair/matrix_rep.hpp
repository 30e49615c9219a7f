// Matrix representations of compound states and outcome observables.
//
// Three realizations of the same expectation value:
//   4-dim: components indexed by the joint z-basis (++, +-, -+, --),
//   3-dim: triplet only, indexed by the coupled z-basis M = +1, 0, -1,
//   1-dim: the scalar representation ([1], [sum of p*r]).
// Operators are built from their defining sums over outcome amplitudes;
// the printed closed-form elements live in the test suite as golden checks.
#pragma once

#include "spinpair/core.hpp"

#include <array>
#include <utility>
#include <vector>

namespace spinpair {

enum class Basis {
    JointZ,     // 4-dim, canonical outcome order
    CompoundZ,  // 3-dim, M = +1, 0, -1
    Scalar      // 1-dim
};

// A basis-tagged state column. Builders produce unit-norm vectors.
struct StateVector {
    Basis basis;
    std::vector<Amplitude> components;

    int dim() const { return static_cast<int>(components.size()); }
    double norm() const;
};

// A basis-tagged dense Hermitian matrix, row-major.
struct ObservableMatrix {
    Basis basis;
    int dim;
    std::vector<Amplitude> entries;

    const Amplitude& at(int i, int j) const { return entries[i * dim + j]; }
    Amplitude& at(int i, int j) { return entries[i * dim + j]; }
};

// Real value attached to each joint outcome (the observable being averaged).
struct OutcomeValues {
    std::array<double, 4> r{};

    double operator[](JointOutcome out) const { return r[outcome_index(out)]; }
};

// The singlet column in the joint z-basis: (0, 1/sqrt2, -1/sqrt2, 0).
StateVector singlet_state_vector();

// Triplet column in the joint z-basis: the spin-1 rotation amplitudes
// contracted with the CG column, component by component.
StateVector triplet_state_vector_4d(TripletProjection m, const Direction& a);

// Triplet column in the coupled z-basis: the three spin-1 rotation
// amplitudes from (1, m) along a to M = +1, 0, -1 along the z-axis.
StateVector triplet_state_vector_3d(TripletProjection m, const Direction& a);

// 4x4 operator: R[g][g'] = sum over outcomes of
// conj(psi(B_g; out)) * r(out) * psi(B_g'; out).
ObservableMatrix observable_matrix_4d(const OutcomeValues& r,
                                      const Direction& c1, const Direction& c2);

// 3x3 operator: R[p][p'] = sum over outcomes of
// conj(xi(1, M_p; out)) * r(out) * xi(1, M_p'; out).
ObservableMatrix observable_matrix_3d(const OutcomeValues& r,
                                      const Direction& c1, const Direction& c2);

// Re(v† M v). Dimension or basis mismatch throws std::invalid_argument;
// an imaginary part of magnitude >= 1e-10 (impossible for a Hermitian
// operator up to rounding) throws std::logic_error.
double expectation(const StateVector& v, const ObservableMatrix& m);

// The 1-dim representation: state vector (1) and operator
// [sum over outcomes of |Psi(state; out)|^2 * r(out)].
std::pair<StateVector, ObservableMatrix> scalar_representation(
    const CompoundState& state, const OutcomeValues& r, const Direction& c1,
    const Direction& c2);

}  // namespace spinpair
