#include "spinpair/matrix_rep.hpp"

#include "spinpair/amplitudes.hpp"
#include "spinpair/compounding.hpp"
#include "spinpair/probabilities.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

constexpr std::array<TripletProjection, 3> kCoupledOrder = {
    TripletProjection::Plus, TripletProjection::Zero, TripletProjection::Minus};

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::JointZ: return "joint z-basis";
        case Basis::CompoundZ: return "compound z-basis";
        case Basis::Scalar: return "scalar";
    }
    return "unknown";
}

}  // namespace

double StateVector::norm() const {
    double sum = 0.0;
    for (const Amplitude& c : components) sum += std::norm(c);
    return std::sqrt(sum);
}

StateVector singlet_state_vector() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector v;
    v.basis = Basis::JointZ;
    v.components = {{0.0, 0.0}, {inv_sqrt2, 0.0}, {-inv_sqrt2, 0.0}, {0.0, 0.0}};
    return v;
}

StateVector triplet_state_vector_4d(TripletProjection m, const Direction& a) {
    StateVector v;
    v.basis = Basis::JointZ;
    v.components.assign(4, {0.0, 0.0});
    for (std::size_t g = 0; g < 4; ++g) {
        const JointOutcome alpha = joint_outcomes()[g];
        Amplitude beta{0.0, 0.0};
        for (TripletProjection m_j : kCoupledOrder) {
            beta += spin_one_amplitude(m, a, m_j) *
                    clebsch_gordan(TotalSpin::Triplet, m_j, alpha.m1, alpha.m2);
        }
        v.components[g] = beta;
    }
    return v;
}

StateVector triplet_state_vector_3d(TripletProjection m, const Direction& a) {
    StateVector v;
    v.basis = Basis::CompoundZ;
    v.components.assign(3, {0.0, 0.0});
    for (std::size_t p = 0; p < 3; ++p) {
        v.components[p] = spin_one_amplitude(m, a, kCoupledOrder[p]);
    }
    return v;
}

ObservableMatrix observable_matrix_4d(const OutcomeValues& r, const Direction& c1,
                                      const Direction& c2) {
    ObservableMatrix m;
    m.basis = Basis::JointZ;
    m.dim = 4;
    m.entries.assign(16, {0.0, 0.0});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Amplitude sum{0.0, 0.0};
            for (const auto& out : joint_outcomes()) {
                sum += std::conj(joint_uncoupled_amplitude(joint_outcomes()[
                           static_cast<std::size_t>(i)], out, c1, c2)) *
                       r[out] *
                       joint_uncoupled_amplitude(joint_outcomes()[
                           static_cast<std::size_t>(j)], out, c1, c2);
            }
            m.at(i, j) = sum;
        }
    }
    return m;
}

ObservableMatrix observable_matrix_3d(const OutcomeValues& r, const Direction& c1,
                                      const Direction& c2) {
    ObservableMatrix m;
    m.basis = Basis::CompoundZ;
    m.dim = 3;
    m.entries.assign(9, {0.0, 0.0});
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Amplitude sum{0.0, 0.0};
            for (const auto& out : joint_outcomes()) {
                sum += std::conj(xi_amplitude(kCoupledOrder[static_cast<std::size_t>(i)],
                                              TotalSpin::Triplet, out, c1, c2)) *
                       r[out] *
                       xi_amplitude(kCoupledOrder[static_cast<std::size_t>(j)],
                                    TotalSpin::Triplet, out, c1, c2);
            }
            m.at(i, j) = sum;
        }
    }
    return m;
}

double expectation(const StateVector& v, const ObservableMatrix& m) {
    if (v.basis != m.basis) {
        throw std::invalid_argument(std::string("expectation: state vector in the ") +
                                    basis_name(v.basis) + " paired with an operator in the " +
                                    basis_name(m.basis));
    }
    if (v.dim() != m.dim) {
        throw std::invalid_argument("expectation: " + std::to_string(v.dim()) +
                                    "-dim state vector paired with a " +
                                    std::to_string(m.dim) + "-dim operator");
    }
    Amplitude acc{0.0, 0.0};
    for (int i = 0; i < m.dim; ++i) {
        for (int j = 0; j < m.dim; ++j) {
            acc += std::conj(v.components[static_cast<std::size_t>(i)]) * m.at(i, j) *
                   v.components[static_cast<std::size_t>(j)];
        }
    }
    // A Hermitian quadratic form is real; anything beyond rounding noise
    // means the operator was not built by this library's constructors.
    if (std::abs(acc.imag()) >= 1e-10) {
        throw std::logic_error("expectation: quadratic form has imaginary part " +
                               std::to_string(acc.imag()) + ", operator is not Hermitian");
    }
    return acc.real();
}

std::pair<StateVector, ObservableMatrix> scalar_representation(const CompoundState& state,
                                                               const OutcomeValues& r,
                                                               const Direction& c1,
                                                               const Direction& c2) {
    const ProbabilityQuadruple q = joint_probabilities(state, c1, c2);
    double weighted = 0.0;
    for (const auto& out : joint_outcomes()) weighted += q[out] * r[out];

    StateVector v;
    v.basis = Basis::Scalar;
    v.components = {{1.0, 0.0}};

    ObservableMatrix m;
    m.basis = Basis::Scalar;
    m.dim = 1;
    m.entries = {{weighted, 0.0}};
    return {v, m};
}

}  // namespace spinpair
