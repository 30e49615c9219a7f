// Compounding two spin-1/2 systems: the Clebsch-Gordan table for
// 1/2 x 1/2 -> {0, 1}, joint uncoupled amplitudes, the two-stage expansion
// chain (the oracle path), closed-form singlet/triplet compound amplitudes,
// and generalized Clebsch-Gordan coefficients.
//
// The closed forms and the expansion chain are deliberately implemented
// independently, with no shared sub-expressions: their agreement is the
// central cross-check of the library and a transcription error in either
// one cannot cancel against the other.
#pragma once

#include "spinpair/amplitudes.hpp"
#include "spinpair/core.hpp"

#include <array>

namespace spinpair {

// One nonzero Clebsch-Gordan entry <1/2 m1, 1/2 m2 | s M>.
struct CgEntry {
    TotalSpin s;
    TripletProjection m;
    SpinHalfProjection m1;
    SpinHalfProjection m2;
    double value;
};

// The six nonzero entries of the 1/2 x 1/2 table, Condon-Shortley phases
// (as tabulated in Rose, "Elementary Theory of Angular Momentum").
const std::array<CgEntry, 6>& cg_table();

// Table lookup; 0 whenever m1 + m2 != M. Throws std::invalid_argument for
// the unphysical combination s = 0, M != 0.
double clebsch_gordan(TotalSpin s, TripletProjection m, SpinHalfProjection m1,
                      SpinHalfProjection m2);

// Joint amplitude psi for two independent subsystems prepared along the
// z-axis with projections alpha = (m1, m2) and measured along (c1, c2):
// the product of the two single-system amplitudes. The convention parameter
// exists so the reduction tests can drive the whole chain under the
// rejected phases; production callers take the default.
Amplitude joint_uncoupled_amplitude(
    JointOutcome alpha, JointOutcome out, const Direction& c1,
    const Direction& c2, PhaseConvention conv = PhaseConvention::Accepted);

// First expansion stage: amplitude from the coupled z-axis state (s, m_j)
// to the joint outcome, summed over intermediate joint projections in
// canonical order with the CG table as weights.
Amplitude xi_amplitude(TripletProjection m_j, TotalSpin s, JointOutcome out,
                       const Direction& c1, const Direction& c2,
                       PhaseConvention conv = PhaseConvention::Accepted);

// Full two-stage expansion chain: spin-1 amplitude from (s, M) along the
// state axis to (s, M_j) along the z-axis, times xi, summed over M_j in
// the fixed order +1, 0, -1. The singlet skips the first stage (its single
// rotation amplitude is a pure phase, fixed to 1). This is the oracle the
// closed forms are validated against.
Amplitude compound_amplitude_oracle(
    const CompoundState& state, JointOutcome out, const Direction& c1,
    const Direction& c2, PhaseConvention conv = PhaseConvention::Accepted);

// Closed-form singlet amplitude; independent of the state axis.
Amplitude singlet_amplitude(JointOutcome out, const Direction& c1,
                            const Direction& c2);

// Closed-form triplet amplitude for projection m along axis a.
Amplitude triplet_amplitude(TripletProjection m, const Direction& a,
                            JointOutcome out, const Direction& c1,
                            const Direction& c2);

// Closed-form dispatch over the state's total spin.
Amplitude compound_amplitude(const CompoundState& state, JointOutcome out,
                             const Direction& c1, const Direction& c2);

// Generalized Clebsch-Gordan coefficient: the compound amplitude with both
// detectors along the state axis a. Its magnitude matches the standard
// table entry for every a. Throws like clebsch_gordan for s = 0, M != 0.
Amplitude generalized_cg(TotalSpin s, TripletProjection m,
                         SpinHalfProjection m1, SpinHalfProjection m2,
                         const Direction& a);

}  // namespace spinpair
