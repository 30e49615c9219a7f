// Single-system transition amplitudes: spin-1/2 between two arbitrary
// quantization directions under two phase conventions, and spin-1 from an
// arbitrary axis to the z-axis.
#pragma once

#include "spinpair/core.hpp"

namespace spinpair {

// Two self-consistent phase choices for the spin-1/2 amplitudes. Both give
// identical single-system probabilities; they differ in relative phases,
// and only Accepted stays consistent with the spin-1 amplitudes when two
// spin-1/2 systems are compounded (see the reduction tests in compounding).
enum class PhaseConvention { Rejected, Accepted };

// Amplitude for finding projection m_to along e, given projection m_from
// along d. For fixed m_from the two outcome magnitudes squared sum to 1.
Amplitude spin_half_amplitude(PhaseConvention conv, SpinHalfProjection m_from,
                              const Direction& d, SpinHalfProjection m_to,
                              const Direction& e);

// Spin-1 amplitude from projection m_from along a to projection m_to along
// the z-axis. Only the a -> z-axis case is needed (and implemented).
Amplitude spin_one_amplitude(TripletProjection m_from, const Direction& a,
                             TripletProjection m_to);

}  // namespace spinpair
