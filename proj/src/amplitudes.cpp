#include "spinpair/amplitudes.hpp"

#include <cmath>
#include <complex>

namespace spinpair {

Amplitude spin_half_amplitude(PhaseConvention conv, SpinHalfProjection m_from,
                              const Direction& d, SpinHalfProjection m_to,
                              const Direction& e) {
    const double cd = std::cos(d.theta() / 2);
    const double sd = std::sin(d.theta() / 2);
    const double ce = std::cos(e.theta() / 2);
    const double se = std::sin(e.theta() / 2);
    // Relative azimuthal phase between the source and detector axes.
    const Amplitude relp = std::polar(1.0, d.phi() - e.phi());

    const bool up_from = (m_from == SpinHalfProjection::Up);
    const bool up_to = (m_to == SpinHalfProjection::Up);

    if (up_from && up_to) return cd * ce + relp * (sd * se);
    if (!up_from && !up_to) return sd * se + relp * (cd * ce);

    if (conv == PhaseConvention::Accepted) {
        if (up_from) return -cd * se + relp * (sd * ce);   // up -> down
        return -sd * ce + relp * (cd * se);                // down -> up
    }
    if (up_from) return cd * se - relp * (sd * ce);
    return sd * ce - relp * (cd * se);
}

Amplitude spin_one_amplitude(TripletProjection m_from, const Direction& a,
                             TripletProjection m_to) {
    const double half = a.theta() / 2;
    const double c2 = std::cos(half) * std::cos(half);
    const double s2 = std::sin(half) * std::sin(half);
    const double sn = std::sin(a.theta());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Amplitude em = std::polar(1.0, -a.phi());
    const Amplitude ep = std::polar(1.0, a.phi());

    switch (m_from) {
        case TripletProjection::Plus:
            switch (m_to) {
                case TripletProjection::Plus: return c2 * em;
                case TripletProjection::Zero: return {inv_sqrt2 * sn, 0.0};
                case TripletProjection::Minus: return s2 * ep;
            }
            break;
        case TripletProjection::Zero:
            switch (m_to) {
                case TripletProjection::Plus: return -inv_sqrt2 * sn * em;
                case TripletProjection::Zero: return {std::cos(a.theta()), 0.0};
                case TripletProjection::Minus: return inv_sqrt2 * sn * ep;
            }
            break;
        case TripletProjection::Minus:
            switch (m_to) {
                case TripletProjection::Plus: return -s2 * em;
                case TripletProjection::Zero: return {inv_sqrt2 * sn, 0.0};
                case TripletProjection::Minus: return -c2 * ep;
            }
            break;
    }
    return {0.0, 0.0};  // unreachable
}

}  // namespace spinpair
