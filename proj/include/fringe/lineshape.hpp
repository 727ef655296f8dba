#pragma once

namespace fringe::lineshape {

// Finite-observation-time line profile ("diffraction function"):
//   delta_T(w) = (T / 2 pi) * sinc^2(w T / 2),  sinc(x) = sin(x)/x, sinc(0) = 1.
// Normalized to unit integral over w, so spectrally integrated line intensities
// equal the closed-form coefficients directly. T > 0 required (DomainError).
double diffraction(double omega, double big_t);

/*! Validity-condition report for the spectral decomposition.
 *
 *  "Much greater/less than" is operationalized as ratio >= 10 (resolved) and
 *  ratio <= 0.1 (negligible). These are reporting conventions, never hard
 *  failures: the CLI prints warnings and proceeds.
 */
struct ResolutionReport {
    double doublet_ratio = 0.0;        // splitting * T / 2 pi
    bool doublet_resolved = false;     // ratio >= 10
    double recoil_ratio = 0.0;         // (2 eta)^2 * T / 2 pi (back-scattering recoil)
    bool recoil_resolved = false;      // ratio >= 10
    double linewidth_to_splitting = 0.0; // laser linewidth / splitting
    bool linewidth_ok = false;         // ratio <= 0.1
    double transit_ratio = 0.0;        // linewidth * d / (2 pi c) = lw * D * eta / (2 pi * omega_L/nu)
    bool transit_ok = false;
    bool transit_checked = false;      // false when omega_L/nu is not provided
};

// All frequencies in trap units. laser_frequency <= 0 means "unknown": the
// transit-time check is skipped (transit_checked = false).
ResolutionReport resolution_report(double splitting, double pulse_time, double eta,
                                   double linewidth, double separation,
                                   double laser_frequency);

}  // namespace fringe::lineshape
