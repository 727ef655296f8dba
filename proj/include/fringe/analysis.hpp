#pragma once

#include <vector>

#include "fringe/params.hpp"

namespace fringe::analysis {

// (max - min)/(max + min) over the given envelope-normalized samples. Samples
// must be finite, >= 0 and cover at least one fringe period (caller's
// responsibility). All-zero signal -> DomainError.
double visibility(const std::vector<double>& samples);

/*! Least-squares fringe fit of A (1 + V cos(x - phase)) to an
 *  envelope-divided profile, x = dk.d. Linearized over the cos/sin basis
 *  (A, A V cos(phase), A V sin(phase) are the linear parameters); the period
 *  is refined by a golden-section scan over a scale factor on x.
 */
struct FringeFit {
    double visibility = 0.0;    // V in [0, 1]
    double phase = 0.0;         // [0, 2 pi)
    double period = 0.0;        // period in dk.d
    double envelope_width = 0.0; // 1/e width in |dk| a0 (from the raw/normalized ratio)
    double residual_norm = 0.0; // rms residual of the normalized fit
    double amplitude = 0.0;     // A
};

// x = dk.d samples, dk_abs = |dk| a0 samples, raw = un-normalized intensity,
// envelope_normalized = raw with the Gaussian envelope divided out (as the
// scattering profiles report them). The envelope width is recovered from the
// raw/normalized ratio. Errors: rank-deficient design (x span too narrow) ->
// FitError; fitted V > 1 + 1e-6 -> FitError.
FringeFit fit_fringe(const std::vector<double>& dk_dot_d, const std::vector<double>& dk_abs,
                     const std::vector<double>& envelope_normalized,
                     const std::vector<double>& raw);

// 1/e width fit of y ~ A e^{-(r/w)^2} by linear regression of log y on r^2.
// Non-positive y or degenerate spread -> FitError.
double gaussian_envelope_width(const std::vector<double>& dk_abs, const std::vector<double>& y);

// Visibility of the envelope-normalized broadband pattern for a given state
// and overlap, scanned over a full fringe period in x = dk.d (the normalized
// pattern is a function of x alone, so no geometry is involved).
double broadband_fringe_visibility(const wavepacket::AtomState& state, double eps);

/*! Broadband visibility vs packet overlap, symmetric state.
 *  For each D: eps(D), then broadband_fringe_visibility at that overlap.
 */
struct VisibilityPoint {
    double separation = 0.0;
    double eps = 0.0;
    double visibility = 0.0;
};

std::vector<VisibilityPoint> visibility_vs_epsilon(const std::vector<double>& separations,
                                                   int threads);
std::vector<VisibilityPoint> visibility_vs_epsilon_serial(const std::vector<double>& separations);

}  // namespace fringe::analysis
