#pragma once

#include <cstdint>
#include <vector>

#include "fringe/geometry.hpp"
#include "fringe/lineshape.hpp"
#include "fringe/params.hpp"
#include "fringe/wavepacket.hpp"

namespace fringe::scattering {

/*! Rayleigh line weights at one momentum transfer.
 *
 *  Coefficients are envelope-free (the common Gaussian e^{-|dk|^2 a0^2} is kept
 *  separate in `envelope`); spectrally integrated line intensities are
 *  prefactor * envelope * coefficient. Line centers relative to the laser:
 *  elastic 0, Stokes -splitting, anti-Stokes +splitting.
 */
struct RayleighComponents {
    double elastic = 0.0;
    double stokes = 0.0;
    double antistokes = 0.0;
    double envelope = 1.0;
};

// Weights from the doublet matrix elements and the state's doublet coefficients:
//   elastic = |c_S m_ss|^2 + |c_A m_aa|^2, stokes = |c_S m_as|^2, antistokes = |c_A m_sa|^2.
// eps >= 1 - 1e-12 -> DomainError (degenerate doublet).
RayleighComponents rayleigh_components(const wavepacket::AtomState& state,
                                       const geometry::MomentumTransfer& mt, double eps);

// Same weights as a pure function of the fringe coordinate x = dk.d (they do
// not depend on |dk| once the envelope is factored out). Used by the broadband
// sweep where no geometry is involved.
RayleighComponents rayleigh_coefficients(const wavepacket::AtomState& state, double dk_dot_d,
                                         double eps);

// Global-phase freedom lives in the doublet coefficients; exposed for the
// invariance test.
RayleighComponents rayleigh_from_doublet(const wavepacket::DoubletCoeffs& coeffs,
                                         double dk_dot_d, double eps);

// Overall emission-rate scale: gamma * dipole * rabi^2 / detuning^2.
// detuning == 0 -> DomainError (far-detuned model invalid on resonance).
double rate_prefactor(double gamma, double rabi, double detuning, double dipole);

/*! Angle- and frequency-resolved Rayleigh spectrum on a (phi, omega) grid.
 *  omega is the offset from the laser frequency in trap units. Row-major
 *  [phi][omega]; component sum equals total exactly by construction.
 */
struct AngularSpectrum {
    std::vector<double> phi;
    std::vector<double> omega;
    std::vector<double> total;
    std::vector<double> elastic;
    std::vector<double> stokes;
    std::vector<double> antistokes;
    std::uint64_t params_hash = 0;
    lineshape::ResolutionReport resolution;
};

// OpenMP kernel (threads = 0 means library default) and the serial reference
// kept for testing/benchmarking; bit-identical outputs.
AngularSpectrum rayleigh_spectrum(const Params& p, const std::vector<double>& phi_grid,
                                  const std::vector<double>& omega_grid, int threads);
AngularSpectrum rayleigh_spectrum_serial(const Params& p, const std::vector<double>& phi_grid,
                                         const std::vector<double>& omega_grid);

/*! Spectrally integrated (broadband, no filter) angular profile:
 *  raw = prefactor * envelope * (elastic + stokes + antistokes),
 *  envelope_normalized = raw / envelope.
 */
struct BroadbandProfile {
    std::vector<double> phi;
    std::vector<double> dk_dot_d;
    std::vector<double> dk_abs;
    std::vector<double> raw;
    std::vector<double> envelope_normalized;
};

BroadbandProfile broadband_intensity(const Params& p, const std::vector<double>& phi_grid,
                                     int threads);
BroadbandProfile broadband_intensity_serial(const Params& p, const std::vector<double>& phi_grid);

/*! Raman (internal-state-changing) channel at one momentum transfer.
 *  The atom ends free; the angular pattern is the momentum distribution
 *  |psi~(dk)|^2 = norm * envelope * bracket with
 *    bracket  = 1 + sin(2 theta) cos(dk.d - phi)   [FT convention e^{-iq.x}]
 *    envelope = e^{-2 |dk|^2 a0^2}
 *    norm     = N^2 (2/pi)^{3/2}
 *  line_center = final_offset + recoil, offset from the laser frequency
 *  (the diffraction-function argument combines the internal offset and the
 *  free recoil; both enter with + sign).
 */
struct RamanIntensity {
    double bracket = 0.0;
    double envelope = 1.0;
    double norm = 1.0;
    double line_center = 0.0;
};

RamanIntensity raman_intensity(const wavepacket::AtomState& state,
                               const geometry::MomentumTransfer& mt, double eps,
                               double final_offset);

// Spectral density of the Raman line at offset omega from the laser.
double raman_spectral_density(const RamanIntensity& ri, double omega, double pulse_time,
                              double prefactor);

/*! Raman angular pattern at the line center (the diffraction factor is then the
 *  constant T/2pi): intensity = prefactor * (T/2pi) * norm * envelope * bracket.
 */
struct RamanPattern {
    std::vector<double> phi;
    std::vector<double> dk_dot_d;
    std::vector<double> dk_abs;
    std::vector<double> intensity;
    std::vector<double> envelope_normalized; // intensity / envelope
    std::uint64_t params_hash = 0;
};

RamanPattern raman_pattern(const Params& p, const std::vector<double>& phi_grid, int threads);
RamanPattern raman_pattern_serial(const Params& p, const std::vector<double>& phi_grid);

}  // namespace fringe::scattering
