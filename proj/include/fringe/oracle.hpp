#pragma once

#include <complex>
#include <vector>

#include "fringe/vec3.hpp"
#include "fringe/wavepacket.hpp"

namespace fringe::oracle {

/*! Independent numerical checks for every closed form in the library.
 *
 *  Nothing here reuses the closed-form Gaussian algebra: matrix elements are
 *  composite-Simpson position-space quadratures, the Raman pattern is a direct
 *  Fourier quadrature, and the spectrum check integrates the emission
 *  amplitude over time. Deliberately slow and simple.
 */

// Symmetric 1D grid x in [-extent, extent] with composite Simpson weights.
// extent = separation/2 + margin. The default margin 8 suits two-packet
// product integrands; single-amplitude Fourier integrands need margin 16
// (truncation tails decay as e^{-x^2/2} vs e^{-x^2/4}).
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double step = 0.0;
    double extent = 0.0;

    static QuadratureGrid make(double separation, double step = 0.05, double margin = 8.0);
};

// <bra| e^{i q.x} |ket> by separable 1D quadratures (axis along d, two
// transverse axes). Grid must pass the packet-norm self check to 1e-10,
// otherwise QuadratureError.
std::complex<double> quad_displaced_overlap(wavepacket::Well bra, wavepacket::Well ket,
                                            const Vec3& q, const Vec3& d_vec,
                                            const QuadratureGrid& grid);

// Quadrature value of <psi|psi> with N set to 1; closed-form N must equal
// (this)^{-1/2}.
double quad_norm_sq(const wavepacket::AtomState& state, double separation,
                    const QuadratureGrid& grid);

/*! Eigenbasis model built entirely from quadrature inner products:
 *  eps, the doublet matrix elements at dk, and the initial coefficients.
 *  Energies: E_S = 0, E_A = splitting.
 */
struct EigenbasisModel {
    double eps = 0.0;
    double splitting = 0.0;
    std::complex<double> m_ss, m_aa, m_as, m_sa;
    std::complex<double> c_sym, c_anti;

    static EigenbasisModel build(const wavepacket::AtomState& state, const Vec3& dk,
                                 const Vec3& d_vec, double splitting,
                                 const QuadratureGrid& grid);
};

struct SpectralLine {
    double center = 0.0; // offset from the laser frequency
    double weight = 0.0; // spectrally integrated intensity (envelope included)
};

// Rayleigh line weights from the eigenbasis model:
//   (0, |c_S m_ss|^2 + |c_A m_aa|^2), (-splitting, |c_S m_as|^2), (+splitting, |c_A m_sa|^2).
// `resolved` flags splitting * T / 2pi >= 10 (warning only).
struct EigenSpectrum {
    std::vector<SpectralLine> lines;
    bool resolved = true;
};

EigenSpectrum spectrum_from_eigenbasis(const EigenbasisModel& model, double pulse_time);

// |psi~(dk)|^2 by direct Fourier quadrature of the position-space
// superposition. Use a margin >= 16 grid (single-amplitude tails).
double raman_momentum_oracle(const wavepacket::AtomState& state, const Vec3& dk,
                             const Vec3& d_vec, const QuadratureGrid& grid);

/*! Direct evaluation of the time-resolved emission spectrum
 *    S(omega) = (1/2 pi T) Sum_f |Sum_X c_X m_fX Int_0^T e^{i(omega + E_f - E_X) tau} dtau|^2
 *  per requested omega (offset from the laser). Quadratic cost; n_time > 1e5
 *  -> QuadratureError. Parallel over omega samples; serial twin for testing.
 */
std::vector<double> time_integral_check(const EigenbasisModel& model, double pulse_time,
                                        const std::vector<double>& omegas, int n_time,
                                        int threads);
std::vector<double> time_integral_check_serial(const EigenbasisModel& model, double pulse_time,
                                               const std::vector<double>& omegas, int n_time);

}  // namespace fringe::oracle
