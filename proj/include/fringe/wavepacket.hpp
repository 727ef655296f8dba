#pragma once

#include <complex>

#include "fringe/vec3.hpp"

namespace fringe::wavepacket {

/*! Two-well ground-packet algebra.
 *
 *  The atom sits in a double-well trap with ground packets of rms size a0
 *  centered at -d/2 and +d/2 (origin fixed at the midpoint; this is why the
 *  cross-well matrix element below carries no q-dependent phase). All lengths
 *  are in units of a0 and wave vectors in 1/a0.
 *
 *  Fourier convention: psi~(q) = (2 pi)^{-3/2} Integral e^{-i q.x} psi(x) d3x.
 *  This fixes the sign of the phase in the interference brackets; see README.
 */

// Initial superposition N (cos(theta) |left> + e^{i phi} sin(theta) |right>).
struct AtomState {
    double theta = 0.0; // mixing angle, [0, pi/2]
    double phi = 0.0;   // relative phase, radians
};

enum class Well : int { Left = -1, Right = +1 };

// Packet overlap eps = <left|right> = e^{-D^2/8}. Computed in log space; below
// e^{-700} flushed to exact zero with the flag set (keeps 1/(1-eps^2) finite
// and exactly 1 in the far-separated limit).
struct PacketOverlap {
    double value = 0.0;
    bool flushed_to_zero = false;
};

PacketOverlap overlap_epsilon(double separation);

// State norm factor N = (1 + eps sin(2 theta) cos(phi))^{-1/2}.
// Null state (argument of the root <= 0, only reachable at eps = 1) -> DomainError.
double normalization(double theta, double phi, double eps);

// <bra| e^{i q.x} |ket> for ground packets displaced to -d/2 / +d/2:
//   same well:  e^{-|q|^2/2} e^{+- i q.d/2}   (+ for Right, - for Left)
//   cross well: eps * e^{-|q|^2/2}
// d_vec is the separation vector (|d_vec| = D, a0 units).
std::complex<double> displaced_overlap(Well bra, Well ket, const Vec3& q, const Vec3& d_vec);

// The same matrix element with the common Gaussian e^{-|q|^2/2} divided out.
// Scattering keeps coefficients and envelope separate to dodge underflow at
// large |q| a0; this is the piece it combines.
std::complex<double> displaced_overlap_reduced(Well bra, Well ket, double q_dot_d, double eps);

// Momentum-space wavefunction of the full superposition (closed form):
//   psi~(q) = N (2/pi)^{3/4} e^{-|q|^2} (cos(theta) e^{+i q.d/2} + sin(theta) e^{i phi} e^{-i q.d/2})
std::complex<double> momentum_wavefunction(const Vec3& q, const AtomState& state, const Vec3& d_vec);

// Doublet decomposition over the orthonormal symmetric/antisymmetric pair
//   |S> = (|left>+|right>)/sqrt(2(1+eps)),  |A> = (|right>-|left>)/sqrt(2(1-eps)).
struct DoubletCoeffs {
    std::complex<double> c_sym;
    std::complex<double> c_anti;
};

// |c_sym|^2 + |c_anti|^2 = 1 for any valid state. eps >= 1 - 1e-12 -> DomainError
// (the antisymmetric member of the basis degenerates).
DoubletCoeffs doublet_decompose(double theta, double phi, double eps);

/*! Doublet matrix elements m_XY = <X| e^{i q.x} |Y> with the Gaussian envelope
 *  factor e^{-|q|^2/2} divided out, assembled from the four packet-basis
 *  displaced overlaps. With h = q.d/2:
 *    m_ss = (cos h + eps)/(1 + eps)      m_aa = (cos h - eps)/(1 - eps)
 *    m_as = m_sa = i sin h / sqrt(1 - eps^2)
 */
struct DoubletMatrixElements {
    std::complex<double> m_ss, m_aa, m_as, m_sa;
};

DoubletMatrixElements doublet_matrix_elements(double q_dot_d, double eps);

}  // namespace fringe::wavepacket
