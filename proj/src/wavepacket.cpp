#include "fringe/wavepacket.hpp"

#include <cmath>

#include "fringe/errors.hpp"

namespace fringe::wavepacket {

namespace {

constexpr double kFlushExponent = 700.0;  // e^{-700} ~ 1e-304, close to the subnormal edge
constexpr double kEpsDegenerate = 1.0 - 1e-12;
const double kPi = 3.14159265358979323846;

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

}  // namespace

PacketOverlap overlap_epsilon(double separation) {
    if (separation < 0.0) throw DomainError("well separation must be >= 0");
    PacketOverlap out;
    const double log_eps = -separation * separation / 8.0;
    if (log_eps < -kFlushExponent) {
        out.value = 0.0;
        out.flushed_to_zero = true;
    } else {
        out.value = std::exp(log_eps);
    }
    return out;
}

double normalization(double theta, double phi, double eps) {
    if (eps < 0.0 || eps > 1.0) throw DomainError("overlap eps must lie in [0, 1]");
    const double arg = 1.0 + eps * std::sin(2.0 * theta) * std::cos(phi);
    if (arg <= 0.0)
        throw DomainError("null state: 1 + eps sin(2 theta) cos(phi) <= 0");
    return 1.0 / std::sqrt(arg);
}

std::complex<double> displaced_overlap(Well bra, Well ket, const Vec3& q, const Vec3& d_vec) {
    const double gauss = std::exp(-0.5 * norm_sq(q));
    const double eps = overlap_epsilon(norm(d_vec)).value;
    return gauss * displaced_overlap_reduced(bra, ket, dot(q, d_vec), eps);
}

std::complex<double> displaced_overlap_reduced(Well bra, Well ket, double q_dot_d, double eps) {
    if (bra == ket) {
        // center at +d/2 picks up e^{+i q.d/2}, at -d/2 the conjugate phase
        const double sign = (ket == Well::Right) ? +0.5 : -0.5;
        return std::exp(kI * (sign * q_dot_d));
    }
    return {eps, 0.0};
}

std::complex<double> momentum_wavefunction(const Vec3& q, const AtomState& state,
                                           const Vec3& d_vec) {
    const double eps = overlap_epsilon(norm(d_vec)).value;
    const double n = normalization(state.theta, state.phi, eps);
    const double half = 0.5 * dot(q, d_vec);
    const double gauss = std::pow(2.0 / kPi, 0.75) * std::exp(-norm_sq(q));
    const cplx left = std::cos(state.theta) * std::exp(kI * half);
    const cplx right = std::sin(state.theta) * std::exp(kI * (state.phi - half));
    return n * gauss * (left + right);
}

DoubletCoeffs doublet_decompose(double theta, double phi, double eps) {
    if (eps >= kEpsDegenerate)
        throw DomainError("doublet basis degenerates as eps -> 1 (wells not separated)");
    const double n = normalization(theta, phi, eps);
    const cplx e_phi = std::exp(kI * phi);
    DoubletCoeffs c;
    c.c_sym = n * std::sqrt(0.5 * (1.0 + eps)) * (std::cos(theta) + e_phi * std::sin(theta));
    c.c_anti = n * std::sqrt(0.5 * (1.0 - eps)) * (e_phi * std::sin(theta) - std::cos(theta));
    return c;
}

DoubletMatrixElements doublet_matrix_elements(double q_dot_d, double eps) {
    if (eps >= kEpsDegenerate)
        throw DomainError("doublet basis degenerates as eps -> 1 (wells not separated)");
    // Assemble <X| e^{i q.x} |Y> from the four packet-basis elements; the
    // common Gaussian envelope is already divided out of the inputs.
    const cplx o_ll = displaced_overlap_reduced(Well::Left, Well::Left, q_dot_d, eps);
    const cplx o_lr = displaced_overlap_reduced(Well::Left, Well::Right, q_dot_d, eps);
    const cplx o_rl = displaced_overlap_reduced(Well::Right, Well::Left, q_dot_d, eps);
    const cplx o_rr = displaced_overlap_reduced(Well::Right, Well::Right, q_dot_d, eps);

    const double s_norm = 2.0 * (1.0 + eps);
    const double a_norm = 2.0 * (1.0 - eps);
    const double x_norm = 2.0 * std::sqrt((1.0 - eps) * (1.0 + eps));

    DoubletMatrixElements m;
    m.m_ss = (o_ll + o_lr + o_rl + o_rr) / s_norm;
    m.m_aa = (o_rr - o_rl - o_lr + o_ll) / a_norm;
    m.m_as = (o_rl + o_rr - o_ll - o_lr) / x_norm; // <A| ... |S>
    m.m_sa = (o_lr - o_ll + o_rr - o_rl) / x_norm; // <S| ... |A>
    return m;
}

}  // namespace fringe::wavepacket
