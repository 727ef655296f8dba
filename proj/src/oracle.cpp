#include "fringe/oracle.hpp"

#include <cmath>

#include "fringe/errors.hpp"
#include "fringe/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fringe::oracle {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;

using cplx = std::complex<double>;

// 1D ground packet centered at c, a0 = 1: (2 pi)^{-1/4} e^{-(x-c)^2/4}
double packet(double x, double c) {
    return std::pow(kTwoPi, -0.25) * std::exp(-0.25 * (x - c) * (x - c));
}

// Sum_j w_j f1(x_j) f2(x_j) e^{i q x_j}
cplx quad_product_fourier(const QuadratureGrid& grid, double c1, double c2, double q) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        const double x = grid.nodes[j];
        const double f = grid.weights[j] * packet(x, c1) * packet(x, c2);
        re += f * std::cos(q * x);
        im += f * std::sin(q * x);
    }
    return {re, im};
}

// (2 pi)^{-1/2} Sum_j w_j f(x_j) e^{-i q x_j} for a real packet amplitude
cplx quad_fourier_amplitude(const QuadratureGrid& grid, double c, double q) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        const double x = grid.nodes[j];
        const double f = grid.weights[j] * packet(x, c);
        re += f * std::cos(q * x);
        im -= f * std::sin(q * x);
    }
    return cplx{re, im} / std::sqrt(kTwoPi);
}

void check_grid(const QuadratureGrid& grid, double separation) {
    // packet-norm self check at both centers: grid too coarse/short -> error
    for (double c : {-0.5 * separation, 0.5 * separation}) {
        const double n = quad_product_fourier(grid, c, c, 0.0).real();
        if (std::abs(n - 1.0) > 1e-10)
            throw QuadratureError("quadrature grid fails the packet-norm check");
    }
}

// Orthonormal frame with u along d (or x when d = 0); q decomposed onto it.
struct AxisFrame {
    Vec3 u, v, w;
};

AxisFrame axis_frame(const Vec3& d_vec) {
    AxisFrame f;
    const double dn = norm(d_vec);
    f.u = (dn > 0.0) ? (1.0 / dn) * d_vec : Vec3{1.0, 0.0, 0.0};
    const double ax = std::abs(f.u.x), ay = std::abs(f.u.y), az = std::abs(f.u.z);
    Vec3 seed = (ax <= ay && ax <= az) ? Vec3{1.0, 0.0, 0.0}
                : (ay <= az)           ? Vec3{0.0, 1.0, 0.0}
                                       : Vec3{0.0, 0.0, 1.0};
    Vec3 vv = cross(f.u, seed);
    f.v = (1.0 / norm(vv)) * vv;
    f.w = cross(f.u, f.v);
    return f;
}

}  // namespace

QuadratureGrid QuadratureGrid::make(double separation, double step, double margin) {
    if (!(step > 0.0) || !(margin > 0.0) || separation < 0.0)
        throw QuadratureError("bad quadrature grid request");
    QuadratureGrid g;
    g.extent = 0.5 * separation + margin;
    // even interval count for composite Simpson
    std::size_t n = static_cast<std::size_t>(std::ceil(2.0 * g.extent / step));
    if (n % 2 != 0) ++n;
    if (n < 2) n = 2;
    g.step = 2.0 * g.extent / static_cast<double>(n);
    g.nodes.resize(n + 1);
    g.weights.resize(n + 1);
    const double h3 = g.step / 3.0;
    for (std::size_t j = 0; j <= n; ++j) {
        g.nodes[j] = -g.extent + static_cast<double>(j) * g.step;
        g.weights[j] = h3 * ((j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0));
    }
    return g;
}

std::complex<double> quad_displaced_overlap(wavepacket::Well bra, wavepacket::Well ket,
                                            const Vec3& q, const Vec3& d_vec,
                                            const QuadratureGrid& grid) {
    const double sep = norm(d_vec);
    check_grid(grid, sep);
    const AxisFrame f = axis_frame(d_vec);
    const double c_bra = (bra == wavepacket::Well::Right) ? 0.5 * sep : -0.5 * sep;
    const double c_ket = (ket == wavepacket::Well::Right) ? 0.5 * sep : -0.5 * sep;
    const cplx along = quad_product_fourier(grid, c_bra, c_ket, dot(q, f.u));
    const cplx t1 = quad_product_fourier(grid, 0.0, 0.0, dot(q, f.v));
    const cplx t2 = quad_product_fourier(grid, 0.0, 0.0, dot(q, f.w));
    return along * t1 * t2;
}

double quad_norm_sq(const wavepacket::AtomState& state, double separation,
                    const QuadratureGrid& grid) {
    check_grid(grid, separation);
    // <psi|psi> with N = 1, assembled from packet overlaps:
    // cos^2 + sin^2 + 2 cos sin cos(phi) <left|right>
    const double eps_q =
        quad_product_fourier(grid, -0.5 * separation, 0.5 * separation, 0.0).real();
    const double c = std::cos(state.theta), s = std::sin(state.theta);
    return c * c + s * s + 2.0 * c * s * std::cos(state.phi) * eps_q;
}

EigenbasisModel EigenbasisModel::build(const wavepacket::AtomState& state, const Vec3& dk,
                                       const Vec3& d_vec, double splitting,
                                       const QuadratureGrid& grid) {
    const double sep = norm(d_vec);
    check_grid(grid, sep);

    EigenbasisModel m;
    m.splitting = splitting;
    m.eps = quad_product_fourier(grid, -0.5 * sep, 0.5 * sep, 0.0).real();
    if (m.eps >= 1.0 - 1e-12)
        throw QuadratureError("quadrature eps >= 1: doublet degenerate");

    using wavepacket::Well;
    const cplx o_ll = quad_displaced_overlap(Well::Left, Well::Left, dk, d_vec, grid);
    const cplx o_lr = quad_displaced_overlap(Well::Left, Well::Right, dk, d_vec, grid);
    const cplx o_rl = quad_displaced_overlap(Well::Right, Well::Left, dk, d_vec, grid);
    const cplx o_rr = quad_displaced_overlap(Well::Right, Well::Right, dk, d_vec, grid);

    const double s_norm = 2.0 * (1.0 + m.eps);
    const double a_norm = 2.0 * (1.0 - m.eps);
    const double x_norm = 2.0 * std::sqrt((1.0 - m.eps) * (1.0 + m.eps));
    m.m_ss = (o_ll + o_lr + o_rl + o_rr) / s_norm;
    m.m_aa = (o_rr - o_rl - o_lr + o_ll) / a_norm;
    m.m_as = (o_rl + o_rr - o_ll - o_lr) / x_norm;
    m.m_sa = (o_lr - o_ll + o_rr - o_rl) / x_norm;

    // initial coefficients from quadrature inner products (Gram-Schmidt over
    // the packet pair, eps from the grid rather than the closed form)
    const double nn = quad_norm_sq(state, sep, grid);
    if (!(nn > 0.0)) throw QuadratureError("null state in eigenbasis build");
    const double n = 1.0 / std::sqrt(nn);
    const cplx e_phi = std::exp(cplx{0.0, state.phi});
    const double ct = std::cos(state.theta), st = std::sin(state.theta);
    m.c_sym = n * std::sqrt(0.5 * (1.0 + m.eps)) * (ct + e_phi * st);
    m.c_anti = n * std::sqrt(0.5 * (1.0 - m.eps)) * (e_phi * st - ct);
    return m;
}

EigenSpectrum spectrum_from_eigenbasis(const EigenbasisModel& model, double pulse_time) {
    auto a2 = [](const cplx& z) { return z.real() * z.real() + z.imag() * z.imag(); };
    EigenSpectrum out;
    out.lines = {
        {0.0, a2(model.c_sym) * a2(model.m_ss) + a2(model.c_anti) * a2(model.m_aa)},
        {-model.splitting, a2(model.c_sym) * a2(model.m_as)},
        {+model.splitting, a2(model.c_anti) * a2(model.m_sa)},
    };
    out.resolved = model.splitting * pulse_time / kTwoPi >= 10.0;
    return out;
}

double raman_momentum_oracle(const wavepacket::AtomState& state, const Vec3& dk,
                             const Vec3& d_vec, const QuadratureGrid& grid) {
    const double sep = norm(d_vec);
    check_grid(grid, sep);
    const AxisFrame f = axis_frame(d_vec);
    const double q_par = dot(dk, f.u);

    // axis FT of the (unnormalized) superposition: cos(theta) packet at -d/2
    // plus e^{i phi} sin(theta) packet at +d/2
    const cplx f_left = quad_fourier_amplitude(grid, -0.5 * sep, q_par);
    const cplx f_right = quad_fourier_amplitude(grid, 0.5 * sep, q_par);
    const cplx e_phi = std::exp(cplx{0.0, state.phi});
    const cplx f_par = std::cos(state.theta) * f_left + e_phi * std::sin(state.theta) * f_right;

    const cplx f_t1 = quad_fourier_amplitude(grid, 0.0, dot(dk, f.v));
    const cplx f_t2 = quad_fourier_amplitude(grid, 0.0, dot(dk, f.w));

    const double nn = quad_norm_sq(state, sep, grid);
    if (!(nn > 0.0)) throw QuadratureError("null state in momentum oracle");
    auto a2 = [](const cplx& z) { return z.real() * z.real() + z.imag() * z.imag(); };
    return a2(f_par) * a2(f_t1) * a2(f_t2) / nn;
}

namespace {

// Int_0^T e^{i u tau} dtau by composite Simpson with n intervals
cplx quad_time_integral(double u, double pulse_time, int n) {
    const double h = pulse_time / n;
    double re = 0.0, im = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double w = (j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        const double tau = h * j;
        re += w * std::cos(u * tau);
        im += w * std::sin(u * tau);
    }
    return cplx{re, im} * (h / 3.0);
}

double time_spectrum_at(const EigenbasisModel& m, double pulse_time, double omega, int n_time) {
    // amp_f = Sum_X c_X m_fX Int e^{i(omega + E_f - E_X) tau}; E_S = 0, E_A = splitting
    const cplx i_sym_sym = quad_time_integral(omega, pulse_time, n_time);
    const cplx i_sym_anti = quad_time_integral(omega - m.splitting, pulse_time, n_time);
    const cplx i_anti_sym = quad_time_integral(omega + m.splitting, pulse_time, n_time);
    const cplx amp_s = m.c_sym * m.m_ss * i_sym_sym + m.c_anti * m.m_sa * i_sym_anti;
    const cplx amp_a = m.c_sym * m.m_as * i_anti_sym + m.c_anti * m.m_aa * i_sym_sym;
    const double p = std::norm(amp_s) + std::norm(amp_a);
    return p / (kTwoPi * pulse_time);
}

void validate_time_args(double pulse_time, int n_time) {
    if (!(pulse_time > 0.0)) throw DomainError("observation time must be positive");
    if (n_time < 2 || n_time % 2 != 0)
        throw QuadratureError("time quadrature needs an even interval count >= 2");
    if (n_time > 100000)
        throw QuadratureError("time quadrature cost guard: n_time > 1e5 refused");
}

}  // namespace

std::vector<double> time_integral_check(const EigenbasisModel& model, double pulse_time,
                                        const std::vector<double>& omegas, int n_time,
                                        int threads) {
    validate_time_args(pulse_time, n_time);
    std::vector<double> out(omegas.size());
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(omegas.size()); ++i)
        out[static_cast<std::size_t>(i)] =
            time_spectrum_at(model, pulse_time, omegas[static_cast<std::size_t>(i)], n_time);
    (void)nt;
    return out;
}

std::vector<double> time_integral_check_serial(const EigenbasisModel& model, double pulse_time,
                                               const std::vector<double>& omegas, int n_time) {
    validate_time_args(pulse_time, n_time);
    std::vector<double> out(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i)
        out[i] = time_spectrum_at(model, pulse_time, omegas[i], n_time);
    return out;
}

}  // namespace fringe::oracle
