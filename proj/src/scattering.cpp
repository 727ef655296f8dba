#include "fringe/scattering.hpp"

#include <cmath>

#include "fringe/errors.hpp"
#include "fringe/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fringe::scattering {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;
constexpr double kEpsDegenerate = 1.0 - 1e-12;

double abs2(const std::complex<double>& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// Everything the per-angle kernels need, computed once up front so the
// parallel loop bodies cannot throw.
struct KernelSetup {
    double eps = 0.0;
    double prefactor = 0.0;
    wavepacket::DoubletCoeffs coeffs; // rayleigh channels only
    double norm_sq = 1.0;             // raman channel only
};

KernelSetup setup_rayleigh(const Params& p) {
    KernelSetup s;
    s.eps = wavepacket::overlap_epsilon(p.separation).value;
    s.prefactor = rate_prefactor(p.gamma, p.rabi, p.detuning, p.dipole);
    s.coeffs = wavepacket::doublet_decompose(p.state.theta, p.state.phi, s.eps);
    if (!(p.lamb_dicke > 0.0)) throw DomainError("Lamb-Dicke parameter must be positive");
    return s;
}

}  // namespace

RayleighComponents rayleigh_from_doublet(const wavepacket::DoubletCoeffs& coeffs,
                                         double dk_dot_d, double eps) {
    const auto m = wavepacket::doublet_matrix_elements(dk_dot_d, eps);
    RayleighComponents out;
    // distinguishable final states -> incoherent sum for the elastic line
    out.elastic = abs2(coeffs.c_sym) * abs2(m.m_ss) + abs2(coeffs.c_anti) * abs2(m.m_aa);
    out.stokes = abs2(coeffs.c_sym) * abs2(m.m_as);
    out.antistokes = abs2(coeffs.c_anti) * abs2(m.m_sa);
    out.envelope = 1.0;
    return out;
}

RayleighComponents rayleigh_coefficients(const wavepacket::AtomState& state, double dk_dot_d,
                                         double eps) {
    return rayleigh_from_doublet(wavepacket::doublet_decompose(state.theta, state.phi, eps),
                                 dk_dot_d, eps);
}

RayleighComponents rayleigh_components(const wavepacket::AtomState& state,
                                       const geometry::MomentumTransfer& mt, double eps) {
    RayleighComponents out = rayleigh_coefficients(state, mt.dk_dot_d, eps);
    out.envelope = std::exp(-mt.dk_abs * mt.dk_abs);
    return out;
}

double rate_prefactor(double gamma, double rabi, double detuning, double dipole) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    if (!(dipole > 0.0)) throw DomainError("dipole factor must be positive");
    if (detuning == 0.0)
        throw DomainError("far-detuned model invalid at zero detuning");
    const double r = rabi / detuning;
    return gamma * dipole * r * r;
}

namespace {

// One spectrum row (all omega samples at fixed phi). Shared by the OpenMP and
// serial drivers so the arithmetic is identical.
void spectrum_row(const Params& p, const KernelSetup& s, double phi,
                  const std::vector<double>& omega_grid, std::size_t row_start,
                  AngularSpectrum& out) {
    const auto mt =
        geometry::momentum_transfer_at_angle(p.geom, p.lamb_dicke, p.separation, phi);
    const auto comp = rayleigh_from_doublet(s.coeffs, mt.dk_dot_d, s.eps);
    const double env = std::exp(-mt.dk_abs * mt.dk_abs);
    const double scale = s.prefactor * env;
    for (std::size_t j = 0; j < omega_grid.size(); ++j) {
        const double w = omega_grid[j];
        const double el = scale * comp.elastic * lineshape::diffraction(w, p.pulse_time);
        const double st =
            scale * comp.stokes * lineshape::diffraction(w + p.splitting, p.pulse_time);
        const double as =
            scale * comp.antistokes * lineshape::diffraction(w - p.splitting, p.pulse_time);
        const std::size_t idx = row_start + j;
        out.elastic[idx] = el;
        out.stokes[idx] = st;
        out.antistokes[idx] = as;
        out.total[idx] = el + st + as;
    }
}

AngularSpectrum spectrum_alloc(const Params& p, const std::vector<double>& phi_grid,
                               const std::vector<double>& omega_grid) {
    if (phi_grid.empty() || omega_grid.empty())
        throw DomainError("spectrum grids must be non-empty");
    if (!(p.pulse_time > 0.0)) throw DomainError("observation time must be positive");
    AngularSpectrum out;
    out.phi = phi_grid;
    out.omega = omega_grid;
    const std::size_t n = phi_grid.size() * omega_grid.size();
    out.total.resize(n);
    out.elastic.resize(n);
    out.stokes.resize(n);
    out.antistokes.resize(n);
    out.params_hash = params_hash(p);
    out.resolution = lineshape::resolution_report(p.splitting, p.pulse_time, p.lamb_dicke,
                                                  p.linewidth, p.separation, p.laser_frequency);
    return out;
}

}  // namespace

AngularSpectrum rayleigh_spectrum(const Params& p, const std::vector<double>& phi_grid,
                                  const std::vector<double>& omega_grid, int threads) {
    AngularSpectrum out = spectrum_alloc(p, phi_grid, omega_grid);
    const KernelSetup s = setup_rayleigh(p);
    const int nt = resolve_threads(threads);
    const std::size_t n_phi = phi_grid.size();
    const std::size_t n_w = omega_grid.size();
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_phi); ++i) {
        spectrum_row(p, s, phi_grid[static_cast<std::size_t>(i)], omega_grid,
                     static_cast<std::size_t>(i) * n_w, out);
    }
    (void)nt;
    return out;
}

AngularSpectrum rayleigh_spectrum_serial(const Params& p, const std::vector<double>& phi_grid,
                                         const std::vector<double>& omega_grid) {
    AngularSpectrum out = spectrum_alloc(p, phi_grid, omega_grid);
    const KernelSetup s = setup_rayleigh(p);
    for (std::size_t i = 0; i < phi_grid.size(); ++i)
        spectrum_row(p, s, phi_grid[i], omega_grid, i * omega_grid.size(), out);
    return out;
}

namespace {

void broadband_point(const Params& p, const KernelSetup& s, bool degenerate, std::size_t i,
                     BroadbandProfile& out) {
    const auto mt =
        geometry::momentum_transfer_at_angle(p.geom, p.lamb_dicke, p.separation, out.phi[i]);
    const double env = std::exp(-mt.dk_abs * mt.dk_abs);
    double coef_sum;
    if (degenerate) {
        // eps -> 1 limit (D = 0): single packet, purely elastic, flat profile
        coef_sum = 1.0;
    } else {
        const auto comp = rayleigh_from_doublet(s.coeffs, mt.dk_dot_d, s.eps);
        coef_sum = comp.elastic + comp.stokes + comp.antistokes;
    }
    out.dk_dot_d[i] = mt.dk_dot_d;
    out.dk_abs[i] = mt.dk_abs;
    out.raw[i] = s.prefactor * env * coef_sum;
    out.envelope_normalized[i] = s.prefactor * coef_sum;
}

struct BroadbandSetup {
    KernelSetup kernel;
    bool degenerate = false;
};

BroadbandSetup setup_broadband(const Params& p) {
    BroadbandSetup b;
    b.kernel.eps = wavepacket::overlap_epsilon(p.separation).value;
    b.kernel.prefactor = rate_prefactor(p.gamma, p.rabi, p.detuning, p.dipole);
    if (!(p.lamb_dicke > 0.0)) throw DomainError("Lamb-Dicke parameter must be positive");
    b.degenerate = b.kernel.eps >= kEpsDegenerate;
    if (!b.degenerate)
        b.kernel.coeffs = wavepacket::doublet_decompose(p.state.theta, p.state.phi, b.kernel.eps);
    return b;
}

BroadbandProfile broadband_alloc(const std::vector<double>& phi_grid) {
    if (phi_grid.empty()) throw DomainError("angular grid must be non-empty");
    BroadbandProfile out;
    out.phi = phi_grid;
    out.dk_dot_d.resize(phi_grid.size());
    out.dk_abs.resize(phi_grid.size());
    out.raw.resize(phi_grid.size());
    out.envelope_normalized.resize(phi_grid.size());
    return out;
}

}  // namespace

BroadbandProfile broadband_intensity(const Params& p, const std::vector<double>& phi_grid,
                                     int threads) {
    BroadbandProfile out = broadband_alloc(phi_grid);
    const BroadbandSetup b = setup_broadband(p);
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(phi_grid.size()); ++i)
        broadband_point(p, b.kernel, b.degenerate, static_cast<std::size_t>(i), out);
    (void)nt;
    return out;
}

BroadbandProfile broadband_intensity_serial(const Params& p,
                                            const std::vector<double>& phi_grid) {
    BroadbandProfile out = broadband_alloc(phi_grid);
    const BroadbandSetup b = setup_broadband(p);
    for (std::size_t i = 0; i < phi_grid.size(); ++i) broadband_point(p, b.kernel, b.degenerate, i, out);
    return out;
}

RamanIntensity raman_intensity(const wavepacket::AtomState& state,
                               const geometry::MomentumTransfer& mt, double eps,
                               double final_offset) {
    RamanIntensity out;
    const double n = wavepacket::normalization(state.theta, state.phi, eps);
    out.bracket = 1.0 + std::sin(2.0 * state.theta) * std::cos(mt.dk_dot_d - state.phi);
    out.envelope = std::exp(-2.0 * mt.dk_abs * mt.dk_abs);
    out.norm = n * n * std::pow(2.0 / kPi, 1.5);
    out.line_center = final_offset + geometry::recoil_shift(mt);
    return out;
}

double raman_spectral_density(const RamanIntensity& ri, double omega, double pulse_time,
                              double prefactor) {
    return prefactor * ri.norm * ri.envelope * ri.bracket *
           lineshape::diffraction(omega - ri.line_center, pulse_time);
}

namespace {

struct RamanSetup {
    double eps = 0.0;
    double prefactor = 0.0;
    double peak_diffraction = 0.0; // T / 2 pi
};

RamanSetup setup_raman(const Params& p) {
    RamanSetup s;
    s.eps = wavepacket::overlap_epsilon(p.separation).value;
    s.prefactor = rate_prefactor(p.gamma, p.rabi, p.detuning, p.dipole);
    if (!(p.lamb_dicke > 0.0)) throw DomainError("Lamb-Dicke parameter must be positive");
    if (!(p.pulse_time > 0.0)) throw DomainError("observation time must be positive");
    // validate the state once (null-state error surfaces here, not mid-loop)
    (void)wavepacket::normalization(p.state.theta, p.state.phi, s.eps);
    s.peak_diffraction = p.pulse_time / kTwoPi;
    return s;
}

void raman_point(const Params& p, const RamanSetup& s, std::size_t i, RamanPattern& out) {
    const auto mt =
        geometry::momentum_transfer_at_angle(p.geom, p.lamb_dicke, p.separation, out.phi[i]);
    const auto ri = raman_intensity(p.state, mt, s.eps, p.final_offset);
    const double at_center = s.prefactor * s.peak_diffraction * ri.norm;
    out.dk_dot_d[i] = mt.dk_dot_d;
    out.dk_abs[i] = mt.dk_abs;
    out.intensity[i] = at_center * ri.envelope * ri.bracket;
    out.envelope_normalized[i] = at_center * ri.bracket;
}

RamanPattern raman_alloc(const Params& p, const std::vector<double>& phi_grid) {
    if (phi_grid.empty()) throw DomainError("angular grid must be non-empty");
    RamanPattern out;
    out.phi = phi_grid;
    out.dk_dot_d.resize(phi_grid.size());
    out.dk_abs.resize(phi_grid.size());
    out.intensity.resize(phi_grid.size());
    out.envelope_normalized.resize(phi_grid.size());
    out.params_hash = params_hash(p);
    return out;
}

}  // namespace

RamanPattern raman_pattern(const Params& p, const std::vector<double>& phi_grid, int threads) {
    RamanPattern out = raman_alloc(p, phi_grid);
    const RamanSetup s = setup_raman(p);
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(phi_grid.size()); ++i)
        raman_point(p, s, static_cast<std::size_t>(i), out);
    (void)nt;
    return out;
}

RamanPattern raman_pattern_serial(const Params& p, const std::vector<double>& phi_grid) {
    RamanPattern out = raman_alloc(p, phi_grid);
    const RamanSetup s = setup_raman(p);
    for (std::size_t i = 0; i < phi_grid.size(); ++i) raman_point(p, s, i, out);
    return out;
}

}  // namespace fringe::scattering
