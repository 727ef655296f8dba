#include "fringe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fringe/errors.hpp"
#include "fringe/scattering.hpp"
#include "fringe/threads.hpp"
#include "fringe/wavepacket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fringe::analysis {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;

struct LinearFit {
    double a = 0.0, b = 0.0, c = 0.0; // z ~ a + b cos(s x) + c sin(s x)
    double rss = std::numeric_limits<double>::infinity();
    bool ok = false;
};

// Normal-equation solve of the 3-parameter model at fixed frequency s.
LinearFit linear_fringe_fit(const std::vector<double>& x, const std::vector<double>& z,
                            double s) {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double basis[3] = {1.0, std::cos(s * x[i]), std::sin(s * x[i])};
        for (int r = 0; r < 3; ++r) {
            rhs[r] += basis[r] * z[i];
            for (int c = r; c < 3; ++c) m[r][c] += basis[r] * basis[c];
        }
    }
    m[1][0] = m[0][1];
    m[2][0] = m[0][2];
    m[2][1] = m[1][2];

    // Gaussian elimination with partial pivoting on the 3x3 system
    double aug[3][4];
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) aug[r][c] = m[r][c];
        aug[r][3] = rhs[r];
    }
    const double scale = std::max({std::abs(m[0][0]), std::abs(m[1][1]), std::abs(m[2][2]), 1e-30});
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
        if (std::abs(aug[piv][col]) < 1e-12 * scale) return {}; // rank-deficient at this s
        if (piv != col)
            for (int c = 0; c < 4; ++c) std::swap(aug[piv][c], aug[col][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = aug[r][col] / aug[col][col];
            for (int c = col; c < 4; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    LinearFit fit;
    fit.a = aug[0][3] / aug[0][0];
    fit.b = aug[1][3] / aug[1][1];
    fit.c = aug[2][3] / aug[2][2];
    fit.rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = z[i] - (fit.a + fit.b * std::cos(s * x[i]) + fit.c * std::sin(s * x[i]));
        fit.rss += r * r;
    }
    fit.ok = true;
    return fit;
}

double scan_rss(const std::vector<double>& x, const std::vector<double>& z, double s) {
    const LinearFit f = linear_fringe_fit(x, z, s);
    return f.ok ? f.rss : std::numeric_limits<double>::infinity();
}

}  // namespace

double visibility(const std::vector<double>& samples) {
    if (samples.empty()) throw DomainError("visibility needs at least one sample");
    double lo = samples[0], hi = samples[0];
    for (double v : samples) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("visibility input must be finite and non-negative");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi <= 0.0) throw DomainError("visibility undefined for an all-zero signal");
    return (hi - lo) / (hi + lo);
}

FringeFit fit_fringe(const std::vector<double>& dk_dot_d, const std::vector<double>& dk_abs,
                     const std::vector<double>& envelope_normalized,
                     const std::vector<double>& raw) {
    const std::size_t n = dk_dot_d.size();
    if (n < 8 || dk_abs.size() != n || envelope_normalized.size() != n || raw.size() != n)
        throw FitError("fringe fit needs >= 8 aligned samples");

    // Frequency scan: coarse pass over s = 2 pi / period, then golden-section
    // refinement around the best cell. Covers periods from ~1.5 to 8 pi, which
    // brackets the 2 pi fringes and the 4 pi elastic component.
    const double s_lo = 0.25, s_hi = 4.0;
    const int n_scan = 376;
    double best_s = 1.0, best_rss = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_scan; ++k) {
        const double s = s_lo + (s_hi - s_lo) * k / (n_scan - 1);
        const double rss = scan_rss(dk_dot_d, envelope_normalized, s);
        if (rss < best_rss) {
            best_rss = rss;
            best_s = s;
        }
    }
    if (!std::isfinite(best_rss))
        throw FitError("fringe fit design is rank-deficient (x span too narrow)");

    {
        const double gold = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = best_s - 0.02, b = best_s + 0.02;
        double c = b - gold * (b - a), d = a + gold * (b - a);
        double fc = scan_rss(dk_dot_d, envelope_normalized, c);
        double fd = scan_rss(dk_dot_d, envelope_normalized, d);
        while (b - a > 1e-10) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - gold * (b - a);
                fc = scan_rss(dk_dot_d, envelope_normalized, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gold * (b - a);
                fd = scan_rss(dk_dot_d, envelope_normalized, d);
            }
        }
        best_s = 0.5 * (a + b);
    }

    const LinearFit lin = linear_fringe_fit(dk_dot_d, envelope_normalized, best_s);
    if (!lin.ok) throw FitError("fringe fit design is rank-deficient (x span too narrow)");

    FringeFit out;
    out.period = kTwoPi / best_s;
    out.amplitude = lin.a;
    if (!(lin.a > 0.0)) throw FitError("fringe fit baseline is not positive");
    const double amp = std::hypot(lin.b, lin.c);
    double v = amp / lin.a;
    if (v > 1.0 + 1e-6) throw FitError("fringe fit violates the model: V > 1");
    out.visibility = std::min(v, 1.0);
    double ph = std::atan2(lin.c, lin.b);
    if (ph < 0.0) ph += kTwoPi;
    // a pure-DC signal has no phase; pin it to 0 instead of atan2 noise
    if (amp <= 1e-12 * std::abs(lin.a)) ph = 0.0;
    out.phase = ph;
    out.residual_norm = std::sqrt(lin.rss / static_cast<double>(n));

    // envelope from the raw/normalized ratio (prefactor cancels)
    std::vector<double> ratio(n);
    bool ratio_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (envelope_normalized[i] <= 0.0 || raw[i] <= 0.0) {
            ratio_ok = false;
            break;
        }
        ratio[i] = raw[i] / envelope_normalized[i];
    }
    out.envelope_width = ratio_ok ? gaussian_envelope_width(dk_abs, ratio) : 0.0;
    return out;
}

double gaussian_envelope_width(const std::vector<double>& dk_abs, const std::vector<double>& y) {
    const std::size_t n = dk_abs.size();
    if (n < 2 || y.size() != n) throw FitError("envelope width fit needs >= 2 aligned samples");
    // OLS of ln y on r^2; width w = 1/sqrt(-slope)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(y[i] > 0.0)) throw FitError("envelope width fit needs positive samples");
        const double r2 = dk_abs[i] * dk_abs[i];
        const double ly = std::log(y[i]);
        sx += r2;
        sy += ly;
        sxx += r2 * r2;
        sxy += r2 * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12 * std::max(sxx, 1.0))
        throw FitError("envelope width fit degenerate: no spread in |dk|");
    const double slope = (n * sxy - sx * sy) / denom;
    if (!(slope < 0.0)) throw FitError("envelope width fit found no Gaussian decay");
    return 1.0 / std::sqrt(-slope);
}

double broadband_fringe_visibility(const wavepacket::AtomState& state, double eps) {
    // scan one full fringe period on a dense grid; 4 pi covers the elastic
    // component's period (2 pi would truncate it for eps > 0)
    constexpr int kSamples = 8193;
    const auto coeffs = wavepacket::doublet_decompose(state.theta, state.phi, eps);
    std::vector<double> b(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double x = 4.0 * kPi * i / (kSamples - 1);
        const auto comp = scattering::rayleigh_from_doublet(coeffs, x, eps);
        b[static_cast<std::size_t>(i)] = comp.elastic + comp.stokes + comp.antistokes;
    }
    return visibility(b);
}

namespace {

VisibilityPoint visibility_point(double separation) {
    VisibilityPoint pt;
    pt.separation = separation;
    pt.eps = wavepacket::overlap_epsilon(separation).value;
    pt.visibility = broadband_fringe_visibility({kPi / 4.0, 0.0}, pt.eps);
    return pt;
}

}  // namespace

std::vector<VisibilityPoint> visibility_vs_epsilon(const std::vector<double>& separations,
                                                   int threads) {
    if (separations.empty()) throw DomainError("visibility sweep needs at least one separation");
    for (double d : separations)
        if (wavepacket::overlap_epsilon(d).value >= 1.0 - 1e-12)
            throw DomainError("visibility sweep: separation too small (doublet degenerate)");
    std::vector<VisibilityPoint> out(separations.size());
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(separations.size()); ++i)
        out[static_cast<std::size_t>(i)] =
            visibility_point(separations[static_cast<std::size_t>(i)]);
    (void)nt;
    return out;
}

std::vector<VisibilityPoint> visibility_vs_epsilon_serial(
    const std::vector<double>& separations) {
    if (separations.empty()) throw DomainError("visibility sweep needs at least one separation");
    for (double d : separations)
        if (wavepacket::overlap_epsilon(d).value >= 1.0 - 1e-12)
            throw DomainError("visibility sweep: separation too small (doublet degenerate)");
    std::vector<VisibilityPoint> out(separations.size());
    for (std::size_t i = 0; i < separations.size(); ++i)
        out[i] = visibility_point(separations[i]);
    return out;
}

}  // namespace fringe::analysis
