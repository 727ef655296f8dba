#include "fringe/oracle_check.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>

#include "fringe/errors.hpp"
#include "fringe/geometry.hpp"
#include "fringe/oracle.hpp"
#include "fringe/rng.hpp"
#include "fringe/scattering.hpp"
#include "fringe/threads.hpp"
#include "fringe/wavepacket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fringe::oracle {

namespace {

const double kPi = 3.14159265358979323846;
constexpr double kPassThreshold = 1e-8;
constexpr int kOpCount = 7;

const char* kOpNames[kOpCount] = {
    "displaced_overlap", "normalization",   "momentum_density", "rayleigh_elastic",
    "rayleigh_stokes",   "rayleigh_antistokes", "raman_bracket",
};

struct SampleTuple {
    double eta, separation, theta, phi, detector_angle;
    Vec3 q_rand;
};

// Every checked quantity is bounded by one (overlaps, normalized weights), so
// the 1e-6 floor makes the 1e-8 gate mean "1e-8 relative for O(1) values,
// 1e-14 absolute for small ones". A pure relative score cannot work here: at
// probe momenta |q| ~ 6 the true overlap is e^{-18} ~ 1e-8 while the
// quadrature's intrinsic rounding noise is ~1e-16 absolute.
double scaled_error(double closed, double oracle_value) {
    return std::abs(closed - oracle_value) / (1e-6 + std::abs(oracle_value));
}

double scaled_error(const std::complex<double>& closed, const std::complex<double>& oracle_value) {
    return std::abs(closed - oracle_value) / (1e-6 + std::abs(oracle_value));
}

// max scaled error per operation for one tuple; fault injection skews the
// closed elastic weight to exercise the failure path
std::array<double, kOpCount> evaluate_sample(const SampleTuple& t, bool inject_fault) {
    using wavepacket::Well;
    std::array<double, kOpCount> err{};
    const double fault = inject_fault ? 1.0 + 1e-6 : 1.0;

    const auto geom = geometry::ScatterGeometry::perpendicular();
    const Vec3 d_vec = t.separation * geom.well_axis;
    const auto mt =
        geometry::momentum_transfer_at_angle(geom, t.eta, t.separation, t.detector_angle);
    const wavepacket::AtomState state{t.theta, t.phi};
    const double eps = wavepacket::overlap_epsilon(t.separation).value;

    // half the default step: probe momenta reach |q| ~ 6, and the Simpson
    // error on the oscillatory factor grows like (|q| h)^4
    const auto grid = QuadratureGrid::make(t.separation, 0.025);
    const auto wide_grid = QuadratureGrid::make(t.separation, 0.025, 16.0);

    // displaced overlaps: all four well combinations at the physical dk and at
    // the random probe vector
    for (const Vec3& q : {mt.dk, t.q_rand}) {
        for (Well bra : {Well::Left, Well::Right}) {
            for (Well ket : {Well::Left, Well::Right}) {
                const auto closed = wavepacket::displaced_overlap(bra, ket, q, d_vec);
                const auto quad = quad_displaced_overlap(bra, ket, q, d_vec, grid);
                err[0] = std::max(err[0], scaled_error(closed, quad));
            }
        }
    }

    // state normalization vs quadrature <psi|psi>
    const double n_closed = wavepacket::normalization(t.theta, t.phi, eps);
    const double n_quad = 1.0 / std::sqrt(quad_norm_sq(state, t.separation, grid));
    err[1] = scaled_error(n_closed, n_quad);

    // |psi~(q)|^2 at the random probe vector
    const double md_closed = std::norm(wavepacket::momentum_wavefunction(t.q_rand, state, d_vec));
    const double md_quad = raman_momentum_oracle(state, t.q_rand, d_vec, wide_grid);
    err[2] = scaled_error(md_closed, md_quad);

    // Rayleigh line weights vs the eigenbasis spectrum (envelope included)
    const auto comp = scattering::rayleigh_components(state, mt, eps);
    const auto model = EigenbasisModel::build(state, mt.dk, d_vec, 1.0, grid);
    const auto spec = spectrum_from_eigenbasis(model, 1.0);
    err[3] = scaled_error(fault * comp.elastic * comp.envelope, spec.lines[0].weight);
    err[4] = scaled_error(comp.stokes * comp.envelope, spec.lines[1].weight);
    err[5] = scaled_error(comp.antistokes * comp.envelope, spec.lines[2].weight);

    // Raman bracket x envelope x norm vs the momentum-space oracle at dk
    const auto ri = scattering::raman_intensity(state, mt, eps, 0.0);
    const double raman_closed = ri.norm * ri.envelope * ri.bracket;
    const double raman_quad = raman_momentum_oracle(state, mt.dk, d_vec, wide_grid);
    err[6] = scaled_error(raman_closed, raman_quad);

    return err;
}

}  // namespace

CheckReport oracle_check(std::uint64_t seed, int samples, int threads, bool inject_fault) {
    if (samples < 1) throw ConfigError("oracle-check needs at least one sample");

    // draw every tuple up front so results are independent of the thread count
    Rng rng(seed);
    std::vector<SampleTuple> tuples(static_cast<std::size_t>(samples));
    for (auto& t : tuples) {
        t.eta = rng.uniform(0.1, 3.0);
        t.separation = rng.uniform(0.5, 8.0);
        t.theta = rng.uniform(0.0, 0.5 * kPi);
        t.phi = rng.uniform(0.0, 2.0 * kPi);
        t.detector_angle = rng.uniform(0.0, 2.0 * kPi);
        t.q_rand = {rng.uniform(-2.8, 2.8), rng.uniform(-2.8, 2.8), rng.uniform(-2.8, 2.8)};
    }

    std::vector<std::array<double, kOpCount>> errors(tuples.size());
    std::vector<std::string> failures(tuples.size());
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tuples.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            errors[idx] = evaluate_sample(tuples[idx], inject_fault);
        } catch (const std::exception& e) {
            failures[idx] = e.what(); // rethrown outside the parallel region
        }
    }
    (void)nt;
    for (const auto& f : failures)
        if (!f.empty()) throw QuadratureError("oracle-check sample failed: " + f);

    CheckReport report;
    report.seed = seed;
    report.samples = samples;
    report.pass = true;
    for (int op = 0; op < kOpCount; ++op) {
        CheckLine line;
        line.name = kOpNames[op];
        for (const auto& e : errors) line.max_scaled_error = std::max(line.max_scaled_error, e[static_cast<std::size_t>(op)]);
        line.pass = line.max_scaled_error <= kPassThreshold;
        report.pass = report.pass && line.pass;
        report.lines.push_back(line);
    }

    char buf[160];
    std::string& text = report.text;
    text += "fringe-scatter oracle-check\n";
    std::snprintf(buf, sizeof buf, "seed: %llu\n", static_cast<unsigned long long>(seed));
    text += buf;
    std::snprintf(buf, sizeof buf, "samples: %d\n", samples);
    text += buf;
    text += "ranges: eta in [0.1, 3], D in [0.5, 8], theta in [0, pi/2], phi in [0, 2pi), "
            "detector angle in [0, 2pi), probe |q| <= 4.85\n";
    text += "score: max over samples of |closed - oracle| / (1e-6 + |oracle|), pass <= 1e-08\n";
    for (const auto& line : report.lines) {
        std::snprintf(buf, sizeof buf, "%-22s max_scaled_error = %.3e  %s\n", line.name.c_str(),
                      line.max_scaled_error, line.pass ? "PASS" : "FAIL");
        text += buf;
    }
    text += report.pass ? "overall: PASS\n" : "overall: FAIL\n";
    return report;
}

}  // namespace fringe::oracle
