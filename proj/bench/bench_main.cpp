// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Also double-checks that both produce identical bytes
// (the real assertion lives in the test suite; here it guards the timings).
//
// Usage: fringe_bench [threads]   (default: library default)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "fringe/analysis.hpp"
#include "fringe/io/config.hpp"
#include "fringe/oracle.hpp"
#include "fringe/params.hpp"
#include "fringe/scattering.hpp"

using clock_type = std::chrono::steady_clock;

static double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

static bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

int main(int argc, char** argv) {
    const int threads = (argc > 1) ? std::atoi(argv[1]) : 0;

    fringe::Params p;
    p.separation = 2.0;
    p.splitting = 0.05;
    p.state = {0.78539816339744828, 0.0};
    p.lamb_dicke = 1.0;
    p.detuning = 200.0;
    p.pulse_time = 2000.0;

    const auto phi = fringe::io::linspace(0.0, 6.283185307179586, 481);
    const auto omega = fringe::io::linspace(-0.12, 0.12, 961);

    std::printf("kernel                      serial [ms]   openmp [ms]   speedup  identical\n");

    {
        auto t0 = clock_type::now();
        const auto serial = fringe::scattering::rayleigh_spectrum_serial(p, phi, omega);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const auto parallel = fringe::scattering::rayleigh_spectrum(p, phi, omega, threads);
        const double t_par = ms_since(t0);
        std::printf("rayleigh_spectrum %10s %11.1f %13.1f %9.2f  %s\n", "", t_serial, t_par,
                    t_serial / t_par, same_bits(serial.total, parallel.total) ? "yes" : "NO");
    }

    {
        const auto phi_dense = fringe::io::linspace(0.0, 6.283185307179586, 200001);
        auto t0 = clock_type::now();
        const auto serial = fringe::scattering::broadband_intensity_serial(p, phi_dense);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const auto parallel = fringe::scattering::broadband_intensity(p, phi_dense, threads);
        const double t_par = ms_since(t0);
        std::printf("broadband_intensity %8s %11.1f %13.1f %9.2f  %s\n", "", t_serial, t_par,
                    t_serial / t_par, same_bits(serial.raw, parallel.raw) ? "yes" : "NO");
    }

    {
        const auto seps = fringe::io::linspace(0.5, 8.0, 31);
        auto t0 = clock_type::now();
        const auto serial = fringe::analysis::visibility_vs_epsilon_serial(seps);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const auto parallel = fringe::analysis::visibility_vs_epsilon(seps, threads);
        const double t_par = ms_since(t0);
        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].visibility == parallel[i].visibility;
        std::printf("visibility_vs_epsilon %6s %11.1f %13.1f %9.2f  %s\n", "", t_serial, t_par,
                    t_serial / t_par, same ? "yes" : "NO");
    }

    {
        const fringe::Vec3 dk{0.6, -1.1, 0.0};
        const fringe::Vec3 d_vec{0.0, 2.0, 0.0};
        const auto grid = fringe::oracle::QuadratureGrid::make(2.0);
        const auto model = fringe::oracle::EigenbasisModel::build(p.state, dk, d_vec, 0.05, grid);
        const auto omegas = fringe::io::linspace(-0.12, 0.12, 1201);
        auto t0 = clock_type::now();
        const auto serial =
            fringe::oracle::time_integral_check_serial(model, 2000.0, omegas, 20000);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        const auto parallel =
            fringe::oracle::time_integral_check(model, 2000.0, omegas, 20000, threads);
        const double t_par = ms_since(t0);
        std::printf("time_integral_check %8s %11.1f %13.1f %9.2f  %s\n", "", t_serial, t_par,
                    t_serial / t_par, same_bits(serial, parallel) ? "yes" : "NO");
    }

    return 0;
}
