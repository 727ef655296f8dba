#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fringe/analysis.hpp"
#include "fringe/errors.hpp"
#include "fringe/io/config.hpp"
#include "fringe/oracle_check.hpp"
#include "fringe/scattering.hpp"
#include "fringe/wavepacket.hpp"

namespace {

using namespace fringe;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 1;
    int threads = 0; // 0 -> env var -> library default
    bool si = false;
    bool dimensionless = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "config file path")->required();
    cmd->add_option("--out", o.out_path, "output path (default: [output] path or stdout)");
    cmd->add_option("--seed", o.seed, "random seed (oracle-check)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = FRINGE_SCATTER_THREADS or auto)");
    cmd->add_flag("--si", o.si, "force SI interpretation of the config");
    cmd->add_flag("--dimensionless", o.dimensionless, "force dimensionless interpretation");
}

int effective_threads(const CommonOpts& o) {
    if (o.threads > 0) return o.threads;
    if (const char* env = std::getenv("FRINGE_SCATTER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 0;
}

io::RunConfig load(const CommonOpts& o) {
    if (o.si && o.dimensionless)
        throw ConfigError("--si and --dimensionless are mutually exclusive");
    auto mode = io::UnitOverride::None;
    if (o.si) mode = io::UnitOverride::Si;
    if (o.dimensionless) mode = io::UnitOverride::Dimensionless;
    return io::load_config(o.config_path, mode);
}

// single-writer output: build the whole document, then write it in one go
void emit(const CommonOpts& o, const io::RunConfig& rc, const std::string& doc) {
    const std::string path = !o.out_path.empty() ? o.out_path : rc.output_path;
    if (path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path: " + path);
    out << doc;
    if (!out) throw ConfigError("failed writing output path: " + path);
}

void print_resolution(const lineshape::ResolutionReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "resolution: doublet splitting*T/2pi = %.6g -> %s\n",
                  r.doublet_ratio, r.doublet_resolved ? "resolved" : "UNRESOLVED");
    std::cerr << buf;
    std::snprintf(buf, sizeof buf, "resolution: recoil (2 eta)^2*T/2pi = %.6g -> %s\n",
                  r.recoil_ratio, r.recoil_resolved ? "resolved" : "UNRESOLVED");
    std::cerr << buf;
    std::snprintf(buf, sizeof buf, "resolution: linewidth/splitting = %.6g -> %s\n",
                  r.linewidth_to_splitting, r.linewidth_ok ? "ok" : "TOO BROAD");
    std::cerr << buf;
    if (r.transit_checked) {
        std::snprintf(buf, sizeof buf, "resolution: linewidth*d/(2pi c) = %.6g -> %s\n",
                      r.transit_ratio, r.transit_ok ? "ok" : "TOO BROAD");
        std::cerr << buf;
    } else {
        std::cerr << "resolution: transit-time check skipped (laser frequency not provided)\n";
    }
    if (!r.doublet_resolved)
        std::cerr << "warning: doublet unresolved (splitting*T/2pi = " << r.doublet_ratio
                  << " < 10)\n";
    if (!r.recoil_resolved)
        std::cerr << "warning: recoil sidebands unresolved (recoil*T/2pi = " << r.recoil_ratio
                  << " < 10)\n";
    if (!r.linewidth_ok)
        std::cerr << "warning: laser linewidth comparable to the splitting\n";
    if (r.transit_checked && !r.transit_ok)
        std::cerr << "warning: laser linewidth fails the transit-time condition\n";
}

int run_rayleigh_spectrum(const CommonOpts& o) {
    const io::RunConfig rc = load(o);
    if (rc.params.channel != ChannelKind::Rayleigh)
        throw ConfigError("rayleigh-spectrum requires [channel] type = rayleigh");
    if (rc.scan.phi_grid.empty())
        throw ConfigError("rayleigh-spectrum requires [scan] phi_min/phi_max/phi_count");
    if (rc.scan.omega_grid.empty())
        throw ConfigError("rayleigh-spectrum requires [scan] omega_min/omega_max/omega_count");

    const auto spec = scattering::rayleigh_spectrum(rc.params, rc.scan.phi_grid,
                                                    rc.scan.omega_grid, effective_threads(o));
    print_resolution(spec.resolution);

    std::string doc;
    doc += "# fringe-scatter rayleigh-spectrum\n";
    doc += params_echo(rc.params);
    char buf[64];
    std::snprintf(buf, sizeof buf, "# params_hash = %016llx\n",
                  static_cast<unsigned long long>(spec.params_hash));
    doc += buf;
    doc += "phi_rad,omega_over_nu,intensity_total,intensity_elastic,intensity_stokes,"
           "intensity_antistokes\n";
    const std::size_t n_w = spec.omega.size();
    for (std::size_t i = 0; i < spec.phi.size(); ++i) {
        for (std::size_t j = 0; j < n_w; ++j) {
            const std::size_t idx = i * n_w + j;
            doc += io::format_g17(spec.phi[i]);
            doc += ',';
            doc += io::format_g17(spec.omega[j]);
            doc += ',';
            doc += io::format_g17(spec.total[idx]);
            doc += ',';
            doc += io::format_g17(spec.elastic[idx]);
            doc += ',';
            doc += io::format_g17(spec.stokes[idx]);
            doc += ',';
            doc += io::format_g17(spec.antistokes[idx]);
            doc += '\n';
        }
    }
    emit(o, rc, doc);
    return 0;
}

int run_raman_pattern(const CommonOpts& o) {
    const io::RunConfig rc = load(o);
    if (rc.params.channel != ChannelKind::Raman)
        throw ConfigError("raman-pattern requires [channel] type = raman");
    if (rc.scan.phi_grid.empty())
        throw ConfigError("raman-pattern requires [scan] phi_min/phi_max/phi_count");

    const auto pattern =
        scattering::raman_pattern(rc.params, rc.scan.phi_grid, effective_threads(o));
    const auto fit = analysis::fit_fringe(pattern.dk_dot_d, pattern.dk_abs,
                                          pattern.envelope_normalized, pattern.intensity);

    std::string doc;
    doc += "# fringe-scatter raman-pattern\n";
    doc += params_echo(rc.params);
    char buf[64];
    std::snprintf(buf, sizeof buf, "# params_hash = %016llx\n",
                  static_cast<unsigned long long>(pattern.params_hash));
    doc += buf;
    doc += "phi_rad,dk_dot_d,intensity,intensity_envelope_normalized\n";
    for (std::size_t i = 0; i < pattern.phi.size(); ++i) {
        doc += io::format_g17(pattern.phi[i]);
        doc += ',';
        doc += io::format_g17(pattern.dk_dot_d[i]);
        doc += ',';
        doc += io::format_g17(pattern.intensity[i]);
        doc += ',';
        doc += io::format_g17(pattern.envelope_normalized[i]);
        doc += '\n';
    }
    doc += "# fit_visibility = " + io::format_g17(fit.visibility) + "\n";
    doc += "# fit_phase_rad = " + io::format_g17(fit.phase) + "\n";
    doc += "# fit_period_dk_d = " + io::format_g17(fit.period) + "\n";
    doc += "# fit_envelope_width = " + io::format_g17(fit.envelope_width) + "\n";
    doc += "# fit_residual_norm = " + io::format_g17(fit.residual_norm) + "\n";
    emit(o, rc, doc);
    return 0;
}

double sweep_observable(const std::string& name, const io::RunConfig& rc, const Params& p,
                        int threads) {
    if (name == "epsilon") return wavepacket::overlap_epsilon(p.separation).value;
    if (name == "visibility") {
        const double eps = wavepacket::overlap_epsilon(p.separation).value;
        return analysis::broadband_fringe_visibility(p.state, eps);
    }
    if (name == "peak_intensity") {
        if (rc.scan.phi_grid.empty())
            throw ConfigError("sweep observable peak_intensity requires a [scan] phi grid");
        if (p.channel == ChannelKind::Raman) {
            const auto pat = scattering::raman_pattern(p, rc.scan.phi_grid, threads);
            return *std::max_element(pat.intensity.begin(), pat.intensity.end());
        }
        const auto prof = scattering::broadband_intensity(p, rc.scan.phi_grid, threads);
        return *std::max_element(prof.raw.begin(), prof.raw.end());
    }
    // fit_* observables come from the Raman pattern fit over the scan grid
    if (rc.scan.phi_grid.empty())
        throw ConfigError("sweep observable " + name + " requires a [scan] phi grid");
    if (p.channel != ChannelKind::Raman)
        throw ConfigError("sweep observable " + name + " requires [channel] type = raman");
    const auto pat = scattering::raman_pattern(p, rc.scan.phi_grid, threads);
    const auto fit =
        analysis::fit_fringe(pat.dk_dot_d, pat.dk_abs, pat.envelope_normalized, pat.intensity);
    if (name == "fit_visibility") return fit.visibility;
    if (name == "fit_phase") return fit.phase;
    if (name == "fit_period") return fit.period;
    throw ConfigError("unknown sweep observable: " + name);
}

int run_sweep(const CommonOpts& o) {
    const io::RunConfig rc = load(o);
    if (!rc.sweep) throw ConfigError("sweep requires a [sweep] section");
    const auto& sw = *rc.sweep;
    const auto values = io::linspace(sw.min, sw.max, sw.count);
    const int threads = effective_threads(o);

    std::string doc;
    doc += "# fringe-scatter sweep\n";
    doc += params_echo(rc.params);
    doc += "# sweep_parameter = " + sw.parameter + "\n";
    doc += sw.parameter;
    for (const auto& obs : sw.observables) doc += "," + obs;
    doc += '\n';

    for (double v : values) {
        Params p = rc.params;
        if (sw.parameter == "separation")
            p.separation = v;
        else if (sw.parameter == "lamb_dicke")
            p.lamb_dicke = v;
        else if (sw.parameter == "state_theta")
            p.state.theta = v;
        else
            p.state.phi = v; // state_phase (validated at parse time)
        doc += io::format_g17(v);
        for (const auto& obs : sw.observables) {
            doc += ',';
            doc += io::format_g17(sweep_observable(obs, rc, p, threads));
        }
        doc += '\n';
    }
    emit(o, rc, doc);
    return 0;
}

int run_oracle_check(const CommonOpts& o, int samples_flag, bool inject_fault) {
    const io::RunConfig rc = load(o);
    int samples = 200;
    if (rc.oracle_samples > 0) samples = rc.oracle_samples;
    if (samples_flag > 0) samples = samples_flag;
    const auto report = oracle::oracle_check(o.seed, samples, effective_threads(o), inject_fault);
    emit(o, rc, report.text);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fringe-scatter: scattered-light interference from a split atomic wave packet"};
    app.require_subcommand(1);

    CommonOpts opts;
    int samples_flag = 0;
    bool inject_fault = false;

    auto* rayleigh = app.add_subcommand("rayleigh-spectrum",
                                        "angle- and frequency-resolved Rayleigh spectrum (CSV)");
    add_common(rayleigh, opts);
    auto* raman = app.add_subcommand("raman-pattern",
                                     "Raman angular interference pattern with fringe fit (CSV)");
    add_common(raman, opts);
    auto* sweep = app.add_subcommand("sweep", "scalar observables along a parameter sweep (CSV)");
    add_common(sweep, opts);
    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare every closed form against its quadrature oracle");
    add_common(oracle, opts);
    oracle->add_option("--samples", samples_flag, "number of random tuples (default 200)");
    oracle->add_flag("--inject-fault", inject_fault, "")->group(""); // hidden negative control

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rayleigh->parsed()) return run_rayleigh_spectrum(opts);
        if (raman->parsed()) return run_raman_pattern(opts);
        if (sweep->parsed()) return run_sweep(opts);
        return run_oracle_check(opts, samples_flag, inject_fault);
    } catch (const fringe::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
