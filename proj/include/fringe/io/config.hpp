#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fringe/params.hpp"

namespace fringe::io {

// Detector-angle grid, plus the frequency grid for rayleigh-spectrum runs.
struct ScanSpec {
    std::vector<double> phi_grid;
    std::vector<double> omega_grid;
};

struct SweepSpec {
    std::string parameter; // separation | lamb_dicke | state_theta | state_phase
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    std::vector<std::string> observables; // epsilon | visibility | fit_visibility |
                                          // fit_phase | fit_period | peak_intensity
};

struct RunConfig {
    Params params;
    ScanSpec scan;
    std::optional<SweepSpec> sweep;
    std::string output_path; // empty -> stdout
    bool si_input = false;   // parsed from an SI config (informational)
    int oracle_samples = 0;  // [oracle] samples; 0 = not set (CLI default applies)
};

enum class UnitOverride { None, Si, Dimensionless };

// Parses the key-value config (grammar in README). Unknown sections or keys
// are hard errors (ConfigError), as are missing required keys, bad numbers and
// inconsistent unit modes. The SI branch converts to the dimensionless Params
// exactly once.
RunConfig load_config(const std::string& path, UnitOverride override_mode);

// count >= 2: evenly spaced inclusive of both ends; count == 1: {lo}.
// count <= 0 or hi < lo -> ConfigError.
std::vector<double> linspace(double lo, double hi, int count);

// "%.17g" (round-trip exact); the only float formatter used in outputs.
std::string format_g17(double v);

}  // namespace fringe::io
