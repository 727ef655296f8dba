#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fringe::oracle {

/*! Batch closed-form-vs-oracle comparison (the `oracle-check` subcommand).
 *
 *  Draws `samples` parameter tuples from the documented ranges
 *  (eta in [0.1, 3], D in [0.5, 8], theta in [0, pi/2], phi in [0, 2pi),
 *  detector angle in [0, 2pi), random |q| <= 5 probe vectors) and compares
 *  every closed form against its quadrature oracle. The per-operation score is
 *  max over samples of |closed - oracle| / (1e-6 + |oracle|); an operation
 *  passes at <= 1e-8. All checked quantities are bounded by one, so the floor
 *  gates O(1) values at 1e-8 relative and small ones at 1e-14 absolute (probe
 *  momenta reach |q| ~ 6 where the true overlap e^{-18} sits below the
 *  quadrature's own rounding noise under a pure relative score).
 */
struct CheckLine {
    std::string name;
    double max_scaled_error = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckLine> lines;
    bool pass = false;
    std::string text; // deterministic rendering, byte-identical per seed
};

// inject_fault skews one closed form on purpose (negative control for the
// test harness; hidden CLI flag).
CheckReport oracle_check(std::uint64_t seed, int samples, int threads, bool inject_fault);

}  // namespace fringe::oracle
