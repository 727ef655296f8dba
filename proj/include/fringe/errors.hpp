#pragma once

#include <stdexcept>
#include <string>

namespace fringe {

// Bad or inconsistent user input (config files, CLI arguments, malformed
// geometry vectors). The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameters outside the model's domain of validity (degenerate overlap,
// zero detuning, null state, ...). CLI exit code 3.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Oracle quadrature failed its own sanity checks (grid too coarse, cost guard).
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fringe fit could not produce a valid model (rank-deficient design, V > 1).
struct FitError : std::runtime_error {
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fringe
