#pragma once

#include <cstdint>
#include <random>

namespace fringe {

// Seeded RNG with an explicit engine-to-double mapping. We avoid
// std::uniform_real_distribution on purpose: its output sequence is
// implementation-defined, and oracle-check reports must be byte-identical for
// a given seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace fringe
