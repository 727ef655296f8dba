#include "fringe/params.hpp"

#include <cstdio>

namespace fringe {

namespace {

void append_kv(std::string& out, const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "# %s = %.17g\n", key, v);
    out += buf;
}

}  // namespace

std::string params_echo(const Params& p) {
    std::string out;
    out.reserve(640);
    append_kv(out, "separation", p.separation);
    append_kv(out, "splitting", p.splitting);
    append_kv(out, "theta", p.state.theta);
    append_kv(out, "phi", p.state.phi);
    append_kv(out, "lamb_dicke", p.lamb_dicke);
    append_kv(out, "detuning", p.detuning);
    append_kv(out, "rabi", p.rabi);
    append_kv(out, "pulse_time", p.pulse_time);
    append_kv(out, "linewidth", p.linewidth);
    append_kv(out, "laser_frequency", p.laser_frequency);
    append_kv(out, "gamma", p.gamma);
    append_kv(out, "dipole", p.dipole);
    out += (p.channel == ChannelKind::Rayleigh) ? "# channel = rayleigh\n" : "# channel = raman\n";
    append_kv(out, "final_offset", p.final_offset);
    const auto& g = p.geom;
    char buf[160];
    std::snprintf(buf, sizeof buf, "# k_direction = %.17g %.17g %.17g\n", g.k_in.x, g.k_in.y,
                  g.k_in.z);
    out += buf;
    std::snprintf(buf, sizeof buf, "# well_direction = %.17g %.17g %.17g\n", g.well_axis.x,
                  g.well_axis.y, g.well_axis.z);
    out += buf;
    return out;
}

std::uint64_t params_hash(const Params& p) {
    // FNV-1a 64
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : params_echo(p)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace fringe
