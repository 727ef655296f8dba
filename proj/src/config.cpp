#include "fringe/io/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "fringe/errors.hpp"

namespace fringe::io {

namespace {

const double kPi = 3.14159265358979323846;
const double kHbar = 1.054571817e-34; // J s
const double kLightSpeed = 299792458.0; // m/s

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

using Section = std::map<std::string, std::string>;

struct ParsedFile {
    std::map<std::string, Section> sections;
};

ParsedFile parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ParsedFile out;
    std::string line, current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // '#' and ';' start comments
        for (char marker : {'#', ';'}) {
            const auto pos = line.find(marker);
            if (pos != std::string::npos) line.erase(pos);
        }
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header");
            current = trim(t.substr(1, t.size() - 2));
            if (current.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            out.sections[current]; // creates (possibly empty) section
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        if (current.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside any [section]");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        if (!out.sections[current].emplace(key, value).second)
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key +
                              "' in [" + current + "]");
    }
    return out;
}

// Section accessor that tracks consumption so leftovers can be reported as
// unknown keys (typos in physics parameters must not pass silently).
class SectionReader {
public:
    SectionReader(ParsedFile& file, const std::string& name) : name_(name) {
        auto it = file.sections.find(name);
        if (it != file.sections.end()) {
            present_ = true;
            pending_ = it->second;
        }
    }

    bool present() const { return present_; }

    bool has(const std::string& key) const { return pending_.count(key) > 0; }

    std::string take_string(const std::string& key) {
        auto it = pending_.find(key);
        if (it == pending_.end())
            throw ConfigError("config: missing required key '" + key + "' in [" + name_ + "]");
        std::string v = it->second;
        pending_.erase(it);
        return v;
    }

    double take_double(const std::string& key) { return to_double(key, take_string(key)); }

    double take_double_or(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return take_double(key);
    }

    long take_long(const std::string& key) {
        const std::string v = take_string(key);
        char* end = nullptr;
        const long out = std::strtol(v.c_str(), &end, 10);
        if (end == v.c_str() || *end != '\0')
            throw ConfigError("config: key '" + key + "' in [" + name_ +
                              "]: not an integer: " + v);
        return out;
    }

    void take_vec3(const std::string& key, double out[3]) {
        std::istringstream ss(take_string(key));
        if (!(ss >> out[0] >> out[1] >> out[2]) || !(ss >> std::ws).eof())
            throw ConfigError("config: key '" + key + "' in [" + name_ +
                              "]: expected three numbers");
    }

    void finish() const {
        if (!pending_.empty())
            throw ConfigError("config: unknown key '" + pending_.begin()->first + "' in [" +
                              name_ + "]");
    }

private:
    double to_double(const std::string& key, const std::string& v) const {
        char* end = nullptr;
        const double out = std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0' || !std::isfinite(out))
            throw ConfigError("config: key '" + key + "' in [" + name_ +
                              "]: not a finite number: " + v);
        return out;
    }

    std::string name_;
    Section pending_;
    bool present_ = false;
};

geometry::ScatterGeometry read_geometry(SectionReader& sec) {
    if (!sec.present()) return geometry::ScatterGeometry::perpendicular();
    const std::string conv =
        sec.has("convention") ? sec.take_string("convention") : "perpendicular";
    geometry::ScatterGeometry g = geometry::ScatterGeometry::perpendicular();
    if (conv == "perpendicular") {
        // default
    } else if (conv == "parallel") {
        g = geometry::ScatterGeometry::parallel();
    } else if (conv == "custom") {
        double k[3], d[3];
        sec.take_vec3("k_direction", k);
        sec.take_vec3("well_direction", d);
        g = geometry::ScatterGeometry::make({k[0], k[1], k[2]}, {d[0], d[1], d[2]});
    } else {
        throw ConfigError("config: [geometry] convention must be perpendicular, parallel or "
                          "custom, got '" +
                          conv + "'");
    }
    sec.finish();
    return g;
}

ChannelKind read_channel(SectionReader& sec, double* final_offset, bool si) {
    if (!sec.present())
        throw ConfigError("config: missing required section [channel]");
    const std::string type = sec.take_string("type");
    ChannelKind kind;
    if (type == "rayleigh")
        kind = ChannelKind::Rayleigh;
    else if (type == "raman")
        kind = ChannelKind::Raman;
    else
        throw ConfigError("config: [channel] type must be rayleigh or raman, got '" + type + "'");
    *final_offset = sec.take_double_or(si ? "final_offset_rad_s" : "final_offset", 0.0);
    sec.finish();
    return kind;
}

void read_scan(SectionReader& sec, ScanSpec* scan) {
    if (!sec.present()) return;
    if (sec.has("phi_min") || sec.has("phi_max") || sec.has("phi_count")) {
        const double lo = sec.take_double("phi_min");
        const double hi = sec.take_double("phi_max");
        const long count = sec.take_long("phi_count");
        scan->phi_grid = linspace(lo, hi, static_cast<int>(count));
    }
    if (sec.has("omega_min") || sec.has("omega_max") || sec.has("omega_count")) {
        const double lo = sec.take_double("omega_min");
        const double hi = sec.take_double("omega_max");
        const long count = sec.take_long("omega_count");
        scan->omega_grid = linspace(lo, hi, static_cast<int>(count));
    }
    sec.finish();
}

SweepSpec read_sweep(SectionReader& sec) {
    SweepSpec sw;
    sw.parameter = sec.take_string("parameter");
    const bool known = sw.parameter == "separation" || sw.parameter == "lamb_dicke" ||
                       sw.parameter == "state_theta" || sw.parameter == "state_phase";
    if (!known)
        throw ConfigError("config: [sweep] parameter must be one of separation, lamb_dicke, "
                          "state_theta, state_phase");
    sw.min = sec.take_double("min");
    sw.max = sec.take_double("max");
    sw.count = static_cast<int>(sec.take_long("count"));
    std::istringstream obs(sec.take_string("observables"));
    std::string item;
    while (std::getline(obs, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const bool ok = item == "epsilon" || item == "visibility" || item == "fit_visibility" ||
                        item == "fit_phase" || item == "fit_period" || item == "peak_intensity";
        if (!ok) throw ConfigError("config: [sweep] unknown observable '" + item + "'");
        sw.observables.push_back(item);
    }
    if (sw.observables.empty())
        throw ConfigError("config: [sweep] needs at least one observable");
    sec.finish();
    // range validation mirrors linspace so the "empty range" contract is a
    // config error before any computation runs
    (void)linspace(sw.min, sw.max, sw.count);
    return sw;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
    if (count <= 0) throw ConfigError("empty range: count must be >= 1");
    if (!(hi >= lo)) throw ConfigError("bad range: max < min");
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi; // exact endpoint
    return out;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunConfig load_config(const std::string& path, UnitOverride override_mode) {
    ParsedFile file = parse_file(path);

    // resolve the unit mode: flag wins, else [units] mode, else error
    SectionReader units(file, "units");
    std::string mode;
    if (units.present() && units.has("mode")) mode = units.take_string("mode");
    units.finish();
    bool si;
    if (override_mode == UnitOverride::Si)
        si = true;
    else if (override_mode == UnitOverride::Dimensionless)
        si = false;
    else if (mode == "si")
        si = true;
    else if (mode == "dimensionless")
        si = false;
    else if (mode.empty())
        throw ConfigError("config: unit mode not specified ([units] mode or --si/--dimensionless)");
    else
        throw ConfigError("config: [units] mode must be si or dimensionless, got '" + mode + "'");

    RunConfig rc;
    rc.si_input = si;
    Params& p = rc.params;

    SectionReader trap(file, "trap");
    SectionReader state(file, "state");
    SectionReader laser(file, "laser");
    if (!trap.present()) throw ConfigError("config: missing required section [trap]");
    if (!state.present()) throw ConfigError("config: missing required section [state]");
    if (!laser.present()) throw ConfigError("config: missing required section [laser]");

    p.state.theta = state.take_double("theta");
    p.state.phi = state.take_double("phi");
    state.finish();

    double si_nu = 1.0; // trap frequency; rad/s quantities outside [laser] divide by it
    if (si) {
        const double sep_m = trap.take_double("separation_m");
        const double nu = trap.take_double("frequency_rad_s");
        const double mass = trap.take_double("mass_kg");
        const double split = trap.take_double("splitting_rad_s");
        trap.finish();
        if (!(nu > 0.0) || !(mass > 0.0))
            throw ConfigError("config: trap frequency and mass must be positive");
        const double a0 = std::sqrt(kHbar / (2.0 * mass * nu));
        const double lambda = laser.take_double("wavelength_m");
        if (!(lambda > 0.0)) throw ConfigError("config: wavelength must be positive");
        const double k_laser = 2.0 * kPi / lambda;
        p.separation = sep_m / a0;
        p.splitting = split / nu;
        p.lamb_dicke = k_laser * a0;
        p.detuning = laser.take_double("detuning_rad_s") / nu;
        p.rabi = laser.take_double("rabi_rad_s") / nu;
        p.pulse_time = laser.take_double("pulse_time_s") * nu;
        p.linewidth = laser.take_double_or("linewidth_rad_s", 0.0) / nu;
        p.laser_frequency = k_laser * kLightSpeed / nu;
        p.gamma = laser.take_double_or("gamma_rad_s", nu) / nu;
        p.dipole = laser.take_double_or("dipole", 1.0);
        laser.finish();
        si_nu = nu;
    } else {
        p.separation = trap.take_double("separation");
        p.splitting = trap.take_double("splitting");
        trap.finish();
        p.lamb_dicke = laser.take_double("lamb_dicke");
        p.detuning = laser.take_double("detuning");
        p.rabi = laser.take_double("rabi");
        p.pulse_time = laser.take_double("pulse_time");
        p.linewidth = laser.take_double_or("linewidth", 0.0);
        p.laser_frequency = laser.take_double_or("frequency", 0.0);
        p.gamma = laser.take_double_or("gamma", 1.0);
        p.dipole = laser.take_double_or("dipole", 1.0);
        laser.finish();
    }

    if (p.separation < 0.0) throw ConfigError("config: separation must be >= 0");
    if (!(p.splitting > 0.0)) throw ConfigError("config: splitting must be positive");
    if (!(p.lamb_dicke > 0.0)) throw ConfigError("config: Lamb-Dicke parameter must be positive");
    if (!(p.pulse_time > 0.0)) throw ConfigError("config: pulse time must be positive");
    if (p.linewidth < 0.0) throw ConfigError("config: linewidth must be >= 0");

    SectionReader channel(file, "channel");
    p.channel = read_channel(channel, &p.final_offset, si);
    if (si) p.final_offset /= si_nu;

    SectionReader geom(file, "geometry");
    p.geom = read_geometry(geom);

    SectionReader scan(file, "scan");
    read_scan(scan, &rc.scan);

    SectionReader sweep(file, "sweep");
    if (sweep.present()) rc.sweep = read_sweep(sweep);

    SectionReader output(file, "output");
    if (output.present()) {
        if (output.has("path")) rc.output_path = output.take_string("path");
        output.finish();
    }

    SectionReader oracle(file, "oracle");
    if (oracle.present()) {
        if (oracle.has("samples")) {
            rc.oracle_samples = static_cast<int>(oracle.take_long("samples"));
            if (rc.oracle_samples <= 0)
                throw ConfigError("config: [oracle] samples must be positive");
        }
        oracle.finish();
    }

    // unknown sections are as fatal as unknown keys
    for (const auto& [name, body] : file.sections) {
        (void)body;
        const bool known = name == "units" || name == "trap" || name == "state" ||
                           name == "laser" || name == "channel" || name == "geometry" ||
                           name == "scan" || name == "sweep" || name == "output" ||
                           name == "oracle";
        if (!known) throw ConfigError("config: unknown section [" + name + "]");
    }
    return rc;
}

}  // namespace fringe::io
