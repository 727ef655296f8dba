#include "fringe/lineshape.hpp"

#include <cmath>

#include "fringe/errors.hpp"

namespace fringe::lineshape {

namespace {
const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;
constexpr double kResolvedThreshold = 10.0;
constexpr double kNegligibleThreshold = 0.1;

// sin(x)/x with the removable singularity handled by series; |x| < 1e-4 keeps
// the truncation below 1e-17 relative.
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}
}  // namespace

double diffraction(double omega, double big_t) {
    if (!(big_t > 0.0)) throw DomainError("observation time must be positive");
    const double s = sinc(0.5 * omega * big_t);
    return big_t / kTwoPi * s * s;
}

ResolutionReport resolution_report(double splitting, double pulse_time, double eta,
                                   double linewidth, double separation,
                                   double laser_frequency) {
    ResolutionReport r;
    r.doublet_ratio = splitting * pulse_time / kTwoPi;
    r.doublet_resolved = r.doublet_ratio >= kResolvedThreshold;

    // worst-case (back-scattering) recoil (2 eta)^2 in trap units
    const double recoil = 4.0 * eta * eta;
    r.recoil_ratio = recoil * pulse_time / kTwoPi;
    r.recoil_resolved = r.recoil_ratio >= kResolvedThreshold;

    r.linewidth_to_splitting = (splitting > 0.0) ? linewidth / splitting : 0.0;
    r.linewidth_ok = r.linewidth_to_splitting <= kNegligibleThreshold;

    // linewidth * d / (2 pi c) in trap units: d/c = D * eta / omega_L (all over nu)
    if (laser_frequency > 0.0) {
        r.transit_checked = true;
        r.transit_ratio = linewidth * separation * eta / (kTwoPi * laser_frequency);
        r.transit_ok = r.transit_ratio <= kNegligibleThreshold;
    }
    return r;
}

}  // namespace fringe::lineshape
