#include "fringe/geometry.hpp"

#include <cmath>

#include "fringe/errors.hpp"

namespace fringe::geometry {

namespace {

constexpr double kUnitTol = 1e-9;

bool is_unit(const Vec3& v) { return std::abs(norm(v) - 1.0) <= kUnitTol; }

// Any unit vector orthogonal to v: splice out the smallest component.
Vec3 orthogonal_fallback(const Vec3& v) {
    const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    Vec3 seed;
    if (ax <= ay && ax <= az)
        seed = {1.0, 0.0, 0.0};
    else if (ay <= az)
        seed = {0.0, 1.0, 0.0};
    else
        seed = {0.0, 0.0, 1.0};
    Vec3 w = cross(v, seed);
    const double n = norm(w);
    return (1.0 / n) * w;
}

}  // namespace

ScatterGeometry ScatterGeometry::make(const Vec3& k_in, const Vec3& well_axis) {
    if (!is_unit(k_in) || !is_unit(well_axis))
        throw ConfigError("geometry vectors must be unit-normalized (|v| - 1 within 1e-9)");

    ScatterGeometry g;
    g.k_in = k_in;
    g.well_axis = well_axis;
    g.e1 = k_in;

    // Gram-Schmidt d_hat against e1; degenerate (parallel wells/beam) falls
    // back to a deterministic orthogonal axis so Phi is still well defined.
    Vec3 r = well_axis - dot(well_axis, g.e1) * g.e1;
    const double rn = norm(r);
    if (rn < 1e-12) {
        g.e2 = orthogonal_fallback(g.e1);
    } else {
        g.e2 = (1.0 / rn) * r;
    }
    return g;
}

ScatterGeometry ScatterGeometry::perpendicular() {
    return make({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
}

ScatterGeometry ScatterGeometry::parallel() {
    return make({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
}

Vec3 wavevector_from_angle(const ScatterGeometry& geom, double phi, double magnitude) {
    if (!(magnitude > 0.0))
        throw DomainError("scattered wave vector magnitude must be positive");
    const double c = std::cos(phi), s = std::sin(phi);
    return magnitude * Vec3{c * geom.e1.x + s * geom.e2.x, c * geom.e1.y + s * geom.e2.y,
                            c * geom.e1.z + s * geom.e2.z};
}

MomentumTransfer momentum_transfer(const Vec3& k_laser, const Vec3& k_out, const Vec3& d_vec) {
    MomentumTransfer mt;
    mt.dk = k_laser - k_out;
    mt.dk_abs = norm(mt.dk);
    mt.dk_dot_d = dot(mt.dk, d_vec);
    return mt;
}

MomentumTransfer momentum_transfer_at_angle(const ScatterGeometry& geom, double eta,
                                            double separation, double phi) {
    if (!(eta > 0.0)) throw DomainError("Lamb-Dicke parameter must be positive");
    const Vec3 k_laser = eta * geom.e1;
    const Vec3 k_out = wavevector_from_angle(geom, phi, eta);
    const Vec3 d_vec = separation * geom.well_axis;
    return momentum_transfer(k_laser, k_out, d_vec);
}

double recoil_shift(const MomentumTransfer& mt) { return mt.dk_abs * mt.dk_abs; }

}  // namespace fringe::geometry
