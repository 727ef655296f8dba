#pragma once

#include "fringe/vec3.hpp"

namespace fringe::geometry {

/*! Scattering geometry for the planar detection problem.
 *
 *  Everything downstream works in trap units: lengths in a0, wave vectors in
 *  1/a0 (so the laser wave vector has magnitude eta = k_L*a0) and frequencies
 *  in units of the trap frequency.
 *
 *  The detector angle Phi is measured in the plane spanned by the incoming
 *  beam direction k_in and the well axis d_hat; Phi = 0 is forward scattering.
 *  When d_hat is (anti)parallel to k_in the plane is degenerate and a fixed
 *  fallback axis completes the basis (deterministic, documented in README).
 */
struct ScatterGeometry {
    Vec3 k_in;      // unit vector along the incoming laser beam
    Vec3 well_axis; // unit vector d_hat joining the two wells
    Vec3 e1;        // in-plane basis: e1 = k_in
    Vec3 e2;        // in-plane basis: e2 orthogonal to e1, toward d_hat if possible

    // Validates unit norms (1e-9 tolerance -> ConfigError otherwise) and builds
    // the in-plane orthonormal basis.
    static ScatterGeometry make(const Vec3& k_in, const Vec3& well_axis);

    // Default convention: beam along x, wells along y (d_hat perpendicular to k_in).
    static ScatterGeometry perpendicular();
    // Wells along the beam axis.
    static ScatterGeometry parallel();
};

// Scattered wave vector at detector angle phi (radians) with given magnitude
// (in 1/a0 units): k = magnitude*(cos(phi) e1 + sin(phi) e2).
// magnitude <= 0 -> DomainError.
Vec3 wavevector_from_angle(const ScatterGeometry& geom, double phi, double magnitude);

/*! Momentum transfer dk = k_in_vec - k_out with cached scalars.
 *  dk_abs = |dk| a0, dk_dot_d = dk . d (dimensionless since d carries a0 units).
 */
struct MomentumTransfer {
    Vec3 dk;
    double dk_abs = 0.0;
    double dk_dot_d = 0.0;
};

// d_vec is the full separation vector D*d_hat (a0 units).
MomentumTransfer momentum_transfer(const Vec3& k_laser, const Vec3& k_out, const Vec3& d_vec);

// Elastic-magnitude convenience: |k_out| = |k_laser| = eta, detector at phi.
MomentumTransfer momentum_transfer_at_angle(const ScatterGeometry& geom, double eta,
                                            double separation, double phi);

// Free-atom recoil shift in trap units: (|dk| a0)^2 * nu (uses hbar/2M = a0^2 nu).
double recoil_shift(const MomentumTransfer& mt);

}  // namespace fringe::geometry
