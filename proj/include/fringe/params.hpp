#pragma once

#include <cstdint>
#include <string>

#include "fringe/geometry.hpp"
#include "fringe/wavepacket.hpp"

namespace fringe {

enum class ChannelKind { Rayleigh, Raman };

/*! Fully dimensionless run parameters.
 *
 *  Frequencies are in units of the trap frequency nu, times in 1/nu, lengths
 *  in a0, wave vectors in 1/a0. SI ingestion (see io/config) reduces to this
 *  struct once and everything downstream is unit-free.
 */
struct Params {
    double separation = 2.0;       // D = d/a0
    double splitting = 0.05;       // doublet splitting
    wavepacket::AtomState state;   // (theta, phi)
    double lamb_dicke = 1.0;       // eta = k_L a0
    double detuning = 100.0;       // laser detuning (far-detuned model, nonzero)
    double rabi = 1.0;             // Rabi frequency
    double pulse_time = 1000.0;    // observation time nu*T
    double linewidth = 0.0;        // laser linewidth
    double laser_frequency = 0.0;  // omega_L/nu; <= 0 = not provided
    double gamma = 1.0;            // emission-rate scale in the prefactor
    double dipole = 1.0;           // angular dipole factor, constant over the detector
    ChannelKind channel = ChannelKind::Rayleigh;
    double final_offset = 0.0;     // Raman final internal-state offset
    geometry::ScatterGeometry geom = geometry::ScatterGeometry::perpendicular();
};

// Canonical text rendering of the dimensionless groups (one "key = %.17g" per
// line, '#'-prefixed). Echoed into every CSV so outputs are self-describing;
// also the basis of the parameter hash and of the SI/dimensionless equivalence
// test.
std::string params_echo(const Params& p);

// FNV-1a 64-bit over params_echo(p).
std::uint64_t params_hash(const Params& p);

}  // namespace fringe
