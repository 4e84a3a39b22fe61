#pragma once

// Physical constants and unit conventions used throughout.
//
// Unit system: frequencies in MHz (energies are E/h), time in ns, static
// fields in tesla, drive amplitudes in mT, temperatures in kelvin.
// A Hamiltonian H in MHz generates the propagator exp(-i * kRadPerMHzNs * H * t_ns).

namespace qforge {

// Bohr magneton over Planck constant, MHz/T (CODATA).
inline constexpr double kMuBOverH = 13996.2449;

// Nuclear magneton over Planck constant, MHz/T (CODATA).
inline constexpr double kMuNOverH = 7.6225932;

// Boltzmann constant over Planck constant, MHz/K (CODATA).
inline constexpr double kBoltzmannOverH = 2.0836619e4;

// Phase accumulated per (MHz * ns): 2*pi*1e-3 rad.
inline constexpr double kRadPerMHzNs = 2.0e-3 * 3.14159265358979323846;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qforge
