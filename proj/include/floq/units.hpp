// Unit conventions.
//
// All internal arithmetic is in Hartree atomic units: hbar = 1, electron rest
// mass m_e = 1, |e| = 1. The carrier is an electron, so the signed charge is
// e = -1. Effective masses are dimensionless multiples of m_e. The public
// boundary (config files, CSV output) speaks meV for energies and Angstrom
// for lengths; electric fields and laser amplitudes are accepted in atomic
// units directly or through dimensionless strength parameters.
#pragma once

namespace floq {

inline constexpr double hartree_in_mev = 27211.386245988;
inline constexpr double bohr_in_angstrom = 0.529177210903;

// Signed electron charge in atomic units.
inline constexpr double electron_charge = -1.0;

inline constexpr double mev_to_au(double e_mev) { return e_mev / hartree_in_mev; }
inline constexpr double au_to_mev(double e_au) { return e_au * hartree_in_mev; }
inline constexpr double angstrom_to_au(double x_ang) { return x_ang / bohr_in_angstrom; }
inline constexpr double au_to_angstrom(double x_au) { return x_au * bohr_in_angstrom; }

} // namespace floq
