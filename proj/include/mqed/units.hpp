// units.hpp — physical constants and the single site that owns every unit conversion
//
// Internal unit system: energies and frequencies in eV, time in fs, lengths in nm,
// charge in units of e. Green's-function values cross the public interface in 1/m
// and are converted to 1/nm here. Couplings are folded with hbar such that the
// spectral density J_i(w) = [mu_i G_i(w) / hbar]^2 lands in eV and 2*pi*J/hbar is
// a rate in 1/fs.

#pragma once

#include <cmath>

namespace mqed::units {

inline constexpr double pi = 3.14159265358979323846;

// hbar in eV*fs (CODATA)
inline constexpr double hbar_ev_fs = 0.6582119569;

// speed of light in nm/fs
inline constexpr double c_nm_fs = 299.792458;

// Coulomb constant e^2/(4*pi*eps0) in eV*nm (= alpha*hbar*c)
inline constexpr double coulomb_ev_nm = 1.43996454;

// vacuum permittivity in e^2/(eV*nm)
inline constexpr double eps0 = 1.0 / (4.0 * pi * coulomb_ev_nm);

// angular frequency in rad/fs from a photon energy in eV
inline double angular_frequency(double omega_ev) { return omega_ev / hbar_ev_fs; }

inline double im_g_per_m_to_per_nm(double g_per_m) { return g_per_m * 1e-9; }

// Gram kernel (hbar*w_ang^2 / pi eps0 c^2) * ImG, expressed in the internal
// convention: returns G_a*G_b units for the projected Im G between two points.
// This is the one formula S_ij, G_i and the field mode functions are built from.
inline double coupling_kernel(double omega_ev, double im_g_per_m) {
    const double img_nm = im_g_per_m_to_per_nm(im_g_per_m);
    return omega_ev * omega_ev * img_nm / (pi * eps0 * c_nm_fs * c_nm_fs);
}

// Normalization factor G_i(w) = sqrt(kernel(w, ImG_ii)); requires ImG_ii >= 0.
inline double coupling_normalization(double omega_ev, double im_g_ii_per_m) {
    return std::sqrt(coupling_kernel(omega_ev, im_g_ii_per_m));
}

// Spectral density J_i(w) = [mu_i G_i(w) / hbar]^2 in eV.
inline double spectral_density(double dipole_e_nm, double coupling_g) {
    const double x = dipole_e_nm * coupling_g / hbar_ev_fs;
    return x * x;
}

// Weak-coupling decay rate 2*pi*J / hbar in 1/fs.
inline double decay_rate_per_fs(double spectral_density_ev) {
    return 2.0 * pi * spectral_density_ev / hbar_ev_fs;
}

// Field reconstruction reports V/m; internally fields live in eV/(e*nm) = V/nm.
inline double field_v_per_nm_to_v_per_m(double f) { return f * 1e9; }
inline double field_v_per_m_to_v_per_nm(double f) { return f * 1e-9; }

}  // namespace mqed::units
