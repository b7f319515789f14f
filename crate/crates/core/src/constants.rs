//! Physical constants (CODATA 2018, SI units).
//!
//! The SI redefinition makes `kB`, `hbar`, `c` and `e` exact. All frequencies
//! inside the crate are angular frequencies in rad/s; electron-volt inputs are
//! converted once with [`PhysicalConstants::ev_to_rad_s`].

/// Bundle of the constants used across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Speed of light in vacuum, m/s.
    pub c: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Elementary charge, C.
    pub e: f64,
    /// Electron rest mass, kg.
    pub m_e: f64,
    /// Angular frequency corresponding to a photon energy of 1 eV, rad/s.
    pub ev_to_rad_s: f64,
}

pub const K_B: f64 = 1.380_649e-23;
pub const HBAR: f64 = 1.054_571_817e-34;
pub const C: f64 = 299_792_458.0;
pub const EPS0: f64 = 8.854_187_812_8e-12;
pub const E_CHARGE: f64 = 1.602_176_634e-19;
pub const M_E: f64 = 9.109_383_701_5e-31;
pub const EV_TO_RAD_S: f64 = E_CHARGE / HBAR;

pub const CODATA: PhysicalConstants = PhysicalConstants {
    k_b: K_B,
    hbar: HBAR,
    c: C,
    eps0: EPS0,
    e: E_CHARGE,
    m_e: M_E,
    ev_to_rad_s: EV_TO_RAD_S,
};

/// Converts a photon energy in eV to an angular frequency in rad/s.
#[inline]
pub fn ev_to_rad_s(energy_ev: f64) -> f64 {
    energy_ev * EV_TO_RAD_S
}

/// Converts an angular frequency in rad/s to a photon energy in eV.
#[inline]
pub fn rad_s_to_ev(omega: f64) -> f64 {
    omega / EV_TO_RAD_S
}
