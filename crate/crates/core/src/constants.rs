//! Physical constants in SI units.
//!
//! `h` and `c` are exact by the 2019 SI definition. Particle masses are the
//! CODATA 2018 recommended values.

use std::f64::consts::PI;

/// Planck constant, J s.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant h / 2π, J s.
pub const HBAR: f64 = PLANCK / (2.0 * PI);

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Neutron mass, kg.
pub const NEUTRON_MASS: f64 = 1.674_927_498_04e-27;

/// Proton mass, kg.
pub const PROTON_MASS: f64 = 1.672_621_923_69e-27;

/// Electron mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// Tolerance used for endpoint coincidence and path closure, m.
pub const ENDPOINT_TOLERANCE: f64 = 1e-12;
