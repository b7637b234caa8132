//! Physical constants, supplied as configuration rather than baked into formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 fine-structure constant, used to fix `e` in natural units.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitMode {
    /// ħ = c = m_e = 1, e = √α.
    Natural,
    /// Gaussian CGS: erg·s, cm/s, g, esu.
    GaussianCgs,
}

impl UnitMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            UnitMode::Natural => "natural",
            UnitMode::GaussianCgs => "gaussian_cgs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    pub hbar: f64,
    pub c: f64,
    pub m_e: f64,
    pub e: f64,
    pub mode: UnitMode,
}

impl UnitSystem {
    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            c: 1.0,
            m_e: 1.0,
            e: FINE_STRUCTURE.sqrt(),
            mode: UnitMode::Natural,
        }
    }

    /// CODATA 2018 values in Gaussian CGS units.
    pub fn gaussian_cgs() -> Self {
        Self {
            hbar: 1.054_571_817e-27,
            c: 2.997_924_58e10,
            m_e: 9.109_383_701_5e-28,
            e: 4.803_204_71e-10,
            mode: UnitMode::GaussianCgs,
        }
    }

    pub fn for_mode(mode: UnitMode) -> Self {
        match mode {
            UnitMode::Natural => Self::natural(),
            UnitMode::GaussianCgs => Self::gaussian_cgs(),
        }
    }

    /// Caller-supplied constants; all must be finite and positive.
    pub fn custom(hbar: f64, c: f64, m_e: f64, e: f64, mode: UnitMode) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("c", c), ("m_e", m_e), ("e", e)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(name, v));
            }
        }
        Ok(Self {
            hbar,
            c,
            m_e,
            e,
            mode,
        })
    }

    /// e²/ħc.
    pub fn alpha(&self) -> f64 {
        self.e * self.e / (self.hbar * self.c)
    }

    /// m_e c².
    pub fn rest_energy(&self) -> f64 {
        self.m_e * self.c * self.c
    }

    /// Mass term coefficient m c/ħ of the Dirac equation divided by c.
    pub fn kappa(&self, mass: f64) -> f64 {
        mass * self.c / self.hbar
    }

    /// ω_e = 2 m c²/ħ.
    pub fn omega_e(&self, mass: f64) -> f64 {
        2.0 * mass * self.c * self.c / self.hbar
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::natural()
    }
}
