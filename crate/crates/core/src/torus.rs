//! Toroidal semi-photon model: a photon of wavelength `λ_p = πħ/m_e c`
//! rolled onto a torus of radius `r_s = λ_p/2π`, tube radius `ζ·r_s`.
//!
//! All lengths, frequencies and amplitudes follow from the unit system and
//! `ζ`. The field amplitude `E₀` is the one free input; [`calibrate_e0`]
//! fixes it by requiring the half-wave mass to equal `m_e`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Complex;
use crate::quadrature::{simpson_converged, CONVERGENCE_REL};
use crate::report::{CheckReport, DiscrepancyEntry};
use crate::units::UnitSystem;

pub const MIN_QUAD_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusModel {
    pub units: UnitSystem,
    pub zeta: f64,
    pub lambda_p: f64,
    pub omega_p: f64,
    pub omega_s: f64,
    pub r_t: f64,
    pub r_s: f64,
    pub r_c: f64,
    pub s_c: f64,
    pub delta_tau: f64,
    pub k: f64,
    pub e0: Option<f64>,
}

fn check_zeta(zeta: f64) -> Result<()> {
    if zeta.is_finite() && zeta > 0.0 && zeta <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain("zeta", zeta))
    }
}

/// Geometry and frequencies for a given `ζ ∈ (0, 1]`. `E₀` is left unset.
pub fn derive_parameters(units: UnitSystem, zeta: f64) -> Result<TorusModel> {
    check_zeta(zeta)?;
    let UnitSystem { hbar, c, m_e, .. } = units;
    let lambda_p = PI * hbar / (m_e * c);
    let r_t = lambda_p / (2.0 * PI);
    let r_s = r_t;
    let omega_p = 2.0 * PI * c / lambda_p;
    let omega_s = c / r_s;
    let r_c = zeta * r_t;
    Ok(TorusModel {
        units,
        zeta,
        lambda_p,
        omega_p,
        omega_s,
        r_t,
        r_s,
        r_c,
        s_c: PI * r_c * r_c,
        delta_tau: 2.0 * PI * PI * zeta * zeta * r_s.powi(3),
        k: omega_s / c,
        e0: None,
    })
}

impl TorusModel {
    pub fn with_e0(mut self, e0: f64) -> Result<Self> {
        if !(e0.is_finite() && e0 >= 0.0) {
            return Err(Error::Domain("e0", e0));
        }
        self.e0 = Some(e0);
        Ok(self)
    }

    pub fn e0(&self) -> Result<f64> {
        self.e0.ok_or(Error::AmplitudeUnset)
    }

    pub fn c(&self) -> f64 {
        self.units.c
    }
}

/// Displacement current of the ring wave split into normal and tangential
/// parts; `j = j_n + i·j_τ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingCurrent {
    pub j_n: f64,
    pub j_tau: f64,
}

impl RingCurrent {
    pub fn complex(&self) -> Complex {
        Complex::new(self.j_n, self.j_tau)
    }
}

/// `j_n = (1/4π)∂E/∂t`, `j_τ = (ω/4π)E`.
pub fn ring_current(model: &TorusModel, e_magnitude: f64, de_dt: f64) -> RingCurrent {
    RingCurrent {
        j_n: de_dt / (4.0 * PI),
        j_tau: model.omega_s * e_magnitude / (4.0 * PI),
    }
}

/// `ρ = j_τ/c = (ω/4πc)E`.
pub fn charge_density(model: &TorusModel, e_magnitude: f64) -> f64 {
    ring_current(model, e_magnitude, 0.0).j_tau / model.c()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChargeSpan {
    /// `l ∈ [0, λ]`.
    FullWave,
    /// `l ∈ [−λ/4, λ/4]`, the positive half period of `cos(kl)`.
    HalfWave,
}

fn check_points(n_points: usize) -> Result<()> {
    if n_points < MIN_QUAD_POINTS {
        Err(Error::Config(format!(
            "quadrature needs at least {MIN_QUAD_POINTS} points, got {n_points}"
        )))
    } else {
        Ok(())
    }
}

/// `∫ (ω/4πc)·E₀·cos(kl)·S_c dl` over the span.
pub fn integrate_charge(model: &TorusModel, span: ChargeSpan, n_points: usize) -> Result<f64> {
    check_points(n_points)?;
    let e0 = model.e0()?;
    let pref = model.omega_s / (4.0 * PI * model.c()) * e0 * model.s_c;
    let k = model.k;
    let (a, b) = match span {
        ChargeSpan::FullWave => (0.0, model.lambda_p),
        ChargeSpan::HalfWave => (-model.lambda_p / 4.0, model.lambda_p / 4.0),
    };
    let q = simpson_converged(
        |l| pref * (k * l).cos(),
        a,
        b,
        n_points,
        CONVERGENCE_REL,
        e0 * model.s_c,
    )?;
    Ok(q.value)
}

/// Stated half-wave charge `E₀S_c/π`.
pub fn stated_half_wave_charge(model: &TorusModel) -> Result<f64> {
    Ok(model.e0()? * model.s_c / PI)
}

/// `(1/π)(ω/c)E₀S_c · 2∫₀^{λ/4} cos(kl) dl`, the half-wave integrand with
/// its printed prefactor and limits.
pub fn printed_half_wave_charge(model: &TorusModel, n_points: usize) -> Result<f64> {
    check_points(n_points)?;
    let e0 = model.e0()?;
    let pref = model.omega_s / (PI * model.c()) * e0 * model.s_c;
    let k = model.k;
    let q = simpson_converged(
        |l| (k * l).cos(),
        0.0,
        model.lambda_p / 4.0,
        n_points,
        CONVERGENCE_REL,
        0.0,
    )?;
    Ok(pref * 2.0 * q.value)
}

/// `q = ζ²E₀r_s²`.
pub fn charge_closed_form(model: &TorusModel) -> Result<f64> {
    Ok(model.zeta * model.zeta * model.e0()? * model.r_s * model.r_s)
}

/// `(S_cE₀²/πc²)∫₀^{λ/4} cos²(kl) dl`.
pub fn integrate_mass(model: &TorusModel, n_points: usize) -> Result<f64> {
    check_points(n_points)?;
    let e0 = model.e0()?;
    let c = model.c();
    let pref = model.s_c * e0 * e0 / (PI * c * c);
    let k = model.k;
    let q = simpson_converged(
        |l| (k * l).cos().powi(2),
        0.0,
        model.lambda_p / 4.0,
        n_points,
        CONVERGENCE_REL,
        0.0,
    )?;
    Ok(pref * q.value)
}

/// `E₀²S_c/(4ω_s c)`.
pub fn mass_closed_form(model: &TorusModel) -> Result<f64> {
    let e0 = model.e0()?;
    Ok(e0 * e0 * model.s_c / (4.0 * model.omega_s * model.c()))
}

/// Mass from the density `E²/(4πc²)` integrated over the whole half wave
/// `[−λ/4, λ/4]`.
pub fn density_mass(model: &TorusModel, n_points: usize) -> Result<f64> {
    check_points(n_points)?;
    let e0 = model.e0()?;
    let c = model.c();
    let pref = model.s_c * e0 * e0 / (4.0 * PI * c * c);
    let k = model.k;
    let q = simpson_converged(
        |l| (k * l).cos().powi(2),
        -model.lambda_p / 4.0,
        model.lambda_p / 4.0,
        n_points,
        CONVERGENCE_REL,
        0.0,
    )?;
    Ok(pref * q.value)
}

/// `α_q = 2ζ²/π`.
pub fn coupling_constant(zeta: f64) -> Result<f64> {
    check_zeta(zeta)?;
    Ok(2.0 * zeta * zeta / PI)
}

/// Inverse of [`coupling_constant`]: `ζ = √(πα_q/2)`.
pub fn zeta_for_coupling(alpha_q: f64) -> Result<f64> {
    let zeta = (PI * alpha_q / 2.0).sqrt();
    check_zeta(zeta)?;
    Ok(zeta)
}

/// Solves `integrate_mass(E₀) = m_e` by bisection, to full double precision.
pub fn calibrate_e0(model: &TorusModel, n_points: usize) -> Result<f64> {
    let target = model.units.m_e;
    let mass = |e0: f64| -> Result<f64> { integrate_mass(&model.with_e0(e0)?, n_points) };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while mass(hi)? < target {
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::Domain("e0", hi));
        }
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mass(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // pick the endpoint whose mass is closer
    let (ml, mh) = (mass(lo)?, mass(hi)?);
    Ok(if (ml - target).abs() <= (mh - target).abs() {
        lo
    } else {
        hi
    })
}

/// Values along the charge → mass → radius → coupling chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub zeta: f64,
    pub e0: f64,
    /// `ζ²E₀r_s²`.
    pub q: f64,
    /// `πζ²E₀²r_s²/(4ω_s c)`.
    pub m_s: f64,
    /// `πq²/(4ζ²ω_s c r_s²)`.
    pub m_s_from_q: f64,
    pub r_s: f64,
    /// `(π/2ζ²)(q²/2m_s c²)`.
    pub r_s_from_q: f64,
    /// `q²/ħc`.
    pub alpha_q_from_q: f64,
    /// `2ζ²/π`.
    pub alpha_q: f64,
    /// `e²/2m_e c²`.
    pub r_o: f64,
    pub r_o_over_r_s: f64,
    /// `e²/ħc` of the unit system.
    pub alpha: f64,
}

pub fn consistency_chain(model: &TorusModel) -> Result<ChainReport> {
    let UnitSystem {
        hbar, c, m_e, e, ..
    } = model.units;
    let e0 = model.e0()?;
    let z2 = model.zeta * model.zeta;
    let r_s = model.r_s;
    let w = model.omega_s;
    let q = charge_closed_form(model)?;
    let m_s = PI * z2 * e0 * e0 * r_s * r_s / (4.0 * w * c);
    let m_s_from_q = PI * q * q / (4.0 * z2 * w * c * r_s * r_s);
    let r_s_from_q = PI / (2.0 * z2) * (q * q / (2.0 * m_s * c * c));
    let r_o = e * e / (2.0 * m_e * c * c);
    Ok(ChainReport {
        zeta: model.zeta,
        e0,
        q,
        m_s,
        m_s_from_q,
        r_s,
        r_s_from_q,
        alpha_q_from_q: q * q / (hbar * c),
        alpha_q: coupling_constant(model.zeta)?,
        r_o,
        r_o_over_r_s: r_o / r_s,
        alpha: model.units.alpha(),
    })
}

impl ChainReport {
    /// Checks for each link. The coupling-constant link assumes `E₀` was
    /// calibrated so that `m_s = m_e`.
    pub fn checks(&self, tol_rel: f64) -> Vec<CheckReport> {
        let z = self.zeta;
        vec![
            CheckReport::compare(
                format!("torus/chain/mass-from-charge/zeta={z}"),
                "m_s = pi q^2 / (4 zeta^2 omega_s c r_s^2)",
                self.m_s,
                self.m_s_from_q,
                0.0,
                tol_rel,
            ),
            CheckReport::compare(
                format!("torus/chain/radius-from-charge/zeta={z}"),
                "r_s = (pi / 2 zeta^2) q^2 / (2 m_s c^2)",
                self.r_s,
                self.r_s_from_q,
                0.0,
                tol_rel,
            ),
            CheckReport::compare(
                format!("torus/chain/coupling/zeta={z}"),
                "q^2 / (hbar c) = 2 zeta^2 / pi",
                self.alpha_q,
                self.alpha_q_from_q,
                0.0,
                tol_rel,
            ),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinMoment {
    /// `(2m_e c)·r_p`.
    pub sigma_p: f64,
    /// `(m_e c)·r_s`.
    pub sigma_s: f64,
    /// Loop current `qω_s/2π`.
    pub current: f64,
    /// Loop area `πr_s²`.
    pub loop_area: f64,
    /// `current · loop_area`.
    pub mu_s: f64,
    /// `½·qħ/2m_e`.
    pub mu_closed: f64,
}

pub fn spin_and_moment(model: &TorusModel, q: f64) -> SpinMoment {
    let UnitSystem { hbar, c, m_e, .. } = model.units;
    let current = q * model.omega_s / (2.0 * PI);
    let loop_area = PI * model.r_s * model.r_s;
    SpinMoment {
        sigma_p: 2.0 * m_e * c * model.r_t,
        sigma_s: m_e * c * model.r_s,
        current,
        loop_area,
        mu_s: current * loop_area,
        mu_closed: 0.5 * q * hbar / (2.0 * m_e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Zitterbewegung {
    pub omega_z: f64,
    pub r_z: f64,
    pub v: f64,
}

/// `ω_z = 2m_ec²/ħ`, `r_z = ħ/2m_ec`, `v = c`.
pub fn zitterbewegung(units: &UnitSystem) -> Zitterbewegung {
    Zitterbewegung {
        omega_z: 2.0 * units.m_e * units.c * units.c / units.hbar,
        r_z: units.hbar / (2.0 * units.m_e * units.c),
        v: units.c,
    }
}

/// Ledger entries where a stated closed form and the evaluation of its own
/// printed ingredients disagree.
pub fn discrepancies(model: &TorusModel, n_points: usize) -> Result<Vec<DiscrepancyEntry>> {
    let e0 = model.e0()?;
    let stated_q = stated_half_wave_charge(model)?;
    let printed_q = printed_half_wave_charge(model, n_points)?;
    let density_q = integrate_charge(model, ChargeSpan::HalfWave, n_points)?;
    let stated_m_linear = e0 * model.s_c / (4.0 * model.omega_s * model.c());
    let m = integrate_mass(model, n_points)?;
    let m_density = density_mass(model, n_points)?;
    let q = charge_closed_form(model)?;
    let sm = spin_and_moment(model, q);
    Ok(vec![
        DiscrepancyEntry::new(
            "torus/half-wave-charge/printed-prefactor",
            "q = (1/pi)(omega_s/c) E0 S_c 2 int_0^{lambda/4} cos(kl) dl = (1/pi) E0 S_c",
            stated_q,
            printed_q,
            "the printed integrand evaluates to (2/pi) E0 S_c",
        ),
        DiscrepancyEntry::new(
            "torus/half-wave-charge/density-prefactor",
            "q = int_{-lambda/4}^{lambda/4} (omega/4 pi c) E0 cos(kl) S_c dl vs (1/pi) E0 S_c",
            stated_q,
            density_q,
            "the charge density (omega/4 pi c) E over the half wave gives E0 S_c/(2 pi)",
        ),
        DiscrepancyEntry::new(
            "torus/mass/amplitude-exponent",
            "m_s = E0 S_c / (4 omega_s c)",
            stated_m_linear,
            m,
            "quadrature of S_c E0^2 cos^2(kl)/(pi c^2) gives E0^2 S_c/(4 omega_s c); E0^2 adopted",
        ),
        DiscrepancyEntry::new(
            "torus/mass/density-form",
            "m_s = E0^2 S_c / (4 omega_s c) vs int_{-lambda/4}^{lambda/4} S_c E0^2 cos^2(kl)/(4 pi c^2) dl",
            m,
            m_density,
            "the density E^2/(4 pi c^2) over the half wave gives half the stated mass",
        ),
        DiscrepancyEntry::new(
            "torus/moment/gaussian-c",
            "mu_s = I S_I with I = q omega_s / 2 pi",
            sm.mu_s,
            sm.mu_s / model.c(),
            "a Gaussian magnetic moment carries 1/c; the stated form omits it. \
             The experimental value is twice mu_s (Thomas factor)",
        ),
    ])
}
