//! Stress tensor, ring forces, Lagrangian evaluators and the hydrodynamic
//! reading of the ring motion.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dirac::AlphaSet;
use crate::em::{bispinor_from_fields, EmField, FieldLayout};
use crate::error::{Error, Result};
use crate::linalg::{c, Complex, Vec3, I};
use crate::report::CheckReport;
use crate::torus::{ring_current, TorusModel};
use crate::units::UnitSystem;

fn real_parts(f: &EmField) -> Result<([f64; 3], [f64; 3])> {
    if f.is_real() {
        Ok((f.e.re(), f.h.re()))
    } else {
        Err(Error::NotRealMode)
    }
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Electromagnetic stress-energy in the `4π`-scaled convention:
/// `τ₀₀ = ½(E² + H²)`, `τ_p0 = (E×H)_p`,
/// `τ_pq = −(E_pE_q + H_pH_q) + ½δ_pq(E² + H²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressTensor {
    pub tau_pq: [[f64; 3]; 3],
    pub tau_p0: [f64; 3],
    pub tau_00: f64,
}

impl StressTensor {
    pub fn trace(&self) -> f64 {
        (0..3).map(|p| self.tau_pq[p][p]).sum()
    }

    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for p in 0..3 {
            for q in 0..3 {
                worst = worst.max((self.tau_pq[p][q] - self.tau_pq[q][p]).abs());
            }
        }
        worst
    }
}

fn stress_with_delta(f: &EmField, delta: impl Fn(usize, usize) -> f64) -> Result<StressTensor> {
    let (e, h) = real_parts(f)?;
    let w = 0.5 * (dot(e, e) + dot(h, h));
    let mut tau_pq = [[0.0; 3]; 3];
    for (p, row) in tau_pq.iter_mut().enumerate() {
        for (q, cell) in row.iter_mut().enumerate() {
            *cell = -(e[p] * e[q] + h[p] * h[q]) + delta(p, q) * w;
        }
    }
    Ok(StressTensor {
        tau_pq,
        tau_p0: cross(e, h),
        tau_00: w,
    })
}

/// Standard Kronecker delta.
pub fn stress_tensor(f: &EmField) -> Result<StressTensor> {
    stress_with_delta(f, |p, q| if p == q { 1.0 } else { 0.0 })
}

/// The same expression with the delta inverted (1 off the diagonal, 0 on it).
pub fn stress_tensor_inverted_delta(f: &EmField) -> Result<StressTensor> {
    stress_with_delta(f, |p, q| if p == q { 0.0 } else { 1.0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    /// `(E_x, H_z)`, rotation about OZ.
    #[serde(rename = "Ex_Hz")]
    ExHz,
    /// `(E_z, H_x)`, rotation about OX.
    #[serde(rename = "Ez_Hx")]
    EzHx,
}

impl Polarization {
    pub fn sign(self) -> f64 {
        match self {
            Polarization::ExHz => 1.0,
            Polarization::EzHx => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingForce {
    /// `±ωEH/4πc`.
    pub f2: f64,
    /// `±ωE²/4πc`.
    pub f0: f64,
    /// `±j_τH/c` with `j_τ` from the ring current.
    pub f2_from_current: f64,
    /// `±j_τE/c`.
    pub f0_from_current: f64,
}

/// Normal force components on the ring wave, with `|H| = |E|`.
pub fn lorentz_force_ring(model: &TorusModel, e_amplitude: f64, polarization: Polarization) -> Result<RingForce> {
    if !(e_amplitude.is_finite() && e_amplitude >= 0.0) {
        return Err(Error::Domain("e_amplitude", e_amplitude));
    }
    let s = polarization.sign();
    let (e, h) = (e_amplitude, e_amplitude);
    let w = model.omega_s;
    let c_light = model.c();
    let j_tau = ring_current(model, e, 0.0).j_tau;
    Ok(RingForce {
        f2: s * w * e * h / (4.0 * PI * c_light),
        f0: s * w * e * e / (4.0 * PI * c_light),
        f2_from_current: s * j_tau * h / c_light,
        f0_from_current: s * j_tau * e / c_light,
    })
}

/// `(1/c)·j_τ × H`.
pub fn magnetic_confinement_density(f: &EmField, j_tau: [f64; 3], c_light: f64) -> Result<Vec3> {
    let (_, h) = real_parts(f)?;
    Ok(Vec3::from_real(cross(j_tau, h).map(|x| x / c_light)))
}

/// Electric and magnetic currents `j = i(ω_e/4π)·field`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurrentPair {
    pub j_e: Vec3,
    pub j_m: Vec3,
}

pub fn currents(f: &EmField, omega_e: f64) -> CurrentPair {
    let k = I * (omega_e / (4.0 * PI));
    CurrentPair {
        j_e: f.e.scale(k),
        j_m: f.h.scale(k),
    }
}

/// Field values and first derivatives at one space-time point of a wave
/// travelling along y.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub f: EmField,
    pub dt: EmField,
    pub dy: EmField,
}

/// `∂U/∂t` and `div S` for complex fields:
/// `(1/4π)(E*·∂tE + H*·∂tH)` and `(c/4π)[(E*×∂yH)_y − (H*×∂yE)_y]`.
pub fn energy_flux_terms(s: &FieldSample, c_light: f64) -> (Complex, Complex) {
    let du = (s.f.e.hdot(&s.dt.e) + s.f.h.hdot(&s.dt.h)) / (4.0 * PI);
    let div = (s.f.e.conj().cross(&s.dy.h).y - s.f.h.conj().cross(&s.dy.e).y) * (c_light / (4.0 * PI));
    (du, div)
}

/// `|E|² − |H|²` with Hermitian products.
fn invariant_difference(f: &EmField) -> Complex {
    f.e.hdot(&f.e) - f.h.hdot(&f.h)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearLagrangian {
    /// `(1/c)ψ⁺∂tψ − ψ⁺a2∂yψ − i(mc/ħ)ψ⁺βψ`.
    pub dirac_raw: Complex,
    /// `(c/4π)` times `dirac_raw`, in energy-density units.
    pub dirac: Complex,
    /// `∂U/∂t + div S − i(ω_e/8π)(|E|² − |H|²)`.
    pub em: Complex,
    /// `∂U/∂t + div S − ½(E*·j_e − H*·j_m)`.
    pub current: Complex,
}

impl LinearLagrangian {
    /// Largest pairwise difference between the three forms.
    pub fn spread(&self) -> f64 {
        (self.dirac - self.em)
            .norm()
            .max((self.dirac - self.current).norm())
            .max((self.em - self.current).norm())
    }
}

/// Evaluates the three forms of the linear Lagrangian for the y-wave with the
/// electron layout.
pub fn lagrangian_linear(sample: &FieldSample, set: &AlphaSet, units: &UnitSystem, mass: f64) -> Result<LinearLagrangian> {
    let layout = FieldLayout::electron();
    let psi = bispinor_from_fields(&sample.f, &layout)?;
    let psi_t = bispinor_from_fields(&sample.dt, &layout)?;
    let psi_y = bispinor_from_fields(&sample.dy, &layout)?;
    let c_light = units.c;
    let kappa = units.kappa(mass);
    let dirac_raw = psi.hdot(&psi_t) / c_light - psi.hdot(&set.a2.apply(&psi_y))
        - I * kappa * psi.hdot(&set.a4.apply(&psi));
    let (du, div) = energy_flux_terms(sample, c_light);
    let omega_e = units.omega_e(mass);
    let em = du + div - I * (omega_e / (8.0 * PI)) * invariant_difference(&sample.f);
    let j = currents(&sample.f, omega_e);
    let current = du + div - 0.5 * (sample.f.e.hdot(&j.j_e) - sample.f.h.hdot(&j.j_m));
    Ok(LinearLagrangian {
        dirac_raw,
        dirac: dirac_raw * (c_light / (4.0 * PI)),
        em,
        current,
    })
}

/// `((|E|² − |H|²)/8π, (i/ω_e)(∂U/∂t + div S))`.
pub fn maxwell_lagrangian_forms(sample: &FieldSample, units: &UnitSystem, mass: f64) -> (Complex, Complex) {
    let (du, div) = energy_flux_terms(sample, units.c);
    let lhs = invariant_difference(&sample.f) / (8.0 * PI);
    let rhs = I / units.omega_e(mass) * (du + div);
    (lhs, rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonlinearLagrangian {
    /// `i(ħ/2mc²)(∂U/∂t + div S)`; zero without derivative data.
    pub derivative_term: Complex,
    /// `(Δτ/mc²)(U² − c²g²)`.
    pub quartic_energy_momentum: f64,
    /// `Δτ/((8π)²mc²)·[(E² − H²)² + 4(E·H)²]`.
    pub quartic_invariant: f64,
    /// Bispinor forms; `None` when the field does not fit the electron layout.
    pub quantum: Option<QuantumQuartic>,
    /// `derivative_term + quartic_energy_momentum`.
    pub total: Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumQuartic {
    /// `(Δτ/8π)·[(ψ⁺a0ψ)² − Σ_k(ψ⁺a_kψ)²]`.
    pub vector: f64,
    /// `(Δτ/8π)·[(ψ⁺a4ψ)² + (ψ⁺a5ψ)²]`.
    pub scalar_plus: f64,
    /// `(Δτ/8π)·[(ψ⁺a4ψ)² − (ψ⁺a5ψ)²]`, pseudoscalar entering with a minus.
    pub scalar_minus: f64,
    /// `vector` divided by the field-form quartic term.
    pub to_em: f64,
}

/// Non-linear Lagrangian pieces for a real field.
pub fn lagrangian_nonlinear(
    f: &EmField,
    derivatives: Option<(&EmField, &EmField)>,
    model: &TorusModel,
    set: &AlphaSet,
    mass: f64,
) -> Result<NonlinearLagrangian> {
    let (e, h) = real_parts(f)?;
    let units = &model.units;
    let c_light = units.c;
    let mc2 = mass * c_light * c_light;
    let dtau = model.delta_tau;
    let (e2, h2) = (dot(e, e), dot(h, h));
    let u = (e2 + h2) / (8.0 * PI);
    let eh_cross = cross(e, h);
    // c²g² with g = E×H/(4πc)
    let c2g2 = dot(eh_cross, eh_cross) / (16.0 * PI * PI);
    let quartic_energy_momentum = dtau / mc2 * (u * u - c2g2);
    let eh = dot(e, h);
    let quartic_invariant = dtau / ((8.0 * PI).powi(2) * mc2) * ((e2 - h2).powi(2) + 4.0 * eh * eh);
    let derivative_term = match derivatives {
        Some((dt, dy)) => {
            let (du, div) = energy_flux_terms(
                &FieldSample {
                    f: *f,
                    dt: *dt,
                    dy: *dy,
                },
                c_light,
            );
            I * (units.hbar / (2.0 * mc2)) * (du + div)
        }
        None => c(0.0, 0.0),
    };
    let quantum = bispinor_from_fields(f, &FieldLayout::electron()).ok().map(|psi| {
        let b = |k: usize| set.get(k).sandwich(&psi).re;
        let pref = dtau / (8.0 * PI);
        let vector = pref * (b(0).powi(2) - (1..=3).map(|k| b(k).powi(2)).sum::<f64>());
        QuantumQuartic {
            vector,
            scalar_plus: pref * (b(4).powi(2) + b(5).powi(2)),
            scalar_minus: pref * (b(4).powi(2) - b(5).powi(2)),
            to_em: vector / quartic_energy_momentum,
        }
    });
    Ok(NonlinearLagrangian {
        derivative_term,
        quartic_energy_momentum,
        quartic_invariant,
        quantum,
        total: derivative_term + quartic_energy_momentum,
    })
}

/// Term-by-term comparison of the quartic self-interaction with the
/// photon-photon scattering Lagrangian `b[(E²−H²)² + 7(E·H)²]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    /// Coefficient of `(E² − H²)²` in the self-interaction: `Δτ/((8π)²mc²)`.
    pub self_coefficient: f64,
    /// Multiplier of `(E·H)²` relative to `(E² − H²)²` in the self-interaction.
    pub self_eh_multiplier: f64,
    /// `b = (2/45)e⁴ħ/(m⁴c⁷)`.
    pub photon_photon_b: f64,
    pub photon_photon_eh_multiplier: f64,
    /// `self_coefficient / photon_photon_b`.
    pub coefficient_ratio: f64,
}

pub fn comparison_table(model: &TorusModel, mass: f64) -> ComparisonTable {
    let u = &model.units;
    let self_coefficient = model.delta_tau / ((8.0 * PI).powi(2) * mass * u.c * u.c);
    let b = 2.0 / 45.0 * u.e.powi(4) * u.hbar / (mass.powi(4) * u.c.powi(7));
    ComparisonTable {
        self_coefficient,
        self_eh_multiplier: 4.0,
        photon_photon_b: b,
        photon_photon_eh_multiplier: 7.0,
        coefficient_ratio: self_coefficient / b,
    }
}

/// Coefficient `(ζ²/2α_q c)·r_s³` of the self-action term.
pub fn self_action_constant(model: &TorusModel, alpha_q: f64) -> Result<f64> {
    if !(alpha_q.is_finite() && alpha_q > 0.0) {
        return Err(Error::Domain("alpha_q", alpha_q));
    }
    Ok(model.zeta * model.zeta / (2.0 * alpha_q * model.c()) * model.r_s.powi(3))
}

/// Energy and momentum of a uniform field filling `Δτ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelfField {
    pub epsilon_s: f64,
    pub p_s: [f64; 3],
}

pub fn self_field(f: &EmField, model: &TorusModel) -> Result<SelfField> {
    let (e, h) = real_parts(f)?;
    let u = (dot(e, e) + dot(h, h)) / (8.0 * PI);
    let g = cross(e, h).map(|x| x / (4.0 * PI * model.c()));
    Ok(SelfField {
        epsilon_s: u * model.delta_tau,
        p_s: g.map(|x| x * model.delta_tau),
    })
}

type VectorField<'a> = &'a dyn Fn(f64, [f64; 3]) -> [f64; 3];
type ScalarField<'a> = &'a dyn Fn(f64, [f64; 3]) -> f64;

fn shifted(x: [f64; 3], axis: usize, d: f64) -> [f64; 3] {
    let mut y = x;
    y[axis] += d;
    y
}

/// Second-order central-difference curl.
pub fn curl(field: VectorField, t: f64, x: [f64; 3], h: f64) -> [f64; 3] {
    let d = |comp: usize, axis: usize| {
        (field(t, shifted(x, axis, h))[comp] - field(t, shifted(x, axis, -h))[comp]) / (2.0 * h)
    };
    [d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)]
}

pub fn gradient(field: ScalarField, t: f64, x: [f64; 3], h: f64) -> [f64; 3] {
    [0, 1, 2].map(|axis| (field(t, shifted(x, axis, h)) - field(t, shifted(x, axis, -h))) / (2.0 * h))
}

fn time_derivative(field: VectorField, t: f64, x: [f64; 3], h: f64) -> [f64; 3] {
    let (a, b) = (field(t + h, x), field(t - h, x));
    [0, 1, 2].map(|k| (a[k] - b[k]) / (2.0 * h))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Centripetal {
    pub curl: [f64; 3],
    pub acceleration: [f64; 3],
    pub speed: f64,
}

impl Centripetal {
    pub fn magnitude(&self) -> f64 {
        dot(self.acceleration, self.acceleration).sqrt()
    }
}

/// Rigid rotation `v = ω ẑ × r` sampled at `(r, 0, 0)`: curl by central
/// differences and `a = ½·v × curl v`.
pub fn centripetal(omega: f64, r: f64) -> Result<Centripetal> {
    if !(omega.is_finite() && omega >= 0.0) {
        return Err(Error::Domain("omega", omega));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Domain("r", r));
    }
    let v = move |_t: f64, x: [f64; 3]| [-omega * x[1], omega * x[0], 0.0];
    let at = [r, 0.0, 0.0];
    let w = curl(&v, 0.0, at, 1e-3 * r);
    let vel = v(0.0, at);
    let a = cross(vel, w).map(|x| 0.5 * x);
    Ok(Centripetal {
        curl: w,
        acceleration: a,
        speed: omega * r,
    })
}

/// Checks `curl v = 2ω` and `|a| = v²/r`.
pub fn centripetal_check(omega: f64, r: f64, tol: f64) -> Result<Vec<CheckReport>> {
    let cp = centripetal(omega, r)?;
    let expected_a = cp.speed * cp.speed / r;
    Ok(vec![
        CheckReport::compare(
            format!("dynamics/centripetal/curl/omega={omega}/r={r}"),
            "rot v = 2 omega e_z",
            2.0 * omega,
            cp.curl[2],
            tol,
            tol,
        ),
        CheckReport::compare(
            format!("dynamics/centripetal/acceleration/omega={omega}/r={r}"),
            "|a_r| = |(1/2) v x rot v| = v^2 / r",
            expected_a,
            cp.magnitude(),
            tol,
            tol,
        ),
    ])
}

/// `∂g/∂t + grad U − v × rot g`, derivatives by central differences.
pub fn matter_motion_lhs(
    g: VectorField,
    u: ScalarField,
    v: VectorField,
    t: f64,
    x: [f64; 3],
    h: f64,
) -> [f64; 3] {
    let gt = time_derivative(g, t, x, h);
    let gu = gradient(u, t, x, h);
    let vr = cross(v(t, x), curl(g, t, x, h));
    [0, 1, 2].map(|k| gt[k] + gu[k] - vr[k])
}

/// `lhs − f_L`.
pub fn matter_motion_residual(
    g: VectorField,
    u: ScalarField,
    v: VectorField,
    f_l: VectorField,
    t: f64,
    x: [f64; 3],
    h: f64,
) -> [f64; 3] {
    let lhs = matter_motion_lhs(g, u, v, t, x, h);
    let f = f_l(t, x);
    [0, 1, 2].map(|k| lhs[k] - f[k])
}

/// Ideal-liquid form: `∂(ρv)/∂t + grad(½ρv²) − v × rot(ρv)`, for comparing
/// term shapes with [`matter_motion_lhs`].
pub fn liquid_motion_lhs(rho: f64, v: VectorField, t: f64, x: [f64; 3], h: f64) -> [f64; 3] {
    let g = |t: f64, x: [f64; 3]| v(t, x).map(|c| rho * c);
    let u = |t: f64, x: [f64; 3]| {
        let w = v(t, x);
        0.5 * rho * dot(w, w)
    };
    matter_motion_lhs(&g, &u, v, t, x, h)
}

/// Sample of the matter-motion residual for the ring wave: energy density
/// `U = (E₀²/4π)cos²(k r_s φ − ωt)` flowing along the ring at `c`, with
/// `g = (U/c)τ̂`, `v = cτ̂` and no external force.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingWaveProfile {
    pub angles: Vec<f64>,
    pub residual_norms: Vec<f64>,
    /// Residual norms divided by `ωU₀/c`.
    pub relative: Vec<f64>,
}

pub fn ring_wave_residual(model: &TorusModel, samples: usize) -> Result<RingWaveProfile> {
    let e0 = model.e0()?;
    let c_light = model.c();
    let (k, w, rs) = (model.k, model.omega_s, model.r_s);
    let u0 = e0 * e0 / (4.0 * PI);
    let tangent = |x: [f64; 3]| {
        let phi = x[1].atan2(x[0]);
        [-phi.sin(), phi.cos(), 0.0]
    };
    let density = move |t: f64, x: [f64; 3]| {
        let phi = x[1].atan2(x[0]);
        u0 * (k * rs * phi - w * t).cos().powi(2)
    };
    let g = move |t: f64, x: [f64; 3]| tangent(x).map(|c| density(t, x) * c / c_light);
    let v = move |_t: f64, x: [f64; 3]| tangent(x).map(|c| c * c_light);
    let zero = |_t: f64, _x: [f64; 3]| [0.0; 3];
    let h = 1e-4 * rs;
    let scale = w * u0 / c_light;
    let mut angles = Vec::with_capacity(samples);
    let mut residual_norms = Vec::with_capacity(samples);
    for i in 0..samples {
        let phi = 2.0 * PI * i as f64 / samples as f64;
        let x = [rs * phi.cos(), rs * phi.sin(), 0.0];
        let r = matter_motion_residual(&g, &density, &v, &zero, 0.0, x, h);
        angles.push(phi);
        residual_norms.push(dot(r, r).sqrt());
    }
    let relative = residual_norms.iter().map(|r| r / scale).collect();
    Ok(RingWaveProfile {
        angles,
        residual_norms,
        relative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::canonical_alpha_set;
    use crate::em::{ComplexPlaneWave, FieldProfile, fields_from_bispinor};
    use crate::planewave::{branch_energy, solution_basis, Branch};
    use crate::torus::derive_parameters;

    fn nat_model() -> TorusModel {
        derive_parameters(UnitSystem::natural(), 1.0).unwrap()
    }

    #[test]
    fn stress_tensor_cases() {
        let st = stress_tensor(&EmField::real([1.0, 0.0, 0.0], [0.0; 3])).unwrap();
        assert_eq!(st.tau_00, 0.5);
        let z = stress_tensor(&EmField::ZERO).unwrap();
        assert_eq!(z.tau_00, 0.0);
        assert_eq!(z.trace(), 0.0);
        let f = EmField::real([0.3, -1.2, 0.5], [0.9, 0.1, -0.4]);
        let st = stress_tensor(&f).unwrap();
        assert!((st.trace() - st.tau_00).abs() < 1e-15);
        assert_eq!(st.asymmetry(), 0.0);
        let inv = stress_tensor_inverted_delta(&f).unwrap();
        assert!((inv.trace() - inv.tau_00).abs() > 0.1);
    }

    #[test]
    fn ring_force_values() {
        let m = nat_model();
        let f = lorentz_force_ring(&m, 0.0, Polarization::ExHz).unwrap();
        assert_eq!((f.f0, f.f2), (0.0, 0.0));
        let f = lorentz_force_ring(&m, 1.0, Polarization::ExHz).unwrap();
        assert!((f.f0 - 1.0 / (2.0 * PI)).abs() < 1e-16);
        assert!((f.f2 - f.f2_from_current).abs() < 1e-16);
        let g = lorentz_force_ring(&m, 1.0, Polarization::EzHx).unwrap();
        assert_eq!((g.f0, g.f2), (-f.f0, -f.f2));
    }

    #[test]
    fn confinement_cross_product() {
        let f = EmField::real([0.0; 3], [0.0, 0.0, 1.0]);
        let v = magnetic_confinement_density(&f, [0.0, 1.0, 0.0], 1.0).unwrap();
        assert_eq!(v, Vec3::real(1.0, 0.0, 0.0));
        let v = magnetic_confinement_density(&f, [0.0, 0.0, 3.0], 1.0).unwrap();
        assert_eq!(v.max_abs(), 0.0);
    }

    fn plus_form_wave(omega_detune: f64) -> ComplexPlaneWave {
        // ψ = B e^{i(ky − ωt)} with B in the nullspace at p_y = ħk
        let p = [0.0, 0.7, 0.0];
        let b = solution_basis(Branch::Positive, p, 1.0, 1.0)[0];
        let eps = branch_energy(Branch::Positive, p, 1.0, 1.0);
        ComplexPlaneWave {
            amplitude: fields_from_bispinor(&b, &FieldLayout::electron()),
            omega: -eps * omega_detune,
            k: -0.7,
        }
    }

    fn sample(w: &ComplexPlaneWave, t: f64, y: f64) -> FieldSample {
        FieldSample {
            f: w.fields(t, y),
            dt: w.d_dt(t, y).unwrap(),
            dy: w.d_ds(t, y).unwrap(),
        }
    }

    #[test]
    fn linear_lagrangian_vanishes_on_shell() {
        let set = canonical_alpha_set();
        let u = UnitSystem::natural();
        let l = lagrangian_linear(&sample(&plus_form_wave(1.0), 0.3, 1.1), &set, &u, 1.0).unwrap();
        assert!(l.dirac.norm() < 1e-15);
        assert!(l.spread() < 1e-15);
        let off = lagrangian_linear(&sample(&plus_form_wave(1.1), 0.3, 1.1), &set, &u, 1.0).unwrap();
        assert!(off.dirac.norm() > 1e-3);
        assert!(off.spread() <= 1e-12 * off.dirac.norm());
        let zero = FieldSample {
            f: EmField::ZERO,
            dt: EmField::ZERO,
            dy: EmField::ZERO,
        };
        assert_eq!(lagrangian_linear(&zero, &set, &u, 1.0).unwrap().em, c(0.0, 0.0));
    }

    #[test]
    fn maxwell_identity_on_conjugate_form_wave() {
        // ψ = B e^{i(ωt − ky)} with B in the nullspace at p_y = ħk
        let p = [0.0, 0.7, 0.0];
        let b = solution_basis(Branch::Positive, p, 1.0, 1.0)[1];
        let w = ComplexPlaneWave {
            amplitude: fields_from_bispinor(&b, &FieldLayout::electron()),
            omega: branch_energy(Branch::Positive, p, 1.0, 1.0),
            k: 0.7,
        };
        let (lhs, rhs) = maxwell_lagrangian_forms(&sample(&w, 0.2, -0.4), &UnitSystem::natural(), 1.0);
        assert!((lhs - rhs).norm() < 1e-15);
        let static_field = FieldSample {
            f: EmField::real([2.0, 0.0, 0.0], [0.0, 0.0, 1.0]),
            dt: EmField::ZERO,
            dy: EmField::ZERO,
        };
        let (lhs, rhs) = maxwell_lagrangian_forms(&static_field, &UnitSystem::natural(), 1.0);
        assert!((lhs.re - 3.0 / (8.0 * PI)).abs() < 1e-16);
        assert_eq!(rhs, c(0.0, 0.0));
    }

    #[test]
    fn quartic_forms_agree() {
        let m = nat_model();
        let set = canonical_alpha_set();
        let f = EmField::real([0.4, 0.0, -1.3], [0.8, 0.0, 0.25]);
        let nl = lagrangian_nonlinear(&f, None, &m, &set, 1.0).unwrap();
        assert!((nl.quartic_energy_momentum - nl.quartic_invariant).abs() <= 1e-14 * nl.quartic_invariant.abs());
        let q = nl.quantum.unwrap();
        assert!((q.vector - q.scalar_plus).abs() <= 1e-13 * q.vector.abs());
        assert!((q.to_em - 8.0 * PI).abs() < 1e-12);
        let general = EmField::real([0.4, 0.2, -1.3], [0.8, -0.6, 0.25]);
        let nl = lagrangian_nonlinear(&general, None, &m, &set, 1.0).unwrap();
        assert!(nl.quantum.is_none());
        assert!((nl.quartic_energy_momentum - nl.quartic_invariant).abs() <= 1e-14 * nl.quartic_invariant.abs());
        let z = lagrangian_nonlinear(&EmField::ZERO, None, &m, &set, 1.0).unwrap();
        assert_eq!(z.total, c(0.0, 0.0));
    }

    #[test]
    fn self_action_values() {
        let m = nat_model();
        let v = self_action_constant(&m, 2.0 / PI).unwrap();
        assert!((v - PI / 32.0).abs() < 1e-16);
        let mut big = m;
        big.r_s *= 2.0;
        assert!((self_action_constant(&big, 2.0 / PI).unwrap() / v - 8.0).abs() < 1e-14);
    }

    #[test]
    fn centripetal_values() {
        let cp = centripetal(2.0, 0.5).unwrap();
        assert!((cp.curl[2] - 4.0).abs() < 1e-12);
        assert!((cp.magnitude() - 2.0).abs() < 1e-12);
        let still = centripetal(0.0, 0.5).unwrap();
        assert_eq!(still.magnitude(), 0.0);
        assert!(centripetal(1.0, 0.0).is_err());
    }

    #[test]
    fn rigid_rotation_matter_motion() {
        let (rho, w) = (1.3, 0.8);
        let v = move |_t: f64, x: [f64; 3]| [-w * x[1], w * x[0], 0.0];
        let g = move |t: f64, x: [f64; 3]| v(t, x).map(|c| rho * c);
        let u = move |t: f64, x: [f64; 3]| {
            let s = v(t, x);
            0.5 * rho * dot(s, s)
        };
        let f_l = move |t: f64, x: [f64; 3]| {
            let s = v(t, x);
            cross(s, [0.0, 0.0, 2.0 * w]).map(|c| -0.5 * rho * c)
        };
        let x = [0.3, -0.7, 0.2];
        let r = matter_motion_residual(&g, &u, &v, &f_l, 0.0, x, 1e-3);
        assert!(r.iter().all(|c| c.abs() < 1e-12));
        let a = matter_motion_lhs(&g, &u, &v, 0.0, x, 1e-3);
        let b = liquid_motion_lhs(rho, &v, 0.0, x, 1e-3);
        assert_eq!(a, b);
        let zero = |_t: f64, _x: [f64; 3]| [0.0; 3];
        let nothing = |_t: f64, _x: [f64; 3]| 0.0;
        assert_eq!(matter_motion_residual(&zero, &nothing, &zero, &zero, 0.0, x, 1e-3), [0.0; 3]);
    }
}
