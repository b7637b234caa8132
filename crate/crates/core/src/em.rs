//! Bispinor ↔ (E, H) dictionary and the Maxwell-form reading of the Dirac
//! equation.
//!
//! A [`FieldLayout`] places four field components into the four bispinor
//! slots. Electric components enter with a real unit factor, magnetic ones
//! with `±i`, so the electron layout reads `ψ = (E_x, E_z, iH_x, iH_z)`.
//!
//! Residuals of the Dirac equation are evaluated two ways: as the bispinor
//! expression `(1/c)∂tψ + s_d·a·∂sψ + s_m·iκβψ` and as four scalar
//! Maxwell-type equations written directly in field components. Both must
//! agree pointwise.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dirac::{AlphaSet, AxisTriad};
use crate::error::{Error, Result};
use crate::linalg::{c, Axis, Bispinor, Complex, Mat4, Vec3, I, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldComponent {
    Ex,
    Ey,
    Ez,
    Hx,
    Hy,
    Hz,
}

impl FieldComponent {
    pub const ALL: [FieldComponent; 6] = [
        FieldComponent::Ex,
        FieldComponent::Ey,
        FieldComponent::Ez,
        FieldComponent::Hx,
        FieldComponent::Hy,
        FieldComponent::Hz,
    ];

    pub fn is_magnetic(self) -> bool {
        matches!(self, FieldComponent::Hx | FieldComponent::Hy | FieldComponent::Hz)
    }

    pub fn axis(self) -> Axis {
        match self {
            FieldComponent::Ex | FieldComponent::Hx => Axis::X,
            FieldComponent::Ey | FieldComponent::Hy => Axis::Y,
            FieldComponent::Ez | FieldComponent::Hz => Axis::Z,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldComponent::Ex => "Ex",
            FieldComponent::Ey => "Ey",
            FieldComponent::Ez => "Ez",
            FieldComponent::Hx => "Hx",
            FieldComponent::Hy => "Hy",
            FieldComponent::Hz => "Hz",
        }
    }
}

impl fmt::Display for FieldComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One bispinor slot: `ψ_k = factor · component`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slot {
    pub component: FieldComponent,
    /// `±1` for electric components, `±i` for magnetic ones.
    pub factor: Complex,
}

impl Slot {
    /// The unit factor with the `i` of magnetic slots removed (`±1`).
    pub fn sign(&self) -> f64 {
        if self.component.is_magnetic() {
            self.factor.im
        } else {
            self.factor.re
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldLayout {
    pub label: String,
    pub slots: [Slot; 4],
    pub charge_conjugated: bool,
}

impl FieldLayout {
    /// Layout with `+1` on electric slots and `+i` on magnetic slots.
    pub fn from_components(label: impl Into<String>, components: [FieldComponent; 4]) -> Self {
        Self::with_signs(label, components, [1.0; 4], false)
    }

    pub fn with_signs(
        label: impl Into<String>,
        components: [FieldComponent; 4],
        signs: [f64; 4],
        charge_conjugated: bool,
    ) -> Self {
        let mut k = 0;
        let slots = components.map(|component| {
            let s = signs[k];
            k += 1;
            let factor = if component.is_magnetic() { c(0.0, s) } else { c(s, 0.0) };
            Slot { component, factor }
        });
        debug_assert!(
            (0..4).all(|a| (a + 1..4).all(|b| slots[a].component != slots[b].component)),
            "slots must reference distinct components"
        );
        Self {
            label: label.into(),
            slots,
            charge_conjugated,
        }
    }

    /// `(E_x, E_z, iH_x, iH_z)`, the photon moving along −y.
    pub fn electron() -> Self {
        use FieldComponent::*;
        Self::from_components("electron", [Ex, Ez, Hx, Hz])
    }

    /// `(E_x, −E_z, iH_x, −iH_z)`: charge conjugate of [`FieldLayout::electron`].
    pub fn positron() -> Self {
        use FieldComponent::*;
        Self::with_signs("positron", [Ex, Ez, Hx, Hz], [1.0, -1.0, 1.0, -1.0], true)
    }

    pub fn components(&self) -> [FieldComponent; 4] {
        self.slots.map(|s| s.component)
    }

    /// The propagation axis: the one axis with no component in the layout.
    pub fn axis(&self) -> Axis {
        let used = self.components();
        Axis::ALL
            .into_iter()
            .find(|a| used.iter().all(|c| c.axis() != *a))
            .unwrap_or(Axis::Y)
    }

    pub fn slot_of(&self, component: FieldComponent) -> Option<usize> {
        self.slots.iter().position(|s| s.component == component)
    }

    /// Slot contents with the unit factors stripped except for their sign:
    /// `(A, B, C, D)` such that `ψ = (A, B, iC, iD)` for the standard
    /// electric-then-magnetic layouts.
    pub fn scalar_values(&self, f: &EmField) -> [Complex; 4] {
        self.slots.map(|s| f.get(s.component) * s.sign())
    }
}

/// Complex electric and magnetic 3-vectors (Gaussian units).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EmField {
    pub e: Vec3,
    pub h: Vec3,
}

impl EmField {
    pub const ZERO: EmField = EmField {
        e: Vec3::ZERO,
        h: Vec3::ZERO,
    };

    pub fn new(e: Vec3, h: Vec3) -> Self {
        Self { e, h }
    }

    pub fn real(e: [f64; 3], h: [f64; 3]) -> Self {
        Self::new(Vec3::from_real(e), Vec3::from_real(h))
    }

    pub fn checked(e: Vec3, h: Vec3) -> Result<Self> {
        if e.is_finite() && h.is_finite() {
            Ok(Self { e, h })
        } else {
            Err(Error::NonFinite("EmField"))
        }
    }

    pub fn get(&self, component: FieldComponent) -> Complex {
        let v = if component.is_magnetic() { &self.h } else { &self.e };
        v.get(component.axis())
    }

    pub fn set(&mut self, component: FieldComponent, value: Complex) {
        let v = if component.is_magnetic() {
            &mut self.h
        } else {
            &mut self.e
        };
        v.set(component.axis(), value);
    }

    pub fn is_real(&self) -> bool {
        self.e.is_real() && self.h.is_real()
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.e.scale(s), self.h.scale(s))
    }

    pub fn max_abs(&self) -> f64 {
        self.e.max_abs().max(self.h.max_abs())
    }

    fn require_real(&self) -> Result<([f64; 3], [f64; 3])> {
        if self.is_real() {
            Ok((self.e.re(), self.h.re()))
        } else {
            Err(Error::NotRealMode)
        }
    }
}

impl std::ops::Add for EmField {
    type Output = EmField;
    fn add(self, o: EmField) -> EmField {
        EmField::new(self.e + o.e, self.h + o.h)
    }
}

impl std::ops::Sub for EmField {
    type Output = EmField;
    fn sub(self, o: EmField) -> EmField {
        EmField::new(self.e - o.e, self.h - o.h)
    }
}

pub fn bispinor_from_fields(f: &EmField, layout: &FieldLayout) -> Result<Bispinor> {
    for component in FieldComponent::ALL {
        if f.get(component) != ZERO && layout.slot_of(component).is_none() {
            return Err(Error::LayoutViolation {
                component: component.name(),
                layout: layout.label.clone(),
            });
        }
    }
    Ok(Bispinor(
        layout.slots.map(|s| s.factor * f.get(s.component)),
    ))
}

pub fn fields_from_bispinor(psi: &Bispinor, layout: &FieldLayout) -> EmField {
    let mut f = EmField::ZERO;
    for (slot, value) in layout.slots.iter().zip(psi.0.iter()) {
        // factor is a unit, so its conjugate is its inverse
        f.set(slot.component, value * slot.factor.conj());
    }
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BilinearKind {
    /// a4 = β.
    Scalar,
    Vector0,
    Vector1,
    Vector2,
    Vector3,
    /// a5.
    Pseudoscalar,
}

impl BilinearKind {
    pub fn matrix_index(self) -> usize {
        match self {
            BilinearKind::Vector0 => 0,
            BilinearKind::Vector1 => 1,
            BilinearKind::Vector2 => 2,
            BilinearKind::Vector3 => 3,
            BilinearKind::Scalar => 4,
            BilinearKind::Pseudoscalar => 5,
        }
    }

    pub fn vector(index: usize) -> Self {
        match index {
            0 => BilinearKind::Vector0,
            1 => BilinearKind::Vector1,
            2 => BilinearKind::Vector2,
            _ => BilinearKind::Vector3,
        }
    }
}

/// ψ⁺ · a_kind · ψ.
pub fn bilinear(kind: BilinearKind, psi: &Bispinor, set: &AlphaSet) -> Complex {
    set.get(kind.matrix_index()).sandwich(psi)
}

/// `((E²+H²)² − 4(E×H)², (E²−H²)² + 4(E·H)²)` for real fields.
pub fn fierz_em(f: &EmField) -> Result<(f64, f64)> {
    let (e, h) = f.require_real()?;
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let cross = [
        e[1] * h[2] - e[2] * h[1],
        e[2] * h[0] - e[0] * h[2],
        e[0] * h[1] - e[1] * h[0],
    ];
    let (e2, h2) = (dot(e, e), dot(h, h));
    let eh = dot(e, h);
    let lhs = (e2 + h2).powi(2) - 4.0 * dot(cross, cross);
    let rhs = (e2 - h2).powi(2) + 4.0 * eh * eh;
    Ok((lhs, rhs))
}

/// `((ψ⁺a0ψ)² − Σ_k (ψ⁺a_kψ)², (ψ⁺a4ψ)² + (ψ⁺a5ψ)²)`. Bilinears of Hermitian
/// matrices are real; their real parts are used.
pub fn fierz_quantum(psi: &Bispinor, set: &AlphaSet) -> (f64, f64) {
    let b = |k: usize| set.get(k).sandwich(psi).re;
    let lhs = b(0).powi(2) - (1..=3).map(|k| b(k).powi(2)).sum::<f64>();
    let rhs = b(4).powi(2) + b(5).powi(2);
    (lhs, rhs)
}

/// (E² + H²)/8π.
pub fn energy_density(f: &EmField) -> Result<f64> {
    let (e, h) = f.require_real()?;
    let sq = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>();
    Ok((sq(e) + sq(h)) / (8.0 * PI))
}

/// (c/4π)·E×H. Momentum density is this divided by c².
pub fn poynting(f: &EmField, c_light: f64) -> Result<Vec3> {
    f.require_real()?;
    Ok(f.e.cross(&f.h).scale(Complex::new(c_light / (4.0 * PI), 0.0)))
}

/// Which printed form of the Dirac equation a residual refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignForm {
    /// `(ε̂ + cα·p̂ + βmc²)ψ = 0`.
    Plus,
    /// The Hermitian-conjugate partner of [`SignForm::Plus`].
    PlusConjugate,
    /// `(ε̂ − cα·p̂ − βmc²)ψ = 0`.
    Minus,
}

impl SignForm {
    pub const ALL: [SignForm; 3] = [SignForm::Plus, SignForm::PlusConjugate, SignForm::Minus];

    /// (s_d, s_m): signs of the spatial-derivative and mass terms in
    /// `(1/c)∂tψ + s_d·a·∂sψ + s_m·iκβψ`.
    pub fn signs(self) -> (f64, f64) {
        match self {
            SignForm::Plus => (-1.0, -1.0),
            SignForm::PlusConjugate => (-1.0, 1.0),
            SignForm::Minus => (1.0, 1.0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignForm::Plus => "plus",
            SignForm::PlusConjugate => "plus_conjugate",
            SignForm::Minus => "minus",
        }
    }
}

/// Space-time field profile along one axis coordinate `s`.
pub trait FieldProfile {
    fn fields(&self, t: f64, s: f64) -> EmField;

    /// ∂/∂t, when known in closed form.
    fn d_dt(&self, _t: f64, _s: f64) -> Option<EmField> {
        None
    }

    /// ∂/∂s, when known in closed form.
    fn d_ds(&self, _t: f64, _s: f64) -> Option<EmField> {
        None
    }
}

/// `amplitude · e^{i(ωt − ks)}`; flip the signs of ω and k for the opposite
/// phase convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPlaneWave {
    pub amplitude: EmField,
    pub omega: f64,
    pub k: f64,
}

impl ComplexPlaneWave {
    fn phase(&self, t: f64, s: f64) -> Complex {
        Complex::from_polar(1.0, self.omega * t - self.k * s)
    }
}

impl FieldProfile for ComplexPlaneWave {
    fn fields(&self, t: f64, s: f64) -> EmField {
        self.amplitude.scale(self.phase(t, s))
    }

    fn d_dt(&self, t: f64, s: f64) -> Option<EmField> {
        Some(self.amplitude.scale(self.phase(t, s) * I * self.omega))
    }

    fn d_ds(&self, t: f64, s: f64) -> Option<EmField> {
        Some(self.amplitude.scale(self.phase(t, s) * I * -self.k))
    }
}

/// Real standing profile `amplitude · cos(ωt − ks)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CosineWave {
    pub amplitude: EmField,
    pub omega: f64,
    pub k: f64,
}

impl FieldProfile for CosineWave {
    fn fields(&self, t: f64, s: f64) -> EmField {
        self.amplitude
            .scale(Complex::new((self.omega * t - self.k * s).cos(), 0.0))
    }

    fn d_dt(&self, t: f64, s: f64) -> Option<EmField> {
        let d = -self.omega * (self.omega * t - self.k * s).sin();
        Some(self.amplitude.scale(Complex::new(d, 0.0)))
    }

    fn d_ds(&self, t: f64, s: f64) -> Option<EmField> {
        let d = self.k * (self.omega * t - self.k * s).sin();
        Some(self.amplitude.scale(Complex::new(d, 0.0)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivatives {
    Analytic,
    /// Fourth-order central differences with step `h` in space and `h/c` in
    /// time. The truncation estimate `|D_h − D_2h|` of `∂s` and of `(1/c)∂t`
    /// must stay below `tolerance`.
    CentralDifference { h: f64, tolerance: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualSetup {
    pub c: f64,
    /// mc/ħ.
    pub kappa: f64,
    pub form: SignForm,
    pub derivatives: Derivatives,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualPoint {
    pub t: f64,
    pub s: f64,
    /// The four scalar equations, rows 3 and 4 multiplied by `i` so they sit
    /// on the same footing as bispinor components.
    pub scalar: [Complex; 4],
    pub bispinor: Bispinor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualGrid {
    pub points: Vec<ResidualPoint>,
    pub max_scalar: f64,
    pub max_bispinor: f64,
    /// max |scalar − bispinor| over all points and rows.
    pub max_disagreement: f64,
    /// Largest field component magnitude seen, for relative comparisons.
    pub field_scale: f64,
}

fn central4(f: &dyn Fn(f64) -> EmField, x: f64, h: f64) -> EmField {
    let w = |v: f64| Complex::new(v / (12.0 * h), 0.0);
    f(x - 2.0 * h).scale(w(1.0)) - f(x - h).scale(w(8.0)) + f(x + h).scale(w(8.0))
        - f(x + 2.0 * h).scale(w(1.0))
}

fn derivative(
    analytic: Option<EmField>,
    f: &dyn Fn(f64) -> EmField,
    x: f64,
    how: Derivatives,
    speed: f64,
) -> Result<EmField> {
    match how {
        Derivatives::Analytic => {
            analytic.ok_or_else(|| Error::Config("profile supplies no analytic derivative".into()))
        }
        Derivatives::CentralDifference { h, tolerance } => {
            let step = h / speed;
            let fine = central4(f, x, step);
            let coarse = central4(f, x, 2.0 * step);
            let estimate = (fine - coarse).max_abs() / speed;
            if estimate > tolerance {
                return Err(Error::GridTooCoarse {
                    estimate,
                    tolerance,
                });
            }
            Ok(fine)
        }
    }
}

/// The four scalar equations in field components (no matrices involved):
///
/// ```text
/// R1 = (1/c)∂tA + s_d ∂sD + s_m iκA
/// R2 = (1/c)∂tB − s_d ∂sC + s_m iκB
/// R3 = (1/c)∂tC − s_d ∂sB − s_m iκC
/// R4 = (1/c)∂tD + s_d ∂sA − s_m iκD
/// ```
///
/// with `(A, B, C, D)` the layout's slot values.
pub fn scalar_residuals(
    layout: &FieldLayout,
    f: &EmField,
    dt: &EmField,
    ds: &EmField,
    setup: &ResidualSetup,
) -> [Complex; 4] {
    let (sd, sm) = setup.form.signs();
    let [a, b, cc, d] = layout.scalar_values(f);
    let [at, bt, ct, dt_] = layout.scalar_values(dt);
    let [as_, bs, cs, ds_] = layout.scalar_values(ds);
    let inv_c = 1.0 / setup.c;
    let ik = I * setup.kappa;
    [
        at * inv_c + ds_ * sd + ik * sm * a,
        bt * inv_c - cs * sd + ik * sm * b,
        ct * inv_c - bs * sd - ik * sm * cc,
        dt_ * inv_c + as_ * sd - ik * sm * d,
    ]
}

/// `(1/c)∂tψ + s_d·W·∂sψ + s_m·iκβψ` with `W` the triad's working matrix.
pub fn bispinor_residual(
    triad: &AxisTriad,
    set: &AlphaSet,
    psi: &Bispinor,
    dpsi_dt: &Bispinor,
    dpsi_ds: &Bispinor,
    setup: &ResidualSetup,
) -> Bispinor {
    let (sd, sm) = setup.form.signs();
    let w = triad.working_matrix(set);
    dpsi_dt.scale(c(1.0 / setup.c, 0.0))
        + w.apply(dpsi_ds).scale(c(sd, 0.0))
        + set.beta().apply(psi).scale(I * setup.kappa * sm)
}

/// Evaluates both residual forms on `grid` (pairs `(t, s)`), with `s` the
/// coordinate along the triad's axis.
pub fn dirac_residual_em(
    profile: &dyn FieldProfile,
    triad: &AxisTriad,
    set: &AlphaSet,
    setup: &ResidualSetup,
    grid: &[(f64, f64)],
) -> Result<ResidualGrid> {
    let layout = &triad.layout;
    let mut points = Vec::with_capacity(grid.len());
    let (mut max_scalar, mut max_bispinor, mut max_disagreement, mut field_scale) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(t, s) in grid {
        let f = profile.fields(t, s);
        let dt = derivative(
            profile.d_dt(t, s),
            &|x| profile.fields(x, s),
            t,
            setup.derivatives,
            setup.c,
        )?;
        let ds = derivative(
            profile.d_ds(t, s),
            &|x| profile.fields(t, x),
            s,
            setup.derivatives,
            1.0,
        )?;
        let r = scalar_residuals(layout, &f, &dt, &ds, setup);
        let scalar = [r[0], r[1], I * r[2], I * r[3]];
        let psi = bispinor_from_fields(&f, layout)?;
        let psi_t = bispinor_from_fields(&dt, layout)?;
        let psi_s = bispinor_from_fields(&ds, layout)?;
        let bispinor = bispinor_residual(triad, set, &psi, &psi_t, &psi_s, setup);
        let scalar_b = Bispinor(scalar);
        max_scalar = max_scalar.max(scalar_b.max_abs());
        max_bispinor = max_bispinor.max(bispinor.max_abs());
        max_disagreement = max_disagreement.max((scalar_b - bispinor).max_abs());
        field_scale = field_scale.max(f.max_abs());
        points.push(ResidualPoint {
            t,
            s,
            scalar,
            bispinor,
        });
    }
    Ok(ResidualGrid {
        points,
        max_scalar,
        max_bispinor,
        max_disagreement,
        field_scale,
    })
}

/// The four scalar equations of a layout written out, e.g.
/// `(1/c)dEx/dt + dHz/dy + i kappa Ex`.
pub fn scalar_equations(triad: &AxisTriad, form: SignForm) -> [String; 4] {
    let (sd, sm) = form.signs();
    let slots = triad.layout.slots;
    let axis = triad.axis;
    let name = |k: usize| {
        let sg = if slots[k].sign() < 0.0 { "-" } else { "" };
        format!("{sg}{}", slots[k].component)
    };
    let term = |sign: f64, body: String| {
        if sign < 0.0 {
            format!(" - {body}")
        } else {
            format!(" + {body}")
        }
    };
    let row = |own: usize, other: usize, ds: f64, ms: f64| {
        format!(
            "(1/c)d[{}]/dt{}{}",
            name(own),
            term(ds, format!("d[{}]/d{axis}", name(other))),
            term(ms, format!("i kappa [{}]", name(own)))
        )
    };
    [
        row(0, 3, sd, sm),
        row(1, 2, -sd, sm),
        row(2, 1, -sd, -sm),
        row(3, 0, sd, -sm),
    ]
}

/// Maximum over `a0..a5` of `|ψ⁺aψ − ψ′⁺(S⁺aS)ψ′|` with `ψ′ = S⁺ψ`.
pub fn bilinear_invariance_defect(psi: &Bispinor, s: &Mat4, set: &AlphaSet) -> f64 {
    let sd = s.adjoint();
    let primed = sd.apply(psi);
    (0..6)
        .map(|k| {
            let a = set.get(k);
            (a.sandwich(psi) - (sd * *a * *s).sandwich(&primed)).norm()
        })
        .fold(0.0, f64::max)
}

/// Primed components in the printed form
/// `((E_x+iH_x), (E_z+iH_z), (E_z−iH_z), (E_x−iH_x))/√2`.
pub fn printed_primed_bispinor(f: &EmField) -> Bispinor {
    let h = c(FRAC_1_SQRT_2, 0.0);
    let (ex, ez, hx, hz) = (f.e.x, f.e.z, f.h.x, f.h.z);
    Bispinor::new(
        (ex + I * hx) * h,
        (ez + I * hz) * h,
        (ez - I * hz) * h,
        (ex - I * hx) * h,
    )
}

/// A candidate reading of how primed and unprimed bispinors pair up.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingCandidate {
    pub label: String,
    /// max |ψ − back(ψ′)| where `back` is the candidate's reconstruction.
    pub round_trip_error: f64,
    /// max over `a0..a5` of |ψ⁺aψ − ψ′⁺(S⁺aS)ψ′|.
    pub bilinear_error: f64,
}

impl PairingCandidate {
    pub fn consistent(&self, tol: f64) -> bool {
        self.round_trip_error <= tol && self.bilinear_error <= tol
    }
}

/// Evaluates three readings of the primed/unprimed pairing on one field:
///
/// * `printed`: printed primed components, reconstructed with `ψ = Sψ′`;
/// * `swapped`: printed primed components, with the sum/difference rows of
///   the reconstruction exchanged;
/// * `adjoint`: `ψ′ = S⁺ψ`, reconstructed with `ψ = Sψ′`.
pub fn pairing_candidates(f: &EmField, set: &AlphaSet, s: &Mat4) -> Result<Vec<PairingCandidate>> {
    let psi = bispinor_from_fields(f, &FieldLayout::electron())?;
    let sd = s.adjoint();
    let mut swapped_s = *s;
    swapped_s.0.swap(0, 2);
    let bil = |primed: &Bispinor| {
        (0..6)
            .map(|k| {
                let a = set.get(k);
                (a.sandwich(&psi) - (sd * *a * *s).sandwich(primed)).norm()
            })
            .fold(0.0, f64::max)
    };
    let printed = printed_primed_bispinor(f);
    let adjoint = sd.apply(&psi);
    Ok(vec![
        PairingCandidate {
            label: "printed".into(),
            round_trip_error: (s.apply(&printed) - psi).max_abs(),
            bilinear_error: bil(&printed),
        },
        PairingCandidate {
            label: "swapped".into(),
            round_trip_error: (swapped_s.apply(&printed) - psi).max_abs(),
            bilinear_error: bil(&printed),
        },
        PairingCandidate {
            label: "adjoint".into(),
            round_trip_error: (s.apply(&adjoint) - psi).max_abs(),
            bilinear_error: bil(&adjoint),
        },
    ])
}

/// `ψ⁺ψ` in layout-independent form: `|E|² + |H|²`.
pub fn field_norm_sqr(f: &EmField) -> f64 {
    f.e.norm_sqr() + f.h.norm_sqr()
}
