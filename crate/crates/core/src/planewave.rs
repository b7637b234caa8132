//! Plane-wave solutions `ψ = B·e^{i(k·r − ωt)}` of the free Dirac equation.
//!
//! Substitution gives the homogeneous system `M·B = 0` with
//! `M = ε·I + c·α·p + β·mc²`; its determinant is `(ε² − c²p² − m²c⁴)²`, so
//! each energy branch carries a two-dimensional nullspace.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::dirac::{canonical_alpha_set, AlphaSet};
use crate::em::{fields_from_bispinor, EmField, FieldLayout};
use crate::error::{Error, Result};
use crate::linalg::{c, Axis, Bispinor, Complex, Mat4, ONE, ZERO};
use crate::quadrature::simpson;
use crate::report::CheckReport;
use crate::torus::TorusModel;
use crate::units::UnitSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Positive => "positive",
            Branch::Negative => "negative",
        }
    }
}

/// `M = ε·a0 + c·Σ p_k a_k + mc²·a4` for an arbitrary α-set.
pub fn build_system_with(set: &AlphaSet, energy: f64, momentum: [f64; 3], mass: f64, c_light: f64) -> Mat4 {
    let mut m = set.a0.scale(c(energy, 0.0));
    for (k, p) in momentum.iter().enumerate() {
        m = m + set.get(k + 1).scale(c(c_light * p, 0.0));
    }
    m + set.a4.scale(c(mass * c_light * c_light, 0.0))
}

/// The coefficient matrix of the homogeneous amplitude system, canonical set.
pub fn build_system(energy: f64, momentum: [f64; 3], mass: f64, c_light: f64) -> Mat4 {
    build_system_with(&canonical_alpha_set(), energy, momentum, mass, c_light)
}

/// `(ε₊, ε₋) = ±√(c²p² + m²c⁴)`.
pub fn dispersion(momentum: [f64; 3], mass: f64, c_light: f64) -> (f64, f64) {
    let p2: f64 = momentum.iter().map(|p| p * p).sum();
    let e = (c_light * c_light * p2 + (mass * c_light * c_light).powi(2)).sqrt();
    (e, -e)
}

pub fn branch_energy(branch: Branch, momentum: [f64; 3], mass: f64, c_light: f64) -> f64 {
    let (ep, em) = dispersion(momentum, mass, c_light);
    match branch {
        Branch::Positive => ep,
        Branch::Negative => em,
    }
}

/// One of the four printed solution families at energy `energy`
/// (`family` in 1..=4; 1–2 pair with ε₊, 3–4 with ε₋).
pub fn printed_family(family: usize, energy: f64, momentum: [f64; 3], mass: f64, c_light: f64) -> Bispinor {
    let [px, py, pz] = momentum;
    let mc2 = mass * c_light * c_light;
    let plus = c(px, py) * c_light;
    let minus = c(px, -py) * c_light;
    let cz = c(c_light * pz, 0.0);
    match family {
        1 => {
            let d = energy + mc2;
            Bispinor::new(-cz / d, -plus / d, ONE, ZERO)
        }
        2 => {
            let d = energy + mc2;
            Bispinor::new(-minus / d, cz / d, ZERO, ONE)
        }
        3 => {
            let d = -energy + mc2;
            Bispinor::new(ONE, ZERO, cz / d, plus / d)
        }
        4 => {
            let d = -energy + mc2;
            Bispinor::new(ZERO, ONE, minus / d, -cz / d)
        }
        _ => panic!("solution families are numbered 1..=4"),
    }
}

/// The two printed solutions of a branch, evaluated on shell.
pub fn solution_basis(branch: Branch, momentum: [f64; 3], mass: f64, c_light: f64) -> [Bispinor; 2] {
    let e = branch_energy(branch, momentum, mass, c_light);
    let first = match branch {
        Branch::Positive => 1,
        Branch::Negative => 3,
    };
    [
        printed_family(first, e, momentum, mass, c_light),
        printed_family(first + 1, e, momentum, mass, c_light),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Nullspace {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    /// One vector per free column, with that column set to 1 and the other
    /// free columns to 0.
    pub basis: Vec<Bispinor>,
}

/// Gaussian elimination with partial pivoting. A column is free when its
/// best remaining pivot is below `pivot_tol · max|m|`.
pub fn nullspace(m: &Mat4, pivot_tol: f64) -> Nullspace {
    let mut a = m.0;
    let threshold = pivot_tol * m.max_abs().max(f64::MIN_POSITIVE);
    let mut pivot_columns = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        if row == 4 {
            break;
        }
        let (best, best_abs) = (row..4)
            .map(|r| (r, a[r][col].norm()))
            .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best_abs <= threshold {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for x in a[row].iter_mut() {
            *x /= p;
        }
        let pivot = a[row];
        for (r, line) in a.iter_mut().enumerate() {
            let f = line[col];
            if r != row && f != ZERO {
                for (x, v) in line.iter_mut().zip(pivot) {
                    *x -= f * v;
                }
            }
        }
        pivot_columns.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..4).filter(|k| !pivot_columns.contains(k)).collect();
    let basis = free
        .iter()
        .map(|&fcol| {
            let mut v = Bispinor::ZERO;
            v[fcol] = ONE;
            for (r, &pc) in pivot_columns.iter().enumerate() {
                v[pc] = -a[r][fcol];
            }
            v
        })
        .collect();
    Nullspace {
        rank: pivot_columns.len(),
        pivot_columns,
        basis,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveState {
    pub energy: f64,
    pub momentum: [f64; 3],
    /// `B_j = b_j·e^{iφ}`.
    pub amplitudes: Bispinor,
    pub phase: f64,
    pub branch: Branch,
}

impl PlaneWaveState {
    /// On-shell state built from solution `which` (0 or 1) of the branch.
    pub fn from_basis(
        branch: Branch,
        which: usize,
        momentum: [f64; 3],
        mass: f64,
        c_light: f64,
        phase: f64,
    ) -> Self {
        let b = solution_basis(branch, momentum, mass, c_light)[which];
        Self {
            energy: branch_energy(branch, momentum, mass, c_light),
            momentum,
            amplitudes: b.scale(Complex::from_polar(1.0, phase)),
            phase,
            branch,
        }
    }

    /// `ε² − c²p² − m²c⁴` relative to `ε²`.
    pub fn dispersion_defect(&self, mass: f64, c_light: f64) -> f64 {
        let (e, _) = dispersion(self.momentum, mass, c_light);
        (self.energy * self.energy - e * e).abs() / (e * e)
    }
}

/// `‖M·B‖∞` with `M` built from `set`.
pub fn residual(state: &PlaneWaveState, set: &AlphaSet, mass: f64, c_light: f64) -> f64 {
    build_system_with(set, state.energy, state.momentum, mass, c_light)
        .apply(&state.amplitudes)
        .max_abs()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldInterpretation {
    pub fields: EmField,
    /// `true` where the amplitude slot vanishes.
    pub zero_slots: [bool; 4],
    /// Printed-style pattern such as `(0, b2, b3, 0)`.
    pub pattern: String,
}

pub const SPARSITY_TOL: f64 = 1e-12;

/// Reads the amplitudes through `layout`. The momentum must point along the
/// layout's propagation axis.
pub fn field_interpretation(state: &PlaneWaveState, layout: &FieldLayout) -> Result<FieldInterpretation> {
    let axis = layout.axis();
    let off_axis = Axis::ALL
        .iter()
        .filter(|a| **a != axis)
        .any(|a| state.momentum[a.index()] != 0.0);
    if off_axis {
        return Err(Error::AxisMismatch { axis });
    }
    let b = &state.amplitudes;
    let scale = b.max_abs();
    let zero_slots = [0, 1, 2, 3].map(|k| b[k].norm() <= SPARSITY_TOL * scale);
    let pattern = format!(
        "({})",
        (0..4)
            .map(|k| if zero_slots[k] { "0".to_string() } else { format!("b{}", k + 1) })
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(FieldInterpretation {
        fields: fields_from_bispinor(b, layout),
        zero_slots,
        pattern,
    })
}

/// Special amplitude sets at `p = (0, mc, 0)`, `φ = π/2`, using the printed
/// families with the energy given by `energy_of(branch)`.
fn special_values(mass: f64, c_light: f64, energy_of: impl Fn(Branch) -> f64) -> [Bispinor; 4] {
    let p = [0.0, mass * c_light, 0.0];
    let phase = Complex::from_polar(1.0, FRAC_PI_2);
    [1, 2, 3, 4].map(|fam| {
        let branch = if fam <= 2 { Branch::Positive } else { Branch::Negative };
        printed_family(fam, energy_of(branch), p, mass, c_light).scale(phase)
    })
}

/// Literal substitution `ε₊ = mc²` (`ε₋ = −mc²`) with `p_y = mc`. Off shell.
pub fn literal_special_values(mass: f64, c_light: f64) -> [Bispinor; 4] {
    let mc2 = mass * c_light * c_light;
    special_values(mass, c_light, |b| match b {
        Branch::Positive => mc2,
        Branch::Negative => -mc2,
    })
}

/// Same momentum and phase, energies on shell (`±√2·mc²`).
pub fn onshell_special_values(mass: f64, c_light: f64) -> [Bispinor; 4] {
    let p = [0.0, mass * c_light, 0.0];
    special_values(mass, c_light, |b| branch_energy(b, p, mass, c_light))
}

/// The printed special amplitude sets, in family order.
pub fn printed_special_values() -> [Bispinor; 4] {
    let h = c(0.5, 0.0);
    let i = c(0.0, 1.0);
    [
        Bispinor::new(ZERO, h, i, ZERO),
        Bispinor::new(-h, ZERO, ZERO, i),
        Bispinor::new(i, ZERO, ZERO, -h),
        Bispinor::new(ZERO, i, h, ZERO),
    ]
}

/// `|H|/|E|` of a field.
pub fn magnetic_to_electric_ratio(f: &EmField) -> f64 {
    (f.h.norm_sqr() / f.e.norm_sqr()).sqrt()
}

/// `∂P/∂t + div S_pr` for the plane wave at `(t, r)`, with `P = ψ⁺ψ` and
/// `S_pr = −c·ψ⁺αψ`. Derivatives are taken analytically:
/// `∂tψ = −iωψ`, `∂_jψ = ik_jψ`.
pub fn continuity_check(
    state: &PlaneWaveState,
    set: &AlphaSet,
    units: &UnitSystem,
    t: f64,
    r: [f64; 3],
) -> CheckReport {
    let omega = state.energy / units.hbar;
    let k = state.momentum.map(|p| p / units.hbar);
    let theta = k[0] * r[0] + k[1] * r[1] + k[2] * r[2] - omega * t;
    let psi = state.amplitudes.scale(Complex::from_polar(1.0, theta));
    let psi_t = psi.scale(c(0.0, -omega));
    let dp_dt = psi.hdot(&psi_t) + psi_t.hdot(&psi);
    let mut div = ZERO;
    for (j, kj) in k.iter().enumerate() {
        let a = set.get(j + 1);
        let psi_j = psi.scale(c(0.0, *kj));
        div += (psi.hdot(&a.apply(&psi_j)) + psi_j.hdot(&a.apply(&psi))) * -units.c;
    }
    let dev = (dp_dt + div).norm();
    let scale = omega.abs().max(1.0) * psi.norm_sqr();
    CheckReport::deviation(
        "planewave/continuity",
        "dP/dt + div S_pr = 0, P = psi+ psi, S_pr = -c psi+ alpha psi",
        dev,
        scale,
        1e-12,
        1e-12,
    )
}

/// `∫_Δτ ψ′⁺ψ′ dτ` after scaling the amplitudes so that `U·Δτ = mc²` and
/// substituting `ψ = √(8πmc²)·ψ′`. The torus volume is integrated in
/// toroidal coordinates with Jacobian `ρ(R + ρcosθ)`.
pub fn normalization_integral(state: &PlaneWaveState, model: &TorusModel, n_points: usize) -> f64 {
    let mc2 = model.units.rest_energy();
    let psi2 = state.amplitudes.norm_sqr();
    // U = ψ⁺ψ/8π after scaling by s²
    let s2 = 8.0 * PI * mc2 / (psi2 * model.delta_tau);
    let density = s2 * psi2 / (8.0 * PI * mc2);
    let big_r = model.r_s;
    let n = n_points + n_points % 2;
    let volume = 2.0
        * PI
        * simpson(
            |rho| simpson(|th| rho * (big_r + rho * th.cos()), 0.0, 2.0 * PI, n),
            0.0,
            model.r_c,
            n,
        );
    density * volume
}
