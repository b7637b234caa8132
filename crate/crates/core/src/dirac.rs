//! The α-set of Dirac matrices and the machinery built on it.
//!
//! The canonical set is the standard Dirac representation written with α and β
//! (no γ matrices): `a0 = I`, `a1..a3` the velocity matrices, `a4 = β` and
//! `a5 = a1·a2·a3·a4`. Matrices are integer/imaginary-entry, so algebraic
//! identities over them are checked with zero tolerance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::em::{FieldComponent, FieldLayout};
use crate::error::{Error, Result};
use crate::linalg::{Axis, Complex, Mat4};
use crate::report::CheckReport;

const PHASES: [Complex; 4] = [
    Complex::new(1.0, 0.0),
    Complex::new(-1.0, 0.0),
    Complex::new(0.0, 1.0),
    Complex::new(0.0, -1.0),
];

/// Builds a matrix from (re, im) integer pairs.
fn mat(rows: [[(i8, i8); 4]; 4]) -> Mat4 {
    Mat4(rows.map(|r| r.map(|(a, b)| Complex::new(a as f64, b as f64))))
}

/// A labelled set of six Dirac matrices `a0..a5` (`a4 ≡ β`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaSet {
    pub label: String,
    pub a0: Mat4,
    pub a1: Mat4,
    pub a2: Mat4,
    pub a3: Mat4,
    pub a4: Mat4,
    pub a5: Mat4,
}

impl AlphaSet {
    pub fn matrices(&self) -> [&Mat4; 6] {
        [&self.a0, &self.a1, &self.a2, &self.a3, &self.a4, &self.a5]
    }

    /// Matrix by index 0..=5.
    pub fn get(&self, index: usize) -> &Mat4 {
        self.matrices()[index]
    }

    /// The anticommuting quartet `a1..a4`.
    pub fn clifford(&self) -> [&Mat4; 4] {
        [&self.a1, &self.a2, &self.a3, &self.a4]
    }

    pub fn map(&self, label: impl Into<String>, f: impl Fn(&Mat4) -> Mat4) -> AlphaSet {
        AlphaSet {
            label: label.into(),
            a0: f(&self.a0),
            a1: f(&self.a1),
            a2: f(&self.a2),
            a3: f(&self.a3),
            a4: f(&self.a4),
            a5: f(&self.a5),
        }
    }

    pub fn beta(&self) -> &Mat4 {
        &self.a4
    }
}

/// The canonical α-set with `a5` formed as the product `a1·a2·a3·a4`.
pub fn canonical_alpha_set() -> AlphaSet {
    let a0 = Mat4::identity();
    let a1 = mat([
        [(0, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
    ]);
    let a2 = mat([
        [(0, 0), (0, 0), (0, 0), (0, -1)],
        [(0, 0), (0, 0), (0, 1), (0, 0)],
        [(0, 0), (0, -1), (0, 0), (0, 0)],
        [(0, 1), (0, 0), (0, 0), (0, 0)],
    ]);
    let a3 = mat([
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (-1, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (-1, 0), (0, 0), (0, 0)],
    ]);
    let a4 = mat([
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (-1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (-1, 0)],
    ]);
    let a5 = a1 * a2 * a3 * a4;
    AlphaSet {
        label: "canonical".into(),
        a0,
        a1,
        a2,
        a3,
        a4,
        a5,
    }
}

/// The primed set exactly as printed alongside the unitary change of
/// representation, including its printed `a5`. The printed `a2` has a
/// non-Hermitian lower block; it is kept verbatim so the defect stays visible.
pub fn alpha_prime_set() -> AlphaSet {
    AlphaSet {
        label: "primed".into(),
        a0: Mat4::identity(),
        a1: mat([
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(1, 0), (0, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (1, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
        ]),
        a2: mat([
            [(0, 0), (0, -1), (0, 0), (0, 0)],
            [(0, 1), (0, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (0, 1)],
            [(0, 0), (0, 0), (0, 1), (0, 0)],
        ]),
        a3: mat([
            [(1, 0), (0, 0), (0, 0), (0, 0)],
            [(0, 0), (-1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (-1, 0)],
        ]),
        a4: mat([
            [(0, 0), (0, 0), (0, 0), (-1, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(-1, 0), (0, 0), (0, 0), (0, 0)],
        ]),
        a5: mat([
            [(0, 0), (0, 0), (0, 0), (0, -1)],
            [(0, 0), (0, 0), (0, 1), (0, 0)],
            [(0, 0), (0, -1), (0, 0), (0, 0)],
            [(0, 1), (0, 0), (0, 0), (0, 0)],
        ]),
    }
}

/// The (1/√2)-scaled real orthogonal matrix relating the canonical and primed
/// representations.
pub fn s_matrix() -> Mat4 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Mat4::from_real([
        [s, 0.0, 0.0, -s],
        [0.0, s, s, 0.0],
        [s, 0.0, 0.0, s],
        [0.0, s, -s, 0.0],
    ])
}

/// max over μ,ν ∈ {1..4} of ‖{aμ, aν} − 2δ_μν I‖∞.
pub fn anticommutation_deviation(set: &AlphaSet) -> f64 {
    let quartet = set.clifford();
    let two = Mat4::identity().scale(Complex::new(2.0, 0.0));
    let mut worst: f64 = 0.0;
    for (m, a) in quartet.iter().enumerate() {
        for (n, b) in quartet.iter().enumerate() {
            let target = if m == n { two } else { Mat4::zero() };
            worst = worst.max(a.anticommutator(b).max_abs_diff(&target));
        }
    }
    worst
}

/// max over μ ∈ {1..4} of ‖{a5, aμ}‖∞, together with ‖a5² − I‖∞.
pub fn a5_deviation(set: &AlphaSet) -> f64 {
    let mut worst = (set.a5 * set.a5).max_abs_diff(&Mat4::identity());
    for a in set.clifford() {
        worst = worst.max(set.a5.anticommutator(a).max_abs());
    }
    worst
}

pub fn hermiticity_deviation(set: &AlphaSet) -> f64 {
    set.matrices()
        .iter()
        .map(|m| m.hermiticity_defect())
        .fold(0.0, f64::max)
}

pub fn verify_anticommutation(set: &AlphaSet) -> CheckReport {
    CheckReport::deviation(
        format!("anticommutation/{}", set.label),
        "{a_mu, a_nu} = 2 delta_mu_nu I, mu,nu in 1..4",
        anticommutation_deviation(set),
        1.0,
        0.0,
        0.0,
    )
}

fn phase_distance(a: &Mat4, b: &Mat4) -> f64 {
    PHASES
        .iter()
        .map(|p| a.max_abs_diff(&b.scale(*p)))
        .fold(f64::INFINITY, f64::min)
}

const GROUP_ORDER: usize = 16;
const GROUP_ROUNDS: usize = 5;

/// Closure of `{I, a1..a5}` under multiplication, one representative per
/// phase class (`M ~ pM` for `p ∈ {±1, ±i}`).
pub fn generate_group(set: &AlphaSet) -> Result<Vec<Mat4>> {
    let generators: Vec<Mat4> = [&set.a1, &set.a2, &set.a3, &set.a4, &set.a5]
        .into_iter()
        .copied()
        .collect();
    let mut classes: Vec<Mat4> = vec![Mat4::identity()];
    let is_new = |classes: &[Mat4], m: &Mat4| classes.iter().all(|r| phase_distance(m, r) > 1e-12);
    for g in &generators {
        if is_new(&classes, g) {
            classes.push(*g);
        }
    }
    let mut frontier = classes.clone();
    for _round in 0..GROUP_ROUNDS {
        let mut fresh = Vec::new();
        for a in &frontier {
            for g in &generators {
                let p = *a * *g;
                if is_new(&classes, &p) && is_new(&fresh, &p) {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(classes);
        }
        classes.extend(fresh.iter().copied());
        if classes.len() > GROUP_ORDER {
            return Err(Error::NonClosure {
                classes: classes.len(),
                rounds: GROUP_ROUNDS,
            });
        }
        frontier = fresh;
    }
    Err(Error::NonClosure {
        classes: classes.len(),
        rounds: GROUP_ROUNDS,
    })
}

/// Whether two matrices are equal up to a phase in `{±1, ±i}`.
pub fn same_phase_class(a: &Mat4, b: &Mat4, tol: f64) -> bool {
    phase_distance(a, b) <= tol
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformMode {
    /// `S · a · S`, the product as literally written.
    TwoSided,
    /// `S⁺ · a · S`.
    Similarity,
}

impl TransformMode {
    pub const ALL: [TransformMode; 2] = [TransformMode::TwoSided, TransformMode::Similarity];

    pub fn as_str(&self) -> &'static str {
        match self {
            TransformMode::TwoSided => "two_sided",
            TransformMode::Similarity => "similarity",
        }
    }
}

pub const UNITARY_TOL: f64 = 1e-12;

pub fn canonical_transform(s: &Mat4, set: &AlphaSet, mode: TransformMode) -> Result<AlphaSet> {
    let defect = s.unitarity_defect();
    if defect > UNITARY_TOL {
        return Err(Error::NotUnitary { defect });
    }
    let sd = s.adjoint();
    let label = format!("{}-{}", set.label, mode.as_str());
    Ok(match mode {
        TransformMode::TwoSided => set.map(label, |a| *s * *a * *s),
        TransformMode::Similarity => set.map(label, |a| sd * *a * *s),
    })
}

/// Entrywise comparison of one transformed matrix with its target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixMatch {
    pub index: usize,
    pub max_diff: f64,
    /// 1-based (row, column) of entries that differ.
    pub mismatched_entries: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeComparison {
    pub mode: TransformMode,
    pub matrices: Vec<MatrixMatch>,
    pub matched: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformComparison {
    pub modes: Vec<ModeComparison>,
    /// The mode matching the target on every matrix that passes the
    /// Hermiticity screen, if exactly one does.
    pub winner: Option<TransformMode>,
    /// Target matrices excluded from the decision because they are not
    /// Hermitian (and so cannot be the image of a Hermitian matrix under a
    /// unitary change of basis).
    pub defective_targets: Vec<usize>,
}

/// Transforms `set` with `s` in both modes and compares each result with
/// `target` entrywise over `a1..a5`.
pub fn compare_transform_modes(
    s: &Mat4,
    set: &AlphaSet,
    target: &AlphaSet,
    tol: f64,
) -> Result<TransformComparison> {
    let defective_targets: Vec<usize> = (1..=5)
        .filter(|&k| !target.get(k).is_hermitian(tol))
        .collect();
    let mut modes = Vec::new();
    for mode in TransformMode::ALL {
        let out = canonical_transform(s, set, mode)?;
        let matrices: Vec<MatrixMatch> = (1..=5)
            .map(|k| {
                let diff = *out.get(k) - *target.get(k);
                let mut mismatched_entries = Vec::new();
                for r in 0..4 {
                    for col in 0..4 {
                        if diff.0[r][col].norm() > tol {
                            mismatched_entries.push((r + 1, col + 1));
                        }
                    }
                }
                MatrixMatch {
                    index: k,
                    max_diff: diff.max_abs(),
                    mismatched_entries,
                }
            })
            .collect();
        let matched = matrices
            .iter()
            .filter(|m| m.mismatched_entries.is_empty())
            .count();
        modes.push(ModeComparison {
            mode,
            matrices,
            matched,
        });
    }
    let winners: Vec<TransformMode> = modes
        .iter()
        .filter(|m| {
            m.matrices.iter().all(|mm| {
                mm.mismatched_entries.is_empty() || defective_targets.contains(&mm.index)
            })
        })
        .map(|m| m.mode)
        .collect();
    Ok(TransformComparison {
        winner: if winners.len() == 1 {
            Some(winners[0])
        } else {
            None
        },
        modes,
        defective_targets,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Counterclockwise index transposition; photon moving along −axis.
    Negative,
    /// Clockwise transposition; photon moving along +axis.
    Positive,
}

impl Orientation {
    /// Sign of the working bilinear relative to `2[E×H]_axis`.
    pub fn sign(&self) -> f64 {
        match self {
            Orientation::Negative => -1.0,
            Orientation::Positive => 1.0,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Negative => "negative",
            Orientation::Positive => "positive",
        })
    }
}

/// Assignment of the velocity matrices to coordinate axes plus the bispinor
/// layout for a photon travelling along `axis`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisTriad {
    pub axis: Axis,
    pub orientation: Orientation,
    /// `matrix_assignment[k]` is the index (1..=3) of the matrix attached to
    /// coordinate axis `k` (x, y, z).
    pub matrix_assignment: [usize; 3],
    pub layout: FieldLayout,
}

impl AxisTriad {
    pub fn label(&self) -> String {
        format!("{}-{}", self.orientation, self.axis)
    }

    pub fn matrix_for<'a>(&self, axis: Axis, set: &'a AlphaSet) -> &'a Mat4 {
        set.get(self.matrix_assignment[axis.index()])
    }

    /// The matrix attached to the triad's own propagation axis.
    pub fn working_matrix<'a>(&self, set: &'a AlphaSet) -> &'a Mat4 {
        self.matrix_for(self.axis, set)
    }

    pub fn working_index(&self) -> usize {
        self.matrix_assignment[self.axis.index()]
    }
}

/// Matrix groups: y ↦ (a1x, a2y, a3z), x ↦ (a2x, a3y, a1z), z ↦ (a3x, a1y, a2z).
fn assignment(axis: Axis) -> [usize; 3] {
    match axis {
        Axis::Y => [1, 2, 3],
        Axis::X => [2, 3, 1],
        Axis::Z => [3, 1, 2],
    }
}

fn layout_slots(axis: Axis, orientation: Orientation) -> [FieldComponent; 4] {
    use FieldComponent::*;
    match (orientation, axis) {
        (Orientation::Negative, Axis::Y) => [Ex, Ez, Hx, Hz],
        (Orientation::Negative, Axis::X) => [Ez, Ey, Hz, Hy],
        (Orientation::Negative, Axis::Z) => [Ey, Ex, Hy, Hx],
        (Orientation::Positive, Axis::Y) => [Ez, Ex, Hz, Hx],
        (Orientation::Positive, Axis::X) => [Ey, Ez, Hy, Hz],
        (Orientation::Positive, Axis::Z) => [Ex, Ey, Hx, Hy],
    }
}

pub fn axis_triad(axis: Axis, orientation: Orientation) -> AxisTriad {
    AxisTriad {
        axis,
        orientation,
        matrix_assignment: assignment(axis),
        layout: FieldLayout::from_components(
            format!("{orientation}-{axis}"),
            layout_slots(axis, orientation),
        ),
    }
}

/// All six triads: negative y, x, z then positive y, x, z.
pub fn axis_triads() -> Vec<AxisTriad> {
    [Orientation::Negative, Orientation::Positive]
        .into_iter()
        .flat_map(|o| [Axis::Y, Axis::X, Axis::Z].map(|a| axis_triad(a, o)))
        .collect()
}
