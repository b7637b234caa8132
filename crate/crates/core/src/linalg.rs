//! Fixed-shape complex linear algebra: 3-vectors, bispinors and 4×4 matrices.
//!
//! Everything here is plain value types with exact floating arithmetic. Shapes
//! are encoded in the types, so there is no dimension checking at run time.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
pub fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn all_finite<'a>(values: impl IntoIterator<Item = &'a Complex>) -> bool {
    values.into_iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Cartesian axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// Complex 3-vector. Real-valued vectors carry zero imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: Complex,
    pub y: Complex,
    pub z: Complex,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: ZERO,
        y: ZERO,
        z: ZERO,
    };

    pub fn new(x: Complex, y: Complex, z: Complex) -> Self {
        Self { x, y, z }
    }

    pub fn real(x: f64, y: f64, z: f64) -> Self {
        Self::new(re(x), re(y), re(z))
    }

    pub fn from_real(v: [f64; 3]) -> Self {
        Self::real(v[0], v[1], v[2])
    }

    pub fn checked(x: Complex, y: Complex, z: Complex) -> Result<Self> {
        if all_finite([&x, &y, &z]) {
            Ok(Self::new(x, y, z))
        } else {
            Err(Error::NonFinite("Vec3"))
        }
    }

    pub fn components(&self) -> [Complex; 3] {
        [self.x, self.y, self.z]
    }

    pub fn get(&self, axis: Axis) -> Complex {
        self.components()[axis.index()]
    }

    pub fn set(&mut self, axis: Axis, value: Complex) {
        match axis {
            Axis::X => self.x = value,
            Axis::Y => self.y = value,
            Axis::Z => self.z = value,
        }
    }

    pub fn is_finite(&self) -> bool {
        all_finite(&self.components())
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.components().iter().all(|z| z.im == 0.0)
    }

    pub fn re(&self) -> [f64; 3] {
        [self.x.re, self.y.re, self.z.re]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.x.conj(), self.y.conj(), self.z.conj())
    }

    /// Bilinear dot product, no conjugation.
    pub fn dot(&self, other: &Self) -> Complex {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Hermitian product `self* · other`.
    pub fn hdot(&self, other: &Self) -> Complex {
        self.conj().dot(other)
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    /// Σ|v_k|².
    pub fn norm_sqr(&self) -> f64 {
        self.components().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Four-component complex column on which the 4×4 matrices act.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Bispinor(pub [Complex; 4]);

impl Bispinor {
    pub const ZERO: Bispinor = Bispinor([ZERO; 4]);

    pub fn new(c1: Complex, c2: Complex, c3: Complex, c4: Complex) -> Self {
        Self([c1, c2, c3, c4])
    }

    pub fn checked(components: [Complex; 4]) -> Result<Self> {
        if all_finite(&components) {
            Ok(Self(components))
        } else {
            Err(Error::NonFinite("Bispinor"))
        }
    }

    pub fn components(&self) -> &[Complex; 4] {
        &self.0
    }

    /// Hermitian inner product ψ⁺φ.
    pub fn hdot(&self, other: &Bispinor) -> Complex {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self(self.0.map(|z| z * s))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        all_finite(&self.0)
    }
}

impl Index<usize> for Bispinor {
    type Output = Complex;
    fn index(&self, i: usize) -> &Complex {
        &self.0[i]
    }
}

impl IndexMut<usize> for Bispinor {
    fn index_mut(&mut self, i: usize) -> &mut Complex {
        &mut self.0[i]
    }
}

impl Add for Bispinor {
    type Output = Bispinor;
    fn add(self, o: Bispinor) -> Bispinor {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(o.0) {
            *a += b;
        }
        out
    }
}

impl Sub for Bispinor {
    type Output = Bispinor;
    fn sub(self, o: Bispinor) -> Bispinor {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(o.0) {
            *a -= b;
        }
        out
    }
}

/// 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat4(pub [[Complex; 4]; 4]);

impl Default for Mat4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mat4 {
    pub fn zero() -> Self {
        Self([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [Complex; 4]) -> Self {
        let mut m = Self::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.0[k][k] = v;
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        Self(rows.map(|r| r.map(re)))
    }

    pub fn checked(rows: [[Complex; 4]; 4]) -> Result<Self> {
        if all_finite(rows.iter().flatten()) {
            Ok(Self(rows))
        } else {
            Err(Error::NonFinite("Mat4"))
        }
    }

    pub fn is_finite(&self) -> bool {
        all_finite(self.0.iter().flatten())
    }

    /// Entry at 1-based (row, column), matching printed matrix notation.
    pub fn entry(&self, row: usize, col: usize) -> Complex {
        self.0[row - 1][col - 1]
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                out.0[k][r] = self.0[r][k].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self(self.0.map(|r| r.map(|z| z * s)))
    }

    /// AB + BA.
    pub fn anticommutator(&self, other: &Mat4) -> Mat4 {
        *self * *other + *other * *self
    }

    /// AB − BA.
    pub fn commutator(&self, other: &Mat4) -> Mat4 {
        *self * *other - *other * *self
    }

    /// Largest entry modulus (∞-norm on entries).
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        (*self - *other).max_abs()
    }

    /// ‖A⁺A − I‖∞ ≤ tol.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Mat4::identity())
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn apply(&self, v: &Bispinor) -> Bispinor {
        let mut out = Bispinor::ZERO;
        for (r, row) in self.0.iter().enumerate() {
            out.0[r] = row.iter().zip(v.0.iter()).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Expectation-style bilinear ψ⁺ M ψ.
    pub fn sandwich(&self, psi: &Bispinor) -> Complex {
        psi.hdot(&self.apply(psi))
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Complex {
        let m = &self.0;
        let minor3 = |skip: usize| -> Complex {
            let cols: Vec<usize> = (0..4).filter(|&k| k != skip).collect();
            let a = |r: usize, k: usize| m[r][cols[k]];
            a(1, 0) * (a(2, 1) * a(3, 2) - a(2, 2) * a(3, 1))
                - a(1, 1) * (a(2, 0) * a(3, 2) - a(2, 2) * a(3, 0))
                + a(1, 2) * (a(2, 0) * a(3, 1) - a(2, 1) * a(3, 0))
        };
        (0..4)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                m[0][k] * minor3(k) * sign
            })
            .sum()
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, o: Mat4) -> Mat4 {
        let mut out = self;
        for r in 0..4 {
            for k in 0..4 {
                out.0[r][k] += o.0[r][k];
            }
        }
        out
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, o: Mat4) -> Mat4 {
        let mut out = self;
        for r in 0..4 {
            for k in 0..4 {
                out.0[r][k] -= o.0[r][k];
            }
        }
        out
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.scale(-ONE)
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, o: Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for k in 0..4 {
                let mut acc = ZERO;
                for j in 0..4 {
                    acc += self.0[r][j] * o.0[j][k];
                }
                out.0[r][k] = acc;
            }
        }
        out
    }
}

impl Mul<Bispinor> for Mat4 {
    type Output = Bispinor;
    fn mul(self, v: Bispinor) -> Bispinor {
        self.apply(&v)
    }
}

/// Standard matrix product, free-function form.
pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    *a * *b
}

pub fn adjoint(a: &Mat4) -> Mat4 {
    a.adjoint()
}

pub fn anticommutator(a: &Mat4, b: &Mat4) -> Mat4 {
    a.anticommutator(b)
}

pub fn is_unitary(a: &Mat4, tol: f64) -> bool {
    a.is_unitary(tol)
}
