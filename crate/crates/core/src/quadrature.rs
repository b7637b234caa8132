//! Composite Simpson quadrature on uniform grids, with step halving until the
//! result stops moving.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative change that declares convergence.
pub const CONVERGENCE_REL: f64 = 1e-10;
/// Hard ceiling on interval count.
pub const MAX_POINTS: usize = 1 << 22;

/// Composite Simpson rule with `n` intervals (`n` even, ≥ 2). Sums in index
/// order so results are reproducible bit for bit.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n >= 2 && n.is_multiple_of(2), "simpson needs an even interval count");
    let h = (b - a) / n as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n {
        let x = a + h * i as f64;
        if i % 2 == 1 {
            odd += f(x);
        } else {
            even += f(x);
        }
    }
    h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadrature {
    pub value: f64,
    /// Interval count of the accepted estimate.
    pub points: usize,
    /// |I(n) − I(n/2)| at acceptance.
    pub change: f64,
}

/// Simpson with doubling from `n0` intervals. Converged when
/// `|I(2n) − I(n)| ≤ rel_tol · max(|I(2n)|, scale)`; `scale` guards integrals
/// that vanish (pass the magnitude the result is measured against).
pub fn simpson_converged(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    n0: usize,
    rel_tol: f64,
    scale: f64,
) -> Result<Quadrature> {
    if n0 < 2 {
        return Err(Error::Config(format!("quadrature needs at least 2 intervals, got {n0}")));
    }
    let mut n = n0 + n0 % 2;
    let mut prev = simpson(&f, a, b, n);
    loop {
        let next_n = n * 2;
        if next_n > MAX_POINTS {
            return Err(Error::QuadratureNotConverged {
                change: f64::NAN,
                points: n,
            });
        }
        let next = simpson(&f, a, b, next_n);
        if !next.is_finite() {
            return Err(Error::NonFinite("quadrature"));
        }
        let change = (next - prev).abs();
        if change <= rel_tol * next.abs().max(scale) {
            return Ok(Quadrature {
                value: next,
                points: next_n,
                change,
            });
        }
        prev = next;
        n = next_n;
        if n >= MAX_POINTS {
            return Err(Error::QuadratureNotConverged { change, points: n });
        }
    }
}
