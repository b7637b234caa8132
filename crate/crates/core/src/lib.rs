//! Numerical verification of the Dirac ↔ Maxwell correspondence.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: fixed-shape complex vectors and 4×4 matrices.
//! * [`dirac`]: the α-set of Dirac matrices, axis triads, the 16-element
//!   matrix group and unitary changes of representation.
//! * [`em`]: the bispinor ↔ (E, H) dictionary, bilinear covariants, Fierz
//!   identities and residuals of the Dirac equation written as Maxwell
//!   equations with imaginary currents.
//! * [`torus`]: the toroidal semi-photon electron model (geometry, charge,
//!   mass, coupling constant, spin, magnetic moment).
//! * [`planewave`]: plane-wave solutions of the free Dirac equation.
//! * [`dynamics`]: stress tensor, ring forces and Lagrangian evaluators.
//! * [`report`] and [`suites`]: structured check reports, the discrepancy
//!   ledger and the seeded verification suites driven by the CLI.

pub mod dirac;
pub mod dynamics;
pub mod em;
pub mod error;
pub mod linalg;
pub mod planewave;
pub mod quadrature;
pub mod report;
pub mod suites;
pub mod torus;
pub mod units;

pub use error::{Error, Result};
pub use linalg::{Axis, Bispinor, Complex, Mat4, Vec3};
