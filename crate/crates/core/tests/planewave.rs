//! Plane-wave amplitude system examples.

use std::f64::consts::{PI, SQRT_2};

use dirac_maxwell::dirac::canonical_alpha_set;
use dirac_maxwell::em::FieldLayout;
use dirac_maxwell::linalg::{c, Bispinor, ONE, ZERO};
use dirac_maxwell::planewave::{
    build_system, continuity_check, dispersion, field_interpretation, literal_special_values, nullspace,
    normalization_integral, printed_special_values, residual, solution_basis, Branch, PlaneWaveState,
};
use dirac_maxwell::torus::derive_parameters;
use dirac_maxwell::units::UnitSystem;

#[test]
fn rest_frame_system() {
    let m = build_system(1.0, [0.0; 3], 1.0, 1.0);
    for r in 0..4 {
        let want = if r < 2 { 2.0 } else { 0.0 };
        assert_eq!(m.0[r][r], c(want, 0.0));
    }
    let p = [0.3, -1.1, 0.7];
    let (e, _) = dispersion(p, 1.0, 1.0);
    assert!(build_system(e, p, 1.0, 1.0).determinant().norm() <= 1e-10);
    assert!(build_system(1.5, [0.0; 3], 1.0, 1.0).determinant().norm() > 0.1);
}

#[test]
fn dispersion_examples() {
    assert_eq!(dispersion([0.0; 3], 1.0, 1.0), (1.0, -1.0));
    let (a, b) = dispersion([0.0, 1.0, 0.0], 1.0, 1.0);
    assert!((a - SQRT_2).abs() <= 1e-15 && (b + SQRT_2).abs() <= 1e-15);
    let p = [2.0, 0.5, -1.0];
    let (a, b) = dispersion(p, 1.0, 1.0);
    assert!((a * b + (4.0 + 0.25 + 1.0 + 1.0)).abs() <= 1e-13);
}

#[test]
fn basis_examples() {
    let pos = solution_basis(Branch::Positive, [0.0; 3], 1.0, 1.0);
    assert_eq!(pos, [Bispinor::new(ZERO, ZERO, ONE, ZERO), Bispinor::new(ZERO, ZERO, ZERO, ONE)]);
    let neg = solution_basis(Branch::Negative, [0.0; 3], 1.0, 1.0);
    assert_eq!(neg, [Bispinor::new(ONE, ZERO, ZERO, ZERO), Bispinor::new(ZERO, ONE, ZERO, ZERO)]);
    let b = solution_basis(Branch::Positive, [0.0, 1.0, 0.0], 1.0, 1.0)[0];
    assert!((b.0[1] - c(0.0, -1.0 / (SQRT_2 + 1.0))).norm() <= 1e-15);
    assert!((b.0[1].im + 0.41421).abs() < 1e-5);
    assert_eq!(b.0[2], ONE);
}

#[test]
fn sparsity_and_special_values() {
    let layout = FieldLayout::electron();
    let pat = |branch, which| {
        let st = PlaneWaveState::from_basis(branch, which, [0.0, 0.6, 0.0], 1.0, 1.0, 0.3);
        field_interpretation(&st, &layout).unwrap().pattern
    };
    assert_eq!(pat(Branch::Positive, 0), "(0, b2, b3, 0)");
    assert_eq!(pat(Branch::Positive, 1), "(b1, 0, 0, b4)");
    assert_eq!(pat(Branch::Negative, 0), "(b1, 0, 0, b4)");
    assert_eq!(pat(Branch::Negative, 1), "(0, b2, b3, 0)");
    let lit = literal_special_values(1.0, 1.0);
    let printed = printed_special_values();
    for k in 0..4 {
        assert!((lit[k] - printed[k]).max_abs() <= 1e-15);
    }
    assert_eq!(printed[0], Bispinor::new(ZERO, c(0.5, 0.0), c(0.0, 1.0), ZERO));
}

#[test]
fn residual_examples() {
    let set = canonical_alpha_set();
    let p = [0.4, 1.3, -0.2];
    for branch in [Branch::Positive, Branch::Negative] {
        for which in 0..2 {
            let st = PlaneWaveState::from_basis(branch, which, p, 1.0, 1.0, 0.0);
            assert!(residual(&st, &set, 1.0, 1.0) <= 1e-12);
            assert!(nullspace(&build_system(st.energy, p, 1.0, 1.0), 1e-10).rank == 2);
        }
    }
    let st = PlaneWaveState::from_basis(Branch::Positive, 0, p, 1.0, 1.0, 0.0);
    let off = PlaneWaveState { amplitudes: Bispinor::new(ONE, ONE, ONE, ONE), ..st };
    assert!(residual(&off, &set, 1.0, 1.0) > 0.1);
    let scaled = PlaneWaveState { amplitudes: off.amplitudes.scale(c(5.0, 0.0)), ..off };
    let ratio = residual(&scaled, &set, 1.0, 1.0) / residual(&off, &set, 1.0, 1.0);
    assert!((ratio - 5.0).abs() <= 1e-12);
}

#[test]
fn continuity_and_normalization() {
    let set = canonical_alpha_set();
    let units = UnitSystem::natural();
    let st = PlaneWaveState::from_basis(Branch::Negative, 1, [0.2, -0.9, 1.4], 1.0, 1.0, 0.7);
    assert!(continuity_check(&st, &set, &units, 0.3, [1.0, 2.0, -0.5]).passed());
    let zero = PlaneWaveState { amplitudes: Bispinor::default(), ..st };
    assert_eq!(continuity_check(&zero, &set, &units, 0.0, [0.0; 3]).abs_err, 0.0);
    let model = derive_parameters(units, 1.0).unwrap();
    let st = PlaneWaveState::from_basis(Branch::Positive, 0, [0.0, 1.0, 0.0], 1.0, 1.0, PI / 2.0);
    assert!((normalization_integral(&st, &model, 256) - 1.0).abs() <= 1e-10);
}
