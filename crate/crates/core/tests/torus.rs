//! Toroidal model examples: closed forms evaluated independently in each test.

use std::f64::consts::PI;

use dirac_maxwell::torus::{
    calibrate_e0, charge_density, consistency_chain, coupling_constant, derive_parameters,
    integrate_charge, integrate_mass, mass_closed_form, ring_current, spin_and_moment,
    zeta_for_coupling, zitterbewegung, ChargeSpan,
};
use dirac_maxwell::units::UnitSystem;

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE)
}

/// Composite Simpson on [a, b] with n (even) intervals.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

#[test]
fn natural_geometry() {
    let m = derive_parameters(UnitSystem::natural(), 1.0).unwrap();
    assert!(close(m.r_s, 0.5, 1e-15));
    assert!(close(m.omega_s, 2.0, 1e-15));
    assert!(close(m.lambda_p, PI, 1e-15));
    assert!(close(m.k, 2.0, 1e-15));
    assert!(close(m.delta_tau, PI * PI / 4.0, 1e-15));
    assert!(close(m.s_c, PI / 4.0, 1e-15));
}

#[test]
fn cgs_radius_is_half_reduced_compton() {
    let u = UnitSystem::gaussian_cgs();
    let m = derive_parameters(u, 1.0).unwrap();
    let reduced_compton = u.hbar / (u.m_e * u.c);
    assert!(close(m.r_s, reduced_compton / 2.0, 1e-15));
    assert!(close(m.r_s, 1.930_796_2e-11, 1e-6));
}

#[test]
fn ring_current_examples() {
    let m = derive_parameters(UnitSystem::natural(), 1.0).unwrap();
    let zero = ring_current(&m, 0.0, 0.0);
    assert_eq!((zero.j_n, zero.j_tau), (0.0, 0.0));
    assert!(close(ring_current(&m, 1.0, 0.0).j_tau, 1.0 / (2.0 * PI), 1e-15));
    let r_p = m.r_t;
    assert!(close(charge_density(&m, 1.3), 1.3 / (4.0 * PI * r_p), 1e-15));
}

#[test]
fn charge_integrals() {
    for units in [UnitSystem::natural(), UnitSystem::gaussian_cgs()] {
        for e0 in [0.0, 1.0, 123.0] {
            let m = derive_parameters(units, 0.7).unwrap().with_e0(e0).unwrap();
            let q = integrate_charge(&m, ChargeSpan::FullWave, 256).unwrap();
            assert!(q.abs() <= 1e-12 * (e0 * m.s_c).max(f64::MIN_POSITIVE));
        }
    }
    // density (ω/4πc)E₀cos(kl)·S_c over the positive half period
    let m = derive_parameters(UnitSystem::natural(), 1.0).unwrap().with_e0(1.0).unwrap();
    let lam = m.lambda_p;
    let oracle = simpson(|l| m.omega_s / (4.0 * PI) * (m.k * l).cos() * m.s_c, -lam / 4.0, lam / 4.0, 2048);
    let got = integrate_charge(&m, ChargeSpan::HalfWave, 256).unwrap();
    assert!(close(got, oracle, 1e-10));
    assert!(integrate_charge(&m, ChargeSpan::HalfWave, 10).is_err());
}

#[test]
fn mass_quadrature() {
    let m = derive_parameters(UnitSystem::natural(), 1.0).unwrap().with_e0(1.0).unwrap();
    assert!(close(mass_closed_form(&m).unwrap(), PI / 32.0, 1e-15));
    assert!(close(integrate_mass(&m, 256).unwrap(), PI / 32.0, 1e-10));
    let zero = m.with_e0(0.0).unwrap();
    assert_eq!(integrate_mass(&zero, 256).unwrap(), 0.0);
    // calibrated amplitude reproduces m_e
    let e0 = calibrate_e0(&m, 256).unwrap();
    assert!(close(e0, (32.0 / PI).sqrt(), 1e-10));
}

#[test]
fn coupling_examples() {
    assert!((coupling_constant(1.0).unwrap() - 0.637).abs() <= 5e-4);
    assert!(close(coupling_constant(1.0).unwrap(), 2.0 / PI, 1e-15));
    assert!(coupling_constant(1e-9).unwrap() < 1e-17);
    assert!(coupling_constant(0.0).is_err());
    assert!(coupling_constant(1.5).is_err());
    // bisection oracle for 2ζ²/π = 1/137.036
    let target = 1.0 / 137.036;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if 2.0 * mid * mid / PI < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let z = zeta_for_coupling(target).unwrap();
    assert!(close(z, lo, 1e-14));
    assert!(close(z, (PI / (2.0 * 137.036)).sqrt(), 1e-14));
}

#[test]
fn chain_examples() {
    let m = derive_parameters(UnitSystem::natural(), 1.0).unwrap().with_e0(1.0).unwrap();
    let ch = consistency_chain(&m).unwrap();
    assert!(close(ch.q, 0.25, 1e-15));
    assert!(close(ch.m_s / ch.m_s_from_q, 1.0, 1e-12));
    let u = UnitSystem::gaussian_cgs();
    let m = derive_parameters(u, 1.0).unwrap().with_e0(1.0).unwrap();
    let ch = consistency_chain(&m).unwrap();
    assert!(close(ch.r_o_over_r_s, 1.0 / 137.0, 5e-3));
    let r_o = u.e * u.e / (2.0 * u.m_e * u.c * u.c);
    assert!(close(ch.r_o, r_o, 1e-15));
}

#[test]
fn spin_and_moment_examples() {
    for u in [UnitSystem::natural(), UnitSystem::gaussian_cgs()] {
        let m = derive_parameters(u, 1.0).unwrap();
        let s = spin_and_moment(&m, u.e);
        assert_eq!(s.sigma_p, u.hbar);
        assert_eq!(s.sigma_s, u.hbar / 2.0);
        let closed = 0.5 * u.e * u.hbar / (2.0 * u.m_e);
        let product = (u.e * m.omega_s / (2.0 * PI)) * (PI * m.r_s * m.r_s);
        assert!(close(s.mu_closed, closed, 1e-15));
        assert!(close(s.mu_s, product, 1e-12));
        assert!(close(s.mu_s, closed, 1e-12));
    }
}

#[test]
fn zitterbewegung_examples() {
    let z = zitterbewegung(&UnitSystem::natural());
    assert_eq!((z.omega_z, z.r_z, z.v), (2.0, 0.5, 1.0));
    let u = UnitSystem::gaussian_cgs();
    let z = zitterbewegung(&u);
    assert!(close(z.omega_z * z.r_z, u.c, 1e-15));
    let m = derive_parameters(u, 1.0).unwrap();
    assert_eq!(z.omega_z, m.omega_s);
    assert_eq!(z.r_z, m.r_s);
}
