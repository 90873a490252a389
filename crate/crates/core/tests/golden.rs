//! Catalog curves against closed forms worked out by hand.

mod common;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use common::c;
use interp_core::catalog;
use interp_core::interp::Formula;
use interp_core::linalg::{Matrix, Tolerance, C64};

fn x(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}

fn omega3() -> C64 {
    c(-0.5, 3f64.sqrt() / 2.0)
}

fn close(a: &Matrix, b: &Matrix, tol: f64) -> bool {
    a.max_entry_distance(b).unwrap() <= tol
}

fn three_cycle_closed_form(theta: f64) -> Matrix {
    let (x, w) = (x(theta), omega3());
    let d = (x * x + x + 1.0) / 3.0;
    let a = (w * x * x + w * w * x + 1.0) / 3.0;
    let b = (w * w * x * x + w * x + 1.0) / 3.0;
    Matrix::from_rows(vec![vec![d, a, b], vec![b, d, a], vec![a, b, d]]).unwrap()
}

#[test]
fn negator_curve_matches_closed_form() {
    let curve = catalog::negator_curve();
    for theta in [0.0, 0.4, FRAC_PI_2, PI, 5.0] {
        let (p, m) = ((1.0 + x(theta)) / 2.0, (1.0 - x(theta)) / 2.0);
        let expected = Matrix::from_rows(vec![vec![p, m], vec![m, p]]).unwrap();
        assert!(close(
            &curve.evaluate(theta, Formula::Fourier),
            &expected,
            1e-12
        ));
    }
    let v = Matrix::from_rows(vec![
        vec![c(0.5, 0.5), c(0.5, -0.5)],
        vec![c(0.5, -0.5), c(0.5, 0.5)],
    ])
    .unwrap();
    assert!(close(
        &curve.evaluate(FRAC_PI_2, Formula::Fourier),
        &v,
        1e-12
    ));
    assert!(close(
        &curve.evaluate(PI, Formula::Fourier),
        &catalog::not_gate(),
        1e-12
    ));
}

#[test]
fn three_cycle_closed_form_and_landmarks() {
    let curve = catalog::p3_threecycle_curve();
    for theta in [0.0, 1.0, 2.5, TAU / 3.0, 2.0 * TAU / 3.0, TAU] {
        assert!(close(
            &curve.evaluate(theta, Formula::Barycentric),
            &three_cycle_closed_form(theta),
            1e-12
        ));
    }
    let m = curve.evaluate(1.0, Formula::Fourier);
    assert!((m.get(0, 0) - (x(2.0) + x(1.0) + 1.0) / 3.0).norm() < 1e-14);
    let q2 =
        Matrix::from_real_rows(&[&[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]).unwrap();
    assert!(close(
        &curve.evaluate(2.0 * TAU / 3.0, Formula::Fourier),
        &q2,
        1e-12
    ));
    assert!(close(
        &curve.evaluate(TAU, Formula::Fourier),
        &Matrix::identity(3),
        1e-12
    ));
}

#[test]
fn four_cycle_closed_form() {
    let curve = catalog::p4_fourcycle_curve();
    let i = c(0.0, 1.0);
    for theta in [0.3, FRAC_PI_2, 2.0] {
        let x = x(theta);
        let (x2, x3) = (x * x, x * x * x);
        let a = (1.0 + x + x2 + x3) / 4.0;
        let b = (1.0 - i * x - x2 + i * x3) / 4.0;
        let cc = (1.0 - x + x2 - x3) / 4.0;
        let d = (1.0 + i * x - x2 - i * x3) / 4.0;
        let expected = Matrix::from_rows(vec![
            vec![a, b, cc, d],
            vec![d, a, b, cc],
            vec![cc, d, a, b],
            vec![b, cc, d, a],
        ])
        .unwrap();
        assert!(close(
            &curve.evaluate(theta, Formula::Direct),
            &expected,
            1e-12
        ));
    }
    let q = catalog::p4_fourcycle_curve().subgroup().q().clone();
    assert!(close(
        &curve.evaluate(FRAC_PI_2, Formula::Fourier),
        &q,
        1e-12
    ));
    assert!(curve
        .evaluate(FRAC_PI_2, Formula::Fourier)
        .is_xu(Tolerance::DEFAULT));
}

#[test]
fn q_two_cycle_closed_form() {
    let curve = catalog::q_twocycle_curve();
    for theta in [0.0, 0.9, FRAC_PI_2, PI] {
        let (p, m, z) = ((1.0 + x(theta)) / 2.0, (1.0 - x(theta)) / 2.0, c(0.0, 0.0));
        let expected = Matrix::from_rows(vec![
            vec![p, z, m, z],
            vec![z, p, z, m],
            vec![m, z, p, z],
            vec![z, m, z, p],
        ])
        .unwrap();
        assert!(close(
            &curve.evaluate(theta, Formula::Compact),
            &expected,
            1e-12
        ));
    }
    let q = catalog::p4_fourcycle_curve().subgroup().power(2).clone();
    assert!(close(&curve.evaluate(PI, Formula::Fourier), &q, 1e-12));
}

#[test]
fn reference_generators() {
    let half = |rows: &[&[f64]]| Matrix::from_real_rows(rows).unwrap().scale(c(0.5, 0.0));
    let negator = half(&[&[1.0, -1.0], &[-1.0, 1.0]]);
    assert!(close(
        &catalog::negator_curve().generator_closed_form(),
        &negator,
        1e-12
    ));

    let expected = [
        half(&[&[0.0, 0.0, 0.0], &[0.0, 1.0, -1.0], &[0.0, -1.0, 1.0]]),
        half(&[&[1.0, -1.0, 0.0], &[-1.0, 1.0, 0.0], &[0.0, 0.0, 0.0]]),
        half(&[&[1.0, 0.0, -1.0], &[0.0, 0.0, 0.0], &[-1.0, 0.0, 1.0]]),
    ];
    for (curve, want) in catalog::p3_twocycle_curves().iter().zip(&expected) {
        assert!(close(&curve.generator_closed_form(), want, 1e-12));
        assert!(close(&curve.generator_fourier_form(), want, 1e-12));
    }

    let w = omega3();
    let three = c(3.0, 0.0);
    let g3 = Matrix::from_rows(vec![
        vec![three, w - 1.0, w * w - 1.0],
        vec![w * w - 1.0, three, w - 1.0],
        vec![w - 1.0, w * w - 1.0, three],
    ])
    .unwrap()
    .scale(c(1.0 / 3.0, 0.0));
    let curve = catalog::p3_threecycle_curve();
    assert!(close(&curve.generator_closed_form(), &g3, 1e-10));
    assert!(close(&curve.generator_fourier_form(), &g3, 1e-10));
}

#[test]
fn catalog_curves_satisfy_the_invariants() {
    let tol = Tolerance::DEFAULT;
    for gate in catalog::catalog() {
        let curve = gate.curve().unwrap();
        let n = curve.dim() as f64;
        for &theta in &[0.1, 1.3, -2.2, 4.0] {
            let m = curve.evaluate(theta, Formula::Fourier);
            assert!(m.is_unitary(tol), "{}", gate.name);
            assert!(m.is_xu(tol), "{}", gate.name);
            let prod = m.mat_mul(&curve.evaluate(0.7, Formula::Fourier)).unwrap();
            let sum = curve.evaluate(theta + 0.7, Formula::Fourier);
            assert!(
                prod.frobenius_distance(&sum).unwrap() <= 1e-9 * n,
                "{}",
                gate.name
            );
            let coeffs = curve.subgroup().coefficients(theta, Formula::Fourier);
            assert!((coeffs.sum() - 1.0).norm() <= 1e-12 * curve.order() as f64);
        }
    }
}
