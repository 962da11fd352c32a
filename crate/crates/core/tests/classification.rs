use std::sync::Arc;

use liecyclic_core::lie::builtin::{heisenberg, nonabelian2, sl2};
use liecyclic_core::linalg::{span_rank, Matrix};
use liecyclic_core::sayd::builtin::{adjoint, sl2_simple};
use liecyclic_core::sayd::{check_comodule, solve_ayd_linear, tensor_ayd, CoactionMatrices, SaydModule};
use liecyclic_core::scalar::{q, qr};
use liecyclic_core::weil::build_truncated_weil;
use liecyclic_core::{Lie, QMatrix, Q};

fn m4(rows: [[i64; 4]; 4]) -> QMatrix {
    Matrix::from_i64(&rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
}

/// The action on `{1, θ^1, θ^2, θ^3}` as displayed for the cap-2 example.
fn displayed_b() -> Vec<QMatrix> {
    vec![
        m4([[0, 0, 0, 0], [0, 0, 0, -2], [0, 0, 0, 0], [0, 0, 1, 0]]),
        m4([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 2], [0, -1, 0, 0]]),
        m4([[0, 0, 0, 0], [0, 2, 0, 0], [0, 0, -2, 0], [0, 0, 0, 0]]),
    ]
}

/// The displayed two-parameter family of coactions.
fn family(c: Q, d: Q) -> Vec<QMatrix> {
    let z = || Matrix::<Q>::zeros(4, 4);
    let (mut a1, mut a2, mut a3) = (z(), z(), z());
    a1[(0, 1)] = c.clone();
    a1[(2, 0)] = d.clone();
    a2[(0, 2)] = c.clone();
    a2[(1, 0)] = d.clone();
    a3[(0, 3)] = c;
    a3[(3, 0)] = d * qr(1, 2);
    vec![a1, a2, a3]
}

fn flatten(mats: &[QMatrix]) -> Vec<Q> {
    mats.iter().flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m[(i, j)].clone()))).collect()
}

#[test]
fn simple_two_dimensional_module_has_only_the_trivial_coaction() {
    let g: Arc<Lie> = Arc::new(sl2());
    let sol = solve_ayd_linear(&sl2_simple(g).unwrap());
    assert_eq!(sol.dim(), 0);
}

#[test]
fn weil_cap2_action_is_the_displayed_one() {
    let w = build_truncated_weil(Arc::new(sl2::<Q>()), 2);
    assert_eq!(w.action.mats(), displayed_b().as_slice());
}

#[test]
fn weil_cap2_solution_space_is_the_cd_plane() {
    let g: Arc<Lie> = Arc::new(sl2());
    let w = build_truncated_weil(g.clone(), 2);
    let sol = solve_ayd_linear(&w.action);
    assert_eq!(sol.dim(), 2);
    let len = 3 * 16;
    let computed: Vec<Vec<Q>> = sol.basis.iter().map(|s| flatten(s)).collect();
    let displayed = vec![flatten(&family(q(1), q(0))), flatten(&family(q(0), q(2)))];
    assert_eq!(span_rank(&computed, len), 2);
    let mut both = computed.clone();
    both.extend(displayed);
    assert_eq!(span_rank(&both, len), 2, "computed basis spans the displayed family");
    // each displayed point is AYD and stable
    for (c, d) in [(1, 0), (0, 1), (3, -2)] {
        let a = CoactionMatrices::new(g.clone(), 4, family(q(c), q(d))).unwrap();
        let v = SaydModule::new(w.action.clone(), a).unwrap();
        let r = v.check();
        assert!(r.ayd.ok && r.stability.ok);
    }
}

/// Brute-force commutators of the displayed family on a grid.
#[test]
fn family_commutes_exactly_when_cd_vanishes() {
    for c in -3..=3 {
        for d in -3..=3 {
            let a = family(q(c), q(d));
            let commute = (0..3).all(|p| (p + 1..3).all(|r| a[p].commutator(&a[r]).is_zero()));
            assert_eq!(commute, c * d == 0, "c={c} d={d}");
        }
    }
}

#[test]
fn quadratic_check_reduces_to_cd() {
    let w = build_truncated_weil(Arc::new(sl2::<Q>()), 2);
    let sol = solve_ayd_linear(&w.action);
    let r = &sol.commutativity;
    // squares t_a² vanish, the mixed term does not
    assert_eq!(r.obstructions(), vec![(0, 1)]);
    assert!(!r.identically());
    for s in &sol.basis {
        let comod = check_comodule(&CoactionMatrices::new(w.lie().clone(), 4, s.clone()).unwrap());
        assert!(comod.is_ok());
    }
}

#[test]
fn koszul_point_is_recovered() {
    let w = build_truncated_weil(Arc::new(sl2::<Q>()), 2);
    assert_eq!(w.coaction.mats(), family(q(1), q(0)).as_slice());
}

#[test]
fn adjoint_solutions_are_ayd() {
    for g in [Arc::new(sl2::<Q>()), Arc::new(heisenberg()), Arc::new(nonabelian2())] {
        let action = adjoint(g.clone());
        let sol = solve_ayd_linear(&action);
        for s in &sol.basis {
            let v = SaydModule::new(action.clone(), CoactionMatrices::new(g.clone(), g.dim(), s.clone()).unwrap()).unwrap();
            assert!(v.check().ayd.ok && v.check().stability.ok);
        }
    }
}

#[test]
fn tensor_of_ayd_modules_is_ayd() {
    let g: Arc<Lie> = Arc::new(sl2());
    let w = build_truncated_weil(g.clone(), 2);
    let s = SaydModule::new(sl2_simple(g.clone()).unwrap(), CoactionMatrices::zero(g.clone(), 2)).unwrap();
    let t = tensor_ayd(&w, &s).unwrap();
    assert_eq!(t.dim(), 8);
    assert!(t.check().ayd.ok);
    let tw = tensor_ayd(&w, &w).unwrap();
    assert!(tw.check().ayd.ok);
}
