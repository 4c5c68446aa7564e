mod common;

use common::*;
use evosieve::metrics::LatticeSolver;
use evosieve::reduction::{audit_lll, hnf, lll, lll_with_stats, LllParams};
use evosieve::{gauss_reduce_2d, Basis, Int, LatticeVector};

fn same_lattice(a: &Basis, b: &Basis) -> bool {
    let sa = LatticeSolver::new(a).unwrap();
    let sb = LatticeSolver::new(b).unwrap();
    b.columns().iter().all(|c| sa.contains(c)) && a.columns().iter().all(|c| sb.contains(c))
}

#[test]
fn lll_output_passes_audit_on_random_bases() {
    let mut r = rng(11);
    for trial in 0..60 {
        let d = 2 + trial % 7;
        let b = random_int_basis(&mut r, d, 1000);
        for delta in ["0.75", "0.99"] {
            let p = LllParams::from_decimal(delta).unwrap();
            let out = lll(&b, &p).unwrap();
            let audit = audit_lll(&out, &p.delta).unwrap();
            assert!(audit.passed(), "trial {trial} delta {delta}: {audit:?}");
            assert_eq!(out.det_abs_sq(), b.det_abs_sq());
        }
    }
}

#[test]
fn lll_preserves_the_lattice() {
    let mut r = rng(12);
    for d in [2, 3, 5, 8] {
        let b = random_int_basis(&mut r, d, 500);
        let out = lll(&b, &LllParams::default()).unwrap();
        assert!(same_lattice(&b, &out));
    }
}

#[test]
fn first_vector_within_lll_factor_of_lambda1() {
    let mut r = rng(13);
    let mut checked = 0;
    for trial in 0..80 {
        let d = 2 + trial % 3;
        let b = random_int_basis(&mut r, d, 1000);
        let p = LllParams::default();
        let out = lll(&b, &p).unwrap();
        // The enumeration box is valid for any basis of the lattice; the
        // reduced one keeps it small.
        let Some(l1) = lambda1_sq(&out) else { continue };
        checked += 1;
        let b1 = out.column(0).norm_sq();
        // ‖b₁‖² ≤ 2^{d−1}·λ₁²
        assert!(b1 <= &(&l1 * &Int::from(1i64 << (d - 1))), "trial {trial}");
        assert!(b1 >= &l1);
    }
    assert!(
        checked >= 60,
        "only {checked} bases were small enough to enumerate"
    );
}

#[test]
fn demo_basis_reduces_to_known_norms() {
    let out = lll(&b_bad(), &LllParams::default()).unwrap();
    let mut n: Vec<Int> = out.columns().iter().map(|c| c.norm_sq().clone()).collect();
    n.sort();
    assert_eq!(n, vec![Int::from(901), Int::from(1625)]);
    assert_eq!(lambda1_sq(&out), Some(Int::from(901)));
    let mut box_min = i64::MAX;
    for x in -60i64..=60 {
        for y in -60i64..=60 {
            if (x, y) != (0, 0) {
                let v = (95 * x + 47 * y, 460 * x + 215 * y);
                box_min = box_min.min(v.0 * v.0 + v.1 * v.1);
            }
        }
    }
    assert_eq!(box_min, 901);
}

#[test]
fn gauss_and_lll_agree_in_two_dimensions() {
    let mut r = rng(14);
    let near_one = LllParams::from_decimal("0.9999999").unwrap();
    for _ in 0..100 {
        let b = random_int_basis(&mut r, 2, 1000);
        let (u, v) = gauss_reduce_2d(b.column(0), b.column(1)).unwrap();
        assert_eq!(
            Some(u.norm_sq().clone()),
            lambda1_sq(&Basis::new(vec![u.clone(), v.clone()]).unwrap())
        );
        let out = lll(&b, &near_one).unwrap();
        assert_eq!(out.shortest_column().norm_sq(), u.norm_sq());
        assert!(same_lattice(&b, &Basis::new(vec![u, v]).unwrap()));
    }
}

#[test]
fn hnf_is_triangular_canonical_and_same_lattice() {
    let mut r = rng(15);
    for d in 2..=6 {
        let b = random_int_basis(&mut r, d, 50);
        let h = hnf(&b).unwrap();
        for i in 0..d {
            for j in i + 1..d {
                assert!(
                    h.entry(i, j).is_zero(),
                    "entry ({i},{j}) above the diagonal"
                );
            }
            let diag = h.entry(i, i).re().clone();
            assert!(diag > Int::ZERO);
            for j in 0..i {
                let e = h.entry(i, j).re();
                assert!(e >= &Int::ZERO && e < &diag);
            }
        }
        assert!(same_lattice(&b, &h));
        // Canonical: a unimodular change of basis gives the same form.
        let shuffled = b
            .swap_columns(0, d - 1)
            .add_multiple(0, 1, &evosieve::RingScalar::int(-3))
            .unwrap();
        assert_eq!(hnf(&shuffled).unwrap(), h);
    }
}

#[test]
fn hnf_then_lll_matches_direct_lll_lattice() {
    let mut r = rng(16);
    let b = random_int_basis(&mut r, 10, 1000);
    let p = LllParams::default();
    let via_hnf = lll_with_stats(&hnf(&b).unwrap(), &p).unwrap();
    let direct = lll_with_stats(&b, &p).unwrap();
    assert!(same_lattice(&via_hnf.basis, &direct.basis));
    assert!(via_hnf.sweeps > 0 && direct.sweeps > 0);
}

#[test]
fn reduced_gaussian_basis_spans_the_embedded_lattice() {
    let mut r = rng(17);
    let b = random_gaussian_basis(&mut r, 3, 40);
    let out = lll(&b, &LllParams::default()).unwrap();
    assert_eq!(out.dim(), 6);
    assert!(same_lattice(&b.real_embedding(), &out));
    let first: &LatticeVector = out.column(0);
    assert!(first.norm_sq() <= b.shortest_column().norm_sq());
}
