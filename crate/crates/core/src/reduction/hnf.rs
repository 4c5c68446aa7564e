//! Column-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::basis::{determinant, Basis};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::Ring;

/// Lower-triangular HNF `H = B·U` with `U` unimodular: positive diagonal and
/// every entry left of the diagonal reduced into `[0, H_ii)`.
///
/// All work is done modulo a multiple of the remaining determinant, which
/// keeps intermediate entries below `|det B|`.
pub fn hnf(b: &Basis) -> Result<Basis> {
    if b.ring() != Ring::Integer {
        return Err(Error::UnsupportedRing(b.ring()));
    }
    let n = b.dim();
    let det = determinant(b.columns()).re().to_big().abs();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut a: Vec<Vec<BigInt>> = b
        .int_columns()?
        .into_iter()
        .map(|c| c.iter().map(Int::to_big).collect())
        .collect();
    let mut w: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    let mut r = det.clone();

    for i in 0..n {
        for j in i + 1..n {
            if a[j][i].is_zero() {
                continue;
            }
            let (x, y) = (a[i][i].clone(), a[j][i].clone());
            let e = x.extended_gcd(&y);
            let (xg, yg) = (&x / &e.gcd, &y / &e.gcd);
            for row in i..n {
                let (ci, cj) = (&a[i][row], &a[j][row]);
                let new_i = (&e.x * ci + &e.y * cj).mod_floor(&r);
                let new_j = (&xg * cj - &yg * ci).mod_floor(&r);
                a[i][row] = new_i;
                a[j][row] = new_j;
            }
        }
        let e = a[i][i].extended_gcd(&r);
        for row in i + 1..n {
            w[i][row] = (&e.x * &a[i][row]).mod_floor(&r);
        }
        w[i][i] = e.gcd.clone();
        r /= &e.gcd;
        for col in a.iter_mut().skip(i + 1) {
            for x in col.iter_mut().skip(i + 1) {
                *x = x.mod_floor(&r);
            }
        }
    }

    for i in 0..n {
        for j in 0..i {
            let q = w[j][i].div_floor(&w[i][i]);
            if q.is_zero() {
                continue;
            }
            for row in i..n {
                let t = &q * &w[i][row];
                w[j][row] -= t;
            }
        }
    }

    let cols = w
        .into_iter()
        .map(|c| c.into_iter().map(Int::from_big).collect())
        .collect();
    Ok(Basis::from_int_matrix_unchecked(
        cols,
        b.det_abs_sq().clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straightforward non-modular elimination, no reduction of intermediates.
    fn naive_hnf(cols: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        let n = cols.len();
        let mut m: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for i in 0..n {
            loop {
                let nz: Vec<usize> = (i..n).filter(|&j| !m[j][i].is_zero()).collect();
                if nz.len() <= 1 {
                    if let Some(&j) = nz.first() {
                        m.swap(i, j);
                    }
                    break;
                }
                let p = *nz.iter().min_by_key(|&&j| m[j][i].abs()).unwrap();
                for &j in &nz {
                    if j != p {
                        let q = m[j][i].div_floor(&m[p][i]);
                        let src = m[p].clone();
                        for (x, y) in m[j].iter_mut().zip(&src) {
                            *x -= &q * y;
                        }
                    }
                }
            }
            if m[i][i].is_negative() {
                for x in m[i].iter_mut() {
                    *x = -x.clone();
                }
            }
            for j in 0..i {
                let q = m[j][i].div_floor(&m[i][i]);
                let src = m[i].clone();
                for (x, y) in m[j].iter_mut().zip(&src) {
                    *x -= &q * y;
                }
            }
        }
        m
    }

    fn big_cols(b: &Basis) -> Vec<Vec<BigInt>> {
        b.int_columns()
            .unwrap()
            .iter()
            .map(|c| c.iter().map(Int::to_big).collect())
            .collect()
    }

    #[test]
    fn fixed_examples() {
        let id = Basis::identity(Ring::Integer, 3);
        assert_eq!(hnf(&id).unwrap(), id);
        let diag = Basis::from_int_columns(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(hnf(&diag).unwrap(), diag);

        let raw = vec![vec![95, 460], vec![47, 215]];
        let h = hnf(&Basis::from_int_columns(&raw).unwrap()).unwrap();
        assert_eq!(big_cols(&h), naive_hnf(&raw));
        assert!(h.entry(0, 1).is_zero());
        let diag_prod = h.entry(0, 0).re() * h.entry(1, 1).re();
        assert_eq!(diag_prod, Int::from(1195));
    }

    #[test]
    fn agrees_with_naive_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 60 {
            let n = rng.gen_range(1..=5);
            let raw: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-30..=30)).collect())
                .collect();
            let Ok(b) = Basis::from_int_columns(&raw) else {
                continue;
            };
            let h = hnf(&b).unwrap();
            assert_eq!(big_cols(&h), naive_hnf(&raw), "input {raw:?}");
            assert_eq!(h.recompute_det_abs_sq(), *b.det_abs_sq());
            checked += 1;
        }
    }

    #[test]
    fn rejects_module_basis() {
        let b = Basis::identity(Ring::GaussianInteger, 2);
        assert_eq!(hnf(&b), Err(Error::UnsupportedRing(Ring::GaussianInteger)));
    }
}
