//! The two matrix constructions at the heart of the verification: the DFT
//! matrix of a root of unity with its minors, and the circulant matrix of a
//! sparse polynomial, together with the eigenstructure and rank facts that
//! connect a circulant's rank to the polynomial's root count.
//!
//! Indices run 0..n-1 throughout. The 1-based convention would list an
//! index-n row equal to the index-0 all-ones row, so the two conventions
//! produce the same row and column sets and identical minor behavior.

mod minors;
mod poly;

pub(crate) use minors::MinorZeroTable;
pub use minors::{
    find_vanishing_minors, verify_chebotarev, ChebotarevReport, LevelStat, VerifyMode,
    MAX_EXHAUSTIVE_N,
};
pub use poly::SparsePoly;

use serde::Serialize;

use crate::cyclotomic::{root_power, CycElem};
use crate::error::{Error, Result};
use crate::linalg::{CycMatrix, CycVector};
use crate::ratpoly;

/// One minor of the DFT matrix: which rows and columns were selected, and
/// the exact determinant of that submatrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinorWitness {
    pub n: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: CycElem,
}

/// The n x n matrix with entry w^(i*j) at row i, column j.
pub fn dft_matrix(n: usize) -> CycMatrix {
    assert!(n >= 1);
    CycMatrix::from_fn(n, n, n, |i, j| root_power(n, (i * j) as i64))
}

/// The square submatrix of the DFT matrix selected by equal-sized sorted
/// index sets, evaluated exactly.
pub fn minor(n: usize, rows: &[usize], cols: &[usize]) -> Result<MinorWitness> {
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(Error::InvalidInput(format!(
            "minor needs equal-sized nonempty index sets, got {} rows and {} cols",
            rows.len(),
            cols.len()
        )));
    }
    for set in [rows, cols] {
        if set.iter().any(|&i| i >= n) {
            return Err(Error::InvalidInput(format!(
                "minor index out of range for n = {n}"
            )));
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "minor index sets must be strictly increasing".into(),
            ));
        }
    }
    let m = CycMatrix::from_fn(n, rows.len(), cols.len(), |a, b| {
        root_power(n, (rows[a] * cols[b]) as i64)
    });
    Ok(MinorWitness {
        n,
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        det: m.determinant(),
    })
}

/// The m x m circulant matrix of a polynomial with m = P.modulus(): row j
/// carries coefficient p_((i - j) mod m) at column i, so row 0 is
/// (p_0, ..., p_(m-1)), row 1 is (p_(m-1), p_0, ...), and so on.
///
/// The zero polynomial is allowed and yields the zero matrix.
pub fn circulant(p: &SparsePoly) -> CycMatrix {
    let m = p.modulus();
    let cond = p.conductor();
    CycMatrix::from_fn(cond, m, m, |j, i| {
        p.coeff((i + m - j) % m)
            .cloned()
            .unwrap_or_else(|| CycElem::zero(cond))
    })
}

/// The number of indices i in 0..m with P(w^i) = 0, each evaluation done
/// exactly in the coefficient field. Errors on the zero polynomial, whose
/// root count is undefined.
pub fn root_count(p: &SparsePoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok((0..p.modulus())
        .filter(|&i| p.evaluate_at_root(i).is_zero())
        .count())
}

/// Independent cross-check of [`root_count`] for polynomials with rational
/// coefficients: the degree of gcd(P, x^m - 1) over Q. Since x^m - 1 is
/// squarefree, this equals the number of m-th roots of unity annihilating P.
pub fn root_count_gcd(p: &SparsePoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.modulus();
    let mut dense = vec![crate::cyclotomic::Rational::from_integer(0.into()); m];
    for (&e, c) in p.terms() {
        dense[e] = c
            .as_rational()
            .ok_or(Error::NonRationalCoefficient { exp: e })?;
    }
    let mut xm1 = vec![crate::cyclotomic::Rational::from_integer(0.into()); m + 1];
    xm1[0] = crate::cyclotomic::Rational::from_integer((-1).into());
    xm1[m] = crate::cyclotomic::Rational::from_integer(1.into());
    let g = ratpoly::gcd(&dense, &xm1);
    Ok(g.len().saturating_sub(1))
}

/// Verifies C f_i = P(w^i) f_i for every i in 0..m, where C acts on column
/// vectors and f_i = ((w^i)^0, ..., (w^i)^(m-1)).
///
/// The row layout of [`circulant`] makes the identity hold for column
/// action: row j of C dotted with f_i gives w^(ij) P(w^i). That convention
/// is pinned by the n = 2, P = 1 + z case.
pub fn eigencheck(p: &SparsePoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.modulus();
    let cond = p.conductor();
    let stride = (cond / m) as i64;
    let c = circulant(p);
    for i in 0..m {
        let f_i = CycVector::new(
            cond,
            (0..m)
                .map(|t| root_power(cond, stride * (i * t % m) as i64))
                .collect(),
        );
        let eigenvalue = p.evaluate_at_root(i);
        let lhs = c.mul_vector(&f_i);
        let rhs = CycVector::new(
            cond,
            f_i.entries().iter().map(|e| e * &eigenvalue).collect(),
        );
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of checking rank(C) = m - k for the circulant C of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankLemmaReport {
    pub rank: usize,
    pub k: usize,
    pub holds: bool,
}

/// Computes the circulant's rank and the polynomial's root count and checks
/// the identity rank = m - k tying them together.
pub fn rank_lemma_check(p: &SparsePoly) -> Result<RankLemmaReport> {
    let k = root_count(p)?;
    let rank = circulant(p).rank();
    Ok(RankLemmaReport {
        rank,
        k,
        holds: rank == p.modulus() - k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_poly(n: usize, terms: &[(usize, i64)]) -> SparsePoly {
        SparsePoly::from_int_terms(n, terms).unwrap()
    }

    #[test]
    fn dft_matrix_small() {
        assert!(dft_matrix(1).at(0, 0).is_one());
        let m = dft_matrix(2);
        assert!(m.at(0, 0).is_one());
        assert!(m.at(1, 0).is_one());
        assert_eq!(*m.at(1, 1), CycElem::from_integer(2, -1));
        // Entry (3,3) of the n = 4 matrix: w^9 = w
        assert_eq!(*dft_matrix(4).at(3, 3), root_power(4, 1));
    }

    #[test]
    fn minor_single_entries_are_roots() {
        for n in [2usize, 3, 6] {
            for i in 0..n {
                for j in 0..n {
                    let w = minor(n, &[i], &[j]).unwrap();
                    assert_eq!(w.det, root_power(n, (i * j) as i64));
                    assert!(!w.det.is_zero());
                }
            }
        }
    }

    #[test]
    fn minor_vanishes_for_composite_n4() {
        let w = minor(4, &[1, 3], &[1, 3]).unwrap();
        assert!(w.det.is_zero());
    }

    #[test]
    fn minor_nonzero_for_prime_n3() {
        // w * w - w^2 * w^2 = w^2 - w, coordinates (-1, -2)
        let w = minor(3, &[1, 2], &[1, 2]).unwrap();
        let expect = &root_power(3, 2) - &root_power(3, 1);
        assert_eq!(w.det, expect);
        assert!(!w.det.is_zero());
        assert_eq!(
            w.det.coords().to_vec(),
            vec![
                Rational::from_integer((-1).into()),
                Rational::from_integer((-2).into())
            ]
        );
    }

    #[test]
    fn minor_rejects_bad_inputs() {
        assert!(minor(4, &[], &[]).is_err());
        assert!(minor(4, &[0], &[0, 1]).is_err());
        assert!(minor(4, &[0, 4], &[0, 1]).is_err());
        assert!(minor(4, &[1, 0], &[0, 1]).is_err());
    }

    #[test]
    fn circulant_layout() {
        // P = 1 + z over n = 2: all-ones matrix.
        let c = circulant(&int_poly(2, &[(0, 1), (1, 1)]));
        for r in 0..2 {
            for col in 0..2 {
                assert!(c.at(r, col).is_one());
            }
        }
        // P = z over n = 3: rows (0,1,0), (0,0,1), (1,0,0).
        let c = circulant(&int_poly(3, &[(1, 1)]));
        let expect = [[0, 1, 0], [0, 0, 1], [1, 0, 0]];
        for (r, row) in expect.iter().enumerate() {
            for (col, &v) in row.iter().enumerate() {
                assert_eq!(*c.at(r, col), CycElem::from_integer(3, v));
            }
        }
        // Zero polynomial: zero matrix.
        let c = circulant(&SparsePoly::zero(2));
        assert_eq!(c.rank(), 0);
    }

    #[test]
    fn root_count_examples() {
        // (z^4 - 1)/(z - 1) vanishes at the three nontrivial 4th roots.
        assert_eq!(
            root_count(&int_poly(4, &[(0, 1), (1, 1), (2, 1), (3, 1)])).unwrap(),
            3
        );
        for n in [2usize, 5, 8] {
            for l in 0..n {
                assert_eq!(root_count(&int_poly(n, &[(l, 1)])).unwrap(), 0);
            }
        }
        assert_eq!(root_count(&int_poly(4, &[(0, 1), (2, 1)])).unwrap(), 2);
        assert!(matches!(
            root_count(&SparsePoly::zero(4)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn root_count_gcd_examples() {
        assert_eq!(root_count_gcd(&int_poly(4, &[(0, 1), (2, 1)])).unwrap(), 2);
        assert_eq!(root_count_gcd(&int_poly(6, &[(0, 3)])).unwrap(), 0);
        assert_eq!(
            root_count_gcd(&int_poly(4, &[(0, 1), (1, 1), (2, 1)])).unwrap(),
            0
        );
    }

    #[test]
    fn root_count_gcd_rejects_irrational() {
        let p = SparsePoly::new(4, vec![(0, root_power(4, 1))]).unwrap();
        assert!(matches!(
            root_count_gcd(&p),
            Err(Error::NonRationalCoefficient { exp: 0 })
        ));
    }

    #[test]
    fn eigencheck_examples() {
        assert!(eigencheck(&int_poly(2, &[(0, 1), (1, 1)])).unwrap());
        for n in [3usize, 5, 8] {
            assert!(eigencheck(&int_poly(n, &[(0, 7)])).unwrap());
        }
        assert!(eigencheck(&int_poly(4, &[(0, 1), (1, 1), (2, 1), (3, 1)])).unwrap());
    }

    #[test]
    fn rank_lemma_examples() {
        let r = rank_lemma_check(&int_poly(4, &[(0, 1), (1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!((r.rank, r.k), (1, 3));
        assert!(r.holds);
        for n in [2usize, 5, 9] {
            let r = rank_lemma_check(&int_poly(n, &[(0, 1)])).unwrap();
            assert_eq!((r.rank, r.k), (n, 0));
            assert!(r.holds);
        }
        let r = rank_lemma_check(&int_poly(4, &[(0, 1), (2, 1)])).unwrap();
        assert_eq!((r.rank, r.k), (2, 2));
        assert!(r.holds);
    }

    #[test]
    fn rank_lemma_and_eigencheck_on_random_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let n = rng.gen_range(2..=10usize);
            let w = rng.gen_range(1..=n);
            let mut exps: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.gen_range(0..=i);
                exps.swap(i, j);
            }
            let terms: Vec<(usize, i64)> = exps[..w]
                .iter()
                .map(|&e| (e, rng.gen_range(1..=3i64) * if rng.gen() { 1 } else { -1 }))
                .collect();
            let p = int_poly(n, &terms);
            let lemma = rank_lemma_check(&p).unwrap();
            assert!(lemma.holds, "rank lemma failed for {p}");
            assert!(eigencheck(&p).unwrap(), "eigencheck failed for {p}");
            assert_eq!(root_count(&p).unwrap(), root_count_gcd(&p).unwrap());
        }
    }

    #[test]
    fn dft_minor_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..12 {
            let n = rng.gen_range(2..=8usize);
            let s = rng.gen_range(1..=n.min(3));
            let draw = |rng: &mut ChaCha8Rng| {
                let mut v = rand::seq::index::sample(rng, n, s).into_vec();
                v.sort_unstable();
                v
            };
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            let ab = minor(n, &a, &b).unwrap();
            let ba = minor(n, &b, &a).unwrap();
            assert_eq!(ab.det, ba.det);
        }
    }
}
