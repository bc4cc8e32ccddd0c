//! Module-level invariants at their stated corpus scales, beyond what the
//! per-module unit tests cover.

mod common;

use chebotarev::cyclotomic::root_power;
use chebotarev::spectral::{eigencheck, minor, verify_chebotarev, SparsePoly, VerifyMode};
use chebotarev::uncertainty::{check_bound, rotate, scale, weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[test]
fn bound_holds_on_random_corpus() {
    // 1000 polynomials per n with cyclotomic-integer coefficients,
    // coordinates in [-2, 2]: the bound w * (n - k) >= n never fails.
    for n in 2..=16usize {
        let polys: Vec<SparsePoly> = {
            let mut rng = ChaCha8Rng::seed_from_u64(11_000 + n as u64);
            (0..1000)
                .map(|_| common::random_cyc_poly(&mut rng, n))
                .collect()
        };
        let violations: Vec<String> = polys
            .par_iter()
            .filter_map(|p| {
                let b = check_bound(p).unwrap();
                if b.holds {
                    None
                } else {
                    Some(format!(
                        "BOUND VIOLATION: {p} over n = {n}: product {}",
                        b.product
                    ))
                }
            })
            .collect();
        assert!(violations.is_empty(), "{}", violations.join("\n"));
    }
}

#[test]
fn eigencheck_on_random_corpus() {
    for n in 2..=12usize {
        let mut rng = ChaCha8Rng::seed_from_u64(12_000 + n as u64);
        for _ in 0..500 {
            let p = common::random_int_poly(&mut rng, n);
            assert!(eigencheck(&p).unwrap(), "eigencheck failed for {p}");
        }
    }
}

#[test]
fn weight_and_root_count_are_rotation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(13_000);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12usize);
        let p = common::random_cyc_poly(&mut rng, n);
        let j = rng.gen_range(0..3 * n as i64);
        let rotated = rotate(&p, j);
        assert_eq!(weight(&p), weight(&rotated));
        assert_eq!(
            chebotarev::spectral::root_count(&p).unwrap(),
            chebotarev::spectral::root_count(&rotated).unwrap(),
            "root count changed under rotation of {p} by {j}"
        );
    }
}

#[test]
fn bound_report_is_scaling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(14_000);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12usize);
        let p = common::random_cyc_poly(&mut rng, n);
        let c = common::random_cyc_elem(&mut rng, n, 3);
        let scaled = scale(&p, &c).unwrap();
        assert_eq!(
            check_bound(&p).unwrap(),
            check_bound(&scaled).unwrap(),
            "bound report changed under scaling of {p} by {c}"
        );
    }
}

#[test]
fn dft_minor_symmetry_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(15_000);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10usize);
        let s = rng.gen_range(1..=n.min(4));
        let draw = |rng: &mut ChaCha8Rng| {
            let mut v = rand::seq::index::sample(rng, n, s).into_vec();
            v.sort_unstable();
            v
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        assert_eq!(
            minor(n, &a, &b).unwrap().det,
            minor(n, &b, &a).unwrap().det,
            "DFT matrix minors must be symmetric in (rows, cols)"
        );
    }
}

#[test]
fn sampled_witnesses_reevaluate_to_zero() {
    for (n, seed) in [(4usize, 1u64), (6, 2), (8, 3), (12, 4)] {
        let report = verify_chebotarev(n, VerifyMode::Sampled { count: 2000, seed }).unwrap();
        if let Some(w) = report.first_witness {
            assert!(minor(n, &w.rows, &w.cols).unwrap().det.is_zero());
        }
    }
}

#[test]
fn classify_rejects_non_members_loudly_never_silently() {
    // Polynomials away from equality: None, not an error.
    let mut rng = ChaCha8Rng::seed_from_u64(16_000);
    let mut saw_equality = 0usize;
    for _ in 0..300 {
        let n = rng.gen_range(2..=10usize);
        let p = common::random_cyc_poly(&mut rng, n);
        let b = check_bound(&p).unwrap();
        match chebotarev::uncertainty::classify_extremal(&p) {
            Ok(None) => assert!(!b.equality),
            Ok(Some(d)) => {
                saw_equality += 1;
                assert!(b.equality);
                assert_eq!(d.reconstruct().unwrap(), p);
            }
            Err(e) => panic!("loud failure on a random polynomial: {e}"),
        }
    }
    // The corpus is dense enough that some equality cases occur (monomials).
    assert!(saw_equality > 0);
    // And a handcrafted equality case classifies with the expected shape.
    let p = scale(
        &rotate(
            &chebotarev::uncertainty::generate_extremal(9, 3, 2).unwrap(),
            4,
        ),
        &root_power(9, 5),
    )
    .unwrap();
    let d = chebotarev::uncertainty::classify_extremal(&p)
        .unwrap()
        .unwrap();
    assert_eq!((d.r, d.l, d.j), (3, 2, 1));
}
