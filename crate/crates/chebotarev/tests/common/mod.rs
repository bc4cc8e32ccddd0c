//! Seeded corpus generators shared by the integration suites.

use chebotarev::cyclotomic::{euler_phi, CycElem, Rational};
use chebotarev::spectral::SparsePoly;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random nonzero field element with integer coordinates in [-bound, bound].
pub fn random_cyc_elem(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> CycElem {
    let phi = euler_phi(n);
    loop {
        let coords: Vec<Rational> = (0..phi)
            .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
            .collect();
        let e = CycElem::from_coords(n, coords);
        if !e.is_zero() {
            return e;
        }
    }
}

fn random_support(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let w = rng.gen_range(1..=n);
    let mut exps: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        exps.swap(i, j);
    }
    exps.truncate(w);
    exps
}

/// Random nonzero polynomial with integer coefficients in [-3, 3] on a
/// random support.
pub fn random_int_poly(rng: &mut ChaCha8Rng, n: usize) -> SparsePoly {
    let support = random_support(rng, n);
    let terms: Vec<(usize, i64)> = support
        .into_iter()
        .map(|e| {
            let mag = rng.gen_range(1..=3i64);
            (e, if rng.gen() { mag } else { -mag })
        })
        .collect();
    SparsePoly::from_int_terms(n, &terms).expect("valid corpus polynomial")
}

/// Random nonzero polynomial with cyclotomic-integer coefficients whose
/// coordinates lie in [-2, 2], on a random support.
pub fn random_cyc_poly(rng: &mut ChaCha8Rng, n: usize) -> SparsePoly {
    let support = random_support(rng, n);
    let terms: Vec<(usize, CycElem)> = support
        .into_iter()
        .map(|e| (e, random_cyc_elem(rng, n, 2)))
        .collect();
    SparsePoly::new(n, terms).expect("valid corpus polynomial")
}
