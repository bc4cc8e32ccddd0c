//! Minimal dense polynomial arithmetic over Q, shared by field inversion
//! (extended Euclid against Phi_n) and squarefree root counting
//! (gcd against x^n - 1). Polynomials are coefficient vectors in ascending
//! degree with trailing zeros stripped; the zero polynomial is empty.

use num_traits::Zero;

use crate::cyclotomic::Rational;

pub(crate) fn strip(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    strip(out)
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] = ai.clone();
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    strip(out)
}

/// Quotient and remainder of a by b; b must be nonzero.
pub(crate) fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<Rational> = a.to_vec();
    if rem.len() <= db {
        return (vec![], strip(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let head = rem[k + db].clone();
        if head.is_zero() {
            continue;
        }
        let q = &head / lead;
        for j in 0..db {
            let t = &q * &b[j];
            rem[k + j] -= t;
        }
        rem[k + db] = Rational::zero();
        quot[k] = q;
    }
    (strip(quot), strip(rem))
}

/// Monic gcd by the Euclidean algorithm; empty for gcd(0, 0).
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r0 = strip(a.to_vec());
    let mut r1 = strip(b.to_vec());
    while !r1.is_empty() {
        let (_, rem) = divmod(&r0, &r1);
        r0 = std::mem::replace(&mut r1, rem);
    }
    if let Some(lead) = r0.last().cloned() {
        for c in &mut r0 {
            *c /= &lead;
        }
    }
    r0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> Vec<Rational> {
        strip(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn divmod_round_trip() {
        let a = poly(&[2, 0, -1, 3]);
        let b = poly(&[1, 2]);
        let (q, r) = divmod(&a, &b);
        let back = sub(&mul(&q, &b), &poly(&[]));
        let mut sum = back;
        for (i, ri) in r.iter().enumerate() {
            if sum.len() <= i {
                sum.resize(i + 1, Rational::zero());
            }
            sum[i] += ri;
        }
        assert_eq!(strip(sum), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1
        let a = mul(&poly(&[-1, 1]), &poly(&[2, 1]));
        let b = mul(&poly(&[-1, 1]), &poly(&[-3, 1]));
        assert_eq!(gcd(&a, &b), poly(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = poly(&[1, 1, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(gcd(&a, &b), poly(&[1]));
    }
}
