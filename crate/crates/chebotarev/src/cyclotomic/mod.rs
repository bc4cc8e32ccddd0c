//! Exact arithmetic in cyclotomic fields Q(w_n).
//!
//! The primitive n-th root of unity w is modeled algebraically as a root of
//! the n-th cyclotomic polynomial Phi_n, never as a floating-point complex
//! number. Elements are coordinate vectors over the power basis
//! {1, w, ..., w^(phi(n)-1)} of Q[x]/(Phi_n); every operation re-reduces to
//! that basis, so an element is zero iff all its coordinates are zero and
//! equality is decidable coordinate-wise.

mod elem;
mod intpoly;
mod text;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

pub use elem::{CycElem, Rational};
pub use intpoly::IntPoly;

/// Divisors of n in ascending order.
pub(crate) fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            phi -= phi / p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

static PHI_POLYS: OnceLock<RwLock<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();

/// The n-th cyclotomic polynomial Phi_n, computed by exact division
///
///   Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
///
/// and memoized per process. Monic of degree phi(n).
pub fn cyclotomic_polynomial(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    let cache = PHI_POLYS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return (**p).clone();
    }
    let poly = if n == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut quotient = IntPoly::x_pow_minus_one(n);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            quotient = quotient
                .exact_div(&phi_d)
                .expect("Phi_d divides x^n - 1 exactly");
        }
        quotient
    };
    debug_assert!(poly.is_monic());
    debug_assert_eq!(poly.degree(), Some(euler_phi(n)));
    cache
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::new(poly))
        .as_ref()
        .clone()
}

/// Per-conductor arithmetic tables: Phi_n and the reductions of x^e modulo
/// Phi_n needed both for root powers (e < n) and for re-reducing products
/// of basis elements (e < 2*phi - 1).
pub(crate) struct ConductorData {
    pub phi: usize,
    pub minimal_poly: IntPoly,
    /// power_table[e] = coordinates of x^e mod Phi_n, for e in 0..max(n, 2*phi-1).
    pub power_table: Vec<Vec<BigInt>>,
}

static CONDUCTORS: OnceLock<RwLock<HashMap<usize, Arc<ConductorData>>>> = OnceLock::new();

pub(crate) fn conductor_data(n: usize) -> Arc<ConductorData> {
    assert!(n >= 1, "conductor must be positive");
    let cache = CONDUCTORS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().unwrap().get(&n) {
        return Arc::clone(d);
    }
    let data = Arc::new(build_conductor_data(n));
    let mut w = cache.write().unwrap();
    Arc::clone(w.entry(n).or_insert(data))
}

fn build_conductor_data(n: usize) -> ConductorData {
    let minimal_poly = cyclotomic_polynomial(n);
    let phi = minimal_poly.degree().unwrap();
    let table_len = n.max(2 * phi - 1);
    let mut power_table = Vec::with_capacity(table_len);
    for e in 0..table_len {
        if e < phi {
            let mut v = vec![BigInt::zero(); phi];
            v[e] = BigInt::from(1);
            power_table.push(v);
        } else {
            // x^e = x * x^(e-1); the overflow into x^phi is rewritten via
            // x^phi = -(Phi_n - x^phi).
            let prev: &Vec<BigInt> = &power_table[e - 1];
            let carry = prev[phi - 1].clone();
            let mut v = vec![BigInt::zero(); phi];
            v[1..phi].clone_from_slice(&prev[..phi - 1]);
            if !carry.is_zero() {
                for (j, item) in v.iter_mut().enumerate() {
                    *item -= &carry * minimal_poly.coeff(j);
                }
            }
            power_table.push(v);
        }
    }
    ConductorData {
        phi,
        minimal_poly,
        power_table,
    }
}

/// The canonical representative of w^(e mod n) in Q(w_n).
pub fn root_power(n: usize, e: i64) -> CycElem {
    let data = conductor_data(n);
    let idx = e.rem_euclid(n as i64) as usize;
    CycElem::from_int_coords(n, &data.power_table[idx])
}

/// The full geometric sum 1 + w^i + w^(2i) + ... + w^((n-1)i), computed by
/// honest term-by-term addition. Equals n when n | i and 0 otherwise.
pub fn geometric_root_sum(n: usize, i: i64) -> CycElem {
    let i_red = i.rem_euclid(n as i64) as usize;
    let mut acc = CycElem::zero(n);
    for t in 0..n {
        acc += &root_power(n, ((i_red * t) % n) as i64);
    }
    acc
}
