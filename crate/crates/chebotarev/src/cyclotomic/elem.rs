use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::conductor_data;
use crate::error::{Error, Result};
use crate::ratpoly;

/// Arbitrary-precision fraction, stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// An element of the cyclotomic field Q(w_n), held as its coordinate vector
/// over the power basis {1, w, ..., w^(phi(n)-1)} of Q[x]/(Phi_n).
///
/// The representation is canonical: the element is zero iff every coordinate
/// is zero, and two elements are equal iff their conductors and coordinate
/// vectors agree. Values are immutable after construction and safe to share
/// across threads.
///
/// Arithmetic panics if the operands live in different conductors; callers
/// work within a single Q(w_n) at a time.
#[derive(Clone, PartialEq, Eq)]
pub struct CycElem {
    conductor: usize,
    coords: Vec<Rational>,
}

impl CycElem {
    pub fn zero(n: usize) -> Self {
        let phi = conductor_data(n).phi;
        CycElem {
            conductor: n,
            coords: vec![Rational::zero(); phi],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: usize, r: Rational) -> Self {
        let mut e = Self::zero(n);
        e.coords[0] = r;
        e
    }

    pub fn from_integer(n: usize, v: i64) -> Self {
        Self::from_rational(n, Rational::from_integer(v.into()))
    }

    /// Builds an element from explicit power-basis coordinates.
    ///
    /// Panics if the vector length differs from phi(n).
    pub fn from_coords(n: usize, coords: Vec<Rational>) -> Self {
        let phi = conductor_data(n).phi;
        assert_eq!(
            coords.len(),
            phi,
            "coordinate vector must have length phi({n}) = {phi}"
        );
        CycElem {
            conductor: n,
            coords,
        }
    }

    pub(crate) fn from_int_coords(n: usize, coords: &[BigInt]) -> Self {
        CycElem {
            conductor: n,
            coords: coords
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value of this element, if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &CycElem) {
        assert_eq!(
            self.conductor, other.conductor,
            "conductor mismatch: {} vs {}",
            self.conductor, other.conductor
        );
    }

    pub fn mul_rational(&self, r: &Rational) -> CycElem {
        CycElem {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm on the
    /// lift of this element against Phi_n over Q. Phi_n is irreducible, so
    /// every nonzero element is invertible.
    pub fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero {
                conductor: self.conductor,
            });
        }
        let data = conductor_data(self.conductor);
        let phi_poly: Vec<Rational> = data
            .minimal_poly
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();

        // (r0, r1) = (Phi_n, a); (t0, t1) = (0, 1); invariant t_i * a = r_i (mod Phi_n).
        let mut r0 = ratpoly::strip(phi_poly);
        let mut r1 = ratpoly::strip(self.coords.clone());
        let mut t0: Vec<Rational> = vec![];
        let mut t1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, rem) = ratpoly::divmod(&r0, &r1);
            r0 = std::mem::replace(&mut r1, rem);
            let qt1 = ratpoly::mul(&q, &t1);
            let next = ratpoly::sub(&t0, &qt1);
            t0 = std::mem::replace(&mut t1, next);
        }
        // gcd is a nonzero constant; divide through by it.
        debug_assert_eq!(r0.len(), 1, "gcd with irreducible Phi_n is a constant");
        let c = r0[0].clone();
        let mut coords = vec![Rational::zero(); data.phi];
        for (i, t) in t0.iter().enumerate() {
            coords[i] = t / &c;
        }
        let result = CycElem {
            conductor: self.conductor,
            coords,
        };
        debug_assert!((&result * self).is_one());
        Ok(result)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> CycElem {
        let mut base = self.clone();
        let mut acc = CycElem::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &CycElem {
    type Output = CycElem;

    fn add(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        CycElem {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl AddAssign<&CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &CycElem) {
        self.assert_same_field(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl Sub for &CycElem {
    type Output = CycElem;

    fn sub(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        CycElem {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycElem {
    type Output = CycElem;

    fn neg(self) -> CycElem {
        CycElem {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycElem {
    type Output = CycElem;

    fn neg(self) -> CycElem {
        -&self
    }
}

impl Mul for &CycElem {
    type Output = CycElem;

    /// Schoolbook product of the coordinate polynomials followed by
    /// reduction of the degree-(2*phi - 2) tail through the per-conductor
    /// power table, keeping the result canonical.
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.assert_same_field(rhs);
        let data = conductor_data(self.conductor);
        let phi = data.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<Rational> = prod[..phi].to_vec();
        for (e, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (j, t) in data.power_table[e].iter().enumerate() {
                if !t.is_zero() {
                    coords[j] += rat_mul_int(c, t);
                }
            }
        }
        CycElem {
            conductor: self.conductor,
            coords,
        }
    }
}

fn rat_mul_int(r: &Rational, k: &BigInt) -> Rational {
    Rational::new(r.numer() * k, r.denom().clone())
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem(n={}, {})", self.conductor, self)
    }
}

impl serde::Serialize for CycElem {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
