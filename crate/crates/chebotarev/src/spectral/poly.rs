use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::{root_power, CycElem};
use crate::error::{Error, Result};

/// Sparse polynomial with exponents in 0..modulus and nonzero coefficients
/// in Q(w_conductor).
///
/// For most polynomials the conductor equals the modulus: a polynomial
/// P of degree < n whose behavior at the n-th roots of unity is under
/// study. Decomposing such a P as z^l Q(z^r) produces a Q whose exponents
/// live modulo n/r while its coefficients stay in Q(w_n); the modulus
/// always divides the conductor so that evaluation at modulus-th roots of
/// unity stays inside the coefficient field.
///
/// The zero polynomial is the empty term set.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsePoly {
    modulus: usize,
    conductor: usize,
    terms: BTreeMap<usize, CycElem>,
}

impl SparsePoly {
    /// Builds a polynomial with exponents modulo `modulus` and coefficients
    /// of the same conductor. Duplicate exponents are summed; zero
    /// coefficients are dropped.
    pub fn new(modulus: usize, terms: impl IntoIterator<Item = (usize, CycElem)>) -> Result<Self> {
        Self::with_conductor(modulus, modulus, terms)
    }

    /// As [`SparsePoly::new`] but with a coefficient field Q(w_conductor)
    /// larger than the exponent ring; `modulus` must divide `conductor`.
    pub fn with_conductor(
        modulus: usize,
        conductor: usize,
        terms: impl IntoIterator<Item = (usize, CycElem)>,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        if !conductor.is_multiple_of(modulus) {
            return Err(Error::InvalidInput(format!(
                "modulus {modulus} must divide conductor {conductor}"
            )));
        }
        let mut map: BTreeMap<usize, CycElem> = BTreeMap::new();
        for (e, c) in terms {
            if e >= modulus {
                return Err(Error::InvalidInput(format!(
                    "exponent {e} out of range for modulus {modulus}"
                )));
            }
            if c.conductor() != conductor {
                return Err(Error::InvalidInput(format!(
                    "coefficient at exponent {e} has conductor {} instead of {conductor}",
                    c.conductor()
                )));
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + &c;
                    o.insert(sum);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            modulus,
            conductor,
            terms: map,
        })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(modulus: usize, terms: &[(usize, i64)]) -> Result<Self> {
        Self::new(
            modulus,
            terms
                .iter()
                .map(|&(e, c)| (e, CycElem::from_integer(modulus, c))),
        )
    }

    pub fn zero(modulus: usize) -> Self {
        SparsePoly {
            modulus,
            conductor: modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    /// Exponents carrying nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, e: usize) -> Option<&CycElem> {
        self.terms.get(&e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &CycElem)> {
        self.terms.iter()
    }

    /// Exact evaluation at the i-th power of the primitive modulus-th root
    /// of unity, computed term by term over the sparse support.
    pub fn evaluate_at_root(&self, i: usize) -> CycElem {
        let m = self.modulus;
        let stride = self.conductor / m;
        let mut acc = CycElem::zero(self.conductor);
        for (&e, c) in &self.terms {
            let exp = (stride * ((i * e) % m)) as i64;
            acc += &(c * &root_power(self.conductor, exp));
        }
        acc
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let body = c.to_string();
            let simple = !body.contains(' ');
            let mut coeff = body.as_str();
            if first {
                first = false;
            } else if simple && coeff.starts_with('-') {
                write!(f, " - ")?;
                coeff = &coeff[1..];
            } else {
                write!(f, " + ")?;
            }
            match (e, simple) {
                (0, true) => write!(f, "{coeff}")?,
                (0, false) => write!(f, "({coeff})")?,
                (_, _) => {
                    if coeff == "1" {
                        // coefficient 1 prints as a bare power of z
                    } else if coeff == "-1" {
                        write!(f, "-")?;
                    } else if simple {
                        write!(f, "{coeff}*")?;
                    } else {
                        write!(f, "({coeff})*")?;
                    }
                    if e == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
