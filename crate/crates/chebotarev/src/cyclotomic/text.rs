//! Text syntax for field elements, shared by the CLI and the file formats.
//!
//! An element is a signed sum of terms. Each term is a rational `a/b`, a
//! root power `w^e`, or a product `a/b*w^e`; a bare `w` means `w^1` and the
//! exponent is reduced mod n on parse. Whitespace is ignored everywhere.
//!
//! Examples: `3`, `-1/2`, `w^3`, `1 - 1/2*w^3`, `-w^2 + 2/7`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{conductor_data, root_power, CycElem, Rational};
use crate::error::{Error, Result};

impl CycElem {
    /// Parses the text syntax above into a canonical element of Q(w_n).
    pub fn parse(n: usize, input: &str) -> Result<CycElem> {
        let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut pos = 0;
        let mut acc = CycElem::zero(n);
        let mut first = true;
        while pos < chars.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    negative = !negative;
                }
                saw_sign = true;
                pos += 1;
            }
            if !first && !saw_sign {
                return Err(Error::Parse(format!(
                    "expected '+' or '-' before term at offset {pos} in {input:?}"
                )));
            }
            first = false;
            let term = parse_term(n, &chars, &mut pos)?;
            if negative {
                acc += &(-&term);
            } else {
                acc += &term;
            }
        }
        Ok(acc)
    }
}

fn parse_term(n: usize, chars: &[char], pos: &mut usize) -> Result<CycElem> {
    if *pos >= chars.len() {
        return Err(Error::Parse("missing term after sign".into()));
    }
    if chars[*pos] == 'w' {
        *pos += 1;
        let e = parse_exponent(chars, pos)?;
        return Ok(root_power(n, e));
    }
    let coeff = parse_rational(chars, pos)?;
    if *pos < chars.len() && chars[*pos] == '*' {
        *pos += 1;
        if *pos >= chars.len() || chars[*pos] != 'w' {
            return Err(Error::Parse(format!(
                "expected 'w' after '*' at offset {pos} "
            )));
        }
        *pos += 1;
        let e = parse_exponent(chars, pos)?;
        return Ok(root_power(n, e).mul_rational(&coeff));
    }
    Ok(CycElem::from_rational(n, coeff))
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64> {
    if *pos < chars.len() && chars[*pos] == '^' {
        *pos += 1;
        let mut negative = false;
        if *pos < chars.len() && (chars[*pos] == '-' || chars[*pos] == '+') {
            negative = chars[*pos] == '-';
            *pos += 1;
        }
        let v = parse_digits(chars, pos)?;
        let v: i64 = v
            .try_into()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        Ok(if negative { -v } else { v })
    } else {
        Ok(1)
    }
}

fn parse_rational(chars: &[char], pos: &mut usize) -> Result<Rational> {
    let numer = parse_digits(chars, pos)?;
    let mut denom = BigInt::one();
    if *pos < chars.len() && chars[*pos] == '/' {
        *pos += 1;
        denom = parse_digits(chars, pos)?;
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
    }
    Ok(Rational::new(numer, denom))
}

fn parse_digits(chars: &[char], pos: &mut usize) -> Result<BigInt> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::Parse(format!(
            "expected a number at offset {start} "
        )));
    }
    let s: String = chars[start..*pos].iter().collect();
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Touch the conductor table so Display stays total even for
        // elements built through from_int_coords.
        let _ = conductor_data(self.conductor());
        let mut first = true;
        for (t, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if t == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if t == 1 {
                    write!(f, "w")?;
                } else {
                    write!(f, "w^{t}")?;
                }
            }
        }
        Ok(())
    }
}
