//! Dense integer polynomials in an indeterminate `z`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = IntPoly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    /// `z - r`.
    pub fn linear(r: i64) -> Self {
        IntPoly::from_coeffs([-r, 1])
    }

    /// `∏ (z - r)` over `roots`.
    pub fn from_roots(roots: impl IntoIterator<Item = i64>) -> Self {
        roots
            .into_iter()
            .fold(IntPoly::one(), |acc, r| &acc * &IntPoly::linear(r))
    }

    /// `z (z+1) ... (z+k-1)`.
    pub fn rising_factorial(k: usize) -> Self {
        IntPoly::from_roots((0..k as i64).map(|i| -i))
    }

    /// `z (z-1) ... (z-k+1)`.
    pub fn falling_factorial(k: usize) -> Self {
        IntPoly::from_roots(0..k as i64)
    }

    /// `z^k`.
    pub fn power(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        IntPoly(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::from_coeffs(self.0.iter().map(|a| a * c))
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(v)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Descending powers, e.g. `z^4 - 4z^3 + 5z^2 - 2z`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: coefficient strings in increasing degree.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}
