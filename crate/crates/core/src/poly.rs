//! Dense integer polynomials with exact coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_counts<I, T>(counts: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        IntPolynomial::new(counts.into_iter().map(Into::into).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// Ascending powers: `1 + 3t + t^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// A JSON array of integers; coefficients beyond `i64` become strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let values: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        values.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_prints() {
        let p = IntPolynomial::from_counts([1, 3, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "1 + 3t + t^2");
        assert_eq!(p.sum(), BigInt::from(5));
        assert!(p.is_symmetric());
        assert_eq!(IntPolynomial::from_counts([0]).to_string(), "0");
        assert_eq!(IntPolynomial::from_counts([0, -1, 2]).to_string(), "-t + 2t^2");
        assert_eq!(IntPolynomial::from_counts([1]).to_string(), "1");
    }

    #[test]
    fn serializes_as_array() {
        let p = IntPolynomial::from_counts([1, 3, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,3,1]");
    }
}
