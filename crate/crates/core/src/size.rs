//! Exact rational item sizes.
//!
//! Sizes live in `[0, 1]` and all arithmetic on them is exact; floats are
//! never used. Adversarial inputs rely on strict inequalities between
//! quantities that differ by factors like `5^-100`, so any rounding would
//! change algorithm behavior.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SizeError {
    #[error("size {0} is outside [0, 1]")]
    OutOfRange(String),
    #[error("size denominator must be nonzero")]
    ZeroDenominator,
    #[error("malformed size `{0}`: expected a decimal or a p/q rational")]
    Malformed(String),
}

/// An exact item size in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Size(BigRational);

impl Size {
    pub fn zero() -> Size {
        Size(BigRational::zero())
    }

    pub fn one() -> Size {
        Size(BigRational::one())
    }

    pub fn new(value: BigRational) -> Result<Size, SizeError> {
        if value.is_negative() || value > BigRational::one() {
            return Err(SizeError::OutOfRange(value.to_string()));
        }
        Ok(Size(value))
    }

    /// Builds `num/den`, which must land in `[0, 1]`.
    pub fn ratio(num: u64, den: u64) -> Result<Size, SizeError> {
        if den == 0 {
            return Err(SizeError::ZeroDenominator);
        }
        Size::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
    /// Every accepted form is converted exactly.
    pub fn parse(text: &str) -> Result<Size, SizeError> {
        let malformed = || SizeError::Malformed(text.to_owned());
        let digits = |s: &str| -> Result<BigInt, SizeError> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            BigInt::from_str(s).map_err(|_| malformed())
        };
        let value = if let Some((p, q)) = text.split_once('/') {
            let num = digits(p)?;
            let den = digits(q)?;
            if den.is_zero() {
                return Err(SizeError::ZeroDenominator);
            }
            BigRational::new(num, den)
        } else if let Some((int, frac)) = text.split_once('.') {
            let int = digits(int)?;
            let frac_digits = frac.len() as u32;
            let frac = digits(frac)?;
            let scale = BigInt::from(10u32).pow(frac_digits);
            BigRational::new(int * &scale + frac, scale)
        } else {
            BigRational::from_integer(digits(text)?)
        };
        Size::new(value)
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
