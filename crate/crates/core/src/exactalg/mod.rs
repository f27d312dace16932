//! Exact arithmetic: rationals, exponent vectors, and multivariate Laurent
//! polynomials bound to a named chart.

mod poly;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use poly::LaurentPoly;
pub use text::parse_poly;

/// Coefficient field. `BigRational` keeps numerator and denominator coprime
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VarMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("term has a pole in `{var}`; cannot restrict to {var} = 0")]
    NegativeExponentAtRestriction { var: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("exponent {slope}*m{offset:+} is negative at m = {m}")]
    NegativeAffineExponent { slope: i64, offset: i64, m: i64 },
}

pub type Result<T> = std::result::Result<T, AlgError>;

/// Ordered list of variable names for one chart. Polynomials only combine
/// when their charts carry the same names in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }

    /// The chart with `name` removed.
    pub fn without(&self, name: &str) -> Result<Vars> {
        let idx = self.index_of(name)?;
        Ok(Vars(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, v)| v.clone())
                .collect(),
        ))
    }

    pub(crate) fn ensure_same(&self, other: &Vars) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgError::VarMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vars({})", self.0.join(","))
    }
}

/// Exponent vector of a Laurent monomial; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(pub Vec<i64>);

impl Exponents {
    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn add(&self, other: &Exponents) -> Exponents {
        debug_assert_eq!(self.len(), other.len());
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Exponents) -> Exponents {
        debug_assert_eq!(self.len(), other.len());
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Exponents {
        Exponents(self.0.iter().map(|a| a * k).collect())
    }

    /// Entrywise `self <= other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &Exponents) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Entrywise maximum (lcm of two monomials).
    pub fn lcm(&self, other: &Exponents) -> Exponents {
        Exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Graded lexicographic comparison: total degree first, then the first
    /// differing entry.
    pub fn grlex_cmp(&self, other: &Exponents) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<i64>> for Exponents {
    fn from(v: Vec<i64>) -> Self {
        Exponents(v)
    }
}

/// `divides(m1, m2)` on raw exponent vectors.
pub fn divides(m1: &Exponents, m2: &Exponents) -> bool {
    m1.divides(m2)
}

/// An exponent of the form `slope * m + offset`, used by degree-indexed
/// families of monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineExponent {
    pub slope: i64,
    pub offset: i64,
}

impl AffineExponent {
    pub const fn constant(offset: i64) -> Self {
        AffineExponent { slope: 0, offset }
    }

    pub const fn new(slope: i64, offset: i64) -> Self {
        AffineExponent { slope, offset }
    }

    pub fn eval(&self, m: i64) -> Result<i64> {
        let e = self.slope * m + self.offset;
        if e < 0 {
            return Err(AlgError::NegativeAffineExponent {
                slope: self.slope,
                offset: self.offset,
                m,
            });
        }
        Ok(e)
    }

    /// Checks nonnegativity on `lo..=hi`. The slope is nonnegative, so the
    /// minimum sits at `lo`; a negative slope is rejected outright.
    pub fn validate(&self, lo: i64, hi: i64) -> Result<()> {
        if self.slope < 0 {
            return Err(AlgError::NegativeAffineExponent {
                slope: self.slope,
                offset: self.offset,
                m: hi,
            });
        }
        self.eval(lo).map(|_| ())
    }

    pub fn is_zero(&self) -> bool {
        self.slope == 0 && self.offset == 0
    }
}

impl fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.offset) {
            (0, c) => write!(f, "{c}"),
            (s, c) => {
                if s == 1 {
                    write!(f, "m")?;
                } else {
                    write!(f, "{s}*m")?;
                }
                match c.cmp(&0) {
                    Ordering::Greater => write!(f, "+{c}"),
                    Ordering::Less => write!(f, "-{}", -c),
                    Ordering::Equal => Ok(()),
                }
            }
        }
    }
}

pub(crate) fn is_zero(c: &Rational) -> bool {
    c.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[i64]) -> Exponents {
        Exponents(v.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(divides(&e(&[1, 1]), &e(&[2, 3])));
        assert!(!divides(&e(&[2, 0]), &e(&[1, 1])));
        assert!(divides(&e(&[0, 0]), &e(&[4, 7])));
        assert!(divides(&e(&[0, 0]), &e(&[0, 0])));
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        assert_eq!(e(&[2, 0]).grlex_cmp(&e(&[1, 1])), Ordering::Greater);
        assert_eq!(e(&[0, 3]).grlex_cmp(&e(&[2, 0])), Ordering::Greater);
        assert_eq!(e(&[-1, 0]).grlex_cmp(&e(&[0, 0])), Ordering::Less);
    }

    #[test]
    fn affine_exponent_eval_and_display() {
        let a = AffineExponent::new(2, -1);
        assert_eq!(a.eval(3).unwrap(), 5);
        assert_eq!(a.to_string(), "2*m-1");
        assert_eq!(AffineExponent::new(1, 0).to_string(), "m");
        assert_eq!(AffineExponent::constant(4).to_string(), "4");
        assert!(AffineExponent::new(1, -2).validate(1, 10).is_err());
        assert!(AffineExponent::new(1, -2).validate(2, 10).is_ok());
    }

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::zero());
    }
}
