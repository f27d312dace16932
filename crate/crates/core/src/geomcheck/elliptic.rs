//! Weierstrass curves `y^2 = x^3 + ax + b` over `Q` and the chord-tangent law.

use std::fmt;

use num_traits::Zero;

use super::{GeomError, Result};
use crate::exactalg::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ECCurve {
    a: Rational,
    b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ECPoint {
    Infinity,
    Affine(Rational, Rational),
}

impl ECPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        ECPoint::Affine(x, y)
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        ECPoint::Affine(int(x), int(y))
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl ECCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let disc = int(4) * &a * &a * &a + int(27) * &b * &b;
        if disc.is_zero() {
            return Err(GeomError::SingularCurve(a.to_string(), b.to_string()));
        }
        Ok(ECCurve { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    fn check(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(GeomError::NotOnCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y),
        }
    }

    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        self.check(q)?;
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return Ok(q.clone()),
            (_, ECPoint::Infinity) => return Ok(p.clone()),
            (ECPoint::Affine(x1, y1), ECPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == y2 && !y1.is_zero() {
            (int(3) * x1 * x1 + &self.a) / (int(2) * y1)
        } else {
            return Ok(ECPoint::Infinity);
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        Ok(ECPoint::Affine(x3, y3))
    }

    /// `[k]P` by double-and-add.
    pub fn mul(&self, k: i64, p: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// `p1 + p2 ~ q1 + q2` as divisors, i.e. equal sums in the group.
    pub fn linear_equiv(
        &self,
        p1: &ECPoint,
        p2: &ECPoint,
        q1: &ECPoint,
        q2: &ECPoint,
    ) -> Result<bool> {
        Ok(self.add(p1, p2)? == self.add(q1, q2)?)
    }
}
