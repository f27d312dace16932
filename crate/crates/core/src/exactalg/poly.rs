use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{is_zero, AlgError, Exponents, Rational, Result, Vars};

/// A multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms with a zero coefficient are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        Self::monomial(vars, c, Exponents::zero(vars.len()))
    }

    pub fn monomial(vars: &Vars, c: Rational, exps: Exponents) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `name` itself.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let idx = vars.index_of(name)?;
        let mut exps = Exponents::zero(vars.len());
        exps.0[idx] = 1;
        Ok(Self::monomial(vars, Rational::one(), exps))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Exponents)>,
    {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.accumulate(e, c);
        }
        p
    }

    fn accumulate(&mut self, exps: Exponents, c: Rational) {
        if is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order, the order used for printing.
    pub fn terms_grlex(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    pub fn coeff(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some((c, e))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Rational, &Exponents)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Exponents::is_nonnegative)
    }

    /// Smallest exponent of `name` over all terms; `None` for zero.
    pub fn min_exponent(&self, name: &str) -> Result<Option<i64>> {
        let idx = self.vars.index_of(name)?;
        Ok(self.terms.keys().map(|e| e.0[idx]).min())
    }

    pub fn max_exponent(&self, name: &str) -> Result<Option<i64>> {
        let idx = self.vars.index_of(name)?;
        Ok(self.terms.keys().map(|e| e.0[idx]).max())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the Laurent monomial `x^shift`.
    pub fn shift(&self, shift: &Exponents) -> LaurentPoly {
        assert_eq!(shift.len(), self.vars.len(), "exponent vector length");
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.add(shift), a.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.accumulate(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same chart");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same chart");
            }
        }
        acc
    }

    /// Sets `name = 0`. The result lives in the remaining variables.
    pub fn restrict_var(&self, name: &str) -> Result<LaurentPoly> {
        let idx = self.vars.index_of(name)?;
        let target = self.vars.without(name)?;
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            match e.0[idx] {
                0 => {
                    let mut rest = e.0.clone();
                    rest.remove(idx);
                    out.accumulate(Exponents(rest), c.clone());
                }
                k if k < 0 => {
                    return Err(AlgError::NegativeExponentAtRestriction {
                        var: name.to_string(),
                    })
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Exchanges the exponents of `a` and `b` in every term.
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<LaurentPoly> {
        let i = self.vars.index_of(a)?;
        let j = self.vars.index_of(b)?;
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Substitutes each variable of this chart by a Laurent monomial
    /// `c_i * target^{e_i}` in the chart `target`.
    pub fn substitute_monomials(
        &self,
        target: &Vars,
        images: &[(Rational, Exponents)],
    ) -> Result<LaurentPoly> {
        if images.len() != self.vars.len() {
            return Err(AlgError::VarMismatch {
                left: self.vars.names().join(","),
                right: format!("{} images", images.len()),
            });
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = Exponents::zero(target.len());
            for (k, (ic, ie)) in e.0.iter().zip(images) {
                if *k == 0 {
                    continue;
                }
                assert_eq!(ie.len(), target.len(), "image exponent length");
                coeff *= pow_rational(ic, *k);
                exps = exps.add(&ie.scale(*k));
            }
            out.accumulate(exps, coeff);
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `name`.
    pub fn derivative(&self, name: &str) -> Result<LaurentPoly> {
        let idx = self.vars.index_of(name)?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e.0[idx];
            if k != 0 {
                let mut d = e.clone();
                d.0[idx] -= 1;
                out.accumulate(d, c * Rational::from_integer(k.into()));
            }
        }
        Ok(out)
    }

    /// Moves the polynomial to a chart with renamed variables (same arity).
    pub fn rename(&self, target: &Vars) -> Result<LaurentPoly> {
        if target.len() != self.vars.len() {
            return Err(AlgError::VarMismatch {
                left: self.vars.names().join(","),
                right: target.names().join(","),
            });
        }
        Ok(LaurentPoly {
            vars: target.clone(),
            terms: self.terms.clone(),
        })
    }
}

/// `c^k` for any integer `k`; `c` must be nonzero when `k < 0`.
pub(crate) fn pow_rational(c: &Rational, k: i64) -> Rational {
    let base = if k < 0 { c.recip() } else { c.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_grlex().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = super::text::format_monomial(&self.vars, e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.vars.names().join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, parse_poly};
    use super::*;

    fn xy() -> Vars {
        Vars::new(&["x", "y"])
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &xy()).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x + y").add(&p("x - y")).unwrap(), p("2*x"));
        assert_eq!(
            p("x^2 - 3").add(&LaurentPoly::zero(&xy())).unwrap(),
            p("x^2 - 3")
        );
        assert!(p("x^-1").add(&p("-x^-1")).unwrap().is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x + y").mul(&p("x - y")).unwrap(), p("x^2 - y^2"));
        assert_eq!(p("x^-1").mul(&p("x")).unwrap(), LaurentPoly::one(&xy()));
        assert_eq!(p("x*y").mul(&p("x*y")).unwrap(), p("x^2*y^2"));
    }

    #[test]
    fn mismatched_charts_are_rejected() {
        let q = parse_poly("u", &Vars::new(&["u", "v"])).unwrap();
        assert!(matches!(p("x").add(&q), Err(AlgError::VarMismatch { .. })));
        assert!(matches!(p("x").mul(&q), Err(AlgError::VarMismatch { .. })));
    }

    #[test]
    fn restrict_examples() {
        let y = Vars::new(&["y"]);
        assert!(p("x^2*y + x*y^3").restrict_var("x").unwrap().is_zero());
        assert_eq!(
            p("x^2 + y").restrict_var("x").unwrap(),
            parse_poly("y", &y).unwrap()
        );
        assert_eq!(
            p("x^-1*y").restrict_var("x"),
            Err(AlgError::NegativeExponentAtRestriction { var: "x".into() })
        );
        assert!(matches!(
            p("x").restrict_var("z"),
            Err(AlgError::UnknownVariable(_))
        ));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(
            p("x^6 + 2*y^6").swap_vars("x", "y").unwrap(),
            p("y^6 + 2*x^6")
        );
        assert_eq!(p("x*y").swap_vars("x", "y").unwrap(), p("x*y"));
        assert_eq!(p("x^3").swap_vars("x", "y").unwrap(), p("y^3"));
    }

    #[test]
    fn monomial_substitution() {
        let st = Vars::new(&["s", "t"]);
        // x -> s^2, y -> -t
        let images = [
            (int(1), Exponents(vec![2, 0])),
            (int(-1), Exponents(vec![0, 1])),
        ];
        let q = p("x*y + y^-1").substitute_monomials(&st, &images).unwrap();
        assert_eq!(q, parse_poly("-s^2*t - t^-1", &st).unwrap());
    }

    #[test]
    fn derivative_handles_negative_exponents() {
        assert_eq!(
            p("x^3*y + x^-2").derivative("x").unwrap(),
            p("3*x^2*y - 2*x^-3")
        );
        assert!(p("x").derivative("y").unwrap().is_zero());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p("x - 2*y + 1/3");
        let mut acc = LaurentPoly::one(&xy());
        for k in 0..6 {
            assert_eq!(a.pow(k), acc);
            acc = acc.mul(&a).unwrap();
        }
    }
}
