//! Monomial ideals and degree-indexed families `I_m` with the graded
//! algebra `⊕ I_m W^m`.
//!
//! The weight-zero piece is the full coordinate ring, so the part of degree
//! `m` generated by lower degrees is the ideal `J_m = Σ_{a+b=m} I_a·I_b`.
//! Longer products are absorbed once `I_a·I_b ⊆ I_{a+b}` has been checked.

pub mod brute;
mod family;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exactalg::{AlgError, Exponents, Vars};

pub use family::{GradedMonomialFamily, MonomialTemplate, ReesGenerationReport, ReesRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("monomial {0:?} has a negative exponent")]
    NegativeExponent(Vec<i64>),
    #[error("monomial has {got} exponents, chart has {expected}")]
    Arity { expected: usize, got: usize },
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("I_{a}·I_{b} is not contained in I_{}: {witness} escapes", a + b)]
    MultiplicativityViolation { a: i64, b: i64, witness: String },
    #[error("degree {got} is out of range (need {need})")]
    DegreeOutOfRange { got: i64, need: &'static str },
}

pub type Result<T> = std::result::Result<T, IdealError>;

/// Canonical generator order: ascending total degree, then `x` before `y`.
pub(crate) fn canonical_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

/// Divisibility-minimal subset of `gens`, in canonical order.
pub fn minimalize(gens: &[Exponents]) -> Vec<Exponents> {
    let mut sorted: Vec<Exponents> = gens.to_vec();
    sorted.sort_by(canonical_cmp);
    sorted.dedup();
    let mut out: Vec<Exponents> = Vec::with_capacity(sorted.len());
    // A divisor has total degree at most that of its multiple, so every
    // potential divisor of `g` is already in `out`.
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Ideal generated by monomials, stored by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vars,
    gens: Vec<Exponents>,
}

impl MonomialIdeal {
    pub fn new(vars: &Vars, gens: Vec<Exponents>) -> Result<Self> {
        for g in &gens {
            if g.len() != vars.len() {
                return Err(IdealError::Arity {
                    expected: vars.len(),
                    got: g.len(),
                });
            }
            if !g.is_nonnegative() {
                return Err(IdealError::NegativeExponent(g.0.clone()));
            }
        }
        Ok(MonomialIdeal {
            vars: vars.clone(),
            gens: minimalize(&gens),
        })
    }

    pub fn zero(vars: &Vars) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: &Vars) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: vec![Exponents::zero(vars.len())],
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership: some generator divides `mono`.
    pub fn contains(&self, mono: &Exponents) -> bool {
        self.gens.iter().any(|g| g.divides(mono))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.vars.ensure_same(&other.vars)?;
        let gens: Vec<Exponents> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.add(b)))
            .collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(&gens),
        })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.vars.ensure_same(&other.vars)?;
        let gens: Vec<Exponents> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(&gens),
        })
    }

    pub fn format_monomial(&self, mono: &Exponents) -> String {
        format_monomial(&self.vars, mono)
    }
}

/// `x^a*y^b`, with `1` for the empty monomial.
pub fn format_monomial(vars: &Vars, mono: &Exponents) -> String {
    crate::exactalg::LaurentPoly::monomial(vars, crate::exactalg::int(1), mono.clone()).to_string()
}

/// `{x, y}` style listing, `{}` when empty.
pub fn format_monomial_set(vars: &Vars, monos: &[Exponents]) -> String {
    if monos.is_empty() {
        return "{}".to_string();
    }
    let parts: Vec<String> = monos.iter().map(|m| format_monomial(vars, m)).collect();
    format!("{{{}}}", parts.join(", "))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vars {
        Vars::new(&["x", "y"])
    }

    fn e(a: i64, b: i64) -> Exponents {
        Exponents(vec![a, b])
    }

    fn ideal(gens: &[(i64, i64)]) -> MonomialIdeal {
        MonomialIdeal::new(&xy(), gens.iter().map(|&(a, b)| e(a, b)).collect()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            minimalize(&[e(1, 1), e(1, 0), e(0, 1)]),
            vec![e(1, 0), e(0, 1)]
        );
        assert_eq!(
            minimalize(&[e(0, 2), e(2, 0), e(1, 1)]),
            vec![e(2, 0), e(1, 1), e(0, 2)]
        );
        assert_eq!(minimalize(&[e(0, 0), e(1, 0)]), vec![e(0, 0)]);
    }

    #[test]
    fn membership_examples() {
        assert!(ideal(&[(2, 0), (1, 1), (0, 2)]).contains(&e(1, 1)));
        assert!(!ideal(&[(3, 0), (2, 1), (1, 2), (0, 3)]).contains(&e(1, 1)));
        assert!(!ideal(&[(1, 0), (0, 1)]).contains(&e(0, 0)));
    }

    #[test]
    fn product_examples() {
        let m = ideal(&[(1, 0), (0, 1)]);
        assert_eq!(m.product(&m).unwrap(), ideal(&[(2, 0), (1, 1), (0, 2)]));
        assert_eq!(
            m.product(&ideal(&[(1, 1), (2, 0), (0, 2)])).unwrap(),
            ideal(&[(3, 0), (2, 1), (1, 2), (0, 3)])
        );
        let i = ideal(&[(1, 1), (4, 0), (0, 4)]);
        assert_eq!(i.product(&MonomialIdeal::unit(&xy())).unwrap(), i);
        assert!(i.product(&MonomialIdeal::zero(&xy())).unwrap().is_zero());
    }

    #[test]
    fn rejects_negative_exponents() {
        assert!(matches!(
            MonomialIdeal::new(&xy(), vec![e(-1, 2)]),
            Err(IdealError::NegativeExponent(_))
        ));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(
            ideal(&[(0, 3), (3, 0), (1, 1)]).to_string(),
            "(x*y, x^3, y^3)"
        );
        assert_eq!(MonomialIdeal::zero(&xy()).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(&xy()).to_string(), "(1)");
    }
}
