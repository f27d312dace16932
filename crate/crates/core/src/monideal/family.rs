use std::fmt;

use crate::exactalg::{AffineExponent, Exponents, Vars};

use super::{format_monomial, IdealError, MonomialIdeal, Result};

/// A monomial whose exponents are affine in the weight `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTemplate(pub Vec<AffineExponent>);

impl MonomialTemplate {
    pub fn eval(&self, m: i64) -> Result<Exponents> {
        self.0
            .iter()
            .map(|a| a.eval(m))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Exponents)
            .map_err(IdealError::from)
    }
}

/// Degree-indexed monomial ideals `I_m = (t_1(m), ..., t_k(m))` for `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMonomialFamily {
    vars: Vars,
    templates: Vec<MonomialTemplate>,
}

impl GradedMonomialFamily {
    /// Validates that every template exponent is nonnegative for all `m >= 1`.
    pub fn new(vars: &Vars, templates: Vec<MonomialTemplate>) -> Result<Self> {
        for t in &templates {
            if t.0.len() != vars.len() {
                return Err(IdealError::Arity {
                    expected: vars.len(),
                    got: t.0.len(),
                });
            }
            for a in &t.0 {
                a.validate(1, i64::MAX)?;
            }
        }
        Ok(GradedMonomialFamily {
            vars: vars.clone(),
            templates,
        })
    }

    /// The family `(x*y, x^m, y^m)` in the chart `x, y`.
    pub fn nc_triple_point() -> Self {
        let m = AffineExponent::new(1, 0);
        let one = AffineExponent::constant(1);
        let zero = AffineExponent::constant(0);
        GradedMonomialFamily::new(
            &Vars::new(&["x", "y"]),
            vec![
                MonomialTemplate(vec![one, one]),
                MonomialTemplate(vec![m, zero]),
                MonomialTemplate(vec![zero, m]),
            ],
        )
        .expect("valid family")
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn templates(&self) -> &[MonomialTemplate] {
        &self.templates
    }

    pub fn instantiate(&self, m: i64) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(IdealError::DegreeOutOfRange {
                got: m,
                need: "m >= 1",
            });
        }
        let gens = self
            .templates
            .iter()
            .map(|t| t.eval(m))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(&self.vars, gens)
    }

    /// First pair `(a, b)` with `a <= b`, `a + b <= n` and `I_a·I_b ⊄ I_{a+b}`.
    pub fn multiplicativity_violation(&self, n: i64) -> Result<Option<(i64, i64, Exponents)>> {
        let ideals = self.ideals_up_to(n)?;
        for a in 1..=n / 2 {
            for b in a..=n - a {
                let prod = ideals[a as usize].product(&ideals[b as usize])?;
                let target = &ideals[(a + b) as usize];
                if let Some(g) = prod.generators().iter().find(|g| !target.contains(g)) {
                    return Ok(Some((a, b, g.clone())));
                }
            }
        }
        Ok(None)
    }

    /// `I_a·I_b ⊆ I_{a+b}` for all `1 <= a <= b` with `a + b <= n`.
    pub fn check_multiplicative(&self, n: i64) -> Result<bool> {
        if n < 2 {
            return Err(IdealError::DegreeOutOfRange {
                got: n,
                need: "N >= 2",
            });
        }
        Ok(self.multiplicativity_violation(n)?.is_none())
    }

    fn ensure_multiplicative(&self, n: i64) -> Result<()> {
        match self.multiplicativity_violation(n)? {
            None => Ok(()),
            Some((a, b, g)) => Err(IdealError::MultiplicativityViolation {
                a,
                b,
                witness: format_monomial(&self.vars, &g),
            }),
        }
    }

    /// `ideals[m] = I_m` for `1 <= m <= n`; index 0 is the unit ideal.
    fn ideals_up_to(&self, n: i64) -> Result<Vec<MonomialIdeal>> {
        let mut out = vec![MonomialIdeal::unit(&self.vars)];
        for m in 1..=n.max(0) {
            out.push(self.instantiate(m)?);
        }
        Ok(out)
    }

    fn component_from(ideals: &[MonomialIdeal], vars: &Vars, m: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::zero(vars);
        for a in 1..=m / 2 {
            acc = acc.sum(&ideals[a].product(&ideals[m - a])?)?;
        }
        Ok(acc)
    }

    /// `J_m = Σ_{a+b=m, 0<a,b<m} I_a·I_b`, the degree-`m` part of the
    /// subalgebra generated in degrees below `m`.
    pub fn subalgebra_component(&self, m: i64) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(IdealError::DegreeOutOfRange {
                got: m,
                need: "m >= 1",
            });
        }
        self.ensure_multiplicative(m)?;
        let ideals = self.ideals_up_to(m)?;
        Self::component_from(&ideals, &self.vars, m as usize)
    }

    /// Minimal generators of `I_m` outside `J_m`.
    pub fn new_generators(&self, m: i64) -> Result<Vec<Exponents>> {
        let j = self.subalgebra_component(m)?;
        let i = self.instantiate(m)?;
        Ok(i.generators()
            .iter()
            .filter(|g| !j.contains(g))
            .cloned()
            .collect())
    }

    /// New generators in every degree `1..=n`.
    pub fn rees_report(&self, n: i64) -> Result<ReesGenerationReport> {
        if n < 3 {
            return Err(IdealError::DegreeOutOfRange {
                got: n,
                need: "N >= 3",
            });
        }
        self.ensure_multiplicative(n)?;
        let ideals = self.ideals_up_to(n)?;
        let mut rows = Vec::with_capacity(n as usize);
        for m in 1..=n as usize {
            let sub = Self::component_from(&ideals, &self.vars, m)?;
            let new_generators = ideals[m]
                .generators()
                .iter()
                .filter(|g| !sub.contains(g))
                .cloned()
                .collect();
            rows.push(ReesRow {
                m: m as i64,
                ideal: ideals[m].clone(),
                subalgebra: sub,
                new_generators,
            });
        }
        let witness = rows
            .iter()
            .filter(|r| r.m >= 3)
            .all(|r| !r.new_generators.is_empty());
        Ok(ReesGenerationReport {
            rows,
            max_degree: n,
            witness,
        })
    }
}

impl fmt::Display for GradedMonomialFamily {
    /// Canonical DSL form, e.g. `x*y, x^m, y^m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .templates
            .iter()
            .map(|t| {
                let factors: Vec<String> = self
                    .vars
                    .names()
                    .iter()
                    .zip(&t.0)
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(v, a)| match (a.slope, a.offset) {
                        (0, 1) => v.clone(),
                        (0, _) | (1, 0) => format!("{v}^{a}"),
                        _ => format!("{v}^({a})"),
                    })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesRow {
    pub m: i64,
    pub ideal: MonomialIdeal,
    pub subalgebra: MonomialIdeal,
    pub new_generators: Vec<Exponents>,
}

/// Per-degree generation table of `⊕ I_m W^m`. `witness` is set when a new
/// generator is needed in every degree `3..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesGenerationReport {
    pub rows: Vec<ReesRow>,
    pub max_degree: i64,
    pub witness: bool,
}
