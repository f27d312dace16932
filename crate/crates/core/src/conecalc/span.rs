//! Finite-dimensional spans of univariate Laurent polynomials over `Q`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::exactalg::{Exponents, LaurentPoly, Rational, Vars};

/// Span of finitely many Laurent polynomials in one variable, kept as a
/// linearly independent basis.
#[derive(Clone, Debug)]
pub struct LaurentSpan {
    vars: Vars,
    basis: Vec<LaurentPoly>,
}

impl LaurentSpan {
    pub fn new(vars: &Vars, generators: &[LaurentPoly]) -> Self {
        let basis = independent_subset(generators);
        LaurentSpan {
            vars: vars.clone(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    /// Smallest exponent carried by any element of the span; `None` for the
    /// zero space. Exponents of a combination lie in the union of the basis
    /// exponents, and each basis vector is itself in the span.
    pub fn min_exponent(&self) -> Option<i64> {
        self.basis
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| e.0[0]).collect::<Vec<_>>())
            .min()
    }

    /// Largest pole order over the span.
    pub fn max_pole_order(&self) -> i64 {
        self.min_exponent().map_or(0, |lo| (-lo).max(0))
    }

    /// `U ∩ V` via the kernel of `[U | -V]`.
    pub fn intersect(&self, other: &LaurentSpan) -> LaurentSpan {
        let gens: Vec<&LaurentPoly> = self.basis.iter().chain(&other.basis).collect();
        let exps: Vec<Exponents> = exponent_index(&gens);
        let n_left = self.basis.len();
        let cols = gens.len();
        let mut matrix: Vec<Vec<Rational>> = exps
            .iter()
            .map(|e| {
                gens.iter()
                    .enumerate()
                    .map(|(j, g)| {
                        let c = g.coeff(e);
                        if j < n_left {
                            c
                        } else {
                            -c
                        }
                    })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&mut matrix, cols);
        let elements: Vec<LaurentPoly> = kernel
            .into_iter()
            .map(|v| {
                let mut acc = LaurentPoly::zero(&self.vars);
                for (c, g) in v.iter().zip(&self.basis) {
                    acc = acc.add(&g.scale(c)).expect("same chart");
                }
                acc
            })
            .collect();
        LaurentSpan::new(&self.vars, &elements)
    }

    pub fn contains(&self, p: &LaurentPoly) -> bool {
        let mut gens = self.basis.clone();
        gens.push(p.clone());
        independent_subset(&gens).len() == self.basis.len()
    }
}

fn exponent_index(gens: &[&LaurentPoly]) -> Vec<Exponents> {
    let set: BTreeSet<Exponents> = gens
        .iter()
        .flat_map(|g| g.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
        .collect();
    set.into_iter().collect()
}

fn independent_subset(generators: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let refs: Vec<&LaurentPoly> = generators.iter().collect();
    let exps = exponent_index(&refs);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut kept = Vec::new();
    for g in generators {
        let mut v: Vec<Rational> = exps.iter().map(|e| g.coeff(e)).collect();
        for r in &rows {
            let pivot = r.iter().position(|c| !c.is_zero()).expect("nonzero row");
            if !v[pivot].is_zero() {
                let f = v[pivot].clone() / r[pivot].clone();
                for (a, b) in v.iter_mut().zip(r) {
                    *a -= &f * b;
                }
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            let lead = v[p].clone();
            for c in v.iter_mut() {
                *c /= lead.clone();
            }
            for r in rows.iter_mut() {
                if !r[p].is_zero() {
                    let f = r[p].clone();
                    for (a, b) in r.iter_mut().zip(&v) {
                        *a -= &f * b;
                    }
                }
            }
            rows.push(v);
            kept.push(g.clone());
        }
    }
    kept
}

/// Basis of `{ v : matrix · v = 0 }`; `matrix` is reduced in place.
fn nullspace(matrix: &mut [Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, r);
        let lead = matrix[row][col].clone();
        for c in matrix[row].iter_mut() {
            *c /= lead.clone();
        }
        let pivot_row = matrix[row].clone();
        for (i, other) in matrix.iter_mut().enumerate() {
            if i != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (a, b) in other.iter_mut().zip(&pivot_row) {
                    *a -= &f * b;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == matrix.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn t() -> Vars {
        Vars::new(&["t"])
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &t()).unwrap()
    }

    #[test]
    fn dependent_generators_are_dropped() {
        let s = LaurentSpan::new(&t(), &[p("t + 1"), p("t - 1"), p("2*t"), p("0")]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&p("3")));
        assert!(!s.contains(&p("t^2")));
    }

    #[test]
    fn intersection_of_overlapping_spans() {
        let u = LaurentSpan::new(&t(), &[p("t^-2"), p("t^-1"), p("1"), p("t")]);
        let v = LaurentSpan::new(&t(), &[p("1"), p("t"), p("t^2")]);
        let w = u.intersect(&v);
        assert_eq!(w.dim(), 2);
        assert_eq!(w.min_exponent(), Some(0));
        assert_eq!(u.max_pole_order(), 2);
        assert_eq!(w.max_pole_order(), 0);
    }

    #[test]
    fn intersection_with_non_monomial_generators() {
        // span{t^-1 + 1} ∩ span{1, t^-1} = span{t^-1 + 1}
        let u = LaurentSpan::new(&t(), &[p("t^-1 + 1")]);
        let v = LaurentSpan::new(&t(), &[p("1"), p("t^-1")]);
        let w = u.intersect(&v);
        assert_eq!(w.dim(), 1);
        assert_eq!(w.max_pole_order(), 1);
        // span{t^-1 + 1} ∩ span{1} = 0
        let z = u.intersect(&LaurentSpan::new(&t(), &[p("1")]));
        assert_eq!(z.dim(), 0);
        assert_eq!(z.min_exponent(), None);
    }
}
