//! Even-weight log pluricanonical sections on the A1 cone `uv = w^2` along
//! the line `C2 = (v = w = 0)`, and the pole bound after gluing `C2` to the
//! boundary of a smooth chart.
//!
//! Computations go through the double cover `u = s^2, v = t^2, w = st`,
//! where `C2` becomes `t = 0` and everything is a Laurent polynomial.

mod span;

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::exactalg::{int, parse_poly, AlgError, Exponents, LaurentPoly, Rational, Vars};
use crate::logres::{self, ChartModel, LogError, PluriSection};

pub use span::LaurentSpan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Log(#[from] LogError),
    #[error("multiplicity along C2 of the zero element")]
    ZeroElement,
    #[error("coefficient {coeff} leaves a pole of order {order} in t along C2")]
    IllegalPole { coeff: String, order: i64 },
    #[error("chart element is not invariant under (s,t) -> (-s,-t): {0}")]
    NotInvariant(String),
    #[error("the relation route needs a polynomial coefficient, got {0}")]
    NonPolynomial(String),
}

pub type Result<T> = std::result::Result<T, ConeError>;

/// Coefficient-degree cutoff for the restriction spaces.
pub const DEFAULT_DEGREE_CUTOFF: i64 = 12;

fn uv() -> Vars {
    Vars::new(&["u", "v"])
}

fn uvw() -> Vars {
    Vars::new(&["u", "v", "w"])
}

fn st() -> Vars {
    Vars::new(&["s", "t"])
}

fn u_only() -> Vars {
    Vars::new(&["u"])
}

/// `c0 + c1·w` in the coordinate ring of `uv = w^2` (localized at `u, v`).
#[derive(Clone, PartialEq, Eq)]
pub struct ConeElement {
    c0: LaurentPoly,
    c1: LaurentPoly,
}

impl ConeElement {
    pub fn new(c0: LaurentPoly, c1: LaurentPoly) -> Result<Self> {
        c0.vars().ensure_same(&uv())?;
        c1.vars().ensure_same(&uv())?;
        Ok(ConeElement { c0, c1 })
    }

    pub fn zero() -> Self {
        ConeElement {
            c0: LaurentPoly::zero(&uv()),
            c1: LaurentPoly::zero(&uv()),
        }
    }

    pub fn one() -> Self {
        ConeElement {
            c0: LaurentPoly::one(&uv()),
            c1: LaurentPoly::zero(&uv()),
        }
    }

    /// `c · u^a v^b w^k`, reduced with `w^2 = uv`.
    pub fn monomial(c: Rational, a: i64, b: i64, k: i64) -> Self {
        let j = k.div_euclid(2);
        let r = k.rem_euclid(2);
        let term = LaurentPoly::monomial(&uv(), c, Exponents(vec![a + j, b + j]));
        if r == 0 {
            ConeElement {
                c0: term,
                c1: LaurentPoly::zero(&uv()),
            }
        } else {
            ConeElement {
                c0: LaurentPoly::zero(&uv()),
                c1: term,
            }
        }
    }

    /// Parses a polynomial in `u, v, w` and reduces it.
    pub fn parse(src: &str) -> Result<Self> {
        let p = parse_poly(src, &uvw())?;
        let mut acc = ConeElement::zero();
        for (e, c) in p.terms() {
            acc = acc.add(&ConeElement::monomial(c.clone(), e.0[0], e.0[1], e.0[2]))?;
        }
        Ok(acc)
    }

    pub fn c0(&self) -> &LaurentPoly {
        &self.c0
    }

    pub fn c1(&self) -> &LaurentPoly {
        &self.c1
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.c0.is_polynomial() && self.c1.is_polynomial()
    }

    pub fn add(&self, other: &ConeElement) -> Result<ConeElement> {
        Ok(ConeElement {
            c0: self.c0.add(&other.c0)?,
            c1: self.c1.add(&other.c1)?,
        })
    }

    pub fn mul(&self, other: &ConeElement) -> Result<ConeElement> {
        let uv_term = LaurentPoly::monomial(&uv(), Rational::one(), Exponents(vec![1, 1]));
        let c0 = self
            .c0
            .mul(&other.c0)?
            .add(&self.c1.mul(&other.c1)?.mul(&uv_term)?)?;
        let c1 = self.c0.mul(&other.c1)?.add(&self.c1.mul(&other.c0)?)?;
        Ok(ConeElement { c0, c1 })
    }
}

impl fmt::Display for ConeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0.is_zero(), self.c1.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.c0),
            (true, false) => write!(f, "({})*w", self.c1),
            (false, false) => write!(f, "{} + ({})*w", self.c0, self.c1),
        }
    }
}

impl fmt::Debug for ConeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConeElement({self})")
    }
}

/// A Laurent polynomial in `s, t` invariant under `(s, t) ↦ (-s, -t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartElement(LaurentPoly);

impl ChartElement {
    pub fn new(p: LaurentPoly) -> Result<Self> {
        p.vars().ensure_same(&st())?;
        if p.terms().any(|(e, _)| e.degree() % 2 != 0) {
            return Err(ConeError::NotInvariant(p.to_string()));
        }
        Ok(ChartElement(p))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }
}

fn chart_images() -> [(Rational, Exponents); 3] {
    [
        (int(1), Exponents(vec![2, 0])),
        (int(1), Exponents(vec![0, 2])),
        (int(1), Exponents(vec![1, 1])),
    ]
}

fn chart_poly(p: &LaurentPoly) -> Result<LaurentPoly> {
    let images = chart_images();
    Ok(p.substitute_monomials(&st(), &images[..2])?)
}

/// `u = s^2, v = t^2, w = st`.
pub fn to_chart(e: &ConeElement) -> Result<ChartElement> {
    let w = LaurentPoly::monomial(&st(), int(1), chart_images()[2].1.clone());
    let p = chart_poly(&e.c0)?.add(&chart_poly(&e.c1)?.mul(&w)?)?;
    ChartElement::new(p)
}

/// Order of vanishing along `C2`, i.e. the `t`-adic order in the chart.
pub fn mult_along_c2(e: &ConeElement) -> Result<i64> {
    let chart = to_chart(e)?;
    chart.0.min_exponent("t")?.ok_or(ConeError::ZeroElement)
}

/// `coeff · (du∧dw/u)^{2m} · v^{-m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSection {
    pub half_weight: u32,
    pub coeff: ConeElement,
}

impl ConeSection {
    pub fn new(half_weight: u32, coeff: ConeElement) -> Self {
        ConeSection { half_weight, coeff }
    }

    pub fn weight(&self) -> u32 {
        2 * self.half_weight
    }
}

/// `h(u)·(du)^weight` on `C2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRestriction {
    pub h: LaurentPoly,
    pub weight: u32,
    pub pole_order: i64,
}

impl ConeRestriction {
    fn new(h: LaurentPoly, weight: u32) -> Self {
        let pole_order = logres::pole_order(&h);
        ConeRestriction {
            h,
            weight,
            pole_order,
        }
    }
}

impl fmt::Display for ConeRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*(du)^{}", self.h, self.weight)
    }
}

/// Jacobian determinant `∂(u, w)/∂(s, t)` of the chart map.
fn chart_jacobian() -> Result<LaurentPoly> {
    let [u_img, _, w_img] = chart_images();
    let u = LaurentPoly::monomial(&st(), u_img.0, u_img.1);
    let w = LaurentPoly::monomial(&st(), w_img.0, w_img.1);
    Ok(u.derivative("s")?
        .mul(&w.derivative("t")?)?
        .sub(&u.derivative("t")?.mul(&w.derivative("s")?)?)?)
}

/// Restriction to `C2` through the double-cover chart.
///
/// The generator pulls back to `(J/u)^{2m} t^{-2m} (ds∧dt)^{2m}` with `J` the
/// Jacobian of `(u, w)`; the residue of `ds∧dt/t` along `t = 0` is `-ds`, and
/// `du = (∂u/∂s) ds` on `t = 0` converts back to `(du)^{2m}`.
pub fn restrict_cone(s: &ConeSection) -> Result<ConeRestriction> {
    let m = s.half_weight as i64;
    let w2m = 2 * s.half_weight;
    let chart = to_chart(&s.coeff)?;
    let u_chart = LaurentPoly::monomial(&st(), int(1), Exponents(vec![2, 0]));
    let jac_over_u = chart_jacobian()?.shift(&Exponents(vec![-2, 0]));
    // coefficient of (ds∧dt)^{2m}, with v^{-m} = t^{-2m}
    let density = chart
        .0
        .mul(&jac_over_u.pow(w2m))?
        .shift(&Exponents(vec![0, -2 * m]));
    // (ds∧dt)^{2m} = (ds∧dt/t)^{2m} t^{2m}
    let log_density = density.shift(&Exponents(vec![0, 2 * m]));
    if let Some(lo) = log_density.min_exponent("t")? {
        if lo < 0 {
            return Err(ConeError::IllegalPole {
                coeff: s.coeff.to_string(),
                order: -lo,
            });
        }
    }
    let residue_sign = num_traits::pow(int(-1), w2m as usize);
    let along_c2 = log_density.restrict_var("t")?.scale(&residue_sign);
    // (ds)^{2m} = (du)^{2m} / (∂u/∂s)^{2m}
    let du_ds = u_chart.derivative("s")?.restrict_var("t")?;
    let (c, e) = du_ds.as_monomial().expect("du/ds is a monomial");
    let inv = LaurentPoly::monomial(
        &Vars::new(&["s"]),
        num_traits::pow(c.recip(), w2m as usize),
        e.scale(-(w2m as i64)),
    );
    let h_s = along_c2.mul(&inv)?;
    // h is a function of s^2 = u
    let mut terms = Vec::new();
    for (e, c) in h_s.terms() {
        if e.0[0] % 2 != 0 {
            return Err(ConeError::NotInvariant(h_s.to_string()));
        }
        terms.push((c.clone(), Exponents(vec![e.0[0] / 2])));
    }
    Ok(ConeRestriction::new(
        LaurentPoly::from_terms(&u_only(), terms),
        w2m,
    ))
}

/// Restriction computed on the cone itself: rewrite the generator as
/// `(dw∧du/w)^{2m} · w^{2m}/(u^{2m} v^m)`, reduce `w^{2m} = (uv)^m`, and use
/// that `dw/w ∧ du` has residue `du` along `w = 0`.
pub fn restrict_cone_via_relation(s: &ConeSection) -> Result<ConeRestriction> {
    if !s.coeff.is_polynomial() {
        return Err(ConeError::NonPolynomial(s.coeff.to_string()));
    }
    let m = s.half_weight as i64;
    let w2m = 2 * s.half_weight;
    // (du∧dw)^{2m} = (-1)^{2m} (dw∧du)^{2m}
    let swap_sign = num_traits::pow(int(-1), w2m as usize);
    let factor = ConeElement::monomial(int(1), 0, 0, 2 * m).mul(&ConeElement::monomial(
        int(1),
        -2 * m,
        -m,
        0,
    ))?;
    let total = s.coeff.mul(&factor)?;
    // On C2: v = 0 and w = 0. c1·w vanishes there as c1 is polynomial in u, v
    // (the factor above carries no v).
    let c0 = total.c0();
    if c0.min_exponent("v")?.is_some_and(|lo| lo < 0) {
        return Err(ConeError::NonPolynomial(total.to_string()));
    }
    let h = c0.restrict_var("v")?.scale(&swap_sign);
    Ok(ConeRestriction::new(h, w2m))
}

/// Holomorphic monomials `u^a v^b w^k` (`k <= 1`) of degree `<= cutoff`.
fn cone_monomials(cutoff: i64) -> Vec<ConeElement> {
    let mut out = Vec::new();
    for k in 0..=1.min(cutoff) {
        for a in 0..=cutoff - k {
            for b in 0..=cutoff - k - a {
                out.push(ConeElement::monomial(int(1), a, b, k));
            }
        }
    }
    out
}

/// Largest pole order of `restrict_cone` over monomial coefficients.
pub fn pole_bound_s2(m: u32) -> Result<i64> {
    pole_bound_s2_with_cutoff(m, DEFAULT_DEGREE_CUTOFF)
}

pub fn pole_bound_s2_with_cutoff(m: u32, cutoff: i64) -> Result<i64> {
    Ok(cone_restriction_space(m, cutoff)?.max_pole_order())
}

fn cone_restriction_space(m: u32, cutoff: i64) -> Result<LaurentSpan> {
    let x = Vars::new(&["x"]);
    let mut gens = Vec::new();
    for e in cone_monomials(cutoff) {
        let r = restrict_cone(&ConeSection::new(m, e))?;
        // τ: (u, 0, 0) ↦ (u, 0)
        gens.push(r.h.rename(&x)?);
    }
    Ok(LaurentSpan::new(&x, &gens))
}

fn smooth_restriction_space(m: u32, cutoff: i64) -> Result<LaurentSpan> {
    let model = ChartModel::SmoothPair;
    let branch = model.branch("y")?;
    let vars = model.vars();
    let mut gens = Vec::new();
    for a in 0..=cutoff {
        for b in 0..=cutoff - a {
            let coeff = LaurentPoly::monomial(&vars, int(1), Exponents(vec![a, b]));
            let r = logres::restrict(&PluriSection::new(model, 2 * m, coeff)?, &branch)?;
            gens.push(r.h);
        }
    }
    Ok(LaurentSpan::new(&Vars::new(&["x"]), &gens))
}

/// Largest pole order of `h(x)(dx)^{2m}` that arises as the common
/// restriction of a smooth-chart section and a cone section.
pub fn glued_pole_bound(m: u32) -> Result<i64> {
    glued_pole_bound_with_cutoff(m, DEFAULT_DEGREE_CUTOFF)
}

pub fn glued_pole_bound_with_cutoff(m: u32, cutoff: i64) -> Result<i64> {
    let cone = cone_restriction_space(m, cutoff)?;
    let smooth = smooth_restriction_space(m, cutoff)?;
    Ok(cone.intersect(&smooth).max_pole_order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ce(s: &str) -> ConeElement {
        ConeElement::parse(s).unwrap()
    }

    fn u_poly(s: &str) -> LaurentPoly {
        parse_poly(s, &u_only()).unwrap()
    }

    #[test]
    fn chart_examples() {
        assert_eq!(
            to_chart(&ce("u")).unwrap().poly(),
            &parse_poly("s^2", &st()).unwrap()
        );
        assert!(to_chart(&ce("w^2 - u*v")).unwrap().poly().is_zero());
        assert_eq!(
            to_chart(&ce("u + w")).unwrap().poly(),
            &parse_poly("s^2 + s*t", &st()).unwrap()
        );
    }

    #[test]
    fn normal_form_reduces_w() {
        let e = ce("w^3 + 2*w^2");
        assert_eq!(e.c0(), &parse_poly("2*u*v", &uv()).unwrap());
        assert_eq!(e.c1(), &parse_poly("u*v", &uv()).unwrap());
        assert!(ce("w^2 - u*v").is_zero());
    }

    #[test]
    fn chart_rejects_odd_terms() {
        let odd = parse_poly("s", &st()).unwrap();
        assert!(matches!(
            ChartElement::new(odd),
            Err(ConeError::NotInvariant(_))
        ));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(mult_along_c2(&ce("v")).unwrap(), 2);
        assert_eq!(mult_along_c2(&ce("w")).unwrap(), 1);
        assert_eq!(mult_along_c2(&ce("u")).unwrap(), 0);
        assert_eq!(
            mult_along_c2(&ConeElement::zero()),
            Err(ConeError::ZeroElement)
        );
    }

    #[test]
    fn jacobian_is_two_s_squared() {
        assert_eq!(
            chart_jacobian().unwrap(),
            parse_poly("2*s^2", &st()).unwrap()
        );
    }

    #[test]
    fn restrict_cone_examples() {
        let r = restrict_cone(&ConeSection::new(1, ConeElement::one())).unwrap();
        assert_eq!(
            (r.h.clone(), r.weight, r.pole_order),
            (u_poly("u^-1"), 2, 1)
        );

        let r = restrict_cone(&ConeSection::new(2, ce("u^2"))).unwrap();
        assert_eq!((r.h.clone(), r.weight, r.pole_order), (u_poly("1"), 4, 0));

        let r = restrict_cone(&ConeSection::new(1, ce("w"))).unwrap();
        assert!(r.h.is_zero());
        assert_eq!(r.pole_order, 0);
    }

    #[test]
    fn restrict_cone_rejects_poles_along_c2() {
        let bad = ConeSection::new(1, ce("v^-1"));
        assert!(matches!(
            restrict_cone(&bad),
            Err(ConeError::IllegalPole { order: 2, .. })
        ));
    }

    #[test]
    fn both_routes_agree_on_monomials() {
        for m in 0..=4 {
            for e in cone_monomials(5) {
                let s = ConeSection::new(m, e);
                assert_eq!(
                    restrict_cone(&s).unwrap(),
                    restrict_cone_via_relation(&s).unwrap(),
                    "{s:?}"
                );
            }
        }
    }

    #[test]
    fn pole_bounds() {
        assert_eq!(pole_bound_s2(1).unwrap(), 1);
        assert_eq!(pole_bound_s2(4).unwrap(), 4);
        assert_eq!(pole_bound_s2(0).unwrap(), 0);
        assert_eq!(glued_pole_bound(1).unwrap(), 0);
        assert_eq!(glued_pole_bound(5).unwrap(), 0);
    }
}
