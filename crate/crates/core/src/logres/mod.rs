//! Log pluricanonical sections on the local charts of a triple point built
//! from a crossing pair of planes and two half-planes, their residue
//! restrictions to the boundary curves, and the gluing condition.
//!
//! A restriction is always normalized to `h(t)·(dt)^m`: the `dt/t` factors
//! and residue signs are folded into `h`, so the gluing condition becomes a
//! literal equality of Laurent polynomials.

mod embed;

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::exactalg::{int, AlgError, Exponents, LaurentPoly, Rational, Vars};
use crate::monideal::MonomialIdeal;

pub use embed::{
    embed_check, embed_search, embed_verdict, EmbedVerdict, EmbeddingAssignment, PlaneEmbedding,
    Slot, COORDINATE_PLANES, LISTED_COMPONENTS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("`{var} = 0` is not a boundary component of {model}")]
    NotABranch { model: ChartModel, var: String },
    #[error("section weights differ: {0:?}")]
    WeightMismatch(Vec<u32>),
    #[error("expected a section on {expected}, got {got}")]
    WrongModel {
        expected: ChartModel,
        got: ChartModel,
    },
    #[error("coefficient {0} is not a polynomial")]
    NonPolynomialCoefficient(String),
    #[error("the gluing map is defined on the half-plane boundaries only, not on {0}")]
    NotAHalfPlaneBranch(String),
    #[error("no embedding assignment passes the check")]
    NotFound,
}

pub type Result<T> = std::result::Result<T, LogError>;

/// The four local charts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChartModel {
    /// `(x, y)`, boundary `xy = 0`, generator `dx∧dy/(xy)`.
    NcPair,
    /// `(x, y)`, boundary `y = 0`, generator `dx∧dy/y`.
    SmoothPair,
    /// `(u1, v1)`, boundary `u1 = 0`, generator `du1∧dv1/u1`.
    HalfPlaneU,
    /// `(u2, v2)`, boundary `v2 = 0`, generator `du2∧dv2/v2`.
    HalfPlaneV,
}

impl fmt::Display for ChartModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChartModel::NcPair => "NcPair",
            ChartModel::SmoothPair => "SmoothPair",
            ChartModel::HalfPlaneU => "HalfPlaneU",
            ChartModel::HalfPlaneV => "HalfPlaneV",
        };
        f.write_str(s)
    }
}

/// The log 2-form `d(first) ∧ d(second) / monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct LogForm {
    first: usize,
    second: usize,
    denominator: Exponents,
}

impl ChartModel {
    pub fn var_names(&self) -> [&'static str; 2] {
        match self {
            ChartModel::NcPair | ChartModel::SmoothPair => ["x", "y"],
            ChartModel::HalfPlaneU => ["u1", "v1"],
            ChartModel::HalfPlaneV => ["u2", "v2"],
        }
    }

    pub fn vars(&self) -> Vars {
        Vars::new(&self.var_names())
    }

    /// Variables whose vanishing cuts out the boundary components.
    pub fn boundary(&self) -> &'static [&'static str] {
        match self {
            ChartModel::NcPair => &["x", "y"],
            ChartModel::SmoothPair => &["y"],
            ChartModel::HalfPlaneU => &["u1"],
            ChartModel::HalfPlaneV => &["v2"],
        }
    }

    fn generator(&self) -> LogForm {
        let denominator = match self {
            ChartModel::NcPair => vec![1, 1],
            ChartModel::SmoothPair => vec![0, 1],
            ChartModel::HalfPlaneU => vec![1, 0],
            ChartModel::HalfPlaneV => vec![0, 1],
        };
        LogForm {
            first: 0,
            second: 1,
            denominator: Exponents(denominator),
        }
    }

    pub fn branch(&self, var: &str) -> Result<Branch> {
        self.boundary()
            .iter()
            .find(|&&b| b == var)
            .map(|&b| Branch {
                model: *self,
                var: b,
            })
            .ok_or_else(|| LogError::NotABranch {
                model: *self,
                var: var.to_string(),
            })
    }

    /// Residue of the generator along `branch`: `sign · t^k · dt`.
    fn generator_residue(&self, branch: &Branch) -> (Rational, i64) {
        let g = self.generator();
        let b = self
            .vars()
            .index_of(branch.var)
            .expect("branch var in chart");
        // (dA∧dB)/D = (dA/A)∧dB · A/D = -(dB/B)∧dA · B/D
        let (sign, vanishing) = if b == g.first {
            (int(1), g.first)
        } else {
            (int(-1), g.second)
        };
        let mut factor = Exponents::zero(2);
        factor.0[vanishing] = 1;
        let factor = factor.sub(&g.denominator);
        debug_assert_eq!(factor.0[b], 0);
        (sign, factor.0[1 - b])
    }
}

/// One boundary component `var = 0` of a chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Branch {
    pub model: ChartModel,
    pub var: &'static str,
}

impl Branch {
    /// Coordinate along the branch.
    pub fn curve_var(&self) -> &'static str {
        let [a, b] = self.model.var_names();
        if self.var == a {
            b
        } else {
            a
        }
    }

    pub fn curve_vars(&self) -> Vars {
        Vars::new(&[self.curve_var()])
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}=0)", self.model, self.var)
    }
}

/// `coeff · (generator)^weight` on a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluriSection {
    pub model: ChartModel,
    pub weight: u32,
    pub coeff: LaurentPoly,
}

impl PluriSection {
    /// A section with polynomial coefficient.
    pub fn new(model: ChartModel, weight: u32, coeff: LaurentPoly) -> Result<Self> {
        if !coeff.is_polynomial() {
            return Err(LogError::NonPolynomialCoefficient(coeff.to_string()));
        }
        Self::new_meromorphic(model, weight, coeff)
    }

    pub fn new_meromorphic(model: ChartModel, weight: u32, coeff: LaurentPoly) -> Result<Self> {
        coeff.vars().ensure_same(&model.vars())?;
        Ok(PluriSection {
            model,
            weight,
            coeff,
        })
    }

    /// Parses the coefficient in the chart's variables.
    pub fn parse(model: ChartModel, weight: u32, coeff: &str) -> Result<Self> {
        let c = crate::exactalg::parse_poly(coeff, &model.vars())?;
        Self::new(model, weight, c)
    }

    pub fn zero(model: ChartModel, weight: u32) -> Self {
        PluriSection {
            model,
            weight,
            coeff: LaurentPoly::zero(&model.vars()),
        }
    }

    pub fn mul(&self, other: &PluriSection) -> Result<PluriSection> {
        if self.model != other.model {
            return Err(LogError::WrongModel {
                expected: self.model,
                got: other.model,
            });
        }
        Ok(PluriSection {
            model: self.model,
            weight: self.weight + other.weight,
            coeff: self.coeff.mul(&other.coeff)?,
        })
    }
}

/// `h(t)·(dt)^weight` on a boundary curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchRestriction {
    pub branch: Branch,
    pub h: LaurentPoly,
    pub weight: u32,
    pub pole_order: i64,
}

impl BranchRestriction {
    pub fn new(branch: Branch, h: LaurentPoly, weight: u32) -> Result<Self> {
        h.vars().ensure_same(&branch.curve_vars())?;
        let pole_order = pole_order(&h);
        Ok(BranchRestriction {
            branch,
            h,
            weight,
            pole_order,
        })
    }

    pub fn curve_var(&self) -> &'static str {
        self.branch.curve_var()
    }

    pub fn scale(&self, c: &Rational) -> BranchRestriction {
        BranchRestriction {
            h: self.h.scale(c),
            pole_order: pole_order(&self.h.scale(c)),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &BranchRestriction) -> Result<BranchRestriction> {
        if self.branch != other.branch {
            return Err(LogError::NotABranch {
                model: other.branch.model,
                var: other.branch.var.to_string(),
            });
        }
        BranchRestriction::new(
            self.branch,
            self.h.mul(&other.h)?,
            self.weight + other.weight,
        )
    }
}

impl fmt::Display for BranchRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})*(d{})^{} on {}",
            self.h,
            self.curve_var(),
            self.weight,
            self.branch
        )
    }
}

/// `max(0, -lowest exponent)` of a univariate Laurent polynomial; zero has
/// no pole.
pub fn pole_order(h: &LaurentPoly) -> i64 {
    h.terms()
        .map(|(e, _)| e.0[0])
        .min()
        .map_or(0, |lo| (-lo).max(0))
}

/// Residue restriction of `s` to `branch`.
pub fn restrict(s: &PluriSection, branch: &Branch) -> Result<BranchRestriction> {
    if branch.model != s.model {
        return Err(LogError::NotABranch {
            model: s.model,
            var: branch.var.to_string(),
        });
    }
    let t = branch.curve_vars();
    let coeff = s.coeff.restrict_var(branch.var)?;
    let (sign, k) = s.model.generator_residue(branch);
    let m = s.weight;
    let gen_power = LaurentPoly::monomial(
        &t,
        num_traits::pow(sign, m as usize),
        Exponents(vec![k * m as i64]),
    );
    BranchRestriction::new(*branch, coeff.mul(&gen_power)?, m)
}

/// Where the gluing map sends a half-plane boundary, and the scalar `c` with
/// `σ^*(boundary coordinate) = c · t` on the target branch.
fn sigma_target(branch: &Branch) -> Result<(Branch, Rational)> {
    match (branch.model, branch.var) {
        // (0, y) ↦ (0, y) ∈ C21: v1 = y
        (ChartModel::HalfPlaneU, "u1") => Ok((ChartModel::NcPair.branch("x")?, int(1))),
        // (x, 0) ↦ (x, 0) ∈ C22: u2 = x, with σ^*(du2)^m = (-x)^m η^m
        (ChartModel::HalfPlaneV, "v2") => Ok((ChartModel::NcPair.branch("y")?, int(-1))),
        _ => Err(LogError::NotAHalfPlaneBranch(branch.to_string())),
    }
}

/// Pulls a half-plane restriction `h(v)(dv)^m` back to the crossing pair.
///
/// The gluing identifies `(dv1)^m` with `y^m·(η|_{x=0})^m` and `(du2)^m` with
/// `(-x)^m·(η|_{y=0})^m`, where `η` is the residue of `dx∧dy/(xy)`; the
/// result is renormalized to `(dt)^m`.
pub fn pullback_sigma(r: &BranchRestriction) -> Result<BranchRestriction> {
    let (target, c) = sigma_target(&r.branch)?;
    let t = target.curve_vars();
    let m = r.weight;
    let h = r.h.rename(&t)?;
    let twist = LaurentPoly::monomial(
        &t,
        num_traits::pow(c, m as usize),
        Exponents(vec![m as i64]),
    );
    let (sign, k) = ChartModel::NcPair.generator_residue(&target);
    let eta_power = LaurentPoly::monomial(
        &t,
        num_traits::pow(sign, m as usize),
        Exponents(vec![k * m as i64]),
    );
    BranchRestriction::new(target, h.mul(&twist)?.mul(&eta_power)?, m)
}

fn parity_sign(m: u32) -> Rational {
    if m.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Whether the three local sections satisfy the gluing condition: each
/// restriction to a branch of `xy = 0` equals `(-1)^m` times the pullback
/// of the matching half-plane restriction.
pub fn glues(s_nc: &PluriSection, s_u: &PluriSection, s_v: &PluriSection) -> Result<bool> {
    for (s, expected) in [
        (s_nc, ChartModel::NcPair),
        (s_u, ChartModel::HalfPlaneU),
        (s_v, ChartModel::HalfPlaneV),
    ] {
        if s.model != expected {
            return Err(LogError::WrongModel {
                expected,
                got: s.model,
            });
        }
    }
    let weights = [s_nc.weight, s_u.weight, s_v.weight];
    if weights.iter().any(|&w| w != s_nc.weight) {
        return Err(LogError::WeightMismatch(weights.to_vec()));
    }
    let sign = parity_sign(s_nc.weight);
    let nc = ChartModel::NcPair;
    let along_x = restrict(s_nc, &nc.branch("x")?)?;
    let along_y = restrict(s_nc, &nc.branch("y")?)?;
    let from_u = pullback_sigma(&restrict(s_u, &ChartModel::HalfPlaneU.branch("u1")?)?)?;
    let from_v = pullback_sigma(&restrict(s_v, &ChartModel::HalfPlaneV.branch("v2")?)?)?;
    Ok(along_x == from_u.scale(&sign) && along_y == from_v.scale(&sign))
}

/// Half-plane sections whose restrictions match those of `f·η^m`, if
/// holomorphic ones exist.
pub fn partner_sections(f: &LaurentPoly, m: u32) -> Result<Option<(PluriSection, PluriSection)>> {
    partners_with(f, m, &inverse_units(m)?)
}

const HALF_BRANCHES: [(ChartModel, &str); 2] = [
    (ChartModel::HalfPlaneU, "u1"),
    (ChartModel::HalfPlaneV, "v2"),
];

/// For each half-plane, the inverse of `(-1)^m` times the pulled-back
/// restriction of the coefficient 1. Restriction followed by pullback is
/// linear in coefficients that are constant off the boundary, and on 1 it is
/// a unit monomial.
fn inverse_units(m: u32) -> Result<[LaurentPoly; 2]> {
    let sign = parity_sign(m);
    let mut out = Vec::with_capacity(2);
    for (half, half_var) in HALF_BRANCHES {
        let half_branch = half.branch(half_var)?;
        let (target, _) = sigma_target(&half_branch)?;
        let unit = pullback_sigma(&restrict(
            &PluriSection::new(half, m, LaurentPoly::one(&half.vars()))?,
            &half_branch,
        )?)?;
        let (uc, ue) = unit.h.as_monomial().expect("pullback of 1 is a monomial");
        out.push(LaurentPoly::monomial(
            &target.curve_vars(),
            (sign.clone() * uc).recip(),
            Exponents(vec![-ue.0[0]]),
        ));
    }
    Ok([out.remove(0), out.remove(0)])
}

fn partners_with(
    f: &LaurentPoly,
    m: u32,
    inverse_units: &[LaurentPoly; 2],
) -> Result<Option<(PluriSection, PluriSection)>> {
    let nc_section = PluriSection::new(ChartModel::NcPair, m, f.clone())?;
    let mut partners = Vec::with_capacity(2);
    for ((half, half_var), inv) in HALF_BRANCHES.into_iter().zip(inverse_units) {
        let half_branch = half.branch(half_var)?;
        let (target, _) = sigma_target(&half_branch)?;
        let wanted = restrict(&nc_section, &target)?;
        let h_half = wanted.h.mul(inv)?;
        if !h_half.is_polynomial() {
            return Ok(None);
        }
        // Extend h(t) constantly off the boundary.
        let half_vars = half.vars();
        let t_index = half_vars.index_of(half_branch.curve_var())?;
        let images: Vec<(Rational, Exponents)> = vec![{
            let mut e = Exponents::zero(2);
            e.0[t_index] = 1;
            (Rational::one(), e)
        }];
        let coeff = h_half.substitute_monomials(&half_vars, &images)?;
        partners.push(PluriSection::new(half, m, coeff)?);
    }
    let sv = partners.pop().expect("two partners");
    let su = partners.pop().expect("two partners");
    Ok(Some((su, sv)))
}

/// Coefficients `f` of `f·(dx∧dy/(xy))^m` that descend through the gluing.
///
/// The condition is tested monomial by monomial: distinct monomials restrict
/// to distinct monomials (or zero) on each axis, so the admissible space is
/// spanned by monomials. The weight-`m` generator restricts with a pole of
/// order `m`, hence `x^a` is admissible for every `a >= m` and all minimal
/// admissible monomials lie in the box `[0, m]^2`.
pub fn gluing_ideal(m: u32) -> Result<MonomialIdeal> {
    let vars = ChartModel::NcPair.vars();
    let units = inverse_units(m)?;
    let mut admissible = Vec::new();
    for a in 0..=m as i64 {
        for b in 0..=m as i64 {
            let e = Exponents(vec![a, b]);
            let f = LaurentPoly::monomial(&vars, Rational::one(), e.clone());
            if let Some((su, sv)) = partners_with(&f, m, &units)? {
                let s = PluriSection::new(ChartModel::NcPair, m, f)?;
                if glues(&s, &su, &sv)? {
                    admissible.push(e);
                }
            }
        }
    }
    MonomialIdeal::new(&vars, admissible).map_err(|e| match e {
        crate::monideal::IdealError::Alg(a) => LogError::Alg(a),
        other => unreachable!("admissible monomials are nonnegative: {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn sec(model: ChartModel, m: u32, coeff: &str) -> PluriSection {
        PluriSection::parse(model, m, coeff).unwrap()
    }

    fn univariate(var: &str, s: &str) -> LaurentPoly {
        parse_poly(s, &Vars::new(&[var])).unwrap()
    }

    #[test]
    fn residue_signs() {
        let nc = ChartModel::NcPair;
        // η|_{y=0} = -dx/x, η|_{x=0} = dy/y
        assert_eq!(
            nc.generator_residue(&nc.branch("y").unwrap()),
            (int(-1), -1)
        );
        assert_eq!(nc.generator_residue(&nc.branch("x").unwrap()), (int(1), -1));
        let u = ChartModel::HalfPlaneU;
        assert_eq!(u.generator_residue(&u.branch("u1").unwrap()), (int(1), 0));
        let v = ChartModel::HalfPlaneV;
        assert_eq!(v.generator_residue(&v.branch("v2").unwrap()), (int(-1), 0));
        let sp = ChartModel::SmoothPair;
        assert_eq!(sp.generator_residue(&sp.branch("y").unwrap()), (int(-1), 0));
    }

    #[test]
    fn restrict_examples() {
        let nc = ChartModel::NcPair;
        let r = restrict(&sec(nc, 1, "y^2"), &nc.branch("x").unwrap()).unwrap();
        assert_eq!(r.h, univariate("y", "y"));
        assert_eq!(r.pole_order, 0);

        let r = restrict(&sec(nc, 1, "x*y"), &nc.branch("x").unwrap()).unwrap();
        assert!(r.h.is_zero());

        let r = restrict(&sec(nc, 1, "1"), &nc.branch("y").unwrap()).unwrap();
        assert_eq!(r.h, univariate("x", "-x^-1"));
        assert_eq!(r.pole_order, 1);

        let sp = ChartModel::SmoothPair;
        let r = restrict(&sec(sp, 2, "x^3"), &sp.branch("y").unwrap()).unwrap();
        assert_eq!(r.h, univariate("x", "x^3"));
        assert_eq!((r.weight, r.pole_order), (2, 0));
    }

    #[test]
    fn restrict_errors() {
        let nc = ChartModel::NcPair;
        assert!(matches!(nc.branch("u1"), Err(LogError::NotABranch { .. })));
        let s = PluriSection::new_meromorphic(nc, 1, parse_poly("x^-1*y", &nc.vars()).unwrap())
            .unwrap();
        assert!(matches!(
            restrict(&s, &nc.branch("x").unwrap()),
            Err(LogError::Alg(
                AlgError::NegativeExponentAtRestriction { .. }
            ))
        ));
        let other = ChartModel::HalfPlaneU.branch("u1").unwrap();
        assert!(restrict(&s, &other).is_err());
        assert!(matches!(
            PluriSection::parse(nc, 1, "x^-1"),
            Err(LogError::NonPolynomialCoefficient(_))
        ));
    }

    #[test]
    fn pullback_examples() {
        let bu = ChartModel::HalfPlaneU.branch("u1").unwrap();
        let bv = ChartModel::HalfPlaneV.branch("v2").unwrap();
        let one_u = BranchRestriction::new(bu, univariate("v1", "1"), 1).unwrap();
        let p = pullback_sigma(&one_u).unwrap();
        assert_eq!(p.h, univariate("y", "1"));
        assert_eq!(p.branch, ChartModel::NcPair.branch("x").unwrap());

        let one_v = BranchRestriction::new(bv, univariate("u2", "1"), 1).unwrap();
        let p = pullback_sigma(&one_v).unwrap();
        assert_eq!(p.h, univariate("x", "1"));

        let lin = BranchRestriction::new(bu, univariate("v1", "v1"), 2).unwrap();
        let p = pullback_sigma(&lin).unwrap();
        assert_eq!((p.h.clone(), p.weight), (univariate("y", "y"), 2));

        let nc = ChartModel::NcPair.branch("x").unwrap();
        let bad = BranchRestriction::new(nc, univariate("y", "1"), 1).unwrap();
        assert!(matches!(
            pullback_sigma(&bad),
            Err(LogError::NotAHalfPlaneBranch(_))
        ));
    }

    #[test]
    fn glues_examples() {
        use ChartModel::*;
        assert!(glues(
            &sec(NcPair, 1, "x*y"),
            &PluriSection::zero(HalfPlaneU, 1),
            &PluriSection::zero(HalfPlaneV, 1)
        )
        .unwrap());
        // y^2 (η)^2 restricts to (dy)^2 along x = 0, matched by 1·(dv1)^2.
        assert!(glues(
            &sec(NcPair, 2, "y^2"),
            &sec(HalfPlaneU, 2, "1"),
            &PluriSection::zero(HalfPlaneV, 2)
        )
        .unwrap());
        assert!(!glues(
            &sec(NcPair, 2, "y^2"),
            &sec(HalfPlaneU, 2, "2"),
            &PluriSection::zero(HalfPlaneV, 2)
        )
        .unwrap());
        assert!(!glues(
            &sec(NcPair, 1, "1"),
            &PluriSection::zero(HalfPlaneU, 1),
            &PluriSection::zero(HalfPlaneV, 1)
        )
        .unwrap());
        assert!(matches!(
            glues(
                &sec(NcPair, 1, "1"),
                &PluriSection::zero(HalfPlaneU, 2),
                &PluriSection::zero(HalfPlaneV, 1)
            ),
            Err(LogError::WeightMismatch(_))
        ));
    }

    #[test]
    fn parity_sign_enters_odd_weights() {
        use ChartModel::*;
        // (x + y)·η has nonzero restrictions on both axes; negating one
        // partner breaks the (-1)^m-twisted equality.
        let s = sec(NcPair, 1, "x + y");
        let (su, sv) = partner_sections(&s.coeff, 1).unwrap().unwrap();
        assert!(glues(&s, &su, &sv).unwrap());
        let su_flipped = PluriSection::new(HalfPlaneU, 1, su.coeff.neg()).unwrap();
        assert!(!glues(&s, &su_flipped, &sv).unwrap());
    }

    #[test]
    fn gluing_ideal_examples() {
        let vars = ChartModel::NcPair.vars();
        let expect = |gens: &[(i64, i64)]| {
            MonomialIdeal::new(
                &vars,
                gens.iter().map(|&(a, b)| Exponents(vec![a, b])).collect(),
            )
            .unwrap()
        };
        assert_eq!(gluing_ideal(3).unwrap(), expect(&[(1, 1), (3, 0), (0, 3)]));
        assert_eq!(gluing_ideal(1).unwrap(), expect(&[(1, 0), (0, 1)]));
        assert_eq!(gluing_ideal(7).unwrap(), expect(&[(1, 1), (7, 0), (0, 7)]));
    }
}
