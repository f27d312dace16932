//! Binary forms over `Q`, their roots on `P^1`, and hyperelliptic branch
//! data.

use std::fmt;

use num_traits::{One, Zero};

use super::{GeomError, Result};
use crate::exactalg::{parse_poly, LaurentPoly, Rational, Vars};

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Remainder of division by a nonzero `d`.
    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        let dl = d.lead().expect("division by zero polynomial");
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = r[top].clone() / dl;
            for (k, c) in d.0.iter().enumerate() {
                r[top - dd + k] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic gcd; zero iff both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.lead().cloned() {
            Some(l) => UniPoly::new(a.0.iter().map(|c| c / &l).collect()),
            None => a,
        }
    }
}

/// `Σ c_i x^i y^{d-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    /// `coeffs[i]` multiplies `x^i y^{degree-i}`.
    coeffs: Vec<Rational>,
}

fn xy() -> Vars {
    Vars::new(&["x", "y"])
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(GeomError::NotAForm(format!(
                "{} coefficients for degree {degree}",
                coeffs.len()
            )));
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(GeomError::NotAForm("zero form".into()));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    /// Homogeneous nonzero polynomial in `x, y`.
    pub fn from_poly(p: &LaurentPoly) -> Result<Self> {
        p.vars()
            .ensure_same(&xy())
            .map_err(|e| GeomError::NotAForm(e.to_string()))?;
        if p.is_zero() || !p.is_polynomial() {
            return Err(GeomError::NotAForm(p.to_string()));
        }
        let degrees: Vec<i64> = p.terms().map(|(e, _)| e.degree()).collect();
        let d = degrees[0];
        if degrees.iter().any(|&k| k != d) {
            return Err(GeomError::NotAForm(format!("{p} is not homogeneous")));
        }
        let mut coeffs = vec![Rational::zero(); d as usize + 1];
        for (e, c) in p.terms() {
            coeffs[e.0[0] as usize] = c.clone();
        }
        BinaryForm::new(d as usize, coeffs)
    }

    pub fn parse(src: &str) -> Result<Self> {
        let p = parse_poly(src, &xy()).map_err(|e| GeomError::NotAForm(e.to_string()))?;
        BinaryForm::from_poly(&p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let d = self.degree as i64;
        LaurentPoly::from_terms(
            &xy(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), vec![i as i64, d - i as i64].into())),
        )
    }

    /// `f(x, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `y` dividing `f`.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.degree - self.dehomogenize().degree().unwrap_or(0)
    }

    pub fn swap(&self) -> BinaryForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm {
            degree: self.degree,
            coeffs,
        }
    }

    /// Vanishes at `(a:b)`.
    pub fn vanishes_at(&self, a: &Rational, b: &Rational) -> bool {
        let d = self.degree as u32;
        let mut total = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let i = i as u32;
            total += c
                * num_traits::pow(a.clone(), i as usize)
                * num_traits::pow(b.clone(), (d - i) as usize);
        }
        total.is_zero()
    }

    /// No repeated root on `P^1`.
    pub fn is_squarefree(&self) -> bool {
        let f = self.dehomogenize();
        f.gcd(&f.derivative()).degree() == Some(0) && self.multiplicity_at_infinity() <= 1
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// No common root on `P^1`, decided by a gcd after setting `y = 1` plus a
/// check at `(1:0)`.
pub fn forms_coprime(f: &BinaryForm, g: &BinaryForm) -> bool {
    let both_at_infinity = f.multiplicity_at_infinity() > 0 && g.multiplicity_at_infinity() > 0;
    !both_at_infinity && f.dehomogenize().gcd(&g.dehomogenize()).degree() == Some(0)
}

/// Resultant of two binary forms (Sylvester determinant on the formal
/// degrees); zero iff they share a root on `P^1`.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Rational {
    let (m, n) = (f.degree, g.degree);
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    // Rows hold coefficients from x^{size-1} down; f's coefficients are
    // listed from x^m down.
    let fc: Vec<Rational> = f.coeffs.iter().rev().cloned().collect();
    let gc: Vec<Rational> = g.coeffs.iter().rev().cloned().collect();
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut r = vec![Rational::zero(); size];
        r[k..k + m + 1].clone_from_slice(&fc);
        rows.push(r);
    }
    for k in 0..m {
        let mut r = vec![Rational::zero(); size];
        r[k..k + n + 1].clone_from_slice(&gc);
        rows.push(r);
    }
    determinant(rows)
}

fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = a[r][col].clone() / &pivot;
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * y;
                }
            }
        }
    }
    det
}

/// `z^2 = f(x, y)` with `deg f = 2g + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHyperellipticCurve {
    branch: BinaryForm,
}

impl WeightedHyperellipticCurve {
    pub fn new(branch: BinaryForm) -> Result<Self> {
        if branch.degree() < 2 || !branch.degree().is_multiple_of(2) {
            return Err(GeomError::NotAForm(format!(
                "branch form of odd or small degree {}",
                branch.degree()
            )));
        }
        Ok(WeightedHyperellipticCurve { branch })
    }

    pub fn parse(src: &str) -> Result<Self> {
        WeightedHyperellipticCurve::new(BinaryForm::parse(src)?)
    }

    pub fn branch(&self) -> &BinaryForm {
        &self.branch
    }

    pub fn genus(&self) -> i64 {
        (self.branch.degree() as i64 - 2) / 2
    }

    /// Fixed points of `z ↦ -z`: the roots of `f`.
    pub fn fixed_points(&self) -> Result<usize> {
        if !self.branch.is_squarefree() {
            return Err(GeomError::NotSquarefree(self.branch.to_string()));
        }
        Ok(self.branch.degree())
    }
}

/// Nodes of `(C × E)/(τ_C, τ_E)`: pairs of fixed points.
pub fn node_count(c: &WeightedHyperellipticCurve, e: &WeightedHyperellipticCurve) -> Result<usize> {
    Ok(c.fixed_points()? * e.fixed_points()?)
}

/// Nodes on the image of `C × {pt}`; `pt = (a:b)` must be a fixed point of
/// `τ_E`.
pub fn nodes_on_fiber(
    c: &WeightedHyperellipticCurve,
    e: &WeightedHyperellipticCurve,
    pt: (&Rational, &Rational),
) -> Result<usize> {
    e.fixed_points()?;
    if !e.branch().vanishes_at(pt.0, pt.1) {
        return Err(GeomError::NotAFixedPoint(format!("({}:{})", pt.0, pt.1)));
    }
    c.fixed_points()
}

/// Roots of `f` and of `f` with `x, y` swapped are disjoint.
pub fn sigma_node_disjoint(f: &BinaryForm) -> bool {
    forms_coprime(f, &f.swap())
}

/// Degrees of a line bundle on a product of two curves along the factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductSurfaceClass {
    pub d1: i64,
    pub d2: i64,
}

impl ProductSurfaceClass {
    /// `ω_C ⊠ ω_E(p + q)` style class: `(2g_1 - 2 + n_1, 2g_2 - 2 + n_2)`
    /// with `n_i` marked points on factor `i`.
    pub fn log_canonical(g1: i64, n1: i64, g2: i64, n2: i64) -> Self {
        ProductSurfaceClass {
            d1: 2 * g1 - 2 + n1,
            d2: 2 * g2 - 2 + n2,
        }
    }
}

pub fn product_ample(c: ProductSurfaceClass) -> bool {
    c.d1 > 0 && c.d2 > 0
}

/// `dim H^0(P^1, O(d))`.
pub fn h0_p1(d: i64) -> i64 {
    (d + 1).max(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn curve(s: &str) -> WeightedHyperellipticCurve {
        WeightedHyperellipticCurve::parse(s).unwrap()
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(curve("x^6 + 2*y^6").fixed_points().unwrap(), 6);
        assert_eq!(curve("x^3*y + x*y^3").fixed_points().unwrap(), 4);
        assert!(matches!(
            curve("x^2*y^4").fixed_points(),
            Err(GeomError::NotSquarefree(_))
        ));
        assert!(!BinaryForm::parse("x*y^2").unwrap().is_squarefree());
        assert!(!BinaryForm::parse("x^2 + 2*x*y + y^2")
            .unwrap()
            .is_squarefree());
    }

    #[test]
    fn node_examples() {
        let c = curve("x^6 + 2*y^6");
        let e = curve("x^3*y + x*y^3");
        assert_eq!(node_count(&c, &e).unwrap(), 24);
        assert_eq!(nodes_on_fiber(&c, &e, (&int(0), &int(1))).unwrap(), 6);
        assert_eq!(nodes_on_fiber(&c, &e, (&int(1), &int(0))).unwrap(), 6);
        assert!(nodes_on_fiber(&c, &e, (&int(1), &int(1))).is_err());
        assert_eq!(node_count(&e, &e).unwrap(), 16);
        assert_eq!((c.genus(), e.genus()), (2, 1));
    }

    #[test]
    fn disjointness_examples() {
        let f = BinaryForm::parse("x^6 + 2*y^6").unwrap();
        assert!(sigma_node_disjoint(&f));
        assert!(!sigma_node_disjoint(&BinaryForm::parse("x*y").unwrap()));
        let a = BinaryForm::parse("x*y").unwrap();
        let b = BinaryForm::parse("x^2 + y^2").unwrap();
        assert!(forms_coprime(&a, &b));
        assert!(!resultant(&a, &b).is_zero());
        assert!(resultant(&f, &f.swap()) != int(0));
        assert!(resultant(&a, &a.swap()).is_zero());
    }

    #[test]
    fn resultant_of_linear_forms() {
        // Res(x - 2y, x - 3y) = det [[1,-2],[1,-3]] = -1
        let f = BinaryForm::parse("x - 2*y").unwrap();
        let g = BinaryForm::parse("x - 3*y").unwrap();
        assert_eq!(resultant(&f, &g), int(-1));
        // common root at infinity only
        let p = BinaryForm::parse("y").unwrap();
        let q = BinaryForm::parse("x*y + y^2").unwrap();
        assert!(!forms_coprime(&p, &q));
        assert!(resultant(&p, &q).is_zero());
    }

    #[test]
    fn ampleness_and_sections() {
        let c = ProductSurfaceClass::log_canonical(2, 0, 1, 2);
        assert_eq!((c.d1, c.d2), (2, 2));
        assert!(product_ample(c));
        assert!(!product_ample(ProductSurfaceClass { d1: 0, d2: 5 }));
        assert!(!product_ample(ProductSurfaceClass { d1: 2, d2: 0 }));
        assert_eq!(h0_p1(-4), 0);
        assert_eq!(h0_p1(0), 1);
        assert_eq!(h0_p1(3), 4);
    }

    #[test]
    fn gcd_basics() {
        let p = UniPoly::new(vec![int(-1), int(0), int(1)]);
        let q = UniPoly::new(vec![int(1), int(1)]);
        assert_eq!(p.gcd(&q), q);
        assert_eq!(p.derivative(), UniPoly::new(vec![int(0), int(2)]));
        assert!(UniPoly::new(vec![int(0)]).is_zero());
    }

    #[test]
    fn rejects_non_forms() {
        assert!(BinaryForm::parse("x^2 + y").is_err());
        assert!(BinaryForm::parse("0").is_err());
        assert!(BinaryForm::parse("x^-1*y^3").is_err());
        assert!(WeightedHyperellipticCurve::parse("x^3 + y^3").is_err());
    }
}
