//! Enumeration-based cross-checks that avoid minimal generators and ideal
//! products entirely. Slow, but each answer comes from raw divisibility.

use crate::exactalg::Exponents;

use super::{GradedMonomialFamily, Result};

/// All monomials in `n` variables of total degree `<= bound`.
pub fn monomials_up_to(n: usize, bound: i64) -> Vec<Exponents> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Exponents>) {
        if cur.len() == n {
            out.push(Exponents(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All monomial divisors of `mono`.
pub fn divisors(mono: &Exponents) -> Vec<Exponents> {
    let mut out = vec![Vec::with_capacity(mono.len())];
    for &k in &mono.0 {
        out = out
            .into_iter()
            .flat_map(|pre| {
                (0..=k).map(move |j| {
                    let mut v = pre.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Exponents).collect()
}

/// `mono ∈ I_m`, tested against the raw template instances.
pub fn in_family(f: &GradedMonomialFamily, m: i64, mono: &Exponents) -> Result<bool> {
    for t in f.templates() {
        if t.eval(m)?.divides(mono) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `mono ∈ Σ_{a+b=m} I_a·I_b`: some divisor `d` of `mono` has `d ∈ I_a` and
/// `mono/d ∈ I_b`.
pub fn in_lower_products(f: &GradedMonomialFamily, m: i64, mono: &Exponents) -> Result<bool> {
    let divs = divisors(mono);
    for a in 1..m {
        for d in &divs {
            if in_family(f, a, d)? && in_family(f, m - a, &mono.sub(d))? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// New generators of degree `<= bound` in weight `m`: monomials of `I_m`
/// with no proper divisor in `I_m`, and outside the lower products.
pub fn new_generators(f: &GradedMonomialFamily, m: i64, bound: i64) -> Result<Vec<Exponents>> {
    let n = f.vars().len();
    let mut out = Vec::new();
    for mono in monomials_up_to(n, bound) {
        if !in_family(f, m, &mono)? {
            continue;
        }
        let mut minimal = true;
        for i in 0..n {
            if mono.0[i] > 0 {
                let mut smaller = mono.clone();
                smaller.0[i] -= 1;
                if in_family(f, m, &smaller)? {
                    minimal = false;
                    break;
                }
            }
        }
        if minimal && !in_lower_products(f, m, &mono)? {
            out.push(mono);
        }
    }
    out.sort_by(super::canonical_cmp);
    Ok(out)
}

/// Largest total degree among the template instances at weight `m`; every
/// minimal generator of `I_m` has degree at most this.
pub fn generator_degree_bound(f: &GradedMonomialFamily, m: i64) -> Result<i64> {
    let mut best = 0;
    for t in f.templates() {
        best = best.max(t.eval(m)?.degree());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        // C(bound + n, n)
        assert_eq!(monomials_up_to(2, 6).len(), 28);
        assert_eq!(monomials_up_to(3, 4).len(), 35);
        assert_eq!(divisors(&Exponents(vec![2, 1])).len(), 6);
    }

    #[test]
    fn brute_new_generators_for_triple_point_family() {
        let f = GradedMonomialFamily::nc_triple_point();
        assert_eq!(
            new_generators(&f, 1, 6).unwrap(),
            vec![Exponents(vec![1, 0]), Exponents(vec![0, 1])]
        );
        assert!(new_generators(&f, 2, 6).unwrap().is_empty());
        for m in 3..=8 {
            assert_eq!(
                new_generators(&f, m, 6).unwrap(),
                vec![Exponents(vec![1, 1])]
            );
        }
    }
}
