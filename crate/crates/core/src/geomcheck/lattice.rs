//! Intersection pairings on a surface and their behaviour under blow-ups
//! of points.

use std::collections::BTreeMap;

use super::{GeomError, Result};

/// Coordinates in the lattice basis.
pub type DivisorClass = Vec<i64>;

/// A labeled basis with a symmetric pairing, some of whose entries may be
/// unknown (for instance `K^2`), named curve classes and the canonical class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    labels: Vec<String>,
    gram: Vec<Vec<Option<i64>>>,
    curves: BTreeMap<String, DivisorClass>,
    canonical: DivisorClass,
}

impl IntersectionLattice {
    /// `gram` must be square and symmetric; `canonical` names a basis label.
    pub fn new(
        labels: &[&str],
        gram: Vec<Vec<Option<i64>>>,
        canonical: DivisorClass,
    ) -> Result<Self> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) || canonical.len() != n {
            return Err(GeomError::Lattice(format!("expected {n}x{n} pairing")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(GeomError::Lattice(format!(
                        "pairing not symmetric at {},{}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let mut curves = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            let mut v = vec![0; n];
            v[i] = 1;
            curves.insert(l.to_string(), v);
        }
        Ok(IntersectionLattice {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            gram,
            curves,
            canonical,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn class(&self, name: &str) -> Result<DivisorClass> {
        self.curves
            .get(name)
            .cloned()
            .ok_or_else(|| GeomError::UnknownClass(name.to_string()))
    }

    /// Registers (or replaces) a named class.
    pub fn set_class(&mut self, name: &str, class: DivisorClass) -> Result<()> {
        if class.len() != self.rank() {
            return Err(GeomError::Lattice(format!("class {name} has wrong length")));
        }
        self.curves.insert(name.to_string(), class);
        Ok(())
    }

    pub fn pairing(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        let mut total = 0;
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| **c != 0) {
                let g = self.gram[i][j].ok_or_else(|| {
                    GeomError::UnknownPairing(self.labels[i].clone(), self.labels[j].clone())
                })?;
                total += ai * bj * g;
            }
        }
        Ok(total)
    }

    pub fn pairing_named(&self, a: &str, b: &str) -> Result<i64> {
        self.pairing(&self.class(a)?, &self.class(b)?)
    }

    /// Blows up a point lying on the named curves with the given
    /// multiplicities. Adds `E` with `E^2 = -1` orthogonal to the old basis,
    /// replaces each such curve by its strict transform `D - mult·E`, and
    /// `K` by `K + E`. Curves not listed keep their total transform.
    pub fn blowup(&self, exceptional: &str, incidences: &BTreeMap<String, i64>) -> Result<Self> {
        if self.curves.contains_key(exceptional) {
            return Err(GeomError::Lattice(format!("{exceptional} already named")));
        }
        for (name, &mult) in incidences {
            if mult < 0 {
                return Err(GeomError::Lattice(format!(
                    "negative multiplicity on {name}"
                )));
            }
            self.class(name)?;
        }
        let n = self.rank();
        let mut gram = self.gram.clone();
        for row in gram.iter_mut() {
            row.push(Some(0));
        }
        let mut last = vec![Some(0); n];
        last.push(Some(-1));
        gram.push(last);
        let mut labels = self.labels.clone();
        labels.push(exceptional.to_string());
        let mut curves: BTreeMap<String, DivisorClass> = self
            .curves
            .iter()
            .map(|(k, v)| {
                let mut v = v.clone();
                v.push(-incidences.get(k).copied().unwrap_or(0));
                (k.clone(), v)
            })
            .collect();
        let mut e = vec![0; n];
        e.push(1);
        curves.insert(exceptional.to_string(), e);
        let mut canonical = self.canonical.clone();
        canonical.push(1);
        Ok(IntersectionLattice {
            labels,
            gram,
            curves,
            canonical,
        })
    }

    /// `(K + Σ boundary) · target`.
    pub fn nc_pullback_degree(&self, boundary: &[&str], target: &str) -> Result<i64> {
        let mut d = self.canonical.clone();
        for b in boundary {
            for (x, y) in d.iter_mut().zip(self.class(b)?) {
                *x += y;
            }
        }
        self.pairing(&d, &self.class(target)?)
    }
}

/// Base lattice of a fibred surface with two fibers `F_p`, `F_q`:
/// `K·F = k_dot_f`, `F^2 = 0`, `F_p·F_q = 0`, `K^2` unknown.
pub fn fibred_lattice(k_dot_f: i64) -> IntersectionLattice {
    IntersectionLattice::new(
        &["K", "F_p", "F_q"],
        vec![
            vec![None, Some(k_dot_f), Some(k_dot_f)],
            vec![Some(k_dot_f), Some(0), Some(0)],
            vec![Some(k_dot_f), Some(0), Some(0)],
        ],
        vec![1, 0, 0],
    )
    .expect("well-formed")
}

/// Exceptional curves in the four-point configuration, in blow-up order.
pub const FOUR_POINT_EXCEPTIONALS: [&str; 4] = ["E_q1", "E_q2", "E_p1", "E_p2"];

/// Blows up `q1, q2 ∈ F_p` and `p1, p2 ∈ F_q` on [`fibred_lattice`] with
/// genus-2 fibers (`K·F = 2`).
pub fn four_point_lattice() -> IntersectionLattice {
    let mut l = fibred_lattice(2);
    for (e, fiber) in FOUR_POINT_EXCEPTIONALS
        .iter()
        .zip(["F_p", "F_p", "F_q", "F_q"])
    {
        let inc = BTreeMap::from([(fiber.to_string(), 1)]);
        l = l.blowup(e, &inc).expect("listed curves exist");
    }
    l
}

/// Boundary of the four-point configuration: both fiber transforms and all
/// four exceptional curves.
pub fn four_point_boundary() -> Vec<&'static str> {
    let mut b = vec!["F_p", "F_q"];
    b.extend(FOUR_POINT_EXCEPTIONALS);
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_transform_meets_exceptional_once() {
        let l = fibred_lattice(2);
        let b = l
            .blowup("E", &BTreeMap::from([("F_p".to_string(), 1)]))
            .unwrap();
        assert_eq!(b.pairing_named("F_p", "E").unwrap(), 1);
        assert_eq!(b.pairing_named("F_p", "F_p").unwrap(), -1);
        assert_eq!(b.pairing_named("E", "E").unwrap(), -1);
        assert_eq!(
            b.pairing(b.canonical(), &b.class("E").unwrap()).unwrap(),
            -1
        );
    }

    #[test]
    fn blowup_off_the_listed_curves() {
        let l = fibred_lattice(2);
        let b = l.blowup("E", &BTreeMap::new()).unwrap();
        for x in ["F_p", "F_q"] {
            for y in ["F_p", "F_q"] {
                assert_eq!(
                    b.pairing_named(x, y).unwrap(),
                    l.pairing_named(x, y).unwrap()
                );
            }
        }
        assert_eq!(b.pairing_named("E", "E").unwrap(), -1);
    }

    #[test]
    fn unknown_entries_are_reported() {
        let l = fibred_lattice(2);
        assert!(matches!(
            l.pairing_named("K", "K"),
            Err(GeomError::UnknownPairing(..))
        ));
        assert!(matches!(l.class("G"), Err(GeomError::UnknownClass(_))));
    }

    #[test]
    fn four_point_degrees() {
        let l = four_point_lattice();
        let boundary = four_point_boundary();
        for e in FOUR_POINT_EXCEPTIONALS {
            assert_eq!(l.nc_pullback_degree(&boundary, e).unwrap(), -1);
        }
        assert_eq!(l.nc_pullback_degree(&boundary, "F_p").unwrap(), 4);
        assert_eq!(l.nc_pullback_degree(&boundary, "F_q").unwrap(), 4);
        let base = fibred_lattice(2);
        assert_eq!(base.nc_pullback_degree(&["F_p", "F_q"], "F_p").unwrap(), 2);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let r = IntersectionLattice::new(
            &["A", "B"],
            vec![vec![Some(0), Some(1)], vec![Some(2), Some(0)]],
            vec![1, 0],
        );
        assert!(r.is_err());
    }
}
