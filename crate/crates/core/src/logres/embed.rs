//! Placing the three charts of the triple point as coordinate 2-planes in
//! `C^4`, compatibly with the gluing along the boundary axes.

use std::collections::BTreeSet;
use std::fmt;

use super::{LogError, Result};

/// One coordinate of `C^4` as a signed chart variable (index 0 or 1) or 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Zero,
    Pos(usize),
    Neg(usize),
}

impl Slot {
    /// Coefficient of `t` in this coordinate at the chart point with
    /// variable `var` set to `t` and the other variable 0.
    fn along(&self, var: usize) -> i8 {
        match *self {
            Slot::Pos(i) if i == var => 1,
            Slot::Neg(i) if i == var => -1,
            _ => 0,
        }
    }
}

/// A linear map `C^2 -> C^4` given coordinatewise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlaneEmbedding(pub [Slot; 4]);

impl PlaneEmbedding {
    /// Coordinates that vanish identically on the image.
    pub fn zero_slots(&self) -> Vec<usize> {
        (0..4).filter(|&i| self.0[i] == Slot::Zero).collect()
    }

    /// Image is the coordinate plane cut out by two coordinates, and the map
    /// onto it is an isomorphism.
    pub fn is_coordinate_plane(&self) -> bool {
        let used: Vec<usize> = self
            .0
            .iter()
            .filter_map(|s| match *s {
                Slot::Pos(i) | Slot::Neg(i) => Some(i),
                Slot::Zero => None,
            })
            .collect();
        used.len() == 2 && used.contains(&0) && used.contains(&1)
    }

    fn image_of_axis(&self, var: usize) -> [i8; 4] {
        [
            self.0[0].along(var),
            self.0[1].along(var),
            self.0[2].along(var),
            self.0[3].along(var),
        ]
    }
}

impl fmt::Display for PlaneEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|s| match *s {
                Slot::Zero => "0".to_string(),
                Slot::Pos(i) => format!("v{i}"),
                Slot::Neg(i) => format!("-v{i}"),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Embeddings of the crossing pair `(x, y)` and the half-planes
/// `(u1, v1)`, `(u2, v2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddingAssignment {
    pub nc: PlaneEmbedding,
    pub half_u: PlaneEmbedding,
    pub half_v: PlaneEmbedding,
}

impl EmbeddingAssignment {
    /// `(x,y) ↦ (0,x,y,0)`, `(u1,v1) ↦ (v1,u1,0,0)`, `(u2,v2) ↦ (0,0,v2,u2)`.
    pub fn printed() -> Self {
        use Slot::*;
        EmbeddingAssignment {
            nc: PlaneEmbedding([Zero, Pos(0), Pos(1), Zero]),
            half_u: PlaneEmbedding([Pos(1), Pos(0), Zero, Zero]),
            half_v: PlaneEmbedding([Zero, Zero, Pos(1), Pos(0)]),
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "(x,y)->{} (u1,v1)->{} (u2,v2)->{}",
            fmt_named(&self.nc, ["x", "y"]),
            fmt_named(&self.half_u, ["u1", "v1"]),
            fmt_named(&self.half_v, ["u2", "v2"])
        )
    }
}

fn fmt_named(p: &PlaneEmbedding, names: [&str; 2]) -> String {
    let parts: Vec<String> =
        p.0.iter()
            .map(|s| match *s {
                Slot::Zero => "0".to_string(),
                Slot::Pos(i) => names[i].to_string(),
                Slot::Neg(i) => format!("-{}", names[i]),
            })
            .collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbedVerdict {
    pub coordinate_planes: bool,
    pub distinct_planes: bool,
    pub gluing_compatible: bool,
}

impl EmbedVerdict {
    pub fn passes(&self) -> bool {
        self.coordinate_planes && self.distinct_planes && self.gluing_compatible
    }
}

/// Checks the three conditions separately.
///
/// Gluing compatibility: `(0, t)` in the pair and `(0, t)` in the first
/// half-plane have the same image, and likewise `(t, 0)` in the pair and
/// `(t, 0)` in the second half-plane.
pub fn embed_verdict(a: &EmbeddingAssignment) -> EmbedVerdict {
    let planes = [a.nc, a.half_u, a.half_v];
    let coordinate_planes = planes.iter().all(PlaneEmbedding::is_coordinate_plane);
    let zero_sets: BTreeSet<Vec<usize>> = planes.iter().map(PlaneEmbedding::zero_slots).collect();
    let distinct_planes = zero_sets.len() == 3;
    // x is variable 0, y is 1; u_i is 0, v_i is 1.
    let gluing_compatible = a.nc.image_of_axis(1) == a.half_u.image_of_axis(1)
        && a.nc.image_of_axis(0) == a.half_v.image_of_axis(0);
    EmbedVerdict {
        coordinate_planes,
        distinct_planes,
        gluing_compatible,
    }
}

pub fn embed_check(a: &EmbeddingAssignment) -> bool {
    embed_verdict(a).passes()
}

/// All six coordinate 2-planes of `C^4`, by their pair of vanishing
/// coordinates (0-based).
pub const COORDINATE_PLANES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// `(t1=t2=0)`, `(t2=t3=0)`, `(t3=t4=0)`.
pub const LISTED_COMPONENTS: [[usize; 2]; 3] = [[0, 1], [1, 2], [2, 3]];

fn placements(candidates: &[[usize; 2]]) -> Vec<PlaneEmbedding> {
    let mut out = Vec::new();
    for zeros in candidates {
        let free: Vec<usize> = (0..4).filter(|i| !zeros.contains(i)).collect();
        if free.len() != 2 {
            continue;
        }
        for order in [[0, 1], [1, 0]] {
            for signs in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
                let mut slots = [Slot::Zero; 4];
                for k in 0..2 {
                    slots[free[k]] = if signs[k] > 0 {
                        Slot::Pos(order[k])
                    } else {
                        Slot::Neg(order[k])
                    };
                }
                out.push(PlaneEmbedding(slots));
            }
        }
    }
    out
}

/// First assignment (in a fixed enumeration order) whose three planes are
/// drawn from `candidates` and which passes [`embed_check`].
pub fn embed_search(candidates: &[[usize; 2]]) -> Result<EmbeddingAssignment> {
    let options = placements(candidates);
    for nc in &options {
        for half_u in &options {
            for half_v in &options {
                let a = EmbeddingAssignment {
                    nc: *nc,
                    half_u: *half_u,
                    half_v: *half_v,
                };
                if embed_check(&a) {
                    return Ok(a);
                }
            }
        }
    }
    Err(LogError::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Slot::*;

    #[test]
    fn printed_assignment_misses_the_gluing() {
        let v = embed_verdict(&EmbeddingAssignment::printed());
        assert!(v.coordinate_planes);
        assert!(v.distinct_planes);
        // (0,t) in the pair goes to (0,0,t,0), (0,t) in C21 to (t,0,0,0).
        assert!(!v.gluing_compatible);
        let a = EmbeddingAssignment::printed();
        assert_eq!(a.nc.zero_slots(), vec![0, 3]);
        assert_eq!(a.half_u.zero_slots(), vec![2, 3]);
        assert_eq!(a.half_v.zero_slots(), vec![0, 1]);
    }

    #[test]
    fn sign_flip_breaks_gluing() {
        let good = embed_search(&COORDINATE_PLANES).unwrap();
        assert!(embed_check(&good));
        let mut bad = good;
        bad.half_u.0 = bad.half_u.0.map(|s| match s {
            Pos(1) => Neg(1),
            Neg(1) => Pos(1),
            other => other,
        });
        assert!(!embed_check(&bad));
    }

    #[test]
    fn same_plane_three_times_fails() {
        let p = PlaneEmbedding([Pos(0), Pos(1), Zero, Zero]);
        let a = EmbeddingAssignment {
            nc: p,
            half_u: p,
            half_v: p,
        };
        let v = embed_verdict(&a);
        assert!(!v.distinct_planes);
        assert!(!embed_check(&a));
    }

    #[test]
    fn degenerate_maps_are_not_coordinate_planes() {
        let p = PlaneEmbedding([Pos(0), Pos(0), Zero, Zero]);
        assert!(!p.is_coordinate_plane());
        let q = PlaneEmbedding([Pos(0), Zero, Zero, Zero]);
        assert!(!q.is_coordinate_plane());
    }

    #[test]
    fn search_results() {
        let a = embed_search(&COORDINATE_PLANES).unwrap();
        assert!(embed_check(&a));
        let listed = embed_search(&LISTED_COMPONENTS).unwrap();
        assert!(embed_check(&listed));
        // The pair meets both half-planes in a line, so it must be the middle
        // component.
        assert_eq!(listed.nc.zero_slots(), vec![1, 2]);
        assert_eq!(embed_search(&[]), Err(LogError::NotFound));
    }
}
