//! Global checks behind the two examples: linear equivalence on an elliptic
//! curve, blow-up intersection numbers, and node, ampleness and vanishing
//! counts on a quotient of a product of curves.

mod elliptic;
mod forms;
mod lattice;

use thiserror::Error;

pub use elliptic::{ECCurve, ECPoint};
pub use forms::{
    forms_coprime, h0_p1, node_count, nodes_on_fiber, product_ample, resultant,
    sigma_node_disjoint, BinaryForm, ProductSurfaceClass, UniPoly, WeightedHyperellipticCurve,
};
pub use lattice::{
    fibred_lattice, four_point_boundary, four_point_lattice, DivisorClass, IntersectionLattice,
    FOUR_POINT_EXCEPTIONALS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("y^2 = x^3 + ({0})x + ({1}) is singular")]
    SingularCurve(String, String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("{0}")]
    Lattice(String),
    #[error("unknown class {0}")]
    UnknownClass(String),
    #[error("pairing {0}.{1} is not known")]
    UnknownPairing(String, String),
    #[error("not a binary form: {0}")]
    NotAForm(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("{0} is not a root of the branch form")]
    NotAFixedPoint(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;

/// The form in the first factor: `x^6 + 2y^6`.
pub const GENUS_TWO_BRANCH: &str = "x^6 + 2*y^6";
/// The form in the second factor: `xy(x^2 + y^2)`.
pub const GENUS_ONE_BRANCH: &str = "x^3*y + x*y^3";
