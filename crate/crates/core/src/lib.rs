//! Exact computations of pluricanonical sections on normal crossing
//! surfaces: gluing conditions along double curves, graded monomial
//! families and their generation degrees, pole bookkeeping on the A1 cone,
//! and the global checks (elliptic curves, blow-up lattices, branch forms)
//! that sit around them.

pub mod cli;
pub mod conecalc;
pub mod exactalg;
pub mod geomcheck;
pub mod logres;
pub mod monideal;
