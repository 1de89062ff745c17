//! Exact tools for Stanley–Reisner ideals: simplicial complexes, monomial
//! ideal arithmetic, simplicial homology, local cohomology via Takayama's
//! formula, and the combinatorial criteria for Cohen–Macaulay second powers.

pub mod complex;
pub mod criteria;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod reproduce;
pub mod takayama;
pub mod transversal;

pub use complex::{Graph, SimplicialComplex, VertexSet};
pub use error::{Error, Result};
pub use ideal::{Monomial, MonomialIdeal};
