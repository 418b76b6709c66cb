//! Cayley digraphs and bipartite Cayley digraphs of odd diameter built on the
//! semidirect product `Z_n^k ⋊ D_k`, together with exact checks of everything
//! that makes them work at desk scale.
//!
//! * [`abelian`]: `Z_n^k` arithmetic and vector indexing.
//! * [`dihedral`]: `D_k` as the permutation group generated by `A` and `B`.
//! * [`semidirect`]: the group product, the generators `a(x)`, `b(x)`, walks.
//! * [`fiber`]: words, fiber matrices, exact determinants, covering.
//! * [`words`]: the explicit covering word for every target.
//! * [`digraph`]: the digraphs themselves, BFS diameter, bipartiteness, export.
//! * [`bounds`]: Moore bounds, orders, thresholds, certificate tables.
//!
//! ```
//! use dihedral_cayley::digraph::{CayleyDigraph, DigraphSpec, DEFAULT_VERTEX_BUDGET};
//!
//! let g = CayleyDigraph::new(DigraphSpec::new(2, 3, false, false)?)?;
//! assert_eq!(g.order(), 48);
//! assert_eq!(g.eccentricity_from_identity(DEFAULT_VERTEX_BUDGET)?, 3);
//! # Ok::<(), dihedral_cayley::Error>(())
//! ```

pub mod abelian;
pub mod bounds;
pub mod cli;
pub mod digraph;
pub mod dihedral;
pub mod error;
pub mod fiber;
pub mod semidirect;
pub mod words;

pub use abelian::{GroupContext, HVector};
pub use digraph::{CayleyDigraph, DigraphSpec, VertexId};
pub use dihedral::{DihedralElement, DihedralGroup, Permutation};
pub use error::{Error, Result};
pub use fiber::{FiberMatrix, Letter, Word};
pub use semidirect::{Gamma, GammaElement};
