//! Representations of the universal cover of the n-Kronecker quiver (the
//! n-regular tree with bipartite orientation) and their push-downs.

pub mod named;
mod rep;
mod tree;
mod verify;

pub use named::{build_ball_rep, build_mu_bristle_rep, build_tau_bristle_rep, CoverConstruction, NamedCover};
pub use rep::{cover_hom_dim, cover_max_bristled, BlockIndex, CoverRep, CoverSub, PushDown};
pub use tree::{Direction, TreeVertex, VertexClass};
pub use verify::{bristle_in, extract_mij, verify_cover_equalities, CoverCheck, CoverReport, LocatedBristle, Mij};
