//! Finite topological spaces paired with ideals of subsets.
//!
//! The crate models spaces (X, tau, I) on ground sets of up to 16 labelled
//! points, with subsets as bitmasks. On top of the kernel types it provides
//! the local and sharp set functions and the refined topologies they induce,
//! ideal quotients and annihilators, classification predicates, continuity
//! notions for maps between such spaces, a registry of machine-checked
//! theorems searched exhaustively at small ground sizes, and a line-oriented
//! text format for describing spaces.

pub mod classify;
pub mod continuity;
pub mod enumerate;
pub mod family;
pub mod format;
pub mod ground;
pub mod ideal;
pub mod operators;
pub mod reference;
pub mod space;
pub mod theorems;
pub mod topology;

pub use family::SetFamily;
pub use ground::{GroundSet, Subset};
pub use ideal::Ideal;
pub use space::IdealSpace;
pub use topology::Topology;
