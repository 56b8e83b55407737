//! Exact-arithmetic engine for the deformation-theoretic case analysis of
//! hyperbolic triangle groups mapping into simple algebraic groups.
//!
//! The crate computes, over the integers and exact rationals only:
//!
//! * combinatorial root-system data (positive roots, exponents, Cartan
//!   matrices and their determinants) for every irreducible Dynkin type;
//! * Weil's parabolic-cohomology dimension formulas specialized to triangle
//!   groups, and the dimension of H^1 at the principal homomorphism;
//! * `delta_m`, the dimension of the subvariety of elements of order
//!   dividing `m` in the adjoint group, by exhaustive torus-torsion
//!   enumeration (characteristic zero);
//! * the reducible / rigid / nonrigid trichotomy for hyperbolic triples;
//! * the ladder criteria deciding saturation with finite quotients of a
//!   given type, together with regeneration of the reference exception
//!   tables;
//! * a desk-scale count of epimorphisms onto PSL2(q) by exhaustive pair
//!   enumeration.
//!
//! All counts are exact; there is no floating point anywhere in the crate.

pub mod dynkin;
pub mod error;
pub mod ladder;
pub mod psl2;
pub mod rational;
pub mod rigidity;
pub mod root_system;
pub mod tables;
pub mod torus;
pub mod triple;
pub mod weil;

pub use dynkin::{DynkinType, Family};
pub use error::Error;
pub use ladder::{LadderChain, LrResult, Reason, SaturationOutcome, SaturationVerdict};
pub use rational::Rational;
pub use rigidity::{TripleClassification, TripleKind};
pub use root_system::RootSystem;
pub use tables::{TableId, TableRow, VerifyReport};
pub use torus::{DeltaResult, TorusPoint, DEFAULT_ENUM_BUDGET};
pub use triple::HyperbolicTriple;
pub use weil::CohomologyReport;

/// Outcome type used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
