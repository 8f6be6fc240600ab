//! Exact computations with multisets over vector spaces.
//!
//! A *multi vector space* is a multiset drawn from `F^m` whose count
//! function is compatible with the vector space operations: counts can
//! only grow under addition (`count(x+y) >= min(count(x), count(y))`)
//! and scaling. Such a multiset is determined by a finite chain of
//! strictly nested subspaces with strictly decreasing counts, and that
//! chain is the representation everything here computes with.
//!
//! The crate provides:
//!
//! * exact scalars over the rationals and prime fields ([`scalar`]),
//! * canonical linear algebra: RREF, subspace lattice operations,
//!   kernels, images and preimages ([`linalg`], [`subspace`]),
//! * finite multisets over small prime-field universes, with the
//!   definitional multiset calculus ([`mset`]),
//! * the level-chain representation and its operations ([`chain`]),
//! * multi linear independence, multi bases and index invariants
//!   ([`independence`]),
//! * multi dimension, common multi bases, and the behaviour of spaces
//!   under linear maps ([`dimension`]),
//! * a brute-force oracle that recomputes everything definitionally on
//!   small finite universes ([`oracle`]),
//! * seeded random generators for property tests ([`sample`]).

pub mod error;
pub mod scalar;
pub mod linalg;
pub mod subspace;
pub mod mset;
pub mod chain;
pub mod independence;
pub mod dimension;
pub mod oracle;
pub mod sample;

pub use error::{Defect, Error, Violation};
pub use scalar::{Field, Scalar};
pub use linalg::{LinearMap, Matrix, Vector};
pub use subspace::{coefficient_space, Subspace};
pub use mset::{FiniteMSet, Universe};
pub use chain::MVSpace;
pub use independence::{
    basis_index, extend_step, find_mbasis, find_mbasis_seeded, is_mbasis,
    is_multi_linearly_independent, mbasis_by_index_test, multi_index, IndependenceWitness, MBasis,
    MultiBasis, MultiIndependence, MultiIndex,
};
pub use dimension::{
    basis_count_sum, common_mbasis, im_restrict, ker_restrict, map_image, mdim,
    modular_dimension_check, rank_nullity_check, restrict, theta_dominance, RestrictedMVSpace,
};
