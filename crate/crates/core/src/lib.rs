//! Combinatorics of Schubert varieties in the Grassmannian `G(r, n)` and of
//! their torus GIT quotients with respect to `L(n ω_r)`.
//!
//! Everything here is pure and allocation-only: Schubert varieties are indexed
//! by strictly increasing tuples of `I(r, n)`, the Bruhat order is the
//! componentwise order, and every geometric statement used by the crate is
//! reduced to a finite check on tuples.
//!
//! The modules build on each other:
//!
//! - [`grassmannian`]: contexts, column tuples, partition shapes, run
//!   encodings and interval enumeration.
//! - [`words`]: canonical reduced words, one-line permutations and the
//!   action of simple reflections on `r`-subsets.
//! - [`semistable`]: the minimal semistable Schubert variety and a
//!   standard-monomial witness search.
//! - [`singular`]: stabilizer descents and singular-locus components, with an
//!   orbit-based oracle.
//! - [`smoothness`]: the two smoothness criteria and the combined verdict.

#![no_std]

extern crate alloc;

mod error;
pub mod grassmannian;
pub mod semistable;
pub mod singular;
pub mod smoothness;
pub mod words;

pub use error::Error;
pub use grassmannian::{
    bruhat_leq, enumerate_interval, from_partition, run_length, to_partition, ColumnTuple,
    Grassmannian, Interval, PartitionShape, RunEncoding,
};
pub use semistable::{
    is_semistable_nonempty, minimal_semistable, semistable_witness, SemistableWitness,
};
pub use singular::{
    singular_components, singular_components_oracle, singular_components_via_runs,
    smooth_fixed_points_oracle, stabilizer_descents, SingularLocusReport, StabilizerSet,
};
pub use smoothness::{
    analyze, criterion_components, criterion_runs, Criterion, SmoothnessReport, Verdict,
};
pub use words::{
    canonical_reduced_word, parabolic_orbit, reflect_subset, tuple_to_min_coset_perm,
    word_to_permutation, Permutation, ReducedWord,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
