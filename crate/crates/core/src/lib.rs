//! Exact counting and explicit enumeration of vertex-transitive tournaments
//! of prime order.
//!
//! A vertex-transitive tournament on a prime number `p` of vertices is, up to
//! isomorphism, a Cayley tournament on the cyclic group `Z_p`. Two such
//! tournaments are isomorphic exactly when their connection sets differ by a
//! unit multiplier, so the isomorphism classes are the orbits of the unit
//! group acting on connection sets.
//!
//! The crate provides three independent routes to the class count:
//!
//! - [`counting::class_count`]: a recursion over the odd divisors of `p - 1`
//!   with arbitrary-precision arithmetic,
//! - [`enumeration::equivalence_classes`]: explicit orbit enumeration over all
//!   `2^((p-1)/2)` connection sets,
//! - [`enumeration::burnside_count`]: orbit counting by averaging fixed points.
//!
//! Supporting modules cover abelian group arithmetic ([`groups`]), digraph
//! constructors and serialization ([`graphs`]), and permutation machinery with
//! isomorphism search and Cayley recognition ([`perm`]).

pub mod counting;
pub mod enumeration;
mod error;
pub mod fixtures;
pub mod graphs;
pub mod groups;
pub mod perm;

pub use error::{Error, Result};
