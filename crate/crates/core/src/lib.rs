//! Exact computation in the inverse monoids of right-ideal automorphisms of
//! a free monoid, the Thompson-Higman groups `G_{k,1}` and `F_{k,1}`, and
//! their suffix expansions.
//!
//! An element of the monoid is a *table*: a finite bijection between two
//! maximal prefix codes over a `k`-letter ordered alphabet, determining an
//! isomorphism between the essential right ideals the codes generate. The
//! table is the element; an element and its maximal essential extension are
//! different elements of the monoid, and collapsing that distinction (the
//! map `max`) is exactly the maximum group homomorphism onto `G_{k,1}`.
//! Dictionary-order preserving tables form a submonoid mapping onto
//! `F_{k,1}` the same way.
//!
//! Conventions used throughout:
//!
//! * maps act on the left, so composition is right-to-left: `f.compose(&g)`
//!   applies `g` first, and words over a generating set evaluate with their
//!   last letter applied first;
//! * the empty word renders as `^`;
//! * all arithmetic is exact; every operation is a pure function over
//!   immutable values, safe to share across threads.
//!
//! The crate exposes, besides the core algebra: Green relations and their
//! constructive witnesses ([`green`]), finite generating sets with an
//! explicit factorization algorithm ([`generation`]), the suffix expansion
//! with the finite-to-one homomorphism `rho` back onto the monoid
//! ([`expansion`]), word problems and finite Rees quotients ([`decision`]),
//! and the surrounding monoid of general right-ideal homomorphisms
//! ([`rihom`]).

pub mod decision;
mod error;
pub mod expansion;
pub mod generation;
pub mod green;
pub mod prefix_codes;
pub mod riaut;
pub mod rihom;
pub mod sample;
pub mod text;
pub mod words;

pub use error::Error;
pub use expansion::{ExpansionElem, SemidirectElem};
pub use generation::{GeneratingSet, Mode};
pub use prefix_codes::{MaximalPrefixCode, PrefixTreeStats};
pub use riaut::{GroupElem, RiAutElem};
pub use rihom::{RiHomElem, RiIsoElem};
pub use words::{Alphabet, Letter, Word};
