#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

//! Exact computation with factorizations of elements of SL(2,Z) into positive
//! Dehn twists of a once-punctured torus.
//!
//! A factorization is an ordered tuple of twist classes (primitive integer
//! pairs up to sign). Two factorizations are considered the same fibration
//! when one can be carried to the other by Hurwitz moves and a global
//! conjugation, and this crate provides:
//!
//! - the exact 2×2 integer matrix model ([`sl2`]): twist matrices, the
//!   intersection pairing, recognition of twist matrices, and twist words;
//! - Hurwitz moves, global conjugation, and a deterministic conjugation
//!   normal form ([`factorization`]);
//! - computable invariants ([`invariants`]): the homology quotient of the
//!   total space, the mod-2 image of the factors, and a complete class for
//!   two-factor tuples;
//! - the signed triple attached to three-factor tuples, its mutation moves,
//!   and a terminating reduction to a canonical representative ([`triples`]);
//! - bounded orbit enumeration, certified equivalence search, and
//!   classification of factorization lists ([`search`]).
//!
//! All arithmetic is arbitrary precision (`num-bigint`); nothing here rounds
//! or overflows. The crate is `no_std` (with `alloc`) so the solver core can
//! be embedded; parsing, printing and the CLI live in the companion crate.
//!
//! ```
//! use lefschetz::{Factorization, TwistClass, h1_quotient};
//!
//! let f: Factorization = [(-3, 1), (0, 1), (3, 1), (1, 0)]
//!     .into_iter()
//!     .map(|(p, q)| TwistClass::new(p, q).unwrap())
//!     .collect();
//! assert_eq!(f.product().to_string(), "1,-8;0,1");
//! assert_eq!(h1_quotient(&f).to_string(), "0");
//! ```

extern crate alloc;

pub mod error;
pub mod factorization;
pub mod invariants;
pub mod search;
pub mod sl2;
pub mod triples;
pub mod word;

pub use error::Error;
pub use factorization::Factorization;
pub use invariants::{
    euler_characteristic, h1_quotient, intersection, mod2_subgroup, mod2_subgroup_order,
    pair_class, HomologyQuotient, Mod2Matrix, PairClass, PairInvariant,
};
pub use search::{
    classify, enumerate_factorizations, equivalent, hurwitz_orbit, Certificate, ClassEntry,
    ClassificationReport, Equivalence, Move, Orbit, SearchBounds, Witness,
};
pub use sl2::{cross, GammaElement, SL2Matrix, TwistClass, Vec2};
pub use triples::{
    triple_of, triples_equivalent, Position, Triple, TripleClass, TripleShape, TripleTag,
    TripleVerdict,
};
pub use word::{Gen, Letter, Word};
