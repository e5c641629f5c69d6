//! The signed intersection triple of a three-factor tuple and its mutation
//! calculus.
//!
//! Orienting the three classes (γ₁, γ₂, γ₃) gives the triple
//! (x, y, z) = (γ₂·γ₁, γ₃·γ₁, γ₃·γ₂). Re-orienting a class flips two signs
//! at once; Hurwitz moves generate the mutations below together with cyclic
//! rotation. The equivalence class of the triple is therefore invariant
//! under Hurwitz moves and conjugation, and every class contains either a
//! small triple (entry in {−1, 0, 1}) or an essentially unique weakly
//! minimal one, found by a strictly decreasing descent.

use alloc::collections::BTreeSet;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::factorization::Factorization;
use crate::sl2::cross;

/// An integer triple; any value is admissible.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

/// One of the three mutation slots.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Position {
    First,
    Second,
    Third,
}

impl Position {
    pub const ALL: [Position; 3] = [Position::First, Position::Second, Position::Third];
}

/// Where a triple sits in the small / minimal / weakly-minimal trichotomy,
/// or `Unreduced` when a shrinking mutation still exists.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TripleShape {
    Small,
    Minimal,
    WeaklyMinimalOnly,
    Unreduced,
}

/// Tag of a fully reduced triple class.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TripleTag {
    Small,
    Minimal,
    WeaklyMinimal,
}

/// Verdict of [`triples_equivalent`].
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TripleVerdict {
    Equivalent,
    Inequivalent,
    Undetermined,
}

impl Triple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Self {
        Triple {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.x, &self.y, &self.z)
    }

    /// The mutation at the given slot: replaces that entry e by
    /// (product of the other two) − e and swaps the other two. Involutive.
    pub fn mutate(&self, position: Position) -> Triple {
        let Triple { x, y, z } = self;
        match position {
            Position::First => Triple {
                x: y * z - x,
                y: z.clone(),
                z: y.clone(),
            },
            Position::Second => Triple {
                x: z.clone(),
                y: x * z - y,
                z: x.clone(),
            },
            Position::Third => Triple {
                x: y.clone(),
                y: x.clone(),
                z: x * y - z,
            },
        }
    }

    /// The four even sign flips of the triple (orientation changes of one
    /// class flip two signs at once). Returned as a set, which collapses
    /// when entries vanish.
    pub fn sign_variants(&self) -> BTreeSet<Triple> {
        let Triple { x, y, z } = self;
        [
            self.clone(),
            Triple::new(-x, -y, z.clone()),
            Triple::new(-x, y.clone(), -z),
            Triple::new(x.clone(), -y, -z),
        ]
        .into_iter()
        .collect()
    }

    fn rotations(&self) -> [Triple; 3] {
        let Triple { x, y, z } = self;
        [
            self.clone(),
            Triple::new(y.clone(), z.clone(), x.clone()),
            Triple::new(z.clone(), x.clone(), y.clone()),
        ]
    }

    fn permutations(&self) -> [Triple; 6] {
        let Triple { x, y, z } = self;
        [
            self.clone(),
            Triple::new(x.clone(), z.clone(), y.clone()),
            Triple::new(y.clone(), x.clone(), z.clone()),
            Triple::new(y.clone(), z.clone(), x.clone()),
            Triple::new(z.clone(), x.clone(), y.clone()),
            Triple::new(z.clone(), y.clone(), x.clone()),
        ]
    }

    /// Whether some entry lies in {-1, 0, 1}. Mutation cannot shrink such a
    /// triple any further, so these bypass the descent in [`Triple::reduce`].
    pub fn is_small(&self) -> bool {
        let one = BigInt::one();
        self.x.abs() <= one || self.y.abs() <= one || self.z.abs() <= one
    }

    fn abs_sum(&self) -> BigInt {
        self.x.abs() + self.y.abs() + self.z.abs()
    }

    /// Compares |mutated entry| against |entry| at each slot.
    fn growth(&self) -> [Ordering; 3] {
        let m1 = (&self.y * &self.z - &self.x).abs().cmp(&self.x.abs());
        let m2 = (&self.x * &self.z - &self.y).abs().cmp(&self.y.abs());
        let m3 = (&self.x * &self.y - &self.z).abs().cmp(&self.z.abs());
        [m1, m2, m3]
    }

    /// Alternate minimality test for non-small triples: xyz < 0, or the
    /// largest absolute entry is less than half the product of the other
    /// two. Always agrees with the strict-growth inequalities.
    fn minimal_by_size(&self) -> bool {
        debug_assert!(!self.is_small());
        if (&self.x * &self.y * &self.z).is_negative() {
            return true;
        }
        let mut abs = [self.x.abs(), self.y.abs(), self.z.abs()];
        abs.sort();
        let [lo, mid, hi] = abs;
        BigInt::from(2) * hi < lo * mid
    }

    /// Trichotomy of the triple, with `Unreduced` for triples a mutation
    /// still shrinks.
    pub fn classify(&self) -> TripleShape {
        if self.is_small() {
            return TripleShape::Small;
        }
        let growth = self.growth();
        let shape = if growth.iter().all(|&g| g == Ordering::Greater) {
            TripleShape::Minimal
        } else if growth.iter().all(|&g| g != Ordering::Less) {
            TripleShape::WeaklyMinimalOnly
        } else {
            TripleShape::Unreduced
        };
        debug_assert_eq!(shape == TripleShape::Minimal, self.minimal_by_size());
        shape
    }

    /// Slot of a maximal-absolute-value entry, lowest index on ties.
    fn max_position(&self) -> Position {
        let abs = [self.x.abs(), self.y.abs(), self.z.abs()];
        let max = abs.iter().max().cloned().expect("three entries");
        match abs.iter().position(|a| *a == max).expect("max exists") {
            0 => Position::First,
            1 => Position::Second,
            _ => Position::Third,
        }
    }

    fn entry_abs(&self, position: Position) -> BigInt {
        match position {
            Position::First => self.x.abs(),
            Position::Second => self.y.abs(),
            Position::Third => self.z.abs(),
        }
    }

    /// Reduces to a canonical class representative.
    ///
    /// Descent: while a shrinking mutation exists, mutate at the maximal
    /// entry (which is then the unique shrinking slot, so the maximal
    /// absolute value strictly decreases and the loop terminates). The
    /// landing shape decides the tag; minimal representatives are unique up
    /// to even sign flips and rotations, weakly minimal ones up to even
    /// sign flips and all permutations, and the canonical variant is the
    /// lexicographic minimum over those. Small triples get a best-effort
    /// label: greedily shrink the absolute sum, then take the same
    /// 24-variant minimum.
    pub fn reduce(&self) -> TripleClass {
        let mut t = self.clone();
        while t.classify() == TripleShape::Unreduced {
            let pos = t.max_position();
            let next = t.mutate(pos);
            debug_assert!(next.entry_abs(pos) < t.entry_abs(pos));
            t = next;
        }
        match t.classify() {
            TripleShape::Small => {
                'shrink: loop {
                    for pos in Position::ALL {
                        let next = t.mutate(pos);
                        if next.abs_sum() < t.abs_sum() {
                            t = next;
                            continue 'shrink;
                        }
                    }
                    break;
                }
                TripleClass {
                    tag: TripleTag::Small,
                    representative: canonical_over(t.sign_variants().iter().flat_map(|v| v.permutations())),
                }
            }
            TripleShape::Minimal => TripleClass {
                tag: TripleTag::Minimal,
                representative: canonical_over(t.sign_variants().iter().flat_map(|v| v.rotations())),
            },
            TripleShape::WeaklyMinimalOnly => TripleClass {
                tag: TripleTag::WeaklyMinimal,
                representative: canonical_over(t.sign_variants().iter().flat_map(|v| v.permutations())),
            },
            TripleShape::Unreduced => unreachable!("descent ended"),
        }
    }
}

fn canonical_over(variants: impl IntoIterator<Item = Triple>) -> Triple {
    variants
        .into_iter()
        .min()
        .expect("variant sets are nonempty")
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// A reduced triple class: the trichotomy tag and a canonical (for small
/// tags: heuristic) representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TripleClass {
    tag: TripleTag,
    representative: Triple,
}

impl TripleClass {
    pub fn tag(&self) -> TripleTag {
        self.tag
    }

    pub fn representative(&self) -> &Triple {
        &self.representative
    }
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = self.representative.entries();
        let tag = match self.tag {
            TripleTag::Small => "small",
            TripleTag::Minimal => "minimal",
            TripleTag::WeaklyMinimal => "weakly-minimal",
        };
        write!(f, "{tag}({x},{y},{z})")
    }
}

/// The intersection triple (γ₂·γ₁, γ₃·γ₁, γ₃·γ₂) of a three-factor tuple,
/// evaluated on the stored canonical class signs (any other orientation
/// choice gives an even sign flip of the same class).
pub fn triple_of(f: &Factorization) -> Result<Triple, Error> {
    if f.len() != 3 {
        return Err(Error::WrongLength {
            expected: 3,
            found: f.len(),
        });
    }
    let g1 = f.factors()[0].class();
    let g2 = f.factors()[1].class();
    let g3 = f.factors()[2].class();
    Ok(Triple {
        x: cross(&g2, &g1),
        y: cross(&g3, &g1),
        z: cross(&g3, &g2),
    })
}

/// Decides equivalence of two triples through their reductions. The tags
/// are mutually exclusive across a class, so differing tags or differing
/// minimal/weakly-minimal representatives prove inequivalence; equal small
/// representatives prove equivalence but unequal ones are inconclusive.
pub fn triples_equivalent(t1: &Triple, t2: &Triple) -> TripleVerdict {
    let c1 = t1.reduce();
    let c2 = t2.reduce();
    if c1.tag() != c2.tag() {
        return TripleVerdict::Inequivalent;
    }
    if c1.representative() == c2.representative() {
        return TripleVerdict::Equivalent;
    }
    match c1.tag() {
        TripleTag::Small => TripleVerdict::Undetermined,
        _ => TripleVerdict::Inequivalent,
    }
}
