//! Words in the two generator twists a, b and their homology evaluation.
//!
//! These are used to express a factorization as a relation in the mapping
//! class group: each factor becomes a conjugate block `w g w⁻¹` with
//! g ∈ {a, b}.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::sl2::{SL2Matrix, TwistClass, Vec2};

/// One of the two generator twists.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    /// The twist along (1, 0); acts by [[1,1],[0,1]].
    A,
    /// The twist along (0, 1); acts by [[1,0],[-1,1]].
    B,
}

impl Gen {
    pub fn class(self) -> Vec2 {
        match self {
            Gen::A => (BigInt::one(), BigInt::zero()),
            Gen::B => (BigInt::zero(), BigInt::one()),
        }
    }

    pub fn twist(self) -> TwistClass {
        let (p, q) = self.class();
        TwistClass::new(p, q).expect("generator classes are primitive")
    }

    fn power(self, k: &BigInt) -> SL2Matrix {
        match self {
            Gen::A => SL2Matrix::new_unchecked(BigInt::one(), k.clone(), BigInt::zero(), BigInt::one()),
            Gen::B => SL2Matrix::new_unchecked(BigInt::one(), BigInt::zero(), -k, BigInt::one()),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::A => write!(f, "a"),
            Gen::B => write!(f, "b"),
        }
    }
}

/// A generator with an integer exponent, e.g. `a^-3`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: Gen,
    pub exponent: BigInt,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_one() {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}^{}", self.gen, self.exponent)
        }
    }
}

/// A product of letters, leftmost applied first in display order; the
/// evaluation below multiplies matrices left to right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter; exponent zero is a no-op.
    pub fn push(&mut self, gen: Gen, exponent: impl Into<BigInt>) {
        let exponent = exponent.into();
        if !exponent.is_zero() {
            self.letters.push(Letter { gen, exponent });
        }
    }

    /// Chainable [`push`](Self::push).
    pub fn then_letter(mut self, gen: Gen, exponent: impl Into<BigInt>) -> Self {
        self.push(gen, exponent);
        self
    }

    /// Chainable concatenation.
    pub fn then(mut self, other: Word) -> Self {
        self.letters.extend(other.letters);
        self
    }

    /// Reversed word with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exponent: -&l.exponent,
                })
                .collect(),
        }
    }

    /// Merges adjacent letters with the same generator and drops vanishing
    /// exponents (cascading, so the result is freely reduced as a word in
    /// a, b).
    pub fn free_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some(top) if top.gen == l.gen => {
                    top.exponent += &l.exponent;
                    if top.exponent.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(l.clone()),
            }
        }
        Word { letters: out }
    }

    /// Homology action of the word.
    pub fn matrix(&self) -> SL2Matrix {
        let mut m = SL2Matrix::identity();
        for l in &self.letters {
            m = &m * &l.gen.power(&l.exponent);
        }
        m
    }

    /// Image under abelianization (total exponent count).
    pub fn exponent_sum(&self) -> BigInt {
        self.letters.iter().map(|l| &l.exponent).sum()
    }
}

/// Space-separated letters; the empty word prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
