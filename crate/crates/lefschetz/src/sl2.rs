//! Exact 2×2 integer matrices of determinant one, twist classes, and the
//! lifting data for the mapping class group of the once-punctured torus.
//!
//! The fiber surface is a torus with one boundary circle; a simple closed
//! curve on it is determined by a primitive homology class ±(p, q). The
//! right-handed Dehn twist along that curve acts on homology by the matrix
//!
//! ```text
//! T_{p,q} = [ 1 - pq   p²    ]
//!           [ -q²      1 + pq ]
//! ```
//!
//! so `T_{p,q} = T_{-p,-q}` and classes are stored with a canonical sign
//! (q > 0, or q = 0 and p = 1). The matrices A = T_{1,0} and B = T_{0,1}
//! generate SL(2,Z).

use alloc::{vec, vec::Vec};
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::word::{Gen, Word};

/// A homology class of the fiber torus, as coordinates in the standard basis.
pub type Vec2 = (BigInt, BigInt);

/// Intersection pairing `ι((p,q), (r,s)) = p·s − q·r` (the signed count of
/// crossings of the corresponding curves).
pub fn cross(u: &Vec2, v: &Vec2) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// An element of SL(2,Z) with exact integer entries, row major.
///
/// Construction checks the determinant, so every value of this type is
/// genuinely unimodular.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SL2Matrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SL2Matrix {
    /// Builds `[[a, b], [c, d]]`, rejecting matrices with det ≠ 1.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(SL2Matrix { a, b, c, d })
    }

    /// Internal constructor for products of checked matrices.
    pub(crate) fn new_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = SL2Matrix { a, b, c, d };
        debug_assert!(m.det().is_one());
        m
    }

    pub fn identity() -> Self {
        SL2Matrix::new_unchecked(
            BigInt::one(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::one(),
        )
    }

    /// Row-major entries `[a, b, c, d]`.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// Recomputed from the entries; equals one for every constructed value.
    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Exact inverse `[[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> Self {
        SL2Matrix::new_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &Vec2) -> Vec2 {
        (
            &self.a * &v.0 + &self.b * &v.1,
            &self.c * &v.0 + &self.d * &v.1,
        )
    }

    /// Recognizes a twist matrix: returns the class t with `t.matrix() == self`,
    /// if one exists. Twist matrices have trace two, `b ≥ 0 ≥ c` with b and −c
    /// perfect squares, and a primitive square-root pair; the identity is not
    /// a twist.
    pub fn as_twist(&self) -> Option<TwistClass> {
        if self.trace() != BigInt::from(2) || self.is_identity() {
            return None;
        }
        if self.b.is_negative() || self.c.is_positive() {
            return None;
        }
        let p = self.b.sqrt();
        if &p * &p != self.b {
            return None;
        }
        let neg_c = -&self.c;
        let q = neg_c.sqrt();
        if &q * &q != neg_c {
            return None;
        }
        // Fix relative signs so that p·q equals 1 − a.
        let pq = BigInt::one() - &self.a;
        let q = if pq.is_negative() { -q } else { q };
        if &p * &q != pq {
            return None;
        }
        let t = TwistClass::new(p, q).ok()?;
        (t.matrix() == *self).then_some(t)
    }
}

impl Mul for &SL2Matrix {
    type Output = SL2Matrix;

    fn mul(self, rhs: &SL2Matrix) -> SL2Matrix {
        SL2Matrix::new_unchecked(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl Mul for SL2Matrix {
    type Output = SL2Matrix;

    fn mul(self, rhs: SL2Matrix) -> SL2Matrix {
        &self * &rhs
    }
}

/// Prints row major as `a,b;c,d` (the text format used by the CLI).
impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

/// The isotopy class of an essential simple closed curve on the fiber:
/// a primitive pair (p, q) up to overall sign, stored with q > 0, or
/// q = 0 and p = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TwistClass {
    p: BigInt,
    q: BigInt,
}

impl TwistClass {
    /// Canonicalizes the sign and checks primitivity (gcd(p, q) = 1).
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Error> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(Error::NotPrimitive { p, q });
        }
        Ok(TwistClass::canonical_unchecked((p, q)))
    }

    /// Sign canonicalization for a pair already known to be primitive
    /// (actions of SL(2,Z) matrices preserve primitivity).
    pub(crate) fn canonical_unchecked(v: Vec2) -> Self {
        let (p, q) = v;
        debug_assert!(p.gcd(&q).is_one());
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            TwistClass { p: -p, q: -q }
        } else {
            TwistClass { p, q }
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The stored representative of ±(p, q) as a vector.
    pub fn class(&self) -> Vec2 {
        (self.p.clone(), self.q.clone())
    }

    /// The homology action of the right-handed twist along this class.
    pub fn matrix(&self) -> SL2Matrix {
        let pq = &self.p * &self.q;
        SL2Matrix::new_unchecked(
            BigInt::one() - &pq,
            &self.p * &self.p,
            -(&self.q * &self.q),
            BigInt::one() + pq,
        )
    }

    /// Twist action on a homology class: `c + ι(t, c)·t`. Agrees with
    /// `self.matrix().apply(c)` and fixes the twist's own class.
    pub fn apply(&self, c: &Vec2) -> Vec2 {
        let n = cross(&self.class(), c);
        (&c.0 + &n * &self.p, &c.1 + &n * &self.q)
    }

    /// Inverse twist action: `c − ι(t, c)·t`.
    pub fn apply_inverse(&self, c: &Vec2) -> Vec2 {
        let n = cross(&self.class(), c);
        (&c.0 - &n * &self.p, &c.1 - &n * &self.q)
    }

    /// Expresses the twist as a conjugate `w g w⁻¹` of a generator twist
    /// g ∈ {a, b}, where w is a word in a, b with `w.matrix()` carrying the
    /// generator's class to ±(p, q).
    ///
    /// The word is produced by a subtractive Euclidean reduction of (p, q):
    /// powers of A change p by multiples of q, powers of B change q by
    /// multiples of p, and the straightening stops at ±(1,0) or (0,±1).
    pub fn as_conjugate(&self) -> (Word, Gen) {
        let mut p = self.p.clone();
        let mut q = self.q.clone();
        // Units applied left of the vector, in application order.
        let mut units: Vec<(Gen, BigInt)> = Vec::new();
        while !p.is_zero() && !q.is_zero() {
            if p.abs() >= q.abs() {
                // A^k: (p, q) ↦ (p + kq, q); pick k = −trunc(p/q).
                let k = -(&p / &q);
                p += &k * &q;
                units.push((Gen::A, k));
            } else {
                // B^k: (p, q) ↦ (p, q − kp); pick k = trunc(q/p).
                let k = &q / &p;
                q -= &k * &p;
                units.push((Gen::B, k));
            }
        }
        let base = if q.is_zero() { Gen::A } else { Gen::B };
        // U_n ⋯ U_1 (p, q) = ±e_base, so w = U_1⁻¹ U_2⁻¹ ⋯ U_n⁻¹.
        let mut w = Word::empty();
        for (g, k) in units {
            w.push(g, -k);
        }
        debug_assert!({
            let img = w.matrix().apply(&base.class());
            img == self.class() || (-img.0, -img.1) == self.class()
        });
        (w, base)
    }
}

/// Prints as `p,q` so that joining factors with `;` gives the CLI format.
impl fmt::Display for TwistClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

/// An element of the mapping class group of the once-punctured torus,
/// recorded by its homology action together with its image under the
/// abelianization Γ → Z (twists map to 1, the boundary twist to 12).
///
/// The pair (matrix, degree) determines the group element, so equality of
/// this type is equality in the mapping class group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GammaElement {
    matrix: SL2Matrix,
    ab_degree: BigInt,
}

impl GammaElement {
    pub fn identity() -> Self {
        GammaElement {
            matrix: SL2Matrix::identity(),
            ab_degree: BigInt::zero(),
        }
    }

    /// The lift of a single positive twist.
    pub fn twist(t: &TwistClass) -> Self {
        GammaElement {
            matrix: t.matrix(),
            ab_degree: BigInt::one(),
        }
    }

    /// The boundary twist δ: trivial homology action, degree 12.
    pub fn boundary_twist() -> Self {
        GammaElement {
            matrix: SL2Matrix::identity(),
            ab_degree: BigInt::from(12),
        }
    }

    /// Evaluates a word in the generator twists a, b.
    pub fn from_word(w: &Word) -> Self {
        GammaElement {
            matrix: w.matrix(),
            ab_degree: w.exponent_sum(),
        }
    }

    pub fn compose(&self, other: &GammaElement) -> Self {
        GammaElement {
            matrix: &self.matrix * &other.matrix,
            ab_degree: &self.ab_degree + &other.ab_degree,
        }
    }

    pub fn matrix(&self) -> &SL2Matrix {
        &self.matrix
    }

    pub fn ab_degree(&self) -> &BigInt {
        &self.ab_degree
    }
}

/// All twist classes with |p| ≤ bound and 0 ≤ q ≤ bound, in increasing
/// lexicographic order. This is the candidate alphabet for bounded
/// enumeration.
pub fn classes_within(bound: u64) -> Vec<TwistClass> {
    let bound = bound as i64;
    let mut out = vec![];
    for p in -bound..=bound {
        for q in 0..=bound {
            if let Ok(t) = TwistClass::new(p, q) {
                // q = 0 admits only (1, 0); new() canonicalizes (−1, 0) to it.
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}
