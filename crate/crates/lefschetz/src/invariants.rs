//! Invariants of factorizations that are unchanged by Hurwitz moves and
//! global conjugation.
//!
//! Three are computed here: the first homology of the total space of the
//! fibration (the cokernel of the 2×r matrix of factor classes), the
//! subgroup of SL(2,Z/2) generated by the factors mod 2, and — for
//! two-factor tuples — a complete residue invariant.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::factorization::Factorization;
use crate::sl2::{cross, SL2Matrix, TwistClass};

/// Intersection number of the two classes, evaluated on the stored
/// canonical representatives (so it is defined up to the sign choice those
/// representatives make).
pub fn intersection(u: &TwistClass, v: &TwistClass) -> BigInt {
    cross(&u.class(), &v.class())
}

/// Signed Euler characteristic bookkeeping for the fibered 4-manifold:
/// one (−1)-handle per critical point over a torus, χ = r − 1 + 1 − 1.
pub fn euler_characteristic(f: &Factorization) -> i64 {
    f.len() as i64 - 1
}

/// The abelian group Z² / ⟨factor classes⟩ in Smith form: invariant factors
/// (d₁, d₂) with d₁ | d₂, where dᵢ = 0 marks a free summand. This is the
/// first homology of the total space of the fibration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HomologyQuotient {
    d1: BigInt,
    d2: BigInt,
}

impl HomologyQuotient {
    /// The invariant factor pair (d₁, d₂), d₁ | d₂ unless both mark free
    /// summands (0).
    pub fn divisors(&self) -> (&BigInt, &BigInt) {
        (&self.d1, &self.d2)
    }

    pub fn is_trivial(&self) -> bool {
        self.d1.is_one() && self.d2.is_one()
    }
}

/// Exact display strings: `0`, `Z/d`, `Z/d1+Z/d2`, `Z`, `Z+Z/d`, `Z^2`.
impl fmt::Display for HomologyQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (
            self.d1.is_zero(),
            self.d1.is_one(),
            self.d2.is_zero(),
            self.d2.is_one(),
        ) {
            (true, _, true, _) => write!(f, "Z^2"),
            (_, true, true, _) => write!(f, "Z"),
            (false, false, true, _) => write!(f, "Z+Z/{}", self.d1),
            (_, true, _, true) => write!(f, "0"),
            (_, true, false, false) => write!(f, "Z/{}", self.d2),
            _ => write!(f, "Z/{}+Z/{}", self.d1, self.d2),
        }
    }
}

/// Smith invariant factors of the 2×r matrix whose columns are the factor
/// classes. For a 2-row matrix only gcd chains are needed: d₁ is the gcd of
/// all entries and d₁·d₂ the gcd of all 2×2 minors.
pub fn h1_quotient(f: &Factorization) -> HomologyQuotient {
    let cols: Vec<_> = f.factors().iter().map(|t| t.class()).collect();
    if cols.is_empty() {
        return HomologyQuotient {
            d1: BigInt::zero(),
            d2: BigInt::zero(),
        };
    }
    let mut entry_gcd = BigInt::zero();
    for (p, q) in &cols {
        entry_gcd = entry_gcd.gcd(p).gcd(q);
    }
    let mut minor_gcd = BigInt::zero();
    for i in 0..cols.len() {
        for j in (i + 1)..cols.len() {
            minor_gcd = minor_gcd.gcd(&cross(&cols[i], &cols[j]));
        }
    }
    if minor_gcd.is_zero() {
        // Rank one: a single free summand survives. Primitivity of the
        // columns forces entry_gcd = 1, but keep the general Smith data.
        return HomologyQuotient {
            d1: entry_gcd,
            d2: BigInt::zero(),
        };
    }
    debug_assert!((&minor_gcd % (&entry_gcd * &entry_gcd)).is_zero());
    let d2 = &minor_gcd / &entry_gcd;
    HomologyQuotient {
        d1: entry_gcd,
        d2,
    }
}

/// An element of SL(2,Z/2), packed into four bits.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mod2Matrix {
    bits: u8,
}

impl Mod2Matrix {
    pub fn identity() -> Self {
        Mod2Matrix::from_bits(true, false, false, true)
    }

    fn from_bits(a: bool, b: bool, c: bool, d: bool) -> Self {
        Mod2Matrix {
            bits: (a as u8) | (b as u8) << 1 | (c as u8) << 2 | (d as u8) << 3,
        }
    }

    pub fn from_matrix(m: &SL2Matrix) -> Self {
        let [a, b, c, d] = m.entries();
        Mod2Matrix::from_bits(a.is_odd(), b.is_odd(), c.is_odd(), d.is_odd())
    }

    /// Row-major entries as bits.
    pub fn entries(self) -> [bool; 4] {
        [
            self.bits & 1 != 0,
            self.bits & 2 != 0,
            self.bits & 4 != 0,
            self.bits & 8 != 0,
        ]
    }

    pub fn mul(self, rhs: Mod2Matrix) -> Mod2Matrix {
        let [a, b, c, d] = self.entries();
        let [e, f, g, h] = rhs.entries();
        Mod2Matrix::from_bits(
            (a & e) ^ (b & g),
            (a & f) ^ (b & h),
            (c & e) ^ (d & g),
            (c & f) ^ (d & h),
        )
    }
}

impl fmt::Display for Mod2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(
            f,
            "{},{};{},{}",
            a as u8, b as u8, c as u8, d as u8
        )
    }
}

/// The subgroup of SL(2,Z/2) generated by the factor matrices mod 2,
/// as a sorted element list. SL(2,Z/2) has six elements, so the order is
/// one of 1, 2, 3, 6.
pub fn mod2_subgroup(f: &Factorization) -> Vec<Mod2Matrix> {
    let gens: Vec<_> = f
        .factors()
        .iter()
        .map(|t| Mod2Matrix::from_matrix(&t.matrix()))
        .collect();
    let mut set: BTreeSet<Mod2Matrix> = BTreeSet::new();
    set.insert(Mod2Matrix::identity());
    // Close under right multiplication by generators; the group is finite,
    // so generator powers supply inverses.
    let mut frontier: Vec<Mod2Matrix> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(*g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// Order of [`mod2_subgroup`].
pub fn mod2_subgroup_order(f: &Factorization) -> usize {
    mod2_subgroup(f).len()
}

/// Complete invariant of two-factor tuples under Hurwitz moves and global
/// conjugation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PairInvariant {
    /// Intersection number zero: the two classes coincide.
    Parallel,
    Class(PairClass),
}

/// For a pair (γ₁, γ₂) with n = |ι(γ₂, γ₁)| > 0: writing γ₁ = k·γ₂ + n·v in
/// a basis (γ₂, v) of determinant one, the residue k mod n is a conjugation
/// invariant, and a Hurwitz move replaces k by −k⁻¹ mod n. The unordered
/// set {k, −k⁻¹} together with n classifies the pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairClass {
    n: BigInt,
    k_set: BTreeSet<BigInt>,
}

impl PairClass {
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// The residues {k, −k⁻¹ mod n}, each in [0, n) and coprime to n.
    pub fn k_set(&self) -> &BTreeSet<BigInt> {
        &self.k_set
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, k={{", self.n)?;
        for (i, k) in self.k_set.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PairInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairInvariant::Parallel => write!(f, "parallel"),
            PairInvariant::Class(c) => write!(f, "{c}"),
        }
    }
}

/// Inverse of k modulo n > 0, for gcd(k, n) = 1; the representative lies in
/// [0, n).
fn mod_inverse(k: &BigInt, n: &BigInt) -> BigInt {
    let e = k.extended_gcd(n);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(n)
}

/// The two-factor invariant. Errors unless the factorization has exactly
/// two factors.
pub fn pair_class(f: &Factorization) -> Result<PairInvariant, Error> {
    if f.len() != 2 {
        return Err(Error::WrongLength {
            expected: 2,
            found: f.len(),
        });
    }
    let mut g1 = f.factors()[0].class();
    let g2 = f.factors()[1].class();
    let mut n = cross(&g2, &g1);
    if n.is_zero() {
        return Ok(PairInvariant::Parallel);
    }
    if n.is_negative() {
        // Flip the sign representative of γ₁; the class is unchanged.
        g1 = (-g1.0, -g1.1);
        n = -n;
    }
    // Complete (γ₂, v) to a determinant-one basis: ι(γ₂, v) = 1.
    let e = g2.0.extended_gcd(&g2.1);
    debug_assert!(e.gcd.is_one());
    let v = (-e.y, e.x);
    debug_assert!(cross(&g2, &v).is_one());
    let k_raw = cross(&g1, &v);
    debug_assert_eq!(
        (&k_raw * &g2.0 + &n * &v.0, &k_raw * &g2.1 + &n * &v.1),
        g1
    );
    let k = k_raw.mod_floor(&n);
    let k_inv_neg = (-mod_inverse(&k, &n)).mod_floor(&n);
    let mut k_set = BTreeSet::new();
    k_set.insert(k);
    k_set.insert(k_inv_neg);
    Ok(PairInvariant::Class(PairClass { n, k_set }))
}
