//! Ordered tuples of positive twists, Hurwitz moves, global conjugation,
//! and a deterministic conjugation normal form.
//!
//! A factorization (f₁, …, f_r) stands for the composition of the twists
//! along the classes f₁, …, f_r; its homology action is the left-to-right
//! matrix product `T_{f₁} ⋯ T_{f_r}`, which [`Factorization::product`]
//! computes.
//! Hurwitz moves exchange adjacent factors while twisting one through the
//! other, so they preserve both the product and the length; global
//! conjugation transports the whole tuple by an element of SL(2,Z).

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::sl2::{GammaElement, SL2Matrix, TwistClass};
use crate::word::Word;

/// An ordered factorization into positive Dehn twists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Factorization {
    factors: Vec<TwistClass>,
}

impl Factorization {
    pub fn new(factors: Vec<TwistClass>) -> Self {
        Factorization { factors }
    }

    pub fn empty() -> Self {
        Factorization::default()
    }

    pub fn factors(&self) -> &[TwistClass] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The left-to-right matrix product `T_{f_1} T_{f_2} ⋯ T_{f_r}` — the
    /// total monodromy of the factorization. The empty product is the
    /// identity.
    pub fn product(&self) -> SL2Matrix {
        let mut m = SL2Matrix::identity();
        for f in &self.factors {
            m = &m * &f.matrix();
        }
        m
    }

    /// The mapping class described by this factorization: its homology
    /// action together with abelianized degree r (one per twist).
    pub fn gamma(&self) -> GammaElement {
        let mut g = GammaElement::identity();
        for f in &self.factors {
            g = g.compose(&GammaElement::twist(f));
        }
        g
    }

    /// True when both factorizations describe the same mapping class:
    /// equal products and equal lengths.
    pub fn gamma_equal(&self, other: &Factorization) -> bool {
        self.len() == other.len() && self.product() == other.product()
    }

    /// The Hurwitz move at position i (1-based, 1 ≤ i < len):
    /// `(…, f_i, f_{i+1}, …) ↦ (…, t_{f_i}(f_{i+1}), f_i, …)`.
    /// Preserves the product and the length.
    pub fn hurwitz_move(&self, i: usize) -> Result<Self, Error> {
        self.check_move_index(i)?;
        let mut factors = self.factors.clone();
        let left = factors[i - 1].clone();
        let moved = TwistClass::canonical_unchecked(left.apply(&factors[i].class()));
        factors[i] = left;
        factors[i - 1] = moved;
        Ok(Factorization { factors })
    }

    /// The inverse of [`hurwitz_move`](Self::hurwitz_move) at the same
    /// position: `(…, f_i, f_{i+1}, …) ↦ (…, f_{i+1}, t_{f_{i+1}}⁻¹(f_i), …)`.
    pub fn inverse_hurwitz_move(&self, i: usize) -> Result<Self, Error> {
        self.check_move_index(i)?;
        let mut factors = self.factors.clone();
        let right = factors[i].clone();
        let moved = TwistClass::canonical_unchecked(right.apply_inverse(&factors[i - 1].class()));
        factors[i - 1] = right;
        factors[i] = moved;
        Ok(Factorization { factors })
    }

    fn check_move_index(&self, i: usize) -> Result<(), Error> {
        if i == 0 || i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Transports every factor class by ψ and conjugates the product:
    /// the result factors `ψ P ψ⁻¹` when `self` factors P. Commutes with
    /// Hurwitz moves.
    pub fn conjugate(&self, psi: &SL2Matrix) -> Self {
        Factorization {
            factors: self
                .factors
                .iter()
                .map(|f| TwistClass::canonical_unchecked(psi.apply(&f.class())))
                .collect(),
        }
    }

    /// Deterministic representative of the global-conjugation class:
    /// the first factor is carried to (1, 0), the leftover stabilizer
    /// (±powers of the twist along (1,0)) is spent making the first
    /// non-horizontal factor (p, q) satisfy 0 ≤ p < q. Two factorizations
    /// have equal normal forms iff they are globally conjugate.
    pub fn conjugation_normal_form(&self) -> Result<Self, Error> {
        let first = self.factors.first().ok_or(Error::EmptyFactorization)?;
        // ψ₀ = [[x, y], [−q, p]] with xp + yq = 1 sends (p, q) to (1, 0).
        let (p, q) = first.class();
        let e = p.extended_gcd(&q);
        debug_assert!(e.gcd.is_one());
        let psi0 = SL2Matrix::new_unchecked(e.x, e.y, -q, p);
        let mut g = self.conjugate(&psi0);
        debug_assert_eq!(g.factors[0], TwistClass::new(1, 0).unwrap());
        // The stabilizer of (1, 0) up to sign is generated by [[1,1],[0,1]];
        // spend it on the first factor with q ≠ 0.
        if let Some(anchor) = g.factors.iter().find(|f| !f.q().is_zero()) {
            let m = -anchor.p().div_floor(anchor.q());
            if !m.is_zero() {
                let shift = SL2Matrix::new_unchecked(
                    BigInt::one(),
                    m,
                    BigInt::zero(),
                    BigInt::one(),
                );
                g = g.conjugate(&shift);
            }
        }
        Ok(g)
    }

    /// The factorization as a relation in the mapping class group: each
    /// factor contributes a conjugate block `w g w⁻¹` of a generator twist.
    /// The word's homology action equals [`product`](Self::product) and its
    /// exponent sum equals the length.
    pub fn to_word(&self) -> Word {
        let mut word = Word::empty();
        for f in &self.factors {
            let (w, g) = f.as_conjugate();
            word = word.then(w.clone()).then_letter(g, 1).then(w.inverse());
        }
        word
    }

    /// True when every coefficient of every factor is at most `bound` in
    /// absolute value.
    pub fn fits_bound(&self, bound: u64) -> bool {
        let b = BigInt::from(bound);
        self.factors
            .iter()
            .all(|f| f.p().abs() <= b && f.q().abs() <= b)
    }
}

impl FromIterator<TwistClass> for Factorization {
    fn from_iter<I: IntoIterator<Item = TwistClass>>(iter: I) -> Self {
        Factorization {
            factors: iter.into_iter().collect(),
        }
    }
}

/// Factors joined by `;` in the CLI text format; the empty factorization
/// prints as the empty string.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(pairs: &[(i64, i64)]) -> Factorization {
        pairs
            .iter()
            .map(|&(p, q)| TwistClass::new(p, q).unwrap())
            .collect()
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> SL2Matrix {
        SL2Matrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn products_of_the_reference_pair() {
        let f1 = fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)]);
        let f2 = fac(&[(-2, 1), (0, 1), (0, 1), (2, 1)]);
        assert_eq!(f1.product(), m(1, -8, 0, 1));
        assert_eq!(f2.product(), m(1, -8, 0, 1));
        assert!(f1.gamma_equal(&f2));
        assert_eq!(Factorization::empty().product(), SL2Matrix::identity());
    }

    #[test]
    fn gamma_tracks_length_as_degree() {
        let f1 = fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)]);
        let g = f1.gamma();
        assert_eq!(g.matrix(), &m(1, -8, 0, 1));
        assert_eq!(g.ab_degree(), &BigInt::from(4));
        // Same mapping class as a⁻⁸ δ.
        let via_word = GammaElement::from_word(
            &Word::empty().then_letter(crate::word::Gen::A, -8),
        )
        .compose(&GammaElement::boundary_twist());
        assert_eq!(g, via_word);
        // The word form of the factorization itself.
        assert_eq!(GammaElement::from_word(&f1.to_word()), g);
    }

    #[test]
    fn hurwitz_move_twists_the_right_factor_through_the_left() {
        let f = fac(&[(0, 1), (2, 1)]);
        assert_eq!(f.hurwitz_move(1).unwrap(), fac(&[(-2, 1), (0, 1)]));
        // Moving back recovers the original tuple.
        assert_eq!(
            f.hurwitz_move(1).unwrap().inverse_hurwitz_move(1).unwrap(),
            f
        );
        assert_eq!(
            fac(&[(-2, 1), (0, 1)]).inverse_hurwitz_move(1).unwrap(),
            f
        );
    }

    #[test]
    fn hurwitz_move_fixes_parallel_factors() {
        let f = fac(&[(1, 0), (1, 0)]);
        assert_eq!(f.hurwitz_move(1).unwrap(), f);
    }

    #[test]
    fn moves_preserve_product_and_length() {
        let f = fac(&[(1, 1), (8, -3), (7, -3)]);
        let p = f.product();
        assert_eq!(p, m(9, 19, 44, 93));
        for i in 1..f.len() {
            let g = f.hurwitz_move(i).unwrap();
            assert_eq!(g.product(), p);
            assert_eq!(g.len(), f.len());
            let h = f.inverse_hurwitz_move(i).unwrap();
            assert_eq!(h.product(), p);
        }
    }

    #[test]
    fn move_index_bounds() {
        let f = fac(&[(1, 0), (0, 1)]);
        assert!(f.hurwitz_move(0).is_err());
        assert!(f.hurwitz_move(2).is_err());
        assert!(fac(&[(1, 0)]).hurwitz_move(1).is_err());
    }

    #[test]
    fn pair_trade_move() {
        // (…, (2,5), (1,0)) pulls back to ((1,0), (−3,5)).
        let f = fac(&[(2, 5), (1, 0)]);
        assert_eq!(f.inverse_hurwitz_move(1).unwrap(), fac(&[(1, 0), (-3, 5)]));
    }

    #[test]
    fn conjugation_transports_classes_and_product() {
        let f = fac(&[(0, 1), (2, 1)]);
        let a = m(1, 1, 0, 1);
        let g = f.conjugate(&a);
        assert_eq!(g, fac(&[(1, 1), (3, 1)]));
        assert_eq!(g.product(), &(&a * &f.product()) * &a.inverse());
        // Round trip by the inverse matrix.
        assert_eq!(g.conjugate(&a.inverse()), f);
    }

    #[test]
    fn conjugation_recovers_the_trade_pair() {
        // ψ carries ((1,0), (−3,5)) to ((2,5), (1,0)).
        let psi = m(-2, -1, -5, -3);
        let f = fac(&[(1, 0), (-3, 5)]);
        assert_eq!(f.conjugate(&psi), fac(&[(2, 5), (1, 0)]));
    }

    #[test]
    fn conjugation_commutes_with_moves() {
        let f = fac(&[(1, 2), (3, 1), (-3, 1)]);
        let psi = m(2, 1, 1, 1);
        for i in 1..f.len() {
            assert_eq!(
                f.hurwitz_move(i).unwrap().conjugate(&psi),
                f.conjugate(&psi).hurwitz_move(i).unwrap()
            );
        }
    }

    #[test]
    fn normal_form_identifies_conjugate_tuples() {
        let f = fac(&[(0, 1), (2, 1)]);
        let g = fac(&[(1, 1), (3, 1)]);
        let nf = f.conjugation_normal_form().unwrap();
        assert_eq!(nf, fac(&[(1, 0), (1, 2)]));
        assert_eq!(g.conjugation_normal_form().unwrap(), nf);
        // Idempotent.
        assert_eq!(nf.conjugation_normal_form().unwrap(), nf);
    }

    #[test]
    fn normal_form_separates_the_trade_pairs() {
        let f = fac(&[(1, 2), (3, 1)]);
        let g = fac(&[(1, 3), (2, 1)]);
        assert_eq!(f.conjugation_normal_form().unwrap(), fac(&[(1, 0), (2, 5)]));
        assert_eq!(g.conjugation_normal_form().unwrap(), fac(&[(1, 0), (3, 5)]));
    }

    #[test]
    fn normal_form_of_horizontal_tuples() {
        assert_eq!(
            fac(&[(1, 0)]).conjugation_normal_form().unwrap(),
            fac(&[(1, 0)])
        );
        assert_eq!(
            fac(&[(3, 5)]).conjugation_normal_form().unwrap(),
            fac(&[(1, 0)])
        );
        assert!(Factorization::empty().conjugation_normal_form().is_err());
    }

    #[test]
    fn word_form_matches_the_reference_relations() {
        let f1 = fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)]);
        assert_eq!(f1.to_word().to_string(), "a^-3 b a^3 b a^3 b a^-3 a");
        assert_eq!(f1.to_word().matrix(), f1.product());

        let f2 = fac(&[(-2, 1), (0, 1), (0, 1), (2, 1)]);
        assert_eq!(f2.to_word().to_string(), "a^-2 b a^2 b b a^2 b a^-2");
        assert_eq!(f2.to_word().matrix(), f2.product());
        assert_eq!(f2.to_word().exponent_sum(), BigInt::from(4));
    }

    #[test]
    fn display_round_trip_shape() {
        let f = fac(&[(2, 5), (1, 0)]);
        assert_eq!(f.to_string(), "2,5;1,0");
        assert_eq!(Factorization::empty().to_string(), "");
    }
}
