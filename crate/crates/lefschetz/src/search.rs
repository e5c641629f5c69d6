//! Bounded enumeration and classification: Hurwitz orbit BFS, a
//! semi-decision procedure for equivalence up to Hurwitz moves and global
//! conjugation, and exhaustive discovery of the factorizations of a target
//! matrix within coefficient bounds.
//!
//! Hurwitz orbits are generally infinite, so every search here is bounded
//! by depth, coefficient size, and node budget, and reports truncation as
//! data rather than as an error. Inequivalence verdicts, by contrast, are
//! always backed by a witness: either a differing invariant or a complete
//! (neither pruned nor truncated) orbit enumeration that failed to reach
//! the other factorization.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::mem;

use crate::error::Error;
use crate::factorization::Factorization;
use crate::invariants::{h1_quotient, mod2_subgroup_order, pair_class, HomologyQuotient, PairInvariant};
use crate::sl2::{classes_within, SL2Matrix, TwistClass};
use crate::triples::{triple_of, TripleClass, TripleTag};

/// Resource limits for orbit searches.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct SearchBounds {
    /// Maximum number of BFS levels (total across both sides for the
    /// bidirectional equivalence search).
    pub depth: usize,
    /// States containing a class with |p| or |q| beyond this are pruned.
    pub coeff_bound: u64,
    /// Maximum number of distinct states kept across a search.
    pub node_budget: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            depth: 12,
            coeff_bound: 64,
            node_budget: 1_000_000,
        }
    }
}

/// One elementary rewriting step: the Hurwitz move at `index` (1-based),
/// or its inverse.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Move {
    pub index: usize,
    pub inverse: bool,
}

impl Move {
    pub fn apply(&self, f: &Factorization) -> Result<Factorization, Error> {
        if self.inverse {
            f.inverse_hurwitz_move(self.index)
        } else {
            f.hurwitz_move(self.index)
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

/// A replayable proof of equivalence: move sequences for each input which,
/// applied forward from that input with re-normalization by
/// `conjugation_normal_form` after every step, land on the identical
/// factorization.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Certificate {
    pub left_moves: Vec<Move>,
    pub right_moves: Vec<Move>,
}

impl Certificate {
    /// Plays a move sequence forward from `f`, conjugation-normalizing
    /// after every step (and once at the start).
    pub fn replay(f: &Factorization, moves: &[Move]) -> Result<Factorization, Error> {
        let mut state = normal_form_key(f);
        for mv in moves {
            state = normal_form_key(&mv.apply(&state)?);
        }
        Ok(state)
    }

    /// True when both sides replay successfully onto the same
    /// factorization.
    pub fn verify(&self, f1: &Factorization, f2: &Factorization) -> bool {
        match (
            Certificate::replay(f1, &self.left_moves),
            Certificate::replay(f2, &self.right_moves),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// What proved two factorizations inequivalent.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Different products or lengths — not factorizations of the same
    /// mapping class in the first place.
    GammaElement,
    Homology,
    Mod2Order,
    PairClass,
    TripleClass,
    /// One orbit was enumerated completely (no pruning, no truncation)
    /// without ever reaching the other factorization.
    OrbitExhausted,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Witness::GammaElement => "gamma element",
            Witness::Homology => "homology",
            Witness::Mod2Order => "mod-2 order",
            Witness::PairClass => "pair class",
            Witness::TripleClass => "triple class",
            Witness::OrbitExhausted => "orbit exhausted",
        };
        f.write_str(label)
    }
}

/// Outcome of the bounded equivalence search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equivalent(Certificate),
    Inequivalent(Witness),
    Undetermined,
}

/// A bounded Hurwitz orbit. `truncated` reports that depth or node budget
/// stopped the expansion; `pruned` reports that some neighbor was skipped
/// for exceeding the coefficient bound. The orbit is complete exactly when
/// both flags are clear.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    pub members: BTreeSet<Factorization>,
    pub truncated: bool,
    pub pruned: bool,
}

fn normal_form_key(f: &Factorization) -> Factorization {
    if f.is_empty() {
        f.clone()
    } else {
        f.conjugation_normal_form()
            .expect("nonempty factorizations have a conjugation normal form")
    }
}

/// BFS closure of `f` under Hurwitz moves and their inverses, within
/// `bounds`. States are keyed by conjugation normal form when
/// `modulo_conjugation` is set, by the raw canonical factor sequence
/// otherwise. Deterministic for fixed inputs.
pub fn hurwitz_orbit(f: &Factorization, bounds: &SearchBounds, modulo_conjugation: bool) -> Orbit {
    let key = |g: &Factorization| {
        if modulo_conjugation {
            normal_form_key(g)
        } else {
            g.clone()
        }
    };
    let seed = key(f);
    let mut members = BTreeSet::new();
    members.insert(seed.clone());
    if f.len() < 2 {
        // No moves are available; the orbit is the single state.
        return Orbit {
            members,
            truncated: false,
            pruned: false,
        };
    }
    let mut truncated = false;
    let mut pruned = false;
    let mut frontier = vec![seed];
    let mut depth = 0;
    'bfs: while !frontier.is_empty() {
        if depth == bounds.depth {
            truncated = true;
            break;
        }
        depth += 1;
        let mut next_frontier = Vec::new();
        for state in &frontier {
            for index in 1..state.len() {
                for inverse in [false, true] {
                    let mv = Move { index, inverse };
                    let moved = mv.apply(state).expect("move index is in range");
                    if !moved.fits_bound(bounds.coeff_bound) {
                        pruned = true;
                        continue;
                    }
                    let next = key(&moved);
                    if !next.fits_bound(bounds.coeff_bound) {
                        pruned = true;
                        continue;
                    }
                    if members.contains(&next) {
                        continue;
                    }
                    if members.len() >= bounds.node_budget {
                        truncated = true;
                        break 'bfs;
                    }
                    members.insert(next.clone());
                    next_frontier.push(next);
                }
            }
        }
        frontier = next_frontier;
    }
    Orbit {
        members,
        truncated,
        pruned,
    }
}

/// An invariant separating the two factorizations, if one exists among the
/// cheap ones. Matching small triple labels prove nothing in either
/// direction, so they are never reported as a witness.
fn cheap_witness(f1: &Factorization, f2: &Factorization) -> Option<Witness> {
    if !f1.gamma_equal(f2) {
        return Some(Witness::GammaElement);
    }
    if h1_quotient(f1) != h1_quotient(f2) {
        return Some(Witness::Homology);
    }
    if mod2_subgroup_order(f1) != mod2_subgroup_order(f2) {
        return Some(Witness::Mod2Order);
    }
    if f1.len() == 2 {
        let p1 = pair_class(f1).expect("length 2");
        let p2 = pair_class(f2).expect("length 2");
        if p1 != p2 {
            return Some(Witness::PairClass);
        }
    }
    if f1.len() == 3 {
        let t1 = triple_of(f1).expect("length 3").reduce();
        let t2 = triple_of(f2).expect("length 3").reduce();
        if t1.tag() != t2.tag() {
            return Some(Witness::TripleClass);
        }
        if t1.tag() != TripleTag::Small && t1 != t2 {
            return Some(Witness::TripleClass);
        }
    }
    None
}

struct SideState {
    map: BTreeMap<Factorization, Vec<Move>>,
    frontier: Vec<Factorization>,
    pruned: bool,
}

impl SideState {
    fn new(start: Factorization) -> Self {
        let mut map = BTreeMap::new();
        map.insert(start.clone(), Vec::new());
        SideState {
            map,
            frontier: vec![start],
            pruned: false,
        }
    }
}

enum Expanded {
    Met(Factorization),
    BudgetHit,
    Done,
}

fn nf_neighbors(
    state: &Factorization,
    bounds: &SearchBounds,
    pruned: &mut bool,
) -> Vec<(Move, Factorization)> {
    let mut out = Vec::new();
    for index in 1..state.len() {
        for inverse in [false, true] {
            let mv = Move { index, inverse };
            let moved = mv.apply(state).expect("move index is in range");
            if !moved.fits_bound(bounds.coeff_bound) {
                *pruned = true;
                continue;
            }
            let next = normal_form_key(&moved);
            if !next.fits_bound(bounds.coeff_bound) {
                *pruned = true;
                continue;
            }
            out.push((mv, next));
        }
    }
    out
}

fn expand_side(expanding: &mut SideState, other: &SideState, bounds: &SearchBounds) -> Expanded {
    let frontier = mem::take(&mut expanding.frontier);
    for state in &frontier {
        let path = expanding
            .map
            .get(state)
            .cloned()
            .expect("frontier states are mapped");
        for (mv, next) in nf_neighbors(state, bounds, &mut expanding.pruned) {
            if expanding.map.contains_key(&next) {
                continue;
            }
            if expanding.map.len() + other.map.len() >= bounds.node_budget {
                return Expanded::BudgetHit;
            }
            let mut next_path = path.clone();
            next_path.push(mv);
            expanding.map.insert(next.clone(), next_path);
            if other.map.contains_key(&next) {
                return Expanded::Met(next);
            }
            expanding.frontier.push(next);
        }
    }
    Expanded::Done
}

/// Semi-decides whether two factorizations are related by Hurwitz moves
/// and global conjugation.
///
/// Cheap invariants run first; any mismatch is a proof of inequivalence
/// and names its witness. Otherwise a bidirectional BFS over conjugation
/// normal forms searches for a common state: meeting yields a replayable
/// [`Certificate`], completely exhausting one orbit without meeting proves
/// inequivalence, and hitting a bound leaves the question undetermined.
pub fn equivalent(f1: &Factorization, f2: &Factorization, bounds: &SearchBounds) -> Equivalence {
    if let Some(witness) = cheap_witness(f1, f2) {
        return Equivalence::Inequivalent(witness);
    }
    let start1 = normal_form_key(f1);
    let start2 = normal_form_key(f2);
    if start1 == start2 {
        return Equivalence::Equivalent(Certificate::default());
    }
    if f1.len() < 2 {
        // No moves exist, so the singleton orbits are already exhausted.
        return Equivalence::Inequivalent(Witness::OrbitExhausted);
    }
    let mut left = SideState::new(start1);
    let mut right = SideState::new(start2);
    let mut budget_hit = false;
    let mut used_depth = 0;
    loop {
        if left.frontier.is_empty() && !left.pruned && !budget_hit {
            return Equivalence::Inequivalent(Witness::OrbitExhausted);
        }
        if right.frontier.is_empty() && !right.pruned && !budget_hit {
            return Equivalence::Inequivalent(Witness::OrbitExhausted);
        }
        if budget_hit
            || used_depth >= bounds.depth
            || (left.frontier.is_empty() && right.frontier.is_empty())
        {
            return Equivalence::Undetermined;
        }
        let expand_left = !left.frontier.is_empty()
            && (right.frontier.is_empty() || left.frontier.len() <= right.frontier.len());
        used_depth += 1;
        let outcome = if expand_left {
            expand_side(&mut left, &right, bounds)
        } else {
            expand_side(&mut right, &left, bounds)
        };
        match outcome {
            Expanded::Met(state) => {
                let left_moves = left.map.get(&state).cloned().expect("met state on the left");
                let right_moves = right
                    .map
                    .get(&state)
                    .cloned()
                    .expect("met state on the right");
                return Equivalence::Equivalent(Certificate {
                    left_moves,
                    right_moves,
                });
            }
            Expanded::BudgetHit => budget_hit = true,
            Expanded::Done => {}
        }
    }
}

fn fill_suffixes(
    alphabet: &[TwistClass],
    remaining: usize,
    seq: &mut Vec<TwistClass>,
    acc: &SL2Matrix,
    out: &mut BTreeMap<SL2Matrix, Vec<Vec<TwistClass>>>,
) {
    if remaining == 0 {
        out.entry(acc.clone()).or_default().push(seq.clone());
        return;
    }
    for t in alphabet {
        seq.push(t.clone());
        let next = acc * &t.matrix();
        fill_suffixes(alphabet, remaining - 1, seq, &next, out);
        seq.pop();
    }
}

fn extend_prefixes(
    alphabet: &[TwistClass],
    remaining: usize,
    prefix: &mut Vec<TwistClass>,
    acc: &SL2Matrix,
    target: &SL2Matrix,
    suffixes: &BTreeMap<SL2Matrix, Vec<Vec<TwistClass>>>,
    results: &mut Vec<Factorization>,
) {
    if remaining == 0 {
        let needed = &acc.inverse() * target;
        if let Some(list) = suffixes.get(&needed) {
            for suffix in list {
                let mut factors = prefix.clone();
                factors.extend_from_slice(suffix);
                results.push(Factorization::new(factors));
            }
        }
        return;
    }
    for t in alphabet {
        prefix.push(t.clone());
        let next = acc * &t.matrix();
        extend_prefixes(alphabet, remaining - 1, prefix, &next, target, suffixes, results);
        prefix.pop();
    }
}

/// All length-`r` factorizations of `target` whose classes satisfy
/// |p|, |q| ≤ `coeff_bound`, in lexicographic order of the factor
/// sequence. Meet-in-the-middle: length-⌈r/2⌉ suffixes are indexed by
/// their product, then each length-⌊r/2⌋ prefix looks up its complement.
pub fn enumerate_factorizations(
    target: &SL2Matrix,
    r: usize,
    coeff_bound: u64,
) -> Vec<Factorization> {
    if r == 0 {
        return if target.is_identity() {
            vec![Factorization::empty()]
        } else {
            Vec::new()
        };
    }
    let alphabet = classes_within(coeff_bound);
    let r1 = r / 2;
    let r2 = r - r1;
    let mut suffixes = BTreeMap::new();
    let mut seq = Vec::with_capacity(r2);
    fill_suffixes(&alphabet, r2, &mut seq, &SL2Matrix::identity(), &mut suffixes);
    let mut results = Vec::new();
    let mut prefix = Vec::with_capacity(r1);
    extend_prefixes(
        &alphabet,
        r1,
        &mut prefix,
        &SL2Matrix::identity(),
        target,
        &suffixes,
        &mut results,
    );
    results
}

/// One equivalence class discovered by [`classify`]: a representative, its
/// invariant bundle, and every input factorization assigned to the class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassEntry {
    pub representative: Factorization,
    pub homology: HomologyQuotient,
    pub mod2_order: usize,
    pub triple: Option<TripleClass>,
    pub pair: Option<PairInvariant>,
    pub members: Vec<Factorization>,
}

impl ClassEntry {
    fn new(representative: Factorization) -> Self {
        let homology = h1_quotient(&representative);
        let mod2_order = mod2_subgroup_order(&representative);
        let triple = if representative.len() == 3 {
            Some(triple_of(&representative).expect("length checked").reduce())
        } else {
            None
        };
        let pair = pair_class(&representative).ok();
        let members = vec![representative.clone()];
        ClassEntry {
            representative,
            homology,
            mod2_order,
            triple,
            pair,
            members,
        }
    }
}

/// Result of [`classify`]: pairwise-inequivalent class representatives and
/// the comparisons the bounded search could not settle. Every input is
/// either assigned to exactly one class or appears in `undetermined`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassificationReport {
    pub classes: Vec<ClassEntry>,
    pub undetermined: Vec<(Factorization, Factorization)>,
}

/// Partitions factorizations of a single mapping class into equivalence
/// classes, greedily merging each input into the first class whose
/// representative it is proved equivalent to. Inputs whose comparison with
/// some class stays undetermined are reported as pairs instead of being
/// forced into a class.
pub fn classify(fs: &[Factorization], bounds: &SearchBounds) -> Result<ClassificationReport, Error> {
    let mut report = ClassificationReport::default();
    let Some(first) = fs.first() else {
        return Ok(report);
    };
    for (i, f) in fs.iter().enumerate().skip(1) {
        if !first.gamma_equal(f) {
            return Err(Error::MixedClasses {
                detail: format!(
                    "factorizations 1 and {} have different products or lengths",
                    i + 1
                ),
            });
        }
    }
    for f in fs {
        let mut joined = false;
        let mut undetermined_with = Vec::new();
        for (ci, class) in report.classes.iter_mut().enumerate() {
            match equivalent(f, &class.representative, bounds) {
                Equivalence::Equivalent(_) => {
                    class.members.push(f.clone());
                    joined = true;
                    break;
                }
                Equivalence::Inequivalent(_) => {}
                Equivalence::Undetermined => undetermined_with.push(ci),
            }
        }
        if joined {
            continue;
        }
        if undetermined_with.is_empty() {
            report.classes.push(ClassEntry::new(f.clone()));
        } else {
            for ci in undetermined_with {
                report
                    .undetermined
                    .push((f.clone(), report.classes[ci].representative.clone()));
            }
        }
    }
    Ok(report)
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

    #[test]
    fn orbit_of_a_vertical_pair_sweeps_even_offsets() {
        let f = fac(&[(0, 1), (2, 1)]);
        let bounds = SearchBounds {
            coeff_bound: 9,
            ..SearchBounds::default()
        };
        let orbit = hurwitz_orbit(&f, &bounds, false);
        let expected: BTreeSet<Factorization> =
            (-4..=3).map(|j| fac(&[(2 * j, 1), (2 * j + 2, 1)])).collect();
        assert_eq!(orbit.members, expected);
        assert!(orbit.pruned);
        assert!(!orbit.truncated);
    }

    #[test]
    fn single_factor_orbits_are_points() {
        let f = fac(&[(3, 1)]);
        let orbit = hurwitz_orbit(&f, &SearchBounds::default(), false);
        assert_eq!(orbit.members.len(), 1);
        assert!(orbit.members.contains(&f));
        assert!(!orbit.truncated && !orbit.pruned);
    }

    #[test]
    fn conjugation_collapses_the_horizontal_pair_orbit() {
        let f = fac(&[(2, 5), (1, 0)]);
        let orbit = hurwitz_orbit(&f, &SearchBounds::default(), true);
        let nf = f.conjugation_normal_form().unwrap();
        assert_eq!(nf, fac(&[(1, 0), (2, 5)]));
        assert_eq!(orbit.members.len(), 1);
        assert!(orbit.members.contains(&nf));
        assert!(!orbit.truncated && !orbit.pruned);
    }

    #[test]
    fn depth_zero_truncates_a_movable_orbit() {
        let f = fac(&[(0, 1), (2, 1)]);
        let bounds = SearchBounds {
            depth: 0,
            ..SearchBounds::default()
        };
        let orbit = hurwitz_orbit(&f, &bounds, false);
        assert_eq!(orbit.members.len(), 1);
        assert!(orbit.truncated);
    }

    #[test]
    fn the_two_chain_relations_with_a_prefix_are_equivalent() {
        let f1 = fac(&[(1, 0), (-3, 1), (0, 1), (3, 1), (1, 0)]);
        let f2 = fac(&[(1, 0), (-2, 1), (0, 1), (0, 1), (2, 1)]);
        match equivalent(&f1, &f2, &SearchBounds::default()) {
            Equivalence::Equivalent(cert) => {
                assert!(!cert.left_moves.is_empty() || !cert.right_moves.is_empty());
                assert!(cert.verify(&f1, &f2));
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn the_two_chain_relations_differ_in_homology() {
        let f1 = fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)]);
        let f2 = fac(&[(-2, 1), (0, 1), (0, 1), (2, 1)]);
        assert_eq!(
            equivalent(&f1, &f2, &SearchBounds::default()),
            Equivalence::Inequivalent(Witness::Homology)
        );
    }

    #[test]
    fn equivalence_is_reflexive_with_an_empty_certificate() {
        let f = fac(&[(1, 1), (8, -3), (7, -3)]);
        match equivalent(&f, &f, &SearchBounds::default()) {
            Equivalence::Equivalent(cert) => {
                assert!(cert.left_moves.is_empty() && cert.right_moves.is_empty());
                assert!(cert.verify(&f, &f));
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn different_products_are_flagged_by_the_group_element() {
        assert_eq!(
            equivalent(&fac(&[(1, 0)]), &fac(&[(0, 1)]), &SearchBounds::default()),
            Equivalence::Inequivalent(Witness::GammaElement)
        );
    }

    #[test]
    fn pair_classes_witness_inequivalence_of_the_two_factor_trades() {
        let f1 = fac(&[(1, 2), (3, 1)]);
        let f2 = fac(&[(1, 3), (2, 1)]);
        assert!(f1.gamma_equal(&f2));
        assert_eq!(
            equivalent(&f1, &f2, &SearchBounds::default()),
            Equivalence::Inequivalent(Witness::PairClass)
        );
    }

    #[test]
    fn triples_witness_inequivalence_in_the_three_factor_family() {
        let f1 = fac(&[(1, 1), (2, -3), (3, 1)]);
        let f2 = fac(&[(2, 5), (1, 0), (3, 1)]);
        assert!(f1.gamma_equal(&f2));
        assert_eq!(
            equivalent(&f1, &f2, &SearchBounds::default()),
            Equivalence::Inequivalent(Witness::TripleClass)
        );
    }

    #[test]
    fn enumeration_finds_the_three_factor_presentations() {
        let target = SL2Matrix::new(9, 19, 44, 93).unwrap();
        let found = enumerate_factorizations(&target, 3, 9);
        for pairs in [
            &[(1, 1), (8, -3), (7, -3)][..],
            &[(1, 2), (3, 1), (3, -1)],
            &[(1, 3), (2, 1), (3, -1)],
        ] {
            assert!(found.contains(&fac(pairs)), "missing {pairs:?}");
        }
        for f in &found {
            assert_eq!(f.product(), target);
            assert_eq!(f.len(), 3);
            assert!(f.fits_bound(9));
        }
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(found, sorted);
    }

    #[test]
    fn enumeration_of_zero_factor_targets() {
        let found = enumerate_factorizations(&SL2Matrix::identity(), 0, 5);
        assert_eq!(found, vec![Factorization::empty()]);
        let shear = SL2Matrix::new(1, 1, 0, 1).unwrap();
        assert!(enumerate_factorizations(&shear, 0, 5).is_empty());
    }

    #[test]
    fn enumeration_recovers_the_chain_relations() {
        let target = SL2Matrix::new(1, -8, 0, 1).unwrap();
        let found = enumerate_factorizations(&target, 4, 4);
        assert!(found.contains(&fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)])));
        assert!(found.contains(&fac(&[(-2, 1), (0, 1), (0, 1), (2, 1)])));
    }

    #[test]
    fn classification_splits_the_three_factor_presentations() {
        let fs = vec![
            fac(&[(1, 1), (8, -3), (7, -3)]),
            fac(&[(1, 2), (3, 1), (3, -1)]),
            fac(&[(1, 3), (2, 1), (3, -1)]),
        ];
        let report = classify(&fs, &SearchBounds::default()).unwrap();
        assert_eq!(report.classes.len(), 3);
        assert!(report.undetermined.is_empty());
        let h1: Vec<String> = report
            .classes
            .iter()
            .map(|c| c.homology.to_string())
            .collect();
        assert_eq!(h1, ["0", "0", "Z/5"]);
        let triples: Vec<String> = report
            .classes
            .iter()
            .map(|c| c.triple.as_ref().unwrap().to_string())
            .collect();
        assert_eq!(
            triples,
            ["minimal(-11,-10,3)", "minimal(-7,-6,5)", "minimal(-10,-5,5)"]
        );
    }

    #[test]
    fn classification_merges_move_related_factorizations() {
        let f = fac(&[(1, 2), (3, 1), (3, -1)]);
        let moved = f.hurwitz_move(1).unwrap();
        let report = classify(&[f, moved], &SearchBounds::default()).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].members.len(), 2);
        assert!(report.undetermined.is_empty());
    }

    #[test]
    fn classification_of_a_singleton() {
        let report = classify(&[fac(&[(1, 0), (1, 0)])], &SearchBounds::default()).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].members.len(), 1);
        assert!(report.classes[0].pair.is_some());
        assert!(report.classes[0].triple.is_none());
    }

    #[test]
    fn classification_rejects_mixed_products() {
        let fs = [fac(&[(1, 0)]), fac(&[(0, 1)])];
        assert!(matches!(
            classify(&fs, &SearchBounds::default()),
            Err(Error::MixedClasses { .. })
        ));
    }

    #[test]
    fn witness_labels() {
        assert_eq!(Witness::GammaElement.to_string(), "gamma element");
        assert_eq!(Witness::Homology.to_string(), "homology");
        assert_eq!(Witness::Mod2Order.to_string(), "mod-2 order");
        assert_eq!(Witness::PairClass.to_string(), "pair class");
        assert_eq!(Witness::TripleClass.to_string(), "triple class");
        assert_eq!(Witness::OrbitExhausted.to_string(), "orbit exhausted");
    }

    #[test]
    fn move_labels() {
        let forward = Move {
            index: 2,
            inverse: false,
        };
        let backward = Move {
            index: 2,
            inverse: true,
        };
        assert_eq!(forward.to_string(), "s2");
        assert_eq!(backward.to_string(), "s2^-1");
        let f = fac(&[(0, 1), (2, 1)]);
        let there = Move {
            index: 1,
            inverse: false,
        }
        .apply(&f)
        .unwrap();
        let back = Move {
            index: 1,
            inverse: true,
        }
        .apply(&there)
        .unwrap();
        assert_eq!(back, f);
    }
}
