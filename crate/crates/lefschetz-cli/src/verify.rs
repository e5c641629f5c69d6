//! The built-in reproduction suite.
//!
//! Every check either replays a worked example with frozen expected values
//! or fuzzes an algebraic law with a fixed-seed generator, so a run is fully
//! deterministic. Each check returns a short detail string on success and a
//! description of the first mismatch on failure; [`run_all`] collects them
//! into the table behind the `verify-paper` subcommand.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use lefschetz::{
    classify, enumerate_factorizations, equivalent, h1_quotient, hurwitz_orbit,
    mod2_subgroup_order, pair_class, triple_of, Equivalence, Factorization, Gen, PairInvariant,
    Position, SL2Matrix, SearchBounds, Triple, TripleShape, TripleTag, TwistClass, Witness, Word,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FUZZ_CASES: usize = 10_000;

/// Outcome of one named check.
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

/// All checks in report order.
pub fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("chain relations: products, homology, mod-2", chain_relations),
        ("prefixed chain relations are move-equivalent", prefixed_chain_equivalence),
        ("mirror trade split by homology", mirror_trade_homology),
        ("vertical pair orbit parity", vertical_pair_orbit),
        ("three-factor presentations of one element", three_factor_presentations),
        ("horizontal trades and pair classes", horizontal_trades),
        ("trivial-homology three-factor family", simply_connected_family),
        ("torsion three-factor family", torsion_family),
        ("search rediscovers the three-factor presentations", search_rediscovery),
        ("fuzz: mutations are involutions", fuzz_mutation_involution),
        ("fuzz: reduction is orbit-invariant", fuzz_reduction_invariance),
        ("fuzz: minimality criteria agree", fuzz_minimality_agreement),
        ("fuzz: invariants survive Hurwitz moves", fuzz_move_invariance),
        ("fuzz: normal form ignores conjugation", fuzz_normal_form),
        ("fuzz: homology matches coset counting", fuzz_homology_oracle),
        ("pair-class rule by exhaustive orbits", pair_rule_exhaustive),
    ]
}

/// Runs every check and collects the outcomes.
pub fn run_all() -> Vec<CheckResult> {
    checks()
        .into_iter()
        .map(|(name, check)| match check() {
            Ok(detail) => CheckResult {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckResult {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fac(pairs: &[(i64, i64)]) -> Factorization {
    Factorization::new(
        pairs
            .iter()
            .map(|&(p, q)| TwistClass::new(p, q).expect("primitive class"))
            .collect(),
    )
}

fn matrix(a: i64, b: i64, c: i64, d: i64) -> SL2Matrix {
    SL2Matrix::new(a, b, c, d).expect("unimodular matrix")
}

/// The two length-4 positive factorizations of [[1,-8],[0,1]]: same product,
/// split by homology and by the mod-2 subgroup.
pub fn chain_relations() -> Result<String, String> {
    let f1 = fac(&[(-3, 1), (0, 1), (3, 1), (1, 0)]);
    let f2 = fac(&[(-2, 1), (0, 1), (0, 1), (2, 1)]);
    let target = matrix(1, -8, 0, 1);
    ensure(
        f1.product() == target,
        format!("first product is {}, expected 1,-8;0,1", f1.product()),
    )?;
    ensure(
        f2.product() == target,
        format!("second product is {}, expected 1,-8;0,1", f2.product()),
    )?;
    let h = [h1_quotient(&f1).to_string(), h1_quotient(&f2).to_string()];
    ensure(h == ["0", "Z/2"], format!("homology {h:?}, expected [0, Z/2]"))?;
    let orders = [mod2_subgroup_order(&f1), mod2_subgroup_order(&f2)];
    ensure(orders == [6, 2], format!("mod-2 orders {orders:?}, expected [6, 2]"))?;
    Ok("products both 1,-8;0,1; homology 0 vs Z/2; mod-2 orders 6 vs 2".into())
}

/// Prepending the same twist to both chain relations makes them equivalent;
/// the search finds a replayable certificate within depth 6.
pub fn prefixed_chain_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let f1 = fac(&[(1, 0), (-3, 1), (0, 1), (3, 1), (1, 0)]);
    let f2 = fac(&[(1, 0), (-2, 1), (0, 1), (0, 1), (2, 1)]);
    let bounds = SearchBounds {
        depth: 6,
        ..SearchBounds::default()
    };
    match equivalent(&f1, &f2, &bounds) {
        Equivalence::Equivalent(cert) => {
            ensure(cert.verify(&f1, &f2), "certificate does not replay")?;
            let elapsed = start.elapsed();
            ensure(
                elapsed < Duration::from_secs(1),
                format!("took {elapsed:?}, expected under 1s"),
            )?;
            Ok(format!(
                "equivalent within depth 6; certificate has {}+{} moves; {elapsed:?}",
                cert.left_moves.len(),
                cert.right_moves.len()
            ))
        }
        other => Err(format!("expected equivalence, got {other:?}")),
    }
}

/// Two length-3 factorizations of the same element that no sequence of moves
/// connects: homology tells them apart.
pub fn mirror_trade_homology() -> Result<String, String> {
    let f1 = fac(&[(-3, 1), (0, 1), (1, 0)]);
    let f2 = fac(&[(-2, 1), (0, 1), (0, 1)]);
    ensure(
        f1.product() == f2.product(),
        "the two products differ; they must agree for the witness to matter",
    )?;
    match equivalent(&f1, &f2, &SearchBounds::default()) {
        Equivalence::Inequivalent(Witness::Homology) => Ok(format!(
            "inequivalent with homology witness: {} vs {}",
            h1_quotient(&f1),
            h1_quotient(&f2)
        )),
        other => Err(format!("expected a homology witness, got {other:?}")),
    }
}

/// The orbit of [(0,1),(2,1)] within coefficient bound 9 is exactly the
/// even-offset family, and conjugation by [[1,1],[0,1]] carries it onto the
/// odd-offset family.
pub fn vertical_pair_orbit() -> Result<String, String> {
    let bounds = SearchBounds {
        coeff_bound: 9,
        ..SearchBounds::default()
    };
    let even_seed = fac(&[(0, 1), (2, 1)]);
    let orbit = hurwitz_orbit(&even_seed, &bounds, false);
    let expected_even: BTreeSet<_> = (-4..=3).map(|j| fac(&[(2 * j, 1), (2 * j + 2, 1)])).collect();
    ensure(
        orbit.members == expected_even,
        format!(
            "even orbit has {} members, expected the 8 even-offset pairs",
            orbit.members.len()
        ),
    )?;
    ensure(
        orbit.pruned && !orbit.truncated,
        "even orbit should be pruned by the coefficient bound but not truncated",
    )?;
    let shear = matrix(1, 1, 0, 1);
    let odd_seed = even_seed.conjugate(&shear);
    ensure(
        odd_seed == fac(&[(1, 1), (3, 1)]),
        format!("conjugated seed is {odd_seed}, expected 1,1;3,1"),
    )?;
    let odd_orbit = hurwitz_orbit(&odd_seed, &bounds, false);
    let expected_odd: BTreeSet<_> =
        (-5..=3).map(|j| fac(&[(2 * j + 1, 1), (2 * j + 3, 1)])).collect();
    ensure(
        odd_orbit.members == expected_odd,
        format!(
            "odd orbit has {} members, expected the 9 odd-offset pairs",
            odd_orbit.members.len()
        ),
    )?;
    Ok("orbit is exactly the even-offset family; conjugation reaches the odd one".into())
}

/// Three length-3 factorizations of [[9,19],[44,93]] whose triples reduce to
/// three distinct minimal classes; classification separates all three. Also
/// a negative control: flipping the pairing sign must change the class.
pub fn three_factor_presentations() -> Result<String, String> {
    let fs = [
        fac(&[(1, 1), (8, -3), (7, -3)]),
        fac(&[(1, 2), (3, 1), (3, -1)]),
        fac(&[(1, 3), (2, 1), (3, -1)]),
    ];
    let target = matrix(9, 19, 44, 93);
    for f in &fs {
        ensure(
            f.product() == target,
            format!("product of {f} is {}, expected 9,19;44,93", f.product()),
        )?;
    }
    let quoted = [Triple::new(11, 10, 3), Triple::new(5, 7, 6), Triple::new(5, 10, 5)];
    for (f, t) in fs.iter().zip(&quoted) {
        let class = triple_of(f).map_err(|e| e.to_string())?.reduce();
        ensure(
            class == t.reduce(),
            format!("triple of {f} reduces to {class}, expected the class of {t}"),
        )?;
        ensure(
            class.tag() == TripleTag::Minimal,
            format!("triple of {f} is {class}, expected a minimal class"),
        )?;
    }
    let flipped = Triple::new(-11, -10, -3);
    ensure(
        flipped.reduce() != quoted[0].reduce(),
        "an odd sign flip of the pairing must change the class, or the suite \
         could not catch an orientation mistake",
    )?;
    let h: Vec<String> = fs.iter().map(|f| h1_quotient(f).to_string()).collect();
    ensure(h == ["0", "0", "Z/5"], format!("homology {h:?}, expected [0, 0, Z/5]"))?;
    let report = classify(&fs, &SearchBounds::default()).map_err(|e| e.to_string())?;
    ensure(
        report.classes.len() == 3 && report.undetermined.is_empty(),
        format!("classification found {} classes, expected 3", report.classes.len()),
    )?;
    Ok("three distinct minimal triple classes; homology 0, 0, Z/5; 3 classes".into())
}

/// Two inequivalent two-factor factorizations of [[1,-5],[5,-24]] with pair
/// classes (5,{2}) and (5,{3}), and a pair whose conjugation-reduced orbit is
/// a single point.
pub fn horizontal_trades() -> Result<String, String> {
    let f1 = fac(&[(1, 2), (3, 1)]);
    let f2 = fac(&[(1, 3), (2, 1)]);
    let target = matrix(1, -5, 5, -24);
    ensure(
        f1.product() == target && f2.product() == target,
        "products must both equal 1,-5;5,-24",
    )?;
    let c1 = pair_class(&f1).map_err(|e| e.to_string())?.to_string();
    let c2 = pair_class(&f2).map_err(|e| e.to_string())?.to_string();
    ensure(
        c1 == "n=5, k={2}" && c2 == "n=5, k={3}",
        format!("pair classes are '{c1}' and '{c2}', expected n=5, k={{2}} and n=5, k={{3}}"),
    )?;
    let fixed = fac(&[(2, 5), (1, 0)]);
    let orbit = hurwitz_orbit(&fixed, &SearchBounds::default(), true);
    ensure(
        orbit.members.len() == 1 && !orbit.truncated,
        format!(
            "orbit of {fixed} modulo conjugation has {} members, expected 1",
            orbit.members.len()
        ),
    )?;
    Ok("pair classes n=5, k={2} vs k={3}; the k²≡-1 pair is a fixed point".into())
}

/// Three factorizations of [[23,-101],[64,-281]] with trivial homology,
/// separated only by their reduced triples.
pub fn simply_connected_family() -> Result<String, String> {
    let fs = [
        fac(&[(1, 1), (2, -3), (3, 1)]),
        fac(&[(2, 5), (1, 0), (3, 1)]),
        fac(&[(3, 8), (0, 1), (2, 1)]),
    ];
    let target = matrix(23, -101, 64, -281);
    for f in &fs {
        ensure(
            f.product() == target,
            format!("product of {f} is {}, expected 23,-101;64,-281", f.product()),
        )?;
    }
    let quoted = [
        (Triple::new(5, 2, -11), TripleTag::Minimal),
        (Triple::new(5, 13, -1), TripleTag::Small),
        (Triple::new(-3, 13, 2), TripleTag::Minimal),
    ];
    for (f, (t, tag)) in fs.iter().zip(&quoted) {
        let class = triple_of(f).map_err(|e| e.to_string())?.reduce();
        ensure(
            class == t.reduce(),
            format!("triple of {f} reduces to {class}, expected the class of {t}"),
        )?;
        ensure(
            class.tag() == *tag,
            format!("triple of {f} has tag {:?}, expected {tag:?}", class.tag()),
        )?;
    }
    for f in &fs {
        ensure(
            h1_quotient(f).is_trivial(),
            format!("homology of {f} is {}, expected 0", h1_quotient(f)),
        )?;
    }
    let report = classify(&fs, &SearchBounds::default()).map_err(|e| e.to_string())?;
    ensure(
        report.classes.len() == 3 && report.undetermined.is_empty(),
        format!("classification found {} classes, expected 3", report.classes.len()),
    )?;
    Ok("homology all trivial; triples minimal/small/minimal split into 3 classes".into())
}

/// Four factorizations of [[13,-56],[49,-211]] whose raw triples and
/// homology are frozen, splitting into four classes.
pub fn torsion_family() -> Result<String, String> {
    let fs = [
        fac(&[(1, 3), (1, 5), (2, 1)]),
        fac(&[(2, 7), (-1, 1), (1, 1)]),
        fac(&[(2, 7), (0, 1), (2, 1)]),
        fac(&[(1, 2), (-2, 1), (3, 1)]),
    ];
    let target = matrix(13, -56, 49, -211);
    for f in &fs {
        ensure(
            f.product() == target,
            format!("product of {f} is {}, expected 13,-56;49,-211", f.product()),
        )?;
    }
    let quoted = [
        Triple::new(-2, 5, 9),
        Triple::new(-9, 5, 2),
        Triple::new(-2, 12, 2),
        Triple::new(-5, 5, 5),
    ];
    for (f, t) in fs.iter().zip(&quoted) {
        let raw = triple_of(f).map_err(|e| e.to_string())?;
        ensure(raw == *t, format!("triple of {f} is {raw}, expected {t}"))?;
    }
    let h: Vec<String> = fs.iter().map(|f| h1_quotient(f).to_string()).collect();
    ensure(
        h == ["0", "0", "Z/2", "Z/5"],
        format!("homology {h:?}, expected [0, 0, Z/2, Z/5]"),
    )?;
    let report = classify(&fs, &SearchBounds::default()).map_err(|e| e.to_string())?;
    ensure(
        report.classes.len() == 4 && report.undetermined.is_empty(),
        format!("classification found {} classes, expected 4", report.classes.len()),
    )?;
    Ok("raw triples frozen; homology 0, 0, Z/2, Z/5; 4 classes".into())
}

/// Bounded enumeration of length-3 positive factorizations of [[9,19],[44,93]]
/// rediscovers all three known presentations.
pub fn search_rediscovery() -> Result<String, String> {
    let start = Instant::now();
    let target = matrix(9, 19, 44, 93);
    let found = enumerate_factorizations(&target, 3, 9);
    let known = [
        fac(&[(1, 1), (8, -3), (7, -3)]),
        fac(&[(1, 2), (3, 1), (3, -1)]),
        fac(&[(1, 3), (2, 1), (3, -1)]),
    ];
    for f in &known {
        ensure(found.contains(f), format!("search missed {f}"))?;
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}, expected under 30s"),
    )?;
    Ok(format!(
        "found {} factorizations within bound 9, all three known ones included; {elapsed:?}",
        found.len()
    ))
}

fn rand_twist(rng: &mut ChaCha8Rng, bound: i64) -> TwistClass {
    loop {
        let p = rng.gen_range(-bound..=bound);
        let q = rng.gen_range(-bound..=bound);
        if let Ok(t) = TwistClass::new(p, q) {
            return t;
        }
    }
}

fn rand_factorization(
    rng: &mut ChaCha8Rng,
    min_len: usize,
    max_len: usize,
    bound: i64,
) -> Factorization {
    let n = rng.gen_range(min_len..=max_len);
    Factorization::new((0..n).map(|_| rand_twist(rng, bound)).collect())
}

fn rand_conjugator(rng: &mut ChaCha8Rng) -> SL2Matrix {
    let mut w = Word::empty();
    for _ in 0..rng.gen_range(0..=4) {
        let gen = if rng.gen_bool(0.5) { Gen::A } else { Gen::B };
        w.push(gen, rng.gen_range(-3i64..=3));
    }
    w.matrix()
}

fn rand_triple(rng: &mut ChaCha8Rng, bound: i64) -> Triple {
    Triple::new(
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

/// Applying the same mutation twice returns the original triple.
pub fn fuzz_mutation_involution() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for case in 0..FUZZ_CASES {
        let t = rand_triple(&mut rng, 1000);
        for position in Position::ALL {
            let back = t.mutate(position).mutate(position);
            ensure(
                back == t,
                format!("case {case}: {t} at {position:?} came back as {back}"),
            )?;
        }
    }
    Ok(format!("{FUZZ_CASES} triples, all three positions each"))
}

/// Scrambling a minimal triple by up to eight random mutations, rotations,
/// and even sign flips never changes its reduced class.
pub fn fuzz_reduction_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    for case in 0..FUZZ_CASES {
        let t = loop {
            let t = rand_triple(&mut rng, 30);
            if t.classify() == TripleShape::Minimal {
                break t;
            }
        };
        let base = t.reduce();
        let mut u = t.clone();
        for _ in 0..rng.gen_range(0..=8) {
            let (x, y, z) = u.entries();
            let (x, y, z) = (x.clone(), y.clone(), z.clone());
            u = match rng.gen_range(0..7) {
                0 => u.mutate(Position::First),
                1 => u.mutate(Position::Second),
                2 => u.mutate(Position::Third),
                3 => Triple::new(y, z, x),
                4 => Triple::new(x, -y, -z),
                5 => Triple::new(-x, y, -z),
                _ => Triple::new(-x, -y, z),
            };
        }
        let class = u.reduce();
        ensure(
            class == base && class.tag() == TripleTag::Minimal,
            format!("case {case}: {t} scrambled to {u} reduced to {class}, expected {base}"),
        )?;
    }
    Ok(format!("{FUZZ_CASES} minimal triples under up to 8 scrambling steps"))
}

/// The structural minimality test agrees with the closed-form criterion
/// `xyz < 0 or 2·max² < |xyz|` on triples with no small entry.
pub fn fuzz_minimality_agreement() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for case in 0..FUZZ_CASES {
        let t = loop {
            let t = rand_triple(&mut rng, 200);
            if !t.is_small() {
                break t;
            }
        };
        let (x, y, z) = t.entries();
        let product = x * y * z;
        let max = x.abs().max(y.abs()).max(z.abs());
        let rule = product.is_negative() || BigInt::from(2) * &max * &max < product.abs();
        let structural = t.classify() == TripleShape::Minimal;
        ensure(
            structural == rule,
            format!("case {case}: {t} classified {:?}, closed form says {rule}", t.classify()),
        )?;
    }
    Ok(format!("{FUZZ_CASES} non-small triples"))
}

/// A single Hurwitz move in either direction preserves the product, length,
/// homology, mod-2 subgroup, the pair class, and the reduced triple class.
pub fn fuzz_move_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    for case in 0..FUZZ_CASES {
        let f = rand_factorization(&mut rng, 2, 6, 10);
        let i = rng.gen_range(1..f.len());
        let g = if rng.gen_bool(0.5) {
            f.hurwitz_move(i)
        } else {
            f.inverse_hurwitz_move(i)
        }
        .expect("index in range");
        ensure(
            g.product() == f.product() && g.len() == f.len(),
            format!("case {case}: move at {i} changed the product or length of {f}"),
        )?;
        ensure(
            h1_quotient(&g) == h1_quotient(&f),
            format!("case {case}: move at {i} changed homology of {f}"),
        )?;
        ensure(
            mod2_subgroup_order(&g) == mod2_subgroup_order(&f),
            format!("case {case}: move at {i} changed the mod-2 order of {f}"),
        )?;
        if f.len() == 2 {
            let (a, b) = (
                pair_class(&f).expect("length 2"),
                pair_class(&g).expect("length 2"),
            );
            ensure(a == b, format!("case {case}: move changed the pair class of {f}"))?;
        }
        if f.len() == 3 {
            let a = triple_of(&f).expect("length 3").reduce();
            let b = triple_of(&g).expect("length 3").reduce();
            ensure(
                a.tag() == b.tag(),
                format!("case {case}: move changed the triple tag of {f}"),
            )?;
            if a.tag() != TripleTag::Small {
                ensure(a == b, format!("case {case}: move changed the triple class of {f}"))?;
            }
        }
    }
    Ok(format!("{FUZZ_CASES} random moves on lengths 2 through 6"))
}

/// The conjugation normal form is invariant under conjugating the input and
/// idempotent.
pub fn fuzz_normal_form() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for case in 0..FUZZ_CASES {
        let f = rand_factorization(&mut rng, 1, 5, 10);
        let psi = rand_conjugator(&mut rng);
        let nf = f.conjugation_normal_form().expect("nonempty");
        let nf2 = f
            .conjugate(&psi)
            .conjugation_normal_form()
            .expect("nonempty");
        ensure(
            nf == nf2,
            format!("case {case}: conjugating {f} by {psi} moved its normal form"),
        )?;
        ensure(
            nf.conjugation_normal_form().expect("nonempty") == nf,
            format!("case {case}: normal form of {f} is not a fixed point"),
        )?;
    }
    Ok(format!("{FUZZ_CASES} factorizations with random conjugators"))
}

/// Brute-force oracle for the homology quotient: count cosets of the column
/// span inside (Z/N)² for a nonzero 2×2 minor N and read the two divisors
/// off the generator orders; rank deficient spans give the free part
/// directly.
fn h1_oracle(f: &Factorization) -> (i64, i64) {
    let cols: Vec<(i64, i64)> = f
        .factors()
        .iter()
        .map(|t| {
            (
                t.p().to_i64().expect("small entry"),
                t.q().to_i64().expect("small entry"),
            )
        })
        .collect();
    let mut minor: i64 = 0;
    'minors: for i in 0..cols.len() {
        for j in (i + 1)..cols.len() {
            let d = cols[i].0 * cols[j].1 - cols[i].1 * cols[j].0;
            if d != 0 {
                minor = d.abs();
                break 'minors;
            }
        }
    }
    if minor == 0 {
        let d = cols
            .iter()
            .fold(0i64, |g, c| g.gcd(&c.0.gcd(&c.1)));
        return (d, 0);
    }
    let n = minor;
    let idx = |x: i64, y: i64| (x.rem_euclid(n) * n + y.rem_euclid(n)) as usize;
    let mut in_span = vec![false; (n * n) as usize];
    in_span[idx(0, 0)] = true;
    let mut frontier = vec![(0i64, 0i64)];
    while let Some((x, y)) = frontier.pop() {
        for c in &cols {
            let nx = (x + c.0).rem_euclid(n);
            let ny = (y + c.1).rem_euclid(n);
            if !in_span[idx(nx, ny)] {
                in_span[idx(nx, ny)] = true;
                frontier.push((nx, ny));
            }
        }
    }
    let span_size = in_span.iter().filter(|b| **b).count() as i64;
    let quotient_size = n * n / span_size;
    let order = |vx: i64, vy: i64| -> i64 {
        (1..=n)
            .find(|k| in_span[idx(k * vx, k * vy)])
            .expect("n annihilates the quotient")
    };
    let d2 = order(1, 0).lcm(&order(0, 1));
    let d1 = quotient_size / d2;
    assert_eq!(d1 * d2, quotient_size, "generator orders inconsistent");
    assert_eq!(d2 % d1, 0, "divisor chain broken");
    (d1, d2)
}

/// The homology quotient matches an independent coset-counting oracle on
/// small inputs, including rank-deficient and empty ones.
pub fn fuzz_homology_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    for case in 0..FUZZ_CASES {
        let f = rand_factorization(&mut rng, 0, 5, 5);
        let (d1, d2) = h1_oracle(&f);
        let q = h1_quotient(&f);
        let (q1, q2) = q.divisors();
        ensure(
            *q1 == BigInt::from(d1) && *q2 == BigInt::from(d2),
            format!("case {case}: {f} gave {q} but the oracle counted ({d1}, {d2})"),
        )?;
    }
    Ok(format!("{FUZZ_CASES} factorizations with entries up to 5"))
}

/// For every n ≤ 12 and every k coprime to n, the pair class of
/// [(k,n),(1,0)] is (n, {k, -k⁻¹ mod n}) and its conjugation-reduced orbit
/// is exactly the normal forms indexed by that set.
pub fn pair_rule_exhaustive() -> Result<String, String> {
    let bounds = SearchBounds {
        depth: 12,
        coeff_bound: u64::MAX,
        node_budget: 1_000_000,
    };
    let mut cases = 0usize;
    for n in 1i64..=12 {
        for k in 1..=n {
            if k.gcd(&n) != 1 {
                continue;
            }
            cases += 1;
            let f = fac(&[(k, n), (1, 0)]);
            let inverse = (0..n)
                .find(|j| (k * j).rem_euclid(n) == 1 % n)
                .expect("k is invertible mod n");
            let expected: BTreeSet<BigInt> = [k.rem_euclid(n), (n - inverse).rem_euclid(n)]
                .into_iter()
                .map(BigInt::from)
                .collect();
            let invariant = pair_class(&f).map_err(|e| e.to_string())?;
            let PairInvariant::Class(class) = &invariant else {
                return Err(format!("pair {f} reported parallel classes"));
            };
            ensure(
                *class.n() == BigInt::from(n) && class.k_set() == &expected,
                format!("pair {f} has class {invariant}, expected n={n}, k={expected:?}"),
            )?;
            let orbit = hurwitz_orbit(&f, &bounds, true);
            ensure(
                !orbit.truncated && !orbit.pruned,
                format!("orbit of {f} was cut short; it must close up on its own"),
            )?;
            let expected_orbit: BTreeSet<Factorization> = expected
                .iter()
                .map(|j| {
                    Factorization::new(vec![
                        TwistClass::new(1, 0).expect("primitive"),
                        TwistClass::new(j.clone(), BigInt::from(n)).expect("primitive"),
                    ])
                })
                .collect();
            ensure(
                orbit.members == expected_orbit,
                format!(
                    "orbit of {f} has members {:?}, expected normal forms for k set {expected:?}",
                    orbit.members
                ),
            )?;
            for member in &orbit.members {
                let here = pair_class(member).map_err(|e| e.to_string())?;
                ensure(
                    here == invariant,
                    format!("orbit member {member} has class {here}, expected {invariant}"),
                )?;
            }
        }
    }
    Ok(format!("{cases} coprime pairs across n = 1..=12, orbits fully closed"))
}
