//! Text and JSON formats used by the command-line tool.
//!
//! Factorizations are written `p,q;p,q;...` (the empty string is the empty
//! factorization), matrices `a,b;c,d`. Parse errors always name the
//! offending token. JSON output keeps every integer exact: values that fit
//! in 64 bits are emitted as numbers, anything larger as a decimal string.

use lefschetz::{
    ClassEntry, ClassificationReport, Factorization, Orbit, SL2Matrix, Triple, TripleClass,
    TwistClass,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Parses `p,q;p,q;...`; whitespace around tokens is ignored and the empty
/// (or all-whitespace) string denotes the empty factorization.
pub fn parse_factorization(s: &str) -> Result<Factorization, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Factorization::empty());
    }
    let mut factors = Vec::new();
    for token in trimmed.split(';') {
        factors.push(parse_class(token)?);
    }
    Ok(Factorization::new(factors))
}

fn parse_class(token: &str) -> Result<TwistClass, String> {
    let inner = token.trim();
    let mut parts = inner.split(',');
    let (Some(p), Some(q), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(format!("invalid class '{inner}': expected 'p,q'"));
    };
    let p = parse_int(p).map_err(|e| format!("invalid class '{inner}': {e}"))?;
    let q = parse_int(q).map_err(|e| format!("invalid class '{inner}': {e}"))?;
    TwistClass::new(p, q).map_err(|e| format!("invalid class '{inner}': {e}"))
}

/// Parses `a,b;c,d` and checks the determinant.
pub fn parse_matrix(s: &str) -> Result<SL2Matrix, String> {
    let inner = s.trim();
    let mut rows = inner.split(';');
    let (Some(top), Some(bottom), None) = (rows.next(), rows.next(), rows.next()) else {
        return Err(format!("invalid matrix '{inner}': expected 'a,b;c,d'"));
    };
    let parse_row = |row: &str| -> Result<(BigInt, BigInt), String> {
        let mut parts = row.split(',');
        let (Some(x), Some(y), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("invalid row '{}': expected two entries", row.trim()));
        };
        Ok((parse_int(x)?, parse_int(y)?))
    };
    let (a, b) = parse_row(top)?;
    let (c, d) = parse_row(bottom)?;
    SL2Matrix::new(a, b, c, d).map_err(|e| format!("invalid matrix '{inner}': {e}"))
}

/// Parses a (possibly huge) signed decimal integer.
pub fn parse_int(s: &str) -> Result<BigInt, String> {
    let inner = s.trim();
    inner
        .parse::<BigInt>()
        .map_err(|_| format!("'{inner}' is not an integer"))
}

/// One exact integer: a JSON number when it fits in 64 bits, otherwise a
/// decimal string.
pub fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

pub fn matrix_value(m: &SL2Matrix) -> Value {
    let [a, b, c, d] = m.entries();
    json!([[int_value(a), int_value(b)], [int_value(c), int_value(d)]])
}

/// A factorization as an array of `[p, q]` pairs.
pub fn factorization_value(f: &Factorization) -> Value {
    Value::Array(
        f.factors()
            .iter()
            .map(|t| json!([int_value(t.p()), int_value(t.q())]))
            .collect(),
    )
}

pub fn triple_value(t: &Triple) -> Value {
    let (x, y, z) = t.entries();
    json!([int_value(x), int_value(y), int_value(z)])
}

pub fn triple_class_value(c: &TripleClass) -> Value {
    json!({
        "tag": match c.tag() {
            lefschetz::TripleTag::Small => "small",
            lefschetz::TripleTag::Minimal => "minimal",
            lefschetz::TripleTag::WeaklyMinimal => "weakly-minimal",
        },
        "representative": triple_value(c.representative()),
        "display": c.to_string(),
    })
}

pub fn orbit_value(orbit: &Orbit) -> Value {
    json!({
        "count": orbit.members.len(),
        "members": orbit.members.iter().map(factorization_value).collect::<Vec<_>>(),
        "truncated": orbit.truncated,
        "pruned": orbit.pruned,
    })
}

fn class_entry_value(entry: &ClassEntry) -> Value {
    let mut obj = json!({
        "rep": factorization_value(&entry.representative),
        "h1": entry.homology.to_string(),
        "mod2_order": entry.mod2_order,
        "count": entry.members.len(),
    });
    if let Some(t) = &entry.triple {
        obj["triple"] = json!(t.to_string());
    }
    if let Some(p) = &entry.pair {
        obj["pair"] = json!(p.to_string());
    }
    obj
}

pub fn report_value(report: &ClassificationReport) -> Value {
    json!({
        "classes": report.classes.iter().map(class_entry_value).collect::<Vec<_>>(),
        "undetermined": report
            .undetermined
            .iter()
            .map(|(a, b)| json!([factorization_value(a), factorization_value(b)]))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_strings() {
        for s in ["", "1,0", "-3,1;0,1;3,1;1,0", "-8,3;-7,3"] {
            let f = parse_factorization(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn tolerates_whitespace() {
        let f = parse_factorization(" 1,2 ; 3,1 ").unwrap();
        assert_eq!(f.to_string(), "1,2;3,1");
        assert_eq!(parse_factorization("  ").unwrap(), Factorization::empty());
    }

    #[test]
    fn names_the_offending_token() {
        let err = parse_factorization("1,0;;2,1").unwrap_err();
        assert!(err.contains("''"), "unexpected message: {err}");
        let err = parse_factorization("1,0;2;3,1").unwrap_err();
        assert!(err.contains("'2'"), "unexpected message: {err}");
        let err = parse_factorization("1,x").unwrap_err();
        assert!(err.contains("'x'"), "unexpected message: {err}");
        let err = parse_factorization("2,4").unwrap_err();
        assert!(err.contains("primitive"), "unexpected message: {err}");
        let err = parse_factorization("1,2,3").unwrap_err();
        assert!(err.contains("'1,2,3'"), "unexpected message: {err}");
    }

    #[test]
    fn parses_matrices_and_rejects_bad_determinants() {
        let m = parse_matrix("9,19;44,93").unwrap();
        assert_eq!(m.to_string(), "9,19;44,93");
        let err = parse_matrix("1,0;0,2").unwrap_err();
        assert!(err.contains("determinant"), "unexpected message: {err}");
        let err = parse_matrix("1,0,0;0,1").unwrap_err();
        assert!(err.contains("two entries"), "unexpected message: {err}");
    }

    #[test]
    fn big_integers_become_strings() {
        let small = BigInt::from(-42);
        assert_eq!(int_value(&small), json!(-42));
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int_value(&big), json!("123456789012345678901234567890"));
    }

    #[test]
    fn factorization_json_shape() {
        let f = parse_factorization("1,2;-2,1").unwrap();
        assert_eq!(factorization_value(&f), json!([[1, 2], [-2, 1]]));
    }
}
