//! Command-line front end for working with positive twist factorizations.
//!
//! Exit codes: 0 for success (including "equivalent"), 1 for a negative
//! verdict or failed verification suite, 2 when a search stayed
//! undetermined within its bounds, 3 for malformed input.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use lefschetz::{
    classify, enumerate_factorizations, equivalent, euler_characteristic, h1_quotient,
    hurwitz_orbit, mod2_subgroup_order, pair_class, triple_of, Equivalence, Factorization,
    SearchBounds, Triple,
};
use lefschetz_cli::{fmt, verify};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Exact search and invariants for positive twist factorizations in SL(2,Z)"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of move rounds a search may explore.
    #[arg(long, global = true, default_value_t = 12)]
    depth: usize,

    /// Discard factorizations whose class entries exceed this bound.
    #[arg(long, global = true, default_value_t = 64)]
    coeff_bound: u64,

    /// Maximum number of states a search may keep.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    node_budget: usize,

    /// Fold global conjugation away before comparing orbit members.
    #[arg(long, global = true)]
    modulo_conjugation: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in reproduction suite and print a PASS/FAIL table.
    VerifyPaper,
    /// Product matrix, homology, and companion invariants of a factorization.
    Invariants {
        /// Factorization as 'p,q;p,q;...' (empty string for the empty one).
        #[arg(allow_hyphen_values = true)]
        factorization: String,
    },
    /// Just the product matrix.
    Product {
        #[arg(allow_hyphen_values = true)]
        factorization: String,
    },
    /// Enumerate the Hurwitz orbit within the search bounds.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        factorization: String,
    },
    /// Decide whether two factorizations are connected by Hurwitz moves.
    Equivalent {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Reduce an intersection triple to its canonical class.
    ReduceTriple {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Enumerate positive factorizations of a matrix with a given length.
    Search {
        /// Target matrix as 'a,b;c,d'.
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        /// Number of factors.
        length: usize,
    },
    /// Partition factorizations of one element into equivalence classes.
    Classify {
        /// Two or more 'p,q;...' strings; prefix the list with '--' when a
        /// factorization starts with a minus sign.
        #[arg(num_args = 1..)]
        factorizations: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn bounds_of(cli: &Cli) -> SearchBounds {
    SearchBounds {
        depth: cli.depth,
        coeff_bound: cli.coeff_bound,
        node_budget: cli.node_budget,
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::VerifyPaper => Ok(run_verify(cli)),
        Command::Invariants { factorization } => {
            let f = fmt::parse_factorization(factorization)?;
            run_invariants(cli, &f)
        }
        Command::Product { factorization } => {
            let f = fmt::parse_factorization(factorization)?;
            if cli.json {
                println!("{}", json!({ "matrix": fmt::matrix_value(&f.product()) }));
            } else {
                println!("{}", f.product());
            }
            Ok(0)
        }
        Command::Orbit { factorization } => {
            let f = fmt::parse_factorization(factorization)?;
            let orbit = hurwitz_orbit(&f, &bounds_of(cli), cli.modulo_conjugation);
            if cli.json {
                println!("{}", fmt::orbit_value(&orbit));
            } else {
                println!(
                    "{} members (truncated: {}, pruned: {})",
                    orbit.members.len(),
                    orbit.truncated,
                    orbit.pruned
                );
                for member in &orbit.members {
                    println!("{member}");
                }
            }
            Ok(0)
        }
        Command::Equivalent { left, right } => {
            let f1 = fmt::parse_factorization(left)?;
            let f2 = fmt::parse_factorization(right)?;
            run_equivalent(cli, &f1, &f2)
        }
        Command::ReduceTriple { x, y, z } => {
            let t = Triple::new(fmt::parse_int(x)?, fmt::parse_int(y)?, fmt::parse_int(z)?);
            let class = t.reduce();
            if cli.json {
                println!("{}", fmt::triple_class_value(&class));
            } else {
                println!("{class}");
            }
            Ok(0)
        }
        Command::Search { matrix, length } => {
            let target = fmt::parse_matrix(matrix)?;
            let found = enumerate_factorizations(&target, *length, cli.coeff_bound);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "target": fmt::matrix_value(&target),
                        "length": length,
                        "coeff_bound": cli.coeff_bound,
                        "count": found.len(),
                        "factorizations": found
                            .iter()
                            .map(fmt::factorization_value)
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "{} factorizations of length {length} within coefficient bound {} \
                     (no completeness claim beyond the bound)",
                    found.len(),
                    cli.coeff_bound
                );
                for f in &found {
                    println!("{f}");
                }
            }
            Ok(0)
        }
        Command::Classify { factorizations } => {
            let fs = factorizations
                .iter()
                .map(|s| fmt::parse_factorization(s))
                .collect::<Result<Vec<_>, _>>()?;
            let report = classify(&fs, &bounds_of(cli)).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", fmt::report_value(&report));
            } else {
                for (i, class) in report.classes.iter().enumerate() {
                    let mut line = format!(
                        "class {}: {} — h1 {}, mod-2 order {}",
                        i + 1,
                        class.representative,
                        class.homology,
                        class.mod2_order
                    );
                    if let Some(t) = &class.triple {
                        line.push_str(&format!(", triple {t}"));
                    }
                    if let Some(p) = &class.pair {
                        line.push_str(&format!(", pair {p}"));
                    }
                    line.push_str(&format!(" ({} members)", class.members.len()));
                    println!("{line}");
                }
                for (a, b) in &report.undetermined {
                    println!("undetermined: {a} vs {b}");
                }
            }
            Ok(if report.undetermined.is_empty() { 0 } else { 2 })
        }
    }
}

fn run_verify(cli: &Cli) -> u8 {
    let results = verify::run_all();
    let all_passed = results.iter().all(|r| r.passed);
    if cli.json {
        println!(
            "{}",
            json!({
                "passed": all_passed,
                "checks": results
                    .iter()
                    .map(|r| json!({
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    }))
                    .collect::<Vec<_>>(),
            })
        );
    } else {
        let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &results {
            println!(
                "{} {:width$} — {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            );
        }
        println!(
            "{} of {} checks passed",
            results.iter().filter(|r| r.passed).count(),
            results.len()
        );
    }
    u8::from(!all_passed)
}

fn run_invariants(cli: &Cli, f: &Factorization) -> Result<u8, String> {
    let product = f.product();
    let h1 = h1_quotient(f);
    let mod2 = mod2_subgroup_order(f);
    let triple = (f.len() == 3).then(|| triple_of(f).expect("length 3").reduce());
    let pair = (f.len() == 2).then(|| pair_class(f).expect("length 2"));
    if cli.json {
        let mut obj = json!({
            "product": fmt::matrix_value(&product),
            "length": f.len(),
            "euler_characteristic": euler_characteristic(f),
            "h1": h1.to_string(),
            "mod2_order": mod2,
        });
        if let Some(t) = &triple {
            obj["triple"] = fmt::triple_class_value(t);
        }
        if let Some(p) = &pair {
            obj["pair"] = json!(p.to_string());
        }
        println!("{obj}");
    } else {
        println!("product: {product}");
        println!("length: {}", f.len());
        println!("euler characteristic: {}", euler_characteristic(f));
        println!("h1: {h1}");
        println!("mod-2 order: {mod2}");
        if let Some(t) = &triple {
            println!("triple: {t}");
        }
        if let Some(p) = &pair {
            println!("pair: {p}");
        }
    }
    Ok(0)
}

fn run_equivalent(cli: &Cli, f1: &Factorization, f2: &Factorization) -> Result<u8, String> {
    let verdict = equivalent(f1, f2, &bounds_of(cli));
    if cli.json {
        let value = match &verdict {
            Equivalence::Equivalent(cert) => json!({
                "verdict": "equivalent",
                "certificate": {
                    "left": cert.left_moves.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "right": cert.right_moves.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                },
            }),
            Equivalence::Inequivalent(w) => json!({
                "verdict": "inequivalent",
                "witness": w.to_string(),
            }),
            Equivalence::Undetermined => json!({ "verdict": "undetermined" }),
        };
        println!("{value}");
    } else {
        match &verdict {
            Equivalence::Equivalent(cert) => {
                println!("equivalent");
                let moves = |ms: &[lefschetz::Move]| {
                    if ms.is_empty() {
                        "(none)".to_string()
                    } else {
                        ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
                    }
                };
                println!("left moves: {}", moves(&cert.left_moves));
                println!("right moves: {}", moves(&cert.right_moves));
            }
            Equivalence::Inequivalent(w) => println!("inequivalent (witness: {w})"),
            Equivalence::Undetermined => println!("undetermined within the given bounds"),
        }
    }
    Ok(match verdict {
        Equivalence::Equivalent(_) => 0,
        Equivalence::Inequivalent(_) => 1,
        Equivalence::Undetermined => 2,
    })
}
