//! Command-line entry point: `verify` runs named check suites, `curve`
//! prints the exact invariants of one curve, and `apply` performs a
//! coordinate change and confirms the discriminant covariance on the
//! result. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use picard_lab::parse::{parse_curve, parse_transform, ParsedCurve, ParsedTransform};
use picard_lab::suites::{
    render_json, render_text, run_suites, validate_options, CohomologyGroup, Suite,
    VerifyOptions,
};
use picard_lab::weierstrass::CurveKind;

#[derive(Parser)]
#[command(name = "picard-lab", version, about = "Exact checks for Weierstrass models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite, or `all`.
    Verify {
        /// invariants | transforms | aut-characters | char3-legendre |
        /// char2-hesse | cohomology | all
        suite: String,
        /// Series truncation order for the series-backed suites.
        #[arg(long, default_value_t = 24)]
        precision: usize,
        /// Seed for the randomized identity checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Group for the cohomology suite: s3 | sl2f3 | z2-trivial.
        #[arg(long, default_value = "sl2f3")]
        group: String,
        /// Emit one JSON record per check instead of the text table.
        #[arg(long)]
        json: bool,
    },
    /// Print the exact invariants of a curve `a1,a2,a3,a4,a6@ring`.
    Curve {
        /// Curve spec, e.g. `0,0,0,1,0@Z`, `0,0,1,0,0@F7`, `a1,a2,a3,a4,a6@sym`.
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Apply a coordinate change `u,r,s,t@ring` to a curve over the same ring.
    Apply {
        /// Curve spec in the shared ring.
        #[arg(allow_hyphen_values = true)]
        curve: String,
        /// Transform spec in the shared ring.
        #[arg(allow_hyphen_values = true)]
        transform: String,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn kv(name: &str, value: impl fmt::Display) {
    println!("{name:<14}{value}");
}

/// Exact 64-bit invariant arithmetic is guaranteed only for small integer
/// entries: the discriminant is degree 5 in them and j needs their 12th
/// powers (computed in 128 bits).
const INT_ENTRY_BOUND: i64 = 100;

fn within_exact_range(values: &[i64]) -> bool {
    values.iter().all(|v| v.abs() <= INT_ENTRY_BOUND)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn verify(suite: &str, precision: usize, seed: u64, group: &str, json: bool) -> ExitCode {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match Suite::from_name(suite) {
            Some(s) => vec![s],
            None => {
                return usage_error(&format!(
                    "unknown suite '{suite}' (expected invariants, transforms, \
                     aut-characters, char3-legendre, char2-hesse, cohomology, or all)"
                ))
            }
        }
    };
    let group = match CohomologyGroup::from_name(group) {
        Some(g) => g,
        None => {
            return usage_error(&format!(
                "unknown group '{group}' (expected s3, sl2f3, or z2-trivial)"
            ))
        }
    };
    let opts = VerifyOptions { precision, seed, group };
    if let Err(message) = validate_options(&suites, &opts) {
        return usage_error(&message);
    }
    let results = run_suites(&suites, &opts);
    print!("{}", if json { render_json(&results) } else { render_text(&results) });
    if results.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn curve(spec: &str) -> ExitCode {
    let parsed = match parse_curve(spec) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("bad curve spec: {e}")),
    };
    match parsed {
        ParsedCurve::Int(c) => {
            if !within_exact_range(&[c.a1, c.a2, c.a3, c.a4, c.a6]) {
                return usage_error(&format!(
                    "integer entries must satisfy |a| ≤ {INT_ENTRY_BOUND} to keep the \
                     invariants exact"
                ));
            }
            kv("ring", "Z");
            kv(
                "coefficients",
                format!("a1={} a2={} a3={} a4={} a6={}", c.a1, c.a2, c.a3, c.a4, c.a6),
            );
            let (b2, b4, b6, b8) = c.b_invariants();
            kv("b-invariants", format!("b2={b2} b4={b4} b6={b6} b8={b8}"));
            kv("c4", c.c4());
            kv("c6", c.c6());
            let delta = c.discriminant();
            kv("discriminant", delta);
            let kind = if delta != 0 {
                CurveKind::Smooth
            } else if c.c4() != 0 {
                CurveKind::Nodal
            } else {
                CurveKind::Cuspidal
            };
            kv("kind", kind);
            if delta == 0 {
                kv("j", "undefined (Δ = 0)");
            } else {
                let num = (c.c4() as i128).pow(3);
                let den = delta as i128;
                if num % den == 0 {
                    kv("j", num / den);
                } else {
                    let g = gcd(num, den);
                    let (mut num, mut den) = (num / g, den / g);
                    if den < 0 {
                        num = -num;
                        den = -den;
                    }
                    kv("j", format!("{num}/{den}"));
                }
            }
        }
        ParsedCurve::Fq(c) => {
            kv("ring", c.a1.field());
            kv(
                "coefficients",
                format!("a1={} a2={} a3={} a4={} a6={}", c.a1, c.a2, c.a3, c.a4, c.a6),
            );
            let (b2, b4, b6, b8) = c.b_invariants();
            kv("b-invariants", format!("b2={b2} b4={b4} b6={b6} b8={b8}"));
            kv("c4", c.c4());
            kv("c6", c.c6());
            kv("discriminant", c.discriminant());
            kv("kind", c.classify());
            match c.j_invariant() {
                Some(j) => kv("j", j),
                None => kv("j", "undefined (Δ = 0)"),
            }
        }
        ParsedCurve::Sym(c) => {
            kv("ring", "Z[coefficients]");
            kv("a1", &c.a1);
            kv("a2", &c.a2);
            kv("a3", &c.a3);
            kv("a4", &c.a4);
            kv("a6", &c.a6);
            let (b2, b4, b6, b8) = c.b_invariants();
            kv("b2", b2);
            kv("b4", b4);
            kv("b6", b6);
            kv("b8", b8);
            kv("c4", c.c4());
            kv("c6", c.c6());
            kv("discriminant", c.discriminant());
            match c.j_fraction() {
                Some(j) => kv("j", j),
                None => kv("j", "undefined (Δ = 0)"),
            }
        }
    }
    ExitCode::SUCCESS
}

fn apply(curve_spec: &str, transform_spec: &str) -> ExitCode {
    let curve = match parse_curve(curve_spec) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("bad curve spec: {e}")),
    };
    let transform = match parse_transform(transform_spec) {
        Ok(g) => g,
        Err(e) => return usage_error(&format!("bad transform spec: {e}")),
    };
    let covariant = match (curve, transform) {
        (ParsedCurve::Int(c), ParsedTransform::Int(g)) => {
            let entries = [c.a1, c.a2, c.a3, c.a4, c.a6, g.r, g.s, g.t];
            if !within_exact_range(&entries) {
                return usage_error(&format!(
                    "integer entries must satisfy |value| ≤ {INT_ENTRY_BOUND} to keep the \
                     transformed invariants exact"
                ));
            }
            let moved = g.apply(&c);
            kv("transform", format!("(u, r, s, t) = ({}, {}, {}, {})", g.u, g.r, g.s, g.t));
            kv(
                "coefficients",
                format!(
                    "a1={} a2={} a3={} a4={} a6={}",
                    moved.a1, moved.a2, moved.a3, moved.a4, moved.a6
                ),
            );
            kv("discriminant", moved.discriminant());
            moved.discriminant() == g.u.pow(12) * c.discriminant()
        }
        (ParsedCurve::Fq(c), ParsedTransform::Fq(g)) => {
            if c.a1.field() != g.u.field() {
                return usage_error("curve and transform must name the same ring");
            }
            let moved = g.apply(&c);
            kv("transform", format!("(u, r, s, t) = ({}, {}, {}, {})", g.u, g.r, g.s, g.t));
            kv(
                "coefficients",
                format!(
                    "a1={} a2={} a3={} a4={} a6={}",
                    moved.a1, moved.a2, moved.a3, moved.a4, moved.a6
                ),
            );
            kv("discriminant", moved.discriminant());
            moved.discriminant() == g.u.pow(12) * c.discriminant()
        }
        (ParsedCurve::Sym(c), ParsedTransform::Sym(g)) => {
            let moved = g.apply(&c);
            kv("transform", format!("(u, r, s, t) = ({}, {}, {}, {})", g.u, g.r, g.s, g.t));
            kv("a1", &moved.a1);
            kv("a2", &moved.a2);
            kv("a3", &moved.a3);
            kv("a4", &moved.a4);
            kv("a6", &moved.a6);
            moved.discriminant() == g.u.pow(12).mul(&c.discriminant())
        }
        _ => return usage_error("curve and transform must name the same ring"),
    };
    if covariant {
        kv("covariance", "Δ′ = u¹²·Δ holds exactly");
        ExitCode::SUCCESS
    } else {
        kv("covariance", "FAILED: Δ′ ≠ u¹²·Δ");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { suite, precision, seed, group, json } => {
            verify(&suite, precision, seed, &group, json)
        }
        Command::Curve { spec } => curve(&spec),
        Command::Apply { curve: c, transform: g } => apply(&c, &g),
    }
}
