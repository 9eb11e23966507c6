//! Named verification suites behind the `verify` subcommand.
//!
//! Each suite runs a family of exact checks and reports one
//! [`CheckRecord`] per check. Output is deterministic: given the same
//! suite, precision, and seed, the records (and their JSON rendering) are
//! byte-identical — wall time lives only on [`SuiteResult`] for the text
//! renderer and never enters the structured output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::multipoly::{MultiPoly, RingTag, Var};
use crate::autgroups::{differential_character, enumerate_automorphisms, AutError, ChiPair};
use crate::cohomology::{
    cocycle_space, coboundaries, elimination_check_char2, elimination_check_char3, h1,
    xi_beta2_analysis,
};
use crate::families::actions::{
    gl2f3_action_check, s3_action, sl2f3_series_action, z2_trivial_action, ActionError,
    SeriesAction,
};
use crate::families::hesse::{hesse_curve_to_weierstrass, hesse_torsion_points_check};
use crate::families::legendre::{legendre_curve, legendre_j_check};
use crate::ring::{Fraction, Ring};
use crate::transform::{
    action_axiom_check, associativity_check, c4_covariance_holds, decomposition_identity_holds,
    delta_covariance_holds, delta_pi_invariance_holds, differential_covariance_holds,
    j_invariance_holds, kernel_generation_check, Character, Transform, UnitOnU,
};
use crate::weierstrass::{CurveKind, WeierstrassCurve};

/// Pass/fail status of one check, rendered as `"pass"` / `"fail"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named check inside a suite. Field order is the structured-output
/// key order: {suite, check, status, detail}.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub check: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

/// All checks of one suite plus the wall time of the run.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: Vec<CheckRecord>,
    pub wall: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }
}

/// The named suites, in their fixed execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Invariants,
    Transforms,
    AutCharacters,
    Char3Legendre,
    Char2Hesse,
    Cohomology,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Invariants,
        Suite::Transforms,
        Suite::AutCharacters,
        Suite::Char3Legendre,
        Suite::Char2Hesse,
        Suite::Cohomology,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Invariants => "invariants",
            Suite::Transforms => "transforms",
            Suite::AutCharacters => "aut-characters",
            Suite::Char3Legendre => "char3-legendre",
            Suite::Char2Hesse => "char2-hesse",
            Suite::Cohomology => "cohomology",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// Group selector for the cohomology suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohomologyGroup {
    S3,
    Sl2F3,
    Z2Trivial,
}

impl CohomologyGroup {
    pub fn name(self) -> &'static str {
        match self {
            CohomologyGroup::S3 => "s3",
            CohomologyGroup::Sl2F3 => "sl2f3",
            CohomologyGroup::Z2Trivial => "z2-trivial",
        }
    }

    pub fn from_name(name: &str) -> Option<CohomologyGroup> {
        [CohomologyGroup::S3, CohomologyGroup::Sl2F3, CohomologyGroup::Z2Trivial]
            .into_iter()
            .find(|g| g.name() == name)
    }
}

/// Options shared by every suite run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Series truncation order for the series-backed suites.
    pub precision: usize,
    /// Seed for the randomized identity checks.
    pub seed: u64,
    /// Group for the cohomology suite.
    pub group: CohomologyGroup,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { precision: 24, seed: 0, group: CohomologyGroup::Sl2F3 }
    }
}

/// Smallest precision a suite accepts: the characteristic-2 series window
/// needs 12 coefficients, the characteristic-3 window needs 6, and the
/// precision-independent suites only need a nonempty module.
pub fn minimum_precision(suite: Suite, group: CohomologyGroup) -> usize {
    match suite {
        Suite::Invariants | Suite::Transforms | Suite::AutCharacters => 1,
        Suite::Char3Legendre => 6,
        Suite::Char2Hesse => 12,
        Suite::Cohomology => match group {
            CohomologyGroup::S3 => 6,
            CohomologyGroup::Sl2F3 => 12,
            CohomologyGroup::Z2Trivial => 1,
        },
    }
}

/// Checks the precision bounds for every requested suite; an `Err` is a
/// usage error for the CLI to report.
pub fn validate_options(suites: &[Suite], opts: &VerifyOptions) -> Result<(), String> {
    for &suite in suites {
        let min = minimum_precision(suite, opts.group);
        if opts.precision < min {
            return Err(format!(
                "suite '{}' needs --precision at least {min}, got {}",
                suite.name(),
                opts.precision
            ));
        }
    }
    Ok(())
}

fn record(suite: &'static str, check: &'static str, ok: bool, detail: String) -> CheckRecord {
    CheckRecord {
        suite,
        check,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail,
    }
}

/// Runs one suite and stamps the wall time.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteResult {
    let start = Instant::now();
    let checks = match suite {
        Suite::Invariants => invariants_checks(),
        Suite::Transforms => transforms_checks(opts),
        Suite::AutCharacters => aut_characters_checks(),
        Suite::Char3Legendre => char3_legendre_checks(),
        Suite::Char2Hesse => char2_hesse_checks(),
        Suite::Cohomology => cohomology_checks(opts),
    };
    SuiteResult { suite: suite.name(), checks, wall: start.elapsed() }
}

/// Runs suites in order and collects their results.
pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Vec<SuiteResult> {
    suites.iter().map(|&s| run_suite(s, opts)).collect()
}

/// One JSON object per check, one per line, in deterministic order.
pub fn render_json(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for result in results {
        for check in &result.checks {
            out.push_str(&serde_json::to_string(check).expect("check records serialize"));
            out.push('\n');
        }
    }
    out
}

/// Aligned text table with per-suite wall times and a final summary.
pub fn render_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    let mut total = 0usize;
    let mut failed = 0usize;
    for result in results {
        let _ = writeln!(
            out,
            "suite {} ({} checks, {} ms)",
            result.suite,
            result.checks.len(),
            result.wall.as_millis()
        );
        let width =
            result.checks.iter().map(|c| c.check.chars().count()).max().unwrap_or(0);
        for check in &result.checks {
            total += 1;
            let mark = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => {
                    failed += 1;
                    "FAIL"
                }
            };
            let pad = " ".repeat(width - check.check.chars().count());
            let _ = writeln!(out, "  {mark}  {}{pad}  {}", check.check, check.detail);
        }
    }
    if failed == 0 {
        let _ = writeln!(out, "all {total} checks passed");
    } else {
        let _ = writeln!(out, "{failed} of {total} checks FAILED");
    }
    out
}

fn invariants_checks() -> Vec<CheckRecord> {
    let suite = "invariants";
    let mut checks = Vec::new();

    let quartic = WeierstrassCurve::new(0i64, 0, 0, 1, 0);
    checks.push(record(
        suite,
        "quartic anchor invariants",
        quartic.discriminant() == -64 && quartic.c4() == -48,
        format!(
            "y² = x³ + x over ℤ: Δ = {}, c4 = {}",
            quartic.discriminant(),
            quartic.c4()
        ),
    ));

    let c4_cubed = quartic.c4().pow(3);
    let delta = quartic.discriminant();
    let exact = c4_cubed % delta == 0 && c4_cubed / delta == 1728;
    let mod13 = WeierstrassCurve::over_field(Field::F13, [0, 0, 0, 1, 0])
        .j_invariant()
        .map(|j| j == Field::F13.from_int(1728));
    checks.push(record(
        suite,
        "quartic anchor j-invariant",
        exact && mod13 == Some(true),
        format!("j = c4³/Δ = {} exactly; over F13 it reduces to 12", c4_cubed / delta),
    ));

    let sextic = WeierstrassCurve::new(0i64, 0, 1, 0, 0);
    checks.push(record(
        suite,
        "sextic anchor invariants",
        sextic.discriminant() == -27 && sextic.c4() == 0,
        format!(
            "y² + y = x³ over ℤ: Δ = {}, c4 = {}, so j = 0",
            sextic.discriminant(),
            sextic.c4()
        ),
    ));

    let generic = WeierstrassCurve::generic_symbolic(RingTag::Int);
    let (b2, b4, b6, b8) = generic.b_invariants();
    let b_identity = b8.scale_int(4) == b2.mul(&b6).sub(&b4.mul(&b4));
    checks.push(record(
        suite,
        "b-invariant identity",
        b_identity,
        "4·b8 = b2·b6 − b4² for indeterminate coefficients".to_string(),
    ));

    let c4 = generic.c4();
    let c6 = generic.c6();
    let c_identity =
        c4.pow_u(3).sub(&c6.pow_u(2)) == generic.discriminant().scale_int(1728);
    checks.push(record(
        suite,
        "c-invariant identity",
        c_identity,
        "c4³ − c6² = 1728·Δ for indeterminate coefficients".to_string(),
    ));

    let smooth = WeierstrassCurve::over_field(Field::F5, [0, 0, 0, 1, 0]).classify();
    let nodal = WeierstrassCurve::over_field(Field::F5, [0, 1, 0, 0, 0]).classify();
    let cuspidal = WeierstrassCurve::over_field(Field::F5, [0, 0, 0, 0, 0]).classify();
    checks.push(record(
        suite,
        "classification by discriminant and c4",
        smooth == CurveKind::Smooth
            && nodal == CurveKind::Nodal
            && cuspidal == CurveKind::Cuspidal,
        format!(
            "over F5: y² = x³ + x is {smooth}, y² = x³ + x² is {nodal}, y² = x³ is {cuspidal}"
        ),
    ));

    checks
}

fn transforms_checks(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let suite = "transforms";
    let mut checks = Vec::new();

    checks.push(record(
        suite,
        "discriminant covariance",
        delta_covariance_holds(),
        "Δ of the transformed generic curve equals u¹²·Δ as polynomials".to_string(),
    ));
    checks.push(record(
        suite,
        "c4 covariance",
        c4_covariance_holds(),
        "c4 of the transformed generic curve equals u⁴·c4".to_string(),
    ));
    checks.push(record(
        suite,
        "j invariance",
        j_invariance_holds(),
        "j of the transformed generic curve equals j as a fraction".to_string(),
    ));
    checks.push(record(
        suite,
        "differential covariance",
        differential_covariance_holds(),
        "the invariant differential rescales by exactly u⁻¹".to_string(),
    ));
    checks.push(record(
        suite,
        "discriminant-differential invariance",
        delta_pi_invariance_holds(),
        "Δ·π¹² is unchanged by the generic coordinate change".to_string(),
    ));
    checks.push(record(
        suite,
        "translation decomposition",
        decomposition_identity_holds(),
        "(1,r,0,0)·(1,0,s,0)·(1,0,0,t−rs) = (1,r,s,t) symbolically".to_string(),
    ));
    checks.push(record(
        suite,
        "composition associativity",
        associativity_check(Field::F7, 1000, opts.seed),
        format!("1000 ChaCha8-seeded random triples over F7 (seed {})", opts.seed),
    ));
    checks.push(record(
        suite,
        "right-action axiom",
        action_axiom_check(Field::F7, 500, opts.seed),
        format!(
            "apply(apply(C, g), h) = apply(C, g·h) on 500 seeded samples over F7 (seed {})",
            opts.seed
        ),
    ));

    for field in [Field::F2, Field::F3, Field::F7] {
        let report = kernel_generation_check(field);
        let name = match field {
            Field::F2 => "kernel generation over F2",
            Field::F3 => "kernel generation over F3",
            _ => "kernel generation over F7",
        };
        checks.push(record(
            suite,
            name,
            report.passed(),
            format!(
                "translation families close to {} of {} = q³ kernel elements; decompositions consistent",
                report.reached, report.expected
            ),
        ));
    }

    let field = Field::F13;
    let mut triviality_holds = true;
    let mut witnesses = 0usize;
    for m in 0..=24i64 {
        let chi = Character { exponent: m };
        match chi.trivializable() {
            Some(weight) => {
                triviality_holds &= m % 12 == 0;
                witnesses += 1;
                // The witness: u^m must be how (u,r,s,t) scales the unit Δ^weight.
                for u in field.elements().filter(|x| !x.is_zero()) {
                    let g = Transform::from_elements(
                        u,
                        field.from_int(3),
                        field.from_int(5),
                        field.from_int(7),
                    )
                    .expect("u is nonzero");
                    let acted = g.act_on_unit(&UnitOnU { beta: field.one(), weight });
                    triviality_holds &= acted.beta == chi.value(&g);
                }
            }
            None => triviality_holds &= m % 12 != 0,
        }
    }
    checks.push(record(
        suite,
        "character triviality",
        triviality_holds && witnesses == 3,
        "χ₀^m matches the action on a unit Δ^(m/12) exactly for m ∈ {0, 12, 24} among m ≤ 24"
            .to_string(),
    ));

    checks
}

/// Enumerates automorphisms, reads off the differential-character
/// exponent, and renders one record; `expected_order` pins the group size.
fn automorphism_record(
    check: &'static str,
    field: Field,
    a: [i64; 5],
    expected_order: usize,
    label: &str,
) -> CheckRecord {
    let suite = "aut-characters";
    let curve = WeierstrassCurve::over_field(field, a);
    match enumerate_automorphisms(&curve) {
        Ok(auts) => match differential_character(&auts) {
            Ok(exponent) => {
                let generator = auts
                    .group()
                    .cyclic_generator()
                    .map(|i| auts.group().element(i).to_string())
                    .unwrap_or_else(|| "none".to_string());
                record(
                    suite,
                    check,
                    auts.order() == expected_order && exponent == 1,
                    format!(
                        "{label}: order {}, a generator: {generator}, differential-character exponent {exponent}",
                        auts.order()
                    ),
                )
            }
            Err(e) => record(suite, check, false, format!("{label}: character failed: {e}")),
        },
        Err(e) => record(suite, check, false, format!("{label}: enumeration failed: {e}")),
    }
}

fn aut_characters_checks() -> Vec<CheckRecord> {
    let suite = "aut-characters";
    let mut checks = Vec::new();

    checks.push(automorphism_record(
        "quartic anchor automorphisms",
        Field::F13,
        [0, 0, 0, 1, 0],
        4,
        "y² = x³ + x over F13",
    ));
    checks.push(automorphism_record(
        "sextic anchor automorphisms",
        Field::F7,
        [0, 0, 1, 0, 0],
        6,
        "y² + y = x³ over F7",
    ));
    checks.push(automorphism_record(
        "generic-j automorphisms",
        Field::F13,
        [0, 0, 0, 1, 1],
        2,
        "y² = x³ + x + 1 over F13",
    ));

    let pair_ok = ChiPair::of_power(1).to_z12() == 1
        && (0..24).all(|i| {
            let p = ChiPair::of_power(i);
            ChiPair::new(p.chi4, p.chi6).is_ok() && p.to_z12() as i64 == i.rem_euclid(12)
        });
    checks.push(record(
        suite,
        "character pair arithmetic",
        pair_ok,
        "χ(1) = (1 mod 4, 1 mod 6) = 1 ∈ ℤ/12; parity-compatible and consistent for i ∈ {0,…,23}"
            .to_string(),
    ));

    let non_cyclic = matches!(
        enumerate_automorphisms(&WeierstrassCurve::over_field(Field::F9, [0, 0, 0, 1, 0]))
            .and_then(|auts| differential_character(&auts)),
        Err(AutError::NonCyclic)
    );
    checks.push(record(
        suite,
        "non-cyclic rejection",
        non_cyclic,
        "y² = x³ + x over F9 has 12 automorphisms and no single generator".to_string(),
    ));

    checks
}

fn char3_legendre_checks() -> Vec<CheckRecord> {
    let suite = "char3-legendre";
    let ring = RingTag::Fq(Field::F3);
    let lam = MultiPoly::var(ring, Var::Lam);
    let one = MultiPoly::constant_int(ring, 1);
    let mut checks = Vec::new();

    let curve = legendre_curve();
    let factored = lam.mul(&lam).mul(&lam.sub(&one).pow(2));
    checks.push(record(
        suite,
        "discriminant factorization",
        curve.discriminant() == factored,
        "Δ = λ²(λ−1)² in F3[λ]".to_string(),
    ));

    let mu = lam.add(&one);
    checks.push(record(
        suite,
        "c4 square form",
        curve.c4() == mu.mul(&mu),
        "c4 = (λ+1)² = μ²".to_string(),
    ));

    let j_report = legendre_j_check();
    checks.push(record(
        suite,
        "j identity",
        j_report.passed(),
        format!(
            "c4³·(μ²−1)² = μ⁶·Δ: identity {}, degrees {}, F9 spot check {}",
            j_report.identity_holds, j_report.degrees_match, j_report.spot_check_holds
        ),
    ));

    let minus_one = MultiPoly::constant_int(ring, -1);
    let at = |x: &MultiPoly| {
        let bind = BTreeMap::from([(Var::Lam, x.clone())]);
        let sub = |p: &MultiPoly| p.substitute(&bind).expect("binding shares the ring");
        WeierstrassCurve::new(
            sub(&curve.a1),
            sub(&curve.a2),
            sub(&curve.a3),
            sub(&curve.a4),
            sub(&curve.a6),
        )
    };
    let special = at(&minus_one);
    let smooth_j_zero = !special.discriminant().is_zero() && special.c4().is_zero();
    checks.push(record(
        suite,
        "lambda = -1 specialization",
        smooth_j_zero,
        "Δ ≠ 0 and c4 = 0, so j = 0 at λ = −1".to_string(),
    ));

    let zero = MultiPoly::constant_int(ring, 0);
    let degenerate = at(&zero).discriminant().is_zero() && at(&one).discriminant().is_zero();
    checks.push(record(
        suite,
        "degenerate fibers",
        degenerate,
        "Δ vanishes at λ = 0 and λ = 1".to_string(),
    ));

    let elim = elimination_check_char3();
    checks.push(record(
        suite,
        "char-3 elimination",
        elim.passed(),
        format!(
            "joint congruence kernel dim {}; {} of 243 candidates survive; routes agree (window precision 6)",
            elim.kernel_dimension, elim.brute_force_survivors
        ),
    ));

    checks
}

fn char2_hesse_checks() -> Vec<CheckRecord> {
    let suite = "char2-hesse";
    let ring = RingTag::Fq(Field::F2);
    let mu = MultiPoly::var(ring, Var::Mu);
    let one = MultiPoly::constant_int(ring, 1);
    let mut checks = Vec::new();

    match hesse_curve_to_weierstrass() {
        Ok(model) => {
            let mu12 = Fraction::from_poly(mu.pow(12));
            let unit_cubed = mu.pow(3).sub(&one).pow(3);
            let j = model.c4().pow_u(3).div(&model.discriminant());
            let expected = Fraction::new(mu.pow(12), unit_cubed.clone());
            checks.push(record(
                suite,
                "flex-derived j identity",
                j == Some(expected),
                "the Weierstrass model of X³+Y³+Z³ = μXYZ has j = μ¹²/(μ³−1)³ exactly"
                    .to_string(),
            ));
            checks.push(record(
                suite,
                "flex-derived discriminant",
                model.discriminant().mul_ref(&mu12) == Fraction::from_poly(unit_cubed),
                "Δ·μ¹² = (μ³−1)³ exactly".to_string(),
            ));
        }
        Err(e) => {
            checks.push(record(
                suite,
                "flex-derived j identity",
                false,
                format!("model construction failed: {e}"),
            ));
        }
    }

    let torsion = hesse_torsion_points_check();
    checks.push(record(
        suite,
        "torsion points",
        torsion.passed(),
        format!(
            "[1:0:−1] on curve {}, [−1:ω:0] on curve {}, both flexes by triple tangent contact {} (the classical Hessian degenerates identically in characteristic 2: {})",
            torsion.first_on_curve,
            torsion.second_on_curve,
            torsion.both_are_flexes,
            torsion.hessian_vanishes_identically
        ),
    ));

    let elim = elimination_check_char2();
    checks.push(record(
        suite,
        "char-2 elimination stage one",
        elim.scaling_kernel_dimension == 3 && elim.scaling_kernel_is_cube_span,
        "the scaling congruence alone leaves exactly span{μ³, μ⁶, μ⁹} (dimension 3)"
            .to_string(),
    ));
    checks.push(record(
        suite,
        "char-2 elimination stage two",
        elim.joint_kernel_dimension == 0
            && elim.brute_force_survivors == 1
            && elim.mu4_row_eliminates_cube
            && elim.routes_agree,
        format!(
            "joint kernel dim {}; {} of 64 staged candidates survive; the μ⁴ row pins μ³; routes agree (window precision 12)",
            elim.joint_kernel_dimension, elim.brute_force_survivors
        ),
    ));

    checks
}

fn cohomology_action(
    group: CohomologyGroup,
    precision: usize,
) -> Result<SeriesAction, ActionError> {
    match group {
        CohomologyGroup::S3 => s3_action(precision),
        CohomologyGroup::Sl2F3 => sl2f3_series_action(precision),
        CohomologyGroup::Z2Trivial => Ok(z2_trivial_action(precision)),
    }
}

fn cohomology_checks(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let suite = "cohomology";
    let n = opts.precision;
    let group = opts.group;
    let mut checks = Vec::new();

    let construction = match group {
        CohomologyGroup::S3 => {
            format!("order 6 over F3 at precision {n}; α² = β³ = (αβ)² = e and the degree-6 invariant fixed")
        }
        CohomologyGroup::Sl2F3 => format!(
            "order 24 over F4 at precision {n}; α³ = e, β of order 4, β² acting trivially"
        ),
        CohomologyGroup::Z2Trivial => {
            format!("order 2 over F2 at precision {n} (trivial action)")
        }
    };
    let action = match cohomology_action(group, n) {
        Ok(action) => action,
        Err(e) => {
            checks.push(record(
                suite,
                "action construction",
                false,
                format!("{construction}: {e}"),
            ));
            return checks;
        }
    };
    checks.push(record(suite, "action construction", true, construction));

    let z = cocycle_space(&action);
    let reverified = z.iter().all(|xi| xi.satisfies_cocycle_identity(&action));
    checks.push(record(
        suite,
        "cocycle basis reverification",
        reverified,
        format!(
            "all {} basis cocycles satisfy ξ_στ = ξ_σ^τ + ξ_τ on every pair",
            z.len()
        ),
    ));

    let b = coboundaries(&action);
    let embedded = b.iter().all(|c| c.satisfies_cocycle_identity(&action));
    checks.push(record(
        suite,
        "coboundaries are cocycles",
        embedded,
        format!("all {} coboundary basis elements satisfy the identity (B¹ ⊆ Z¹)", b.len()),
    ));

    let report = h1(&action);
    checks.push(record(
        suite,
        "rank-nullity",
        report.rank_nullity_consistent(),
        format!(
            "dim B¹ + dim invariants = {} + {} = precision {}",
            report.dim_b1, report.dim_fixed, report.precision
        ),
    ));
    checks.push(record(
        suite,
        "h1 dimensions",
        report.dim_h1 == report.dim_z1 - report.dim_b1,
        format!(
            "dim Z¹ = {}, dim B¹ = {}, dim H¹ = {} at precision {} (truncated-module values)",
            report.dim_z1, report.dim_b1, report.dim_h1, report.precision
        ),
    ));

    match group {
        CohomologyGroup::Sl2F3 => {
            let moebius = gl2f3_action_check();
            checks.push(record(
                suite,
                "moebius closure",
                moebius.passed(),
                format!(
                    "{} matrix/Möbius pairs close; the ω-fixing subgroup equals the determinant-1 subgroup ({} elements)",
                    moebius.closure_order, moebius.det_one_count
                ),
            ));
            let xi = xi_beta2_analysis(n);
            checks.push(record(
                suite,
                "xi at beta squared",
                xi.passed(),
                format!(
                    "across all {} basis cocycles: ξ_β² is fixed by every element and has valuation ≥ 2",
                    xi.basis_size
                ),
            ));
        }
        CohomologyGroup::Z2Trivial => {
            let pinned = h1(&z2_trivial_action(1));
            checks.push(record(
                suite,
                "constants-only h1",
                pinned.dim_h1 == 1,
                format!(
                    "precision pinned to 1 so the module is just F2: dim H¹ = {} = |Hom(ℤ/2, F2)|",
                    pinned.dim_h1
                ),
            ));
        }
        CohomologyGroup::S3 => {}
    }

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_with_defaults() {
        let opts = VerifyOptions::default();
        for result in run_suites(&Suite::ALL, &opts) {
            for check in &result.checks {
                assert_eq!(
                    check.status,
                    CheckStatus::Pass,
                    "{} / {}: {}",
                    check.suite,
                    check.check,
                    check.detail
                );
            }
            assert!(result.passed());
        }
    }

    #[test]
    fn cohomology_suite_covers_every_group() {
        for group in [CohomologyGroup::S3, CohomologyGroup::Sl2F3, CohomologyGroup::Z2Trivial] {
            let opts = VerifyOptions { group, ..VerifyOptions::default() };
            let result = run_suite(Suite::Cohomology, &opts);
            assert!(result.passed(), "group {} failed: {:?}", group.name(), result.checks);
        }
    }

    #[test]
    fn json_rendering_is_deterministic_and_key_ordered() {
        let opts = VerifyOptions::default();
        let first = render_json(&run_suites(&[Suite::Invariants], &opts));
        let second = render_json(&run_suites(&[Suite::Invariants], &opts));
        assert_eq!(first, second);
        let line = first.lines().next().unwrap();
        assert!(line.starts_with(r#"{"suite":"invariants","check":"#));
        assert!(line.contains(r#""status":"pass""#));
        // One record per check, each a full JSON object.
        assert_eq!(first.lines().count(), run_suite(Suite::Invariants, &opts).checks.len());
    }

    #[test]
    fn text_rendering_reports_failures_loudly() {
        let results = vec![SuiteResult {
            suite: "invariants",
            checks: vec![
                record("invariants", "good", true, "fine".to_string()),
                record("invariants", "bad", false, "broken".to_string()),
            ],
            wall: Duration::from_millis(1),
        }];
        let text = render_text(&results);
        assert!(text.contains("FAIL  bad"));
        assert!(text.contains("1 of 2 checks FAILED"));
    }

    #[test]
    fn precision_bounds_follow_the_series_windows() {
        let opts = VerifyOptions { precision: 11, ..VerifyOptions::default() };
        assert!(validate_options(&[Suite::Char2Hesse], &opts).is_err());
        assert!(validate_options(&[Suite::Invariants], &opts).is_ok());
        let s3 = VerifyOptions {
            precision: 5,
            group: CohomologyGroup::S3,
            ..VerifyOptions::default()
        };
        assert!(validate_options(&[Suite::Cohomology], &s3).is_err());
        let ok = VerifyOptions {
            precision: 6,
            group: CohomologyGroup::S3,
            ..VerifyOptions::default()
        };
        assert!(validate_options(&[Suite::Cohomology], &ok).is_ok());
        let z2 = VerifyOptions {
            precision: 1,
            group: CohomologyGroup::Z2Trivial,
            ..VerifyOptions::default()
        };
        assert!(validate_options(&[Suite::Cohomology], &z2).is_ok());
    }

    #[test]
    fn suite_and_group_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("nonsense"), None);
        for group in [CohomologyGroup::S3, CohomologyGroup::Sl2F3, CohomologyGroup::Z2Trivial] {
            assert_eq!(CohomologyGroup::from_name(group.name()), Some(group));
        }
        assert_eq!(CohomologyGroup::from_name("sl2"), None);
    }

    #[test]
    fn seeds_change_sample_paths_but_not_verdicts() {
        let a = run_suite(Suite::Transforms, &VerifyOptions { seed: 1, ..Default::default() });
        let b = run_suite(Suite::Transforms, &VerifyOptions { seed: 2, ..Default::default() });
        assert!(a.passed());
        assert!(b.passed());
        // The seed is recorded in the detail strings for reproducibility.
        assert!(a.checks.iter().any(|c| c.detail.contains("seed 1")));
        assert!(b.checks.iter().any(|c| c.detail.contains("seed 2")));
    }
}
