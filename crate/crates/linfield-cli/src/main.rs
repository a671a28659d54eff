//! Command-line front end: every library computation behind deterministic,
//! machine-readable output.
//!
//! Exit codes: 0 success, 1 validation failure (including unusable spec
//! files), 2 usage error, 3 oracle mismatch.

mod output;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linfield::fieldcheck::{canonical_spec_json, parse_spec_file, validate_concrete, SpecDocument};
use linfield::model::{build_spec_with_cap, FieldSpec, DEFAULT_MAX_PRIME_POWER};
use linfield::multi_place::{
    closure_membership_in, gamma, gamma_oracle_with_budget, gamma_witness, tilde_gamma,
};
use linfield::riemann_roch::{gap_set_oracle, membership_multi, rr_dimension};
use linfield::single_place::{
    frobenius, gap_set, inverse_lambda, is_symmetric, multiplicity, pruned_generators,
    semigroup_generators, DEFAULT_LAMBDA,
};
use linfield::WitnessExpr;
use output::{fingerprint, join_ints, tuple_label, Format, OutputDoc};

const GUARD_POINTS: u128 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "linfield",
    version,
    about = "Weierstrass gap sets, semigroups and minimal generating sets of linearized function fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Lift the large-parameter guards (p^n cap, enumeration budgets).
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LambdaPreset {
    /// The inverse of -n_l modulo p^n, which writes gaps as j*p^n + i.
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a spec file and run every hypothesis check.
    Validate {
        file: PathBuf,
        /// Fail (exit 1) if any check fails.
        #[arg(long)]
        strict: bool,
        /// Number of places a later multi-place query will use.
        #[arg(long)]
        places_hint: Option<usize>,
    },
    /// Genus and derived constants of the spec.
    Genus { file: PathBuf },
    /// Gap set at one degree-one place.
    Gaps {
        file: PathBuf,
        #[arg(long)]
        place: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_preset")]
        lambda: Option<i64>,
        #[arg(long, value_enum)]
        lambda_preset: Option<LambdaPreset>,
    },
    /// Generators, multiplicity, Frobenius number and symmetry at one place.
    Semigroup {
        file: PathBuf,
        #[arg(long)]
        place: usize,
    },
    /// Riemann-Roch dimension for a coefficient vector "l:a,l:a,...".
    Dim {
        file: PathBuf,
        #[arg(long)]
        coeffs: String,
    },
    /// Minimal generating set at several places "l,l,...".
    Gamma {
        file: PathBuf,
        #[arg(long)]
        places: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
        /// Include the witness function for each tuple.
        #[arg(long)]
        witnesses: bool,
    },
    /// Run an independent dimension-jump oracle and diff the closed form.
    Oracle {
        file: PathBuf,
        #[command(subcommand)]
        target: OracleTarget,
    },
}

#[derive(Subcommand)]
enum OracleTarget {
    /// Gap set scan vs the closed form.
    Gaps {
        #[arg(long)]
        place: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
    },
    /// Minimal generating set enumeration vs the closed form.
    Gamma {
        #[arg(long)]
        places: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
    },
    /// lub-closure membership vs dimension membership on a box.
    Closure {
        #[arg(long)]
        places: String,
        /// Inclusive per-coordinate bound (default: max Frobenius + p^n).
        #[arg(long)]
        box_bound: Option<i64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<linfield::Error> for Failure {
    fn from(err: linfield::Error) -> Failure {
        use linfield::Error::*;
        let code = match err {
            ValidationFailure { .. } | SyntaxError { .. } | SchemaError(_) => 1,
            _ => 2,
        };
        Failure { code, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct LoadedSpec {
    spec: FieldSpec,
    fingerprint: String,
    warnings: Vec<String>,
}

fn read_document(path: &Path) -> Result<(SpecDocument, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = parse_spec_file(&text)?;
    let canonical = canonical_spec_json(&doc);
    Ok((doc, canonical))
}

/// Loads a spec file for a computation command: abstract files are built
/// directly, concrete files go through non-strict validation with failed
/// checks demoted to warnings.  `gamma_places` triggers the constant-field
/// size check (a hard error in concrete mode, a warning in abstract mode).
fn load_spec(path: &Path, force: bool, gamma_places: Option<usize>) -> Result<LoadedSpec, Failure> {
    let (doc, canonical) = read_document(path)?;
    let cap = if force { i64::MAX } else { DEFAULT_MAX_PRIME_POWER };
    match doc {
        SpecDocument::Abstract(a) => {
            let spec = build_spec_with_cap(a.p, a.n, &a.poles, &a.zeros, cap)
                .map_err(|e| Failure { code: 1, message: format!("spec file rejected: {e}") })?;
            let mut warnings = Vec::new();
            if gamma_places.is_some() {
                warnings.push(
                    "abstract mode: constant field size unknown; confirm |K| is at least the place count"
                        .into(),
                );
            }
            Ok(LoadedSpec { spec, fingerprint: fingerprint(canonical.as_bytes()), warnings })
        }
        SpecDocument::Concrete(cs) => {
            if let Some(t) = gamma_places {
                if cs.field.order() < t as u128 {
                    return Err(Failure {
                        code: 1,
                        message: format!(
                            "constant field has {} elements, fewer than the {t} requested places",
                            cs.field.order()
                        ),
                    });
                }
            }
            let (spec, report) = validate_concrete(&cs, false, gamma_places)
                .map_err(|e| Failure { code: 1, message: format!("spec file rejected: {e}") })?;
            Ok(LoadedSpec {
                spec,
                fingerprint: fingerprint(canonical.as_bytes()),
                warnings: report.failures(),
            })
        }
    }
}

fn parse_places(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("invalid place index `{part}` in --places")))
        })
        .collect()
}

fn parse_coeffs(text: &str) -> Result<Vec<(usize, i64)>, Failure> {
    text.split(',')
        .map(|part| {
            let (l, a) = part
                .split_once(':')
                .ok_or_else(|| Failure::usage(format!("expected `place:coeff`, got `{part}`")))?;
            let l = l
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("invalid place index `{l}` in --coeffs")))?;
            let a = a
                .trim()
                .parse::<i64>()
                .map_err(|_| Failure::usage(format!("invalid coefficient `{a}` in --coeffs")))?;
            Ok((l, a))
        })
        .collect()
}

fn resolve_lambda(
    spec: &FieldSpec,
    place: usize,
    lambda: Option<i64>,
    preset: Option<LambdaPreset>,
) -> Result<i64, Failure> {
    match (lambda, preset) {
        (Some(l), _) => Ok(l),
        (None, Some(LambdaPreset::Inverse)) => Ok(inverse_lambda(spec, place)?),
        (None, None) => Ok(DEFAULT_LAMBDA),
    }
}

/// Guard on the minimal-generating-set enumeration size.
fn guard_gamma(spec: &FieldSpec, t: usize, force: bool) -> Result<(), Failure> {
    if force {
        return Ok(());
    }
    let mut points: u128 = 1;
    for _ in 0..t {
        points = points.saturating_mul(spec.genus().max(1) as u128);
    }
    if points > GUARD_POINTS {
        return Err(Failure::usage(format!(
            "genus^t = {points} exceeds the guard ({GUARD_POINTS}); pass --force to proceed"
        )));
    }
    Ok(())
}

fn witness_json(w: &WitnessExpr) -> Value {
    let map_json = |m: &BTreeMap<usize, i64>| {
        m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>()
    };
    json!({
        "y": w.y_exp,
        "ratio": w.ratio_exp,
        "denominator": map_json(&w.denom_exp),
        "numerator": map_json(&w.numer_exp),
    })
}

fn witness_string(w: &WitnessExpr) -> String {
    let mut parts = Vec::new();
    if w.y_exp != 0 {
        parts.push(format!("y^{}", w.y_exp));
    }
    if w.ratio_exp != 0 {
        parts.push(format!("ratio^{}", w.ratio_exp));
    }
    for (i, e) in &w.denom_exp {
        parts.push(format!("p{i}^{e}"));
    }
    for (j, e) in &w.numer_exp {
        parts.push(format!("q{j}^{e}"));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let doc = match &cli.command {
        Command::Validate { file, strict, places_hint } => {
            return cmd_validate(cli, file, *strict, *places_hint)
        }
        Command::Genus { file } => cmd_genus(cli, file)?,
        Command::Gaps { file, place, lambda, lambda_preset } => {
            cmd_gaps(cli, file, *place, *lambda, *lambda_preset)?
        }
        Command::Semigroup { file, place } => cmd_semigroup(cli, file, *place)?,
        Command::Dim { file, coeffs } => cmd_dim(cli, file, coeffs)?,
        Command::Gamma { file, places, lambda, witnesses } => {
            cmd_gamma(cli, file, places, *lambda, *witnesses)?
        }
        Command::Oracle { file, target } => return cmd_oracle(cli, file, target),
    };
    print!("{}", doc.render(cli.format));
    Ok(0)
}

fn cmd_validate(
    cli: &Cli,
    file: &Path,
    strict: bool,
    places_hint: Option<usize>,
) -> Result<u8, Failure> {
    let (doc, canonical) = read_document(file)?;
    let doc_fingerprint = fingerprint(canonical.as_bytes());
    let mut checks: Vec<(String, bool, String)> = Vec::new();
    let mut summary: Option<FieldSpec> = None;
    let mode;
    match doc {
        SpecDocument::Abstract(a) => {
            mode = "abstract";
            let cap = if cli.force { i64::MAX } else { DEFAULT_MAX_PRIME_POWER };
            match build_spec_with_cap(a.p, a.n, &a.poles, &a.zeros, cap) {
                Ok(spec) => {
                    checks.push(("abstract_build".into(), true, "all invariants hold".into()));
                    summary = Some(spec);
                }
                Err(e) => checks.push(("abstract_build".into(), false, e.to_string())),
            }
        }
        SpecDocument::Concrete(cs) => {
            mode = "concrete";
            match validate_concrete(&cs, false, places_hint) {
                Ok((spec, report)) => {
                    for c in &report.checks {
                        checks.push((c.name.to_string(), c.passed, c.detail.clone()));
                    }
                    summary = Some(spec);
                }
                Err(e) => checks.push(("reduce_to_abstract".into(), false, e.to_string())),
            }
        }
    }
    let passed = checks.iter().all(|(_, ok, _)| *ok);

    let mut table = vec![format!("mode: {mode}"), format!("passed: {passed}")];
    let mut csv = vec![vec!["check".to_string(), "passed".to_string(), "detail".to_string()]];
    for (name, ok, detail) in &checks {
        table.push(format!("check: {name} {} ({detail})", if *ok { "PASS" } else { "FAIL" }));
        csv.push(vec![name.clone(), ok.to_string(), detail.clone()]);
    }
    if let Some(spec) = &summary {
        table.push(format!("genus: {}", spec.genus()));
        table.push(format!("q_pow: {}", spec.q_pow()));
    }
    let payload = json!({
        "mode": mode,
        "passed": passed,
        "checks": checks.iter().map(|(name, ok, detail)| json!({
            "name": name, "passed": ok, "detail": detail,
        })).collect::<Vec<_>>(),
        "genus": summary.as_ref().map(|s| s.genus()),
        "q_pow": summary.as_ref().map(|s| s.q_pow()),
    });
    let out = OutputDoc {
        command: format!("validate --strict {strict}"),
        fingerprint: doc_fingerprint,
        warnings: Vec::new(),
        payload,
        table,
        csv,
    };
    print!("{}", out.render(cli.format));
    Ok(if strict && !passed { 1 } else { 0 })
}

fn cmd_genus(cli: &Cli, file: &Path) -> Result<OutputDoc, Failure> {
    let loaded = load_spec(file, cli.force, None)?;
    let spec = &loaded.spec;
    let payload = json!({
        "p": spec.p(),
        "n": spec.n(),
        "q_pow": spec.q_pow(),
        "n0": spec.n0(),
        "m": spec.m(),
        "genus": spec.genus(),
        "pole_indices": spec.pole_indices(),
        "zero_indices": spec.zero_indices(),
        "degree_one_places": spec.degree_one_pole_indices(),
    });
    let table = vec![
        format!("p: {}  n: {}  q_pow: {}", spec.p(), spec.n(), spec.q_pow()),
        format!("n0: {}  m: {}", spec.n0(), spec.m()),
        format!("genus: {}", spec.genus()),
        format!(
            "pole indices: {}",
            spec.pole_indices().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        ),
        format!(
            "degree-one places: {}",
            spec.degree_one_pole_indices()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ),
    ];
    let csv = vec![
        vec!["field".to_string(), "value".to_string()],
        vec!["genus".to_string(), spec.genus().to_string()],
        vec!["q_pow".to_string(), spec.q_pow().to_string()],
        vec!["m".to_string(), spec.m().to_string()],
        vec!["n0".to_string(), spec.n0().to_string()],
    ];
    Ok(OutputDoc {
        command: "genus".into(),
        fingerprint: loaded.fingerprint,
        warnings: loaded.warnings,
        payload,
        table,
        csv,
    })
}

fn cmd_gaps(
    cli: &Cli,
    file: &Path,
    place: usize,
    lambda: Option<i64>,
    preset: Option<LambdaPreset>,
) -> Result<OutputDoc, Failure> {
    let loaded = load_spec(file, cli.force, None)?;
    let lambda = resolve_lambda(&loaded.spec, place, lambda, preset)?;
    let gaps = gap_set(&loaded.spec, place, lambda)?;
    let payload = json!({
        "place": place,
        "lambda": lambda,
        "count": gaps.len(),
        "elements": gaps.elements(),
    });
    let table = vec![
        format!("place: {place}"),
        format!("lambda: {lambda}"),
        format!("count: {}", gaps.len()),
        format!("gaps: {}", join_ints(gaps.elements())),
    ];
    let mut csv = vec![vec!["place".to_string(), "gap".to_string()]];
    for &g in gaps.elements() {
        csv.push(vec![place.to_string(), g.to_string()]);
    }
    Ok(OutputDoc {
        command: format!("gaps --place {place} --lambda {lambda}"),
        fingerprint: loaded.fingerprint,
        warnings: loaded.warnings,
        payload,
        table,
        csv,
    })
}

fn cmd_semigroup(cli: &Cli, file: &Path, place: usize) -> Result<OutputDoc, Failure> {
    let loaded = load_spec(file, cli.force, None)?;
    let spec = &loaded.spec;
    let generators = semigroup_generators(spec, place)?;
    let pruned = pruned_generators(spec, place)?;
    let mult = multiplicity(spec, place)?;
    let frob = frobenius(spec, place)?;
    let symmetric = is_symmetric(spec, place)?;
    let payload = json!({
        "place": place,
        "generators": generators,
        "pruned_generators": pruned,
        "multiplicity": mult,
        "frobenius": frob,
        "symmetric": symmetric,
    });
    let table = vec![
        format!("place: {place}"),
        format!("generators: {}", join_ints(&generators)),
        format!("pruned generators: {}", join_ints(&pruned)),
        format!("multiplicity: {mult}"),
        format!("frobenius: {frob}"),
        format!("symmetric: {symmetric}"),
    ];
    let mut csv = vec![
        vec!["field".to_string(), "value".to_string()],
        vec!["multiplicity".to_string(), mult.to_string()],
        vec!["frobenius".to_string(), frob.to_string()],
        vec!["symmetric".to_string(), symmetric.to_string()],
    ];
    for g in &generators {
        csv.push(vec!["generator".to_string(), g.to_string()]);
    }
    Ok(OutputDoc {
        command: format!("semigroup --place {place}"),
        fingerprint: loaded.fingerprint,
        warnings: loaded.warnings,
        payload,
        table,
        csv,
    })
}

fn cmd_dim(cli: &Cli, file: &Path, coeffs_text: &str) -> Result<OutputDoc, Failure> {
    let loaded = load_spec(file, cli.force, None)?;
    let coeffs = parse_coeffs(coeffs_text)?;
    let dim = rr_dimension(&loaded.spec, &coeffs)?;
    let payload = json!({
        "coeffs": coeffs.iter().map(|&(l, a)| json!([l, a])).collect::<Vec<_>>(),
        "dimension": dim,
    });
    let coeff_echo = coeffs.iter().map(|(l, a)| format!("{l}:{a}")).collect::<Vec<_>>().join(",");
    let table = vec![format!("coeffs: {coeff_echo}"), format!("dimension: {dim}")];
    let csv = vec![
        vec!["field".to_string(), "value".to_string()],
        vec!["dimension".to_string(), dim.to_string()],
    ];
    Ok(OutputDoc {
        command: format!("dim --coeffs {coeff_echo}"),
        fingerprint: loaded.fingerprint,
        warnings: loaded.warnings,
        payload,
        table,
        csv,
    })
}

fn cmd_gamma(
    cli: &Cli,
    file: &Path,
    places_text: &str,
    lambda: Option<i64>,
    witnesses: bool,
) -> Result<OutputDoc, Failure> {
    let places = parse_places(places_text)?;
    let loaded = load_spec(file, cli.force, Some(places.len()))?;
    let spec = &loaded.spec;
    let lambda = lambda.unwrap_or(DEFAULT_LAMBDA);
    guard_gamma(spec, places.len(), cli.force)?;
    let set = gamma(spec, &places, lambda)?;

    let mut tuple_entries = Vec::new();
    let mut table = vec![
        format!("places: {}", places.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")),
        format!("lambda: {lambda}"),
        format!("count: {}", set.len()),
    ];
    let mut csv_header: Vec<String> = places.iter().map(|l| format!("place_{l}")).collect();
    if witnesses {
        csv_header.push("witness".to_string());
    }
    let mut csv = vec![csv_header];
    for tuple in &set.tuples {
        let mut entry = json!({
            "values": tuple.values,
            "i": tuple.i,
            "j": tuple.j_vec,
        });
        let mut row: Vec<String> = tuple.values.iter().map(i64::to_string).collect();
        let mut line = format!("tuple: {}", join_ints(&tuple.values));
        if witnesses {
            let w = gamma_witness(spec, &places, tuple)?;
            entry["witness"] = witness_json(&w);
            let ws = witness_string(&w);
            line.push_str(&format!("  witness: {ws}"));
            row.push(ws);
        }
        table.push(line);
        csv.push(row);
        tuple_entries.push(entry);
    }
    let payload = json!({
        "places": places,
        "lambda": lambda,
        "count": set.len(),
        "tuples": tuple_entries,
    });
    let places_echo = places.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    Ok(OutputDoc {
        command: format!("gamma --places {places_echo} --lambda {lambda}"),
        fingerprint: loaded.fingerprint,
        warnings: loaded.warnings,
        payload,
        table,
        csv,
    })
}

struct DiffOutcome {
    matched: bool,
    label: String,
    missing: Vec<String>,
    extra: Vec<String>,
}

fn diff_sorted<T: Ord>(
    closed: &[T],
    oracle: &[T],
    render: impl Fn(&T) -> String,
    unit: &str,
) -> DiffOutcome {
    let missing: Vec<String> = oracle.iter().filter(|x| !closed.contains(x)).map(&render).collect();
    let extra: Vec<String> = closed.iter().filter(|x| !oracle.contains(x)).map(&render).collect();
    let matched = missing.is_empty() && extra.is_empty();
    let label = if matched {
        format!("MATCH ({} {unit})", oracle.len())
    } else {
        format!("MISMATCH ({} missing from closed form, {} unexpected)", missing.len(), extra.len())
    };
    DiffOutcome { matched, label, missing, extra }
}

fn oracle_doc(
    command: String,
    loaded: &LoadedSpec,
    target: &str,
    detail: Value,
    outcome: &DiffOutcome,
) -> OutputDoc {
    let payload = json!({
        "target": target,
        "status": if outcome.matched { "MATCH" } else { "MISMATCH" },
        "detail": detail,
        "missing_from_closed_form": outcome.missing,
        "not_in_oracle": outcome.extra,
    });
    let mut table = vec![outcome.label.clone()];
    for m in &outcome.missing {
        table.push(format!("missing from closed form: {m}"));
    }
    for e in &outcome.extra {
        table.push(format!("not in oracle: {e}"));
    }
    let mut csv = vec![
        vec!["field".to_string(), "value".to_string()],
        vec![
            "status".to_string(),
            if outcome.matched { "MATCH".into() } else { "MISMATCH".into() },
        ],
    ];
    for m in &outcome.missing {
        csv.push(vec!["missing_from_closed_form".to_string(), m.clone()]);
    }
    for e in &outcome.extra {
        csv.push(vec!["not_in_oracle".to_string(), e.clone()]);
    }
    OutputDoc {
        command,
        fingerprint: loaded.fingerprint.clone(),
        warnings: loaded.warnings.clone(),
        payload,
        table,
        csv,
    }
}

fn cmd_oracle(cli: &Cli, file: &Path, target: &OracleTarget) -> Result<u8, Failure> {
    let (doc, matched) = match target {
        OracleTarget::Gaps { place, lambda } => {
            let loaded = load_spec(file, cli.force, None)?;
            let lambda = lambda.unwrap_or(DEFAULT_LAMBDA);
            let closed = gap_set(&loaded.spec, *place, lambda)?.elements().to_vec();
            let oracle = gap_set_oracle(&loaded.spec, *place)?;
            let outcome = diff_sorted(&closed, &oracle, i64::to_string, "elements");
            let doc = oracle_doc(
                format!("oracle gaps --place {place} --lambda {lambda}"),
                &loaded,
                "gaps",
                json!({"place": place, "lambda": lambda, "count": oracle.len()}),
                &outcome,
            );
            (doc, outcome.matched)
        }
        OracleTarget::Gamma { places, lambda } => {
            let places = parse_places(places)?;
            let loaded = load_spec(file, cli.force, Some(places.len()))?;
            let lambda = lambda.unwrap_or(DEFAULT_LAMBDA);
            guard_gamma(&loaded.spec, places.len(), cli.force)?;
            let closed = gamma(&loaded.spec, &places, lambda)?.value_rows();
            let budget = if cli.force { u128::MAX } else { GUARD_POINTS };
            let oracle = gamma_oracle_with_budget(&loaded.spec, &places, budget)?;
            let outcome = diff_sorted(&closed, &oracle, |t| tuple_label(t), "tuples");
            let places_echo = places.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let doc = oracle_doc(
                format!("oracle gamma --places {places_echo} --lambda {lambda}"),
                &loaded,
                "gamma",
                json!({"places": places, "lambda": lambda, "count": oracle.len()}),
                &outcome,
            );
            (doc, outcome.matched)
        }
        OracleTarget::Closure { places, box_bound } => {
            let places = parse_places(places)?;
            let loaded = load_spec(file, cli.force, Some(places.len()))?;
            let spec = &loaded.spec;
            let t = places.len();
            let bound = match box_bound {
                Some(b) => *b,
                None => {
                    let mut frob_max = 0i64;
                    for &l in &places {
                        if spec.genus() > 0 {
                            frob_max = frob_max.max(frobenius(spec, l)?);
                        }
                    }
                    frob_max + spec.q_pow()
                }
            };
            let points = ((bound + 1) as u128).saturating_pow(t as u32);
            if !cli.force && points > GUARD_POINTS {
                return Err(Failure::usage(format!(
                    "box has {points} points, over the guard ({GUARD_POINTS}); pass --force"
                )));
            }
            let tilde = tilde_gamma(spec, &places, DEFAULT_LAMBDA, Some(bound))?;
            let mut disagreements = Vec::new();
            let mut tuple = vec![0i64; t];
            'grid: loop {
                let by_closure = closure_membership_in(&tilde, &tuple);
                let by_dimension = membership_multi(spec, &places, &tuple)?;
                if by_closure != by_dimension {
                    disagreements.push(tuple.clone());
                }
                for slot in tuple.iter_mut() {
                    if *slot < bound {
                        *slot += 1;
                        continue 'grid;
                    }
                    *slot = 0;
                }
                break;
            }
            let matched = disagreements.is_empty();
            let outcome = DiffOutcome {
                matched,
                label: if matched {
                    format!("MATCH ({points} points)")
                } else {
                    format!("MISMATCH ({} disagreements)", disagreements.len())
                },
                missing: disagreements.iter().take(20).map(|t| tuple_label(t)).collect(),
                extra: Vec::new(),
            };
            let places_echo = places.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let doc = oracle_doc(
                format!("oracle closure --places {places_echo} --box-bound {bound}"),
                &loaded,
                "closure",
                json!({"places": places, "box_bound": bound, "points": points as u64}),
                &outcome,
            );
            (doc, matched)
        }
    };
    print!("{}", doc.render(cli.format));
    Ok(if matched { 0 } else { 3 })
}
