//! `jordanlab` — batch verification and query front end for the exact
//! Jordan-algebra workbench in `jordanlab-core`.
//!
//! Subcommands:
//! * `verify [CHECK|all]` — run named checks, stream one JSON report per
//!   line to stdout, human summary to stderr. Exit 0 if everything passed,
//!   1 if any check failed, 2 on input errors.
//! * `dim` — dimension and canonical basis of a generated subalgebra.
//! * `eval` — evaluate an expression in a chosen backend; the `twoproj`
//!   backend can sweep the whole path into CSV.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use jordanlab_core::albert::AlbertElement;
use jordanlab_core::checks::{run_all, run_check, CheckParams, Report, Status, CHECK_IDS};
use jordanlab_core::findim::{albert_element, generate_subalgebra, Element, FinDimAlgebra};
use jordanlab_core::identities::{evaluate, parse};
use jordanlab_core::rational::format_rational;
use jordanlab_core::twoproj::{endpoint_values, path_csv, TwoProjElement};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "jordanlab",
    version,
    about = "Exact-arithmetic workbench for special and exceptional Jordan algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check, or all of them, and stream JSON reports.
    Verify(VerifyArgs),
    /// Dimension and canonical basis of a generated subalgebra.
    Dim(DimArgs),
    /// Evaluate an expression in a chosen backend.
    Eval(EvalArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id (see `verify --help` listing below), or "all".
    #[arg(default_value = "all")]
    check: String,
    /// Seed for every random draw in the suite.
    #[arg(long, env = "JORDANLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Trial budget for counterexample searches.
    #[arg(long, default_value_t = 200)]
    budget: usize,
    /// Grid resolution for path sweeps.
    #[arg(long, default_value_t = 1001)]
    grid: usize,
}

#[derive(Args)]
struct DimArgs {
    /// Algebra: albert | mat_sa:<n> | spin:<k>, or a path to a JSON
    /// structure-constant file.
    #[arg(long, default_value = "albert")]
    algebra: String,
    /// Path to a JSON array of elements, or the builtin name "four-atoms".
    #[arg(long)]
    gens: String,
    /// Close under the unit as well.
    #[arg(long)]
    unital: bool,
    /// Emit one JSON report line instead of human-readable text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Backend: albert | mat_sa:<n> | spin:<k> | twoproj, or a path to a
    /// JSON structure-constant file.
    #[arg(long, default_value = "albert")]
    backend: String,
    /// Expression in the identity grammar: variables, `o`, `^`,
    /// `U[a](x)`, `U[a,b](x)`, `{a,b,c}`, rational coefficients.
    #[arg(long)]
    expr: String,
    /// JSON file mapping each variable to an element encoding.
    #[arg(long)]
    assign: Option<PathBuf>,
    /// twoproj only: sweep t over an N-point uniform grid and emit CSV.
    #[arg(long)]
    grid: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Dim(args) => cmd_dim(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let params = CheckParams {
        seed: args.seed,
        budget: args.budget,
        grid: args.grid,
    };
    let reports: Vec<Report> = if args.check == "all" {
        run_all(&params)
    } else {
        match run_check(&args.check, &params) {
            Some(report) => vec![report],
            None => bail!(
                "unknown check id {:?}; known ids: {}, or \"all\"",
                args.check,
                CHECK_IDS.join(", ")
            ),
        }
    };

    let mut passed = 0usize;
    let mut total_elapsed = Duration::ZERO;
    for report in &reports {
        println!("{}", serde_json::to_string(report)?);
        let label = match report.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        eprintln!(
            "{:<26} {:<5} {:>9.2?}",
            report.check_id, label, report.elapsed
        );
        if report.status == Status::Pass {
            passed += 1;
        }
        total_elapsed += report.elapsed;
    }
    eprintln!(
        "{passed}/{} checks passed (seed {}, {:.2?})",
        reports.len(),
        args.seed,
        total_elapsed
    );
    Ok(if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------------
// dim

fn cmd_dim(args: DimArgs) -> Result<ExitCode> {
    let algebra = resolve_algebra(&args.algebra)?;
    let gens = load_generators(&algebra, &args.gens)?;
    let sub = generate_subalgebra(&gens, args.unital)
        .context("failed to close the generating set")?;

    let basis: Vec<Vec<String>> = sub
        .basis_elements()
        .iter()
        .map(|b| b.coords().iter().map(format_rational).collect())
        .collect();

    if args.json {
        let report = Report {
            check_id: "dim".to_string(),
            status: Status::Pass,
            seed: 0,
            details: json!({
                "algebra": algebra.id(),
                "generators": gens.len(),
                "unital": args.unital,
                "dim": sub.dim(),
                "basis": basis,
            }),
            elapsed: Duration::ZERO,
        };
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("algebra: {}", algebra.id());
        println!(
            "generators: {} ({})",
            gens.len(),
            if args.unital { "unital" } else { "non-unital" }
        );
        println!("dim = {}", sub.dim());
        println!("basis:");
        for row in &basis {
            println!("  [{}]", row.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve_algebra(spec: &str) -> Result<Arc<FinDimAlgebra>> {
    if let Some(algebra) = FinDimAlgebra::builtin(spec) {
        return Ok(algebra);
    }
    let path = Path::new(spec);
    if !path.exists() {
        bail!(
            "algebra {spec:?} is neither builtin (albert | mat_sa:<n> | spin:<k>) nor a readable file"
        );
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {spec:?}"))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {spec:?} as JSON"))?;
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("custom");
    FinDimAlgebra::from_json(id, &value)
        .map_err(|e| anyhow!("bad algebra description in {spec:?}: {e}"))
}

fn load_generators(algebra: &Arc<FinDimAlgebra>, gens: &str) -> Result<Vec<Element>> {
    if gens == "four-atoms" {
        if algebra.id() != "albert" {
            bail!("the four-atoms generator set lives in the albert algebra, not {:?}", algebra.id());
        }
        return Ok(AlbertElement::four_atoms()
            .iter()
            .map(|a| albert_element(algebra, a))
            .collect());
    }
    let text = fs::read_to_string(gens).with_context(|| format!("reading generators {gens:?}"))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {gens:?} as JSON"))?;
    let rows = value
        .as_array()
        .ok_or_else(|| anyhow!("{gens:?} must contain a JSON array of elements"))?;
    if rows.is_empty() {
        bail!("{gens:?} contains no generators");
    }
    rows.iter()
        .map(|row| {
            Element::from_json(algebra, row).map_err(|e| anyhow!("bad element in {gens:?}: {e}"))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// eval

fn cmd_eval(args: EvalArgs) -> Result<ExitCode> {
    if args.backend == "twoproj" {
        if args.assign.is_some() {
            bail!("the twoproj backend evaluates along the parameter path; --assign does not apply");
        }
        return eval_twoproj(&args.expr, args.grid);
    }
    if args.grid.is_some() {
        bail!("--grid only applies to the twoproj backend");
    }

    let algebra = resolve_algebra(&args.backend)?;
    let poly = parse(&args.expr).map_err(|e| anyhow!("{e}"))?;

    let mut env: BTreeMap<String, Element> = BTreeMap::new();
    if let Some(path) = &args.assign {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading assignment {:?}", path.display()))?;
        let value: Value = serde_json::from_str(&text)
            .with_context(|| format!("parsing {:?} as JSON", path.display()))?;
        let object = value
            .as_object()
            .ok_or_else(|| anyhow!("assignment file must be a JSON object of var: element"))?;
        for (var, elem) in object {
            let elem = Element::from_json(&algebra, elem)
                .map_err(|e| anyhow!("bad element for {var:?}: {e}"))?;
            env.insert(var.clone(), elem);
        }
    }

    let missing: Vec<String> = poly
        .free_vars()
        .into_iter()
        .filter(|v| !env.contains_key(v))
        .collect();
    if !missing.is_empty() {
        bail!(
            "expression has unassigned variables {:?}; provide them via --assign",
            missing
        );
    }

    let result = evaluate(&poly, &env, &algebra).map_err(|e| anyhow!("{e}"))?;
    println!("{}", serde_json::to_string(&result.to_json())?);
    Ok(ExitCode::SUCCESS)
}

fn eval_twoproj(expr: &str, grid: Option<usize>) -> Result<ExitCode> {
    let element = TwoProjElement::parse(expr).map_err(|e| anyhow!("{e}"))?;
    match grid {
        Some(n) => {
            let csv = path_csv(&element, n).map_err(|e| anyhow!("{e}"))?;
            print!("{csv}");
        }
        None => {
            let report = endpoint_values(&element).map_err(|e| anyhow!("{e}"))?;
            let encode = |m: &jordanlab_core::twoproj::Sym2<jordanlab_core::Rational>| {
                json!({
                    "a": format_rational(&m.a),
                    "b": format_rational(&m.b),
                    "c": format_rational(&m.c),
                })
            };
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "at0": encode(&report.at0),
                    "at1": encode(&report.at1),
                    "diagonal_at0": report.diagonal_at0,
                    "diagonal_at1": report.diagonal_at1,
                }))?
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
