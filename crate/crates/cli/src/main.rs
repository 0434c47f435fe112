//! `polyprime`: classify polyominoes, search zig-zag walks, export ideals,
//! certify primality and run the closed-path harness.
//!
//! Exit codes: 0 success, 2 counterexample or violated invariant,
//! 3 budget exhausted, 4 input error.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use polyprime::classify::{closed_path_certificate, find_l_configurations, find_ladders};
use polyprime::families::{
    build_psc, build_rectangle_linked, certify_family, enumerate_closed_paths, run_harness, FamilyKind, FamilySpec,
    HarnessOptions, PscParts, RectangleParts,
};
use polyprime::ideals::{binomial_text, exchange_text, inner_minors, toric_map_marked, ToricMap};
use polyprime::toric::{certify_primality, closed_path_map, toric_ideal, Certificate, InconclusiveReason, PrimalityVerdict};
use polyprime::zigzag::find_zigzag_walk;
use polyprime::{format, shapes, FamilyError, Format, GridError, ParseError, Polyomino, ToricError};
use polyprime_algebra::Budget;

const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "polyprime", version, about = "Primality of polyomino ideals")]
struct Cli {
    /// Shape encoding for input and output (detected from the input when omitted).
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Emit JSON instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Stop Gröbner computations after this many S-pairs.
    #[arg(long, global = true)]
    budget_pairs: Option<usize>,
    /// Stop Gröbner computations beyond this S-polynomial degree.
    #[arg(long, global = true)]
    budget_degree: Option<u64>,
    /// Wall-clock limit per certification, in seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural facts: simple, holes, closed path, L-configurations, ladders.
    Classify(ShapeArg),
    /// Print a zig-zag walk, or "none".
    Zigzag(ShapeArg),
    /// Export the polyomino ideal, optionally with the toric map and its kernel.
    Ideal {
        #[command(flatten)]
        shape: ShapeArg,
        /// Also print the toric map.
        #[arg(long)]
        map: bool,
        /// Also print a reduced Gröbner basis of the toric ideal.
        #[arg(long)]
        toric: bool,
    },
    /// Certify primality of the polyomino ideal.
    Certify(ShapeArg),
    /// List closed paths up to a rank, one per symmetry class.
    Enumerate {
        #[arg(long)]
        max_rank: usize,
    },
    /// Check every closed path up to a rank; JSON-lines report.
    Verify(VerifyArgs),
    /// Validate and certify a linked-family instance.
    Family {
        /// JSON file or example name (psc, psc-straight, l-rectangle,
        /// l-rectangle-small, ladder-rectangle, rectangle-linked).
        spec: String,
    },
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// File path, `-` for stdin, a built-in name (frame3, ring22,
    /// diamond16), or an inline grid with rows separated by `/`.
    shape: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    max_rank: usize,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for cached per-shape records.
    #[arg(long, env = "POLYPRIME_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Include per-shape wall-clock times (output is then not byte-stable).
    #[arg(long)]
    timings: bool,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum FamilyInput {
    Psc(PscParts),
    RectangleLinked(RectangleParts),
    GoodLRectangle(RectangleParts),
    LadderRectangle(RectangleParts),
}

/// What a command produced: the report text and the exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn input_error(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(InputError(e.to_string()))
}

#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn read_source(arg: &str) -> Result<Option<String>> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(Some(s));
    }
    let path = PathBuf::from(arg);
    if path.is_file() {
        return fs::read_to_string(&path)
            .map(Some)
            .with_context(|| format!("reading {}", path.display()));
    }
    Ok(None)
}

fn load_shape(arg: &str, format: Option<Format>) -> Result<Polyomino> {
    let text = match read_source(arg)? {
        Some(t) => t,
        None => {
            if let Some(p) = shapes::by_name(arg) {
                return Ok(p);
            }
            if arg.contains('#') || arg.trim_start().starts_with('{') {
                if arg.trim_start().starts_with('{') {
                    arg.to_string()
                } else {
                    arg.replace('/', "\n")
                }
            } else {
                return Err(input_error(format!("{arg}: no such file or shape name")));
            }
        }
    };
    let fmt = format.unwrap_or_else(|| format::detect(&text));
    format::parse(&text, fmt).map_err(|e: ParseError| input_error(format!("{arg}: {e}")))
}

fn budget(cli: &Cli) -> Budget {
    Budget {
        max_pairs: cli.budget_pairs,
        max_degree: cli.budget_degree,
        max_seconds: cli.budget_seconds,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(cli: &Cli, p: &Polyomino) -> Outcome {
    let holes = p.holes().len();
    let cycle = closed_path_certificate(p);
    let l_configs = find_l_configurations(p);
    let ladders = find_ladders(p, 3);
    if cli.json {
        let v = json!({
            "rank": p.rank(),
            "simple": p.is_simple(),
            "holes": holes,
            "closed_path": cycle.as_ref().map(|c| &c.cycle),
            "l_configurations": l_configs,
            "ladders": ladders,
        });
        return Outcome::ok(format!("{v}\n"));
    }
    let mut out = String::new();
    out.push_str(&format!("cells: {}\n", p.rank()));
    out.push_str(&format!("simple: {}\n", yes_no(p.is_simple())));
    out.push_str(&format!("holes: {holes}\n"));
    match &cycle {
        Some(c) => out.push_str(&format!("closed path: yes ({} cells)\n", c.len())),
        None => out.push_str("closed path: no\n"),
    }
    out.push_str(&format!("L-configurations: {}\n", l_configs.len()));
    out.push_str(&format!(
        "ladders with at least 3 steps: {}{}\n",
        ladders.len(),
        ladders
            .iter()
            .map(|l| l.steps())
            .max()
            .map_or(String::new(), |s| format!(" (longest {s} steps)"))
    ));
    Outcome::ok(out)
}

fn zigzag(cli: &Cli, p: &Polyomino) -> Outcome {
    let walk = find_zigzag_walk(p);
    if cli.json {
        return Outcome::ok(format!("{}\n", json!({ "zigzag": walk })));
    }
    match walk {
        None => Outcome::ok("none\n".to_string()),
        Some(w) => {
            let mut out = format!("zig-zag walk of length {}\n", w.len());
            for (k, interval) in w.intervals.iter().enumerate() {
                out.push_str(&format!("I{} = {}  v = {}  z = {}\n", k + 1, interval, w.v[k], w.z[k]));
            }
            Outcome::ok(out)
        }
    }
}

fn map_for(p: &Polyomino) -> Result<ToricMap> {
    if p.is_simple() {
        return Ok(toric_map_marked(p, &BTreeSet::new())?);
    }
    match closed_path_map(p)? {
        Some((phi, _)) => Ok(phi),
        None => Err(input_error("no toric map: not simple and no L-configuration or ladder")),
    }
}

fn ideal(cli: &Cli, p: &Polyomino, map: bool, toric: bool) -> Result<Outcome> {
    let minors = inner_minors(p);
    let names = polyprime::ideals::VertexRing::of(p).names();
    let phi = if map || toric { Some(map_for(p)?) } else { None };
    let j = match (&phi, toric) {
        (Some(phi), true) => Some(toric_ideal(phi, &budget(cli))?),
        _ => None,
    };
    let map_lines: Option<Vec<String>> = phi.as_ref().filter(|_| map).map(|phi| {
        let targets = phi.target_names();
        phi.images()
            .iter()
            .zip(phi.ring().names())
            .map(|(img, x)| {
                let factors: Vec<String> = (0..phi.ntarget())
                    .filter(|&t| img.exponent(t) > 0)
                    .map(|t| match img.exponent(t) {
                        1 => targets[t].clone(),
                        e => format!("{}^{e}", targets[t]),
                    })
                    .collect();
                format!("{x} -> {}", factors.join("*"))
            })
            .collect()
    });
    if cli.json {
        let v = json!({
            "variables": names,
            "inner_minors": minors.iter().map(|b| binomial_text(b, &names)).collect::<Vec<_>>(),
            "map": map_lines,
            "toric": j.as_ref().map(|g| g.generators.iter().map(|b| binomial_text(b, &names)).collect::<Vec<_>>()),
        });
        return Ok(Outcome::ok(format!("{v}\n")));
    }
    let mut out = exchange_text(&names, &minors);
    if let Some(lines) = map_lines {
        out.push_str("map:\n");
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    if let Some(g) = j {
        out.push_str("toric:\n");
        for b in &g.generators {
            out.push_str(&binomial_text(b, &names));
            out.push('\n');
        }
    }
    Ok(Outcome::ok(out))
}


fn verdict_code(v: &PrimalityVerdict) -> u8 {
    match v {
        PrimalityVerdict::Prime {
            certificate: Certificate::ContainmentOnly { .. },
            ..
        }
        | PrimalityVerdict::Inconclusive {
            reason: InconclusiveReason::BudgetExhausted(_),
            ..
        } => EXIT_BUDGET,
        _ => 0,
    }
}

fn verdict_outcome(cli: &Cli, v: &PrimalityVerdict, prefix: String) -> Outcome {
    let text = if cli.json {
        format!("{}\n", serde_json::to_string(v).expect("verdict serializes"))
    } else {
        format!("{prefix}{}\n", v.summary())
    };
    Outcome {
        text,
        code: verdict_code(v),
    }
}

fn certify(cli: &Cli, p: &Polyomino) -> Result<Outcome> {
    match certify_primality(p, &budget(cli)) {
        Ok(v) => Ok(verdict_outcome(cli, &v, String::new())),
        Err(ToricError::NotInSupportedClass) => Err(input_error(ToricError::NotInSupportedClass)),
        Err(e) => Err(e.into()),
    }
}

fn enumerate(cli: &Cli, max_rank: usize) -> Outcome {
    let forms = enumerate_closed_paths(max_rank);
    let json_out = cli.json || cli.format == Some(Format::Json);
    let mut out = String::new();
    for (k, f) in forms.iter().enumerate() {
        if json_out {
            out.push_str(&json!({ "rank": f.rank(), "cells": f.cells }).to_string());
            out.push('\n');
        } else {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&format::to_grid(&f.polyomino()));
        }
    }
    Outcome::ok(out)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let mut opts = HarnessOptions::new(args.max_rank, budget(cli));
    opts.jobs = args.jobs;
    opts.cache_dir = args.cache_dir.clone();
    opts.timings = args.timings;
    let report = run_harness(&opts);
    let s = &report.summary;
    eprintln!(
        "{} closed paths up to rank {}: {} prime, {} not prime, {} inconclusive, {} counterexamples",
        s.shapes,
        s.max_rank,
        s.prime,
        s.non_prime,
        s.inconclusive,
        s.counterexamples.len()
    );
    let code = if !s.counterexamples.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else if report.records.iter().any(|r| verdict_code(&r.verdict) == EXIT_BUDGET) {
        EXIT_BUDGET
    } else {
        0
    };
    Outcome {
        text: report.to_json_lines(),
        code,
    }
}

fn example_family(name: &str) -> Option<FamilyInput> {
    Some(match name {
        "psc" => FamilyInput::Psc(shapes::psc_example(true)),
        "psc-straight" => FamilyInput::Psc(shapes::psc_example(false)),
        "l-rectangle" => FamilyInput::GoodLRectangle(shapes::l_rectangle_example()),
        "l-rectangle-small" => FamilyInput::GoodLRectangle(shapes::l_rectangle_small()),
        "ladder-rectangle" => FamilyInput::LadderRectangle(shapes::ladder_rectangle_example()),
        "rectangle-linked" => FamilyInput::RectangleLinked(shapes::rectangle_linked_left()),
        _ => return None,
    })
}

fn family(cli: &Cli, spec: &str) -> Result<Outcome> {
    let input = match read_source(spec)? {
        Some(text) => serde_json::from_str::<FamilyInput>(&text)
            .map_err(|e| input_error(format!("{spec}: line {}, column {}: {e}", e.line(), e.column())))?,
        None => example_family(spec).ok_or_else(|| input_error(format!("{spec}: no such file or example")))?,
    };
    let built: Result<(Polyomino, FamilySpec), FamilyError> = match &input {
        FamilyInput::Psc(parts) => build_psc(parts),
        FamilyInput::RectangleLinked(parts) => build_rectangle_linked(parts, FamilyKind::RectangleLinked),
        FamilyInput::GoodLRectangle(parts) => build_rectangle_linked(parts, FamilyKind::GoodLRectangle),
        FamilyInput::LadderRectangle(parts) => build_rectangle_linked(parts, FamilyKind::LadderRectangle),
    };
    let (p, fspec) = built.map_err(|e| match e {
        FamilyError::ConditionViolated { .. } | FamilyError::Grid(_) => input_error(format!("{spec}: {e}")),
        other => other.into(),
    })?;
    let v = certify_family(&p, &fspec, &budget(cli))?;
    if cli.json {
        let text = json!({ "spec": fspec, "rank": p.rank(), "holes": p.holes().len(), "verdict": v });
        return Ok(Outcome {
            text: format!("{text}\n"),
            code: verdict_code(&v),
        });
    }
    let kind = serde_json::to_value(fspec.kind).expect("kind serializes");
    let prefix = format!(
        "valid {}: {} cells, {} hole(s)\n",
        kind.as_str().unwrap_or("family"),
        p.rank(),
        p.holes().len()
    );
    Ok(verdict_outcome(cli, &v, prefix))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Classify(s) => Ok(classify(cli, &load_shape(&s.shape, cli.format)?)),
        Command::Zigzag(s) => Ok(zigzag(cli, &load_shape(&s.shape, cli.format)?)),
        Command::Ideal { shape, map, toric } => ideal(cli, &load_shape(&shape.shape, cli.format)?, *map, *toric),
        Command::Certify(s) => certify(cli, &load_shape(&s.shape, cli.format)?),
        Command::Enumerate { max_rank } => Ok(enumerate(cli, *max_rank)),
        Command::Verify(args) => Ok(verify(cli, args)),
        Command::Family { spec } => family(cli, spec),
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<InputError>().is_some()
        || e.downcast_ref::<ParseError>().is_some()
        || e.downcast_ref::<GridError>().is_some()
        || e.downcast_ref::<io::Error>().is_some()
    {
        return EXIT_INPUT;
    }
    match e.downcast_ref::<ToricError>() {
        Some(ToricError::Algebra(polyprime_algebra::AlgebraError::BudgetExhausted { .. })) => EXIT_BUDGET,
        Some(ToricError::InvariantViolated(_)) => EXIT_COUNTEREXAMPLE,
        _ => match e.downcast_ref::<FamilyError>() {
            Some(FamilyError::Toric(ToricError::InvariantViolated(_))) | Some(FamilyError::CounterexampleFound { .. }) => {
                EXIT_COUNTEREXAMPLE
            }
            _ => 1,
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &outcome.text).with_context(|| format!("writing {}", path.display())),
                None => io::stdout().write_all(outcome.text.as_bytes()).map_err(Into::into),
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}
