//! Command-line front end: parse space documents, evaluate operators on
//! them, run the claim registry, hunt for counterexamples to implications,
//! and enumerate small spaces.
//!
//! Exit codes: 0 on success or full verification, 1 when a counterexample
//! is found, 2 on usage or input errors. Set `IDEALTOP_THREADS` to cap the
//! worker pool the searches run on.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use idealtop::classify::{self, ClassificationReport, Witness};
use idealtop::format::{family_to_string, parse_space, print_space, set_to_string, SpaceDocument};
use idealtop::operators;
use idealtop::theorems::{self, Mode, SearchOutcome, SearchStatus};
use idealtop::{enumerate, GroundSet, Ideal, SetFamily, Subset, Topology};

const EXPR_HELP: &str = "\
Expressions:
  star A          local function of A
  sharp A         sharp function of A
  psi A           dual of star: complement of star of the complement
  psi_sharp A     dual of sharp
  cl_star A       A united with star A
  cl_sharp A      A united with sharp A
  closure A       topological closure
  interior A      topological interior
  tau_star        the topology induced by cl_star
  tau_sharp       the topology induced by cl_sharp
  ann             annihilator of the ideal
  quot J          ideal quotient (I:J); J is a family name or set literals
  classify        classification report for the space

A set argument is a named set from the document or a literal like `{a c}`.";

#[derive(Parser)]
#[command(
    name = "idealtop",
    version,
    about = "Finite spaces with ideals: operators, classification, claim checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a space document and echo its canonical form.
    Parse {
        file: PathBuf,
    },
    /// Evaluate an operator expression against a space document.
    #[command(after_help = EXPR_HELP)]
    Compute {
        file: PathBuf,
        /// Expression, e.g. `sharp {b c}` or `tau_star` (see --help).
        #[arg(required = true, trailing_var_arg = true)]
        expr: Vec<String>,
    },
    /// Check registry claims by exhaustive or sampled search.
    Verify {
        /// Claim ids; all sound entries when omitted.
        ids: Vec<String>,
        /// Ground size to search at; defaults to each entry's declared bound.
        #[arg(long)]
        bound: Option<usize>,
        /// Draw seeded random instances instead of sweeping the whole grid.
        #[arg(long)]
        sampled: bool,
        /// Sample count for --sampled runs.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print one JSON outcome per line instead of summary text.
        #[arg(long)]
        json: bool,
    },
    /// Search for an instance where the antecedent holds and the consequent fails.
    Falsify {
        /// Predicate that should hold (see `idealtop list`).
        antecedent: String,
        /// Predicate that should fail.
        consequent: String,
        /// Largest ground size to scan.
        #[arg(long, default_value_t = 3)]
        bound: usize,
        /// Cap on instances examined across all ground sizes.
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the JSON outcome instead of summary text.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all topologies or ideals on n points.
    Enumerate {
        n: usize,
        #[arg(value_enum)]
        kind: Kind,
        /// Print only how many there are.
        #[arg(long)]
        count: bool,
    },
    /// List registry claims and the predicates falsify understands.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Topologies,
    Ideals,
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("IDEALTOP_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: IDEALTOP_THREADS must be a positive integer, got `{value}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(Cli::parse().command) {
        Ok(found_counterexample) => ExitCode::from(u8::from(found_counterexample)),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Parse { file } => {
            print!("{}", print_space(&load(&file)?));
            Ok(false)
        }
        Command::Compute { file, expr } => {
            print!("{}", compute(&load(&file)?, &expr.join(" "))?);
            Ok(false)
        }
        Command::Verify { ids, bound, sampled, samples, seed, json } => {
            cmd_verify(&ids, bound, sampled, samples, seed, json)
        }
        Command::Falsify { antecedent, consequent, bound, budget, seed, json } => {
            let outcome = theorems::falsify(&antecedent, &consequent, bound, budget, seed)?;
            report_outcome(&outcome, json)?;
            Ok(matches!(outcome.status, SearchStatus::Counterexample { .. }))
        }
        Command::Enumerate { n, kind, count } => {
            cmd_enumerate(n, kind, count)?;
            Ok(false)
        }
        Command::List => {
            cmd_list();
            Ok(false)
        }
    }
}

fn load(file: &PathBuf) -> Result<SpaceDocument> {
    let text =
        fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    parse_space(&text).map_err(|diagnostics| {
        let lines: Vec<String> = diagnostics.iter().map(|d| format!("  {d}")).collect();
        anyhow!("{} does not parse:\n{}", file.display(), lines.join("\n"))
    })
}

fn compute(doc: &SpaceDocument, expr: &str) -> Result<String> {
    let expr = expr.trim();
    let (op, rest) = match expr.split_once(char::is_whitespace) {
        Some((op, rest)) => (op, rest.trim()),
        None => (expr, ""),
    };
    let set_result = |s: Subset| Ok(format!("{}\n", set_to_string(&doc.ground, s)));
    let family_result = |f: &SetFamily| Ok(format!("{}\n", family_to_string(f)));
    let space = || doc.space().map_err(|e| anyhow!("{e}"));
    let topology = || {
        doc.topology.clone().ok_or_else(|| anyhow!("the document declares no topology"))
    };
    let ideal =
        || doc.ideal.clone().ok_or_else(|| anyhow!("the document declares no ideal"));
    match op {
        "star" => set_result(operators::local_function(&space()?, set_arg(doc, rest)?)),
        "sharp" => set_result(operators::sharp_function(&space()?, set_arg(doc, rest)?)),
        "psi" => set_result(operators::psi(&space()?, set_arg(doc, rest)?)),
        "psi_sharp" => set_result(operators::psi_sharp(&space()?, set_arg(doc, rest)?)),
        "cl_star" => set_result(operators::cl_star(&space()?, set_arg(doc, rest)?)),
        "cl_sharp" => set_result(operators::cl_sharp(&space()?, set_arg(doc, rest)?)),
        "closure" => set_result(topology()?.closure(set_arg(doc, rest)?)),
        "interior" => set_result(topology()?.interior(set_arg(doc, rest)?)),
        "tau_star" => {
            no_argument(op, rest)?;
            family_result(operators::tau_star(&space()?).family())
        }
        "tau_sharp" => {
            no_argument(op, rest)?;
            family_result(operators::tau_sharp(&space()?).family())
        }
        "ann" => {
            no_argument(op, rest)?;
            family_result(operators::annihilator(ideal()?.family()).family())
        }
        "quot" => {
            family_result(operators::ideal_quotient(&ideal()?, &family_arg(doc, rest)?).family())
        }
        "classify" => {
            no_argument(op, rest)?;
            classify_report(doc)
        }
        "" => bail!("empty expression; try `idealtop compute --help`"),
        other => bail!("unknown expression `{other}`; try `idealtop compute --help`"),
    }
}

fn no_argument(op: &str, rest: &str) -> Result<()> {
    if rest.is_empty() {
        Ok(())
    } else {
        bail!("`{op}` takes no argument, got `{rest}`")
    }
}

/// A named set from the document or one `{..}` literal.
fn set_arg(doc: &SpaceDocument, rest: &str) -> Result<Subset> {
    if rest.is_empty() {
        bail!("expected a set argument: a name from the document or a literal like `{{a c}}`");
    }
    if rest.starts_with('{') {
        let (s, tail) = set_literal(&doc.ground, rest)?;
        if !tail.trim().is_empty() {
            bail!("unexpected input after the set literal: `{}`", tail.trim());
        }
        return Ok(s);
    }
    doc.sets
        .get(rest)
        .copied()
        .ok_or_else(|| anyhow!("the document has no set named `{rest}`"))
}

/// A named family from the document or a run of `{..}` literals.
fn family_arg(doc: &SpaceDocument, rest: &str) -> Result<SetFamily> {
    if rest.is_empty() {
        bail!("expected a family argument: a name from the document or literals like `{{a}} {{a c}}`");
    }
    if rest.starts_with('{') {
        let mut members = Vec::new();
        let mut remaining = rest;
        while !remaining.trim().is_empty() {
            let trimmed = remaining.trim_start();
            if !trimmed.starts_with('{') {
                bail!("expected a set literal, got `{trimmed}`");
            }
            let (s, tail) = set_literal(&doc.ground, trimmed)?;
            members.push(s);
            remaining = tail;
        }
        return Ok(SetFamily::new(doc.ground.clone(), members));
    }
    doc.families
        .get(rest)
        .cloned()
        .ok_or_else(|| anyhow!("the document has no family named `{rest}`"))
}

/// One `{a c}` literal at the front of `text`; returns the rest.
fn set_literal<'t>(ground: &Arc<GroundSet>, text: &'t str) -> Result<(Subset, &'t str)> {
    let body = &text[1..];
    let end = body.find('}').ok_or_else(|| anyhow!("unclosed `{{` in set literal"))?;
    let mut indices = Vec::new();
    for label in body[..end].split_whitespace() {
        indices.push(
            ground
                .index_of(label)
                .ok_or_else(|| anyhow!("unknown element `{label}` in set literal"))?,
        );
    }
    Ok((ground.subset_of_indices(indices), &body[end + 1..]))
}

fn classify_report(doc: &SpaceDocument) -> Result<String> {
    let space = doc.space().map_err(|e| anyhow!("{e}"))?;
    let ground = space.ground();
    let mut out = String::new();
    let line = |r: &ClassificationReport| match (r.verdict, &r.witness) {
        (true, _) => format!("{}: yes\n", r.predicate),
        (false, None) => format!("{}: no\n", r.predicate),
        (false, Some(Witness::Set(s))) => {
            format!("{}: no (witness {})\n", r.predicate, set_to_string(ground, *s))
        }
        (false, Some(Witness::Pair(s, t))) => format!(
            "{}: no (witness {} and {})\n",
            r.predicate,
            set_to_string(ground, *s),
            set_to_string(ground, *t)
        ),
    };
    out.push_str(&line(&classify::check_proper(space.ideal())));
    match classify::check_maximal_ideal(space.ideal()) {
        Ok(r) => out.push_str(&line(&r)),
        Err(e) => out.push_str(&format!("maximal_ideal: not applicable ({e})\n")),
    }
    match classify::check_minimal_ideal(space.ideal()) {
        Ok(r) => out.push_str(&line(&r)),
        Err(e) => out.push_str(&format!("minimal_ideal: not applicable ({e})\n")),
    }
    out.push_str(&line(&classify::check_faithful(space.ideal().family())));
    out.push_str(&line(&classify::check_hayashi_samuel(&space)));
    out.push_str(&line(&classify::check_t0(space.topology())));
    out.push_str(&line(&classify::check_hausdorff(space.topology())));
    out.push_str(&line(&classify::check_connected(space.topology())));
    Ok(out)
}

fn cmd_verify(
    ids: &[String],
    bound: Option<usize>,
    sampled: bool,
    samples: u64,
    seed: u64,
    json: bool,
) -> Result<bool> {
    let targets: Vec<theorems::TheoremInfo> = if ids.is_empty() {
        theorems::theorems().into_iter().filter(|t| !t.expected_failure).collect()
    } else {
        ids.iter()
            .map(|id| {
                theorems::theorem(id)
                    .ok_or_else(|| anyhow!("unknown claim id `{id}`; see `idealtop list`"))
            })
            .collect::<Result<_>>()?
    };
    let mut found = false;
    for t in targets {
        let mode = if sampled { Mode::Sampled { samples } } else { Mode::Exhaustive };
        let outcome = theorems::run_theorem(t.id, bound.unwrap_or(t.declared_bound), mode, seed)?;
        found |= matches!(outcome.status, SearchStatus::Counterexample { .. });
        report_outcome(&outcome, json)?;
    }
    Ok(found)
}

fn report_outcome(outcome: &SearchOutcome, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(outcome)?);
        return Ok(());
    }
    match &outcome.status {
        SearchStatus::Verified { instances } => {
            println!("id={} status=verified instances={instances} seed={}", outcome.id, outcome.seed);
        }
        SearchStatus::Counterexample { index, note, document } => {
            println!("id={} status=counterexample index={index} seed={}", outcome.id, outcome.seed);
            println!("note: {note}");
            print!("{document}");
        }
        SearchStatus::Exhausted => {
            println!(
                "id={} status=exhausted examined={} seed={}",
                outcome.id, outcome.examined, outcome.seed
            );
        }
    }
    Ok(())
}

fn cmd_enumerate(n: usize, kind: Kind, count: bool) -> Result<()> {
    let families: Vec<SetFamily> = match kind {
        Kind::Topologies => {
            enumerate::topologies_on(n)?.iter().map(|t: &Topology| t.family().clone()).collect()
        }
        Kind::Ideals => {
            enumerate::ideals_on(n)?.iter().map(|i: &Ideal| i.family().clone()).collect()
        }
    };
    if count {
        println!("{}", families.len());
    } else {
        for family in families {
            println!("{}", family_to_string(&family));
        }
    }
    Ok(())
}

fn cmd_list() {
    println!("claims (verify):");
    for t in theorems::theorems() {
        let flag = if t.expected_failure { "  [expected failure]" } else { "" };
        println!(
            "  {:5}  exhaustive <= {}, sampled <= {}{flag}",
            t.id, t.max_exhaustive, t.max_bound
        );
        println!("         {}", t.title);
    }
    println!();
    println!("predicates (falsify):");
    for p in theorems::predicates() {
        println!("  {:22} {}  [over {}]", p.name, p.about, p.domain);
    }
}
