//! The command-line surface.
//!
//! Every subcommand reads a bound-quiver file (`--input PATH` or standard
//! input), prints a human-readable summary to standard output, and with
//! `--report PATH` writes the structured JSON report. Exit codes: 0 the
//! computation ran (even when a mathematical verdict is "false"), 1 input
//! error, 2 internal cross-check failure (the combinatorial formulas and
//! the linear-algebra oracle disagreeing is a falsification event).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{self, ClauseStatus, ShapeTag};
use crate::cma;
use crate::derived;
use crate::forbidden;
use crate::generate::{self, GeneratorConfig, ShapeConstraint};
use crate::homdim::{self, HomDim};
use crate::quiver::{self, BoundQuiver};
use crate::rep::{self, ResolveOutcome};
use crate::report;
use crate::strings;
use crate::Error;

#[derive(Parser)]
#[command(name = "gentle-lab", version, about = "Computations with gentle algebras presented as bound quivers")]
struct Cli {
    /// Bound-quiver file; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the structured JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gentleness and finite-dimensionality of the input.
    Validate,
    /// Counts, forbidden cycles, maximal forbidden paths, dimensions.
    Info,
    /// Enumerate string classes up to a length bound.
    Strings {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Partition the enumeration over this many threads
        /// (deterministic merge).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Enumerate band classes up to a length bound, plus the exact
    /// band-existence verdict.
    Bands {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Dimensions and attachments of one string, cross-checked against the
    /// resolution oracle.
    Dims {
        #[arg(long)]
        string: String,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Resolve a string module by iterated syzygies.
    Resolve {
        #[arg(long)]
        string: String,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Emit the CM-Auslander presentation with the vertex map as comments.
    Cma,
    /// Delete vertices (with incident arrows and relations).
    Quotient {
        /// Comma-separated vertex identifiers to delete.
        #[arg(long)]
        drop: String,
    },
    /// Corner algebra at a set of vertices, re-presented as a bound quiver.
    Corner {
        /// Comma-separated vertex identifiers to keep.
        #[arg(long)]
        keep: String,
    },
    /// Verify the recollement package of the CM-Auslander algebra.
    RecollementVerify,
    /// Cohomological width of a string complex.
    Hw {
        /// Homotopy word, e.g. "a41*a12 x^-1" or "e:v".
        #[arg(long)]
        homotopy: String,
        #[arg(long, default_value_t = 0)]
        anchor: i32,
    },
    /// Classification checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Krull-Gabriel dimension through the classification table.
    KgDim,
    /// Generate a random gentle bound quiver.
    Generate(GenerateArgs),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Exact quasi-tilted decision.
    QuasiTilted,
    /// Quasi-tiltedness of the CM-Auslander quotient against the two
    /// finitistic conditions; disagreement exits 2.
    TheoremMain,
    /// Bounded widths of off-cycle string complexes against the same
    /// conditions; both sides are reported without forcing agreement.
    TheoremMain2 {
        #[arg(long, default_value_t = 6)]
        max_letters: usize,
    },
    /// Krull-Gabriel comparison across the CM-Auslander construction for
    /// one-cycle algebras.
    CorollaryMain3,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// any | tree | one-cycle
    #[arg(long, default_value = "any")]
    shape: String,
    #[arg(long, default_value_t = 3)]
    min_vertices: usize,
    #[arg(long, default_value_t = 8)]
    max_vertices: usize,
    #[arg(long, default_value_t = 1)]
    extra_arrows: usize,
    /// Percent chance of a relation where the choice is free.
    #[arg(long, default_value_t = 60)]
    relation_bias: u8,
}

struct Outcome {
    text: String,
    result: Value,
    exit: i32,
}

/// Run with the given arguments (without the program name), writing human
/// output to `out`. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn std::io::Write) -> i32 {
    let cli = match Cli::try_parse_from(std::iter::once("gentle-lab".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests print and exit 0.
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };

    let needs_input = !matches!(cli.command, Command::Generate(_));
    let input_text = if needs_input {
        match read_input(&cli.input) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        }
    } else {
        None
    };

    let command_id = command_id(&cli.command);
    let outcome = match dispatch(&cli.command, input_text.as_deref()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Internal(_) | Error::Inconclusive(_) => 2,
                _ => 1,
            };
        }
    };

    let _ = out.write_all(outcome.text.as_bytes());
    if let Some(path) = &cli.report {
        let full = report::make_report(&command_id, input_text.as_deref(), outcome.result);
        if let Err(e) = std::fs::write(path, report::to_stable_string(&full)) {
            eprintln!("error: cannot write report: {e}");
            return 1;
        }
    }
    outcome.exit
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Input(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn command_id(c: &Command) -> String {
    match c {
        Command::Validate => "validate",
        Command::Info => "info",
        Command::Strings { .. } => "strings",
        Command::Bands { .. } => "bands",
        Command::Dims { .. } => "dims",
        Command::Resolve { .. } => "resolve",
        Command::Cma => "cma",
        Command::Quotient { .. } => "quotient",
        Command::Corner { .. } => "corner",
        Command::RecollementVerify => "recollement-verify",
        Command::Hw { .. } => "hw",
        Command::Check(CheckCommand::QuasiTilted) => "check quasi-tilted",
        Command::Check(CheckCommand::TheoremMain) => "check theorem-main",
        Command::Check(CheckCommand::TheoremMain2 { .. }) => "check theorem-main2",
        Command::Check(CheckCommand::CorollaryMain3) => "check corollary-main3",
        Command::KgDim => "kg-dim",
        Command::Generate(_) => "generate",
    }
    .to_string()
}

fn parse_input(text: &str) -> Result<BoundQuiver, Error> {
    quiver::parse_bound_quiver(text)
}

fn dispatch(command: &Command, input: Option<&str>) -> Result<Outcome, Error> {
    match command {
        Command::Generate(args) => cmd_generate(args),
        _ => {
            let bq = parse_input(input.expect("input present for quiver commands"))?;
            match command {
                Command::Validate => cmd_validate(&bq),
                Command::Info => cmd_info(&bq),
                Command::Strings { max_len, jobs } => cmd_strings(&bq, *max_len, *jobs),
                Command::Bands { max_len } => cmd_bands(&bq, *max_len),
                Command::Dims { string, cap } => cmd_dims(&bq, string, *cap),
                Command::Resolve { string, cap } => cmd_resolve(&bq, string, *cap),
                Command::Cma => cmd_cma(&bq),
                Command::Quotient { drop } => cmd_quotient(&bq, drop),
                Command::Corner { keep } => cmd_corner(&bq, keep),
                Command::RecollementVerify => cmd_recollement(&bq),
                Command::Hw { homotopy, anchor } => cmd_hw(&bq, homotopy, *anchor),
                Command::Check(CheckCommand::QuasiTilted) => cmd_quasi_tilted(&bq),
                Command::Check(CheckCommand::TheoremMain) => cmd_theorem_main(&bq),
                Command::Check(CheckCommand::TheoremMain2 { max_letters }) => {
                    cmd_theorem_main2(&bq, *max_letters)
                }
                Command::Check(CheckCommand::CorollaryMain3) => cmd_corollary(&bq),
                Command::KgDim => cmd_kg(&bq),
                Command::Generate(_) => unreachable!(),
            }
        }
    }
}

fn vertex_set(bq: &BoundQuiver, csv: &str) -> Result<BTreeSet<usize>, Error> {
    let mut set = BTreeSet::new();
    for name in csv.split(',') {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        let v = bq
            .quiver
            .vertex_index(name)
            .ok_or_else(|| Error::Input(format!("unknown vertex '{name}'")))?;
        set.insert(v);
    }
    Ok(set)
}

fn dim_json(d: HomDim) -> Value {
    match d {
        HomDim::Finite(n) => json!(n),
        HomDim::Infinite => json!("inf"),
    }
}

fn cmd_validate(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let violations = quiver::validate_gentle(bq);
    let mut text = String::new();
    if violations.is_empty() {
        let _ = writeln!(text, "gentle: ok");
    } else {
        let _ = writeln!(text, "gentle: {} violations", violations.len());
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    let dim = quiver::algebra_dimension(bq);
    let dim_field = match &dim {
        Ok(n) => {
            let _ = writeln!(text, "dimension: {n}");
            json!(n)
        }
        Err(Error::InfiniteDimensional { cycle }) => {
            let _ = writeln!(text, "dimension: infinite (cycle {})", cycle.join(" -> "));
            json!({"infinite_cycle": cycle})
        }
        Err(e) => return Err(Error::Input(e.to_string())),
    };
    Ok(Outcome {
        text,
        result: json!({
            "gentle": violations.is_empty(),
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "dimension": dim_field,
        }),
        exit: 0,
    })
}

fn cmd_info(bq: &BoundQuiver) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let dim = quiver::algebra_dimension(bq)?;
    let shape = classify::shape_class(bq);
    let cycles = forbidden::find_forbidden_cycles(bq);
    let paths = forbidden::maximal_forbidden_paths(bq);
    let (sources, sinks) = forbidden::strong_sources_sinks(bq);
    let gl = homdim::global_dimension(bq);
    let fin = homdim::finitistic_dimension(bq);

    let mut text = String::new();
    let _ = writeln!(text, "vertices: {}", bq.vertex_count());
    let _ = writeln!(text, "arrows: {}", bq.arrow_count());
    let _ = writeln!(text, "relations: {}", bq.relations.len());
    let _ = writeln!(text, "dimension: {dim}");
    let shape_name = match shape.tag {
        ShapeTag::Forest => "forest",
        ShapeTag::OneCycle => "one-cycle",
        ShapeTag::MultiCycle => "multi-cycle",
    };
    let _ = writeln!(
        text,
        "shape: {shape_name} (components {}, cycle rank {})",
        shape.components, shape.cycle_rank
    );
    let _ = writeln!(text, "forbidden cycles: {}", cycles.len());
    let cycle_strs: Vec<String> = cycles
        .iter()
        .map(|c| c.iter().map(|&a| bq.arrow_name(a)).collect::<Vec<_>>().join("*"))
        .collect();
    for c in &cycle_strs {
        let _ = writeln!(text, "  {c}");
    }
    let _ = writeln!(text, "maximal forbidden paths: {}", paths.len());
    let path_strs: Vec<String> = paths.iter().map(|p| p.display(bq)).collect();
    for (p, fp) in path_strs.iter().zip(&paths) {
        let _ = writeln!(text, "  {p} (length {})", fp.len());
    }
    let name_list = |vs: &[usize]| -> String {
        if vs.is_empty() {
            "(none)".to_string()
        } else {
            vs.iter().map(|&v| bq.vertex_name(v)).collect::<Vec<_>>().join(" ")
        }
    };
    let _ = writeln!(text, "strong sources: {}", name_list(&sources));
    let _ = writeln!(text, "strong sinks: {}", name_list(&sinks));
    let _ = writeln!(text, "global dimension: {gl}");
    let _ = writeln!(text, "finitistic dimension: {fin}");

    Ok(Outcome {
        text,
        result: json!({
            "vertices": bq.vertex_count(),
            "arrows": bq.arrow_count(),
            "relations": bq.relations.len(),
            "dimension": dim,
            "shape": {"tag": shape_name, "components": shape.components, "cycle_rank": shape.cycle_rank},
            "forbidden_cycles": cycle_strs,
            "maximal_forbidden_paths": path_strs,
            "strong_sources": sources.iter().map(|&v| bq.vertex_name(v)).collect::<Vec<_>>(),
            "strong_sinks": sinks.iter().map(|&v| bq.vertex_name(v)).collect::<Vec<_>>(),
            "global_dimension": dim_json(gl),
            "finitistic_dimension": dim_json(fin),
        }),
        exit: 0,
    })
}

fn cmd_strings(bq: &BoundQuiver, max_len: usize, jobs: Option<usize>) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let list = match jobs {
        Some(j) => strings::enumerate_strings_parallel(bq, max_len, j),
        None => strings::enumerate_strings(bq, max_len, |_| true),
    };
    let mut text = String::new();
    let _ = writeln!(text, "strings up to length {max_len}: {} classes", list.len());
    let shown: Vec<String> = list.iter().map(|s| s.display(bq)).collect();
    for s in &shown {
        let _ = writeln!(text, "  {s}");
    }
    Ok(Outcome {
        text,
        result: json!({"max_len": max_len, "count": list.len(), "classes": shown}),
        exit: 0,
    })
}

fn cmd_bands(bq: &BoundQuiver, max_len: usize) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let exists = strings::StringAutomaton::new(bq).has_cycle();
    let list = strings::enumerate_bands(bq, max_len);
    let mut text = String::new();
    let _ = writeln!(text, "band exists: {exists} (exact)");
    let _ = writeln!(text, "bands up to length {max_len}: {} classes", list.len());
    let shown: Vec<String> = list.iter().map(|b| b.display(bq)).collect();
    for b in &shown {
        let _ = writeln!(text, "  {b}");
    }
    Ok(Outcome {
        text,
        result: json!({"band_exists": exists, "max_len": max_len, "count": list.len(), "classes": shown}),
        exit: 0,
    })
}

fn oracle_agrees(formula: HomDim, oracle: ResolveOutcome) -> bool {
    match (formula, oracle) {
        (HomDim::Finite(n), ResolveOutcome::Finite(m)) => n == m,
        (HomDim::Infinite, ResolveOutcome::CapReached) => true,
        _ => false,
    }
}

fn outcome_str(o: ResolveOutcome) -> String {
    match o {
        ResolveOutcome::Finite(n) => n.to_string(),
        ResolveOutcome::CapReached => "cap-reached".to_string(),
    }
}

fn cmd_dims(bq: &BoundQuiver, literal: &str, cap: usize) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let s = strings::parse_string_literal(bq, literal)?;
    let att = homdim::end_attachments(bq, &s);
    let pd = homdim::proj_dim_string(bq, &s);
    let id = homdim::inj_dim_string(bq, &s);
    let (a, b, c) = homdim::lemma_dim2_predicates(bq, &s);

    let m = rep::string_module(bq, &s)?;
    let oracle_pd = rep::resolve_pd(bq, &m, cap)?;
    let oracle_id = rep::resolve_id(bq, &m, cap)?;
    let agree = oracle_agrees(pd, oracle_pd) && oracle_agrees(id, oracle_id);

    let mut text = String::new();
    let _ = writeln!(text, "string: {}", s.display(bq));
    let _ = writeln!(text, "pd: {pd}");
    let _ = writeln!(text, "id: {id}");
    let _ = writeln!(text, "attachments:");
    let _ = writeln!(text, "  descending left:  {}", att.left_descending.display(bq));
    let _ = writeln!(text, "  descending right: {}", att.right_descending.display(bq));
    let _ = writeln!(text, "  ascending left:   {}", att.left_ascending.display(bq));
    let _ = writeln!(text, "  ascending right:  {}", att.right_ascending.display(bq));
    let _ = writeln!(text, "conditions (A, B, C): {a}, {b}, {c}");
    let _ = writeln!(
        text,
        "oracle (cap {cap}): pd {}, id {} -- {}",
        outcome_str(oracle_pd),
        outcome_str(oracle_id),
        if agree { "agrees" } else { "DISAGREES" }
    );

    let result = json!({
        "string": s.display(bq),
        "pd": dim_json(pd),
        "id": dim_json(id),
        "attachments": {
            "descending_left": att.left_descending.display(bq),
            "descending_right": att.right_descending.display(bq),
            "ascending_left": att.left_ascending.display(bq),
            "ascending_right": att.right_ascending.display(bq),
        },
        "conditions": {"a": a, "b": b, "c": c},
        "oracle": {"cap": cap, "pd": outcome_str(oracle_pd), "id": outcome_str(oracle_id), "agrees": agree},
    });
    Ok(Outcome { text, result, exit: if agree { 0 } else { 2 } })
}

fn cmd_resolve(bq: &BoundQuiver, literal: &str, cap: usize) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let s = strings::parse_string_literal(bq, literal)?;
    let m = rep::string_module(bq, &s)?;
    let mut text = String::new();
    let _ = writeln!(text, "string: {}", s.display(bq));
    let _ = writeln!(text, "module dims: {}", m.dim_display(bq));
    let mut cur = m;
    let mut steps = Vec::new();
    let mut outcome = ResolveOutcome::CapReached;
    for step in 0..=cap {
        let (cover, syz) = rep::projective_cover_and_syzygy(bq, &cur)?;
        let covers: Vec<String> =
            cover.summands.iter().map(|&v| format!("P({})", bq.vertex_name(v))).collect();
        let _ = writeln!(
            text,
            "step {step}: cover {} -> syzygy total dim {}",
            covers.join(" + "),
            syz.total_dim()
        );
        steps.push(json!({"step": step, "cover": covers, "syzygy_dim": syz.total_dim()}));
        if syz.is_zero() {
            outcome = ResolveOutcome::Finite(step);
            break;
        }
        cur = syz;
    }
    let _ = writeln!(text, "outcome: {}", outcome_str(outcome));
    Ok(Outcome {
        text,
        result: json!({
            "string": s.display(bq),
            "cap": cap,
            "steps": steps,
            "outcome": outcome_str(outcome),
        }),
        exit: 0,
    })
}

fn cmd_cma(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let cma = cma::build_cma(bq)?;
    let mut text = String::new();
    let _ = writeln!(text, "# CM-Auslander presentation ({} catalog entries)", cma.catalog.entries.len());
    for (ei, e) in cma.catalog.entries.iter().enumerate() {
        let _ = writeln!(
            text,
            "# vertex {} = right ideal of arrow {} (cycle {}, position {})",
            cma.algebra.vertex_name(cma.catalog_vertex[ei]),
            bq.arrow_name(e.arrow),
            e.cycle + 1,
            e.position + 1
        );
    }
    let quiver_text = quiver::serialize_bound_quiver(&cma.algebra);
    text.push_str(&quiver_text);
    Ok(Outcome {
        text,
        result: json!({
            "catalog": cma.catalog.entries.iter().map(|e| e.name(bq)).collect::<Vec<_>>(),
            "vertices": cma.algebra.vertex_count(),
            "arrows": cma.algebra.arrow_count(),
            "relations": cma.algebra.relations.len(),
            "presentation": quiver_text,
        }),
        exit: 0,
    })
}

fn cmd_quotient(bq: &BoundQuiver, drop_csv: &str) -> Result<Outcome, Error> {
    let drop = vertex_set(bq, drop_csv)?;
    match cma::quotient_by_idempotent(bq, &drop) {
        None => Ok(Outcome {
            text: "zero algebra (all vertices deleted)\n".to_string(),
            result: json!({"zero": true}),
            exit: 0,
        }),
        Some(q) => {
            let text = quiver::serialize_bound_quiver(&q);
            Ok(Outcome {
                text: text.clone(),
                result: json!({"zero": false, "presentation": text}),
                exit: 0,
            })
        }
    }
}

fn cmd_corner(bq: &BoundQuiver, keep_csv: &str) -> Result<Outcome, Error> {
    let keep = vertex_set(bq, keep_csv)?;
    let corner = cma::corner_algebra(bq, &keep)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "kept vertices: {}",
        keep.iter().map(|&v| bq.vertex_name(v)).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(text, "corner dimension: {}", corner.dim());
    match cma::recover_gentle_presentation(bq, &corner) {
        Ok(rec) => {
            let violations = quiver::validate_gentle(&rec.bq);
            let _ = writeln!(text, "recovered presentation:");
            text.push_str(&quiver::serialize_bound_quiver(&rec.bq));
            let _ = writeln!(
                text,
                "gentle: {}",
                if violations.is_empty() { "ok".to_string() } else { format!("{} violations", violations.len()) }
            );
            let presentation = quiver::serialize_bound_quiver(&rec.bq);
            Ok(Outcome {
                text,
                result: json!({
                    "dimension": corner.dim(),
                    "presentation": presentation,
                    "gentle": violations.is_empty(),
                }),
                exit: 0,
            })
        }
        Err(Error::Internal(msg)) => {
            let _ = writeln!(text, "not presentable by length-two monomial relations: {msg}");
            Ok(Outcome {
                text,
                result: json!({"dimension": corner.dim(), "presentable": false}),
                exit: 0,
            })
        }
        Err(e) => Err(e),
    }
}

fn cmd_recollement(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let r = cma::verify_recollement_package(bq)?;
    let mut text = String::new();
    let pf = |ok: bool| if ok { "pass" } else { "FAIL" };
    let _ = writeln!(
        text,
        "(i) corner at the original idempotent recovers the original algebra: {}",
        pf(r.corner_recovers_original)
    );
    let _ = writeln!(
        text,
        "(ii) projective restrictions match the catalog ideals: {}",
        pf(r.projective_restrictions.iter().all(|(_, ok)| *ok))
    );
    for (name, ok) in &r.projective_restrictions {
        let _ = writeln!(text, "   {name}: {}", pf(*ok));
    }
    let _ = writeln!(
        text,
        "(iii) split-path ideals are non-projective and restrict back: {}",
        pf(r.tensor_images.iter().all(|(_, a, b)| *a && *b))
    );
    for (name, np, back) in &r.tensor_images {
        let _ = writeln!(text, "   {name}: non-projective {}, restricts back {}", pf(*np), pf(*back));
    }
    let _ = writeln!(
        text,
        "(iv) quotient by the original idempotent is semisimple: {}",
        pf(r.top_quotient_semisimple)
    );
    let _ = writeln!(text, "overall: {}", pf(r.pass()));
    let pass = r.pass();
    Ok(Outcome {
        text,
        result: json!({
            "corner_recovers_original": r.corner_recovers_original,
            "projective_restrictions": r.projective_restrictions
                .iter().map(|(n, ok)| json!({"entry": n, "pass": ok})).collect::<Vec<_>>(),
            "tensor_images": r.tensor_images
                .iter().map(|(n, a, b)| json!({"entry": n, "non_projective": a, "restricts_back": b})).collect::<Vec<_>>(),
            "top_quotient_semisimple": r.top_quotient_semisimple,
            "pass": pass,
        }),
        exit: 0,
    })
}

fn cmd_hw(bq: &BoundQuiver, literal: &str, anchor: i32) -> Result<Outcome, Error> {
    quiver::require_gentle(bq)?;
    let h = derived::parse_homotopy_literal(bq, literal)?;
    let r = derived::hw(bq, &h, anchor)?;
    let mut text = String::new();
    let _ = writeln!(text, "word: {}", h.display(bq));
    let mut coh = serde_json::Map::new();
    for (d, dims) in &r.cohomology {
        let total: usize = dims.iter().sum();
        let detail: Vec<String> = (0..dims.len())
            .filter(|&v| dims[v] > 0)
            .map(|v| format!("{}:{}", bq.vertex_name(v), dims[v]))
            .collect();
        let _ = writeln!(
            text,
            "H^{d}: total {total}{}",
            if detail.is_empty() { String::new() } else { format!(" ({})", detail.join(" ")) }
        );
        coh.insert(d.to_string(), json!({"total": total, "by_vertex": detail}));
    }
    let _ = writeln!(text, "width: {}", r.width);
    Ok(Outcome {
        text,
        result: json!({"word": h.display(bq), "anchor": anchor, "cohomology": coh, "width": r.width}),
        exit: 0,
    })
}

fn cmd_quasi_tilted(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let v = classify::is_quasi_tilted(bq)?;
    let mut text = String::new();
    let _ = writeln!(text, "quasi-tilted: {}", v.quasi_tilted);
    if let Some(w) = &v.witness {
        let _ = writeln!(text, "witness: {w}");
    }
    Ok(Outcome {
        text,
        result: json!({"quasi_tilted": v.quasi_tilted, "witness": v.witness}),
        exit: 0,
    })
}

fn cmd_theorem_main(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let r = classify::check_theorem_main(bq)?;
    let mut text = String::new();
    let _ = writeln!(text, "quotient quasi-tilted: {}", r.tilde_quasi_tilted);
    if let Some(w) = &r.tilde_witness {
        let _ = writeln!(text, "  witness: {w}");
    }
    let _ = writeln!(
        text,
        "condition 1 (finitistic dimension <= 2): {} (fin.dim {})",
        r.conditions.cond1, r.conditions.fin_dim
    );
    let _ = writeln!(
        text,
        "condition 2 (non-forbidden finite pd+id <= 3): {}",
        r.conditions.cond2
    );
    if let Some(w) = &r.conditions.cond2_witness {
        let _ = writeln!(text, "  witness: {w}");
    }
    let _ = writeln!(text, "agree: {}", r.agree);
    if !r.agree {
        let _ = writeln!(text, "FALSIFICATION: the two sides of the equivalence disagree");
    }
    Ok(Outcome {
        text,
        result: json!({
            "quotient_quasi_tilted": r.tilde_quasi_tilted,
            "quotient_witness": r.tilde_witness,
            "cond1": r.conditions.cond1,
            "fin_dim": dim_json(r.conditions.fin_dim),
            "cond2": r.conditions.cond2,
            "cond2_witness": r.conditions.cond2_witness,
            "agree": r.agree,
        }),
        exit: if r.agree { 0 } else { 2 },
    })
}

fn cmd_theorem_main2(bq: &BoundQuiver, max_letters: usize) -> Result<Outcome, Error> {
    let r = derived::check_width_criterion(bq, max_letters)?;
    let mut text = String::new();
    let _ = writeln!(text, "words checked: {} (max letters {max_letters})", r.words_checked);
    let _ = writeln!(
        text,
        "max width: {}{}",
        r.max_width,
        r.widest_word.as_ref().map(|w| format!(" (word: {w})")).unwrap_or_default()
    );
    let _ = writeln!(
        text,
        "off-cycle homotopy band: {}",
        r.off_cycle_band.clone().unwrap_or_else(|| "none".to_string())
    );
    let _ = writeln!(text, "side widths bounded by 2: {}", r.side_widths_bounded);
    let _ = writeln!(text, "side conditions: {}", r.side_conditions);
    let _ = writeln!(text, "agree: {}", r.agree);
    Ok(Outcome {
        text,
        result: json!({
            "max_letters": max_letters,
            "words_checked": r.words_checked,
            "max_width": r.max_width,
            "widest_word": r.widest_word,
            "off_cycle_band": r.off_cycle_band,
            "side_widths_bounded": r.side_widths_bounded,
            "side_conditions": r.side_conditions,
            "agree": r.agree,
        }),
        exit: 0,
    })
}

fn clause_text(c: &ClauseStatus) -> String {
    match c {
        ClauseStatus::Pass => "pass".to_string(),
        ClauseStatus::Fail(m) => format!("FAIL ({m})"),
        ClauseStatus::Skipped(m) => format!("skipped ({m})"),
    }
}

fn cmd_corollary(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let r = classify::check_corollary_kg(bq)?;
    let mut text = String::new();
    let _ = writeln!(text, "kg(original): {} ({})", r.kg_original.value, r.kg_original.provenance);
    let _ = writeln!(text, "kg(cm-auslander): {} ({})", r.kg_cma.value, r.kg_cma.provenance);
    let _ = writeln!(text, "isomorphic: {}", r.isomorphic);
    let _ = writeln!(text, "kg(catalog quotient): {} ({})", r.kg_tilde.value, r.kg_tilde.provenance);
    let _ = writeln!(text, "clause (1) boundedness by 2 transfers: {}", clause_text(&r.clause_bounded));
    let _ = writeln!(text, "clause (2) equality iff isomorphic: {}", clause_text(&r.clause_equality));
    let _ = writeln!(text, "clause (3) forest quotient at 0: {}", clause_text(&r.clause_tilde_zero));
    let _ = writeln!(text, "overall: {}", if r.pass() { "pass" } else { "FAIL" });
    let pass = r.pass();
    Ok(Outcome {
        text,
        result: json!({
            "kg_original": r.kg_original.value.to_string(),
            "kg_cma": r.kg_cma.value.to_string(),
            "isomorphic": r.isomorphic,
            "kg_tilde": r.kg_tilde.value.to_string(),
            "clause_bounded": clause_text(&r.clause_bounded),
            "clause_equality": clause_text(&r.clause_equality),
            "clause_tilde_zero": clause_text(&r.clause_tilde_zero),
            "pass": pass,
        }),
        exit: 0,
    })
}

fn cmd_kg(bq: &BoundQuiver) -> Result<Outcome, Error> {
    let v = classify::kg_dimension(bq)?;
    let text = format!("kg dimension: {}\nprovenance: {}\n", v.value, v.provenance);
    Ok(Outcome {
        text,
        result: json!({"kg": v.value.to_string(), "provenance": v.provenance}),
        exit: 0,
    })
}

fn cmd_generate(args: &GenerateArgs) -> Result<Outcome, Error> {
    let config = GeneratorConfig {
        min_vertices: args.min_vertices,
        max_vertices: args.max_vertices,
        extra_arrows: args.extra_arrows,
        relation_bias: args.relation_bias,
        seed: args.seed,
        shape: args.shape.parse::<ShapeConstraint>()?,
    };
    let bq = generate::generate(&config)?;
    let text = quiver::serialize_bound_quiver(&bq);
    Ok(Outcome {
        text: text.clone(),
        result: json!({"seed": args.seed, "shape": args.shape, "presentation": text}),
        exit: 0,
    })
}

/// Convenience for tests: run and capture stdout.
pub fn run_capture(args: &[&str]) -> (i32, String) {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut buf = Vec::new();
    let code = run(&owned, &mut buf);
    (code, String::from_utf8(buf).expect("utf8 output"))
}
