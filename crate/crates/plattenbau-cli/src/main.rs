//! `plattenbau`: build, verify and export rectangle contact representations.
//!
//! Exit codes: 0 success, 1 domain rejection (with a report where one
//! applies), 2 malformed input or I/O failure.

mod corpus_run;
mod export;

use clap::{Parser, Subcommand, ValueEnum};
use plattenbau::boxed_builder::generate::pinwheel;
use plattenbau::boxed_builder::{
    build_boxed, cells, check_conditions, enumerate_orientations, side_relation, verify_necessity, BoxedError, BoxedInstance, ConditionReport,
};
use plattenbau::exec::Exec;
use plattenbau::graph_core::{isomorphic_graphs, Graph};
use plattenbau::planar_builder::{build_planar, PlanarError};
use plattenbau::plattenbau_geom::{cube_faces, fixture_k22n, fixture_kmn, is_boxed, is_proper, origin_squares, touching_graph, Plattenbau};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "plattenbau", version, about = "Touching graphs of axis-aligned rectangles in 3D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    /// outer edge-to-edge contacts count as edges
    Boxed,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Obj,
    Json,
    SvgProjections,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FixtureName {
    Cube,
    K22n,
    Kmn,
    OriginSquares,
    Pinwheel,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a planar 3-colorable graph as a proper Plattenbau
    BuildPlanar {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// write the construction provenance here
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Build a boxed Plattenbau from an instance satisfying P1 to P4
    BuildBoxed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// write the condition report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a Plattenbau: touching graph, properness, boxedness
    Verify {
        #[arg(long, alias = "input")]
        plattenbau: PathBuf,
        /// graph the touching graph must be isomorphic to
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long)]
        proper: bool,
        #[arg(long)]
        boxed: bool,
        #[arg(long, value_enum)]
        convention: Option<Convention>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate P1 to P4 on a boxed instance, a graph with outer vertices,
    /// or a boxed Plattenbau
    CheckBoxed {
        #[arg(long)]
        input: PathBuf,
        /// evaluate the conditions for every feasible orientation
        #[arg(long)]
        enumerate_orientations: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List the feasible 4-orientations of a graph with outer vertices
    Orientations {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cells of a boxed instance
    Cells {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a fixture Plattenbau
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export a Plattenbau as OBJ, canonical JSON or three SVG projections
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Obj)]
        format: Format,
        /// file, or for svg-projections a prefix completed by `_xy.svg` etc.
        #[arg(long)]
        output: PathBuf,
    },
    /// Generate a corpus, run its pipeline and summarize
    CorpusRun {
        #[arg(long, value_enum, default_value_t = corpus_run::Kind::Boxed)]
        kind: corpus_run::Kind,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// instances for seeded corpora
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    /// the input is fine but has no answer; exit 1
    Domain(String),
    /// unreadable or malformed input; exit 2
    Input(String),
}

type Res<T> = Result<T, Failure>;

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Res<T> {
    let s = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_text(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{text}") {
                // a closed pipe downstream is not an error of ours
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Input(format!("stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Res<()> {
    write_text(path, &serde_json::to_string_pretty(value).expect("serializable"))
}

/// Graphs are rebuilt through `Graph::new` so that ranges and loops are
/// checked and edges are normalized.
fn normalize(g: Graph) -> Res<Graph> {
    Graph::new(g.n, g.edges.iter().map(|e| (e[0], e[1]))).map_err(|e| Failure::Input(e.to_string()))
}

fn read_graph(path: &Path) -> Res<Graph> {
    normalize(read_json(path)?)
}

fn read_plattenbau(path: &Path) -> Res<Plattenbau> {
    let p: Plattenbau = read_json(path)?;
    p.validate().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(p)
}

#[derive(Deserialize)]
struct GraphWithOuter {
    graph: Graph,
    outer: [usize; 6],
}

enum BoxedInput {
    Instance(BoxedInstance),
    Graph { graph: Graph, outer: [usize; 6] },
    Plattenbau(Plattenbau),
}

/// Dispatch on the keys present. An untagged serde enum would buffer the
/// integer map keys of the embeddings as strings and reject them.
fn read_boxed_input(path: &Path) -> Res<BoxedInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let bad = |e: serde_json::Error| Failure::Input(format!("{}: {e}", path.display()));
    let v: serde_json::Value = serde_json::from_str(&text).map_err(bad)?;
    if v.get("rectangles").is_some() {
        Ok(BoxedInput::Plattenbau(serde_json::from_str(&text).map_err(bad)?))
    } else if v.get("orientation").is_some() || v.get("sq").is_some() {
        Ok(BoxedInput::Instance(serde_json::from_str(&text).map_err(bad)?))
    } else {
        let g: GraphWithOuter = serde_json::from_str(&text).map_err(bad)?;
        Ok(BoxedInput::Graph { graph: g.graph, outer: g.outer })
    }
}

fn boxed_domain(e: BoxedError) -> Failure {
    Failure::Domain(e.to_string())
}

/// A complete instance from any of the accepted input shapes.
fn read_instance(path: &Path) -> Res<BoxedInstance> {
    match read_boxed_input(path)? {
        BoxedInput::Instance(inst) => {
            // the orientation is indexed by edge, so edges must already be
            // in normal form
            if normalize(inst.graph.clone())? != inst.graph {
                return Err(Failure::Input("instance edges must be sorted pairs [u, v] with u < v".into()));
            }
            Ok(inst)
        }
        BoxedInput::Graph { graph, outer } => BoxedInstance::from_graph(normalize(graph)?, outer).map_err(boxed_domain),
        BoxedInput::Plattenbau(p) => {
            p.validate().map_err(|e| Failure::Input(e.to_string()))?;
            verify_necessity(&p).map_err(boxed_domain)
        }
    }
}

fn planar_failure(e: PlanarError) -> Failure {
    match e {
        PlanarError::Graph(g) => Failure::Input(g.to_string()),
        e => Failure::Domain(e.to_string()),
    }
}

fn build_planar_cmd(input: &Path, output: Option<&Path>, report: Option<&Path>, sequential: bool) -> Res<()> {
    let g = read_graph(input)?;
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    let out = build_planar(&g, exec).map_err(planar_failure)?;
    log::info!("built {} rectangles, {} weak contacts resolved", out.plattenbau.len(), out.provenance.weak_resolutions);
    write_text(output, &export::to_json(&out.plattenbau))?;
    if let Some(r) = report {
        write_json(Some(r), &out.provenance)?;
    }
    Ok(())
}

fn build_boxed_cmd(input: &Path, output: Option<&Path>, report: Option<&Path>) -> Res<()> {
    let inst = read_instance(input)?;
    let rep = check_conditions(&inst);
    if let Some(r) = report {
        write_json(Some(r), &rep)?;
    }
    let p = build_boxed(&inst).map_err(boxed_domain)?;
    write_text(output, &export::to_json(&p))
}

#[derive(Serialize)]
struct VerifyReport {
    rectangles: usize,
    convention: &'static str,
    touching_graph: Graph,
    proper: bool,
    improper_pair: Option<(usize, usize)>,
    boxed: Option<bool>,
    boxed_reason: Option<String>,
    expected: Option<ExpectDiff>,
    ok: bool,
}

#[derive(Serialize)]
struct ExpectDiff {
    isomorphic: bool,
    /// edges of the expected graph missing under the identity labeling
    missing: Vec<[usize; 2]>,
    /// touching edges absent from the expected graph under the identity labeling
    extra: Vec<[usize; 2]>,
}

fn verify_cmd(path: &Path, expect: Option<&Path>, want_proper: bool, want_boxed: bool, convention: Option<Convention>, report: Option<&Path>) -> Res<()> {
    let p = read_plattenbau(path)?;
    let boxed_conv = match convention {
        Some(c) => c == Convention::Boxed,
        None => p.outer.is_some(),
    };
    let geom = |e: plattenbau::plattenbau_geom::GeomError| Failure::Domain(e.to_string());
    let g = touching_graph(&p, boxed_conv).map_err(geom)?;
    let (proper, improper_pair) = is_proper(&p).map_err(geom)?;
    let (boxed, boxed_reason) = if want_boxed || p.outer.is_some() {
        match is_boxed(&p) {
            Ok(r) => (Some(r.boxed), r.reason),
            Err(e) => (Some(false), Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    let expected = match expect {
        Some(e) => {
            let h = read_graph(e)?;
            let isomorphic = isomorphic_graphs(&g, &h, usize::MAX).map_err(|e| Failure::Domain(e.to_string()))?;
            let missing = h.edges.iter().filter(|e| !g.edges.contains(e)).copied().collect();
            let extra = g.edges.iter().filter(|e| !h.edges.contains(e)).copied().collect();
            Some(ExpectDiff { isomorphic, missing, extra })
        }
        None => None,
    };
    let ok = (!want_proper || proper) && (!want_boxed || boxed == Some(true)) && expected.as_ref().is_none_or(|d| d.isomorphic);
    let rep = VerifyReport {
        rectangles: p.len(),
        convention: if boxed_conv { "boxed" } else { "plain" },
        touching_graph: g,
        proper,
        improper_pair,
        boxed,
        boxed_reason,
        expected,
        ok,
    };
    write_json(report, &rep)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Domain("verification failed".into()))
    }
}

fn check_boxed_cmd(input: &Path, enumerate: bool, limit: usize, report: Option<&Path>) -> Res<()> {
    let inst = read_instance(input)?;
    let given = check_conditions(&inst);
    let mut out = json!({ "conditions": given, "pass": given.all_pass() });
    if enumerate {
        let all = enumerate_orientations(&inst.graph, &inst.outer, limit)
            .ok_or_else(|| Failure::Domain(format!("more than {limit} orientations")))?;
        let reports: Vec<ConditionReport> = all
            .iter()
            .map(|o| check_conditions(&BoxedInstance { orientation: o.clone(), ..inst.clone() }))
            .collect();
        let passing = reports.iter().filter(|r| r.all_pass()).count();
        // whether feasible orientations can disagree on P3/P4 is open, so
        // disagreement is reported rather than resolved
        let agree = passing == 0 || passing == reports.len();
        out["orientations"] = json!(all.len());
        out["passing_orientations"] = json!(passing);
        out["orientations_agree"] = json!(agree);
        out["per_orientation"] = serde_json::to_value(&reports).expect("serializable");
    }
    write_json(report, &out)?;
    if given.all_pass() {
        Ok(())
    } else {
        Err(Failure::Domain(given.first_failure().unwrap_or_default()))
    }
}

fn orientations_cmd(input: &Path, limit: usize, output: Option<&Path>) -> Res<()> {
    let (graph, outer) = match read_boxed_input(input)? {
        BoxedInput::Instance(i) => (normalize(i.graph)?, i.outer),
        BoxedInput::Graph { graph, outer } => (normalize(graph)?, outer),
        BoxedInput::Plattenbau(_) => return Err(Failure::Input("expected a graph with outer vertices".into())),
    };
    let all = enumerate_orientations(&graph, &outer, limit).ok_or_else(|| Failure::Domain(format!("more than {limit} orientations")))?;
    if all.is_empty() {
        return Err(Failure::Domain(BoxedError::Infeasible.to_string()));
    }
    write_json(output, &json!({ "edges": graph.edges, "orientations": all }))
}

fn cells_cmd(input: &Path, output: Option<&Path>) -> Res<()> {
    let inst = read_instance(input)?;
    let h = side_relation(&inst).map_err(boxed_domain)?;
    let cs = cells(&inst).map_err(boxed_domain)?;
    let equators: Vec<Vec<usize>> = (0..inst.n()).map(|v| inst.equator(v).into_iter().collect()).collect();
    write_json(output, &json!({ "sides": h.sides.len(), "cells": cs, "equators": equators }))
}

fn fixture_cmd(name: FixtureName, n: usize, m: usize, output: Option<&Path>) -> Res<()> {
    let p = match name {
        FixtureName::Cube => cube_faces(),
        FixtureName::K22n => fixture_k22n(n),
        FixtureName::Kmn => fixture_kmn(m, n),
        FixtureName::OriginSquares => origin_squares(),
        FixtureName::Pinwheel => pinwheel(),
    };
    write_text(output, &export::to_json(&p))
}

fn export_cmd(input: &Path, format: Format, output: &Path) -> Res<()> {
    let p = read_plattenbau(input)?;
    match format {
        Format::Obj => write_text(Some(output), &export::to_obj(&p)),
        Format::Json => write_text(Some(output), &export::to_json(&p)),
        Format::SvgProjections => {
            for (plane, svg) in export::svg_projections(&p) {
                let mut name = output.as_os_str().to_owned();
                name.push(format!("_{plane}.svg"));
                write_text(Some(Path::new(&name)), &svg)?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    match cli.command {
        Command::BuildPlanar { input, output, report, sequential } => build_planar_cmd(&input, output.as_deref(), report.as_deref(), sequential),
        Command::BuildBoxed { input, output, report } => build_boxed_cmd(&input, output.as_deref(), report.as_deref()),
        Command::Verify { plattenbau, expect, proper, boxed, convention, report } => {
            verify_cmd(&plattenbau, expect.as_deref(), proper, boxed, convention, report.as_deref())
        }
        Command::CheckBoxed { input, enumerate_orientations, limit, report } => check_boxed_cmd(&input, enumerate_orientations, limit, report.as_deref()),
        Command::Orientations { input, limit, output } => orientations_cmd(&input, limit, output.as_deref()),
        Command::Cells { input, output } => cells_cmd(&input, output.as_deref()),
        Command::Fixture { name, n, m, output } => fixture_cmd(name, n, m, output.as_deref()),
        Command::Export { input, format, output } => export_cmd(&input, format, &output),
        Command::CorpusRun { kind, max_n, seed, count, report } => {
            let s = corpus_run::run(kind, max_n, seed, count);
            write_text(None, s.table().trim_end())?;
            if let Some(r) = report {
                write_json(Some(&r), &s)?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("PLATTENBAU_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
