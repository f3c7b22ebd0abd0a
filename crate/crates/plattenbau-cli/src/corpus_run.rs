//! Generate a corpus, run the matching pipeline on every instance and
//! summarize. Instances run concurrently; the summary is ordered by
//! instance index so it does not depend on scheduling.

use plattenbau::alpha_flow::{build_incidence_graph, find_alpha_orientation, find_babets};
use plattenbau::boxed_builder::generate::{pinwheel, room_split_corpus};
use plattenbau::boxed_builder::{build_boxed, cells, check_conditions, verify_necessity};
use plattenbau::corpus::{connected_planar_3colorable, eulerian_instances};
use plattenbau::exec::Exec;
use plattenbau::graph_core::{face_classes, isomorphic_graphs, three_color_triangulation};
use plattenbau::planar_builder::build_planar;
use plattenbau::plattenbau_geom::{edge_bound_report, is_boxed, is_proper, touching_graph};
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// connected planar 3-colorable graphs through build-planar
    Planar,
    /// Eulerian triangulations: flow feasibility against babets
    Eulerian,
    /// room-split boxed instances through build-boxed
    Boxed,
}

#[derive(Debug, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub kind: Kind,
    pub max_n: usize,
    pub seed: u64,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub seconds: f64,
    pub failures: Vec<Failure>,
}

fn planar(max_n: usize) -> Vec<Result<(), String>> {
    let corpus = connected_planar_3colorable(max_n);
    Exec::Parallel.map(&corpus, |g| {
        let p = build_planar(g, Exec::Sequential).map_err(|e| e.to_string())?.plattenbau;
        if !is_proper(&p).map_err(|e| e.to_string())?.0 {
            return Err("output is not proper".into());
        }
        let t = touching_graph(&p, false).map_err(|e| e.to_string())?;
        if !isomorphic_graphs(&t, g, usize::MAX).map_err(|e| e.to_string())? {
            return Err("touching graph is not isomorphic to the input".into());
        }
        Ok(())
    })
}

fn eulerian(max_n: usize) -> Vec<Result<(), String>> {
    let corpus = if max_n >= 3 { eulerian_instances(max_n) } else { Vec::new() };
    Exec::Parallel.map(&corpus, |t| {
        let colors = three_color_triangulation(t).map_err(|e| e.to_string())?;
        let classes = face_classes(t, &colors);
        let feasible = find_alpha_orientation(&build_incidence_graph(t, &classes)).is_ok();
        let babet_free = find_babets(t, &classes).is_empty();
        if feasible != babet_free {
            return Err(format!("feasible {feasible} but babet-free {babet_free}"));
        }
        Ok(())
    })
}

fn boxed(max_n: usize, seed: u64, count: usize) -> Vec<Result<(), String>> {
    let mut corpus = room_split_corpus(seed, count, max_n);
    if max_n >= 10 && count > 0 {
        corpus.push(pinwheel());
    }
    Exec::Parallel.map(&corpus, |p| {
        let inst = verify_necessity(p).map_err(|e| e.to_string())?;
        let rep = check_conditions(&inst);
        if !rep.all_pass() {
            return Err(rep.first_failure().unwrap_or_default());
        }
        let q = build_boxed(&inst).map_err(|e| e.to_string())?;
        if verify_necessity(&q).map_err(|e| e.to_string())? != inst {
            return Err("rebuilt instance differs".into());
        }
        let eb = edge_bound_report(&q, true).map_err(|e| e.to_string())?;
        if !eb.tight {
            return Err(format!("{} edges on {} rectangles, expected {}", eb.m, eb.n, eb.bound));
        }
        let rooms = is_boxed(&q).map_err(|e| e.to_string())?.rooms.len();
        let cs = cells(&inst).map_err(|e| e.to_string())?.len();
        if rooms + 1 != cs {
            return Err(format!("{rooms} rooms but {cs} cells"));
        }
        Ok(())
    })
}

pub fn run(kind: Kind, max_n: usize, seed: u64, count: usize) -> Summary {
    let start = Instant::now();
    let results = match kind {
        Kind::Planar => planar(max_n),
        Kind::Eulerian => eulerian(max_n),
        Kind::Boxed => boxed(max_n, seed, count),
    };
    let failures: Vec<Failure> = results
        .iter()
        .enumerate()
        .filter_map(|(instance, r)| r.as_ref().err().map(|reason| Failure { instance, reason: reason.clone() }))
        .collect();
    Summary {
        kind,
        max_n,
        seed,
        instances: results.len(),
        passed: results.len() - failures.len(),
        failed: failures.len(),
        seconds: start.elapsed().as_secs_f64(),
        failures,
    }
}

impl Summary {
    pub fn table(&self) -> String {
        let mut s = format!("{:<10} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9}\n", "kind", "max_n", "seed", "instances", "passed", "failed", "seconds");
        s.push_str(&format!(
            "{:<10} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9.2}\n",
            format!("{:?}", self.kind).to_lowercase(),
            self.max_n,
            self.seed,
            self.instances,
            self.passed,
            self.failed,
            self.seconds
        ));
        for f in &self.failures {
            s.push_str(&format!("  instance {}: {}\n", f.instance, f.reason));
        }
        s
    }
}
