//! One function per subcommand. Each takes file contents and returns what
//! to print plus the exit code, so the binary stays a thin shell.

use std::fmt::Write as _;

use rayon::prelude::*;

use daisy_core::expansion::{
    contract, decompose as decompose_cube, expand as expand_graph, is_leq_subgraph, leq_expand,
    DecompositionCertificate, ExpansionSpec,
};
use daisy_core::generators::{
    daisy_corpus, daisy_cube, fibonacci_cube, hypercube, lucas_cube, scramble_graph, strip_and_scramble,
};
use daisy_core::graph::{is_median_graph, DistanceMatrix};
use daisy_core::labelling::{proper_label, proper_violation, recognize_daisy, verify_proper, Recognition};
use daisy_core::oracle::{canonical_form, oracle_theta_star};
use daisy_core::rooted::{daisy_graph as rooted_daisy_graph, RootedGraph};
use daisy_core::theta::{is_class_peripheral, partial_cube_failure, theta_star_partition};
use daisy_core::{BitString, Error, LabelledGraph};

use crate::graphfile::GraphFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: impl Into<String>) -> Self {
        Self { stdout: stdout.into(), stderr: String::new(), code: EXIT_OK }
    }

    fn rejected(stderr: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: stderr.into(), code: EXIT_REJECTED }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {err}"), code: EXIT_USAGE }
    }

    pub fn success(&self) -> bool {
        self.code == EXIT_OK
    }
}

/// Early return with exit 2 on any error.
macro_rules! usage {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::usage(err),
        }
    };
}

/// Early return with exit 1 on any error.
macro_rules! reject {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::rejected(err.to_string()),
        }
    };
}

fn require_labels(file: &GraphFile, command: &str) -> Result<LabelledGraph, String> {
    match file.labelled_graph() {
        Some(lg) => lg.map_err(|e| e.to_string()),
        None => Err(format!("{command} needs a labelled graph (run `daisy label` first)")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hypercube,
    Daisy,
    Fibonacci,
    Lucas,
}

pub fn generate(family: Family, n: usize, generators: &[String]) -> Outcome {
    let cube = match family {
        Family::Hypercube => hypercube(n),
        Family::Fibonacci => fibonacci_cube(n),
        Family::Lucas => lucas_cube(n),
        Family::Daisy => {
            let words: Vec<BitString> = usage!(generators.iter().map(|g| g.parse()).collect::<Result<_, Error>>());
            daisy_cube(n, &words)
        }
    };
    Outcome::ok(GraphFile::labelled(&usage!(cube)).to_text())
}

pub fn scramble(input: &str, seed: u64) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let scrambled = scramble_graph(&file.graph, seed);
    let perm: Vec<String> = scrambled.permutation.iter().map(ToString::to_string).collect();
    let mut out = GraphFile::new(scrambled.graph).with_comment(format!("seed {seed}; old vertex i is new vertex p[i]"));
    out = out.with_comment(format!("p = {}", perm.join(" ")));
    if let Some(r) = file.root {
        out = out.with_root(scrambled.permutation[r]);
    }
    Outcome::ok(out.to_text())
}

pub fn label(input: &str) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    match recognize_daisy(&file.graph) {
        Ok(Recognition::Accepted(lg)) => {
            let mut out = GraphFile::labelled(&lg);
            out.root = file.root;
            Outcome::ok(out.to_text())
        }
        Ok(Recognition::Rejected(stage)) => Outcome::rejected(stage.code()),
        Err(Error::Disconnected) => Outcome::rejected("disconnected"),
        Err(err) => Outcome::rejected(err.to_string()),
    }
}

pub fn check(input: &str) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let lg = usage!(require_labels(&file, "check"));
    match proper_violation(&lg) {
        None => Outcome::ok("proper\n"),
        Some(violation) => {
            Outcome { stdout: format!("improper: {violation}\n"), stderr: String::new(), code: EXIT_REJECTED }
        }
    }
}

pub fn decompose(input: &str) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let lg = usage!(require_labels(&file, "decompose"));
    if let Some(violation) = proper_violation(&lg) {
        return Outcome::rejected(format!("improper labelling: {violation}"));
    }
    Outcome::ok(reject!(decompose_cube(&lg)).to_text())
}

pub fn replay(certificate: &str, verify_against: Option<&str>) -> Outcome {
    let cert = usage!(DecompositionCertificate::parse(certificate));
    let expected = match verify_against {
        Some(text) => Some(usage!(GraphFile::parse(text))),
        None => None,
    };
    let rebuilt = reject!(cert.replay());
    let stdout = GraphFile::labelled(&rebuilt).to_text();
    let Some(expected) = expected else {
        return Outcome::ok(stdout);
    };
    let same = reject!(canonical_form(rebuilt.graph())) == reject!(canonical_form(&expected.graph));
    if same {
        Outcome { stdout, stderr: "verified: replay is isomorphic to the reference\n".into(), code: EXIT_OK }
    } else {
        Outcome {
            stdout,
            stderr: "verification failed: replay differs from the reference\n".into(),
            code: EXIT_REJECTED,
        }
    }
}

/// With labels and no `v1`, a ≤-expansion along `v2`; otherwise the
/// expansion over the cover `(v1, v2)`, `v1` defaulting to every vertex.
pub fn expand(input: &str, v1: Option<&[usize]>, v2: &[usize]) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    if let (Some(lg), None) = (file.labelled_graph(), v1) {
        let lg = usage!(lg);
        if !reject!(is_leq_subgraph(&lg, v2)) {
            return Outcome::rejected("not a ≤-subgraph: its labels are not downward closed");
        }
        return Outcome::ok(GraphFile::labelled(&reject!(leq_expand(&lg, v2))).to_text());
    }
    let all: Vec<usize> = (0..file.graph.vertex_count()).collect();
    let spec = ExpansionSpec::new(v1.unwrap_or(&all), v2);
    let expansion = reject!(expand_graph(&file.graph, &spec));
    let origin: Vec<String> = expansion
        .origin
        .iter()
        .map(|(v, part)| format!("{v}{}", if matches!(part, daisy_core::expansion::Part::First) { "a" } else { "b" }))
        .collect();
    Outcome::ok(GraphFile::new(expansion.graph).with_comment(format!("origin {}", origin.join(" "))).to_text())
}

pub fn contract_class(input: &str, class_index: usize) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let partition = reject!(theta_star_partition(&file.graph));
    let contraction = reject!(contract(&file.graph, &partition, class_index));
    let merge: Vec<String> = contraction.merge.iter().map(ToString::to_string).collect();
    let out = GraphFile::new(contraction.graph)
        .with_comment(format!("old vertex i is new vertex m[i]; m = {}", merge.join(" ")));
    Outcome::ok(out.to_text())
}

pub fn daisy_graph(input: &str, generators: &[usize]) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let Some(root) = file.root else {
        return Outcome::usage("daisy-graph needs a `root <r>` line");
    };
    let rg = reject!(RootedGraph::new(file.graph, root));
    let sub = usage!(rooted_daisy_graph(&rg, generators));
    let new_root = sub.to_parent.iter().position(|&v| v == root).expect("root is in every daisy graph");
    let map: Vec<String> = sub.to_parent.iter().map(ToString::to_string).collect();
    let out = GraphFile::new(sub.graph)
        .with_root(new_root)
        .with_comment(format!("vertex i is input vertex t[i]; t = {}", map.join(" ")));
    Outcome::ok(out.to_text())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn stats(input: &str) -> Outcome {
    let file = usage!(GraphFile::parse(input));
    let g = &file.graph;
    let mut out = String::new();
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    let _ = writeln!(out, "edges {}", g.edge_count());
    let delta = g.max_degree();
    let tops: Vec<String> = (0..g.vertex_count()).filter(|&v| g.degree(v) == delta).map(|v| v.to_string()).collect();
    let _ = writeln!(out, "max degree {delta} at {}", tops.join(" "));
    if let Some(Ok(lg)) = file.labelled_graph() {
        if let Some(zero) = BitString::zeros(lg.width()).ok().and_then(|z| lg.vertex_of(z)) {
            let _ = writeln!(out, "degree of {} is {}", lg.label(zero), g.degree(zero));
        }
    }
    if !g.is_connected() {
        let _ = writeln!(out, "connected no");
        return Outcome::ok(out);
    }
    let _ = writeln!(out, "connected yes");
    let _ = writeln!(out, "diameter {}", DistanceMatrix::new(g).diameter().unwrap_or(0));
    match reject!(partial_cube_failure(g)) {
        None => {
            let _ = writeln!(out, "partial cube yes");
        }
        Some(failure) => {
            let _ = writeln!(out, "partial cube no ({})", failure.code());
        }
    }
    let _ = writeln!(out, "median graph {}", yes_no(reject!(is_median_graph(g))));
    let partition = reject!(theta_star_partition(g));
    let _ = writeln!(out, "theta classes {}", partition.len());
    for (i, class) in partition.classes().iter().enumerate() {
        let peripheral = match is_class_peripheral(g, &partition, i) {
            Ok(p) => yes_no(p),
            Err(_) => "n/a",
        };
        let _ = writeln!(out, "class {i} size {} peripheral {peripheral}", class.len());
    }
    Outcome::ok(out)
}

/// Checks for one corpus instance; empty when all pass.
fn corpus_failures(cube: &LabelledGraph, seed: u64) -> Vec<String> {
    let mut failures = Vec::new();
    let g = cube.graph();
    let mut fail = |what: &str| failures.push(what.to_string());
    if !verify_proper(cube) {
        fail("generated labelling is not proper");
    }
    let Ok(partition) = theta_star_partition(g) else {
        fail("theta partition");
        return failures;
    };
    if !matches!(partial_cube_failure(g), Ok(None)) {
        fail("not a partial cube");
    }
    if !(0..partition.len()).all(|i| matches!(is_class_peripheral(g, &partition, i), Ok(true))) {
        fail("non-peripheral class");
    }
    if oracle_theta_star(g).ok().as_ref() != Some(&partition) {
        fail("theta partition differs from the oracle");
    }
    let scrambled = strip_and_scramble(cube, seed);
    if !proper_label(&scrambled.graph).is_ok_and(|r| verify_proper(&r.labelled)) {
        fail("labelling a scrambled copy");
    }
    let replayed = decompose_cube(cube).and_then(|c| c.replay()).and_then(|r| canonical_form(r.graph()));
    if replayed.ok() != canonical_form(g).ok() {
        fail("decompose/replay round trip");
    }
    failures
}

/// Every `Q_n(X)` with `n ≤ max_n`, checked in parallel and reported in corpus order.
pub fn corpus_verify(max_n: usize) -> Outcome {
    let corpus = usage!(daisy_corpus(max_n));
    let results: Vec<(String, Vec<String>)> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, inst)| (inst.name(), corpus_failures(&inst.cube, i as u64 + 1)))
        .collect();
    let mut out = String::new();
    let mut failed = 0;
    for (name, failures) in &results {
        if failures.is_empty() {
            let _ = writeln!(out, "ok {name}");
        } else {
            failed += 1;
            let _ = writeln!(out, "FAIL {name}: {}", failures.join("; "));
        }
    }
    let _ = writeln!(out, "{} instances, {failed} failed", results.len());
    Outcome { stdout: out, stderr: String::new(), code: if failed == 0 { EXIT_OK } else { EXIT_REJECTED } }
}
