//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use daisy_cli::GraphFile;
use daisy_core::bitstring::BitString;
use daisy_core::expansion::{contract, decompose, decompose_with_order, is_leq_subgraph};
use daisy_core::fixtures;
use daisy_core::generators::{
    daisy_corpus, daisy_cube, fibonacci_cube, lucas_cube, strip_and_scramble, CorpusInstance,
};
use daisy_core::graph::{induced_subgraph, is_isometric_subgraph, is_median_graph, DistanceMatrix};
use daisy_core::labelling::{proper_label, recognize_daisy, verify_proper};
use daisy_core::oracle::{canonical_form, connected_graphs, oracle_distances, oracle_is_daisy, oracle_theta_star};
use daisy_core::rooted::{
    all_daisy_graphs_isometric, check_partial_order, daisy_graph, medians_with_root_exist, RootedGraph,
};
use daisy_core::theta::{edge_split, is_class_peripheral, is_partial_cube, theta_star_partition};
use daisy_core::{Graph, LabelledGraph};

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const CORPUS_LIMIT: Duration = Duration::from_secs(60);
const LABELLING_LIMIT: Duration = Duration::from_secs(120);
const ROOTED_LIMIT: Duration = Duration::from_secs(600);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const COMPLEXITY_LIMIT: Duration = Duration::from_secs(300);

/// Largest corpus dimension.
const CORPUS_N: usize = 4;
/// Expected number of antichains of `B^n` for `n = 1..=4`.
const CORPUS_COUNTS: [usize; 4] = [2, 5, 19, 167];
const SCRAMBLES: u64 = 100;
const FIBONACCI_RANGE: std::ops::RangeInclusive<usize> = 1..=8;
const LUCAS_RANGE: std::ops::RangeInclusive<usize> = 2..=8;
const ROOTED_MAX_N: usize = 6;
const COMPLEXITY_RANGE: std::ops::RangeInclusive<usize> = 8..=14;
const COMPLEXITY_TOLERANCE: f64 = 3.0;
/// Timing batches per instance; the fastest batch counts.
const TIMING_BATCHES: usize = 7;
const TIMING_BATCH_BUDGET: Duration = Duration::from_millis(20);

type Verdict = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strings(labels: &[BitString]) -> Vec<String> {
    labels.iter().map(ToString::to_string).collect()
}

fn run_daisy(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_daisy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn daisy");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn labelled_file(g: Graph, labels: Vec<BitString>) -> String {
    GraphFile::labelled(&LabelledGraph::new(g, labels).unwrap()).to_text()
}

fn pendant_square_labellings() -> Verdict {
    let proper = labelled_file(fixtures::pendant_square(), fixtures::pendant_square_proper_labels());
    let improper = labelled_file(fixtures::pendant_square(), fixtures::pendant_square_improper_labels());
    let (code, out) = run_daisy(&["check", "-"], &proper);
    ensure(code == 0 && out == "proper\n", || format!("proper labelling: exit {code}, {out:?}"))?;
    let (code, out) = run_daisy(&["check", "-"], &improper);
    ensure(code == 1 && out == "improper: 101 <= 111 but 101 is not a label\n", || {
        format!("improper labelling: exit {code}, {out:?}")
    })?;
    Ok("proper labelling accepted, improper one rejected with witness (101, 111)".into())
}

fn petal_cubes() -> Verdict {
    let petals = daisy_cube(4, &fixtures::petal_generators()).map_err(|e| e.to_string())?;
    let expected = ["0000", "0001", "0010", "0011", "0100", "0110", "1000", "1001", "1100"];
    ensure(strings(petals.labels()) == expected, || format!("petal labels {:?}", strings(petals.labels())))?;
    let (h1, h2) = fixtures::petal_subgraphs();
    let h1 = petals.vertices_of(&h1).unwrap();
    let h2 = petals.vertices_of(&h2).unwrap();
    ensure(is_leq_subgraph(&petals, &h1).unwrap(), || "H1 rejected".into())?;
    ensure(!is_leq_subgraph(&petals, &h2).unwrap(), || "H2 accepted".into())?;

    let mixed = daisy_cube(4, &fixtures::mixed_generators()).unwrap();
    let expected = ["0000", "0001", "0010", "0011", "0100", "1000"];
    ensure(strings(mixed.labels()) == expected, || format!("mixed labels {:?}", strings(mixed.labels())))?;
    let path = mixed.vertices_of(&fixtures::mixed_non_leq_path()).unwrap();
    ensure(!is_leq_subgraph(&mixed, &path).unwrap(), || "mixed path accepted".into())?;
    Ok("9 and 6 labels exact; H1 accepted, H2 and the mixed path rejected".into())
}

fn median_gap() -> Verdict {
    let gap = fixtures::median_gap();
    let d = DistanceMatrix::new(&gap.graph);
    let median = d.median(gap.u, gap.v, gap.r).unwrap();
    ensure(median.is_empty(), || format!("median(u, v, r) = {median:?}"))?;
    let rg = RootedGraph::new(gap.graph.clone(), gap.r).unwrap();
    let h = daisy_graph(&rg, &[gap.u, gap.v]).unwrap();
    let (n, m) = (h.graph.vertex_count(), h.graph.edge_count());
    ensure((n, m) == (5, 5), || format!("daisy graph has {n} vertices, {m} edges"))?;
    ensure(is_isometric_subgraph(&h.graph, &gap.graph, &h.to_parent).unwrap(), || "not isometric".into())?;
    Ok("median(u,v,r) empty; G_r({u,v}) has 5 vertices, 5 edges and is isometric".into())
}

fn corpus() -> Vec<CorpusInstance> {
    daisy_corpus(CORPUS_N).expect("corpus")
}

fn corpus_structure() -> Verdict {
    let corpus = corpus();
    let counts: Vec<usize> = (1..=CORPUS_N).map(|n| corpus.iter().filter(|i| i.n == n).count()).collect();
    ensure(counts == CORPUS_COUNTS, || format!("instance counts {counts:?}"))?;
    for inst in &corpus {
        let (cube, name) = (&inst.cube, inst.name());
        let g = cube.graph();
        ensure(is_partial_cube(g).unwrap(), || format!("{name}: not a partial cube"))?;
        let partition = theta_star_partition(g).unwrap();
        let d = DistanceMatrix::new(g);
        let zero = cube.vertex_of(BitString::zeros(inst.n).unwrap()).expect("0^n present");
        ensure(g.degree(zero) == g.max_degree(), || format!("{name}: deg(0^n) < max degree"))?;
        for (i, class) in partition.classes().iter().enumerate() {
            ensure(is_class_peripheral(g, &partition, i).unwrap(), || format!("{name}: class {i} not peripheral"))?;
            let at_zero = class.iter().any(|&e| {
                let (u, v) = g.edges()[e];
                u == zero || v == zero
            });
            ensure(at_zero, || format!("{name}: class {i} has no edge at 0^n"))?;
            let split = edge_split(g, &d, g.edges()[class[0]]).unwrap();
            for side in [&split.w_ab, &split.w_ba] {
                let sub = induced_subgraph(g, side).unwrap();
                ensure(recognize_daisy(&sub.graph).unwrap().is_accepted(), || {
                    format!("{name}: W side {side:?} of class {i} rejected")
                })?;
            }
            let contracted = contract(g, &partition, i).unwrap();
            ensure(recognize_daisy(&contracted.graph).unwrap().is_accepted(), || {
                format!("{name}: contraction of class {i} rejected")
            })?;
        }
    }
    Ok(format!("{} instances {CORPUS_COUNTS:?}; all six properties hold", corpus.len()))
}

fn labelling_round_trip() -> Verdict {
    let mut runs = 0;
    let mut check = |lg: &LabelledGraph, seed: u64, what: &str| -> Result<(), String> {
        runs += 1;
        let scrambled = strip_and_scramble(lg, seed);
        let ok = proper_label(&scrambled.graph).is_ok_and(|r| verify_proper(&r.labelled));
        ensure(ok, || {
            format!(
                "{what} seed {seed}: labelling failed; fixture:\n{}",
                GraphFile::new(scrambled.graph.clone()).to_text()
            )
        })
    };
    for (i, inst) in corpus().iter().enumerate() {
        check(&inst.cube, i as u64 + 1, &inst.name())?;
    }
    for n in FIBONACCI_RANGE {
        let cube = fibonacci_cube(n).unwrap();
        for seed in 1..=SCRAMBLES {
            check(&cube, seed, &format!("Fibonacci cube {n}"))?;
        }
    }
    for n in LUCAS_RANGE {
        let cube = lucas_cube(n).unwrap();
        for seed in 1..=SCRAMBLES {
            check(&cube, seed, &format!("Lucas cube {n}"))?;
        }
    }
    Ok(format!("{runs} scrambled inputs labelled properly"))
}

fn replay_round_trip() -> Verdict {
    let corpus = corpus();
    for inst in &corpus {
        let cert = decompose(&inst.cube).map_err(|e| format!("{}: {e}", inst.name()))?;
        let rebuilt = cert.replay().map_err(|e| format!("{}: {e}", inst.name()))?;
        ensure(canonical_form(rebuilt.graph()).unwrap() == canonical_form(inst.cube.graph()).unwrap(), || {
            format!("{}: replay not isomorphic", inst.name())
        })?;
    }
    Ok(format!("{} certificates replayed to isomorphic graphs", corpus.len()))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn all_convex(cube: &LabelledGraph, order: &[usize]) -> bool {
    let cert = decompose_with_order(cube, order).expect("decompose");
    cert.convex_steps().expect("replay").iter().all(|&c| c)
}

fn median_convex_steps() -> Verdict {
    let (mut median, mut non_median) = (0, 0);
    let (mut median_every_order, mut non_median_every_order_fails) = (0, 0);
    for inst in corpus() {
        let is_median = is_median_graph(inst.cube.graph()).unwrap();
        let identity: Vec<usize> = (0..inst.n).collect();
        let default_ok = all_convex(&inst.cube, &identity);
        ensure(default_ok == is_median, || {
            format!("{}: median {is_median}, default order all-convex {default_ok}", inst.name())
        })?;
        let orders: Vec<bool> = permutations(inst.n).iter().map(|o| all_convex(&inst.cube, o)).collect();
        if is_median {
            median += 1;
            median_every_order += usize::from(orders.iter().all(|&c| c));
        } else {
            non_median += 1;
            non_median_every_order_fails += usize::from(orders.iter().all(|&c| !c));
        }
    }
    Ok(format!(
        "{median} median instances all-convex in default order, {non_median} non-median fail; \
         order question: {median_every_order}/{median} median instances convex in every order, \
         {non_median_every_order_fails}/{non_median} non-median fail in every order"
    ))
}

fn rooted_suite() -> Verdict {
    let (mut graphs, mut rooted, mut with_medians) = (0, 0, 0);
    for n in 1..=ROOTED_MAX_N {
        for g in connected_graphs(n).unwrap() {
            graphs += 1;
            for r in 0..n {
                rooted += 1;
                let rg = RootedGraph::new(g.clone(), r).unwrap();
                ensure(check_partial_order(&rg), || format!("order not partial: {g:?} root {r}"))?;
                if medians_with_root_exist(&rg) {
                    with_medians += 1;
                    let report = all_daisy_graphs_isometric(&rg).unwrap();
                    ensure(report.all_isometric, || {
                        format!("counterexample: {g:?} root {r}, generators {:?}", report.witness)
                    })?;
                }
            }
        }
    }
    median_gap()?;
    let gap = fixtures::median_gap();
    let rg = RootedGraph::new(gap.graph, gap.r).unwrap();
    ensure(!medians_with_root_exist(&rg), || "median-gap fixture has all medians".into())?;
    Ok(format!(
        "{graphs} graphs, {rooted} rooted; {with_medians} with medians, 0 counterexamples; \
         converse fails on the median-gap fixture"
    ))
}

fn same_distances(a: &DistanceMatrix, b: &DistanceMatrix) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count() && (0..n).all(|u| (0..n).all(|v| a.get(u, v) == b.get(u, v)))
}

fn oracle_equivalence() -> Verdict {
    let mut labellings = 0;
    for inst in corpus() {
        let (g, name) = (inst.cube.graph(), inst.name());
        ensure(theta_star_partition(g).unwrap() == oracle_theta_star(g).unwrap(), || format!("{name}: theta"))?;
        ensure(same_distances(&DistanceMatrix::new(g), &oracle_distances(g).unwrap()), || {
            format!("{name}: distances")
        })?;
        // The generated labelling plus perturbed ones, most of them improper.
        let mut variants = vec![inst.cube.labels().to_vec()];
        for i in 0..inst.n {
            variants.push(inst.cube.labels().iter().map(|l| l.flipped(i).unwrap()).collect());
        }
        if g.vertex_count() > 1 {
            let mut swapped = inst.cube.labels().to_vec();
            swapped.swap(0, g.vertex_count() - 1);
            variants.push(swapped);
        }
        for labels in variants {
            labellings += 1;
            let lg = LabelledGraph::new(g.clone(), labels).unwrap();
            ensure(verify_proper(&lg) == oracle_is_daisy(&lg).unwrap(), || format!("{name}: verifier vs oracle"))?;
        }
    }
    Ok(format!("theta, distances and {labellings} labellings agree with the oracles"))
}

/// Seconds per call, the fastest of several batches.
fn time_labelling(g: &Graph) -> f64 {
    let mut reps = 1;
    loop {
        let t = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(proper_label(std::hint::black_box(g)).unwrap());
        }
        if t.elapsed() >= TIMING_BATCH_BUDGET / 4 || reps >= 1 << 16 {
            break;
        }
        reps *= 2;
    }
    (0..TIMING_BATCHES)
        .map(|_| {
            let t = Instant::now();
            for _ in 0..reps {
                std::hint::black_box(proper_label(std::hint::black_box(g)).unwrap());
            }
            t.elapsed().as_secs_f64() / reps as f64
        })
        .fold(f64::INFINITY, f64::min)
}

fn complexity() -> Verdict {
    let mut rows = Vec::new();
    for n in COMPLEXITY_RANGE {
        let g = strip_and_scramble(&fibonacci_cube(n).unwrap(), 1).graph;
        let mn = (g.vertex_count() * g.edge_count()) as f64;
        rows.push((n, mn, time_labelling(&g)));
    }
    // c from the smallest instance: growth beyond m·n in the rest of the range shows up as a larger ratio.
    let c = rows[0].2 / rows[0].1;
    let least_squares = rows.iter().map(|r| r.2 * r.1).sum::<f64>() / rows.iter().map(|r| r.1 * r.1).sum::<f64>();
    let ratios: Vec<String> = rows.iter().map(|&(n, mn, t)| format!("{n}:{:.2}", t / (c * mn))).collect();
    let worst = rows.iter().map(|&(_, mn, t)| t / (c * mn)).fold(0.0, f64::max);
    ensure(worst <= COMPLEXITY_TOLERANCE, || {
        format!("t/(c m n) reaches {worst:.2} > {COMPLEXITY_TOLERANCE}; ratios {}", ratios.join(" "))
    })?;
    Ok(format!("c = {c:.3e} s from n = 8, t/(c m n) by n {}; least-squares c = {least_squares:.3e}", ratios.join(" ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("pendant-square labellings", EXAMPLE_LIMIT, pendant_square_labellings),
        ("petal and mixed daisy cubes", EXAMPLE_LIMIT, petal_cubes),
        ("median gap", EXAMPLE_LIMIT, median_gap),
        ("corpus structure", CORPUS_LIMIT, corpus_structure),
        ("labelling round trip", LABELLING_LIMIT, labelling_round_trip),
        ("decompose and replay", CORPUS_LIMIT, replay_round_trip),
        ("median graphs and convex steps", CORPUS_LIMIT, median_convex_steps),
        ("rooted graphs", ROOTED_LIMIT, rooted_suite),
        ("oracle equivalence", ORACLE_LIMIT, oracle_equivalence),
        ("labelling time against m n", COMPLEXITY_LIMIT, complexity),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
