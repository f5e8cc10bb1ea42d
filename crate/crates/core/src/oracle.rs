//! Slow, independent reference implementations used to cross-check the fast paths,
//! plus canonical forms and a small corpus of connected graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generators::LabelledGraph;
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};
use crate::theta::ThetaPartition;

pub const FLOYD_WARSHALL_LIMIT: usize = 256;
pub const THETA_ORACLE_LIMIT: usize = 64;
pub const DAISY_ORACLE_WIDTH: usize = 20;
pub const EXHAUSTIVE_CANON_LIMIT: usize = 8;
pub const CANON_LIMIT: usize = 64;
pub const CORPUS_LIMIT: usize = 6;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::ScaleGuard { what, size, limit });
    }
    Ok(())
}

/// All-pairs distances by Floyd–Warshall.
pub fn oracle_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    guard("Floyd-Warshall", n, FLOYD_WARSHALL_LIMIT)?;
    let mut d = vec![UNREACHABLE; n * n];
    for v in 0..n {
        d[v * n + v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u * n + v] = 1;
        d[v * n + u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let ik = d[i * n + k];
            if ik == UNREACHABLE {
                continue;
            }
            for j in 0..n {
                let kj = d[k * n + j];
                if kj != UNREACHABLE && ik + kj < d[i * n + j] {
                    d[i * n + j] = ik + kj;
                }
            }
        }
    }
    Ok(DistanceMatrix::from_raw(n, d))
}

/// Θ* classes by flood fill over the Θ relation, with Floyd–Warshall distances.
pub fn oracle_theta_star(g: &Graph) -> Result<ThetaPartition> {
    let n = g.vertex_count();
    guard("theta oracle", n, THETA_ORACLE_LIMIT)?;
    let d = oracle_distances(g)?;
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    let dist = |a: usize, b: usize| i64::from(d.get(a, b).expect("connected"));
    let related = |e: usize, f: usize| {
        let ((x, y), (u, v)) = (edges[e], edges[f]);
        dist(x, u) + dist(y, v) != dist(x, v) + dist(y, u)
    };
    let m = edges.len();
    let mut component = vec![usize::MAX; m];
    let mut next = 0;
    for start in 0..m {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = next;
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            let fresh: Vec<usize> = (0..m).filter(|&f| component[f] == usize::MAX && related(e, f)).collect();
            for f in fresh {
                component[f] = next;
                stack.push(f);
            }
        }
        next += 1;
    }
    Ok(ThetaPartition::from_components(&component))
}

/// Checks that the labels form a downward-closed set whose Hamming-1 pairs
/// are exactly the edges, by a superset sweep over all of `B^h`.
pub fn oracle_is_daisy(lg: &LabelledGraph) -> Result<bool> {
    let h = lg.width();
    guard("daisy oracle width", h, DAISY_ORACLE_WIDTH)?;
    let size = 1usize << h;
    let mut present = vec![false; size];
    for label in lg.labels() {
        present[label.value() as usize] = true;
    }
    // covered[w]: some label contains w.
    let mut covered = present.clone();
    for bit in 0..h {
        for w in 0..size {
            if w & (1 << bit) == 0 && covered[w | (1 << bit)] {
                covered[w] = true;
            }
        }
    }
    if covered != present {
        return Ok(false);
    }
    let g = lg.graph();
    let unit = |a: u64, b: u64| (a ^ b).count_ones() == 1;
    if !g.edges().iter().all(|&(u, v)| unit(lg.label(u).value(), lg.label(v).value())) {
        return Ok(false);
    }
    let mut hamming_pairs = 0;
    for label in lg.labels() {
        let w = label.value() as usize;
        hamming_pairs += (0..h).filter(|&bit| w & (1 << bit) != 0 && present[w ^ (1 << bit)]).count();
    }
    Ok(hamming_pairs == g.edge_count())
}

/// Isomorphism-invariant encoding of a graph: adjacency rows as bitmasks
/// under a canonically chosen vertex order. Equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The graph in canonical vertex order.
    pub fn to_graph(&self) -> Graph {
        let edges =
            (0..self.n).flat_map(|u| (u + 1..self.n).filter(move |&v| self.rows[u] >> v & 1 == 1).map(move |v| (u, v)));
        Graph::from_edge_set(self.n, edges)
    }
}

/// `order[v]` is the new position of `v`.
fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.vertex_count()];
    for &(u, v) in g.edges() {
        rows[order[u]] |= 1 << order[v];
        rows[order[v]] |= 1 << order[u];
    }
    rows
}

/// Minimum encoding over every vertex permutation.
pub fn canonical_form_exhaustive(g: &Graph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    guard("exhaustive canonical form", n, EXHAUSTIVE_CANON_LIMIT)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = encode(g, &perm);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(encode(g, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm { n, rows: best })
}

/// Colour refinement to a stable colouring. Colours stay dense and
/// the order of existing cells is kept.
fn refine(g: &Graph, colour: &mut [usize]) {
    let n = colour.len();
    let mut cells = colour.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colour[v] = distinct.binary_search(&&signatures[v]).expect("present");
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&w| w != b);
    strip(u, v).eq(strip(v, u))
}

/// Individualisation-refinement search keeping the minimum leaf encoding.
struct Search<'g> {
    g: &'g Graph,
    /// Best encoding and the leaf colouring that produced it.
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms found by meeting the best encoding twice.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, colour: Vec<usize>) {
        let rows = encode(self.g, &colour);
        match &self.best {
            Some((best, _)) if rows > *best => {}
            Some((best, order)) if rows == *best => {
                let mut at = vec![0; order.len()];
                for (v, &pos) in order.iter().enumerate() {
                    at[pos] = v;
                }
                let automorphism: Vec<usize> = colour.iter().map(|&pos| at[pos]).collect();
                if automorphism.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(automorphism);
                }
            }
            _ => self.best = Some((rows, colour)),
        }
    }

    /// Is `v` an image of some tried vertex under automorphisms fixing `path`?
    fn same_orbit(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let usable: Vec<&Vec<usize>> = self.automorphisms.iter().filter(|a| path.iter().all(|&p| a[p] == p)).collect();
        if usable.is_empty() {
            return false;
        }
        let mut orbit = vec![v];
        let mut seen = vec![false; self.g.vertex_count()];
        seen[v] = true;
        while let Some(w) = orbit.pop() {
            if tried.contains(&w) {
                return true;
            }
            for a in &usable {
                if !std::mem::replace(&mut seen[a[w]], true) {
                    orbit.push(a[w]);
                }
            }
        }
        false
    }

    fn run(&mut self, colour: Vec<usize>, path: &mut Vec<usize>) {
        let n = colour.len();
        let mut size = vec![0usize; n];
        for &c in &colour {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            self.leaf(colour);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colour[v] == target) {
            // Both skips rest on an automorphism fixing `path` that maps a
            // tried vertex to `v`; swapping twins is one.
            if tried.iter().any(|&t| twins(self.g, t, v)) || self.same_orbit(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> =
                colour.iter().enumerate().map(|(w, &c)| 2 * c + usize::from(w != v && c == target)).collect();
            refine(self.g, &mut next);
            path.push(v);
            self.run(next, path);
            path.pop();
        }
    }
}

/// Canonical form by colour refinement with individualisation, keeping the
/// minimum leaf encoding.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    guard("canonical form", n, CANON_LIMIT)?;
    let mut colour = vec![0usize; n];
    refine(g, &mut colour);
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.run(colour, &mut Vec::new());
    Ok(CanonicalForm { n, rows: search.best.map(|(rows, _)| rows).unwrap_or_default() })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Connected graphs on `n` vertices up to isomorphism, each in canonical vertex order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    guard("connected graph corpus", n, CORPUS_LIMIT)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let g = Graph::from_edge_set(n, pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
        if g.is_connected() {
            seen.insert(canonical_form(&g)?);
        }
    }
    Ok(seen.iter().map(CanonicalForm::to_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{median_gap, pendant_square};
    use crate::generators::{daisy_cube, hypercube, strip_and_scramble};
    use crate::theta::theta_star_partition;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn floyd_warshall_matches_bfs() {
        let graphs = [
            pendant_square(),
            median_gap().graph,
            Graph::cycle(7),
            hypercube(4).unwrap().into_graph(),
            Graph::empty(3),
        ];
        for g in graphs {
            let fw = oracle_distances(&g).unwrap();
            let bfs = DistanceMatrix::new(&g);
            for u in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    assert_eq!(fw.get(u, v), bfs.get(u, v));
                }
            }
        }
        assert!(oracle_distances(&Graph::empty(257)).is_err());
    }

    #[test]
    fn theta_oracle_matches_union_find() {
        for g in [pendant_square(), median_gap().graph, Graph::cycle(6), Graph::complete_bipartite(2, 3)] {
            assert_eq!(oracle_theta_star(&g).unwrap(), theta_star_partition(&g).unwrap());
        }
        assert_eq!(oracle_theta_star(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn daisy_oracle_examples() {
        let x: Vec<_> = ["011", "100"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(oracle_is_daisy(&daisy_cube(3, &x).unwrap()).unwrap());
        assert!(oracle_is_daisy(&hypercube(4).unwrap()).unwrap());
        let improper = LabelledGraph::new(pendant_square(), crate::fixtures::pendant_square_improper_labels()).unwrap();
        assert!(!oracle_is_daisy(&improper).unwrap());
        let proper = LabelledGraph::new(pendant_square(), crate::fixtures::pendant_square_proper_labels()).unwrap();
        assert!(oracle_is_daisy(&proper).unwrap());
        // Right labels, missing edge.
        let q2 = hypercube(2).unwrap();
        let path =
            LabelledGraph::new(Graph::path(4), vec![q2.label(0), q2.label(1), q2.label(3), q2.label(2)]).unwrap();
        assert!(!oracle_is_daisy(&path).unwrap());
    }

    fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        let p: f64 = rng.gen_range(0.2..0.8);
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_set(n, edges.into_iter().filter(|_| rng.gen_bool(p)))
    }

    #[test]
    fn refined_and_exhaustive_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let a = random_graph(n, &mut rng);
            let b = if rng.gen_bool(0.5) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                a.permuted(&perm)
            } else {
                random_graph(n, &mut rng)
            };
            let exhaustive = canonical_form_exhaustive(&a).unwrap() == canonical_form_exhaustive(&b).unwrap();
            let refined = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            assert_eq!(exhaustive, refined, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let q4 = hypercube(4).unwrap();
        let base = canonical_form(q4.graph()).unwrap();
        for seed in 1..5 {
            assert_eq!(canonical_form(&strip_and_scramble(&q4, seed).graph).unwrap(), base);
        }
        assert_eq!(canonical_form(&base.to_graph()).unwrap(), base);
        assert_ne!(canonical_form(&Graph::path(4)).unwrap(), canonical_form(&Graph::complete_bipartite(1, 3)).unwrap());
        assert!(canonical_form(&Graph::complete(16)).is_ok());
        assert!(canonical_form(&Graph::empty(65)).is_err());
        assert!(is_isomorphic(&Graph::cycle(4), q4.graph()).is_ok_and(|same| !same));
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(7).is_err());
    }
}
