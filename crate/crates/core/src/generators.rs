//! Labelled instances: hypercubes, daisy cubes `Q_n(X)`, Fibonacci and
//! Lucas cubes, the antichain corpus, and unlabelled scrambles.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::antichain::antichains;
use crate::bitstring::{check_uniform, downward_closure, BitString};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest dimension for which whole hypercubes and cube families are built.
pub const MAX_DIMENSION: usize = 24;

/// Largest `n` for which [`enumerate_antichains`] runs without the override.
pub const ANTICHAIN_DIMENSION: usize = 4;

/// A graph with an injective vertex labelling by words of one common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    graph: Graph,
    labels: Vec<BitString>,
    width: usize,
    index: HashMap<BitString, usize>,
}

impl LabelledGraph {
    pub fn new(graph: Graph, labels: Vec<BitString>) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::LabelCount { labels: labels.len(), vertices: graph.vertex_count() });
        }
        let width = labels.first().map_or(0, |l| l.len());
        check_uniform(&labels, width)?;
        let mut index = HashMap::with_capacity(labels.len());
        for (v, &label) in labels.iter().enumerate() {
            if index.insert(label, v).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(Self { graph, labels, width, index })
    }

    /// `Q_h(labels)`: the labels become the vertices, in ascending order,
    /// and words at Hamming distance 1 become edges.
    pub fn from_label_set(labels: impl IntoIterator<Item = BitString>, width: usize) -> Result<Self> {
        let mut labels: Vec<BitString> = labels.into_iter().collect();
        check_uniform(&labels, width)?;
        labels.sort_unstable();
        labels.dedup();
        let index: HashMap<BitString, usize> = labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
        let mut edges = Vec::new();
        for (v, &label) in labels.iter().enumerate() {
            for i in 0..width {
                if label.bit(i) {
                    if let Some(&u) = index.get(&label.with_bit(i, false)?) {
                        edges.push((u, v));
                    }
                }
            }
        }
        let graph = Graph::new(labels.len(), edges)?;
        Ok(Self { graph, labels, width, index })
    }

    /// `K_1` labelled by the empty word.
    pub fn singleton() -> Self {
        Self::new(Graph::empty(1), vec![BitString::empty()]).expect("one label for one vertex")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &[BitString] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> BitString {
        self.labels[v]
    }

    /// Common label length `h`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn vertex_of(&self, label: BitString) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn vertices_of(&self, labels: &[BitString]) -> Result<Vec<usize>> {
        labels.iter().map(|&l| self.vertex_of(l).ok_or(Error::UnknownLabel(l))).collect()
    }

    /// Every edge joins labels at Hamming distance exactly 1.
    pub fn has_unit_edges(&self) -> bool {
        self.graph.edges().iter().all(|&(u, v)| (self.labels[u].value() ^ self.labels[v].value()).count_ones() == 1)
    }
}

fn check_dimension(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIMENSION {
        Err(Error::Parameter(format!("dimension {n} outside {min}..={MAX_DIMENSION}")))
    } else {
        Ok(())
    }
}

/// `Q_n` with vertices in ascending label order.
pub fn hypercube(n: usize) -> Result<LabelledGraph> {
    check_dimension(n, 1)?;
    let labels = (0..1u64 << n).map(|value| BitString::new(value, n));
    LabelledGraph::from_label_set(labels.collect::<Result<Vec<_>>>()?, n)
}

/// The daisy cube `Q_n(X)` generated by `generators`.
pub fn daisy_cube(n: usize, generators: &[BitString]) -> Result<LabelledGraph> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    LabelledGraph::from_label_set(downward_closure(generators, n)?, n)
}

fn avoiding_adjacent_ones(n: usize, circular: bool) -> Result<Vec<BitString>> {
    let mut words = Vec::new();
    for value in 0..1u64 << n {
        let mut clash = value & (value >> 1) != 0;
        if circular && n > 1 {
            clash |= value & 1 == 1 && value >> (n - 1) & 1 == 1;
        }
        if !clash {
            words.push(BitString::new(value, n)?);
        }
    }
    Ok(words)
}

/// `Γ_n`: strings of length `n` without two consecutive 1s.
pub fn fibonacci_cube(n: usize) -> Result<LabelledGraph> {
    check_dimension(n, 1)?;
    LabelledGraph::from_label_set(avoiding_adjacent_ones(n, false)?, n)
}

/// `Λ_n`: strings without two consecutive 1s, read circularly.
pub fn lucas_cube(n: usize) -> Result<LabelledGraph> {
    check_dimension(n, 2)?;
    LabelledGraph::from_label_set(avoiding_adjacent_ones(n, true)?, n)
}

/// Every nonempty antichain of `(B^n, ≤)`, each ascending, ordered by size
/// then lexicographically. Capped at `n = 4`.
pub fn enumerate_antichains(n: usize) -> Result<Vec<Vec<BitString>>> {
    enumerate_antichains_with_limit(n, ANTICHAIN_DIMENSION)
}

/// As [`enumerate_antichains`] but also admits `n = 5`.
pub fn enumerate_antichains_extended(n: usize) -> Result<Vec<Vec<BitString>>> {
    enumerate_antichains_with_limit(n, ANTICHAIN_DIMENSION + 1)
}

fn enumerate_antichains_with_limit(n: usize, limit: usize) -> Result<Vec<Vec<BitString>>> {
    if n > limit {
        return Err(Error::ScaleGuard { what: "antichain enumeration dimension", size: n, limit });
    }
    let size = 1usize << n;
    let comparable = |a: usize, b: usize| a != b && (a & !b == 0 || b & !a == 0);
    antichains(size, comparable)
        .into_iter()
        .map(|set| set.into_iter().map(|v| BitString::new(v as u64, n)).collect())
        .collect()
}

/// One daisy cube of the exhaustive corpus.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub n: usize,
    pub generators: Vec<BitString>,
    pub cube: LabelledGraph,
}

impl CorpusInstance {
    /// Short name such as `Q_3({011,100})`.
    pub fn name(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        format!("Q_{}({{{}}})", self.n, gens.join(","))
    }
}

/// `Q_n(X)` for every `n` in `1..=max_n` and every nonempty antichain `X`.
pub fn daisy_corpus(max_n: usize) -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for generators in enumerate_antichains(n)? {
            let cube = daisy_cube(n, &generators)?;
            out.push(CorpusInstance { n, generators, cube });
        }
    }
    Ok(out)
}

/// An unlabelled copy of a labelled graph under a hidden vertex permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scrambled {
    pub graph: Graph,
    /// Original vertex `v` became `permutation[v]`.
    pub permutation: Vec<usize>,
}

/// Renumbers vertices by a seeded permutation. Seed 0 is the identity.
pub fn scramble_graph(g: &Graph, seed: u64) -> Scrambled {
    let mut permutation: Vec<usize> = (0..g.vertex_count()).collect();
    if seed != 0 {
        permutation.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    Scrambled { graph: g.permuted(&permutation), permutation }
}

/// Drops the labels and renumbers vertices by a seeded permutation.
pub fn strip_and_scramble(lg: &LabelledGraph, seed: u64) -> Scrambled {
    scramble_graph(lg.graph(), seed)
}
