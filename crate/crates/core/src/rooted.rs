//! Rooted graphs, the order "u lies on a shortest path from v to the root",
//! and the daisy graphs it induces.

use crate::antichain::antichains;
use crate::error::{Error, Result};
use crate::graph::{induced_is_isometric, induced_subgraph, is_convex_with, DistanceMatrix, Graph, Subgraph};

/// Largest graph for which [`all_daisy_graphs_isometric`] enumerates generator sets.
pub const ISOMETRY_SCAN_LIMIT: usize = 16;

/// A connected graph with a distinguished root.
#[derive(Debug, Clone)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
    dist: DistanceMatrix,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        graph.check_vertex(root)?;
        graph.require_connected()?;
        let dist = DistanceMatrix::new(&graph);
        Ok(Self { graph, root, dist })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    fn below(&self, u: usize, v: usize) -> bool {
        self.dist.on_geodesic(v, u, self.root)
    }

    /// `u ≤ v`: `d(v, r) = d(v, u) + d(u, r)`.
    pub fn leq(&self, u: usize, v: usize) -> Result<bool> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        Ok(self.below(u, v))
    }

    /// Every vertex below some member of `generators`, ascending.
    pub fn down_set(&self, generators: &[usize]) -> Result<Vec<usize>> {
        for &x in generators {
            self.graph.check_vertex(x)?;
        }
        Ok((0..self.graph.vertex_count()).filter(|&u| generators.iter().any(|&x| self.below(u, x))).collect())
    }

    /// Members of `set` not strictly below another member, ascending.
    pub fn maximal_elements(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> =
            set.iter().copied().filter(|&u| !set.iter().any(|&v| v != u && self.below(u, v))).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Exhaustive reflexivity, antisymmetry and transitivity check of the root order.
pub fn check_partial_order(rg: &RootedGraph) -> bool {
    let n = rg.graph.vertex_count();
    let reflexive = (0..n).all(|u| rg.below(u, u));
    let antisymmetric = (0..n).all(|u| (0..n).all(|v| u == v || !(rg.below(u, v) && rg.below(v, u))));
    let transitive =
        (0..n).all(|u| (0..n).all(|v| !rg.below(u, v) || (0..n).all(|w| !rg.below(v, w) || rg.below(u, w))));
    reflexive && antisymmetric && transitive
}

/// `G_r(X)`: the subgraph induced by the down-set of `generators`.
pub fn daisy_graph(rg: &RootedGraph, generators: &[usize]) -> Result<Subgraph> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let sub = induced_subgraph(&rg.graph, &rg.down_set(generators)?)?;
    // Each vertex brings a whole geodesic to the root with it.
    if !sub.graph.is_connected() {
        return Err(Error::Internal(format!("daisy graph of {generators:?} is disconnected")));
    }
    Ok(sub)
}

/// For a convex vertex set containing the root, generators of the daisy
/// graph equal to it: the set's maximal elements. `None` if not convex.
pub fn convex_subgraph_is_daisy(rg: &RootedGraph, subset: &[usize]) -> Result<Option<Vec<usize>>> {
    if !subset.contains(&rg.root) {
        return Err(Error::RootNotInSubset(rg.root));
    }
    if !is_convex_with(&rg.graph, &rg.dist, subset)? {
        return Ok(None);
    }
    let generators = rg.maximal_elements(subset);
    let mut expected = subset.to_vec();
    expected.sort_unstable();
    expected.dedup();
    if rg.down_set(&generators)? != expected {
        return Err(Error::Internal(format!("convex set {expected:?} is not the down-set of its maxima")));
    }
    Ok(Some(generators))
}

/// Every pair `u, v` has a median with the root.
pub fn medians_with_root_exist(rg: &RootedGraph) -> bool {
    let n = rg.graph.vertex_count();
    (0..n).all(|u| (u..n).all(|v| rg.dist.median_count(u, v, rg.root) > 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryReport {
    pub all_isometric: bool,
    /// Number of distinct daisy graphs checked (one per down-set).
    pub checked: usize,
    /// First generator antichain whose daisy graph is not isometric.
    pub witness: Option<Vec<usize>>,
}

/// Checks every daisy graph of `rg` for isometry. Generator sets range
/// over antichains of the root order, so each down-set is visited once.
pub fn all_daisy_graphs_isometric(rg: &RootedGraph) -> Result<IsometryReport> {
    let n = rg.graph.vertex_count();
    if n > ISOMETRY_SCAN_LIMIT {
        return Err(Error::ScaleGuard { what: "daisy graph enumeration", size: n, limit: ISOMETRY_SCAN_LIMIT });
    }
    let comparable = |a: usize, b: usize| a != b && (rg.below(a, b) || rg.below(b, a));
    let mut checked = 0;
    for generators in antichains(n, comparable) {
        checked += 1;
        if !induced_is_isometric(&rg.graph, &rg.down_set(&generators)?)? {
            return Ok(IsometryReport { all_isometric: false, checked, witness: Some(generators) });
        }
    }
    Ok(IsometryReport { all_isometric: true, checked, witness: None })
}
