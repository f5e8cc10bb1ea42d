//! Simple undirected graphs on dense vertex indices, with the metric
//! machinery (distances, intervals, medians, convexity) everything else
//! builds on.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Marker stored in a [`DistanceMatrix`] for unreachable pairs.
pub(crate) const UNREACHABLE: u32 = u32::MAX;

/// A simple undirected graph. Vertices are `0..vertex_count`; edges are
/// stored once as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(vertex_count, normalized))
    }

    /// Builds a graph from edges with set semantics: duplicates and loops are dropped.
    pub(crate) fn from_edge_set(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> =
            edges.into_iter().filter(|&(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self::from_sorted(vertex_count, set.into_iter().collect())
    }

    fn from_sorted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { adjacency, edges }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted(vertex_count, Vec::new())
    }

    pub fn path(vertex_count: usize) -> Self {
        Self::from_edge_set(vertex_count, (1..vertex_count).map(|v| (v - 1, v)))
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a cycle needs at least 3 vertices");
        Self::from_edge_set(vertex_count, (0..vertex_count).map(|v| (v, (v + 1) % vertex_count)))
    }

    pub fn complete(vertex_count: usize) -> Self {
        Self::from_edge_set(vertex_count, (0..vertex_count).flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edge_set(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    pub(crate) fn check_edge(&self, (u, v): (usize, usize)) -> Result<usize> {
        self.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || bfs_row(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vertex_count());
        Self::from_edge_set(self.vertex_count(), self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// BFS distances from `source`, `UNREACHABLE` where there is no path.
pub(crate) fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest-path distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<u32>>> {
    g.check_vertex(source)?;
    Ok(bfs_row(g, source).into_iter().map(|d| (d != UNREACHABLE).then_some(d)).collect())
}

/// All-pairs shortest-path distances, computed by one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(bfs_row(g, s));
        }
        Self { n, data }
    }

    pub(crate) fn from_raw(n: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` are in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.raw(u, v);
        (d != UNREACHABLE).then_some(d)
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub(crate) fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.data.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let row = self.row(v);
        if row.contains(&UNREACHABLE) {
            None
        } else {
            row.iter().copied().max()
        }
    }

    pub fn diameter(&self) -> Option<u32> {
        (0..self.n).map(|v| self.eccentricity(v)).try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.n })
        }
    }

    fn connected_pair(&self, u: usize, v: usize) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        self.get(u, v).ok_or(Error::DifferentComponents(u, v))
    }

    #[inline]
    pub(crate) fn on_geodesic(&self, u: usize, w: usize, v: usize) -> bool {
        let (uw, wv) = (self.raw(u, w), self.raw(w, v));
        uw != UNREACHABLE && wv != UNREACHABLE && uw + wv == self.raw(u, v)
    }

    /// `I(u, v)`: every vertex on some shortest `u, v`-path, ascending.
    pub fn interval(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.connected_pair(u, v)?;
        Ok((0..self.n).filter(|&w| self.on_geodesic(u, w, v)).collect())
    }

    /// All medians of the triple, ascending; empty when none exists.
    pub fn median(&self, u: usize, v: usize, w: usize) -> Result<Vec<usize>> {
        self.connected_pair(u, v)?;
        self.connected_pair(u, w)?;
        Ok((0..self.n)
            .filter(|&z| self.on_geodesic(u, z, v) && self.on_geodesic(u, z, w) && self.on_geodesic(v, z, w))
            .collect())
    }

    pub(crate) fn median_count(&self, u: usize, v: usize, w: usize) -> usize {
        (0..self.n)
            .filter(|&z| self.on_geodesic(u, z, v) && self.on_geodesic(u, z, w) && self.on_geodesic(v, z, w))
            .count()
    }
}

/// Checks that `h`, placed into `g` by `embedding`, keeps all its distances.
///
/// The embedding must be injective and map edges of `h` to edges of `g`.
pub fn is_isometric_subgraph(h: &Graph, g: &Graph, embedding: &[usize]) -> Result<bool> {
    if embedding.len() != h.vertex_count() {
        return Err(Error::EmbeddingLength { expected: h.vertex_count(), got: embedding.len() });
    }
    let mut preimage = vec![usize::MAX; g.vertex_count()];
    for (v, &image) in embedding.iter().enumerate() {
        g.check_vertex(image)?;
        if preimage[image] != usize::MAX {
            return Err(Error::EmbeddingNotInjective(preimage[image], v));
        }
        preimage[image] = v;
    }
    if let Some(&(u, v)) = h.edges().iter().find(|&&(u, v)| !g.has_edge(embedding[u], embedding[v])) {
        return Err(Error::EmbeddingNotHomomorphism(u, v));
    }
    Ok(isometric_under(h, g, embedding))
}

fn isometric_under(h: &Graph, g: &Graph, embedding: &[usize]) -> bool {
    (0..h.vertex_count()).all(|s| {
        let in_h = bfs_row(h, s);
        let in_g = bfs_row(g, embedding[s]);
        in_h.iter().enumerate().all(|(t, &d)| d == in_g[embedding[t]])
    })
}

/// Checks that `⟨subset⟩` is isometric in `g` under the inclusion map.
pub(crate) fn induced_is_isometric(g: &Graph, subset: &[usize]) -> Result<bool> {
    let sub = induced_subgraph(g, subset)?;
    Ok(isometric_under(&sub.graph, g, &sub.to_parent))
}

/// Exhaustive median-graph test: every triple has exactly one median.
pub fn is_median_graph(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(is_median_with(&d))
}

pub(crate) fn is_median_with(d: &DistanceMatrix) -> bool {
    let n = d.vertex_count();
    for u in 0..n {
        for v in u..n {
            for w in v..n {
                if d.median_count(u, v, w) != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// `⟨subset⟩` is connected and contains every geodesic between its vertices.
pub fn is_convex(g: &Graph, subset: &[usize]) -> Result<bool> {
    let d = DistanceMatrix::new(g);
    is_convex_with(g, &d, subset)
}

pub(crate) fn is_convex_with(g: &Graph, d: &DistanceMatrix, subset: &[usize]) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let sub = induced_subgraph(g, subset)?;
    if !sub.graph.is_connected() {
        return Ok(false);
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in &sub.to_parent {
        inside[v] = true;
    }
    for (i, &u) in sub.to_parent.iter().enumerate() {
        for &v in &sub.to_parent[i + 1..] {
            if (0..g.vertex_count()).any(|w| !inside[w] && d.on_geodesic(u, w, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Proper 2-colouring by BFS, or `None` if there is an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &w in g.neighbors(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// An induced subgraph together with its embedding into the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the parent vertex behind subgraph vertex `i`; ascending.
    pub to_parent: Vec<usize>,
}

/// `⟨subset⟩`. Duplicates are ignored and the new vertices follow ascending
/// parent index.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<Subgraph> {
    let mut to_parent = subset.to_vec();
    to_parent.sort_unstable();
    to_parent.dedup();
    let mut to_child = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in to_parent.iter().enumerate() {
        g.check_vertex(v)?;
        to_child[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| to_child[u] != usize::MAX && to_child[v] != usize::MAX)
        .map(|&(u, v)| (to_child[u], to_child[v]));
    Ok(Subgraph { graph: Graph::from_edge_set(to_parent.len(), edges), to_parent })
}
