//! The Djoković–Winkler relation Θ, its transitive closure Θ*, and the
//! `W`/`U`/`F` sets of an edge.

use crate::error::{Error, Result};
use crate::graph::{bipartition, DistanceMatrix, Graph, UNREACHABLE};

pub type Edge = (usize, usize);

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        Self { parent: (0..len).collect(), rank: vec![0; len] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, x: usize, y: usize) {
        let (x, y) = (self.find(x), self.find(y));
        if x == y {
            return;
        }
        match self.rank[x].cmp(&self.rank[y]) {
            std::cmp::Ordering::Less => self.parent[x] = y,
            std::cmp::Ordering::Greater => self.parent[y] = x,
            std::cmp::Ordering::Equal => {
                self.parent[y] = x;
                self.rank[x] += 1;
            }
        }
    }
}

/// Partition of the edge indices of a graph into Θ*-classes.
///
/// Classes hold ascending edge indices and are ordered by their smallest
/// edge, which is also the class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ThetaPartition {
    /// Normalizes an arbitrary component assignment `component[edge]`.
    pub(crate) fn from_components(component: &[usize]) -> Self {
        let mut slot = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (edge, &c) in component.iter().enumerate() {
            let idx = *slot.entry(c).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(edge);
        }
        // Edges are visited in ascending order, so classes already sort by representative.
        let mut class_of = vec![0; component.len()];
        for (i, class) in classes.iter().enumerate() {
            for &e in class {
                class_of[e] = i;
            }
        }
        Self { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, index: usize) -> Result<&[usize]> {
        self.classes.get(index).map(Vec::as_slice).ok_or(Error::ClassOutOfRange { index, count: self.classes.len() })
    }

    /// Index into [`Graph::edges`] of the class's lexicographically smallest edge.
    pub fn representative(&self, index: usize) -> Result<usize> {
        Ok(self.class(index)?[0])
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[inline]
pub(crate) fn related_raw(d: &DistanceMatrix, (x, y): Edge, (u, v): Edge) -> bool {
    d.raw(x, u) + d.raw(y, v) != d.raw(x, v) + d.raw(y, u)
}

/// `e Θ f` for `e = xy`, `f = uv`: `d(x,u) + d(y,v) ≠ d(x,v) + d(y,u)`.
pub fn theta_related(g: &Graph, d: &DistanceMatrix, e: Edge, f: Edge) -> Result<bool> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    for a in [e.0, e.1] {
        for b in [f.0, f.1] {
            if d.raw(a, b) == UNREACHABLE {
                return Err(Error::Disconnected);
            }
        }
    }
    Ok(related_raw(d, e, f))
}

/// Θ*-classes by pairwise Θ tests merged with union-find.
pub fn theta_star_partition(g: &Graph) -> Result<ThetaPartition> {
    g.require_connected()?;
    let d = DistanceMatrix::new(g);
    Ok(theta_star_with(g, &d))
}

pub(crate) fn theta_star_with(g: &Graph, d: &DistanceMatrix) -> ThetaPartition {
    let edges = g.edges();
    let mut uf = UnionFind::new(edges.len());
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if related_raw(d, e, f) {
                uf.union(i, j);
            }
        }
    }
    let roots: Vec<usize> = (0..edges.len()).map(|i| uf.find(i)).collect();
    ThetaPartition::from_components(&roots)
}

/// Why a graph fails to be a partial cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialCubeFailure {
    NotBipartite,
    ThetaNotTransitive,
}

impl PartialCubeFailure {
    pub fn code(self) -> &'static str {
        match self {
            Self::NotBipartite => "not-bipartite",
            Self::ThetaNotTransitive => "theta-not-transitive",
        }
    }
}

/// `None` for a partial cube, otherwise the first failed condition.
pub fn partial_cube_failure(g: &Graph) -> Result<Option<PartialCubeFailure>> {
    g.require_connected()?;
    if bipartition(g).is_none() {
        return Ok(Some(PartialCubeFailure::NotBipartite));
    }
    let d = DistanceMatrix::new(g);
    let partition = theta_star_with(g, &d);
    let edges = g.edges();
    let transitive = partition.classes().iter().all(|class| {
        class.iter().enumerate().all(|(i, &e)| class[i + 1..].iter().all(|&f| related_raw(&d, edges[e], edges[f])))
    });
    Ok((!transitive).then_some(PartialCubeFailure::ThetaNotTransitive))
}

/// Bipartite with Θ = Θ*.
pub fn is_partial_cube(g: &Graph) -> Result<bool> {
    Ok(partial_cube_failure(g)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The `W_ab` side of an anchor edge `ab`.
    Ab,
    /// The `W_ba` side.
    Ba,
}

/// The sets `W_ab`, `W_ba`, `F_ab`, `U_ab`, `U_ba` of an anchor edge `ab`.
/// Vertex sets are ascending; `F_ab` holds edges in graph order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSplit {
    pub a: usize,
    pub b: usize,
    pub w_ab: Vec<usize>,
    pub w_ba: Vec<usize>,
    pub f_ab: Vec<Edge>,
    pub u_ab: Vec<usize>,
    pub u_ba: Vec<usize>,
}

impl EdgeSplit {
    pub fn w(&self, side: Side) -> &[usize] {
        match side {
            Side::Ab => &self.w_ab,
            Side::Ba => &self.w_ba,
        }
    }

    pub fn u(&self, side: Side) -> &[usize] {
        match side {
            Side::Ab => &self.u_ab,
            Side::Ba => &self.u_ba,
        }
    }
}

/// Splits `V(G)` along the edge `e = (a, b)`, keeping the given orientation.
pub fn edge_split(g: &Graph, d: &DistanceMatrix, e: Edge) -> Result<EdgeSplit> {
    g.check_edge(e)?;
    split_from_rows(g, e, d.row(e.0), d.row(e.1))
}

pub(crate) fn split_from_rows(g: &Graph, (a, b): Edge, from_a: &[u32], from_b: &[u32]) -> Result<EdgeSplit> {
    let n = g.vertex_count();
    let mut on_a = vec![false; n];
    let (mut w_ab, mut w_ba) = (Vec::new(), Vec::new());
    for w in 0..n {
        let (da, db) = (from_a[w], from_b[w]);
        if da == UNREACHABLE || db == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        match da.cmp(&db) {
            std::cmp::Ordering::Less => {
                on_a[w] = true;
                w_ab.push(w);
            }
            std::cmp::Ordering::Greater => w_ba.push(w),
            std::cmp::Ordering::Equal => return Err(Error::NotBipartite),
        }
    }
    let mut touched = vec![false; n];
    let mut f_ab = Vec::new();
    for &(x, y) in g.edges() {
        if on_a[x] != on_a[y] {
            touched[x] = true;
            touched[y] = true;
            f_ab.push(if on_a[x] { (x, y) } else { (y, x) });
        }
    }
    let u_ab = w_ab.iter().copied().filter(|&w| touched[w]).collect();
    let u_ba = w_ba.iter().copied().filter(|&w| touched[w]).collect();
    Ok(EdgeSplit { a, b, w_ab, w_ba, f_ab, u_ab, u_ba })
}

/// `U = W` on the named side, i.e. that side induces a peripheral subgraph.
pub fn is_peripheral_side(split: &EdgeSplit, side: Side) -> bool {
    split.u(side).len() == split.w(side).len()
}

/// At least one side of the class's representative edge is peripheral.
pub fn is_class_peripheral(g: &Graph, partition: &ThetaPartition, class_index: usize) -> Result<bool> {
    let rep = partition.representative(class_index)?;
    let d = DistanceMatrix::new(g);
    let split = edge_split(g, &d, g.edges()[rep])?;
    Ok(is_peripheral_side(&split, Side::Ab) || is_peripheral_side(&split, Side::Ba))
}
