//! Expansions and contractions of graphs, ≤-subgraphs and ≤-expansions of
//! daisy cubes, and decomposition certificates that rebuild a daisy cube
//! from the one-vertex graph.

use std::collections::HashSet;
use std::fmt;

use crate::bitstring::{is_downward_closed, BitString};
use crate::error::{Error, Result};
use crate::generators::LabelledGraph;
use crate::graph::{induced_is_isometric, is_convex, Graph};
use crate::labelling::verify_proper;
use crate::theta::{partial_cube_failure, ThetaPartition, UnionFind};

/// Why a cover `(V1, V2)` does not define an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecViolation {
    VertexOutOfRange(usize),
    NotCover,
    EmptyIntersection,
    NotIsometricV1,
    NotIsometricV2,
    CrossEdge(usize, usize),
}

impl SpecViolation {
    pub fn code(self) -> &'static str {
        match self {
            Self::VertexOutOfRange(_) => "vertex-out-of-range",
            Self::NotCover => "not-cover",
            Self::EmptyIntersection => "empty-intersection",
            Self::NotIsometricV1 => "not-isometric-V1",
            Self::NotIsometricV2 => "not-isometric-V2",
            Self::CrossEdge(..) => "cross-edge",
        }
    }
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange(v) => write!(f, "{} ({v})", self.code()),
            Self::CrossEdge(u, v) => write!(f, "{} ({u}, {v})", self.code()),
            _ => f.write_str(self.code()),
        }
    }
}

/// A cover `V(G) = V1 ∪ V2` along which a graph is expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSpec {
    v1: Vec<usize>,
    v2: Vec<usize>,
}

fn normalized(set: &[usize]) -> Vec<usize> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    set
}

impl ExpansionSpec {
    pub fn new(v1: &[usize], v2: &[usize]) -> Self {
        Self { v1: normalized(v1), v2: normalized(v2) }
    }

    /// `V1 = V(G)`.
    pub fn peripheral(g: &Graph, v2: &[usize]) -> Self {
        Self { v1: (0..g.vertex_count()).collect(), v2: normalized(v2) }
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn v2(&self) -> &[usize] {
        &self.v2
    }
}

fn membership(n: usize, set: &[usize]) -> std::result::Result<Vec<bool>, SpecViolation> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(SpecViolation::VertexOutOfRange(v));
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Checks cover, nonempty intersection, isometry of both sides and the
/// absence of edges between `V1 \ V2` and `V2 \ V1`, in that order.
pub fn validate_expansion_spec(g: &Graph, spec: &ExpansionSpec) -> std::result::Result<(), SpecViolation> {
    let n = g.vertex_count();
    let in1 = membership(n, &spec.v1)?;
    let in2 = membership(n, &spec.v2)?;
    if (0..n).any(|v| !in1[v] && !in2[v]) {
        return Err(SpecViolation::NotCover);
    }
    if !(0..n).any(|v| in1[v] && in2[v]) {
        return Err(SpecViolation::EmptyIntersection);
    }
    if !induced_is_isometric(g, &spec.v1).unwrap_or(false) {
        return Err(SpecViolation::NotIsometricV1);
    }
    if !induced_is_isometric(g, &spec.v2).unwrap_or(false) {
        return Err(SpecViolation::NotIsometricV2);
    }
    let only1 = |v: usize| in1[v] && !in2[v];
    let only2 = |v: usize| in2[v] && !in1[v];
    match g.edges().iter().find(|&&(u, v)| (only1(u) && only2(v)) || (only2(u) && only1(v))) {
        Some(&(u, v)) => Err(SpecViolation::CrossEdge(u, v)),
        None => Ok(()),
    }
}

/// Which copy a vertex of an expanded graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    /// The copy of `⟨V1⟩`.
    First,
    /// The copy of `⟨V2⟩`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub graph: Graph,
    /// `origin[w] = (v, part)`: new vertex `w` is the `part` copy of `v`.
    pub origin: Vec<(usize, Part)>,
}

/// Expands `g` along `spec`. The copies of `V1` come first, then those of
/// `V2`, each in ascending source order; vertices of `V1 ∩ V2` are joined
/// to their twins.
pub fn expand(g: &Graph, spec: &ExpansionSpec) -> Result<Expansion> {
    validate_expansion_spec(g, spec).map_err(Error::InvalidExpansion)?;
    let n = g.vertex_count();
    let mut first = vec![usize::MAX; n];
    let mut second = vec![usize::MAX; n];
    let mut origin = Vec::with_capacity(spec.v1.len() + spec.v2.len());
    for &v in &spec.v1 {
        first[v] = origin.len();
        origin.push((v, Part::First));
    }
    for &v in &spec.v2 {
        second[v] = origin.len();
        origin.push((v, Part::Second));
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for copy in [&first, &second] {
            if copy[u] != usize::MAX && copy[v] != usize::MAX {
                edges.push((copy[u], copy[v]));
            }
        }
    }
    for v in 0..n {
        if first[v] != usize::MAX && second[v] != usize::MAX {
            edges.push((first[v], second[v]));
        }
    }
    Ok(Expansion { graph: Graph::new(origin.len(), edges)?, origin })
}

/// `pe(G; V2)`: a copy of `G`, a copy of `⟨V2⟩`, and a matching between
/// `⟨V2⟩`'s copy and its original.
pub fn peripheral_expand(g: &Graph, v2: &[usize]) -> Result<Expansion> {
    expand(g, &ExpansionSpec::peripheral(g, v2))
}

fn require_proper(lg: &LabelledGraph) -> Result<()> {
    if verify_proper(lg) {
        Ok(())
    } else {
        Err(Error::NotProper)
    }
}

/// The labels of `h` form a downward-closed set. `g` must carry a proper labelling.
pub fn is_leq_subgraph(g: &LabelledGraph, h: &[usize]) -> Result<bool> {
    require_proper(g)?;
    for &v in h {
        g.graph().check_vertex(v)?;
    }
    if h.is_empty() {
        return Ok(false);
    }
    let labels: Vec<BitString> = h.iter().map(|&v| g.label(v)).collect();
    is_downward_closed(&labels, g.width())
}

/// The ≤-expansion of `g` along the ≤-subgraph `h`: copies of `g` get a
/// leading 0, copies of `h` a leading 1.
pub fn leq_expand(g: &LabelledGraph, h: &[usize]) -> Result<LabelledGraph> {
    if !is_leq_subgraph(g, h)? {
        return Err(Error::NotLeqSubgraph);
    }
    let expansion = peripheral_expand(g.graph(), h)?;
    let labels = expansion
        .origin
        .iter()
        .map(|&(v, part)| g.label(v).prepended(part == Part::Second))
        .collect::<Result<Vec<_>>>()?;
    LabelledGraph::new(expansion.graph, labels)
}

/// The ≤-subgraph is also convex, so the expansion is convex.
pub fn is_convex_leq_expansion_step(g: &LabelledGraph, h: &[usize]) -> Result<bool> {
    if !is_leq_subgraph(g, h)? {
        return Err(Error::NotLeqSubgraph);
    }
    is_convex(g.graph(), h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `merge[v]` is the vertex of the contracted graph that `v` collapsed into.
    pub merge: Vec<usize>,
}

/// Collapses every edge of one Θ-class of a partial cube. Contracted
/// vertices are numbered by their smallest original vertex.
pub fn contract(g: &Graph, partition: &ThetaPartition, class_index: usize) -> Result<Contraction> {
    if partial_cube_failure(g)?.is_some() {
        return Err(Error::NotPartialCube);
    }
    let class = partition.class(class_index)?;
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for &e in class {
        let &(u, v) = g
            .edges()
            .get(e)
            .ok_or_else(|| Error::Internal(format!("partition names edge {e} of a {}-edge graph", g.edge_count())))?;
        uf.union(u, v);
    }
    let mut id_of_root = vec![usize::MAX; n];
    let mut next = 0;
    let merge: Vec<usize> = (0..n)
        .map(|v| {
            let root = uf.find(v);
            if id_of_root[root] == usize::MAX {
                id_of_root[root] = next;
                next += 1;
            }
            id_of_root[root]
        })
        .collect();
    let graph = Graph::from_edge_set(next, g.edges().iter().map(|&(u, v)| (merge[u], merge[v])));
    Ok(Contraction { graph, merge })
}

/// A sequence of ≤-expansions that rebuilds a daisy cube from `K_1`.
///
/// `steps[k]` lists the labels of the ≤-subgraph expanded at step `k + 1`,
/// as labels of the graph built by the first `k` steps (length `k`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecompositionCertificate {
    steps: Vec<Vec<BitString>>,
}

/// Token standing for the empty label in the text form.
const EMPTY_LABEL: &str = "-";

impl DecompositionCertificate {
    pub fn new(steps: Vec<Vec<BitString>>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[Vec<BitString>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// A `steps <k>` header, then one line per step listing its labels
    /// separated by spaces, with `-` for the empty label.
    pub fn to_text(&self) -> String {
        let mut out = format!("steps {}\n", self.steps.len());
        for step in &self.steps {
            let words: Vec<String> =
                step.iter().map(|l| if l.is_empty() { EMPTY_LABEL.to_string() } else { l.to_string() }).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`DecompositionCertificate::to_text`] output. Lines starting
    /// with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines =
            text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let header_error = |line| Error::Parse { line, message: "expected header `steps <k>`".into() };
        let (i, header) = lines.next().ok_or_else(|| header_error(1))?;
        let expected: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["steps", k] => k.parse().map_err(|_| header_error(i + 1))?,
            _ => return Err(header_error(i + 1)),
        };
        let mut steps = Vec::new();
        for (i, line) in lines {
            let step = line
                .split_whitespace()
                .map(|tok| if tok == EMPTY_LABEL { Ok(BitString::empty()) } else { tok.parse() })
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
            steps.push(step);
        }
        if steps.len() != expected {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("header announces {expected} steps, found {}", steps.len()),
            });
        }
        Ok(Self { steps })
    }

    /// Every intermediate graph, starting from `K_1` and ending with the rebuilt cube.
    pub fn replay_stages(&self) -> Result<Vec<LabelledGraph>> {
        let mut stages = vec![LabelledGraph::singleton()];
        for step in &self.steps {
            let current = stages.last().expect("nonempty");
            let h = current.vertices_of(step)?;
            let next = leq_expand(current, &h)?;
            stages.push(next);
        }
        Ok(stages)
    }

    pub fn replay(&self) -> Result<LabelledGraph> {
        Ok(self.replay_stages()?.pop().expect("at least K_1"))
    }

    /// Per step: is the expanded ≤-subgraph convex in the graph it expands?
    pub fn convex_steps(&self) -> Result<Vec<bool>> {
        let stages = self.replay_stages()?;
        self.steps
            .iter()
            .zip(&stages)
            .map(|(step, stage)| is_convex_leq_expansion_step(stage, &stage.vertices_of(step)?))
            .collect()
    }
}

/// Peels coordinates off a properly labelled daisy cube, leftmost first.
///
/// Removing coordinate `i` contracts its Θ-class; the step recorded is the
/// set of labels with a 0 at `i` whose `i`-neighbour exists, minus
/// coordinate `i`. Replaying the steps prepends the coordinates back, so the
/// replay reproduces the input labels exactly. Coordinates on which every
/// label is 0 carry no edges; they are dropped first, so the replay then
/// matches the input up to those coordinates.
pub fn decompose(g: &LabelledGraph) -> Result<DecompositionCertificate> {
    require_proper(g)?;
    let used = g.labels().iter().fold(0u64, |acc, l| acc | l.value());
    let mut labels: Vec<BitString> = g.labels().to_vec();
    for i in (0..g.width()).rev() {
        if used >> (g.width() - 1 - i) & 1 == 0 {
            labels = labels.iter().map(|l| l.removed(i)).collect::<Result<_>>()?;
        }
    }
    let mut reversed = Vec::new();
    while labels.first().is_some_and(|l| !l.is_empty()) {
        let present: HashSet<BitString> = labels.iter().copied().collect();
        let mut lower = Vec::new();
        let mut attached = Vec::new();
        for &l in &labels {
            if !l.bit(0) {
                let rest = l.removed(0)?;
                lower.push(rest);
                if present.contains(&l.flipped(0)?) {
                    attached.push(rest);
                }
            }
        }
        // A downward-closed set uses each live coordinate on a unit word
        // with a 0 in front, so no peeled coordinate is dead.
        if attached.is_empty() {
            return Err(Error::Internal("dead coordinate while peeling".into()));
        }
        attached.sort_unstable();
        if !is_downward_closed(&attached, attached[0].len())? {
            return Err(Error::Internal(format!("attached side {attached:?} is not downward closed")));
        }
        reversed.push(attached);
        labels = lower;
    }
    reversed.reverse();
    Ok(DecompositionCertificate { steps: reversed })
}

/// Moves coordinate `order[j]` to position `j` on every label.
pub fn permute_coordinates(g: &LabelledGraph, order: &[usize]) -> Result<LabelledGraph> {
    let width = g.width();
    let mut seen = vec![false; width];
    if order.len() != width {
        return Err(Error::Parameter(format!("coordinate order has {} entries, width is {width}", order.len())));
    }
    for &i in order {
        if i >= width || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Parameter(format!("{order:?} is not a permutation of 0..{width}")));
        }
    }
    let labels = g
        .labels()
        .iter()
        .map(|&l| order.iter().enumerate().try_fold(BitString::zeros(width)?, |acc, (j, &i)| acc.with_bit(j, l.bit(i))))
        .collect::<Result<Vec<_>>>()?;
    LabelledGraph::new(g.graph().clone(), labels)
}

/// [`decompose`] after reordering coordinates so that `order[0]` is peeled first.
pub fn decompose_with_order(g: &LabelledGraph, order: &[usize]) -> Result<DecompositionCertificate> {
    decompose(&permute_coordinates(g, order)?)
}
