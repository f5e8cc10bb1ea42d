//! Proper labellings: finding one for an unlabelled graph isomorphic to a
//! daisy cube, checking one, and the recognition pipeline built on both.

use std::fmt;

use crate::bitstring::{closure_violation, BitString, MAX_LEN};
use crate::error::{Error, Result};
use crate::generators::LabelledGraph;
use crate::graph::{bfs_row, Graph};
use crate::theta::{partial_cube_failure, PartialCubeFailure, Side};

/// Output of [`proper_label`]. Coordinate `i` (0-based from the left)
/// belongs to `classes[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabellingResult {
    pub labelled: LabelledGraph,
    /// Θ-classes as ascending edge indices, ordered by smallest edge.
    pub classes: Vec<Vec<usize>>,
    /// Which side of the class representative `ab` received 0.
    pub zero_sides: Vec<Side>,
}

/// Labels `g` coordinate by coordinate, one coordinate per Θ-class.
///
/// Classes are discovered from the smallest edge not yet classified: two
/// BFS runs from its endpoints `a`, `b` give every edge Θ-related to `ab`
/// and the split `W_ab`/`W_ba`. The larger side gets 0; on a tie, the side
/// holding vertex 0 does. The input is assumed to be isomorphic to a daisy
/// cube (so Θ is transitive); [`verify_proper`] is the arbiter otherwise.
/// Runs in `O(k·m)` for `k` classes.
pub fn proper_label(g: &Graph) -> Result<LabellingResult> {
    g.require_connected()?;
    let n = g.vertex_count();
    let edges = g.edges();
    let mut classified = vec![false; edges.len()];
    let mut words = vec![0u64; n];
    let mut classes = Vec::new();
    let mut zero_sides = Vec::new();

    for (start, &(a, b)) in edges.iter().enumerate() {
        if classified[start] {
            continue;
        }
        if classes.len() == MAX_LEN {
            return Err(Error::LengthTooLarge(MAX_LEN + 1));
        }
        let from_a = bfs_row(g, a);
        let from_b = bfs_row(g, b);

        let mut class = Vec::new();
        for (f, &(u, v)) in edges.iter().enumerate().skip(start) {
            if !classified[f] && from_a[u] + from_b[v] != from_a[v] + from_b[u] {
                classified[f] = true;
                class.push(f);
            }
        }

        let mut near_a = vec![false; n];
        let mut count_a = 0;
        for w in 0..n {
            match from_a[w].cmp(&from_b[w]) {
                std::cmp::Ordering::Less => {
                    near_a[w] = true;
                    count_a += 1;
                }
                std::cmp::Ordering::Greater => {}
                std::cmp::Ordering::Equal => return Err(Error::NotBipartite),
            }
        }
        let count_b = n - count_a;
        let zero_side = match count_a.cmp(&count_b) {
            std::cmp::Ordering::Greater => Side::Ab,
            std::cmp::Ordering::Less => Side::Ba,
            std::cmp::Ordering::Equal if near_a[0] => Side::Ab,
            std::cmp::Ordering::Equal => Side::Ba,
        };
        for (w, word) in words.iter_mut().enumerate() {
            let zero = near_a[w] == (zero_side == Side::Ab);
            *word = *word << 1 | u64::from(!zero);
        }
        classes.push(class);
        zero_sides.push(zero_side);
    }

    let width = classes.len();
    let labels = words.into_iter().map(|w| BitString::new(w, width)).collect::<Result<Vec<_>>>()?;
    Ok(LabellingResult { labelled: LabelledGraph::new(g.clone(), labels)?, classes, zero_sides })
}

/// The first reason a labelling fails to be proper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperViolation {
    /// An edge whose labels differ in more than one coordinate.
    NonUnitEdge(usize, usize),
    /// Two vertices whose labels differ in one coordinate but are not adjacent.
    MissingEdge(usize, usize),
    /// `missing ≤ above`, `above` is a label and `missing` is not.
    NotDownwardClosed { missing: BitString, above: BitString },
}

impl fmt::Display for ProperViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonUnitEdge(u, v) => write!(f, "edge ({u}, {v}) joins labels more than one bit apart"),
            Self::MissingEdge(u, v) => write!(f, "vertices {u} and {v} differ in one bit but are not adjacent"),
            Self::NotDownwardClosed { missing, above } => {
                write!(f, "{missing} <= {above} but {missing} is not a label")
            }
        }
    }
}

/// Checks, in order, that edges join labels one bit apart, that labels
/// one bit apart are adjacent, and that the label set is downward closed.
pub fn proper_violation(lg: &LabelledGraph) -> Option<ProperViolation> {
    let g = lg.graph();
    let labels = lg.labels();
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| (labels[u].value() ^ labels[v].value()).count_ones() != 1) {
        return Some(ProperViolation::NonUnitEdge(u, v));
    }
    for (u, &label) in labels.iter().enumerate() {
        for i in 0..lg.width() {
            if let Some(v) = lg.vertex_of(label.flipped(i).expect("coordinate in range")) {
                if u < v && !g.has_edge(u, v) {
                    return Some(ProperViolation::MissingEdge(u, v));
                }
            }
        }
    }
    closure_violation(labels).map(|(missing, above)| ProperViolation::NotDownwardClosed { missing, above })
}

/// `lg` is exactly `Q_h(labels)` under the identity map.
pub fn verify_proper(lg: &LabelledGraph) -> bool {
    proper_violation(lg).is_none()
}

/// Stage at which [`recognize_daisy`] gave up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectionStage {
    NotBipartite,
    ThetaNotTransitive,
    VerifierFailed,
}

impl RejectionStage {
    pub fn code(self) -> &'static str {
        match self {
            Self::NotBipartite => PartialCubeFailure::NotBipartite.code(),
            Self::ThetaNotTransitive => PartialCubeFailure::ThetaNotTransitive.code(),
            Self::VerifierFailed => "verifier-failed",
        }
    }
}

impl fmt::Display for RejectionStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Accepted(LabelledGraph),
    Rejected(RejectionStage),
}

impl Recognition {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Self::Accepted(_))
    }
}

/// Partial-cube test, then [`proper_label`], then [`verify_proper`].
///
/// Acceptance certifies a daisy cube; every daisy cube is accepted.
pub fn recognize_daisy(g: &Graph) -> Result<Recognition> {
    match partial_cube_failure(g)? {
        Some(PartialCubeFailure::NotBipartite) => return Ok(Recognition::Rejected(RejectionStage::NotBipartite)),
        Some(PartialCubeFailure::ThetaNotTransitive) => {
            return Ok(Recognition::Rejected(RejectionStage::ThetaNotTransitive))
        }
        None => {}
    }
    let labelled = proper_label(g)?.labelled;
    Ok(if verify_proper(&labelled) {
        Recognition::Accepted(labelled)
    } else {
        Recognition::Rejected(RejectionStage::VerifierFailed)
    })
}

/// Inverts coordinate `i` on every label. Only allowed when the two sides
/// of that coordinate have equal size, which keeps the labelling proper.
pub fn flip_coordinate(lg: &LabelledGraph, i: usize) -> Result<LabelledGraph> {
    if !verify_proper(lg) {
        return Err(Error::NotProper);
    }
    if i >= lg.width() {
        return Err(Error::CoordinateOutOfRange { coordinate: i, width: lg.width() });
    }
    let ones = lg.labels().iter().filter(|l| l.bit(i)).count();
    let zeros = lg.labels().len() - ones;
    if ones != zeros {
        return Err(Error::CoordinateNotTied { coordinate: i, zeros, ones });
    }
    let labels = lg.labels().iter().map(|l| l.flipped(i)).collect::<Result<Vec<_>>>()?;
    LabelledGraph::new(lg.graph().clone(), labels)
}
