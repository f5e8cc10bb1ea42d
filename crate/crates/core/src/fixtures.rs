//! Small named graphs used throughout the tests, the acceptance suite and the CLI docs.

use crate::bitstring::BitString;
use crate::graph::Graph;

fn words(list: &[&str]) -> Vec<BitString> {
    list.iter().map(|w| w.parse().expect("fixture word")).collect()
}

/// A 4-cycle `0 1 2 3` with a pendant vertex `4` on `0`.
pub fn pendant_square() -> Graph {
    Graph::new(5, [(4, 0), (0, 1), (1, 2), (2, 3), (3, 0)]).expect("fixture")
}

/// A proper embedding of [`pendant_square`] into `Q_3`, by vertex.
pub fn pendant_square_proper_labels() -> Vec<BitString> {
    words(&["000", "001", "101", "100", "010"])
}

/// An isometric but improper embedding of [`pendant_square`] into `Q_3`.
pub fn pendant_square_improper_labels() -> Vec<BitString> {
    words(&["110", "010", "011", "111", "100"])
}

/// Generators of the nine-vertex daisy cube with four 2-bit petals.
pub fn petal_generators() -> Vec<BitString> {
    words(&["0011", "0110", "1100", "1001"])
}

/// In the petal cube: a ≤-subgraph and a path isomorphic to it that is not one.
pub fn petal_subgraphs() -> (Vec<BitString>, Vec<BitString>) {
    (words(&["0010", "0000", "1000"]), words(&["0110", "0100", "1100"]))
}

pub fn mixed_generators() -> Vec<BitString> {
    words(&["0011", "1000", "0100"])
}

/// A path inside the mixed cube that is isomorphic to a daisy cube but not a ≤-subgraph.
pub fn mixed_non_leq_path() -> Vec<BitString> {
    words(&["0010", "0011", "0001"])
}

/// A rooted graph where `u`, `v` and the root have no median although the
/// daisy graph generated by `{u, v}` is isometric.
///
/// A 6-cycle `u a b v q p` with the root `r` joined to `p` and `q`.
#[derive(Debug, Clone)]
pub struct MedianGap {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    pub r: usize,
    /// `p` and `q`, the neighbours of the root.
    pub middle: [usize; 2],
}

pub fn median_gap() -> MedianGap {
    let (u, a, b, v, p, q, r) = (0, 1, 2, 3, 4, 5, 6);
    let graph = Graph::new(7, [(u, a), (a, b), (b, v), (v, q), (q, p), (p, u), (p, r), (r, q)]).expect("fixture");
    MedianGap { graph, u, v, r, middle: [p, q] }
}
