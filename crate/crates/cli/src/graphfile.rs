//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 5 5
//! root 0
//! 0 1
//! ...
//! label 0 000
//! ```
//!
//! Line 1 is `n m`, followed by `m` edge lines `u v` with 0-based indices.
//! `root <r>` and `label <v> <bits>` lines are optional; labels, if any,
//! cover every vertex and `-` stands for the empty label.

use std::fmt::Write as _;

use daisy_core::{BitString, Error, Graph, LabelledGraph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub root: Option<usize>,
    pub labels: Option<Vec<BitString>>,
    /// Emitted as `#` lines at the top; ignored when parsing.
    pub comments: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| parse_error(line, format!("expected a non-negative integer, got {token:?}")))
}

fn label_token(label: BitString) -> String {
    if label.is_empty() {
        "-".into()
    } else {
        label.to_string()
    }
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        Self { graph, root: None, labels: None, comments: Vec::new() }
    }

    pub fn labelled(lg: &LabelledGraph) -> Self {
        Self { labels: Some(lg.labels().to_vec()), ..Self::new(lg.graph().clone()) }
    }

    pub fn with_root(mut self, root: usize) -> Self {
        self.root = Some(root);
        self
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comments.push(comment.into());
        self
    }

    /// The labelled graph, if labels are present.
    pub fn labelled_graph(&self) -> Option<Result<LabelledGraph>> {
        self.labels.as_ref().map(|labels| LabelledGraph::new(self.graph.clone(), labels.clone()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
        let (n, m) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            [n, m] => (number(n, first)?, number(m, first)?),
            _ => return Err(parse_error(first, "expected `n m`")),
        };

        let mut root = None;
        let mut edges = Vec::with_capacity(m);
        let mut labels: Vec<Option<BitString>> = Vec::new();
        for (line, content) in lines {
            match content.split_whitespace().collect::<Vec<_>>()[..] {
                ["root", r] => {
                    if root.replace(number(r, line)?).is_some() {
                        return Err(parse_error(line, "second root line"));
                    }
                }
                ["label", v, bits] => {
                    let v = number(v, line)?;
                    if v >= n {
                        return Err(parse_error(line, format!("label for vertex {v}, but n = {n}")));
                    }
                    let label = if bits == "-" {
                        BitString::empty()
                    } else {
                        bits.parse().map_err(|e: Error| parse_error(line, e.to_string()))?
                    };
                    labels.resize(n, None);
                    if labels[v].replace(label).is_some() {
                        return Err(parse_error(line, format!("vertex {v} labelled twice")));
                    }
                }
                [u, v] => edges.push((number(u, line)?, number(v, line)?)),
                _ => return Err(parse_error(line, format!("unrecognised line {content:?}"))),
            }
        }
        if edges.len() != m {
            return Err(parse_error(first, format!("header announces {m} edges, found {}", edges.len())));
        }
        let graph = Graph::new(n, edges)?;
        if let Some(r) = root {
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, vertex_count: n });
            }
        }
        let labels = if labels.is_empty() {
            None
        } else {
            let labels: Vec<BitString> = labels
                .into_iter()
                .enumerate()
                .map(|(v, l)| l.ok_or_else(|| parse_error(first, format!("vertex {v} has no label"))))
                .collect::<Result<_>>()?;
            // Validates lengths and injectivity.
            LabelledGraph::new(graph.clone(), labels.clone())?;
            Some(labels)
        };
        Ok(Self { graph, root, labels, comments: Vec::new() })
    }

    /// Canonical text: comments, header, root, edges ascending, labels by vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{} {}", self.graph.vertex_count(), self.graph.edge_count());
        if let Some(r) = self.root {
            let _ = writeln!(out, "root {r}");
        }
        for &(u, v) in self.graph.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        for (v, &label) in self.labels.iter().flatten().enumerate() {
            let _ = writeln!(out, "label {v} {}", label_token(label));
        }
        out
    }
}
