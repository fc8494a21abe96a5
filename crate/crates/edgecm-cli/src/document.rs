//! The plain-text graph document format.
//!
//! Line-oriented: `#` starts a comment, blank lines are ignored. A document
//! is a `version 1` header followed by vertex, edge and arc lines:
//!
//! ```text
//! version 1
//! vertex x 2
//! vertex y 1
//! edge x y
//! arc x y
//! ```
//!
//! Labels are unique non-whitespace tokens, weights are positive integers,
//! every arc must have a matching edge, and every edge needs at least one
//! arc. Vertices are numbered in order of their `vertex` lines.

use edgecm::graph::Graph;
use edgecm::oriented::OrientedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    Parse { line: usize, reason: String },
    Validation { reason: String },
}

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocumentError::Parse { line, reason } => write!(f, "line {line}: {reason}"),
            DocumentError::Validation { reason } => write!(f, "invalid graph: {reason}"),
        }
    }
}

impl std::error::Error for DocumentError {}

/// Parse a graph document into a validated (but not normalized) oriented
/// graph.
pub fn parse_document(text: &str) -> Result<OrientedGraph, DocumentError> {
    let mut labels: Vec<String> = Vec::new();
    let mut weights: Vec<u64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut saw_version = false;
    let err = |line: usize, reason: String| DocumentError::Parse { line, reason };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        let rest: Vec<&str> = tokens.collect();
        let lookup = |name: &str| labels.iter().position(|l| l == name);
        match keyword {
            "version" => {
                if rest != ["1"] {
                    return Err(err(line_no, format!("unsupported version {rest:?}")));
                }
                saw_version = true;
            }
            "vertex" => {
                let [name, weight] = rest.as_slice() else {
                    return Err(err(line_no, "expected: vertex <label> <weight>".into()));
                };
                if lookup(name).is_some() {
                    return Err(err(line_no, format!("duplicate vertex {name}")));
                }
                let w: u64 = weight
                    .parse()
                    .map_err(|e| err(line_no, format!("bad weight {weight}: {e}")))?;
                if w == 0 {
                    return Err(DocumentError::Validation {
                        reason: format!("vertex {name} has weight 0; weights are positive"),
                    });
                }
                labels.push(name.to_string());
                weights.push(w);
            }
            "edge" | "arc" => {
                let [a, b] = rest.as_slice() else {
                    return Err(err(line_no, format!("expected: {keyword} <label> <label>")));
                };
                let ia = lookup(a)
                    .ok_or_else(|| err(line_no, format!("unknown vertex {a}")))?;
                let ib = lookup(b)
                    .ok_or_else(|| err(line_no, format!("unknown vertex {b}")))?;
                if ia == ib {
                    return Err(err(line_no, format!("loop at {a}")));
                }
                if keyword == "edge" {
                    edges.push((ia, ib));
                } else {
                    arcs.push((ia, ib));
                }
            }
            other => return Err(err(line_no, format!("unknown keyword {other}"))),
        }
    }
    if !saw_version {
        return Err(DocumentError::Validation { reason: "missing `version 1` header".into() });
    }
    if labels.len() > 24 {
        return Err(DocumentError::Validation {
            reason: format!("{} vertices exceed the supported 24", labels.len()),
        });
    }
    let mut g = Graph::with_labels(labels);
    for &(u, v) in &edges {
        if g.has_edge(u, v) {
            return Err(DocumentError::Validation {
                reason: format!("duplicate edge {} {}", g.label(u), g.label(v)),
            });
        }
        g.add_edge(u, v);
    }
    OrientedGraph::new(g, &arcs, weights)
        .map_err(|e| DocumentError::Validation { reason: e.to_string() })
}

/// Render an oriented graph back into document form. Applied to a
/// normalized graph, `parse_document` inverts this exactly.
pub fn render_document(d: &OrientedGraph) -> String {
    let g = d.underlying();
    let mut out = String::from("version 1\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("vertex {} {}\n", g.label(v), d.weight(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("edge {} {}\n", g.label(u), g.label(v)));
    }
    for (t, h) in d.arcs() {
        out.push_str(&format!("arc {} {}\n", g.label(t), g.label(h)));
    }
    out
}
