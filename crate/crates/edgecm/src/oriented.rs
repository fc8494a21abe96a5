//! Weighted oriented graphs: an underlying simple graph, an orientation of
//! every edge, and a positive integer weight on every vertex.
//!
//! Conventions: sources carry weight 1 (varying a source weight never
//! changes the edge ideal), and an edge whose endpoints both have weight 1
//! carries both orientations. [`OrientedGraph::normalize`] enforces both;
//! consumers apply it eagerly, raw graphs appear only at parsing boundaries.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::ideal::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum OrientedGraphError {
    #[error("weight of vertex {vertex} must be positive")]
    NonPositiveWeight { vertex: usize },
    #[error("directed edge ({tail}, {head}) has no underlying edge")]
    ArcWithoutEdge { tail: usize, head: usize },
    #[error("edge ({u}, {v}) carries no orientation")]
    MissingOrientation { u: usize, v: usize },
    #[error("edge ({u}, {v}) is bidirected but a weight exceeds 1")]
    BidirectedWithWeight { u: usize, v: usize },
    #[error("{0} weights supplied for {1} vertices")]
    WeightCount(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum CoverError {
    #[error("the given vertex set is not a vertex cover")]
    NotACover,
}

/// A weighted oriented graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedGraph {
    graph: Graph,
    /// `out[v]` holds the heads of arcs leaving `v`.
    out: Vec<VertexSet>,
    weights: Vec<u64>,
}

impl OrientedGraph {
    pub fn new(
        graph: Graph,
        arcs: &[(usize, usize)],
        weights: Vec<u64>,
    ) -> Result<Self, OrientedGraphError> {
        let n = graph.vertex_count();
        if weights.len() != n {
            return Err(OrientedGraphError::WeightCount(weights.len(), n));
        }
        if let Some(v) = (0..n).find(|&v| weights[v] == 0) {
            return Err(OrientedGraphError::NonPositiveWeight { vertex: v });
        }
        let mut out = vec![0u32; n];
        for &(t, h) in arcs {
            if !graph.has_edge(t, h) {
                return Err(OrientedGraphError::ArcWithoutEdge { tail: t, head: h });
            }
            out[t] |= bits::bit(h);
        }
        let d = OrientedGraph { graph, out, weights };
        for (u, v) in d.graph.edges() {
            let fwd = d.has_arc(u, v);
            let bwd = d.has_arc(v, u);
            if !fwd && !bwd {
                return Err(OrientedGraphError::MissingOrientation { u, v });
            }
            if fwd && bwd && (d.weights[u] != 1 || d.weights[v] != 1) {
                return Err(OrientedGraphError::BidirectedWithWeight { u, v });
            }
        }
        Ok(d)
    }

    /// Reads an orientation as one bit per edge (edges in `Graph::edges`
    /// order; bit set = arc from the higher to the lower endpoint).
    pub fn from_orientation_bits(
        graph: Graph,
        orientation: u64,
        weights: Vec<u64>,
    ) -> Result<Self, OrientedGraphError> {
        let arcs: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if orientation >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        OrientedGraph::new(graph, &arcs, weights)
    }

    pub fn underlying(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.out[tail] & bits::bit(head) != 0
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        let mut mask = 0;
        for u in bits::iter(self.graph.neighbors(v)) {
            if self.has_arc(u, v) {
                mask |= bits::bit(u);
            }
        }
        mask
    }

    /// All arcs `(tail, head)`, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..self.vertex_count() {
            for h in bits::iter(self.out[t]) {
                out.push((t, h));
            }
        }
        out
    }

    /// A source has every incident edge oriented away from it.
    pub fn is_source(&self, v: usize) -> bool {
        self.in_neighbors(v) == 0
    }

    /// A sink has every incident edge oriented into it.
    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v] == 0
    }

    /// Source weights become 1, and every edge between two weight-1 vertices
    /// carries both orientations afterwards. The edge ideal is unchanged.
    /// Idempotent.
    pub fn normalize(&self) -> OrientedGraph {
        let mut d = self.clone();
        for v in 0..d.vertex_count() {
            if d.is_source(v) {
                d.weights[v] = 1;
            }
        }
        for (u, v) in d.graph.edges() {
            if d.weights[u] == 1 && d.weights[v] == 1 {
                d.out[u] |= bits::bit(v);
                d.out[v] |= bits::bit(u);
            }
        }
        d
    }

    /// The monomial attached to an underlying edge: `x * y^w(y)` for an arc
    /// `(x, y)`; the squarefree product when both orientations are present.
    pub fn edge_monomial(&self, u: usize, v: usize) -> Result<Monomial, OrientedGraphError> {
        if !self.graph.has_edge(u, v) {
            return Err(OrientedGraphError::ArcWithoutEdge { tail: u, head: v });
        }
        let fwd = self.has_arc(u, v);
        let bwd = self.has_arc(v, u);
        match (fwd, bwd) {
            (true, true) => Ok(Monomial::var(u).mul(&Monomial::var(v))),
            (true, false) => Ok(Monomial::var(u).mul(&Monomial::power(v, self.weights[v]))),
            (false, true) => Ok(Monomial::var(v).mul(&Monomial::power(u, self.weights[u]))),
            (false, false) => Err(OrientedGraphError::MissingOrientation { u, v }),
        }
    }

    /// The edge ideal, minimally generated by `x * y^w(y)` over arcs `(x, y)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let mut gens = Vec::new();
        for (t, h) in self.arcs() {
            gens.push(Monomial::var(t).mul(&Monomial::power(h, self.weights[h])));
        }
        MonomialIdeal::new(self.vertex_count(), gens)
    }

    /// Induced oriented subgraph on `s`, inheriting directions and weights.
    /// Vertices are relabeled densely in ascending order of `s`.
    pub fn induced(&self, s: VertexSet) -> OrientedGraph {
        let (graph, old) = self.graph.induced(s);
        let index_of = |v: usize| old.iter().position(|&o| o == v).expect("member");
        let mut arcs = Vec::new();
        for (t, h) in self.arcs() {
            if s & bits::bit(t) != 0 && s & bits::bit(h) != 0 {
                arcs.push((index_of(t), index_of(h)));
            }
        }
        let weights = old.iter().map(|&v| self.weights[v]).collect();
        OrientedGraph::new(graph, &arcs, weights).expect("restriction stays valid")
    }

    /// Delete one vertex.
    pub fn delete(&self, v: usize) -> OrientedGraph {
        self.induced(self.graph.full_set() & !bits::bit(v))
    }

    /// Split a vertex cover into the three layers the strong-cover test
    /// reads: members with an arc leaving the cover, members that only
    /// receive arcs from outside, and members whose whole neighborhood lies
    /// inside.
    pub fn cover_partition(&self, cover: VertexSet) -> Result<CoverPartition, CoverError> {
        if !self.graph.is_vertex_cover(cover) {
            return Err(CoverError::NotACover);
        }
        let outside = self.graph.full_set() & !cover;
        let mut l1 = 0;
        let mut l2 = 0;
        for v in bits::iter(cover) {
            if self.out[v] & outside != 0 {
                l1 |= bits::bit(v);
            } else if self.in_neighbors(v) & outside != 0 {
                l2 |= bits::bit(v);
            }
        }
        let l3 = cover & !(l1 | l2);
        debug_assert!(bits::iter(l3).all(|v| self.graph.neighbors(v) & !cover == 0));
        Ok(CoverPartition { cover, l1, l2, l3 })
    }

    /// A cover is strong if it is minimal, or every vertex of its third
    /// layer receives an arc from a second- or third-layer vertex of weight
    /// at least 2. Minimal covers have an empty third layer, so the layer
    /// condition alone decides.
    pub fn is_strong_cover(&self, cover: VertexSet) -> Result<bool, CoverError> {
        let p = self.cover_partition(cover)?;
        let l23 = p.l2 | p.l3;
        Ok(bits::iter(p.l3).all(|x| {
            bits::iter(self.in_neighbors(x) & l23).any(|y| self.weights[y] >= 2)
        }))
    }

    /// Unmixedness of the edge ideal, by the strong-cover criterion: the
    /// underlying graph is well-covered and no strong cover has a nonempty
    /// third layer. Exhaustive over all vertex subsets; the witness is the
    /// lexicographically least failure.
    pub fn is_unmixed(&self) -> Result<UnmixedVerdict, GraphError> {
        let d = self.normalize();
        let sets = d.graph.maximal_independent_sets()?;
        for w in sets.windows(2) {
            if bits::count(w[0]) != bits::count(w[1]) {
                let (a, b) = if bits::count(w[0]) < bits::count(w[1]) {
                    (w[0], w[1])
                } else {
                    (w[1], w[0])
                };
                return Ok(UnmixedVerdict::NotWellCovered { smaller: a, larger: b });
            }
        }
        let n = d.vertex_count();
        for cover in 0..(1u64 << n) {
            let cover = cover as VertexSet;
            if !d.graph.is_vertex_cover(cover) {
                continue;
            }
            let p = d.cover_partition(cover).expect("checked cover");
            if p.l3 != 0 && d.is_strong_cover(cover).expect("checked cover") {
                return Ok(UnmixedVerdict::StrongCoverWitness { cover, l3: p.l3 });
            }
        }
        Ok(UnmixedVerdict::Unmixed)
    }
}

/// The layer partition of a vertex cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPartition {
    pub cover: VertexSet,
    /// Members with an arc to a vertex outside the cover.
    pub l1: VertexSet,
    /// Members, not in `l1`, receiving an arc from outside the cover.
    pub l2: VertexSet,
    /// Members whose entire neighborhood lies inside the cover.
    pub l3: VertexSet,
}

/// Outcome of the unmixedness test, with a machine-checkable witness on
/// failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnmixedVerdict {
    Unmixed,
    /// Two maximal independent sets of different sizes.
    NotWellCovered { smaller: VertexSet, larger: VertexSet },
    /// A strong vertex cover with a nonempty third layer.
    StrongCoverWitness { cover: VertexSet, l3: VertexSet },
}

impl UnmixedVerdict {
    pub fn is_unmixed(&self) -> bool {
        matches!(self, UnmixedVerdict::Unmixed)
    }
}
