//! Simple undirected graphs on dense integer vertex ids, and the classical
//! predicates the classification rests on: girth, maximal independent sets,
//! well-coveredness, shedding vertices, vertex decomposability, and the
//! pendant/basic-5-cycle decomposition.
//!
//! All set arithmetic happens on bitmasks; exhaustive enumeration dominates
//! the intended workloads, so the representation is tuned for that.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
pub use crate::bits::VertexSet;

/// Default cap for operations that enumerate independent sets or covers.
pub const ENUMERATION_BOUND: usize = 24;
/// Default cap for the vertex-decomposability recursion.
pub const RECURSION_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum GraphError {
    #[error("graph on {vertices} vertices exceeds the enumeration bound {bound}")]
    BoundExceeded { vertices: usize, bound: usize },
}

/// A simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

impl Graph {
    /// Graph on `n` isolated vertices with default labels `x0, x1, ...`.
    pub fn new(n: usize) -> Self {
        assert!(n <= 32, "vertex sets are 32-bit masks");
        Graph {
            labels: (0..n).map(|i| format!("x{i}")).collect(),
            adj: vec![0; n],
        }
    }

    /// Graph with the given labels and no edges.
    pub fn with_labels(labels: Vec<String>) -> Self {
        assert!(labels.len() <= 32, "vertex sets are 32-bit masks");
        let n = labels.len();
        Graph { labels, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.vertex_count() && v < self.vertex_count());
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    /// All vertices as a mask.
    pub fn full_set(&self) -> VertexSet {
        bits::full(self.vertex_count())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v] | bits::bit(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bits::bit(v) != 0
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in bits::iter(self.adj[u] & !bits::full(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| bits::count(*m)).sum::<usize>() / 2
    }

    /// Induced subgraph on `sub`; vertex `i` of the result is the `i`-th
    /// member of `sub` in ascending order. Also returns that member list.
    pub fn induced(&self, sub: VertexSet) -> (Graph, Vec<usize>) {
        let old = bits::to_vec(sub);
        let mut g = Graph::with_labels(old.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, old)
    }

    /// Connected components as masks, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if seen & bits::bit(v) != 0 {
                continue;
            }
            let mut comp = bits::bit(v);
            loop {
                let mut grown = comp;
                for u in bits::iter(comp) {
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `start` inside `within`; `None` marks unreachable.
    pub fn distances_within(&self, start: usize, within: VertexSet) -> Vec<Option<u32>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        if within & bits::bit(start) == 0 {
            return dist;
        }
        dist[start] = Some(0);
        let mut frontier = vec![start];
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in bits::iter(self.adj[u] & within) {
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// A shortest cycle as a vertex sequence, or `None` for forests.
    ///
    /// BFS from every start vertex; every non-tree edge closes a walk that
    /// contains a cycle no longer than the walk, and the optimum over all
    /// starts realizes the girth.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut best: Option<Vec<usize>> = None;
        for s in 0..n {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in bits::iter(self.adj[u]) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u && u < v {
                        // Non-tree edge: walk u -> root plus root -> v plus (v, u).
                        let cycle = Self::extract_cycle(&parent, u, v);
                        if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    fn extract_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
        let path_to_root = |mut x: usize| {
            let mut p = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                p.push(x);
            }
            p
        };
        let pu = path_to_root(u);
        let pv = path_to_root(v);
        // Trim to the lowest common ancestor so the cycle is simple.
        let in_pv: std::collections::HashSet<usize> = pv.iter().copied().collect();
        let lca = *pu.iter().find(|x| in_pv.contains(x)).expect("common root");
        let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
        cycle.push(lca);
        let tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
        cycle.extend(tail.into_iter().rev());
        cycle
    }

    /// Length of a shortest cycle; `None` means the graph is a forest (the
    /// girth is infinite).
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    pub fn girth_at_least(&self, k: usize) -> bool {
        self.girth().is_none_or(|g| g >= k)
    }

    fn check_bound(&self, bound: usize) -> Result<(), GraphError> {
        let vertices = self.vertex_count();
        if vertices > bound {
            Err(GraphError::BoundExceeded { vertices, bound })
        } else {
            Ok(())
        }
    }

    /// Maximal independent sets of the induced subgraph on `sub`, via
    /// Bron-Kerbosch with pivoting on the complement graph. When `sub` has
    /// no vertices the empty set is the unique maximal independent set.
    pub fn maximal_independent_sets_within(&self, sub: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let nonadj: Vec<VertexSet> = (0..self.vertex_count())
            .map(|v| sub & !self.adj[v] & !bits::bit(v))
            .collect();
        self.bron_kerbosch(0, sub, 0, &nonadj, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        nonadj: &[VertexSet],
        out: &mut Vec<VertexSet>,
    ) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits::iter(p | x)
            .max_by_key(|&u| bits::count(p & nonadj[u]))
            .expect("p | x nonempty");
        let mut candidates = p & !nonadj[pivot];
        let mut p = p;
        let mut x = x;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.bron_kerbosch(r | bits::bit(v), p & nonadj[v], x & nonadj[v], nonadj, out);
            p &= !bits::bit(v);
            x |= bits::bit(v);
        }
    }

    /// All maximal independent sets, sorted by mask value.
    pub fn maximal_independent_sets(&self) -> Result<Vec<VertexSet>, GraphError> {
        self.maximal_independent_sets_bounded(ENUMERATION_BOUND)
    }

    /// Same with a caller-chosen vertex-count bound.
    pub fn maximal_independent_sets_bounded(
        &self,
        bound: usize,
    ) -> Result<Vec<VertexSet>, GraphError> {
        self.check_bound(bound)?;
        Ok(self.maximal_independent_sets_within(self.full_set()))
    }

    /// True iff every maximal independent set has the same cardinality.
    pub fn is_well_covered(&self) -> Result<bool, GraphError> {
        let sets = self.maximal_independent_sets()?;
        Ok(sets.windows(2).all(|w| bits::count(w[0]) == bits::count(w[1])))
    }

    /// The independence number, i.e. the largest size of an independent set.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        Ok(self
            .maximal_independent_sets()?
            .iter()
            .map(|s| bits::count(*s))
            .max()
            .unwrap_or(0))
    }

    /// Minimal vertex covers: exactly the complements of the maximal
    /// independent sets.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>, GraphError> {
        let full = self.full_set();
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()?
            .into_iter()
            .map(|s| full & !s)
            .collect();
        covers.sort_unstable();
        Ok(covers)
    }

    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| c & (bits::bit(u) | bits::bit(v)) != 0)
    }

    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        bits::iter(s).all(|v| self.adj[v] & s == 0)
    }

    /// `v` is a shedding vertex when no independent set of `G \ N[v]` is a
    /// maximal independent set of `G \ v`; equivalently every maximal
    /// independent set of `G \ v` meets `N(v)`.
    pub fn is_shedding_vertex(&self, v: usize) -> bool {
        self.is_shedding_within(self.full_set(), v)
    }

    fn is_shedding_within(&self, sub: VertexSet, v: usize) -> bool {
        let nv = self.adj[v] & sub;
        self.maximal_independent_sets_within(sub & !bits::bit(v))
            .iter()
            .all(|s| s & nv != 0)
    }

    /// Vertex decomposability: edgeless, or some shedding vertex `v` has
    /// both `G \ v` and `G \ N[v]` vertex decomposable. Memoized on induced
    /// subgraph masks.
    pub fn is_vertex_decomposable(&self) -> Result<bool, GraphError> {
        self.is_vertex_decomposable_bounded(RECURSION_BOUND)
    }

    /// Same with a caller-chosen recursion bound.
    pub fn is_vertex_decomposable_bounded(&self, bound: usize) -> Result<bool, GraphError> {
        self.check_bound(bound)?;
        let mut memo = HashMap::new();
        Ok(self.vd(self.full_set(), &mut memo))
    }

    fn vd(&self, sub: VertexSet, memo: &mut HashMap<VertexSet, bool>) -> bool {
        if bits::iter(sub).all(|v| self.adj[v] & sub == 0) {
            return true;
        }
        if let Some(&r) = memo.get(&sub) {
            return r;
        }
        let mut result = false;
        for v in bits::iter(sub) {
            if self.is_shedding_within(sub, v)
                && self.vd(sub & !bits::bit(v), memo)
                && self.vd(sub & !self.closed_neighborhood(v), memo)
            {
                result = true;
                break;
            }
        }
        memo.insert(sub, result);
        result
    }

    /// Pendant edges as `(support, leaf)` pairs; for an edge whose both ends
    /// are leaves the lower id is reported as support.
    pub fn pendant_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let (du, dv) = (self.degree(u), self.degree(v));
            if dv == 1 {
                out.push((u, v));
            } else if du == 1 {
                out.push((v, u));
            }
        }
        out
    }

    /// All induced 5-cycles, each rotated/reflected so the least vertex comes
    /// first and its smaller cycle-neighbor second.
    pub fn induced_five_cycles(&self) -> Vec<[usize; 5]> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for v0 in 0..n {
            for v1 in bits::iter(self.adj[v0] & !bits::full(v0 + 1)) {
                for v2 in bits::iter(self.adj[v1] & !bits::full(v0 + 1)) {
                    if v2 == v1 || self.has_edge(v0, v2) {
                        continue;
                    }
                    for v3 in bits::iter(self.adj[v2] & !bits::full(v0 + 1)) {
                        if v3 == v1 || self.has_edge(v0, v3) || self.has_edge(v1, v3) {
                            continue;
                        }
                        for v4 in bits::iter(self.adj[v3] & self.adj[v0] & !bits::full(v0 + 1)) {
                            if v4 == v1 || v4 == v2 || self.has_edge(v1, v4) || self.has_edge(v2, v4)
                            {
                                continue;
                            }
                            // v0 minimal by construction; keep the direction
                            // with the smaller second vertex.
                            if v1 < v4 {
                                out.push([v0, v1, v2, v3, v4]);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Induced 5-cycles containing no two adjacent vertices of degree >= 3.
    pub fn basic_five_cycles(&self) -> Vec<[usize; 5]> {
        self.induced_five_cycles()
            .into_iter()
            .filter(|c| {
                (0..5).all(|i| {
                    let (a, b) = (c[i], c[(i + 1) % 5]);
                    self.degree(a) < 3 || self.degree(b) < 3
                })
            })
            .collect()
    }

    /// The pendant/basic-5-cycle decomposition, when the graph admits one:
    /// the vertex set is partitioned into vertices of pendant edges and
    /// vertices of basic 5-cycles, and the pendant edges form a perfect
    /// matching on the former.
    pub fn pc_decomposition(&self) -> Result<PcDecomposition, PcFailure> {
        self.pc_decomposition_impl(false)
    }

    /// Same as [`Graph::pc_decomposition`] but isolated vertices are passed
    /// over instead of failing the partition; callers that treat
    /// single-vertex components as trivially Cohen-Macaulay use this.
    pub fn pc_decomposition_skipping_isolated(&self) -> Result<PcDecomposition, PcFailure> {
        self.pc_decomposition_impl(true)
    }

    fn pc_decomposition_impl(&self, allow_isolated: bool) -> Result<PcDecomposition, PcFailure> {
        let pendant_matching = self.pendant_edges();
        let mut pendant_vertices: VertexSet = 0;
        for &(s, l) in &pendant_matching {
            pendant_vertices |= bits::bit(s) | bits::bit(l);
        }
        let basic_cycles = self.basic_five_cycles();
        let mut cycle_vertices: VertexSet = 0;
        let mut cycle_overlap: VertexSet = 0;
        for c in &basic_cycles {
            for &v in c {
                if cycle_vertices & bits::bit(v) != 0 {
                    cycle_overlap |= bits::bit(v);
                }
                cycle_vertices |= bits::bit(v);
            }
        }
        if let Some(v) = bits::iter(pendant_vertices & cycle_vertices).next() {
            return Err(PcFailure::PendantCycleOverlap { vertex: v });
        }
        // The basic 5-cycles must partition the cycle vertices: a vertex on
        // two basic cycles breaks the class.
        if let Some(v) = bits::iter(cycle_overlap).next() {
            return Err(PcFailure::CycleOverlap { vertex: v });
        }
        for v in bits::iter(self.full_set() & !(pendant_vertices | cycle_vertices)) {
            if self.degree(v) == 0 {
                if !allow_isolated {
                    return Err(PcFailure::IsolatedVertex { vertex: v });
                }
            } else {
                return Err(PcFailure::NotCovered { vertex: v });
            }
        }
        // Perfect matching on G[P]: every pendant vertex on exactly one
        // pendant edge.
        let mut hits = vec![0usize; self.vertex_count()];
        for &(s, l) in &pendant_matching {
            hits[s] += 1;
            hits[l] += 1;
        }
        if let Some(v) = (0..self.vertex_count()).find(|&v| hits[v] > 1) {
            return Err(PcFailure::MatchingClash { vertex: v });
        }
        Ok(PcDecomposition {
            pendant_vertices,
            cycle_vertices,
            pendant_matching,
            basic_cycles,
        })
    }

    /// A canonical encoding of the adjacency structure: the
    /// lexicographically greatest sequence of rows `r_k` over all vertex
    /// orderings, where bit `j` of `r_k` records adjacency between the k-th
    /// and j-th placed vertices. Equal encodings characterize isomorphism.
    pub fn canonical_form(&self) -> Vec<u32> {
        let n = self.vertex_count();
        if n == 0 {
            return Vec::new();
        }
        let mut best: Option<Vec<u32>> = None;
        let mut perm = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        self.canon_search(&mut perm, &mut rows, 0, &mut best);
        best.expect("nonempty graph has an encoding")
    }

    fn canon_search(
        &self,
        perm: &mut Vec<usize>,
        rows: &mut Vec<u32>,
        used: VertexSet,
        best: &mut Option<Vec<u32>>,
    ) {
        let n = self.vertex_count();
        let depth = perm.len();
        if depth == n {
            if best.as_ref().is_none_or(|b| rows[..] > b[..]) {
                *best = Some(rows.clone());
            }
            return;
        }
        // Candidate rows, deduplicating twins (swapping twins is an
        // automorphism, so their subtrees encode identically).
        let mut cands: Vec<(u32, usize)> = Vec::new();
        'outer: for v in bits::iter(bits::full(n) & !used) {
            let mut row = 0u32;
            for (j, &p) in perm.iter().enumerate() {
                if self.has_edge(v, p) {
                    row |= 1 << j;
                }
            }
            for &(r, u) in &cands {
                if r == row
                    && (self.adj[u] & !bits::bit(v)) == (self.adj[v] & !bits::bit(u))
                {
                    continue 'outer;
                }
            }
            cands.push((row, v));
        }
        // Try large rows first: the best encodings pack edges early.
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        for (row, v) in cands {
            // Prune branches that can no longer reach the current best.
            if let Some(b) = best.as_ref() {
                if rows[..] == b[..depth] && row < b[depth] {
                    continue;
                }
            }
            perm.push(v);
            rows.push(row);
            self.canon_search(perm, rows, used | bits::bit(v), best);
            perm.pop();
            rows.pop();
        }
    }
}

/// The partition witnessing membership in the pendant/basic-5-cycle class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcDecomposition {
    /// Vertices incident with pendant edges.
    pub pendant_vertices: VertexSet,
    /// Vertices lying on basic 5-cycles.
    pub cycle_vertices: VertexSet,
    /// The pendant edges as `(support, leaf)` pairs; a perfect matching on
    /// the pendant vertices.
    pub pendant_matching: Vec<(usize, usize)>,
    /// All basic 5-cycles in canonical rotation.
    pub basic_cycles: Vec<[usize; 5]>,
}

/// Why a graph is not in the pendant/basic-5-cycle class. Carries the first
/// violated clause, not an error: the caller decides what to make of it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum PcFailure {
    #[error("vertex {vertex} is isolated, hence on no pendant edge or basic 5-cycle")]
    IsolatedVertex { vertex: usize },
    #[error("vertex {vertex} lies on no pendant edge and no basic 5-cycle")]
    NotCovered { vertex: usize },
    #[error("vertex {vertex} lies both on a pendant edge and on a basic 5-cycle")]
    PendantCycleOverlap { vertex: usize },
    #[error("vertex {vertex} lies on two basic 5-cycles, which must be disjoint")]
    CycleOverlap { vertex: usize },
    #[error("vertex {vertex} lies on two pendant edges, so they are no matching")]
    MatchingClash { vertex: usize },
}
