//! Combinatorial Cohen-Macaulayness certificates for weighted oriented
//! graphs whose underlying graph has girth at least 5.
//!
//! The decision procedure checks, in a fixed order: the pendant/basic-cycle
//! partition of the underlying graph, an orientation condition on pendant
//! edges, and three conditions on each basic 5-cycle (unmixedness via the
//! reducible-vertex test, unmixedness of the cycle minus each high-degree
//! vertex via the closed-form length-3-path test, and an inflow condition
//! at weighted cycle vertices). The first failing clause becomes the
//! certificate and is independently re-checkable.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::graph::{Graph, PcFailure, VertexSet, ENUMERATION_BOUND};
use crate::oriented::{OrientedGraph, UnmixedVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum ClassifierError {
    #[error("the underlying graph is not a path on 4 vertices")]
    NotAPath3,
    #[error("the underlying graph is not a 5-cycle")]
    NotA5Cycle,
    #[error("the underlying graph has no perfect matching of pendant edges")]
    NoPendantPerfectMatching,
}

/// Vertex order of a path on 4 vertices, or `None`.
fn path4_order(g: &Graph) -> Option<[usize; 4]> {
    // Connected on 4 vertices with 3 edges and maximum degree 2 is exactly
    // the path; the degree cap also keeps the walk below from dead-ending.
    if g.vertex_count() != 4
        || g.edge_count() != 3
        || !g.is_connected()
        || (0..4).any(|v| g.degree(v) > 2)
    {
        return None;
    }
    let start = (0..4).find(|&v| g.degree(v) == 1)?;
    let mut order = [start, 0, 0, 0];
    let mut prev = start;
    let mut cur = bits::iter(g.neighbors(start)).next()?;
    for slot in order.iter_mut().skip(1) {
        *slot = cur;
        let next = g.neighbors(cur) & !bits::bit(prev);
        prev = cur;
        cur = bits::iter(next).next().unwrap_or(start);
    }
    (0..4).all(|v| order.contains(&v)).then_some(order)
}

/// Vertex order of a 5-cycle, or `None`.
fn five_cycle_order(g: &Graph) -> Option<[usize; 5]> {
    if g.vertex_count() != 5 || g.edge_count() != 5 || !g.is_connected() {
        return None;
    }
    if (0..5).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = [0usize; 5];
    let mut prev = 0;
    let mut cur = bits::iter(g.neighbors(0)).next()?;
    for slot in order.iter_mut().skip(1) {
        *slot = cur;
        let next = g.neighbors(cur) & !bits::bit(prev);
        prev = cur;
        cur = bits::iter(next).next()?;
    }
    (cur == 0).then_some(order)
}

/// Unmixedness of an oriented path `x - y - z - v`, in closed form: the
/// degree of each middle vertex in its middle-edge monomial must not exceed
/// its degree in the outer-edge monomial,
/// `deg_y m(yz) <= deg_y m(xy)` and `deg_z m(yz) <= deg_z m(vz)`.
pub fn path3_is_unmixed(d: &OrientedGraph) -> Result<bool, ClassifierError> {
    let [x, y, z, v] = path4_order(d.underlying()).ok_or(ClassifierError::NotAPath3)?;
    let middle = d.edge_monomial(y, z).expect("path edge");
    let left = d.edge_monomial(x, y).expect("path edge");
    let right = d.edge_monomial(v, z).expect("path edge");
    Ok(middle.degree_of(y) <= left.degree_of(y) && middle.degree_of(z) <= right.degree_of(z))
}

/// How a vertex of an oriented 5-cycle qualifies as reducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducibleKind {
    /// Both cycle edges point into the vertex.
    FirstKindSink,
    /// Weight 1 with one of the two mixed orientation patterns.
    FirstKindWeightOne,
    /// The four-arc outflow pattern; used by the structure lemmas only, not
    /// by the cycle test.
    SecondKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleFinding {
    pub vertex: usize,
    pub kind: ReducibleKind,
    /// Exactly the arcs required by the matched definition clause.
    pub evidence: Vec<(usize, usize)>,
}

/// First vertex (ascending id) of an oriented 5-cycle that is reducible:
/// the cycle minus the vertex is unmixed, and either both cycle edges point
/// into it, or its weight is 1 and one of the two mixed patterns holds.
pub fn find_reducible_vertex(
    d: &OrientedGraph,
) -> Result<Option<ReducibleFinding>, ClassifierError> {
    Ok(reducible_vertices(d)?.into_iter().next())
}

/// All reducible vertices of an oriented 5-cycle, ascending.
pub fn reducible_vertices(d: &OrientedGraph) -> Result<Vec<ReducibleFinding>, ClassifierError> {
    let order = five_cycle_order(d.underlying()).ok_or(ClassifierError::NotA5Cycle)?;
    let d = d.normalize();
    let mut out = Vec::new();
    for x in 0..5 {
        let pos = order.iter().position(|&v| v == x).expect("cycle covers 0..5");
        let at = |off: usize| order[(pos + off) % 5];
        let (y, z, u, v) = (at(1), at(2), at(3), at(4));
        let path = d.induced(d.underlying().full_set() & !bits::bit(x));
        if !path3_is_unmixed(&path).expect("cycle minus vertex is a path") {
            continue;
        }
        let finding = if d.has_arc(y, x) && d.has_arc(v, x) {
            Some(ReducibleFinding {
                vertex: x,
                kind: ReducibleKind::FirstKindSink,
                evidence: vec![(y, x), (v, x)],
            })
        } else if d.weight(x) == 1 && d.has_arc(y, x) && d.has_arc(x, v) && d.has_arc(u, v) {
            Some(ReducibleFinding {
                vertex: x,
                kind: ReducibleKind::FirstKindWeightOne,
                evidence: vec![(y, x), (x, v), (u, v)],
            })
        } else if d.weight(x) == 1 && d.has_arc(v, x) && d.has_arc(x, y) && d.has_arc(z, y) {
            Some(ReducibleFinding {
                vertex: x,
                kind: ReducibleKind::FirstKindWeightOne,
                evidence: vec![(v, x), (x, y), (z, y)],
            })
        } else {
            None
        };
        out.extend(finding);
    }
    Ok(out)
}

/// Second-kind reducibility of one vertex of an oriented 5-cycle: with
/// cycle neighbors `y, v` and their far neighbors `z, u`, the arcs
/// `(x, v), (u, v), (x, y), (z, y)` are all present.
pub fn second_kind_finding(
    d: &OrientedGraph,
    x: usize,
) -> Result<Option<ReducibleFinding>, ClassifierError> {
    let order = five_cycle_order(d.underlying()).ok_or(ClassifierError::NotA5Cycle)?;
    let d = d.normalize();
    let pos = order.iter().position(|&v| v == x).ok_or(ClassifierError::NotA5Cycle)?;
    let at = |off: usize| order[(pos + off) % 5];
    let (y, z, u, v) = (at(1), at(2), at(3), at(4));
    let ok = d.has_arc(x, v) && d.has_arc(u, v) && d.has_arc(x, y) && d.has_arc(z, y);
    Ok(ok.then(|| ReducibleFinding {
        vertex: x,
        kind: ReducibleKind::SecondKind,
        evidence: vec![(x, v), (u, v), (x, y), (z, y)],
    }))
}

/// Cohen-Macaulayness of an oriented 5-cycle: equivalent to having a
/// reducible vertex (and to unmixedness).
pub fn cycle5_is_cm(d: &OrientedGraph) -> Result<bool, ClassifierError> {
    Ok(find_reducible_vertex(d)?.is_some())
}

/// The forced perfect matching of pendant edges, when one exists: every
/// leaf must use its unique edge, supports may not repeat, and every vertex
/// must be covered.
pub fn pendant_perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let matching = g.pendant_edges();
    let mut covered: VertexSet = 0;
    for &(s, l) in &matching {
        if covered & (bits::bit(s) | bits::bit(l)) != 0 {
            return None;
        }
        covered |= bits::bit(s) | bits::bit(l);
    }
    (covered == g.full_set() && !matching.is_empty()).then_some(matching)
}

/// Cohen-Macaulayness when the underlying graph has a perfect matching of
/// pendant edges `{(x_s, y_s)}` with the `y_s` leaves: after normalization,
/// every matched support of weight > 1 that receives an arc from another
/// support must also receive its pendant arc `(y_s, x_s)`.
///
/// A support of weight 1 needs no pendant arc: the length-3-path criterion
/// shows the surrounding paths stay unmixed regardless.
pub fn pendant_matching_is_cm(d: &OrientedGraph) -> Result<bool, ClassifierError> {
    let matching =
        pendant_perfect_matching(d.underlying()).ok_or(ClassifierError::NoPendantPerfectMatching)?;
    let d = d.normalize();
    Ok(matching.iter().all(|&(s, l)| {
        d.weight(s) == 1
            || d.in_neighbors(s) & !bits::bit(l) == 0
            || d.has_arc(l, s)
    }))
}

/// One clause of the combinatorial criterion, with the vertices involved.
/// Every failed clause re-verifies independently via [`recheck`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    /// The underlying graph is not a disjoint union of single vertices and
    /// a pendant/basic-5-cycle graph.
    PcPartition { failure: PcFailure },
    /// A pendant support of weight > 1 receives an arc from elsewhere but
    /// not from its leaf.
    PendantOrientation { support: usize, leaf: usize, inflow: usize },
    /// An oriented basic 5-cycle without a reducible vertex.
    CycleUnmixed { cycle: [usize; 5] },
    /// Deleting a high-degree vertex from a basic cycle leaves a mixed
    /// oriented path.
    CycleDeletionUnmixed { cycle: [usize; 5], vertex: usize },
    /// A weighted cycle vertex receives an arc from outside its cycle but
    /// not from both cycle neighbors.
    CycleInflow { cycle: [usize; 5], vertex: usize, inflow: usize },
}

/// Outcome of the girth-at-least-5 classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    CohenMacaulay {
        pendant_matching: Vec<(usize, usize)>,
        basic_cycles: Vec<[usize; 5]>,
    },
    NotCohenMacaulay { clause: Clause },
    /// The underlying graph has a cycle of length < 5.
    OutOfScope { short_cycle: Vec<usize> },
}

impl Certificate {
    pub fn is_cohen_macaulay(&self) -> Option<bool> {
        match self {
            Certificate::CohenMacaulay { .. } => Some(true),
            Certificate::NotCohenMacaulay { .. } => Some(false),
            Certificate::OutOfScope { .. } => None,
        }
    }
}

/// The combinatorial certificate. Clauses run in a fixed order (partition,
/// pendant orientation, cycle unmixedness, cycle-deletion unmixedness,
/// cycle inflow) and the first failure wins, so certificates are
/// deterministic.
pub fn cm_certificate(d: &OrientedGraph) -> Certificate {
    let d = d.normalize();
    let g = d.underlying();
    if let Some(short_cycle) = g.shortest_cycle() {
        if short_cycle.len() < 5 {
            return Certificate::OutOfScope { short_cycle };
        }
    }
    let pc = match g.pc_decomposition_skipping_isolated() {
        Ok(pc) => pc,
        Err(failure) => {
            return Certificate::NotCohenMacaulay { clause: Clause::PcPartition { failure } }
        }
    };
    for &(support, leaf) in &pc.pendant_matching {
        if d.weight(support) != 1 && !d.has_arc(leaf, support) {
            if let Some(inflow) = bits::iter(d.in_neighbors(support) & !bits::bit(leaf)).next() {
                return Certificate::NotCohenMacaulay {
                    clause: Clause::PendantOrientation { support, leaf, inflow },
                };
            }
        }
    }
    for &cycle in &pc.basic_cycles {
        let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
        let induced = d.induced(mask);
        if !cycle5_is_cm(&induced).expect("basic cycle induces a 5-cycle") {
            return Certificate::NotCohenMacaulay { clause: Clause::CycleUnmixed { cycle } };
        }
    }
    for &cycle in &pc.basic_cycles {
        let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
        for &vertex in &cycle {
            if g.degree(vertex) > 2 {
                let path = d.induced(mask & !bits::bit(vertex));
                if !path3_is_unmixed(&path).expect("cycle minus vertex is a path") {
                    return Certificate::NotCohenMacaulay {
                        clause: Clause::CycleDeletionUnmixed { cycle, vertex },
                    };
                }
            }
        }
    }
    for &cycle in &pc.basic_cycles {
        let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
        for (pos, &vertex) in cycle.iter().enumerate() {
            if d.weight(vertex) == 1 {
                continue;
            }
            let outside_in = d.in_neighbors(vertex) & !mask;
            let Some(inflow) = bits::iter(outside_in).next() else {
                continue;
            };
            let y = cycle[(pos + 1) % 5];
            let v = cycle[(pos + 4) % 5];
            if !(d.has_arc(y, vertex) && d.has_arc(v, vertex)) {
                return Certificate::NotCohenMacaulay {
                    clause: Clause::CycleInflow { cycle, vertex, inflow },
                };
            }
        }
    }
    Certificate::CohenMacaulay {
        pendant_matching: pc.pendant_matching,
        basic_cycles: pc.basic_cycles,
    }
}

/// Cohen-Macaulayness of the underlying graph itself (all weights 1),
/// decided combinatorially for girth >= 5: every connected component is a
/// single vertex or carries the pendant/basic-cycle partition.
pub fn underlying_graph_is_cm_girth5(g: &Graph) -> bool {
    g.pc_decomposition_skipping_isolated().is_ok()
}

/// The unmixedness-route verdict: the underlying graph is Cohen-Macaulay
/// and the oriented graph is unmixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixednessRoute {
    pub graph_cohen_macaulay: bool,
    pub verdict: UnmixedVerdict,
}

impl UnmixednessRoute {
    pub fn cohen_macaulay(&self) -> bool {
        self.graph_cohen_macaulay && self.verdict.is_unmixed()
    }
}

/// Full classification: normalize, guard the girth, evaluate the clause
/// certificate, and (within the enumeration bound) also run the
/// unmixedness route so callers can assert agreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub certificate: Certificate,
    pub unmixedness_route: Option<UnmixednessRoute>,
}

impl Classification {
    /// `Some(true)` when both routes ran and agree, `Some(false)` on
    /// disagreement, `None` when the second route was out of bounds or the
    /// instance out of scope.
    pub fn routes_agree(&self) -> Option<bool> {
        let cert = self.certificate.is_cohen_macaulay()?;
        let route = self.unmixedness_route.as_ref()?;
        Some(cert == route.cohen_macaulay())
    }
}

pub fn classify(d: &OrientedGraph) -> Classification {
    let nd = d.normalize();
    let certificate = cm_certificate(&nd);
    let unmixedness_route = if matches!(certificate, Certificate::OutOfScope { .. })
        || nd.vertex_count() > ENUMERATION_BOUND
    {
        None
    } else {
        Some(UnmixednessRoute {
            graph_cohen_macaulay: underlying_graph_is_cm_girth5(nd.underlying()),
            verdict: nd.is_unmixed().expect("within enumeration bound"),
        })
    };
    Classification { certificate, unmixedness_route }
}

/// Re-evaluate a certificate against the graph it was issued for: failed
/// clauses re-check on exactly the named vertices, the out-of-scope
/// certificate re-checks its short cycle, and a Cohen-Macaulay certificate
/// re-runs the full procedure.
pub fn recheck(d: &OrientedGraph, certificate: &Certificate) -> bool {
    let d = d.normalize();
    let g = d.underlying();
    match certificate {
        Certificate::OutOfScope { short_cycle } => {
            let k = short_cycle.len();
            (3..5).contains(&k)
                && (0..k).all(|i| g.has_edge(short_cycle[i], short_cycle[(i + 1) % k]))
        }
        Certificate::CohenMacaulay { .. } => {
            matches!(cm_certificate(&d), Certificate::CohenMacaulay { .. })
        }
        Certificate::NotCohenMacaulay { clause } => clause_fails(&d, clause),
    }
}

fn clause_fails(d: &OrientedGraph, clause: &Clause) -> bool {
    let g = d.underlying();
    match clause {
        Clause::PcPartition { failure } => {
            g.pc_decomposition_skipping_isolated() == Err(failure.clone())
        }
        Clause::PendantOrientation { support, leaf, inflow } => {
            g.degree(*leaf) == 1
                && g.has_edge(*support, *leaf)
                && d.weight(*support) != 1
                && d.has_arc(*inflow, *support)
                && *inflow != *leaf
                && !d.has_arc(*leaf, *support)
        }
        Clause::CycleUnmixed { cycle } => {
            let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
            g.basic_five_cycles().contains(cycle)
                && !cycle5_is_cm(&d.induced(mask)).is_ok_and(|b| b)
        }
        Clause::CycleDeletionUnmixed { cycle, vertex } => {
            let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
            g.basic_five_cycles().contains(cycle)
                && g.degree(*vertex) > 2
                && !path3_is_unmixed(&d.induced(mask & !bits::bit(*vertex))).is_ok_and(|b| b)
        }
        Clause::CycleInflow { cycle, vertex, inflow } => {
            let mask = cycle.iter().fold(0u32, |m, &v| m | bits::bit(v));
            let pos = match cycle.iter().position(|v| v == vertex) {
                Some(p) => p,
                None => return false,
            };
            let y = cycle[(pos + 1) % 5];
            let v = cycle[(pos + 4) % 5];
            g.basic_five_cycles().contains(cycle)
                && d.weight(*vertex) != 1
                && mask & bits::bit(*inflow) == 0
                && d.has_arc(*inflow, *vertex)
                && !(d.has_arc(y, *vertex) && d.has_arc(v, *vertex))
        }
    }
}
