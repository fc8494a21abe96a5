//! Named instances used across the test suites and shipped as CLI fixtures.
//!
//! The two-cycle example graph and the reducible-vertex cycles are
//! reconstructions: their shape is fixed, the orientations were derived so
//! the intended classification holds, and the suites validate them against
//! the algebraic oracle rather than trusting the construction.

use crate::graph::Graph;
use crate::oriented::OrientedGraph;

/// Cycle graph on `n` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path graph on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle oriented one way around, constant weight.
pub fn directed_cycle(n: usize, weight: u64) -> OrientedGraph {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    OrientedGraph::new(cycle_graph(n), &arcs, vec![weight; n]).unwrap()
}

/// Attach one whisker (a new leaf) to every vertex.
pub fn whisker(core: &Graph) -> Graph {
    let n = core.vertex_count();
    let mut labels: Vec<String> = core.labels().to_vec();
    labels.extend((0..n).map(|i| format!("w{i}")));
    let mut g = Graph::with_labels(labels);
    for (u, v) in core.edges() {
        g.add_edge(u, v);
    }
    for v in 0..n {
        g.add_edge(v, n + v);
    }
    g
}

/// Oriented 5-cycle with a first-kind reducible vertex 0: both cycle arcs
/// point into it and the remaining path is unmixed for every weight choice.
pub fn reducible_first_kind_cycle(weights: [u64; 5]) -> OrientedGraph {
    // Cycle 0-1-2-3-4; arcs (1,0), (4,0), (1,2), (3,2), (3,4).
    OrientedGraph::new(
        cycle_graph(5),
        &[(1, 0), (4, 0), (1, 2), (3, 2), (3, 4)],
        weights.to_vec(),
    )
    .unwrap()
}

/// Oriented 5-cycle with a weight-one mixed-pattern reducible vertex 0:
/// arcs (y,x), (x,v), (u,v) with the rest of the path inward.
pub fn reducible_weight_one_cycle(mut weights: [u64; 5]) -> OrientedGraph {
    weights[0] = 1;
    OrientedGraph::new(
        cycle_graph(5),
        &[(1, 0), (0, 4), (3, 4), (1, 2), (3, 2)],
        weights.to_vec(),
    )
    .unwrap()
}

/// Vertex names of [`example_graph`], index-aligned.
pub const EXAMPLE_LABELS: [&str; 14] = [
    "x", "y", "z", "u", "v", "x1", "x2", "x3", "a1", "a2", "b1", "z1", "c", "a3",
];

/// Index of the constrained vertex `a3` in [`example_graph`].
pub const EXAMPLE_A3: usize = 13;

/// The 14-vertex two-cycle example: basic 5-cycles {x,y,z,u,v} and
/// {z1,c,a3,x3,b1}, pendant pairs x1-a1 and x2-a2, connectors x-x1, x-x2,
/// x-x3 and z-z1.
pub fn example_graph() -> Graph {
    let mut g = Graph::with_labels(EXAMPLE_LABELS.iter().map(|s| s.to_string()).collect());
    // first cycle x y z u v
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] {
        g.add_edge(u, v);
    }
    // second cycle z1 c a3 x3 b1
    for (u, v) in [(11, 12), (12, 13), (13, 7), (7, 10), (10, 11)] {
        g.add_edge(u, v);
    }
    // connectors and pendants
    for (u, v) in [(0, 5), (0, 6), (0, 7), (2, 11), (5, 8), (6, 9)] {
        g.add_edge(u, v);
    }
    g
}

/// The example orientation: every edge at x points into x, the first cycle
/// funnels into z, the second cycle funnels into z1 except for the chain
/// x3 -> a3 -> c that pins the weight of a3 to 1.
pub const EXAMPLE_ARCS: [(usize, usize); 16] = [
    (1, 0),  // y  -> x
    (4, 0),  // v  -> x
    (1, 2),  // y  -> z
    (3, 2),  // u  -> z
    (3, 4),  // u  -> v
    (12, 11), // c  -> z1
    (10, 11), // b1 -> z1
    (13, 12), // a3 -> c
    (7, 13), // x3 -> a3
    (7, 10), // x3 -> b1
    (5, 0),  // x1 -> x
    (6, 0),  // x2 -> x
    (7, 0),  // x3 -> x
    (2, 11), // z  -> z1
    (5, 8),  // x1 -> a1
    (6, 9),  // x2 -> a2
];

/// The oriented example with the given weights; the weight of `a3` must be
/// 1 for the instance to be Cohen-Macaulay, everything else is free.
pub fn example_oriented(weights: [u64; 14]) -> OrientedGraph {
    OrientedGraph::new(example_graph(), &EXAMPLE_ARCS, weights.to_vec()).unwrap()
}
