//! Isomorph-free enumeration of small graphs by vertex augmentation with
//! canonical-form deduplication, and seeded random generators for the
//! structured families the sweeps need.

use std::collections::HashSet;

use super::rng::SplitMix64;
use crate::bits;
use crate::graph::Graph;
use crate::oriented::OrientedGraph;

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub connected_only: bool,
    pub min_girth: Option<usize>,
}

/// All graphs with 1..=`max_vertices` vertices up to isomorphism, filtered
/// by the options. Each level augments the previous one by a new vertex
/// joined to a subset of old vertices: every connected graph keeps a
/// non-cut vertex, and every graph keeps any vertex, so augmentation
/// reaches everything; canonical forms deduplicate.
pub fn enumerate_graphs(max_vertices: usize, opts: &EnumerationOptions) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    let mut out: Vec<Graph> = level.clone();
    for n in 2..=max_vertices {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for parent in &level {
            // Pairwise distances constrain which attachment sets keep the
            // girth: a new cycle through the new vertex has length
            // dist(a, b) + 2 over attachment points a, b.
            let dist: Vec<Vec<Option<u32>>> = (0..n - 1)
                .map(|v| parent.distances_within(v, parent.full_set()))
                .collect();
            let min_allowed = opts.min_girth.map(|g| g.saturating_sub(2) as u32);
            'subset: for s in 0..(1u32 << (n - 1)) {
                if s == 0 && opts.connected_only {
                    continue;
                }
                if let Some(min_d) = min_allowed {
                    let members = bits::to_vec(s);
                    for (i, &a) in members.iter().enumerate() {
                        for &b in &members[i + 1..] {
                            if dist[a][b].is_some_and(|d| d < min_d) {
                                continue 'subset;
                            }
                        }
                    }
                }
                let mut g = Graph::new(n);
                for (u, v) in parent.edges() {
                    g.add_edge(u, v);
                }
                for v in bits::iter(s) {
                    g.add_edge(v, n - 1);
                }
                let form = g.canonical_form();
                if seen.insert(form.clone()) {
                    next.push(from_canonical_form(n, &form));
                }
            }
        }
        next.sort_by_key(|g| g.canonical_form());
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Rebuild a graph from its canonical row encoding, so enumeration output
/// does not depend on which representative was generated first.
fn from_canonical_form(n: usize, rows: &[u32]) -> Graph {
    let mut g = Graph::new(n);
    for (k, &row) in rows.iter().enumerate() {
        for j in bits::iter(row) {
            g.add_edge(j, k);
        }
    }
    g
}

/// A random connected graph of girth at least 5 carrying the
/// pendant/basic-cycle partition, on at most `max_vertices` vertices:
/// propose a few basic 5-cycles plus whiskered pairs, wire them together,
/// and reject anything that breaks girth, connectivity, or the partition.
pub fn random_girth5_pc_graph(rng: &mut SplitMix64, max_vertices: usize) -> Graph {
    assert!(max_vertices >= 2);
    loop {
        let max_cycles = (max_vertices / 5).min(2);
        let cycles = rng.below(max_cycles as u64 + 1) as usize;
        let room = max_vertices - 5 * cycles;
        let max_pairs = (room / 2).min(4);
        let pairs = if cycles == 0 {
            1 + rng.below(max_pairs.max(1) as u64) as usize
        } else {
            rng.below(max_pairs as u64 + 1) as usize
        };
        if 5 * cycles + 2 * pairs < 2 {
            continue;
        }
        let n = 5 * cycles + 2 * pairs;
        let mut g = Graph::new(n);
        // Cycle blocks first, then (support, leaf) pairs.
        for c in 0..cycles {
            for i in 0..5 {
                g.add_edge(5 * c + i, 5 * c + (i + 1) % 5);
            }
        }
        let support = |p: usize| 5 * cycles + 2 * p;
        for p in 0..pairs {
            g.add_edge(support(p), support(p) + 1);
        }
        // Attachment points: cycle vertices and pair supports.
        let mut anchors: Vec<usize> = (0..5 * cycles).collect();
        anchors.extend((0..pairs).map(support));
        // Join blocks into one component, then sprinkle a few extra edges.
        let blocks = cycles + pairs;
        for b in 1..blocks {
            let local: Vec<usize> = anchors
                .iter()
                .copied()
                .filter(|&v| block_of(v, cycles) == b)
                .collect();
            let earlier: Vec<usize> = anchors
                .iter()
                .copied()
                .filter(|&v| block_of(v, cycles) < b)
                .collect();
            g.add_edge(*rng.choose(&local), *rng.choose(&earlier));
        }
        for _ in 0..rng.below(3) {
            let a = *rng.choose(&anchors);
            let b = *rng.choose(&anchors);
            if a != b && !g.has_edge(a, b) {
                g.add_edge(a, b);
            }
        }
        if g.is_connected() && g.girth_at_least(5) && g.pc_decomposition().is_ok() {
            return g;
        }
    }
}

fn block_of(v: usize, cycles: usize) -> usize {
    if v < 5 * cycles {
        v / 5
    } else {
        cycles + (v - 5 * cycles) / 2
    }
}

/// Random orientation (one arc per edge) and weights from the alphabet.
pub fn random_oriented(rng: &mut SplitMix64, g: &Graph, alphabet: &[u64]) -> OrientedGraph {
    let m = g.edge_count();
    let orientation = if m == 0 { 0 } else { rng.next_u64() & ((1u64 << m) - 1) };
    let weights = (0..g.vertex_count()).map(|_| *rng.choose(alphabet)).collect();
    OrientedGraph::from_orientation_bits(g.clone(), orientation, weights)
        .expect("one arc per edge is always valid")
}
