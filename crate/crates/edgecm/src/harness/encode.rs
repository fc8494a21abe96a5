//! Compact single-line instance encoding, replayable on its own:
//! `n=5;e=0-1,1-2,2-3,3-4,0-4;a=0>1,1>2,2>3,3>4,4>0;w=2,2,2,2,2`.

use crate::graph::Graph;
use crate::oriented::OrientedGraph;

pub fn encode_instance(d: &OrientedGraph) -> String {
    let edges = d
        .underlying()
        .edges()
        .iter()
        .map(|&(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",");
    let arcs = d
        .arcs()
        .iter()
        .map(|&(t, h)| format!("{t}>{h}"))
        .collect::<Vec<_>>()
        .join(",");
    let weights = d
        .weights()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("n={};e={edges};a={arcs};w={weights}", d.vertex_count())
}

pub fn parse_instance(text: &str) -> Result<OrientedGraph, String> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut weights: Vec<u64> = Vec::new();
    for part in text.trim().split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("malformed field {part:?}"))?;
        match key {
            "n" => n = Some(value.parse().map_err(|e| format!("bad n: {e}"))?),
            "e" => {
                for pair in value.split(',').filter(|s| !s.is_empty()) {
                    let (u, v) = pair
                        .split_once('-')
                        .ok_or_else(|| format!("bad edge {pair:?}"))?;
                    edges.push((
                        u.parse().map_err(|e| format!("bad edge end: {e}"))?,
                        v.parse().map_err(|e| format!("bad edge end: {e}"))?,
                    ));
                }
            }
            "a" => {
                for pair in value.split(',').filter(|s| !s.is_empty()) {
                    let (t, h) = pair
                        .split_once('>')
                        .ok_or_else(|| format!("bad arc {pair:?}"))?;
                    arcs.push((
                        t.parse().map_err(|e| format!("bad arc end: {e}"))?,
                        h.parse().map_err(|e| format!("bad arc end: {e}"))?,
                    ));
                }
            }
            "w" => {
                for w in value.split(',').filter(|s| !s.is_empty()) {
                    weights.push(w.parse().map_err(|e| format!("bad weight: {e}"))?);
                }
            }
            other => return Err(format!("unknown field {other:?}")),
        }
    }
    let n = n.ok_or("missing n")?;
    if weights.len() != n {
        return Err(format!("{} weights for {n} vertices", weights.len()));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
        return Err(format!("edge {u}-{v} out of range"));
    }
    let g = Graph::from_edges(n, &edges);
    OrientedGraph::new(g, &arcs, weights).map_err(|e| e.to_string())
}
