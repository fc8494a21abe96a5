//! Instance generation and cross-validation of the three verdict routes
//! (clause certificate, unmixedness route, algebraic oracle), plus the
//! triangle-free exploration mode.
//!
//! Reports are deterministic byte-for-byte for a fixed spec and seed, and
//! every recorded instance replays from its encoding alone.

pub mod encode;
pub mod enumerate;
pub mod rng;

use serde::{Deserialize, Serialize};

use crate::classifier::{cm_certificate, underlying_graph_is_cm_girth5};
use crate::fixtures;
use crate::graph::{Graph, ENUMERATION_BOUND};
use crate::oracle::{is_cohen_macaulay_bounded, FieldChoice, OracleBounds};
use crate::oriented::OrientedGraph;
use encode::encode_instance;
use enumerate::{enumerate_graphs, random_girth5_pc_graph, random_oriented, EnumerationOptions};
use rng::SplitMix64;

/// Which underlying graphs a sweep runs over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphFamily {
    /// Connected graphs up to isomorphism with the given girth floor.
    Connected { max_vertices: usize, min_girth: Option<usize> },
    /// Connected graphs carrying a perfect matching of pendant edges.
    PendantMatching { max_vertices: usize },
    /// Plain cycles of the given lengths.
    Cycles { lengths: Vec<usize> },
    /// Seeded random girth-5 pendant/cycle-partition graphs.
    RandomPc { count: usize, max_vertices: usize },
    /// The packaged two-cycle example graph.
    Example,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrientationPolicy {
    /// Every orientation of every edge crossed with every weight vector.
    All,
    /// A seeded sample of (graph, orientation, weights) triples.
    Sampled { count: usize },
}

/// A deterministic instance stream: family x orientations x weights,
/// expanded in a fixed order or sampled from a fixed seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: GraphFamily,
    pub orientations: OrientationPolicy,
    pub weight_alphabet: Vec<u64>,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn exhaustive(family: GraphFamily, weight_alphabet: Vec<u64>) -> Self {
        InstanceSpec { family, orientations: OrientationPolicy::All, weight_alphabet, seed: 0 }
    }

    pub fn sampled(
        family: GraphFamily,
        weight_alphabet: Vec<u64>,
        count: usize,
        seed: u64,
    ) -> Self {
        InstanceSpec {
            family,
            orientations: OrientationPolicy::Sampled { count },
            weight_alphabet,
            seed,
        }
    }

    /// The underlying graphs of the family, in stream order.
    pub fn underlying_graphs(&self) -> Vec<Graph> {
        match &self.family {
            GraphFamily::Connected { max_vertices, min_girth } => enumerate_graphs(
                *max_vertices,
                &EnumerationOptions { connected_only: true, min_girth: *min_girth },
            ),
            GraphFamily::PendantMatching { max_vertices } => enumerate_graphs(
                *max_vertices,
                &EnumerationOptions { connected_only: true, min_girth: None },
            )
            .into_iter()
            .filter(|g| crate::classifier::pendant_perfect_matching(g).is_some())
            .collect(),
            GraphFamily::Cycles { lengths } => {
                lengths.iter().map(|&n| fixtures::cycle_graph(n)).collect()
            }
            GraphFamily::RandomPc { count, max_vertices } => {
                let mut rng = SplitMix64::new(self.seed ^ 0x5eed_0001);
                (0..*count)
                    .map(|_| random_girth5_pc_graph(&mut rng, *max_vertices))
                    .collect()
            }
            GraphFamily::Example => vec![fixtures::example_graph()],
        }
    }

    /// Expand into oriented instances. `All` nests graph, orientation bits
    /// and weight digits ascending; `Sampled` draws from a SplitMix64
    /// stream seeded by `seed`, so replays are exact.
    pub fn instances(&self) -> Vec<OrientedGraph> {
        let graphs = self.underlying_graphs();
        let alphabet = &self.weight_alphabet;
        assert!(!alphabet.is_empty(), "weight alphabet must be nonempty");
        let mut out = Vec::new();
        match self.orientations {
            OrientationPolicy::All => {
                for g in &graphs {
                    let m = g.edge_count();
                    assert!(m < 63, "orientation space too large to expand");
                    let n = g.vertex_count();
                    for orientation in 0..(1u64 << m) {
                        for mut widx in 0..alphabet.len().pow(n as u32) as u64 {
                            let mut weights = Vec::with_capacity(n);
                            for _ in 0..n {
                                weights.push(alphabet[(widx % alphabet.len() as u64) as usize]);
                                widx /= alphabet.len() as u64;
                            }
                            out.push(
                                OrientedGraph::from_orientation_bits(
                                    g.clone(),
                                    orientation,
                                    weights,
                                )
                                .expect("single orientation per edge"),
                            );
                        }
                    }
                }
            }
            OrientationPolicy::Sampled { count } => {
                let mut rng = SplitMix64::new(self.seed);
                for _ in 0..count {
                    let g = rng.choose(&graphs);
                    out.push(random_oriented(&mut rng, g, alphabet));
                }
            }
        }
        out
    }
}

/// One line of a cross-validation report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub encoding: String,
    /// Clause-certificate verdict; `None` when the girth guard fired.
    pub condition3: Option<bool>,
    /// Graph-CM and unmixedness route; `None` out of bounds or out of scope.
    pub condition2: Option<bool>,
    /// Algebraic oracle; `None` when the instance exceeded the oracle
    /// bounds.
    pub oracle: Option<bool>,
}

impl InstanceRecord {
    /// All routes that ran agree.
    pub fn agreement(&self) -> bool {
        let votes: Vec<bool> = [self.condition3, self.condition2, self.oracle]
            .into_iter()
            .flatten()
            .collect();
        votes.windows(2).all(|w| w[0] == w[1])
    }

    fn fmt_line(&self) -> String {
        let s = |v: Option<bool>| match v {
            Some(true) => "cm",
            Some(false) => "not-cm",
            None => "-",
        };
        format!(
            "{}\tcond3={}\tcond2={}\toracle={}\tagree={}",
            self.encoding,
            s(self.condition3),
            s(self.condition2),
            s(self.oracle),
            if self.agreement() { "yes" } else { "NO" },
        )
    }
}

/// A replayable disagreement between routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub record: InstanceRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub records: Vec<InstanceRecord>,
    pub total: usize,
    pub in_scope: usize,
    pub cm_count: usize,
    pub oracle_checked: usize,
    pub oracle_skipped: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl std::fmt::Display for CrossReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.records {
            writeln!(f, "{}", r.fmt_line())?;
        }
        writeln!(f, "# total {}", self.total)?;
        writeln!(f, "# in-scope {}", self.in_scope)?;
        writeln!(f, "# cohen-macaulay {}", self.cm_count)?;
        writeln!(f, "# oracle-checked {}", self.oracle_checked)?;
        writeln!(f, "# oracle-skipped {}", self.oracle_skipped)?;
        writeln!(f, "# discrepancies {}", self.discrepancies.len())
    }
}

/// Oracle size caps used inside sweeps; tighter than the library default so
/// exhaustive runs stay fast, with skips counted instead of failing.
pub fn sweep_oracle_bounds() -> OracleBounds {
    OracleBounds { max_ground: 20, max_faces: 20_000 }
}

/// Evaluate every route on one instance.
pub fn evaluate_instance(d: &OrientedGraph, bounds: &OracleBounds) -> InstanceRecord {
    let nd = d.normalize();
    let certificate = cm_certificate(&nd);
    let condition3 = certificate.is_cohen_macaulay();
    let condition2 = if condition3.is_some() && nd.vertex_count() <= ENUMERATION_BOUND {
        Some(
            underlying_graph_is_cm_girth5(nd.underlying())
                && nd.is_unmixed().expect("bound checked").is_unmixed(),
        )
    } else {
        None
    };
    let oracle = match is_cohen_macaulay_bounded(&nd.edge_ideal(), &FieldChoice::Rationals, bounds)
    {
        Ok(v) => Some(v.cohen_macaulay),
        Err(_) => None,
    };
    InstanceRecord {
        encoding: encode_instance(&nd),
        condition3,
        condition2,
        oracle,
    }
}

/// Run all three routes over the spec's instances (girth-at-least-5
/// instances only; shorter girth counts as out of scope) and collect
/// disagreements. The expected outcome on every supported family is zero
/// discrepancies.
pub fn cross_validate(spec: &InstanceSpec) -> CrossReport {
    let bounds = sweep_oracle_bounds();
    let mut records = Vec::new();
    let mut discrepancies = Vec::new();
    let mut in_scope = 0;
    let mut cm_count = 0;
    let mut oracle_checked = 0;
    let mut oracle_skipped = 0;
    for d in spec.instances() {
        let record = evaluate_instance(&d, &bounds);
        if record.condition3.is_some() {
            in_scope += 1;
            if record.condition3 == Some(true) {
                cm_count += 1;
            }
            match record.oracle {
                Some(_) => oracle_checked += 1,
                None => oracle_skipped += 1,
            }
            if !record.agreement() {
                discrepancies.push(Discrepancy { record: record.clone() });
            }
        }
        records.push(record);
    }
    CrossReport {
        total: records.len(),
        in_scope,
        cm_count,
        oracle_checked,
        oracle_skipped,
        discrepancies,
        records,
    }
}

/// One line of a conjecture-search report: on triangle-free ground, compare
/// `CM(underlying) and unmixed` against `CM(oriented)` by the oracle alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub encoding: String,
    pub graph_cm: Option<bool>,
    pub unmixed: bool,
    pub oriented_cm: Option<bool>,
    /// Girth at least 5: ground the girth-5 classification already settles.
    pub control: bool,
}

impl ConjectureRecord {
    /// The two sides differ (both must have been computable).
    pub fn is_finding(&self) -> bool {
        match (self.graph_cm, self.oriented_cm) {
            (Some(g), Some(o)) => (g && self.unmixed) != o,
            _ => false,
        }
    }

    fn fmt_line(&self) -> String {
        let s = |v: Option<bool>| match v {
            Some(true) => "cm",
            Some(false) => "not-cm",
            None => "-",
        };
        format!(
            "{}\tgraph={}\tunmixed={}\toriented={}\tcontrol={}\tfinding={}",
            self.encoding,
            s(self.graph_cm),
            if self.unmixed { "yes" } else { "no" },
            s(self.oriented_cm),
            if self.control { "yes" } else { "no" },
            if self.is_finding() { "YES" } else { "no" },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub records: Vec<ConjectureRecord>,
    pub total: usize,
    pub skipped_triangles: usize,
    pub control_total: usize,
    pub control_findings: usize,
    pub findings: Vec<ConjectureRecord>,
}

impl std::fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.records {
            writeln!(f, "{}", r.fmt_line())?;
        }
        writeln!(f, "# total {}", self.total)?;
        writeln!(f, "# skipped-triangles {}", self.skipped_triangles)?;
        writeln!(f, "# control-instances {}", self.control_total)?;
        writeln!(f, "# control-findings {}", self.control_findings)?;
        writeln!(f, "# findings {}", self.findings.len())
    }
}

/// Explore whether Cohen-Macaulayness still coincides with
/// `CM(underlying) and unmixed` on triangle-free (girth >= 4) ground. Any
/// instance where the two sides differ is logged as a finding; the girth-5
/// control subfamily must stay clean. Evidence, never proof.
pub fn conjecture_search(spec: &InstanceSpec) -> ConjectureReport {
    let bounds = sweep_oracle_bounds();
    let mut records = Vec::new();
    let mut findings = Vec::new();
    let mut skipped_triangles = 0;
    let mut control_total = 0;
    let mut control_findings = 0;
    // The underlying graph's verdict depends only on the graph; memoize per
    // labeled edge set (family members are distinct representatives).
    let mut graph_memo: std::collections::HashMap<Vec<(usize, usize)>, Option<bool>> =
        std::collections::HashMap::new();
    for d in spec.instances() {
        let nd = d.normalize();
        let g = nd.underlying();
        if !g.girth_at_least(4) {
            skipped_triangles += 1;
            continue;
        }
        let graph_cm = *graph_memo.entry(g.edges()).or_insert_with(|| {
            let all_one =
                OrientedGraph::new(g.clone(), &nd.arcs(), vec![1; g.vertex_count()])
                    .expect("same shape");
            is_cohen_macaulay_bounded(&all_one.edge_ideal(), &FieldChoice::Rationals, &bounds)
                .ok()
                .map(|v| v.cohen_macaulay)
        });
        let unmixed = nd.is_unmixed().expect("desk-scale instance").is_unmixed();
        let oriented_cm =
            is_cohen_macaulay_bounded(&nd.edge_ideal(), &FieldChoice::Rationals, &bounds)
                .ok()
                .map(|v| v.cohen_macaulay);
        let control = g.girth_at_least(5);
        let record = ConjectureRecord {
            encoding: encode_instance(&nd),
            graph_cm,
            unmixed,
            oriented_cm,
            control,
        };
        if control {
            control_total += 1;
            if record.is_finding() {
                control_findings += 1;
            }
        }
        if record.is_finding() {
            findings.push(record.clone());
        }
        records.push(record);
    }
    ConjectureReport {
        total: records.len(),
        skipped_triangles,
        control_total,
        control_findings,
        findings,
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_counts_for_exhaustive_cycle() {
        let spec = InstanceSpec::exhaustive(
            GraphFamily::Cycles { lengths: vec![5] },
            vec![1, 2],
        );
        // 2^5 orientations x 2^5 weight vectors.
        assert_eq!(spec.instances().len(), 1024);
    }

    #[test]
    fn single_edge_single_weight() {
        let spec = InstanceSpec::exhaustive(
            GraphFamily::Connected { max_vertices: 2, min_girth: None },
            vec![1],
        );
        // K1 has no orientations beyond the empty one; K2 has two, but they
        // normalize to the same bidirected instance.
        let instances = spec.instances();
        assert_eq!(instances.len(), 3);
        let normalized: std::collections::HashSet<String> = instances
            .iter()
            .map(|d| encode::encode_instance(&d.normalize()))
            .collect();
        assert_eq!(normalized.len(), 2);
    }

    #[test]
    fn sampling_replays_exactly() {
        let spec = InstanceSpec::sampled(
            GraphFamily::Cycles { lengths: vec![5, 6] },
            vec![1, 2],
            10,
            99,
        );
        let a: Vec<String> = spec.instances().iter().map(encode_instance).collect();
        let b: Vec<String> = spec.instances().iter().map(encode_instance).collect();
        assert_eq!(a, b);
        let other = InstanceSpec::sampled(
            GraphFamily::Cycles { lengths: vec![5, 6] },
            vec![1, 2],
            10,
            100,
        );
        let c: Vec<String> = other.instances().iter().map(encode_instance).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn cross_validation_of_tiny_family_is_clean() {
        let spec = InstanceSpec::exhaustive(
            GraphFamily::Connected { max_vertices: 4, min_girth: Some(5) },
            vec![1, 2],
        );
        let report = cross_validate(&spec);
        assert!(report.discrepancies.is_empty());
        assert_eq!(report.in_scope, report.total);
        assert_eq!(report.oracle_skipped, 0);
        // Reports replay byte-for-byte.
        assert_eq!(report.to_string(), cross_validate(&spec).to_string());
    }

    #[test]
    fn records_replay_from_their_encoding() {
        let spec = InstanceSpec::sampled(
            GraphFamily::Cycles { lengths: vec![5] },
            vec![1, 2],
            25,
            3,
        );
        let report = cross_validate(&spec);
        for r in &report.records {
            let d = encode::parse_instance(&r.encoding).unwrap();
            let again = evaluate_instance(&d, &sweep_oracle_bounds());
            assert_eq!(&again, r);
        }
    }

    #[test]
    fn conjecture_control_on_four_cycle() {
        let spec = InstanceSpec::exhaustive(
            GraphFamily::Cycles { lengths: vec![4] },
            vec![1],
        );
        let report = conjecture_search(&spec);
        // A 4-cycle is not Cohen-Macaulay, and with trivial weights the
        // oriented verdict matches the underlying one exactly.
        assert_eq!(report.findings.len(), 0);
        assert!(report.records.iter().all(|r| r.graph_cm == Some(false)));
    }
}
