//! Property suites: definitional self-consistency of the graph predicates,
//! normalization and radical laws for oriented graphs, the two-sided
//! unmixedness equivalence, decomposition soundness, dimension identities,
//! and certificate re-verification.

use proptest::prelude::*;

use edgecm::bits;
use edgecm::classifier::{cm_certificate, recheck};
use edgecm::graph::{Graph, VertexSet};
use edgecm::harness::enumerate::{random_girth5_pc_graph, random_oriented};
use edgecm::harness::rng::SplitMix64;
use edgecm::ideal::{Monomial, MonomialIdeal};
use edgecm::oracle::{is_cohen_macaulay, FieldChoice};
use edgecm::oriented::OrientedGraph;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn arb_oriented(max_n: usize, max_w: u64) -> impl Strategy<Value = OrientedGraph> {
    (arb_graph(max_n), any::<u64>(), any::<u64>()).prop_map(move |(g, obits, wseed)| {
        let mut rng = SplitMix64::new(wseed);
        let weights: Vec<u64> = (0..g.vertex_count()).map(|_| 1 + rng.below(max_w)).collect();
        OrientedGraph::from_orientation_bits(g, obits, weights).expect("one arc per edge")
    })
}

fn arb_monomial(ambient: usize, max_exp: u64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, ambient).prop_map(|exps| {
        Monomial::from_pairs(
            &exps
                .iter()
                .enumerate()
                .map(|(v, &e)| (v, e))
                .collect::<Vec<_>>(),
        )
    })
}

fn arb_ideal(ambient: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(ambient, 3), 1..5)
        .prop_map(move |gens| MonomialIdeal::new(ambient, gens))
}

/// Subset-scan oracle for maximal independent sets.
fn subset_scan_mis(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..(1u32 << n) {
        if !g.is_independent_set(s) {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| s & bits::bit(v) == 0)
            .all(|v| !g.is_independent_set(s | bits::bit(v)));
        if maximal {
            out.push(s);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mis_enumeration_matches_subset_scan(g in arb_graph(10)) {
        prop_assert_eq!(g.maximal_independent_sets().unwrap(), subset_scan_mis(&g));
    }

    #[test]
    fn well_covered_means_equal_sizes(g in arb_graph(10)) {
        let sizes: Vec<usize> = subset_scan_mis(&g).iter().map(|s| bits::count(*s)).collect();
        let equal = sizes.windows(2).all(|w| w[0] == w[1]);
        prop_assert_eq!(g.is_well_covered().unwrap(), equal);
    }

    #[test]
    fn covers_are_complements_of_independent_sets(g in arb_graph(8)) {
        let full = g.full_set();
        let from_mis: Vec<VertexSet> = {
            let mut v: Vec<VertexSet> =
                g.maximal_independent_sets().unwrap().iter().map(|s| full & !s).collect();
            v.sort_unstable();
            v
        };
        prop_assert_eq!(g.minimal_vertex_covers().unwrap(), from_mis);
    }

    #[test]
    fn shedding_preserves_independence_number(g in arb_graph(8)) {
        if !g.is_well_covered().unwrap() {
            return Ok(());
        }
        let alpha = g.independence_number().unwrap();
        for v in 0..g.vertex_count() {
            if g.vertex_count() > 1 && g.is_shedding_vertex(v) {
                let (h, _) = g.induced(g.full_set() & !bits::bit(v));
                prop_assert_eq!(h.independence_number().unwrap(), alpha);
            }
        }
    }

    #[test]
    fn radical_of_edge_ideal_is_underlying(d in arb_oriented(6, 3)) {
        let trivial = OrientedGraph::new(
            d.underlying().clone(),
            &d.arcs(),
            vec![1; d.vertex_count()],
        ).unwrap();
        prop_assert_eq!(d.edge_ideal().radical(), trivial.edge_ideal());
    }

    #[test]
    fn normalize_is_idempotent_and_preserves_the_ideal(d in arb_oriented(6, 3)) {
        let n1 = d.normalize();
        prop_assert_eq!(n1.edge_ideal(), d.edge_ideal());
        prop_assert_eq!(n1.normalize(), n1);
    }

    #[test]
    fn unmixed_implies_well_covered(d in arb_oriented(7, 2)) {
        if d.is_unmixed().unwrap().is_unmixed() {
            prop_assert!(d.underlying().is_well_covered().unwrap());
        }
    }

    #[test]
    fn cover_partitions_partition(d in arb_oriented(7, 2), raw in any::<u32>()) {
        let g = d.underlying();
        let cover = (raw & g.full_set()) | covering_completion(g, raw & g.full_set());
        let p = d.cover_partition(cover).unwrap();
        prop_assert_eq!(p.l1 | p.l2 | p.l3, cover);
        prop_assert_eq!(p.l1 & p.l2, 0);
        prop_assert_eq!(p.l1 & p.l3, 0);
        prop_assert_eq!(p.l2 & p.l3, 0);
        for v in bits::iter(p.l3) {
            prop_assert_eq!(g.neighbors(v) & !cover, 0);
        }
    }

    #[test]
    fn minimal_covers_have_empty_l3_and_are_strong(d in arb_oriented(7, 2)) {
        for c in d.underlying().minimal_vertex_covers().unwrap() {
            prop_assert_eq!(d.cover_partition(c).unwrap().l3, 0);
            prop_assert!(d.is_strong_cover(c).unwrap());
        }
    }

    // The unmixedness criterion checked from both sides: the strong-cover
    // enumeration against equal associated-prime heights of the edge ideal.
    #[test]
    fn strong_cover_unmixedness_matches_associated_primes(d in arb_oriented(5, 2)) {
        if d.underlying().edge_count() == 0 {
            return Ok(());
        }
        let combinatorial = d.is_unmixed().unwrap().is_unmixed();
        let algebraic = d.edge_ideal().is_unmixed_ideal().unwrap();
        prop_assert_eq!(combinatorial, algebraic);
    }

    #[test]
    fn decomposition_intersects_back(i in arb_ideal(4)) {
        if i.is_zero() || i.is_unit() {
            return Ok(());
        }
        let comps = i.irreducible_decomposition().unwrap();
        let back = comps
            .iter()
            .map(|c| c.as_ideal(i.ambient()))
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn dimension_identity_for_colon_and_sum(i in arb_ideal(4), f in arb_monomial(4, 2)) {
        if i.is_zero() || i.is_unit() || f.is_one() || i.contains(&f) {
            return Ok(());
        }
        let dim = i.quotient_dimension().unwrap();
        let dim_colon = i.colon(&f).quotient_dimension().unwrap();
        let dim_sum = i.plus(&f).quotient_dimension().unwrap();
        prop_assert_eq!(dim, dim_colon.max(dim_sum));
    }

    // Well-covered graph with a shedding vertex v: the quotient dimension is
    // unchanged both by passing to (I(G \ v), v) and to I(G) : v.
    #[test]
    fn shedding_vertex_dimension_identity(g in arb_graph(7)) {
        if g.edge_count() == 0 || !g.is_well_covered().unwrap() {
            return Ok(());
        }
        let n = g.vertex_count();
        let ideal = MonomialIdeal::new(
            n,
            g.edges().iter().map(|&(u, v)| Monomial::var(u).mul(&Monomial::var(v))).collect(),
        );
        for v in 0..n {
            if !g.is_shedding_vertex(v) {
                continue;
            }
            let deleted = MonomialIdeal::new(
                n,
                g.edges()
                    .iter()
                    .filter(|&&(a, b)| a != v && b != v)
                    .map(|&(a, b)| Monomial::var(a).mul(&Monomial::var(b)))
                    .chain(std::iter::once(Monomial::var(v)))
                    .collect(),
            );
            let colon = ideal.colon(&Monomial::var(v));
            prop_assert_eq!(ideal.quotient_dimension().unwrap(), deleted.quotient_dimension().unwrap());
            prop_assert_eq!(ideal.quotient_dimension().unwrap(), colon.quotient_dimension().unwrap());
        }
    }

    // Certificates re-verify on the instance they were issued for.
    #[test]
    fn certificates_reverify(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let g = random_girth5_pc_graph(&mut rng, 10);
        let d = random_oriented(&mut rng, &g, &[1, 2]);
        let cert = cm_certificate(&d);
        prop_assert!(recheck(&d, &cert), "{cert:?}");
    }

    #[test]
    fn certificates_reverify_off_family(d in arb_oriented(6, 2)) {
        let cert = cm_certificate(&d);
        prop_assert!(recheck(&d, &cert), "{cert:?}");
    }

    // Cohen-Macaulay implies unmixed, and implies the radical (underlying
    // graph ideal) is Cohen-Macaulay too.
    #[test]
    fn oracle_cm_implies_unmixed_and_radical_cm(d in arb_oriented(5, 2)) {
        if d.underlying().edge_count() == 0 {
            return Ok(());
        }
        let ideal = d.edge_ideal();
        let v = is_cohen_macaulay(&ideal, &FieldChoice::Rationals).unwrap();
        if v.cohen_macaulay {
            prop_assert!(ideal.is_unmixed_ideal().unwrap());
            let rad = is_cohen_macaulay(&ideal.radical(), &FieldChoice::Rationals).unwrap();
            prop_assert!(rad.cohen_macaulay);
        }
    }
}

/// Grow a vertex subset into a cover by adding the lower endpoint of every
/// uncovered edge; keeps proptest inputs unconstrained.
fn covering_completion(g: &Graph, base: VertexSet) -> VertexSet {
    let mut cover = base;
    for (u, v) in g.edges() {
        if cover & (bits::bit(u) | bits::bit(v)) == 0 {
            cover |= bits::bit(u);
        }
    }
    cover
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The reduced Euler characteristic computed from face counts equals the
    // alternating sum of homology ranks over any field.
    #[test]
    fn euler_characteristic_consistency(facets in prop::collection::vec(1u32..(1 << 7), 1..6)) {
        let c = edgecm::complex::SimplicialComplex::from_faces(7, &facets);
        let dim = c.dim().unwrap();
        let mut chi: i64 = -1; // the empty face
        for k in 0..=(dim + 1) as usize {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chi += sign * c.faces_of_size(k + 1).len() as i64;
        }
        for field in [FieldChoice::Rationals, FieldChoice::Prime(2), FieldChoice::Prime(32003)] {
            let ranks = edgecm::oracle::reduced_homology_ranks(&c, &field);
            let mut alt: i64 = 0;
            for (idx, &r) in ranks.iter().enumerate() {
                // Index 0 is dimension -1.
                let sign = if idx % 2 == 0 { -1 } else { 1 };
                alt += sign * r as i64;
            }
            prop_assert_eq!(chi, alt, "field {:?}", field);
        }
    }
}

/// The 6-vertex triangulation of the projective plane has 2-torsion in its
/// first homology: ranks must differ between the rationals and GF(2),
/// pinning that the two elimination paths are genuinely field-aware.
#[test]
fn projective_plane_detects_torsion() {
    let tri = |a: usize, b: usize, c: usize| {
        edgecm::bits::bit(a) | edgecm::bits::bit(b) | edgecm::bits::bit(c)
    };
    let facets = [
        tri(0, 1, 3), tri(0, 1, 4), tri(0, 2, 3), tri(0, 2, 5), tri(0, 4, 5),
        tri(1, 2, 4), tri(1, 2, 5), tri(1, 3, 5), tri(2, 3, 4), tri(3, 4, 5),
    ];
    let c = edgecm::complex::SimplicialComplex::from_faces(6, &facets);
    assert_eq!(c.face_count(), 1 + 6 + 15 + 10);
    assert!(c.is_pure());
    assert_eq!(
        edgecm::oracle::reduced_homology_ranks(&c, &FieldChoice::Rationals),
        vec![0, 0, 0, 0]
    );
    assert_eq!(
        edgecm::oracle::reduced_homology_ranks(&c, &FieldChoice::Prime(2)),
        vec![0, 0, 1, 1]
    );
    assert_eq!(
        edgecm::oracle::reduced_homology_ranks(&c, &FieldChoice::Prime(32003)),
        vec![0, 0, 0, 0]
    );
}

/// Field comparison over a corpus of small instances. A disagreement would
/// point at torsion in some link; it is reported, not failed.
#[test]
fn rational_vs_prime_field_agreement() {
    let mut findings = Vec::new();
    let mut rng = SplitMix64::new(0xf1e1d);
    let mut corpus: Vec<OrientedGraph> = Vec::new();
    for seed in 0..30 {
        let g = random_girth5_pc_graph(&mut SplitMix64::new(seed), 9);
        corpus.push(random_oriented(&mut rng, &g, &[1, 2]));
    }
    for len in [4usize, 5, 6, 7] {
        let g = edgecm::fixtures::cycle_graph(len);
        corpus.push(random_oriented(&mut rng, &g, &[1, 2]));
    }
    let mut checked = 0;
    for d in &corpus {
        let ideal = d.normalize().edge_ideal();
        if ideal.is_zero() {
            continue;
        }
        let q = is_cohen_macaulay(&ideal, &FieldChoice::Rationals).unwrap();
        for p in [2u64, 32003] {
            let fp = is_cohen_macaulay(&ideal, &FieldChoice::Prime(p)).unwrap();
            checked += 1;
            if fp.cohen_macaulay != q.cohen_macaulay {
                findings.push(format!(
                    "torsion finding: {} differs over GF({p}) vs Q",
                    edgecm::harness::encode::encode_instance(d)
                ));
            }
        }
    }
    for f in &findings {
        println!("{f}");
    }
    println!("field agreement: {checked} comparisons, {} torsion findings", findings.len());
}
