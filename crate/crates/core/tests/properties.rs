use misbound::bounds::{eppstein, moon_moser, nielsen};
use misbound::corpus::{random_cell_rich, random_k4_free_subcubic};
use misbound::io::{parse_graph6, to_graph6};
use misbound::mibs::{enumerate_mibs_bruteforce, enumerate_mibs_canonical};
use misbound::mis::{
    enumerate_mis, enumerate_mis_branching, enumerate_mis_bruteforce, mis_profile,
};
use misbound::pipeline::{self, InstanceConfig};
use misbound::{Graph, VertexSet};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn k4_free_brute(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    if q.iter()
                        .enumerate()
                        .all(|(i, &x)| q[i + 1..].iter().all(|&y| g.has_edge(x, y)))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn bipartite_brute(g: &Graph) -> bool {
    (0u64..1 << g.order()).any(|side| g.edges().all(|(u, v)| (side >> u & 1) != (side >> v & 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn deleting_a_vertex(g in arb_graph(12), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() > 0);
        let u = pick.index(g.order());
        let ind = g.induced(g.vertices().without(u)).unwrap();
        prop_assert_eq!(ind.graph.order(), g.order() - 1);
        for (i, &v) in ind.remap.iter().enumerate() {
            prop_assert_eq!(ind.graph.degree(i), g.degree(v) - g.has_edge(u, v) as u32);
        }
    }

    #[test]
    fn k4_detection(g in arb_graph(12)) {
        prop_assert_eq!(g.is_k4_free(), k4_free_brute(&g));
    }

    #[test]
    fn bipartite_detection(g in arb_graph(8)) {
        prop_assert_eq!(g.is_bipartite(), bipartite_brute(&g));
    }

    #[test]
    fn three_enumerators_agree(g in arb_graph(14)) {
        let brute = enumerate_mis_bruteforce(&g).unwrap();
        let pivot = enumerate_mis(&g);
        let branch = enumerate_mis_branching(&g, g.order());
        prop_assert_eq!(&brute.sets, &pivot.sets);
        prop_assert_eq!(&brute.sets, &branch.family.sets);
    }

    #[test]
    fn every_set_dominates(g in arb_graph(14)) {
        for s in enumerate_mis(&g).sets {
            prop_assert!(g.is_independent(s));
            prop_assert_eq!(g.closed_neighborhood(s), g.vertices());
        }
    }

    #[test]
    fn disjoint_union_multiplies(a in arb_graph(8), b in arb_graph(8)) {
        let (pa, pb) = (mis_profile(&a), mis_profile(&b));
        let pu = mis_profile(&a.disjoint_union(&b));
        prop_assert_eq!(pu.total(), pa.total() * pb.total());
        prop_assert_eq!(pu, pa.convolve(&pb));
    }

    #[test]
    fn counting_bounds(g in arb_graph(14)) {
        let n = g.order();
        let p = mis_profile(&g);
        prop_assert!(BigUint::from(p.total()).pow(3) <= BigUint::from(3u32).pow(n as u32));
        prop_assert!(moon_moser(n).admits(p.total()));
        for k in 0..=n {
            prop_assert!(eppstein(n, k).unwrap().admits(p.at_most(k)), "k = {}", k);
            if p.exactly(k) > 0 {
                prop_assert!(nielsen(n, k).unwrap().admits(p.exactly(k)), "k = {}", k);
            }
        }
    }

    #[test]
    fn mibs_generator_matches_oracle(g in arb_graph(12)) {
        let brute = enumerate_mibs_bruteforce(&g).unwrap();
        let canon = enumerate_mibs_canonical(&g);
        prop_assert_eq!(brute.vertex_sets(), canon.vertex_sets());
        prop_assert!(canon.ordered_pair_count >= canon.distinct_count);
        prop_assert!(canon.records.iter().all(|r| r.pair_hits >= 1));
    }

    #[test]
    fn mibs_size_histogram_envelope(g in arb_graph(11)) {
        let canon = enumerate_mibs_canonical(&g);
        let mis = enumerate_mis(&g);
        let profile = mis_profile(&g);
        let max_rest = mis
            .sets
            .iter()
            .map(|&a| enumerate_mis(&g.induced(g.vertices().difference(a)).unwrap().graph).len() as u64)
            .max()
            .unwrap_or(0);
        for (k, &count) in canon.by_a_size.iter().enumerate() {
            prop_assert!(count <= profile.exactly(k) * max_rest);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pipeline_invariants_subcubic(seed in 0u64..1_000_000, n in 4usize..=18) {
        let g = random_k4_free_subcubic(n, 3 * n, seed);
        let rep = pipeline::run_instance(&g, &InstanceConfig::default()).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failed_checks());
    }

    #[test]
    fn pipeline_invariants_cells(seed in 0u64..1_000_000, t in 1usize..=4, loose in 0usize..=2, s in 0u64..16) {
        let (g, i0) = random_cell_rich(t, loose, 3 * t, seed);
        let ell = pipeline::decompose(&g, i0).unwrap().ell;
        let cfg = InstanceConfig {
            i0: Some(i0),
            s: Some(VertexSet(s).intersection(VertexSet::full(ell))),
            capture_k: Some(0),
        };
        let rep = pipeline::run_instance(&g, &cfg).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failed_checks());
    }

    /// With no edges between cells, bad events are independent and the
    /// census equals the product of the case-analysis probabilities.
    #[test]
    fn census_equals_product_without_cell_edges(seed in 0u64..1_000_000, t in 1usize..=4) {
        let (g, i0) = random_cell_rich(t, 0, 0, seed);
        let rep = pipeline::run_instance(&g, &InstanceConfig { i0: Some(i0), ..Default::default() }).unwrap();
        prop_assert_eq!(rep.selection.h_edges, 0);
        prop_assert_eq!(rep.selection.i6, rep.selection.i5);
        prop_assert_eq!(&rep.census.p_good_i5, &rep.census.product_bound);
    }
}
