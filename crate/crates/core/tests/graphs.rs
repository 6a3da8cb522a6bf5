//! Graph ideals, the graph families and polarization.

use std::collections::BTreeSet;

use proptest::prelude::*;
use vfilt_core::decomp::{associated_primes, bight};
use vfilt_core::graph::{fakhari, minimal_vertex_covers, reg_closed_form};
use vfilt_core::polarize::polarize;
use vfilt_core::vnumber::v_number;
use vfilt_core::{cover_ideal, edge_ideal, FamilyTag, FiltrationSpec, Graph};

fn graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_vertices)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let m = pairs.len();
            (
                Just(n),
                Just(pairs),
                prop::collection::vec(any::<bool>(), m),
            )
        })
        .prop_filter_map("needs an edge", |(n, pairs, keep)| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect();
            if edges.is_empty() {
                return None;
            }
            Graph::new((1..=n).map(|i| format!("x{i}")).collect(), edges).ok()
        })
}

/// Minimal transversals of the edge set by subset enumeration.
fn brute_force_covers(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let covers: Vec<u32> = (0u32..(1 << n))
        .filter(|&s| {
            g.edges()
                .iter()
                .all(|&(a, b)| s & (1 << a) != 0 || s & (1 << b) != 0)
        })
        .collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..n).filter(|&i| s & (1 << i) != 0).collect())
        .collect()
}

/// Two-colourability by trying every colouring.
fn brute_force_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..(1 << n)).any(|c| g.edges().iter().all(|&(a, b)| (c >> a) & 1 != (c >> b) & 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_ideal_generators_are_minimal_covers(g in graph(8)) {
        let covers: BTreeSet<Vec<usize>> = minimal_vertex_covers(&g).unwrap().into_iter().collect();
        prop_assert_eq!(covers, brute_force_covers(&g));
        prop_assert!(cover_ideal(&g).unwrap().is_squarefree());
    }

    #[test]
    fn cover_ideal_primes_are_edges(g in graph(8)) {
        let j = cover_ideal(&g).unwrap();
        let ass: Vec<Vec<usize>> = associated_primes(&j).unwrap().iter().map(|p| p.support().to_vec()).collect();
        let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a, b]).collect();
        prop_assert_eq!(ass, edges);
    }

    #[test]
    fn edge_ideal_primes_are_covers(g in graph(7)) {
        let i = edge_ideal(&g).unwrap();
        prop_assert_eq!(i.generators().len(), g.edge_count());
        let ass: BTreeSet<Vec<usize>> = associated_primes(&i).unwrap().iter().map(|p| p.support().to_vec()).collect();
        prop_assert_eq!(ass, brute_force_covers(&g));
    }

    #[test]
    fn bipartite_test_matches_brute_force(g in graph(8)) {
        prop_assert_eq!(g.is_bipartite(), brute_force_bipartite(&g));
        if let Some((a, b)) = g.bipartition() {
            for &(u, v) in g.edges() {
                prop_assert!(a.contains(&u) != a.contains(&v));
            }
            prop_assert_eq!(a.len() + b.len(), g.vertex_count());
        }
    }

    #[test]
    fn multipartite_tests_agree(g in graph(7)) {
        prop_assert_eq!(g.is_complete_multipartite(), g.multipartite_partition_search().is_some());
    }

    #[test]
    fn fakhari_counts(g in graph(6), k in 1usize..=3) {
        let gk = fakhari(&g, k).unwrap();
        prop_assert_eq!(gk.vertex_count(), k * g.vertex_count());
        prop_assert_eq!(gk.edge_count(), g.edge_count() * k * (k + 1) / 2);
    }

    #[test]
    fn polarization_of_symbolic_powers(g in graph(5), k in 1usize..=3) {
        let j = cover_ideal(&g).unwrap();
        let jk = FiltrationSpec::symbolic(j).evaluate(k as u64).unwrap();
        let gk = fakhari(&g, k).unwrap();
        let target = gk.ring();
        let pol = polarize(&jk);
        let aligned = pol.embed_into(&target).unwrap();
        let cover = cover_ideal(&gk).unwrap();
        prop_assert_eq!(&aligned, &cover);
        prop_assert_eq!(v_number(&pol).unwrap().value, v_number(&jk).unwrap().value);
        prop_assert_eq!(v_number(&cover).unwrap().value, v_number(&jk).unwrap().value);
    }
}

fn build(s: &str) -> Graph {
    s.parse::<FamilyTag>().unwrap().build().unwrap()
}

#[test]
fn family_shapes() {
    assert_eq!(build("Kpend(3,2)").vertex_count(), 9);
    assert_eq!(
        fakhari(&build("C(5)"), 1).unwrap().edges(),
        build("C(5)").edges()
    );
    assert_eq!(edge_ideal(&build("C(4)")).unwrap().generators().len(), 4);
    let k23 = cover_ideal(&build("Kb(2,3)")).unwrap();
    let supports: Vec<Vec<usize>> = k23.generators().iter().map(|g| g.support()).collect();
    assert_eq!(supports, vec![vec![0, 1], vec![2, 3, 4]]);
}

#[test]
fn every_cycle_edge_meets_a_cover_once() {
    let g = build("C(5)");
    let covers = minimal_vertex_covers(&g).unwrap();
    for &(a, b) in g.edges() {
        assert!(covers.iter().any(|c| c.contains(&a) != c.contains(&b)));
    }
}

#[test]
fn counterexample_graphs() {
    for p in 2..=3usize {
        let h = FamilyTag::HBip(p).build().unwrap();
        assert!(h.is_bipartite());
        assert!(h.is_unmixed_edge_ideal().unwrap());
        assert!(!h.is_complete_multipartite());
        let v = v_number(&cover_ideal(&h).unwrap()).unwrap().value;
        let b = bight(&edge_ideal(&h).unwrap()).unwrap();
        assert_eq!((v, b), (3 * p as u64 - 2, 2 * p));
    }
    assert!(FamilyTag::HBip(2)
        .build()
        .unwrap()
        .multipartite_partition_search()
        .is_none());
}

#[test]
fn regularity_minus_v_for_complete_bipartite() {
    for (p1, p2) in [(2, 2), (3, 3), (2, 3)] {
        let tag = FamilyTag::CompleteBipartite(p1, p2);
        let j = cover_ideal(&tag.build().unwrap()).unwrap();
        for n in 1..=3u64 {
            let v = v_number(&j.power(n as u32)).unwrap().value as i64;
            let gap = (n as i64 - 1) * (p2 as i64 - p1 as i64);
            assert_eq!(reg_closed_form(&tag, n).unwrap() - v, gap);
        }
    }
}

#[test]
fn graph_json_round_trip() {
    for s in [
        "Kb(2,3)",
        "C(5)",
        "Kpend(2,2)",
        "fakhari(K(3),2)",
        "hbip(2)",
    ] {
        let g = build(s);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }
}
