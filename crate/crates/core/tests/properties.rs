use invmatch::constructions::{catalog, full_transformation_monoid, rees_matrix, ReesMatrixSpec};
use invmatch::engine::{hall_certificate, max_bipartite_matching, perfect_matching_with_loops, HallCertificate};
use invmatch::graphs::{BipartiteGraph, InverseGraph};
use invmatch::matchers::{find_permutation_matching, validate_matching, MatchOutcome};
use proptest::prelude::*;

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..10, 1usize..10).prop_flat_map(|(l, r)| {
        proptest::collection::vec(proptest::bool::weighted(0.3), l * r).prop_map(move |bits| {
            let edges: Vec<_> = (0..l * r).filter(|&i| bits[i]).map(|i| (i / r, i % r)).collect();
            BipartiteGraph::from_edges(l, r, &edges)
        })
    })
}

fn graph_with_loops() -> impl Strategy<Value = InverseGraph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.25), n * n).prop_map(move |bits| {
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).filter(|&(u, v)| bits[u * n + v]).collect();
            InverseGraph::from_edges(n, &edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverses_are_symmetric_in_t5(a in 0usize..3125, b in 0usize..3125) {
        let t = full_transformation_monoid(5).unwrap();
        let set = t.transformations().unwrap();
        let (x, y) = (set.image(a), set.image(b));
        let direct = compose(&compose(x, y), x) == x && compose(&compose(y, x), y) == y;
        prop_assert_eq!(t.is_inverse(a, b), direct);
        prop_assert_eq!(t.is_inverse(a, b), t.is_inverse(b, a));
    }

    #[test]
    fn combinatorial_inverses_agree_with_scan_in_t5(a in 0usize..3125) {
        let t = full_transformation_monoid(5).unwrap();
        prop_assert_eq!(t.inverses_by_structure(a), t.inverses_by_scan(a));
    }

    #[test]
    fn hall_certificates_are_sound(g in bipartite()) {
        let max = max_bipartite_matching(&g).len();
        match hall_certificate(&g) {
            HallCertificate::Saturating(m) => {
                prop_assert_eq!(m.len(), g.left_len());
                prop_assert_eq!(max, g.left_len());
                for &(x, y) in m.pairs() {
                    prop_assert!(g.has_edge(x, y));
                }
            }
            HallCertificate::Violator(v) => {
                prop_assert!(v.is_genuine(&g));
                // König: the deficiency of the violator is the number of unmatched left vertices
                prop_assert_eq!(v.set.len() - v.neighborhood.len(), g.left_len() - max);
            }
        }
    }

    #[test]
    fn loop_factors_are_spanning(g in graph_with_loops()) {
        if let Some(m) = perfect_matching_with_loops(&g) {
            prop_assert!(m.is_perfect_on(g.vertex_count()));
            for &(u, v) in m.pairs() {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn rees_matchings_validate(rows in 1usize..4, cols in 1usize..4, bits in any::<u16>()) {
        let structure: Vec<Vec<u8>> =
            (0..cols).map(|j| (0..rows).map(|i| ((bits >> (j * rows + i)) & 1) as u8).collect()).collect();
        let spec = ReesMatrixSpec::new(rows, cols, structure, true).unwrap();
        prop_assume!(spec.is_regular());
        let s = rees_matrix(&spec).unwrap();
        match find_permutation_matching(&s).unwrap() {
            MatchOutcome::Matching(m) => {
                let f: Vec<_> = m.map().iter().map(|&b| Some(b)).collect();
                prop_assert!(validate_matching(&s, &f).ok);
            }
            MatchOutcome::Obstruction(o) => prop_assert!(o.is_genuine(&s)),
        }
    }

    #[test]
    fn green_classes_follow_kernel_and_image(a in 0usize..256, b in 0usize..256) {
        let t = full_transformation_monoid(4).unwrap();
        let set = t.transformations().unwrap();
        let g = t.greens();
        let (x, y) = (set.get(a), set.get(b));
        prop_assert_eq!(g.l_of[a] == g.l_of[b], x.image_set() == y.image_set());
        prop_assert_eq!(g.r_of[a] == g.r_of[b], x.kernel() == y.kernel());
        prop_assert_eq!(g.d_of[a] == g.d_of[b], x.rank() == y.rank());
    }
}

#[test]
fn catalog_inverse_sets_are_symmetric() {
    for name in ["example-1.3", "prop-1.5-T", "remarks-2.5", "brandt-B2", "symmetric-S3"] {
        let s = catalog(name).unwrap();
        for a in 0..s.order() {
            for &b in s.inverses_of(a) {
                assert!(s.inverses_of(b).contains(&a), "{name}");
            }
        }
    }
}
