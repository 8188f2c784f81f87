use proptest::prelude::*;

use slitsew::bijections::{cut_and_close, cut_and_close_surgical, slit_and_sew, slit_and_sew_surgical};
use slitsew::enumeration::{enumerate_balanced_trees, enumerate_bipartite_maps, vertex_marked_pairs};
use slitsew::io::{parse_map, parse_tree};
use slitsew::schaeffer::{closure, opening, tau_dual_check};
use slitsew::{DegreeDistribution, PlanarMap};

fn distribution(max_edges: usize) -> impl Strategy<Value = DegreeDistribution> {
    (1..=max_edges).prop_flat_map(|n| proptest::sample::select(DegreeDistribution::with_edges(n)))
}

fn bipartite_map() -> impl Strategy<Value = PlanarMap> {
    distribution(5).prop_flat_map(|d| proptest::sample::select(enumerate_bipartite_maps(&d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn map_text_roundtrip(m in bipartite_map()) {
        prop_assert_eq!(parse_map(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn undual_inverts_dual(m in bipartite_map()) {
        prop_assert_eq!(m.dual().undual(), m.clone());
        prop_assert_eq!(m.dual().dual().canonical().0, m.reverse_root().canonical().0);
    }

    #[test]
    fn opening_inverts_closure(m in bipartite_map()) {
        let e = m.dual();
        let (tree, _) = opening(&e).unwrap();
        prop_assert!(tree.is_balanced());
        prop_assert_eq!(parse_tree(&tree.to_string()).unwrap(), tree.clone());
        prop_assert_eq!(closure(&tree).unwrap().0.canonical().0, e.canonical().0);
    }

    #[test]
    fn tau_of_the_dual_is_the_complement(m in bipartite_map()) {
        prop_assert!(tau_dual_check(&m).unwrap());
    }

    #[test]
    fn closure_of_random_balanced_tree(
        t in distribution(5).prop_flat_map(|d| proptest::sample::select(enumerate_balanced_trees(&d)))
    ) {
        let (m, _) = closure(&t).unwrap();
        prop_assert_eq!(opening(&m).unwrap().0, t);
    }

    #[test]
    fn slit_sew_routes_agree_and_invert(
        p in distribution(4)
            .prop_filter("has pairs", |d| !vertex_marked_pairs(d).is_empty())
            .prop_flat_map(|d| proptest::sample::select(vertex_marked_pairs(&d)))
    ) {
        let (m, _) = slit_and_sew_surgical(&p).unwrap();
        prop_assert_eq!(&m, &slit_and_sew(&p).unwrap());
        prop_assert_eq!(&cut_and_close_surgical(&m).unwrap(), &p);
        prop_assert_eq!(cut_and_close(&m).unwrap(), p);
    }
}
