use proptest::prelude::*;

use tckit_core::census::{are_isomorphic, canonical_code};
use tckit_core::graph::{edge_disjoint_path_count, MultiGraph, VertexSet};
use tckit_core::smoothing::{is_theta_smooth, signature, smooth_refine, SmoothOptions};
use tckit_core::treecut::{
    decomposition_by_index, decomposition_space_size, reconstruct_from_torsos, tree_cut_torso_width, TreeCutDecomposition,
};

fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| MultiGraph::from_pairs(n, &pairs).unwrap())
    })
}

fn with_set(max_n: usize, max_m: usize) -> impl Strategy<Value = (MultiGraph, u64, u64)> {
    graph(max_n, max_m).prop_flat_map(|g| {
        let full = g.vertices().0;
        (Just(g), 0..=full, 0..=full).prop_map(move |(g, a, b)| (g, a & full, b & full))
    })
}

fn with_decomposition(max_n: usize, max_m: usize) -> impl Strategy<Value = TreeCutDecomposition> {
    graph(max_n, max_m).prop_flat_map(|g| {
        let size = decomposition_space_size(g.vertex_count(), 4);
        (Just(g), 0..size).prop_map(|(g, i)| decomposition_by_index(&g, 4, i).unwrap())
    })
}

proptest! {
    #[test]
    fn cut_order_is_symmetric((g, a, _) in with_set(6, 9)) {
        let n = g.vertex_count();
        prop_assert_eq!(g.cut_order(VertexSet(a)), g.cut_order(VertexSet(a).complement(n)));
    }

    #[test]
    fn cut_order_is_submodular((g, a, b) in with_set(6, 9)) {
        let (a, b) = (VertexSet(a), VertexSet(b));
        prop_assert!(g.cut_order(a.intersection(b)) + g.cut_order(a.union(b)) <= g.cut_order(a) + g.cut_order(b));
    }

    #[test]
    fn menger_agrees_with_cut_minimum(g in graph(6, 9), u in 0usize..6, v in 0usize..6) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let min = (0..1u64 << n)
            .map(VertexSet)
            .filter(|a| a.contains(u) && !a.contains(v))
            .map(|a| g.cut_order(a))
            .min()
            .unwrap();
        prop_assert_eq!(edge_disjoint_path_count(&g, u, v).unwrap(), min);
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(6, 8), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn reconstruction_is_identity(d in with_decomposition(5, 8)) {
        prop_assert!(d.validate().is_valid());
        prop_assert!(reconstruct_from_torsos(&d).unwrap().same_edges(d.graph()));
    }

    #[test]
    fn three_centers_within_bag_and_torso(d in with_decomposition(5, 8)) {
        // surviving peripheral vertices keep degree at least 3
        let mut bound = d.adhesion();
        for t in 0..d.node_count() {
            let torso = d.torso_edge_count(&[t]).unwrap();
            bound = bound.max(d.bag(t).len() + 2 * torso / 3);
        }
        prop_assert!(d.tree_cut_width().unwrap() <= bound);
    }

    #[test]
    fn isolated_bag_vertices_defeat_torso_plus_adhesion(n in 2usize..=6) {
        // n vertices, no edges, one bag: 3-center of size n, torso and adhesion 0
        let d = TreeCutDecomposition::trivial(MultiGraph::new(n));
        prop_assert_eq!(d.tree_cut_width().unwrap(), n);
        prop_assert_eq!(d.torso_width().unwrap() + d.adhesion(), 0);
    }

    #[test]
    fn optimum_is_no_worse_than_any_decomposition(d in with_decomposition(5, 7)) {
        let (w, best) = tree_cut_torso_width(d.graph()).unwrap();
        prop_assert_eq!(best.torso_width().unwrap(), w);
        prop_assert!(w <= d.torso_width().unwrap());
    }

    #[test]
    fn smoothing_decreases_signature(d in with_decomposition(5, 7), theta in 1usize..=4) {
        let out = smooth_refine(&d, theta, SmoothOptions::default()).unwrap();
        prop_assert!(out.signatures.windows(2).all(|s| s[1] < s[0]));
        prop_assert_eq!(out.signatures.last().unwrap(), &signature(&out.decomposition, theta).unwrap());
        prop_assert!(is_theta_smooth(&out.decomposition, theta).unwrap().is_none());
        prop_assert!(out.decomposition.validate().is_valid());
        prop_assert!(reconstruct_from_torsos(&out.decomposition).unwrap().same_edges(d.graph()));
    }

    #[test]
    fn pruning_keeps_smoothness(d in with_decomposition(5, 7), theta in 1usize..=3) {
        let out = smooth_refine(&d, theta, SmoothOptions { prune_empty: true }).unwrap();
        prop_assert!(is_theta_smooth(&out.decomposition, theta).unwrap().is_none());
    }
}
