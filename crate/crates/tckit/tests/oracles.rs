//! The brute-force oracles on hand-checked values, so that agreement with
//! them means something.

mod common;

use tckit_core::graph::{MultiGraph, VertexSet};
use tckit_core::treecut::TreeCutDecomposition;

fn k(n: usize) -> MultiGraph {
    let mut p = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            p.push((i, j));
        }
    }
    MultiGraph::from_pairs(n, &p).unwrap()
}

fn g(n: usize, pairs: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::from_pairs(n, pairs).unwrap()
}

fn bowtie() -> MultiGraph {
    g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
}

#[test]
fn cayley_counts() {
    for (n, count) in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)] {
        assert_eq!(common::labelled_trees(n).len(), count);
    }
}

#[test]
fn widths_of_small_graphs() {
    // triangle: any split leaves a torso with all three edges
    assert_eq!(common::torso_width(&k(3)), 3);
    // K4: two bags of two give 1 + 4
    assert_eq!(common::torso_width(&k(4)), 5);
    assert_eq!(common::torso_width(&g(3, &[(0, 1), (1, 2)])), 2);
    assert_eq!(common::torso_width(&g(1, &[(0, 0); 4])), 4);

    assert_eq!(common::carving_width(&k(3)), 2);
    assert_eq!(common::carving_width(&k(4)), 4);
    // the middle vertex of a path is cut off by a leaf edge
    assert_eq!(common::carving_width(&g(3, &[(0, 1), (1, 2)])), 2);
    assert_eq!(common::carving_width(&g(1, &[(0, 0); 4])), 0);
}

#[test]
fn tangle_orders() {
    assert_eq!(common::max_tangle_order(&k(3)), 2);
    assert_eq!(common::max_tangle_order(&k(4)), 4);
    assert_eq!(common::max_tangle_order(&g(1, &[(0, 0); 3])), 3);
    assert_eq!(common::max_tangle_order(&g(2, &[(0, 1)])), 1);
    // order 1 on a connected graph: only the trivial cut, oriented one way
    assert_eq!(common::tangles(&k(3), 1).len(), 1);
}

#[test]
fn immersion_cases() {
    let loop1 = g(1, &[(0, 0)]);
    assert!(common::ImmersionOracle::new(&k(4)).immerses(&k(3)));
    assert!(!common::ImmersionOracle::new(&k(3)).immerses(&k(4)));
    // a loop needs a cycle
    assert!(!common::ImmersionOracle::new(&g(3, &[(0, 1), (1, 2)])).immerses(&loop1));
    assert!(common::ImmersionOracle::new(&g(2, &[(0, 1), (0, 1)])).immerses(&loop1));
    // a path may pass through the image of another vertex
    let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
    let two_edges_apart = g(4, &[(0, 1), (2, 3)]);
    assert!(common::ImmersionOracle::new(&star).immerses(&two_edges_apart));
    assert!(!common::ImmersionOracle::new(&star).immerses(&g(2, &[(0, 1), (0, 1)])));
}

#[test]
fn smoothness_definition() {
    let one_bag = TreeCutDecomposition::trivial(bowtie());
    assert!(!common::is_theta_smooth(&one_bag, 2));
    assert!(common::is_theta_smooth(&one_bag, 1));
    let split = TreeCutDecomposition::new(bowtie(), vec![VertexSet(0b000111), VertexSet(0b111000)], vec![(0, 1)]).unwrap();
    assert!(common::is_theta_smooth(&split, 2));
}
