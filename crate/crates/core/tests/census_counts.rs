//! The census against a direct count of labelled graphs: summing
//! `n! / |Aut(G)|` over the census must give the number of labelled
//! multigraphs, which only holds if the census is complete and free of
//! isomorphic duplicates.

use tckit_core::census::{census, CensusOptions};
use tckit_core::graph::MultiGraph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn multiplicities(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for e in g.edges() {
        m[e.u][e.v] += 1;
        if e.u != e.v {
            m[e.v][e.u] += 1;
        }
    }
    m
}

fn automorphisms(g: &MultiGraph) -> usize {
    let m = multiplicities(g);
    let n = g.vertex_count();
    permutations(n)
        .iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| m[i][j] == m[p[i]][p[j]])))
        .count()
}

/// Labelled multigraphs on `n` vertices with at most `max_edges` edges, at
/// most `loop_cap` loops per vertex and `parallel_cap` edges per pair.
fn labelled(n: usize, max_edges: usize, loop_cap: usize, parallel_cap: usize, connected: bool) -> usize {
    let mut slots: Vec<(usize, usize, usize)> = (0..n).map(|v| (v, v, loop_cap)).collect();
    for i in 0..n {
        for j in i + 1..n {
            slots.push((i, j, parallel_cap));
        }
    }
    let mut count = 0;
    let mut chosen = vec![0; slots.len()];
    loop {
        let total: usize = chosen.iter().sum();
        if total <= max_edges {
            let pairs: Vec<(usize, usize)> =
                slots.iter().zip(&chosen).flat_map(|(&(u, v, _), &c)| std::iter::repeat_n((u, v), c)).collect();
            if !connected || MultiGraph::from_pairs(n, &pairs).unwrap().is_connected() {
                count += 1;
            }
        }
        let mut i = 0;
        while i < slots.len() {
            chosen[i] += 1;
            if chosen[i] <= slots[i].2 {
                break;
            }
            chosen[i] = 0;
            i += 1;
        }
        if i == slots.len() {
            return count;
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check(n: usize, max_edges: usize, opts: CensusOptions) {
    let graphs = census(n, max_edges, opts).unwrap();
    assert!(graphs.iter().all(|g| g.vertex_count() == n && g.edge_count() <= max_edges));
    let from_census: usize = graphs.iter().map(|g| factorial(n) / automorphisms(g)).sum();
    let direct = labelled(n, max_edges, opts.loop_cap, opts.parallel_cap, opts.connected);
    assert_eq!(from_census, direct, "n={n} m<={max_edges} {opts:?}");
}

#[test]
fn multigraph_census_counts() {
    for n in 1..=4 {
        for m in 0..=5 {
            check(n, m, CensusOptions::multigraphs(3));
        }
    }
}

#[test]
fn connected_census_counts() {
    for n in 1..=4 {
        check(n, 6, CensusOptions::multigraphs(3).connected());
    }
}

#[test]
fn simple_and_loopless_census_counts() {
    for n in 1..=5 {
        check(n, 9, CensusOptions::simple());
        check(n, 4, CensusOptions::loopless(2));
    }
}
