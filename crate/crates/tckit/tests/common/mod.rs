//! Brute-force oracles, written against the definitions only. None of them
//! calls into the library beyond reading graphs and decompositions.

#![allow(dead_code)]

use tckit_core::graph::MultiGraph;
use tckit_core::treecut::TreeCutDecomposition;

fn ends(g: &MultiGraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Non-loop edges with exactly one end in `a`.
pub fn cut_order(g: &MultiGraph, a: u64) -> usize {
    ends(g).iter().filter(|&&(u, v)| (a >> u & 1) != (a >> v & 1)).count()
}

fn connected_edges(edges: &[(usize, usize)], mask: u32) -> bool {
    let mut parent: Vec<usize> = (0..64).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut touched = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
            touched.push(u);
        }
    }
    let Some(&first) = touched.first() else { return false };
    let root = find(&mut parent, first);
    touched.iter().all(|&x| find(&mut parent, x) == root)
}

// ---------------------------------------------------------------- immersion

/// Path and cycle images available in a fixed `G`.
pub struct ImmersionOracle {
    n: usize,
    // paths[x][y]: edge masks forming an x-y path; cycles[x]: cycles through x
    paths: Vec<Vec<Vec<u32>>>,
    cycles: Vec<Vec<u32>>,
}

impl ImmersionOracle {
    pub fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let ge = ends(g);
        let m = ge.len();
        assert!(m <= 16, "oracle limited to 16 edges");
        let mut paths = vec![vec![Vec::new(); n]; n];
        let mut cycles = vec![Vec::new(); n];
        for mask in 1u32..1 << m {
            let mut deg = vec![0usize; n];
            let mut loops = 0;
            for (i, &(u, v)) in ge.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                    if u == v {
                        loops += 1;
                    }
                }
            }
            if !connected_edges(&ge, mask) {
                continue;
            }
            if loops > 0 {
                if mask.count_ones() == 1 {
                    let x = ge[mask.trailing_zeros() as usize].0;
                    cycles[x].push(mask);
                }
                continue;
            }
            if deg.iter().any(|&d| d > 2) {
                continue;
            }
            let odd: Vec<usize> = (0..n).filter(|&x| deg[x] == 1).collect();
            match odd[..] {
                [x, y] => {
                    paths[x][y].push(mask);
                    paths[y][x].push(mask);
                }
                [] => {
                    for x in (0..n).filter(|&x| deg[x] == 2) {
                        cycles[x].push(mask);
                    }
                }
                _ => {}
            }
        }
        ImmersionOracle { n, paths, cycles }
    }

    /// Whether `h` immerses: an injection of vertices plus pairwise
    /// edge-disjoint images, a path between the images for each non-loop
    /// edge and a cycle through the image for each loop.
    pub fn immerses(&self, h: &MultiGraph) -> bool {
        let he = ends(h);
        let mut map = Vec::new();
        injections(self.n, h.vertex_count(), &mut map, &mut |map| assign(&he, map, &self.paths, &self.cycles, 0, 0))
    }
}

fn injections(n: usize, k: usize, map: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if map.len() == k {
        return f(map);
    }
    for x in 0..n {
        if !map.contains(&x) {
            map.push(x);
            let found = injections(n, k, map, f);
            map.pop();
            if found {
                return true;
            }
        }
    }
    false
}

fn assign(he: &[(usize, usize)], map: &[usize], paths: &[Vec<Vec<u32>>], cycles: &[Vec<u32>], i: usize, used: u32) -> bool {
    let Some(&(u, v)) = he.get(i) else { return true };
    let (x, y) = (map[u], map[v]);
    let options = if x == y { &cycles[x] } else { &paths[x][y] };
    options.iter().any(|&mask| mask & used == 0 && assign(he, map, paths, cycles, i + 1, used | mask))
}

// ------------------------------------------------------------ torso width

/// Labelled trees on `k` nodes as edge lists, by Prüfer decoding.
pub fn labelled_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 1 {
        return vec![Vec::new()];
    }
    if k == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let total = k.pow(k as u32 - 2);
    for mut code in 0..total {
        let mut seq = Vec::new();
        for _ in 0..k - 2 {
            seq.push(code % k);
            code /= k;
        }
        let mut degree = vec![1usize; k];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (0..k).find(|&x| degree[x] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..k).filter(|&x| degree[x] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

/// Component label of every node of the tree minus the `removed` nodes
/// (removed nodes get `usize::MAX`).
fn components_without(k: usize, tree: &[(usize, usize)], removed: &[bool]) -> Vec<usize> {
    let mut label = vec![usize::MAX; k];
    let mut next = 0;
    for s in 0..k {
        if removed[s] || label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = next;
        while let Some(x) = stack.pop() {
            for &(a, b) in tree {
                for (p, q) in [(a, b), (b, a)] {
                    if p == x && !removed[q] && label[q] == usize::MAX {
                        label[q] = next;
                        stack.push(q);
                    }
                }
            }
        }
        next += 1;
    }
    label
}

/// Edges of the torso at the node set `nodes`: every edge except those
/// with both ends mapped into one component of `T - nodes`.
pub fn torso_edges(g: &MultiGraph, k: usize, tree: &[(usize, usize)], node_of: &[usize], nodes: &[usize]) -> u64 {
    let mut removed = vec![false; k];
    for &t in nodes {
        removed[t] = true;
    }
    let label = components_without(k, tree, &removed);
    let mut mask = 0;
    for (i, &(u, v)) in ends(g).iter().enumerate() {
        let (a, b) = (node_of[u], node_of[v]);
        if removed[a] || removed[b] || label[a] != label[b] {
            mask |= 1 << i;
        }
    }
    mask
}

/// Minimum over decompositions on trees of at most `|V| + 1` nodes of the
/// largest node torso.
pub fn torso_width(g: &MultiGraph) -> usize {
    let n = g.vertex_count();
    let ge = ends(g);
    let mut best = usize::MAX;
    for k in 1..=n + 1 {
        // labels[tree][t]: components of T - t
        let labels: Vec<Vec<Vec<usize>>> = labelled_trees(k)
            .iter()
            .map(|tree| {
                (0..k)
                    .map(|t| {
                        let mut removed = vec![false; k];
                        removed[t] = true;
                        components_without(k, tree, &removed)
                    })
                    .collect()
            })
            .collect();
        let mut node_of = vec![0usize; n];
        loop {
            for per_node in &labels {
                let w = (0..k)
                    .map(|t| {
                        let label = &per_node[t];
                        ge.iter()
                            .filter(|&&(u, v)| {
                                let (a, b) = (node_of[u], node_of[v]);
                                a == t || b == t || label[a] != label[b]
                            })
                            .count()
                    })
                    .max()
                    .unwrap();
                best = best.min(w);
            }
            // next assignment, odometer style
            let mut i = 0;
            while i < n {
                node_of[i] += 1;
                if node_of[i] < k {
                    break;
                }
                node_of[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    best
}

// ---------------------------------------------------------------- carving

/// Minimum over cubic trees with the vertices as leaves of the largest cut
/// order across a tree edge. One vertex gives 0.
pub fn carving_width(g: &MultiGraph) -> usize {
    let n = g.vertex_count();
    match n {
        0 | 1 => return 0,
        2 => return cut_order(g, 1),
        _ => {}
    }
    // tree nodes: leaves 0..n are the vertices, internal nodes from n on
    let start = vec![(0, n), (1, n), (2, n)];
    let mut best = usize::MAX;
    grow(g, n, 3, start, n + 1, &mut best);
    best
}

fn grow(g: &MultiGraph, n: usize, next_leaf: usize, tree: Vec<(usize, usize)>, next_inner: usize, best: &mut usize) {
    if next_leaf == n {
        let k = next_inner;
        let w = (0..tree.len())
            .map(|e| {
                let rest: Vec<(usize, usize)> = tree.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &x)| x).collect();
                let label = components_without(k, &rest, &vec![false; k]);
                let side = label[tree[e].0];
                let a = (0..n).filter(|&v| label[v] == side).fold(0u64, |m, v| m | 1 << v);
                cut_order(g, a)
            })
            .max()
            .unwrap();
        *best = (*best).min(w);
        return;
    }
    for e in 0..tree.len() {
        let (x, y) = tree[e];
        let mut t = tree.clone();
        t[e] = (x, next_inner);
        t.push((next_inner, y));
        t.push((next_leaf, next_inner));
        grow(g, n, next_leaf + 1, t, next_inner + 1, best);
    }
}

// ---------------------------------------------------------------- tangles

/// All edge-tangles of order `theta` as sorted lists of A-sides, found by
/// trying every orientation of the cuts of order below `theta`.
pub fn tangles(g: &MultiGraph, theta: usize) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    let ge = ends(g);
    let incident = |b: u64| ge.iter().filter(|&&(u, v)| b >> u & 1 == 1 || b >> v & 1 == 1).count();
    // one representative per unordered cut: the side without vertex 0
    let small: Vec<u64> = (0..1u64 << n).filter(|a| a & 1 == 0).filter(|&a| cut_order(g, a) < theta).collect();
    assert!(small.len() <= 20, "oracle limited to 20 cuts");
    let mut out = Vec::new();
    for choice in 0u32..1 << small.len() {
        let members: Vec<u64> = small.iter().enumerate().map(|(i, &a)| if choice >> i & 1 == 1 { full & !a } else { a }).collect();
        let e3 = members.iter().all(|&a| incident(full & !a) >= theta);
        let e2 = e3
            && members.iter().all(|&x| {
                members.iter().all(|&y| members.iter().all(|&z| full & !x & !y & !z != 0))
            });
        if e2 {
            let mut m = members;
            m.sort_unstable();
            out.push(m);
        }
    }
    out.sort();
    out
}

pub fn max_tangle_order(g: &MultiGraph) -> usize {
    (1..).take_while(|&t| !tangles(g, t).is_empty()).last().unwrap_or(0)
}

// ------------------------------------------------------------- smoothness

fn decomposition_parts(d: &TreeCutDecomposition) -> (usize, Vec<(usize, usize)>, Vec<usize>) {
    let k = d.node_count();
    let tree = d.tree_edges().to_vec();
    let mut node_of = vec![0; d.graph().vertex_count()];
    for (t, b) in d.bags().iter().enumerate() {
        for v in b.iter() {
            node_of[v] = t;
        }
    }
    (k, tree, node_of)
}

/// Direct definition: no node or θ-cell `C` has equal-size torso edge sets
/// `Y`, `Z` of size at most θ and a cut of order below `|Y|` with every
/// edge of `Y` incident with `A` and every edge of `Z` incident with `B`.
pub fn is_theta_smooth(d: &TreeCutDecomposition, theta: usize) -> bool {
    let g = d.graph();
    let n = g.vertex_count();
    let ge = ends(g);
    let (k, tree, node_of) = decomposition_parts(d);
    // adhesion of each tree edge
    let adhesion: Vec<usize> = (0..tree.len())
        .map(|e| {
            let rest: Vec<_> = tree.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &x)| x).collect();
            let label = components_without(k, &rest, &vec![false; k]);
            let side = label[tree[e].0];
            let a = (0..n).filter(|&v| label[node_of[v]] == side).fold(0u64, |m, v| m | 1 << v);
            cut_order(g, a)
        })
        .collect();
    let mut candidates: Vec<Vec<usize>> = (0..k).map(|t| vec![t]).collect();
    let strong: Vec<_> = tree.iter().zip(&adhesion).filter(|(_, &a)| a >= theta).map(|(&x, _)| x).collect();
    let label = components_without(k, &strong, &vec![false; k]);
    for c in 0..k {
        let nodes: Vec<usize> = (0..k).filter(|&t| label[t] == c).collect();
        if !nodes.is_empty() && torso_edges(g, k, &tree, &node_of, &nodes).count_ones() as usize >= theta {
            candidates.push(nodes);
        }
    }
    let cuts: Vec<(u64, u64, usize)> = (0..1u64 << n)
        .map(|a| {
            let (mut ia, mut ib) = (0u64, 0u64);
            for (i, &(u, v)) in ge.iter().enumerate() {
                if a >> u & 1 == 1 || a >> v & 1 == 1 {
                    ia |= 1 << i;
                }
                if a >> u & 1 == 0 || a >> v & 1 == 0 {
                    ib |= 1 << i;
                }
            }
            (ia, ib, cut_order(g, a))
        })
        .collect();
    for c in &candidates {
        let torso = torso_edges(g, k, &tree, &node_of, c);
        let subsets: Vec<u64> = (0..1u64 << ge.len()).filter(|s| s & !torso == 0 && s.count_ones() as usize <= theta).collect();
        for &y in &subsets {
            for &z in subsets.iter().filter(|z| z.count_ones() == y.count_ones()) {
                let s = y.count_ones() as usize;
                if cuts.iter().any(|&(ia, ib, o)| o < s && y & !ia == 0 && z & !ib == 0) {
                    return false;
                }
            }
        }
    }
    true
}
