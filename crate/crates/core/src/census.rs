//! Enumeration of multigraphs up to isomorphism.
//!
//! A graph is encoded by the multiplicities of the slots `(i, j)`, `i <= j`,
//! in row-major order. The canonical code is the lexicographically smallest
//! encoding among relabellings whose degree sequence is non-increasing; every
//! class has such relabellings, so the code is a class invariant.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{capacity, Result};
use crate::graph::{MultiGraph, Vertex};

pub const CENSUS_MAX_VERTICES: usize = 6;
pub const CENSUS_MAX_EDGES: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Loops allowed per vertex.
    pub loop_cap: usize,
    /// Parallel edges allowed per vertex pair.
    pub parallel_cap: usize,
    pub connected: bool,
}

impl CensusOptions {
    pub fn multigraphs(cap: usize) -> Self {
        CensusOptions { loop_cap: cap, parallel_cap: cap, connected: false }
    }
    pub fn loopless(parallel_cap: usize) -> Self {
        CensusOptions { loop_cap: 0, parallel_cap, connected: false }
    }
    pub fn simple() -> Self {
        CensusOptions { loop_cap: 0, parallel_cap: 1, connected: false }
    }
    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }
}

fn slots(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut s = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            s.push((i, j));
        }
    }
    s
}

fn permutations(n: usize) -> Vec<Vec<Vertex>> {
    fn rec(cur: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

struct Canon {
    n: usize,
    slots: Vec<(Vertex, Vertex)>,
    perms: Vec<Vec<Vertex>>,
}

impl Canon {
    fn new(n: usize) -> Self {
        Canon { n, slots: slots(n), perms: permutations(n) }
    }

    fn code(&self, mult: &[Vec<u8>]) -> Vec<u8> {
        let n = self.n;
        let mut deg = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                deg[i] += mult[i][j] as usize * if i == j { 2 } else { 1 };
            }
        }
        let mut best: Option<Vec<u8>> = None;
        let mut cur = vec![0u8; self.slots.len()];
        'perm: for q in &self.perms {
            for w in q.windows(2) {
                if deg[w[0]] < deg[w[1]] {
                    continue 'perm;
                }
            }
            let mut less = best.is_none();
            for (k, &(a, b)) in self.slots.iter().enumerate() {
                let x = mult[q[a]][q[b]];
                cur[k] = x;
                if !less {
                    let y = best.as_ref().unwrap()[k];
                    if x > y {
                        continue 'perm;
                    }
                    if x < y {
                        less = true;
                    }
                }
            }
            if less {
                best = Some(cur.clone());
            }
        }
        best.unwrap_or_default()
    }

    fn graph(&self, code: &[u8]) -> MultiGraph {
        let mut g = MultiGraph::new(self.n);
        for (k, &(a, b)) in self.slots.iter().enumerate() {
            for _ in 0..code[k] {
                g.add_edge(a, b).expect("slot vertices in range");
            }
        }
        g
    }
}

fn multiplicity_matrix(g: &MultiGraph) -> Vec<Vec<u8>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u8; n]; n];
    for e in g.edges() {
        m[e.u][e.v] += 1;
        if e.u != e.v {
            m[e.v][e.u] += 1;
        }
    }
    m
}

/// Canonical slot code of `g`.
pub fn canonical_code(g: &MultiGraph) -> Vec<u8> {
    Canon::new(g.vertex_count()).code(&multiplicity_matrix(g))
}

/// Canonical form as text: vertex count, then the slot code in base 36.
pub fn canonical_string(g: &MultiGraph) -> String {
    let mut s = alloc::format!("{}/", g.vertex_count());
    for x in canonical_code(g) {
        s.push(char::from_digit(x as u32 % 36, 36).unwrap_or('?'));
    }
    s
}

/// Relabelled copy of `g` whose slot code is the canonical one.
pub fn canonical_graph(g: &MultiGraph) -> MultiGraph {
    Canon::new(g.vertex_count()).graph(&canonical_code(g))
}

pub fn are_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_code(g) == canonical_code(h)
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices with at most `max_edges` edges, sorted by edge count and code.
pub fn census(n: usize, max_edges: usize, opts: CensusOptions) -> Result<Vec<MultiGraph>> {
    capacity("census vertex count", CENSUS_MAX_VERTICES, n)?;
    capacity("census edge count", CENSUS_MAX_EDGES, max_edges)?;
    let canon = Canon::new(n);
    let mut mult = vec![vec![0u8; n]; n];
    let mut found: BTreeSet<(usize, Vec<u8>)> = BTreeSet::new();
    let mut deg = vec![0usize; n];
    fill(&canon, 0, max_edges, 0, &opts, &mut mult, &mut deg, &mut found);
    Ok(found.into_iter().map(|(_, code)| canon.graph(&code)).collect())
}

#[allow(clippy::too_many_arguments)]
fn fill(
    canon: &Canon,
    slot: usize,
    budget: usize,
    used: usize,
    opts: &CensusOptions,
    mult: &mut Vec<Vec<u8>>,
    deg: &mut Vec<usize>,
    found: &mut BTreeSet<(usize, Vec<u8>)>,
) {
    if slot == canon.slots.len() {
        if deg.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        if opts.connected && !connected(mult) {
            return;
        }
        found.insert((used, canon.code(mult)));
        return;
    }
    let (a, b) = canon.slots[slot];
    let cap = if a == b { opts.loop_cap } else { opts.parallel_cap };
    for k in 0..=cap.min(budget) {
        mult[a][b] = k as u8;
        mult[b][a] = k as u8;
        let w = if a == b { 2 * k } else { k };
        deg[a] += w;
        if a != b {
            deg[b] += w;
        }
        fill(canon, slot + 1, budget - k, used + k, opts, mult, deg, found);
        deg[a] -= w;
        if a != b {
            deg[b] -= w;
        }
    }
    mult[a][b] = 0;
    mult[b][a] = 0;
}

fn connected(mult: &[Vec<u8>]) -> bool {
    let n = mult.len();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if !seen[y] && mult[x][y] > 0 {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Union of [`census`] over `1..=max_vertices` vertices.
pub fn census_upto(max_vertices: usize, max_edges: usize, opts: CensusOptions) -> Result<Vec<MultiGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        out.extend(census(n, max_edges, opts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(census(1, 2, CensusOptions::multigraphs(2)).unwrap().len(), 3);
        assert_eq!(census(3, 3, CensusOptions::simple().connected()).unwrap().len(), 2);
        assert_eq!(census(2, 2, CensusOptions::loopless(2)).unwrap().len(), 3);
    }

    #[test]
    fn simple_graph_counts_on_four_vertices() {
        // 11 simple graphs on 4 vertices, 6 of them connected
        assert_eq!(census(4, 6, CensusOptions::simple()).unwrap().len(), 11);
        assert_eq!(census(4, 6, CensusOptions::simple().connected()).unwrap().len(), 6);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 2), (2, 3), (0, 1)]).unwrap();
        let h = g.relabel(&[3, 1, 0, 2]);
        assert!(are_isomorphic(&g, &h));
        assert_eq!(canonical_string(&g), canonical_string(&h));
        let k = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (3, 3), (2, 3), (0, 1)]).unwrap();
        assert!(!are_isomorphic(&g, &k));
    }

    #[test]
    fn ceiling_is_enforced() {
        assert!(census(7, 3, CensusOptions::simple()).is_err());
    }
}
