//! Multigraphs with stable edge ids, vertex sets, and edge-cuts.
//!
//! Vertices are dense indices `0..n`. Loops count twice toward degree and
//! never cross a cut.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{capacity, Error, Result};

pub type EdgeId = u32;
pub type Vertex = usize;

/// Largest vertex count representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 64;
/// Ceiling for operations that walk every bipartition of `V(G)`.
pub const CUT_ENUMERATION_CEILING: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }
    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }
    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }
    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }
    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }
    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }
    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }
    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
    /// Lexicographic comparison of the sorted vertex lists.
    pub fn lex_cmp(self, o: Self) -> core::cmp::Ordering {
        self.iter().cmp(o.iter())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
    pub fn ends(&self) -> VertexSet {
        VertexSet::singleton(self.u).union(VertexSet::singleton(self.v))
    }
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        MultiGraph { n, edges: Vec::new() }
    }

    /// Builds a graph whose edges get ids `0..pairs.len()` in order.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).iter().next() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    fn next_id(&self) -> EdgeId {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        let id = self.next_id();
        self.add_edge_with_id(id, u, v)?;
        Ok(id)
    }

    pub fn add_edge_with_id(&mut self, id: EdgeId, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.edges.iter().any(|e| e.id == id) {
            return Err(Error::DuplicateEdgeId(id));
        }
        self.edges.push(Edge { id, u, v });
        Ok(())
    }

    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }
    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
    pub fn loops_at(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.u == v && e.v == v).count()
    }
    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .count()
    }

    /// Number of edges with every end in `s` (loops included).
    pub fn edges_within(&self, s: VertexSet) -> usize {
        self.edges.iter().filter(|e| e.ends().is_subset(s)).count()
    }

    /// Number of edges with at least one end in `s`.
    pub fn incident_count(&self, s: VertexSet) -> usize {
        self.edges.iter().filter(|e| !e.ends().is_disjoint(s)).count()
    }

    /// Bitmask over edge positions of edges with an end in `s`.
    pub fn incident_mask(&self, s: VertexSet) -> u64 {
        let mut m = 0u64;
        for (i, e) in self.edges.iter().enumerate() {
            if !e.ends().is_disjoint(s) {
                m |= 1 << i;
            }
        }
        m
    }

    /// Order of `[a, V - a]`.
    pub fn cut_order(&self, a: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|e| a.contains(e.u) != a.contains(e.v))
            .count()
    }

    /// Subgraph induced on `s`, relabelled in increasing vertex order.
    /// Edge ids are kept. Returns the graph and the old vertex of each new one.
    pub fn induced(&self, s: VertexSet) -> (MultiGraph, Vec<Vertex>) {
        let old: Vec<Vertex> = s.intersection(self.vertices()).to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.ends().is_subset(s))
            .map(|e| Edge { id: e.id, u: new_of[e.u], v: new_of[e.v] })
            .collect();
        (MultiGraph { n: old.len(), edges }, old)
    }

    /// Copy with the listed edges deleted. Unknown ids are an error.
    pub fn without_edges(&self, ids: &[EdgeId]) -> Result<MultiGraph> {
        for &id in ids {
            if self.edge(id).is_none() {
                return Err(Error::UnknownEdge(id));
            }
        }
        let edges = self.edges.iter().filter(|e| !ids.contains(&e.id)).copied().collect();
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { id: e.id, u: perm[e.u], v: perm[e.v] })
            .collect();
        MultiGraph { n: self.n, edges }
    }

    /// Same vertex count and the same id-to-endpoints map.
    pub fn same_edges(&self, other: &MultiGraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        self.edges.iter().all(|e| {
            other.edge(e.id).is_some_and(|f| {
                (f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u)
            })
        })
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(VertexSet::singleton(s), |_| true);
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    fn reach(&self, start: VertexSet, keep: impl Fn(&Edge) -> bool) -> VertexSet {
        let mut seen = start;
        loop {
            let mut grown = seen;
            for e in self.edges.iter().filter(|e| keep(e)) {
                if seen.contains(e.u) || seen.contains(e.v) {
                    grown = grown.union(e.ends());
                }
            }
            if grown == seen {
                return seen;
            }
            seen = grown;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub a: VertexSet,
    pub b: VertexSet,
    pub crossing: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn order(&self) -> usize {
        self.crossing.len()
    }
    pub fn reversed(&self) -> EdgeCut {
        EdgeCut { a: self.b, b: self.a, crossing: self.crossing.clone() }
    }
}

/// Cut `[a, V - a]` without validation beyond range.
pub fn cut_from_side(g: &MultiGraph, a: VertexSet) -> EdgeCut {
    let b = a.complement(g.vertex_count());
    let crossing = g
        .edges()
        .iter()
        .filter(|e| a.contains(e.u) != a.contains(e.v))
        .map(|e| e.id)
        .collect();
    EdgeCut { a, b, crossing }
}

/// Validates that `(a, b)` partitions `V(G)` and returns the cut.
pub fn edge_cut_order(g: &MultiGraph, a: VertexSet, b: VertexSet) -> Result<EdgeCut> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) || a.union(b) != g.vertices() {
        return Err(Error::NotAPartition);
    }
    Ok(cut_from_side(g, a))
}

/// Every cut of order at most `max_order`, with `A` running through the
/// binary counter `0..2^n`. Both `[∅,V]` and `[V,∅]` are included.
pub fn enumerate_edge_cuts(g: &MultiGraph, max_order: usize) -> Result<Vec<EdgeCut>> {
    capacity("vertex count for cut enumeration", CUT_ENUMERATION_CEILING, g.vertex_count())?;
    Ok(cut_sides(g, max_order).into_iter().map(|a| cut_from_side(g, a)).collect())
}

/// A-sides of cuts of order at most `max_order`, in binary counter order.
pub(crate) fn cut_sides(g: &MultiGraph, max_order: usize) -> Vec<VertexSet> {
    (0..1u64 << g.vertex_count())
        .map(VertexSet)
        .filter(|&a| g.cut_order(a) <= max_order)
        .collect()
}

fn check_ids(g: &MultiGraph, ids: &[EdgeId]) -> Result<Vec<Edge>> {
    ids.iter()
        .map(|&id| g.edge(id).copied().ok_or(Error::UnknownEdge(id)))
        .collect()
}

/// Minimum-order cut with every `y` edge incident with `A` and every `z`
/// edge incident with `B`, if one of order below `bound` exists. Ties go to
/// the first cut in binary counter order.
pub fn min_cut_between_edge_sets(
    g: &MultiGraph,
    y: &[EdgeId],
    z: &[EdgeId],
    bound: usize,
) -> Result<Option<EdgeCut>> {
    capacity("vertex count for cut enumeration", CUT_ENUMERATION_CEILING, g.vertex_count())?;
    let ys = check_ids(g, y)?;
    let zs = check_ids(g, z)?;
    if ys.iter().any(|e| e.is_loop() && z.contains(&e.id)) {
        return Err(Error::Infeasible("a loop lies in both edge sets"));
    }
    let full = g.vertices();
    let mut best: Option<(usize, VertexSet)> = None;
    for a in (0..1u64 << g.vertex_count()).map(VertexSet) {
        let b = full.difference(a);
        if ys.iter().all(|e| !e.ends().is_disjoint(a)) && zs.iter().all(|e| !e.ends().is_disjoint(b)) {
            let k = g.cut_order(a);
            if k < bound && best.is_none_or(|(bk, _)| k < bk) {
                best = Some((k, a));
            }
        }
    }
    Ok(best.map(|(_, a)| cut_from_side(g, a)))
}

/// Maximum number of pairwise edge-disjoint `u`-`v` paths.
pub fn edge_disjoint_path_count(g: &MultiGraph, u: Vertex, v: Vertex) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints);
    }
    let edges: Vec<Edge> = g.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    // flow[i] is +1 when edge i carries flow from e.u to e.v, -1 for the reverse
    let mut flow = vec![0i8; edges.len()];
    let mut total = 0;
    loop {
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
        let mut visited = VertexSet::singleton(u);
        let mut queue = alloc::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for (i, e) in edges.iter().enumerate() {
                let (y, dir) = if e.u == x && flow[i] < 1 {
                    (e.v, 1)
                } else if e.v == x && flow[i] > -1 {
                    (e.u, -1)
                } else {
                    continue;
                };
                if !visited.contains(y) {
                    visited.insert(y);
                    pred[y] = Some((i, dir as usize));
                    queue.push_back(y);
                }
            }
        }
        if !visited.contains(v) {
            return Ok(total);
        }
        let mut x = v;
        while x != u {
            let (i, dir) = pred[x].expect("path to source");
            if dir == 1 {
                flow[i] += 1;
                x = edges[i].u;
            } else {
                flow[i] -= 1;
                x = edges[i].v;
            }
        }
        total += 1;
    }
}

/// Bridges (in edge order) and the vertex sets of the maximal
/// 2-edge-connected subgraphs, which are the components after deleting the
/// bridges.
pub fn bridges_and_2ec_components(g: &MultiGraph) -> (Vec<EdgeId>, Vec<VertexSet>) {
    let bridges: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| {
            !e.is_loop()
                && !g
                    .reach(VertexSet::singleton(e.u), |f| f.id != e.id)
                    .contains(e.v)
        })
        .map(|e| e.id)
        .collect();
    let rest = g.without_edges(&bridges).expect("bridge ids come from g");
    (bridges, rest.components())
}
