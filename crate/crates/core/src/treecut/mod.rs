//! Tree-cut decompositions: a tree whose nodes carry pairwise disjoint bags
//! covering `V(G)`.
//!
//! Nodes are indices `0..p`; tree edges are indices into
//! [`TreeCutDecomposition::tree_edges`]. A "subtree" argument is a list of
//! nodes inducing a connected subtree.

mod search;
mod surgery;

pub use search::{
    decomposition_by_index, decomposition_space_size, min_tree_cut_width, optimize, tree_cut_torso_width,
    NodeContext, WIDTH_SEARCH_CEILING,
};
pub use surgery::{prune_empty_nodes, split_along_cut};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{cut_from_side, Edge, EdgeCut, EdgeId, MultiGraph, Vertex, VertexSet, MAX_VERTICES};

pub type NodeId = usize;
pub type TreeEdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCutDecomposition {
    graph: MultiGraph,
    bags: Vec<VertexSet>,
    tree_edges: Vec<(NodeId, NodeId)>,
    adj: Vec<Vec<(NodeId, TreeEdgeId)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    NoNodes,
    BagOutOfRange { node: NodeId, vertex: Vertex },
    VertexInTwoBags { vertex: Vertex, nodes: (NodeId, NodeId) },
    VertexUncovered(Vertex),
    BadTreeEdge(TreeEdgeId),
    NotATree,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub problems: Vec<Problem>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

impl TreeCutDecomposition {
    /// Assembles a decomposition without checking it; see [`Self::validate`].
    pub fn from_parts(graph: MultiGraph, bags: Vec<VertexSet>, tree_edges: Vec<(NodeId, NodeId)>) -> Self {
        let mut adj = vec![Vec::new(); bags.len()];
        for (i, &(a, b)) in tree_edges.iter().enumerate() {
            if a < bags.len() && b < bags.len() && a != b {
                adj[a].push((b, i));
                adj[b].push((a, i));
            }
        }
        TreeCutDecomposition { graph, bags, tree_edges, adj }
    }

    pub fn new(graph: MultiGraph, bags: Vec<VertexSet>, tree_edges: Vec<(NodeId, NodeId)>) -> Result<Self> {
        let d = Self::from_parts(graph, bags, tree_edges);
        let report = d.validate();
        match report.problems.first() {
            None => Ok(d),
            Some(p) => Err(Error::InvalidDecomposition(format!("{p:?}"))),
        }
    }

    /// One node holding every vertex.
    pub fn trivial(graph: MultiGraph) -> Self {
        let all = graph.vertices();
        Self::from_parts(graph, vec![all], Vec::new())
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }
    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }
    pub fn bag(&self, t: NodeId) -> VertexSet {
        self.bags[t]
    }
    pub fn node_count(&self) -> usize {
        self.bags.len()
    }
    pub fn tree_edges(&self) -> &[(NodeId, NodeId)] {
        &self.tree_edges
    }
    pub fn neighbors(&self, t: NodeId) -> &[(NodeId, TreeEdgeId)] {
        &self.adj[t]
    }
    pub fn is_leaf(&self, t: NodeId) -> bool {
        self.adj[t].len() <= 1
    }
    /// Node whose bag holds `v`.
    pub fn node_of(&self, v: Vertex) -> Option<NodeId> {
        self.bags.iter().position(|b| b.contains(v))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut problems = Vec::new();
        let p = self.bags.len();
        if p == 0 {
            problems.push(Problem::NoNodes);
            return ValidationReport { problems };
        }
        let all = self.graph.vertices();
        let mut owner: Vec<Option<NodeId>> = vec![None; MAX_VERTICES];
        for (t, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                if !all.contains(v) {
                    problems.push(Problem::BagOutOfRange { node: t, vertex: v });
                } else if let Some(s) = owner[v] {
                    problems.push(Problem::VertexInTwoBags { vertex: v, nodes: (s, t) });
                } else {
                    owner[v] = Some(t);
                }
            }
        }
        for v in all.iter() {
            if owner[v].is_none() {
                problems.push(Problem::VertexUncovered(v));
            }
        }
        let mut bad = false;
        for (i, &(a, b)) in self.tree_edges.iter().enumerate() {
            if a >= p || b >= p || a == b {
                problems.push(Problem::BadTreeEdge(i));
                bad = true;
            }
        }
        if !bad && (self.tree_edges.len() + 1 != p || self.reach(0, &[], None).len() != p) {
            problems.push(Problem::NotATree);
        }
        ValidationReport { problems }
    }

    /// Nodes reachable from `start` without entering `blocked` or crossing
    /// tree edge `skip`.
    fn reach(&self, start: NodeId, blocked: &[bool], skip: Option<TreeEdgeId>) -> Vec<NodeId> {
        let mut seen = vec![false; self.bags.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            out.push(x);
            for &(y, e) in &self.adj[x] {
                if Some(e) == skip || seen[y] || blocked.get(y).copied().unwrap_or(false) {
                    continue;
                }
                seen[y] = true;
                stack.push(y);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn vertices_of(&self, nodes: &[NodeId]) -> VertexSet {
        nodes.iter().fold(VertexSet::EMPTY, |s, &t| s.union(self.bags[t]))
    }

    fn check_tree_edge(&self, e: TreeEdgeId) -> Result<(NodeId, NodeId)> {
        self.tree_edges
            .get(e)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("no tree edge {e}")))
    }

    pub(crate) fn check_subtree(&self, nodes: &[NodeId]) -> Result<Vec<bool>> {
        let p = self.bags.len();
        let mut member = vec![false; p];
        for &t in nodes {
            if t >= p {
                return Err(Error::InvalidArgument(format!("no node {t}")));
            }
            member[t] = true;
        }
        let Some(&first) = nodes.first() else {
            return Err(Error::InvalidArgument("empty subtree".into()));
        };
        let outside: Vec<bool> = member.iter().map(|m| !m).collect();
        if self.reach(first, &outside, None).len() != member.iter().filter(|&&m| m).count() {
            return Err(Error::InvalidArgument("nodes do not induce a connected subtree".into()));
        }
        Ok(member)
    }

    /// Nodes of the component of `T - e` that contains `t`.
    pub fn side_nodes(&self, e: TreeEdgeId, t: NodeId) -> Vec<NodeId> {
        self.reach(t, &[], Some(e))
    }

    /// The two vertex sets separated by tree edge `e`: (side of first end,
    /// side of second end).
    pub fn edge_sides(&self, e: TreeEdgeId) -> (VertexSet, VertexSet) {
        let (a, _) = self.tree_edges[e];
        let sa = self.vertices_of(&self.side_nodes(e, a));
        (sa, self.graph.vertices().difference(sa))
    }

    pub fn adhesion_order(&self, e: TreeEdgeId) -> usize {
        self.graph.cut_order(self.edge_sides(e).0)
    }

    pub fn adhesion_set(&self, e: TreeEdgeId) -> Result<Vec<EdgeId>> {
        self.check_tree_edge(e)?;
        Ok(cut_from_side(&self.graph, self.edge_sides(e).0).crossing)
    }

    /// Largest adhesion over all tree edges (0 for a one-node tree).
    pub fn adhesion(&self) -> usize {
        (0..self.tree_edges.len()).map(|e| self.adhesion_order(e)).max().unwrap_or(0)
    }

    /// `[A, B]` where `B` is the union of bags on the side of `e` holding the
    /// subtree `nodes`. `e` may have at most one end in `nodes`.
    pub fn side_of(&self, e: TreeEdgeId, nodes: &[NodeId]) -> Result<EdgeCut> {
        let (x, y) = self.check_tree_edge(e)?;
        let member = self.check_subtree(nodes)?;
        if member[x] && member[y] {
            return Err(Error::InvalidArgument(format!("tree edge {e} lies inside the subtree")));
        }
        let b = self.vertices_of(&self.side_nodes(e, nodes[0]));
        let a = self.graph.vertices().difference(b);
        Ok(cut_from_side(&self.graph, a))
    }

    /// Components of `T - nodes`, each with the tree edge joining it to the
    /// subtree, ordered by that edge.
    pub fn components_without(&self, nodes: &[NodeId]) -> Result<Vec<(TreeEdgeId, Vec<NodeId>)>> {
        let member = self.check_subtree(nodes)?;
        Ok(self.components_without_unchecked(&member))
    }

    fn components_without_unchecked(&self, member: &[bool]) -> Vec<(TreeEdgeId, Vec<NodeId>)> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.tree_edges.iter().enumerate() {
            let root = match (member[a], member[b]) {
                (true, false) => b,
                (false, true) => a,
                _ => continue,
            };
            out.push((e, self.reach(root, member, None)));
        }
        out
    }

    /// Bitmask over edge positions of the edges that survive in the torso
    /// at `nodes`: those not having every end inside one component of
    /// `T - nodes`.
    pub fn torso_edge_mask(&self, nodes: &[NodeId]) -> Result<u64> {
        if self.graph.edge_count() > 64 {
            return Err(Error::Capacity { what: "edge count for edge masks", limit: 64, got: self.graph.edge_count() });
        }
        let member = self.check_subtree(nodes)?;
        let comps: Vec<VertexSet> = self
            .components_without_unchecked(&member)
            .iter()
            .map(|(_, c)| self.vertices_of(c))
            .collect();
        let mut mask = 0u64;
        for (i, e) in self.graph.edges().iter().enumerate() {
            let ends = e.ends();
            if !comps.iter().any(|&c| ends.is_subset(c)) {
                mask |= 1 << i;
            }
        }
        Ok(mask)
    }

    pub fn torso_edge_count(&self, nodes: &[NodeId]) -> Result<usize> {
        Ok(self.torso_edge_mask(nodes)?.count_ones() as usize)
    }

    /// Largest torso edge count over single nodes.
    pub fn torso_width(&self) -> Result<usize> {
        let mut w = 0;
        for t in 0..self.node_count() {
            w = w.max(self.torso_edge_count(&[t])?);
        }
        Ok(w)
    }

    pub fn torso_at(&self, nodes: &[NodeId]) -> Result<Torso> {
        let member = self.check_subtree(nodes)?;
        let comps = self.components_without_unchecked(&member);
        let bag = self.vertices_of(nodes);
        let size = bag.len() + comps.len();
        if size > MAX_VERTICES {
            return Err(Error::Capacity { what: "torso vertex count", limit: MAX_VERTICES, got: size });
        }
        let mut origin: Vec<TorsoVertex> = bag.iter().map(TorsoVertex::Bag).collect();
        let mut image = vec![usize::MAX; self.graph.vertex_count()];
        for (i, v) in bag.iter().enumerate() {
            image[v] = i;
        }
        for (e, comp) in comps {
            let idx = origin.len();
            for v in self.vertices_of(&comp).iter() {
                image[v] = idx;
            }
            origin.push(TorsoVertex::Peripheral { tree_edge: e, nodes: comp });
        }
        let mut graph = MultiGraph::new(origin.len());
        for e in self.graph.edges() {
            let (u, v) = (image[e.u], image[e.v]);
            let peripheral_loop = u == v && matches!(origin[u], TorsoVertex::Peripheral { .. });
            if !peripheral_loop {
                graph.add_edge_with_id(e.id, u, v).expect("torso ids are distinct");
            }
        }
        Ok(Torso { graph, origin, nodes: nodes.to_vec() })
    }

    /// Largest of the adhesion and the 3-center sizes of the node torsos.
    pub fn tree_cut_width(&self) -> Result<usize> {
        let mut w = self.adhesion();
        for t in 0..self.node_count() {
            w = w.max(self.torso_at(&[t])?.three_center().graph.vertex_count());
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsoVertex {
    Bag(Vertex),
    /// Contraction of the component `nodes` of `T - t`, attached by `tree_edge`.
    Peripheral { tree_edge: TreeEdgeId, nodes: Vec<NodeId> },
}

/// Torso at a subtree: bag vertices first (increasing), then one peripheral
/// vertex per component of the remaining forest. Edge ids are those of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torso {
    pub graph: MultiGraph,
    pub origin: Vec<TorsoVertex>,
    pub nodes: Vec<NodeId>,
}

impl Torso {
    pub fn peripheral(&self) -> VertexSet {
        self.origin
            .iter()
            .enumerate()
            .filter(|(_, o)| matches!(o, TorsoVertex::Peripheral { .. }))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn three_center(&self) -> ThreeCenter {
        three_center(&self.graph, self.peripheral())
    }

    fn peripheral_for(&self, e: TreeEdgeId) -> Option<Vertex> {
        self.origin
            .iter()
            .position(|o| matches!(o, TorsoVertex::Peripheral { tree_edge, .. } if *tree_edge == e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCenter {
    pub graph: MultiGraph,
    /// Torso vertex behind each remaining vertex.
    pub kept: Vec<Vertex>,
}

/// Repeatedly deletes a peripheral vertex of degree at most 1 or suppresses
/// one of degree 2, always taking the lowest-index candidate. Suppressing a
/// vertex whose two edge-ends lead to the same vertex leaves a loop there; a
/// vertex whose only edge is a loop is deleted with it.
pub fn three_center(graph: &MultiGraph, peripheral: VertexSet) -> ThreeCenter {
    let n = graph.vertex_count();
    let mut alive = graph.vertices();
    let mut edges: Vec<Option<Edge>> = graph.edges().iter().copied().map(Some).collect();
    let mut next_id = graph.edges().iter().map(|e| e.id + 1).max().unwrap_or(0);
    'outer: loop {
        for w in peripheral.intersection(alive).iter() {
            let at: Vec<usize> = (0..edges.len())
                .filter(|&i| edges[i].is_some_and(|e| e.u == w || e.v == w))
                .collect();
            let degree: usize = at
                .iter()
                .map(|&i| if edges[i].unwrap().is_loop() { 2 } else { 1 })
                .sum();
            if degree > 2 {
                continue;
            }
            alive.remove(w);
            let old: Vec<Edge> = at.iter().map(|&i| edges[i].take().unwrap()).collect();
            if degree == 2 && old.len() == 2 {
                let (x, y) = (old[0].other(w), old[1].other(w));
                edges.push(Some(Edge { id: next_id, u: x, v: y }));
                next_id += 1;
            }
            continue 'outer;
        }
        break;
    }
    let kept: Vec<Vertex> = alive.to_vec();
    let mut image = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        image[v] = i;
    }
    let mut out = MultiGraph::new(kept.len());
    for e in edges.into_iter().flatten() {
        out.add_edge_with_id(e.id, image[e.u], image[e.v]).expect("ids stay distinct");
    }
    ThreeCenter { graph: out, kept }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSum {
    pub graph: MultiGraph,
    /// New index of each vertex of the first graph (`None` for `v1`).
    pub left: Vec<Option<Vertex>>,
    pub right: Vec<Option<Vertex>>,
}

/// `(G1 - v1) + (G2 - v2)` with each matched pair `(e, f)` replaced by one
/// edge joining their far ends; the new edge keeps the id of `e`. The
/// matching must pair the non-loop edges at `v1` with those at `v2`.
pub fn edge_sum(
    g1: &MultiGraph,
    v1: Vertex,
    g2: &MultiGraph,
    v2: Vertex,
    matching: &[(EdgeId, EdgeId)],
) -> Result<EdgeSum> {
    let at = |g: &MultiGraph, v: Vertex| -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = g.edges().iter().filter(|e| !e.is_loop() && (e.u == v || e.v == v)).map(|e| e.id).collect();
        ids.sort_unstable();
        ids
    };
    if v1 >= g1.vertex_count() || v2 >= g2.vertex_count() {
        return Err(Error::InvalidArgument("summed vertex out of range".into()));
    }
    let mut m1: Vec<EdgeId> = matching.iter().map(|p| p.0).collect();
    let mut m2: Vec<EdgeId> = matching.iter().map(|p| p.1).collect();
    m1.sort_unstable();
    m2.sort_unstable();
    if m1 != at(g1, v1) || m2 != at(g2, v2) {
        return Err(Error::InvalidArgument("matching is not a bijection between the edges at the summed vertices".into()));
    }
    let n1 = g1.vertex_count() - 1;
    let size = n1 + g2.vertex_count() - 1;
    if size > MAX_VERTICES {
        return Err(Error::Capacity { what: "edge-sum vertex count", limit: MAX_VERTICES, got: size });
    }
    let left: Vec<Option<Vertex>> =
        (0..g1.vertex_count()).map(|x| (x != v1).then(|| x - (x > v1) as usize)).collect();
    let right: Vec<Option<Vertex>> =
        (0..g2.vertex_count()).map(|x| (x != v2).then(|| n1 + x - (x > v2) as usize)).collect();
    let mut graph = MultiGraph::new(size);
    for e in g1.edges().iter().filter(|e| e.u != v1 && e.v != v1) {
        graph.add_edge_with_id(e.id, left[e.u].unwrap(), left[e.v].unwrap())?;
    }
    for e in g2.edges().iter().filter(|e| e.u != v2 && e.v != v2) {
        graph.add_edge_with_id(e.id, right[e.u].unwrap(), right[e.v].unwrap())?;
    }
    for &(a, b) in matching {
        let ea = g1.edge(a).unwrap();
        let eb = g2.edge(b).unwrap();
        graph.add_edge_with_id(a, left[ea.other(v1)].unwrap(), right[eb.other(v2)].unwrap())?;
    }
    Ok(EdgeSum { graph, left, right })
}

/// Glues the node torsos back together along the tree edges, matching the
/// edges at paired peripheral vertices by id. The result is on the vertex
/// set of `G` with `G`'s edge ids.
pub fn reconstruct_from_torsos(d: &TreeCutDecomposition) -> Result<MultiGraph> {
    let report = d.validate();
    if let Some(p) = report.problems.first() {
        return Err(Error::InvalidDecomposition(format!("{p:?}")));
    }
    let torsos: Vec<Torso> = (0..d.node_count()).map(|t| d.torso_at(&[t])).collect::<Result<_>>()?;
    let mut acc = torsos[0].graph.clone();
    let mut labels: Vec<TorsoVertex> = torsos[0].origin.clone();
    let mut done = vec![false; d.node_count()];
    done[0] = true;
    let mut stack = vec![0];
    while let Some(p) = stack.pop() {
        for &(c, e) in d.neighbors(p) {
            if done[c] {
                continue;
            }
            done[c] = true;
            stack.push(c);
            let v1 = labels
                .iter()
                .position(|o| matches!(o, TorsoVertex::Peripheral { tree_edge, .. } if *tree_edge == e))
                .ok_or_else(|| Error::InvalidDecomposition(format!("no peripheral vertex for tree edge {e}")))?;
            let child = &torsos[c];
            let v2 = child.peripheral_for(e).expect("child torso has the parent peripheral");
            let ids = |g: &MultiGraph, v: Vertex| -> Vec<EdgeId> {
                g.edges().iter().filter(|x| !x.is_loop() && (x.u == v || x.v == v)).map(|x| x.id).collect()
            };
            let matching: Vec<(EdgeId, EdgeId)> = ids(&acc, v1).into_iter().map(|id| (id, id)).collect();
            let sum = edge_sum(&acc, v1, &child.graph, v2, &matching)?;
            let mut next = vec![TorsoVertex::Bag(0); sum.graph.vertex_count()];
            for (x, slot) in sum.left.iter().enumerate() {
                if let Some(i) = slot {
                    next[*i] = labels[x].clone();
                }
            }
            for (x, slot) in sum.right.iter().enumerate() {
                if let Some(i) = slot {
                    next[*i] = child.origin[x].clone();
                }
            }
            acc = sum.graph;
            labels = next;
        }
    }
    let mut image = vec![0; labels.len()];
    for (i, o) in labels.iter().enumerate() {
        match o {
            TorsoVertex::Bag(v) => image[i] = *v,
            TorsoVertex::Peripheral { .. } => {
                return Err(Error::InvalidDecomposition(String::from("unmatched peripheral vertex")))
            }
        }
    }
    let mut edges: Vec<Edge> = acc.edges().to_vec();
    edges.sort_by_key(|e| e.id);
    let mut out = MultiGraph::new(d.graph().vertex_count());
    for e in edges {
        out.add_edge_with_id(e.id, image[e.u], image[e.v])?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> MultiGraph {
        MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn validation_flags_problems() {
        let g = path3();
        let d = TreeCutDecomposition::from_parts(g.clone(), vec![VertexSet(0b011), VertexSet(0b010)], vec![(0, 1)]);
        let r = d.validate();
        assert!(r.problems.contains(&Problem::VertexInTwoBags { vertex: 1, nodes: (0, 1) }));
        assert!(r.problems.contains(&Problem::VertexUncovered(2)));
        let d = TreeCutDecomposition::from_parts(g, vec![VertexSet(1), VertexSet(2), VertexSet(4)], vec![(0, 1)]);
        assert_eq!(d.validate().problems, vec![Problem::NotATree]);
    }

    #[test]
    fn adhesion_and_sides() {
        let d = TreeCutDecomposition::new(path3(), vec![VertexSet(0b001), VertexSet(0b110)], vec![(0, 1)]).unwrap();
        assert_eq!(d.adhesion_set(0).unwrap(), vec![0]);
        let c = d.side_of(0, &[1]).unwrap();
        assert_eq!((c.a, c.b), (VertexSet(0b001), VertexSet(0b110)));
        assert!(d.side_of(0, &[0, 1]).is_err());
    }

    #[test]
    fn torso_contracts_components() {
        // path 0-1-2 with the middle vertex alone at the centre node
        let d = TreeCutDecomposition::new(
            path3(),
            vec![VertexSet(0b010), VertexSet(0b001), VertexSet(0b100)],
            vec![(0, 1), (0, 2)],
        )
        .unwrap();
        let t = d.torso_at(&[0]).unwrap();
        assert_eq!(t.graph.vertex_count(), 3);
        assert_eq!(t.graph.edge_count(), 2);
        assert_eq!(t.peripheral(), VertexSet(0b110));
        // both peripheral vertices have degree 1
        assert_eq!(t.three_center().graph.vertex_count(), 1);
    }

    #[test]
    fn suppression_can_leave_a_loop() {
        // triangle x p q with x in the bag
        let g = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = three_center(&g, VertexSet(0b110));
        assert_eq!(c.kept, vec![0]);
        assert_eq!(c.graph.edge_count(), 1);
        assert!(c.graph.edges()[0].is_loop());
    }

    #[test]
    fn edge_sum_glues() {
        // two paths a-x and x'-b summed over x, x' becomes a single edge
        let g1 = MultiGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let mut g2 = MultiGraph::new(2);
        g2.add_edge_with_id(7, 0, 1).unwrap();
        let s = edge_sum(&g1, 1, &g2, 0, &[(0, 7)]).unwrap();
        assert_eq!(s.graph.vertex_count(), 2);
        assert_eq!(s.graph.edges(), &[Edge { id: 0, u: 0, v: 1 }]);
        assert!(edge_sum(&g1, 1, &g2, 0, &[]).is_err());
    }

    #[test]
    fn reconstruct_star() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 3), (2, 3)]).unwrap();
        let d = TreeCutDecomposition::new(
            g.clone(),
            vec![VertexSet(1), VertexSet(0), VertexSet(0b110), VertexSet(0b1000)],
            vec![(0, 1), (1, 2), (1, 3)],
        )
        .unwrap();
        assert!(reconstruct_from_torsos(&d).unwrap().same_edges(&g));
    }
}
