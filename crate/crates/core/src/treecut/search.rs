//! Exact min-max search over tree-cut decompositions.
//!
//! A decomposition rooted at some node is described recursively: a node with
//! vertex set `S` below it picks a bag `X ⊆ S` and splits `S - X` into the
//! vertex sets of its child subtrees. A node's torso depends only on `X`,
//! those blocks, and the outside `V - S`, so the best cost of a subtree
//! depends only on `S` and can be memoised.
//!
//! Leaves with empty bags and degree-2 nodes with empty bags are never
//! searched: deleting the former or suppressing the latter leaves every other
//! torso and adhesion unchanged. With those gone a tree has at most `n`
//! non-empty nodes and at most `n - 2` empty ones.

use alloc::vec;
use alloc::vec::Vec;

use super::{three_center, NodeId, TreeCutDecomposition};
use crate::error::{capacity, Result};
use crate::graph::{MultiGraph, VertexSet};

pub const WIDTH_SEARCH_CEILING: usize = 7;

/// A candidate node inside the search.
pub struct NodeContext<'a> {
    pub graph: &'a MultiGraph,
    /// Vertices of the subtree rooted at this node.
    pub subtree: VertexSet,
    pub bag: VertexSet,
    /// Vertex sets of the child subtrees.
    pub blocks: &'a [VertexSet],
}

impl NodeContext<'_> {
    /// Vertices on the parent side, `None` at the root.
    pub fn outside(&self) -> Option<VertexSet> {
        let all = self.graph.vertices();
        (self.subtree != all).then(|| all.difference(self.subtree))
    }

    pub fn torso_edge_count(&self) -> usize {
        let inner: usize = self.blocks.iter().map(|&b| self.graph.edges_within(b)).sum();
        let outer = self.outside().map_or(0, |o| self.graph.edges_within(o));
        self.graph.edge_count() - inner - outer
    }

    /// Torso graph (bag vertices, then blocks, then the outside) and its
    /// peripheral vertices.
    pub fn torso(&self) -> (MultiGraph, VertexSet) {
        let g = self.graph;
        let mut image = vec![usize::MAX; g.vertex_count()];
        let mut next = 0;
        for v in self.bag.iter() {
            image[v] = next;
            next += 1;
        }
        let first_peripheral = next;
        for part in self.blocks.iter().copied().chain(self.outside()) {
            for v in part.iter() {
                image[v] = next;
            }
            next += 1;
        }
        let mut t = MultiGraph::new(next);
        for e in g.edges() {
            let (u, v) = (image[e.u], image[e.v]);
            if u == v && u >= first_peripheral {
                continue;
            }
            t.add_edge_with_id(e.id, u, v).expect("distinct ids");
        }
        let peripheral = VertexSet(VertexSet::full(next).0 & !VertexSet::full(first_peripheral).0);
        (t, peripheral)
    }
}

fn partitions(r: VertexSet) -> Vec<Vec<VertexSet>> {
    let Some(low) = r.iter().next() else {
        return vec![Vec::new()];
    };
    let rest = r.difference(VertexSet::singleton(low));
    let mut out = Vec::new();
    for sub in subsets_desc(rest) {
        let block = sub.union(VertexSet::singleton(low));
        for mut p in partitions(rest.difference(sub)) {
            p.insert(0, block);
            out.push(p);
        }
    }
    out
}

fn subsets_desc(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let mut cur = Some(s.0);
    core::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & s.0) };
        Some(VertexSet(c))
    })
}

type Choice = (usize, VertexSet, Vec<VertexSet>);

struct Search<'a, F, H> {
    graph: &'a MultiGraph,
    node_cost: F,
    edge_cost: H,
    memo: Vec<Option<Choice>>,
}

impl<F, H> Search<'_, F, H>
where
    F: Fn(&NodeContext) -> usize,
    H: Fn(VertexSet) -> usize,
{
    fn solve(&mut self, s: VertexSet) -> usize {
        if let Some((c, _, _)) = &self.memo[s.0 as usize] {
            return *c;
        }
        let mut best: Option<Choice> = None;
        for bag in subsets_desc(s) {
            for blocks in partitions(s.difference(bag)) {
                if bag.is_empty() && blocks.len() == 1 {
                    continue;
                }
                let bound = best.as_ref().map_or(usize::MAX, |b| b.0);
                let ctx = NodeContext { graph: self.graph, subtree: s, bag, blocks: &blocks };
                let mut cost = (self.node_cost)(&ctx);
                for &b in &blocks {
                    if cost >= bound {
                        break;
                    }
                    cost = cost.max((self.edge_cost)(b)).max(self.solve(b));
                }
                if cost < bound {
                    best = Some((cost, bag, blocks));
                }
            }
        }
        let best = best.expect("the single-node choice always exists");
        let c = best.0;
        self.memo[s.0 as usize] = Some(best);
        c
    }

    fn build(&self, s: VertexSet, parent: Option<NodeId>, bags: &mut Vec<VertexSet>, edges: &mut Vec<(NodeId, NodeId)>) {
        let (_, bag, blocks) = self.memo[s.0 as usize].as_ref().expect("solved");
        let me = bags.len();
        bags.push(*bag);
        if let Some(p) = parent {
            edges.push((p, me));
        }
        for &b in blocks {
            self.build(b, Some(me), bags, edges);
        }
    }
}

/// Minimises, over decompositions of `g`, the largest of `node_cost` over
/// nodes and `edge_cost` over tree edges (given the vertex set below the
/// edge). Returns the optimum and a decomposition attaining it.
pub fn optimize<F, H>(g: &MultiGraph, node_cost: F, edge_cost: H) -> Result<(usize, TreeCutDecomposition)>
where
    F: Fn(&NodeContext) -> usize,
    H: Fn(VertexSet) -> usize,
{
    capacity("vertex count for decomposition search", WIDTH_SEARCH_CEILING, g.vertex_count())?;
    let all = g.vertices();
    if all.is_empty() {
        let ctx = NodeContext { graph: g, subtree: all, bag: all, blocks: &[] };
        return Ok((node_cost(&ctx), TreeCutDecomposition::trivial(g.clone())));
    }
    let mut search = Search { graph: g, node_cost, edge_cost, memo: vec![None; 1 << g.vertex_count()] };
    let best = search.solve(all);
    let mut bags = Vec::new();
    let mut edges = Vec::new();
    search.build(all, None, &mut bags, &mut edges);
    Ok((best, TreeCutDecomposition::from_parts(g.clone(), bags, edges)))
}

/// Minimum torso-width over all decompositions, with a witness.
pub fn tree_cut_torso_width(g: &MultiGraph) -> Result<(usize, TreeCutDecomposition)> {
    optimize(g, |c: &NodeContext| c.torso_edge_count(), |_| 0)
}

/// Minimum tree-cut width (adhesion and 3-center sizes), with a witness.
pub fn min_tree_cut_width(g: &MultiGraph) -> Result<(usize, TreeCutDecomposition)> {
    optimize(
        g,
        |ctx: &NodeContext| {
            let (t, p) = ctx.torso();
            three_center(&t, p).graph.vertex_count()
        },
        |b| g.cut_order(b),
    )
}

fn tree_count(p: usize) -> u64 {
    if p <= 2 {
        1
    } else {
        (p as u64).pow(p as u32 - 2)
    }
}

/// Number of (labelled tree, bag assignment) pairs with at most `max_nodes`
/// nodes for `n` vertices.
pub fn decomposition_space_size(n: usize, max_nodes: usize) -> u64 {
    (1..=max_nodes).map(|p| tree_count(p) * (p as u64).pow(n as u32)).sum()
}

fn prufer_edges(p: usize, mut code: u64) -> Vec<(NodeId, NodeId)> {
    if p == 1 {
        return Vec::new();
    }
    if p == 2 {
        return vec![(0, 1)];
    }
    let mut seq = Vec::with_capacity(p - 2);
    for _ in 0..p - 2 {
        seq.push((code % p as u64) as usize);
        code /= p as u64;
    }
    let mut degree = vec![1usize; p];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(p - 1);
    for &x in &seq {
        let leaf = (0..p).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<NodeId> = (0..p).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// The `index`-th decomposition in the enumeration behind
/// [`decomposition_space_size`]: trees by node count, then Prüfer code, then
/// the base-`p` digits of the bag assignment.
pub fn decomposition_by_index(g: &MultiGraph, max_nodes: usize, mut index: u64) -> Option<TreeCutDecomposition> {
    let n = g.vertex_count();
    for p in 1..=max_nodes {
        let per_tree = (p as u64).pow(n as u32);
        let block = tree_count(p) * per_tree;
        if index >= block {
            index -= block;
            continue;
        }
        let edges = prufer_edges(p, index / per_tree);
        let mut assign = index % per_tree;
        let mut bags = vec![VertexSet::EMPTY; p];
        for v in 0..n {
            bags[(assign % p as u64) as usize].insert(v);
            assign /= p as u64;
        }
        return Some(TreeCutDecomposition::from_parts(g.clone(), bags, edges));
    }
    None
}
