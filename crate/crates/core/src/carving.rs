//! Carvings and the width duality between tree-cut torso-width, carving
//! width, and the largest edge-tangle order.
//!
//! A carving is a tree-cut decomposition whose leaves hold one vertex each,
//! whose other nodes are empty, and whose nodes all have degree 1 or 3.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{capacity, Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::tangles::max_tangle_order;
use crate::treecut::{tree_cut_torso_width, NodeId, TreeCutDecomposition};

pub const CARVING_CEILING: usize = 10;

/// Leaves hold exactly one vertex and other nodes are empty. A one-node
/// tree counts when it holds at most one vertex.
pub fn is_weak_carving(d: &TreeCutDecomposition) -> bool {
    if !d.validate().is_valid() {
        return false;
    }
    if d.node_count() == 1 {
        return d.bag(0).len() <= 1;
    }
    (0..d.node_count()).all(|t| {
        let want = if d.is_leaf(t) { 1 } else { 0 };
        d.bag(t).len() == want
    })
}

pub fn is_carving(d: &TreeCutDecomposition) -> bool {
    is_weak_carving(d) && (d.node_count() == 1 || (0..d.node_count()).all(|t| matches!(d.neighbors(t).len(), 1 | 3)))
}

/// Exact carving width with a witnessing carving. A graph with one vertex
/// has width 0 (one-node tree); two vertices give the single-edge tree.
pub fn carving_width(g: &MultiGraph) -> Result<(usize, TreeCutDecomposition)> {
    let n = g.vertex_count();
    capacity("vertex count for carving search", CARVING_CEILING, n)?;
    if n <= 1 {
        return Ok((0, TreeCutDecomposition::trivial(g.clone())));
    }
    // best[S]: least max adhesion inside a rooted binary tree with leaves S,
    // not counting the edge above its root
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    let mut split = vec![0u64; size];
    for s in 1..size as u64 {
        if s.count_ones() == 1 {
            best[s as usize] = 0;
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let s1 = sub | low;
            if s1 != s {
                let s2 = s & !s1;
                let c = g
                    .cut_order(VertexSet(s1))
                    .max(g.cut_order(VertexSet(s2)))
                    .max(best[s1 as usize])
                    .max(best[s2 as usize]);
                if c < best[s as usize] {
                    best[s as usize] = c;
                    split[s as usize] = s1;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    // unrooted: the top edge joins the roots of S1 and V - S1
    let all = VertexSet::full(n).0;
    let low = 1u64;
    let rest = all & !low;
    let mut top = (usize::MAX, 0u64);
    let mut sub = rest;
    loop {
        let s1 = sub | low;
        if s1 != all {
            let s2 = all & !s1;
            let c = g.cut_order(VertexSet(s1)).max(best[s1 as usize]).max(best[s2 as usize]);
            if c < top.0 {
                top = (c, s1);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    let mut bags = Vec::new();
    let mut edges = Vec::new();
    let r1 = build(top.1, &split, &mut bags, &mut edges);
    let r2 = build(all & !top.1, &split, &mut bags, &mut edges);
    edges.push((r1, r2));
    Ok((top.0, TreeCutDecomposition::from_parts(g.clone(), bags, edges)))
}

fn build(s: u64, split: &[u64], bags: &mut Vec<VertexSet>, edges: &mut Vec<(NodeId, NodeId)>) -> NodeId {
    let me = bags.len();
    if s.count_ones() == 1 {
        bags.push(VertexSet(s));
        return me;
    }
    bags.push(VertexSet::EMPTY);
    let s1 = split[s as usize];
    let a = build(s1, split, bags, edges);
    let b = build(s & !s1, split, bags, edges);
    edges.push((me, a));
    edges.push((me, b));
    me
}

/// Converts a decomposition into a carving: hang a leaf for every bag
/// vertex, empty the bags, drop empty leaves, split nodes of degree four or
/// more by moving two neighbours onto a new node, and suppress degree-2
/// nodes. Every adhesion of the result is at most the torso-width of `d`.
pub fn torso_to_carving(d: &TreeCutDecomposition) -> Result<TreeCutDecomposition> {
    if let Some(p) = d.validate().problems.first() {
        return Err(Error::InvalidDecomposition(alloc::format!("{p:?}")));
    }
    let mut bags: Vec<VertexSet> = vec![VertexSet::EMPTY; d.node_count()];
    let mut edges: Vec<Option<(NodeId, NodeId)>> = d.tree_edges().iter().copied().map(Some).collect();
    for t in 0..d.node_count() {
        for v in d.bag(t).iter() {
            bags.push(VertexSet::singleton(v));
            edges.push(Some((t, bags.len() - 1)));
        }
    }
    let mut alive = vec![true; bags.len()];
    let incident = |edges: &[Option<(NodeId, NodeId)>], t: NodeId| -> Vec<usize> {
        (0..edges.len()).filter(|&i| edges[i].is_some_and(|(x, y)| x == t || y == t)).collect()
    };
    let far = |e: (NodeId, NodeId), t: NodeId| if e.0 == t { e.1 } else { e.0 };
    loop {
        let count = alive.iter().filter(|&&a| a).count();
        let mut changed = false;
        for t in 0..bags.len() {
            if !alive[t] || !bags[t].is_empty() || count <= 1 {
                continue;
            }
            let at = incident(&edges, t);
            if at.len() <= 1 {
                for i in at {
                    edges[i] = None;
                }
                alive[t] = false;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    let mut t = 0;
    while t < bags.len() {
        let at = incident(&edges, t);
        if alive[t] && at.len() >= 4 {
            let (x, y) = (far(edges[at[0]].unwrap(), t), far(edges[at[1]].unwrap(), t));
            bags.push(VertexSet::EMPTY);
            alive.push(true);
            let star = bags.len() - 1;
            edges[at[0]] = Some((star, x));
            edges[at[1]] = Some((star, y));
            edges.push(Some((star, t)));
            continue;
        }
        t += 1;
    }
    for t in 0..bags.len() {
        let at = incident(&edges, t);
        if alive[t] && bags[t].is_empty() && at.len() == 2 {
            let (x, y) = (far(edges[at[0]].unwrap(), t), far(edges[at[1]].unwrap(), t));
            edges[at[0]] = Some((x, y));
            edges[at[1]] = None;
            alive[t] = false;
        }
    }
    let mut index = vec![usize::MAX; bags.len()];
    let mut out_bags = Vec::new();
    for t in 0..bags.len() {
        if alive[t] {
            index[t] = out_bags.len();
            out_bags.push(bags[t]);
        }
    }
    let out_edges = edges.into_iter().flatten().map(|(x, y)| (index[x], index[y])).collect();
    Ok(TreeCutDecomposition::from_parts(d.graph().clone(), out_bags, out_edges))
}

/// For loopless `g`: whether the torso-width is at most `⌊3 cw / 2⌋`.
pub fn carving_torso_bound_check(g: &MultiGraph) -> Result<bool> {
    if g.has_loops() {
        return Err(Error::HasLoops);
    }
    let (cw, _) = carving_width(g)?;
    let (tctw, _) = tree_cut_torso_width(g)?;
    Ok(tctw <= 3 * cw / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub tctw: usize,
    pub cw: usize,
    /// Largest order of an edge-tangle.
    pub mu: usize,
    /// `cw <= tctw` and `mu <= tctw`.
    pub lower_bounds: bool,
    /// `tctw <= ⌊3 cw / 2⌋`; `None` when the graph has loops.
    pub loopless_bound: Option<bool>,
    /// `tctw <= 3 mu`, from the absence of a tangle of order `mu + 1`.
    pub tangle_bound: bool,
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.lower_bounds && self.loopless_bound != Some(false) && self.tangle_bound
    }
}

pub fn verify_duality(g: &MultiGraph) -> Result<DualityReport> {
    let (tctw, _) = tree_cut_torso_width(g)?;
    let (cw, _) = carving_width(g)?;
    let mu = max_tangle_order(g)?;
    Ok(DualityReport {
        tctw,
        cw,
        mu,
        lower_bounds: cw <= tctw && mu <= tctw,
        loopless_bound: (!g.has_loops()).then_some(tctw <= 3 * cw / 2),
        tangle_bound: tctw <= 3 * mu,
    })
}
