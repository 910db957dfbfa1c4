//! Cells, signatures, and the smoothing refinement.
//!
//! A pseudo-k-cell is a component of the tree after deleting every tree
//! edge of adhesion below `k`; it is a k-cell when its torso has at least
//! `k` edges, and fat when that torso has at least `3k - 2` edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{capacity, Error, Result};
use crate::graph::{cut_from_side, cut_sides, EdgeCut, VertexSet, CUT_ENUMERATION_CEILING};
use crate::treecut::{prune_empty_nodes, split_along_cut, NodeId, TreeCutDecomposition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub nodes: Vec<NodeId>,
    pub torso_edges: usize,
    pub fat: bool,
}

/// Adhesion order of every tree edge.
pub fn adhesions(d: &TreeCutDecomposition) -> Vec<usize> {
    (0..d.tree_edges().len()).map(|e| d.adhesion_order(e)).collect()
}

fn groups(d: &TreeCutDecomposition, keep: impl Fn(usize) -> bool) -> Vec<Vec<NodeId>> {
    let p = d.node_count();
    let mut group = vec![usize::MAX; p];
    let mut out: Vec<Vec<NodeId>> = Vec::new();
    for s in 0..p {
        if group[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        group[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(y, e) in d.neighbors(x) {
                if group[y] == usize::MAX && keep(e) {
                    group[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Components of `T` minus the tree edges of adhesion below `k`, ordered by
/// smallest node.
pub fn pseudo_cells(d: &TreeCutDecomposition, k: usize) -> Vec<Vec<NodeId>> {
    let adh = adhesions(d);
    groups(d, |e| adh[e] >= k)
}

/// The k-cells of `d`.
pub fn cells(d: &TreeCutDecomposition, k: usize) -> Result<Vec<Cell>> {
    let mut out = Vec::new();
    for nodes in pseudo_cells(d, k) {
        let torso_edges = d.torso_edge_count(&nodes)?;
        if torso_edges >= k && torso_edges > 0 {
            out.push(Cell { nodes, torso_edges, fat: torso_edges + 2 >= 3 * k });
        }
    }
    Ok(out)
}

/// `rows[i]` is `a_{θ-i}`; entry `j` of a row counts cells whose torso has
/// at least `|E| - j` edges. Compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Signature {
    pub theta: usize,
    pub rows: Vec<Vec<usize>>,
}

pub fn signature(d: &TreeCutDecomposition, theta: usize) -> Result<Signature> {
    let m = d.graph().edge_count();
    let mut rows = Vec::with_capacity(theta);
    for i in (1..=theta).rev() {
        let sizes: Vec<usize> = cells(d, i)?.into_iter().map(|c| c.torso_edges).collect();
        rows.push((1..=m).rev().map(|j| sizes.iter().filter(|&&s| s >= j).count()).collect());
    }
    Ok(Signature { theta, rows })
}

/// A cell or node together with a cut of order below θ whose sides are each
/// incident with more than `order` of its torso edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub nodes: Vec<NodeId>,
    pub cut: EdgeCut,
}

/// The subtrees checked for smoothness: θ-cells first, then single nodes.
fn candidates(d: &TreeCutDecomposition, theta: usize) -> Result<Vec<Vec<NodeId>>> {
    let mut out: Vec<Vec<NodeId>> = cells(d, theta)?.into_iter().map(|c| c.nodes).collect();
    out.extend((0..d.node_count()).map(|t| vec![t]));
    Ok(out)
}

struct SmallCut {
    a: VertexSet,
    order: usize,
    inc_a: u64,
    inc_b: u64,
}

fn small_cuts(d: &TreeCutDecomposition, theta: usize) -> Result<Vec<SmallCut>> {
    let g = d.graph();
    capacity("vertex count for cut enumeration", CUT_ENUMERATION_CEILING, g.vertex_count())?;
    if theta == 0 {
        return Ok(Vec::new());
    }
    Ok(cut_sides(g, theta - 1)
        .into_iter()
        .map(|a| SmallCut {
            a,
            order: g.cut_order(a),
            inc_a: g.incident_mask(a),
            inc_b: g.incident_mask(g.vertices().difference(a)),
        })
        .collect())
}

fn violations_of(mask: u64, cuts: &[SmallCut]) -> impl Iterator<Item = &SmallCut> {
    cuts.iter().filter(move |c| {
        (mask & c.inc_a).count_ones() as usize > c.order && (mask & c.inc_b).count_ones() as usize > c.order
    })
}

/// `None` when `d` is θ-smooth, otherwise the first violation found.
pub fn is_theta_smooth(d: &TreeCutDecomposition, theta: usize) -> Result<Option<Violation>> {
    let cuts = small_cuts(d, theta)?;
    for nodes in candidates(d, theta)? {
        let mask = d.torso_edge_mask(&nodes)?;
        if let Some(c) = violations_of(mask, &cuts).next() {
            return Ok(Some(Violation { nodes, cut: cut_from_side(d.graph(), c.a) }));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmoothOptions {
    /// Drop empty-bag leaves and suppress empty-bag degree-2 nodes after
    /// every split. This changes neither the signature nor smoothness.
    pub prune_empty: bool,
}

#[derive(Clone, Debug)]
pub struct SmoothOutcome {
    pub decomposition: TreeCutDecomposition,
    /// Signature before the first split and after each one.
    pub signatures: Vec<Signature>,
}

impl SmoothOutcome {
    pub fn iterations(&self) -> usize {
        self.signatures.len() - 1
    }
}

/// Number of tree edges with at most one end in `nodes` whose far side lies
/// within one side of the cut.
fn alignment_score(d: &TreeCutDecomposition, member: &[bool], nodes: &[NodeId], a: VertexSet) -> usize {
    let b = d.graph().vertices().difference(a);
    let anchor = nodes[0];
    (0..d.tree_edges().len())
        .filter(|&e| {
            let (x, y) = d.tree_edges()[e];
            if member[x] && member[y] {
                return false;
            }
            let near = d.vertices_of(&d.side_nodes(e, anchor));
            let far = d.graph().vertices().difference(near);
            far.is_subset(a) || far.is_subset(b)
        })
        .count()
}

/// Splits along violations until the decomposition is θ-smooth. Each round
/// takes, over all violations, one whose cut aligns with the most tree edges
/// around it, and checks that the signature strictly drops.
pub fn smooth_refine(d: &TreeCutDecomposition, theta: usize, opts: SmoothOptions) -> Result<SmoothOutcome> {
    if let Some(p) = d.validate().problems.first() {
        return Err(Error::InvalidDecomposition(alloc::format!("{p:?}")));
    }
    let cuts = small_cuts(d, theta)?;
    let mut cur = if opts.prune_empty { prune_empty_nodes(d) } else { d.clone() };
    let mut signatures = vec![signature(&cur, theta)?];
    loop {
        let mut best: Option<(usize, Vec<NodeId>, VertexSet)> = None;
        for nodes in candidates(&cur, theta)? {
            let mask = cur.torso_edge_mask(&nodes)?;
            let member = cur.check_subtree(&nodes)?;
            for c in violations_of(mask, &cuts) {
                let score = alignment_score(&cur, &member, &nodes, c.a);
                if best.as_ref().is_none_or(|b| score > b.0) {
                    best = Some((score, nodes.clone(), c.a));
                }
            }
        }
        let Some((_, nodes, a)) = best else {
            return Ok(SmoothOutcome { decomposition: cur, signatures });
        };
        let mut next = split_along_cut(&cur, &nodes, a)?;
        if opts.prune_empty {
            next = prune_empty_nodes(&next);
        }
        let sig = signature(&next, theta)?;
        if sig >= *signatures.last().expect("non-empty") {
            return Err(Error::SignatureNotDecreasing { iteration: signatures.len() });
        }
        signatures.push(sig);
        cur = next;
    }
}

/// Contracts every θ-cell to a single node. Other nodes keep their order
/// after the contracted ones.
pub fn contract_theta_cells(d: &TreeCutDecomposition, theta: usize) -> Result<TreeCutDecomposition> {
    let cs = cells(d, theta)?;
    let p = d.node_count();
    let mut group = vec![usize::MAX; p];
    let mut bags = Vec::new();
    for c in &cs {
        for &t in &c.nodes {
            group[t] = bags.len();
        }
        bags.push(d.vertices_of(&c.nodes));
    }
    for t in 0..p {
        if group[t] == usize::MAX {
            group[t] = bags.len();
            bags.push(d.bag(t));
        }
    }
    let edges = d
        .tree_edges()
        .iter()
        .filter(|&&(x, y)| group[x] != group[y])
        .map(|&(x, y)| (group[x], group[y]))
        .collect();
    Ok(TreeCutDecomposition::from_parts(d.graph().clone(), bags, edges))
}
