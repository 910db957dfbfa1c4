//! Decomposition surgery and checkers for structure-theorem conclusions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{cut_from_side, EdgeId, MultiGraph, Vertex, VertexSet};
use crate::immersion::make_h_prime;
use crate::treecut::{optimize, NodeContext, NodeId, TreeCutDecomposition, TreeEdgeId};
use crate::treecut::split_along_cut;

/// One side of an order-2 split: `G[A_i]` plus an edge joining the ends of
/// the two crossing edges on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSide {
    pub graph: MultiGraph,
    /// Vertex of `G` behind each vertex of `graph`.
    pub vertices: Vec<Vertex>,
    /// Id of the added edge (fresh: above every id of `G`).
    pub new_edge: EdgeId,
}

pub fn split_two_cut(g: &MultiGraph, a: VertexSet) -> Result<[SplitSide; 2]> {
    g.check_set(a)?;
    let b = g.vertices().difference(a);
    let cut = cut_from_side(g, a);
    if cut.order() != 2 || a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "expected a cut of order 2 with non-empty sides, got order {}",
            cut.order()
        )));
    }
    let crossing: Vec<_> = cut.crossing.iter().map(|&id| *g.edge(id).expect("crossing edge")).collect();
    let fresh = g.edges().iter().map(|e| e.id + 1).max().unwrap_or(0);
    let side = |s: VertexSet, id: EdgeId| -> SplitSide {
        let (mut graph, vertices) = g.induced(s);
        let end = |e: &crate::graph::Edge| {
            let v = if s.contains(e.u) { e.u } else { e.v };
            vertices.iter().position(|&x| x == v).expect("end on this side")
        };
        graph.add_edge_with_id(id, end(&crossing[0]), end(&crossing[1])).expect("fresh id");
        SplitSide { graph, vertices, new_edge: id }
    };
    Ok([side(a, fresh), side(b, fresh + 1)])
}

/// Splits `d` along `[a, V - a]` around the subtree `anchor` after aligning
/// the cut: the far side of every tree edge leaving the anchor must lie
/// within one side. A straddling far side is moved wholesale to one side
/// when that leaves the crossing edges unchanged; otherwise the tree edge is
/// reported.
pub fn refine_along_cut(d: &TreeCutDecomposition, anchor: &[NodeId], a: VertexSet) -> Result<TreeCutDecomposition> {
    let g = d.graph();
    g.check_set(a)?;
    let member = d.check_subtree(anchor)?;
    let crossing = cut_from_side(g, a).crossing;
    let mut a = a;
    for (e, &(x, y)) in d.tree_edges().iter().enumerate() {
        if member[x] == member[y] {
            continue;
        }
        let near = d.vertices_of(&d.side_nodes(e, anchor[0]));
        let far = g.vertices().difference(near);
        let b = g.vertices().difference(a);
        if far.is_subset(a) || far.is_subset(b) {
            continue;
        }
        let to_a = a.union(far);
        let to_b = a.difference(far);
        let options = if far.intersection(a).len() >= far.intersection(b).len() { [to_a, to_b] } else { [to_b, to_a] };
        match options.into_iter().find(|&c| cut_from_side(g, c).crossing == crossing) {
            Some(c) => a = c,
            None => return Err(Error::AlignmentFailure { tree_edge: e }),
        }
    }
    split_along_cut(d, anchor, a)
}

/// Moves each vertex of `s ⊆ X_t` into its own new leaf attached to `t`.
pub fn attach_leaf_split(d: &TreeCutDecomposition, t: NodeId, s: VertexSet) -> Result<TreeCutDecomposition> {
    if t >= d.node_count() {
        return Err(Error::InvalidArgument(format!("no node {t}")));
    }
    if !s.is_subset(d.bag(t)) {
        return Err(Error::InvalidArgument(format!("vertex set is not inside the bag of node {t}")));
    }
    let mut bags = d.bags().to_vec();
    let mut edges = d.tree_edges().to_vec();
    bags[t] = bags[t].difference(s);
    for v in s.iter() {
        bags.push(VertexSet::singleton(v));
        edges.push((t, bags.len() - 1));
    }
    Ok(TreeCutDecomposition::from_parts(d.graph().clone(), bags, edges))
}

/// Per-node data backing a structure-theorem conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub decomposition: TreeCutDecomposition,
    pub z: Vec<Vec<EdgeId>>,
    pub k: Vec<usize>,
    pub u: Vec<Option<VertexSet>>,
    pub eta: usize,
    pub xi: usize,
}

impl Certificate {
    /// Empty `Z_t`, no `U_t`, and the given threshold at every node.
    pub fn plain(decomposition: TreeCutDecomposition, k: usize, eta: usize, xi: usize) -> Self {
        let p = decomposition.node_count();
        Certificate { decomposition, z: vec![Vec::new(); p], k: vec![k; p], u: vec![None; p], eta, xi }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConclusionFailure {
    Malformed(alloc::string::String),
    ZTooLarge { node: NodeId },
    AdhesionTooLarge { tree_edge: TreeEdgeId },
    /// `have` vertices of degree at least `k_t` against `bound` in `H'`.
    DegreeCount { node: NodeId, have: usize, bound: usize },
    ThresholdTooLarge { node: NodeId },
    PeripheralAboveThreshold { node: NodeId },
    BagVertexBelowThreshold { node: NodeId, vertex: Vertex },
    LeafBagTooLarge { node: NodeId },
    USetInvalid { node: NodeId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConclusionReport {
    pub failures: Vec<ConclusionFailure>,
}

impl ConclusionReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the certificate against `H' = make_h_prime(h)`: bounds on `Z_t`
/// and adhesion, and the degree-count inequality at every node. When any
/// `U_t` is present the positional statements are checked as well:
/// high-degree torso vertices are not peripheral, bag vertices of non-leaf
/// nodes (or of a one-node tree) reach the threshold, leaf bags hold at most
/// one vertex, `k_t <= Δ(H)`, and `U_t ⊆ X_t` with `|U_t| < |V(H')|`.
pub fn check_global_conclusion(h: &MultiGraph, cert: &Certificate) -> Result<ConclusionReport> {
    let d = &cert.decomposition;
    let p = d.node_count();
    let mut failures = Vec::new();
    if let Some(problem) = d.validate().problems.first() {
        failures.push(ConclusionFailure::Malformed(format!("{problem:?}")));
        return Ok(ConclusionReport { failures });
    }
    if cert.z.len() != p || cert.k.len() != p || cert.u.len() != p {
        failures.push(ConclusionFailure::Malformed("per-node data does not match the node count".into()));
        return Ok(ConclusionReport { failures });
    }
    let hp = make_h_prime(h);
    let structured = cert.u.iter().any(Option::is_some);
    for e in 0..d.tree_edges().len() {
        if d.adhesion_order(e) > cert.eta {
            failures.push(ConclusionFailure::AdhesionTooLarge { tree_edge: e });
        }
    }
    for t in 0..p {
        if cert.z[t].len() > cert.xi {
            failures.push(ConclusionFailure::ZTooLarge { node: t });
        }
        let torso = d.torso_at(&[t])?;
        let keep: Vec<EdgeId> = torso.graph.edges().iter().map(|e| e.id).filter(|id| cert.z[t].contains(id)).collect();
        let gz = torso.graph.without_edges(&keep)?;
        let kt = cert.k[t];
        let deg = gz.degrees();
        let have = deg.iter().filter(|&&x| x >= kt).count();
        let bound = hp.degrees().into_iter().filter(|&x| x >= kt).count();
        if have >= bound {
            failures.push(ConclusionFailure::DegreeCount { node: t, have, bound });
        }
        if !structured {
            continue;
        }
        if kt > h.max_degree() {
            failures.push(ConclusionFailure::ThresholdTooLarge { node: t });
        }
        let peripheral = torso.peripheral();
        if peripheral.iter().any(|v| deg[v] >= kt) {
            failures.push(ConclusionFailure::PeripheralAboveThreshold { node: t });
        }
        let leaf = d.is_leaf(t) && p >= 2;
        if !leaf {
            let bag_count = d.bag(t).len();
            for (i, v) in d.bag(t).iter().enumerate().take(bag_count) {
                if deg[i] < kt {
                    failures.push(ConclusionFailure::BagVertexBelowThreshold { node: t, vertex: v });
                }
            }
        } else if d.bag(t).len() > 1 {
            failures.push(ConclusionFailure::LeafBagTooLarge { node: t });
        }
        if let Some(u) = cert.u[t] {
            if !u.is_subset(d.bag(t)) || u.len() >= hp.vertex_count() {
                failures.push(ConclusionFailure::USetInvalid { node: t });
            }
        }
    }
    Ok(ConclusionReport { failures })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwReport {
    /// Largest degree in the tree after deleting edges of adhesion at most 2.
    pub reduced_degree: usize,
    pub max_bag: usize,
    pub adhesion: usize,
    pub width: usize,
    pub xi: usize,
}

impl MwReport {
    pub fn degree_ok(&self) -> bool {
        self.reduced_degree <= self.xi
    }
    pub fn bags_ok(&self) -> bool {
        self.max_bag <= self.xi
    }
    pub fn adhesion_ok(&self) -> bool {
        self.adhesion <= self.xi
    }
    pub fn width_ok(&self) -> bool {
        self.width <= 2 * self.xi
    }
    pub fn passes(&self) -> bool {
        self.degree_ok() && self.bags_ok() && self.adhesion_ok() && self.width_ok()
    }
}

pub fn check_mw_conclusion(d: &TreeCutDecomposition, xi: usize) -> Result<MwReport> {
    let mut degree = vec![0usize; d.node_count()];
    for (e, &(x, y)) in d.tree_edges().iter().enumerate() {
        if d.adhesion_order(e) > 2 {
            degree[x] += 1;
            degree[y] += 1;
        }
    }
    Ok(MwReport {
        reduced_degree: degree.into_iter().max().unwrap_or(0),
        max_bag: d.bags().iter().map(|b| b.len()).max().unwrap_or(0),
        adhesion: d.adhesion(),
        width: d.tree_cut_width()?,
        xi,
    })
}

/// At most `k` loops at every vertex and at most `k` edges between any two.
pub fn is_k_simple(g: &MultiGraph, k: usize) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| g.loops_at(u) <= k && (u + 1..n).all(|v| g.multiplicity(u, v) <= k))
}

/// Fewest torso vertices left after removing leaves hanging off bag
/// vertices: degree-1 vertices whose neighbour is a bag vertex. In an
/// isolated bag-bag edge only one end counts as a leaf.
pub fn core_size(torso: &MultiGraph, peripheral: VertexSet) -> usize {
    let n = torso.vertex_count();
    let deg = torso.degrees();
    let neighbour = |w: Vertex| torso.edges().iter().find(|e| e.u == w || e.v == w).map(|e| e.other(w));
    let is_leaf = |w: Vertex| deg[w] == 1 && neighbour(w).is_some_and(|x| !peripheral.contains(x));
    let mut leaves = 0;
    for w in 0..n {
        if is_leaf(w) {
            let x = neighbour(w).expect("degree one");
            // the pair w-x is an isolated edge of two leaves: count it once
            if is_leaf(x) && x < w {
                continue;
            }
            leaves += 1;
        }
    }
    n - leaves
}

/// Smallest ξ for which `d` is ξ-nice.
pub fn niceness(d: &TreeCutDecomposition) -> Result<usize> {
    let mut xi = d.adhesion();
    for t in 0..d.node_count() {
        let torso = d.torso_at(&[t])?;
        xi = xi.max(core_size(&torso.graph, torso.peripheral()));
    }
    Ok(xi)
}

/// A ξ-nice decomposition of `g` if one exists.
pub fn is_xi_nice(g: &MultiGraph, xi: usize) -> Result<Option<TreeCutDecomposition>> {
    let (cost, d) = optimize(
        g,
        |ctx: &NodeContext| {
            let (t, p) = ctx.torso();
            (core_size(&t, p) > xi) as usize
        },
        |b| (g.cut_order(b) > xi) as usize,
    )?;
    Ok((cost == 0).then_some(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalancedSplit {
    /// Both sides of this tree edge meet at least a third of the edges.
    Edge(TreeEdgeId),
    /// The bag of this node spans at least a ninth of the edges.
    HeavyNode(NodeId),
    /// The components of `T - node` (named by their tree edge to `node`),
    /// split into two groups each meeting at least two ninths of the edges.
    Partition { node: NodeId, first: Vec<TreeEdgeId>, second: Vec<TreeEdgeId> },
}

/// Every tree edge is directed towards the side meeting at least a third of
/// the edges unless both sides do. At a sink, either its bag is heavy or the
/// shortest prefix of its components (in tree-edge order) meeting a third
/// of the edges is split from the rest.
pub fn balanced_split(d: &TreeCutDecomposition) -> Result<BalancedSplit> {
    let g = d.graph();
    let m = g.edge_count();
    let mut out_degree = vec![0usize; d.node_count()];
    for (e, &(x, y)) in d.tree_edges().iter().enumerate() {
        let (sx, sy) = d.edge_sides(e);
        let big_x = 3 * g.incident_count(sx) >= m;
        let big_y = 3 * g.incident_count(sy) >= m;
        match (big_x, big_y) {
            (true, true) => return Ok(BalancedSplit::Edge(e)),
            (false, _) => out_degree[x] += 1,
            (true, false) => out_degree[y] += 1,
        }
    }
    let sink = out_degree.iter().position(|&k| k == 0).expect("a finite oriented tree has a sink");
    if 9 * g.edges_within(d.bag(sink)) >= m {
        return Ok(BalancedSplit::HeavyNode(sink));
    }
    let mut comps: Vec<(TreeEdgeId, VertexSet)> = d
        .neighbors(sink)
        .iter()
        .map(|&(nb, e)| (e, d.vertices_of(&d.side_nodes(e, nb))))
        .collect();
    comps.sort_by_key(|c| c.0);
    let mut union = VertexSet::EMPTY;
    let mut cut = comps.len();
    for (i, &(_, s)) in comps.iter().enumerate() {
        union = union.union(s);
        if 3 * g.incident_count(union) >= m {
            cut = i + 1;
            break;
        }
    }
    let first = comps[..cut].iter().map(|c| c.0).collect();
    let second = comps[cut..].iter().map(|c| c.0).collect();
    Ok(BalancedSplit::Partition { node: sink, first, second })
}

/// Whether a split meets its thresholds exactly.
pub fn split_meets_thresholds(d: &TreeCutDecomposition, split: &BalancedSplit) -> bool {
    let g = d.graph();
    let m = g.edge_count();
    match split {
        BalancedSplit::Edge(e) => {
            let (sx, sy) = d.edge_sides(*e);
            let adh = d.adhesion_order(*e);
            [sx, sy].iter().all(|&s| {
                let inc = g.incident_count(s);
                3 * inc >= m && 3 * (g.edges_within(s) + adh) >= m
            })
        }
        BalancedSplit::HeavyNode(t) => 9 * g.edges_within(d.bag(*t)) >= m,
        BalancedSplit::Partition { node, first, second } => {
            let side = |edges: &[TreeEdgeId]| {
                edges.iter().fold(VertexSet::EMPTY, |u, &e| {
                    let (x, y) = d.tree_edges()[e];
                    let nb = if x == *node { y } else { x };
                    u.union(d.vertices_of(&d.side_nodes(e, nb)))
                })
            };
            let mut all: Vec<TreeEdgeId> = first.iter().chain(second).copied().collect();
            all.sort_unstable();
            let mut expect: Vec<TreeEdgeId> = d.neighbors(*node).iter().map(|n| n.1).collect();
            expect.sort_unstable();
            all == expect
                && 9 * g.incident_count(side(first)) >= 2 * m
                && 9 * g.incident_count(side(second)) >= 2 * m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> MultiGraph {
        let mut p = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                p.push((i, j));
            }
        }
        MultiGraph::from_pairs(n, &p).unwrap()
    }

    #[test]
    fn split_cycle_and_shared_end() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let [l, r] = split_two_cut(&c4, VertexSet(0b0011)).unwrap();
        assert_eq!(l.graph.multiplicity(0, 1), 2);
        assert_eq!(r.graph.multiplicity(0, 1), 2);
        assert_eq!(l.graph.edge_count() + r.graph.edge_count(), 4);
        // both crossing edges leave vertex 0
        let fan = MultiGraph::from_pairs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let [l, _] = split_two_cut(&fan, VertexSet(0b001)).unwrap();
        assert_eq!(l.graph.loops_at(0), 1);
        assert!(split_two_cut(&c4, VertexSet(0b0001)).is_ok());
        assert!(split_two_cut(&k(4), VertexSet(0b0001)).is_err());
    }

    #[test]
    fn refine_bridge_triangles() {
        let g = MultiGraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let d = TreeCutDecomposition::trivial(g);
        let r = refine_along_cut(&d, &[0], VertexSet(0b000111)).unwrap();
        assert!(r.validate().is_valid());
        assert_eq!(r.bags(), &[VertexSet(0b000111), VertexSet(0b111000)]);
    }

    #[test]
    fn leaves_for_star() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = TreeCutDecomposition::trivial(g);
        let r = attach_leaf_split(&d, 0, VertexSet(0b1110)).unwrap();
        assert_eq!(r.node_count(), 4);
        assert!((0..3).all(|e| r.adhesion_order(e) == 1));
        assert!(attach_leaf_split(&r, 0, VertexSet(0b0010)).is_err());
        assert_eq!(attach_leaf_split(&d, 0, VertexSet::EMPTY).unwrap(), d);
    }

    #[test]
    fn mw_checks() {
        let p3 = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let d = TreeCutDecomposition::new(p3, vec![VertexSet(1), VertexSet(2), VertexSet(4)], vec![(0, 1), (1, 2)]).unwrap();
        let r = check_mw_conclusion(&d, 2).unwrap();
        assert!(r.passes());
        assert_eq!(r.reduced_degree, 0);
        let r = check_mw_conclusion(&TreeCutDecomposition::trivial(k(5)), 4).unwrap();
        assert!(!r.bags_ok());
        assert!(!check_mw_conclusion(&d, 0).unwrap().adhesion_ok());
    }

    #[test]
    fn niceness_examples() {
        assert!(is_xi_nice(&k(3), 3).unwrap().is_some());
        assert!(is_xi_nice(&k(5), 3).unwrap().is_none());
        assert!(is_k_simple(&k(4), 1));
        let d = MultiGraph::from_pairs(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        assert!(!is_k_simple(&d, 1));
        assert!(is_k_simple(&d, 2));
    }

    #[test]
    fn trivial_certificates() {
        let h = k(4);
        let g = k(3);
        let cert = Certificate::plain(TreeCutDecomposition::trivial(g.clone()), 0, 0, 0);
        assert!(check_global_conclusion(&h, &cert).unwrap().passes());
        let mut cert = Certificate::plain(TreeCutDecomposition::trivial(g.clone()), 1, 0, 3);
        cert.z[0] = vec![0, 1, 2];
        assert!(check_global_conclusion(&h, &cert).unwrap().passes());
        cert.xi = 2;
        let r = check_global_conclusion(&h, &cert).unwrap();
        assert_eq!(r.failures, vec![ConclusionFailure::ZTooLarge { node: 0 }]);
    }

    #[test]
    fn balanced_two_blocks() {
        let mut p = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        p.extend([(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (3, 4)]);
        let g = MultiGraph::from_pairs(8, &p).unwrap();
        let d = TreeCutDecomposition::new(g, vec![VertexSet(0x0f), VertexSet(0xf0)], vec![(0, 1)]).unwrap();
        let s = balanced_split(&d).unwrap();
        assert_eq!(s, BalancedSplit::Edge(0));
        assert!(split_meets_thresholds(&d, &s));
    }

    #[test]
    fn balanced_star() {
        // six disjoint digons hanging off an empty centre
        let mut p = Vec::new();
        for i in 0..6 {
            p.push((2 * i, 2 * i + 1));
            p.push((2 * i, 2 * i + 1));
        }
        let g = MultiGraph::from_pairs(12, &p).unwrap();
        let mut bags = vec![VertexSet::EMPTY];
        let mut edges = Vec::new();
        for i in 0..6 {
            bags.push(VertexSet(0b11 << (2 * i)));
            edges.push((0, i + 1));
        }
        let d = TreeCutDecomposition::new(g, bags, edges).unwrap();
        let s = balanced_split(&d).unwrap();
        assert!(matches!(&s, BalancedSplit::Partition { node: 0, first, .. } if first.len() == 2));
        assert!(split_meets_thresholds(&d, &s));
    }
}
