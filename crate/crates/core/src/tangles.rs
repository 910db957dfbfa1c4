//! Edge-tangles held explicitly by their members' A-sides.
//!
//! A tangle of order θ picks one orientation `[A, B]` of every cut of order
//! below θ so that (E2) any three B-sides share a vertex and (E3) every
//! B-side is incident with at least θ edges. The B-side is where the tangle
//! "lives".

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{capacity, Error, Result};
use crate::graph::{cut_sides, EdgeId, MultiGraph, VertexSet, CUT_ENUMERATION_CEILING};
use crate::smoothing::{cells, is_theta_smooth, pseudo_cells};
use crate::treecut::{NodeId, TreeCutDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeTangle {
    order: usize,
    members: BTreeSet<VertexSet>,
}

impl EdgeTangle {
    pub fn from_members(order: usize, members: impl IntoIterator<Item = VertexSet>) -> Self {
        EdgeTangle { order, members: members.into_iter().collect() }
    }
    pub fn order(&self) -> usize {
        self.order
    }
    /// A-sides of the members in increasing bitmask order.
    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    /// Whether `[a, V - a]` is a member.
    pub fn contains(&self, a: VertexSet) -> bool {
        self.members.contains(&a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// A member whose order is not below θ.
    TooLarge(VertexSet),
    /// A cut of order below θ present in neither orientation.
    Unoriented(VertexSet),
    /// A cut present in both orientations.
    BothOrientations(VertexSet),
    /// Three members whose B-sides have empty intersection.
    E2([VertexSet; 3]),
    /// A member whose B-side meets fewer than θ edges.
    E3(VertexSet),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_size(g: &MultiGraph) -> Result<()> {
    capacity("vertex count for cut enumeration", CUT_ENUMERATION_CEILING, g.vertex_count())
}

pub fn check_axioms(g: &MultiGraph, t: &EdgeTangle) -> Result<AxiomReport> {
    check_size(g)?;
    let all = g.vertices();
    let theta = t.order;
    let mut violations = Vec::new();
    for a in t.members() {
        if !a.is_subset(all) || g.cut_order(a) >= theta {
            violations.push(AxiomViolation::TooLarge(a));
        }
    }
    if theta > 0 {
        for a in cut_sides(g, theta - 1) {
            let b = all.difference(a);
            if a.0 > b.0 {
                continue;
            }
            match (t.contains(a), t.contains(b)) {
                (false, false) => violations.push(AxiomViolation::Unoriented(a)),
                (true, true) => violations.push(AxiomViolation::BothOrientations(a)),
                _ => {}
            }
        }
    }
    let bs: Vec<(VertexSet, VertexSet)> = t.members().map(|a| (a, all.difference(a))).collect();
    for (i, &(a1, b1)) in bs.iter().enumerate() {
        if g.incident_count(b1) < theta {
            violations.push(AxiomViolation::E3(a1));
        }
        for (j, &(a2, b2)) in bs.iter().enumerate().skip(i) {
            for &(a3, b3) in bs.iter().skip(j) {
                if b1.intersection(b2).intersection(b3).is_empty() {
                    violations.push(AxiomViolation::E2([a1, a2, a3]));
                }
            }
        }
    }
    Ok(AxiomReport { violations })
}

/// Every edge-tangle of order θ, each given by its member A-sides.
pub fn enumerate_tangles(g: &MultiGraph, theta: usize) -> Result<Vec<EdgeTangle>> {
    check_size(g)?;
    if theta == 0 {
        return Ok(vec![EdgeTangle::from_members(0, [])]);
    }
    let all = g.vertices();
    // one entry per unordered cut: the orientations allowed by (E3)
    let mut choices: Vec<Vec<(VertexSet, VertexSet)>> = Vec::new();
    for a in cut_sides(g, theta - 1) {
        let b = all.difference(a);
        if a.0 > b.0 {
            continue;
        }
        let opts: Vec<(VertexSet, VertexSet)> = [(a, b), (b, a)]
            .into_iter()
            .filter(|&(_, bb)| !bb.is_empty() && g.incident_count(bb) >= theta)
            .collect();
        if opts.is_empty() {
            return Ok(Vec::new());
        }
        choices.push(opts);
    }
    choices.sort_by_key(|c| c.len());
    let mut out = Vec::new();
    let mut chosen: Vec<(VertexSet, VertexSet)> = Vec::new();
    orient(&choices, &mut chosen, theta, &mut out);
    out.sort();
    Ok(out)
}

fn orient(
    choices: &[Vec<(VertexSet, VertexSet)>],
    chosen: &mut Vec<(VertexSet, VertexSet)>,
    theta: usize,
    out: &mut Vec<EdgeTangle>,
) {
    let i = chosen.len();
    if i == choices.len() {
        out.push(EdgeTangle::from_members(theta, chosen.iter().map(|c| c.0)));
        return;
    }
    'opt: for &(a, b) in &choices[i] {
        for (j, &(_, b1)) in chosen.iter().enumerate() {
            let bb = b.intersection(b1);
            if bb.is_empty() {
                continue 'opt;
            }
            for &(_, b2) in &chosen[j + 1..] {
                if bb.intersection(b2).is_empty() {
                    continue 'opt;
                }
            }
        }
        chosen.push((a, b));
        orient(choices, chosen, theta, out);
        chosen.pop();
    }
}

/// Largest θ admitting an edge-tangle of order θ (0 when `G` has no edges).
pub fn max_tangle_order(g: &MultiGraph) -> Result<usize> {
    let mut theta = 0;
    while !enumerate_tangles(g, theta + 1)?.is_empty() {
        theta += 1;
    }
    Ok(theta)
}

/// The tangle of a θ-fat θ-cell of a θ-smooth decomposition: every cut of
/// order `k < θ` whose A-side meets at most `k` edges of the cell's torso.
pub fn tangle_from_fat_cell(d: &TreeCutDecomposition, cell: &[NodeId], theta: usize) -> Result<EdgeTangle> {
    if is_theta_smooth(d, theta)?.is_some() {
        return Err(Error::InvalidArgument(format!("decomposition is not {theta}-smooth")));
    }
    let mut nodes = cell.to_vec();
    nodes.sort_unstable();
    let found = cells(d, theta)?.into_iter().find(|c| c.nodes == nodes);
    match found {
        Some(c) if c.fat => {}
        Some(_) => return Err(Error::InvalidArgument("cell is not fat".into())),
        None => return Err(Error::InvalidArgument(format!("not a {theta}-cell"))),
    }
    let g = d.graph();
    let torso = d.torso_edge_mask(&nodes)?;
    let members = cut_sides(g, theta.saturating_sub(1))
        .into_iter()
        .filter(|&a| theta > 0 && (torso & g.incident_mask(a)).count_ones() as usize <= g.cut_order(a));
    Ok(EdgeTangle::from_members(theta, members))
}

/// The pseudo-θ-cell the tangle points into: contract the pseudo-θ-cells,
/// direct every remaining tree edge towards the B-side of its member
/// orientation, and return the unique sink.
pub fn locate_cell(t: &EdgeTangle, d: &TreeCutDecomposition) -> Result<Vec<NodeId>> {
    let theta = t.order;
    let groups = pseudo_cells(d, theta);
    let mut group_of = vec![0; d.node_count()];
    for (i, nodes) in groups.iter().enumerate() {
        for &x in nodes {
            group_of[x] = i;
        }
    }
    let mut has_out = vec![false; groups.len()];
    for (e, &(x, y)) in d.tree_edges().iter().enumerate() {
        if group_of[x] == group_of[y] {
            continue;
        }
        let side_x = d.vertices_of(&d.side_nodes(e, x));
        let side_y = d.graph().vertices().difference(side_x);
        if t.contains(side_x) {
            has_out[group_of[x]] = true;
        } else if t.contains(side_y) {
            has_out[group_of[y]] = true;
        } else {
            return Err(Error::InvalidArgument(format!("tangle does not orient the cut of tree edge {e}")));
        }
    }
    let sinks: Vec<usize> = (0..groups.len()).filter(|&i| !has_out[i]).collect();
    match sinks.as_slice() {
        [s] => Ok(groups[*s].clone()),
        _ => Err(Error::InvalidArgument(format!("{} sinks; input is not a tangle", sinks.len()))),
    }
}

fn common_order(left: &[EdgeTangle], right: &EdgeTangle) -> Result<usize> {
    if left.iter().any(|t| t.order != right.order) {
        return Err(Error::MixedOrders);
    }
    Ok(right.order)
}

/// A-sides of all (left, right)-separators: `[A, B]` in every left tangle
/// and `[B, A]` in `right`.
pub fn separators(g: &MultiGraph, left: &[EdgeTangle], right: &EdgeTangle) -> Result<Vec<VertexSet>> {
    check_size(g)?;
    let theta = common_order(left, right)?;
    let all = g.vertices();
    Ok(right
        .members()
        .map(|b| all.difference(b))
        .filter(|&a| left.iter().all(|t| t.contains(a)))
        .filter(|&a| g.cut_order(a) < theta)
        .collect())
}

/// All minimum-order separators, sorted by A-side lexicographically.
pub fn min_separators(g: &MultiGraph, left: &[EdgeTangle], right: &EdgeTangle) -> Result<Vec<VertexSet>> {
    let seps = separators(g, left, right)?;
    let Some(k) = seps.iter().map(|&a| g.cut_order(a)).min() else {
        return Ok(Vec::new());
    };
    let mut out: Vec<VertexSet> = seps.into_iter().filter(|&a| g.cut_order(a) == k).collect();
    out.sort_by(|x, y| x.lex_cmp(*y));
    Ok(out)
}

/// Minimum separator with the smallest order, then lexicographically
/// smallest A-side.
pub fn min_separator(g: &MultiGraph, left: &[EdgeTangle], right: &EdgeTangle) -> Result<Option<VertexSet>> {
    Ok(min_separators(g, left, right)?.into_iter().next())
}

pub fn is_cross_free(family: &[VertexSet]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family[i + 1..].iter().all(|c| a.is_disjoint(*c)))
}

/// Per right-hand tangle, its minimum (left, ·)-separators.
fn min_table(g: &MultiGraph, left: &[EdgeTangle], right: &[EdgeTangle]) -> Result<Vec<Vec<VertexSet>>> {
    right.iter().map(|r| min_separators(g, left, r)).collect()
}

/// Index of the first right-hand tangle that witnesses a failure, if any.
fn segregator_failure(table: &[Vec<VertexSet>], s: &[VertexSet]) -> Option<SegregatorFailure> {
    for &a in s {
        if !table.iter().any(|mins| mins.contains(&a)) {
            return Some(SegregatorFailure::NotMinimum(a));
        }
    }
    for (i, mins) in table.iter().enumerate() {
        let covered = s
            .iter()
            .any(|&a| mins.contains(&a) || mins.iter().any(|m| m.is_subset(a)));
        if !covered {
            return Some(SegregatorFailure::Uncovered(i));
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegregatorFailure {
    /// A member that is not a minimum separator for any right-hand tangle.
    NotMinimum(VertexSet),
    /// A right-hand tangle no member accounts for.
    Uncovered(usize),
}

pub fn check_segregator(
    g: &MultiGraph,
    left: &[EdgeTangle],
    right: &[EdgeTangle],
    s: &[VertexSet],
) -> Result<Option<SegregatorFailure>> {
    Ok(segregator_failure(&min_table(g, left, right)?, s))
}

/// Largest pool searched by the exhaustive fallback of
/// [`uncross_segregator`].
pub const UNCROSS_POOL_CEILING: usize = 22;

/// A cross-free segregator with the same union of A-sides as `s`.
///
/// Crossing pairs are resolved locally (drop a nested member, merge the
/// pair, or trim one by the other), accepting a step only when the result is
/// still a segregator and the total A-side size drops. If no local step
/// applies, the least total size cross-free family drawn from all minimum
/// separators is found exhaustively.
pub fn uncross_segregator(
    g: &MultiGraph,
    left: &[EdgeTangle],
    right: &[EdgeTangle],
    s: &[VertexSet],
) -> Result<Vec<VertexSet>> {
    let table = min_table(g, left, right)?;
    if let Some(f) = segregator_failure(&table, s) {
        return Err(Error::InvalidArgument(format!("not a segregator: {f:?}")));
    }
    let union = s.iter().fold(VertexSet::EMPTY, |u, a| u.union(*a));
    let weight = |f: &[VertexSet]| f.iter().map(|a| a.len()).sum::<usize>();
    let mut cur: Vec<VertexSet> = s.to_vec();
    cur.sort();
    cur.dedup();
    'outer: loop {
        let Some((i, j)) = crossing_pair(&cur) else {
            cur.sort_by(|x, y| x.lex_cmp(*y));
            return Ok(cur);
        };
        let (a, c) = (cur[i], cur[j]);
        let rest: Vec<VertexSet> = cur.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
        let options: [Vec<VertexSet>; 5] = [
            [c].to_vec(),
            [a].to_vec(),
            [a.union(c)].to_vec(),
            [a, c.difference(a)].to_vec(),
            [a.difference(c), c].to_vec(),
        ];
        for replacement in options {
            let mut next = rest.clone();
            next.extend(replacement.into_iter().filter(|x| !x.is_empty()));
            next.sort();
            next.dedup();
            let u = next.iter().fold(VertexSet::EMPTY, |u, x| u.union(*x));
            if u == union && weight(&next) < weight(&cur) && segregator_failure(&table, &next).is_none() {
                cur = next;
                continue 'outer;
            }
        }
        return exhaustive_uncross(&table, union);
    }
}

fn crossing_pair(f: &[VertexSet]) -> Option<(usize, usize)> {
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if !f[i].is_disjoint(f[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

fn exhaustive_uncross(table: &[Vec<VertexSet>], union: VertexSet) -> Result<Vec<VertexSet>> {
    let mut pool: Vec<VertexSet> = table.iter().flatten().copied().filter(|a| a.is_subset(union)).collect();
    pool.sort();
    pool.dedup();
    capacity("minimum separators for uncrossing", UNCROSS_POOL_CEILING, pool.len())?;
    let mut best: Option<(usize, Vec<VertexSet>)> = None;
    for mask in 0u32..1 << pool.len() {
        let fam: Vec<VertexSet> = (0..pool.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pool[k]).collect();
        if !is_cross_free(&fam) {
            continue;
        }
        if fam.iter().fold(VertexSet::EMPTY, |u, x| u.union(*x)) != union {
            continue;
        }
        let w = fam.iter().map(|a| a.len()).sum();
        if best.as_ref().is_some_and(|b| b.0 <= w) || segregator_failure(table, &fam).is_some() {
            continue;
        }
        best = Some((w, fam));
    }
    let mut fam = best
        .ok_or(Error::Infeasible("no cross-free segregator with the same union"))?
        .1;
    fam.sort_by(|x, y| x.lex_cmp(*y));
    Ok(fam)
}

/// `{[A*,B*]} ∪ {[A ∩ B*, B ∪ A*]}` for a cross-free family, the cut itself
/// first; `flagged` lists the family indices whose image has an end of some
/// `[A*,B*]` edge in `A ∩ B*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub family: Vec<VertexSet>,
    pub flagged: Vec<usize>,
}

pub fn restrict_family(g: &MultiGraph, family: &[VertexSet], cut: VertexSet) -> Result<Restriction> {
    g.check_set(cut)?;
    let b_star = g.vertices().difference(cut);
    let crossing: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| cut.contains(e.u) != cut.contains(e.v))
        .copied()
        .collect();
    let mut out = vec![cut];
    let mut flagged = Vec::new();
    for (i, &a) in family.iter().enumerate() {
        let image = a.intersection(b_star);
        if crossing.iter().any(|e| image.contains(e.u) || image.contains(e.v)) {
            flagged.push(i);
        }
        out.push(image);
    }
    Ok(Restriction { family: out, flagged })
}

/// Whether `s` is cross-free and each member is a minimum
/// (`c`, ℰ′)-separator for some tangle ℰ′ of order θ not containing all of
/// `d`. Every tangle in `c` must contain `d`.
pub fn is_guard(g: &MultiGraph, s: &[VertexSet], d: &[VertexSet], c: &[EdgeTangle], theta: usize) -> Result<bool> {
    if c.iter().any(|t| t.order != theta) {
        return Err(Error::MixedOrders);
    }
    if c.iter().any(|t| !d.iter().all(|&a| t.contains(a))) {
        return Err(Error::InvalidArgument("a tangle in c does not contain d".into()));
    }
    if !is_cross_free(s) {
        return Ok(false);
    }
    let others: Vec<EdgeTangle> = enumerate_tangles(g, theta)?
        .into_iter()
        .filter(|t| !d.iter().all(|&a| t.contains(a)))
        .collect();
    let table = min_table(g, c, &others)?;
    Ok(s.iter().all(|a| table.iter().any(|mins| mins.contains(a))))
}

/// The inherited tangle on `G - X` of order `θ - |X|`: members of `t` whose
/// order in `G - X` is below `θ - |X|`. Returns the tangle and `G - X`.
pub fn tangle_minus_edges(g: &MultiGraph, t: &EdgeTangle, x: &[EdgeId]) -> Result<(EdgeTangle, MultiGraph)> {
    let mut ids = x.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() >= t.order {
        return Err(Error::InvalidArgument(format!("|X| = {} is not below θ = {}", ids.len(), t.order)));
    }
    let h = g.without_edges(&ids)?;
    let theta = t.order - ids.len();
    let members = t.members().filter(|&a| h.cut_order(a) < theta);
    Ok((EdgeTangle::from_members(theta, members), h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smoothing::{smooth_refine, SmoothOptions};

    fn triangle() -> MultiGraph {
        MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn loops(k: usize) -> MultiGraph {
        MultiGraph::from_pairs(1, &vec![(0, 0); k]).unwrap()
    }

    fn two_k4_bridge() -> MultiGraph {
        let mut p = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        p.extend([(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (3, 4)]);
        MultiGraph::from_pairs(8, &p).unwrap()
    }

    #[test]
    fn loop_axioms() {
        let g = loops(3);
        let t = EdgeTangle::from_members(3, [VertexSet::EMPTY]);
        assert!(check_axioms(&g, &t).unwrap().is_valid());
        let t4 = EdgeTangle::from_members(4, [VertexSet::EMPTY]);
        let r = check_axioms(&g, &t4).unwrap();
        assert_eq!(r.violations, vec![AxiomViolation::E3(VertexSet::EMPTY)]);
    }

    #[test]
    fn triangle_tangles() {
        let g = triangle();
        let ts = enumerate_tangles(&g, 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(check_axioms(&g, &ts[0]).unwrap().is_valid());
        assert!(enumerate_tangles(&g, 3).unwrap().is_empty());
        assert_eq!(max_tangle_order(&g).unwrap(), 2);
    }

    #[test]
    fn bridge_separates_blocks() {
        let g = two_k4_bridge();
        let ts = enumerate_tangles(&g, 2).unwrap();
        assert_eq!(ts.len(), 2);
        let sep = min_separator(&g, &ts[..1], &ts[1]).unwrap().unwrap();
        assert_eq!(g.cut_order(sep), 1);
        assert_eq!(min_separator(&g, &ts[..1], &ts[0]).unwrap(), None);
        assert!(min_separator(&g, &ts[..1], &enumerate_tangles(&g, 1).unwrap()[0]).is_err());
    }

    #[test]
    fn fat_cells_locate_themselves() {
        let g = two_k4_bridge();
        let d = smooth_refine(&TreeCutDecomposition::trivial(g.clone()), 2, SmoothOptions::default())
            .unwrap()
            .decomposition;
        let fat: Vec<_> = cells(&d, 2).unwrap().into_iter().filter(|c| c.fat).collect();
        assert_eq!(fat.len(), 2);
        let all = enumerate_tangles(&g, 2).unwrap();
        for c in fat {
            let t = tangle_from_fat_cell(&d, &c.nodes, 2).unwrap();
            assert!(all.contains(&t));
            assert_eq!(locate_cell(&t, &d).unwrap(), c.nodes);
        }
    }

    #[test]
    fn restriction_examples() {
        let g = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = [VertexSet(0b001)];
        let r = restrict_family(&g, &fam, VertexSet::EMPTY).unwrap();
        assert_eq!(r.family, vec![VertexSet::EMPTY, VertexSet(0b001)]);
        assert!(r.flagged.is_empty());
        let r = restrict_family(&g, &fam, VertexSet(0b100)).unwrap();
        assert_eq!(r.family[1], VertexSet(0b001));
        assert!(r.flagged.is_empty());
    }

    #[test]
    fn deleting_a_loop() {
        let g = loops(4);
        let t = enumerate_tangles(&g, 4).unwrap().remove(0);
        let (t3, h) = tangle_minus_edges(&g, &t, &[0]).unwrap();
        assert_eq!(t3.order(), 3);
        assert!(check_axioms(&h, &t3).unwrap().is_valid());
        assert!(tangle_minus_edges(&g, &t, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn empty_guard() {
        let g = triangle();
        let ts = enumerate_tangles(&g, 2).unwrap();
        assert!(is_guard(&g, &[], &[], &ts, 2).unwrap());
    }
}
