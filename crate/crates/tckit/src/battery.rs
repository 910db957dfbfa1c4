//! The census-wide property battery behind `verify-all`.
//!
//! Every connected graph within the bounds is run through each property;
//! graphs are checked in parallel and tallies are merged in census order,
//! so reports do not depend on scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tckit_core::carving::{carving_width, verify_duality};
use tckit_core::census::{census_upto, CensusOptions, CENSUS_MAX_EDGES, CENSUS_MAX_VERTICES};
use tckit_core::decompose::{
    attach_leaf_split, balanced_split, check_global_conclusion, is_xi_nice, niceness, refine_along_cut,
    split_meets_thresholds, split_two_cut, Certificate,
};
use tckit_core::graph::{enumerate_edge_cuts, MultiGraph, VertexSet};
use tckit_core::immersion::{degree_condition, find_immersion, verify_witness};
use tckit_core::smoothing::{cells, pseudo_cells, smooth_refine, SmoothOptions};
use tckit_core::tangles::{
    check_axioms, check_segregator, enumerate_tangles, is_cross_free, locate_cell, max_tangle_order, min_separators,
    restrict_family, tangle_from_fat_cell, uncross_segregator, EdgeTangle,
};
use tckit_core::treecut::{
    decomposition_by_index, decomposition_space_size, min_tree_cut_width, reconstruct_from_torsos, tree_cut_torso_width,
    NodeId, TreeCutDecomposition,
};
use tckit_core::Error;

/// Largest θ the smoothing properties run with.
pub const SMOOTHING_THETA: usize = 4;
/// Decompositions drawn from the indexed space per graph, beyond the
/// witnesses.
pub const SAMPLE_LIMIT: u64 = 300;
/// Nodes of the trees in the indexed sample.
pub const SAMPLE_MAX_NODES: usize = 3;
/// Random restriction instances per graph.
pub const RESTRICTION_DRAWS: usize = 4;
/// Segregator choices tried per (left, right) pair when looking for crossing
/// instances.
pub const SEGREGATOR_CHOICES: usize = 64;

pub const PROPERTIES: [&str; 21] = [
    "duality",
    "loop-family",
    "smoothing",
    "min-width-cells",
    "fat-cell-bound",
    "tangle-axioms",
    "tangle-closure",
    "fat-cell-tangles",
    "cell-location",
    "separator-refinement",
    "separator-location",
    "uncrossing",
    "immersion-soundness",
    "reconstruction",
    "two-cut-split",
    "refinement",
    "leaf-split",
    "balanced-split",
    "nice-search",
    "trivial-certificate",
    "restriction",
];

fn prop(name: &str) -> usize {
    PROPERTIES.iter().position(|&p| p == name).expect("known property")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatteryConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub loop_cap: usize,
    pub parallel_cap: usize,
    pub seed: u64,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { max_vertices: 4, max_edges: 6, loop_cap: 3, parallel_cap: 3, seed: 0 }
    }
}

impl BatteryConfig {
    pub fn census_options(&self) -> CensusOptions {
        CensusOptions { loop_cap: self.loop_cap, parallel_cap: self.parallel_cap, connected: true }
    }

    pub fn check(&self) -> Result<(), Error> {
        for (what, limit, got) in [
            ("census vertex bound", CENSUS_MAX_VERTICES, self.max_vertices),
            ("census edge bound", CENSUS_MAX_EDGES, self.max_edges),
        ] {
            if got > limit {
                return Err(Error::Capacity { what, limit, got });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            self.first_failure.get_or_insert_with(detail);
        }
    }

    fn absorb<T>(&mut self, r: Result<T, Error>, what: &str) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.check(false, || format!("{what}: {e}"));
                None
            }
        }
    }

    fn merge(&mut self, o: &Tally) {
        self.checked += o.checked;
        self.failed += o.failed;
        if self.first_failure.is_none() {
            self.first_failure.clone_from(&o.first_failure);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub property: &'static str,
    pub graph: MultiGraph,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub graphs: usize,
    pub tallies: Vec<(&'static str, Tally)>,
    /// The failing graph with fewest edges (then vertices) per property.
    pub counterexamples: Vec<Counterexample>,
}

impl BatteryReport {
    pub fn passes(&self) -> bool {
        self.tallies.iter().all(|(_, t)| t.failed == 0)
    }
}

pub fn run_battery(cfg: &BatteryConfig) -> Result<BatteryReport, Error> {
    cfg.check()?;
    let graphs = census_upto(cfg.max_vertices, cfg.max_edges, cfg.census_options())?;
    let patterns = census_upto(3, 4, CensusOptions::multigraphs(4))?;
    let per_graph: Vec<Vec<Tally>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_graph(g, &patterns, cfg.seed.wrapping_add(i as u64)))
        .collect();
    let mut tallies: Vec<(&'static str, Tally)> = PROPERTIES.iter().map(|&p| (p, Tally::default())).collect();
    let mut counterexamples: Vec<Counterexample> = Vec::new();
    for (g, ts) in graphs.iter().zip(&per_graph) {
        for (p, t) in ts.iter().enumerate() {
            tallies[p].1.merge(t);
            if let Some(detail) = &t.first_failure {
                let key = |x: &MultiGraph| (x.edge_count(), x.vertex_count());
                match counterexamples.iter_mut().find(|c| c.property == PROPERTIES[p]) {
                    Some(c) if key(g) < key(&c.graph) => {
                        c.graph = g.clone();
                        c.detail.clone_from(detail);
                    }
                    Some(_) => {}
                    None => counterexamples.push(Counterexample { property: PROPERTIES[p], graph: g.clone(), detail: detail.clone() }),
                }
            }
        }
    }
    Ok(BatteryReport { graphs: graphs.len(), tallies, counterexamples })
}

/// Witness decompositions (trivial, minimum torso-width, minimum tree-cut
/// width, an optimal carving) followed by indexed decompositions on trees
/// of at most [`SAMPLE_MAX_NODES`] nodes, all of them or an even stride of
/// [`SAMPLE_LIMIT`].
pub fn decomposition_sample(g: &MultiGraph) -> Result<Vec<TreeCutDecomposition>, Error> {
    let mut out = vec![
        TreeCutDecomposition::trivial(g.clone()),
        tree_cut_torso_width(g)?.1,
        min_tree_cut_width(g)?.1,
        carving_width(g)?.1,
    ];
    let size = decomposition_space_size(g.vertex_count(), SAMPLE_MAX_NODES);
    let step = size.div_ceil(SAMPLE_LIMIT).max(1);
    let mut i = 0;
    while i < size {
        out.extend(decomposition_by_index(g, SAMPLE_MAX_NODES, i));
        i += step;
    }
    let mut seen = Vec::new();
    out.retain(|d| {
        let key = (d.bags().to_vec(), d.tree_edges().to_vec());
        let fresh = !seen.contains(&key);
        seen.push(key);
        fresh
    });
    Ok(out)
}

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (1u32..1 << items.len()).map(move |m| (0..items.len()).filter(|&i| m >> i & 1 == 1).map(|i| items[i].clone()).collect())
}

/// The node set of the component of `T - e` containing `nodes`.
fn component_at(d: &TreeCutDecomposition, e: usize, nodes: &[NodeId]) -> Vec<NodeId> {
    d.side_nodes(e, nodes[0])
}

/// Tree edges with exactly one end in `nodes`.
fn boundary(d: &TreeCutDecomposition, nodes: &[NodeId]) -> Vec<usize> {
    (0..d.tree_edges().len())
        .filter(|&e| {
            let (x, y) = d.tree_edges()[e];
            nodes.contains(&x) != nodes.contains(&y)
        })
        .collect()
}

/// Whether every tree edge with at most one end in `nodes` and adhesion
/// below θ has `[A_{e,C}, B_{e,C}]` in `t`.
fn membership_holds(d: &TreeCutDecomposition, t: &EdgeTangle, nodes: &[NodeId]) -> bool {
    (0..d.tree_edges().len()).all(|e| {
        let (x, y) = d.tree_edges()[e];
        if nodes.contains(&x) && nodes.contains(&y) || d.adhesion_order(e) >= t.order() {
            return true;
        }
        let near = d.vertices_of(&component_at(d, e, nodes));
        t.contains(d.graph().vertices().difference(near))
    })
}

struct Ctx<'a> {
    g: &'a MultiGraph,
    t: Vec<Tally>,
}

impl Ctx<'_> {
    fn tally(&mut self, name: &str) -> &mut Tally {
        &mut self.t[prop(name)]
    }
}

pub fn check_graph(g: &MultiGraph, patterns: &[MultiGraph], seed: u64) -> Vec<Tally> {
    let mut c = Ctx { g, t: vec![Tally::default(); PROPERTIES.len()] };
    let Some(sample) = c.tally("reconstruction").absorb(decomposition_sample(g), "sample") else {
        return c.t;
    };
    let Some(mu) = c.tally("tangle-axioms").absorb(max_tangle_order(g), "max tangle order") else {
        return c.t;
    };
    let mut tangles: Vec<Vec<EdgeTangle>> = vec![Vec::new()];
    for theta in 1..=mu.max(SMOOTHING_THETA) + 1 {
        let ts = c.tally("tangle-axioms").absorb(enumerate_tangles(g, theta), "enumerate").unwrap_or_default();
        tangles.push(ts);
    }
    duality(&mut c, mu);
    smoothing(&mut c, mu, &tangles);
    tangle_axioms(&mut c, mu, &tangles);
    cell_location(&mut c, mu, &tangles, &sample);
    separators(&mut c, &tangles);
    immersions(&mut c, patterns);
    surgery(&mut c, &sample);
    restriction(&mut c, seed);
    c.t
}

fn duality(c: &mut Ctx, mu: usize) {
    let g = c.g;
    let Some(r) = c.tally("duality").absorb(verify_duality(g), "duality") else {
        return;
    };
    c.tally("duality").check(r.passes() && r.mu == mu, || format!("{r:?}"));
    if g.vertex_count() == 1 {
        let l = g.edge_count();
        c.tally("loop-family").check((r.tctw, r.cw, r.mu) == (l, 0, l), || format!("{l} loops: {r:?}"));
    }
}

fn smoothing(c: &mut Ctx, mu: usize, tangles: &[Vec<EdgeTangle>]) {
    let g = c.g;
    let Some((w, best)) = c.tally("smoothing").absorb(tree_cut_torso_width(g), "torso-width") else {
        return;
    };
    for theta in 1..=SMOOTHING_THETA {
        for (start, from) in [(TreeCutDecomposition::trivial(g.clone()), "trivial"), (best.clone(), "min-width")] {
            let Some(out) = c.tally("smoothing").absorb(smooth_refine(&start, theta, SmoothOptions::default()), "smooth") else {
                continue;
            };
            let d = &out.decomposition;
            let smooth = tckit_core::smoothing::is_theta_smooth(d, theta).is_ok_and(|v| v.is_none());
            let decreasing = out.signatures.windows(2).all(|s| s[1] < s[0]);
            c.tally("smoothing").check(smooth && decreasing && d.validate().is_valid(), || {
                format!("θ={theta} from {from}: smooth={smooth} decreasing={decreasing}")
            });
            if from == "min-width" {
                // only claimed for w < θ <= |E|
                if theta <= w || theta > g.edge_count() {
                    continue;
                }
                let width = d.torso_width().unwrap_or(usize::MAX);
                let no_cells = (w + 1..=theta).all(|k| cells(d, k).is_ok_and(|cs| cs.is_empty()));
                c.tally("min-width-cells").check(width == w && no_cells, || {
                    format!("θ={theta}: width {width} vs {w}, cells above width: {}", !no_cells)
                });
                continue;
            }
            if mu < theta {
                let width = d.torso_width().unwrap_or(usize::MAX);
                c.tally("fat-cell-bound").check(width + 3 <= 3 * theta, || format!("θ={theta}: node torso {width} > 3θ-3"));
            }
            // fat cells of the smoothed decomposition define enumerated
            // tangles, and locate back to themselves
            let Some(cs) = c.tally("fat-cell-tangles").absorb(cells(d, theta), "cells") else {
                continue;
            };
            for cell in cs.into_iter().filter(|x| x.fat) {
                let Some(t) = c.tally("fat-cell-tangles").absorb(tangle_from_fat_cell(d, &cell.nodes, theta), "fat tangle") else {
                    continue;
                };
                let listed = tangles[theta].contains(&t);
                let located = locate_cell(&t, d).is_ok_and(|n| n == cell.nodes);
                c.tally("fat-cell-tangles").check(listed && located, || {
                    format!("θ={theta} cell {:?}: listed={listed} located={located}", cell.nodes)
                });
            }
        }
    }
}

fn tangle_axioms(c: &mut Ctx, mu: usize, tangles: &[Vec<EdgeTangle>]) {
    let g = c.g;
    for (theta, ts) in tangles.iter().enumerate().skip(1) {
        if theta > mu {
            c.tally("tangle-axioms").check(ts.is_empty(), || format!("tangle of order {theta} > μ = {mu}"));
        }
        for t in ts {
            let ok = check_axioms(g, t).is_ok_and(|r| r.is_valid());
            c.tally("tangle-axioms").check(ok, || format!("θ={theta}: axioms fail"));
            let members: Vec<VertexSet> = t.members().collect();
            let mut union_ok = true;
            let mut down_ok = true;
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i..] {
                    let u = a.union(b);
                    union_ok &= g.cut_order(u) >= theta || t.contains(u);
                }
                let mut sub = a.0;
                loop {
                    let s = VertexSet(sub);
                    down_ok &= g.cut_order(s) >= theta || t.contains(s);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & a.0;
                }
            }
            c.tally("tangle-closure").check(union_ok && down_ok, || format!("θ={theta}: union {union_ok}, down {down_ok}"));
        }
    }
}

fn cell_location(c: &mut Ctx, mu: usize, tangles: &[Vec<EdgeTangle>], sample: &[TreeCutDecomposition]) {
    for theta in 1..=mu {
        for t in &tangles[theta] {
            for d in sample {
                let pseudo = pseudo_cells(d, theta);
                let holders = pseudo.iter().filter(|p| membership_holds(d, t, p)).count();
                let located = locate_cell(t, d);
                let is_cell = |n: &Vec<NodeId>| cells(d, theta).is_ok_and(|cs| cs.iter().any(|x| &x.nodes == n));
                let ok = holders == 1 && located.as_ref().is_ok_and(|n| is_cell(n) && membership_holds(d, t, n));
                c.tally("cell-location").check(ok, || format!("θ={theta}: {holders} cells qualify, located {located:?}"));
            }
        }
    }
}

fn separators(c: &mut Ctx, tangles: &[Vec<EdgeTangle>]) {
    let g = c.g;
    for (theta, ts) in tangles.iter().enumerate() {
        if ts.len() < 2 {
            continue;
        }
        for (i, e) in ts.iter().enumerate() {
            let others: Vec<EdgeTangle> = ts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, t)| t.clone()).collect();
            for left in subsets(&others) {
                let Some(mins) = c.tally("separator-refinement").absorb(min_separators(g, &left, e), "min separators") else {
                    continue;
                };
                for &a in &mins {
                    let ok = left.iter().all(|l| {
                        min_separators(g, std::slice::from_ref(l), e).is_ok_and(|m| m.iter().any(|&x| a.is_subset(x)))
                    });
                    c.tally("separator-refinement").check(ok, || format!("θ={theta}: separator {:?} not refined", a.to_vec()));
                }
            }
        }
        separator_location(c, theta, ts);
        uncrossing(c, ts);
    }
}

/// The fat-cell tangles of a smoothed decomposition: a minimum separator
/// between a tangle and a collection must contain the cell side of any
/// tree edge that parts the cell from all of the collection, and its other
/// side must contain each collection member's cell side.
fn separator_location(c: &mut Ctx, theta: usize, ts: &[EdgeTangle]) {
    let g = c.g;
    let Some(out) = c
        .tally("separator-location")
        .absorb(smooth_refine(&TreeCutDecomposition::trivial(g.clone()), theta, SmoothOptions::default()), "smooth")
    else {
        return;
    };
    let d = &out.decomposition;
    let Ok(cs) = cells(d, theta) else { return };
    let mut fat: Vec<(EdgeTangle, Vec<NodeId>)> = Vec::new();
    for cell in cs.into_iter().filter(|x| x.fat) {
        if let Ok(t) = tangle_from_fat_cell(d, &cell.nodes, theta) {
            if ts.contains(&t) && !fat.iter().any(|f| f.0 == t) {
                let at = locate_cell(&t, d).unwrap_or_default();
                fat.push((t, at));
            }
        }
    }
    let all = g.vertices();
    for (i, (e_t, e_cell)) in fat.iter().enumerate() {
        let others: Vec<(EdgeTangle, Vec<NodeId>)> = fat.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
        for coll in subsets(&others) {
            let left: Vec<EdgeTangle> = coll.iter().map(|x| x.0.clone()).collect();
            for e in boundary(d, e_cell) {
                let comp = component_at(d, e, e_cell);
                if coll.iter().any(|x| x.1.iter().any(|n| comp.contains(n))) {
                    continue;
                }
                let b_side = d.vertices_of(&comp);
                let a_side = all.difference(b_side);
                let is_sep = left.iter().all(|l| l.contains(b_side)) && e_t.contains(a_side) && g.cut_order(b_side) < theta;
                let Ok(mins) = min_separators(g, &left, e_t) else { continue };
                let mut ok = is_sep;
                for &a in &mins {
                    let b = all.difference(a);
                    ok &= b_side.is_subset(a);
                    for (_, cell) in &coll {
                        let toward = boundary(d, cell).into_iter().find(|&f| !component_at(d, f, cell).iter().any(|n| e_cell.contains(n)));
                        if let Some(f) = toward {
                            ok &= d.vertices_of(&component_at(d, f, cell)).is_subset(b);
                        }
                    }
                }
                c.tally("separator-location").check(ok, || format!("θ={theta}: tree edge {e}, separator={is_sep}"));
            }
        }
    }
}

/// Segregators made of one minimum separator per right-hand tangle that
/// happen to cross; uncrossing must keep the union and the segregator
/// property.
fn uncrossing(c: &mut Ctx, ts: &[EdgeTangle]) {
    let g = c.g;
    for (i, l) in ts.iter().enumerate() {
        let left = std::slice::from_ref(l);
        let rest: Vec<EdgeTangle> = ts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, t)| t.clone()).collect();
        for right in subsets(&rest).filter(|r| r.len() >= 2) {
            let Ok(table) = right.iter().map(|r| min_separators(g, left, r)).collect::<Result<Vec<_>, _>>() else {
                continue;
            };
            if table.iter().any(|m| m.is_empty()) {
                continue;
            }
            let combos: usize = table.iter().map(|m| m.len()).product();
            for k in 0..combos.min(SEGREGATOR_CHOICES) {
                let mut rem = k;
                let mut s: Vec<VertexSet> = table
                    .iter()
                    .map(|m| {
                        let x = m[rem % m.len()];
                        rem /= m.len();
                        x
                    })
                    .collect();
                s.sort();
                s.dedup();
                if is_cross_free(&s) || !check_segregator(g, left, &right, &s).is_ok_and(|f| f.is_none()) {
                    continue;
                }
                let union = s.iter().fold(VertexSet::EMPTY, |u, a| u.union(*a));
                let r = uncross_segregator(g, left, &right, &s);
                let ok = r.as_ref().is_ok_and(|out| {
                    is_cross_free(out)
                        && out.iter().fold(VertexSet::EMPTY, |u, a| u.union(*a)) == union
                        && check_segregator(g, left, &right, out).is_ok_and(|f| f.is_none())
                });
                c.tally("uncrossing").check(ok, || format!("segregator {s:?} gave {r:?}"));
            }
        }
    }
}

fn immersions(c: &mut Ctx, patterns: &[MultiGraph]) {
    let g = c.g;
    for h in patterns.iter().filter(|h| h.edge_count() <= g.edge_count()) {
        let Some(found) = c.tally("immersion-soundness").absorb(find_immersion(g, h), "immersion") else {
            continue;
        };
        if let Some(w) = found {
            let witness = verify_witness(g, h, &w);
            let degrees = degree_condition(g, h);
            c.tally("immersion-soundness").check(witness.is_ok() && degrees, || format!("H={:?}: {witness:?}, degrees {degrees}", h.edges()));
        } else {
            c.tally("immersion-soundness").check(true, String::new);
        }
    }
}

fn surgery(c: &mut Ctx, sample: &[TreeCutDecomposition]) {
    let g = c.g;
    let n = g.vertex_count();
    for d in sample {
        let ok = reconstruct_from_torsos(d).is_ok_and(|r| r.same_edges(g));
        c.tally("reconstruction").check(ok, || format!("bags {:?}", d.bags()));
        let split = balanced_split(d);
        let ok = split.as_ref().is_ok_and(|s| split_meets_thresholds(d, s));
        c.tally("balanced-split").check(ok, || format!("bags {:?}: {split:?}", d.bags()));
    }
    // order-2 splits
    let Ok(small) = enumerate_edge_cuts(g, 3) else { return };
    let odd_free = |h: &MultiGraph| enumerate_edge_cuts(h, 3).is_ok_and(|cs| cs.iter().all(|x| x.a.is_empty() || x.b.is_empty() || !matches!(x.order(), 1 | 3)));
    let g_odd_free = odd_free(g);
    for cut in small.iter().filter(|x| x.order() == 2 && x.a.contains(0) && !x.b.is_empty()) {
        let Some([l, r]) = c.tally("two-cut-split").absorb(split_two_cut(g, cut.a), "split") else {
            continue;
        };
        let conserved = l.graph.edge_count() + r.graph.edge_count() == g.edge_count() && l.graph.vertex_count() + r.graph.vertex_count() == n;
        let kept = !g_odd_free || (odd_free(&l.graph) && odd_free(&r.graph));
        c.tally("two-cut-split").check(conserved && kept, || format!("side {:?}: conserved={conserved} odd-free kept={kept}", cut.a.to_vec()));
    }
    // refinement and leaf splits on the witnesses
    for d in &sample[..sample.len().min(4)] {
        for t in 0..d.node_count() {
            for cut in &small {
                match refine_along_cut(d, &[t], cut.a) {
                    Ok(r) => {
                        let refines = r.bags().iter().all(|b| d.bags().iter().any(|o| b.is_subset(*o)));
                        let adhesion = r.adhesion() <= d.adhesion().max(cut.order());
                        c.tally("refinement").check(r.validate().is_valid() && refines && adhesion, || {
                            format!("node {t}, side {:?}: refines={refines} adhesion={adhesion}", cut.a.to_vec())
                        });
                    }
                    Err(Error::AlignmentFailure { .. }) => {}
                    Err(e) => c.tally("refinement").check(false, || format!("node {t}: {e}")),
                }
            }
            let bag = d.bag(t);
            let Some(r) = c.tally("leaf-split").absorb(attach_leaf_split(d, t, bag), "leaf split") else {
                continue;
            };
            let base = d.tree_edges().len();
            let adhesions_ok = bag.iter().enumerate().all(|(i, v)| r.adhesion_order(base + i) == g.degree(v) - 2 * g.loops_at(v));
            c.tally("leaf-split").check(r.validate().is_valid() && adhesions_ok, || format!("node {t}: adhesions {adhesions_ok}"));
        }
    }
    // nice decompositions
    let mut nice_before = false;
    for xi in 1..=4 {
        let Some(found) = c.tally("nice-search").absorb(is_xi_nice(g, xi), "nice search") else {
            continue;
        };
        let ok = match &found {
            Some(d) => niceness(d).is_ok_and(|x| x <= xi) && balanced_split(d).is_ok_and(|s| split_meets_thresholds(d, &s)),
            None => !nice_before,
        };
        nice_before |= found.is_some();
        c.tally("nice-search").check(ok, || format!("ξ={xi}: {found:?}"));
    }
    // a graph smaller than H' needs nothing: one bag, Z empty, k = 0
    let path = MultiGraph::from_pairs(n + 1, &(0..n).map(|i| (i, i + 1)).collect::<Vec<_>>()).expect("path");
    let cert = Certificate::plain(TreeCutDecomposition::trivial(g.clone()), 0, 0, 0);
    let ok = check_global_conclusion(&path, &cert).is_ok_and(|r| r.passes());
    c.tally("trivial-certificate").check(ok, || "small graph certificate rejected".into());
}

/// A random cross-free family of one to three A-sides and a random cut.
pub fn random_restriction_instance(g: &MultiGraph, rng: &mut impl Rng) -> (Vec<VertexSet>, VertexSet) {
    let n = g.vertex_count();
    let k = rng.gen_range(1..=3);
    let mut groups = vec![VertexSet::EMPTY; k + 1];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for v in order {
        groups[rng.gen_range(0..=k)].insert(v);
    }
    let family = groups[1..].iter().copied().filter(|a| !a.is_empty()).collect();
    let cut = VertexSet(rng.gen::<u64>() & g.vertices().0);
    (family, cut)
}

/// Checks the restriction bounds: at most `2|[A*,B*]|` flagged members,
/// unflagged images no larger than before, flagged ones larger by at most
/// `|[A*,B*]|`, and a cross-free result.
pub fn check_restriction(g: &MultiGraph, family: &[VertexSet], cut: VertexSet) -> Result<(), String> {
    let r = restrict_family(g, family, cut).map_err(|e| e.to_string())?;
    let k = g.cut_order(cut);
    if r.flagged.len() > 2 * k {
        return Err(format!("{} flagged > 2·{k}", r.flagged.len()));
    }
    for (i, &a) in family.iter().enumerate() {
        let before = g.cut_order(a);
        let after = g.cut_order(r.family[i + 1]);
        let bound = if r.flagged.contains(&i) { before + k } else { before };
        if after > bound {
            return Err(format!("member {i}: order {after} > {bound}"));
        }
    }
    if r.family[0] != cut || !is_cross_free(&r.family) {
        return Err("restricted family malformed".into());
    }
    Ok(())
}

fn restriction(c: &mut Ctx, seed: u64) {
    let g = c.g;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESTRICTION_DRAWS {
        let (family, cut) = random_restriction_instance(g, &mut rng);
        let r = check_restriction(g, &family, cut);
        c.tally("restriction").check(r.is_ok(), || format!("{family:?} / {cut:?}: {r:?}"));
    }
}
