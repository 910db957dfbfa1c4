//! Immersion containment by exhaustive backtracking.
//!
//! An immersion of `H` in `G` maps vertices injectively and each edge of `H`
//! to a path between the images of its ends (a cycle through the image for a
//! loop), with the images of distinct edges edge-disjoint.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::census::{census, CensusOptions};
use crate::error::{capacity, Result};
use crate::graph::{bridges_and_2ec_components, edge_disjoint_path_count, EdgeId, MultiGraph, Vertex};

pub const IMMERSION_EDGE_CEILING: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Immersion {
    /// Image of each vertex of `H`.
    pub vertex_map: Vec<Vertex>,
    /// For each edge of `H` (in `H`'s order): its id and the ids of the
    /// `G`-edges of its image, in walking order from the image of its first end.
    pub edge_map: Vec<(EdgeId, Vec<EdgeId>)>,
}

fn degree_counts(g: &MultiGraph, k: usize) -> usize {
    g.degrees().into_iter().filter(|&d| d >= k).count()
}

/// Smallest `k` at which `H` has more vertices of degree at least `k` than
/// `G`, if any.
pub fn degree_condition_failure(g: &MultiGraph, h: &MultiGraph) -> Option<usize> {
    (0..=h.max_degree()).find(|&k| degree_counts(g, k) < degree_counts(h, k))
}

/// For every `k`, `G` has at least as many vertices of degree `>= k` as `H`.
pub fn degree_condition(g: &MultiGraph, h: &MultiGraph) -> bool {
    degree_condition_failure(g, h).is_none()
}

struct Router<'a> {
    g: &'a MultiGraph,
    h: &'a MultiGraph,
    order: Vec<usize>,
}

impl Router<'_> {
    /// Edge positions of every path from `s` to `t` (`s != t`) avoiding
    /// `used`, through distinct vertices.
    fn paths(&self, s: Vertex, t: Vertex, used: u64, out: &mut Vec<Vec<usize>>) {
        let mut cur = Vec::new();
        self.extend(s, t, used, 1u64 << s, &mut cur, out);
    }

    fn extend(&self, x: Vertex, t: Vertex, used: u64, seen: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, e) in self.g.edges().iter().enumerate() {
            if used >> i & 1 == 1 || e.is_loop() || (e.u != x && e.v != x) {
                continue;
            }
            let y = e.other(x);
            if y == t {
                cur.push(i);
                out.push(cur.clone());
                cur.pop();
            } else if seen >> y & 1 == 0 {
                cur.push(i);
                self.extend(y, t, used | 1 << i, seen | 1 << y, cur, out);
                cur.pop();
            }
        }
    }

    /// Edge positions of every cycle through `s` avoiding `used`, each once.
    fn cycles(&self, s: Vertex, used: u64) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut masks = BTreeSet::new();
        for (i, e) in self.g.edges().iter().enumerate() {
            if used >> i & 1 == 1 || (e.u != s && e.v != s) {
                continue;
            }
            if e.is_loop() {
                out.push(vec![i]);
                continue;
            }
            let w = e.other(s);
            let mut tails = Vec::new();
            self.paths(w, s, used | 1 << i, &mut tails);
            for tail in tails {
                let mask = tail.iter().fold(1u64 << i, |m, &j| m | 1 << j);
                if masks.insert(mask) {
                    let mut c = vec![i];
                    c.extend(tail);
                    out.push(c);
                }
            }
        }
        out
    }

    fn route(&self, k: usize, map: &[Vertex], used: u64, images: &mut Vec<Vec<usize>>) -> bool {
        let Some(&hi) = self.order.get(k) else {
            return true;
        };
        let he = self.h.edges()[hi];
        let (s, t) = (map[he.u], map[he.v]);
        let options = if he.is_loop() {
            self.cycles(s, used)
        } else {
            let mut o = Vec::new();
            self.paths(s, t, used, &mut o);
            o
        };
        for p in options {
            let mask = p.iter().fold(0u64, |m, &j| m | 1 << j);
            images[hi] = p;
            if self.route(k + 1, map, used | mask, images) {
                return true;
            }
        }
        false
    }

    fn assign(&self, vorder: &[Vertex], k: usize, map: &mut Vec<Vertex>, taken: u64, images: &mut Vec<Vec<usize>>) -> bool {
        let Some(&x) = vorder.get(k) else {
            return self.route(0, map, 0, images);
        };
        let need = self.h.degree(x);
        for y in 0..self.g.vertex_count() {
            if taken >> y & 1 == 1 || self.g.degree(y) < need {
                continue;
            }
            map[x] = y;
            if self.assign(vorder, k + 1, map, taken | 1 << y, images) {
                return true;
            }
        }
        false
    }
}

/// An immersion of `h` in `g`, or `None` when none exists. The search is
/// complete: every injection respecting degrees is tried, and for each,
/// every assignment of edge-disjoint paths and cycles.
pub fn find_immersion(g: &MultiGraph, h: &MultiGraph) -> Result<Option<Immersion>> {
    capacity("edge count of G for immersion search", IMMERSION_EDGE_CEILING, g.edge_count())?;
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() || !degree_condition(g, h) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..h.edge_count()).collect();
    // loops first, then edges at high-degree vertices
    order.sort_by_key(|&i| {
        let e = h.edges()[i];
        (!e.is_loop(), core::cmp::Reverse(h.degree(e.u) + h.degree(e.v)))
    });
    let mut vorder: Vec<Vertex> = (0..h.vertex_count()).collect();
    vorder.sort_by_key(|&x| core::cmp::Reverse(h.degree(x)));
    let router = Router { g, h, order };
    let mut map = vec![0; h.vertex_count()];
    let mut images = vec![Vec::new(); h.edge_count()];
    if !router.assign(&vorder, 0, &mut map, 0, &mut images) {
        return Ok(None);
    }
    let edge_map = h
        .edges()
        .iter()
        .zip(images)
        .map(|(e, p)| (e.id, p.into_iter().map(|i| g.edges()[i].id).collect()))
        .collect();
    Ok(Some(Immersion { vertex_map: map, edge_map }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessProblem {
    VertexMapLength,
    VertexOutOfRange(Vertex),
    NotInjective(Vertex),
    EdgeMapMismatch,
    UnknownEdge(EdgeId),
    EdgeReused(EdgeId),
    /// The image of this `H`-edge is not a path (or cycle) with the right ends.
    BadImage(EdgeId),
}

pub fn verify_witness(g: &MultiGraph, h: &MultiGraph, w: &Immersion) -> core::result::Result<(), WitnessProblem> {
    if w.vertex_map.len() != h.vertex_count() {
        return Err(WitnessProblem::VertexMapLength);
    }
    let mut seen = BTreeSet::new();
    for &y in &w.vertex_map {
        if y >= g.vertex_count() {
            return Err(WitnessProblem::VertexOutOfRange(y));
        }
        if !seen.insert(y) {
            return Err(WitnessProblem::NotInjective(y));
        }
    }
    if w.edge_map.len() != h.edge_count() || w.edge_map.iter().zip(h.edges()).any(|((id, _), e)| *id != e.id) {
        return Err(WitnessProblem::EdgeMapMismatch);
    }
    let mut used = BTreeSet::new();
    for ((hid, path), he) in w.edge_map.iter().zip(h.edges()) {
        let start = w.vertex_map[he.u];
        let end = w.vertex_map[he.v];
        let mut visited = vec![start];
        let mut x = start;
        for &id in path {
            let e = g.edge(id).ok_or(WitnessProblem::UnknownEdge(id))?;
            if !used.insert(id) {
                return Err(WitnessProblem::EdgeReused(id));
            }
            if e.u != x && e.v != x {
                return Err(WitnessProblem::BadImage(*hid));
            }
            x = e.other(x);
            visited.push(x);
        }
        let closed = he.is_loop();
        let inner = if closed { &visited[..visited.len() - 1] } else { &visited[..] };
        let distinct = inner.iter().collect::<BTreeSet<_>>().len() == inner.len();
        if path.is_empty() || x != end || !distinct {
            return Err(WitnessProblem::BadImage(*hid));
        }
    }
    Ok(())
}

/// Exactly one vertex has degree at least 2, and it carries a loop.
pub fn is_exceptional(h: &MultiGraph) -> bool {
    let big: Vec<Vertex> = (0..h.vertex_count()).filter(|&v| h.degree(v) >= 2).collect();
    big.len() == 1 && h.loops_at(big[0]) > 0
}

/// `h` itself, or for an exceptional `h`, `h` with its first edge
/// subdivided (a loop becomes a 2-cycle). The new half keeps the old id and
/// the other half gets a fresh one.
pub fn make_h_prime(h: &MultiGraph) -> MultiGraph {
    if !is_exceptional(h) {
        return h.clone();
    }
    let first = h.edges()[0];
    let mut out = MultiGraph::new(h.vertex_count() + 1);
    let mid = h.vertex_count();
    for e in h.edges() {
        if e.id == first.id {
            out.add_edge_with_id(e.id, e.u, mid).expect("fresh graph");
        } else {
            out.add_edge_with_id(e.id, e.u, e.v).expect("fresh graph");
        }
    }
    out.add_edge(mid, first.v).expect("in range");
    out
}

/// Whether every maximal 2-edge-connected subgraph with at least two
/// vertices is `d`-edge-connected.
pub fn blocks_are_d_connected(g: &MultiGraph, d: usize) -> bool {
    let (_, comps) = bridges_and_2ec_components(g);
    comps.into_iter().filter(|c| c.len() >= 2).all(|c| {
        let (sub, _) = g.induced(c);
        (1..sub.vertex_count()).all(|v| edge_disjoint_path_count(&sub, 0, v).is_ok_and(|k| k >= d))
    })
}

/// Counts, for `m = 0..=max_edges`, the unlabelled graphs on at most
/// `max_vertices` vertices with `m` edges, no isolated vertex, every
/// maximal 2-edge-connected subgraph `d`-edge-connected, and no
/// `h`-immersion.
pub fn immersion_free_counts(
    h: &MultiGraph,
    d: usize,
    max_vertices: usize,
    max_edges: usize,
    opts: CensusOptions,
) -> Result<Vec<usize>> {
    let mut counts = vec![0; max_edges + 1];
    for n in 1..=max_vertices {
        for g in census(n, max_edges, opts)? {
            if g.degrees().contains(&0) || !blocks_are_d_connected(&g, d) {
                continue;
            }
            if find_immersion(&g, h)?.is_none() {
                counts[g.edge_count()] += 1;
            }
        }
    }
    Ok(counts)
}
