use alloc::vec;
use alloc::vec::Vec;

use super::{NodeId, TreeCutDecomposition};
use crate::error::Result;
use crate::graph::VertexSet;

/// Splits `d` along the cut `[a, V - a]` around the subtree `anchor`.
///
/// `anchor` is contracted to one node `t0` (bag: the union of its bags),
/// giving `T0`. The result is two copies of `T0` joined by an edge between
/// the copies of `t0`; the first copy keeps `X_t ∩ A` and the second
/// `X_t ∩ B`. Nodes of the first copy come first, `t0` at index 0 and its
/// twin at index `|T0|`.
pub fn split_along_cut(d: &TreeCutDecomposition, anchor: &[NodeId], a: VertexSet) -> Result<TreeCutDecomposition> {
    let member = d.check_subtree(anchor)?;
    d.graph().check_set(a)?;
    let b = d.graph().vertices().difference(a);
    let mut index = vec![0usize; d.node_count()];
    let mut bags0 = vec![d.vertices_of(anchor)];
    for t in 0..d.node_count() {
        if !member[t] {
            index[t] = bags0.len();
            bags0.push(d.bag(t));
        }
    }
    let edges0: Vec<(NodeId, NodeId)> = d
        .tree_edges()
        .iter()
        .filter(|&&(x, y)| !(member[x] && member[y]))
        .map(|&(x, y)| (index[x], index[y]))
        .collect();
    let q = bags0.len();
    let mut bags: Vec<VertexSet> = bags0.iter().map(|x| x.intersection(a)).collect();
    bags.extend(bags0.iter().map(|x| x.intersection(b)));
    let mut edges = edges0.clone();
    edges.extend(edges0.iter().map(|&(x, y)| (x + q, y + q)));
    edges.push((0, q));
    Ok(TreeCutDecomposition::from_parts(d.graph().clone(), bags, edges))
}

/// Deletes empty-bag leaves and suppresses empty-bag nodes of degree 2 until
/// none remain. Neither step changes any other node's torso, any remaining
/// adhesion, or the cells of any order. Nodes keep their relative order.
pub fn prune_empty_nodes(d: &TreeCutDecomposition) -> TreeCutDecomposition {
    let p = d.node_count();
    let mut alive = vec![true; p];
    let mut edges: Vec<Option<(NodeId, NodeId)>> = d.tree_edges().iter().copied().map(Some).collect();
    let mut remaining = p;
    loop {
        let mut changed = false;
        for t in 0..p {
            if !alive[t] || !d.bag(t).is_empty() || remaining == 1 {
                continue;
            }
            let at: Vec<usize> = (0..edges.len())
                .filter(|&i| edges[i].is_some_and(|(x, y)| x == t || y == t))
                .collect();
            match at.len() {
                0 | 1 => {
                    for &i in &at {
                        edges[i] = None;
                    }
                }
                2 => {
                    let far = |i: usize| {
                        let (x, y) = edges[i].unwrap();
                        if x == t {
                            y
                        } else {
                            x
                        }
                    };
                    let (u, v) = (far(at[0]), far(at[1]));
                    edges[at[0]] = Some((u, v));
                    edges[at[1]] = None;
                }
                _ => continue,
            }
            alive[t] = false;
            remaining -= 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let mut index = vec![usize::MAX; p];
    let mut bags = Vec::new();
    for t in 0..p {
        if alive[t] {
            index[t] = bags.len();
            bags.push(d.bag(t));
        }
    }
    let edges = edges.into_iter().flatten().map(|(x, y)| (index[x], index[y])).collect();
    TreeCutDecomposition::from_parts(d.graph().clone(), bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    #[test]
    fn split_doubles_and_prune_shrinks() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = TreeCutDecomposition::trivial(g);
        let s = split_along_cut(&d, &[0], VertexSet(0b0011)).unwrap();
        assert_eq!(s.node_count(), 2);
        assert_eq!(s.bags(), &[VertexSet(0b0011), VertexSet(0b1100)]);
        assert_eq!(s.adhesion(), 2);
        let t = split_along_cut(&s, &[0], VertexSet(0b0001)).unwrap();
        assert_eq!(t.node_count(), 4);
        assert!(t.validate().is_valid());
        // node 3 is the twin of node 1 with an empty bag, a leaf
        let pruned = prune_empty_nodes(&t);
        assert!(pruned.validate().is_valid());
        assert_eq!(pruned.node_count(), 3);
    }
}
