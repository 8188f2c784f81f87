//! Marked-vertex bijection: merging/separation on trees, and its
//! transport to bipartite maps through duality and opening.

use crate::darts::NONE;
use crate::error::{BijectionError, TreeError};
use crate::map::{opposite, Color, HalfEdge, PlanarMap};
use crate::schaeffer::{closure, opening};
use crate::trees::{EulerianTree, Sign};

use super::marks::{EdgeMarkedMap, VertexMarked, VertexMarkedPair};

/// A balanced tree with a marked black leaf (by dart).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafMarkedTree {
    pub tree: EulerianTree,
    pub leaf: usize,
}

/// A balanced tree with a marked oriented inner edge (by dart) and a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMarkedTree {
    pub tree: EulerianTree,
    pub edge: usize,
    pub sign: Sign,
}

/// Merge the marked leaves into an edge oriented from the first tree to the
/// second, then root at the first free leaf met from the right of that
/// edge: counterclockwise when the first tree's rerooting sign is `+`.
pub fn merge_trees_phi(
    a: &LeafMarkedTree,
    b: &LeafMarkedTree,
) -> Result<EdgeMarkedTree, TreeError> {
    Ok(merge_trees_traced(a, b)?.0)
}

/// [`merge_trees_phi`] together with where the darts of each input went.
pub(crate) fn merge_trees_traced(
    a: &LeafMarkedTree,
    b: &LeafMarkedTree,
) -> Result<(EdgeMarkedTree, Vec<usize>, Vec<usize>), TreeError> {
    if !a.tree.is_balanced() || !b.tree.is_balanced() {
        return Err(TreeError::NotBalanced);
    }
    let eps1 = a.tree.sign_of_mark(a.leaf)?;
    let eps2 = b.tree.sign_of_mark(b.leaf)?;
    let mut t = a.tree.loose();
    let off = t.append(&b.tree.loose());
    let x = t.merge_leaves(a.leaf, b.leaf + off);
    let root = t.first_free_from(x, eps1 == Sign::Minus);
    let (tree, mut relabel) = t.into_tree(root)?;
    let edge = relabel[x];
    let rb = relabel.split_off(off);
    Ok((EdgeMarkedTree { tree, edge, sign: eps2 }, relabel, rb))
}

/// Inverse of [`merge_trees_phi`].
pub fn split_tree_psi(m: &EdgeMarkedTree) -> Result<(LeafMarkedTree, LeafMarkedTree), TreeError> {
    let (a, b) = split_tree_traced(m)?;
    Ok((a.0, b.0))
}

type Traced = (LeafMarkedTree, Vec<usize>);

/// [`split_tree_psi`] together with where the darts of the input went in
/// each part.
pub(crate) fn split_tree_traced(m: &EdgeMarkedTree) -> Result<(Traced, Traced), TreeError> {
    let t = &m.tree;
    if !t.is_balanced() {
        return Err(TreeError::NotBalanced);
    }
    if m.edge >= t.dart_count() || !t.is_inner_edge(m.edge) {
        return Err(TreeError::EdgeIsLeafEdge);
    }
    let mut lt = t.loose();
    let eps1 = Sign::from_bool(lt.first_free_from(m.edge, false) == 0);
    let (la, lb) = lt.cut_edge(m.edge);
    let side = |leaf: usize, sign: Sign| -> Result<Traced, TreeError> {
        let (at_mark, first) = lt.into_tree(leaf)?;
        let (tree, second) = at_mark.unreroot_traced(sign);
        let relabel: Vec<usize> =
            first[..t.dart_count()].iter().map(|&h| if h == NONE { NONE } else { second[h] }).collect();
        Ok((LeafMarkedTree { tree, leaf: second[first[leaf]] }, relabel))
    };
    Ok((side(la, eps1)?, side(lb, m.sign)?))
}

/// Opening of the dual with the marked vertex sent to its black leaf.
pub(crate) fn vertex_to_leaf(v: &VertexMarked) -> Result<LeafMarkedTree, BijectionError> {
    let dual = v.map.dual();
    let (tree, corr) = opening(&dual)?;
    let leaf = corr.leaf_of_face(&dual, opposite(v.vertex))?;
    Ok(LeafMarkedTree { tree, leaf })
}

pub(crate) fn leaf_to_vertex(l: &LeafMarkedTree) -> Result<VertexMarked, BijectionError> {
    let (dual, corr) = closure(&l.tree)?;
    let f = corr.face_of_leaf(l.leaf)?;
    Ok(VertexMarked::new(&dual.undual(), opposite(f)))
}

/// Map dart of `M = undual(closure(T))` for an oriented tree edge.
fn tree_edge_to_map(tree: &EulerianTree, edge: usize) -> Result<(PlanarMap, HalfEdge), BijectionError> {
    let (dual, corr) = closure(tree)?;
    let h = corr.map_dart(edge).ok_or(BijectionError::UnknownElement(edge))?;
    Ok((dual.undual(), h))
}

/// Sign of a marked pair: `-` when the two marked vertices have the same
/// color, each map being colored so that its root goes from white to black.
pub(crate) fn pair_sign(pair: &VertexMarkedPair) -> Result<Sign, BijectionError> {
    let color = |v: &VertexMarked| -> Result<Color, BijectionError> {
        Ok(v.map.bipartite_coloring()?[v.vertex])
    };
    Ok(Sign::from_bool(color(&pair.first)? != color(&pair.second)?))
}

/// Slit and sew, computed through the trees: two bipartite maps with a
/// marked vertex each become one map with a marked oriented edge outside
/// its spanning tree, and a sign.
pub fn slit_and_sew(pair: &VertexMarkedPair) -> Result<EdgeMarkedMap, BijectionError> {
    let a = vertex_to_leaf(&pair.first)?;
    let b = vertex_to_leaf(&pair.second)?;
    let m = merge_trees_phi(&a, &b)?;
    let (map, h) = tree_edge_to_map(&m.tree, m.edge)?;
    // the tree sign only selects the rooting of the second tree; the map
    // sign records the colors instead
    Ok(EdgeMarkedMap::new(&map, opposite(h), pair_sign(pair)?))
}

/// Inverse of [`slit_and_sew`].
pub fn cut_and_close(m: &EdgeMarkedMap) -> Result<VertexMarkedPair, BijectionError> {
    let dual = m.map.dual();
    let (tree, corr) = opening(&dual)?;
    if m.edge >= m.map.half_edge_count() {
        return Err(BijectionError::UnknownElement(m.edge));
    }
    let edge = corr.tree_dart(opposite(m.edge));
    if !tree.is_inner_edge(edge) {
        return Err(BijectionError::EdgeInSpanningTree);
    }
    // exactly one of the two tree signs gives a pair with the map's sign
    for sign in [Sign::Plus, Sign::Minus] {
        let (a, b) = split_tree_psi(&EdgeMarkedTree { tree: tree.clone(), edge, sign })?;
        let pair = VertexMarkedPair { first: leaf_to_vertex(&a)?, second: leaf_to_vertex(&b)? };
        if pair_sign(&pair)? == m.sign {
            return Ok(pair);
        }
    }
    unreachable!("both tree signs give the same color relation")
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::enumeration::{
        edge_marked_maps, edge_marked_trees, leaf_marked_trees, vertex_marked_pairs,
    };
    use crate::map::DegreeDistribution;

    fn dists(max_edges: usize) -> Vec<DegreeDistribution> {
        (1..=max_edges).flat_map(DegreeDistribution::with_edges).collect()
    }

    #[test]
    fn two_single_edges_merge_into_a_path() {
        let bb = EulerianTree::from_shape("b(b)").unwrap();
        let a = LeafMarkedTree { tree: bb.clone(), leaf: bb.leaf_dart(0).unwrap() };
        let m = merge_trees_phi(&a, &a).unwrap();
        assert_eq!(m.tree.degree_distribution(), "2".parse().unwrap());
        assert_eq!(split_tree_psi(&m).unwrap(), (a.clone(), a));
    }

    #[test]
    fn tree_merge_is_a_bijection() {
        for d in dists(5) {
            let mut images = BTreeSet::new();
            let mut inputs = 0;
            for (s, t) in d.splits() {
                for a in leaf_marked_trees(&s) {
                    for b in leaf_marked_trees(&t) {
                        let m = merge_trees_phi(&a, &b).unwrap();
                        assert_eq!(m.tree.degree_distribution(), d);
                        assert_eq!(split_tree_psi(&m).unwrap(), (a.clone(), b.clone()));
                        images.insert(m);
                        inputs += 1;
                    }
                }
            }
            let all: BTreeSet<_> = edge_marked_trees(&d).into_iter().collect();
            assert_eq!(images.len(), inputs, "{d}");
            assert_eq!(images, all, "{d}");
        }
    }

    #[test]
    fn map_slit_and_sew_is_a_bijection() {
        for d in dists(4) {
            let mut images = BTreeSet::new();
            let pairs = vertex_marked_pairs(&d);
            for p in &pairs {
                let m = slit_and_sew(p).unwrap();
                assert_eq!(&cut_and_close(&m).unwrap(), p);
                images.insert(m);
            }
            let all: BTreeSet<_> = edge_marked_maps(&d).into_iter().collect();
            assert_eq!(images.len(), pairs.len(), "{d}");
            assert_eq!(images, all, "{d}");
        }
    }
}
