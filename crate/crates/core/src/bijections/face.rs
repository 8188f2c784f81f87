//! Marked-face bijection. On trees: cut the marked edge of the first tree and
//! graft its two halves onto the two marked leaves of the second. On maps the
//! same operation is transported through duality and opening.

use crate::error::{BijectionError, TreeError};
use crate::map::{opposite, HalfEdge, PlanarMap};
use crate::schaeffer::{closure, opening};
use crate::trees::{EulerianTree, LooseTree, Sign};

use super::marks::VertexMarked;
use super::vertex::{leaf_to_vertex, merge_trees_traced, split_tree_traced, vertex_to_leaf};
use super::{EdgeMarkedTree, LeafMarkedTree};

/// A balanced tree up to the choice between its two balanced rootings,
/// stored as the smaller of the two.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnrootedTree(EulerianTree);

impl UnrootedTree {
    pub fn tree(&self) -> &EulerianTree {
        &self.0
    }
}

pub fn forget_root(t: &EulerianTree) -> UnrootedTree {
    let other = t.balanced_conjugate();
    UnrootedTree(if other < *t { other } else { t.clone() })
}

/// Orient an inner edge from the root: walk the border clockwise from the
/// root leaf, take the edge in the direction it is first met, and reverse
/// it if the other free leaf came first.
pub fn recover_orientation(t: &EulerianTree, edge: usize) -> usize {
    orientation_from(&t.loose(), 0, edge)
}

fn orientation_from(t: &LooseTree, root: usize, edge: usize) -> usize {
    let other = t.free_leaves(root).into_iter().find(|&x| x != root).unwrap();
    let mut passed = false;
    let mut h = t.darts.face_prev(root);
    loop {
        if h == other {
            passed = true;
        } else if h == edge || h == edge ^ 1 {
            return if passed { h ^ 1 } else { h };
        }
        h = t.darts.face_prev(h);
    }
}

/// Which balanced rooting a tree has, read from an oriented edge: true when
/// the root is the first free leaf met clockwise from it.
fn root_bit(t: &LooseTree, root: usize, dart: usize) -> bool {
    t.first_free_from(dart, false) == root
}

/// Root the component of `t` containing `any` at whichever free leaf
/// satisfies `accept` (given the rooted tree and the relabeling).
fn root_where(
    t: &LooseTree,
    any: usize,
    accept: impl Fn(&EulerianTree, &[usize]) -> bool,
) -> Result<(EulerianTree, Vec<usize>), TreeError> {
    for r in t.free_leaves(any) {
        let (tree, relabel) = t.into_tree(r)?;
        if accept(&tree, &relabel) {
            return Ok((tree, relabel));
        }
    }
    Err(TreeError::NotBalanced)
}

/// A balanced tree with a marked inner edge, named by its even dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InnerEdgeTree {
    pub tree: EulerianTree,
    pub edge: usize,
}

/// A balanced tree with two distinct ordered black leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLeafTree {
    pub tree: EulerianTree,
    pub first: usize,
    pub second: usize,
}

/// A balanced tree with two distinct ordered inner edges (even darts).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoEdgeTree {
    pub tree: EulerianTree,
    pub first: usize,
    pub second: usize,
}

fn check_black_leaf(t: &EulerianTree, h: usize) -> Result<(), TreeError> {
    if h < t.dart_count() && t.color(h) == Some(crate::map::Color::Black) {
        Ok(())
    } else {
        Err(TreeError::MarkNotBlackLeaf)
    }
}

fn check_inner(t: &EulerianTree, h: usize) -> Result<(), TreeError> {
    if h < t.dart_count() && t.is_inner_edge(h) {
        Ok(())
    } else {
        Err(TreeError::EdgeIsLeafEdge)
    }
}

/// Gluing: orient the edge of the first tree from its root, cut it, and
/// merge its origin half with the first marked leaf and its end half with
/// the second. The new tree takes the rooting read from the first new edge
/// that the second tree had relative to its first leaf.
pub fn glue_face(a: &InnerEdgeTree, b: &TwoLeafTree) -> Result<TwoEdgeTree, TreeError> {
    if !a.tree.is_balanced() || !b.tree.is_balanced() {
        return Err(TreeError::NotBalanced);
    }
    check_inner(&a.tree, a.edge)?;
    check_black_leaf(&b.tree, b.first)?;
    check_black_leaf(&b.tree, b.second)?;
    if b.first == b.second {
        return Err(TreeError::SameLeafMarkedTwice);
    }
    let e = recover_orientation(&a.tree, a.edge);
    let bit = b.tree.sign_of_mark(b.first)? == Sign::Plus;
    let mut t = a.tree.loose();
    let off = t.append(&b.tree.loose());
    let (h1, h2) = t.cut_edge(e);
    let x1 = t.merge_leaves(h1, b.first + off);
    let x2 = t.merge_leaves(h2, b.second + off);
    let (tree, relabel) = root_where(&t, x1, |tree, rel| root_bit(&tree.loose(), 0, rel[x1]) == bit)?;
    Ok(TwoEdgeTree { tree, first: relabel[x1] & !1, second: relabel[x2] & !1 })
}

/// Inverse of [`glue_face`]. Cutting both edges leaves three parts; the one
/// holding a new leaf from each edge is the second tree, and the two outer
/// halves are joined back into the first.
pub fn cut_face(m: &TwoEdgeTree) -> Result<(InnerEdgeTree, TwoLeafTree), TreeError> {
    if !m.tree.is_balanced() {
        return Err(TreeError::NotBalanced);
    }
    check_inner(&m.tree, m.first)?;
    check_inner(&m.tree, m.second)?;
    if m.first >> 1 == m.second >> 1 {
        return Err(TreeError::EdgesEqual);
    }
    let orig = m.tree.loose();
    let mut t = orig.clone();
    let (a1, b1) = t.cut_edge(m.first);
    let (a2, b2) = t.cut_edge(m.second);
    let (l1, l2) = [(a1, a2), (a1, b2), (b1, a2), (b1, b2)]
        .into_iter()
        .find(|&(x, y)| t.component(x)[y])
        .unwrap();
    let h1 = if l1 == a1 { b1 } else { a1 };
    let h2 = if l2 == a2 { b2 } else { a2 };
    let d1 = if h1 == a1 { m.first } else { m.first ^ 1 };
    let bit = Sign::from_bool(root_bit(&orig, 0, d1));
    let (t2, rel2) = root_where(&t, l1, |tree, rel| tree.sign_of_mark(rel[l1]) == Ok(bit))?;
    let e = t.merge_leaves(h1, h2);
    let (t1, rel1) = root_where(&t, e, |tree, rel| recover_orientation(tree, rel[e]) == rel[e])?;
    Ok((
        InnerEdgeTree { tree: t1, edge: rel1[e] & !1 },
        TwoLeafTree { tree: t2, first: rel2[l1], second: rel2[l2] },
    ))
}

/// The gluing written as one separation followed by two merges. Returns
/// the tree with both new edges oriented away from the first tree.
pub fn glue_by_composition(a: &EdgeMarkedTree, b: &TwoLeafTree) -> Result<(EulerianTree, usize, usize), TreeError> {
    let (p, q) = split_tree_traced(a)?;
    let first = LeafMarkedTree { tree: b.tree.clone(), leaf: b.first };
    let (n, _, rb) = merge_trees_traced(&p.0, &first)?;
    let second = LeafMarkedTree { tree: n.tree.clone(), leaf: rb[b.second] };
    let (t, _, rn) = merge_trees_traced(&q.0, &second)?;
    Ok((t.tree, rn[n.edge], t.edge))
}

/// Rooting-free form of a tree with two marked edges: the smaller of its
/// two balanced rootings, edges named by their even darts.
pub fn unrooted_form(t: &EulerianTree, e1: usize, e2: usize) -> (EulerianTree, usize, usize) {
    let l = t.loose();
    l.free_leaves(0)
        .into_iter()
        .map(|r| {
            let (tree, rel) = l.into_tree(r).expect("valid tree");
            (tree, rel[e1] & !1, rel[e2] & !1)
        })
        .min()
        .unwrap()
}

/// A map with two distinct ordered edges outside its spanning tree, in
/// canonical form with each edge named by its even dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceMarkedLhs {
    pub map: PlanarMap,
    pub first: HalfEdge,
    pub second: HalfEdge,
}

impl FaceMarkedLhs {
    pub fn new(map: &PlanarMap, first: HalfEdge, second: HalfEdge) -> FaceMarkedLhs {
        let (map, relabel) = map.canonical();
        FaceMarkedLhs { map, first: relabel[first] & !1, second: relabel[second] & !1 }
    }
}

/// A map with an edge outside its spanning tree, next to a map with two
/// distinct ordered vertices. Both maps canonical; vertices are named by
/// their smallest dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceMarkedRhs {
    pub edge_map: PlanarMap,
    pub edge: HalfEdge,
    pub vertex_map: PlanarMap,
    pub first: HalfEdge,
    pub second: HalfEdge,
}

impl FaceMarkedRhs {
    pub fn new(
        edge_map: &PlanarMap,
        edge: HalfEdge,
        vertex_map: &PlanarMap,
        first: HalfEdge,
        second: HalfEdge,
    ) -> FaceMarkedRhs {
        let (edge_map, relabel) = edge_map.canonical();
        let u1 = VertexMarked::new(vertex_map, first);
        let u2 = VertexMarked::new(vertex_map, second);
        FaceMarkedRhs { edge_map, edge: relabel[edge] & !1, vertex_map: u1.map, first: u1.vertex, second: u2.vertex }
    }
}

impl std::fmt::Display for FaceMarkedLhs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}\nmark edge={}\nmark edge={}", self.map, self.first / 2, self.second / 2)
    }
}

impl std::fmt::Display for FaceMarkedRhs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}\nmark edge={}\n\n", self.edge_map, self.edge / 2)?;
        write!(f, "{}\nmark vertex={}\nmark vertex={}", self.vertex_map, self.first, self.second)
    }
}

/// Inner tree edge (even dart) of an edge outside the spanning tree.
fn edge_to_tree(map: &PlanarMap, h: HalfEdge) -> Result<(EulerianTree, usize), BijectionError> {
    if h >= map.half_edge_count() {
        return Err(BijectionError::UnknownElement(h));
    }
    let (tree, corr) = opening(&map.dual())?;
    let x = corr.tree_dart(opposite(h));
    if !tree.is_inner_edge(x) {
        return Err(BijectionError::EdgeInSpanningTree);
    }
    Ok((tree, x & !1))
}

/// Gluing carried to maps.
pub fn face_sew_maps(rhs: &FaceMarkedRhs) -> Result<FaceMarkedLhs, BijectionError> {
    let (t1, e) = edge_to_tree(&rhs.edge_map, rhs.edge)?;
    let vertex = |v: HalfEdge| vertex_to_leaf(&VertexMarked { map: rhs.vertex_map.clone(), vertex: v });
    let (a, b) = (vertex(rhs.first)?, vertex(rhs.second)?);
    if a.leaf == b.leaf {
        return Err(BijectionError::SameVertexMarkedTwice);
    }
    let glued = glue_face(
        &InnerEdgeTree { tree: t1, edge: e },
        &TwoLeafTree { tree: a.tree, first: a.leaf, second: b.leaf },
    )?;
    let (dual, corr) = closure(&glued.tree)?;
    let dart = |x: usize| corr.map_dart(x).ok_or(BijectionError::UnknownElement(x));
    Ok(FaceMarkedLhs::new(&dual.undual(), dart(glued.first)?, dart(glued.second)?))
}

/// Cutting carried to maps; inverse of [`face_sew_maps`].
pub fn face_cut_maps(lhs: &FaceMarkedLhs) -> Result<FaceMarkedRhs, BijectionError> {
    let (t, e1) = edge_to_tree(&lhs.map, lhs.first)?;
    let (_, e2) = edge_to_tree(&lhs.map, lhs.second)?;
    if e1 == e2 {
        return Err(BijectionError::EdgesEqual);
    }
    let (a, b) = cut_face(&TwoEdgeTree { tree: t, first: e1, second: e2 })?;
    let (dual, corr) = closure(&a.tree)?;
    let h = corr.map_dart(a.edge).ok_or(BijectionError::UnknownElement(a.edge))?;
    let vertex = |leaf: usize| leaf_to_vertex(&LeafMarkedTree { tree: b.tree.clone(), leaf });
    let (u1, u2) = (vertex(b.first)?, vertex(b.second)?);
    Ok(FaceMarkedRhs::new(&dual.undual(), h, &u1.map, u1.vertex, u2.vertex))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::enumeration::{
        enumerate_balanced_trees, face_marked_maps, face_marked_pairs, glue_inputs, two_edge_trees,
    };
    use crate::map::DegreeDistribution;

    #[test]
    fn conjugates_close_to_reversed_roots() {
        for n in 1..=5 {
            for d in DegreeDistribution::with_edges(n) {
                for t in enumerate_balanced_trees(&d) {
                    let c = t.balanced_conjugate();
                    assert_eq!(forget_root(&t), forget_root(&c));
                    let m = closure(&t).unwrap().0;
                    let mc = closure(&c).unwrap().0;
                    assert_eq!(m.reverse_root().canonical().0, mc.canonical().0);
                }
            }
        }
    }

    #[test]
    fn the_two_rootings_orient_every_edge_both_ways() {
        for n in 1..=5 {
            for d in DegreeDistribution::with_edges(n) {
                for t in enumerate_balanced_trees(&d) {
                    let l = t.loose();
                    let (a, b) = (l.free_leaves(0)[0], l.free_leaves(0)[1]);
                    for e in t.inner_edges() {
                        assert_eq!(orientation_from(&l, a, e), orientation_from(&l, b, e) ^ 1);
                    }
                }
            }
        }
    }

    #[test]
    fn gluing_a_path_and_a_star() {
        let path = EulerianTree::from_shape("b((b))").unwrap();
        let star = EulerianTree::from_shape("b(wbb)").unwrap();
        assert!(path.is_balanced() && star.is_balanced());
        let edge = path.inner_edges()[0];
        let leaves: Vec<usize> = star.leaves().into_iter().filter(|&h| star.color(h) == Some(crate::map::Color::Black)).collect();
        let a = InnerEdgeTree { tree: path, edge };
        let b = TwoLeafTree { tree: star, first: leaves[0], second: leaves[1] };
        let g = glue_face(&a, &b).unwrap();
        assert_eq!(g.tree.degree_distribution(), DegreeDistribution::new(vec![2, 1]));
        assert_eq!(cut_face(&g).unwrap(), (a, b));
    }

    #[test]
    fn glue_and_cut_are_inverse_bijections() {
        for n in 1..=5 {
            for d in DegreeDistribution::with_edges(n) {
                let inputs = glue_inputs(&d);
                let mut images = BTreeSet::new();
                for (a, b) in &inputs {
                    let g = glue_face(a, b).unwrap();
                    assert_eq!(g.tree.degree_distribution(), d);
                    assert_eq!(&cut_face(&g).unwrap(), &(a.clone(), b.clone()));
                    images.insert(g);
                }
                let all: BTreeSet<TwoEdgeTree> = two_edge_trees(&d).into_iter().collect();
                assert_eq!(images.len(), inputs.len());
                assert_eq!(images, all, "{d}");
            }
        }
    }

    #[test]
    fn gluing_is_a_split_and_two_merges() {
        for n in 1..=5 {
            for d in DegreeDistribution::with_edges(n) {
                for (a, b) in glue_inputs(&d) {
                    let g = glue_face(&a, &b).unwrap();
                    let edge = recover_orientation(&a.tree, a.edge);
                    for sign in [Sign::Plus, Sign::Minus] {
                        let m = EdgeMarkedTree { tree: a.tree.clone(), edge, sign };
                        let (t, e1, e2) = glue_by_composition(&m, &b).unwrap();
                        assert_eq!(unrooted_form(&t, e1, e2), unrooted_form(&g.tree, g.first, g.second));
                    }
                }
            }
        }
    }

    #[test]
    fn map_face_bijection_sweeps() {
        for n in 1..=4 {
            for d in DegreeDistribution::with_edges(n) {
                let rhs = face_marked_pairs(&d);
                let lhs = face_marked_maps(&d);
                assert_eq!(rhs.len(), lhs.len(), "{d}");
                let mut images = BTreeSet::new();
                for r in &rhs {
                    let l = face_sew_maps(r).unwrap();
                    assert_eq!(&face_cut_maps(&l).unwrap(), r);
                    images.insert(l);
                }
                assert_eq!(images, lhs.into_iter().collect::<BTreeSet<_>>());
            }
        }
    }

    #[test]
    fn face_count_for_two_one() {
        let d = DegreeDistribution::new(vec![2, 1]);
        assert_eq!(face_marked_maps(&d).len(), 24);
        assert_eq!(face_marked_pairs(&d).len(), 24);
    }
}
