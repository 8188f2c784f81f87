//! Exhaustive generation of eulerian trees and planar maps by degree
//! distribution, plus an independent brute force over rotation systems.

use std::collections::BTreeSet;

use crate::bijections::{
    EdgeMarkedMap, EdgeMarkedTree, FaceMarkedLhs, FaceMarkedRhs, InnerEdgeTree, LeafMarkedTree,
    TwoEdgeTree, TwoLeafTree, VertexMarked, VertexMarkedPair,
};
use crate::map::{Color, DegreeDistribution, DegreeMode, PlanarMap};
use crate::schaeffer::{closure, tau};
use crate::trees::{EulerianTree, Sign};

/// Shapes of subtrees hanging below a parent, with the inner degrees left.
fn subtrees(rem: &[usize]) -> Vec<(String, Vec<usize>)> {
    let mut out = Vec::new();
    for (i, &c) in rem.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let k = i + 1;
        let mut r = rem.to_vec();
        r[i] -= 1;
        for (body, r2) in children(2 * k - 1, k - 1, &r) {
            out.push((format!("({body})"), r2));
        }
    }
    out
}

/// Sequences of `slots` children holding exactly `whites` white leaves.
fn children(slots: usize, whites: usize, rem: &[usize]) -> Vec<(String, Vec<usize>)> {
    if slots == 0 {
        return vec![(String::new(), rem.to_vec())];
    }
    let mut out = Vec::new();
    if whites > 0 {
        for (rest, r) in children(slots - 1, whites - 1, rem) {
            out.push((format!("w{rest}"), r));
        }
    }
    if slots > whites {
        for (rest, r) in children(slots - 1, whites, rem) {
            out.push((format!("b{rest}"), r.clone()));
        }
        for (sub, r) in subtrees(rem) {
            for (rest, r2) in children(slots - 1, whites, &r) {
                out.push((format!("{sub}{rest}"), r2));
            }
        }
    }
    out
}

/// Every eulerian tree of distribution `d` (rooted on any black leaf).
pub fn enumerate_trees(d: &DegreeDistribution) -> Vec<EulerianTree> {
    if d.is_zero() {
        return Vec::new();
    }
    let set: BTreeSet<EulerianTree> = subtrees(d.as_slice())
        .into_iter()
        .filter(|(_, r)| r.iter().all(|&c| c == 0))
        .map(|(s, _)| EulerianTree::from_shape(&format!("b{s}")).expect("generated shape is valid"))
        .collect();
    set.into_iter().collect()
}

/// Every balanced eulerian tree of distribution `d`, each exactly once.
pub fn enumerate_balanced_trees(d: &DegreeDistribution) -> Vec<EulerianTree> {
    enumerate_trees(d).into_iter().filter(|t| t.is_balanced()).collect()
}

/// Every eulerian map of vertex distribution `d`, in canonical form.
pub fn enumerate_eulerian_maps(d: &DegreeDistribution) -> Vec<PlanarMap> {
    let set: BTreeSet<PlanarMap> = enumerate_balanced_trees(d)
        .iter()
        .map(|t| closure(t).expect("balanced").0.canonical().0)
        .collect();
    set.into_iter().collect()
}

/// Every bipartite map of face distribution `d`, in canonical form, as
/// duals of closed balanced trees.
pub fn enumerate_bipartite_maps(d: &DegreeDistribution) -> Vec<PlanarMap> {
    let set: BTreeSet<PlanarMap> = enumerate_balanced_trees(d)
        .iter()
        .map(|t| closure(t).expect("balanced").0.undual().canonical().0)
        .collect();
    set.into_iter().collect()
}

/// Balanced trees of `d` with one marked black leaf, every choice.
pub fn leaf_marked_trees(d: &DegreeDistribution) -> Vec<LeafMarkedTree> {
    let mut out = Vec::new();
    for tree in enumerate_balanced_trees(d) {
        for leaf in tree.leaves() {
            if tree.color(leaf) == Some(Color::Black) {
                out.push(LeafMarkedTree { tree: tree.clone(), leaf });
            }
        }
    }
    out
}

/// Balanced trees of `d` with a marked oriented inner edge and a sign.
pub fn edge_marked_trees(d: &DegreeDistribution) -> Vec<EdgeMarkedTree> {
    let mut out = Vec::new();
    for tree in enumerate_balanced_trees(d) {
        for e in tree.inner_edges() {
            for edge in [e, e ^ 1] {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(EdgeMarkedTree { tree: tree.clone(), edge, sign });
                }
            }
        }
    }
    out
}

/// Bipartite maps of `d` with a marked vertex, every choice.
pub fn vertex_marked_maps(d: &DegreeDistribution) -> Vec<VertexMarked> {
    enumerate_bipartite_maps(d).iter().flat_map(VertexMarked::all).collect()
}

/// Bipartite maps of `d` with a marked oriented edge outside `tau` and a
/// sign, every choice.
pub fn edge_marked_maps(d: &DegreeDistribution) -> Vec<EdgeMarkedMap> {
    let mut out = Vec::new();
    for map in enumerate_bipartite_maps(d) {
        let t = tau(&map).expect("bipartite");
        for h in 0..map.half_edge_count() {
            if t.contains_dart(h) {
                continue;
            }
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(EdgeMarkedMap { map: map.clone(), edge: h, sign });
            }
        }
    }
    out
}

/// Every `(first, second)` pair of vertex-marked maps whose distributions
/// add up to `d`.
pub fn vertex_marked_pairs(d: &DegreeDistribution) -> Vec<VertexMarkedPair> {
    let mut out = Vec::new();
    for (s, t) in d.splits() {
        let left = vertex_marked_maps(&s);
        let right = vertex_marked_maps(&t);
        for a in &left {
            for b in &right {
                out.push(VertexMarkedPair { first: a.clone(), second: b.clone() });
            }
        }
    }
    out
}

/// Balanced trees of `d` with two distinct ordered inner edges.
pub fn two_edge_trees(d: &DegreeDistribution) -> Vec<TwoEdgeTree> {
    let mut out = Vec::new();
    for tree in enumerate_balanced_trees(d) {
        let edges = tree.inner_edges();
        for &first in &edges {
            for &second in &edges {
                if first != second {
                    out.push(TwoEdgeTree { tree: tree.clone(), first, second });
                }
            }
        }
    }
    out
}

/// Every input of the gluing whose distributions add up to `d`.
pub fn glue_inputs(d: &DegreeDistribution) -> Vec<(InnerEdgeTree, TwoLeafTree)> {
    let mut out = Vec::new();
    for (s, t) in d.splits() {
        let left: Vec<InnerEdgeTree> = enumerate_balanced_trees(&s)
            .into_iter()
            .flat_map(|tree| tree.inner_edges().into_iter().map(move |edge| InnerEdgeTree { tree: tree.clone(), edge }))
            .collect();
        let mut right = Vec::new();
        for tree in enumerate_balanced_trees(&t) {
            let black: Vec<usize> =
                tree.leaves().into_iter().filter(|&h| tree.color(h) == Some(Color::Black)).collect();
            for &first in &black {
                for &second in &black {
                    if first != second {
                        right.push(TwoLeafTree { tree: tree.clone(), first, second });
                    }
                }
            }
        }
        for a in &left {
            for b in &right {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Edges outside `tau`, by their even dart.
fn non_tree_edges(map: &PlanarMap) -> Vec<usize> {
    let t = tau(map).expect("bipartite");
    (0..map.half_edge_count()).step_by(2).filter(|&h| !t.contains_dart(h)).collect()
}

/// Bipartite maps of `d` with two distinct ordered edges outside `tau`.
pub fn face_marked_maps(d: &DegreeDistribution) -> Vec<FaceMarkedLhs> {
    let mut out = Vec::new();
    for map in enumerate_bipartite_maps(d) {
        let edges = non_tree_edges(&map);
        for &first in &edges {
            for &second in &edges {
                if first != second {
                    out.push(FaceMarkedLhs { map: map.clone(), first, second });
                }
            }
        }
    }
    out
}

/// Every edge-marked map next to a map with two distinct ordered vertices,
/// with distributions adding up to `d`.
pub fn face_marked_pairs(d: &DegreeDistribution) -> Vec<FaceMarkedRhs> {
    let mut out = Vec::new();
    for (s, t) in d.splits() {
        let right = enumerate_bipartite_maps(&t);
        for edge_map in enumerate_bipartite_maps(&s) {
            for edge in non_tree_edges(&edge_map) {
                for vertex_map in &right {
                    let vs = VertexMarked::all(vertex_map);
                    for u1 in &vs {
                        for u2 in &vs {
                            if u1 != u2 {
                                out.push(FaceMarkedRhs {
                                    edge_map: edge_map.clone(),
                                    edge,
                                    vertex_map: vertex_map.clone(),
                                    first: u1.vertex,
                                    second: u2.vertex,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All rotations on `2n` darts, fed to `visit`. Heap's algorithm; only
/// sensible for `n <= 5`.
pub fn for_each_rotation(n: usize, mut visit: impl FnMut(&[usize])) {
    let len = 2 * n;
    let mut p: Vec<usize> = (0..len).collect();
    let mut c = vec![0; len];
    visit(&p);
    let mut i = 0;
    while i < len {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            visit(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Rooted planar bipartite maps of distribution `d` found by trying every
/// rotation on `2n` darts with root 0, deduplicated by canonical form.
pub fn brute_force_bipartite_maps(d: &DegreeDistribution) -> BTreeSet<PlanarMap> {
    let mut out = BTreeSet::new();
    let n = d.edges();
    if n == 0 {
        return out;
    }
    for_each_rotation(n, |rot| {
        if let Ok(m) = PlanarMap::new(rot.to_vec(), 0) {
            if m.is_bipartite() && m.degree_distribution(DegreeMode::Faces).as_ref() == Ok(d) {
                out.insert(m.canonical().0);
            }
        }
    });
    out
}

/// Count of rooted bipartite maps by pure counting over labeled rotations:
/// every rooted map has exactly `2^n n! / 2n` labelings with root 0.
pub fn brute_force_count(d: &DegreeDistribution) -> u64 {
    let n = d.edges();
    if n == 0 {
        return 0;
    }
    let mut labeled = 0u64;
    for_each_rotation(n, |rot| {
        if crate::map::raw_genus(rot) != 0 {
            return;
        }
        if let Ok(m) = PlanarMap::new(rot.to_vec(), 0) {
            if m.is_bipartite() && m.degree_distribution(DegreeMode::Faces).as_ref() == Ok(d) {
                labeled += 1;
            }
        }
    });
    let centralizer: u64 = (1..=n as u64).product::<u64>() << n;
    labeled * (2 * n as u64) / centralizer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schaeffer::opening;

    fn d(s: &str) -> DegreeDistribution {
        s.parse().unwrap()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for (s, b) in [("1", 1), ("2", 1), ("0,1", 2), ("1,1", 6), ("2,1", 12), ("0,0,1", 5)] {
            let dist = d(s);
            assert_eq!(enumerate_bipartite_maps(&dist).len(), b, "{s}");
            assert_eq!(brute_force_count(&dist), b as u64, "{s}");
            let brute = brute_force_bipartite_maps(&dist);
            let ours: BTreeSet<_> = enumerate_bipartite_maps(&dist).into_iter().collect();
            assert_eq!(brute, ours, "{s}");
        }
    }

    #[test]
    fn opening_inverts_closure() {
        for s in ["1", "2", "0,1", "1,1", "2,1", "0,0,1", "1,0,1", "3,0,1", "2,2"] {
            for t in enumerate_balanced_trees(&d(s)) {
                let (m, _) = closure(&t).unwrap();
                let (back, _) = opening(&m).unwrap();
                assert_eq!(back, t, "{s}: {}", t.shape());
            }
        }
    }
}
