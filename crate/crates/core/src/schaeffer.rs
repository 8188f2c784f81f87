//! Closure and opening between balanced eulerian trees and eulerian maps,
//! and the spanning tree `tau` of a bipartite map.
//!
//! Dart ids are shared: every dart of the closed map is a dart of the tree
//! leaving an inner vertex. A black leaf corresponds to the face of the
//! closed map containing the dart that points at it.

use std::collections::VecDeque;

use crate::darts::NONE;
use crate::error::{BijectionError, TreeError};
use crate::map::{edge_of, opposite, Color, HalfEdge, PlanarMap};
use crate::trees::{EulerianTree, LooseTree};

/// Dart-level dictionary between a tree and the eulerian map it closes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    tree_to_map: Vec<usize>,
    map_to_tree: Vec<usize>,
    /// For each map dart, the black leaf it points at in the tree, if any.
    black_leaf: Vec<usize>,
}

impl Correspondence {
    fn new(tree: &EulerianTree, tree_to_map: Vec<usize>, map_len: usize) -> Self {
        let mut map_to_tree = vec![NONE; map_len];
        let mut black_leaf = vec![NONE; map_len];
        for (t, &m) in tree_to_map.iter().enumerate() {
            if m == NONE {
                continue;
            }
            map_to_tree[m] = t;
            let far = t ^ 1;
            if tree.is_leaf_dart(far) && tree.color(far) == Some(Color::Black) {
                black_leaf[m] = far;
            }
        }
        Correspondence { tree_to_map, map_to_tree, black_leaf }
    }

    /// Map dart of a tree dart leaving an inner vertex.
    pub fn map_dart(&self, tree_dart: usize) -> Option<HalfEdge> {
        self.tree_to_map.get(tree_dart).copied().filter(|&m| m != NONE)
    }

    pub fn tree_dart(&self, map_dart: HalfEdge) -> usize {
        self.map_to_tree[map_dart]
    }

    /// True when the map edge of `map_dart` is a matched leaf pair in the
    /// tree rather than a tree edge.
    pub fn is_leaf_pair(&self, tree: &EulerianTree, map_dart: HalfEdge) -> bool {
        !tree.is_inner_edge(self.map_to_tree[map_dart])
    }

    /// Black leaf of the tree matching the face of `map` through `face_dart`.
    pub fn leaf_of_face(&self, map: &PlanarMap, face_dart: HalfEdge) -> Result<usize, BijectionError> {
        let mut h = face_dart;
        loop {
            if self.black_leaf[h] != NONE {
                return Ok(self.black_leaf[h]);
            }
            h = map.face_next(h);
            if h == face_dart {
                return Err(BijectionError::UnknownElement(face_dart));
            }
        }
    }

    /// A dart of the face matching a black leaf.
    pub fn face_of_leaf(&self, leaf: usize) -> Result<HalfEdge, BijectionError> {
        self.map_dart(leaf ^ 1).ok_or(BijectionError::UnknownElement(leaf))
    }
}

/// Marks that [`transfer_marks`] moves between a map and its tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    /// Face of the eulerian map, by one of its darts.
    Face(HalfEdge),
    /// Black leaf of the tree, by its dart.
    BlackLeaf(usize),
    /// Vertex of the eulerian map, by one of its darts.
    Vertex(HalfEdge),
    /// Inner vertex of the tree, by one of its darts.
    InnerVertex(usize),
    /// Edge of the map, by dart.
    MapEdge(HalfEdge),
    /// Tree edge or matched leaf pair, by the dart leaving an inner vertex.
    TreeDart(usize),
}

/// Move a mark to the other side of the correspondence.
pub fn transfer_marks(
    corr: &Correspondence,
    map: &PlanarMap,
    mark: Mark,
) -> Result<Mark, BijectionError> {
    let unknown = |h| BijectionError::UnknownElement(h);
    Ok(match mark {
        Mark::Face(h) => Mark::BlackLeaf(corr.leaf_of_face(map, h)?),
        Mark::BlackLeaf(l) => Mark::Face(corr.face_of_leaf(l)?),
        Mark::Vertex(h) => Mark::InnerVertex(*corr.map_to_tree.get(h).ok_or(unknown(h))?),
        Mark::InnerVertex(t) => Mark::Vertex(corr.map_dart(t).ok_or(unknown(t))?),
        Mark::MapEdge(h) => Mark::TreeDart(*corr.map_to_tree.get(h).ok_or(unknown(h))?),
        Mark::TreeDart(t) => Mark::MapEdge(corr.map_dart(t).ok_or(unknown(t))?),
    })
}

/// Merge matched leaves pairwise, then the two free leaves; the map is
/// rooted on that last edge, leaving the vertex next to the root leaf.
pub fn closure(tree: &EulerianTree) -> Result<(PlanarMap, Correspondence), TreeError> {
    let mut t = tree.loose();
    let (leaves, word) = t.word_after(0);
    let last = word.len() - 1;
    if !word.is_free(last) {
        return Err(TreeError::NotBalanced);
    }
    for (i, p) in word.partner.iter().enumerate() {
        if let Some(j) = *p {
            if word.letters[i] == Color::White {
                t.merge_leaves(leaves[i], leaves[j]);
            }
        }
    }
    let other = if word.free[0] == last { word.free[1] } else { word.free[0] };
    let root = t.merge_leaves(leaves[last], leaves[other]);
    let (rotation, map) = t.darts.compact_from(root);
    let len = rotation.len();
    let m = PlanarMap::from_parts_unchecked(rotation, 0);
    let corr = Correspondence::new(tree, map, len);
    Ok((m, corr))
}

fn check_eulerian(map: &PlanarMap) -> Result<(), BijectionError> {
    if map.is_empty() {
        return Err(crate::error::MapError::Empty.into());
    }
    if map.vertices().iter().any(|v| v.len() % 2 != 0) {
        return Err(BijectionError::NotEulerian);
    }
    Ok(())
}

struct Opening<'a> {
    map: &'a PlanarMap,
    cut: Vec<bool>,
    intact: usize,
    target: usize,
}

impl Opening<'_> {
    fn new(map: &PlanarMap) -> Opening<'_> {
        Opening {
            map,
            cut: vec![false; map.edge_count()],
            intact: map.edge_count(),
            target: map.vertex_count() - 1,
        }
    }

    fn is_cut(&self, h: HalfEdge) -> bool {
        self.cut[edge_of(h)]
    }

    fn cut(&mut self, h: HalfEdge) {
        self.cut[edge_of(h)] = true;
        self.intact -= 1;
    }

    fn done(&self) -> bool {
        self.intact == self.target
    }

    /// Next intact dart counterclockwise around the end of `h`.
    fn successor(&self, h: HalfEdge) -> HalfEdge {
        let mut x = self.map.next(opposite(h));
        while self.is_cut(x) {
            x = self.map.next(x);
        }
        x
    }

    /// Whether removing the intact edge of `h` disconnects the intact graph.
    fn is_bridge(&self, h: HalfEdge) -> bool {
        let target = opposite(h);
        let mut seen = vec![false; self.map.half_edge_count()];
        let mut stack = vec![h];
        while let Some(x) = stack.pop() {
            for y in self.map.vertex_of(x) {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                if y == target {
                    return false;
                }
                if edge_of(y) != edge_of(h) && !self.is_cut(y) {
                    stack.push(opposite(y));
                }
            }
        }
        !seen[target]
    }
}

/// Inverse of [`closure`]: cut the root edge, then walk successors cutting
/// every edge that is not a bridge until a spanning tree remains.
pub fn opening(map: &PlanarMap) -> Result<(EulerianTree, Correspondence), BijectionError> {
    Ok(opening_traced(map)?.0)
}

/// Opening together with the sequence of darts visited by the
/// leaf-skipping walk.
pub fn opening_traced(
    map: &PlanarMap,
) -> Result<((EulerianTree, Correspondence), Vec<HalfEdge>), BijectionError> {
    check_eulerian(map)?;
    let mut op = Opening::new(map);
    let mut black_side = vec![false; map.half_edge_count()];
    let root = map.root();
    op.cut(root);
    black_side[root] = true;
    black_side[opposite(root)] = true;
    let mut trace = vec![root];
    let limit = 4 * map.half_edge_count() * map.half_edge_count() + 16;
    if !op.done() {
        let mut e = op.successor(root);
        loop {
            trace.push(e);
            assert!(trace.len() < limit, "opening does not terminate");
            if !op.is_bridge(e) {
                op.cut(e);
                black_side[opposite(e)] = true;
                if op.done() {
                    break;
                }
            }
            e = op.successor(e);
        }
    }
    Ok((finish_opening(op, &black_side), trace))
}

fn finish_opening(op: Opening<'_>, black_side: &[bool]) -> (EulerianTree, Correspondence) {
    let map = op.map;
    let root = map.root();
    let mut darts = map.darts();
    let mut color = vec![None; darts.len()];
    let mut root_leaf = NONE;
    for x in 0..map.half_edge_count() {
        if !op.is_cut(x) {
            continue;
        }
        let l = darts.push();
        color.push(Some(if black_side[x] { Color::Black } else { Color::White }));
        darts.opp[x] = l;
        darts.opp[l] = x;
        if x == root {
            root_leaf = l;
        }
    }
    let loose = LooseTree { darts, color };
    let (tree, relabel) =
        EulerianTree::from_loose(&loose, root_leaf).expect("opening yields an eulerian tree");
    let mut tree_to_map = vec![NONE; tree.dart_count()];
    for m in 0..map.half_edge_count() {
        tree_to_map[relabel[m]] = m;
    }
    let corr = Correspondence::new(&tree, tree_to_map, map.half_edge_count());
    (tree, corr)
}

/// The slow opening that also stops on leaves: when the current dart is a
/// leaf the walk moves to the next dart counterclockwise around its origin.
/// Returns the cut edges and the visited darts.
pub fn opening_slow(map: &PlanarMap) -> Result<(Vec<bool>, Vec<HalfEdge>), BijectionError> {
    check_eulerian(map)?;
    let mut op = Opening::new(map);
    let root = map.root();
    let mut trace = Vec::new();
    let mut e = root;
    let limit = 4 * map.half_edge_count() * map.half_edge_count() + 16;
    loop {
        trace.push(e);
        assert!(trace.len() < limit, "slow opening does not terminate");
        if op.is_cut(e) {
            e = map.next(e);
            continue;
        }
        if e == root || !op.is_bridge(e) {
            op.cut(e);
            if op.done() {
                break;
            }
        }
        e = map.next(opposite(e));
    }
    Ok((op.cut, trace))
}

/// Edge subset of a map, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSet(pub Vec<bool>);

impl EdgeSet {
    pub fn contains(&self, edge: usize) -> bool {
        self.0[edge]
    }

    pub fn contains_dart(&self, h: HalfEdge) -> bool {
        self.0[edge_of(h)]
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn complement(&self) -> EdgeSet {
        EdgeSet(self.0.iter().map(|b| !b).collect())
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a] = b;
        true
    }
}

/// Spanning tree of a bipartite map built by the clockwise walk from the
/// root: tree edges are crossed, other edges are added when they close no
/// cycle. Also returns the visited darts.
pub fn tau_traced(map: &PlanarMap) -> Result<(EdgeSet, Vec<HalfEdge>), BijectionError> {
    map.bipartite_coloring()?;
    let (vlab, v) = map.vertex_labels();
    let mut uf = UnionFind((0..v).collect());
    let mut tree = vec![false; map.edge_count()];
    let mut size = 0;
    let mut e = map.root();
    let mut trace = Vec::new();
    let limit = 4 * map.half_edge_count() * map.half_edge_count() + 16;
    while size + 1 < v {
        trace.push(e);
        assert!(trace.len() < limit, "tau does not terminate");
        if tree[edge_of(e)] {
            e = map.prev(opposite(e));
        } else {
            if uf.union(vlab[e], vlab[opposite(e)]) {
                tree[edge_of(e)] = true;
                size += 1;
            }
            e = map.prev(e);
        }
    }
    Ok((EdgeSet(tree), trace))
}

pub fn tau(map: &PlanarMap) -> Result<EdgeSet, BijectionError> {
    Ok(tau_traced(map)?.0)
}

/// Breadth-first spanning tree from the root vertex, scanning each vertex
/// clockwise from the dart it was entered by.
pub fn tau_bfs(map: &PlanarMap) -> Result<EdgeSet, BijectionError> {
    map.bipartite_coloring()?;
    let (vlab, v) = map.vertex_labels();
    let mut seen = vec![false; v];
    let mut tree = vec![false; map.edge_count()];
    let mut queue = VecDeque::new();
    let root = map.root();
    seen[vlab[root]] = true;
    queue.push_back(root);
    while let Some(entry) = queue.pop_front() {
        let mut d = entry;
        loop {
            let far = opposite(d);
            if !seen[vlab[far]] {
                seen[vlab[far]] = true;
                tree[edge_of(d)] = true;
                queue.push_back(far);
            }
            d = map.prev(d);
            if d == entry {
                break;
            }
        }
    }
    Ok(EdgeSet(tree))
}

/// Edges cut by the opening of an eulerian map.
pub fn opening_cuts(map: &PlanarMap) -> Result<EdgeSet, BijectionError> {
    let (tree, corr) = opening(map)?;
    Ok(EdgeSet((0..map.edge_count()).map(|e| corr.is_leaf_pair(&tree, 2 * e)).collect()))
}

/// `tau(M)` is exactly the set of edges cut when opening the dual of `M`.
pub fn tau_dual_check(map: &PlanarMap) -> Result<bool, BijectionError> {
    Ok(tau(map)? == opening_cuts(&map.dual())?)
}

/// Edges joining the two components of `tree` minus the edge `e`.
pub fn cocycle(map: &PlanarMap, tree: &EdgeSet, e: usize) -> EdgeSet {
    assert!(tree.contains(e));
    let (vlab, v) = map.vertex_labels();
    let mut uf = UnionFind((0..v).collect());
    for f in 0..map.edge_count() {
        if f != e && tree.contains(f) {
            uf.union(vlab[2 * f], vlab[2 * f + 1]);
        }
    }
    EdgeSet(
        (0..map.edge_count())
            .map(|f| uf.find(vlab[2 * f]) != uf.find(vlab[2 * f + 1]))
            .collect(),
    )
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_bipartite_maps, enumerate_eulerian_maps};
    use crate::map::DegreeDistribution;

    fn dists(max_edges: usize) -> Vec<DegreeDistribution> {
        (1..=max_edges).flat_map(DegreeDistribution::with_edges).collect()
    }

    #[test]
    fn star_closes_to_two_loops() {
        let t = EulerianTree::from_shape("b(wbb)").unwrap();
        let (m, _) = closure(&t).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (1, 2, 3));
    }

    #[test]
    fn closure_inverts_opening() {
        for d in dists(4) {
            for m in enumerate_eulerian_maps(&d) {
                let (t, _) = opening(&m).unwrap();
                assert_eq!(closure(&t).unwrap().0.canonical().0, m);
            }
        }
    }

    #[test]
    fn slow_opening_cuts_the_same_edges() {
        for d in dists(4) {
            for m in enumerate_eulerian_maps(&d) {
                let (cut, _) = opening_slow(&m).unwrap();
                let (t, corr) = opening(&m).unwrap();
                let fast: Vec<bool> =
                    (0..m.edge_count()).map(|e| corr.is_leaf_pair(&t, 2 * e)).collect();
                assert_eq!(cut, fast);
            }
        }
    }

    #[test]
    fn tau_is_dual_to_opening() {
        for d in dists(4) {
            for m in enumerate_bipartite_maps(&d) {
                assert!(tau_dual_check(&m).unwrap(), "{m:?}");
            }
        }
    }

    #[test]
    fn tau_is_clockwise_bfs() {
        for d in dists(4) {
            for m in enumerate_bipartite_maps(&d) {
                assert_eq!(tau(&m).unwrap(), tau_bfs(&m).unwrap(), "{m:?}");
            }
        }
    }

    #[test]
    fn tau_walks_in_lockstep_with_slow_opening() {
        for d in dists(4) {
            for m in enumerate_bipartite_maps(&d) {
                let (_, walk) = tau_traced(&m).unwrap();
                let (_, slow) = opening_slow(&m.dual()).unwrap();
                let k = walk.len().min(slow.len());
                let dual_walk: Vec<_> = walk[..k].iter().map(|&h| opposite(h)).collect();
                assert_eq!(dual_walk, slow[..k].to_vec(), "{m:?}");
            }
        }
    }
}
