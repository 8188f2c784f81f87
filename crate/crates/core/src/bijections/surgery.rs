//! Slit and sew, and cut and close, performed directly on rotation systems.
//! These are independent of the tree route in `vertex` and the two are
//! checked against each other.

use std::collections::VecDeque;

use crate::darts::Darts;
use crate::error::BijectionError;
use crate::map::{opposite, Color, HalfEdge, PlanarMap};
use crate::schaeffer::{tau, EdgeSet};
use crate::trees::Sign;

use super::marks::{EdgeMarkedMap, VertexMarked, VertexMarkedPair};

/// Darts of the path in `tree` from the origin of `from` to the vertex
/// labelled `target`.
pub(crate) fn tree_path(map: &PlanarMap, tree: &EdgeSet, from: HalfEdge, target: usize) -> Vec<HalfEdge> {
    let (vlab, v) = map.vertex_labels();
    let mut via = vec![None; v];
    let mut seen = vec![false; v];
    seen[vlab[from]] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(h) = queue.pop_front() {
        for d in map.vertex_of(h) {
            let far = vlab[opposite(d)];
            if tree.contains_dart(d) && !seen[far] {
                seen[far] = true;
                via[far] = Some(d);
                queue.push_back(opposite(d));
            }
        }
    }
    let mut path = Vec::new();
    let mut x = target;
    while let Some(d) = via[x] {
        path.push(d);
        x = vlab[d];
    }
    path.reverse();
    path
}

/// Path of the spanning tree from `v` to the farther end of the root edge;
/// it always ends with the root edge.
fn root_path(map: &PlanarMap, v: HalfEdge) -> Vec<HalfEdge> {
    let tree = tau(map).expect("bipartite");
    let (vlab, _) = map.vertex_labels();
    let root = map.root();
    let a = tree_path(map, &tree, v, vlab[root]);
    let b = tree_path(map, &tree, v, vlab[opposite(root)]);
    if a.len() > b.len() {
        a
    } else {
        b
    }
}

/// Slit the path `g` (darts in `d`, starting at the marked vertex). Returns
/// the hole darts in face order starting at the marked vertex.
fn slit(d: &mut Darts, g: &[usize]) -> Vec<usize> {
    let k = g.len();
    let gp: Vec<usize> = g.iter().map(|&x| d.opp[x]).collect();
    let p: Vec<usize> = (0..k).map(|_| d.push()).collect();
    let q: Vec<usize> = (0..k).map(|_| d.push()).collect();
    let insert_before = |d: &mut Darts, new: usize, at: usize| {
        let pre = d.prev(at);
        d.next[pre] = new;
        d.next[new] = at;
    };
    insert_before(d, p[0], g[0]);
    insert_before(d, q[k - 1], gp[k - 1]);
    for j in 0..k - 1 {
        // vertex between g[j] and g[j + 1] splits in two
        let pre_g = d.prev(g[j + 1]);
        let pre_gp = d.prev(gp[j]);
        d.next[pre_g] = p[j + 1];
        d.next[p[j + 1]] = gp[j];
        d.next[pre_gp] = q[j];
        d.next[q[j]] = g[j + 1];
    }
    for j in 0..k {
        d.opp[g[j]] = q[j];
        d.opp[q[j]] = g[j];
        d.opp[p[j]] = gp[j];
        d.opp[gp[j]] = p[j];
    }
    g.iter().copied().chain(gp.iter().rev().copied()).collect()
}

/// Choices left open by the informal description, fixed by agreement with
/// the tree route.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Conventions {
    /// The marked vertex of the first map meets the vertex after (`true`)
    /// or before the marked vertex of the second along its hole.
    pub after: bool,
    /// Root of the sewn cycle points along the first map's root (`false`)
    /// or against it.
    pub root_against: bool,
    /// Sign is `-` when the marked vertices share a color (`false`), or
    /// when they differ.
    pub sign_flip: bool,
    /// Inherited second root reversed when the colors were swapped.
    pub inherit_by_color: bool,
}

pub(crate) const CONVENTIONS: Conventions =
    Conventions { after: true, root_against: false, sign_flip: false, inherit_by_color: true };

/// Intermediate data of a slit-and-sew run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlitSewTrace {
    /// The two paths to the far root ends, as darts of each input map.
    pub paths: [Vec<HalfEdge>; 2],
    /// Number of slit edges on each side.
    pub k: usize,
    pub sign: Sign,
}

fn color_of(map: &PlanarMap, h: HalfEdge) -> Color {
    map.bipartite_coloring().expect("bipartite")[h]
}

/// Slit and sew on rotation systems.
pub fn slit_and_sew_surgical(
    pair: &VertexMarkedPair,
) -> Result<(EdgeMarkedMap, SlitSewTrace), BijectionError> {
    slit_and_sew_with(pair, CONVENTIONS)
}

pub(crate) fn slit_and_sew_with(
    pair: &VertexMarkedPair,
    conv: Conventions,
) -> Result<(EdgeMarkedMap, SlitSewTrace), BijectionError> {
    let (m1, v1) = (&pair.first.map, pair.first.vertex);
    let (m2, v2) = (&pair.second.map, pair.second.vertex);
    for m in [m1, m2] {
        m.bipartite_coloring()?;
    }
    let p1 = root_path(m1, v1);
    let p2 = root_path(m2, v2);
    let k = p1.len().min(p2.len());
    let same = color_of(m1, v1) == color_of(m2, v2);
    let sign = Sign::from_bool(same == conv.sign_flip);

    let mut d = m1.darts();
    let off = d.append(&m2.darts());
    let g2: Vec<usize> = p2[..k].iter().map(|&h| h + off).collect();
    let a = slit(&mut d, &p1[..k]);
    let b = slit(&mut d, &g2);
    let len = 2 * k;
    // 0-based: a[j] is glued to b[(c - 2 - j) mod len]
    let c = if conv.after { 2 } else { 0 };
    let pairs: Vec<(usize, usize)> =
        (0..len).map(|j| (a[j], b[(c + 2 * len - 2 - j) % len])).collect();
    let (mark, cycle_pos) = if conv.after {
        (d.opp[b[0]], 0)
    } else {
        (d.opp[a[len - 1]], len - 1)
    };
    let opp_before = d.opp.clone();
    d.sew(&pairs);
    let root = if p1.len() > k {
        m1.root()
    } else if p2.len() > k {
        // keep the root white to black in the first map's coloring
        let even = (p2.len() - k) % 2 == 0;
        if same != (even == conv.inherit_by_color) {
            d.opp[m2.root() + off]
        } else {
            m2.root() + off
        }
    } else {
        // the glued edge opposite the marked one: a copy of the first
        // map's root edge, oriented like it
        let j = (cycle_pos + k) % len;
        let s = opp_before[a[j]];
        // a[k] is the reverse of the root edge on the path, so its opposite
        // runs along the path
        let s_along_path = j == k;
        let root_along_path = m1.root() == p1[k - 1];
        let forward = if s_along_path == root_along_path { s } else { d.opp[s] };
        if conv.root_against {
            d.opp[forward]
        } else {
            forward
        }
    };
    let (rotation, relabel) = d.compact_from(root);
    let map = PlanarMap::new(rotation, 0)?;
    let out = EdgeMarkedMap::new(&map, relabel[mark], sign);
    Ok((out, SlitSewTrace { paths: [p1, p2], k, sign }))
}

/// Darts reachable from `h` through rotations and pairings.
fn reach(d: &Darts, h: usize) -> Vec<bool> {
    let mut seen = vec![false; d.len()];
    let mut stack = vec![h];
    seen[h] = true;
    while let Some(x) = stack.pop() {
        for y in [d.next[x], d.opp[x]] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Cut along the closed walk `c` (darts of a simple cycle). The original
/// darts stay on the left copy; returns the new right-hand darts `(r, rp)`
/// where `r[j]` leaves the right copy of `origin(c[j])` and `rp[j]` is its
/// opposite.
fn cut_cycle(d: &mut Darts, c: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = c.len();
    let r: Vec<usize> = (0..len).map(|_| d.push()).collect();
    let rp: Vec<usize> = (0..len).map(|_| d.push()).collect();
    for j in 0..len {
        d.opp[r[j]] = rp[j];
        d.opp[rp[j]] = r[j];
    }
    for j in 0..len {
        let fwd = c[j];
        let back = d.opp[c[(j + len - 1) % len]];
        let first_right = d.next[back];
        let last_right = d.prev(fwd);
        let into = rp[(j + len - 1) % len];
        d.next[back] = fwd;
        if first_right == fwd {
            d.next[into] = r[j];
        } else {
            d.next[into] = first_right;
            d.next[last_right] = r[j];
        }
        d.next[r[j]] = into;
    }
    (r, rp)
}

/// Zip a hole given in face order from its first vertex: `hole[j]` is sewn
/// to `hole[len - 1 - j]`.
fn zip_pairs(hole: &[usize]) -> Vec<(usize, usize)> {
    let len = hole.len();
    (0..len / 2).map(|j| (hole[j], hole[len - 1 - j])).collect()
}

/// Cut and close on rotation systems.
pub fn cut_and_close_surgical(m: &EdgeMarkedMap) -> Result<VertexMarkedPair, BijectionError> {
    let map = &m.map;
    let e = m.edge;
    if e >= map.half_edge_count() {
        return Err(BijectionError::UnknownElement(e));
    }
    let coloring = map.bipartite_coloring()?;
    let t = tau(map)?;
    if t.contains_dart(e) {
        return Err(BijectionError::EdgeInSpanningTree);
    }
    let (vlab, _) = map.vertex_labels();
    let mut c = vec![e];
    c.extend(tree_path(map, &t, opposite(e), vlab[e]));
    let len = c.len();
    let half = len / 2;
    let root = map.root();
    let on_cycle = c.iter().position(|&h| h == root || opposite(h) == root);

    let mut d = map.darts();
    let (r, rp) = cut_cycle(&mut d, &c);
    let left = reach(&d, c[0]);
    let hole2: Vec<usize> = (0..len).map(|i| rp[(len - i) % len]).collect();
    let mut pairs = zip_pairs(&c);
    pairs.extend(zip_pairs(&hole2));
    let opp_before = d.opp.clone();
    d.sew(&pairs);

    let v1 = opp_before[c[len - 1]];
    let v2 = r[1 % len];
    // last zipped edges, as a kept dart of each
    let last1 = opp_before[c[half - 1]];
    let last2 = opp_before[hole2[half - 1]];
    let swap = m.sign == Sign::Minus;
    let base = coloring.len();
    let origin_color = |x: usize| -> Color {
        if x < base {
            coloring[x]
        } else if x < base + len {
            coloring[c[x - base]]
        } else {
            coloring[opposite(c[x - base - len])]
        }
    };
    let orient = |h: usize, flip: bool| -> usize {
        if (origin_color(h) == Color::White) != flip {
            h
        } else {
            d.opp[h]
        }
    };
    let build = |root: usize, mark: usize| -> Result<VertexMarked, BijectionError> {
        let (rotation, relabel) = d.compact_from(root);
        let map = PlanarMap::new(rotation, 0)?;
        Ok(VertexMarked::new(&map, relabel[mark]))
    };
    let (root1, root2) = match on_cycle {
        Some(j) => {
            let along = if c[j] == root { opp_before[c[len - 1 - j]] } else { opp_before[c[j]] };
            (along, orient(last2, swap))
        }
        None if left[root] => (root, orient(last2, swap)),
        None => {
            // the inherited root is reversed exactly when the sign and the
            // parity of the overshoot disagree
            let mut found = None;
            for cand in [root, d.opp[root]] {
                let (rotation, relabel) = d.compact_from(cand);
                let m2 = PlanarMap::new(rotation, 0)?;
                let even = (root_path(&m2, relabel[v2]).len() - half) % 2 == 0;
                if (cand != root) == (swap != even) {
                    found = Some((orient(last1, even), cand));
                }
            }
            found.ok_or(BijectionError::UnknownElement(root))?
        }
    };
    Ok(VertexMarkedPair { first: build(root1, v1)?, second: build(root2, v2)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{cut_and_close, slit_and_sew};
    use crate::enumeration::{edge_marked_maps, vertex_marked_pairs};
    use crate::map::DegreeDistribution;

    #[test]
    fn slit_and_sew_matches_tree_route() {
        for n in 1..=4 {
            for d in DegreeDistribution::with_edges(n) {
                for p in vertex_marked_pairs(&d) {
                    let (got, trace) = slit_and_sew_surgical(&p).unwrap();
                    assert_eq!(got, slit_and_sew(&p).unwrap(), "{d}");
                    assert!(trace.k >= 1);
                }
            }
        }
    }

    #[test]
    fn cut_and_close_matches_tree_route() {
        for n in 1..=4 {
            for d in DegreeDistribution::with_edges(n) {
                for m in edge_marked_maps(&d) {
                    assert_eq!(cut_and_close_surgical(&m).unwrap(), cut_and_close(&m).unwrap(), "{d}");
                }
            }
        }
    }

    #[test]
    fn cut_and_close_rejects_tree_edges() {
        let d = DegreeDistribution::new(vec![2]);
        let m = &edge_marked_maps(&d)[0];
        let root = EdgeMarkedMap { edge: m.map.root(), ..m.clone() };
        assert!(matches!(cut_and_close_surgical(&root), Err(BijectionError::EdgeInSpanningTree)));
    }

    #[test]
    fn cutting_a_double_edge_gives_two_single_edges() {
        let d = DegreeDistribution::new(vec![2]);
        for m in edge_marked_maps(&d) {
            let p = cut_and_close_surgical(&m).unwrap();
            assert_eq!(p.first.map.edge_count(), 1);
            assert_eq!(p.second.map.edge_count(), 1);
        }
    }
}
