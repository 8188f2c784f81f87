//! Loose rotation systems used as scratch space by the surgical operations.
//!
//! A [`Darts`] value holds a rotation (`next`, counterclockwise around the
//! origin vertex) and an explicit involution `opp`. Unlike [`PlanarMap`] the
//! pairing is arbitrary and darts may be marked dead while an operation is in
//! progress; [`Darts::compact`] renumbers the survivors so that the two darts
//! of an edge become `2i` and `2i + 1`.
//!
//! [`PlanarMap`]: crate::map::PlanarMap

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Darts {
    pub next: Vec<usize>,
    pub opp: Vec<usize>,
    pub alive: Vec<bool>,
}

pub(crate) const NONE: usize = usize::MAX;

impl Darts {
    pub fn new(next: Vec<usize>, opp: Vec<usize>) -> Self {
        let alive = vec![true; next.len()];
        Darts { next, opp, alive }
    }

    /// Rotation system with the implicit pairing `h ^ 1`.
    pub fn paired(next: &[usize]) -> Self {
        let opp = (0..next.len()).map(|h| h ^ 1).collect();
        Darts::new(next.to_vec(), opp)
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn push(&mut self) -> usize {
        let id = self.next.len();
        self.next.push(id);
        self.opp.push(NONE);
        self.alive.push(true);
        id
    }

    /// Disjoint union; returns the offset applied to `other`'s darts.
    pub fn append(&mut self, other: &Darts) -> usize {
        let off = self.len();
        self.next.extend(other.next.iter().map(|&h| h + off));
        self.opp
            .extend(other.opp.iter().map(|&h| if h == NONE { NONE } else { h + off }));
        self.alive.extend_from_slice(&other.alive);
        off
    }

    pub fn prev(&self, h: usize) -> usize {
        let mut x = h;
        loop {
            let y = self.next[x];
            if y == h {
                return x;
            }
            x = y;
        }
    }

    pub fn face_next(&self, h: usize) -> usize {
        self.next[self.opp[h]]
    }

    /// Dart walked just before `h` along its face.
    pub fn face_prev(&self, h: usize) -> usize {
        self.opp[self.prev(h)]
    }

    #[cfg(test)]
    pub fn face(&self, h: usize) -> Vec<usize> {
        orbit(h, |x| self.face_next(x))
    }

    pub fn is_leaf(&self, h: usize) -> bool {
        self.next[h] == h
    }

    /// Orbit label per dart for the permutation `f`; dead darts get `NONE`.
    pub fn labels(&self, f: impl Fn(usize) -> usize) -> (Vec<usize>, usize) {
        let mut lab = vec![NONE; self.len()];
        let mut count = 0;
        for h in 0..self.len() {
            if !self.alive[h] || lab[h] != NONE {
                continue;
            }
            let mut x = h;
            loop {
                lab[x] = count;
                x = f(x);
                if x == h {
                    break;
                }
            }
            count += 1;
        }
        (lab, count)
    }

    pub fn vertex_labels(&self) -> (Vec<usize>, usize) {
        self.labels(|x| self.next[x])
    }

    pub fn face_labels(&self) -> (Vec<usize>, usize) {
        self.labels(|x| self.face_next(x))
    }

    /// Identify pairs of removed darts. For each `(r, s)` the darts `r` and
    /// `s` disappear and their opposites become the two halves of one edge.
    /// Each removed dart must lie on a boundary face being sewn and the
    /// pairing must reverse the orientation of the two boundaries.
    pub fn sew(&mut self, pairs: &[(usize, usize)]) {
        let mut partner = vec![NONE; self.len()];
        for &(r, s) in pairs {
            partner[r] = s;
            partner[s] = r;
        }
        let removed = |x: usize| partner[x] != NONE;
        let mut new_next = self.next.clone();
        for h in 0..self.len() {
            if !self.alive[h] || removed(h) {
                continue;
            }
            let x = self.next[h];
            if removed(x) {
                let y = self.next[partner[self.opp[h]]];
                assert!(!removed(y), "sewing across a doubly bounded edge");
                new_next[h] = y;
            }
        }
        let mut new_opp = self.opp.clone();
        for &(r, s) in pairs {
            let (a, b) = (self.opp[r], self.opp[s]);
            new_opp[a] = b;
            new_opp[b] = a;
        }
        for &(r, s) in pairs {
            self.alive[r] = false;
            self.alive[s] = false;
        }
        self.next = new_next;
        self.opp = new_opp;
        self.check();
    }

    /// Renumber live darts so that each edge occupies `2i, 2i + 1`, starting
    /// from `start` (which becomes dart 0) and exploring in breadth-first order
    /// over `next` and `opp`. Darts unreachable from `start` are dropped.
    /// Returns the compacted rotation and the old-to-new map.
    pub fn compact_from(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut new_id = vec![NONE; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        let assign = |h: usize, new_id: &mut Vec<usize>, order: &mut Vec<usize>, q: &mut VecDeque<usize>| {
            if new_id[h] == NONE {
                let o = self.opp[h];
                new_id[h] = order.len();
                order.push(h);
                new_id[o] = order.len();
                order.push(o);
                q.push_back(h);
                q.push_back(o);
            }
        };
        assign(start, &mut new_id, &mut order, &mut queue);
        while let Some(h) = queue.pop_front() {
            let x = self.next[h];
            assign(x, &mut new_id, &mut order, &mut queue);
        }
        let rotation = order.iter().map(|&h| new_id[self.next[h]]).collect();
        (rotation, new_id)
    }

    pub fn check(&self) {
        for h in 0..self.len() {
            if !self.alive[h] {
                continue;
            }
            debug_assert!(self.alive[self.next[h]], "live dart {h} rotates to a dead one");
            debug_assert!(self.alive[self.opp[h]], "live dart {h} paired with a dead one");
            debug_assert_eq!(self.opp[self.opp[h]], h);
        }
    }
}

pub(crate) fn orbit(h: usize, f: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut out = vec![h];
    let mut x = f(h);
    while x != h {
        out.push(x);
        x = f(x);
    }
    out
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_pairs_edges() {
        // one vertex of degree 2 between two leaves, darts scrambled
        let d = Darts::new(vec![0, 3, 2, 1], vec![1, 0, 3, 2]);
        let (rot, map) = d.compact_from(0);
        assert_eq!(rot.len(), 4);
        assert_eq!(map[0], 0);
        assert_eq!(map[1], 1);
        for h in 0..4 {
            assert!(rot[h] < 4);
        }
    }

    #[test]
    fn zip_degree_two_face() {
        // doubled edge between two vertices, sew the two parallel edges
        // into one: result is the single-edge map
        let mut d = Darts::paired(&[2, 3, 0, 1]);
        // faces: (0 3) and (1 2)? compute and sew the face of dart 0
        let f = d.face(0);
        assert_eq!(f.len(), 2);
        d.sew(&[(f[0], f[1])]);
        d.check();
        let live: Vec<_> = (0..4).filter(|&h| d.alive[h]).collect();
        assert_eq!(live.len(), 2);
        let (rot, _) = d.compact_from(live[0]);
        assert_eq!(rot, vec![0, 1]);
    }
}
