//! Rooted planar maps stored as rotation systems.
//!
//! Half-edges ("darts") are numbered `0..2n`. The two darts of edge `i` are
//! `2i` and `2i + 1`, so the edge involution is `h ^ 1` and is never stored.
//! `rotation[h]` is the next dart counterclockwise around the origin of `h`;
//! the face permutation is `rotation[h ^ 1]` and walks each face with the
//! face on its left.

use std::fmt;

use crate::darts::{invert, orbit, Darts};
use crate::error::MapError;

pub type HalfEdge = usize;

#[inline]
pub fn opposite(h: HalfEdge) -> HalfEdge {
    h ^ 1
}

#[inline]
pub fn edge_of(h: HalfEdge) -> usize {
    h / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }

    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// Which cells a [`DegreeDistribution`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    Faces,
    Vertices,
}

/// `d[i - 1]` is the number of cells of degree `2i`. Trailing zeros are
/// trimmed so equal distributions compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeDistribution(Vec<usize>);

impl DegreeDistribution {
    pub fn new(mut d: Vec<usize>) -> Self {
        while d.last() == Some(&0) {
            d.pop();
        }
        DegreeDistribution(d)
    }

    /// Distribution of a multiset of even degrees.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut d = Vec::new();
        for deg in degrees {
            debug_assert!(deg % 2 == 0 && deg > 0);
            let i = deg / 2;
            if d.len() < i {
                d.resize(i, 0);
            }
            d[i - 1] += 1;
        }
        DegreeDistribution::new(d)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edges, `sum i * d_i`.
    pub fn edges(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &d)| (i + 1) * d).sum()
    }

    /// Number of counted cells, `sum d_i`.
    pub fn faces(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of cells of the other kind, from Euler's formula.
    pub fn vertices(&self) -> usize {
        self.edges() + 2 - self.faces()
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &DegreeDistribution) -> DegreeDistribution {
        let len = self.0.len().max(other.0.len());
        DegreeDistribution::new((0..len).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// All `(s, t)` with `s + t = self`, in lexicographic order of `s`.
    /// Zero parts are included.
    pub fn splits(&self) -> Vec<(DegreeDistribution, DegreeDistribution)> {
        let mut out = Vec::new();
        let mut s = vec![0; self.0.len()];
        loop {
            let t = self.0.iter().zip(&s).map(|(d, s)| d - s).collect();
            out.push((DegreeDistribution::new(s.clone()), DegreeDistribution::new(t)));
            let mut i = 0;
            loop {
                if i == s.len() {
                    return out;
                }
                if s[i] < self.0[i] {
                    s[i] += 1;
                    break;
                }
                s[i] = 0;
                i += 1;
            }
        }
    }

    /// Every distribution with exactly `n` edges, in lexicographic order.
    pub fn with_edges(n: usize) -> Vec<DegreeDistribution> {
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeDistribution>) {
            if left == 0 {
                out.push(DegreeDistribution::new(cur.clone()));
                return;
            }
            if i > left {
                return;
            }
            for c in 0..=left / i {
                cur.push(c);
                rec(i + 1, left - c * i, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        rec(1, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for DegreeDistribution {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let d = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DegreeDistribution::new(d))
    }
}

/// A rooted planar map. Immutable once built; every transformation returns
/// a new map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMap {
    rotation: Vec<HalfEdge>,
    root: Option<HalfEdge>,
}

/// Validate connectivity and planarity of a raw rotation, without a root.
fn check_rotation(rotation: &[HalfEdge]) -> Result<(), MapError> {
    let len = rotation.len();
    if len % 2 != 0 {
        return Err(MapError::NotInvolution);
    }
    let mut seen = vec![false; len];
    for &h in rotation {
        if h >= len || seen[h] {
            return Err(MapError::NotPermutation);
        }
        seen[h] = true;
    }
    if len == 0 {
        return Ok(());
    }
    // connectivity over <rotation, opposite>
    let mut reached = vec![false; len];
    let mut stack = vec![0];
    reached[0] = true;
    let mut count = 1;
    while let Some(h) = stack.pop() {
        for x in [rotation[h], opposite(h)] {
            if !reached[x] {
                reached[x] = true;
                count += 1;
                stack.push(x);
            }
        }
    }
    if count != len {
        return Err(MapError::Disconnected);
    }
    let g = raw_genus(rotation);
    if g != 0 {
        return Err(MapError::NonPlanar { genus: g });
    }
    Ok(())
}

fn count_orbits(len: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; len];
    let mut c = 0;
    for h in 0..len {
        if !seen[h] {
            c += 1;
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                x = f(x);
            }
        }
    }
    c
}

/// `(2 - v + n - f) / 2` for an arbitrary connected rotation with pairing
/// `h ^ 1`. Usable on data that has not been validated.
pub fn raw_genus(rotation: &[HalfEdge]) -> i64 {
    let len = rotation.len();
    let v = count_orbits(len, |h| rotation[h]) as i64;
    let f = count_orbits(len, |h| rotation[opposite(h)]) as i64;
    let n = (len / 2) as i64;
    (2 - v + n - f) / 2
}

impl PlanarMap {
    /// The map with no edges. Only meaningful for counting.
    pub fn empty() -> Self {
        PlanarMap { rotation: Vec::new(), root: None }
    }

    /// Build and validate a rooted map.
    pub fn new(rotation: Vec<HalfEdge>, root: HalfEdge) -> Result<Self, MapError> {
        check_rotation(&rotation)?;
        if root >= rotation.len() {
            return Err(MapError::RootOutOfRange { root, half_edges: rotation.len() });
        }
        Ok(PlanarMap { rotation, root: Some(root) })
    }

    pub(crate) fn from_parts_unchecked(rotation: Vec<HalfEdge>, root: HalfEdge) -> Self {
        debug_assert!(check_rotation(&rotation).is_ok());
        PlanarMap { rotation, root: Some(root) }
    }

    pub fn is_empty(&self) -> bool {
        self.rotation.is_empty()
    }

    pub fn half_edge_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.len() / 2
    }

    pub fn root(&self) -> HalfEdge {
        self.root.expect("operation on the empty map")
    }

    pub fn rotation(&self) -> &[HalfEdge] {
        &self.rotation
    }

    pub fn next(&self, h: HalfEdge) -> HalfEdge {
        self.rotation[h]
    }

    pub fn prev(&self, h: HalfEdge) -> HalfEdge {
        let mut x = h;
        loop {
            let y = self.rotation[x];
            if y == h {
                return x;
            }
            x = y;
        }
    }

    pub fn face_next(&self, h: HalfEdge) -> HalfEdge {
        self.rotation[opposite(h)]
    }

    pub(crate) fn darts(&self) -> Darts {
        Darts::paired(&self.rotation)
    }

    /// Vertex label of every dart (labels in order of first dart).
    pub fn vertex_labels(&self) -> (Vec<usize>, usize) {
        self.darts().vertex_labels()
    }

    pub fn face_labels(&self) -> (Vec<usize>, usize) {
        self.darts().face_labels()
    }

    /// Rotation orbits, in order of their smallest dart.
    pub fn vertices(&self) -> Vec<Vec<HalfEdge>> {
        let mut seen = vec![false; self.rotation.len()];
        let mut out = Vec::new();
        for h in 0..self.rotation.len() {
            if !seen[h] {
                let o = orbit(h, |x| self.rotation[x]);
                for &x in &o {
                    seen[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Vertex orbits in breadth-first order from the root vertex, each
    /// starting at the dart it was entered by.
    pub fn vertices_from_root(&self) -> Vec<Vec<HalfEdge>> {
        let mut seen = vec![false; self.rotation.len()];
        let mut out = Vec::new();
        let mut queue = std::collections::VecDeque::from([self.root()]);
        while let Some(h) = queue.pop_front() {
            if seen[h] {
                continue;
            }
            let o = orbit(h, |x| self.rotation[x]);
            for &x in &o {
                seen[x] = true;
                queue.push_back(opposite(x));
            }
            out.push(o);
        }
        out
    }

    /// Face orbits; the external face (the one containing the root) comes
    /// first and starts at the root.
    pub fn faces(&self) -> Vec<Vec<HalfEdge>> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut seen = vec![false; self.rotation.len()];
        let mut out = Vec::new();
        let starts = std::iter::once(self.root()).chain(0..self.rotation.len());
        for h in starts {
            if !seen[h] {
                let o = orbit(h, |x| self.face_next(x));
                for &x in &o {
                    seen[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        count_orbits(self.rotation.len(), |h| self.rotation[h])
    }

    pub fn face_count(&self) -> usize {
        count_orbits(self.rotation.len(), |h| self.face_next(h))
    }

    pub fn genus(&self) -> i64 {
        if self.is_empty() {
            return 0;
        }
        raw_genus(&self.rotation)
    }

    /// Vertex of `h`'s origin, given as the dart orbit.
    pub fn vertex_of(&self, h: HalfEdge) -> Vec<HalfEdge> {
        orbit(h, |x| self.rotation[x])
    }

    pub fn degree(&self, h: HalfEdge) -> usize {
        self.vertex_of(h).len()
    }

    /// Dual map on the same dart ids: vertices become faces and faces
    /// become vertices. The dual root is the opposite of the root.
    pub fn dual(&self) -> PlanarMap {
        if self.is_empty() {
            return PlanarMap::empty();
        }
        let inv = invert(&self.rotation);
        let rotation = (0..self.rotation.len()).map(|h| opposite(inv[h])).collect();
        PlanarMap { rotation, root: Some(opposite(self.root())) }
    }

    /// Exact inverse of [`PlanarMap::dual`] on the same dart ids.
    pub fn undual(&self) -> PlanarMap {
        if self.is_empty() {
            return PlanarMap::empty();
        }
        let inv = invert(&self.rotation);
        let rotation = (0..self.rotation.len()).map(|h| inv[opposite(h)]).collect();
        PlanarMap { rotation, root: Some(opposite(self.root())) }
    }

    pub fn with_root(&self, root: HalfEdge) -> PlanarMap {
        assert!(root < self.rotation.len());
        PlanarMap { rotation: self.rotation.clone(), root: Some(root) }
    }

    pub fn reverse_root(&self) -> PlanarMap {
        self.with_root(opposite(self.root()))
    }

    /// Two-coloring of the vertices with the root going from white to black,
    /// indexed by dart.
    pub fn bipartite_coloring(&self) -> Result<Vec<Color>, MapError> {
        let root = self.root();
        self.coloring_from(root, Color::White)
    }

    /// Two-coloring with the origin of `h` given color `c`.
    pub fn coloring_from(&self, h: HalfEdge, c: Color) -> Result<Vec<Color>, MapError> {
        let len = self.rotation.len();
        let mut color: Vec<Option<Color>> = vec![None; len];
        let mut stack = vec![(h, c)];
        while let Some((x, c)) = stack.pop() {
            if let Some(old) = color[x] {
                if old != c {
                    return Err(MapError::NotBipartite);
                }
                continue;
            }
            for y in orbit(x, |z| self.rotation[z]) {
                color[y] = Some(c);
                stack.push((opposite(y), c.flip()));
            }
        }
        Ok(color.into_iter().map(|c| c.expect("connected")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        !self.is_empty() && self.bipartite_coloring().is_ok()
    }

    pub fn degree_distribution(&self, mode: DegreeMode) -> Result<DegreeDistribution, MapError> {
        let cells = match mode {
            DegreeMode::Faces => self.faces(),
            DegreeMode::Vertices => self.vertices(),
        };
        let mut degrees = Vec::with_capacity(cells.len());
        for c in cells {
            if c.len() % 2 != 0 {
                return Err(MapError::OddDegree { degree: c.len() });
            }
            degrees.push(c.len());
        }
        Ok(DegreeDistribution::from_degrees(degrees))
    }

    /// Relabel so that traversal from the root determines every id. Returns
    /// the relabeled map and the old-to-new dart map. Two maps are
    /// isomorphic as rooted maps iff their canonical forms are equal.
    pub fn canonical(&self) -> (PlanarMap, Vec<HalfEdge>) {
        if self.is_empty() {
            return (PlanarMap::empty(), Vec::new());
        }
        let (rotation, map) = self.darts().compact_from(self.root());
        (PlanarMap { rotation, root: Some(0) }, map)
    }

    pub fn is_canonical(&self) -> bool {
        self.is_empty() || self.canonical().0 == *self
    }

    /// Byte string identifying the rooted map up to isomorphism.
    pub fn canonical_code(&self) -> Vec<u8> {
        let (c, _) = self.canonical();
        let mut out = Vec::with_capacity(2 + 2 * c.rotation.len());
        out.extend_from_slice(&(c.edge_count() as u16).to_le_bytes());
        for &h in &c.rotation {
            out.extend_from_slice(&(h as u16).to_le_bytes());
        }
        out
    }

    /// Apply a dart relabeling that preserves the pairing `h ^ 1`.
    pub fn relabel(&self, perm: &[HalfEdge]) -> PlanarMap {
        let mut rotation = vec![0; self.rotation.len()];
        for h in 0..self.rotation.len() {
            rotation[perm[h]] = perm[self.rotation[h]];
        }
        PlanarMap { rotation, root: self.root.map(|r| perm[r]) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn single_edge() -> PlanarMap {
        PlanarMap::new(vec![0, 1], 0).unwrap()
    }

    /// Two vertices joined by two parallel edges.
    pub(crate) fn doubled_edge() -> PlanarMap {
        // vertex A: darts 0, 2; vertex B: darts 1, 3
        PlanarMap::new(vec![2, 3, 0, 1], 0).unwrap()
    }

    /// Path on three vertices.
    pub(crate) fn path3() -> PlanarMap {
        // edges 0 = (A, B), 1 = (B, C); B holds darts 1 and 2
        PlanarMap::new(vec![0, 2, 1, 3], 0).unwrap()
    }

    #[test]
    fn single_edge_counts() {
        let m = single_edge();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.genus(), 0);
        assert_eq!(m.faces(), vec![vec![0, 1]]);
    }

    #[test]
    fn interleaved_bouquet_is_rejected() {
        assert_eq!(raw_genus(&[2, 3, 1, 0]), 1);
        assert_eq!(
            PlanarMap::new(vec![2, 3, 1, 0], 0),
            Err(MapError::NonPlanar { genus: 1 })
        );
    }

    #[test]
    fn two_separate_edges_are_disconnected() {
        assert_eq!(PlanarMap::new(vec![0, 1, 2, 3], 0), Err(MapError::Disconnected));
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(PlanarMap::new(vec![0], 0), Err(MapError::NotInvolution));
        assert_eq!(PlanarMap::new(vec![0, 0], 0), Err(MapError::NotPermutation));
        assert!(matches!(PlanarMap::new(vec![0, 1], 2), Err(MapError::RootOutOfRange { .. })));
    }

    #[test]
    fn faces_of_small_maps() {
        let degs = |m: &PlanarMap| {
            let mut d: Vec<_> = m.faces().iter().map(|f| f.len()).collect();
            d.sort();
            d
        };
        assert_eq!(degs(&doubled_edge()), vec![2, 2]);
        assert_eq!(degs(&path3()), vec![4]);
        assert_eq!(doubled_edge().genus(), 0);
    }

    #[test]
    fn dual_of_single_edge_is_a_loop() {
        let d = single_edge().dual();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.face_count(), 2);
        assert_eq!(d.degree(0), 2);
        assert!(!d.is_bipartite());
    }

    #[test]
    fn doubled_edge_is_self_dual() {
        let m = doubled_edge();
        assert_eq!(m.dual().canonical_code(), m.canonical_code());
    }

    #[test]
    fn dual_twice_reverses_root() {
        for m in [single_edge(), doubled_edge(), path3()] {
            let dd = m.dual().dual();
            assert_eq!(dd.canonical_code(), m.reverse_root().canonical_code());
            assert_eq!(m.dual().undual(), m);
        }
    }

    #[test]
    fn colorings() {
        let c = single_edge().bipartite_coloring().unwrap();
        assert_eq!(c, vec![Color::White, Color::Black]);
        assert!(doubled_edge().is_bipartite());
        assert_eq!(single_edge().dual().bipartite_coloring(), Err(MapError::NotBipartite));
    }

    #[test]
    fn distributions() {
        let f = DegreeMode::Faces;
        assert_eq!(doubled_edge().degree_distribution(f).unwrap(), DegreeDistribution::new(vec![2]));
        assert_eq!(path3().degree_distribution(f).unwrap(), DegreeDistribution::new(vec![0, 1]));
        assert_eq!(
            single_edge().degree_distribution(DegreeMode::Vertices),
            Err(MapError::OddDegree { degree: 1 })
        );
    }

    #[test]
    fn canonical_codes() {
        let p = path3();
        let codes: std::collections::BTreeSet<_> =
            (0..4).map(|r| p.with_root(r).canonical_code()).collect();
        assert_eq!(codes.len(), 2);
        let d = doubled_edge();
        let codes: std::collections::BTreeSet<_> =
            (0..4).map(|r| d.with_root(r).canonical_code()).collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn relabel_keeps_code() {
        let p = path3();
        // swap the two edges
        let q = p.relabel(&[2, 3, 0, 1]);
        assert_eq!(p.canonical_code(), q.canonical_code());
    }

    #[test]
    fn distribution_arithmetic() {
        let d = DegreeDistribution::new(vec![1, 1, 0]);
        assert_eq!(d.as_slice(), &[1, 1]);
        assert_eq!((d.edges(), d.faces(), d.vertices()), (3, 2, 3));
        assert_eq!(d.splits().len(), 4);
        assert_eq!(DegreeDistribution::with_edges(3).len(), 3);
        assert_eq!("1,0".parse::<DegreeDistribution>().unwrap(), DegreeDistribution::new(vec![1]));
    }
}
