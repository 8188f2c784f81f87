use std::fmt;

use crate::map::{HalfEdge, PlanarMap};
use crate::trees::Sign;

/// A rooted map with a marked vertex, kept in canonical form: the map is
/// canonical and the vertex is named by its smallest dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMarked {
    pub map: PlanarMap,
    pub vertex: HalfEdge,
}

impl VertexMarked {
    pub fn new(map: &PlanarMap, vertex: HalfEdge) -> VertexMarked {
        let (map_c, relabel) = map.canonical();
        let vertex = map.vertex_of(vertex).into_iter().map(|h| relabel[h]).min().unwrap();
        VertexMarked { map: map_c, vertex }
    }

    /// Every vertex marking of `map`.
    pub fn all(map: &PlanarMap) -> Vec<VertexMarked> {
        map.vertices().into_iter().map(|v| VertexMarked::new(map, v[0])).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMarkedPair {
    pub first: VertexMarked,
    pub second: VertexMarked,
}

/// A rooted map with a marked oriented edge (a dart) and a sign, in
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMarkedMap {
    pub map: PlanarMap,
    pub edge: HalfEdge,
    pub sign: Sign,
}

impl EdgeMarkedMap {
    pub fn new(map: &PlanarMap, edge: HalfEdge, sign: Sign) -> EdgeMarkedMap {
        let (map_c, relabel) = map.canonical();
        EdgeMarkedMap { map: map_c, edge: relabel[edge], sign }
    }
}

impl fmt::Display for VertexMarked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\nmark vertex={}", self.map, self.vertex)
    }
}

impl fmt::Display for EdgeMarkedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\nmark edge={} orient={} sign={}", self.map, self.edge / 2, self.edge, self.sign)
    }
}

impl fmt::Display for VertexMarkedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n\n{}", self.first, self.second)
    }
}
