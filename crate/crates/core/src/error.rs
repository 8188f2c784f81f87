use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("half-edge count is odd, the edge pairing is not an involution")]
    NotInvolution,
    #[error("rotation is not a permutation of the half-edges")]
    NotPermutation,
    #[error("map is disconnected")]
    Disconnected,
    #[error("map is not planar (genus {genus})")]
    NonPlanar { genus: i64 },
    #[error("root {root} out of range for {half_edges} half-edges")]
    RootOutOfRange { root: usize, half_edges: usize },
    #[error("map is not bipartite")]
    NotBipartite,
    #[error("cell of odd degree {degree}")]
    OddDegree { degree: usize },
    #[error("operation needs a non-empty map")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("structure is not a tree")]
    NotATree,
    #[error("inner vertex of odd degree {degree}")]
    OddInnerDegree { degree: usize },
    #[error("inner vertex of degree {degree} has {found} white leaves, expected {expected}")]
    WhiteLeafCountMismatch { degree: usize, found: usize, expected: usize },
    #[error("root is not a black leaf")]
    RootNotBlackLeaf,
    #[error("colors must be given exactly on leaves")]
    ColorsNotOnLeaves,
    #[error("tree has no inner vertex")]
    NoInnerVertex,
    #[error("marked element is not a black leaf")]
    MarkNotBlackLeaf,
    #[error("tree is not balanced")]
    NotBalanced,
    #[error("edge is a leaf edge")]
    EdgeIsLeafEdge,
    #[error("the two marked edges are equal")]
    EdgesEqual,
    #[error("the same leaf is marked twice")]
    SameLeafMarkedTwice,
    #[error("leaf position {0} out of range")]
    LeafOutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("map is not eulerian")]
    NotEulerian,
    #[error("half-edge {0} does not exist")]
    MarkNotVertex(usize),
    #[error("edge belongs to the spanning tree")]
    EdgeInSpanningTree,
    #[error("unknown element {0}")]
    UnknownElement(usize),
    #[error("marked edges must be distinct")]
    EdgesEqual,
    #[error("marked vertices must be distinct")]
    SameVertexMarkedTwice,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}
