//! The two bijections: marked vertices (merging trees, slit and sew) and
//! marked faces (gluing and cutting).

mod face;
mod marks;
mod surgery;
mod vertex;

pub use face::{
    cut_face, face_cut_maps, face_sew_maps, forget_root, glue_by_composition, glue_face,
    recover_orientation, unrooted_form, FaceMarkedLhs, FaceMarkedRhs, InnerEdgeTree, TwoEdgeTree,
    TwoLeafTree, UnrootedTree,
};
pub use marks::{EdgeMarkedMap, VertexMarked, VertexMarkedPair};
pub use surgery::{cut_and_close_surgical, slit_and_sew_surgical, SlitSewTrace};
pub(crate) use vertex::split_tree_traced;
pub use vertex::{cut_and_close, merge_trees_phi, slit_and_sew, split_tree_psi, EdgeMarkedTree, LeafMarkedTree};
