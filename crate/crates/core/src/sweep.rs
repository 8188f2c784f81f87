//! Exhaustive bijectivity sweeps over one degree distribution.

use std::collections::BTreeSet;

use crate::bijections::{cut_and_close_surgical, face_cut_maps, face_sew_maps, slit_and_sew_surgical};
use crate::enumeration::{
    edge_marked_maps, enumerate_balanced_trees, enumerate_eulerian_maps, face_marked_maps, face_marked_pairs,
    vertex_marked_pairs,
};
use crate::error::BijectionError;
use crate::map::DegreeDistribution;
use crate::schaeffer::{closure, opening};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    /// Closure and opening between balanced trees and eulerian maps.
    Schaeffer,
    /// Slit-sew and cut-close.
    Vertex,
    /// Face-sew and face-cut.
    Face,
}

/// Push every element of `domain` through `f`, check `g` brings it back and
/// that the images are exactly `codomain`. Returns the domain size and the
/// verdict.
fn check<A: Ord, B: Ord>(
    domain: Vec<A>,
    codomain: Vec<B>,
    f: impl Fn(&A) -> Result<B, BijectionError>,
    g: impl Fn(&B) -> Result<A, BijectionError>,
) -> Result<(usize, bool), BijectionError> {
    let mut ok = domain.len() == codomain.len();
    let mut images = BTreeSet::new();
    for a in &domain {
        let b = f(a)?;
        ok &= g(&b)? == *a;
        images.insert(b);
    }
    ok &= images == codomain.into_iter().collect();
    Ok((domain.len(), ok))
}

pub fn sweep(which: Which, d: &DegreeDistribution) -> Result<(usize, bool), BijectionError> {
    match which {
        Which::Schaeffer => check(
            enumerate_balanced_trees(d),
            enumerate_eulerian_maps(d).into_iter().map(|m| m.canonical().0).collect(),
            |t| Ok(closure(t)?.0.canonical().0),
            |m| Ok(opening(m)?.0),
        ),
        Which::Vertex => check(
            vertex_marked_pairs(d),
            edge_marked_maps(d),
            |p| Ok(slit_and_sew_surgical(p)?.0),
            cut_and_close_surgical,
        ),
        Which::Face => check(face_marked_pairs(d), face_marked_maps(d), face_sew_maps, face_cut_maps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_pass_to_three_edges() {
        for n in 1..=3 {
            for d in DegreeDistribution::with_edges(n) {
                for which in [Which::Schaeffer, Which::Vertex, Which::Face] {
                    let (count, ok) = sweep(which, &d).unwrap();
                    assert!(ok, "{which:?} {d} over {count}");
                }
            }
        }
    }

    #[test]
    fn vertex_sweep_size_for_one_one() {
        // 4 (f - 1) B = 4 * 1 * 6.
        let (count, ok) = sweep(Which::Vertex, &DegreeDistribution::new(vec![1, 1])).unwrap();
        assert!(ok);
        assert_eq!(count, 24);
    }
}
