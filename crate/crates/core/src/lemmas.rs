//! Structural facts the bijections rest on, as exhaustive checks. Each
//! check returns how many cases it examined, or a description of the first
//! counterexample.

use crate::bijections::EdgeMarkedTree;
use crate::darts::NONE;
use crate::enumeration::{edge_marked_trees, enumerate_balanced_trees, enumerate_eulerian_maps, enumerate_trees};
use crate::map::{Color, DegreeDistribution};
use crate::schaeffer::{cocycle, opening_cuts};
use crate::trees::{EulerianTree, Sign};

pub type Checked = Result<usize, String>;

/// In an eulerian map every cocycle of the opened spanning tree has even
/// size.
pub fn cocycles_are_even(d: &DegreeDistribution) -> Checked {
    let mut cases = 0;
    for map in enumerate_eulerian_maps(d) {
        let tree = opening_cuts(&map).map_err(|e| e.to_string())?.complement();
        for e in (0..map.edge_count()).filter(|&e| tree.contains(e)) {
            let c = cocycle(&map, &tree, e);
            if c.len() % 2 != 0 {
                return Err(format!("odd cocycle of size {} at edge {e}", c.len()));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Matched leaf pairs, as (white dart, black dart).
fn matching(t: &EulerianTree) -> Vec<(usize, usize)> {
    let leaves = t.leaves();
    let w = t.word();
    (0..leaves.len())
        .filter(|&i| w.letters[i] == Color::White)
        .map(|i| (leaves[i], leaves[w.partner[i].unwrap()]))
        .collect()
}

fn partner_of(t: &EulerianTree, leaf: usize) -> Option<usize> {
    matching(t).into_iter().find_map(|(w, b)| match () {
        _ if w == leaf => Some(b),
        _ if b == leaf => Some(w),
        _ => None,
    })
}

/// Separating a tree keeps every matched pair whose bracket does not
/// enclose a side of the cut edge.
pub fn leaf_matching_is_stable(d: &DegreeDistribution) -> Checked {
    let mut cases = 0;
    for m in edge_marked_trees(d) {
        cases += stable_pairs(&m)?;
    }
    Ok(cases)
}

fn stable_pairs(m: &EdgeMarkedTree) -> Checked {
    let t = &m.tree;
    let darts = t.loose().darts;
    let len = t.dart_count();
    let mut pos = vec![0; len];
    let mut h = 0;
    for i in 0..len {
        pos[h] = i;
        h = darts.face_next(h);
    }
    let (a, b) = crate::bijections::split_tree_traced(m).map_err(|e| e.to_string())?;
    let mut cases = 0;
    for (w, bl) in matching(t) {
        let span = (pos[bl] + len - pos[w]) % len;
        let inside = |x: usize| {
            let k = (pos[x] + len - pos[w]) % len;
            k > 0 && k < span
        };
        if inside(m.edge) || inside(m.edge ^ 1) {
            continue;
        }
        let kept = [&a, &b].into_iter().find(|(_, rel)| rel[w] != NONE && rel[bl] != NONE);
        let ok = kept.is_some_and(|(part, rel)| partner_of(&part.tree, rel[w]) == Some(rel[bl]));
        if !ok {
            return Err(format!("pair ({w}, {bl}) not kept when cutting {}", m.edge));
        }
        cases += 1;
    }
    Ok(cases)
}

/// Every eulerian tree has exactly two free leaves, both black, and
/// exactly two balanced rootings.
pub fn two_free_leaves(d: &DegreeDistribution) -> Checked {
    let mut cases = 0;
    for t in enumerate_trees(d) {
        let w = t.word();
        let unmatched = w.partner.iter().filter(|p| p.is_none()).count();
        if unmatched != 2 || w.free.iter().any(|&i| w.letters[i] != Color::Black) {
            return Err(format!("tree {} has {unmatched} unmatched leaves", t.shape()));
        }
        let balanced = t
            .leaves()
            .into_iter()
            .filter(|&l| t.color(l) == Some(Color::Black) && t.reroot(l).unwrap().0.is_balanced())
            .count();
        if balanced != 2 {
            return Err(format!("tree {} has {balanced} balanced rootings", t.shape()));
        }
        cases += 1;
    }
    Ok(cases)
}

/// Rerooting a balanced tree at a marked black leaf, with a sign, is a
/// bijection onto trees rooted at any black leaf times a sign.
pub fn rerooting_cardinality(d: &DegreeDistribution) -> Checked {
    let mut images = std::collections::BTreeSet::new();
    let mut cases = 0;
    for t in enumerate_balanced_trees(d) {
        for l in t.leaves() {
            if t.color(l) != Some(Color::Black) {
                continue;
            }
            let (r, sign) = t.reroot_with_sign(l).map_err(|e| e.to_string())?;
            let (back, mark) = r.unreroot(sign);
            if back != t || mark != l {
                return Err(format!("rerooting {} at {l} does not invert", t.shape()));
            }
            images.insert((r, sign));
            cases += 1;
        }
    }
    let all = enumerate_trees(d);
    if images.len() != cases || cases != 2 * all.len() {
        return Err(format!("{cases} marked balanced trees against {} rooted trees", all.len()));
    }
    let signs = [Sign::Plus, Sign::Minus];
    if !all.iter().all(|t| signs.iter().all(|&s| images.contains(&(t.clone(), s)))) {
        return Err("rerooting misses a signed tree".into());
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dists(max: usize) -> Vec<DegreeDistribution> {
        (1..=max).flat_map(DegreeDistribution::with_edges).collect()
    }

    #[test]
    fn lemmas_hold_up_to_four_edges() {
        for d in dists(4) {
            cocycles_are_even(&d).unwrap();
            leaf_matching_is_stable(&d).unwrap();
            two_free_leaves(&d).unwrap();
            rerooting_cardinality(&d).unwrap();
        }
    }

    #[test]
    fn star_has_two_balanced_rootings() {
        let d = DegreeDistribution::new(vec![0, 1]);
        assert_eq!(two_free_leaves(&d), Ok(enumerate_trees(&d).len()));
    }
}
