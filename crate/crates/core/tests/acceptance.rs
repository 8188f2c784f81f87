//! Acceptance criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigUint;
use slitsew::bijections::{cut_and_close, cut_and_close_surgical, slit_and_sew, slit_and_sew_surgical};
use slitsew::enumeration::{
    brute_force_bipartite_maps, brute_force_count, edge_marked_maps, enumerate_balanced_trees,
    enumerate_bipartite_maps, enumerate_eulerian_maps, vertex_marked_pairs,
};
use slitsew::identities::{derivation, verify, CountTable, Identity};
use slitsew::lemmas;
use slitsew::schaeffer::{closure, opening, tau, tau_bfs, tau_dual_check};
use slitsew::sweep::{sweep, Which};
use slitsew::{Count, DegreeDistribution};

type Outcome = Result<String, String>;

fn dists(max: usize) -> Vec<DegreeDistribution> {
    (1..=max).flat_map(DegreeDistribution::with_edges).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn schaeffer_roundtrip() -> Outcome {
    let mut cases = 0;
    for d in dists(6) {
        let trees = enumerate_balanced_trees(&d);
        let maps = enumerate_eulerian_maps(&d);
        ensure(trees.len() == maps.len(), || format!("{d}: {} trees, {} maps", trees.len(), maps.len()))?;
        for t in &trees {
            let (m, _) = closure(t).map_err(|e| e.to_string())?;
            ensure(opening(&m).map_err(|e| e.to_string())?.0 == *t, || format!("{d}: tree {}", t.shape()))?;
        }
        for m in &maps {
            let (t, _) = opening(m).map_err(|e| e.to_string())?;
            let back = closure(&t).map_err(|e| e.to_string())?.0;
            ensure(back.canonical().0 == m.canonical().0, || format!("{d}: map {m}"))?;
        }
        cases += trees.len() + maps.len();
    }
    Ok(format!("{cases} roundtrips"))
}

fn double_dual() -> Outcome {
    let mut cases = 0;
    for d in dists(5) {
        for m in enumerate_bipartite_maps(&d).into_iter().chain(enumerate_eulerian_maps(&d)) {
            let dd = m.dual().dual();
            ensure(dd.root() == m.root(), || format!("root moved in {m}"))?;
            // Same rotation with every edge's ends swapped.
            let swapped: Vec<usize> = (0..m.half_edge_count()).map(|h| m.next(h ^ 1) ^ 1).collect();
            ensure(dd.rotation() == swapped.as_slice(), || format!("rotation of {m}"))?;
            ensure(dd.canonical().0 == m.reverse_root().canonical().0, || format!("not reversed: {m}"))?;
            ensure(m.dual().undual() == m, || format!("undual of {m}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} maps"))
}

fn tau_duality() -> Outcome {
    let mut cases = 0;
    for d in dists(6) {
        for m in enumerate_bipartite_maps(&d) {
            let t = tau(&m).map_err(|e| e.to_string())?;
            ensure(t == tau_bfs(&m).map_err(|e| e.to_string())?, || format!("tau oracle on {m}"))?;
            ensure(t.len() + 1 == m.vertex_count(), || format!("tau is not spanning on {m}"))?;
            ensure(tau_dual_check(&m).map_err(|e| e.to_string())?, || format!("tau duality on {m}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} maps"))
}

/// Rooted bipartite maps with `n` edges: `3 2^(n-1) (2n)! / (n! (n+2)!)`.
fn total_bipartite(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |a, i| a * BigUint::from(i));
    BigUint::from(3u32) * (BigUint::from(1u32) << (n - 1)) * fact(2 * n) / (fact(n) * fact(n + 2))
}

fn catalan(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |a, i| a * BigUint::from(i));
    fact(2 * n) / (fact(n) * fact(n + 1))
}

fn vertex_identity(table: &CountTable<Count>) -> Outcome {
    let dd = |v: &[usize]| DegreeDistribution::new(v.to_vec());
    for (d, b) in [(&[1][..], 1u32), (&[2], 1), (&[0, 1], 2), (&[1, 1], 6), (&[2, 1], 12), (&[0, 0, 1], 5)] {
        ensure(table.get(&dd(d)) == b.into(), || format!("B({:?}) = {}", d, table.get(&dd(d))))?;
    }
    for n in 1..=7 {
        let sum = DegreeDistribution::with_edges(n).iter().fold(BigUint::from(0u32), |a, d| a + table.get(d));
        ensure(sum == total_bipartite(n), || format!("{n} edges: {sum} maps"))?;
        let mut star = vec![0; n];
        star[n - 1] = 1;
        ensure(table.get(&dd(&star)) == catalan(n), || format!("one face of degree {}", 2 * n))?;
    }
    for d in dists(4) {
        let b = table.get(&d);
        ensure(b == brute_force_count(&d).into(), || format!("brute force count at {d}"))?;
        if d.edges() <= 3 {
            ensure(b == brute_force_bipartite_maps(&d).len().into(), || format!("brute force maps at {d}"))?;
        }
    }
    let mut cases = 0;
    for d in dists(7) {
        let r = verify(table, &d, Identity::Vertex);
        ensure(r.ok(), || r.to_string())?;
        cases += 1;
    }
    Ok(format!("{cases} distributions"))
}

fn face_identity(table: &CountTable<Count>) -> Outcome {
    let mut cases = 0;
    for d in dists(7) {
        for which in [Identity::Face, Identity::Origin] {
            let r = verify(table, &d, which);
            ensure(r.ok(), || format!("{which:?} {r}"))?;
        }
        for step in derivation(table, &d) {
            ensure(step.ok(), || format!("{} at {d}: {} vs {}", step.name, step.lhs, step.rhs))?;
        }
        cases += 1;
    }
    Ok(format!("{cases} distributions"))
}

fn bijectivity() -> Outcome {
    let mut cases = 0;
    for d in dists(5) {
        for which in [Which::Vertex, Which::Face] {
            let (count, ok) = sweep(which, &d).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{which:?} sweep at {d}"))?;
            cases += count;
        }
    }
    Ok(format!("{cases} objects"))
}

fn surgical_matches_tree_route() -> Outcome {
    let mut cases = 0;
    for d in dists(5) {
        for p in vertex_marked_pairs(&d) {
            let (s, _) = slit_and_sew_surgical(&p).map_err(|e| e.to_string())?;
            ensure(s == slit_and_sew(&p).map_err(|e| e.to_string())?, || format!("slit-sew at {d}"))?;
            cases += 1;
        }
        for m in edge_marked_maps(&d) {
            let s = cut_and_close_surgical(&m).map_err(|e| e.to_string())?;
            ensure(s == cut_and_close(&m).map_err(|e| e.to_string())?, || format!("cut-close at {d}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} objects"))
}

fn structural_lemmas() -> Outcome {
    let checks: [(&str, fn(&DegreeDistribution) -> lemmas::Checked); 4] = [
        ("even cocycles", lemmas::cocycles_are_even),
        ("stable matching", lemmas::leaf_matching_is_stable),
        ("two free leaves", lemmas::two_free_leaves),
        ("rerooting", lemmas::rerooting_cardinality),
    ];
    let mut cases = 0;
    for d in dists(6) {
        for (name, check) in checks {
            cases += check(&d).map_err(|e| format!("{name} at {d}: {e}"))?;
        }
    }
    Ok(format!("{cases} cases"))
}

fn run(outcome: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(outcome)).unwrap_or_else(|_| Err("panicked".into()))
}

#[test]
fn acceptance() {
    let table = CountTable::<Count>::generate(7);
    let results = [
        ("1 schaeffer roundtrip", run(schaeffer_roundtrip)),
        ("2 double dual", run(double_dual)),
        ("3 tau duality", run(tau_duality)),
        ("4 vertex identity", run(|| vertex_identity(&table))),
        ("5 face identity", run(|| face_identity(&table))),
        ("6 bijectivity", run(bijectivity)),
        ("7 surgical route", run(surgical_matches_tree_route)),
        ("8 structural lemmas", run(structural_lemmas)),
    ];
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => println!("FAIL {name}: {why}"),
        }
    }
    assert!(results.iter().all(|(_, r)| r.is_ok()));
}
