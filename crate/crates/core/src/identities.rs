//! The counting identities, evaluated exactly for any integer type.
//!
//! Counts come from a [`CountTable`] filled by exhaustive generation; the
//! identities only do arithmetic on them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{FromPrimitive, Num};

use crate::enumeration::enumerate_bipartite_maps;
use crate::map::DegreeDistribution;

/// Integer types the identities can be evaluated in.
pub trait Integer: Num + Clone + PartialEq + FromPrimitive + fmt::Display {}

impl<T: Num + Clone + PartialEq + FromPrimitive + fmt::Display> Integer for T {}

fn nat<T: Integer>(x: usize) -> T {
    T::from_usize(x).expect("fits")
}

fn choose2<T: Integer>(x: usize) -> T {
    nat::<T>(x * x.saturating_sub(1) / 2)
}

/// Number of rooted bipartite maps per distribution; zero when absent.
#[derive(Clone, Debug)]
pub struct CountTable<T> {
    counts: BTreeMap<DegreeDistribution, T>,
}

impl<T: Integer> CountTable<T> {
    /// Count every distribution with at most `max_edges` edges by generating
    /// the maps.
    pub fn generate(max_edges: usize) -> Self {
        let mut counts = BTreeMap::new();
        for n in 1..=max_edges {
            for d in DegreeDistribution::with_edges(n) {
                let b = enumerate_bipartite_maps(&d).len();
                counts.insert(d, nat(b));
            }
        }
        CountTable { counts }
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (DegreeDistribution, T)>) -> Self {
        CountTable { counts: counts.into_iter().collect() }
    }

    pub fn get(&self, d: &DegreeDistribution) -> T {
        self.counts.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DegreeDistribution, &T)> {
        self.counts.iter()
    }

    pub fn max_edges(&self) -> usize {
        self.counts.keys().map(DegreeDistribution::edges).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `4(f-1)B(d) = sum v(s) v(t) B(s) B(t)`.
    Vertex,
    /// `(f-1)(f-2)B(d) = sum (f(s)-1) v(t)(v(t)-1) B(s) B(t)`, ordered marks.
    Face,
    /// `(C(n+1,2) - C(v,2)) B(d) = sum (1+n(s)) C(v(t),2) B(s) B(t)`.
    Origin,
}

impl std::str::FromStr for Identity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(Identity::Vertex),
            "face" => Ok(Identity::Face),
            "origin" => Ok(Identity::Origin),
            _ => Err(format!("unknown identity {s:?}")),
        }
    }
}

/// Both sides of one identity at one distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct Report<T> {
    pub d: DegreeDistribution,
    pub b: T,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Integer> Report<T> {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<T: Integer> fmt::Display for Report<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} B={} lhs={} rhs={} ok={}", self.d, self.b, self.lhs, self.rhs, self.ok())
    }
}

/// `sum over s + t = d` of `weight(s, t) B(s) B(t)`.
fn convolve<T: Integer>(
    table: &CountTable<T>,
    d: &DegreeDistribution,
    weight: impl Fn(&DegreeDistribution, &DegreeDistribution) -> T,
) -> T {
    d.splits().iter().fold(T::zero(), |acc, (s, t)| {
        acc + weight(s, t) * table.get(s) * table.get(t)
    })
}

pub fn verify<T: Integer>(table: &CountTable<T>, d: &DegreeDistribution, which: Identity) -> Report<T> {
    let b = table.get(d);
    let (f, v, n) = (d.faces(), d.vertices(), d.edges());
    let (lhs_factor, rhs) = match which {
        Identity::Vertex => (
            nat::<T>(4 * (f - 1)),
            convolve(table, d, |s, t| nat::<T>(s.vertices() * t.vertices())),
        ),
        Identity::Face => (
            nat::<T>((f - 1) * f.saturating_sub(2)),
            convolve(table, d, |s, t| {
                nat::<T>(s.faces().saturating_sub(1) * t.vertices() * (t.vertices() - 1))
            }),
        ),
        Identity::Origin => (
            choose2::<T>(n + 1) - choose2::<T>(v),
            convolve(table, d, |s, t| nat::<T>(1 + s.edges()) * choose2::<T>(t.vertices())),
        ),
    };
    Report { d: d.clone(), b: b.clone(), lhs: lhs_factor * b, rhs }
}

/// One balanced line of a derivation.
#[derive(Clone, Debug, PartialEq)]
pub struct Step<T> {
    pub name: &'static str,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Integer> Step<T> {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Derive the planar equation from the two marked identities, evaluating
/// every intermediate line: multiply the vertex identity by `v(d)`, split
/// the sum, use the symmetry `s <-> t`, divide by four, add the face
/// identity, and rewrite with Euler's formula.
pub fn derivation<T: Integer>(table: &CountTable<T>, d: &DegreeDistribution) -> Vec<Step<T>> {
    let b = table.get(d);
    let (f, v, n) = (d.faces(), d.vertices(), d.edges());
    let vs = |s: &DegreeDistribution| s.vertices();
    let mut steps = Vec::new();
    let mut push = |name, lhs, rhs| steps.push(Step { name, lhs, rhs });

    let additive = d.splits().iter().all(|(s, t)| vs(s) + vs(t) == v + 2);
    push("vertices add", nat::<T>(additive as usize), T::one());

    let vertex = verify(table, d, Identity::Vertex);
    push("vertex identity", vertex.lhs.clone(), vertex.rhs.clone());

    let times_v = nat::<T>(v) * vertex.lhs;
    let expanded = convolve(table, d, |s, t| nat::<T>(vs(s) * vs(t) * (vs(s) - 1 + vs(t) - 1)));
    push("multiplied by v", times_v.clone(), expanded.clone());

    let first = convolve(table, d, |s, t| nat::<T>(vs(s) * vs(t) * (vs(s) - 1)));
    let second = convolve(table, d, |s, t| nat::<T>(vs(s) * vs(t) * (vs(t) - 1)));
    push("split", expanded, first.clone() + second.clone());
    push("symmetry", first, second.clone());

    let quarter = nat::<T>(v * (f - 1)) * b.clone();
    let halved = convolve(table, d, |s, t| nat::<T>(vs(s)) * choose2::<T>(vs(t)));
    push("divided by four", quarter.clone() * nat::<T>(4), second * nat::<T>(2));
    push("marked vertex half", quarter.clone(), halved.clone());

    let face_lhs = choose2::<T>(f - 1) * b.clone();
    let face_rhs = convolve(table, d, |s, t| nat::<T>(s.faces().saturating_sub(1)) * choose2::<T>(vs(t)));
    push("face identity", face_lhs.clone(), face_rhs.clone());
    let ordered = verify(table, d, Identity::Face);
    push("ordered face identity is twice", ordered.lhs.clone(), face_lhs.clone() * nat::<T>(2));
    push("ordered face sum is twice", ordered.rhs, face_rhs.clone() * nat::<T>(2));

    let summed_rhs = convolve(table, d, |s, t| nat::<T>(vs(s) + s.faces().saturating_sub(1)) * choose2::<T>(vs(t)));
    push("sum", quarter + face_lhs, halved + face_rhs);
    let origin = verify(table, d, Identity::Origin);
    push(
        "euler on the left",
        nat::<T>((f - 1) * v) + choose2::<T>(f - 1) + choose2::<T>(v),
        choose2::<T>(n + 1),
    );
    push("euler on the right", summed_rhs, origin.rhs.clone());
    push("planar equation", origin.lhs, origin.rhs);
    steps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Count;

    fn dd(v: &[usize]) -> DegreeDistribution {
        DegreeDistribution::new(v.to_vec())
    }

    #[test]
    fn spot_counts() {
        let table = CountTable::<u64>::generate(4);
        for (d, b) in [(&[1][..], 1), (&[2], 1), (&[0, 1], 2), (&[1, 1], 6), (&[2, 1], 12), (&[0, 0, 1], 5)] {
            assert_eq!(table.get(&dd(d)), b, "{:?}", d);
        }
        assert_eq!(table.get(&dd(&[])), 0);
    }

    #[test]
    fn worked_examples() {
        let table = CountTable::<Count>::generate(4);
        let r = verify(&table, &dd(&[1, 1]), Identity::Origin);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (18u32.into(), 18u32.into()));
        assert_eq!(r.to_string(), "d=1,1 B=6 lhs=18 rhs=18 ok=true");
        let r = verify(&table, &dd(&[1, 1]), Identity::Face);
        assert_eq!(r.lhs, 0u32.into());
        let r = verify(&table, &dd(&[2, 1]), Identity::Face);
        assert_eq!((r.lhs, r.rhs), (24u32.into(), 24u32.into()));
        let r = verify(&table, &dd(&[2, 1]), Identity::Vertex);
        assert_eq!(r.lhs, 96u32.into());
    }

    #[test]
    fn identities_and_derivation_hold_to_five_edges() {
        let table = CountTable::<i64>::generate(5);
        for (d, _) in table.iter() {
            for which in [Identity::Vertex, Identity::Face, Identity::Origin] {
                assert!(verify(&table, d, which).ok(), "{which:?} {d}");
            }
            for step in derivation(&table, d) {
                assert!(step.ok(), "{} at {d}", step.name);
            }
        }
    }

    #[test]
    fn wrong_count_breaks_the_vertex_identity() {
        let mut counts: Vec<_> = CountTable::<u64>::generate(3).iter().map(|(d, b)| (d.clone(), *b)).collect();
        for (d, b) in counts.iter_mut() {
            if *d == dd(&[1, 1]) {
                *b += 1;
            }
        }
        let table = CountTable::from_counts(counts);
        assert!(!verify(&table, &dd(&[1, 1]), Identity::Vertex).ok());
    }
}
