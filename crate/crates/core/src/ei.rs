//! The edge intersection hypergraph `EI(H)` and comparison against cycles.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::vertex::Vertex;

/// Which reading of `EI(H)` to compute.
///
/// `Definition` collects `e1 ∩ e2` over distinct pairs with at least two
/// common vertices. `Mathematica` additionally drops intersections that are
/// themselves hyperedges of `H`, which is what the `Complement[..., eh]` step of
/// the well-known one-line Mathematica helper does. For uniform hypergraphs the
/// two agree, because every intersection of distinct edges is strictly smaller
/// than an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EiMode {
    #[default]
    Definition,
    Mathematica,
}

/// Edges of `EI(H)` together with how many unordered pairs generate each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EiResult {
    multiplicity: BTreeMap<Hyperedge, usize>,
}

impl EiResult {
    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.multiplicity.keys()
    }

    pub fn edge_set(&self) -> BTreeSet<Hyperedge> {
        self.multiplicity.keys().cloned().collect()
    }

    /// Number of unordered generator pairs; 0 for non-edges.
    pub fn multiplicity(&self, e: &Hyperedge) -> usize {
        self.multiplicity.get(e).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (&Hyperedge, usize)> {
        self.multiplicity.iter().map(|(e, &m)| (e, m))
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.multiplicity.contains_key(e)
    }

    pub fn len(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicity.is_empty()
    }
}

pub fn ei(h: &Hypergraph, mode: EiMode) -> EiResult {
    let edges = h.edges();
    let mut multiplicity: BTreeMap<Hyperedge, usize> = BTreeMap::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let x = a.intersection(b);
            if x.len() >= 2 {
                *multiplicity.entry(x).or_default() += 1;
            }
        }
    }
    if mode == EiMode::Mathematica {
        for e in edges {
            multiplicity.remove(e);
        }
    }
    EiResult { multiplicity }
}

/// A Hamiltonian cycle on `{1, …, n}` given by its cyclic vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    order: Vec<Vertex>,
}

impl Cycle {
    /// `C_n` with edges `{i, i+1 mod n}`.
    pub fn standard(n: usize) -> Cycle {
        assert!(n >= 3, "C_n needs n >= 3");
        Cycle {
            order: (1..=n as i64).map(|v| Vertex::wrap(v, n)).collect(),
        }
    }

    pub fn from_order(order: Vec<Vertex>) -> Result<Cycle> {
        let n = order.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut seen = vec![false; n];
        for v in &order {
            let i = v.index();
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!(
                    "cycle order must be a permutation of 1..={n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Cycle { order })
    }

    /// The cycle on `n + 1` vertices obtained by placing the new vertex
    /// `n + 1` between the adjacent vertices `a` and `b` of `C_n`.
    pub fn standard_with_insertion(n: usize, a: Vertex, b: Vertex) -> Result<Cycle> {
        if !a.is_adjacent(b, n) {
            return Err(Error::Precondition(format!(
                "vertices {a} and {b} are not adjacent on C_{n}"
            )));
        }
        let new = Vertex::wrap(n as i64 + 1, n + 1);
        // walk C_n from a in the direction away from b, ending at b
        let step: i64 = if a.successor(n) == b { -1 } else { 1 };
        let mut order = Vec::with_capacity(n + 1);
        let mut v = b;
        for _ in 0..n {
            order.push(v);
            v = v.offset(-step, n);
        }
        // order now runs b, ..., a; close the loop through the new vertex
        order.push(new);
        Cycle::from_order(order)
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn edges(&self) -> Vec<Hyperedge> {
        let n = self.order.len();
        (0..n)
            .map(|i| {
                Hyperedge::new([self.order[i], self.order[(i + 1) % n]])
                    .expect("cycle order is a permutation")
            })
            .collect()
    }

    pub fn diff(&self, r: &EiResult) -> CycleDiff {
        let wanted: BTreeSet<Hyperedge> = self.edges().into_iter().collect();
        let missing = wanted.iter().filter(|e| !r.contains(e)).cloned().collect();
        let extra = r
            .edges()
            .filter(|e| !wanted.contains(*e))
            .cloned()
            .collect();
        CycleDiff { missing, extra }
    }

    /// Maps the cycle order onto `1, 2, …, n`, so that the cycle becomes `C_n`.
    pub fn relabel_to_standard(&self, h: &Hypergraph) -> Result<Hypergraph> {
        let n = self.n();
        let mut map = vec![Vertex::wrap(1, n); n];
        for (i, v) in self.order.iter().enumerate() {
            map[v.index()] = Vertex::wrap(i as i64 + 1, n);
        }
        h.relabel(n, |v| map[v.index()])
    }
}

/// Difference between an `EiResult` and the cycle it should equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CycleDiff {
    /// Cycle edges that are not generated.
    #[serde(serialize_with = "serialize_edges")]
    pub missing: Vec<Hyperedge>,
    /// Generated edges that are not cycle edges.
    #[serde(serialize_with = "serialize_edges")]
    pub extra: Vec<Hyperedge>,
}

impl CycleDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn summary(&self) -> String {
        let show = |es: &[Hyperedge]| {
            es.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "missing [{}], extra [{}]",
            show(&self.missing),
            show(&self.extra)
        )
    }
}

pub(crate) fn serialize_edges<S: serde::Serializer>(
    edges: &[Hyperedge],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(edges.len()))?;
    for e in edges {
        seq.serialize_element(&e.labels())?;
    }
    seq.end()
}

/// Compares `r` against `C_n` and returns the full difference.
pub fn cycle_diff(r: &EiResult, n: usize) -> CycleDiff {
    Cycle::standard(n).diff(r)
}

/// True iff the edges of `r` are exactly `{ {i, i+1 mod n} : i = 1..n }`.
pub fn is_cycle(r: &EiResult, n: usize) -> bool {
    cycle_diff(r, n).is_empty()
}
