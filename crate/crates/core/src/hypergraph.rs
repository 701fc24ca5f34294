//! Hyperedges, hypergraphs on `{1, …, n}` and the JSON interchange format.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// A set of vertices, stored sorted ascending without repetition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<Vertex>);

impl Hyperedge {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(format_labels(&vs)));
        }
        Ok(Hyperedge(vs))
    }

    /// Builds a hyperedge from raw labels, reducing each one modulo `n`.
    pub fn wrapped(labels: &[i64], n: usize) -> Result<Self> {
        Self::new(labels.iter().map(|&l| Vertex::wrap(l, n)))
    }

    /// Builds a hyperedge from labels that must already lie in `1..=n`.
    pub fn checked(labels: &[i64], n: usize) -> Result<Self> {
        let vs = labels
            .iter()
            .map(|&l| Vertex::new(l, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Vec<u32> {
        self.0.iter().map(|v| v.get()).collect()
    }

    /// Sorted-merge intersection.
    pub fn intersection(&self, other: &Hyperedge) -> Hyperedge {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().min(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Hyperedge(out)
    }

    /// `self` with `remove` dropped and `add` inserted.
    pub fn replace(&self, remove: Vertex, add: Vertex) -> Result<Hyperedge> {
        Hyperedge::new(
            self.iter()
                .filter(|&v| v != remove)
                .chain(std::iter::once(add)),
        )
    }

    pub fn union(&self, extra: &[Vertex]) -> Result<Hyperedge> {
        Hyperedge::new(self.iter().chain(extra.iter().copied()))
    }
}

fn format_labels(vs: &[Vertex]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_labels(&self.0))
    }
}

/// A hypergraph on the vertex set `{1, …, n}` without loops or multiple edges.
///
/// Edges keep the order in which they were supplied (constructions emit them
/// family by family); [`Hypergraph::canonical`] gives the lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Hyperedge>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.len() < 2 {
                return Err(Error::Loop(e.to_string()));
            }
            if let Some(v) = e.iter().find(|v| v.get() as usize > n) {
                return Err(Error::VertexOutOfRange {
                    vertex: v.get() as i64,
                    n,
                });
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.clone()));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Convenience constructor from label lists already in `1..=n`.
    pub fn from_labels<L: AsRef<[i64]>>(
        n: usize,
        lists: impl IntoIterator<Item = L>,
    ) -> Result<Self> {
        let edges = lists
            .into_iter()
            .map(|l| Hyperedge::checked(l.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let n = self.n;
        (1..=n as i64).map(move |v| Vertex::wrap(v, n))
    }

    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        self.edges.iter().any(|f| f == e)
    }

    pub fn position(&self, e: &Hyperedge) -> Option<usize> {
        self.edges.iter().position(|f| f == e)
    }

    /// `Some(k)` when every hyperedge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn degrees(&self) -> Degrees {
        let mut d = vec![0; self.n];
        for v in self.edges.iter().flat_map(|e| e.iter()) {
            d[v.index()] += 1;
        }
        Degrees(d)
    }

    /// Same hypergraph with edges in lexicographic order.
    pub fn canonical(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort();
        Hypergraph { n: self.n, edges }
    }

    /// Replaces edge `index`, rechecking the hypergraph invariants.
    pub fn with_edge_replaced(&self, index: usize, edge: Hyperedge) -> Result<Hypergraph> {
        let mut edges = self.edges.clone();
        edges[index] = edge;
        Hypergraph::new(self.n, edges)
    }

    /// Applies `map` to every vertex; `map` must be a bijection onto `1..=n`.
    pub fn relabel(&self, n: usize, map: impl Fn(Vertex) -> Vertex) -> Result<Hypergraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| Hyperedge::new(e.iter().map(&map)))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, edges)
    }

    pub fn to_file(&self) -> HypergraphFile {
        HypergraphFile {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v.get() as i64).collect())
                .collect(),
        }
    }

    /// Serializes to the interchange format, one hyperedge per line.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"n\": {},\n  \"edges\": [", self.n);
        for (i, e) in self.edges.iter().enumerate() {
            let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            out.push_str(&labels.join(", "));
            out.push(']');
        }
        if !self.edges.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Hypergraph> {
        let file: HypergraphFile = serde_json::from_str(text)?;
        Hypergraph::try_from(file)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "n={} E={{{}}}", self.n, inner.join(","))
    }
}

/// On-disk shape of a hypergraph: `{"n": <int>, "edges": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub n: usize,
    pub edges: Vec<Vec<i64>>,
}

impl TryFrom<HypergraphFile> for Hypergraph {
    type Error = Error;

    fn try_from(file: HypergraphFile) -> Result<Self> {
        Hypergraph::from_labels(file.n, file.edges)
    }
}

/// Vertex degrees, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degrees(Vec<usize>);

impl Degrees {
    pub fn get(&self, v: Vertex) -> usize {
        self.0[v.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        let n = self.0.len();
        self.0
            .iter()
            .enumerate()
            .map(move |(i, &d)| (Vertex::wrap(i as i64 + 1, n), d))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn min(&self) -> usize {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.0.iter().all(|&d| d == r)
    }
}
