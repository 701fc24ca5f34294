//! Full verification of a candidate hypergraph against `C_n`, with edge-count
//! bounds and the 3-regularity minimality certificate.
//!
//! Every vertex `u` of a hypergraph with `EI(H) = C_n` lies on two cycle edges,
//! each generated by a pair of hyperedges through `u`, and those pairs involve
//! at least three distinct hyperedges. Hence `d(u) ≥ 3`, so a `k`-uniform
//! representation has at least `3n/k` edges, and a 3-regular one attains the
//! minimum.

use std::fmt;

use serde::Serialize;

use crate::ei::{cycle_diff, ei, serialize_edges, EiMode};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::sections::profile;

/// `⌈3n/k⌉`, the least edge count of any `k`-uniform representation of `C_n`.
pub fn lower_bound_uniform(k: usize, n: usize) -> usize {
    assert!(k >= 2 && n >= 3, "bound needs k >= 2 and n >= 3");
    (3 * n).div_ceil(k)
}

/// `⌈2n/3⌉`, the least edge count when every hyperedge is a `(3,2)` hyperedge
/// (each provides at most three half-edges, each cycle edge consumes two).
pub fn lower_bound_32_only(n: usize) -> usize {
    assert!(n >= 3, "bound needs n >= 3");
    (2 * n).div_ceil(3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeMultiplicity {
    pub edge: Vec<u32>,
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub edge_count: usize,
    pub is_cycle: bool,
    #[serde(serialize_with = "serialize_edges")]
    pub missing_edges: Vec<Hyperedge>,
    #[serde(serialize_with = "serialize_edges")]
    pub extra_edges: Vec<Hyperedge>,
    /// Generator-pair count of every generated cycle edge, in cycle order.
    pub multiplicity: Vec<EdgeMultiplicity>,
    /// `degrees[v - 1]` is the degree of vertex `v`.
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub is_k_uniform: Option<usize>,
    pub is_3_regular: bool,
    /// `⌈3n/k⌉` when the hypergraph is `k`-uniform.
    pub lower_bound_general: Option<usize>,
    /// `⌈2n/3⌉` when every hyperedge is a 5-vertex `(3,2)` hyperedge.
    pub lower_bound_32: Option<usize>,
    /// `EI = C_n`, uniform, and `edge_count == ⌈3n/k⌉`.
    pub meets_lower_bound: bool,
    /// `EI = C_n`, uniform and 3-regular: the edge count is the minimum.
    pub minimality_certified: bool,
}

pub fn verify(h: &Hypergraph) -> VerificationReport {
    let n = h.n();
    let r = ei(h, EiMode::Definition);
    let diff = cycle_diff(&r, n);
    let is_cycle = diff.is_empty();

    let multiplicity = crate::ei::Cycle::standard(n)
        .edges()
        .into_iter()
        .filter(|e| r.contains(e))
        .map(|e| EdgeMultiplicity {
            pairs: r.multiplicity(&e),
            edge: e.labels(),
        })
        .collect();

    let degrees = h.degrees();
    let uniformity = h.uniformity();
    let is_3_regular = !h.is_empty() && degrees.is_regular(3);
    let lower_bound_general = uniformity.map(|k| lower_bound_uniform(k, n));
    let all_32 = uniformity == Some(5)
        && h.edges()
            .iter()
            .all(|e| profile(e, n).is_ok_and(|p| p.is(&[3, 2])));
    let lower_bound_32 = all_32.then(|| lower_bound_32_only(n));

    VerificationReport {
        n,
        edge_count: h.len(),
        is_cycle,
        missing_edges: diff.missing,
        extra_edges: diff.extra,
        multiplicity,
        min_degree: degrees.min(),
        degrees: degrees.as_slice().to_vec(),
        is_k_uniform: uniformity,
        is_3_regular,
        lower_bound_general,
        lower_bound_32,
        meets_lower_bound: is_cycle && lower_bound_general == Some(h.len()),
        minimality_certified: is_cycle && uniformity.is_some() && is_3_regular,
    }
}

impl VerificationReport {
    pub fn multiplicity_of(&self, labels: &[u32]) -> usize {
        let mut key = labels.to_vec();
        key.sort_unstable();
        self.multiplicity
            .iter()
            .find(|m| m.edge == key)
            .map_or(0, |m| m.pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |es: &[Hyperedge]| {
            es.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "n = {}, |E| = {}", self.n, self.edge_count)?;
        writeln!(
            f,
            "EI(H) = C_{}: {}",
            self.n,
            if self.is_cycle { "yes" } else { "no" }
        )?;
        if !self.missing_edges.is_empty() {
            writeln!(f, "  missing cycle edges: {}", show(&self.missing_edges))?;
        }
        if !self.extra_edges.is_empty() {
            writeln!(f, "  unwanted edges: {}", show(&self.extra_edges))?;
        }
        let multiple: Vec<String> = self
            .multiplicity
            .iter()
            .filter(|m| m.pairs > 1)
            .map(|m| {
                let labels: Vec<String> = m.edge.iter().map(|v| v.to_string()).collect();
                format!("{{{}}} x{}", labels.join(","), m.pairs)
            })
            .collect();
        if !multiple.is_empty() {
            writeln!(f, "  multiply generated: {}", multiple.join(" "))?;
        }
        match self.is_k_uniform {
            Some(k) => writeln!(f, "uniformity: {k}")?,
            None => writeln!(f, "uniformity: not uniform")?,
        }
        writeln!(
            f,
            "degrees: min {}, 3-regular: {}",
            self.min_degree,
            if self.is_3_regular { "yes" } else { "no" }
        )?;
        if let Some(lb) = self.lower_bound_general {
            writeln!(f, "lower bound ceil(3n/k) = {lb}")?;
        }
        if let Some(lb) = self.lower_bound_32 {
            writeln!(
                f,
                "lower bound for (3,2)-only hypergraphs ceil(2n/3) = {lb}"
            )?;
        }
        if self.minimality_certified {
            writeln!(f, "minimality: certified (3-regular, uniform, EI = C_n)")
        } else if self.meets_lower_bound {
            writeln!(f, "minimality: meets lower bound ceil(3n/k)")
        } else {
            writeln!(f, "minimality: not certified")
        }
    }
}
