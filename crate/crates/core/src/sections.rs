//! Decomposition of a hyperedge into maximal circular runs on `C_n`.
//!
//! A run of length `l` is a sequence `(i, i+1, …, i+l-1)` inside the hyperedge
//! whose circular neighbours `i-1` and `i+l` are outside it. The multiset of run
//! lengths, sorted descending, is the hyperedge's profile; a `(3,2)` hyperedge
//! is a run of three plus a separate run of two.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hyperedge;
use crate::vertex::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: Vertex,
    pub len: usize,
}

impl Run {
    pub fn vertices(&self, n: usize) -> impl Iterator<Item = Vertex> {
        let start = self.start;
        (0..self.len as i64).map(move |d| start.offset(d, n))
    }

    fn wraps(&self, n: usize) -> bool {
        self.start.get() as usize + self.len - 1 > n
    }
}

/// Maximal circular runs of `e` on `C_n`.
///
/// Runs come out ordered by their smallest vertex, so a run that wraps past
/// `n` (and therefore contains vertex 1) is listed first.
pub fn sections(e: &Hyperedge, n: usize) -> Result<Vec<Run>> {
    if e.is_empty() {
        return Err(Error::EmptyHyperedge);
    }
    if let Some(v) = e.iter().find(|v| v.get() as usize > n) {
        return Err(Error::VertexOutOfRange {
            vertex: v.get() as i64,
            n,
        });
    }
    if e.len() >= n {
        return Err(Error::FullCycleHyperedge);
    }
    let mut runs: Vec<Run> = e
        .iter()
        .filter(|v| !e.contains(v.predecessor(n)))
        .map(|start| {
            let mut len = 1;
            let mut v = start.successor(n);
            while e.contains(v) {
                len += 1;
                v = v.successor(n);
            }
            Run { start, len }
        })
        .collect();
    runs.sort_by_key(|r| if r.wraps(n) { 1 } else { r.start.get() });
    Ok(runs)
}

/// Run lengths sorted descending, e.g. `(3,2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectionProfile(Vec<usize>);

impl SectionProfile {
    pub fn new(mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidProfile(
                "a profile needs at least one section".into(),
            ));
        }
        if lengths.contains(&0) {
            return Err(Error::InvalidProfile(
                "section lengths must be positive".into(),
            ));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SectionProfile(lengths))
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of sections `t`.
    pub fn parts(&self) -> usize {
        self.0.len()
    }

    /// Cardinality of the described hyperedge.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn half_edge_capacity(&self) -> usize {
        half_edge_capacity(self)
    }

    pub fn is(&self, lengths: &[usize]) -> bool {
        self.0 == lengths
    }
}

impl fmt::Display for SectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for SectionProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidProfile(format!("expected `(l1,...,lt)`, got `{s}`")))?;
        let lengths = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidProfile(format!("bad section length `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SectionProfile::new(lengths)
    }
}

pub fn profile(e: &Hyperedge, n: usize) -> Result<SectionProfile> {
    SectionProfile::new(sections(e, n)?.iter().map(|r| r.len).collect())
}

/// How many cycle edges a hyperedge with this profile can help generate:
/// a section of length `l` covers `l - 1` consecutive cycle edges.
pub fn half_edge_capacity(p: &SectionProfile) -> usize {
    p.0.iter().map(|l| l - 1).sum()
}
