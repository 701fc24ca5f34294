//! Explicit uniform hypergraph families whose edge intersection hypergraph is `C_n`.
//!
//! Each family is generated from closed-form index ranges; vertices are reduced
//! modulo `n` before storage. Edges are emitted family by family, ascending in
//! the family index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};

/// Selects one construction family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// 3-uniform, `{i, i+1, i+2}` for every `i`; `n` edges, 3-regular.
    K3,
    /// 4-uniform, `{i, i+1, i+2, i+5}` for every `i`; `n` edges.
    K4Linear,
    /// 4-uniform with `⌈3n/4⌉` edges, one sub-family per residue of `n` mod 4.
    K4Minimal,
    /// 5-uniform built mostly from `(3,2)` hyperedges, one sub-family per residue mod 3.
    K5ThreeTwo,
    /// 5-uniform with `3n/5` edges for `n ≡ 0 mod 5`.
    K5Minimal,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::K3,
        Variant::K4Linear,
        Variant::K4Minimal,
        Variant::K5ThreeTwo,
        Variant::K5Minimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::K3 => "k3",
            Variant::K4Linear => "k4-thm5",
            Variant::K4Minimal => "k4-thm6",
            Variant::K5ThreeTwo => "k5-lemma-32",
            Variant::K5Minimal => "k5-thm9",
        }
    }

    pub fn uniformity(self) -> usize {
        match self {
            Variant::K3 => 3,
            Variant::K4Linear | Variant::K4Minimal => 4,
            Variant::K5ThreeTwo | Variant::K5Minimal => 5,
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            Variant::K3 => 5,
            Variant::K4Linear => 11,
            Variant::K4Minimal => 12,
            Variant::K5ThreeTwo => 18,
            Variant::K5Minimal => 20,
        }
    }

    pub fn accepts(self, n: usize) -> bool {
        n >= self.min_n() && (self != Variant::K5Minimal || n.is_multiple_of(5))
    }

    /// Every admissible `n` up to `max_n`.
    pub fn domain(self, max_n: usize) -> impl Iterator<Item = usize> {
        (self.min_n()..=max_n).filter(move |&n| self.accepts(n))
    }

    /// Number of hyperedges the family produces for `n`.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            Variant::K3 | Variant::K4Linear => n,
            Variant::K4Minimal => (3 * n).div_ceil(4),
            // ⌈2n/3⌉ for n ≢ 2 mod 3; the n ≡ 2 family has one edge fewer
            Variant::K5ThreeTwo => match n % 3 {
                2 => (2 * n - 1) / 3,
                _ => (2 * n).div_ceil(3),
            },
            Variant::K5Minimal => 3 * n / 5,
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if self.accepts(n) {
            return Ok(());
        }
        let mut requirement = match self {
            Variant::K5Minimal => "requires n ≥ 20 and n ≡ 0 mod 5".to_string(),
            _ => format!("requires n ≥ {}", self.min_n()),
        };
        if self.uniformity() == 4 && n < 11 {
            requirement.push_str("; no 4-uniform hypergraph has EI(H) = C_n unless n ≥ 11");
        }
        if self == Variant::K3 && n < 5 {
            requirement.push_str("; the triple family needs n ≥ 5");
        }
        Err(Error::OutOfRange {
            variant: self.name(),
            n,
            requirement,
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "k3" | "thm3" | "k3-thm3" | "triples" => Variant::K3,
            "k4-thm5" | "thm5" | "k4-linear" => Variant::K4Linear,
            "k4-thm6" | "thm6" | "k4-minimal" => Variant::K4Minimal,
            "k5-lemma-32" | "lemma-32" | "k5-32" | "k5-three-two" => Variant::K5ThreeTwo,
            "k5-thm9" | "thm9" | "k5-minimal" => Variant::K5Minimal,
            _ => return Err(Error::UnknownVariant(s.to_string())),
        })
    }
}

/// `(k, n, variant)` selector for [`build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub k: usize,
    pub n: usize,
    pub variant: Variant,
}

impl ConstructionSpec {
    pub fn new(k: usize, n: usize, variant: Variant) -> Result<Self> {
        if variant.uniformity() != k {
            return Err(Error::UniformityMismatch {
                variant: variant.name(),
                expected: variant.uniformity(),
                k,
            });
        }
        variant.check(n)?;
        Ok(ConstructionSpec { k, n, variant })
    }

    pub fn of(variant: Variant, n: usize) -> Result<Self> {
        Self::new(variant.uniformity(), n, variant)
    }

    /// The default family for a uniformity: the edge-minimal one for k = 4.
    pub fn default_variant(k: usize) -> Option<Variant> {
        match k {
            3 => Some(Variant::K3),
            4 => Some(Variant::K4Minimal),
            5 => Some(Variant::K5ThreeTwo),
            _ => None,
        }
    }
}

pub fn build(spec: ConstructionSpec) -> Result<Hypergraph> {
    if spec.variant.uniformity() != spec.k {
        return Err(Error::UniformityMismatch {
            variant: spec.variant.name(),
            expected: spec.variant.uniformity(),
            k: spec.k,
        });
    }
    match spec.variant {
        Variant::K3 => build_k3(spec.n),
        Variant::K4Linear => build_k4_n_edges(spec.n),
        Variant::K4Minimal => build_k4_minimal(spec.n),
        Variant::K5ThreeTwo => build_k5_32(spec.n),
        Variant::K5Minimal => build_k5_minimal(spec.n),
    }
}

/// Collects hyperedges given as offset patterns over index ranges.
struct Families {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl Families {
    fn new(n: usize) -> Self {
        Families {
            n,
            edges: Vec::new(),
        }
    }

    /// Adds `{i + d : d ∈ offsets}` for `i = first, first + step, …, ≤ last`.
    fn family(&mut self, first: i64, last: i64, step: usize, offsets: &[i64]) -> &mut Self {
        for i in (first..=last).step_by(step) {
            let labels: Vec<i64> = offsets.iter().map(|d| i + d).collect();
            self.push(&labels);
        }
        self
    }

    fn push(&mut self, labels: &[i64]) -> &mut Self {
        let e = Hyperedge::wrapped(labels, self.n)
            .expect("construction families never repeat a vertex for admissible n");
        self.edges.push(e);
        self
    }

    fn finish(&mut self) -> Result<Hypergraph> {
        Hypergraph::new(self.n, std::mem::take(&mut self.edges))
    }
}

pub fn build_k3(n: usize) -> Result<Hypergraph> {
    Variant::K3.check(n)?;
    Families::new(n).family(1, n as i64, 1, &[0, 1, 2]).finish()
}

pub fn build_k4_n_edges(n: usize) -> Result<Hypergraph> {
    Variant::K4Linear.check(n)?;
    Families::new(n)
        .family(1, n as i64, 1, &[0, 1, 2, 5])
        .finish()
}

pub fn build_k4_minimal(n: usize) -> Result<Hypergraph> {
    Variant::K4Minimal.check(n)?;
    let m = n as i64;
    let mut f = Families::new(n);
    match n % 4 {
        0 => {
            let h = m / 2;
            f.family(1, m - 1, 2, &[0, 1, 2, 3])
                .family(2, h, 2, &[0, 1, h, h + 1]);
        }
        1 => {
            let h = (m - 1) / 2;
            f.family(1, m - 2, 2, &[0, 1, 2, 3])
                .family(2, h, 2, &[0, 1, h, h + 1])
                .push(&[m, 1, 2, 5]);
        }
        2 => {
            let h = m / 2;
            f.family(1, m - 1, 2, &[0, 1, 2, 3])
                .family(2, h - 1, 2, &[0, 1, h - 1, h])
                .push(&[m, 1, h + 1, h + 2]);
        }
        _ => {
            let h = (m - 1) / 2;
            f.family(1, m - 2, 2, &[0, 1, 2, 3])
                .family(2, h - 1, 2, &[0, 1, h - 1, h])
                .push(&[m - 1, m, (m + 1) / 2, (m + 1) / 2 + 1])
                .push(&[m, 1, 2, 5]);
        }
    }
    f.finish()
}

const K5_N18: [[i64; 5]; 12] = [
    [1, 2, 3, 7, 8],
    [4, 5, 6, 12, 13],
    [7, 8, 9, 13, 14],
    [10, 11, 12, 18, 1],
    [13, 14, 15, 1, 2],
    [16, 17, 18, 6, 7],
    [2, 3, 4, 9, 10],
    [5, 6, 7, 10, 11],
    [8, 9, 10, 15, 16],
    [11, 12, 13, 16, 17],
    [14, 15, 16, 3, 4],
    [17, 18, 1, 4, 5],
];

pub fn build_k5_32(n: usize) -> Result<Hypergraph> {
    Variant::K5ThreeTwo.check(n)?;
    let m = n as i64;
    let mut f = Families::new(n);
    const LONG: [i64; 5] = [0, 1, 2, 8, 9];
    const SHORT: [i64; 5] = [0, 1, 2, 5, 6];
    match n % 3 {
        0 if n == 18 => {
            for e in &K5_N18 {
                f.push(e);
            }
        }
        0 => {
            f.family(1, m - 2, 3, &LONG).family(2, m - 1, 3, &SHORT);
        }
        1 => {
            f.family(1, m - 15, 3, &LONG)
                .family(2, m - 14, 3, &SHORT)
                .push(&[m - 12, m - 11, m - 10, m - 6, m - 5])
                .push(&[m - 11, m - 10, m - 9, m - 4, m - 3])
                .push(&[m - 9, m - 8, m - 7, m - 1, m])
                .push(&[m - 8, m - 7, m - 6, m - 3, m - 2])
                .push(&[m - 6, m - 5, m - 4, m, 1])
                .push(&[m - 5, m - 4, m - 3, 3, 4])
                .push(&[m - 3, m - 2, m - 1, 6, 7])
                .push(&[m - 2, m - 1, m, 1, 2])
                .push(&[4, 5, 9, m - 1, m]);
        }
        _ => {
            f.family(1, m - 16, 3, &LONG)
                .family(2, m - 15, 3, &SHORT)
                .push(&[m - 13, m - 12, m - 11, m - 7, m - 6])
                .push(&[m - 12, m - 11, m - 10, m - 5, m - 4])
                .push(&[m - 10, m - 9, m - 8, m - 1, m])
                .push(&[m - 9, m - 8, m - 7, m - 4, m - 3])
                .push(&[m - 7, m - 6, m - 5, m, 1])
                .push(&[m - 6, m - 5, m - 4, 3, 4])
                .push(&[m - 4, m - 3, m - 2, 6, 7])
                .push(&[m - 3, m - 2, m - 1, 4, 5])
                .push(&[m - 2, m - 1, m, 1, 2]);
        }
    }
    f.finish()
}

pub fn build_k5_minimal(n: usize) -> Result<Hypergraph> {
    Variant::K5Minimal.check(n)?;
    let m = n as i64;
    Families::new(n)
        .family(1, m - 4, 5, &[0, 1, 2, 3, 4])
        .family(4, m - 1, 5, &[0, 1, 2, -6, -5])
        .family(5, m, 5, &[0, 1, 2, 7, 8])
        .finish()
}
