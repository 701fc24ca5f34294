//! Checked 6-uniform transforms: odd-vertex insertion and growing the single
//! cardinality-3 hyperedge to cardinality 6.
//!
//! Both operations re-verify their output; a returned hypergraph always has
//! the intended cycle as its edge intersection hypergraph.

use crate::ei::{ei, is_cycle, Cycle, EiMode};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::vertex::Vertex;

/// Inserts a new vertex `n = m + 1` between the adjacent cycle vertices `a`
/// and `b` of a hypergraph `h_prime` on `m` vertices (m even) with
/// `EI(h_prime) = C_m`.
///
/// Edges `ex` and `ey` must both contain `a` and `b`. The result replaces `b`
/// by `n` in `ex`, replaces `a` by `n` in `ey` and appends `{a, n, b}`; its edge
/// intersection hypergraph is checked against the cycle
/// `…, a, n, b, …` (see [`Cycle::standard_with_insertion`]).
pub fn insert_odd_vertex(
    h_prime: &Hypergraph,
    a: Vertex,
    b: Vertex,
    ex: usize,
    ey: usize,
) -> Result<Hypergraph> {
    let m = h_prime.n();
    if !m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "input must have an even number of vertices, got {m}"
        )));
    }
    let before = ei(h_prime, EiMode::Definition);
    if !is_cycle(&before, m) {
        return Err(Error::Precondition(format!("EI of the input is not C_{m}")));
    }
    for v in [a, b] {
        if v.get() as usize > m {
            return Err(Error::VertexOutOfRange {
                vertex: v.get() as i64,
                n: m,
            });
        }
    }
    let target = Cycle::standard_with_insertion(m, a, b)?;
    let edges = h_prime.edges();
    if ex == ey || ex >= edges.len() || ey >= edges.len() {
        return Err(Error::Precondition(format!(
            "edge indices {ex} and {ey} must be distinct and below {}",
            edges.len()
        )));
    }
    for idx in [ex, ey] {
        if !(edges[idx].contains(a) && edges[idx].contains(b)) {
            return Err(Error::Precondition(format!(
                "edge {} must contain both {a} and {b}",
                edges[idx]
            )));
        }
    }

    let n = m + 1;
    let new = Vertex::wrap(n as i64, n);
    let mut out: Vec<Hyperedge> = edges.to_vec();
    out[ex] = edges[ex].replace(b, new)?;
    out[ey] = edges[ey].replace(a, new)?;
    out.push(Hyperedge::new([a, new, b])?);
    let h = Hypergraph::new(n, out)?;

    let diff = target.diff(&ei(&h, EiMode::Definition));
    if !diff.is_empty() {
        return Err(Error::PostVerification(diff.summary()));
    }
    Ok(h)
}

/// Replaces the cardinality-3 hyperedge `small` by `small ∪ {u, v, w}` for the
/// lexicographically first triple `u < v < w` that leaves the edge set of
/// `EI(h)` unchanged.
///
/// Requires `n ≥ 25` odd, `EI(h) = C_n`, and every other hyperedge of
/// cardinality 6.
pub fn augment_to_six(h: &Hypergraph, small: &Hyperedge) -> Result<Hypergraph> {
    let n = h.n();
    if n < 25 || n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "n must be odd and at least 25, got {n}"
        )));
    }
    if small.len() != 3 {
        return Err(Error::Precondition(format!(
            "hyperedge {small} must have cardinality 3"
        )));
    }
    let index = h.position(small).ok_or_else(|| {
        Error::Precondition(format!("hyperedge {small} is not an edge of the input"))
    })?;
    if let Some(bad) = h
        .edges()
        .iter()
        .enumerate()
        .find(|&(i, e)| i != index && e.len() != 6)
    {
        return Err(Error::Precondition(format!(
            "all other hyperedges must have cardinality 6, but {} has {}",
            bad.1,
            bad.1.len()
        )));
    }
    let before = ei(h, EiMode::Definition);
    if !is_cycle(&before, n) {
        return Err(Error::Precondition(format!("EI of the input is not C_{n}")));
    }
    let wanted = before.edge_set();

    let free: Vec<Vertex> = h.vertices().filter(|&v| !small.contains(v)).collect();
    for (i, &u) in free.iter().enumerate() {
        for (j, &v) in free.iter().enumerate().skip(i + 1) {
            for &w in &free[j + 1..] {
                let grown = small.union(&[u, v, w])?;
                if h.contains_edge(&grown) {
                    continue;
                }
                let candidate = h.with_edge_replaced(index, grown)?;
                if ei(&candidate, EiMode::Definition).edge_set() == wanted {
                    return Ok(candidate);
                }
            }
        }
    }
    Err(Error::NoValidTriple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_k3;

    fn v(x: i64, n: usize) -> Vertex {
        Vertex::wrap(x, n)
    }

    #[test]
    fn inserting_into_the_triple_family() {
        let h = build_k3(12).unwrap();
        // {2,3,4} and {3,4,5} generate the cycle edge {3,4}
        let out = insert_odd_vertex(&h, v(3, 12), v(4, 12), 1, 2).unwrap();
        assert_eq!(out.n(), 13);
        assert_eq!(out.len(), h.len() + 1);
        assert!(out.contains_edge(&Hyperedge::checked(&[3, 13, 4], 13).unwrap()));
        assert!(out.contains_edge(&Hyperedge::checked(&[2, 3, 13], 13).unwrap()));
        assert!(out.contains_edge(&Hyperedge::checked(&[4, 5, 13], 13).unwrap()));
    }

    #[test]
    fn insertion_rejects_bad_inputs() {
        let h = build_k3(12).unwrap();
        // not adjacent
        assert!(insert_odd_vertex(&h, v(3, 12), v(5, 12), 1, 2).is_err());
        // edge {1,2,3} lacks 4
        assert!(matches!(
            insert_odd_vertex(&h, v(3, 12), v(4, 12), 0, 2),
            Err(Error::Precondition(_))
        ));
        // odd input
        let odd = build_k3(13).unwrap();
        assert!(insert_odd_vertex(&odd, v(3, 13), v(4, 13), 1, 2).is_err());
        // input whose EI is not a cycle
        let broken = Hypergraph::from_labels(12, [[2i64, 3, 4], [3, 4, 5]]).unwrap();
        assert!(matches!(
            insert_odd_vertex(&broken, v(3, 12), v(4, 12), 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn augmentation_needs_a_small_edge() {
        let h = build_k3(25).unwrap();
        let e = h.edges()[0].clone();
        // other edges are not 6-uniform
        assert!(matches!(
            augment_to_six(&h, &e),
            Err(Error::Precondition(_))
        ));
        let not_member = Hyperedge::checked(&[1, 5, 9], 25).unwrap();
        assert!(matches!(
            augment_to_six(&h, &not_member),
            Err(Error::Precondition(_))
        ));
        let even = build_k3(26).unwrap();
        assert!(augment_to_six(&even, &even.edges()[0].clone()).is_err());
    }
}
