//! Vertices of the cycle `C_n`, labelled `1..=n` and taken modulo `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex label in `1..=n`.
///
/// Arithmetic wraps modulo the ambient `n`, with residue `0` mapped to `n`,
/// so that `successor(n) == 1` and `predecessor(1) == n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(u32);

impl Vertex {
    /// Checked constructor: `value` must already lie in `1..=n`.
    pub fn new(value: i64, n: usize) -> Result<Self> {
        if value < 1 || value > n as i64 {
            return Err(Error::VertexOutOfRange { vertex: value, n });
        }
        Ok(Vertex(value as u32))
    }

    /// Reduces an arbitrary integer label modulo `n`.
    pub fn wrap(value: i64, n: usize) -> Self {
        assert!(n > 0, "ambient vertex count must be positive");
        let r = value.rem_euclid(n as i64);
        Vertex(if r == 0 { n as u32 } else { r as u32 })
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position, handy for bit masks and arrays.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn offset(self, delta: i64, n: usize) -> Self {
        Self::wrap(self.0 as i64 + delta, n)
    }

    pub fn successor(self, n: usize) -> Self {
        self.offset(1, n)
    }

    pub fn predecessor(self, n: usize) -> Self {
        self.offset(-1, n)
    }

    /// True when `self` and `other` are joined by an edge of `C_n`.
    pub fn is_adjacent(self, other: Vertex, n: usize) -> bool {
        self != other && (self.successor(n) == other || other.successor(n) == self)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wraps_zero_to_n() {
        assert_eq!(Vertex::wrap(0, 12).get(), 12);
        assert_eq!(Vertex::wrap(13, 12).get(), 1);
        assert_eq!(Vertex::wrap(-2, 25).get(), 23);
        assert_eq!(Vertex::wrap(-1, 25).get(), 24);
    }

    #[test]
    fn successor_and_predecessor_wrap() {
        let n = 7;
        assert_eq!(Vertex::wrap(7, n).successor(n).get(), 1);
        assert_eq!(Vertex::wrap(1, n).predecessor(n).get(), 7);
        assert!(Vertex::wrap(7, n).is_adjacent(Vertex::wrap(1, n), n));
        assert!(!Vertex::wrap(3, n).is_adjacent(Vertex::wrap(5, n), n));
    }

    #[test]
    fn checked_constructor_rejects_out_of_range() {
        assert!(Vertex::new(0, 5).is_err());
        assert!(Vertex::new(6, 5).is_err());
        assert_eq!(Vertex::new(5, 5).unwrap().get(), 5);
    }
}
