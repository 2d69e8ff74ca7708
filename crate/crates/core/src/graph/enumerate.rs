use super::Graph;
use crate::error::{Error, Result};

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;
/// `C(11, 2) = 55` pairs is the most a `u64` edge mask holds.
pub const MAX_MASK_VERTICES: usize = 11;

/// All `2^C(n,2)` labeled graphs on `n` vertices, in increasing edge-mask
/// order (bit `i` is the pair with [`Pair::index`](super::Pair::index) `i`).
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of graphs the full enumeration yields.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_mask(self.n, self.next).expect("mask within range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    enumerate_labeled_graphs_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_labeled_graphs_with_cap(n: usize, cap: usize) -> Result<LabeledGraphs> {
    let cap = cap.min(MAX_MASK_VERTICES);
    if n > cap {
        return Err(Error::cap("vertex count for labeled enumeration", cap as u64));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pairs,
    })
}
