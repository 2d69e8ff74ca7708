//! Ordered partitions and color refinement (1-dimensional Weisfeiler-Leman).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered list of disjoint vertex cells covering `0..n`. Vertices within
/// a cell are kept sorted; cell order carries meaning.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return OrderedPartition { cells: Vec::new() };
        }
        OrderedPartition {
            cells: vec![(0..n).collect()],
        }
    }

    pub fn from_cells(n: usize, mut cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::PreconditionViolated("empty cell in partition".into()));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::PreconditionViolated(format!(
                        "vertex {v} appears in two cells"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::PreconditionViolated(format!("vertex {v} is in no cell")));
        }
        Ok(OrderedPartition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Cell contents flattened in cell order. For a discrete partition this
    /// lists the vertex at each canonical position.
    pub fn flatten(&self) -> Vec<usize> {
        self.cells.iter().flatten().copied().collect()
    }

    /// First non-singleton cell of smallest size.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Splits `vertex` out of cell `cell` into a singleton placed just
    /// before the remainder.
    pub fn individualize(&self, cell: usize, vertex: usize) -> OrderedPartition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..cell]);
        cells.push(vec![vertex]);
        cells.push(self.cells[cell].iter().copied().filter(|&v| v != vertex).collect());
        cells.extend_from_slice(&self.cells[cell + 1..]);
        OrderedPartition { cells }
    }

    /// Every vertex of a cell has the same number of neighbours in every
    /// cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        self.cells.iter().all(|x| {
            self.cells.iter().all(|w| {
                let count = |v: usize| w.iter().filter(|&&u| g.has_edge(v, u)).count();
                let first = count(x[0]);
                x.iter().all(|&v| count(v) == first)
            })
        })
    }
}

fn cell_mask(words: usize, cell: &[usize]) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for &v in cell {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

fn count_into(g: &Graph, v: usize, mask: &[u64]) -> u32 {
    g.row(v)
        .iter()
        .zip(mask)
        .map(|(a, b)| (a & b).count_ones())
        .sum()
}

/// Coarsest equitable refinement of `initial`.
///
/// Cells are used as splitters in order; a split cell is replaced in place
/// by its fragments, ordered by ascending neighbour count into the splitter.
/// Everything depends only on counts, never on vertex labels, so the result
/// commutes with relabeling.
pub fn color_refine(g: &Graph, initial: &OrderedPartition) -> OrderedPartition {
    let mut cells = initial.cells.clone();
    let words = g.words();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            if cells.len() == g.n() {
                return OrderedPartition { cells };
            }
            let mask = cell_mask(words, &cells[s]);
            let mut next = Vec::with_capacity(cells.len());
            let mut split_before_s = 0;
            for (ci, cell) in cells.iter().enumerate() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| (count_into(g, v, &mask), v)).collect();
                keyed.sort_unstable();
                let before = next.len();
                for chunk in keyed.chunk_by(|a, b| a.0 == b.0) {
                    next.push(chunk.iter().map(|&(_, v)| v).collect());
                }
                let pieces = next.len() - before;
                if pieces > 1 {
                    changed = true;
                    if ci < s {
                        split_before_s += pieces - 1;
                    }
                }
            }
            cells = next;
            s += split_before_s + 1;
        }
        if !changed {
            return OrderedPartition { cells };
        }
    }
}
