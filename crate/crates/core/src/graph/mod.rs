//! Undirected simple graphs on vertices `0..n`.
//!
//! Every edge is stored as a normalized [`Pair`] (`lo < hi`); the reverse
//! orientation never appears anywhere past construction. Adjacency is kept as
//! one bitset row per vertex.

mod edgelist;
mod enumerate;
mod graph6;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use enumerate::{
    enumerate_labeled_graphs, enumerate_labeled_graphs_with_cap, LabeledGraphs,
    DEFAULT_ENUMERATION_CAP, MAX_MASK_VERTICES,
};
pub use graph6::{emit_graph6, parse_graph6};

/// An unordered vertex pair, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: usize,
    hi: usize,
}

impl Pair {
    pub fn new(a: usize, b: usize) -> Result<Pair> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Pair { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Pair { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    #[inline]
    pub fn lo(self) -> usize {
        self.lo
    }

    #[inline]
    pub fn hi(self) -> usize {
        self.hi
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.lo == v {
            Some(self.hi)
        } else if self.hi == v {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Position in column order `(0,1), (0,2), (1,2), (0,3), ...`, which is
    /// the bit order of graph6 and of the enumeration masks.
    #[inline]
    pub fn index(self) -> usize {
        self.hi * (self.hi - 1) / 2 + self.lo
    }

    pub fn from_index(index: usize) -> Pair {
        // largest hi with hi*(hi-1)/2 <= index
        let hi = (8 * index + 1).isqrt().div_ceil(2);
        Pair {
            lo: index - hi * (hi - 1) / 2,
            hi,
        }
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

/// A set of normalized pairs. Kept sorted and deduplicated, so derived
/// equality, ordering and hashing are all set semantics.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(Vec<Pair>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    /// Builds a set from raw vertex pairs, normalizing orientation and
    /// collapsing duplicates.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        pairs
            .into_iter()
            .map(|(a, b)| Pair::new(a, b))
            .collect::<Result<Vec<_>>>()
            .map(EdgeSet::from_vec)
    }

    fn from_vec(mut pairs: Vec<Pair>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        EdgeSet(pairs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.0
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Pair> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, p: Pair) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().all(|p| other.contains(*p))
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::from_vec(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.iter().copied().filter(|p| !other.contains(*p)).collect())
    }

    /// Largest vertex mentioned, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        self.0.iter().map(|p| p.hi).max()
    }
}

impl FromIterator<Pair> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = Pair>>(iter: T) -> Self {
        EdgeSet::from_vec(iter.into_iter().collect())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: EdgeSet,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph, normalizing pair orientation. Repeated pairs collapse.
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, pairs, false)
    }

    /// Like [`Graph::new`] but rejects a pair given twice (in either
    /// orientation) with [`Error::DuplicateEdge`].
    pub fn new_strict<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, pairs, true)
    }

    fn build<I>(n: usize, pairs: I, strict: bool) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Vec::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            out.push(Pair::new(a, b)?);
        }
        if strict {
            let mut sorted = out.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(w[0]));
            }
        }
        Ok(Self::from_checked(n, EdgeSet::from_vec(out)))
    }

    pub fn from_edge_set(n: usize, edges: EdgeSet) -> Result<Graph> {
        if let Some(v) = edges.max_vertex().filter(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(Self::from_checked(n, edges))
    }

    pub(crate) fn from_checked(n: usize, edges: EdgeSet) -> Graph {
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        for p in edges.iter() {
            adj[p.lo * words + p.hi / 64] |= 1 << (p.hi % 64);
            adj[p.hi * words + p.lo / 64] |= 1 << (p.lo % 64);
        }
        Graph {
            n,
            edges,
            words,
            adj,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_checked(n, EdgeSet::new())
    }

    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|j| (0..j).map(move |i| Pair { lo: i, hi: j }));
        Self::from_checked(n, pairs.collect())
    }

    pub fn path(n: usize) -> Graph {
        let pairs = (1..n).map(|v| Pair { lo: v - 1, hi: v });
        Self::from_checked(n, pairs.collect())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut pairs: EdgeSet = (1..n).map(|v| Pair { lo: v - 1, hi: v }).collect();
        pairs = pairs.union(&[Pair { lo: 0, hi: n - 1 }].into_iter().collect());
        Self::from_checked(n, pairs)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// Number of `u64` words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn contains_pair(&self, p: Pair) -> bool {
        self.has_edge(p.lo, p.hi)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `G - E'`: same vertices, edges `E \ E'`. Every pair of `E'` must be
    /// an edge.
    pub fn delete_edges(&self, removed: &EdgeSet) -> Result<Graph> {
        if let Some(p) = removed.iter().find(|p| !self.contains_pair(*p)) {
            return Err(Error::NotASubset(p));
        }
        Ok(Self::from_checked(self.n, self.edges.difference(removed)))
    }

    /// `G + E'`: adds the given pairs. Pairs already present are rejected
    /// with [`Error::DuplicateEdge`].
    pub fn add_edges(&self, added: &EdgeSet) -> Result<Graph> {
        if let Some(v) = added.max_vertex().filter(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if let Some(p) = added.iter().find(|p| self.contains_pair(*p)) {
            return Err(Error::DuplicateEdge(p));
        }
        Ok(Self::from_checked(self.n, self.edges.union(added)))
    }

    /// `e_G(v)`, the edges incident on `v`.
    pub fn incident_edges(&self, v: usize) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(EdgeSet(
            self.edges.iter().filter(|p| p.contains(v)).collect(),
        ))
    }

    /// All normalized pairs that are not edges.
    pub fn non_edges(&self) -> EdgeSet {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.m());
        for lo in 0..self.n {
            for hi in lo + 1..self.n {
                if !self.has_edge(lo, hi) {
                    out.push(Pair { lo, hi });
                }
            }
        }
        EdgeSet(out)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// True for `n <= 1` as well.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Edge-subset bitmask in pair-index order, for graphs small enough to
    /// fit in a `u64`.
    pub fn mask(&self) -> Option<u64> {
        if self.n > MAX_MASK_VERTICES {
            return None;
        }
        Some(self.edges.iter().fold(0, |acc, p| acc | 1 << p.index()))
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Graph> {
        if n > MAX_MASK_VERTICES {
            return Err(Error::cap("vertex count for bitmask graphs", MAX_MASK_VERTICES as u64));
        }
        let total = n * n.saturating_sub(1) / 2;
        if total < 64 && mask >> total != 0 {
            return Err(Error::RangeError(format!(
                "mask {mask:#x} has bits beyond the {total} pairs of n = {n}"
            )));
        }
        let pairs = (0..total)
            .filter(|i| mask >> i & 1 == 1)
            .map(Pair::from_index);
        Ok(Self::from_checked(n, pairs.collect()))
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}
