//! Vertex permutations and their action on pairs, edge sets and graphs.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Pair};

/// A bijection on `0..n`, stored as its image array: `images[i] = f(i)`.
///
/// Ordering is lexicographic by image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Perm(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm(images)
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Perm> {
        Self::from_cycles(n, &[&[a, b]])
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for
    /// `0 -> 1 -> 2 -> 0`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotAPermutation);
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm(images))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.0[x] == x
    }

    fn check_degree(&self, found: usize) -> Result<()> {
        if self.degree() == found {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                expected: self.degree(),
                found,
            })
        }
    }

    /// `self ∘ g`, i.e. `x ↦ self(g(x))`.
    pub fn compose(&self, g: &Perm) -> Result<Perm> {
        self.check_degree(g.degree())?;
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &Perm) -> Perm {
        Perm(g.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `f((a, b)) = (f(a), f(b))`, renormalized.
    pub fn apply_pair(&self, p: Pair) -> Result<Pair> {
        if p.hi() >= self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.hi() + 1,
            });
        }
        Ok(self.apply_pair_unchecked(p))
    }

    #[inline]
    pub(crate) fn apply_pair_unchecked(&self, p: Pair) -> Pair {
        Pair::new(self.0[p.lo()], self.0[p.hi()]).expect("bijection keeps endpoints distinct")
    }

    pub fn apply_set(&self, set: &EdgeSet) -> Result<EdgeSet> {
        if let Some(v) = set.max_vertex().filter(|&v| v >= self.degree()) {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: v + 1,
            });
        }
        Ok(self.apply_set_unchecked(set))
    }

    pub(crate) fn apply_set_unchecked(&self, set: &EdgeSet) -> EdgeSet {
        set.iter().map(|p| self.apply_pair_unchecked(p)).collect()
    }

    /// Relabels `g`: edge `(a, b)` becomes `(f(a), f(b))`, so the new
    /// adjacency matrix is `A'[i][j] = A[f⁻¹(i)][f⁻¹(j)]`.
    pub fn apply_graph(&self, g: &Graph) -> Result<Graph> {
        self.check_degree(g.n())?;
        Ok(Graph::from_checked(g.n(), self.apply_set_unchecked(g.edges())))
    }

    pub fn is_automorphism(&self, g: &Graph) -> Result<bool> {
        self.check_degree(g.n())?;
        Ok(self.is_automorphism_unchecked(g))
    }

    pub(crate) fn is_automorphism_unchecked(&self, g: &Graph) -> bool {
        // a bijection on pairs maps E into E iff it maps E onto E
        g.edges()
            .iter()
            .all(|p| g.has_edge(self.0[p.lo()], self.0[p.hi()]))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// Cycle notation, fixed points omitted; `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "({start}")?;
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                write!(f, " {x}")?;
                seen[x] = true;
                x = self.0[x];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}
