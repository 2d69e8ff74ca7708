//! Automorphism groups, canonical forms and isomorphism testing.

mod refine;
mod search;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Perm;

pub use refine::{color_refine, OrderedPartition};

/// Canonical adjacency string: the upper triangle (row-major, `i < j`) of
/// the canonically relabeled adjacency matrix, packed most significant bit
/// first. Equal certificates mean isomorphic graphs and vice versa.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    n: usize,
    bits: Vec<u8>,
}

impl Certificate {
    pub(crate) fn of_ordering(g: &Graph, order: &[usize]) -> Certificate {
        let n = g.n();
        let total = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u8; total.div_ceil(8)];
        let mut k = 0;
        for i in 0..n {
            let row = g.row(order[i]);
            for &vj in &order[i + 1..] {
                if row[vj / 64] >> (vj % 64) & 1 == 1 {
                    bits[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        Certificate { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bits
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.bits)
    }

    /// The canonical representative graph the certificate encodes.
    pub fn to_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 8] & (0x80 >> (k % 8)) != 0 {
                    pairs.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(self.n, pairs).expect("certificate encodes a simple graph")
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate(n={}, {})", self.n, self.to_hex())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Everything one search produces: the automorphism group (with its order
/// already known), the certificate, and the canonical labeling.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group: PermGroup,
    pub certificate: Certificate,
    /// Maps each vertex to its canonical position.
    pub labeling: Perm,
}

pub fn analyze(g: &Graph) -> Analysis {
    let out = search::search(g);
    let labeling = Perm::from_images_unchecked({
        let mut images = vec![0; g.n()];
        for (pos, &v) in out.canonical_order.iter().enumerate() {
            images[v] = pos;
        }
        images
    });
    Analysis {
        group: PermGroup::with_order(g.n(), out.generators, out.order),
        certificate: out.certificate,
        labeling,
    }
}

pub fn automorphism_group(g: &Graph) -> PermGroup {
    analyze(g).group
}

pub fn canonical_form(g: &Graph) -> Certificate {
    analyze(g).certificate
}

/// Certificate plus the relabeling `f` with `f.apply_graph(g)` equal to
/// the certificate's graph.
pub fn canonical_labeling(g: &Graph) -> (Certificate, Perm) {
    let a = analyze(g);
    (a.certificate, a.labeling)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::brute_force_aut;
    use num_bigint::BigUint;

    fn double_broom() -> Graph {
        Graph::new(7, [(0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (6, 3)]).unwrap()
    }

    #[test]
    fn example_graph_order() {
        let g = double_broom();
        let grp = automorphism_group(&g);
        assert_eq!(grp.order().unwrap(), BigUint::from(8u32));
        for f in grp.generators() {
            assert!(f.is_automorphism(&g).unwrap());
        }
        assert_eq!(
            grp.order().unwrap(),
            brute_force_aut(&g).unwrap().order().unwrap()
        );
    }

    #[test]
    fn complete_graphs() {
        let mut fact = BigUint::from(1u32);
        for n in 1..=9usize {
            fact *= n;
            assert_eq!(automorphism_group(&Graph::complete(n)).order().unwrap(), fact);
            assert_eq!(automorphism_group(&Graph::empty(n)).order().unwrap(), fact);
        }
    }

    #[test]
    fn asymmetric_six_vertex_graph() {
        // first asymmetric labeled graph at n = 6 in mask order
        let g = Graph::new(6, [(0, 2), (1, 2), (0, 3), (2, 3), (1, 4), (0, 5)]).unwrap();
        assert_eq!(automorphism_group(&g).order().unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn labeling_reproduces_certificate_graph() {
        let g = double_broom();
        let (cert, f) = canonical_labeling(&g);
        assert_eq!(f.apply_graph(&g).unwrap(), cert.to_graph());
    }

    #[test]
    fn isomorphism_examples() {
        assert!(!is_isomorphic(&Graph::path(3), &Graph::complete(3)));
        let a = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(automorphism_group(&Graph::empty(0)).order().unwrap(), BigUint::from(1u32));
        assert_eq!(canonical_form(&Graph::empty(0)).to_hex(), "");
        assert_eq!(canonical_form(&Graph::complete(2)).to_hex(), "80");
    }

    #[test]
    fn petersen_and_large_paths() {
        let petersen = crate::graph::parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(automorphism_group(&petersen).order().unwrap(), BigUint::from(120u32));
        let p = Graph::path(200);
        assert_eq!(automorphism_group(&p).order().unwrap(), BigUint::from(2u32));
        let c = Graph::cycle(60);
        assert_eq!(automorphism_group(&c).order().unwrap(), BigUint::from(120u32));
    }
}
