//! Permutation groups given by generators.
//!
//! Membership and order come from breadth-first closure under the
//! generators, bounded by an element cap. Groups produced by the
//! automorphism search carry their order from the search itself, so the
//! closure is only needed for groups assembled by hand.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;

pub const DEFAULT_ELEMENT_CAP: usize = 10_000_000;
/// Largest degree the brute-force automorphism oracle accepts.
pub const BRUTE_FORCE_MAX_N: usize = 8;

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: OnceLock<BigUint>,
}

impl PermGroup {
    /// Identity elements are dropped; generators are sorted by image array
    /// and deduplicated.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self::normalized(degree, generators))
    }

    fn normalized(degree: usize, mut generators: Vec<Perm>) -> PermGroup {
        generators.retain(|g| !g.is_identity());
        generators.sort_unstable();
        generators.dedup();
        PermGroup {
            degree,
            generators,
            order: OnceLock::new(),
        }
    }

    pub(crate) fn with_order(degree: usize, generators: Vec<Perm>, order: BigUint) -> PermGroup {
        let g = Self::normalized(degree, generators);
        g.order.set(order).expect("fresh cell");
        g
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::with_order(degree, Vec::new(), BigUint::from(1u32))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Group order, computed by closure on first use when not already known.
    pub fn order(&self) -> Result<BigUint> {
        if let Some(o) = self.order.get() {
            return Ok(o.clone());
        }
        let o = group_order(self.degree, &self.generators)?;
        Ok(self.order.get_or_init(|| o).clone())
    }

    /// True when the order is already known without enumeration.
    pub fn order_known(&self) -> bool {
        self.order.get().is_some()
    }

    pub fn elements(&self) -> Result<Vec<Perm>> {
        enumerate_elements(self, DEFAULT_ELEMENT_CAP)
    }
}

fn closure(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::cap("group element count", cap as u64));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// Order of the group generated by `generators`, by closure from the
/// identity.
pub fn group_order(degree: usize, generators: &[Perm]) -> Result<BigUint> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: g.degree(),
        });
    }
    Ok(BigUint::from(closure(degree, generators, DEFAULT_ELEMENT_CAP)?.len()))
}

/// All elements in breadth-first order from the identity.
pub fn enumerate_elements(group: &PermGroup, cap: usize) -> Result<Vec<Perm>> {
    closure(group.degree, &group.generators, cap)
}

/// Advances `v` to the next permutation in lexicographic order.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `Aut(G)` by testing every one of the `n!` bijections.
///
/// The returned generators are all non-identity automorphisms, so the
/// group's elements are exactly the automorphisms found.
pub fn brute_force_aut(g: &Graph) -> Result<PermGroup> {
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::cap("brute-force automorphism degree", BRUTE_FORCE_MAX_N as u64));
    }
    let mut images: Vec<usize> = (0..g.n()).collect();
    let mut found = Vec::new();
    loop {
        let f = Perm::from_images_unchecked(images.clone());
        if f.is_automorphism_unchecked(g) {
            found.push(f);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    let order = BigUint::from(found.len());
    Ok(PermGroup::with_order(g.n(), found, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(group_order(3, &[]).unwrap(), BigUint::from(1u32));
        let swap = Perm::transposition(2, 0, 1).unwrap();
        assert_eq!(group_order(2, &[swap]).unwrap(), BigUint::from(2u32));
        let s3 = [
            Perm::transposition(3, 0, 1).unwrap(),
            Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        assert_eq!(group_order(3, &s3).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = PermGroup::new(
            5,
            vec![
                Perm::transposition(5, 0, 1).unwrap(),
                Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(enumerate_elements(&s5, 100), Err(Error::CapExceeded { .. })));
        assert_eq!(enumerate_elements(&s5, 120).unwrap().len(), 120);
    }

    #[test]
    fn generators_normalized() {
        let g = PermGroup::new(
            3,
            vec![
                Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
                Perm::identity(3),
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.generators().len(), 2);
        assert!(g.generators()[0] < g.generators()[1]);
        assert!(!g.order_known());
        assert_eq!(g.order().unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn brute_force_examples() {
        let wedge = Graph::path(3);
        assert_eq!(brute_force_aut(&wedge).unwrap().order().unwrap(), BigUint::from(2u32));
        let double_broom = Graph::new(7, [(0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (6, 3)]).unwrap();
        assert_eq!(brute_force_aut(&double_broom).unwrap().order().unwrap(), BigUint::from(8u32));
        assert_eq!(
            brute_force_aut(&Graph::empty(4)).unwrap().order().unwrap(),
            BigUint::from(24u32)
        );
        assert!(brute_force_aut(&Graph::empty(9)).is_err());
    }

    #[test]
    fn next_permutation_counts() {
        let mut v = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
