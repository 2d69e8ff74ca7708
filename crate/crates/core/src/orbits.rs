//! Automorphism orbits `AO(x) = { f(x) : f ∈ group }` of vertices, pairs and
//! pair sets, computed by breadth-first closure under the generators.

use std::collections::{BTreeSet, VecDeque};

use rustc_hash::FxHashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Pair, MAX_MASK_VERTICES};
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitKind {
    Vertex,
    Pair,
    PairSet,
}

/// An orbit with its seed. `elements` is sorted and contains the seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit<T> {
    pub kind: OrbitKind,
    pub seed: T,
    pub elements: Vec<T>,
}

impl<T: Ord> Orbit<T> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

fn closure<T, F>(seed: T, generators: &[Perm], act: F) -> Vec<T>
where
    T: Clone + Ord,
    F: Fn(&Perm, &T) -> T,
{
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = act(g, &x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn check_vertex(group: &PermGroup, v: usize) -> Result<()> {
    if v < group.degree() {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            expected: group.degree(),
            found: v + 1,
        })
    }
}

pub fn vertex_orbit(group: &PermGroup, v: usize) -> Result<Orbit<usize>> {
    check_vertex(group, v)?;
    Ok(Orbit {
        kind: OrbitKind::Vertex,
        seed: v,
        elements: closure(v, group.generators(), |g, &x| g.image(x)),
    })
}

pub fn pair_orbit(group: &PermGroup, p: Pair) -> Result<Orbit<Pair>> {
    check_vertex(group, p.hi())?;
    Ok(Orbit {
        kind: OrbitKind::Pair,
        seed: p,
        elements: closure(p, group.generators(), |g, &x| g.apply_pair_unchecked(x)),
    })
}

/// Orbit of a whole pair set, images compared as sets. The pairs may be
/// edges, non-edges or a mixture; only the group matters.
pub fn edge_set_orbit(group: &PermGroup, set: &EdgeSet) -> Result<Orbit<EdgeSet>> {
    check_set(group, set)?;
    let elements = match mask_closure(group, set) {
        Some(masks) => {
            let mut sets: Vec<EdgeSet> = masks.into_iter().map(set_of_mask).collect();
            sets.sort();
            sets
        }
        None => closure(set.clone(), group.generators(), |g, x| g.apply_set_unchecked(x)),
    };
    Ok(Orbit {
        kind: OrbitKind::PairSet,
        seed: set.clone(),
        elements,
    })
}

/// `|edge_set_orbit(group, set)|` without materializing the sets.
pub fn edge_set_orbit_size(group: &PermGroup, set: &EdgeSet) -> Result<usize> {
    check_set(group, set)?;
    Ok(match mask_closure(group, set) {
        Some(masks) => masks.len(),
        None => closure(set.clone(), group.generators(), |g, x| g.apply_set_unchecked(x)).len(),
    })
}

fn check_set(group: &PermGroup, set: &EdgeSet) -> Result<()> {
    match set.max_vertex() {
        Some(v) => check_vertex(group, v),
        None => Ok(()),
    }
}

fn set_of_mask(mut mask: u64) -> EdgeSet {
    let mut pairs = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        pairs.push(Pair::from_index(mask.trailing_zeros() as usize));
        mask &= mask - 1;
    }
    pairs.into_iter().collect()
}

/// Closure over `u64` pair masks, for degrees small enough that every pair
/// index fits in one word.
fn mask_closure(group: &PermGroup, set: &EdgeSet) -> Option<Vec<u64>> {
    let n = group.degree();
    if n > MAX_MASK_VERTICES {
        return None;
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let tables: Vec<Vec<u8>> = group
        .generators()
        .iter()
        .map(|g| {
            (0..pairs)
                .map(|i| g.apply_pair_unchecked(Pair::from_index(i)).index() as u8)
                .collect()
        })
        .collect();
    let seed = set.iter().fold(0u64, |acc, p| acc | 1 << p.index());
    let mut seen = FxHashSet::default();
    seen.insert(seed);
    let mut queue = vec![seed];
    while let Some(x) = queue.pop() {
        for table in &tables {
            let mut y = 0u64;
            let mut rest = x;
            while rest != 0 {
                y |= 1 << table[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// The vertex orbit partition, each orbit sorted, orbits ordered by their
/// smallest vertex.
pub fn vertex_orbits(group: &PermGroup) -> Vec<Vec<usize>> {
    let n = group.degree();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let orbit = closure(v, group.generators(), |g, &x| g.image(x));
        for &u in &orbit {
            assigned[u] = true;
        }
        out.push(orbit);
    }
    out
}
