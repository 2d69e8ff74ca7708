//! Brute-force oracles that share no code with the library's search.

#![allow(dead_code)]

use std::collections::BTreeSet;

use edgesym::{EdgeSet, Graph};
use itertools::Itertools;

pub fn double_broom() -> Graph {
    Graph::new(7, [(0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (6, 3)]).unwrap()
}

pub fn pair_bit(u: usize, v: usize) -> u64 {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    1u64 << (hi * (hi - 1) / 2 + lo)
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|p| (p.lo(), p.hi())).collect()
}

pub fn mask_of(edges: &[(usize, usize)]) -> u64 {
    edges.iter().fold(0, |acc, &(u, v)| acc | pair_bit(u, v))
}

pub fn relabeled_mask(edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    edges.iter().fold(0, |acc, &(u, v)| acc | pair_bit(perm[u], perm[v]))
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Every automorphism, identity included, by trying all `n!` bijections.
pub fn brute_automorphisms(g: &Graph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let edges = edge_list(g);
    let mask = mask_of(&edges);
    perms
        .iter()
        .filter(|p| relabeled_mask(&edges, p) == mask)
        .cloned()
        .collect()
}

/// Smallest relabeled edge mask; equal iff isomorphic.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges = edge_list(g);
    perms.iter().map(|p| relabeled_mask(&edges, p)).min().unwrap_or(0)
}

/// Orbit of a pair set under an explicitly listed group.
pub fn orbit_by_enumeration(group: &[Vec<usize>], set: &EdgeSet) -> BTreeSet<Vec<(usize, usize)>> {
    group
        .iter()
        .map(|p| {
            let mut img: Vec<(usize, usize)> = set
                .iter()
                .map(|e| {
                    let (a, b) = (p[e.lo()], p[e.hi()]);
                    (a.min(b), a.max(b))
                })
                .collect();
            img.sort();
            img
        })
        .collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
