mod common;

use std::collections::HashMap;

use common::*;
use edgesym::er::{count_labeled_copies, er_prob_isomorphic, sample_er};
use edgesym::graph::enumerate_labeled_graphs;
use edgesym::{analyze, brute_force_aut, edge_set_orbit, BigRational, BigUint, Graph};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn search_matches_brute_force_through_five() {
    for n in 0..=5 {
        let perms = all_perms(n);
        for g in enumerate_labeled_graphs(n).unwrap() {
            let auts = brute_automorphisms(&g, &perms);
            let a = analyze(&g);
            assert_eq!(a.group.order().unwrap(), BigUint::from(auts.len()), "{g:?}");
            assert_eq!(
                brute_force_aut(&g).unwrap().order().unwrap(),
                BigUint::from(auts.len())
            );
        }
    }
}

#[test]
fn certificates_partition_like_isomorphism() {
    for (n, classes) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let perms = all_perms(n);
        let mut by_cert: HashMap<_, u64> = HashMap::new();
        let mut by_brute: HashMap<u64, _> = HashMap::new();
        for g in enumerate_labeled_graphs(n).unwrap() {
            let cert = analyze(&g).certificate;
            let brute = brute_canonical(&g, &perms);
            let seen = by_brute.entry(brute).or_insert_with(|| cert.clone());
            assert_eq!(*seen, cert);
            *by_cert.entry(cert).or_default() += 1;
        }
        assert_eq!(by_cert.len(), classes);
        assert_eq!(by_brute.len(), classes);
    }
}

#[test]
fn orbits_match_enumeration() {
    let perms = all_perms(5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in enumerate_labeled_graphs(5).unwrap().filter(|g| g.m() > 0) {
        let auts = brute_automorphisms(&g, &perms);
        let grp = analyze(&g).group;
        for _ in 0..5 {
            let s = edgesym::identity::random_nonempty_subset(g.edges(), &mut rng).unwrap();
            let orbit = edge_set_orbit(&grp, &s).unwrap();
            let expected = orbit_by_enumeration(&auts, &s);
            let got: Vec<Vec<(usize, usize)>> = orbit
                .elements
                .iter()
                .map(|e| e.iter().map(|p| (p.lo(), p.hi())).collect())
                .collect();
            assert_eq!(got, expected.into_iter().collect::<Vec<_>>());
        }
    }
}

#[test]
fn labeled_copy_census() {
    for n in 1..=5 {
        let perms = all_perms(n);
        let mut census: HashMap<u64, (Graph, u64)> = HashMap::new();
        for g in enumerate_labeled_graphs(n).unwrap() {
            census.entry(brute_canonical(&g, &perms)).or_insert((g, 0)).1 += 1;
        }
        let mut per_m: HashMap<usize, BigRational> = HashMap::new();
        for (g, copies) in census.values() {
            assert_eq!(count_labeled_copies(g), BigUint::from(*copies));
            *per_m.entry(g.m()).or_insert_with(BigRational::zero) += er_prob_isomorphic(g);
        }
        assert_eq!(per_m.len(), n * (n - 1) / 2 + 1);
        assert!(per_m.values().all(|p| p.is_one()));
    }
}

#[test]
fn sampler_is_uniform_over_wedges() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trials = 30_000;
    let mut counts = [0u32; 3];
    for _ in 0..trials {
        let g = sample_er(3, 2, &mut rng).unwrap();
        let missing = (0..3usize)
            .flat_map(|u| (u + 1..3).map(move |v| (u, v)))
            .position(|(u, v)| !g.has_edge(u, v))
            .unwrap();
        counts[missing] += 1;
    }
    let expected = trials as f64 / 3.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    // 99.9% quantile of chi-square with 2 degrees of freedom
    assert!(chi2 < 13.82, "chi2 = {chi2}, counts = {counts:?}");
    for c in counts {
        assert!((c as f64 / trials as f64 - 1.0 / 3.0).abs() < 0.02);
    }
}

#[test]
fn sampler_covers_all_pair_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..2000 {
        seen.insert(sample_er(4, 3, &mut rng).unwrap().mask().unwrap());
    }
    // C(6, 3)
    assert_eq!(seen.len(), 20);
}
