//! Exact check of `|Aut(G)| · |AO_{G-E'}(E')| = |Aut(G-E')| · |AO_G(E')|`
//! and sweeps over many `(G, E')` pairs.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::aut::automorphism_group;
use crate::er::{pair_count, sample_er, with_threads};
use crate::error::{Error, Result};
use crate::graph::{enumerate_labeled_graphs, EdgeSet, Graph};
use crate::group::PermGroup;
use crate::orbits::edge_set_orbit_size;
use crate::serde_big;

/// Both sides of the symmetry ratio for one `(G, E')`.
///
/// `aoG` is the orbit of `E'` as an edge set under `Aut(G)`; `aoGminus` is
/// the orbit of the same pairs as a non-edge set under `Aut(G - E')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(rename = "autG", serialize_with = "serde_big::uint")]
    pub aut_g: BigUint,
    #[serde(rename = "aoG")]
    pub ao_g: usize,
    #[serde(rename = "autGminus", serialize_with = "serde_big::uint")]
    pub aut_g_minus: BigUint,
    #[serde(rename = "aoGminus")]
    pub ao_g_minus: usize,
    /// `autG · aoGminus`
    #[serde(serialize_with = "serde_big::uint")]
    pub lhs_cross: BigUint,
    /// `autGminus · aoG`
    #[serde(serialize_with = "serde_big::uint")]
    pub rhs_cross: BigUint,
    pub holds: bool,
    /// `autG / aoG`
    #[serde(serialize_with = "serde_big::rational")]
    pub ratio: BigRational,
}

pub fn verify_ratio_identity(g: &Graph, removed: &EdgeSet) -> Result<IdentityReport> {
    verify_ratio_identity_with(g, &automorphism_group(g), removed)
}

/// Same as [`verify_ratio_identity`] with `Aut(G)` supplied, for callers that
/// check many subsets of one graph.
pub fn verify_ratio_identity_with(
    g: &Graph,
    aut_g: &PermGroup,
    removed: &EdgeSet,
) -> Result<IdentityReport> {
    if removed.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let minus = g.delete_edges(removed)?;
    let aut_minus = automorphism_group(&minus);
    let order_g = aut_g.order()?;
    let order_minus = aut_minus.order()?;
    let ao_g = edge_set_orbit_size(aut_g, removed)?;
    let ao_g_minus = edge_set_orbit_size(&aut_minus, removed)?;
    let lhs_cross = &order_g * ao_g_minus;
    let rhs_cross = &order_minus * ao_g;
    Ok(IdentityReport {
        ratio: BigRational::new(BigInt::from(order_g.clone()), BigInt::from(ao_g)),
        holds: lhs_cross == rhs_cross,
        aut_g: order_g,
        ao_g,
        aut_g_minus: order_minus,
        ao_g_minus,
        lhs_cross,
        rhs_cross,
    })
}

/// Which edge subsets a sweep checks for each graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetPolicy {
    AllSingleEdges,
    /// Every nonempty subset; exhaustive sweeps allow this up to n = 5.
    AllSubsets,
    /// `samples` uniformly random nonempty subsets per graph.
    Random { samples: usize, seed: u64 },
    /// Every single edge plus `samples` random nonempty subsets.
    SinglesAndRandom { samples: usize, seed: u64 },
}

impl SubsetPolicy {
    fn describe(&self) -> String {
        match self {
            SubsetPolicy::AllSingleEdges => "all-single-edges".into(),
            SubsetPolicy::AllSubsets => "all-subsets".into(),
            SubsetPolicy::Random { samples, seed } => format!("random({samples}, seed={seed})"),
            SubsetPolicy::SinglesAndRandom { samples, seed } => {
                format!("single-edges+random({samples}, seed={seed})")
            }
        }
    }
}

pub const ALL_SUBSETS_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub threads: usize,
    /// Keep one row per check (for CSV output).
    pub collect_rows: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            threads: 1,
            collect_rows: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub graph6: String,
    pub edges: String,
    #[serde(flatten)]
    pub report: IdentityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub policy: String,
    pub graphs: u64,
    pub checks: u64,
    pub violations: u64,
    pub counterexamples: Vec<SweepRow>,
    #[serde(skip)]
    pub rows: Vec<SweepRow>,
}

/// Uniform nonempty subset of `edges`; `None` when there are no edges.
pub fn random_nonempty_subset<R: Rng + ?Sized>(edges: &EdgeSet, rng: &mut R) -> Option<EdgeSet> {
    let m = edges.len();
    if m == 0 {
        return None;
    }
    if m < 64 {
        let mask = rng.gen_range(1..(1u64 << m));
        return Some(
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p)
                .collect(),
        );
    }
    loop {
        let s: EdgeSet = edges.iter().filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return Some(s);
        }
    }
}

fn subsets_for(g: &Graph, policy: SubsetPolicy, stream: u64) -> Vec<EdgeSet> {
    let edges = g.edges();
    let singles = || edges.iter().map(|p| std::iter::once(p).collect()).collect::<Vec<_>>();
    let random = |samples: usize, seed: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        (0..samples)
            .filter_map(|_| random_nonempty_subset(edges, &mut rng))
            .collect::<Vec<_>>()
    };
    match policy {
        SubsetPolicy::AllSingleEdges => singles(),
        SubsetPolicy::AllSubsets => (1u64..1 << edges.len())
            .map(|mask| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| p)
                    .collect()
            })
            .collect(),
        SubsetPolicy::Random { samples, seed } => random(samples, seed),
        SubsetPolicy::SinglesAndRandom { samples, seed } => {
            let mut out = singles();
            out.extend(random(samples, seed));
            out
        }
    }
}

struct GraphOutcome {
    checks: u64,
    bad: Vec<SweepRow>,
    rows: Vec<SweepRow>,
}

fn check_graph(g: &Graph, subsets: &[EdgeSet], collect_rows: bool) -> Result<GraphOutcome> {
    let aut = automorphism_group(g);
    let mut out = GraphOutcome {
        checks: 0,
        bad: Vec::new(),
        rows: Vec::new(),
    };
    let g6 = g.to_graph6();
    for s in subsets {
        let report = verify_ratio_identity_with(g, &aut, s)?;
        out.checks += 1;
        if !report.holds || collect_rows {
            let row = SweepRow {
                graph6: g6.clone(),
                edges: s.to_string(),
                report,
            };
            if !row.report.holds {
                out.bad.push(row.clone());
            }
            if collect_rows {
                out.rows.push(row);
            }
        }
    }
    Ok(out)
}

fn summarize(
    n: usize,
    policy: String,
    outcomes: Vec<Result<GraphOutcome>>,
) -> Result<SweepSummary> {
    let mut summary = SweepSummary {
        n,
        policy,
        graphs: 0,
        checks: 0,
        violations: 0,
        counterexamples: Vec::new(),
        rows: Vec::new(),
    };
    for o in outcomes {
        let o = o?;
        summary.graphs += 1;
        summary.checks += o.checks;
        summary.violations += o.bad.len() as u64;
        summary.counterexamples.extend(o.bad);
        summary.rows.extend(o.rows);
    }
    Ok(summary)
}

/// Checks the identity on every labeled graph on `n` vertices (in mask
/// order) against the subsets chosen by `policy`.
pub fn sweep_verify(n: usize, policy: SubsetPolicy, options: SweepOptions) -> Result<SweepSummary> {
    if policy == SubsetPolicy::AllSubsets && n > ALL_SUBSETS_MAX_N {
        return Err(Error::cap("vertex count for all-subsets sweeps", ALL_SUBSETS_MAX_N as u64));
    }
    let graphs = enumerate_labeled_graphs(n)?;
    let total = graphs.total();
    let outcomes = with_threads(options.threads, || {
        (0..total)
            .into_par_iter()
            .map(|mask| {
                let g = Graph::from_mask(n, mask)?;
                let subsets = subsets_for(&g, policy, mask);
                check_graph(&g, &subsets, options.collect_rows)
            })
            .collect::<Vec<_>>()
    })?;
    summarize(n, policy.describe(), outcomes)
}

/// Checks the identity on `graphs` random graphs on `n` vertices, each with
/// an edge count drawn uniformly from `0..=C(n,2)` and `subsets` random
/// nonempty edge subsets. Graph `i` draws from stream `i` of the seeded
/// generator.
pub fn sweep_random_graphs(
    n: usize,
    graphs: usize,
    subsets: usize,
    seed: u64,
    options: SweepOptions,
) -> Result<SweepSummary> {
    let outcomes = with_threads(options.threads, || {
        (0..graphs as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i);
                let m = rng.gen_range(0..=pair_count(n));
                let g = sample_er(n, m, &mut rng)?;
                let sets: Vec<EdgeSet> = (0..subsets)
                    .filter_map(|_| random_nonempty_subset(g.edges(), &mut rng))
                    .collect();
                check_graph(&g, &sets, options.collect_rows)
            })
            .collect::<Vec<_>>()
    })?;
    summarize(
        n,
        format!("random-graphs({graphs}, subsets={subsets}, seed={seed})"),
        outcomes,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn example_graph() {
        let g = Graph::new(7, [(0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (6, 3)]).unwrap();
        let r = verify_ratio_identity(&g, &set(&[(0, 4), (4, 5)])).unwrap();
        assert_eq!(r.aut_g, BigUint::from(8u32));
        assert_eq!(r.ao_g, 4);
        assert_eq!(r.aut_g_minus, BigUint::from(12u32));
        assert_eq!(r.ao_g_minus, 6);
        assert!(r.holds);
        assert_eq!(r.ratio, BigRational::from_integer(2.into()));
    }

    #[test]
    fn triangle_single_edge() {
        let r = verify_ratio_identity(&Graph::complete(3), &set(&[(0, 1)])).unwrap();
        assert_eq!(
            (r.aut_g.clone(), r.ao_g, r.aut_g_minus.clone(), r.ao_g_minus),
            (BigUint::from(6u32), 3, BigUint::from(2u32), 1)
        );
        assert!(r.holds);
        assert_eq!(r.ratio, BigRational::from_integer(2.into()));
    }

    #[test]
    fn all_edges_removed() {
        let g = Graph::path(4);
        let r = verify_ratio_identity(&g, g.edges()).unwrap();
        assert_eq!(r.aut_g_minus, BigUint::from(24u32));
        assert_eq!(r.ao_g, 1);
        assert_eq!(r.ao_g_minus, 12);
        assert!(r.holds);
    }

    #[test]
    fn errors() {
        let g = Graph::path(3);
        assert_eq!(
            verify_ratio_identity(&g, &EdgeSet::new()).unwrap_err(),
            Error::EmptyEdgeSet
        );
        assert!(matches!(
            verify_ratio_identity(&g, &set(&[(0, 2)])),
            Err(Error::NotASubset(_))
        ));
    }

    #[test]
    fn tiny_sweeps() {
        let s = sweep_verify(3, SubsetPolicy::AllSingleEdges, SweepOptions::default()).unwrap();
        assert_eq!((s.graphs, s.checks, s.violations), (8, 12, 0));
        let s = sweep_verify(4, SubsetPolicy::AllSingleEdges, SweepOptions::default()).unwrap();
        assert_eq!((s.graphs, s.checks, s.violations), (64, 192, 0));
        assert!(sweep_verify(6, SubsetPolicy::AllSubsets, SweepOptions::default()).is_err());
    }

    #[test]
    fn random_subsets_are_nonempty_subsets() {
        let g = Graph::complete(5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let s = random_nonempty_subset(g.edges(), &mut rng).unwrap();
            assert!(!s.is_empty() && s.is_subset(g.edges()));
        }
        assert!(random_nonempty_subset(&EdgeSet::new(), &mut rng).is_none());
    }
}
