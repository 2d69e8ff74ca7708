//! Exact `G(n, m)` Erdős-Rényi probabilities and a seeded sampler.
//!
//! `P(H ≅ G) = (1 / C(C(n,2), m)) · n! / |Aut(G)|`, kept as an exact rational.
//! Floating point only shows up in Monte Carlo estimates.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{analyze, automorphism_group, canonical_form};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Pair};
use crate::orbits::edge_set_orbit_size;
use crate::serde_big;

/// Trials per independently seeded Monte Carlo chunk. Chunking is fixed so
/// results do not depend on the thread count.
const TRIAL_CHUNK: u64 = 4096;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `x · (x-1) · … · (x-len+1)`; the empty product is 1.
pub fn falling_factorial(x: u64, len: u64) -> BigUint {
    assert!(len <= x + 1, "falling factorial runs past zero");
    (0..len).fold(BigUint::one(), |acc, i| acc * (x - i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn rational(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub(crate) fn rational_int(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn exact_div(num: &BigUint, den: &BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDivisible {
            numerator: num.to_string(),
            denominator: den.to_string(),
        })
    }
}

/// Number of distinct labeled edge sets isomorphic to `g`: `n! / |Aut(g)|`.
pub fn count_labeled_copies(g: &Graph) -> BigUint {
    let aut = automorphism_group(g).order().expect("search knows the order");
    count_labeled_copies_with(g, &aut)
}

pub fn count_labeled_copies_with(g: &Graph, aut_order: &BigUint) -> BigUint {
    exact_div(&factorial(g.n() as u64), aut_order).expect("|Aut(G)| divides n!")
}

pub fn er_prob_isomorphic(g: &Graph) -> BigRational {
    let aut = automorphism_group(g).order().expect("search knows the order");
    er_prob_isomorphic_with(g, &aut)
}

pub fn er_prob_isomorphic_with(g: &Graph, aut_order: &BigUint) -> BigRational {
    let sets = binomial(pair_count(g.n()) as u64, g.m() as u64);
    rational(&factorial(g.n() as u64), &(sets * aut_order))
}

/// Uniform `m`-subset of the `C(n,2)` pairs (Floyd's algorithm over pair
/// indices).
pub fn sample_er<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let total = pair_count(n);
    if m > total {
        return Err(Error::MOutOfRange { n, m, max: total });
    }
    let mut chosen = BTreeSet::new();
    for j in total - m..total {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let edges: EdgeSet = chosen.into_iter().map(Pair::from_index).collect();
    Ok(Graph::from_checked(n, edges))
}

pub fn sample_er_seeded(n: usize, m: usize, seed: u64) -> Result<Graph> {
    sample_er(n, m, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleEstimate {
    pub trials: u64,
    pub hits: u64,
    pub estimate: f64,
    /// Normal-approximation 95% half width, `1.96 · sqrt(p(1-p)/trials)`.
    pub ci95_halfwidth: f64,
}

impl SampleEstimate {
    fn new(trials: u64, hits: u64) -> Self {
        let p = hits as f64 / trials as f64;
        SampleEstimate {
            trials,
            hits,
            estimate: p,
            ci95_halfwidth: 1.96 * (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }
}

pub fn estimate_prob_isomorphic(g: &Graph, trials: u64, seed: u64) -> Result<SampleEstimate> {
    estimate_prob_isomorphic_par(g, trials, seed, 1)
}

/// Samples `G(n, m)` with `n, m` taken from `g` and counts samples
/// isomorphic to `g`. Chunk `c` of the trials draws from stream `c` of the
/// seeded generator, so any thread count gives the same answer.
pub fn estimate_prob_isomorphic_par(
    g: &Graph,
    trials: u64,
    seed: u64,
    threads: usize,
) -> Result<SampleEstimate> {
    if trials == 0 {
        return Err(Error::RangeError("trials must be at least 1".into()));
    }
    let target = canonical_form(g);
    let (n, m) = (g.n(), g.m());
    let chunks = trials.div_ceil(TRIAL_CHUNK);
    let run_chunk = |c: u64| -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c);
        let count = TRIAL_CHUNK.min(trials - c * TRIAL_CHUNK);
        (0..count)
            .filter(|_| {
                let h = sample_er(n, m, &mut rng).expect("m fits n");
                canonical_form(&h) == target
            })
            .count() as u64
    };
    let hits = with_threads(threads, || (0..chunks).into_par_iter().map(run_chunk).sum())?;
    Ok(SampleEstimate::new(trials, hits))
}

pub(crate) fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::RangeError(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// One side-by-side evaluation in the probability chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquationCheck {
    pub name: &'static str,
    #[serde(serialize_with = "serde_big::rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serde_big::rational")]
    pub rhs: BigRational,
    pub holds: bool,
}

impl EquationCheck {
    fn new(name: &'static str, lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs == rhs;
        EquationCheck {
            name,
            lhs,
            rhs,
            holds,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainCase {
    /// `E' = E`: checked directly against the symmetric group.
    AllEdges,
    General,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofChainReport {
    pub case: ChainCase,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    #[serde(rename = "autG", serialize_with = "serde_big::uint")]
    pub aut_g: BigUint,
    #[serde(rename = "aoG")]
    pub ao_g: usize,
    #[serde(rename = "autGminus", serialize_with = "serde_big::uint")]
    pub aut_g_minus: BigUint,
    #[serde(rename = "aoGminus")]
    pub ao_g_minus: usize,
    pub equations: Vec<EquationCheck>,
    pub holds: bool,
}

/// Evaluates every step of the probability argument relating `G` and
/// `G - E'` as exact rationals, using computed group orders and orbit sizes.
pub fn verify_proof_chain(g: &Graph, removed: &EdgeSet) -> Result<ProofChainReport> {
    if removed.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let minus = g.delete_edges(removed)?;
    let grp = analyze(g).group;
    let grp_minus = analyze(&minus).group;
    let aut_g = grp.order()?;
    let aut_g_minus = grp_minus.order()?;
    let ao_g = edge_set_orbit_size(&grp, removed)?;
    let ao_g_minus = edge_set_orbit_size(&grp_minus, removed)?;

    let n = g.n() as u64;
    let m = g.m() as u64;
    let k = removed.len() as u64;
    let pairs = pair_count(g.n()) as u64;
    let n_fact = factorial(n);
    let ao_g_big = BigUint::from(ao_g);
    let ao_gm_big = BigUint::from(ao_g_minus);

    let mut equations = Vec::new();
    let case = if k == m {
        equations.push(EquationCheck::new(
            "aut_minus_is_symmetric_group",
            rational_int(&aut_g_minus),
            rational_int(&n_fact),
        ));
        equations.push(EquationCheck::new(
            "edge_orbit_is_single",
            rational_int(&ao_g_big),
            BigRational::one(),
        ));
        equations.push(EquationCheck::new(
            "non_edge_orbit_counts_copies",
            rational_int(&ao_gm_big),
            rational(&n_fact, &aut_g),
        ));
        ChainCase::AllEdges
    } else {
        let p_g = er_prob_isomorphic_with(g, &aut_g);
        let p_minus = er_prob_isomorphic_with(&minus, &aut_g_minus);
        let c_mk = rational_int(&binomial(m, k));
        let free_k = rational_int(&binomial(pairs - (m - k), k));
        let one_over_ao = rational(&BigUint::one(), &ao_g_big);
        let ao_minus = rational_int(&ao_gm_big);

        // chance the last k edges drawn are some image of E', two ways
        equations.push(EquationCheck::new(
            "last_edges_event",
            &p_g / &c_mk,
            &one_over_ao * &ao_minus / &free_k * &p_minus,
        ));
        equations.push(EquationCheck::new(
            "scaled_by_binomial",
            p_g.clone(),
            &c_mk * &one_over_ao * &ao_minus / &free_k * &p_minus,
        ));
        let c_nm = rational_int(&binomial(pairs, m));
        let c_nmk = rational_int(&binomial(pairs, m - k));
        equations.push(EquationCheck::new(
            "er_substituted",
            rational(&n_fact, &aut_g) / &c_nm,
            &c_mk / rational_int(&ao_g_big) * &ao_minus / &free_k / &c_nmk
                * rational(&n_fact, &aut_g_minus),
        ));
        let lhs_ratio = rational(&ao_g_big, &aut_g);
        let minus_ratio = rational(&ao_gm_big, &aut_g_minus);
        equations.push(EquationCheck::new(
            "ratio_expansion",
            lhs_ratio.clone(),
            &c_nm / &c_nmk * (&c_mk / &free_k) * &minus_ratio,
        ));
        let s = Shorthand::new(pairs, m, k);
        let expanded = rational(&s.a, &s.b) / rational(&s.c, &s.d)
            * (rational(&s.e, &s.f) / rational(&s.g, &s.h))
            * &minus_ratio;
        equations.push(EquationCheck::new(
            "falling_factorial_expansion",
            lhs_ratio,
            expanded,
        ));
        equations.push(EquationCheck::new(
            "shorthand_cancellation",
            rational(&(&s.a * &s.d * &s.e * &s.h), &(&s.b * &s.c * &s.f * &s.g)),
            BigRational::one(),
        ));
        ChainCase::General
    };
    let holds = equations.iter().all(|e| e.holds);
    Ok(ProofChainReport {
        case,
        n: g.n(),
        m: g.m(),
        k: removed.len(),
        aut_g,
        ao_g,
        aut_g_minus,
        ao_g_minus,
        equations,
        holds,
    })
}

/// The eight falling-factorial products whose cancellation closes the
/// argument, for `N = C(n,2)` pairs, `m` edges and `k` removed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shorthand {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub d: BigUint,
    pub e: BigUint,
    pub f: BigUint,
    pub g: BigUint,
    pub h: BigUint,
}

impl Shorthand {
    pub fn new(pairs: u64, m: u64, k: u64) -> Self {
        Shorthand {
            a: falling_factorial(pairs, m),
            b: factorial(m),
            c: falling_factorial(pairs, m - k),
            d: factorial(m - k),
            e: falling_factorial(m, k),
            f: factorial(k),
            g: falling_factorial(pairs - (m - k), k),
            h: factorial(k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationCheck {
    pub n: usize,
    pub m: u64,
    pub k: u64,
    pub binomial_identity: bool,
    pub a_eq_cg: bool,
    pub b_eq_ed: bool,
    pub f_eq_h: bool,
    pub product_is_one: bool,
    pub holds: bool,
}

pub fn check_binomial_cancellation(n: usize, m: u64, k: u64) -> Result<CancellationCheck> {
    let pairs = pair_count(n) as u64;
    if !(1 <= k && k <= m && m <= pairs) {
        return Err(Error::RangeError(format!(
            "need 1 <= k <= m <= C(n,2) = {pairs}, got n = {n}, m = {m}, k = {k}"
        )));
    }
    let binomial_identity = binomial(pairs, m) * binomial(m, k)
        == binomial(pairs, m - k) * binomial(pairs - (m - k), k);
    let s = Shorthand::new(pairs, m, k);
    let a_eq_cg = s.a == &s.c * &s.g;
    let b_eq_ed = s.b == &s.e * &s.d;
    let f_eq_h = s.f == s.h;
    let product_is_one = &s.a * &s.d * &s.e * &s.h == &s.b * &s.c * &s.f * &s.g;
    Ok(CancellationCheck {
        n,
        m,
        k,
        binomial_identity,
        a_eq_cg,
        b_eq_ed,
        f_eq_h,
        product_is_one,
        holds: binomial_identity && a_eq_cg && b_eq_ed && f_eq_h && product_is_one,
    })
}

pub fn verify_binomial_cancellation(n: usize, m: u64, k: u64) -> Result<bool> {
    Ok(check_binomial_cancellation(n, m, k)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationSweep {
    pub nmax: usize,
    pub checked: u64,
    pub failures: Vec<CancellationCheck>,
}

/// Every `1 <= k <= m <= C(n,2)` for `2 <= n <= nmax`.
pub fn cancellation_sweep(nmax: usize) -> Result<CancellationSweep> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=nmax {
        let pairs = pair_count(n) as u64;
        for m in 1..=pairs {
            for k in 1..=m {
                let c = check_binomial_cancellation(n, m, k)?;
                checked += 1;
                if !c.holds {
                    failures.push(c);
                }
            }
        }
    }
    Ok(CancellationSweep {
        nmax,
        checked,
        failures,
    })
}
