//! Decks, augmented decks and the symmetry-ratio extension filter.
//!
//! An augmented card `G - e_G(v)` keeps all `n` vertices and leaves `v`
//! isolated. For connected `G` with `n >= 3`, the multiplicity of a card
//! class equals the orbit size of its origin vertex, and
//! `|Aut(G)| = M(G') · |Aut(G')| / |AO_{G'}(e_G(v))|`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::aut::{analyze, Certificate};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, EdgeSet, Graph, Pair};
use crate::orbits::{edge_set_orbit, edge_set_orbit_size, vertex_orbits};
use crate::serde_big;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Card {
    pub graph: Graph,
    /// Vertex whose deletion produced the card; `None` in blind decks.
    pub origin: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckClass {
    pub certificate: Certificate,
    /// First card of the class in deck order.
    pub representative: Graph,
    pub multiplicity: usize,
    pub origins: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeckKind {
    Classic,
    Augmented,
}

/// A multiset of cards grouped into isomorphism classes. Classes are
/// ordered by certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deck {
    kind: DeckKind,
    cards: Vec<Card>,
    classes: Vec<DeckClass>,
}

impl Deck {
    pub fn from_cards(kind: DeckKind, cards: Vec<Card>) -> Deck {
        let mut groups: BTreeMap<Certificate, DeckClass> = BTreeMap::new();
        for card in &cards {
            let cert = analyze(&card.graph).certificate;
            let class = groups.entry(cert.clone()).or_insert_with(|| DeckClass {
                certificate: cert,
                representative: card.graph.clone(),
                multiplicity: 0,
                origins: Vec::new(),
            });
            class.multiplicity += 1;
            class.origins.extend(card.origin);
        }
        Deck {
            kind,
            cards,
            classes: groups.into_values().collect(),
        }
    }

    pub fn kind(&self) -> DeckKind {
        self.kind
    }

    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    pub fn classes(&self) -> &[DeckClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    /// `M(G')`, zero when no card is isomorphic to `card`.
    pub fn multiplicity(&self, card: &Graph) -> usize {
        let cert = analyze(card).certificate;
        self.classes
            .iter()
            .find(|c| c.certificate == cert)
            .map_or(0, |c| c.multiplicity)
    }

    /// The same deck with origin vertices forgotten.
    pub fn blind(&self) -> Deck {
        let cards = self
            .cards
            .iter()
            .map(|c| Card {
                graph: c.graph.clone(),
                origin: None,
            })
            .collect();
        Deck::from_cards(self.kind, cards)
    }

    pub fn to_json(&self) -> DeckJson {
        DeckJson {
            kind: self.kind,
            cards: self
                .classes
                .iter()
                .map(|c| DeckEntry {
                    graph6: c.representative.to_graph6(),
                    multiplicity: c.multiplicity,
                })
                .collect(),
        }
    }

    /// Rebuilds a blind deck from its JSON form.
    pub fn from_json(json: &DeckJson) -> Result<Deck> {
        let mut cards = Vec::new();
        for entry in &json.cards {
            let graph = parse_graph6(&entry.graph6)?;
            for _ in 0..entry.multiplicity {
                cards.push(Card {
                    graph: graph.clone(),
                    origin: None,
                });
            }
        }
        Ok(Deck::from_cards(json.kind, cards))
    }
}

/// Serialized deck: one entry per isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckJson {
    pub kind: DeckKind,
    pub cards: Vec<DeckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckEntry {
    pub graph6: String,
    pub multiplicity: usize,
}

/// `G - v`: the vertex is removed and higher vertices shift down by one.
pub fn vertex_deleted(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let edges: EdgeSet = g
        .edges()
        .iter()
        .filter(|p| !p.contains(v))
        .map(|p| Pair::new(shift(p.lo()), shift(p.hi())).expect("distinct endpoints"))
        .collect();
    Ok(Graph::from_checked(g.n() - 1, edges))
}

fn require_deck_size(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::PreconditionViolated(
            "a deck needs at least 2 vertices".into(),
        ));
    }
    Ok(())
}

pub fn classic_deck(g: &Graph) -> Result<Deck> {
    require_deck_size(g)?;
    let cards = (0..g.n())
        .map(|v| {
            Ok(Card {
                graph: vertex_deleted(g, v)?,
                origin: Some(v),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_cards(DeckKind::Classic, cards))
}

/// `{ G - e_G(v) : v ∈ V }`, every card on all `n` vertices.
pub fn augmented_deck(g: &Graph) -> Result<Deck> {
    require_deck_size(g)?;
    let cards = (0..g.n())
        .map(|v| {
            Ok(Card {
                graph: g.delete_edges(&g.incident_edges(v)?)?,
                origin: Some(v),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_cards(DeckKind::Augmented, cards))
}

/// Kelly's count: every edge survives in exactly `n - 2` cards.
pub fn kelly_edge_count(deck: &Deck) -> Result<usize> {
    let n = deck.len();
    if n < 3 {
        return Err(Error::PreconditionViolated(
            "edge count needs a deck of at least 3 cards".into(),
        ));
    }
    let expected_n = match deck.kind {
        DeckKind::Augmented => n,
        DeckKind::Classic => n - 1,
    };
    if let Some(c) = deck.cards.iter().find(|c| c.graph.n() != expected_n) {
        return Err(Error::PreconditionViolated(format!(
            "card on {} vertices in a deck of {n} cards",
            c.graph.n()
        )));
    }
    let total: usize = deck.cards.iter().map(|c| c.graph.m()).sum();
    if !total.is_multiple_of(n - 2) {
        return Err(Error::NotDivisible {
            numerator: total.to_string(),
            denominator: (n - 2).to_string(),
        });
    }
    Ok(total / (n - 2))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::PreconditionViolated("graph needs at least 3 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("graph is disconnected".into()));
    }
    Ok(())
}

/// `|AO_G(e_G(v))| = |AO_G(v)|` for every vertex `v`.
pub fn check_vertex_edge_orbit_identity(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    let group = analyze(g).group;
    for orbit in vertex_orbits(&group) {
        for &v in &orbit {
            let edges = g.incident_edges(v)?;
            if edge_set_orbit_size(&group, &edges)? != orbit.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `M · |Aut(card)| / |AO_card(deleted)|`, with the deleted incident set
/// acting as non-edges of the card. Fails if the division is not exact.
pub fn recover_aut_order(card: &Graph, multiplicity: usize, deleted: &EdgeSet) -> Result<BigUint> {
    if let Some(p) = deleted.iter().find(|p| card.contains_pair(*p)) {
        return Err(Error::PreconditionViolated(format!(
            "deleted pair {p} is still an edge of the card"
        )));
    }
    let group = analyze(card).group;
    let orbit = edge_set_orbit_size(&group, deleted)?;
    let num = group.order()? * multiplicity;
    let (q, r) = num.div_rem(&BigUint::from(orbit));
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            numerator: num.to_string(),
            denominator: orbit.to_string(),
        });
    }
    Ok(q)
}

/// Which vertices of a card may have been the deleted one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OriginMode {
    /// Isolated vertices only, as every augmented card's origin is isolated.
    #[default]
    StrictIsolated,
    /// Every vertex with room for the missing degree.
    AllVertices,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionClass {
    /// Smallest member of the orbit.
    pub representative: EdgeSet,
    pub orbit_size: usize,
    /// `M(G_i) · |Aut(G_i)| / |AO_{G_i}(E_i)|`
    #[serde(serialize_with = "serde_big::uint")]
    pub ratio: BigUint,
    pub extension_graph6: String,
    pub extension_certificate: Certificate,
    #[serde(serialize_with = "serde_big::uint")]
    pub extension_aut: BigUint,
    /// The ratio equals the automorphism count of the extended graph, as it
    /// must for the true reconstruction.
    pub symmetry_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CardReport {
    pub graph6: String,
    pub certificate: Certificate,
    pub multiplicity: usize,
    #[serde(serialize_with = "serde_big::uint")]
    pub aut_order: BigUint,
    pub added_degree: usize,
    pub plausible_origins: Vec<usize>,
    pub candidates: usize,
    pub classes: Vec<ExtensionClass>,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reconstruction {
    #[serde(serialize_with = "serde_big::uint")]
    pub aut_order: BigUint,
    pub graph6: String,
    pub certificate: Certificate,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub n: usize,
    pub edge_count: usize,
    pub mode: OriginMode,
    pub cards: Vec<CardReport>,
    /// Ratios attained by some extension class on every card.
    #[serde(serialize_with = "serde_big::uints")]
    pub common_ratios: Vec<BigUint>,
    /// Exactly one common ratio, attained by exactly one orbit class per card.
    pub literal_unique: bool,
    /// Every `(ratio, extension)` pair realized on all cards by
    /// symmetry-consistent classes.
    pub viable: Vec<Reconstruction>,
    /// Exactly one viable pair, and on every card exactly one
    /// symmetry-consistent class attains its ratio.
    pub certified: bool,
    pub reconstructed: Option<Reconstruction>,
}

fn card_report(
    card: &Graph,
    known_origin: Option<usize>,
    multiplicity: usize,
    edge_count: usize,
    mode: OriginMode,
) -> Result<CardReport> {
    let n = card.n();
    let analysis = analyze(card);
    let aut_order = analysis.group.order()?;
    let added_degree = edge_count.checked_sub(card.m()).filter(|&d| d > 0).ok_or_else(|| {
        Error::PreconditionViolated(format!(
            "card with {} edges leaves no edges to restore out of {edge_count}",
            card.m()
        ))
    })?;
    let plausible_origins: Vec<usize> = match (known_origin, mode) {
        (Some(v), _) => vec![v],
        (None, OriginMode::StrictIsolated) => card.isolated_vertices(),
        (None, OriginMode::AllVertices) => (0..n).collect(),
    }
    .into_iter()
    .filter(|&u| card.degree(u) + added_degree < n)
    .collect();

    let mut candidates: Vec<EdgeSet> = plausible_origins
        .iter()
        .flat_map(|&u| {
            let free: Vec<Pair> = (0..n)
                .filter(|&x| x != u && !card.has_edge(u, x))
                .map(|x| Pair::new(u, x).expect("distinct"))
                .collect();
            free.into_iter()
                .combinations(added_degree)
                .map(|c| c.into_iter().collect::<EdgeSet>())
                .collect::<Vec<_>>()
        })
        .collect();
    candidates.sort();
    candidates.dedup();

    let mut assigned = vec![false; candidates.len()];
    let mut classes = Vec::new();
    for i in 0..candidates.len() {
        if assigned[i] {
            continue;
        }
        let orbit = edge_set_orbit(&analysis.group, &candidates[i])?;
        for e in &orbit.elements {
            if let Ok(j) = candidates.binary_search(e) {
                assigned[j] = true;
            }
        }
        let representative = orbit.elements[0].clone();
        let extended = card.add_edges(&representative)?;
        let ext = analyze(&extended);
        let extension_aut = ext.group.order()?;
        let num = &aut_order * multiplicity;
        let (ratio, rem) = num.div_rem(&BigUint::from(orbit.size()));
        debug_assert!(rem.is_zero(), "orbit size divides the group order");
        classes.push(ExtensionClass {
            symmetry_consistent: ratio == extension_aut,
            representative,
            orbit_size: orbit.size(),
            ratio,
            extension_graph6: extended.to_graph6(),
            extension_certificate: ext.certificate,
            extension_aut,
        });
    }
    Ok(CardReport {
        graph6: card.to_graph6(),
        certificate: analysis.certificate,
        multiplicity,
        aut_order,
        added_degree,
        plausible_origins,
        candidates: candidates.len(),
        classes,
        graph: card.clone(),
    })
}

/// Enumerates, per card class, the ways to restore the missing vertex's
/// edges, groups them into automorphism orbits of the card, and looks for a
/// single symmetry ratio shared by all cards. A deck that still records
/// origins uses the representative card's origin; a blind deck guesses
/// origins according to `mode`.
pub fn unique_extension_filter(deck: &Deck, mode: OriginMode) -> Result<FilterReport> {
    if deck.kind != DeckKind::Augmented {
        return Err(Error::PreconditionViolated("filter needs an augmented deck".into()));
    }
    let n = deck.len();
    if n < 3 {
        return Err(Error::PreconditionViolated("deck needs at least 3 cards".into()));
    }
    let edge_count = kelly_edge_count(deck)?;
    let cards = deck
        .classes
        .iter()
        .map(|c| {
            card_report(&c.representative, c.origins.first().copied(), c.multiplicity, edge_count, mode)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut common: Option<Vec<BigUint>> = None;
    for card in &cards {
        let mut mine: Vec<BigUint> = card.classes.iter().map(|c| c.ratio.clone()).collect();
        mine.sort();
        mine.dedup();
        common = Some(match common {
            None => mine,
            Some(prev) => prev.into_iter().filter(|r| mine.contains(r)).collect(),
        });
    }
    let common_ratios = common.unwrap_or_default();
    let literal_unique = common_ratios.len() == 1
        && cards.iter().all(|c| {
            c.classes.iter().filter(|x| x.ratio == common_ratios[0]).count() == 1
        });

    let mut viable = Vec::new();
    for r in &common_ratios {
        let consistent = |c: &'_ CardReport| {
            c.classes
                .iter()
                .filter(|x| x.symmetry_consistent && &x.ratio == r)
                .map(|x| x.extension_certificate.clone())
                .collect::<Vec<_>>()
        };
        let mut shared = consistent(&cards[0]);
        shared.sort();
        shared.dedup();
        for c in &cards[1..] {
            let mine = consistent(c);
            shared.retain(|cert| mine.contains(cert));
        }
        for cert in shared {
            let graph = cert.to_graph();
            viable.push(Reconstruction {
                aut_order: r.clone(),
                graph6: graph.to_graph6(),
                certificate: cert,
                graph,
            });
        }
    }
    let certified = viable.len() == 1
        && cards.iter().all(|c| {
            c.classes
                .iter()
                .filter(|x| x.symmetry_consistent && x.ratio == viable[0].aut_order)
                .count()
                == 1
        });
    let reconstructed = certified.then(|| viable[0].clone());
    Ok(FilterReport {
        n,
        edge_count,
        mode,
        cards,
        common_ratios,
        literal_unique,
        viable,
        certified,
        reconstructed,
    })
}

/// How often the filter alone pins down the graph, over every connected
/// isomorphism class on `n` vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SufficiencySweep {
    pub n: usize,
    pub mode: OriginMode,
    pub decks: usize,
    pub literal_unique: usize,
    pub certified: usize,
    /// Certified decks whose reconstruction is not the original graph.
    pub wrong: usize,
    pub certified_fraction: f64,
    pub uncertified: Vec<String>,
}

pub fn sufficiency_sweep(n: usize, mode: OriginMode, threads: usize) -> Result<SufficiencySweep> {
    use rayon::prelude::*;
    if !(3..=crate::graph::MAX_MASK_VERTICES).contains(&n) {
        return Err(Error::RangeError(format!(
            "sweep needs 3 <= n <= {}",
            crate::graph::MAX_MASK_VERTICES
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for g in crate::graph::enumerate_labeled_graphs_with_cap(n, n)? {
        if g.is_connected() && seen.insert(analyze(&g).certificate) {
            reps.push(g);
        }
    }
    let outcomes = crate::er::with_threads(threads, || {
        reps.par_iter()
            .map(|g| {
                let deck = augmented_deck(g)?.blind();
                let report = unique_extension_filter(&deck, mode)?;
                let wrong = report
                    .reconstructed
                    .as_ref()
                    .is_some_and(|r| r.certificate != analyze(g).certificate);
                Ok((report.literal_unique, report.certified, wrong, g.to_graph6()))
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let certified = outcomes.iter().filter(|o| o.1).count();
    Ok(SufficiencySweep {
        n,
        mode,
        decks: reps.len(),
        literal_unique: outcomes.iter().filter(|o| o.0).count(),
        certified,
        wrong: outcomes.iter().filter(|o| o.2).count(),
        certified_fraction: certified as f64 / reps.len().max(1) as f64,
        uncertified: outcomes.into_iter().filter(|o| !o.1).map(|o| o.3).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_broom() -> Graph {
        Graph::new(7, [(0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (6, 3)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn vertex_deletion() {
        assert_eq!(vertex_deleted(&Graph::complete(3), 1).unwrap(), Graph::complete(2));
        assert_eq!(vertex_deleted(&Graph::path(3), 1).unwrap(), Graph::empty(2));
        let two_stars = vertex_deleted(&double_broom(), 5).unwrap();
        // a,b,c,d,e,g -> 0,1,2,3,4,5
        assert_eq!(
            two_stars,
            Graph::new(6, [(0, 4), (1, 4), (5, 2), (5, 3)]).unwrap()
        );
        assert!(vertex_deleted(&double_broom(), 7).is_err());
    }

    #[test]
    fn augmented_multiplicities() {
        let k3 = augmented_deck(&Graph::complete(3)).unwrap();
        assert_eq!(k3.classes().len(), 1);
        assert_eq!(k3.classes()[0].multiplicity, 3);

        let mut m: Vec<usize> = augmented_deck(&double_broom())
            .unwrap()
            .classes()
            .iter()
            .map(|c| c.multiplicity)
            .collect();
        m.sort();
        assert_eq!(m, vec![1, 2, 4]);

        let star = augmented_deck(&star3()).unwrap();
        let center_card = star.cards()[0].graph.clone();
        let leaf_card = star.cards()[1].graph.clone();
        assert_eq!(star.multiplicity(&center_card), 1);
        assert_eq!(star.multiplicity(&leaf_card), 3);
    }

    #[test]
    fn kelly_counts() {
        assert_eq!(kelly_edge_count(&augmented_deck(&Graph::complete(3)).unwrap()).unwrap(), 3);
        assert_eq!(kelly_edge_count(&augmented_deck(&double_broom()).unwrap()).unwrap(), 6);
        assert_eq!(kelly_edge_count(&augmented_deck(&Graph::path(3)).unwrap()).unwrap(), 2);
        assert_eq!(kelly_edge_count(&classic_deck(&double_broom()).unwrap()).unwrap(), 6);
    }

    #[test]
    fn vertex_edge_orbits() {
        assert!(check_vertex_edge_orbit_identity(&Graph::complete(3)).unwrap());
        assert!(check_vertex_edge_orbit_identity(&double_broom()).unwrap());
        assert!(matches!(
            check_vertex_edge_orbit_identity(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(check_vertex_edge_orbit_identity(&Graph::complete(2)).is_err());
    }

    #[test]
    fn recover_examples() {
        let k3 = Graph::complete(3);
        let card = k3.delete_edges(&k3.incident_edges(0).unwrap()).unwrap();
        let deleted = k3.incident_edges(0).unwrap();
        assert_eq!(recover_aut_order(&card, 3, &deleted).unwrap(), BigUint::from(6u32));

        let star = star3();
        let deleted = star.incident_edges(0).unwrap();
        let card = star.delete_edges(&deleted).unwrap();
        assert_eq!(recover_aut_order(&card, 1, &deleted).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn filter_small_cases() {
        for g in [Graph::complete(3), Graph::path(4), Graph::cycle(5)] {
            let deck = augmented_deck(&g).unwrap().blind();
            let report = unique_extension_filter(&deck, OriginMode::StrictIsolated).unwrap();
            assert!(report.certified, "{g:?}");
            assert_eq!(
                report.reconstructed.unwrap().certificate,
                analyze(&g).certificate
            );
        }
    }

    #[test]
    fn filter_preconditions() {
        let classic = classic_deck(&Graph::complete(3)).unwrap();
        assert!(unique_extension_filter(&classic, OriginMode::StrictIsolated).is_err());
        let with_isolated = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let deck = augmented_deck(&with_isolated).unwrap();
        assert!(matches!(
            unique_extension_filter(&deck, OriginMode::StrictIsolated),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn sweep_at_four() {
        let s = sufficiency_sweep(4, OriginMode::StrictIsolated, 1).unwrap();
        assert_eq!(s.decks, 6);
        assert_eq!(s.wrong, 0);
    }

    #[test]
    fn deck_json_round_trip() {
        let deck = augmented_deck(&double_broom()).unwrap();
        let json = deck.to_json();
        let back = Deck::from_json(&json).unwrap();
        let summary = |d: &Deck| {
            d.classes()
                .iter()
                .map(|c| (c.certificate.clone(), c.multiplicity))
                .collect::<Vec<_>>()
        };
        assert_eq!(summary(&back), summary(&deck));
        assert_eq!(back.len(), 7);
        assert!(back.classes().iter().all(|c| c.origins.is_empty()));
    }
}
