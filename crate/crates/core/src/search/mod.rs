//! Exhaustive isomorphism-reduced extremal search for small orders.
//!
//! Two engines enumerate the `F`-free graphs on exactly `n` vertices, one
//! representative per isomorphism class:
//!
//! * `Naive` walks all `2^C(n,2)` labelled graphs and deduplicates by
//!   canonical form (`n <= 6`).
//! * `Canonical` grows graphs one vertex at a time by canonical augmentation,
//!   pruning any branch that already contains a forbidden graph (`n <= 9`).
//!
//! Objectives are maximised over the enumeration; every class attaining the
//! optimum is kept as a witness.

mod claims;
mod engine;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::canon::canonical_form;
use crate::coloring::{decomposition_family, minimal_members};
use crate::counting::{
    contains_subgraph, degree_power_sum, star_count, star_weights, subgraph_count,
    MAX_AUTOMORPHISM_ORDER, MAX_WEIGHT_EXPONENT,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use claims::{verify_claim, Claim, ClaimReport, Verdict};
pub use engine::{enumerate_free, Engine, CANONICAL_CAP, NAIVE_CAP};

/// Non-empty set of forbidden graphs, each with at least one edge, stored in
/// canonical form without isolated vertices and without redundant members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForbiddenFamily {
    members: Vec<Graph>,
}

impl ForbiddenFamily {
    pub fn new<I: IntoIterator<Item = Graph>>(graphs: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for g in graphs {
            if g.size() == 0 {
                return Err(Error::EmptyFamily);
            }
            set.insert(canonical_form(&g.strip_isolated()));
        }
        if set.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(ForbiddenFamily {
            members: minimal_members(set).into_iter().collect(),
        })
    }

    pub fn single(g: Graph) -> Result<Self> {
        ForbiddenFamily::new([g])
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Whether `g` contains no member.
    pub fn admits(&self, g: &Graph) -> bool {
        is_free(g, &self.members)
    }

    /// `F`-free and adding any missing edge creates a member.
    pub fn is_edge_maximal(&self, g: &Graph) -> bool {
        self.admits(g)
            && g.complement()
                .edges()
                .all(|(u, v)| !self.admits(&g.with_edge(u, v).expect("non-edge is valid")))
    }
}

pub(crate) fn is_free(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|f| !contains_subgraph(f, g))
}

/// Quantity maximised by a search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Objective {
    /// `|E(G)|`, giving `ex(n, F)`.
    Edges,
    /// `e_r(G)`, giving `ex_r(n, F)`.
    DegreePower(u32),
    /// `N(S_r, G)`, giving `ex(n, S_r, F)`.
    StarCount(u32),
    /// `N(H, G)`, giving `ex(n, H, F)`.
    Copies(Graph),
}

impl Objective {
    fn validate(&self) -> Result<()> {
        match self {
            Objective::Edges => Ok(()),
            Objective::DegreePower(0) | Objective::StarCount(0) => Err(Error::InvalidParameter(
                "objective exponent must be at least 1".into(),
            )),
            Objective::DegreePower(_) | Objective::StarCount(_) => Ok(()),
            Objective::Copies(h) => {
                let order = h.strip_isolated().order();
                if order > MAX_AUTOMORPHISM_ORDER {
                    Err(Error::OrderCap {
                        what: "counted pattern",
                        order,
                        cap: MAX_AUTOMORPHISM_ORDER,
                    })
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn evaluate(&self, g: &Graph) -> Result<BigUint> {
        Ok(match self {
            Objective::Edges => BigUint::from(g.size()),
            Objective::DegreePower(r) => degree_power_sum(g, *r)?.0,
            Objective::StarCount(r) => star_count(g, *r)?.0,
            Objective::Copies(h) => subgraph_count(h, g).0,
        })
    }

    /// Sort key used for deterministic report ordering.
    pub fn sort_key(&self) -> (u8, u32, String) {
        match self {
            Objective::Edges => (0, 0, String::new()),
            Objective::DegreePower(r) => (1, *r, String::new()),
            Objective::StarCount(r) => (2, *r, String::new()),
            Objective::Copies(h) => (3, 0, crate::graph6::encode(h)),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Edges => f.write_str("edges"),
            Objective::DegreePower(r) => write!(f, "degree_power({r})"),
            Objective::StarCount(r) => write!(f, "star_count({r})"),
            Objective::Copies(h) => write!(f, "copies({})", crate::graph6::encode(h)),
        }
    }
}

/// Engine selection and parallelism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub engine: Engine,
    /// Worker threads; 0 uses the global rayon pool.
    pub workers: usize,
    /// Only scan edge-maximal `F`-free classes. Leaves the optimum unchanged
    /// for every objective, but drops non-maximal witnesses of objectives that
    /// are not strictly increasing.
    pub maximal_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            engine: Engine::Auto,
            workers: 0,
            maximal_only: false,
        }
    }
}

impl SearchOptions {
    pub fn with_engine(engine: Engine) -> Self {
        SearchOptions {
            engine,
            ..SearchOptions::default()
        }
    }
}

/// Outcome of a maximisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub objective: Objective,
    pub n: usize,
    pub family: Vec<Graph>,
    pub optimum: BigUint,
    /// Canonical forms attaining the optimum, sorted.
    pub witnesses: Vec<Graph>,
    /// Number of isomorphism classes scanned.
    pub explored: u64,
    /// Whether every `F`-free class on `n` vertices was covered.
    pub complete: bool,
}

#[derive(Debug, Default)]
struct Scan {
    best: Option<BigUint>,
    witnesses: BTreeSet<Graph>,
    explored: u64,
}

impl Scan {
    fn offer(mut self, value: BigUint, g: &Graph) -> Scan {
        match &self.best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => {
                self.witnesses.insert(g.clone());
            }
            _ => {
                self.best = Some(value);
                self.witnesses = BTreeSet::from([g.clone()]);
            }
        }
        self
    }

    fn merge(mut self, other: Scan) -> Scan {
        self.explored += other.explored;
        match (&self.best, &other.best) {
            (_, None) => self,
            (None, Some(_)) => Scan {
                explored: self.explored,
                ..other
            },
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if a < b => Scan {
                explored: self.explored,
                ..other
            },
            _ => {
                self.witnesses.extend(other.witnesses);
                self
            }
        }
    }
}

/// Maximises `objective` over `F`-free graphs on exactly `n` vertices.
pub fn search_max(
    n: usize,
    family: &ForbiddenFamily,
    objective: &Objective,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    objective.validate()?;
    let forbidden = family.members();
    let scan = engine::fold_classes(
        n,
        forbidden,
        opts,
        Scan::default,
        |mut acc: Scan, g: &Graph| {
            acc.explored += 1;
            if opts.maximal_only && !family.is_edge_maximal(g) {
                return acc;
            }
            let value = objective
                .evaluate(g)
                .expect("objective was validated before the scan");
            acc.offer(value, g)
        },
        Scan::merge,
    )?;

    let optimum = scan
        .best
        .ok_or_else(|| Error::Consistency("no graph was scanned".into()))?;
    let witnesses: Vec<Graph> = scan.witnesses.into_iter().collect();

    if let Objective::DegreePower(r) = objective {
        if *r <= MAX_WEIGHT_EXPONENT {
            let weights = star_weights(*r)?;
            for w in &witnesses {
                if weights.weighted_star_sum(w).0 != optimum {
                    return Err(Error::Consistency(format!(
                        "star-weight decomposition disagrees with e_{r} on witness {w}"
                    )));
                }
            }
        }
    }

    Ok(SearchResult {
        objective: objective.clone(),
        n,
        family: forbidden.to_vec(),
        optimum,
        witnesses,
        explored: scan.explored,
        complete: true,
    })
}

/// `ex(n, H, F)`.
pub fn generalized_turan(
    n: usize,
    h: &Graph,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    search_max(n, family, &Objective::Copies(h.clone()), opts)
}

/// `biex(n, F) = ex(n, D(F))` with the minimalized decomposition family.
pub fn biex(n: usize, f: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    let family = ForbiddenFamily::new(decomposition_family(f, true)?.into_vec())?;
    search_max(n, &family, &Objective::Edges, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{friendship, turan, CatalogId};
    use crate::counting::CountValue;

    fn cat(s: &str) -> Graph {
        s.parse::<CatalogId>().unwrap().build().unwrap()
    }

    fn fam(names: &[&str]) -> ForbiddenFamily {
        ForbiddenFamily::new(names.iter().map(|s| cat(s))).unwrap()
    }

    #[test]
    fn family_normalisation() {
        assert_eq!(ForbiddenFamily::new(Vec::new()), Err(Error::EmptyFamily));
        assert_eq!(
            ForbiddenFamily::new([Graph::empty(3).unwrap()]),
            Err(Error::EmptyFamily)
        );
        // C4 is a subgraph of K4, so K4 is redundant.
        let f = fam(&["cycle:4", "clique:4"]);
        assert_eq!(f.members(), &[canonical_form(&cat("cycle:4"))]);
        // Isolated vertices are dropped.
        let k2_plus = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let f = ForbiddenFamily::single(k2_plus).unwrap();
        assert_eq!(f.members()[0].order(), 2);
    }

    #[test]
    fn spec_examples() {
        let opts = SearchOptions::default();
        let r = search_max(4, &fam(&["clique:3"]), &Objective::Edges, &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(4u32));
        assert_eq!(r.witnesses, vec![canonical_form(&turan(4, 2).unwrap())]);

        let r = search_max(5, &fam(&["clique:3"]), &Objective::DegreePower(2), &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(30u32));
        assert_eq!(
            r.witnesses,
            vec![canonical_form(&cat("complete_bipartite:2,3"))]
        );

        let r = search_max(5, &fam(&["cycle:4"]), &Objective::StarCount(2), &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(10u32));
        assert_eq!(
            CountValue(r.optimum.clone()),
            star_count(&friendship(5).unwrap(), 2).unwrap()
        );
    }

    #[test]
    fn generalized_turan_examples() {
        let opts = SearchOptions::default();
        let s2 = cat("star:2");
        let r = generalized_turan(5, &s2, &fam(&["cycle:4"]), &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(10u32));

        let k3 = cat("clique:3");
        let r = generalized_turan(5, &k3, &fam(&["clique:4"]), &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(4u32));
        assert_eq!(r.witnesses, vec![canonical_form(&turan(5, 3).unwrap())]);

        let r = generalized_turan(4, &k3, &fam(&["clique:3"]), &opts).unwrap();
        assert_eq!(r.optimum, BigUint::from(0u32));
    }

    #[test]
    fn biex_examples() {
        let opts = SearchOptions::default();
        assert_eq!(
            biex(6, &cat("cycle:5"), &opts).unwrap().optimum,
            BigUint::from(0u32)
        );
        assert_eq!(
            biex(6, &cat("clique:4"), &opts).unwrap().optimum,
            BigUint::from(0u32)
        );
        assert_eq!(
            biex(6, &cat("book:3"), &opts).unwrap().optimum,
            BigUint::from(1u32)
        );
        assert!(biex(6, &cat("cycle:6"), &opts).is_err());
    }

    #[test]
    fn witnesses_are_sound() {
        let opts = SearchOptions::default();
        let family = fam(&["cycle:4", "clique:3"]);
        for obj in [
            Objective::Edges,
            Objective::DegreePower(3),
            Objective::StarCount(2),
        ] {
            let r = search_max(8, &family, &obj, &opts).unwrap();
            assert!(!r.witnesses.is_empty());
            for w in &r.witnesses {
                assert!(family.admits(w));
                assert_eq!(obj.evaluate(w).unwrap(), r.optimum);
                assert_eq!(w.order(), 8);
            }
        }
    }

    #[test]
    fn maximal_only_keeps_optimum() {
        let family = fam(&["cycle:4"]);
        for obj in [
            Objective::Edges,
            Objective::DegreePower(2),
            Objective::StarCount(3),
        ] {
            for n in 3..=7 {
                let full = search_max(n, &family, &obj, &SearchOptions::default()).unwrap();
                let opts = SearchOptions {
                    maximal_only: true,
                    ..SearchOptions::default()
                };
                let reduced = search_max(n, &family, &obj, &opts).unwrap();
                assert_eq!(full.optimum, reduced.optimum, "{obj} n={n}");
                assert!(reduced.witnesses.iter().all(|w| full.witnesses.contains(w)));
            }
        }
    }

    #[test]
    fn objective_errors() {
        let opts = SearchOptions::default();
        let f = fam(&["clique:3"]);
        assert!(search_max(4, &f, &Objective::DegreePower(0), &opts).is_err());
        assert!(search_max(4, &f, &Objective::Copies(cat("cycle:11")), &opts).is_err());
        assert!(matches!(
            search_max(10, &f, &Objective::Edges, &opts),
            Err(Error::OrderCap { .. })
        ));
        assert!(matches!(
            search_max(
                7,
                &f,
                &Objective::Edges,
                &SearchOptions::with_engine(Engine::Naive)
            ),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let family = fam(&["cycle:4"]);
        let obj = Objective::DegreePower(3);
        let base = search_max(
            8,
            &family,
            &obj,
            &SearchOptions {
                workers: 1,
                ..Default::default()
            },
        )
        .unwrap();
        for workers in [2, 4, 7] {
            let r = search_max(
                8,
                &family,
                &obj,
                &SearchOptions {
                    workers,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(r, base);
        }
    }
}
