//! Chromatic number, colour-critical edges, `σ(F)` and decomposition
//! families.
//!
//! Members of a decomposition family are the subgraphs induced by two
//! colour classes of a proper `χ(F)`-colouring that uses every colour, with
//! isolated vertices removed. Every member therefore has at least one edge,
//! and a colour-critical edge yields the member `K_2`.

use std::collections::BTreeSet;

use crate::canon::canonical_form;
use crate::counting::contains_subgraph;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Largest order accepted by the colouring routines.
pub const MAX_COLORING_ORDER: usize = 12;

/// A partition of the vertex set into non-empty independent classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperColoring {
    classes: Vec<u64>,
}

impl ProperColoring {
    /// Class bitsets, ordered by smallest member.
    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Deduplicated set of bipartite graphs in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionFamily {
    members: BTreeSet<Graph>,
    minimalized: bool,
}

impl DecompositionFamily {
    pub fn members(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_minimalized(&self) -> bool {
        self.minimalized
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.members.contains(&canonical_form(&g.strip_isolated()))
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.members.into_iter().collect()
    }
}

fn check_cap(f: &Graph) -> Result<()> {
    if f.order() > MAX_COLORING_ORDER {
        return Err(Error::OrderCap {
            what: "colouring",
            order: f.order(),
            cap: MAX_COLORING_ORDER,
        });
    }
    Ok(())
}

fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, candidates: u64, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let mut rest = candidates;
        for v in Bits(candidates) {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            expand(g, size + 1, rest & g.neighbors(v), best);
            rest &= !bit(v);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_mask(), &mut best);
    best
}

/// Vertices by non-increasing degree, ties by index.
fn coloring_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_colors(g: &Graph) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    for v in coloring_order(g) {
        match classes.iter_mut().find(|c| **c & g.neighbors(v) == 0) {
            Some(c) => *c |= bit(v),
            None => classes.push(bit(v)),
        }
    }
    classes.len()
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, order: &[usize], i: usize, classes: &mut Vec<u64>, k: usize) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for c in 0..classes.len() {
            if classes[c] & g.neighbors(v) == 0 {
                classes[c] |= bit(v);
                if go(g, order, i + 1, classes, k) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            if go(g, order, i + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let order = coloring_order(g);
    go(g, &order, 0, &mut Vec::with_capacity(k), k)
}

/// `χ(F)`, searched between the clique number and a greedy upper bound.
pub fn chromatic_number(f: &Graph) -> Result<usize> {
    check_cap(f)?;
    Ok(chromatic_unchecked(f))
}

fn chromatic_unchecked(f: &Graph) -> usize {
    let lower = clique_number(f);
    let upper = greedy_colors(f);
    (lower..upper).find(|&k| colorable(f, k)).unwrap_or(upper)
}

/// Edges whose removal lowers the chromatic number.
pub fn color_critical_edges(f: &Graph) -> Result<Vec<(usize, usize)>> {
    check_cap(f)?;
    let chi = chromatic_unchecked(f);
    Ok(f.edges()
        .filter(|&(u, v)| {
            let reduced = f.without_edge(u, v).expect("edge endpoints are valid");
            chromatic_unchecked(&reduced) < chi
        })
        .collect())
}

/// Every proper colouring with exactly `k` non-empty classes, each
/// partition listed once.
pub fn proper_colorings(f: &Graph, k: usize) -> Result<Vec<ProperColoring>> {
    check_cap(f)?;
    let mut out = Vec::new();
    let mut classes: Vec<u64> = Vec::with_capacity(k);
    // A new class is opened only by its smallest vertex.
    fn go(f: &Graph, v: usize, k: usize, classes: &mut Vec<u64>, out: &mut Vec<ProperColoring>) {
        let n = f.order();
        if n - v < k - classes.len() {
            return;
        }
        if v == n {
            out.push(ProperColoring {
                classes: classes.clone(),
            });
            return;
        }
        for c in 0..classes.len() {
            if classes[c] & f.neighbors(v) == 0 {
                classes[c] |= bit(v);
                go(f, v + 1, k, classes, out);
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            go(f, v + 1, k, classes, out);
            classes.pop();
        }
    }
    go(f, 0, k, &mut classes, &mut out);
    Ok(out)
}

/// Smallest possible colour-class order over proper `χ(F)`-colourings.
pub fn sigma(f: &Graph) -> Result<usize> {
    let chi = chromatic_number(f)?;
    if f.order() == 0 {
        return Ok(0);
    }
    Ok(proper_colorings(f, chi)?
        .iter()
        .filter_map(|c| c.class_sizes().into_iter().min())
        .min()
        .expect("a chi-colouring exists"))
}

/// Decomposition family of a non-bipartite `F`.
///
/// With `minimalize`, members containing another member are dropped; a graph
/// is free of the family iff it is free of its minimal members.
pub fn decomposition_family(f: &Graph, minimalize: bool) -> Result<DecompositionFamily> {
    let chi = chromatic_number(f)?;
    if chi < 3 {
        return Err(Error::InvalidParameter(format!(
            "decomposition family needs a non-bipartite graph, got chromatic number {chi}"
        )));
    }
    let mut members = BTreeSet::new();
    for coloring in proper_colorings(f, chi)? {
        let cs = coloring.classes();
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                let pair = f.induced(cs[i] | cs[j]).strip_isolated();
                members.insert(canonical_form(&pair));
            }
        }
    }
    if minimalize {
        members = minimal_members(members);
    }
    Ok(DecompositionFamily {
        members,
        minimalized: minimalize,
    })
}

/// Keeps the members that contain no other member as a subgraph.
pub(crate) fn minimal_members(members: BTreeSet<Graph>) -> BTreeSet<Graph> {
    members
        .iter()
        .filter(|g| !members.iter().any(|h| h != *g && contains_subgraph(h, g)))
        .cloned()
        .collect()
}
