use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{is_free, SearchOptions};
use crate::canon::{canonical_form, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest order for the labelled brute-force engine.
pub const NAIVE_CAP: usize = 6;
/// Largest order for the canonical augmentation engine.
pub const CANONICAL_CAP: usize = 9;

/// Depth at which the augmentation tree is cut into independent subtrees.
const SPLIT_DEPTH: usize = 5;

/// Enumeration engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Canonical augmentation.
    Auto,
    Naive,
    Canonical,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "auto" => Ok(Engine::Auto),
            "naive" => Ok(Engine::Naive),
            "canonical" => Ok(Engine::Canonical),
            other => Err(Error::InvalidParameter(format!(
                "unknown engine `{other}` (expected auto, naive or canonical)"
            ))),
        }
    }
}

/// Canonical representatives of all graphs on exactly `n` vertices that
/// contain no graph of `forbidden`, sorted. `forbidden` may be empty.
pub fn enumerate_free(n: usize, forbidden: &[Graph], opts: &SearchOptions) -> Result<Vec<Graph>> {
    let set = fold_classes(
        n,
        forbidden,
        opts,
        BTreeSet::new,
        |mut acc: BTreeSet<Graph>, g: &Graph| {
            acc.insert(g.clone());
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(set.into_iter().collect())
}

/// Folds over one representative of every `forbidden`-free class on `n`
/// vertices. Subtrees are folded independently and then merged, so `merge`
/// must be associative and commutative for the result to be schedule
/// independent.
pub(crate) fn fold_classes<A, I, F, M>(
    n: usize,
    forbidden: &[Graph],
    opts: &SearchOptions,
    identity: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &Graph) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let naive = match opts.engine {
        Engine::Naive => true,
        Engine::Auto | Engine::Canonical => false,
    };
    let cap = if naive { NAIVE_CAP } else { CANONICAL_CAP };
    if n > cap {
        return Err(Error::OrderCap {
            what: if naive {
                "the naive engine"
            } else {
                "the canonical augmentation engine"
            },
            order: n,
            cap,
        });
    }

    let run = || {
        if naive {
            naive_classes(n, forbidden).iter().fold(identity(), &fold)
        } else {
            augment(n, forbidden, &identity, &fold, &merge)
        }
    };
    if opts.workers == 0 {
        Ok(run())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(run))
    }
}

fn naive_classes(n: usize, forbidden: &[Graph]) -> BTreeSet<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, mask| {
            let mut rows = vec![0u64; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            let g = Graph::from_rows_unchecked(rows);
            if is_free(&g, forbidden) {
                acc.insert(canonical_form(&g));
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Accepted children of a canonical parent: one canonical graph per
/// isomorphism class whose canonical deletion vertex leads back to `parent`.
///
/// The deletion vertex of a child is the vertex given the last canonical
/// label.
fn children(parent: &Graph, forbidden: &[Graph]) -> Vec<Graph> {
    let k = parent.order();
    let mut verdicts: BTreeMap<Graph, bool> = BTreeMap::new();
    for mask in 0u64..1 << k {
        let child = parent
            .with_vertex(mask)
            .expect("order stays within the cap");
        if !is_free(&child, forbidden) {
            continue;
        }
        let lab = canonical_labeling(&child);
        if verdicts.contains_key(&lab.graph) {
            continue;
        }
        let last = lab.last_vertex().expect("child is non-empty");
        let accepted = last == k || canonical_form(&child.remove_vertex(last)) == *parent;
        verdicts.insert(lab.graph, accepted);
    }
    verdicts
        .into_iter()
        .filter_map(|(g, ok)| ok.then_some(g))
        .collect()
}

fn augment<A, I, F, M>(n: usize, forbidden: &[Graph], identity: &I, fold: &F, merge: &M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &Graph) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let mut frontier = vec![Graph::empty(0).expect("empty graph")];
    for _ in 0..n.min(SPLIT_DEPTH) {
        frontier = frontier
            .iter()
            .flat_map(|g| children(g, forbidden))
            .collect();
    }
    if n <= SPLIT_DEPTH {
        return frontier.iter().fold(identity(), fold);
    }

    fn descend<A, F>(g: &Graph, n: usize, forbidden: &[Graph], acc: A, fold: &F) -> A
    where
        F: Fn(A, &Graph) -> A,
    {
        if g.order() == n {
            return fold(acc, g);
        }
        children(g, forbidden)
            .iter()
            .fold(acc, |acc, c| descend(c, n, forbidden, acc, fold))
    }

    frontier
        .par_iter()
        .map(|root| descend(root, n, forbidden, identity(), fold))
        .reduce(identity, merge)
}
