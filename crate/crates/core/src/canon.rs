//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell in
//! turn, recurse. Every discrete leaf induces a relabelled graph and the
//! smallest one (under `Graph`'s ordering) is the canonical form. Leaves that
//! reproduce the first or the best graph yield automorphisms, which prune
//! siblings in the same orbit and let the search jump back to the node where
//! the two paths diverged.

use std::collections::BTreeMap;

use crate::graph::{bit, Bits, Graph};

/// Result of canonically labelling a graph.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// The canonical representative.
    pub graph: Graph,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<usize>,
}

impl Labeling {
    /// Input vertex that receives the last canonical label.
    pub fn last_vertex(&self) -> Option<usize> {
        let last = self.perm.len().checked_sub(1)?;
        self.perm.iter().position(|&p| p == last)
    }
}

/// Isomorphism-class representative of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            graph: g.clone(),
            perm: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Labeling {
        graph: best.graph,
        perm: best.perm,
    }
}

/// Refines an ordered partition (cells as bitsets) until it is equitable.
///
/// Cells are split by the number of neighbours in a splitter cell, sub-cells
/// ordered by that count. Every step depends only on cell positions and
/// counts, so the result commutes with relabelling.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets: BTreeMap<u32, u64> = BTreeMap::new();
                for v in Bits(cell) {
                    *buckets
                        .entry((g.neighbors(v) & splitter).count_ones())
                        .or_default() |= bit(v);
                }
                changed |= buckets.len() > 1;
                next.extend(buckets.into_values());
            }
            *cells = next;
            si += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Leaf {
    graph: Graph,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree rooted at `cells`. Returns `Some(depth)` when the
    /// caller should abandon every node deeper than `depth`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !tried.is_empty() && self.same_orbit_as_tried(path, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);

            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let mut perm = vec![0usize; self.g.order()];
        for (label, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = label;
        }
        let graph = self.g.permute(&perm);

        let Some(first) = &self.first else {
            let leaf = Leaf {
                graph,
                perm,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                graph: leaf.graph.clone(),
                perm: leaf.perm.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };

        for reference in [first, self.best.as_ref().expect("best is set with first")] {
            if reference.graph == graph {
                let aut = automorphism_between(&reference.perm, &perm);
                let diverge = common_prefix(&reference.path, path);
                if aut.iter().enumerate().any(|(i, &j)| i != j) {
                    self.generators.push(aut);
                }
                return Some(diverge);
            }
        }

        if graph < self.best.as_ref().unwrap().graph {
            self.best = Some(Leaf {
                graph,
                perm,
                path: path.to_vec(),
            });
        }
        None
    }

    /// Whether `v` shares an orbit with an already explored sibling under the
    /// automorphisms found so far that fix the current path pointwise.
    fn same_orbit_as_tried(&self, path: &[usize], v: usize, tried: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// Given labellings that produce the same graph, returns the automorphism
/// `u -> reference^{-1}(other(u))` of the input graph.
fn automorphism_between(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0usize; reference.len()];
    for (v, &label) in reference.iter().enumerate() {
        inverse[label] = v;
    }
    other.iter().map(|&label| inverse[label]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
