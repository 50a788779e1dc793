//! Immutable simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row, so neighbourhood intersections
//! and degree queries are single word operations. Graphs are values: every
//! edit returns a new graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph with vertex set `0..n`.
///
/// The derived ordering compares the order first and then the adjacency rows
/// lexicographically; canonical forms are the minimum under this ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = low_mask(n);
        Ok(Graph {
            n,
            rows: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    /// Builds a graph from an edge list. Repeated pairs are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and the empty
    /// diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let outside = !low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & bit(u) != 0 {
                return Err(Error::Loop(u));
            }
            if row & outside != 0 {
                let vertex = (row & outside).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            for v in Bits(row) {
                if rows[v] & bit(u) == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at {u}-{v}"
                    )));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            rows,
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn max_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Adjacency rows, one bitset per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.rows[u] |= bit(v);
        g.rows[v] |= bit(u);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.rows[u] &= !bit(v);
        g.rows[v] &= !bit(u);
        Ok(g)
    }

    /// Appends a new vertex `n` adjacent to every vertex in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        check_order(self.n + 1)?;
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (neighbors & !self.vertex_mask()).trailing_zeros() as usize,
                n: self.n,
            });
        }
        let v = self.n;
        let mut rows = self.rows.clone();
        for u in Bits(neighbors) {
            rows[u] |= bit(v);
        }
        rows.push(neighbors);
        Ok(Graph { n: v + 1, rows })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & all & !bit(v))
                .collect(),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        check_order(self.n + other.n)?;
        let shift = self.n;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << shift));
        Ok(Graph {
            n: self.n + other.n,
            rows,
        })
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in 0..g.n {
            g.rows[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, &row) in self.rows.iter().enumerate() {
            let mut image = 0u64;
            for v in Bits(row) {
                image |= bit(perm[v]);
            }
            rows[perm[u]] = image;
        }
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `mask`, vertices renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = Bits(mask).collect();
        let rows = keep
            .iter()
            .map(|&u| {
                let row = self.rows[u] & mask;
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| row & bit(w) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Graph {
            n: keep.len(),
            rows,
        }
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !bit(v))
    }

    /// Bitset of vertices of degree zero.
    pub fn isolated_vertices(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// Drops all isolated vertices.
    pub fn strip_isolated(&self) -> Graph {
        self.induced(self.vertex_mask() & !self.isolated_vertices())
    }

    /// True when non-adjacency is an equivalence relation, i.e. the graph is
    /// complete multipartite (the edgeless graph counts, with one part).
    pub fn is_complete_multipartite(&self) -> bool {
        let co = self.complement();
        (0..self.n).all(|v| {
            let class = co.rows[v] | bit(v);
            Bits(co.rows[v]).all(|u| co.rows[u] | bit(u) == class)
        })
    }

    /// Is every vertex set split into two independent sides?
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for w in Bits(self.rows[u]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Human-oriented text form `n: u-v,u-v,...`.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}: {}", self.n, edges.join(","))
    }

    /// Parses the `n: u-v,u-v,...` form. Whitespace is ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| Error::EdgeList(format!("missing `:` in `{text}`")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count `{}`", head.trim())))?;
        let mut edges = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::EdgeList(format!("bad edge `{item}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad endpoint in `{item}`")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Accepts either the edge-list form or graph6.
    fn from_str(s: &str) -> Result<Graph> {
        let s = s.trim();
        if s.contains(':') {
            Graph::parse_edge_list(s)
        } else {
            crate::graph6::decode(s)
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// Degree multiset, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
