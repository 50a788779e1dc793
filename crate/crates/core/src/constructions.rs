//! Named graphs and extremal constructions.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, MAX_ORDER};

/// Class orders of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSpec(Vec<usize>);

impl PartSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("part list is empty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "part orders must be positive".into(),
            ));
        }
        let total: usize = parts.iter().sum();
        if total > MAX_ORDER {
            return Err(Error::TooManyVertices(total));
        }
        Ok(PartSpec(parts))
    }

    /// Balanced parts of the Turán graph `T(n, k)`, larger parts first.
    /// Empty parts (when `n < k`) are dropped.
    pub fn balanced(n: usize, k: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "T(n, k) needs n >= 1 and k >= 1, got n={n} k={k}"
            )));
        }
        let (q, rem) = (n / k, n % k);
        let parts = (0..k)
            .map(|i| if i < rem { q + 1 } else { q })
            .filter(|&p| p > 0)
            .collect();
        PartSpec::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// Vertex bitset of each part, parts laid out consecutively.
    pub fn part_masks(&self) -> Vec<u64> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&p| {
                let m = Bits(u64::MAX)
                    .skip(start)
                    .take(p)
                    .fold(0, |a, v| a | bit(v));
                start += p;
                m
            })
            .collect()
    }
}

pub fn complete_multipartite(spec: &PartSpec) -> Graph {
    let masks = spec.part_masks();
    let all = masks.iter().fold(0u64, |a, m| a | m);
    let mut rows = vec![0u64; spec.order()];
    for &m in &masks {
        for v in Bits(m) {
            rows[v] = all & !m;
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// Turán graph `T(n, k)`.
pub fn turan(n: usize, k: usize) -> Result<Graph> {
    Ok(complete_multipartite(&PartSpec::balanced(n, k)?))
}

/// Friendship graph `F_n`: vertex 0 adjacent to all others, plus the
/// matching `1-2, 3-4, ...`. For even `n` the last vertex stays a leaf of
/// the hub.
pub fn friendship(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "friendship graph needs n >= 1".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((1..n.saturating_sub(1)).step_by(2).map(|v| (v, v + 1)));
    Graph::from_edges(n, &edges)
}

/// `|E(F_n)| = ⌊3(n-1)/2⌋`.
pub fn friendship_size(n: usize) -> usize {
    3 * n.saturating_sub(1) / 2
}

/// `H(s-1, n)`: `K_{s-1}` joined with an independent set of order `n-s+1`.
/// The clique occupies vertices `0..s-1`.
pub fn h_graph(s: usize, n: usize) -> Result<Graph> {
    if s < 2 || s > n {
        return Err(Error::InvalidParameter(format!(
            "H(s-1, n) needs 2 <= s <= n, got s={s} n={n}"
        )));
    }
    Graph::complete(s - 1)?.join(&Graph::empty(n - s + 1)?)
}

/// Almost `d`-regular graph of girth at least 5 on `m` vertices.
///
/// Every vertex has degree `d`, except one vertex of degree `d - 1` exactly
/// when `m·d` is odd. Found by backtracking over edges; `seed = 0` uses the
/// natural vertex order and any other seed a shuffled one. The search is
/// exponential in the worst case and slow for `d >= 4` near the smallest
/// feasible order.
pub fn girth5_almost_regular(m: usize, d: usize, seed: u64) -> Result<Graph> {
    if m == 0 || m > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "girth-5 graph order must be in 1..={MAX_ORDER}, got {m}"
        )));
    }
    let infeasible = || {
        Error::Infeasible(format!(
            "no almost {d}-regular graph of girth >= 5 on {m} vertices"
        ))
    };
    if d >= m && !(d == 1 && m == 1) {
        return Err(infeasible());
    }
    // Moore-type bound.
    if m >= 2 && d >= 2 && m < d * d {
        return Err(infeasible());
    }

    let mut order: Vec<usize> = (0..m).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut deficit = vec![d; m];
    if m * d % 2 == 1 {
        deficit[order[m - 1]] = d - 1;
    }

    let mut state = Girth5 {
        rows: vec![0; m],
        deficit,
        order,
    };
    if state.fill() {
        Ok(Graph::from_rows_unchecked(state.rows))
    } else {
        Err(infeasible())
    }
}

struct Girth5 {
    rows: Vec<u64>,
    deficit: Vec<usize>,
    order: Vec<usize>,
}

impl Girth5 {
    fn fill(&mut self) -> bool {
        let Some(pos) = self.order.iter().position(|&v| self.deficit[v] > 0) else {
            return true;
        };
        self.attach(self.order[pos], pos + 1)
    }

    /// Gives `v` its remaining neighbours from `order[start..]`.
    fn attach(&mut self, v: usize, start: usize) -> bool {
        if self.deficit[v] == 0 {
            return self.fill();
        }
        let candidates: Vec<(usize, usize)> = (start..self.order.len())
            .map(|i| (i, self.order[i]))
            .filter(|&(_, w)| self.deficit[w] > 0 && self.can_join(v, w))
            .collect();
        if candidates.len() < self.deficit[v] {
            return false;
        }
        for (i, w) in candidates {
            self.toggle(v, w);
            if self.attach(v, i + 1) {
                return true;
            }
            self.toggle(v, w);
        }
        false
    }

    /// Adding `vw` must create neither a triangle nor a 4-cycle.
    fn can_join(&self, v: usize, w: usize) -> bool {
        if self.rows[v] & (self.rows[w] | bit(w)) != 0 {
            return false;
        }
        Bits(self.rows[v]).all(|x| self.rows[x] & self.rows[w] == 0)
    }

    fn toggle(&mut self, v: usize, w: usize) {
        let adding = self.rows[v] & bit(w) == 0;
        self.rows[v] ^= bit(w);
        self.rows[w] ^= bit(v);
        if adding {
            self.deficit[v] -= 1;
            self.deficit[w] -= 1;
        } else {
            self.deficit[v] += 1;
            self.deficit[w] += 1;
        }
    }
}

/// `H'(s-1, t-1, n)`: `H(s-1, n)` with an almost `(t-1)`-regular girth-5
/// graph placed on its independent set.
pub fn h_prime(s: usize, t: usize, n: usize, seed: u64) -> Result<Graph> {
    if s < 2 || s > t {
        return Err(Error::InvalidParameter(format!(
            "H'(s-1, t-1, n) needs 2 <= s <= t, got s={s} t={t}"
        )));
    }
    let base = h_graph(s, n)?;
    let g0 = girth5_almost_regular(n - s + 1, t - 1, seed)?;
    let offset = s - 1;
    let mut rows = base.rows().to_vec();
    for (v, &row) in g0.rows().iter().enumerate() {
        rows[v + offset] |= row << offset;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Circulant almost `l`-regular graph on `m` vertices.
pub fn almost_regular(m: usize, l: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "almost-regular graph needs m >= 1".into(),
        ));
    }
    if l >= m && !(m == 1 && l == 1) {
        return Err(Error::Infeasible(format!(
            "no almost {l}-regular graph on {m} vertices"
        )));
    }
    let mut g = Graph::empty(m)?;
    let add = |g: &mut Graph, u: usize, v: usize| {
        *g = g.with_edge(u, v).expect("circulant endpoints are in range");
    };
    let odd_odd = l % 2 == 1 && m % 2 == 1;
    let base = if odd_odd { m - 1 } else { m };
    for i in 0..base {
        for off in 1..=l / 2 {
            add(&mut g, i, (i + off) % base);
        }
        if l % 2 == 1 {
            add(&mut g, i, (i + base / 2) % base);
        }
    }
    if odd_odd {
        // Trade (l-1)/2 diameter chords for edges to the extra vertex.
        let extra = m - 1;
        for i in 0..(l - 1) / 2 {
            let j = i + base / 2;
            g = g.without_edge(i, j)?;
            add(&mut g, i, extra);
            add(&mut g, j, extra);
        }
    }
    Ok(g)
}

/// A member of `T_0(n, k, a-1)`: complete multipartite graph on `spec` with
/// an almost `(a-1)`-regular graph added inside every part.
pub fn t0_member(spec: &PartSpec, a: usize) -> Result<Graph> {
    if a == 0 {
        return Err(Error::InvalidParameter("t0 member needs a >= 1".into()));
    }
    let mut rows = complete_multipartite(spec).rows().to_vec();
    let mut start = 0;
    for &p in spec.parts() {
        let inner = almost_regular(p, a - 1)?;
        for (v, &row) in inner.rows().iter().enumerate() {
            rows[start + v] |= row << start;
        }
        start += p;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// How the ends of a theta chain are closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    Edge,
    Path2,
    Paths3,
}

impl Closure {
    pub fn length(self) -> usize {
        match self {
            Closure::Edge => 1,
            Closure::Path2 => 2,
            Closure::Paths3 => 3,
        }
    }

    /// The closure that makes a full tour of the chain have length `ell`.
    pub fn for_cycle_length(ell: usize) -> Closure {
        match ell % 3 {
            0 => Closure::Paths3,
            1 => Closure::Edge,
            _ => Closure::Path2,
        }
    }
}

impl FromStr for Closure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Closure> {
        match s {
            "edge" => Ok(Closure::Edge),
            "path2" => Ok(Closure::Path2),
            "paths3" => Ok(Closure::Paths3),
            other => Err(Error::InvalidParameter(format!(
                "unknown closure `{other}` (expected edge, path2 or paths3)"
            ))),
        }
    }
}

/// Hubs `u_0..u_{h-1}` with `width` internally disjoint 3-edge paths between
/// consecutive hubs, and `u_0`, `u_{h-1}` joined by `closure`.
///
/// The hub count is chosen so that a tour through one path per link plus the
/// closure is a cycle of length `ell`, which gives `width^⌊ell/3⌋` copies of
/// `C_ell`. The closure length must therefore match `ell` modulo 3.
pub fn theta_chain(ell: usize, width: usize, closure: Closure) -> Result<Graph> {
    if ell < 6 {
        return Err(Error::InvalidParameter(format!(
            "theta chain needs ell >= 6, got {ell}"
        )));
    }
    if width == 0 {
        return Err(Error::InvalidParameter(
            "theta chain width must be positive".into(),
        ));
    }
    let c = closure.length();
    if !(ell - c).is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!(
            "closure {closure:?} cannot close a cycle of length {ell}; use {:?}",
            Closure::for_cycle_length(ell)
        )));
    }
    let hubs = (ell - c) / 3 + 1;
    let closure_vertices = match closure {
        Closure::Edge => 0,
        Closure::Path2 => 1,
        Closure::Paths3 => 2 * width,
    };
    let order = hubs + 2 * width * (hubs - 1) + closure_vertices;
    if order > MAX_ORDER {
        return Err(Error::TooManyVertices(order));
    }

    let mut edges = Vec::new();
    let mut next = hubs;
    let mut path3 = |edges: &mut Vec<(usize, usize)>, a: usize, b: usize| {
        edges.extend([(a, next), (next, next + 1), (next + 1, b)]);
        next += 2;
    };
    for i in 0..hubs - 1 {
        for _ in 0..width {
            path3(&mut edges, i, i + 1);
        }
    }
    let last = hubs - 1;
    match closure {
        Closure::Edge => edges.push((0, last)),
        Closure::Paths3 => {
            for _ in 0..width {
                path3(&mut edges, 0, last);
            }
        }
        Closure::Path2 => {
            let mid = order - 1;
            edges.extend([(0, mid), (mid, last)]);
        }
    }
    Graph::from_edges(order, &edges)
}

/// Named small graphs used as forbidden subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Clique(usize),
    Cycle(usize),
    /// Path on the given number of vertices.
    Path(usize),
    CompleteBipartite(usize, usize),
    /// `B_{k,1}`: two copies of `K_k` sharing exactly one vertex.
    Book(usize),
    /// `K_{1,a,...,a}` with `k` parts of order `a`.
    CompleteSplit {
        k: usize,
        a: usize,
    },
    /// Star with the given number of leaves.
    Star(usize),
}

impl CatalogId {
    pub fn from_name(name: &str, params: &[usize]) -> Result<CatalogId> {
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "`{name}` takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let id = match name {
            "clique" => {
                arity(1)?;
                CatalogId::Clique(params[0])
            }
            "cycle" => {
                arity(1)?;
                CatalogId::Cycle(params[0])
            }
            "path" => {
                arity(1)?;
                CatalogId::Path(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                CatalogId::CompleteBipartite(params[0], params[1])
            }
            "book_B_k1" | "book" => {
                arity(1)?;
                CatalogId::Book(params[0])
            }
            "complete_split_K1aa" | "split" => {
                arity(2)?;
                CatalogId::CompleteSplit {
                    k: params[0],
                    a: params[1],
                }
            }
            "star" => {
                arity(1)?;
                CatalogId::Star(params[0])
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown catalog graph `{other}`"
                )))
            }
        };
        Ok(id)
    }

    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            CatalogId::Clique(k) => Graph::complete(k),
            CatalogId::Cycle(k) => {
                if k < 3 {
                    return bad(format!("cycle needs at least 3 vertices, got {k}"));
                }
                let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                Graph::from_edges(k, &edges)
            }
            CatalogId::Path(k) => {
                let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                Graph::from_edges(k, &edges)
            }
            CatalogId::CompleteBipartite(a, b) => {
                Ok(complete_multipartite(&PartSpec::new(vec![a, b])?))
            }
            CatalogId::Book(k) => {
                if k < 2 {
                    return bad(format!("B_{{k,1}} needs k >= 2, got {k}"));
                }
                let n = 2 * k - 1;
                let left = (0..k).fold(0u64, |m, v| m | bit(v));
                let right = bit(0) | (k..n).fold(0u64, |m, v| m | bit(v));
                let rows = (0..n)
                    .map(|v| {
                        let mut row = 0;
                        for side in [left, right] {
                            if side & bit(v) != 0 {
                                row |= side & !bit(v);
                            }
                        }
                        row
                    })
                    .collect();
                Graph::from_rows(rows)
            }
            CatalogId::CompleteSplit { k, a } => {
                if k == 0 || a == 0 {
                    return bad("K_{1,a,...,a} needs k >= 1 and a >= 1".into());
                }
                let mut parts = vec![1];
                parts.extend(std::iter::repeat_n(a, k));
                Ok(complete_multipartite(&PartSpec::new(parts)?))
            }
            CatalogId::Star(r) => Graph::complete(1)?.join(&Graph::empty(r)?),
        }
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    /// Parses `name:p1,p2,...`, e.g. `cycle:5` or `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<CatalogId> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let params = params
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        CatalogId::from_name(name.trim(), &params)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CatalogId::Clique(k) => write!(f, "clique:{k}"),
            CatalogId::Cycle(k) => write!(f, "cycle:{k}"),
            CatalogId::Path(k) => write!(f, "path:{k}"),
            CatalogId::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            CatalogId::Book(k) => write!(f, "book_B_k1:{k}"),
            CatalogId::CompleteSplit { k, a } => write!(f, "complete_split_K1aa:{k},{a}"),
            CatalogId::Star(r) => write!(f, "star:{r}"),
        }
    }
}

/// Shorthand for `CatalogId::build` on a parsed name.
pub fn catalog(id: &CatalogId) -> Result<Graph> {
    id.build()
}
