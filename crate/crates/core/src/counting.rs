//! Exact counting: degree power sums, star counts, the star-weight
//! decomposition of `e_r`, and subgraph copies.
//!
//! Stars are counted center-rooted, `N(S_p, G) = Σ_v C(d_v, p)`. For `p = 1`
//! this is `2|E(G)|`, not `|E(G)|`; with that convention
//! `e_r(G) = Σ_{p=1}^{r} w_p N(S_p, G)` holds with `w_1 = 1`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Largest exponent accepted by [`star_weights`].
pub const MAX_WEIGHT_EXPONENT: u32 = 20;

/// Largest order accepted by [`automorphism_count`].
pub const MAX_AUTOMORPHISM_ORDER: usize = 10;

/// An exact non-negative count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CountValue(pub BigUint);

impl CountValue {
    pub fn zero() -> Self {
        CountValue(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<u128> for CountValue {
    fn from(v: u128) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<BigUint> for CountValue {
    fn from(v: BigUint) -> Self {
        CountValue(v)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Coefficients `w_1..w_r` with `e_r(G) = Σ_p w_p N(S_p, G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    r: u32,
    w: Vec<BigUint>,
}

impl WeightVector {
    pub fn r(&self) -> u32 {
        self.r
    }

    /// `w_p` for `p = 1..=r`.
    pub fn get(&self, p: u32) -> Option<&BigUint> {
        (p >= 1).then(|| self.w.get(p as usize - 1)).flatten()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.w
    }

    /// `Σ_p w_p N(S_p, G)`.
    pub fn weighted_star_sum(&self, g: &Graph) -> CountValue {
        let degrees = g.degrees();
        let total = self
            .w
            .iter()
            .enumerate()
            .map(|(i, w)| w * star_sum(&degrees, i as u32 + 1))
            .sum();
        CountValue(total)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn star_sum(degrees: &[usize], p: u32) -> BigUint {
    degrees.iter().map(|&d| binomial(d as u64, p as u64)).sum()
}

/// `e_r(G) = Σ_v d_v^r`.
pub fn degree_power_sum(g: &Graph, r: u32) -> Result<CountValue> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "degree power exponent must be at least 1".into(),
        ));
    }
    Ok(CountValue(
        g.degrees()
            .into_iter()
            .map(|d| BigUint::from(d).pow(r))
            .sum(),
    ))
}

/// Center-rooted star count `Σ_v C(d_v, p)`.
pub fn star_count(g: &Graph, p: u32) -> Result<CountValue> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "star size must be at least 1".into(),
        ));
    }
    Ok(CountValue(star_sum(&g.degrees(), p)))
}

/// `w_p = Σ_{i=0}^{p-1} (-1)^i C(p, i) (p - i)^r` for `p = 1..=r`, the number
/// of surjections from an `r`-set onto a `p`-set.
pub fn star_weights(r: u32) -> Result<WeightVector> {
    if !(1..=MAX_WEIGHT_EXPONENT).contains(&r) {
        return Err(Error::InvalidParameter(format!(
            "star weights are supported for 1 <= r <= {MAX_WEIGHT_EXPONENT}, got {r}"
        )));
    }
    let w = (1..=r as u64)
        .map(|p| {
            let signed: BigInt = (0..p)
                .map(|i| {
                    let term = BigInt::from(binomial(p, i)) * BigInt::from(p - i).pow(r);
                    if i % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            signed
                .to_biguint()
                .expect("surjection counts are non-negative")
        })
        .collect();
    Ok(WeightVector { r, w })
}

/// Backtracking plan for mapping a pattern graph into a host graph.
///
/// Pattern vertices are placed highest degree first, then by the number of
/// already placed neighbours, so candidate sets shrink as early as possible.
#[derive(Debug, Clone)]
struct Plan {
    /// Pattern vertex placed at each step.
    order: Vec<usize>,
    /// For each step, the earlier steps whose vertices are adjacent to it.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    fn new(h: &Graph) -> Plan {
        let n = h.order();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| {
                    (
                        (h.neighbors(v) & placed).count_ones(),
                        h.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("an unplaced vertex remains");
            placed |= bit(next);
            order.push(next);
        }
        let position: Vec<usize> = {
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                Bits(h.neighbors(v))
                    .map(|u| position[u])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Plan {
            order,
            back,
            degree,
        }
    }

    /// Counts injective edge-preserving maps, stopping once `limit` is hit.
    fn count(&self, g: &Graph, limit: u128) -> u128 {
        if self.order.len() > g.order() {
            return 0;
        }
        let mut images = vec![0usize; self.order.len()];
        let mut count = 0u128;
        self.extend(g, 0, 0, &mut images, &mut count, limit);
        count
    }

    fn extend(
        &self,
        g: &Graph,
        step: usize,
        used: u64,
        images: &mut [usize],
        count: &mut u128,
        limit: u128,
    ) {
        if step == self.order.len() {
            *count += 1;
            return;
        }
        let mut candidates = g.vertex_mask() & !used;
        for &j in &self.back[step] {
            candidates &= g.neighbors(images[j]);
        }
        for c in Bits(candidates) {
            if g.degree(c) < self.degree[step] {
                continue;
            }
            images[step] = c;
            self.extend(g, step + 1, used | bit(c), images, count, limit);
            if *count >= limit {
                return;
            }
        }
    }
}

/// Number of injective edge-preserving maps `V(H) -> V(G)`.
pub fn embedding_count(h: &Graph, g: &Graph) -> u128 {
    Plan::new(h).count(g, u128::MAX)
}

/// Number of subgraphs of `g` isomorphic to `h`, after removing isolated
/// vertices of `h`. An edgeless pattern has exactly one copy.
pub fn subgraph_count(h: &Graph, g: &Graph) -> CountValue {
    let h = h.strip_isolated();
    if h.order() > g.order() {
        return CountValue::zero();
    }
    let plan = Plan::new(&h);
    let embeddings = plan.count(g, u128::MAX);
    if embeddings == 0 {
        return CountValue::zero();
    }
    let automorphisms = plan.count(&h, u128::MAX);
    debug_assert_eq!(embeddings % automorphisms, 0);
    CountValue::from(embeddings / automorphisms)
}

/// Whether `g` has a subgraph isomorphic to `h` (isolated vertices of `h`
/// ignored).
pub fn contains_subgraph(h: &Graph, g: &Graph) -> bool {
    let h = h.strip_isolated();
    Plan::new(&h).count(g, 1) > 0
}

/// `|Aut(H)|` by filtering vertex permutations, extending partial maps only
/// while they preserve adjacency and non-adjacency.
pub fn automorphism_count(h: &Graph) -> Result<CountValue> {
    let n = h.order();
    if n > MAX_AUTOMORPHISM_ORDER {
        return Err(Error::OrderCap {
            what: "automorphism counting",
            order: n,
            cap: MAX_AUTOMORPHISM_ORDER,
        });
    }
    fn go(h: &Graph, v: usize, image: &mut Vec<usize>, used: u64) -> u64 {
        let n = h.order();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for c in Bits(h.vertex_mask() & !used) {
            if h.degree(c) != h.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| h.has_edge(u, v) == h.has_edge(image[u], c));
            if consistent {
                image.push(c);
                total += go(h, v + 1, image, used | bit(c));
                image.pop();
            }
        }
        total
    }
    Ok(CountValue::from(go(h, 0, &mut Vec::with_capacity(n), 0)))
}
