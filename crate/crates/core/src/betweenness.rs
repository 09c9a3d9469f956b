//! Exact betweenness centrality in unbounded rational arithmetic.
//!
//! Every quantity here is a `Rational` (big-integer fraction); floating
//! point is banned from this module because uniformity is an
//! exact-equality property and averages of equal values must compare
//! equal exactly. Shortest-path counts are `BigUint` since geodesic
//! counts outgrow any fixed width well below 64 vertices.
//!
//! Accumulation is Brandes-style: one BFS plus one backward sweep over
//! the shortest-path DAG per source, with each unordered pair {s,t}
//! attributed only at the source `min(s,t)`. Per-source contributions
//! are independent, so they may be computed concurrently and summed in
//! any order.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Exact fraction with unbounded numerator and denominator; always kept
/// reduced with a positive denominator.
pub type Rational = num::BigRational;

/// Rational from an integer.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Per-source shortest-path counts and the shortest-path DAG.
#[derive(Debug, Clone)]
pub struct PathCounts {
    pub source: usize,
    /// Hop distance from the source to each vertex.
    pub dist: Vec<u32>,
    /// Number of geodesics from the source to each vertex.
    pub sigma: Vec<BigUint>,
    /// `preds[v]` are the neighbors `u` of `v` with `dist[u] + 1 == dist[v]`.
    pub preds: Vec<Vec<usize>>,
}

/// BFS from `source` computing exact geodesic counts and predecessor
/// lists. Errors if some vertex is unreachable.
pub fn path_counts(g: &Graph, source: usize) -> Result<PathCounts> {
    let n = g.n();
    if source >= n {
        return Err(Error::VertexOutOfRange { vertex: source, n });
    }
    let mut dist: Vec<Option<u32>> = vec![None; n];
    let mut sigma: Vec<BigUint> = vec![BigUint::zero(); n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    dist[source] = Some(0);
    sigma[source] = BigUint::one();
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].expect("queued vertices have distances");
        for w in g.neighbors(v) {
            match dist[w] {
                None => {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                    sigma[w] = sigma[v].clone();
                    preds[w].push(v);
                }
                Some(dw) if dw == dv + 1 => {
                    let add = sigma[v].clone();
                    sigma[w] += add;
                    preds[w].push(v);
                }
                Some(_) => {}
            }
        }
    }
    let dist: Vec<u32> = dist
        .into_iter()
        .collect::<Option<Vec<u32>>>()
        .ok_or(Error::DisconnectedGraph)?;
    Ok(PathCounts { source, dist, sigma, preds })
}

/// Path counts from every source.
pub fn all_path_counts(g: &Graph) -> Result<Vec<PathCounts>> {
    (0..g.n()).map(|s| path_counts(g, s)).collect()
}

impl PathCounts {
    /// Vertices in order of decreasing distance from the source.
    fn descending_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.dist.len()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.dist[v]));
        order
    }
}

/// Exact B(x) for every vertex: the sum over unordered pairs {u,v} not
/// containing x of the fraction of uv-geodesics through x.
pub fn vertex_betweenness(g: &Graph) -> Result<Vec<Rational>> {
    let n = g.n();
    let mut bc = vec![Rational::zero(); n];
    for s in 0..n {
        let pc = path_counts(g, s)?;
        let delta = dependencies(&pc, s);
        for x in 0..n {
            if x != s {
                bc[x] += &delta[x];
            }
        }
    }
    Ok(bc)
}

/// Backward sweep: `delta[v] = Σ_{t > s} σ_{s,t}(v)/σ_{s,t}`. Counting
/// only targets above the source attributes each unordered pair once
/// across the full source loop.
fn dependencies(pc: &PathCounts, s: usize) -> Vec<Rational> {
    let n = pc.dist.len();
    let mut delta = vec![Rational::zero(); n];
    for w in pc.descending_order() {
        if w == s {
            continue;
        }
        let mut coeff = delta[w].clone();
        if w > s {
            coeff += Rational::one();
        }
        if coeff.is_zero() {
            continue;
        }
        let sigma_w = int_of(&pc.sigma[w]);
        for &v in &pc.preds[w] {
            let share = Rational::new(int_of(&pc.sigma[v]), sigma_w.clone());
            delta[v] += share * &coeff;
        }
    }
    delta
}

fn int_of(u: &BigUint) -> num::BigInt {
    num::BigInt::from(u.clone())
}

/// Exact B(e) for every edge, keyed by `(u, v)` with `u < v`. Pairs
/// include the edge's own endpoints, so every value is at least 1.
pub fn edge_betweenness(g: &Graph) -> Result<BTreeMap<(usize, usize), Rational>> {
    let n = g.n();
    let mut bc: BTreeMap<(usize, usize), Rational> =
        g.edges().map(|e| (e, Rational::zero())).collect();
    for s in 0..n {
        let pc = path_counts(g, s)?;
        let delta = dependencies(&pc, s);
        for w in 0..n {
            if w == s {
                continue;
            }
            let mut coeff = delta[w].clone();
            if w > s {
                coeff += Rational::one();
            }
            if coeff.is_zero() {
                continue;
            }
            let sigma_w = int_of(&pc.sigma[w]);
            for &v in &pc.preds[w] {
                let share = Rational::new(int_of(&pc.sigma[v]), sigma_w.clone());
                let key = (v.min(w), v.max(w));
                *bc.get_mut(&key).expect("DAG arcs are edges") += share * &coeff;
            }
        }
    }
    Ok(bc)
}

/// Adjusted betweenness B_a(x): the sum of edge betweenness over the
/// edges incident to x. Satisfies B(x) = (B_a(x) − n + 1)/2 exactly.
pub fn adjusted_betweenness(g: &Graph) -> Result<Vec<Rational>> {
    let eb = edge_betweenness(g)?;
    let mut out = vec![Rational::zero(); g.n()];
    for (&(u, v), val) in &eb {
        out[u] += val;
        out[v] += val;
    }
    Ok(out)
}

/// Betweenness of `u` induced by an explicit set of unordered pairs:
/// pairs containing `u` contribute 0. Duplicate or flipped pairs are
/// collapsed before summing.
pub fn pair_induced_betweenness(
    g: &Graph,
    pairs: &[(usize, usize)],
    u: usize,
) -> Result<Rational> {
    let n = g.n();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    let normalized: BTreeSet<(usize, usize)> = pairs
        .iter()
        .map(|&(x, y)| (x.min(y), x.max(y)))
        .collect();
    let mut needed: Vec<Option<PathCounts>> = (0..n).map(|_| None).collect();
    let mut total = Rational::zero();
    for (x, y) in normalized {
        if x >= n || y >= n {
            return Err(Error::VertexOutOfRange { vertex: x.max(y), n });
        }
        if x == y || u == x || u == y {
            continue;
        }
        if needed[x].is_none() {
            needed[x] = Some(path_counts(g, x)?);
        }
        if needed[y].is_none() {
            needed[y] = Some(path_counts(g, y)?);
        }
        let from_x = needed[x].as_ref().expect("filled above");
        let from_y = needed[y].as_ref().expect("filled above");
        if from_x.dist[u] + from_y.dist[u] == from_x.dist[y] {
            let through = int_of(&from_x.sigma[u]) * int_of(&from_y.sigma[u]);
            total += Rational::new(through, int_of(&from_x.sigma[y]));
        }
    }
    Ok(total)
}

/// B_S(u) for a vertex subset S: betweenness induced by all unordered
/// pairs inside `S ∖ {u}`.
pub fn subset_induced_betweenness(g: &Graph, s: &[usize], u: usize) -> Result<Rational> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let members: BTreeSet<usize> = s.iter().copied().collect();
    let mut pairs = Vec::new();
    let items: Vec<usize> = members.into_iter().filter(|&x| x != u).collect();
    for (i, &x) in items.iter().enumerate() {
        for &y in &items[i + 1..] {
            pairs.push((x, y));
        }
    }
    pair_induced_betweenness(g, &pairs, u)
}

/// Mean of B(u) over a nonempty vertex subset, exactly.
pub fn average_betweenness(g: &Graph, subset: &[usize]) -> Result<Rational> {
    if subset.is_empty() {
        return Err(Error::EmptySet);
    }
    let bc = vertex_betweenness(g)?;
    Ok(average_of(&bc, subset))
}

/// Mean of precomputed per-vertex values over a subset.
pub(crate) fn average_of(bc: &[Rational], subset: &[usize]) -> Rational {
    let sum: Rational = subset.iter().map(|&v| bc[v].clone()).sum();
    sum / rational(subset.len() as i64)
}

/// `Some(common value)` when all vertices share one exact betweenness
/// value, `None` otherwise. Comparison is exact rational equality.
pub fn is_betweenness_uniform(g: &Graph) -> Result<Option<Rational>> {
    let bc = vertex_betweenness(g)?;
    let first = bc[0].clone();
    if bc.iter().all(|b| *b == first) {
        Ok(Some(first))
    } else {
        Ok(None)
    }
}

/// Mean betweenness computed from the ordered distance sum:
/// `(n−1)/2 · (Σ d(u,v) / (n(n−1)) − 1)`. Equals the mean of B(x)
/// on every connected graph.
pub fn mean_betweenness_via_distance(g: &Graph) -> Result<Rational> {
    let n = g.n() as i64;
    if n == 1 {
        return Ok(Rational::zero());
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let dm = DistanceMatrix::compute(g);
    let total = dm.ordered_distance_sum()? as i64;
    let mean_dist = ratio(total, n * (n - 1));
    Ok(ratio(n - 1, 2) * (mean_dist - Rational::one()))
}

/// Full per-graph betweenness summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetweennessReport {
    pub vertex_bc: Vec<Rational>,
    pub edge_bc: BTreeMap<(usize, usize), Rational>,
    pub adjusted: Vec<Rational>,
    pub uniform: bool,
    /// max − min over vertex values; zero exactly when uniform.
    pub spread: Rational,
}

impl BetweennessReport {
    pub fn compute(g: &Graph) -> Result<BetweennessReport> {
        let vertex_bc = vertex_betweenness(g)?;
        let edge_bc = edge_betweenness(g)?;
        let mut adjusted = vec![Rational::zero(); g.n()];
        for (&(u, v), val) in &edge_bc {
            adjusted[u] += val;
            adjusted[v] += val;
        }
        let max = vertex_bc.iter().max().expect("n ≥ 1").clone();
        let min = vertex_bc.iter().min().expect("n ≥ 1").clone();
        let spread = max - min;
        Ok(BetweennessReport { vertex_bc, edge_bc, adjusted, uniform: spread.is_zero(), spread })
    }

    /// Checks B(x) = (B_a(x) − n + 1)/2 for every vertex.
    pub fn eq1_holds(&self) -> bool {
        let n = self.vertex_bc.len() as i64;
        self.vertex_bc.iter().zip(&self.adjusted).all(|(b, ba)| {
            *b == (ba - rational(n) + Rational::one()) / rational(2)
        })
    }
}
