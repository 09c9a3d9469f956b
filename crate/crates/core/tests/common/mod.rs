#![allow(dead_code)] // helpers are shared across test targets with different needs

//! Independent test oracles. Nothing here reuses the accumulation
//! paths under test: distances come from a Floyd–Warshall recomputation
//! and betweenness values from explicit enumeration of every geodesic
//! by DFS over the shortest-path DAG.

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};
use rand::Rng;

use bugraph_core::graph::Graph;
use bugraph_core::{rational, Rational};

/// All-pairs distances by Floyd–Warshall over the adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.n();
    let mut d: Vec<Vec<Option<u64>>> = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for w in g.neighbors(v) {
            d[v][w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Every geodesic from `u` to `v` as an explicit vertex sequence,
/// enumerated by DFS walking distances down toward `u`.
pub fn all_geodesics(g: &Graph, dist: &[Vec<Option<u64>>], u: usize, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![v];
    walk(g, dist, u, &mut stack, &mut out);
    out
}

fn walk(
    g: &Graph,
    dist: &[Vec<Option<u64>>],
    u: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let w = *stack.last().expect("non-empty stack");
    if w == u {
        let mut path: Vec<usize> = stack.clone();
        path.reverse();
        out.push(path);
        return;
    }
    let dw = dist[u][w].expect("reachable");
    for x in g.neighbors(w) {
        if dist[u][x] == Some(dw - 1) {
            stack.push(x);
            walk(g, dist, u, stack, out);
            stack.pop();
        }
    }
}

pub struct GeodesicOracle {
    pub vertex_bc: Vec<Rational>,
    pub edge_bc: BTreeMap<(usize, usize), Rational>,
    pub sigma: Vec<Vec<BigUint>>,
    /// Σ over pairs of the mean interior length (len − 1 averaged over
    /// the pair's geodesics).
    pub interior_sum: Rational,
}

/// Brute-force betweenness of every vertex and edge by enumerating all
/// geodesics of all pairs.
pub fn geodesic_oracle(g: &Graph) -> GeodesicOracle {
    let n = g.n();
    let dist = floyd_warshall(g);
    let mut vertex_bc = vec![Rational::zero(); n];
    let mut edge_bc: BTreeMap<(usize, usize), Rational> =
        g.edges().map(|e| (e, Rational::zero())).collect();
    let mut sigma = vec![vec![BigUint::zero(); n]; n];
    for v in 0..n {
        sigma[v][v] = BigUint::one();
    }
    let mut interior_sum = Rational::zero();
    for u in 0..n {
        for v in u + 1..n {
            assert!(dist[u][v].is_some(), "oracle expects connected input");
            let paths = all_geodesics(g, &dist, u, v);
            let count = rational(paths.len() as i64);
            sigma[u][v] = BigUint::from(paths.len());
            sigma[v][u] = sigma[u][v].clone();
            let mut through = vec![0i64; n];
            let mut through_edge: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for path in &paths {
                for &x in &path[1..path.len() - 1] {
                    through[x] += 1;
                }
                for pair in path.windows(2) {
                    let key = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                    *through_edge.entry(key).or_insert(0) += 1;
                }
                interior_sum += rational(path.len() as i64 - 2) / count.clone();
            }
            for x in 0..n {
                if through[x] > 0 {
                    vertex_bc[x] += rational(through[x]) / count.clone();
                }
            }
            for (key, cnt) in through_edge {
                *edge_bc.get_mut(&key).expect("geodesic steps are edges") +=
                    rational(cnt) / count.clone();
            }
        }
    }
    GeodesicOracle { vertex_bc, edge_bc, sigma, interior_sum }
}

/// Fraction of uv-geodesics through `x`, straight from the enumeration.
pub fn oracle_pair_dependency(g: &Graph, u: usize, v: usize, x: usize) -> Rational {
    if x == u || x == v {
        return Rational::zero();
    }
    let dist = floyd_warshall(g);
    let paths = all_geodesics(g, &dist, u, v);
    let through = paths.iter().filter(|p| p.contains(&x)).count();
    rational(through as i64) / rational(paths.len() as i64)
}

/// κ by exhaustive subset removal: the size of the smallest vertex set
/// whose removal disconnects the graph, or n−1 for complete graphs.
pub fn oracle_vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(g.is_connected() && n <= 12, "oracle scans all 2^n subsets");
    let mut best = n - 1;
    for mask in 1u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || size > n - 2 {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        if !g.induced_subgraph(&keep).expect("nonempty remainder").graph.is_connected() {
            best = size;
        }
    }
    best
}

/// All connected isomorphism classes on `n ≤ 6` vertices by labeled
/// enumeration plus canonical deduplication.
pub fn labeled_connected_classes(n: usize) -> Vec<Graph> {
    use bugraph_core::enumeration::canonical_form;
    assert!(n <= 6, "labeled enumeration is exponential");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("valid edges");
        if !g.is_connected() {
            continue;
        }
        let form = canonical_form(&g).expect("n ≤ 6");
        if seen.insert(form) {
            out.push(form.to_graph());
        }
    }
    out
}

/// Random connected graph: a random increasing spanning tree plus each
/// remaining edge with probability 0.3.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Reference graph6 encoder written straight from the published format
/// rules, independently of the library's encoder.
pub fn encode_g6_reference(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let start = bytes.len();
    bytes.resize(start + nbytes, 0);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bytes[start + pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    for b in &mut bytes[start..] {
        *b += 63;
    }
    String::from_utf8(bytes).expect("printable ASCII")
}
