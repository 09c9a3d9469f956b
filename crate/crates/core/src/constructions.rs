//! Named graph families used as fixtures, plus the extremal construction
//! showing the degree/diameter bound is met with equality.

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Cycle C_n with edges 0–1–…–(n−1)–0.
pub fn cycle(n: usize) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidParams(format!("cycle needs 3 ≤ n ≤ 64, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParams(format!("complete needs 1 ≤ n ≤ 64, got {n}")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Path P_n on vertices 0–1–…–(n−1).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParams(format!("path needs 1 ≤ n ≤ 64, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Complete bipartite K_{a,b} with parts [0,a) and [a,a+b).
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || a + b > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "complete_bipartite needs a,b ≥ 1 and a+b ≤ 64, got ({a},{b})"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(a + b, &edges)
}

/// The Petersen graph: outer cycle 0..5, inner pentagram 5..10, spokes i–(i+5).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).expect("fixed valid edge list")
}

/// Parameters for [`tightness_construction`].
///
/// The construction is parameterized by the connectivity target `ell`,
/// the target diameter `d`, and the total vertex count `n`; the path
/// length `k = ell·(d−4) + 3` is derived, which makes the divisibility
/// needed for equality in the diameter bound automatic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightnessParams {
    pub ell: usize,
    pub d: usize,
    pub n: usize,
}

impl TightnessParams {
    pub fn k(&self) -> usize {
        self.ell * (self.d - 4) + 3
    }

    /// Number of extra hub-attached vertices `w_j`.
    pub fn w_count(&self) -> Result<usize> {
        self.validate()?;
        Ok(self.n + 1 - self.k() - 3 * self.ell)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell < 2 {
            return Err(Error::InvalidParams(format!("ell must be ≥ 2, got {}", self.ell)));
        }
        if self.d < 5 {
            return Err(Error::InvalidParams(format!("d must be ≥ 5, got {}", self.d)));
        }
        let k = self.k();
        if self.n + 1 < k + 3 * self.ell {
            return Err(Error::InvalidParams(format!(
                "n = {} leaves a negative w-vertex count (need n ≥ {})",
                self.n,
                k + 3 * self.ell - 1
            )));
        }
        if self.n > MAX_VERTICES {
            return Err(Error::BadVertexCount(self.n));
        }
        Ok(())
    }
}

/// Graph with maximum degree `n − k` and diameter exactly
/// `⌊(k−3)/ℓ⌋ + 4`, showing the general degree/diameter bound tight.
///
/// Layout: `u = 0`; interiors of the ℓ disjoint `uv`-paths of length `d`
/// in path-major order; `v` directly after them; the `w_j` last. Each
/// path carries marked vertices `x_i, y_i, z_i` at distances
/// `⌊d/2⌋−1, ⌊d/2⌋, ⌊d/2⌋+1` from `u`; the midpoints `y_i` are joined to
/// every `x_j`, every other midpoint, every `z_j`, and every `w_j`,
/// which raises `deg(y_i)` to `n − k` without creating a `uv`-shortcut.
///
/// Interior path vertices outside the marked band keep degree 2 and
/// would cap the connectivity at 2, so each unmarked interior distance
/// level is completed to a clique across the ℓ paths; level-internal
/// edges cannot shorten any `uv`-route, and the clique degree `ℓ + 1`
/// stays below `deg(y_i)`, so the degree and distance targets survive.
///
/// The result is checked against its own postconditions (diameter,
/// maximum degree, connectivity) before being returned.
pub fn tightness_construction(params: TightnessParams) -> Result<Graph> {
    params.validate()?;
    let TightnessParams { ell, d, n } = params;
    let k = params.k();
    let w_count = params.w_count()?;

    let u = 0usize;
    let interior = |i: usize, t: usize| -> usize {
        // t-th interior vertex (distance t from u, 1 ≤ t ≤ d−1) of path i
        1 + i * (d - 1) + (t - 1)
    };
    let v = 1 + ell * (d - 1);
    let w0 = v + 1;
    debug_assert_eq!(w0 + w_count, n);

    let mut edges = Vec::new();
    for i in 0..ell {
        edges.push((u, interior(i, 1)));
        for t in 1..d - 1 {
            edges.push((interior(i, t), interior(i, t + 1)));
        }
        edges.push((interior(i, d - 1), v));
    }

    let mid = d / 2;
    let xs: Vec<usize> = (0..ell).map(|i| interior(i, mid - 1)).collect();
    let ys: Vec<usize> = (0..ell).map(|i| interior(i, mid)).collect();
    let zs: Vec<usize> = (0..ell).map(|i| interior(i, mid + 1)).collect();
    for i in 0..ell {
        for j in 0..ell {
            edges.push((ys[i], xs[j]));
            if i != j {
                edges.push((ys[i], ys[j]));
                edges.push((ys[i], zs[j]));
            }
        }
        for j in 0..w_count {
            edges.push((ys[i], w0 + j));
        }
    }

    // clique each unmarked interior level so no path vertex is left
    // with degree 2
    for t in 1..d {
        if (mid - 1..=mid + 1).contains(&t) {
            continue;
        }
        for i in 0..ell {
            for j in i + 1..ell {
                edges.push((interior(i, t), interior(j, t)));
            }
        }
    }

    let g = Graph::from_edge_list(n, &edges)?;

    // The prose leaves the cross-edge index conditions easy to misread,
    // so verify the postconditions computationally before returning.
    let expect_d = (k - 3) / ell + 4;
    if g.diameter()? as usize != expect_d {
        return Err(Error::InvalidParams(format!(
            "construction self-check failed: diameter {} ≠ {}",
            g.diameter()?,
            expect_d
        )));
    }
    if g.max_degree() != n - k {
        return Err(Error::InvalidParams(format!(
            "construction self-check failed: max degree {} ≠ {}",
            g.max_degree(),
            n - k
        )));
    }
    let kappa = vertex_connectivity(&g)?;
    if kappa < ell {
        return Err(Error::InvalidParams(format!(
            "construction self-check failed: connectivity {kappa} < {ell}"
        )));
    }
    Ok(g)
}
