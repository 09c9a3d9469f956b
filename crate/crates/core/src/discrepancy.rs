//! The cut/component discrepancy functional, its pair-class
//! decomposition, the α distance-imbalance classification, and the
//! exact per-vertex contribution formulas for the single-vertex-cut
//! configuration.
//!
//! All parts are computed through `pair_induced_betweenness` with
//! explicit pair sets, so one audited primitive backs every
//! decomposition term.

use num::{One, Zero};

use crate::betweenness::{
    average_of, pair_induced_betweenness, path_counts, rational, ratio, vertex_betweenness,
    Rational,
};
use crate::connectivity::{validate_analysis, TwoCutAnalysis};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// disc split by which pairs of vertices contribute: pairs inside K⁺,
/// pairs inside L, and K⁺×L pairs. The three classes partition all
/// vertex pairs, so the parts sum to the total exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyBreakdown {
    /// disc computed directly from full-graph betweenness.
    pub total: Rational,
    pub part_kplus: Rational,
    pub part_l: Rational,
    pub part_cross: Rational,
}

impl DiscrepancyBreakdown {
    /// The decomposition identity; the total is computed by an
    /// independent route, so this is a real check rather than
    /// bookkeeping.
    pub fn decomposes_exactly(&self) -> bool {
        self.total == &self.part_kplus + &self.part_l + &self.part_cross
    }
}

/// α(w) = d(w,p) − d(w,q) for every vertex other than p and q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaProfile {
    pub p: usize,
    pub q: usize,
    /// `None` exactly at p and q.
    pub alpha: Vec<Option<i64>>,
}

impl AlphaProfile {
    pub fn get(&self, w: usize) -> Option<i64> {
        self.alpha.get(w).copied().flatten()
    }
}

/// disc := B̄({p,q}) − B̄(V(K)) from exact full-graph betweenness.
/// `{p,q}` must be a 2-cut of `g` and `K` one of the components of
/// `g − {p,q}`.
pub fn disc(g: &Graph, p: usize, q: usize, k: &[usize]) -> Result<Rational> {
    validate_cut_component(g, p, q, k)?;
    let bc = vertex_betweenness(g)?;
    Ok(average_of(&bc, &[p, q]) - average_of(&bc, k))
}

fn validate_cut_component(g: &Graph, p: usize, q: usize, k: &[usize]) -> Result<()> {
    let n = g.n();
    if p >= n || q >= n || p == q {
        return Err(Error::InvalidCut(format!("bad cut pair ({p},{q})")));
    }
    if k.is_empty() {
        return Err(Error::InvalidCut("empty component".into()));
    }
    let mut sorted = k.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k.len() {
        return Err(Error::InvalidCut("component has duplicate vertices".into()));
    }
    let rest: Vec<usize> = (0..n).filter(|v| *v != p && *v != q).collect();
    if rest.is_empty() {
        return Err(Error::InvalidCut("nothing remains after removing the cut".into()));
    }
    let ind = g.induced_subgraph(&rest)?;
    let comps = ind.graph.components();
    if comps.len() < 2 {
        return Err(Error::InvalidCut(format!("{{{p},{q}}} does not disconnect the graph")));
    }
    let sorted_old: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| c.iter().map(|&v| ind.new_to_old[v]).collect())
        .collect();
    if !sorted_old.contains(&sorted) {
        return Err(Error::InvalidCut("K is not a component of G − {p,q}".into()));
    }
    Ok(())
}

/// disc_S for an explicit pair class S: B̄_S({p,q}) − B̄_S(V(K)).
fn disc_over_pairs(
    g: &Graph,
    p: usize,
    q: usize,
    k: &[usize],
    pairs: &[(usize, usize)],
) -> Result<Rational> {
    let cut_avg = (pair_induced_betweenness(g, pairs, p)? + pair_induced_betweenness(g, pairs, q)?)
        / rational(2);
    let mut k_sum = Rational::zero();
    for &v in k {
        k_sum += pair_induced_betweenness(g, pairs, v)?;
    }
    Ok(cut_avg - k_sum / rational(k.len() as i64))
}

/// disc split into the K⁺-internal, L-internal, and cross pair
/// classes. The analysis may carry several L components; they are
/// treated as one L set here, which is exactly the whole-graph reading.
pub fn disc_breakdown(g: &Graph, analysis: &TwoCutAnalysis) -> Result<DiscrepancyBreakdown> {
    validate_analysis(g, analysis)?;
    let TwoCutAnalysis { p, q, k_set, ls, .. } = analysis;
    let (p, q) = (*p, *q);
    let mut kplus: Vec<usize> = k_set.clone();
    kplus.push(p);
    kplus.push(q);
    kplus.sort_unstable();
    let l_all: Vec<usize> = {
        let mut v: Vec<usize> = ls.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };

    let mut pairs_kplus = Vec::new();
    for (i, &x) in kplus.iter().enumerate() {
        for &y in &kplus[i + 1..] {
            pairs_kplus.push((x, y));
        }
    }
    let mut pairs_l = Vec::new();
    for (i, &x) in l_all.iter().enumerate() {
        for &y in &l_all[i + 1..] {
            pairs_l.push((x, y));
        }
    }
    let mut pairs_cross = Vec::new();
    for &x in &kplus {
        for &y in &l_all {
            pairs_cross.push((x, y));
        }
    }
    let n = g.n();
    debug_assert_eq!(
        pairs_kplus.len() + pairs_l.len() + pairs_cross.len(),
        n * (n - 1) / 2,
        "pair classes must partition all vertex pairs"
    );

    let total = disc(g, p, q, k_set)?;
    Ok(DiscrepancyBreakdown {
        total,
        part_kplus: disc_over_pairs(g, p, q, k_set, &pairs_kplus)?,
        part_l: disc_over_pairs(g, p, q, k_set, &pairs_l)?,
        part_cross: disc_over_pairs(g, p, q, k_set, &pairs_cross)?,
    })
}

/// α(w) = d(w,p) − d(w,q) for every vertex outside the cut.
pub fn alpha_profile(g: &Graph, p: usize, q: usize) -> Result<AlphaProfile> {
    let n = g.n();
    if p >= n {
        return Err(Error::VertexOutOfRange { vertex: p, n });
    }
    if q >= n || p == q {
        return Err(Error::InvalidCut(format!("bad cut pair ({p},{q})")));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let dp = g.bfs_distances(p)?;
    let dq = g.bfs_distances(q)?;
    let alpha = (0..n)
        .map(|w| {
            if w == p || w == q {
                None
            } else {
                Some(dp[w].expect("connected") as i64 - dq[w].expect("connected") as i64)
            }
        })
        .collect();
    Ok(AlphaProfile { p, q, alpha })
}

fn validate_case_a(g: &Graph, p: usize, q: usize, v: usize) -> Result<()> {
    let n = g.n();
    for &x in &[p, q, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if p == q || p == v || q == v {
        return Err(Error::InvalidCut("p, q, v must be distinct".into()));
    }
    if g.degree(v) != 2 || !g.has_edge(v, p) || !g.has_edge(v, q) {
        return Err(Error::InvalidCut(format!("vertex {v} must have exactly the neighbors {{{p},{q}}}")));
    }
    if g.has_edge(p, q) {
        return Err(Error::InvalidCut("configuration requires pq ∉ E".into()));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

/// disc_{K⁺×{w}} in the K = {v} configuration (deg v = 2, N(v) = {p,q},
/// pq ∉ E), computed directly from σ values via the pair primitive.
///
/// Matches the closed forms of [`case_a_contribution_formula`] branch
/// by branch.
pub fn case_a_contribution(
    g: &Graph,
    p: usize,
    q: usize,
    v: usize,
    w: usize,
) -> Result<Rational> {
    validate_case_a(g, p, q, v)?;
    if w == p || w == q || w == v {
        return Err(Error::InvalidCut(format!("w = {w} must lie outside K⁺")));
    }
    let pairs = [(p, w), (q, w), (v, w)];
    let cut_avg = (pair_induced_betweenness(g, &pairs, p)?
        + pair_induced_betweenness(g, &pairs, q)?)
        / rational(2);
    Ok(cut_avg - pair_induced_betweenness(g, &pairs, v)?)
}

/// The closed-form prediction for disc_{K⁺×{w}} by the value of α(w):
/// 1/2 for |α| ≤ 1, (1 − σ_{w,p}/σ_{w,q})/2 for α = −2, the mirrored
/// form for α = 2, and 0 for |α| ≥ 3.
pub fn case_a_contribution_formula(
    g: &Graph,
    p: usize,
    q: usize,
    v: usize,
    w: usize,
) -> Result<Rational> {
    validate_case_a(g, p, q, v)?;
    if w == p || w == q || w == v {
        return Err(Error::InvalidCut(format!("w = {w} must lie outside K⁺")));
    }
    let from_w = path_counts(g, w)?;
    let alpha = from_w.dist[p] as i64 - from_w.dist[q] as i64;
    let sigma_wp = Rational::from_integer(from_w.sigma[p].clone().into());
    let sigma_wq = Rational::from_integer(from_w.sigma[q].clone().into());
    Ok(match alpha {
        -1..=1 => ratio(1, 2),
        -2 => (Rational::one() - sigma_wp / sigma_wq) / rational(2),
        2 => (Rational::one() - sigma_wq / sigma_wp) / rational(2),
        _ => Rational::zero(),
    })
}

/// Discrepancy contribution of the single pair {p,q} in the K = {v}
/// configuration: −σ_{p,q}(v)/σ_{p,q}. Equals −1 exactly when p–v–q is
/// the unique pq-geodesic.
pub fn disc_pq_pair(g: &Graph, p: usize, q: usize, v: usize) -> Result<Rational> {
    validate_case_a(g, p, q, v)?;
    Ok(-pair_induced_betweenness(g, &[(p, q)], v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::minimal_two_cut;
    use crate::constructions::{complete, cycle};

    /// K_4 minus the edge {2,3}; the hub pair {0,1} is its unique 2-cut.
    fn diamond() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn disc_zero_on_uniform_graphs() {
        let c6 = cycle(6).unwrap();
        for (p, q, k) in [(0usize, 2usize, vec![1usize]), (0, 3, vec![1, 2]), (1, 4, vec![2, 3])] {
            assert!(disc(&c6, p, q, &k).unwrap().is_zero());
        }
    }

    #[test]
    fn disc_positive_on_diamond() {
        let g = diamond();
        let d = disc(&g, 0, 1, &[2]).unwrap();
        // B = (1/2, 1/2, 0, 0): disc = 1/2 − 0
        assert_eq!(d, ratio(1, 2));
    }

    #[test]
    fn disc_rejects_invalid_cuts() {
        let k4 = complete(4).unwrap();
        assert!(matches!(disc(&k4, 0, 1, &[2]), Err(Error::InvalidCut(_))));
        let c5 = cycle(5).unwrap();
        // {0,2} is a cut but {3} is not a full component
        assert!(matches!(disc(&c5, 0, 2, &[3]), Err(Error::InvalidCut(_))));
    }

    #[test]
    fn breakdown_sums_exactly() {
        for g in [cycle(6).unwrap(), diamond()] {
            let analysis = minimal_two_cut(&g).unwrap();
            let b = disc_breakdown(&g, &analysis).unwrap();
            assert!(b.decomposes_exactly(), "{b:?}");
        }
        let c6 = cycle(6).unwrap();
        let b = disc_breakdown(&c6, &minimal_two_cut(&c6).unwrap()).unwrap();
        assert!(b.total.is_zero());
    }

    #[test]
    fn alpha_profile_examples() {
        // w adjacent to both p and q
        let g = diamond();
        let prof = alpha_profile(&g, 0, 1).unwrap();
        assert_eq!(prof.get(2), Some(0));
        assert_eq!(prof.get(3), Some(0));
        assert_eq!(prof.get(0), None);

        // C_8 with antipodal p,q: alpha steps through even values
        let c8 = cycle(8).unwrap();
        let prof = alpha_profile(&c8, 0, 4).unwrap();
        assert_eq!(prof.get(1), Some(-2));
        assert_eq!(prof.get(2), Some(0));
        assert_eq!(prof.get(3), Some(2));
        assert_eq!(prof.get(6), Some(0));
        // neighbor step bound
        for (u, w) in c8.edges().collect::<Vec<_>>() {
            if let (Some(a), Some(b)) = (prof.get(u), prof.get(w)) {
                assert!((a - b).abs() <= 2);
            }
        }
    }

    #[test]
    fn case_a_branches_on_c5() {
        // C_5 with p=0, q=2, v=1 (minimal cut, case A)
        let c5 = cycle(5).unwrap();
        let prof = alpha_profile(&c5, 0, 2).unwrap();
        for w in [3usize, 4] {
            let measured = case_a_contribution(&c5, 0, 2, 1, w).unwrap();
            let predicted = case_a_contribution_formula(&c5, 0, 2, 1, w).unwrap();
            assert_eq!(measured, predicted, "w = {w}, alpha = {:?}", prof.get(w));
        }
        // both remaining vertices have |alpha| = 1 -> exactly 1/2
        assert_eq!(case_a_contribution(&c5, 0, 2, 1, 3).unwrap(), ratio(1, 2));
        assert_eq!(case_a_contribution(&c5, 0, 2, 1, 4).unwrap(), ratio(1, 2));
    }

    #[test]
    fn case_a_config_is_validated() {
        let c5 = cycle(5).unwrap();
        // v not adjacent to q
        assert!(case_a_contribution(&c5, 0, 3, 1, 4).is_err());
        // pq adjacent in a triangle
        let k3 = complete(3).unwrap();
        assert!(case_a_contribution(&k3, 0, 2, 1, 0).is_err());
        // w inside K⁺
        assert!(case_a_contribution(&c5, 0, 2, 1, 0).is_err());
    }

    #[test]
    fn pq_pair_contribution() {
        // C_4: two pq-geodesics, one through v -> -1/2
        let c4 = cycle(4).unwrap();
        assert_eq!(disc_pq_pair(&c4, 0, 2, 1).unwrap(), ratio(-1, 2));
        // C_5: p-v-q is the unique geodesic -> -1
        let c5 = cycle(5).unwrap();
        assert_eq!(disc_pq_pair(&c5, 0, 2, 1).unwrap(), rational(-1));
    }
}
