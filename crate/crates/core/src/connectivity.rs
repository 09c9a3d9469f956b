//! Vertex connectivity, 2-cut enumeration, and the minimal-2-cut
//! decomposition (cut {p,q}, smallest component K, remaining
//! components L_i).
//!
//! κ is computed with unit-capacity max-flow on the vertex-split
//! digraph (Menger), minimized over the pairs that a minimum cut must
//! separate; the exhaustive subset-removal search survives only as a
//! test oracle.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Which side of the smallest-component dichotomy a 2-cut analysis
/// landed on: `A` means `|K| = 1`, `B` means both cut vertices have at
/// least two neighbors in K.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutCase {
    A,
    B,
}

impl std::fmt::Display for CutCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutCase::A => write!(f, "A"),
            CutCase::B => write!(f, "B"),
        }
    }
}

/// A 2-cut {p,q} together with a smallest component K of `G − {p,q}`
/// and the remaining components L_1..L_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCutAnalysis {
    pub p: usize,
    pub q: usize,
    /// Vertices of the chosen smallest component, ascending.
    pub k_set: Vec<usize>,
    /// Remaining components, each ascending, ordered by minimum vertex.
    pub ls: Vec<Vec<usize>>,
    pub case_tag: CutCase,
    /// `|K|`.
    pub k: usize,
    /// `n − k − 2`, the total size of L.
    pub ell: usize,
}

/// κ(G) via vertex-split max-flow. For the complete graph this is
/// `n − 1` by convention. Errors on disconnected input.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.n();
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    // A minimum cut either avoids x (then it separates x from some
    // non-neighbor) or contains x (then it separates two of x's
    // neighbors, which are non-adjacent). Minimizing over exactly those
    // pairs is therefore enough.
    let x = (0..n).min_by_key(|&v| g.degree(v)).expect("n ≥ 1");
    let mut best = usize::MAX;
    for t in 0..n {
        if t != x && !g.has_edge(x, t) {
            best = best.min(max_disjoint_paths(g, x, t));
        }
    }
    let nbrs: Vec<usize> = g.neighbors(x).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(max_disjoint_paths(g, a, b));
            }
        }
    }
    Ok(best)
}

/// Maximum number of internally-vertex-disjoint paths between the
/// non-adjacent vertices `s` and `t`, by unit-capacity max-flow on the
/// split digraph (v_in → v_out per vertex, both arc directions per
/// edge).
fn max_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let m = 2 * n;
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut cap = vec![0u8; m * m];
    for v in 0..n {
        cap[node_in(v) * m + node_out(v)] = 1;
    }
    for (u, v) in g.edges() {
        cap[node_out(u) * m + node_in(v)] = 1;
        cap[node_out(v) * m + node_in(u)] = 1;
    }
    let source = node_out(s);
    let sink = node_in(t);
    let mut flow = 0;
    loop {
        // BFS for an augmenting path in the residual network
        let mut parent = vec![usize::MAX; m];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if parent[v] == usize::MAX && cap[u * m + v] > 0 {
                    parent[v] = u;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u * m + v] -= 1;
            cap[v * m + u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// True iff `n > k` and no vertex cut of size less than `k` exists.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    vertex_connectivity(g).expect("connected") >= k
}

/// Every unordered pair whose removal disconnects the graph, in
/// lexicographic order.
pub fn all_two_cuts(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cuts = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            let mask = full & !(1 << p) & !(1 << q);
            if !connected_within(g, mask) {
                cuts.push((p, q));
            }
        }
    }
    Ok(cuts)
}

/// Whether the vertices in `mask` induce a connected subgraph. Empty
/// and singleton masks count as connected.
fn connected_within(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen: u64 = 1 << start;
    loop {
        let mut next = seen;
        for v in BitIter(seen) {
            next |= g.neighbor_mask(v) & mask;
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == mask
}

/// Components of the subgraph induced by `mask`, each ascending,
/// ordered by minimum vertex.
fn components_within(g: &Graph, mask: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut remaining = mask;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp: u64 = 1 << start;
        loop {
            let mut next = comp;
            for v in BitIter(comp) {
                next |= g.neighbor_mask(v) & mask;
            }
            if next == comp {
                break;
            }
            comp = next;
        }
        remaining &= !comp;
        out.push(BitIter(comp).collect());
    }
    out
}

/// Among all 2-cuts, the one minimizing the size of the smallest
/// component of `G − {p,q}`; ties broken by lexicographically smallest
/// `(p,q)`, then lexicographically smallest K. Requires κ(G) = 2.
pub fn minimal_two_cut(g: &Graph) -> Result<TwoCutAnalysis> {
    let kappa = vertex_connectivity(g)?;
    if kappa != 2 {
        return Err(Error::NotExactlyTwoConnected(kappa));
    }
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<TwoCutAnalysis> = None;
    for p in 0..n {
        for q in p + 1..n {
            let mask = full & !(1 << p) & !(1 << q);
            let comps = components_within(g, mask);
            if comps.len() < 2 {
                continue;
            }
            let k = comps.iter().map(|c| c.len()).min().expect("≥2 components");
            if best.as_ref().is_some_and(|b| b.k <= k) {
                continue;
            }
            let k_set = comps
                .iter()
                .filter(|c| c.len() == k)
                .min()
                .expect("some component has the minimum size")
                .clone();
            let ls: Vec<Vec<usize>> = comps.into_iter().filter(|c| *c != k_set).collect();
            let case_tag = if k == 1 { CutCase::A } else { CutCase::B };
            best = Some(TwoCutAnalysis { p, q, k_set, ls, case_tag, k, ell: n - k - 2 });
        }
    }
    best.ok_or_else(|| Error::InvalidCut("no 2-cut found despite κ = 2".into()))
}

/// Checks that `analysis` describes `g`: {p,q} removal yields exactly
/// K plus the listed L components.
pub fn validate_analysis(g: &Graph, analysis: &TwoCutAnalysis) -> Result<()> {
    let n = g.n();
    let TwoCutAnalysis { p, q, k_set, ls, k, ell, .. } = analysis;
    if *p >= n || *q >= n || p == q {
        return Err(Error::MismatchedAnalysis(format!("bad cut pair ({p},{q})")));
    }
    if *k != k_set.len() || *ell != ls.iter().map(|l| l.len()).sum::<usize>() {
        return Err(Error::MismatchedAnalysis("component sizes disagree with k/ell".into()));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mask = full & !(1 << p) & !(1 << q);
    let mut expected: Vec<Vec<usize>> = std::iter::once(k_set.clone())
        .chain(ls.iter().cloned())
        .collect();
    expected.sort();
    let mut actual = components_within(g, mask);
    actual.sort();
    if expected != actual {
        return Err(Error::MismatchedAnalysis(
            "listed components are not the components of G − {p,q}".into(),
        ));
    }
    if actual.len() < 2 {
        return Err(Error::MismatchedAnalysis("{p,q} is not a cut".into()));
    }
    Ok(())
}

/// One per-component subgraph `G_i = G[V(K) ∪ {p,q} ∪ V(L_i)]`,
/// re-indexed, with the cut and component positions carried along.
#[derive(Debug, Clone)]
pub struct ComponentSubgraph {
    pub graph: Graph,
    /// new index → original vertex id
    pub new_to_old: Vec<usize>,
    pub p: usize,
    pub q: usize,
    pub k_set: Vec<usize>,
    pub l_set: Vec<usize>,
}

/// Splits a multi-component analysis into its per-component subgraphs.
pub fn component_subgraphs(g: &Graph, analysis: &TwoCutAnalysis) -> Result<Vec<ComponentSubgraph>> {
    validate_analysis(g, analysis)?;
    let mut out = Vec::new();
    for l in &analysis.ls {
        let mut vs: Vec<usize> = Vec::new();
        vs.extend_from_slice(&analysis.k_set);
        vs.push(analysis.p);
        vs.push(analysis.q);
        vs.extend_from_slice(l);
        let ind = g.induced_subgraph(&vs)?;
        let map = |old: usize| ind.old_to_new[old].expect("vertex kept");
        out.push(ComponentSubgraph {
            p: map(analysis.p),
            q: map(analysis.q),
            k_set: analysis.k_set.iter().map(|&v| map(v)).collect(),
            l_set: l.iter().map(|&v| map(v)).collect(),
            new_to_old: ind.new_to_old,
            graph: ind.graph,
        });
    }
    Ok(out)
}

impl ComponentSubgraph {
    /// The analysis of this component subgraph in its own indexing
    /// (single L component).
    pub fn analysis(&self) -> TwoCutAnalysis {
        let k = self.k_set.len();
        TwoCutAnalysis {
            p: self.p,
            q: self.q,
            k_set: self.k_set.clone(),
            ls: vec![self.l_set.clone()],
            case_tag: if k == 1 { CutCase::A } else { CutCase::B },
            k,
            ell: self.l_set.len(),
        }
    }
}

/// K⁺: the subgraph induced by `V(K) ∪ {p,q}`.
pub fn k_plus(g: &Graph, analysis: &TwoCutAnalysis) -> Result<Graph> {
    validate_analysis(g, analysis)?;
    let mut vs = analysis.k_set.clone();
    vs.push(analysis.p);
    vs.push(analysis.q);
    Ok(g.induced_subgraph(&vs)?.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path, petersen};

    #[test]
    fn kappa_fixtures() {
        for n in 3..=8 {
            assert_eq!(vertex_connectivity(&cycle(n).unwrap()).unwrap(), 2);
        }
        for n in 3..=8 {
            assert_eq!(vertex_connectivity(&path(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(vertex_connectivity(&complete(5).unwrap()).unwrap(), 4);
        assert_eq!(vertex_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&complete(1).unwrap()).unwrap(), 0);
        let disconnected = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected).err(), Some(Error::DisconnectedGraph));
    }

    #[test]
    fn k_connected_fixtures() {
        assert!(is_k_connected(&complete(4).unwrap(), 3));
        assert!(!is_k_connected(&cycle(5).unwrap(), 3));
        // n > k fails for K_4 with k = 4
        assert!(!is_k_connected(&complete(4).unwrap(), 4));
        assert!(is_k_connected(&cycle(5).unwrap(), 2));
        let disconnected = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_k_connected(&disconnected, 1));
    }

    #[test]
    fn two_cuts_fixtures() {
        assert_eq!(all_two_cuts(&cycle(4).unwrap()).unwrap(), vec![(0, 2), (1, 3)]);
        assert!(all_two_cuts(&complete(4).unwrap()).unwrap().is_empty());
        // theta graph: hubs 0,1 joined by three paths of length 3
        let theta = Graph::from_edge_list(
            8,
            &[(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let cuts = all_two_cuts(&theta).unwrap();
        assert!(cuts.contains(&(0, 1)), "hub pair missing from {cuts:?}");
    }

    #[test]
    fn minimal_cut_on_cycles() {
        let a = minimal_two_cut(&cycle(6).unwrap()).unwrap();
        assert_eq!(a.k, 1);
        assert_eq!(a.case_tag, CutCase::A);
        assert_eq!((a.p, a.q), (0, 2));
        assert_eq!(a.k_set, vec![1]);
        assert_eq!(a.ell, 3);

        let a = minimal_two_cut(&cycle(4).unwrap()).unwrap();
        assert_eq!((a.p, a.q, a.k_set.clone()), (0, 2, vec![1]));
    }

    #[test]
    fn minimal_cut_requires_kappa_two() {
        assert_eq!(
            minimal_two_cut(&complete(4).unwrap()).err(),
            Some(Error::NotExactlyTwoConnected(3))
        );
        assert_eq!(
            minimal_two_cut(&path(4).unwrap()).err(),
            Some(Error::NotExactlyTwoConnected(1))
        );
    }

    #[test]
    fn component_subgraphs_of_cycle_reproduce_it() {
        let c6 = cycle(6).unwrap();
        let a = minimal_two_cut(&c6).unwrap();
        let subs = component_subgraphs(&c6, &a).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].graph.n(), 6);
        assert!(subs[0].graph.is_cycle_graph());
    }

    #[test]
    fn component_subgraphs_book_graph() {
        // two triangles sharing the edge {0,1} plus two subdivided pages
        let book = Graph::from_edge_list(
            8,
            &[
                (0, 1),
                (0, 2), (1, 2),
                (0, 3), (1, 3),
                (0, 4), (4, 5), (5, 1),
                (0, 6), (6, 7), (7, 1),
            ],
        )
        .unwrap();
        let a = minimal_two_cut(&book).unwrap();
        assert_eq!((a.p, a.q), (0, 1));
        assert_eq!(a.k_set, vec![2]);
        assert_eq!(a.ls, vec![vec![3], vec![4, 5], vec![6, 7]]);
        let subs = component_subgraphs(&book, &a).unwrap();
        assert_eq!(subs.len(), 3);
        for sub in &subs {
            assert!(is_k_connected(&sub.graph, 2), "each G_i must be 2-connected");
            validate_analysis(&sub.graph, &sub.analysis()).unwrap();
        }
    }

    #[test]
    fn k_plus_case_a_is_short_path() {
        let c5 = cycle(5).unwrap();
        let a = minimal_two_cut(&c5).unwrap();
        assert_eq!(a.case_tag, CutCase::A);
        let kp = k_plus(&c5, &a).unwrap();
        assert_eq!(kp.n(), a.k + 2);
        assert_eq!(kp, path(3).unwrap());
    }

    #[test]
    fn validate_rejects_mismatch() {
        let c5 = cycle(5).unwrap();
        let mut a = minimal_two_cut(&c5).unwrap();
        a.k_set = vec![3];
        assert!(matches!(validate_analysis(&c5, &a), Err(Error::MismatchedAnalysis(_))));
    }
}
