//! Immutable simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is one `u64` bitset per vertex, so a row fits in a machine
//! word and set operations on neighborhoods are single instructions.
//! Graphs never change after construction; operations that "modify"
//! return new graphs.

use crate::error::{Error, Result};

/// Maximum number of vertices supported by the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple undirected graph with vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph directly from adjacency bitsets.
    /// Rows must be symmetric, loop-free and confined to the low `n` bits.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m & (1 << v) == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v) & 1 == (adj[v] >> u) & 1)));
        if n < MAX_VERTICES {
            let mask = (1u64 << n) - 1;
            debug_assert!(adj.iter().all(|&m| m & !mask == 0));
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges in lexicographic order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            // keep only neighbors with id greater than u
            BitIter(self.adj[u] & !(u64::MAX >> (63 - u))).map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange { vertex: source, n: self.n });
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut frontier: u64 = 1 << source;
        let mut seen: u64 = frontier;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            for v in BitIter(next) {
                dist[v] = Some(level);
            }
            frontier = next;
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen: u64 = 1;
        loop {
            let mut next = seen;
            for v in BitIter(seen) {
                next |= self.adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Largest pairwise distance. Errors when some pair is unreachable.
    pub fn diameter(&self) -> Result<u32> {
        let mut best = 0u32;
        for s in 0..self.n {
            for d in self.bfs_distances(s)? {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::DisconnectedGraph),
                }
            }
        }
        Ok(best)
    }

    /// Induced subgraph on the vertex set `vs`, plus both index maps.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Induced> {
        if vs.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut sorted: Vec<usize> = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut adj = vec![0u64; sorted.len()];
        for (new_u, &old_u) in sorted.iter().enumerate() {
            for old_v in BitIter(self.adj[old_u]) {
                if let Some(new_v) = old_to_new[old_v] {
                    adj[new_u] |= 1 << new_v;
                }
            }
        }
        Ok(Induced { graph: Graph::from_adjacency(adj), old_to_new, new_to_old: sorted })
    }

    /// Connected components as vertex sets, sorted by minimum vertex id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut assigned: u64 = 0;
        for v in 0..self.n {
            if assigned >> v & 1 == 1 {
                continue;
            }
            let mut comp: u64 = 1 << v;
            loop {
                let mut next = comp;
                for u in BitIter(comp) {
                    next |= self.adj[u];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            assigned |= comp;
            out.push(BitIter(comp).collect());
        }
        out
    }

    /// True iff the graph is a cycle C_n: connected, n ≥ 3, all degrees 2.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// New graph with one extra vertex adjacent to the vertices in `mask`.
    pub fn add_vertex(&self, mask: u64) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::BadVertexCount(self.n + 1));
        }
        debug_assert!(mask & !((1u64 << self.n) - 1) == 0);
        let v = self.n;
        let mut adj = self.adj.clone();
        adj.push(mask);
        for u in BitIter(mask) {
            adj[u] |= 1 << v;
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// New graph with vertex `v` removed and higher ids shifted down.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::BadVertexCount(0));
        }
        let vs: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&vs)?.graph)
    }

    /// New graph with vertex `u` renamed to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::MismatchedAnalysis(format!(
                "permutation length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange { vertex: p, n: self.n });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::MismatchedAnalysis("not a permutation".into()));
            }
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph::from_adjacency(adj))
    }
}

/// Result of an induced-subgraph operation: the graph plus index maps
/// in both directions (`old_to_new[old] = Some(new)` for kept vertices).
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// All-pairs hop distances with unreachable pairs kept distinct from
/// any numeric value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut d = vec![None; n * n];
        for s in 0..n {
            let row = g.bfs_distances(s).expect("source in range");
            d[s * n..(s + 1) * n].copy_from_slice(&row);
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    /// Sum of `d(u,v)` over all ordered pairs; errors if any pair is
    /// unreachable.
    pub fn ordered_distance_sum(&self) -> Result<u64> {
        let mut total = 0u64;
        for &e in &self.d {
            total += e.ok_or(Error::DisconnectedGraph)? as u64;
        }
        Ok(total)
    }
}

/// Iterator over the set bits of a `u64`.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path};

    #[test]
    fn from_edge_list_basics() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, complete(3).unwrap());

        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.n(), 1);
        assert!(k1.is_connected());

        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, cycle(4).unwrap());
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::BadVertexCount(0)));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(Error::BadVertexCount(65)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bfs_distances_examples() {
        let c5 = cycle(5).unwrap();
        let d: Vec<u32> = c5.bfs_distances(0).unwrap().into_iter().map(|x| x.unwrap()).collect();
        assert_eq!(d, vec![0, 1, 2, 2, 1]);

        let k4 = complete(4).unwrap();
        let d: Vec<u32> = k4.bfs_distances(0).unwrap().into_iter().map(|x| x.unwrap()).collect();
        assert_eq!(d, vec![0, 1, 1, 1]);

        let p4 = path(4).unwrap();
        let d: Vec<u32> = p4.bfs_distances(0).unwrap().into_iter().map(|x| x.unwrap()).collect();
        assert_eq!(d, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bfs_marks_unreachable() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = g.bfs_distances(0).unwrap();
        assert_eq!(d[1], Some(1));
        assert_eq!(d[2], None);
        assert_eq!(d[3], None);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(cycle(6).unwrap().diameter().unwrap(), 3);
        for n in 2..=8 {
            assert_eq!(complete(n).unwrap().diameter().unwrap(), 1);
        }
        for n in 3..=16 {
            assert_eq!(cycle(n).unwrap().diameter().unwrap(), (n / 2) as u32);
        }
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn connectivity_and_components() {
        assert!(cycle(5).unwrap().is_connected());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());

        let c3_c4 = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
        .unwrap();
        let comps = c3_c4.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![0, 1, 2]);
        assert_eq!(comps[1], vec![3, 4, 5, 6]);

        let edgeless = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(edgeless.components(), vec![vec![0], vec![1], vec![2]]);

        assert_eq!(cycle(5).unwrap().components().len(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5).unwrap();
        let ind = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(ind.graph, path(3).unwrap());
        assert_eq!(ind.new_to_old, vec![0, 1, 2]);

        let all: Vec<usize> = (0..5).collect();
        let ind = c5.induced_subgraph(&all).unwrap();
        assert_eq!(ind.graph, c5);
        assert!(ind.old_to_new.iter().enumerate().all(|(i, m)| *m == Some(i)));

        let k4 = complete(4).unwrap();
        let ind = k4.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(ind.graph, complete(2).unwrap());

        assert_eq!(c5.induced_subgraph(&[]).err(), Some(Error::EmptySet));
    }

    #[test]
    fn cycle_detection() {
        assert!(cycle(7).unwrap().is_cycle_graph());
        assert!(!complete(4).unwrap().is_cycle_graph());
        assert!(!path(5).unwrap().is_cycle_graph());
        assert!(cycle(3).unwrap().is_cycle_graph());
        // Two disjoint triangles are 2-regular but disconnected.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!g.is_cycle_graph());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edge_list(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn distance_matrix_symmetric_with_zero_diagonal() {
        let g = cycle(7).unwrap();
        let dm = DistanceMatrix::compute(&g);
        for u in 0..7 {
            assert_eq!(dm.get(u, u), Some(0));
            for v in 0..7 {
                assert_eq!(dm.get(u, v), dm.get(v, u));
            }
        }
        assert_eq!(dm.ordered_distance_sum().unwrap(), 7 * (1 + 1 + 2 + 2 + 3 + 3));
    }

    #[test]
    fn add_and_remove_vertex_round_trip() {
        let p3 = path(3).unwrap();
        let g = p3.add_vertex(0b100).unwrap(); // attach new vertex to 2 -> P_4
        assert_eq!(g, path(4).unwrap());
        assert_eq!(g.remove_vertex(3).unwrap(), p3);
    }

    #[test]
    fn relabel_is_isomorphic_action() {
        let p4 = path(4).unwrap();
        let g = p4.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(g, p4); // reversing a path maps it onto itself
        let g = p4.relabel(&[1, 0, 2, 3]).unwrap();
        assert!(g.has_edge(1, 0) && g.has_edge(0, 2) && g.has_edge(2, 3));
    }
}
