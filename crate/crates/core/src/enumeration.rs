//! Isomorph-free generation and streaming of small connected graphs.
//!
//! Canonicalization is a pruned search for the lexicographically
//! minimal upper-triangle bit string over all vertex permutations (the
//! same column-wise bit order graph6 uses). Placing one vertex at a
//! time appends a fixed-width column of bits, so at each depth only the
//! candidates achieving the minimal column can extend an optimal
//! prefix, and branches whose prefix already exceeds the best known
//! string are cut. A degree-ascending greedy labeling seeds the bound.
//!
//! Generation extends each (n−1)-vertex representative by one new
//! vertex per nonempty neighbor subset and keeps a child exactly when
//! deleting its canonical non-cut vertex recovers the parent it was
//! built from, so each isomorphism class is produced from exactly one
//! parent and memory stays flat per level.

use std::collections::HashSet;

use crate::betweenness::is_betweenness_uniform;
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::graph6::Graph6Reader;

/// Hard ceiling for exact canonicalization.
pub const MAX_CANON_VERTICES: usize = 10;

/// Default in-process generation ceiling; larger corpora come from
/// graph6 files (or an explicit cap override, which is slow).
pub const DEFAULT_GENERATION_CAP: usize = 9;

/// Permutation-minimal upper-triangle adjacency bit string. Two graphs
/// have equal canonical forms exactly when they are isomorphic.
///
/// Bits are stored left-aligned in a `u64` (string position k at bit
/// 63−k), so comparing forms of equal order is integer comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative: the graph whose labeled adjacency
    /// equals the form.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut adj = vec![0u64; n];
        let mut index = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (63 - index) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                index += 1;
            }
        }
        Graph::from_adjacency(adj)
    }
}

/// Canonical form of `g`. Errors with `TooLarge` above
/// [`MAX_CANON_VERTICES`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with one permutation achieving it
/// (`perm[v]` is the position of vertex `v` in the canonical order).
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "exact canonicalization is capped at {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    let mut search = CanonSearch::new(g);
    search.seed_greedy();
    search.run(0);
    let placed = search.best_placed;
    let mut perm = vec![0usize; n];
    for (pos, &v) in placed.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n: n as u8, bits: search.best_bits }, perm))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    placed: Vec<usize>,
    used: u64,
    cur_bits: u64,
    cur_len: u32,
    best_bits: u64,
    best_placed: Vec<usize>,
}

impl<'a> CanonSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        CanonSearch {
            g,
            n: g.n(),
            placed: Vec::with_capacity(g.n()),
            used: 0,
            cur_bits: 0,
            cur_len: 0,
            best_bits: u64::MAX,
            best_placed: (0..g.n()).collect(),
        }
    }

    /// Bits contributed by placing `v` next: adjacency to the already
    /// placed vertices, earliest position first.
    fn column(&self, v: usize) -> u64 {
        let mut col = 0u64;
        for &u in &self.placed {
            col = col << 1 | u64::from(self.g.has_edge(u, v));
        }
        col
    }

    /// Ascending-degree greedy labeling to initialize the bound.
    fn seed_greedy(&mut self) {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.g.degree(v), v));
        let mut bits = 0u64;
        let mut len = 0u32;
        let mut placed: Vec<usize> = Vec::with_capacity(self.n);
        for &v in &order {
            let mut col = 0u64;
            for &u in &placed {
                col = col << 1 | u64::from(self.g.has_edge(u, v));
            }
            let width = placed.len() as u32;
            bits |= col << (64 - len - width).min(63);
            len += width;
            placed.push(v);
        }
        self.best_bits = bits;
        self.best_placed = placed;
    }

    fn run(&mut self, depth: usize) {
        if depth == self.n {
            if self.cur_bits < self.best_bits {
                self.best_bits = self.cur_bits;
                self.best_placed = self.placed.clone();
            }
            return;
        }
        let width = depth as u32;
        // among the unplaced vertices only those with the minimal next
        // column can lead to a minimal completion
        let mut min_col = u64::MAX;
        let mut candidates: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let col = self.column(v);
            if col < min_col {
                min_col = col;
                candidates.clear();
                candidates.push(v);
            } else if col == min_col {
                candidates.push(v);
            }
        }
        let new_len = self.cur_len + width;
        let new_bits = if width == 0 {
            self.cur_bits
        } else {
            self.cur_bits | min_col << (64 - new_len)
        };
        // prune against the best string on the shared prefix
        if new_len > 0 && prefix(new_bits, new_len) > prefix(self.best_bits, new_len) {
            return;
        }
        let saved_bits = self.cur_bits;
        let saved_len = self.cur_len;
        self.cur_bits = new_bits;
        self.cur_len = new_len;
        for v in candidates {
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(depth + 1);
            self.used &= !(1 << v);
            self.placed.pop();
        }
        self.cur_bits = saved_bits;
        self.cur_len = saved_len;
    }
}

fn prefix(bits: u64, len: u32) -> u64 {
    if len == 0 {
        0
    } else {
        bits >> (64 - len)
    }
}

/// Conjunctive graph predicates for corpus filtering.
#[derive(Clone, Default)]
pub struct CorpusFilter {
    pub connected: bool,
    pub two_connected: bool,
    pub betweenness_uniform: bool,
    pub min_degree: Option<usize>,
    pub custom: Option<fn(&Graph) -> bool>,
}

impl std::fmt::Debug for CorpusFilter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CorpusFilter")
            .field("connected", &self.connected)
            .field("two_connected", &self.two_connected)
            .field("betweenness_uniform", &self.betweenness_uniform)
            .field("min_degree", &self.min_degree)
            .field("custom", &self.custom.is_some())
            .finish()
    }
}

impl CorpusFilter {
    pub fn accept_all() -> Self {
        CorpusFilter::default()
    }

    pub fn connected_only() -> Self {
        CorpusFilter { connected: true, ..Default::default() }
    }

    pub fn matches(&self, g: &Graph) -> bool {
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.two_connected && !crate::connectivity::is_k_connected(g, 2) {
            return false;
        }
        if self.betweenness_uniform {
            // uniformity is defined for connected graphs only
            if !g.is_connected() {
                return false;
            }
            if is_betweenness_uniform(g).expect("connected").is_none() {
                return false;
            }
        }
        if let Some(d) = self.min_degree {
            if g.min_degree() < d {
                return false;
            }
        }
        if let Some(f) = self.custom {
            if !f(g) {
                return false;
            }
        }
        true
    }
}

/// All connected graphs on exactly `n` vertices, one canonical
/// representative per isomorphism class, sorted by canonical form.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    generate_connected_with_cap(n, DEFAULT_GENERATION_CAP)
}

/// [`generate_connected`] behind a process-wide cache. Generation is
/// deterministic, so repeated corpus runs share one copy per order.
pub fn generate_connected_cached(n: usize, cap: usize) -> Result<std::sync::Arc<Vec<Graph>>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
        if n <= cap {
            return Ok(Arc::clone(hit));
        }
    }
    let graphs = Arc::new(generate_connected_with_cap(n, cap)?);
    cache.lock().expect("cache lock").insert(n, Arc::clone(&graphs));
    Ok(graphs)
}

/// [`generate_connected`] with an explicit cap override. The cap can be
/// raised to at most [`MAX_CANON_VERTICES`]; expect the top level to be
/// slow there.
pub fn generate_connected_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::BadVertexCount(0));
    }
    if n > cap || n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "in-process generation is capped at {} vertices, got {n}",
            cap.min(MAX_CANON_VERTICES)
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::from_edge_list(1, &[]).expect("K_1")];
    for size in 2..=n {
        level = extend_level(&level, size)?;
    }
    Ok(level)
}

/// One generation step: all canonical representatives on `size`
/// vertices from the representatives on `size − 1`.
fn extend_level(parents: &[Graph], size: usize) -> Result<Vec<Graph>> {
    use rayon::prelude::*;
    let results: Vec<Vec<CanonicalForm>> = parents
        .par_iter()
        .map(children_of)
        .collect::<Result<Vec<_>>>()?;
    let mut forms: Vec<CanonicalForm> = results.into_iter().flatten().collect();
    forms.sort_unstable();
    debug_assert!(forms.windows(2).all(|w| w[0] != w[1]), "duplicate class at size {size}");
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}

/// Children of one parent representative that pass the canonical-parent
/// test, deduplicated within the parent.
fn children_of(parent: &Graph) -> Result<Vec<CanonicalForm>> {
    let k = parent.n();
    let parent_form = canonical_form(parent)?;
    debug_assert_eq!(parent_form.to_graph(), *parent, "parents must be canonical representatives");
    let mut decided: HashSet<CanonicalForm> = HashSet::new();
    let mut accepted = Vec::new();
    for mask in 1..(1u64 << k) {
        let child = parent.add_vertex(mask)?;
        let (child_form, perm) = canonical_labeling(&child)?;
        if !decided.insert(child_form) {
            continue;
        }
        // canonical deletion vertex: the non-cut vertex in the latest
        // canonical position; removing it recovers this child's unique
        // canonical parent class
        let f = deletion_vertex(&child, &perm);
        let reduced = child.remove_vertex(f)?;
        if canonical_form(&reduced)? == parent_form {
            accepted.push(child_form);
        }
    }
    Ok(accepted)
}

/// The non-cut vertex occupying the latest canonical position. Every
/// connected graph on ≥ 2 vertices has one, and the choice is
/// isomorphism-invariant up to automorphism.
fn deletion_vertex(g: &Graph, perm: &[usize]) -> usize {
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..n)
        .filter(|&w| connected_mask(g, full & !(1 << w)))
        .max_by_key(|&w| perm[w])
        .expect("a connected graph has a non-cut vertex")
}

fn connected_mask(g: &Graph, mask: u64) -> bool {
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

/// Lazily decoded graphs from a graph6 stream that pass the filter.
/// Malformed lines surface as errors carrying their line number.
pub fn stream_graph6<R: std::io::BufRead>(
    reader: R,
    filter: CorpusFilter,
) -> impl Iterator<Item = Result<Graph>> {
    Graph6Reader::new(reader).filter_map(move |item| match item {
        Ok((_, g)) => filter.matches(&g).then_some(Ok(g)),
        Err(e) => Some(Err(e)),
    })
}

/// [`stream_graph6`] over a file path.
pub fn stream_graph6_file(
    path: &std::path::Path,
    filter: CorpusFilter,
) -> Result<impl Iterator<Item = Result<Graph>>> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    Ok(stream_graph6(std::io::BufReader::new(file), filter))
}

/// Number of n-vertex classes passing the filter, with the witnesses as
/// graph6 lines in canonical order.
pub fn count_by_predicate(n: usize, filter: &CorpusFilter) -> Result<(usize, Vec<String>)> {
    let witnesses: Vec<String> = generate_connected(n)?
        .into_iter()
        .filter(|g| filter.matches(g))
        .map(|g| crate::graph6::encode_graph6(&g))
        .collect();
    Ok((witnesses.len(), witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = petersen();
        let f = canonical_form(&g).unwrap();
        let perm: Vec<usize> = vec![3, 1, 4, 0, 2, 9, 8, 7, 6, 5];
        assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), f);
    }

    #[test]
    fn canonical_form_separates_non_isomorphic() {
        let c4 = canonical_form(&cycle(4).unwrap()).unwrap();
        let star = canonical_form(&complete_bipartite(1, 3).unwrap()).unwrap();
        assert_ne!(c4, star);
    }

    #[test]
    fn canonical_labeling_realizes_form() {
        for g in [cycle(5).unwrap(), path(6).unwrap(), complete_bipartite(2, 3).unwrap()] {
            let (form, perm) = canonical_labeling(&g).unwrap();
            assert_eq!(g.relabel(&perm).unwrap(), form.to_graph());
        }
    }

    #[test]
    fn canonical_form_rejects_large_graphs() {
        let g = cycle(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn labeled_four_vertex_graphs_have_eleven_classes() {
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let mut edges = Vec::new();
            let all_pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (bit, &e) in all_pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    edges.push(e);
                }
            }
            let g = Graph::from_edge_list(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn generation_counts_match_known_sequence() {
        // connected graphs per order: 1, 1, 2, 6, 21, 112
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(generate_connected(n).unwrap().len(), want, "order {n}");
        }
    }

    #[test]
    fn generation_is_canonical_sorted_and_connected() {
        let graphs = generate_connected(5).unwrap();
        let forms: Vec<CanonicalForm> =
            graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        assert!(graphs.iter().all(|g| g.is_connected()));
        for (g, f) in graphs.iter().zip(&forms) {
            assert_eq!(&f.to_graph(), g);
        }
    }

    #[test]
    fn generation_cap_is_enforced() {
        assert!(matches!(generate_connected_with_cap(7, 6), Err(Error::TooLarge(_))));
        assert!(matches!(generate_connected_with_cap(11, 20), Err(Error::TooLarge(_))));
    }

    #[test]
    fn count_by_predicate_examples() {
        let uniform = CorpusFilter { betweenness_uniform: true, ..Default::default() };
        let (count, witnesses) = count_by_predicate(4, &uniform).unwrap();
        assert_eq!(count, 2, "C_4 and K_4");
        assert_eq!(witnesses.len(), 2);
        for w in &witnesses {
            let g = crate::graph6::decode_graph6(w).unwrap();
            assert!(is_betweenness_uniform(&g).unwrap().is_some());
        }
        let (count, _) = count_by_predicate(3, &uniform).unwrap();
        assert_eq!(count, 1, "K_3 only");
        let (count, _) = count_by_predicate(5, &CorpusFilter::accept_all()).unwrap();
        assert_eq!(count, 21);
    }

    #[test]
    fn streaming_matches_generation() {
        let graphs = generate_connected(5).unwrap();
        let mut corpus = String::new();
        for g in &graphs {
            corpus.push_str(&crate::graph6::encode_graph6(g));
            corpus.push('\n');
        }
        let filter = CorpusFilter { two_connected: true, ..Default::default() };
        let streamed: Vec<Graph> = stream_graph6(corpus.as_bytes(), filter.clone())
            .collect::<Result<Vec<_>>>()
            .unwrap();
        let direct: Vec<&Graph> = graphs.iter().filter(|g| filter.matches(g)).collect();
        assert_eq!(streamed.len(), direct.len());
        for (a, b) in streamed.iter().zip(direct) {
            assert_eq!(canonical_form(a).unwrap(), canonical_form(b).unwrap());
        }
        // empty input -> empty stream
        assert_eq!(stream_graph6(&b""[..], CorpusFilter::accept_all()).count(), 0);
    }

    #[test]
    fn file_streaming_shares_the_reader_path() {
        let dir = std::env::temp_dir().join("bugraph-stream-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n4.g6");
        let mut text = String::new();
        for g in generate_connected(4).unwrap() {
            text.push_str(&crate::graph6::encode_graph6(&g));
            text.push('\n');
        }
        std::fs::write(&path, text).unwrap();
        let graphs: Vec<Graph> = stream_graph6_file(&path, CorpusFilter::accept_all())
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(graphs.len(), 6);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn uniform_filter_on_n5_matches_oracle_families() {
        let uniform = CorpusFilter { betweenness_uniform: true, ..Default::default() };
        let found = generate_connected(5)
            .unwrap()
            .into_iter()
            .filter(|g| uniform.matches(g))
            .collect::<Vec<_>>();
        let c5 = canonical_form(&cycle(5).unwrap()).unwrap();
        let k5 = canonical_form(&complete(5).unwrap()).unwrap();
        let found_forms: Vec<CanonicalForm> =
            found.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(found_forms.contains(&c5));
        assert!(found_forms.contains(&k5));
        assert_eq!(found_forms.len(), 2, "no other uniform class exists on 5 vertices");
    }
}
