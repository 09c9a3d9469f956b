//! Exact betweenness centrality and structural invariants of small
//! undirected graphs, with a replay harness for the structural facts
//! about betweenness-uniform graphs (connectivity, diameter bounds,
//! cut/component discrepancy identities) over isomorph-free corpora.
//!
//! Everything that feeds a uniformity or identity decision is computed
//! in exact big-integer rational arithmetic; graphs are immutable
//! bitset-adjacency values on at most 64 vertices, so all operations
//! are pure and freely shareable across threads.

pub mod betweenness;
pub mod connectivity;
pub mod constructions;
pub mod discrepancy;
pub mod enumeration;
mod error;
pub mod graph;
pub mod graph6;
pub mod verifier;

pub use betweenness::{rational, ratio, BetweennessReport, PathCounts, Rational};
pub use connectivity::{CutCase, TwoCutAnalysis};
pub use discrepancy::{AlphaProfile, DiscrepancyBreakdown};
pub use enumeration::{CanonicalForm, CorpusFilter};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Induced};
pub use verifier::{ClaimId, CorpusSource, Counterexample, Verdict, VerificationReport};
