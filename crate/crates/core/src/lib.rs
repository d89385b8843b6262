//! Strong colorings of intersecting hypergraphs.
//!
//! A coloring is *c-strong* when every edge `e` carries at least
//! `min(|e|, c)` distinct colors. This crate provides:
//!
//! - [`Hypergraph`]: canonical set-family representation with the predicates
//!   and searches the algorithms rely on (t-intersecting, property P_t,
//!   antichain reduction, minimum-union triple search);
//! - [`theorem_coloring`]: a 3-strong coloring with at most five colors for
//!   any 2-intersecting hypergraph;
//! - [`lemma_coloring`]: a t-strong coloring with at most t+1 colors for any
//!   hypergraph with property P_t;
//! - [`oracle_min_colors`] / [`oracle_exists_coloring`]: exact backtracking
//!   search for the true minimum on small ground sets;
//! - [`gen`]: deterministic instance generators and a pipeline-branch witness
//!   search;
//! - [`io`]: plain-text hypergraph and coloring files.

mod bitset;
pub mod coloring;
pub mod gen;
pub mod hypergraph;
pub mod io;
pub mod lemma;
pub mod oracle;
pub mod theorem;

pub use coloring::{
    verify_strong, Coloring, ColoringReport, FailingEdge, RunTrace, TracePath, TrivialKind,
    VerifyError,
};
pub use gen::{find_branch_witness, BranchTarget, GenError, GeneratorSpec};
pub use hypergraph::{Hypergraph, HypergraphError, StrengthError, Triple, TripleError};
pub use io::{
    parse_coloring, parse_hypergraph, serialize_coloring, serialize_hypergraph, ParseError,
};
pub use lemma::{lemma_coloring, LemmaError};
pub use oracle::{
    oracle_exists_coloring, oracle_min_colors, OracleConfig, OracleError, OracleResult,
};
pub use theorem::{
    case3_detect_swap, color_x, greedy_outside_case1, relabel_triple, theorem_coloring,
    ColorXError, LabeledTriple, TheoremError, TripleCase,
};
