//! Uniform hypergraphs `H` whose edge intersection hypergraph `EI(H)` is the cycle `C_n`.
//!
//! The crate provides the `EI` operator, section analysis of hyperedges on the
//! cycle, explicit 3-, 4- and 5-uniform constructions, two 6-uniform
//! transforms, verification with minimality certificates, an exact-rational
//! linear program bounding 5-uniform edge counts, and an exhaustive search for
//! small `n`.

pub mod constructions;
pub mod ei;
pub mod error;
pub mod export;
pub mod hypergraph;
pub mod lp;
pub mod search;
pub mod sections;
pub mod transforms;
pub mod verification;
pub mod vertex;

pub use constructions::{build, ConstructionSpec, Variant};
pub use ei::{cycle_diff, ei, is_cycle, Cycle, CycleDiff, EiMode, EiResult};
pub use error::{Error, Result};
pub use export::{export, to_dot, ExportFormat};
pub use hypergraph::{Degrees, Hyperedge, Hypergraph, HypergraphFile};
pub use lp::{half_edge_lp, solve, LpProblem, LpSolution, LpStatus, Rational, Relation};
pub use search::{
    find_minimum, find_representation, MinimumOutcome, SearchOutcome, SearchParams, SearchStatus,
};
pub use sections::{half_edge_capacity, profile, sections, Run, SectionProfile};
pub use transforms::{augment_to_six, insert_odd_vertex};
pub use verification::{lower_bound_32_only, lower_bound_uniform, verify, VerificationReport};
pub use vertex::Vertex;
