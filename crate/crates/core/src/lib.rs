//! Exact computation of edge-ideal regularity and related graph invariants.
//!
//! Graphs have at most 64 vertices and store one adjacency bitmask per
//! vertex. Regularity is computed from the independence complex: the largest
//! `i` such that some induced subgraph's independence complex has nonzero
//! reduced homology in degree `i - 1`.
//!
//! ```
//! use edgereg::{complex_regularity, induced_matching_number, cochord_exact, FieldSpec, GraphFamily};
//!
//! let c7 = GraphFamily::Cycle { n: 7 }.build().unwrap();
//! let im = induced_matching_number(&c7).unwrap().value;
//! let reg = complex_regularity(&c7, FieldSpec::GF2).unwrap().value;
//! let cc = cochord_exact(&c7, None).unwrap().value;
//! assert_eq!((im, reg, cc), (2, 2, 3));
//! ```

pub mod bits;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod io;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{make_family, EdgeSet, Graph, GraphFamily};
pub use homology::{
    complex_regularity, complex_regularity_with, independence_complex, join_regularity_check,
    reduced_betti, regularity_multi_field, regularity_multi_field_with, BettiVector, FieldSpec,
    MultiFieldRegularity, RegularityConfig, RegularityResult, RegularityWitness, SimplicialComplex,
};
pub use invariants::{
    chain_cover_wc_bipartite, chromatic_number, clique_deletion_check, clique_number,
    cochord_exact, cochord_greedy, independence_number, induced_matching_number, matching_number,
    min_maximal_matching, split_cover, CochordMethod, CochordResult, CochordValue, Cover,
    CoverKind, InvariantReport, ReportOptions, Selection, SplitPartition, Witnessed,
};
pub use io::{emit_edge_list, emit_graph6, emit_graph6_string, parse_edge_list, parse_graph6};
pub use recognition::{
    has_induced, is_bipartite, is_chordal, is_cochordal, is_split, is_weakly_chordal,
    is_well_covered, Bipartition, ChordalityCertificate, WeakChordality, WellCovered,
};
