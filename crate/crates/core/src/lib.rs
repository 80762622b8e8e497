//! Slice categories of graphs: homomorphism search, the arrow construction,
//! universality gadgets and their verifiers, and the analysis of bases that
//! are unions of short paths.
//!
//! ```
//! use graslice::{builtin_gadget, verify_gadget_exhaustive, BuiltinBase};
//!
//! let report = verify_gadget_exhaustive(&builtin_gadget(BuiltinBase::C3), 2).unwrap();
//! assert!(report.passed());
//! assert_eq!(report.digraphs_checked, 14);
//! ```

pub mod analysis;
pub mod arrow;
pub mod digraphs;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod hom;
pub mod io;
pub mod morphism;
mod search;

pub use arrow::{arrow_graph, arrow_morphism, arrow_slice, interior_id, ArrowResult, ArrowSlice};
pub use digraphs::{digraphs_with, enumerate_digraphs, isolated_free_upto, DigraphFilter, DEFAULT_DIGRAPH_CAP};
pub use error::{Error, Result};
pub use gadget::{
    build_gk, builtin_gadget, check_strong_replacement, check_strong_replacement_upto, verify_candidate,
    verify_candidate_exhaustive, verify_gadget, verify_gadget_exhaustive, BuiltinBase, Gadget, GadgetCandidate,
    GadgetFailure, GadgetReport, GkGraph, ReplacementRegime, ReplacementReport, Verdict,
};
pub use graph::{
    build_complete, build_cycle, build_path, build_star, disjoint_union, labeled_graphs, Digraph, Graph, VertexId,
};
pub use hom::{
    classify_endomorphisms, classify_graph_endomorphisms, contains_subgraph, digraph_homs, enumerate_digraph_homs,
    enumerate_homs, enumerate_slice_homs, hom_exists, homs, slice_homs, EndoReport, EndoVerdict, HomStream,
    SearchBudget, SearchMode, SliceHomStream,
};
pub use morphism::{check_images, is_homomorphism, HomCheck, Morphism, SliceMorphism, SliceObject, VertexMap};
