//! Universality analysis: base classification, path retractions, the
//! rigid-or-proper-endomorphism dichotomy, and full-embedding checks.

mod classify;
mod dichotomy;
mod embedding;
mod retract;

pub use classify::{
    classify_cone_base, classify_slice_base, universal_by_subgraph_search, BaseClassification, ConeClassification,
    Pattern,
};
pub use dichotomy::{
    classify_slice_object, cross_check, dichotomy_sweep, DichotomyException, DichotomyReport, EndoSource, SliceVerdict,
    CROSS_CHECK_LIMIT,
};
pub use embedding::{check_pairs, full_embedding_check, EmbeddingReport, EmbeddingViolation};
pub use retract::{
    compare_components, retract_slice_to_path, Comparison, Direction, Retraction, RetractionPlan, RigidPathCertificate,
};
