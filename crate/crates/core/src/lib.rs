//! Five-cycle extremal problem for planar graphs: exact cycle counters,
//! planar embeddings, isomorph-free triangulation enumeration and an
//! exhaustive verification harness for small orders.

pub mod canon;
pub mod constructions;
pub mod counting;
pub mod embedding;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
mod planarity;
pub mod verification;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use constructions::{build_a, build_d, build_e, build_exceptional, expand, FamilySpec};
pub use counting::{count_cycles, count_cycles_bruteforce, cycle_report, CycleCountReport};
pub use embedding::{planar_embed, Embedding, Face, NotPlanar};
pub use enumeration::{bruteforce_triangulations, enumerate_triangulations, EnumerationCertificate, Triangulation};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use verification::{verify_monotonicity, verify_theorem, VerificationCertificate};
