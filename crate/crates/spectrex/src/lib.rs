//! Spectral extremal graph toolkit.
//!
//! Everything here revolves around one extremal question: among triangle-free
//! non-bipartite graphs with `m` edges, which graph maximizes the adjacency
//! spectral radius? The crate provides the machinery to construct the
//! candidate families, certify the polynomial root brackets that separate
//! them, replay the forbidden-induced-subgraph threshold arguments, and
//! confirm the small-`m` answers by exhaustive isomorph-free search.
//!
//! Module map:
//!
//! - [`graph`] — bitset graphs, graph6 I/O, canonical labeling, induced
//!   subgraph search, neighborhood classification around a pentagon.
//! - [`linalg`] — scalar-generic symmetric eigensolver and power iteration.
//! - [`spectral`] — adjacency spectra, Perron pairs, interlacing, and the
//!   eigenvalue-based triangle counting identities.
//! - [`charpoly`] — the parameterized polynomial families with certified
//!   largest roots and the root-comparison lemma checks.
//! - [`families`] — constructors and validators for every named extremal and
//!   near-extremal graph family.
//! - [`forbidden`] — the forbidden-subgraph catalog with reference spectra,
//!   spectrum-matched reconstruction, and the triangle lower-bound engine.
//! - [`search`] — exhaustive enumeration, extremal identification, classical
//!   bound verification, structure audits, and the rotation operation.

pub mod charpoly;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod linalg;
pub mod search;
pub mod spectral;

/// Scalar used by all verification-level numerics. The low-level kernels in
/// [`linalg`] are generic over `num_traits::Float`; the toolkit pins them to
/// `f64` because every tolerance in the contracts is stated at double
/// precision.
pub type Real = f64;

pub use graph::{classify, triangle_count_combinatorial, ClassifyReport, Graph, VertexSet};
pub use spectral::{
    f_interval_min, interlace_ok, spectral_radius, spectrum, triangles_from_spectrum, triangles_lemma21, PerronPair,
    Spectrum,
};
