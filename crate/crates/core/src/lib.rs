//! Exact distances and diameters of the circulant graphs `C_n(1, s)`.
//!
//! Distances come from a closed set of canonical path classes: every shortest
//! path from `0` to `i` takes all of its unit steps in one direction and all
//! of its chord steps in one direction, so `d(i)` is the minimum over a small
//! family of lengths built from the divisions of `i`, `tn + i` and `tn - i`
//! by `s`. The diameter is the maximum of `d(i)` over `2 <= i <= ⌊n/2⌋`.
//!
//! Alongside that algorithm the crate carries the closed-form diameter
//! theorems ([`formulas`]), three upper bounds ([`bounds`]) and a plain BFS
//! over the explicit graph ([`oracle`]) that everything else is checked
//! against.
//!
//! With the default `parallel` feature the diameter scan and grid sweeps run
//! on rayon; without it every entry point is sequential.

pub mod bounds;
pub mod diameter;
pub mod distance;
pub mod formulas;
pub mod oracle;
pub mod params;
pub mod path;
pub mod sweep;

pub use bounds::{bounds_report, BoundsReport};
pub use diameter::{diameter_exact, eccentricity_profile, DiameterResult, Method};
pub use distance::{distance, distance_from_zero, DistanceResult};
pub use formulas::{classify_case, diameter_formula, formula_witness, FormulaCase, FormulaResult};
pub use oracle::{bfs_distances, build_adjacency, oracle_diameter, ExplicitGraph};
pub use params::{decompose, validate_params, CirculantParams, DecompositionContext};
pub use path::{
    canonical_classes, classes_equivalent, realize_path, reduce_walk, translate_endpoints,
    Direction, Family, PathClass, PathShape, RealizedPath, ResidueDecomposition, WalkSpec,
};
pub use sweep::{sweep, ChordChoice, SweepOptions, SweepRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("n = {0} out of range: need 5 <= n <= 2^31")]
    NOutOfRange(u64),
    #[error("s = {s} out of range for n = {n}: need 2 <= s <= {}", (.n - 1) / 2)]
    SOutOfRange { n: u64, s: u64 },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { n: u64, vertex: u64 },
    #[error("path class {class} does not end at vertex {vertex}")]
    InconsistentClass { class: String, vertex: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
