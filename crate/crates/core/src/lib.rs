//! Atom-bond connectivity (ABC), Graovac-Ghorbani (ABC_GG) and Wiener indices
//! of simple graphs, the point-attaching constructions, generators for the
//! chain, triangulane and dendrimer families, their closed forms, the
//! inequality bounds, and a verifier that checks all of it against direct
//! computation.
//!
//! Index, formula and bound code is generic over [`Scalar`] (`f32` or `f64`).
//! The aliases below fix the scalar to `f64`, which is what the verifier, the
//! report formats and the CLI use.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod io;
pub mod random;
pub mod scalar;
pub mod verification;

pub use constructions::{bouquet, chain, circuit, identify, link, Anchored};
pub use error::{Error, Result};
pub use families::{edge_degree_classes, generate, DegreeClasses, Family, FamilySpec};
pub use graph::{Graph, ProximityPair, Vertex, UNREACHABLE};
pub use indices::{abc, abc_gg, compute, wiener, IndexKind};
pub use scalar::Scalar;

/// Absolute tolerance used for every closed-form and bound comparison.
pub const TOLERANCE: f64 = 1e-9;

pub type Real = f64;
pub type BoundReport64 = bounds::BoundReport<f64>;
pub type ClosedForm64 = formulas::ClosedForm<f64>;
