//! Exact computations around intertwining category and sequential
//! topological complexity: cohomology rings and cup-length bounds, finite
//! measures, resolvers of branching measure paths, explicit navigation
//! constructions and an interval propagation engine over the inequality network.

pub mod bounds;
pub mod complex;
pub mod error;
pub mod field;
pub mod linalg;
pub mod measure;
pub mod navigate;
pub mod reproduce;
pub mod ring;
pub mod strand;

pub use complex::{cochain_complex, cohomology_ring, SimplicialComplex};
pub use error::{Error, Result};
pub use field::{FieldSpec, Q};
pub use measure::{FiniteMeasure, FiniteSet, MetricPoint, MetricSpace};
pub use ring::{cup_length, diagonal_kernel, tensor_power, zero_divisor_cup_length, GradedAlgebra, IdealBasis};
pub use strand::{BranchingDiagram, Resolver, Route};
