//! Ovoid codes over GF(q), q = p^m, and their subfield codes over GF(p).
//!
//! The crate builds the codes from point sets in PG(3, q), enumerates their
//! weight distributions exhaustively, and compares them with closed forms.

pub mod charsum;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod predict;
pub mod report;
pub mod subfield;

pub use error::{Error, Result};
pub use field::{Basis, ExtField, FieldDescriptor, FieldElement, RootClass};
pub use code::{DualDistance, EnumOptions, LinearCode, WeightDistribution};
pub use subfield::SubfieldContext;
pub use predict::{AClass, ParamPoint, PredictedDistribution, Table};
