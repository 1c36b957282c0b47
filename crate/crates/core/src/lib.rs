//! Ultimate axial capacity and material modelling for circular concrete-filled
//! steel tube (CFST) stub columns.
//!
//! Units are N, mm and MPa throughout. Loads leave the library in N; the CLI
//! reports kN.
//!
//! - [`section`]: geometry, materials, strength conversion and classification.
//! - [`materials`]: steel and confined-concrete stress-strain laws, CDPM parameters.
//! - [`capacity`]: the thirteen ultimate-load predictors behind [`capacity::CapacityMethod`].
//! - [`response`]: fiber superposition of the material laws into an N-ε curve.
//! - [`dataset`]: specimen CSV ingestion and test-to-prediction statistics.
//! - [`card`]: text material-card export.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod card;
pub mod dataset;
mod error;
pub mod materials;
pub mod response;
pub mod section;

pub use error::{CfstError, Result};
