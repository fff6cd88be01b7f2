//! Single-qubit gate synthesis for the Fibonacci anyon model.
//!
//! A qubit is stored in the fusion space of three Fibonacci anyons and gates
//! are realised by weaving one anyon around the other two. This crate
//! provides:
//!
//! - [`model`]: fusion rules, fusion trees, the F and R symbols and
//!   residual checks of the pentagon and hexagon identities;
//! - [`braid`]: braid words, the generator matrices and word evaluation;
//! - [`search`]: exhaustive and meet-in-the-middle weave search against a
//!   target gate;
//! - [`render`]: ASCII and SVG world-line diagrams.

pub mod braid;
pub mod error;
pub mod model;
pub mod render;
pub mod search;
pub mod unitary;

pub use braid::{BraidWord, Factor, Generator, WeaveWord, WordOrder};
pub use error::{BraidError, SearchError};
pub use model::Charge;
pub use search::{SearchBudget, SearchResult, TargetGate};
pub use unitary::{distance, Unitary2};
