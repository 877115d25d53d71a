//! Chord diagrams and the algebra of their Coxeter links.
//!
//! A chord diagram is a perfect matching of `2n` points on a circle. Once
//! its chords are ordered and oriented it determines a fibered link whose
//! Seifert matrix, monodromy and Coxeter element can all be written down
//! exactly. This crate computes that data over arbitrary-precision
//! integers, classifies the underlying Coxeter system, measures the
//! monodromy characteristic polynomial (Mahler measure, spectral radius)
//! and provides graph-side machinery for deciding which graphs arise as
//! incidence graphs of chord diagrams.

pub mod chord;
pub mod doc;
pub mod error;
pub mod forms;
pub mod matrix;
pub mod poly;
pub mod realize;
pub mod report;
pub mod spectra;
pub mod svg;

pub use chord::{ChordDiagram, ChordSystem, DirectedDiagram, SimpleGraph};
pub use error::Error;
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use report::AnalysisReport;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
