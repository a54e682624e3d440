//! Sparse semiparametric discriminant analysis.
//!
//! The pipeline has two independent stages. [`transforms`] estimates a
//! monotone map per feature from Winsorized empirical CDFs so that the
//! transformed data look like a Gaussian LDA model; [`dsda`] then fits a
//! sparse discriminant direction by lasso-penalized least squares of the
//! ±1 label on the transformed features and classifies with a plug-in
//! intercept. [`simulate`] and [`eval`] generate the structured Gaussian
//! benchmark models and aggregate replication statistics, and [`cli`]
//! wires everything to CSV files.

pub mod cli;
pub mod data;
pub mod dsda;
pub mod error;
pub mod eval;
pub mod normal;
pub mod simulate;
pub mod transforms;

pub use data::Dataset;
pub use dsda::{fit_ssda, DsdaFit, SsdaConfig, Tuning};
pub use error::{Error, Result};
pub use transforms::{TransformModel, Variant};
