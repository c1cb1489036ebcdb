//! Classification of household hygiene events (kitchen sink, bathroom faucet,
//! toilet flush) from 100 Hz geophone vibration recordings.
//!
//! The pipeline mirrors the four stages of the data flow: signal ingestion and
//! band-pass filtering ([`signal`]), reduction to a ten-element statistical
//! feature vector ([`features`]), six classifier families behind one
//! train/predict contract ([`classifiers`]), and the evaluation protocol of
//! stratified splits, 5-fold cross-validation, exhaustive best-3-of-10 feature
//! selection and seeded hyperparameter search ([`model_selection`],
//! [`metrics`]). [`synthgen`] produces deterministic labeled stand-in data.
//!
//! Everything is a pure function of its inputs and explicit seeds. With the
//! default `parallel` feature, independent work units (cross-validation folds,
//! feature subsets, forest trees, trial attempts) run on rayon; results are
//! reduced in index order so output is identical to the sequential build.

pub mod classifiers;
pub mod error;
pub mod exec;
pub mod features;
pub mod metrics;
pub mod model_selection;
pub mod rng;
pub mod signal;
pub mod synthgen;

pub use error::{Error, Result};
pub use signal::{BandSpec, EventRecording, ExperimentLogEntry, HygieneClass};
