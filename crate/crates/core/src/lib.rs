//! Multi-resolution landmark detection pipeline.
//!
//! The crate covers the flow from raw images to evaluated predictions:
//! coordinate-exact augmentation, resizing to an image pyramid, pluggable
//! heatmap predictors, per-landmark drop-lowest confidence fusion, and
//! radial-error metrics (MRE, SDR) with per-image pixel spacing.
//!
//! Batch drivers are data-parallel via rayon when the `parallel` feature
//! (default) is enabled; every driver also has a `_seq` sibling so the two
//! can be compared. Parallel and sequential paths produce bit-identical
//! results.

pub mod config;
pub mod error;
pub mod exec;
pub mod fusion;
pub mod heatmap;
pub mod landmark_csv;
pub mod manifest;
pub mod metrics;
pub mod mha;
pub mod model;
pub mod predict;
pub mod report;
pub mod seed;
pub mod simulate;
pub mod synth;
pub mod template;
pub mod transforms;

pub use error::{Error, Result};
pub use model::{ImageMeta, ImageRecord, Institution, LandmarkSet, Point2};
