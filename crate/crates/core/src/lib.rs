//! Core library for an external robot localization framework: synthetic
//! training-data generation by cut-and-paste compositing, a two-stage
//! detect-then-identify inference pipeline with classical reference
//! backends, and the full evaluation metric suite.
//!
//! Modules:
//! - [`imaging`] — pixel primitives: buffers, alpha compositing, affine
//!   transforms, masks, bounding boxes, resampling, PNG/JPEG I/O.
//! - [`crop`] — robot crop extraction from recorded frame sequences
//!   (background subtraction, morphology, connected components).
//! - [`compositor`] — labeled frame synthesis with balanced sampling,
//!   exact ground truth, decoy injection, and augmentations.
//! - [`dataset`] — manifest and crop-library I/O, stratified splits.
//! - [`pipeline`] — the two-stage inference orchestrator and the
//!   deterministic reference backends.
//! - [`metrics`] — VOC-2010 AP/mAP, angular error statistics,
//!   identification accuracy, wrong-run-length histograms.

pub mod compositor;
pub mod crop;
pub mod dataset;
pub mod imaging;
pub mod metrics;
pub mod pipeline;

pub use imaging::{BBox, BinaryMask, RgbImage, RgbaImage};
