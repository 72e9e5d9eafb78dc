//! Topological signatures for sampled 2-D trajectories.
//!
//! The pipeline turns a day of robot motion into a point cloud, builds the
//! Vietoris-Rips filtration, extracts persistence diagrams by boundary-matrix
//! reduction over GF(2), vectorizes them as persistence images, and compares
//! or classifies them with exact Wasserstein matchings, Fréchet-mean
//! barycenters, and an L2-penalized logistic regression.
//!
//! Modules follow the pipeline stages:
//!
//! * [`trajectory`] — ingestion, daily segmentation, subsampling, and a
//!   seeded synthetic generator.
//! * [`rips`] — distance matrices and Rips filtrations (simplices up to
//!   dimension 2).
//! * [`persistence`] — boundary reduction, persistence/lifetime diagrams,
//!   barcodes.
//! * [`vectorize`] — weighted Gaussian persistence images with exact cell
//!   integrals.
//! * [`metric`] — optimal partial matchings, Wasserstein distance,
//!   barycenters.
//! * [`learn`] — logistic regression over flattened images.
//! * [`cli`] — the `topotrail` command-line experiments.

pub mod cli;
pub mod error;
pub mod learn;
pub mod metric;
pub mod persistence;
pub mod plot;
pub mod rips;
pub mod trajectory;
pub mod vectorize;

pub use error::{Error, Result};
