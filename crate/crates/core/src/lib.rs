//! Depth profiles of random trees, counted modulo m.
//!
//! Grow a random recursive tree, a binary search tree, or a conditioned
//! Galton-Watson tree to n vertices and count how many vertices sit at
//! depth j mod m. This crate provides
//!
//! * samplers for the three tree families and the urn embeddings of the
//!   first two ([`treegen`], [`urn`]),
//! * exact rational limit covariances of the centered, scaled counts in
//!   every regime where a Gaussian limit exists, plus per-mode Fourier
//!   variances ([`covariance`]),
//! * joint moments of the complex limit that takes over when the counts
//!   stop being Gaussian, and the third-moment certificate that the scaled
//!   counts keep oscillating there ([`moments`], [`gamma`]),
//! * a deterministic, parallel Monte Carlo harness with jackknife errors
//!   and growth-exponent fits ([`stats`]),
//! * exact small-n enumeration of the count distribution for goodness-of-
//!   fit checks ([`treegen::enumerate_exact_mod_counts`]).
//!
//! The count vector always sums to n, so one linear constraint is built
//! into everything: covariance rows sum to zero and mode 0 of the Fourier
//! transform is pinned to n.

pub mod covariance;
pub mod error;
pub mod gamma;
pub mod moments;
pub mod ratpoly;
pub mod rng;
pub mod stats;
pub mod treegen;
pub mod urn;

pub use covariance::{
    bst_external_sigma, bst_sigma, cgwt_sigma, fourier_limit_variance, rrt_sigma,
    CirculantCovariance, CovarianceKind, ScaleNote,
};
pub use error::{Error, Result};
pub use gamma::complex_gamma;
pub use moments::{oscillation_check, z_moments, MomentTable, OscillationReport, OSCILLATION_TOL};
pub use rng::{derive_seed, stream_rng};
pub use stats::{
    auto_scaling, dft_mod_m, fit_variance_exponent, mode_variance_estimate, reduce_mod_m,
    run_replicates, variance_growth_grid, ModeVariance, MonteCarloSummary, Scaling, ScalingFit,
};
pub use treegen::{
    enumerate_exact_mod_counts, gen_bst_depths, gen_cgwt_depths, gen_rrt_depths, DepthSequence,
    OffspringDistribution, TreeModel,
};
pub use urn::{
    classify_regime, replacement_matrix, replacement_spectrum, simulate_bst_urn,
    simulate_rrt_urn, ModDepthCounts, Regime, RegimeClassification, UrnModel,
};
