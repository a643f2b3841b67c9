//! Workbench for studying feature learning that continues after training
//! accuracy saturates ("overtraining").
//!
//! The crate has three legs:
//!
//! - a synthetic odor-discrimination task ([`odortask`]) together with small
//!   feed-forward models ([`nets`]) and a full-batch gradient-descent trainer
//!   ([`trainer`]) that reproduces delayed generalization driven by margin
//!   maximization;
//! - a population-analysis suite ([`popanalysis`]) for any trials-by-units
//!   rate matrix: z-scoring, representational similarity, PCA, k-fold LDA
//!   decoding, Fisher discriminants, max-margin classifiers and percentile
//!   margins, and mean-matched null baselines;
//! - the mean-field description of reversal learning in a two-layer linear
//!   network ([`reversal`]): the phase-1/phase-2 ODE pair, an empirical
//!   wide-network comparison, and the pretraining-duration sweep.
//!
//! Spike-recording file formats, the preprocessing pipeline, and a surrogate
//! Poisson generator live in [`ingest`].
//!
//! Everything is deterministic given explicit seeds. Independent work items
//! (Monte Carlo draws, cross-validation iterations, sweep entries) run in
//! parallel when the `parallel` feature is enabled; per-item RNG streams are
//! split from the root seed by counter, so outputs do not depend on
//! scheduling.

pub mod exec;
pub mod ingest;
pub mod io;
pub mod nets;
pub mod odortask;
pub mod popanalysis;
pub mod reversal;
pub mod seeds;
pub mod trainer;
