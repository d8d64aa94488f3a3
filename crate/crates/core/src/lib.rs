//! Seizure-onset detection toolkit for multichannel EEG.
//!
//! The crate covers the full desk-scale pipeline:
//!
//! - [`eeg`] — recording/annotation data model, CSV ingestion, and a
//!   deterministic synthetic absence-seizure generator (3 Hz spike-and-wave
//!   on structured background noise).
//! - [`preprocess`] — resampling to 200 Hz, per-subject z-normalization,
//!   channel selection, and 5-second epoch extraction with asymmetric-stride
//!   ictal augmentation.
//! - [`nn`] — a minimal differentiable-layer engine (time-axis convolution,
//!   max-pooling, batch normalization, dropout, dense, softmax cross-entropy,
//!   Adam) with gradient checking.
//! - [`seiznet`] — the SeizNet convolutional detector: four conv blocks with
//!   doubling filter counts, a 50-unit dense head, and a 2-way softmax.
//! - [`bpsvm`] — the baseline classifier: spectral band-power features over
//!   eight sub-bands and five 1-second windows, fed to an RBF-kernel SVM
//!   trained by sequential minimal optimization.
//! - [`eval`] — event-based scoring (sensitivity, false-alarm rate, latency),
//!   leave-one-subject-out orchestration, and mode-of-N-runs aggregation.
//! - [`am`] — activation-maximization filter decoding with total-variation
//!   and Lp regularization plus spectral summarization.
//!
//! Everything is deterministic given explicit seeds; parallel fold/repeat
//! execution never changes results.

pub mod am;
pub mod bpsvm;
pub mod eeg;
pub mod eval;
pub mod nn;
pub mod preprocess;
pub mod seiznet;
pub mod spectrum;

mod error;

pub use error::{Error, Result};

/// Sampling rate every pipeline stage downstream of ingestion assumes.
pub const TARGET_FS_HZ: f64 = 200.0;

/// Analysis window length in seconds, shared by every method.
pub const EPOCH_LEN_S: f64 = 5.0;

/// Samples per epoch at [`TARGET_FS_HZ`].
pub const EPOCH_SAMPLES: usize = 1000;
