//! EEG data model, file ingestion/serialization, and synthetic
//! absence-seizure dataset generation.

mod io;
mod synth;

pub use io::{
    load_annotations, load_dataset, load_recording, save_annotations, save_dataset,
    save_recording,
};
pub use synth::{synth_dataset, SynthConfig};

use crate::{Error, Result};

/// Sampling rates accepted at ingestion.
pub const INGEST_FS_HZ: [f64; 2] = [200.0, 500.0];

/// One multichannel EEG time series. Samples are microvolts before
/// normalization and dimensionless after.
#[derive(Debug, Clone, PartialEq)]
pub struct Recording {
    pub subject_id: String,
    pub fs_hz: f64,
    pub channel_names: Vec<String>,
    samples: Vec<Vec<f64>>,
}

impl Recording {
    /// Validates the type invariants: at least one channel and one sample,
    /// equal channel lengths, finite values, fs in the accepted set.
    pub fn new(
        subject_id: impl Into<String>,
        fs_hz: f64,
        channel_names: Vec<String>,
        samples: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if channel_names.is_empty() {
            return Err(Error::invalid("recording must have at least one channel"));
        }
        if samples.len() != channel_names.len() {
            return Err(Error::invalid(format!(
                "{} channel names but {} sample rows",
                channel_names.len(),
                samples.len()
            )));
        }
        if !INGEST_FS_HZ.contains(&fs_hz) {
            return Err(Error::invalid(format!(
                "unsupported sampling rate {fs_hz} Hz (expected 200 or 500)"
            )));
        }
        let n = samples[0].len();
        if n == 0 {
            return Err(Error::invalid("recording must have at least one sample"));
        }
        for (name, ch) in channel_names.iter().zip(&samples) {
            if ch.len() != n {
                return Err(Error::invalid(format!(
                    "channel {name} has {} samples, expected {n}",
                    ch.len()
                )));
            }
            if ch.iter().any(|v| !v.is_finite()) {
                return Err(Error::invalid(format!(
                    "channel {name} contains a non-finite sample"
                )));
            }
        }
        Ok(Recording {
            subject_id: subject_id.into(),
            fs_hz,
            channel_names,
            samples,
        })
    }

    pub fn n_channels(&self) -> usize {
        self.channel_names.len()
    }

    pub fn n_samples(&self) -> usize {
        self.samples[0].len()
    }

    pub fn duration_s(&self) -> f64 {
        self.n_samples() as f64 / self.fs_hz
    }

    /// Per-channel sample rows, `[n_channels][n_samples]`.
    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    pub fn channel(&self, idx: usize) -> &[f64] {
        &self.samples[idx]
    }
}

/// Ordered, pairwise-disjoint seizure intervals `(onset_s, offset_s)` for one
/// recording.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AnnotationSet {
    intervals: Vec<(f64, f64)>,
}

impl AnnotationSet {
    /// Sorts by onset and validates: `0 <= onset < offset`, no overlap.
    pub fn new(mut intervals: Vec<(f64, f64)>) -> Result<Self> {
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        for &(on, off) in &intervals {
            if !(on.is_finite() && off.is_finite()) {
                return Err(Error::invalid("annotation bounds must be finite"));
            }
            if on < 0.0 {
                return Err(Error::invalid(format!("annotation onset {on} is negative")));
            }
            if off <= on {
                return Err(Error::invalid(format!(
                    "annotation interval ({on}, {off}) has offset <= onset"
                )));
            }
        }
        for w in intervals.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(Error::invalid(format!(
                    "annotations ({}, {}) and ({}, {}) overlap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(AnnotationSet { intervals })
    }

    pub fn empty() -> Self {
        AnnotationSet::default()
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_seizure_s(&self) -> f64 {
        self.intervals.iter().map(|(on, off)| off - on).sum()
    }

    /// True when `[start_s, end_s)` overlaps any interval by more than 0 s.
    pub fn overlaps(&self, start_s: f64, end_s: f64) -> bool {
        self.intervals
            .iter()
            .any(|&(on, off)| start_s < off && on < end_s)
    }

    /// All intervals must end on or before the recording does.
    pub fn check_within(&self, duration_s: f64) -> Result<()> {
        for &(on, off) in &self.intervals {
            if off > duration_s + 1e-9 {
                return Err(Error::invalid(format!(
                    "annotation ({on}, {off}) extends past recording end {duration_s}"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recording_rejects_ragged_channels() {
        let err = Recording::new(
            "s",
            200.0,
            vec!["a".into(), "b".into()],
            vec![vec![0.0; 10], vec![0.0; 9]],
        )
        .unwrap_err();
        assert!(err.to_string().contains("b"));
    }

    #[test]
    fn recording_rejects_odd_rate() {
        assert!(Recording::new("s", 250.0, vec!["a".into()], vec![vec![0.0; 4]]).is_err());
    }

    #[test]
    fn annotations_sort_and_validate() {
        let ann = AnnotationSet::new(vec![(40.0, 45.0), (10.0, 20.0)]).unwrap();
        assert_eq!(ann.intervals(), &[(10.0, 20.0), (40.0, 45.0)]);

        assert!(AnnotationSet::new(vec![(10.0, 20.0), (15.0, 25.0)]).is_err());
        assert!(AnnotationSet::new(vec![(10.0, 10.0)]).is_err());
        assert!(AnnotationSet::new(vec![(-1.0, 5.0)]).is_err());
    }

    #[test]
    fn touching_intervals_are_disjoint() {
        let ann = AnnotationSet::new(vec![(0.0, 5.0), (5.0, 8.0)]).unwrap();
        assert_eq!(ann.len(), 2);
        assert!(!ann.overlaps(8.0, 9.0));
        assert!(ann.overlaps(4.9, 5.0));
    }
}
