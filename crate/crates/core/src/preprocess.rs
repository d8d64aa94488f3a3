//! Resampling, normalization, channel selection, and epoch extraction with
//! asymmetric-stride ictal augmentation.

use crate::eeg::{AnnotationSet, Recording};
use crate::{Error, Result, EPOCH_LEN_S, EPOCH_SAMPLES, TARGET_FS_HZ};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpochLabel {
    Interictal,
    Ictal,
}

/// One 5-second analysis window: `[n_channels][1000]` at 200 Hz.
#[derive(Debug, Clone, PartialEq)]
pub struct Epoch {
    pub subject_id: String,
    pub start_s: f64,
    pub data: Vec<Vec<f64>>,
    pub label: EpochLabel,
}

impl Epoch {
    pub fn n_channels(&self) -> usize {
        self.data.len()
    }

    pub fn end_s(&self) -> f64 {
        self.start_s + EPOCH_LEN_S
    }

    pub fn is_ictal(&self) -> bool {
        self.label == EpochLabel::Ictal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowMode {
    /// Label-pure windows: ictal fully inside a seizure at the ictal stride,
    /// interictal with zero seizure overlap at the interictal stride.
    Train,
    /// Contiguous non-overlapping tiling from t=0; a window is ictal iff it
    /// overlaps any seizure by more than 0 s.
    Eval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WindowingPolicy {
    pub mode: WindowMode,
    pub interictal_stride_s: f64,
    pub ictal_stride_s: f64,
    pub epoch_len_s: f64,
}

impl WindowingPolicy {
    pub fn train() -> Self {
        WindowingPolicy {
            mode: WindowMode::Train,
            interictal_stride_s: 5.0,
            ictal_stride_s: 0.075,
            epoch_len_s: EPOCH_LEN_S,
        }
    }

    /// Train-mode windowing without ictal augmentation (both strides 5 s).
    pub fn train_unaugmented() -> Self {
        WindowingPolicy {
            ictal_stride_s: 5.0,
            ..WindowingPolicy::train()
        }
    }

    pub fn eval() -> Self {
        WindowingPolicy {
            mode: WindowMode::Eval,
            ..WindowingPolicy::train()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.interictal_stride_s > 0.0) || !(self.ictal_stride_s > 0.0) {
            return Err(Error::invalid("window strides must be positive"));
        }
        if self.epoch_len_s != EPOCH_LEN_S {
            return Err(Error::invalid(format!(
                "epoch length is fixed at {EPOCH_LEN_S} s"
            )));
        }
        Ok(())
    }
}

/// Downsamples 500 Hz recordings to 200 Hz by rational 2/5 resampling:
/// zero-stuff by 2, anti-alias FIR low-pass cut at the 100 Hz output
/// Nyquist, decimate by 5. 200 Hz input is returned unchanged. Output
/// length is exactly `floor(n * 2 / 5)` for 500 Hz input.
pub fn resample_to_200(rec: &Recording) -> Result<Recording> {
    if rec.fs_hz == TARGET_FS_HZ {
        return Ok(rec.clone());
    }
    if rec.fs_hz != 500.0 {
        return Err(Error::invalid(format!(
            "cannot resample from {} Hz (expected 200 or 500)",
            rec.fs_hz
        )));
    }
    let taps = lowpass_taps();
    let delay = (taps.len() - 1) / 2;
    let n = rec.n_samples();
    let n_up = 2 * n;
    let n_out = n_up / 5;
    let mut channels = Vec::with_capacity(rec.n_channels());
    for ch in rec.samples() {
        let mut out = Vec::with_capacity(n_out);
        for m in 0..n_out {
            // y[m] = sum_j h[j] * x_up[5m + delay - j]; x_up is nonzero only
            // at even indices where x_up[2i] = x[i].
            let base = 5 * m + delay;
            let mut acc = 0.0;
            for (j, &h) in taps.iter().enumerate() {
                if j > base {
                    break;
                }
                let u = base - j;
                if u % 2 == 0 {
                    let i = u / 2;
                    if i < n {
                        acc += h * ch[i];
                    }
                }
            }
            out.push(acc);
        }
        channels.push(out);
    }
    Recording::new(
        rec.subject_id.clone(),
        TARGET_FS_HZ,
        rec.channel_names.clone(),
        channels,
    )
}

/// Windowed-sinc low-pass for the 1000 Hz zero-stuffed stream: cutoff 100 Hz,
/// Hamming window, unity DC gain scaled by the upsampling factor 2.
fn lowpass_taps() -> Vec<f64> {
    const LEN: usize = 151;
    let cutoff = 100.0 / 1000.0; // cycles per sample at the upsampled rate
    let mid = (LEN - 1) as f64 / 2.0;
    let mut taps: Vec<f64> = (0..LEN)
        .map(|i| {
            let x = i as f64 - mid;
            let sinc = if x == 0.0 {
                2.0 * cutoff
            } else {
                (std::f64::consts::TAU * cutoff * x).sin() / (std::f64::consts::PI * x)
            };
            let w = 0.54
                - 0.46 * (std::f64::consts::TAU * i as f64 / (LEN - 1) as f64).cos();
            sinc * w
        })
        .collect();
    let sum: f64 = taps.iter().sum();
    for t in &mut taps {
        *t *= 2.0 / sum;
    }
    taps
}

/// Per-channel zero mean, unit population variance over the full recording.
pub fn znormalize(rec: &Recording) -> Result<Recording> {
    let n = rec.n_samples() as f64;
    let mut channels = Vec::with_capacity(rec.n_channels());
    for (name, ch) in rec.channel_names.iter().zip(rec.samples()) {
        let mean = ch.iter().sum::<f64>() / n;
        let var = ch.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        if var < 1e-24 {
            return Err(Error::invalid(format!(
                "channel {name} has zero variance, cannot z-normalize"
            )));
        }
        let inv = 1.0 / var.sqrt();
        channels.push(ch.iter().map(|v| (v - mean) * inv).collect());
    }
    Recording::new(
        rec.subject_id.clone(),
        rec.fs_hz,
        rec.channel_names.clone(),
        channels,
    )
}

/// Subsets/reorders channels by name.
pub fn select_channels(rec: &Recording, names: &[String]) -> Result<Recording> {
    let mut channels = Vec::with_capacity(names.len());
    for name in names {
        let idx = rec
            .channel_names
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown channel '{name}'; available: {}",
                    rec.channel_names.join(", ")
                ))
            })?;
        channels.push(rec.samples()[idx].clone());
    }
    Recording::new(
        rec.subject_id.clone(),
        rec.fs_hz,
        names.to_vec(),
        channels,
    )
}

/// Enumerates labeled epochs per the policy. Strides are converted to whole
/// samples before enumeration so window arithmetic is exact.
pub fn extract_epochs(
    rec: &Recording,
    ann: &AnnotationSet,
    policy: &WindowingPolicy,
) -> Result<Vec<Epoch>> {
    policy.validate()?;
    if rec.fs_hz != TARGET_FS_HZ {
        return Err(Error::invalid(format!(
            "epoch extraction requires 200 Hz input, got {} Hz",
            rec.fs_hz
        )));
    }
    let n = rec.n_samples();
    if n < EPOCH_SAMPLES {
        return Err(Error::invalid(format!(
            "recording has {n} samples, shorter than one {EPOCH_SAMPLES}-sample epoch"
        )));
    }
    ann.check_within(rec.duration_s())?;

    let fs = TARGET_FS_HZ;
    let mut epochs = Vec::new();
    let mut push = |start: usize, label: EpochLabel| {
        let data = rec
            .samples()
            .iter()
            .map(|ch| ch[start..start + EPOCH_SAMPLES].to_vec())
            .collect();
        epochs.push(Epoch {
            subject_id: rec.subject_id.clone(),
            start_s: start as f64 / fs,
            data,
            label,
        });
    };

    match policy.mode {
        WindowMode::Train => {
            let ictal_stride = stride_samples(policy.ictal_stride_s)?;
            let inter_stride = stride_samples(policy.interictal_stride_s)?;
            // Ictal: windows fully contained in a seizure interval.
            for &(on, off) in ann.intervals() {
                let s0 = (on * fs - 1e-9).ceil() as usize;
                let s_end = (off * fs + 1e-9).floor() as usize;
                if s_end < s0 + EPOCH_SAMPLES {
                    continue; // seizure shorter than one epoch
                }
                let mut s = s0;
                while s + EPOCH_SAMPLES <= s_end.min(n) {
                    push(s, EpochLabel::Ictal);
                    s += ictal_stride;
                }
            }
            // Interictal: zero overlap with every seizure interval.
            let mut s = 0;
            while s + EPOCH_SAMPLES <= n {
                let start_s = s as f64 / fs;
                if !ann.overlaps(start_s, start_s + EPOCH_LEN_S) {
                    push(s, EpochLabel::Interictal);
                }
                s += inter_stride;
            }
        }
        WindowMode::Eval => {
            let mut s = 0;
            while s + EPOCH_SAMPLES <= n {
                let start_s = s as f64 / fs;
                let label = if ann.overlaps(start_s, start_s + EPOCH_LEN_S) {
                    EpochLabel::Ictal
                } else {
                    EpochLabel::Interictal
                };
                push(s, label);
                s += EPOCH_SAMPLES;
            }
        }
    }
    Ok(epochs)
}

fn stride_samples(stride_s: f64) -> Result<usize> {
    let samples = (stride_s * TARGET_FS_HZ).round() as usize;
    if samples == 0 {
        return Err(Error::invalid(format!(
            "stride {stride_s} s is below one sample at 200 Hz"
        )));
    }
    Ok(samples)
}
