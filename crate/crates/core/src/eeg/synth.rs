//! Deterministic synthetic absence-seizure dataset generator.
//!
//! Background activity is pink-ish noise built from summed low-frequency
//! sinusoids with random phases, an alpha-band oscillation, and white noise.
//! Seizure segments add a periodic spike-and-wave template: one sharp
//! biphasic spike (~70 ms) followed by a half-sine slow wave filling the rest
//! of each cycle, at 3-6x the background RMS with per-subject jitter. The
//! fundamental therefore sits at `spike_wave_hz` and is verifiable by
//! periodogram.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{AnnotationSet, Recording};
use crate::{Error, Result, TARGET_FS_HZ};

const EDGE_MARGIN_S: f64 = 2.0;
const SEIZURE_GAP_S: f64 = 5.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub n_subjects: usize,
    pub duration_s: f64,
    pub n_channels: usize,
    /// Inclusive range of seizure counts per subject.
    pub seizure_count_range: (usize, usize),
    /// Seizure length range in seconds.
    pub seizure_len_range_s: (f64, f64),
    pub spike_wave_hz: f64,
    pub background_alpha_hz: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            n_subjects: 6,
            duration_s: 600.0,
            n_channels: 2,
            seizure_count_range: (3, 5),
            seizure_len_range_s: (6.0, 10.0),
            spike_wave_hz: 3.0,
            background_alpha_hz: 10.0,
            noise_sigma: 0.25,
            seed: 0,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_subjects == 0 {
            return Err(Error::invalid("n_subjects must be >= 1"));
        }
        if self.n_channels == 0 {
            return Err(Error::invalid("n_channels must be >= 1"));
        }
        if !(self.duration_s > 0.0) {
            return Err(Error::invalid("duration_s must be positive"));
        }
        if self.seizure_count_range.0 > self.seizure_count_range.1 {
            return Err(Error::invalid("seizure_count_range is empty"));
        }
        if !(self.seizure_len_range_s.0 > 0.0)
            || self.seizure_len_range_s.0 > self.seizure_len_range_s.1
        {
            return Err(Error::invalid("seizure_len_range_s is empty or non-positive"));
        }
        if !(self.spike_wave_hz > 0.0) {
            return Err(Error::invalid("spike_wave_hz must be positive"));
        }
        if !(self.background_alpha_hz > 0.0) {
            return Err(Error::invalid("background_alpha_hz must be positive"));
        }
        if self.noise_sigma < 0.0 {
            return Err(Error::invalid("noise_sigma must be >= 0"));
        }
        let worst = self.seizure_count_range.1 as f64 * self.seizure_len_range_s.1
            + SEIZURE_GAP_S * (self.seizure_count_range.1.saturating_sub(1)) as f64
            + 2.0 * EDGE_MARGIN_S;
        if worst > self.duration_s {
            return Err(Error::invalid(format!(
                "requested seizures need up to {worst:.1} s but recording is {} s",
                self.duration_s
            )));
        }
        Ok(())
    }
}

/// Generates `n_subjects` recordings at 200 Hz with exact annotations.
/// Bit-identical output for a fixed config (including seed).
pub fn synth_dataset(cfg: &SynthConfig) -> Result<Vec<(Recording, AnnotationSet)>> {
    cfg.validate()?;
    let mut master = StdRng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.n_subjects);
    for s in 0..cfg.n_subjects {
        let subj_seed: u64 = master.gen();
        let subject_id = format!("s{:02}", s + 1);
        out.push(synth_subject(cfg, &subject_id, subj_seed)?);
    }
    Ok(out)
}

fn synth_subject(
    cfg: &SynthConfig,
    subject_id: &str,
    seed: u64,
) -> Result<(Recording, AnnotationSet)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let fs = TARGET_FS_HZ;
    let n = (cfg.duration_s * fs).round() as usize;

    // Background: 1/sqrt(f) sinusoids at 0.5..8 Hz + alpha + white noise.
    let mut channels: Vec<Vec<f64>> = Vec::with_capacity(cfg.n_channels);
    let mut rms = Vec::with_capacity(cfg.n_channels);
    for _ in 0..cfg.n_channels {
        let comps: Vec<(f64, f64, f64)> = (1..=16)
            .map(|m| {
                let f = 0.5 * m as f64;
                let amp = 0.35 / f.sqrt();
                let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                (f, amp, phase)
            })
            .collect();
        let alpha_amp = rng.gen_range(0.5..0.9);
        let alpha_phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let mut ch = Vec::with_capacity(n);
        for t in 0..n {
            let time = t as f64 / fs;
            let mut v = 0.0;
            for &(f, a, p) in &comps {
                v += a * (std::f64::consts::TAU * f * time + p).sin();
            }
            v += alpha_amp
                * (std::f64::consts::TAU * cfg.background_alpha_hz * time + alpha_phase).sin();
            v += cfg.noise_sigma * gauss(&mut rng);
            ch.push(v);
        }
        let r = (ch.iter().map(|v| v * v).sum::<f64>() / n as f64).sqrt();
        rms.push(r);
        channels.push(ch);
    }

    // Seizure schedule.
    let count = rng.gen_range(cfg.seizure_count_range.0..=cfg.seizure_count_range.1);
    let lens: Vec<f64> = (0..count)
        .map(|_| rng.gen_range(cfg.seizure_len_range_s.0..=cfg.seizure_len_range_s.1))
        .collect();
    let used: f64 = lens.iter().sum::<f64>()
        + SEIZURE_GAP_S * count.saturating_sub(1) as f64
        + 2.0 * EDGE_MARGIN_S;
    let slack = cfg.duration_s - used;
    if slack < 0.0 {
        return Err(Error::invalid(format!(
            "seizures need {used:.1} s but recording is {} s",
            cfg.duration_s
        )));
    }
    let mut offsets: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..1.0)).collect();
    offsets.sort_by(f64::total_cmp);

    // Per-subject spike-and-wave morphology.
    let period = 1.0 / cfg.spike_wave_hz;
    let spike_width = rng.gen_range(0.06..0.08).min(0.5 * period);
    let amp_factor = rng.gen_range(3.0..6.0);
    let spike_rel = rng.gen_range(0.8..1.3);
    let chan_scale: Vec<f64> = (0..cfg.n_channels)
        .map(|_| rng.gen_range(0.8..1.2))
        .collect();
    // Mean of one cycle, removed so the template is DC-free.
    let wave_span = period - spike_width;
    let cycle_mean = (2.0 / std::f64::consts::PI) * wave_span / period;

    let mut intervals = Vec::with_capacity(count);
    let mut cursor = EDGE_MARGIN_S;
    for (i, &len) in lens.iter().enumerate() {
        let start = cursor + offsets[i] * slack;
        let onset_idx = (start * fs).round() as usize;
        let offset_idx = onset_idx + (len * fs).round() as usize;
        debug_assert!(offset_idx <= n);
        for (c, ch) in channels.iter_mut().enumerate() {
            let amp = amp_factor * rms[c] * chan_scale[c];
            for t in onset_idx..offset_idx {
                let u = ((t - onset_idx) as f64 / fs) % period;
                let shape = if u < spike_width {
                    spike_rel * (std::f64::consts::TAU * u / spike_width).sin()
                } else {
                    (std::f64::consts::PI * (u - spike_width) / wave_span).sin()
                };
                ch[t] += amp * (shape - cycle_mean);
            }
        }
        intervals.push((onset_idx as f64 / fs, offset_idx as f64 / fs));
        cursor += len + SEIZURE_GAP_S;
    }

    let names = (0..cfg.n_channels).map(|c| format!("ch{c:02}")).collect();
    let rec = Recording::new(subject_id, fs, names, channels)?;
    let ann = AnnotationSet::new(intervals)?;
    ann.check_within(rec.duration_s())?;
    Ok((rec, ann))
}

/// Box-Muller standard normal.
fn gauss(rng: &mut StdRng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
