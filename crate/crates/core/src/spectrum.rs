//! Small discrete-Fourier helpers shared by the band-power extractor, the
//! synthetic generator's self-checks, and filter decoding.

/// Magnitude-squared DFT spectrum scaled by 1/N, i.e. `|X(k)|^2 / N` for
/// `k = 0..N/2` (inclusive when N is even). With this scaling the sum over
/// all N bins of the two-sided spectrum equals the signal energy `sum x^2`
/// (Parseval), so one-sided band sums are bounded by the time-domain energy.
pub fn periodogram(signal: &[f64]) -> Vec<f64> {
    let n = signal.len();
    assert!(n >= 2, "periodogram needs at least 2 samples");
    let half = n / 2;
    let mut out = Vec::with_capacity(half + 1);
    let step = 2.0 * std::f64::consts::PI / n as f64;
    for k in 0..=half {
        let (mut re, mut im) = (0.0_f64, 0.0_f64);
        let w = step * k as f64;
        // Rotation recurrence: one sin/cos per bin instead of per sample.
        let (sin_w, cos_w) = w.sin_cos();
        let (mut s, mut c) = (0.0_f64, 1.0_f64);
        for &x in signal {
            re += x * c;
            im -= x * s;
            let c_next = c * cos_w - s * sin_w;
            s = s * cos_w + c * sin_w;
            c = c_next;
        }
        out.push((re * re + im * im) / n as f64);
    }
    out
}

/// Frequency (Hz) of the maximal periodogram bin strictly above `min_hz`.
/// Ties resolve to the lowest qualifying frequency.
pub fn dominant_frequency(signal: &[f64], fs_hz: f64, min_hz: f64) -> f64 {
    let psd = periodogram(signal);
    let n = signal.len() as f64;
    let bin_hz = fs_hz / n;
    let mut best_k = 0usize;
    let mut best_p = f64::NEG_INFINITY;
    for (k, &p) in psd.iter().enumerate() {
        let f = k as f64 * bin_hz;
        if f > min_hz && p > best_p {
            best_p = p;
            best_k = k;
        }
    }
    best_k as f64 * bin_hz
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_tone_lands_in_its_bin() {
        let fs = 200.0;
        let n = 1000;
        let sig: Vec<f64> = (0..n)
            .map(|t| (2.0 * std::f64::consts::PI * 10.0 * t as f64 / fs).sin())
            .collect();
        // 10 Hz at 0.2 Hz resolution -> bin 50.
        let psd = periodogram(&sig);
        let peak = psd
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        assert_eq!(peak, 50);
        assert!((dominant_frequency(&sig, fs, 0.5) - 10.0).abs() < 1e-9);
    }

    #[test]
    fn parseval_holds() {
        // Energy of the two-sided spectrum equals time-domain energy; the
        // one-sided half we return carries at least half of it.
        let sig: Vec<f64> = (0..256).map(|t| ((t * 37 % 17) as f64 - 8.0) / 5.0).collect();
        let energy: f64 = sig.iter().map(|x| x * x).sum();
        let psd = periodogram(&sig);
        let one_sided: f64 = psd.iter().sum();
        assert!(one_sided <= energy + 1e-9);
        assert!(2.0 * one_sided + 1e-9 >= energy);
    }
}
