//! Audio feature extraction: magnitude spectrograms and the fixed-length
//! vectors (pooled spectrogram, chroma, interpolated PSD) fed to dictionary
//! learning and to the baseline classifiers.

use ndarray::{Array1, Array2};
use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::chordgen::midi_to_freq;
use crate::error::{Error, Result};

/// Mono audio buffer with its sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    /// Amplitudes, expected in [-1, 1].
    pub samples: Vec<f64>,
    pub sample_rate: u32,
}

impl AudioClip {
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidInput("empty audio clip".into()));
        }
        if sample_rate == 0 {
            return Err(Error::InvalidInput("sample rate must be positive".into()));
        }
        Ok(AudioClip {
            samples,
            sample_rate,
        })
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }
}

/// Magnitude spectrogram, `bins x frames`, one-sided (F = window/2 + 1).
#[derive(Debug, Clone)]
pub struct Spectrogram {
    /// Non-negative magnitudes, shape (bins, frames).
    pub magnitudes: Array2<f64>,
    /// Frequency spacing between adjacent bins, Hz.
    pub bin_hz: f64,
    pub window_size: usize,
    pub hop: usize,
}

impl Spectrogram {
    pub fn bins(&self) -> usize {
        self.magnitudes.nrows()
    }

    pub fn frames(&self) -> usize {
        self.magnitudes.ncols()
    }

    /// Highest representable frequency (the last bin).
    pub fn nyquist(&self) -> f64 {
        self.bin_hz * (self.bins() - 1) as f64
    }

    /// Power per bin averaged over frames.
    pub fn mean_power(&self) -> Array1<f64> {
        let frames = self.frames() as f64;
        let mut out = Array1::zeros(self.bins());
        for (b, row) in self.magnitudes.rows().into_iter().enumerate() {
            out[b] = row.iter().map(|m| m * m).sum::<f64>() / frames;
        }
        out
    }
}

/// Which extractor produced a feature vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureKind {
    PooledSpectrogram,
    Chroma,
    InterpolatedPsd,
}

impl FeatureKind {
    pub fn name(self) -> &'static str {
        match self {
            FeatureKind::PooledSpectrogram => "pooled_spectrogram",
            FeatureKind::Chroma => "chroma",
            FeatureKind::InterpolatedPsd => "interpolated_psd",
        }
    }
}

/// Fixed-length signal representation.
#[derive(Debug, Clone)]
pub struct FeatureVector {
    pub values: Array1<f64>,
    pub kind: FeatureKind,
}

impl FeatureVector {
    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

pub const CHROMA_DIM: usize = 12;
pub const PSD_NOTE_COUNT: usize = 96;
/// First note of the 96-semitone PSD ladder (MIDI 24..=119).
pub const PSD_BASE_MIDI: u8 = 24;
pub const DEFAULT_WINDOW: usize = 4096;
pub const DEFAULT_HOP: usize = 32;
pub const DEFAULT_POOLED_DIM: usize = 256;
pub const DEFAULT_CHROMA_FMIN: f64 = 55.0;
pub const DEFAULT_CHROMA_FMAX: f64 = 8000.0;

/// Serializable description of one feature extraction chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeaturePipeline {
    pub kind: FeatureKind,
    /// Output dimension for pooled spectrograms; chroma and PSD fix their own.
    pub target_dim: usize,
    pub window_size: usize,
    pub hop: usize,
    pub chroma_fmin: f64,
    pub chroma_fmax: f64,
    pub psd_base_midi: u8,
}

impl FeaturePipeline {
    pub fn new(kind: FeatureKind) -> Self {
        let target_dim = match kind {
            FeatureKind::PooledSpectrogram => DEFAULT_POOLED_DIM,
            FeatureKind::Chroma => CHROMA_DIM,
            FeatureKind::InterpolatedPsd => PSD_NOTE_COUNT,
        };
        FeaturePipeline {
            kind,
            target_dim,
            window_size: DEFAULT_WINDOW,
            hop: DEFAULT_HOP,
            chroma_fmin: DEFAULT_CHROMA_FMIN,
            chroma_fmax: DEFAULT_CHROMA_FMAX,
            psd_base_midi: PSD_BASE_MIDI,
        }
    }

    /// Actual output dimension, forcing the fixed sizes of chroma and PSD.
    pub fn dim(&self) -> usize {
        match self.kind {
            FeatureKind::PooledSpectrogram => self.target_dim,
            FeatureKind::Chroma => CHROMA_DIM,
            FeatureKind::InterpolatedPsd => PSD_NOTE_COUNT,
        }
    }

    pub fn extract(&self, clip: &AudioClip) -> Result<FeatureVector> {
        let spec = stft_magnitude(clip, self.window_size, self.hop)?;
        self.extract_from_spectrogram(&spec, clip.sample_rate)
    }

    /// Extraction step shared with callers that already hold a spectrogram.
    pub fn extract_from_spectrogram(
        &self,
        spec: &Spectrogram,
        sample_rate: u32,
    ) -> Result<FeatureVector> {
        match self.kind {
            FeatureKind::PooledSpectrogram => pool_time(spec, self.target_dim),
            FeatureKind::Chroma => chroma(spec, sample_rate, self.chroma_fmin, self.chroma_fmax),
            FeatureKind::InterpolatedPsd => {
                interpolated_psd(spec, sample_rate, PSD_NOTE_COUNT, self.psd_base_midi)
            }
        }
    }
}

/// Short-time Fourier magnitude with a periodic Hann window.
///
/// Frames that would overrun the clip are dropped; there is no padding.
pub fn stft_magnitude(clip: &AudioClip, window_size: usize, hop: usize) -> Result<Spectrogram> {
    if window_size < 2 {
        return Err(Error::InvalidInput("window must be at least 2".into()));
    }
    if hop == 0 {
        return Err(Error::InvalidInput("hop must be at least 1".into()));
    }
    let n = clip.samples.len();
    if n < window_size {
        return Err(Error::ClipTooShort {
            samples: n,
            window: window_size,
        });
    }
    let frames = (n - window_size) / hop + 1;
    let bins = window_size / 2 + 1;

    let window: Vec<f64> = (0..window_size)
        .map(|i| 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / window_size as f64).cos()))
        .collect();

    let fft = FftPlanner::new().plan_fft_forward(window_size);
    let mut buf = vec![Complex::new(0.0, 0.0); window_size];
    let mut scratch = vec![Complex::new(0.0, 0.0); fft.get_inplace_scratch_len()];

    let mut magnitudes = Array2::zeros((bins, frames));
    for t in 0..frames {
        let start = t * hop;
        for i in 0..window_size {
            buf[i] = Complex::new(clip.samples[start + i] * window[i], 0.0);
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        for (f, v) in buf.iter().take(bins).enumerate() {
            magnitudes[(f, t)] = v.norm();
        }
    }

    Ok(Spectrogram {
        magnitudes,
        bin_hz: clip.sample_rate as f64 / window_size as f64,
        window_size,
        hop,
    })
}

/// Collapse a spectrogram to a unit-norm vector of `target_dim` entries:
/// per-bin time mean, log(1 + v), contiguous bin-group averages (the last
/// group absorbs the remainder), then l2 normalization.
pub fn pool_time(spec: &Spectrogram, target_dim: usize) -> Result<FeatureVector> {
    let bins = spec.bins();
    if target_dim == 0 {
        return Err(Error::InvalidInput("target_dim must be positive".into()));
    }
    if target_dim > bins {
        return Err(Error::InvalidInput(format!(
            "target_dim {target_dim} exceeds {bins} spectrogram bins"
        )));
    }

    let frames = spec.frames() as f64;
    let compressed: Vec<f64> = spec
        .magnitudes
        .rows()
        .into_iter()
        .map(|row| (row.sum() / frames).ln_1p())
        .collect();

    let group = bins / target_dim;
    let mut values = Array1::zeros(target_dim);
    for g in 0..target_dim {
        let start = g * group;
        let end = if g + 1 == target_dim { bins } else { start + group };
        let slice = &compressed[start..end];
        values[g] = slice.iter().sum::<f64>() / slice.len() as f64;
    }

    let norm = values.dot(&values).sqrt();
    if norm > 0.0 {
        values /= norm;
    }
    Ok(FeatureVector {
        values,
        kind: FeatureKind::PooledSpectrogram,
    })
}

/// Pitch class of a frequency, 0 = C, relative to A4 = 440 Hz.
fn pitch_class(freq: f64) -> usize {
    let steps = (12.0 * (freq / 440.0).log2()).round() as i64 + 69;
    steps.rem_euclid(12) as usize
}

/// 12-bin chroma: time-averaged spectral power summed per pitch class over
/// [fmin, fmax], l1-normalized when any energy is present. The DC bin is
/// ignored.
pub fn chroma(spec: &Spectrogram, sample_rate: u32, fmin: f64, fmax: f64) -> Result<FeatureVector> {
    let nyquist = sample_rate as f64 / 2.0;
    if !(fmin > 0.0 && fmin < fmax && fmax <= nyquist) {
        return Err(Error::InvalidInput(format!(
            "chroma band [{fmin}, {fmax}] must satisfy 0 < fmin < fmax <= {nyquist}"
        )));
    }

    let power = spec.mean_power();
    let mut values = Array1::zeros(CHROMA_DIM);
    for b in 1..spec.bins() {
        let freq = b as f64 * spec.bin_hz;
        if freq < fmin || freq > fmax {
            continue;
        }
        values[pitch_class(freq)] += power[b];
    }

    let total: f64 = values.sum();
    if total > 0.0 {
        values /= total;
    }
    Ok(FeatureVector {
        values,
        kind: FeatureKind::Chroma,
    })
}

/// Power spectral density sampled at the equal-temperament frequencies of
/// `note_count` consecutive MIDI notes starting at `base_midi`, with linear
/// interpolation between neighboring bins. Notes above Nyquist yield 0.
pub fn interpolated_psd(
    spec: &Spectrogram,
    sample_rate: u32,
    note_count: usize,
    base_midi: u8,
) -> Result<FeatureVector> {
    if note_count == 0 {
        return Err(Error::InvalidInput("note_count must be positive".into()));
    }
    if base_midi as usize + note_count > 128 {
        return Err(Error::MidiOutOfRange(
            base_midi as u32 + note_count as u32 - 1,
        ));
    }
    let nyquist = sample_rate as f64 / 2.0;
    let power = spec.mean_power();
    let bins = spec.bins();

    let mut values = Array1::zeros(note_count);
    for m in 0..note_count {
        let freq = midi_to_freq(base_midi + m as u8);
        if freq > nyquist {
            continue;
        }
        let pos = freq / spec.bin_hz;
        let lo = pos.floor() as usize;
        if lo + 1 < bins {
            let frac = pos - lo as f64;
            values[m] = power[lo] * (1.0 - frac) + power[lo + 1] * frac;
        } else if lo < bins {
            values[m] = power[lo];
        }
    }

    Ok(FeatureVector {
        values,
        kind: FeatureKind::InterpolatedPsd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn sine_clip(freq: f64, sample_rate: u32, secs: f64) -> AudioClip {
        let n = (sample_rate as f64 * secs) as usize;
        let samples = (0..n)
            .map(|i| (2.0 * std::f64::consts::PI * freq * i as f64 / sample_rate as f64).sin())
            .collect();
        AudioClip::new(samples, sample_rate).unwrap()
    }

    /// O(n^2) DFT of one Hann-windowed frame, independent of rustfft.
    fn dft_frame_magnitudes(samples: &[f64]) -> Vec<f64> {
        let n = samples.len();
        let windowed: Vec<f64> = samples
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s * 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos())
            })
            .collect();
        (0..n / 2 + 1)
            .map(|f| {
                let mut re = 0.0;
                let mut im = 0.0;
                for (i, w) in windowed.iter().enumerate() {
                    let phase = -2.0 * std::f64::consts::PI * f as f64 * i as f64 / n as f64;
                    re += w * phase.cos();
                    im += w * phase.sin();
                }
                (re * re + im * im).sqrt()
            })
            .collect()
    }

    #[test]
    fn stft_matches_direct_dft_and_peaks_at_expected_bin() {
        let clip = sine_clip(440.0, 22050, 1.0);
        let spec = stft_magnitude(&clip, 4096, 512).unwrap();
        assert_eq!(spec.bins(), 2049);

        let oracle = dft_frame_magnitudes(&clip.samples[..4096]);
        let expected_bin = (440.0 * 4096.0 / 22050.0_f64).round() as usize;
        assert_eq!(expected_bin, 82);

        let mut oracle_argmax = 0;
        for (f, &m) in oracle.iter().enumerate() {
            if m > oracle[oracle_argmax] {
                oracle_argmax = f;
            }
        }
        assert_eq!(oracle_argmax, expected_bin);

        for t in 0..spec.frames() {
            let col = spec.magnitudes.column(t);
            let mut argmax = 0;
            for (f, &m) in col.iter().enumerate() {
                if m > col[argmax] {
                    argmax = f;
                }
            }
            assert_eq!(argmax, expected_bin, "frame {t}");
        }
        // First frame must agree with the direct DFT.
        for f in 0..spec.bins() {
            let got = spec.magnitudes[(f, 0)];
            assert!(
                (got - oracle[f]).abs() <= 1e-9 * oracle[f].abs().max(1.0),
                "bin {f}: {got} vs {}",
                oracle[f]
            );
        }
    }

    #[test]
    fn stft_zero_clip_yields_zero_magnitudes() {
        let clip = AudioClip::new(vec![0.0; 8192], 22050).unwrap();
        let spec = stft_magnitude(&clip, 4096, 512).unwrap();
        assert!(spec.magnitudes.iter().all(|&m| m == 0.0));
    }

    #[test]
    fn stft_default_configuration_accepted() {
        let clip = sine_clip(440.0, 22050, 1.0);
        let spec = stft_magnitude(&clip, 4096, 32).unwrap();
        assert_eq!(spec.frames(), (22050 - 4096) / 32 + 1);
        assert_eq!(spec.window_size, 4096);
        assert_eq!(spec.hop, 32);
    }

    #[test]
    fn stft_rejects_short_clip() {
        let clip = AudioClip::new(vec![0.1; 1000], 22050).unwrap();
        match stft_magnitude(&clip, 4096, 32) {
            Err(Error::ClipTooShort { samples, window }) => {
                assert_eq!(samples, 1000);
                assert_eq!(window, 4096);
            }
            other => panic!("expected ClipTooShort, got {other:?}"),
        }
    }

    #[test]
    fn pool_identity_on_constant_frames() {
        // All frames equal to v: the time mean is v itself.
        let v = [1.0, 2.0, 0.5, 3.0];
        let mut mags = Array2::zeros((4, 7));
        for t in 0..7 {
            for (b, &x) in v.iter().enumerate() {
                mags[(b, t)] = x;
            }
        }
        let spec = Spectrogram {
            magnitudes: mags,
            bin_hz: 1.0,
            window_size: 6,
            hop: 1,
        };
        let pooled = pool_time(&spec, 4).unwrap();
        let mut expected = Array1::from_iter(v.iter().map(|x| x.ln_1p()));
        let norm = expected.dot(&expected).sqrt();
        expected /= norm;
        for b in 0..4 {
            assert_abs_diff_eq!(pooled.values[b], expected[b], epsilon = 1e-12);
        }
        assert_abs_diff_eq!(pooled.values.dot(&pooled.values).sqrt(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn pool_group_sizes_absorb_remainder() {
        // 2049 bins into 256 groups: 255 groups of 8, final group of 9.
        let mags = Array2::from_shape_fn((2049, 2), |(b, _)| b as f64);
        let spec = Spectrogram {
            magnitudes: mags,
            bin_hz: 1.0,
            window_size: 4096,
            hop: 1,
        };
        let pooled = pool_time(&spec, 256).unwrap();
        assert_eq!(pooled.dim(), 256);

        let comp: Vec<f64> = (0..2049).map(|b| (b as f64).ln_1p()).collect();
        let mut expected = Array1::zeros(256);
        for g in 0..256 {
            let (start, end) = if g == 255 { (2040, 2049) } else { (g * 8, g * 8 + 8) };
            expected[g] = comp[start..end].iter().sum::<f64>() / (end - start) as f64;
        }
        let norm = expected.dot(&expected).sqrt();
        for g in 0..256 {
            assert_abs_diff_eq!(pooled.values[g], expected[g] / norm, epsilon = 1e-12);
        }
    }

    #[test]
    fn pool_rejects_dim_above_bins() {
        let spec = Spectrogram {
            magnitudes: Array2::zeros((16, 3)),
            bin_hz: 1.0,
            window_size: 30,
            hop: 1,
        };
        assert!(pool_time(&spec, 17).is_err());
    }

    #[test]
    fn pool_zero_input_stays_zero() {
        let spec = Spectrogram {
            magnitudes: Array2::zeros((16, 3)),
            bin_hz: 1.0,
            window_size: 30,
            hop: 1,
        };
        let pooled = pool_time(&spec, 8).unwrap();
        assert!(pooled.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn chroma_pure_a4_peaks_at_pitch_class_a() {
        let clip = sine_clip(440.0, 22050, 1.0);
        let spec = stft_magnitude(&clip, 4096, 512).unwrap();
        let ch = chroma(&spec, 22050, 55.0, 8000.0).unwrap();
        assert_eq!(ch.dim(), 12);
        let argmax = (0..12)
            .max_by(|&a, &b| ch.values[a].total_cmp(&ch.values[b]))
            .unwrap();
        assert_eq!(argmax, 9, "A is pitch class 9");
        assert_abs_diff_eq!(ch.values.sum(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn chroma_octave_equivalence() {
        let mut clip = sine_clip(440.0, 22050, 1.0);
        let octave = sine_clip(880.0, 22050, 1.0);
        for (s, o) in clip.samples.iter_mut().zip(octave.samples.iter()) {
            *s = 0.5 * (*s + o);
        }
        let spec = stft_magnitude(&clip, 4096, 512).unwrap();
        let ch = chroma(&spec, 22050, 55.0, 8000.0).unwrap();
        let argmax = (0..12)
            .max_by(|&a, &b| ch.values[a].total_cmp(&ch.values[b]))
            .unwrap();
        assert_eq!(argmax, 9);
    }

    #[test]
    fn chroma_zero_spectrogram_is_zero() {
        let spec = Spectrogram {
            magnitudes: Array2::zeros((2049, 4)),
            bin_hz: 22050.0 / 4096.0,
            window_size: 4096,
            hop: 32,
        };
        let ch = chroma(&spec, 22050, 55.0, 8000.0).unwrap();
        assert!(ch.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn chroma_shift_invariance_for_stationary_tone() {
        let clip = sine_clip(440.0, 22050, 1.5);
        let shifted = AudioClip::new(clip.samples[3000..].to_vec(), 22050).unwrap();
        let base =
            AudioClip::new(clip.samples[..clip.samples.len() - 3000].to_vec(), 22050).unwrap();
        let c1 = chroma(
            &stft_magnitude(&base, 4096, 512).unwrap(),
            22050,
            55.0,
            8000.0,
        )
        .unwrap();
        let c2 = chroma(
            &stft_magnitude(&shifted, 4096, 512).unwrap(),
            22050,
            55.0,
            8000.0,
        )
        .unwrap();
        let am1 = (0..12)
            .max_by(|&a, &b| c1.values[a].total_cmp(&c1.values[b]))
            .unwrap();
        let am2 = (0..12)
            .max_by(|&a, &b| c2.values[a].total_cmp(&c2.values[b]))
            .unwrap();
        assert_eq!(am1, am2);
        for k in 0..12 {
            let denom = c1.values[k].max(1e-12);
            assert!(
                (c1.values[k] - c2.values[k]).abs() / denom < 0.05
                    || c1.values[k].max(c2.values[k]) < 1e-9,
                "pitch class {k} moved more than 5%"
            );
        }
    }

    #[test]
    fn psd_peaks_at_sounded_note() {
        // MIDI 69 = 440 Hz sits at index 69 - 24 = 45.
        let clip = sine_clip(440.0, 22050, 1.0);
        let spec = stft_magnitude(&clip, 4096, 512).unwrap();
        let psd = interpolated_psd(&spec, 22050, 96, 24).unwrap();
        assert_eq!(psd.dim(), 96);
        let argmax = (0..96)
            .max_by(|&a, &b| psd.values[a].total_cmp(&psd.values[b]))
            .unwrap();
        assert_eq!(argmax, 45);
        assert!(psd.values.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn psd_zero_input_zero_output() {
        let spec = Spectrogram {
            magnitudes: Array2::zeros((2049, 4)),
            bin_hz: 22050.0 / 4096.0,
            window_size: 4096,
            hop: 32,
        };
        let psd = interpolated_psd(&spec, 22050, 96, 24).unwrap();
        assert!(psd.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn psd_notes_above_nyquist_are_zero() {
        let clip = sine_clip(200.0, 8000, 1.0);
        let spec = stft_magnitude(&clip, 1024, 256).unwrap();
        let psd = interpolated_psd(&spec, 8000, 96, 24).unwrap();
        for m in 0..96 {
            if midi_to_freq(24 + m as u8) > 4000.0 {
                assert_eq!(psd.values[m], 0.0, "note index {m}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn stft_positively_homogeneous(scale in 0.0f64..8.0) {
            let clip = sine_clip(523.25, 8000, 0.5);
            let scaled = AudioClip::new(
                clip.samples.iter().map(|s| s * scale).collect(),
                8000,
            ).unwrap();
            let a = stft_magnitude(&clip, 512, 128).unwrap();
            let b = stft_magnitude(&scaled, 512, 128).unwrap();
            for (x, y) in a.magnitudes.iter().zip(b.magnitudes.iter()) {
                let expected = x * scale;
                prop_assert!((y - expected).abs() <= 1e-9 * expected.abs().max(*x).max(1e-12));
            }
        }

        #[test]
        fn pool_invariant_to_frame_permutation(perm_seed in 0u64..1000) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mags = Array2::from_shape_fn((32, 9), |(b, t)| ((b * 7 + t * 13) % 11) as f64 * 0.25);
            let mut order: Vec<usize> = (0..9).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed);
            order.shuffle(&mut rng);
            let permuted = Array2::from_shape_fn((32, 9), |(b, t)| mags[(b, order[t])]);
            let mk = |m: Array2<f64>| Spectrogram { magnitudes: m, bin_hz: 1.0, window_size: 62, hop: 1 };
            let p1 = pool_time(&mk(mags), 8).unwrap();
            let p2 = pool_time(&mk(permuted), 8).unwrap();
            for (a, b) in p1.values.iter().zip(p2.values.iter()) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }

        #[test]
        fn extractors_produce_finite_vectors(freq in 40.0f64..3500.0, amp in 0.0f64..2.0) {
            let n = 4096;
            let samples: Vec<f64> = (0..n)
                .map(|i| amp * (2.0 * std::f64::consts::PI * freq * i as f64 / 8000.0).sin())
                .collect();
            let clip = AudioClip::new(samples, 8000).unwrap();
            let spec = stft_magnitude(&clip, 1024, 512).unwrap();
            let pooled = pool_time(&spec, 64).unwrap();
            let ch = chroma(&spec, 8000, 55.0, 3900.0).unwrap();
            let psd = interpolated_psd(&spec, 8000, 96, 24).unwrap();
            prop_assert!(pooled.values.iter().all(|v| v.is_finite()));
            prop_assert!(ch.values.iter().all(|v| v.is_finite()));
            prop_assert!(psd.values.iter().all(|v| v.is_finite()));
        }
    }
}
