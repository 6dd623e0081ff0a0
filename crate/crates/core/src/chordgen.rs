//! Synthetic tertian-chord dataset: 14 chord types built from stacked minor
//! (3 semitone) and major (4 semitone) thirds, rendered with parametric
//! harmonic instruments over a grid of roots.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::AudioClip;

/// The 14 tertian chord types: 2 thirds, 4 triads, 8 sevenths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordType {
    MinorThird,
    MajorThird,
    DiminishedTriad,
    MinorTriad,
    MajorTriad,
    AugmentedTriad,
    DiminishedSeventh,
    HalfDiminishedSeventh,
    MinorSeventh,
    MinorMajorSeventh,
    DominantSeventh,
    MajorSeventh,
    AugmentedMajorSeventh,
    AugmentedAugmentedSeventh,
}

impl ChordType {
    /// All types in label order; `label = index + 1`.
    pub const ALL: [ChordType; 14] = [
        ChordType::MinorThird,
        ChordType::MajorThird,
        ChordType::DiminishedTriad,
        ChordType::MinorTriad,
        ChordType::MajorTriad,
        ChordType::AugmentedTriad,
        ChordType::DiminishedSeventh,
        ChordType::HalfDiminishedSeventh,
        ChordType::MinorSeventh,
        ChordType::MinorMajorSeventh,
        ChordType::DominantSeventh,
        ChordType::MajorSeventh,
        ChordType::AugmentedMajorSeventh,
        ChordType::AugmentedAugmentedSeventh,
    ];

    /// Semitone steps between consecutive notes, each 3 (minor) or 4 (major).
    pub fn intervals(self) -> &'static [u8] {
        match self {
            ChordType::MinorThird => &[3],
            ChordType::MajorThird => &[4],
            ChordType::DiminishedTriad => &[3, 3],
            ChordType::MinorTriad => &[3, 4],
            ChordType::MajorTriad => &[4, 3],
            ChordType::AugmentedTriad => &[4, 4],
            ChordType::DiminishedSeventh => &[3, 3, 3],
            ChordType::HalfDiminishedSeventh => &[3, 3, 4],
            ChordType::MinorSeventh => &[3, 4, 3],
            ChordType::MinorMajorSeventh => &[3, 4, 4],
            ChordType::DominantSeventh => &[4, 3, 3],
            ChordType::MajorSeventh => &[4, 3, 4],
            ChordType::AugmentedMajorSeventh => &[4, 4, 3],
            ChordType::AugmentedAugmentedSeventh => &[4, 4, 4],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChordType::MinorThird => "minor_third",
            ChordType::MajorThird => "major_third",
            ChordType::DiminishedTriad => "diminished_triad",
            ChordType::MinorTriad => "minor_triad",
            ChordType::MajorTriad => "major_triad",
            ChordType::AugmentedTriad => "augmented_triad",
            ChordType::DiminishedSeventh => "diminished_seventh",
            ChordType::HalfDiminishedSeventh => "half_diminished_seventh",
            ChordType::MinorSeventh => "minor_seventh",
            ChordType::MinorMajorSeventh => "minor_major_seventh",
            ChordType::DominantSeventh => "dominant_seventh",
            ChordType::MajorSeventh => "major_seventh",
            ChordType::AugmentedMajorSeventh => "augmented_major_seventh",
            ChordType::AugmentedAugmentedSeventh => "augmented_augmented_seventh",
        }
    }

    /// 1-based class label.
    pub fn label(self) -> usize {
        Self::ALL.iter().position(|t| *t == self).unwrap() + 1
    }

    pub fn note_count(self) -> usize {
        self.intervals().len() + 1
    }
}

/// Additive-synthesis voice: relative partial amplitudes plus envelope and a
/// bound on random per-partial detuning.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstrumentProfile {
    pub name: String,
    /// Relative amplitude of partial p (index 0 = fundamental).
    pub harmonic_amplitudes: Vec<f64>,
    /// Linear attack ramp, seconds.
    pub attack: f64,
    /// Linear release ramp, seconds.
    pub release: f64,
    /// Relative frequency perturbation bound per partial.
    pub inharmonicity_jitter: f64,
}

impl InstrumentProfile {
    fn validate(&self, duration: f64) -> Result<()> {
        if self.harmonic_amplitudes.is_empty() {
            return Err(Error::InvalidInput(format!(
                "instrument {}: no partials",
                self.name
            )));
        }
        if self.harmonic_amplitudes[0] <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "instrument {}: fundamental amplitude must be positive",
                self.name
            )));
        }
        if self.harmonic_amplitudes.iter().any(|a| *a < 0.0 || !a.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "instrument {}: partial amplitudes must be finite and non-negative",
                self.name
            )));
        }
        if self.attack < 0.0 || self.release < 0.0 || self.attack + self.release >= duration {
            return Err(Error::InvalidInput(format!(
                "instrument {}: attack + release must be shorter than the clip",
                self.name
            )));
        }
        Ok(())
    }
}

/// Eleven harmonic-decay voices: geometric partial rolloff r in [0.3, 0.8],
/// 4 to 12 partials, assorted envelopes.
pub fn default_instruments() -> Vec<InstrumentProfile> {
    let params: [(f64, usize, f64, f64); 11] = [
        (0.30, 4, 0.010, 0.050),
        (0.35, 5, 0.020, 0.100),
        (0.40, 6, 0.005, 0.150),
        (0.45, 7, 0.030, 0.080),
        (0.50, 8, 0.010, 0.200),
        (0.55, 9, 0.050, 0.120),
        (0.60, 10, 0.020, 0.060),
        (0.65, 11, 0.008, 0.180),
        (0.70, 12, 0.040, 0.100),
        (0.75, 6, 0.015, 0.250),
        (0.80, 9, 0.060, 0.150),
    ];
    params
        .iter()
        .enumerate()
        .map(|(i, &(ratio, partials, attack, release))| InstrumentProfile {
            name: format!("decay{:02}", i + 1),
            harmonic_amplitudes: (0..partials).map(|p| ratio.powi(p as i32)).collect(),
            attack,
            release,
            inharmonicity_jitter: 0.002,
        })
        .collect()
}

/// 14 consecutive roots, C3..C#4 (MIDI 48..=61).
pub fn default_roots() -> Vec<u8> {
    (48..=61).collect()
}

/// Everything needed to regenerate a dataset deterministically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChordDatasetConfig {
    pub roots: Vec<u8>,
    pub instruments: Vec<InstrumentProfile>,
    /// Clip length in seconds.
    pub duration: f64,
    pub sample_rate: u32,
    pub seed: u64,
}

impl Default for ChordDatasetConfig {
    fn default() -> Self {
        ChordDatasetConfig {
            roots: default_roots(),
            instruments: default_instruments(),
            duration: 1.0,
            sample_rate: 22050,
            seed: 0,
        }
    }
}

impl ChordDatasetConfig {
    /// Paper-scale variant: 44.1 kHz, 2 s clips.
    pub fn paper_scale(seed: u64) -> Self {
        ChordDatasetConfig {
            duration: 2.0,
            sample_rate: 44100,
            seed,
            ..ChordDatasetConfig::default()
        }
    }

    pub fn clip_count(&self) -> usize {
        ChordType::ALL.len() * self.roots.len() * self.instruments.len()
    }
}

/// One generated clip with its provenance.
#[derive(Debug, Clone)]
pub struct ChordSample {
    pub clip: AudioClip,
    /// 1-based chord type label.
    pub label: usize,
    pub chord_type: ChordType,
    pub root: u8,
    pub instrument: String,
}

/// MIDI pitches of a chord: the root plus cumulative interval sums.
pub fn chord_pitches(root: u8, chord_type: ChordType) -> Result<Vec<u8>> {
    if root > 127 {
        return Err(Error::MidiOutOfRange(root as u32));
    }
    let mut pitches = vec![root];
    let mut current = root as u32;
    for &step in chord_type.intervals() {
        current += step as u32;
        if current > 127 {
            return Err(Error::MidiOutOfRange(current));
        }
        pitches.push(current as u8);
    }
    Ok(pitches)
}

/// Equal-temperament frequency of a MIDI note, A4 (69) = 440 Hz.
pub fn midi_to_freq(midi: u8) -> f64 {
    440.0 * ((midi as f64 - 69.0) / 12.0).exp2()
}

/// Render a chord as a sum of per-pitch harmonic partials with random phase
/// and detuning, a linear attack/release envelope, and peak normalization to
/// 0.9. Partials at or above Nyquist are dropped. Identical seeds produce
/// bit-identical clips.
pub fn synth_chord(
    pitches: &[u8],
    instrument: &InstrumentProfile,
    duration: f64,
    sample_rate: u32,
    seed: u64,
) -> Result<AudioClip> {
    if pitches.is_empty() {
        return Err(Error::InvalidInput("empty pitch list".into()));
    }
    if duration <= 0.0 || sample_rate == 0 {
        return Err(Error::InvalidInput(
            "duration and sample rate must be positive".into(),
        ));
    }
    instrument.validate(duration)?;

    let n = (duration * sample_rate as f64).round() as usize;
    let nyquist = sample_rate as f64 / 2.0;
    let dt = 1.0 / sample_rate as f64;
    let j = instrument.inharmonicity_jitter;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = vec![0.0f64; n];
    for &pitch in pitches {
        let fundamental = midi_to_freq(pitch);
        for (p, &amp) in instrument.harmonic_amplitudes.iter().enumerate() {
            // Draw in a fixed order so dropping a partial cannot shift the
            // random stream of the next one.
            let jitter: f64 = if j > 0.0 { rng.random_range(-j..=j) } else { 0.0 };
            let phase: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let freq = fundamental * (p + 1) as f64 * (1.0 + jitter);
            if freq >= nyquist || amp == 0.0 {
                continue;
            }
            let omega = std::f64::consts::TAU * freq;
            for (i, s) in samples.iter_mut().enumerate() {
                *s += amp * (omega * i as f64 * dt + phase).sin();
            }
        }
    }

    let attack_samples = (instrument.attack * sample_rate as f64).round() as usize;
    let release_samples = (instrument.release * sample_rate as f64).round() as usize;
    for i in 0..attack_samples.min(n) {
        samples[i] *= i as f64 / attack_samples as f64;
    }
    for i in 0..release_samples.min(n) {
        let idx = n - 1 - i;
        samples[idx] *= i as f64 / release_samples as f64;
    }

    let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.abs()));
    if peak > 0.0 {
        let scale = 0.9 / peak;
        for s in &mut samples {
            *s *= scale;
        }
    }

    AudioClip::new(samples, sample_rate)
}

/// Stable per-clip seed from the master seed and the clip's grid position.
fn clip_seed(master: u64, type_idx: usize, root_idx: usize, instr_idx: usize) -> u64 {
    let mut z = master
        ^ (type_idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (root_idx as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ (instr_idx as u64).wrapping_mul(0x94D0_49BB_1331_11EB);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One clip per (chord type, root, instrument), labeled by chord type.
///
/// Clip order and content depend only on the config; synthesis runs in
/// parallel with per-clip seeds derived from the grid position.
pub fn generate_dataset(config: &ChordDatasetConfig) -> Result<Vec<ChordSample>> {
    if config.roots.is_empty() || config.instruments.is_empty() {
        return Err(Error::InvalidInput(
            "dataset needs at least one root and one instrument".into(),
        ));
    }
    if config.duration <= 0.0 {
        return Err(Error::InvalidInput("duration must be positive".into()));
    }

    let mut jobs = Vec::with_capacity(config.clip_count());
    for (type_idx, &chord_type) in ChordType::ALL.iter().enumerate() {
        for (root_idx, &root) in config.roots.iter().enumerate() {
            for (instr_idx, instrument) in config.instruments.iter().enumerate() {
                jobs.push((type_idx, chord_type, root, root_idx, instrument, instr_idx));
            }
        }
    }

    jobs.into_par_iter()
        .map(|(type_idx, chord_type, root, root_idx, instrument, instr_idx)| {
            let pitches = chord_pitches(root, chord_type)?;
            let seed = clip_seed(config.seed, type_idx, root_idx, instr_idx);
            let clip = synth_chord(
                &pitches,
                instrument,
                config.duration,
                config.sample_rate,
                seed,
            )?;
            Ok(ChordSample {
                clip,
                label: chord_type.label(),
                chord_type,
                root,
                instrument: instrument.name.clone(),
            })
        })
        .collect()
}
