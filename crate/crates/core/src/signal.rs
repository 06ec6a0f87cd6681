//! Complex-baseband primitives: QPSK mapping, oversampled OFDM synthesis and
//! the peak-to-average power ratio.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mean power below this is treated as an all-zero frame.
const MIN_MEAN_POWER: f64 = 1e-300;

/// Frequency-domain input: one complex symbol per subcarrier.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolFrame(Vec<Complex64>);

impl SymbolFrame {
    pub fn new(symbols: Vec<Complex64>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if let Some(i) = symbols.iter().position(|s| !(s.re.is_finite() && s.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self(symbols))
    }

    pub fn symbols(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn energy(&self) -> f64 {
        self.0.iter().map(|s| s.norm_sqr()).sum()
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }
}

/// Time-domain samples of one OFDM symbol on an `N * oversample` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeDomainFrame {
    samples: Vec<Complex64>,
    oversample: usize,
}

impl TimeDomainFrame {
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn oversample(&self) -> usize {
        self.oversample
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PaprValue {
    pub linear: f64,
    pub db: f64,
}

impl PaprValue {
    pub fn from_linear(linear: f64) -> Self {
        Self {
            linear,
            db: 10.0 * linear.log10(),
        }
    }
}

/// Gray-coded QPSK with unit symbol energy.
///
/// Bit pairs map as `00 -> (1+j)/√2`, `01 -> (-1+j)/√2`, `11 -> (-1-j)/√2`,
/// `10 -> (1-j)/√2`: the first bit selects the sign of the imaginary part and
/// the second bit the sign of the real part.
pub fn map_qpsk(bits: &[u8]) -> Result<SymbolFrame> {
    if !bits.len().is_multiple_of(2) {
        return Err(Error::OddBitCount(bits.len()));
    }
    if let Some(&b) = bits.iter().find(|&&b| b > 1) {
        return Err(Error::InvalidBit(b));
    }
    let symbols = bits
        .chunks_exact(2)
        .map(|pair| {
            let im = if pair[0] == 0 { FRAC_1_SQRT_2 } else { -FRAC_1_SQRT_2 };
            let re = if pair[1] == 0 { FRAC_1_SQRT_2 } else { -FRAC_1_SQRT_2 };
            Complex64::new(re, im)
        })
        .collect();
    SymbolFrame::new(symbols)
}

/// Precomputed direct-sum synthesizer for a fixed `(N, L)`.
///
/// Evaluates `x[k] = (1/√N) Σ_n X_n exp(j2πnk/(NL))` for `k = 0..NL`.
/// Every caller (single synthesis, exhaustive and sampled search, the
/// harness) goes through [`Synthesizer::synthesize_into`], so a PAPR computed
/// anywhere in the crate is bit-identical for the same input.
#[derive(Debug, Clone)]
pub struct Synthesizer {
    n: usize,
    oversample: usize,
    scale: f64,
    /// `twiddles[m] = exp(j2πm/M)` for `M = N·L`; quarter turns are exact.
    twiddles: Vec<Complex64>,
}

impl Synthesizer {
    pub fn new(n: usize, oversample: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFrame);
        }
        if oversample == 0 {
            return Err(Error::ZeroOversample);
        }
        let m = n * oversample;
        let twiddles = (0..m).map(|i| unit_root(i, m)).collect();
        Ok(Self {
            n,
            oversample,
            scale: 1.0 / (n as f64).sqrt(),
            twiddles,
        })
    }

    pub fn subcarriers(&self) -> usize {
        self.n
    }

    pub fn oversample(&self) -> usize {
        self.oversample
    }

    pub fn grid_len(&self) -> usize {
        self.twiddles.len()
    }

    /// Writes the time-domain samples of `symbols` into `out`.
    ///
    /// Panics if `symbols.len() != N` or `out.len() != N·L`.
    pub fn synthesize_into(&self, symbols: &[Complex64], out: &mut [Complex64]) {
        assert_eq!(symbols.len(), self.n);
        let m = self.twiddles.len();
        assert_eq!(out.len(), m);
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut idx = 0usize;
            for x in symbols {
                acc += x * self.twiddles[idx];
                idx += k;
                if idx >= m {
                    idx -= m;
                }
            }
            *slot = acc * self.scale;
        }
    }

    pub fn synthesize(&self, frame: &SymbolFrame) -> Result<TimeDomainFrame> {
        if frame.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: frame.len(),
            });
        }
        let mut samples = vec![Complex64::new(0.0, 0.0); self.grid_len()];
        self.synthesize_into(frame.symbols(), &mut samples);
        Ok(TimeDomainFrame {
            samples,
            oversample: self.oversample,
        })
    }

    /// PAPR of `symbols` using `scratch` (length `N·L`) as the sample buffer.
    pub fn papr_of(&self, symbols: &[Complex64], scratch: &mut [Complex64]) -> Result<PaprValue> {
        self.synthesize_into(symbols, scratch);
        papr_of_samples(scratch)
    }
}

/// `exp(j2π i/m)`, exact at multiples of a quarter turn.
fn unit_root(i: usize, m: usize) -> Complex64 {
    if (4 * i).is_multiple_of(m) {
        return match 4 * i / m {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let phase = 2.0 * PI * i as f64 / m as f64;
    Complex64::new(phase.cos(), phase.sin())
}

/// Oversampled OFDM synthesis of one frame.
pub fn synthesize(frame: &SymbolFrame, oversample: usize) -> Result<TimeDomainFrame> {
    Synthesizer::new(frame.len(), oversample)?.synthesize(frame)
}

/// Peak power over mean power of a time-domain frame.
pub fn papr(tdf: &TimeDomainFrame) -> Result<PaprValue> {
    papr_of_samples(tdf.samples())
}

pub fn papr_of_samples(samples: &[Complex64]) -> Result<PaprValue> {
    if samples.is_empty() {
        return Err(Error::EmptyFrame);
    }
    let mut peak = 0.0f64;
    let mut total = 0.0f64;
    for s in samples {
        let p = s.norm_sqr();
        total += p;
        if p > peak {
            peak = p;
        }
    }
    let mean = total / samples.len() as f64;
    if mean.is_nan() || mean < MIN_MEAN_POWER {
        return Err(Error::ZeroPower);
    }
    // peak >= mean holds exactly; rounding in the sum can dip below it by an ulp.
    Ok(PaprValue::from_linear((peak / mean).max(1.0)))
}
