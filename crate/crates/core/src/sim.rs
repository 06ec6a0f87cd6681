//! Seeded Monte-Carlo CCDF experiments.
//!
//! Frame `i` of a run is a pure function of `(seed, i)`: each frame draws its
//! bits from its own ChaCha stream, so results do not depend on how frames
//! are scheduled across worker threads.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schemes::perm::{factorial, index_bits, MAX_RANKABLE_N};
use crate::schemes::{
    gen_golay, gen_walsh_hadamard, isis_select_exhaustive, isis_select_sampled, slm_select,
    PhaseVectorBank,
};
use crate::signal::{map_qpsk, papr, synthesize, SymbolFrame};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SUBCARRIERS: usize = 8;
pub const DEFAULT_OVERSAMPLE: usize = 2;
pub const DEFAULT_FRAMES: usize = 512;
pub const DEFAULT_SLM_U: usize = 2;
pub const DEFAULT_ISIS_K: usize = 1000;
pub const DEFAULT_GRID: (f64, f64, f64) = (0.0, 12.0, 0.1);

// Stream layout per frame: even streams carry bits, odd streams seed the
// ISIS candidate sampler.
const BIT_STREAM: u64 = 0;
const SAMPLER_STREAM: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Baseline,
    SlmWalsh,
    SlmGolay,
    IsisExhaustive,
    IsisSampled,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Baseline,
        Scheme::SlmWalsh,
        Scheme::SlmGolay,
        Scheme::IsisExhaustive,
        Scheme::IsisSampled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Baseline => "baseline",
            Scheme::SlmWalsh => "slm-walsh",
            Scheme::SlmGolay => "slm-golay",
            Scheme::IsisExhaustive => "isis-exhaustive",
            Scheme::IsisSampled => "isis-sampled",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown scheme '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n_subcarriers: usize,
    pub oversample: usize,
    pub n_frames: usize,
    pub scheme: Scheme,
    pub slm_u: usize,
    pub isis_k: usize,
    pub seed: u64,
    pub threshold_grid: Vec<f64>,
}

impl Default for SimConfig {
    /// QPSK, 8 subcarriers, 2x oversampling, 512 frames.
    fn default() -> Self {
        let (lo, hi, step) = DEFAULT_GRID;
        Self {
            n_subcarriers: DEFAULT_SUBCARRIERS,
            oversample: DEFAULT_OVERSAMPLE,
            n_frames: DEFAULT_FRAMES,
            scheme: Scheme::Baseline,
            slm_u: DEFAULT_SLM_U,
            isis_k: DEFAULT_ISIS_K,
            seed: DEFAULT_SEED,
            threshold_grid: threshold_grid(lo, hi, step).expect("default grid is valid"),
        }
    }
}

impl SimConfig {
    pub fn with_scheme(scheme: Scheme) -> Self {
        Self {
            scheme,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n_subcarriers == 0 {
            return bad("n_subcarriers must be at least 1".into());
        }
        if self.oversample == 0 {
            return bad("oversample must be at least 1".into());
        }
        if self.n_frames == 0 {
            return bad("n_frames must be at least 1".into());
        }
        check_grid(&self.threshold_grid)?;
        match self.scheme {
            Scheme::SlmWalsh => {
                gen_walsh_hadamard(self.slm_u, self.n_subcarriers)?;
            }
            Scheme::SlmGolay => {
                gen_golay(self.n_subcarriers)?;
                if !(1..=2).contains(&self.slm_u) {
                    return bad(format!("Golay banks hold at most 2 vectors, got slm_u = {}", self.slm_u));
                }
            }
            Scheme::IsisSampled => {
                if self.isis_k == 0 {
                    return Err(Error::ZeroCandidates);
                }
                if self.n_subcarriers > MAX_RANKABLE_N {
                    return Err(Error::RankOverflow(self.n_subcarriers));
                }
            }
            Scheme::IsisExhaustive => {
                if self.n_subcarriers > MAX_RANKABLE_N {
                    return Err(Error::RankOverflow(self.n_subcarriers));
                }
            }
            Scheme::Baseline => {}
        }
        Ok(())
    }

    /// Column label, e.g. `slm_walsh_U2` or `isis_sampled_K100`.
    pub fn label(&self) -> String {
        match self.scheme {
            Scheme::Baseline => "baseline".into(),
            Scheme::SlmWalsh => format!("slm_walsh_U{}", self.slm_u),
            Scheme::SlmGolay => format!("slm_golay_U{}", self.slm_u),
            Scheme::IsisExhaustive => "isis_exhaustive".into(),
            Scheme::IsisSampled => format!("isis_sampled_K{}", self.isis_k),
        }
    }

    /// Bits of side information one frame carries under this scheme.
    pub fn side_info_bits(&self) -> u32 {
        match self.scheme {
            Scheme::Baseline => 0,
            Scheme::SlmWalsh | Scheme::SlmGolay => index_bits(self.slm_u as u128),
            Scheme::IsisExhaustive | Scheme::IsisSampled => {
                factorial(self.n_subcarriers).map_or(0, index_bits)
            }
        }
    }
}

/// Labels for a batch, suffixed with `_N<n>` / `_L<l>` when those vary.
pub fn column_labels(configs: &[SimConfig]) -> Vec<String> {
    let varies = |f: fn(&SimConfig) -> usize| configs.windows(2).any(|w| f(&w[0]) != f(&w[1]));
    let vary_n = varies(|c| c.n_subcarriers);
    let vary_l = varies(|c| c.oversample);
    configs
        .iter()
        .map(|c| {
            let mut label = c.label();
            if vary_n {
                label.push_str(&format!("_N{}", c.n_subcarriers));
            }
            if vary_l {
                label.push_str(&format!("_L{}", c.oversample));
            }
            label
        })
        .collect()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidConfig("threshold grid is empty".into()));
    }
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidConfig("threshold grid has non-finite values".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidConfig("threshold grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Evenly spaced thresholds from `min` to `max` inclusive.
pub fn threshold_grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && step.is_finite()) || step <= 0.0 || max < min {
        return Err(Error::InvalidConfig(format!(
            "invalid grid: min {min}, max {max}, step {step}"
        )));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize + 1;
    // Rounded to 1e-9 dB so 0.1-steps print cleanly.
    Ok((0..count)
        .map(|i| ((min + i as f64 * step) * 1e9).round() / 1e9)
        .collect())
}

fn frame_stream(seed: u64, index: u64, purpose: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_mul(2).wrapping_add(purpose));
    rng
}

/// QPSK frame `index` of the run seeded with `seed`.
pub fn gen_random_frame(n: usize, seed: u64, index: u64) -> SymbolFrame {
    let mut rng = frame_stream(seed, index, BIT_STREAM);
    let bits: Vec<u8> = (0..2 * n).map(|_| rng.gen::<bool>() as u8).collect();
    map_qpsk(&bits).expect("even bit count")
}

/// Seed for the candidate sampler of frame `index`.
pub fn sampler_seed(seed: u64, index: u64) -> u64 {
    frame_stream(seed, index, SAMPLER_STREAM).gen()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CcdfCurve {
    pub label: String,
    pub thresholds_db: Vec<f64>,
    pub prob: Vec<f64>,
    pub n_frames: usize,
    pub config: Option<SimConfig>,
}

impl CcdfCurve {
    /// First grid threshold whose exceedance probability is at most `p`.
    pub fn threshold_at(&self, p: f64) -> Option<f64> {
        self.thresholds_db
            .iter()
            .zip(&self.prob)
            .find(|(_, &q)| q <= p)
            .map(|(&t, _)| t)
    }
}

/// `prob[t] = #(samples > thresholds[t]) / #samples`.
pub fn estimate_ccdf(papr_db: &[f64], thresholds: &[f64]) -> Result<CcdfCurve> {
    if papr_db.is_empty() {
        return Err(Error::EmptySamples);
    }
    check_grid(thresholds)?;
    let mut sorted = papr_db.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len();
    let prob = thresholds
        .iter()
        .map(|&t| {
            let at_or_below = sorted.partition_point(|&x| x <= t);
            (n - at_or_below) as f64 / n as f64
        })
        .collect();
    Ok(CcdfCurve {
        label: String::new(),
        thresholds_db: thresholds.to_vec(),
        prob,
        n_frames: n,
        config: None,
    })
}

/// Smallest sample value `v` with `#(samples > v) / n <= p`: the exact
/// crossing point of the empirical CCDF at level `p`.
pub fn ccdf_crossing(papr_db: &[f64], p: f64) -> Result<f64> {
    if papr_db.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut sorted = papr_db.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len();
    let allowed = (p * n as f64 + 1e-9).floor() as usize;
    let idx = n.saturating_sub(allowed + 1);
    Ok(sorted[idx])
}

/// Per-frame outcome of one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeRun {
    pub config: SimConfig,
    pub label: String,
    /// Post-selection PAPR of each frame in dB, in frame order.
    pub papr_db: Vec<f64>,
    pub curve: CcdfCurve,
}

enum Prepared {
    Baseline,
    Slm(PhaseVectorBank),
    Exhaustive,
    Sampled(usize),
}

fn prepare(config: &SimConfig) -> Result<Prepared> {
    let n = config.n_subcarriers;
    Ok(match config.scheme {
        Scheme::Baseline => Prepared::Baseline,
        Scheme::SlmWalsh => Prepared::Slm(gen_walsh_hadamard(config.slm_u, n)?),
        Scheme::SlmGolay => {
            let full = gen_golay(n)?;
            Prepared::Slm(PhaseVectorBank::new(full.vectors()[..config.slm_u].to_vec())?)
        }
        Scheme::IsisExhaustive => Prepared::Exhaustive,
        Scheme::IsisSampled => Prepared::Sampled(config.isis_k),
    })
}

fn frame_papr_db(config: &SimConfig, prepared: &Prepared, index: u64) -> Result<f64> {
    let frame = gen_random_frame(config.n_subcarriers, config.seed, index);
    let l = config.oversample;
    let value = match prepared {
        Prepared::Baseline => papr(&synthesize(&frame, l)?)?,
        Prepared::Slm(bank) => slm_select(&frame, bank, l)?.papr,
        Prepared::Exhaustive => isis_select_exhaustive(&frame, l)?.papr,
        Prepared::Sampled(k) => isis_select_sampled(&frame, *k, sampler_seed(config.seed, index), l)?.papr,
    };
    Ok(value.db)
}

/// Runs one configuration over all its frames on the current rayon pool.
pub fn run_scheme(config: &SimConfig) -> Result<SchemeRun> {
    config.validate()?;
    let prepared = prepare(config)?;
    let papr_db = (0..config.n_frames as u64)
        .into_par_iter()
        .map(|i| frame_papr_db(config, &prepared, i))
        .collect::<Result<Vec<f64>>>()?;
    let mut curve = estimate_ccdf(&papr_db, &config.threshold_grid)?;
    curve.label = config.label();
    curve.config = Some(config.clone());
    Ok(SchemeRun {
        config: config.clone(),
        label: config.label(),
        papr_db,
        curve,
    })
}

/// One CCDF curve per configuration, labelled as in [`column_labels`].
pub fn run_experiment(configs: &[SimConfig]) -> Result<Vec<CcdfCurve>> {
    let labels = column_labels(configs);
    configs
        .iter()
        .zip(labels)
        .map(|(c, label)| {
            let mut curve = run_scheme(c)?.curve;
            curve.label = label;
            Ok(curve)
        })
        .collect()
}

/// Runs `f` on a pool of `threads` workers (0 = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn preset(scheme: Scheme, seed: u64) -> SimConfig {
    SimConfig {
        seed,
        ..SimConfig::with_scheme(scheme)
    }
}

/// Baseline, Walsh SLM, Golay SLM (both `U = 2`) and exhaustive ISIS at `N = 8`.
pub fn preset_fig5(seed: u64) -> Vec<SimConfig> {
    vec![
        preset(Scheme::Baseline, seed),
        preset(Scheme::SlmWalsh, seed),
        preset(Scheme::SlmGolay, seed),
        preset(Scheme::IsisExhaustive, seed),
    ]
}

pub const FIG6_K: [usize; 4] = [8, 100, 500, 1000];

/// Sampled ISIS at each `K` in [`FIG6_K`], plus exhaustive, at `N = 8`.
pub fn preset_fig6(seed: u64) -> Vec<SimConfig> {
    FIG6_K
        .iter()
        .map(|&k| SimConfig {
            isis_k: k,
            ..preset(Scheme::IsisSampled, seed)
        })
        .chain(std::iter::once(preset(Scheme::IsisExhaustive, seed)))
        .collect()
}

pub const FIG7_N: [usize; 3] = [4, 8, 16];

/// Baseline and ISIS at each `N` in [`FIG7_N`]; exhaustive where feasible,
/// sampled with `K = 1000` at `N = 16`.
pub fn preset_fig7(seed: u64) -> Vec<SimConfig> {
    let mut out = Vec::new();
    for &n in &FIG7_N {
        out.push(SimConfig {
            n_subcarriers: n,
            ..preset(Scheme::Baseline, seed)
        });
    }
    for &n in &FIG7_N {
        let scheme = if n <= DEFAULT_SUBCARRIERS {
            Scheme::IsisExhaustive
        } else {
            Scheme::IsisSampled
        };
        out.push(SimConfig {
            n_subcarriers: n,
            isis_k: DEFAULT_ISIS_K,
            ..preset(scheme, seed)
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::perm::Permutation;

    fn small(scheme: Scheme, n: usize, frames: usize) -> SimConfig {
        SimConfig {
            n_subcarriers: n,
            n_frames: frames,
            ..SimConfig::with_scheme(scheme)
        }
    }

    #[test]
    fn frames_are_deterministic_and_unit_modulus() {
        assert_eq!(gen_random_frame(8, 7, 3), gen_random_frame(8, 7, 3));
        assert_ne!(gen_random_frame(8, 7, 3), gen_random_frame(8, 7, 4));
        assert_ne!(gen_random_frame(8, 7, 3), gen_random_frame(8, 8, 3));
        let f = gen_random_frame(8, 1, 0);
        assert_eq!(f.len(), 8);
        assert!(f.symbols().iter().all(|s| (s.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn constellation_frequencies_are_uniform() {
        let mut counts = [0usize; 4];
        let frames = 100_000u64;
        for i in 0..frames {
            let f = gen_random_frame(1, 2024, i);
            let s = f.symbols()[0];
            let idx = (s.re < 0.0) as usize * 2 + (s.im < 0.0) as usize;
            counts[idx] += 1;
        }
        let expected = frames as f64 / 4.0;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        // 3 degrees of freedom; 16.27 is the 0.1% critical value.
        assert!(chi2 < 16.27, "chi2 = {chi2}, counts = {counts:?}");
        for &c in &counts {
            assert!((c as f64 / frames as f64 - 0.25).abs() < 0.01);
        }
    }

    #[test]
    fn ccdf_direct_counts() {
        let c = estimate_ccdf(&[3.0, 5.0, 7.0], &[2.0, 4.0, 5.0, 8.0]).unwrap();
        assert_eq!(c.prob, vec![1.0, 2.0 / 3.0, 1.0 / 3.0, 0.0]);
        assert_eq!(c.n_frames, 3);
    }

    #[test]
    fn ccdf_rejects_empty_and_unsorted() {
        assert_eq!(estimate_ccdf(&[], &[1.0]).unwrap_err(), Error::EmptySamples);
        assert!(estimate_ccdf(&[1.0], &[1.0, 1.0]).is_err());
    }

    #[test]
    fn ccdf_matches_counting_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let samples: Vec<f64> = (0..512).map(|_| rng.gen_range(0.0..11.0)).collect();
        let grid = threshold_grid(0.0, 12.0, 0.1).unwrap();
        let curve = estimate_ccdf(&samples, &grid).unwrap();
        for (t, p) in grid.iter().zip(&curve.prob) {
            let count = samples.iter().filter(|&&s| s > *t).count();
            assert_eq!(*p, count as f64 / 512.0);
        }
        assert!(curve.prob.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn crossing_agrees_with_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(81);
        let samples: Vec<f64> = (0..512).map(|_| rng.gen_range(0.0..11.0)).collect();
        for p in [0.5, 0.1, 0.01, 0.002] {
            let v = ccdf_crossing(&samples, p).unwrap();
            let above = samples.iter().filter(|&&s| s > v).count() as f64 / 512.0;
            assert!(above <= p);
            // Any smaller sample exceeds the level.
            let below = samples.iter().filter(|&&s| s < v).cloned().fold(f64::MIN, f64::max);
            if below > f64::MIN {
                let above_below = samples.iter().filter(|&&s| s > below).count() as f64 / 512.0;
                assert!(above_below > p);
            }
        }
    }

    #[test]
    fn grid_defaults() {
        let g = SimConfig::default().threshold_grid;
        assert_eq!(g.len(), 121);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1], 0.1);
        assert_eq!(g[120], 12.0);
        assert!(threshold_grid(1.0, 0.0, 0.1).is_err());
        assert!(threshold_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn baseline_single_subcarrier_is_zero_db_step() {
        let run = run_scheme(&small(Scheme::Baseline, 1, 20)).unwrap();
        assert!(run.papr_db.iter().all(|&p| p == 0.0));
        assert!(run.curve.prob.iter().all(|&p| p == 0.0));
    }

    #[test]
    fn sampled_k1_equals_baseline() {
        let base = run_scheme(&small(Scheme::Baseline, 8, 64)).unwrap();
        let k1 = run_scheme(&SimConfig {
            isis_k: 1,
            ..small(Scheme::IsisSampled, 8, 64)
        })
        .unwrap();
        assert_eq!(base.papr_db, k1.papr_db);
        assert_eq!(base.curve.prob, k1.curve.prob);
    }

    #[test]
    fn exhaustive_n4_matches_brute_force() {
        let cfg = small(Scheme::IsisExhaustive, 4, 100);
        let run = run_scheme(&cfg).unwrap();
        let mut maps: Vec<Vec<usize>> = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let m = vec![a, b, c, d];
                        if Permutation::new(m.clone()).is_ok() {
                            maps.push(m);
                        }
                    }
                }
            }
        }
        assert_eq!(maps.len(), 24);
        for (i, &db) in run.papr_db.iter().enumerate() {
            let f = gen_random_frame(4, cfg.seed, i as u64);
            let best = maps
                .iter()
                .map(|m| {
                    let p = Permutation::new(m.clone()).unwrap();
                    let g = SymbolFrame::new(p.apply(f.symbols())).unwrap();
                    papr(&synthesize(&g, 2).unwrap()).unwrap().db
                })
                .fold(f64::INFINITY, f64::min);
            assert_eq!(db, best);
        }
    }

    #[test]
    fn run_is_independent_of_thread_count() {
        let cfg = SimConfig {
            isis_k: 50,
            ..small(Scheme::IsisSampled, 8, 40)
        };
        let a = with_threads(1, || run_scheme(&cfg).unwrap());
        let b = with_threads(4, || run_scheme(&cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn per_frame_dominance() {
        let seed = 9;
        let mk = |scheme, k| SimConfig {
            isis_k: k,
            seed,
            ..small(scheme, 6, 50)
        };
        let base = run_scheme(&mk(Scheme::Baseline, 1)).unwrap();
        let ex = run_scheme(&mk(Scheme::IsisExhaustive, 1)).unwrap();
        let s10 = run_scheme(&mk(Scheme::IsisSampled, 10)).unwrap();
        let s100 = run_scheme(&mk(Scheme::IsisSampled, 100)).unwrap();
        let slm = run_scheme(&SimConfig { seed, ..small(Scheme::SlmGolay, 8, 50) }).unwrap();
        let base8 = run_scheme(&SimConfig { seed, ..small(Scheme::Baseline, 8, 50) }).unwrap();
        for i in 0..50 {
            assert!(ex.papr_db[i] <= s100.papr_db[i]);
            assert!(s100.papr_db[i] <= s10.papr_db[i]);
            assert!(s10.papr_db[i] <= base.papr_db[i]);
            assert!(slm.papr_db[i] <= base8.papr_db[i]);
        }
    }

    #[test]
    fn exhaustive_budget_propagates() {
        let err = run_scheme(&small(Scheme::IsisExhaustive, 11, 1)).unwrap_err();
        assert_eq!(err, Error::OverBudget { n: 11, max: 10 });
    }

    #[test]
    fn config_validation() {
        assert!(SimConfig::default().validate().is_ok());
        assert!(SimConfig { n_subcarriers: 0, ..SimConfig::default() }.validate().is_err());
        assert!(SimConfig { oversample: 0, ..SimConfig::default() }.validate().is_err());
        assert!(SimConfig { n_frames: 0, ..SimConfig::default() }.validate().is_err());
        assert!(SimConfig { threshold_grid: vec![1.0, 0.5], ..SimConfig::default() }.validate().is_err());
        let walsh = SimConfig::with_scheme(Scheme::SlmWalsh);
        assert!(SimConfig { slm_u: 3, ..walsh.clone() }.validate().is_err());
        assert!(SimConfig { slm_u: 16, ..walsh.clone() }.validate().is_err());
        assert!(SimConfig { n_subcarriers: 6, ..walsh }.validate().is_err());
        let golay = SimConfig::with_scheme(Scheme::SlmGolay);
        assert!(SimConfig { slm_u: 4, ..golay }.validate().is_err());
        let sampled = SimConfig::with_scheme(Scheme::IsisSampled);
        assert!(SimConfig { isis_k: 0, ..sampled }.validate().is_err());
    }

    #[test]
    fn labels_and_side_info() {
        let fig6 = preset_fig6(1);
        let labels = column_labels(&fig6);
        assert_eq!(
            labels,
            vec![
                "isis_sampled_K8",
                "isis_sampled_K100",
                "isis_sampled_K500",
                "isis_sampled_K1000",
                "isis_exhaustive"
            ]
        );
        let fig7 = column_labels(&preset_fig7(1));
        assert_eq!(fig7[0], "baseline_N4");
        assert_eq!(fig7[5], "isis_sampled_K1000_N16");
        assert_eq!(SimConfig::with_scheme(Scheme::IsisExhaustive).side_info_bits(), 16);
        assert_eq!(SimConfig::with_scheme(Scheme::SlmWalsh).side_info_bits(), 1);
        assert_eq!(SimConfig::default().side_info_bits(), 0);
    }

    #[test]
    fn presets() {
        let f5 = preset_fig5(42);
        assert_eq!(f5.len(), 4);
        assert_eq!(
            f5.iter().map(|c| c.scheme).collect::<Vec<_>>(),
            vec![Scheme::Baseline, Scheme::SlmWalsh, Scheme::SlmGolay, Scheme::IsisExhaustive]
        );
        assert!(f5.iter().all(|c| c.n_subcarriers == 8 && c.oversample == 2 && c.n_frames == 512));
        assert!(f5.iter().filter(|c| c.scheme.name().starts_with("slm")).all(|c| c.slm_u == 2));

        let f6 = preset_fig6(42);
        let ks: Vec<usize> = f6.iter().filter(|c| c.scheme == Scheme::IsisSampled).map(|c| c.isis_k).collect();
        assert_eq!(ks, vec![8, 100, 500, 1000]);
        assert!(f6.iter().all(|c| c.n_subcarriers == 8));

        let f7 = preset_fig7(42);
        assert_eq!(f7.len(), 6);
        let isis16 = f7.iter().find(|c| c.n_subcarriers == 16 && c.scheme != Scheme::Baseline).unwrap();
        assert_eq!((isis16.scheme, isis16.isis_k), (Scheme::IsisSampled, 1000));

        for set in [f5, f6, f7] {
            assert!(set.iter().all(|c| c.seed == 42 && c.validate().is_ok()));
        }
    }

    #[test]
    fn sampler_and_bit_streams_differ() {
        assert_ne!(sampler_seed(1, 0), sampler_seed(1, 1));
        let mut bits = frame_stream(1, 0, BIT_STREAM);
        assert_ne!(bits.gen::<u64>(), sampler_seed(1, 0));
    }

    #[test]
    fn scheme_names_roundtrip() {
        for s in Scheme::ALL {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
            let json = serde_json::to_string(&s).unwrap();
            assert_eq!(json, format!("\"{}\"", s.name()));
        }
        assert!("slm".parse::<Scheme>().is_err());
    }
}
