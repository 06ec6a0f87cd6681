//! Argument handling and output writers for the `paprlab` binary.
//!
//! Exit codes: 0 on success, 2 for invalid arguments or unwritable outputs,
//! 1 for runtime failures.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::sim::{
    column_labels, preset_fig5, preset_fig6, preset_fig7, run_experiment, threshold_grid, with_threads,
    CcdfCurve, Scheme, SimConfig, DEFAULT_GRID, DEFAULT_SEED,
};

pub const THREADS_ENV: &str = "PAPRLAB_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "paprlab", version, about = "OFDM PAPR reduction simulator (ISIS and SLM)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a custom experiment from flags and/or a key=value config file.
    Run(RunArgs),
    /// Baseline vs. Walsh/Golay SLM (U=2) vs. exhaustive ISIS at N=8.
    Fig5(PresetArgs),
    /// Sampled ISIS at K = 8, 100, 500, 1000 vs. exhaustive at N=8.
    Fig6(PresetArgs),
    /// Baseline and ISIS at N = 4, 8, 16.
    Fig7(PresetArgs),
    /// Smoke-run the invariant suite.
    Selftest,
}

#[derive(Debug, Args, Default)]
struct GridArgs {
    #[arg(long)]
    grid_min: Option<f64>,
    #[arg(long)]
    grid_max: Option<f64>,
    #[arg(long)]
    grid_step: Option<f64>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// CSV destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON metadata destination.
    #[arg(long)]
    meta_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    oversample: Option<usize>,
    #[arg(long)]
    frames: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    slm_u: Option<usize>,
    #[arg(long)]
    isis_k: Option<usize>,
    #[command(flatten)]
    grid: GridArgs,
    /// Flat key=value file using the flag names as keys; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PresetArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    frames: Option<usize>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// Usage-level failure; maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

const CONFIG_KEYS: [&str; 10] = [
    "scheme", "n", "oversample", "frames", "seed", "slm-u", "isis-k", "grid-min", "grid-max", "grid-step",
];

/// Parses a flat `key=value` config file. Blank lines and `#` comments are skipped.
pub fn parse_config_file(text: &str) -> Result<HashMap<String, String>, String> {
    let mut out = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
        let key = key.trim().trim_start_matches("--").to_string();
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(format!("line {}: unknown key '{key}'", lineno + 1));
        }
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

fn file_value<T: std::str::FromStr>(file: &HashMap<String, String>, key: &str) -> Result<Option<T>, UsageError> {
    file.get(key)
        .map(|v| {
            v.parse::<T>()
                .map_err(|_| UsageError(format!("config key '{key}': cannot parse '{v}'")))
        })
        .transpose()
}

fn resolve_grid(grid: &GridArgs, file: &HashMap<String, String>) -> Result<Vec<f64>, UsageError> {
    let (lo, hi, step) = DEFAULT_GRID;
    let lo = grid.grid_min.or(file_value(file, "grid-min")?).unwrap_or(lo);
    let hi = grid.grid_max.or(file_value(file, "grid-max")?).unwrap_or(hi);
    let step = grid.grid_step.or(file_value(file, "grid-step")?).unwrap_or(step);
    Ok(threshold_grid(lo, hi, step)?)
}

fn resolve_run(args: &RunArgs) -> Result<SimConfig, UsageError> {
    let file = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
            parse_config_file(&text).map_err(UsageError)?
        }
        None => HashMap::new(),
    };
    let d = SimConfig::default();
    let scheme = match args.scheme.clone().or(file_value(&file, "scheme")?) {
        Some(s) => s.parse::<Scheme>()?,
        None => d.scheme,
    };
    let config = SimConfig {
        scheme,
        n_subcarriers: args.n.or(file_value(&file, "n")?).unwrap_or(d.n_subcarriers),
        oversample: args.oversample.or(file_value(&file, "oversample")?).unwrap_or(d.oversample),
        n_frames: args.frames.or(file_value(&file, "frames")?).unwrap_or(d.n_frames),
        seed: args.seed.or(file_value(&file, "seed")?).unwrap_or(d.seed),
        slm_u: args.slm_u.or(file_value(&file, "slm-u")?).unwrap_or(d.slm_u),
        isis_k: args.isis_k.or(file_value(&file, "isis-k")?).unwrap_or(d.isis_k),
        threshold_grid: resolve_grid(&args.grid, &file)?,
    };
    config.validate()?;
    Ok(config)
}

fn resolve_preset(args: &PresetArgs, preset: fn(u64) -> Vec<SimConfig>) -> Result<Vec<SimConfig>, UsageError> {
    let grid = resolve_grid(&args.grid, &HashMap::new())?;
    let configs: Vec<SimConfig> = preset(args.seed.unwrap_or(DEFAULT_SEED))
        .into_iter()
        .map(|c| SimConfig {
            n_frames: args.frames.unwrap_or(c.n_frames),
            threshold_grid: grid.clone(),
            ..c
        })
        .collect();
    for c in &configs {
        c.validate()?;
    }
    Ok(configs)
}

/// `printf("%.9g")`-style formatting.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-4..9).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa), exp.abs())
    } else {
        trim(&format!("{:.*}", (8 - exp) as usize, x))
    }
}

/// CSV with a `threshold_db` column followed by one `ccdf_<label>` column per curve.
pub fn write_csv<W: Write>(mut w: W, curves: &[CcdfCurve]) -> io::Result<()> {
    let grid = curves.first().map(|c| c.thresholds_db.as_slice()).unwrap_or(&[]);
    write!(w, "threshold_db")?;
    for c in curves {
        write!(w, ",ccdf_{}", c.label)?;
    }
    writeln!(w)?;
    for (row, &t) in grid.iter().enumerate() {
        write!(w, "{}", format_sig9(t))?;
        for c in curves {
            write!(w, ",{}", format_sig9(c.prob[row]))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeMeta {
    pub label: String,
    pub config: SimConfig,
    pub side_info_bits: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub wall_time_s: f64,
    pub threads: usize,
    pub schemes: Vec<SchemeMeta>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputBundle {
    pub curves: Vec<CcdfCurve>,
    pub metadata: Metadata,
}

fn open_output(path: &Path) -> Result<File, UsageError> {
    File::create(path).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))
}

/// Worker count from `PAPRLAB_THREADS` (0 or unset = automatic).
fn thread_count() -> Result<usize, UsageError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("{THREADS_ENV} must be a non-negative integer, got '{v}'"))),
        Err(_) => Ok(0),
    }
}

fn execute(configs: Vec<SimConfig>, output: &OutputArgs) -> i32 {
    let threads = match thread_count() {
        Ok(t) => t,
        Err(UsageError(msg)) => return usage_fail(&msg),
    };
    // Open outputs up front so a bad path fails before any simulation work.
    let csv_file = match output.out.as_deref().map(open_output).transpose() {
        Ok(f) => f,
        Err(UsageError(msg)) => return usage_fail(&msg),
    };
    let meta_file = match output.meta_out.as_deref().map(open_output).transpose() {
        Ok(f) => f,
        Err(UsageError(msg)) => return usage_fail(&msg),
    };

    let start = Instant::now();
    let curves = match with_threads(threads, || run_experiment(&configs)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_RUNTIME;
        }
    };
    let wall_time_s = start.elapsed().as_secs_f64();

    let written = match csv_file {
        Some(f) => write_csv(io::BufWriter::new(f), &curves),
        None => write_csv(io::stdout().lock(), &curves),
    };
    if let Err(e) = written {
        eprintln!("error: writing CSV: {e}");
        return EXIT_RUNTIME;
    }

    if let Some(f) = meta_file {
        let labels = column_labels(&configs);
        let bundle = OutputBundle {
            metadata: Metadata {
                tool: env!("CARGO_PKG_NAME").into(),
                version: env!("CARGO_PKG_VERSION").into(),
                wall_time_s,
                threads,
                schemes: configs
                    .iter()
                    .zip(labels)
                    .map(|(c, label)| SchemeMeta {
                        label,
                        config: c.clone(),
                        side_info_bits: c.side_info_bits(),
                    })
                    .collect(),
            },
            curves,
        };
        let mut w = io::BufWriter::new(f);
        if let Err(e) = serde_json::to_writer_pretty(&mut w, &bundle).map_err(io::Error::from).and_then(|_| {
            writeln!(w)?;
            w.flush()
        }) {
            eprintln!("error: writing metadata: {e}");
            return EXIT_RUNTIME;
        }
    }
    EXIT_OK
}

fn usage_fail(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn selftest() -> i32 {
    let checks = crate::selftest::run();
    let mut ok = true;
    for c in &checks {
        if c.passed {
            println!("PASS  {}", c.name);
        } else {
            ok = false;
            println!("FAIL  {}: {}", c.name, c.detail);
        }
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_RUNTIME
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let resolved = match &cli.command {
        Command::Run(args) => resolve_run(args).map(|c| (vec![c], &args.output)),
        Command::Fig5(args) => resolve_preset(args, preset_fig5).map(|c| (c, &args.output)),
        Command::Fig6(args) => resolve_preset(args, preset_fig6).map(|c| (c, &args.output)),
        Command::Fig7(args) => resolve_preset(args, preset_fig7).map(|c| (c, &args.output)),
        Command::Selftest => return selftest(),
    };
    match resolved {
        Ok((configs, output)) => execute(configs, output),
        Err(UsageError(msg)) => usage_fail(&msg),
    }
}
