//! PAPR reduction for OFDM transmitters.
//!
//! The crate has three layers:
//!
//! - [`signal`]: QPSK mapping, oversampled OFDM synthesis and the PAPR metric.
//! - [`schemes`]: selected mapping (SLM) with Walsh–Hadamard and Golay phase
//!   banks, and ISIS, which searches over reorderings of the symbol frame and
//!   signals the chosen permutation's lexicographic rank as side information.
//! - [`sim`]: a seeded Monte-Carlo harness producing CCDF curves, with presets
//!   for the three standard experiments.
//!
//! [`cli`] holds the argument handling and output writers behind the
//! `paprlab` binary.

pub mod cli;
pub mod error;
pub mod schemes;
pub mod selftest;
pub mod signal;
pub mod sim;

pub use error::{Error, Result};
pub use signal::{map_qpsk, papr, synthesize, PaprValue, SymbolFrame, Synthesizer, TimeDomainFrame};
