//! Selected mapping: rotate the frame by each bank vector, keep the lowest PAPR.

use num_complex::Complex64;

use super::perm::index_bits;
use super::phase::PhaseVectorBank;
use super::{SelectionResult, SideInfo};
use crate::error::{Error, Result};
use crate::signal::{PaprValue, SymbolFrame, Synthesizer};

fn check_len(frame: &SymbolFrame, bank: &PhaseVectorBank) -> Result<()> {
    if bank.vector_len() != frame.len() {
        return Err(Error::LengthMismatch {
            expected: frame.len(),
            actual: bank.vector_len(),
        });
    }
    Ok(())
}

/// Evaluates all `U` rotations; ties go to the lowest bank index.
pub fn slm_select(frame: &SymbolFrame, bank: &PhaseVectorBank, oversample: usize) -> Result<SelectionResult> {
    check_len(frame, bank)?;
    let synth = Synthesizer::new(frame.len(), oversample)?;
    let mut scratch = vec![Complex64::new(0.0, 0.0); synth.grid_len()];
    let mut rotated = vec![Complex64::new(0.0, 0.0); frame.len()];
    let mut best: Option<(usize, PaprValue)> = None;
    for (i, v) in bank.vectors().iter().enumerate() {
        for ((out, x), r) in rotated.iter_mut().zip(frame.symbols()).zip(v.rotations()) {
            *out = x * r;
        }
        let p = synth.papr_of(&rotated, &mut scratch)?;
        if best.is_none_or(|(_, b)| p.linear < b.linear) {
            best = Some((i, p));
        }
    }
    let (index, papr) = best.expect("bank is never empty");
    let chosen: Vec<Complex64> = frame
        .symbols()
        .iter()
        .zip(bank.vectors()[index].rotations())
        .map(|(x, r)| x * r)
        .collect();
    Ok(SelectionResult {
        chosen: SymbolFrame::new(chosen)?,
        side_info: SideInfo::PhaseIndex(index),
        papr,
        candidates_evaluated: bank.size() as u64,
        side_info_bits: index_bits(bank.size() as u128),
    })
}

/// Undoes the rotation with the conjugate of `bank[side_info]`.
pub fn slm_recover(received: &SymbolFrame, side_info: usize, bank: &PhaseVectorBank) -> Result<SymbolFrame> {
    check_len(received, bank)?;
    let v = bank.vectors().get(side_info).ok_or(Error::IndexOutOfRange {
        index: side_info,
        size: bank.size(),
    })?;
    SymbolFrame::new(
        received
            .symbols()
            .iter()
            .zip(v.rotations())
            .map(|(y, r)| y * r.conj())
            .collect(),
    )
}
