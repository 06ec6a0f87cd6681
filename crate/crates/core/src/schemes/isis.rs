//! Iterative selection of input sequences (ISIS).
//!
//! The transmitter tries reorderings of the symbol frame and sends the one
//! with the lowest PAPR. The side information is the lexicographic rank of
//! the applied permutation; the receiver undoes it.

use std::collections::HashSet;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::{factorial, index_bits, next_permutation, perm_unrank, PermutationRank};
use super::{SelectionResult, SideInfo};
use crate::error::{Error, Result};
use crate::signal::{PaprValue, SymbolFrame, Synthesizer};

/// Exhaustive search refuses frames longer than this (10! ≈ 3.6M candidates).
pub const DEFAULT_EXHAUSTIVE_MAX_N: usize = 10;

/// The table-matching receiver is quadratic in `N!`.
pub const PAPER_RECOVERY_MAX_N: usize = 6;

/// Running minimum with lowest-rank tie-break.
struct Best {
    rank: u128,
    papr: PaprValue,
}

impl Best {
    fn offer(slot: &mut Option<Best>, rank: u128, papr: PaprValue) {
        let better = match slot {
            None => true,
            Some(b) => papr.linear < b.papr.linear || (papr.linear == b.papr.linear && rank < b.rank),
        };
        if better {
            *slot = Some(Best { rank, papr });
        }
    }
}

fn finish(frame: &SymbolFrame, best: Best, evaluated: u64) -> Result<SelectionResult> {
    let n = frame.len();
    let rank = PermutationRank::new(best.rank, n)?;
    let chosen = perm_unrank(rank).apply(frame.symbols());
    Ok(SelectionResult {
        chosen: SymbolFrame::new(chosen)?,
        side_info: SideInfo::Rank(rank),
        papr: best.papr,
        candidates_evaluated: evaluated,
        side_info_bits: index_bits(factorial(n).expect("rank constructed")),
    })
}

/// Full search over all `N!` orderings with the default size budget.
pub fn isis_select_exhaustive(frame: &SymbolFrame, oversample: usize) -> Result<SelectionResult> {
    isis_select_exhaustive_with_budget(frame, oversample, DEFAULT_EXHAUSTIVE_MAX_N)
}

pub fn isis_select_exhaustive_with_budget(
    frame: &SymbolFrame,
    oversample: usize,
    max_n: usize,
) -> Result<SelectionResult> {
    let n = frame.len();
    if n > max_n {
        return Err(Error::OverBudget { n, max: max_n });
    }
    let synth = Synthesizer::new(n, oversample)?;
    let mut scratch = vec![Complex64::new(0.0, 0.0); synth.grid_len()];
    let mut order: Vec<usize> = (0..n).collect();
    let mut reordered = frame.symbols().to_vec();
    let mut best = None;
    let mut rank = 0u128;
    loop {
        for (dst, &src) in reordered.iter_mut().zip(&order) {
            *dst = frame.symbols()[src];
        }
        let p = synth.papr_of(&reordered, &mut scratch)?;
        Best::offer(&mut best, rank, p);
        rank += 1;
        if !next_permutation(&mut order) {
            break;
        }
    }
    finish(frame, best.expect("at least one candidate"), rank as u64)
}

/// The candidate ranks used by [`isis_select_sampled`]: rank 0 followed by
/// distinct non-identity ranks drawn uniformly in generator order, `min(K, N!)`
/// in total. The list for `K` is a prefix of the list for any `K' > K`.
pub fn sampled_candidate_ranks(n: usize, k: usize, seed: u64) -> Result<Vec<u128>> {
    if k == 0 {
        return Err(Error::ZeroCandidates);
    }
    if n == 0 {
        return Err(Error::EmptyFrame);
    }
    let total = factorial(n).ok_or(Error::RankOverflow(n))?;
    if k as u128 >= total {
        return Ok((0..total).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(k);
    seen.insert(0u128);
    let mut ranks = Vec::with_capacity(k);
    ranks.push(0u128);
    while ranks.len() < k {
        let r = rng.gen_range(1..total);
        if seen.insert(r) {
            ranks.push(r);
        }
    }
    Ok(ranks)
}

/// Search over the identity plus `K - 1` seeded random orderings.
pub fn isis_select_sampled(frame: &SymbolFrame, k: usize, seed: u64, oversample: usize) -> Result<SelectionResult> {
    let n = frame.len();
    let ranks = sampled_candidate_ranks(n, k, seed)?;
    let synth = Synthesizer::new(n, oversample)?;
    let mut scratch = vec![Complex64::new(0.0, 0.0); synth.grid_len()];
    let mut best = None;
    for &r in &ranks {
        let reordered = perm_unrank(PermutationRank::new(r, n)?).apply(frame.symbols());
        let p = synth.papr_of(&reordered, &mut scratch)?;
        Best::offer(&mut best, r, p);
    }
    finish(frame, best.expect("at least one candidate"), ranks.len() as u64)
}

fn check_rank_len(received: &SymbolFrame, side_info: PermutationRank) -> Result<()> {
    if side_info.n() != received.len() {
        return Err(Error::LengthMismatch {
            expected: received.len(),
            actual: side_info.n(),
        });
    }
    Ok(())
}

/// Applies the inverse permutation of `side_info` to the received order.
pub fn isis_recover_direct(received: &SymbolFrame, side_info: PermutationRank) -> Result<SymbolFrame> {
    check_rank_len(received, side_info)?;
    let inverse = perm_unrank(side_info).inverse();
    SymbolFrame::new(inverse.apply(received.symbols()))
}

/// Table-matching receiver: walk every ordering `X` of the received frame and
/// return the first whose own permutation table holds the received frame at
/// row `side_info`.
///
/// Only defined for distinct symbols; with repeats the first match in
/// lexicographic order is returned.
pub fn isis_recover_paper(received: &SymbolFrame, side_info: PermutationRank) -> Result<SymbolFrame> {
    check_rank_len(received, side_info)?;
    let n = received.len();
    if n > PAPER_RECOVERY_MAX_N {
        return Err(Error::OverBudget {
            n,
            max: PAPER_RECOVERY_MAX_N,
        });
    }
    let row = perm_unrank(side_info);
    let rx = received.symbols();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let candidate: Vec<Complex64> = order.iter().map(|&i| rx[i]).collect();
        if row.apply(&candidate) == rx {
            return SymbolFrame::new(candidate);
        }
        if !next_permutation(&mut order) {
            return Err(Error::NoMatch(side_info.rank()));
        }
    }
}
