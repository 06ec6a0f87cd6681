//! PAPR-reduction schemes and their receiver-side inverses.

pub mod isis;
pub mod perm;
pub mod phase;
pub mod slm;

pub use isis::{
    isis_recover_direct, isis_recover_paper, isis_select_exhaustive,
    isis_select_exhaustive_with_budget, isis_select_sampled, sampled_candidate_ranks,
    DEFAULT_EXHAUSTIVE_MAX_N, PAPER_RECOVERY_MAX_N,
};
pub use perm::{perm_rank, perm_unrank, Permutation, PermutationRank};
pub use phase::{gen_golay, gen_walsh_hadamard, PhaseVector, PhaseVectorBank};
pub use slm::{slm_recover, slm_select};

use crate::signal::{PaprValue, SymbolFrame};

/// What the receiver needs to undo a selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideInfo {
    /// Index into the SLM phase-vector bank.
    PhaseIndex(usize),
    /// Lexicographic rank of the applied permutation.
    Rank(PermutationRank),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionResult {
    pub chosen: SymbolFrame,
    pub side_info: SideInfo,
    pub papr: PaprValue,
    pub candidates_evaluated: u64,
    /// Size of the side information: `ceil(log2 U)` for SLM, `ceil(log2 N!)` for ISIS.
    pub side_info_bits: u32,
}

impl SelectionResult {
    pub fn phase_index(&self) -> Option<usize> {
        match self.side_info {
            SideInfo::PhaseIndex(i) => Some(i),
            SideInfo::Rank(_) => None,
        }
    }

    pub fn rank(&self) -> Option<PermutationRank> {
        match self.side_info {
            SideInfo::Rank(r) => Some(r),
            SideInfo::PhaseIndex(_) => None,
        }
    }
}
