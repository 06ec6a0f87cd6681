//! Lexicographic permutation ranking over the factorial number system.
//!
//! Rank `r` of `n` items names row `r` of the sorted table of all `n!`
//! orderings, without materializing the table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` whose `n!` fits in a `u128`.
pub const MAX_RANKABLE_N: usize = 34;

/// `n!`, or `None` if it overflows `u128`.
pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Bits needed to address one of `count` items.
pub fn index_bits(count: u128) -> u32 {
    if count <= 1 {
        0
    } else {
        128 - (count - 1).leading_zeros()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermutationRank {
    rank: u128,
    n: usize,
}

impl PermutationRank {
    pub fn new(rank: u128, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFrame);
        }
        let limit = factorial(n).ok_or(Error::RankOverflow(n))?;
        if rank >= limit {
            return Err(Error::RankOutOfRange { rank, n, limit });
        }
        Ok(Self { rank, n })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    pub fn rank(&self) -> u128 {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// A bijection on `0..n`. Applying it to a slice yields `out[i] = src[mapping[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        if n == 0 {
            return Err(Error::EmptyFrame);
        }
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(Error::NotAPermutation(n));
            }
            seen[m] = true;
        }
        Ok(Self { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        Self { mapping: inv }
    }

    /// Reorders `src`; panics on length mismatch.
    pub fn apply<T: Clone>(&self, src: &[T]) -> Vec<T> {
        assert_eq!(src.len(), self.mapping.len());
        self.mapping.iter().map(|&m| src[m].clone()).collect()
    }
}

/// The lexicographically `rank`-th permutation of `0..n`.
pub fn perm_unrank(r: PermutationRank) -> Permutation {
    let n = r.n;
    let mut pool: Vec<usize> = (0..n).collect();
    let mut rest = r.rank;
    let mut mapping = Vec::with_capacity(n);
    for i in 0..n {
        // (n-1-i)! cannot overflow: n! already fit when the rank was built.
        let radix = factorial(n - 1 - i).expect("bounded by n!");
        let digit = (rest / radix) as usize;
        rest %= radix;
        mapping.push(pool.remove(digit));
    }
    Permutation { mapping }
}

/// Inverse of [`perm_unrank`], through the Lehmer code.
pub fn perm_rank(p: &Permutation) -> Result<PermutationRank> {
    let n = p.len();
    if n > MAX_RANKABLE_N {
        return Err(Error::RankOverflow(n));
    }
    let m = p.mapping();
    let mut rank = 0u128;
    for i in 0..n {
        let smaller_right = m[i + 1..].iter().filter(|&&x| x < m[i]).count() as u128;
        rank += smaller_right * factorial(n - 1 - i).expect("n bounded");
    }
    Ok(PermutationRank { rank, n })
}

/// Advances `items` to the next permutation in lexicographic order.
/// Returns `false` (leaving `items` untouched) when it is already the last one.
pub fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
