//! Phase-rotation banks for selected mapping.

use num_complex::Complex64;

use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-12;

/// Unit-modulus rotation applied element-wise to a symbol frame.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector(Vec<Complex64>);

impl PhaseVector {
    pub fn new(rotations: Vec<Complex64>) -> Result<Self> {
        if rotations.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if let Some(i) = rotations.iter().position(|r| (r.norm() - 1.0).abs() > UNIT_TOL) {
            return Err(Error::NotUnitModulus(i));
        }
        Ok(Self(rotations))
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        Self::new(signs.iter().map(|&s| Complex64::new(s as f64, 0.0)).collect())
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn rotations(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|r| *r == Complex64::new(1.0, 0.0))
    }
}

/// Candidate rotations for SLM; `vectors()[0]` is always the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVectorBank(Vec<PhaseVector>);

impl PhaseVectorBank {
    pub fn new(vectors: Vec<PhaseVector>) -> Result<Self> {
        let first = vectors.first().ok_or(Error::EmptyFrame)?;
        let n = first.len();
        if !first.is_identity() {
            return Err(Error::InvalidConfig(
                "the first phase vector of a bank must be all ones".into(),
            ));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: v.len(),
            });
        }
        Ok(Self(vectors))
    }

    pub fn vectors(&self) -> &[PhaseVector] {
        &self.0
    }

    /// Number of candidates `U`, identity included.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn vector_len(&self) -> usize {
        self.0[0].len()
    }
}

fn check_pow2(what: &'static str, value: usize) -> Result<()> {
    if value.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::NotPowerOfTwo { what, value })
    }
}

/// Order-`n` Sylvester–Hadamard matrix, `H_2k = [[H_k, H_k], [H_k, -H_k]]`.
pub fn sylvester_hadamard(n: usize) -> Result<Vec<Vec<i8>>> {
    check_pow2("Hadamard order", n)?;
    let mut h = vec![vec![1i8]];
    while h.len() < n {
        let top = h.iter().map(|row| [row.as_slice(), row.as_slice()].concat());
        let bottom = h
            .iter()
            .map(|row| row.iter().copied().chain(row.iter().map(|&x| -x)).collect::<Vec<_>>());
        h = top.chain(bottom).collect();
    }
    Ok(h)
}

fn sign_changes(row: &[i8]) -> usize {
    row.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Sylvester–Hadamard rows of order `n` in sequency (Walsh) order: row `s`
/// has exactly `s` sign changes.
///
/// Natural-order row 1 is `(-1)^k`, a linear phase that only circularly
/// shifts the time-domain signal, so it can never lower PAPR. Sequency order
/// moves it to the last row.
pub fn walsh_rows(n: usize) -> Result<Vec<Vec<i8>>> {
    let mut rows = sylvester_hadamard(n)?;
    rows.sort_by_key(|r| sign_changes(r));
    Ok(rows)
}

/// The first `u` Walsh rows of order `n` as an SLM bank.
pub fn gen_walsh_hadamard(u: usize, n: usize) -> Result<PhaseVectorBank> {
    check_pow2("bank size U", u)?;
    check_pow2("sequence length N", n)?;
    if u > n {
        return Err(Error::BankTooLarge { u, n });
    }
    let rows = walsh_rows(n)?;
    let vectors = rows
        .iter()
        .take(u)
        .map(|row| PhaseVector::from_signs(row))
        .collect::<Result<Vec<_>>>()?;
    PhaseVectorBank::new(vectors)
}

/// Golay complementary pair of length `n` from `a' = a‖b`, `b' = a‖(-b)`
/// seeded with `a = b = [1]`.
pub fn golay_pair(n: usize) -> Result<(Vec<i8>, Vec<i8>)> {
    check_pow2("Golay length", n)?;
    let mut a = vec![1i8];
    let mut b = vec![1i8];
    while a.len() < n {
        let next_a = [a.as_slice(), b.as_slice()].concat();
        let next_b: Vec<i8> = a.iter().copied().chain(b.iter().map(|&x| -x)).collect();
        a = next_a;
        b = next_b;
    }
    Ok((a, b))
}

/// Two-vector bank: identity plus the `a` member of the Golay pair.
pub fn gen_golay(n: usize) -> Result<PhaseVectorBank> {
    let (a, _) = golay_pair(n)?;
    PhaseVectorBank::new(vec![PhaseVector::ones(n), PhaseVector::from_signs(&a)?])
}

/// `C(k) = Σ_i s[i]·s[i+k]` for `k = 0..len`.
pub fn aperiodic_autocorrelation(seq: &[i8]) -> Vec<i64> {
    (0..seq.len())
        .map(|k| {
            seq.iter()
                .zip(&seq[k..])
                .map(|(&x, &y)| x as i64 * y as i64)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signs(bank: &PhaseVectorBank) -> Vec<Vec<i8>> {
        bank.vectors()
            .iter()
            .map(|v| v.rotations().iter().map(|r| r.re as i8).collect())
            .collect()
    }

    #[test]
    fn walsh_order_two() {
        let bank = gen_walsh_hadamard(2, 2).unwrap();
        assert_eq!(signs(&bank), vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn walsh_single_vector_is_identity() {
        let bank = gen_walsh_hadamard(1, 8).unwrap();
        assert_eq!(bank.size(), 1);
        assert!(bank.vectors()[0].is_identity());
    }

    #[test]
    fn sylvester_order_eight_by_hand() {
        // H2 = [[1,1],[1,-1]]; H4 = [[H2,H2],[H2,-H2]]; H8 = [[H4,H4],[H4,-H4]].
        let h4 = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]];
        let mut h8: Vec<Vec<i8>> = h4.iter().map(|r| [r.as_slice(), r.as_slice()].concat()).collect();
        h8.extend(h4.iter().map(|r| r.iter().copied().chain(r.iter().map(|&x| -x)).collect::<Vec<i8>>()));
        assert_eq!(sylvester_hadamard(8).unwrap(), h8);
    }

    #[test]
    fn walsh_first_four_rows_of_order_eight() {
        // Rows of the hand-expanded H8 with 0, 1, 2 and 3 sign changes.
        let expected = vec![
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, -1, -1, -1, -1],
            vec![1, 1, -1, -1, -1, -1, 1, 1],
            vec![1, 1, -1, -1, 1, 1, -1, -1],
        ];
        let h8 = sylvester_hadamard(8).unwrap();
        assert!(expected.iter().all(|r| h8.contains(r)));
        assert_eq!(signs(&gen_walsh_hadamard(4, 8).unwrap()), expected);
    }

    #[test]
    fn walsh_rows_are_sequency_ordered() {
        for n in [1, 2, 4, 8, 16, 64] {
            let rows = walsh_rows(n).unwrap();
            for (s, row) in rows.iter().enumerate() {
                assert_eq!(sign_changes(row), s);
            }
            let mut natural = sylvester_hadamard(n).unwrap();
            let mut sorted = rows.clone();
            natural.sort();
            sorted.sort();
            assert_eq!(natural, sorted);
        }
    }

    #[test]
    fn walsh_rejects_bad_sizes() {
        assert!(matches!(gen_walsh_hadamard(3, 8), Err(Error::NotPowerOfTwo { value: 3, .. })));
        assert!(matches!(gen_walsh_hadamard(2, 6), Err(Error::NotPowerOfTwo { value: 6, .. })));
        assert_eq!(gen_walsh_hadamard(16, 8).unwrap_err(), Error::BankTooLarge { u: 16, n: 8 });
    }

    #[test]
    fn walsh_rows_are_orthogonal() {
        for n in [1, 2, 4, 8, 16, 32] {
            let h = sylvester_hadamard(n).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let dot: i64 = h[i].iter().zip(&h[j]).map(|(&a, &b)| (a * b) as i64).sum();
                    assert_eq!(dot, if i == j { n as i64 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn golay_base_cases() {
        assert_eq!(golay_pair(1).unwrap(), (vec![1], vec![1]));
        assert_eq!(golay_pair(2).unwrap().0, vec![1, 1]);
        let bank = gen_golay(2).unwrap();
        assert_eq!(signs(&bank), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn golay_length_eight_by_hand() {
        let (a, b) = golay_pair(8).unwrap();
        assert_eq!(a, vec![1, 1, 1, -1, 1, 1, -1, 1]);
        assert_eq!(b, vec![1, 1, 1, -1, -1, -1, 1, -1]);
    }

    #[test]
    fn golay_complementary_autocorrelation() {
        for n in [2, 4, 8, 16, 32, 64] {
            let (a, b) = golay_pair(n).unwrap();
            let ca = aperiodic_autocorrelation(&a);
            let cb = aperiodic_autocorrelation(&b);
            assert_eq!(ca[0] + cb[0], 2 * n as i64);
            for k in 1..n {
                assert_eq!(ca[k] + cb[k], 0, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn golay_rejects_non_power_of_two() {
        assert!(matches!(gen_golay(12), Err(Error::NotPowerOfTwo { value: 12, .. })));
    }

    #[test]
    fn bank_requires_identity_first() {
        let v = PhaseVector::from_signs(&[1, -1]).unwrap();
        assert!(PhaseVectorBank::new(vec![v]).is_err());
        assert!(PhaseVectorBank::new(vec![]).is_err());
    }

    #[test]
    fn phase_vector_rejects_non_unit_entries() {
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)];
        assert_eq!(PhaseVector::new(v), Err(Error::NotUnitModulus(1)));
    }
}
