//! Quick invariant checks behind `paprlab selftest`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::schemes::perm::factorial;
use crate::schemes::phase::{aperiodic_autocorrelation, golay_pair, sylvester_hadamard};
use crate::schemes::{
    gen_walsh_hadamard, isis_recover_direct, isis_recover_paper, isis_select_exhaustive,
    isis_select_sampled, perm_rank, perm_unrank, slm_recover, slm_select, PermutationRank,
};
use crate::signal::{papr, synthesize, SymbolFrame};
use crate::sim::gen_random_frame;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: std::result::Result<(), String>) -> Check {
    match outcome {
        Ok(()) => Check {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn perm_bijection() -> std::result::Result<(), String> {
    for n in 1..=6 {
        let total = factorial(n).unwrap();
        let mut seen = std::collections::HashSet::new();
        for r in 0..total {
            let rank = PermutationRank::new(r, n).map_err(|e| e.to_string())?;
            let p = perm_unrank(rank);
            if perm_rank(&p).map_err(|e| e.to_string())? != rank {
                return Err(format!("rank {r} of n={n} does not round-trip"));
            }
            if !seen.insert(p.mapping().to_vec()) {
                return Err(format!("rank {r} of n={n} repeats a permutation"));
            }
        }
    }
    Ok(())
}

fn walsh_orthogonal() -> std::result::Result<(), String> {
    for n in [2, 4, 8, 16] {
        let h = sylvester_hadamard(n).map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in (i + 1)..n {
                let dot: i64 = h[i].iter().zip(&h[j]).map(|(&a, &b)| (a * b) as i64).sum();
                if dot != 0 {
                    return Err(format!("rows {i},{j} of H{n} have dot {dot}"));
                }
            }
        }
    }
    Ok(())
}

fn golay_complementary() -> std::result::Result<(), String> {
    for n in [2, 4, 8, 16] {
        let (a, b) = golay_pair(n).map_err(|e| e.to_string())?;
        let (ca, cb) = (aperiodic_autocorrelation(&a), aperiodic_autocorrelation(&b));
        for k in 0..n {
            let want = if k == 0 { 2 * n as i64 } else { 0 };
            if ca[k] + cb[k] != want {
                return Err(format!("N={n} shift {k}: {} != {want}", ca[k] + cb[k]));
            }
        }
    }
    Ok(())
}

fn parseval() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let n = rng.gen_range(1..=16);
        let l = rng.gen_range(1..=4);
        let f = SymbolFrame::new(
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )
        .unwrap();
        let t = synthesize(&f, l).map_err(|e| e.to_string())?;
        let want = l as f64 * f.energy();
        if (t.energy() - want).abs() > 1e-9 * want {
            return Err(format!("frame {i}: {} vs {want}", t.energy()));
        }
    }
    Ok(())
}

fn roundtrips() -> std::result::Result<(), String> {
    let bank = gen_walsh_hadamard(8, 8).map_err(|e| e.to_string())?;
    for i in 0..100 {
        let f = gen_random_frame(8, 7, i);
        let s = slm_select(&f, &bank, 2).map_err(|e| e.to_string())?;
        let back = slm_recover(&s.chosen, s.phase_index().unwrap(), &bank).map_err(|e| e.to_string())?;
        if back.symbols().iter().zip(f.symbols()).any(|(a, b)| (a - b).norm() > 1e-12) {
            return Err(format!("SLM roundtrip failed on frame {i}"));
        }
        let r = isis_select_sampled(&f, 200, i, 2).map_err(|e| e.to_string())?;
        if isis_recover_direct(&r.chosen, r.rank().unwrap()).map_err(|e| e.to_string())? != f {
            return Err(format!("ISIS roundtrip failed on frame {i}"));
        }
    }
    Ok(())
}

fn recovery_agreement() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..100 {
        let n = rng.gen_range(1..=5);
        let f = SymbolFrame::new((0..n).map(|k| Complex64::new(k as f64, rng.gen())).collect()).unwrap();
        let s = PermutationRank::new(rng.gen_range(0..factorial(n).unwrap()), n).unwrap();
        let a = isis_recover_direct(&f, s).map_err(|e| e.to_string())?;
        let b = isis_recover_paper(&f, s).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("case {i}: receivers disagree"));
        }
    }
    Ok(())
}

fn dominance() -> std::result::Result<(), String> {
    for i in 0..50 {
        let f = gen_random_frame(6, 3, i);
        let base = papr(&synthesize(&f, 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let sampled = isis_select_sampled(&f, 40, i, 2).map_err(|e| e.to_string())?;
        let exhaustive = isis_select_exhaustive(&f, 2).map_err(|e| e.to_string())?;
        if !(exhaustive.papr.linear <= sampled.papr.linear && sampled.papr.linear <= base.linear) {
            return Err(format!("frame {i}: ordering violated"));
        }
    }
    Ok(())
}

pub fn run() -> Vec<Check> {
    vec![
        check("permutation rank/unrank bijection (n <= 6)", perm_bijection()),
        check("Walsh-Hadamard row orthogonality", walsh_orthogonal()),
        check("Golay complementary autocorrelation", golay_complementary()),
        check("Parseval energy identity", parseval()),
        check("SLM and ISIS recovery roundtrips", roundtrips()),
        check("direct and table-matching receivers agree", recovery_agreement()),
        check("exhaustive <= sampled <= baseline", dominance()),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_checks_pass() {
        for c in super::run() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
