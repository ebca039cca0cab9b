use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{random_scalar, FieldSpec, SplitMix64};
use crate::error::{Error, Result};
use crate::forms::MultiForm;
use crate::graded::SplittingType;
use crate::rnc::{ci_normal_map, HypersurfaceCombo, RncModel};

/// Label attached to every report: results over `F_p` are evidence in that
/// characteristic only.
pub const EVIDENCE_NOTE: &str = "characteristic-p evidence; no characteristic-0 claim";

/// One observed splitting type and how often it occurred.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingCount {
    #[serde(rename = "type")]
    pub splitting: SplittingType,
    pub count: usize,
}

/// Outcome of sampling `k` random quadrics through `R_n ⊂ P^n`.
///
/// `balanced + unbalanced + smooth_failures = trials`, where the unbalanced
/// count is the remainder of `splittings`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub k: usize,
    pub n: usize,
    pub char: u64,
    pub trials: usize,
    pub balanced: usize,
    pub splittings: Vec<SplittingCount>,
    pub smooth_failures: usize,
    pub seed: String,
    pub evidence: String,
    pub fano: bool,
}

impl ScanReport {
    pub fn unbalanced(&self) -> usize {
        self.splittings.iter().map(|s| s.count).sum::<usize>() - self.balanced
    }
}

enum Trial {
    Singular,
    Kernel(SplittingType),
}

/// `k` quadrics `Σ a_{i,j} q_{i,j}` with independent uniform scalar coefficients.
pub fn random_quadric_system(field: FieldSpec, model: &RncModel, k: usize, rng: &mut SplitMix64) -> Result<Vec<HypersurfaceCombo>> {
    let nv = model.num_vars();
    (0..k)
        .map(|_| {
            let mut h = HypersurfaceCombo::new(field, nv, 2)?;
            for j in 2..=model.e {
                for i in 1..j {
                    h.add_quadric(i, j, MultiForm::constant(field, nv, random_scalar(rng, field)?))?;
                }
            }
            Ok(h)
        })
        .collect()
}

fn run_trial(field: FieldSpec, model: &RncModel, k: usize, rng: &mut SplitMix64) -> Result<Trial> {
    let hs = random_quadric_system(field, model, k, rng)?;
    let map = ci_normal_map(field, &hs, model)?;
    if !map.surjective_everywhere() {
        return Ok(Trial::Singular);
    }
    Ok(Trial::Kernel(map.kernel_splitting()?))
}

/// Samples `trials` systems of `k` random quadrics containing `R_n` and
/// records the splitting of `N_{R_n/X}` for those smooth along the curve.
///
/// Trial `i` draws from `SplitMix64::derive(seed, i)`, so the report does not
/// depend on scheduling. Non-Fano parameters are scanned and labelled.
pub fn conjecture_scan(field: FieldSpec, k: usize, n: usize, trials: usize, seed: u64) -> Result<ScanReport> {
    if !field.is_prime() {
        return Err(Error::RationalField);
    }
    if k == 0 || k + 2 > n {
        return Err(Error::OutOfRange(format!("{k} quadrics in P^{n}: need 1 <= k <= n - 2")));
    }
    let model = RncModel::new(n, n)?;
    let outcomes: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(field, &model, k, &mut SplitMix64::derive(seed, i as u64)))
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<SplittingType, usize> = BTreeMap::new();
    let mut smooth_failures = 0;
    for o in outcomes {
        match o {
            Trial::Singular => smooth_failures += 1,
            Trial::Kernel(s) => *counts.entry(s).or_default() += 1,
        }
    }
    let balanced = counts.iter().filter(|(s, _)| s.is_balanced()).map(|(_, c)| c).sum();
    Ok(ScanReport {
        k,
        n,
        char: field.characteristic(),
        trials,
        balanced,
        splittings: counts.into_iter().map(|(splitting, count)| SplittingCount { splitting, count }).collect(),
        smooth_failures,
        seed: seed.to_string(),
        evidence: EVIDENCE_NOTE.to_string(),
        fano: 2 * k <= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::BundleSum;

    #[test]
    fn single_quadric_scan() {
        let f = FieldSpec::prime(2_147_483_647).unwrap();
        let r = conjecture_scan(f, 1, 6, 4, 7).unwrap();
        assert_eq!(r.balanced, 4);
        assert_eq!(r.splittings, vec![SplittingCount { splitting: BundleSum::uniform(7, 4), count: 4 }]);
        assert_eq!(r.unbalanced() + r.smooth_failures + r.balanced, r.trials);
    }

    #[test]
    fn scan_is_reproducible_and_guarded() {
        let f = FieldSpec::prime(2_147_483_647).unwrap();
        assert_eq!(conjecture_scan(f, 2, 7, 3, 11).unwrap(), conjecture_scan(f, 2, 7, 3, 11).unwrap());
        assert!(conjecture_scan(f, 3, 4, 1, 0).is_err());
        assert!(conjecture_scan(FieldSpec::Rational, 1, 4, 1, 0).is_err());
        assert!(!conjecture_scan(f, 3, 5, 1, 0).unwrap().fano);
    }
}
