use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graded::{BundleSum, SplittingType};

fn check_degrees(n: usize, degrees: &[i64]) -> Result<i64> {
    if let Some(d) = degrees.iter().find(|&&d| d < 1) {
        return Err(Error::InvalidArgument(format!("hypersurface degree {d} < 1")));
    }
    let d = degrees.iter().sum::<i64>();
    if d > n as i64 {
        return Err(Error::OutOfRange(format!("degree {d} exceeds n = {n}: not Fano")));
    }
    Ok(d)
}

/// A complete intersection of the given type in `P^n` is Fano iff `Σ d_i <= n`.
pub fn fano_check(n: usize, degrees: &[i64]) -> bool {
    degrees.iter().sum::<i64>() <= n as i64
}

/// The balanced bundle of rank `n - k - 1` and degree `e(n - d + 1) - 2`, the
/// only balanced candidate for `N_{R_e/X}`.
pub fn expected_balanced(n: usize, degrees: &[i64], e: usize) -> Result<SplittingType> {
    let d = check_degrees(n, degrees)?;
    let rank = n as i64 - degrees.len() as i64 - 1;
    if rank <= 0 {
        return Err(Error::OutOfRange(format!("normal bundle rank {rank} for {} hypersurfaces in P^{n}", degrees.len())));
    }
    BundleSum::balanced(rank as usize, e as i64 * (n as i64 - d + 1) - 2)
}

/// Least `m` with `m(n - d + 1) >= n - k + 1`: the smallest degree of a very
/// free rational curve produced on a Fano complete intersection.
pub fn very_free_min_degree(n: usize, degrees: &[i64]) -> Result<i64> {
    let d = check_degrees(n, degrees)?;
    let k = degrees.len() as i64;
    Ok(Integer::div_ceil(&(n as i64 - k + 1), &(n as i64 - d + 1)))
}

/// `⌈(n(n - 2j - d' + 1) - 2)/(n - j - 2)⌉ <= ⌊(n(n - 2j + 1) - 2)/(n - j - 1)⌋ - 1`,
/// with `j` quadrics followed by a hypersurface of degree `d'`.
pub fn induction_inequality(n: usize, j: usize, d_next: i64) -> Result<bool> {
    let (n, j) = (n as i64, j as i64);
    if n - j - 2 <= 0 {
        return Err(Error::OutOfRange(format!("n - j - 2 = {} must be positive", n - j - 2)));
    }
    let lhs = Integer::div_ceil(&(n * (n - 2 * j - d_next + 1) - 2), &(n - j - 2));
    let rhs = Integer::div_floor(&(n * (n - 2 * j + 1) - 2), &(n - j - 1)) - 1;
    Ok(lhs <= rhs)
}
