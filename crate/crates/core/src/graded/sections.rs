use crate::error::{Error, Result};
use crate::graded::SplittingType;

/// Recovers a splitting type from `k(t) = h^0(E(t))`.
///
/// `k(t0)` must be zero (every summand is below `-t0`). With
/// `g(t) = k(t) - k(t-1) = #{i : c_i >= -t}`, each increase of `g` at twist
/// `t` contributes summands of degree `-t`; the scan stops once `g = rank`.
/// The result must reproduce every measured `k(t)`.
pub(crate) fn splitting_from_h0(
    rank: usize,
    t0: i64,
    cap: i64,
    what: &str,
    mut h0: impl FnMut(i64) -> Result<usize>,
) -> Result<SplittingType> {
    if rank == 0 {
        return Ok(SplittingType::default());
    }
    let k0 = h0(t0)?;
    if k0 != 0 {
        return Err(Error::Inconsistent(format!(
            "{what}: h0 at starting twist {t0} is {k0}, expected 0"
        )));
    }
    let mut measured = vec![(t0, 0usize)];
    let mut degrees = Vec::with_capacity(rank);
    let (mut k_prev, mut g_prev) = (0usize, 0usize);
    let mut t = t0;
    while g_prev < rank {
        t += 1;
        if t - t0 > cap {
            return Err(Error::TwistCapExceeded { cap, what: what.to_string() });
        }
        let k = h0(t)?;
        let g = k.checked_sub(k_prev).ok_or_else(|| {
            Error::Inconsistent(format!("{what}: h0 decreased from {k_prev} to {k} at twist {t}"))
        })?;
        if g < g_prev || g > rank {
            return Err(Error::Inconsistent(format!(
                "{what}: section growth {g} at twist {t} after {g_prev}, rank {rank}"
            )));
        }
        degrees.extend(std::iter::repeat(-t).take(g - g_prev));
        measured.push((t, k));
        k_prev = k;
        g_prev = g;
    }
    let result = SplittingType::new(degrees);
    for &(t, k) in &measured {
        if result.h0(t) != k {
            return Err(Error::Inconsistent(format!(
                "{what}: {result} predicts h0 = {} at twist {t}, measured {k}",
                result.h0(t)
            )));
        }
    }
    Ok(result)
}
