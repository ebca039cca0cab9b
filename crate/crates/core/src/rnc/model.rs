use crate::algebra::FieldSpec;
use crate::error::{Error, Result};
use crate::forms::BiForm;
use crate::graded::SplittingType;

/// The rational normal curve `R_e = [s^e : s^(e-1) t : … : t^e : 0 : … : 0]` in P^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RncModel {
    pub e: usize,
    pub n: usize,
}

impl RncModel {
    pub fn new(e: usize, n: usize) -> Result<Self> {
        if e == 0 || e > n {
            return Err(Error::InvalidArgument(format!("need 1 <= e <= n, got e = {e}, n = {n}")));
        }
        Ok(RncModel { e, n })
    }

    pub fn num_vars(&self) -> usize {
        self.n + 1
    }

    /// The `n + 1` coordinate forms of the parametrization.
    pub fn parametrization(&self, field: FieldSpec) -> Vec<BiForm> {
        let e = self.e as i64;
        (0..=self.n as i64)
            .map(|i| if i <= e { BiForm::st(field, e - i, i) } else { BiForm::zero(field, e) })
            .collect()
    }

    /// Ordered source degrees of the normal bundle: the `b_{l,l+1}` directions
    /// (degree `e + 2`) followed by `x_{e+1}, …, x_n` (degree `e`).
    pub fn normal_source(&self) -> Vec<i64> {
        let e = self.e as i64;
        let mut v = vec![e + 2; self.e - 1];
        v.extend(std::iter::repeat(e).take(self.n - self.e));
        v
    }
}

/// `N_{R_e/P^n} = O(e+2)^(e-1) ⊕ O(e)^(n-e)`.
pub fn standard_normal_splitting(e: usize, n: usize) -> Result<SplittingType> {
    Ok(SplittingType::new(RncModel::new(e, n)?.normal_source()))
}

/// One term `s^s_exp t^t_exp · b_{b, b+1}` of an expansion in the free basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaTerm {
    pub s_exp: usize,
    pub t_exp: usize,
    pub b: usize,
}

/// `α(q_{i,k}) = Σ_{l=i}^{k-1} s^(n-k-i+l) t^(k+i-l-2) b_{l,l+1}` on `R_n`.
pub fn alpha_image(i: usize, k: usize, n: usize) -> Result<Vec<AlphaTerm>> {
    if !(1 <= i && i < k && k <= n) {
        return Err(Error::OutOfRange(format!("alpha(q[{i},{k}]) needs 1 <= i < k <= {n}")));
    }
    Ok((i..k)
        .map(|l| AlphaTerm { s_exp: n + l - k - i, t_exp: k + i - l - 2, b: l })
        .collect())
}
