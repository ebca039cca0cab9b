use crate::algebra::{random_scalar, DenseMatrix, FieldSpec, Scalar, SplitMix64};
use crate::error::{Error, Result};
use crate::graded::sections::splitting_from_h0;
use crate::graded::{BundleSum, SplittingType};

/// A class in `Ext^1(O(d), ⊕ O(a_i)) = ⊕ H^1(O(a_i - d))`, as Čech cocycles
/// on the cover `{s ≠ 0}, {t ≠ 0}`.
///
/// Component `i` is stored densely: `cocycle[i][j]` is the coefficient of
/// `s^(-1-j) t^(a_i-d+1+j)`, for `0 <= j < d - a_i - 1`. These Laurent
/// monomials (both exponents negative) form a basis of `H^1(O(a_i - d))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionClass {
    field: FieldSpec,
    base: Vec<i64>,
    top: i64,
    cocycle: Vec<Vec<Scalar>>,
}

fn h1_dim(c: i64) -> usize {
    (-c - 1).max(0) as usize
}

impl ExtensionClass {
    /// Builds a class from `(u, v, coefficient)` Laurent terms per component.
    pub fn from_terms(
        field: FieldSpec,
        base: Vec<i64>,
        top: i64,
        terms: &[Vec<(i64, i64, Scalar)>],
    ) -> Result<Self> {
        if terms.len() != base.len() {
            return Err(Error::MalformedCocycle(format!(
                "{} components for a base of rank {}",
                terms.len(),
                base.len()
            )));
        }
        let mut cocycle = Vec::with_capacity(base.len());
        for (i, comp) in terms.iter().enumerate() {
            let c = base[i] - top;
            let mut dense = vec![field.zero(); h1_dim(c)];
            for (u, v, x) in comp {
                if *u > -1 || *v > -1 || u + v != c {
                    return Err(Error::MalformedCocycle(format!(
                        "s^{u} t^{v} in component {i}, which needs exponents <= -1 summing to {c}"
                    )));
                }
                if !field.contains(x) {
                    return Err(Error::FieldMismatch(format!("coefficient {x} not in {field}")));
                }
                let j = (-1 - u) as usize;
                dense[j] = field.add(&dense[j], x);
            }
            cocycle.push(dense);
        }
        Ok(ExtensionClass { field, base, top, cocycle })
    }

    /// Builds a class from dense coefficient vectors (layout as in the type docs).
    pub fn from_dense(field: FieldSpec, base: Vec<i64>, top: i64, cocycle: Vec<Vec<Scalar>>) -> Result<Self> {
        if cocycle.len() != base.len() {
            return Err(Error::MalformedCocycle("component count".into()));
        }
        for (i, comp) in cocycle.iter().enumerate() {
            if comp.len() != h1_dim(base[i] - top) {
                return Err(Error::MalformedCocycle(format!(
                    "component {i} has {} coefficients, H^1(O({})) has dimension {}",
                    comp.len(),
                    base[i] - top,
                    h1_dim(base[i] - top)
                )));
            }
        }
        Ok(ExtensionClass { field, base, top, cocycle })
    }

    pub fn zero(field: FieldSpec, base: Vec<i64>, top: i64) -> Self {
        let cocycle = base.iter().map(|a| vec![field.zero(); h1_dim(a - top)]).collect();
        ExtensionClass { field, base, top, cocycle }
    }

    pub fn random(field: FieldSpec, base: Vec<i64>, top: i64, rng: &mut SplitMix64) -> Result<Self> {
        let mut cocycle = Vec::with_capacity(base.len());
        for a in &base {
            cocycle.push((0..h1_dim(a - top)).map(|_| random_scalar(rng, field)).collect::<Result<_>>()?);
        }
        Ok(ExtensionClass { field, base, top, cocycle })
    }

    pub fn base(&self) -> BundleSum {
        BundleSum::new(self.base.clone())
    }

    pub fn base_degrees(&self) -> &[i64] {
        &self.base
    }

    pub fn top_degree(&self) -> i64 {
        self.top
    }

    pub fn cocycle(&self) -> &[Vec<Scalar>] {
        &self.cocycle
    }

    pub fn is_zero(&self) -> bool {
        self.cocycle.iter().flatten().all(Scalar::is_zero)
    }

    /// The connecting map `H^0(O(d + t)) → ⊕ H^1(O(a_i + t))`: multiply each
    /// monomial by the cocycle and keep the terms with both exponents negative.
    pub fn connecting_matrix(&self, t: i64) -> DenseMatrix {
        let cols = (self.top + t + 1).max(0) as usize;
        let row_dims: Vec<usize> = self.base.iter().map(|a| h1_dim(a + t)).collect();
        let rows: usize = row_dims.iter().sum();
        let mut m = DenseMatrix::zeros(self.field, rows, cols);
        let mut off = 0;
        for (i, comp) in self.cocycle.iter().enumerate() {
            for (j, x) in comp.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let u = -1 - j as i64;
                for k in 0..cols as i64 {
                    // s^(d+t-k) t^k · s^u t^v
                    let u2 = self.top + t - k + u;
                    let v2 = self.base[i] + t - u2;
                    if u2 <= -1 && v2 <= -1 {
                        m.add_to(off + (-1 - u2) as usize, k as usize, x);
                    }
                }
            }
            off += row_dims[i];
        }
        m
    }

    /// Splitting type of the middle term `F` of `0 → E → F → O(d) → 0`.
    pub fn extension_splitting(&self) -> Result<SplittingType> {
        let base = self.base();
        let top = base.max_degree().map_or(self.top, |m| m.max(self.top));
        let cap = self.base.iter().map(|a| a.abs()).sum::<i64>() + self.top.abs() + 2;
        splitting_from_h0(self.base.len() + 1, -top - 1, cap, "extension", |t| {
            Ok(base.h0(t) + self.connecting_matrix(t).nullity()?)
        })
    }
}
