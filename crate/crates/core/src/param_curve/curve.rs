use itertools::Itertools;

use crate::algebra::{FieldSpec, SplitMix64};
use crate::error::{Error, Result};
use crate::forms::{gcd_set, BiForm};
use crate::graded::{random_form, GradedMap, SplittingType};
use crate::rnc::RncModel;

/// Draws allowed when sampling a general curve.
pub const RESAMPLE_CAP: usize = 32;

/// A morphism `P^1 → P^n` given by `n + 1` forms of a common degree `e`
/// without common zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCurve {
    field: FieldSpec,
    components: Vec<BiForm>,
}

impl ParamCurve {
    pub fn new(field: FieldSpec, components: Vec<BiForm>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidArgument("a curve in P^n needs n + 1 >= 2 components".into()));
        }
        let e = components[0].degree();
        if e < 1 {
            return Err(Error::InvalidArgument(format!("curve degree {e} < 1")));
        }
        if let Some(bad) = components.iter().find(|c| c.degree() != e) {
            return Err(Error::DegreeMismatch(format!("components of degrees {e} and {}", bad.degree())));
        }
        if components.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch(format!("components not over {field}")));
        }
        let g = gcd_set(&components)?;
        if !g.is_nonzero_constant() {
            return Err(Error::InvalidArgument(format!("base points along {g}")));
        }
        Ok(ParamCurve { field, components })
    }

    /// The standard rational normal curve of degree `e` in `P^n`.
    pub fn rnc(field: FieldSpec, e: usize, n: usize) -> Result<Self> {
        Self::new(field, RncModel::new(e, n)?.parametrization(field))
    }

    /// A random base-point-free, unramified curve of degree `e` in `P^n`.
    pub fn random(field: FieldSpec, n: usize, e: usize, rng: &mut SplitMix64) -> Result<Self> {
        for _ in 0..RESAMPLE_CAP {
            let comps = (0..=n).map(|_| random_form(field, e as i64, rng)).collect::<Result<Vec<_>>>()?;
            if let Ok(c) = Self::new(field, comps) {
                if c.is_immersion() {
                    return Ok(c);
                }
            }
        }
        Err(Error::NoSolution(format!("no unramified degree-{e} curve in P^{n} after {RESAMPLE_CAP} draws")))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> i64 {
        self.components[0].degree()
    }

    pub fn components(&self) -> &[BiForm] {
        &self.components
    }

    /// The `2 × (n+1)` Jacobian rows `(∂f_j/∂s)_j` and `(∂f_j/∂t)_j`.
    pub fn jacobian(&self) -> [Vec<BiForm>; 2] {
        [
            self.components.iter().map(BiForm::d_ds).collect(),
            self.components.iter().map(BiForm::d_dt).collect(),
        ]
    }

    /// The Jacobian has rank 2 at every point of P^1.
    pub fn is_immersion(&self) -> bool {
        let [ds, dt] = self.jacobian();
        let minors: Vec<BiForm> = (0..ds.len())
            .tuple_combinations()
            .map(|(i, j)| &(&ds[i] * &dt[j]) - &(&ds[j] * &dt[i]))
            .collect();
        gcd_set(&minors).is_ok_and(|g| g.is_nonzero_constant())
    }

    /// `N_{C/P^n}` as the cokernel of `O(1)^2 → O(e)^(n+1)`, computed by
    /// dualizing: the kernel of `O^(n+1) → O(e-1)^2` is `N^*(e)`.
    pub fn normal_via_jacobian(&self) -> Result<SplittingType> {
        let e = self.degree();
        let p = self.field.characteristic();
        if p != 0 && e as u64 % p == 0 {
            return Err(Error::CharDividesDegree { p, e });
        }
        if !self.is_immersion() {
            return Err(Error::Ramified("the Jacobian drops rank".into()));
        }
        let [ds, dt] = self.jacobian();
        let map = GradedMap::new(self.field, vec![0; self.n() + 1], vec![e - 1, e - 1], vec![ds, dt])?;
        let k = map.kernel_splitting()?;
        Ok(SplittingType::new(k.degrees().iter().map(|c| e - c).collect::<Vec<_>>()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::BundleSum;

    #[test]
    fn line_normal_bundle() {
        let f = FieldSpec::prime(101).unwrap();
        let line = ParamCurve::rnc(f, 1, 5).unwrap();
        assert_eq!(line.normal_via_jacobian().unwrap(), BundleSum::uniform(1, 4));
    }

    #[test]
    fn quintic_depends_on_characteristic() {
        let exps = [0i64, 1, 3, 4, 5];
        for (p, want) in [(101, vec![7, 8, 8]), (2, vec![7, 7, 9]), (3, vec![7, 8, 8])] {
            let f = FieldSpec::prime(p).unwrap();
            let c = ParamCurve::new(f, exps.iter().map(|&j| BiForm::st(f, 5 - j, j)).collect()).unwrap();
            assert_eq!(c.normal_via_jacobian().unwrap(), BundleSum::new(want), "p = {p}");
        }
    }

    #[test]
    fn guards() {
        let f = FieldSpec::prime(3).unwrap();
        let c = ParamCurve::rnc(f, 3, 4).unwrap();
        assert!(matches!(c.normal_via_jacobian(), Err(Error::CharDividesDegree { .. })));
        let f = FieldSpec::prime(101).unwrap();
        // [s^3 : s t^2 : t^3] has a cusp at t = 0.
        let cusp = ParamCurve::new(f, vec![BiForm::st(f, 3, 0), BiForm::st(f, 1, 2), BiForm::st(f, 0, 3)]).unwrap();
        assert!(!cusp.is_immersion());
        assert!(matches!(cusp.normal_via_jacobian(), Err(Error::Ramified(_))));
        assert!(ParamCurve::new(f, vec![BiForm::st(f, 1, 1), BiForm::st(f, 2, 0)]).is_err());
    }
}
