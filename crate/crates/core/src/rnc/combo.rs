use std::collections::BTreeMap;

use crate::algebra::{random_scalar, FieldSpec, SplitMix64};
use crate::error::{Error, Result};
use crate::forms::{BiForm, MultiForm};
use crate::graded::GradedMap;
use crate::rnc::{alpha_image, RncModel};

/// A degree-`d` form written in the generators of the ideal of `R_e`:
/// `F = Σ A_{i,j} q_{i,j} + Σ L_j x_j` with `1 <= i < j <= e` and `e < j <= n`.
///
/// `A_{i,j}` has degree `d - 2` and `L_j` degree `d - 1`; both live in the
/// ambient variables `x_0, …, x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceCombo {
    field: FieldSpec,
    num_vars: usize,
    degree: u32,
    quadric: BTreeMap<(usize, usize), MultiForm>,
    linear: BTreeMap<usize, MultiForm>,
}

impl HypersurfaceCombo {
    pub fn new(field: FieldSpec, num_vars: usize, degree: u32) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidArgument(format!("hypersurface degree {degree} < 2")));
        }
        Ok(HypersurfaceCombo { field, num_vars, degree, quadric: BTreeMap::new(), linear: BTreeMap::new() })
    }

    /// `Σ q_{i,j}` over the given pairs, with unit coefficients.
    pub fn quadric_sum(field: FieldSpec, num_vars: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut h = Self::new(field, num_vars, 2)?;
        for &(i, j) in pairs {
            h.add_quadric(i, j, MultiForm::constant(field, num_vars, field.one()))?;
        }
        Ok(h)
    }

    fn check_coeff(&self, c: &MultiForm, want: u32) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(format!("coefficient over {}", c.field())));
        }
        if c.num_vars() != self.num_vars {
            return Err(Error::InvalidArgument(format!(
                "coefficient in {} variables, combo in {}",
                c.num_vars(),
                self.num_vars
            )));
        }
        if !c.is_zero() && c.degree() != want {
            return Err(Error::DegreeMismatch(format!(
                "coefficient {c} of degree {}, expected {want}",
                c.degree()
            )));
        }
        Ok(())
    }

    /// Adds `coeff · q_{i,j}`.
    pub fn add_quadric(&mut self, i: usize, j: usize, coeff: MultiForm) -> Result<()> {
        if !(1 <= i && i < j && j < self.num_vars) {
            return Err(Error::OutOfRange(format!("q[{i},{j}] in {} variables", self.num_vars)));
        }
        self.check_coeff(&coeff, self.degree - 2)?;
        let coeff = if coeff.is_zero() { MultiForm::zero(self.field, self.num_vars, self.degree - 2) } else { coeff };
        let slot = self
            .quadric
            .entry((i, j))
            .or_insert_with(|| MultiForm::zero(coeff.field(), coeff.num_vars(), coeff.degree()));
        *slot = &*slot + &coeff;
        Ok(())
    }

    /// Adds `coeff · x_j`.
    pub fn add_linear(&mut self, j: usize, coeff: MultiForm) -> Result<()> {
        if j >= self.num_vars {
            return Err(Error::OutOfRange(format!("x{j} in {} variables", self.num_vars)));
        }
        self.check_coeff(&coeff, self.degree - 1)?;
        let coeff = if coeff.is_zero() { MultiForm::zero(self.field, self.num_vars, self.degree - 1) } else { coeff };
        let slot = self
            .linear
            .entry(j)
            .or_insert_with(|| MultiForm::zero(coeff.field(), coeff.num_vars(), coeff.degree()));
        *slot = &*slot + &coeff;
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn quadric_terms(&self) -> &BTreeMap<(usize, usize), MultiForm> {
        &self.quadric
    }

    pub fn linear_terms(&self) -> &BTreeMap<usize, MultiForm> {
        &self.linear
    }

    /// Checks that every generator used belongs to the ideal of the model curve.
    pub fn validate(&self, model: &RncModel) -> Result<()> {
        if self.num_vars != model.num_vars() {
            return Err(Error::InvalidArgument(format!(
                "combo in {} variables for a curve in P^{}",
                self.num_vars, model.n
            )));
        }
        if let Some(&(i, j)) = self.quadric.keys().find(|&&(_, j)| j > model.e) {
            return Err(Error::OutOfRange(format!("q[{i},{j}] is not a generator for R_{}", model.e)));
        }
        if let Some(&j) = self.linear.keys().find(|&&j| j <= model.e) {
            return Err(Error::OutOfRange(format!("x{j} does not vanish on R_{}", model.e)));
        }
        Ok(())
    }

    /// The expanded form `F`.
    pub fn to_multiform(&self) -> MultiForm {
        let f = self.field;
        let mut acc = MultiForm::zero(f, self.num_vars, self.degree);
        for (&(i, j), a) in &self.quadric {
            acc = &acc + &(a * &MultiForm::q(f, self.num_vars, i, j));
        }
        for (&j, l) in &self.linear {
            acc = &acc + &(l * &MultiForm::var(f, self.num_vars, j));
        }
        acc
    }

    /// The same combo with `extra` unused variables appended.
    pub fn widen(&self, num_vars: usize) -> HypersurfaceCombo {
        HypersurfaceCombo {
            field: self.field,
            num_vars,
            degree: self.degree,
            quadric: self.quadric.iter().map(|(k, v)| (*k, v.widen(num_vars))).collect(),
            linear: self.linear.iter().map(|(k, v)| (*k, v.widen(num_vars))).collect(),
        }
    }

    /// A quadric `Σ a_{i,j} q_{i,j}` over all generators of `R_e` plus
    /// `Σ l_j x_j` with random linear `l_j`, all coefficients uniform.
    pub fn random_quadric(field: FieldSpec, model: &RncModel, rng: &mut SplitMix64) -> Result<Self> {
        let nv = model.num_vars();
        let mut h = Self::new(field, nv, 2)?;
        for j in 2..=model.e {
            for i in 1..j {
                h.add_quadric(i, j, MultiForm::constant(field, nv, random_scalar(rng, field)?))?;
            }
        }
        for j in model.e + 1..=model.n {
            let mut l = MultiForm::zero(field, nv, 1);
            for v in 0..nv {
                l = &l + &MultiForm::var(field, nv, v).scale(&random_scalar(rng, field)?);
            }
            h.add_linear(j, l)?;
        }
        Ok(h)
    }
}

/// The row of `ψ_F : N_{R_e/P^n} → O(e·d)` in the basis
/// `(b_{1,2}, …, b_{e-1,e} | x_{e+1}, …, x_n)`.
///
/// Entry `l < e` collects the coefficient of `b_{l,l+1}` in
/// `Σ A_{i,j}|_C · α(q_{i,j})` (degree `e·d - e - 2`); the rest are `L_j|_C`
/// (degree `e·d - e`).
pub fn psi_row(h: &HypersurfaceCombo, model: &RncModel) -> Result<Vec<BiForm>> {
    h.validate(model)?;
    let f = h.field;
    let e = model.e;
    let d = h.degree as i64;
    let param = model.parametrization(f);
    let c_deg = e as i64 * d - e as i64 - 2;
    let mut row: Vec<BiForm> = (1..e).map(|_| BiForm::zero(f, c_deg)).collect();
    for (&(i, j), a) in &h.quadric {
        if a.is_zero() {
            continue;
        }
        let a_c = a.restrict(&param)?;
        for term in alpha_image(i, j, e)? {
            let mono = BiForm::st(f, term.s_exp as i64, term.t_exp as i64);
            let contrib = &a_c * &mono;
            debug_assert_eq!(contrib.degree(), c_deg);
            row[term.b - 1] = &row[term.b - 1] + &contrib;
        }
    }
    let l_deg = e as i64 * (d - 1);
    for j in e + 1..=model.n {
        let entry = match h.linear.get(&j) {
            Some(l) => l.restrict(&param)?,
            None => BiForm::zero(f, l_deg),
        };
        if entry.degree() != l_deg {
            return Err(Error::DegreeMismatch(format!("L_{j} restricts to degree {}", entry.degree())));
        }
        row.push(entry);
    }
    Ok(row)
}

/// `N_{R_e/P^n} → ⊕ O(e·d_m)`, one `ψ` row per hypersurface; its kernel is `N_{R_e/X}`.
pub fn ci_normal_map(field: FieldSpec, hs: &[HypersurfaceCombo], model: &RncModel) -> Result<GradedMap> {
    let source = model.normal_source();
    let mut target = Vec::with_capacity(hs.len());
    let mut rows = Vec::with_capacity(hs.len());
    for h in hs {
        if h.field != field {
            return Err(Error::FieldMismatch(format!("combo over {}, expected {field}", h.field)));
        }
        target.push(model.e as i64 * h.degree as i64);
        rows.push(psi_row(h, model)?);
    }
    GradedMap::new(field, source, target, rows)
}

/// Whether `X = V(hs)` is smooth along the curve: the normal map has full rank everywhere.
pub fn smooth_along_curve(field: FieldSpec, hs: &[HypersurfaceCombo], model: &RncModel) -> Result<bool> {
    Ok(ci_normal_map(field, hs, model)?.surjective_everywhere())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::BundleSum;

    fn fp() -> FieldSpec {
        FieldSpec::prime(2_147_483_647).unwrap()
    }

    #[test]
    fn consecutive_quadric_sum_row() {
        let f = fp();
        let model = RncModel::new(4, 4).unwrap();
        let h = HypersurfaceCombo::quadric_sum(f, 5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let row = psi_row(&h, &model).unwrap();
        assert_eq!(row, vec![BiForm::st(f, 2, 0), BiForm::st(f, 1, 1), BiForm::st(f, 0, 2)]);
    }

    #[test]
    fn two_term_row_on_r5() {
        let f = fp();
        let model = RncModel::new(5, 5).unwrap();
        let h = HypersurfaceCombo::quadric_sum(f, 6, &[(1, 2), (4, 5)]).unwrap();
        let z = BiForm::zero(f, 3);
        let row = psi_row(&h, &model).unwrap();
        assert_eq!(row, vec![BiForm::st(f, 3, 0), z.clone(), z, BiForm::st(f, 0, 3)]);
    }

    #[test]
    fn linear_slot_restricts() {
        let f = fp();
        let model = RncModel::new(3, 4).unwrap();
        let mut h = HypersurfaceCombo::new(f, 5, 2).unwrap();
        h.add_linear(4, MultiForm::var(f, 5, 3)).unwrap();
        let row = psi_row(&h, &model).unwrap();
        assert_eq!(row.len(), 3);
        assert_eq!(row[2], BiForm::st(f, 0, 3));
        assert!(row[0].is_zero() && row[1].is_zero());
    }

    #[test]
    fn expansion_vanishes_on_curve() {
        let f = fp();
        let model = RncModel::new(4, 6).unwrap();
        let mut g = SplitMix64::new(9);
        let h = HypersurfaceCombo::random_quadric(f, &model, &mut g).unwrap();
        assert!(h.to_multiform().restrict(&model.parametrization(f)).unwrap().is_zero());
    }

    #[test]
    fn generators_must_belong_to_curve() {
        let f = fp();
        let model = RncModel::new(3, 5).unwrap();
        let bad = HypersurfaceCombo::quadric_sum(f, 6, &[(1, 4)]).unwrap();
        assert!(psi_row(&bad, &model).is_err());
        let mut bad = HypersurfaceCombo::new(f, 6, 2).unwrap();
        bad.add_linear(2, MultiForm::var(f, 6, 0)).unwrap();
        assert!(psi_row(&bad, &model).is_err());
    }

    #[test]
    fn empty_list_gives_ambient_normal_bundle() {
        let model = RncModel::new(3, 5).unwrap();
        let m = ci_normal_map(fp(), &[], &model).unwrap();
        assert_eq!(m.kernel_splitting().unwrap(), BundleSum::from_blocks(&[(5, 2), (3, 2)]));
    }
}
