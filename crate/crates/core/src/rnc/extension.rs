use std::collections::BTreeMap;

use crate::algebra::{DenseMatrix, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::forms::{BiForm, MultiForm};
use crate::graded::{ExtensionClass, GradedMap};
use crate::rnc::{ci_normal_map, HypersurfaceCombo, RncModel};

/// Lifts `F_m` on `P^{n-1}` to `F_m + x_n G_m` on `P^n`. The curve keeps its
/// degree `e`; `G_m` fills the new linear slot `L_n`.
///
/// `gs[m]` has degree `d_m - 1` in either `n` or `n + 1` variables.
pub fn realize_extension(
    hs0: &[HypersurfaceCombo],
    gs: &[MultiForm],
    model0: &RncModel,
) -> Result<(RncModel, Vec<HypersurfaceCombo>)> {
    if hs0.len() != gs.len() {
        return Err(Error::InvalidArgument(format!("{} hypersurfaces but {} lifts", hs0.len(), gs.len())));
    }
    let model = RncModel::new(model0.e, model0.n + 1)?;
    let nv = model.num_vars();
    let mut out = Vec::with_capacity(hs0.len());
    for (h, g) in hs0.iter().zip(gs) {
        h.validate(model0)?;
        if g.num_vars() != nv && g.num_vars() != nv - 1 {
            return Err(Error::InvalidArgument(format!("lift in {} variables, expected {nv}", g.num_vars())));
        }
        if !g.is_zero() && g.degree() + 1 != h.degree() {
            return Err(Error::DegreeMismatch(format!(
                "lift of degree {} for a hypersurface of degree {}",
                g.degree(),
                h.degree()
            )));
        }
        let mut lifted = h.widen(nv);
        if !g.is_zero() {
            lifted.add_linear(model.n, g.widen(nv))?;
        }
        out.push(lifted);
    }
    Ok((model, out))
}

/// A homogeneous Laurent form in `(s, t)`, keyed by the `s` exponent.
type Laurent = BTreeMap<i64, Scalar>;

fn laurent_add(field: FieldSpec, acc: &mut Laurent, u: i64, x: &Scalar) {
    if x.is_zero() {
        return;
    }
    let e = acc.entry(u).or_insert_with(|| field.zero());
    *e = field.add(e, x);
    if e.is_zero() {
        acc.remove(&u);
    }
}

/// Polynomial `x` with `A(chart) x = -b(chart)` on one affine chart, returned
/// homogenized as Laurent vectors of degrees `a_i - top`.
///
/// On the `s = 1` chart coefficient `j` sits on `s^(deg - j) t^j`; on the
/// `t = 1` chart on `s^j t^(deg - j)`.
fn chart_lift(a: &GradedMap, b: &[BiForm], top: i64, s_chart: bool) -> Result<Vec<Laurent>> {
    let f = a.field();
    let src = a.source_degrees();
    let tgt = a.target_degrees();
    // Chart coefficient index `j` of a form means `t^j` (s-chart) or `s^j` (t-chart).
    let chart = |form: &BiForm, j: usize| -> Scalar {
        let d = form.degree() as usize;
        if s_chart { form.coeff(j).clone() } else { form.coeff(d - j).clone() }
    };
    let cap = src.iter().chain(tgt).map(|x| x.abs()).sum::<i64>() + top.abs() + 2;
    for bound in 0..=cap {
        let w = bound as usize + 1;
        let mut row_off = vec![0usize];
        for (m, &bm) in tgt.iter().enumerate() {
            let mut len = (b[m].degree().max(-1) + 1) as usize;
            for &ai in src {
                len = len.max((bm - ai).max(-1) as usize + w);
            }
            row_off.push(row_off[m] + len);
        }
        let rows = *row_off.last().unwrap();
        let mut mat = DenseMatrix::zeros(f, rows, src.len() * w);
        for m in 0..tgt.len() {
            for i in 0..src.len() {
                let entry = a.entry(m, i);
                if entry.is_zero() {
                    continue;
                }
                for k in 0..=entry.degree() as usize {
                    let c = chart(entry, k);
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..w {
                        mat.add_to(row_off[m] + k + j, i * w + j, &c);
                    }
                }
            }
        }
        let mut rhs = vec![f.zero(); rows];
        for (m, bm) in b.iter().enumerate() {
            if bm.is_zero() {
                continue;
            }
            for k in 0..=bm.degree() as usize {
                rhs[row_off[m] + k] = f.neg(&chart(bm, k));
            }
        }
        if let Some(x) = mat.solve(&rhs)? {
            return Ok(src
                .iter()
                .enumerate()
                .map(|(i, &ai)| {
                    let deg = ai - top;
                    let mut l = Laurent::new();
                    for j in 0..w {
                        let u = if s_chart { deg - j as i64 } else { j as i64 };
                        laurent_add(f, &mut l, u, &x[i * w + j]);
                    }
                    l
                })
                .collect());
        }
    }
    Err(Error::NoSolution(format!("no local lift of degree <= {cap}")))
}

/// The class of `0 → ker A → ker [A | b] → O(top) → 0` in
/// `⊕ H^1(O(c_l - top))`, with `⊕ O(c_l) ≅ ker A` via `kernel_generators`.
///
/// `A` must be surjective everywhere so both charts admit polynomial lifts;
/// the Čech difference of the lifts lies in `ker A` and is expressed in the
/// generators by an exact Laurent solve.
pub fn extension_class_of_column(a: &GradedMap, b: &[BiForm], top: i64) -> Result<ExtensionClass> {
    let f = a.field();
    if b.len() != a.target_degrees().len() {
        return Err(Error::InvalidArgument("column length differs from target rank".into()));
    }
    for (m, bm) in b.iter().enumerate() {
        if !bm.is_zero() && bm.degree() != a.target_degrees()[m] - top {
            return Err(Error::DegreeMismatch(format!("column entry {m} of degree {}", bm.degree())));
        }
    }
    if !a.surjective_everywhere() {
        return Err(Error::NotSmooth("the base map drops rank somewhere".into()));
    }
    let gens = a.kernel_generators()?;
    let c = gens.source_degrees().to_vec();
    let xs = chart_lift(a, b, top, true)?;
    let xt = chart_lift(a, b, top, false)?;
    let mut z: Vec<Laurent> = xs;
    for (zi, yi) in z.iter_mut().zip(&xt) {
        for (u, x) in yi {
            laurent_add(f, zi, *u, &f.neg(x));
        }
    }
    let src = a.source_degrees();
    let mut u0 = i64::MAX;
    let mut v0 = i64::MAX;
    for (i, zi) in z.iter().enumerate() {
        for u in zi.keys() {
            u0 = u0.min(*u);
            v0 = v0.min(src[i] - top - u);
        }
    }
    if u0 == i64::MAX {
        return Ok(ExtensionClass::zero(f, c, top));
    }
    // ξ_l has degree c_l - top with s exponent in [u0, c_l - top - v0].
    let mut cols: Vec<(usize, i64)> = Vec::new();
    for (l, &cl) in c.iter().enumerate() {
        for u in u0..=(cl - top - v0) {
            cols.push((l, u));
        }
    }
    let mut row_of: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (col, &(l, u)) in cols.iter().enumerate() {
        for i in 0..src.len() {
            let k_il = gens.entry(i, l);
            if k_il.is_zero() {
                continue;
            }
            let deg = k_il.degree();
            for (k, x) in k_il.coeffs().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let next = row_of.len();
                let r = *row_of.entry((i, u + deg - k as i64)).or_insert(next);
                entries.push((r, col, x.clone()));
            }
        }
    }
    let mut rhs_terms = Vec::new();
    for (i, zi) in z.iter().enumerate() {
        for (u, x) in zi {
            match row_of.get(&(i, *u)) {
                Some(&r) => rhs_terms.push((r, x.clone())),
                None => return Err(Error::NoSolution(format!("s^{u} term of component {i} outside the image"))),
            }
        }
    }
    let mut mat = DenseMatrix::zeros(f, row_of.len(), cols.len());
    for (r, col, x) in &entries {
        mat.add_to(*r, *col, x);
    }
    let mut rhs = vec![f.zero(); row_of.len()];
    for (r, x) in rhs_terms {
        rhs[r] = f.add(&rhs[r], &x);
    }
    let xi = mat
        .solve(&rhs)?
        .ok_or_else(|| Error::NoSolution("Čech difference is not in the span of the generators".into()))?;
    let mut terms: Vec<Vec<(i64, i64, Scalar)>> = vec![Vec::new(); c.len()];
    for (&(l, u), x) in cols.iter().zip(&xi) {
        let v = c[l] - top - u;
        if u <= -1 && v <= -1 && !x.is_zero() {
            terms[l].push((u, v, x.clone()));
        }
    }
    ExtensionClass::from_terms(f, c, top, &terms)
}

/// The class of `0 → N_{C/X_0} → N_{C/X} → O(e) → 0` for the lifted complete
/// intersection `X = V(F_m + x_n G_m) ⊂ P^n`, whose hyperplane section is `X_0`.
pub fn induced_extension_class(
    field: FieldSpec,
    hs0: &[HypersurfaceCombo],
    gs: &[MultiForm],
    model0: &RncModel,
) -> Result<ExtensionClass> {
    let a = ci_normal_map(field, hs0, model0)?;
    let (model, _) = realize_extension(hs0, gs, model0)?;
    let param = model.parametrization(field);
    let e = model.e as i64;
    let mut b = Vec::with_capacity(gs.len());
    for (h, g) in hs0.iter().zip(gs) {
        let deg = e * (h.degree() as i64 - 1);
        b.push(if g.is_zero() { BiForm::zero(field, deg) } else { g.widen(model.num_vars()).restrict(&param)? });
    }
    extension_class_of_column(&a, &b, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_scalar, SplitMix64};
    use crate::graded::BundleSum;

    fn fp() -> FieldSpec {
        FieldSpec::prime(2_147_483_647).unwrap()
    }

    fn random_linear(f: FieldSpec, nv: usize, g: &mut SplitMix64) -> MultiForm {
        let mut l = MultiForm::zero(f, nv, 1);
        for v in 0..nv {
            l = &l + &MultiForm::var(f, nv, v).scale(&random_scalar(g, f).unwrap());
        }
        l
    }

    #[test]
    fn zero_lift_splits_off_o_e() {
        let f = fp();
        let model0 = RncModel::new(4, 4).unwrap();
        let h = HypersurfaceCombo::quadric_sum(f, 5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let g = MultiForm::zero(f, 6, 1);
        let (model, hs) = realize_extension(&[h.clone()], &[g.clone()], &model0).unwrap();
        let k = ci_normal_map(f, &hs, &model).unwrap().kernel_splitting().unwrap();
        assert_eq!(k, BundleSum::from_blocks(&[(4, 1), (5, 2)]));
        let class = induced_extension_class(f, &[h], &[g], &model0).unwrap();
        assert!(class.is_zero());
    }

    #[test]
    fn two_routes_agree_on_random_lifts() {
        let f = fp();
        let mut g = SplitMix64::new(41);
        let model0 = RncModel::new(4, 5).unwrap();
        for _ in 0..4 {
            let h = HypersurfaceCombo::random_quadric(f, &model0, &mut g).unwrap();
            let lift = random_linear(f, 7, &mut g);
            let (model, hs) = realize_extension(&[h.clone()], &[lift.clone()], &model0).unwrap();
            let direct = ci_normal_map(f, &hs, &model).unwrap().kernel_splitting().unwrap();
            let class = induced_extension_class(f, &[h], &[lift], &model0).unwrap();
            assert_eq!(class.extension_splitting().unwrap(), direct);
        }
    }

    #[test]
    fn lift_degree_is_checked() {
        let f = fp();
        let model0 = RncModel::new(3, 3).unwrap();
        let h = HypersurfaceCombo::quadric_sum(f, 4, &[(1, 2)]).unwrap();
        let bad = MultiForm::var(f, 5, 0).scale(&f.one());
        let bad = &bad * &MultiForm::var(f, 5, 1);
        assert!(matches!(realize_extension(&[h], &[bad], &model0), Err(Error::DegreeMismatch(_))));
    }
}
