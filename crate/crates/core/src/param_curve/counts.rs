use std::collections::{BTreeSet, HashMap};

use num_integer::binomial;
use serde::Serialize;

use crate::algebra::{DenseMatrix, FieldSpec};
use crate::error::{Error, Result};
use crate::forms::BiForm;
use crate::param_curve::ParamCurve;

/// Largest monomial basis accepted by the ideal counts.
pub const MONOMIAL_CAP: u64 = 20_000;

/// Exponent vectors of degree `d` in `nv` variables, in lexicographic order.
pub fn monomials(nv: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nv: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nv {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(nv, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nv > 0 {
        rec(nv, d, &mut Vec::with_capacity(nv), &mut out);
    }
    out
}

fn check_capacity(n: usize, d: u32) -> Result<u64> {
    let count = binomial(n as u64 + d as u64, d as u64);
    if count > MONOMIAL_CAP {
        return Err(Error::Capacity(format!("{count} monomials of degree {d} in P^{n} exceed {MONOMIAL_CAP}")));
    }
    Ok(count)
}

/// Restrictions of every monomial of degree `<= d` to the parametrization,
/// each built from one of the previous degree.
fn restriction_table(param: &[BiForm], d: u32) -> HashMap<Vec<u32>, BiForm> {
    let nv = param.len();
    let f = param[0].field();
    let mut table = HashMap::new();
    table.insert(vec![0; nv], BiForm::one(f));
    for k in 1..=d {
        for m in monomials(nv, k) {
            let v = m.iter().position(|&x| x > 0).expect("positive degree");
            let mut prev = m.clone();
            prev[v] -= 1;
            let r = &table[&prev] * &param[v];
            table.insert(m, r);
        }
    }
    table
}

/// Condition rows for `F|_C = 0` and, if `double`, `∂F/∂x_i|_C = 0` for every `i`,
/// one column per degree-`d` monomial.
fn condition_matrix(field: FieldSpec, params: &[Vec<BiForm>], d: u32, double: bool) -> Result<DenseMatrix> {
    let nv = params[0].len();
    let cols = monomials(nv, d);
    let mut blocks: Vec<Vec<Vec<crate::algebra::Scalar>>> = Vec::new();
    for param in params {
        let table = restriction_table(param, d);
        let e = param[0].degree();
        let mut rows = vec![vec![field.zero(); cols.len()]; (d as i64 * e + 1) as usize];
        for (c, m) in cols.iter().enumerate() {
            for (r, x) in table[m].coeffs().iter().enumerate() {
                rows[r][c] = x.clone();
            }
        }
        blocks.push(rows);
        if !double {
            continue;
        }
        for i in 0..nv {
            let mut rows = vec![vec![field.zero(); cols.len()]; ((d as i64 - 1) * e + 1) as usize];
            for (c, m) in cols.iter().enumerate() {
                if m[i] == 0 {
                    continue;
                }
                let k = field.from_i64(m[i] as i64);
                if k.is_zero() {
                    continue;
                }
                let mut lower = m.clone();
                lower[i] -= 1;
                for (r, x) in table[&lower].coeffs().iter().enumerate() {
                    rows[r][c] = field.mul(x, &k);
                }
            }
            blocks.push(rows);
        }
    }
    let all: Vec<Vec<_>> = blocks.into_iter().flatten().collect();
    DenseMatrix::from_rows(field, &all)
}

/// `h^0(I_C(d))`: degree-`d` forms vanishing on the curve.
pub fn h0_ideal(c: &ParamCurve, d: u32) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    check_capacity(c.n(), d)?;
    condition_matrix(c.field(), &[c.components().to_vec()], d, false)?.nullity()
}

/// `h^0(I_C^2(d))`: degree-`d` forms vanishing with all first partials along
/// the curve (membership in the square of the ideal for a smooth curve).
pub fn h0_ideal_sq(c: &ParamCurve, d: u32) -> Result<usize> {
    if d < 2 {
        return Err(Error::InvalidArgument("degree must be >= 2".into()));
    }
    check_capacity(c.n(), d)?;
    condition_matrix(c.field(), &[c.components().to_vec()], d, true)?.nullity()
}

/// The monomials whose coefficients must vanish for `F` to be double along
/// the coordinate line `x_j = 0 (j ≠ a, b)`.
fn coordinate_line_conditions(nv: usize, d: u32, a: usize, b: usize, out: &mut BTreeSet<Vec<u32>>) {
    for j in 0..=d {
        let mut m = vec![0; nv];
        m[a] = j;
        m[b] = d - j;
        out.insert(m);
    }
    for other in (0..nv).filter(|&x| x != a && x != b) {
        for j in 0..d {
            let mut m = vec![0; nv];
            m[other] = 1;
            m[a] = j;
            m[b] = d - 1 - j;
            out.insert(m);
        }
    }
}

/// Independent linear conditions for a degree-`d` form in `P^n` to be double
/// along a chain of lines.
///
/// For `e <= n` the chain is `ℓ_1 ∪ … ∪ ℓ_e` with `ℓ_i` the coordinate line
/// spanned by `x_{i-1}, x_i`, and the conditions are monomial. For `e = n + 1`
/// the chain also contains the line `x_0 = x_2, x_n` free, all other
/// coordinates zero, whose conditions come from restricting `F` and its
/// partials.
pub fn chain_double_conditions(field: FieldSpec, n: usize, e: usize, d: u32) -> Result<usize> {
    if e == 0 || e > n + 1 {
        return Err(Error::OutOfRange(format!("chain of {e} lines in P^{n}")));
    }
    if e == n + 1 && n < 3 {
        return Err(Error::OutOfRange("the closing line needs n >= 3".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    check_capacity(n, d)?;
    let nv = n + 1;
    let mut mono = BTreeSet::new();
    for i in 1..=e.min(n) {
        coordinate_line_conditions(nv, d, i - 1, i, &mut mono);
    }
    if e <= n {
        return Ok(mono.len());
    }
    let cols = monomials(nv, d);
    let index: HashMap<&Vec<u32>, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<_>> = mono
        .iter()
        .map(|m| {
            let mut r = vec![field.zero(); cols.len()];
            r[index[m]] = field.one();
            r
        })
        .collect();
    let mut line = vec![BiForm::zero(field, 1); nv];
    line[0] = BiForm::st(field, 1, 0);
    line[2] = BiForm::st(field, 1, 0);
    line[n] = BiForm::st(field, 0, 1);
    let extra = condition_matrix(field, &[line], d, true)?;
    for r in 0..extra.rows() {
        rows.push((0..extra.cols()).map(|c| extra.get(r, c)).collect());
    }
    DenseMatrix::from_rows(field, &rows)?.rank()
}

/// The count the chain is expected to impose: `e(nd+1) - (e-1)(n+2)` for
/// `e <= n` and `(d-1)(n^2+n) + 1` for `e = n + 1`.
pub fn expected_chain_conditions(n: usize, e: usize, d: u32) -> Result<i64> {
    let (n, e, d) = (n as i64, e as i64, d as i64);
    if e >= 1 && e <= n {
        Ok(e * (n * d + 1) - (e - 1) * (n + 2))
    } else if e == n + 1 {
        Ok((d - 1) * (n * n + n) + 1)
    } else {
        Err(Error::OutOfRange(format!("chain of {e} lines in P^{n}")))
    }
}

/// Upper bound for `h^0(I_C^2(d))` of a general degree-`(n+1)` curve: the
/// monomial count `binom(n+d, d)` minus the chain conditions.
///
/// The second component records whether `binom(2n, n)` (the count quoted
/// for this bound elsewhere) agrees, which happens only when `d = n`.
pub fn last_case_bound(n: usize, d: u32) -> (i64, bool) {
    let total = binomial(n as u64 + d as u64, d as u64) as i64;
    let quoted = binomial(2 * n as u64, n as u64) as i64;
    let conditions = (d as i64 - 1) * (n as i64 * n as i64 + n as i64) + 1;
    (total - conditions, total == quoted)
}

/// Dimensions of the image and target of
/// `φ: H^0(I_C(d)) → Hom(N_{C/P^n}, O(ed))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub image_dim: usize,
    pub target_dim: usize,
    pub surjective: bool,
}

/// Compares `h^0(I_C(d)) - h^0(I_C^2(d))` with `Σ (ed - a_i + 1)` over the
/// summands `O(a_i)` of `N_{C/P^n}`.
pub fn phi_surjective(c: &ParamCurve, d: u32) -> Result<PhiReport> {
    let normal = c.normal_via_jacobian().map_err(|e| Error::NoNormalSplitting(e.to_string()))?;
    let ed = c.degree() * d as i64;
    if let Some(&a) = normal.degrees().iter().find(|&&a| a > ed) {
        return Err(Error::OutOfRange(format!("normal summand O({a}) above O({ed})")));
    }
    let target_dim = normal.degrees().iter().map(|a| (ed - a + 1) as usize).sum();
    let image_dim = h0_ideal(c, d)? - h0_ideal_sq(c, d)?;
    Ok(PhiReport { image_dim, target_dim, surjective: image_dim == target_dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FieldSpec {
        FieldSpec::prime(2_147_483_647).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(3, 2)[0], vec![2, 0, 0]);
        assert_eq!(monomials(5, 3).len(), 35);
    }

    #[test]
    fn rnc_ideal_counts() {
        let f = fp();
        assert_eq!(h0_ideal(&ParamCurve::rnc(f, 3, 3).unwrap(), 2).unwrap(), 3);
        assert_eq!(h0_ideal(&ParamCurve::rnc(f, 4, 4).unwrap(), 3).unwrap(), 22);
        assert_eq!(h0_ideal_sq(&ParamCurve::rnc(f, 3, 3).unwrap(), 3).unwrap(), 0);
        assert_eq!(h0_ideal_sq(&ParamCurve::rnc(f, 4, 4).unwrap(), 3).unwrap(), 1);
    }

    #[test]
    fn chain_counts() {
        let f = fp();
        assert_eq!(chain_double_conditions(f, 3, 2, 3).unwrap(), 15);
        assert_eq!(chain_double_conditions(f, 3, 1, 2).unwrap(), 7);
        assert_eq!(chain_double_conditions(f, 4, 4, 3).unwrap(), 34);
        assert!(chain_double_conditions(f, 3, 5, 3).is_err());
    }

    #[test]
    fn closing_line_case() {
        assert_eq!(chain_double_conditions(fp(), 5, 6, 5).unwrap(), 121);
        assert_eq!(last_case_bound(5, 5), (252 - 121, true));
        assert!(!last_case_bound(5, 6).1);
    }

    #[test]
    fn phi_on_rnc() {
        let c = ParamCurve::rnc(fp(), 4, 4).unwrap();
        let r = phi_surjective(&c, 3).unwrap();
        assert_eq!(r, PhiReport { image_dim: 21, target_dim: 21, surjective: true });
    }

    #[test]
    fn capacity_is_enforced() {
        let c = ParamCurve::rnc(fp(), 2, 12).unwrap();
        assert!(matches!(h0_ideal(&c, 12), Err(Error::Capacity(_))));
    }
}
