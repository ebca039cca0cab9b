//! Oracles shared by the integration suites. Each one recomputes its answer
//! by a route that does not go through the function under test.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_integer::binomial;
use splitkit::algebra::{random_scalar, FieldSpec, SplitMix64};
use splitkit::forms::{BiForm, MultiForm};
use splitkit::param_curve::ParamCurve;
use splitkit::graded::BundleSum;
use splitkit::rnc::{alpha_image, HypersurfaceCombo, RncModel};

pub const P: u64 = 2_147_483_647;

pub fn fp() -> FieldSpec {
    FieldSpec::prime(P).unwrap()
}

/// Balanced multiset of the given rank and degree, by floor division.
pub fn balanced_oracle(rank: i64, degree: i64) -> Vec<i64> {
    let q = degree.div_euclid(rank);
    let r = degree.rem_euclid(rank);
    let mut v = vec![q; (rank - r) as usize];
    v.extend(std::iter::repeat(q + 1).take(r as usize));
    v
}

/// `binom(n+d, d) - e(nd+1) + (e-1)(n+2)`.
pub fn ideal_sq_formula(n: i64, e: i64, d: i64) -> i64 {
    binomial(n + d, d) - e * (n * d + 1) + (e - 1) * (n + 2)
}

/// `h^0(Hom(O(e+2)^(e-1) ⊕ O(e)^(n-e), O(ed)))`, as `end - e(n+1+d) + n + 1`.
pub fn phi_target_formula(n: i64, e: i64, d: i64) -> i64 {
    e * n * d - e * (n + 1 + d) + n + 1
}

/// `h^1(End)` straight from the pairwise definition.
pub fn h1_end_oracle(a: &[i64]) -> i64 {
    let mut s = 0;
    for x in a {
        for y in a {
            s += (x - y - 1).max(0);
        }
    }
    s
}

/// `N_{C/P^n}` of a general degree-`e` curve: random in the span
/// `P^m`, `m = min(n, e)`, padded by zero coordinates.
pub fn random_normal_source(rng: &mut SplitMix64, n: usize, e: usize) -> BundleSum {
    degenerate_normal_source(rng, n, e, n.min(e))
}

/// As above but spanning a chosen `P^m`.
pub fn degenerate_normal_source(rng: &mut SplitMix64, n: usize, e: usize, m: usize) -> BundleSum {
    let f = fp();
    let inner = ParamCurve::random(f, m, e, rng).unwrap();
    let mut comps = inner.components().to_vec();
    comps.resize(n + 1, BiForm::zero(f, e as i64));
    ParamCurve::new(f, comps).unwrap().normal_via_jacobian().unwrap()
}

/// Base `a_1 <= … <= a_r` and top `d` with
/// `Σ_{a_i < a_r} (a_r - 1 - a_i) <= d - a_r + 1`.
pub fn extension_config(rng: &mut SplitMix64) -> (Vec<i64>, i64) {
    loop {
        let r = 2 + rng.below(4) as usize;
        let mut a: Vec<i64> = (0..r).map(|_| rng.range_i64(0, 5)).collect();
        a.sort_unstable();
        let top = *a.last().unwrap();
        let indent: i64 = a.iter().filter(|&&x| x < top).map(|x| top - 1 - x).sum();
        let d = top - 1 + indent + rng.range_i64(0, 3);
        if indent <= d - top + 1 {
            return (a, d);
        }
    }
}

/// `x_a q_{b,c} - x_b q_{a,c} + x_c q_{a,b}` for the lower (`shift = 0`) or
/// upper (`shift = 1`) row of the 2 x (n+1) catalecticant, `a < b < c`.
pub fn koszul_terms(a: usize, b: usize, c: usize, shift: usize) -> [(usize, (usize, usize), i64); 3] {
    [(a - shift, (b, c), 1), (b - shift, (a, c), -1), (c - shift, (a, b), 1)]
}

/// The relation as a `MultiForm`; zero when the relation really holds.
pub fn koszul_form(f: FieldSpec, nv: usize, a: usize, b: usize, c: usize, shift: usize) -> MultiForm {
    let mut acc = MultiForm::zero(f, nv, 3);
    for (x, (i, j), sign) in koszul_terms(a, b, c, shift) {
        let term = &MultiForm::var(f, nv, x) * &MultiForm::q(f, nv, i, j);
        acc = &acc + &term.scale(&f.from_i64(sign));
    }
    acc
}

/// Expands `Σ x_m|_{R_n} · α(q)` over the relation in the free basis and
/// returns the nonzero coefficients, keyed by `(t-exponent, b)`.
pub fn alpha_relation_residue(n: usize, a: usize, b: usize, c: usize, shift: usize) -> BTreeMap<(usize, usize), i64> {
    let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (x, (i, j), sign) in koszul_terms(a, b, c, shift) {
        // x_m restricts to s^(n-m) t^m
        for term in alpha_image(i, j, n).unwrap() {
            assert_eq!(term.s_exp + term.t_exp, n - 2);
            *out.entry((term.t_exp + x, term.b)).or_default() += sign;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Adds `c · (x_a q_{b,c} - x_b q_{a,c} + x_c q_{a,b})` to a combo, with `c`
/// a random form of degree `deg h - 3`.
pub fn perturb_by_koszul(
    h: &HypersurfaceCombo,
    model: &RncModel,
    rng: &mut SplitMix64,
) -> HypersurfaceCombo {
    let f = h.field();
    let nv = h.num_vars();
    let e = model.e;
    let a = 1 + rng.below((e - 2) as u64) as usize;
    let b = a + 1 + rng.below((e - a - 1) as u64) as usize;
    let c = b + 1 + rng.below((e - b) as u64) as usize;
    let shift = rng.below(2) as usize;
    let coeff = MultiForm::random_sparse(f, nv, h.degree() - 3, 3, rng).unwrap();
    let mut out = h.clone();
    for (x, (i, j), sign) in koszul_terms(a, b, c, shift) {
        let t = (&MultiForm::var(f, nv, x) * &coeff).scale(&f.from_i64(sign));
        out.add_quadric(i, j, t).unwrap();
    }
    out
}

/// A combo of degree `d` with random sparse coefficients on every generator.
pub fn random_combo(f: FieldSpec, model: &RncModel, d: u32, rng: &mut SplitMix64) -> HypersurfaceCombo {
    let nv = model.num_vars();
    let mut h = HypersurfaceCombo::new(f, nv, d).unwrap();
    for j in 2..=model.e {
        for i in 1..j {
            let c = if d == 2 {
                MultiForm::constant(f, nv, random_scalar(rng, f).unwrap())
            } else {
                MultiForm::random_sparse(f, nv, d - 2, 3, rng).unwrap()
            };
            h.add_quadric(i, j, c).unwrap();
        }
    }
    for j in model.e + 1..=model.n {
        h.add_linear(j, MultiForm::random_sparse(f, nv, d - 1, 3, rng).unwrap()).unwrap();
    }
    h
}
