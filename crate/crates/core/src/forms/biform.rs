use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{FieldSpec, Scalar, UniPoly};
use crate::error::{Error, Result};

/// A homogeneous form in (s, t) of a declared degree.
///
/// `coeffs[i]` is the coefficient of `s^(degree - i) t^i`. The declared degree
/// is authoritative for grading: the zero form exists in every degree, and
/// forms of negative degree are necessarily zero (with no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    degree: i64,
    coeffs: Vec<Scalar>,
    field: FieldSpec,
}

impl BiForm {
    pub fn zero(field: FieldSpec, degree: i64) -> Self {
        let len = (degree + 1).max(0) as usize;
        BiForm { degree, coeffs: vec![field.zero(); len], field }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        BiForm { degree: 0, coeffs: vec![c], field }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    /// `c * s^(degree - t_power) t^t_power`.
    pub fn monomial(field: FieldSpec, degree: i64, t_power: i64, c: Scalar) -> Self {
        assert!(
            (0..=degree).contains(&t_power),
            "t-exponent {t_power} outside degree {degree}"
        );
        let mut f = Self::zero(field, degree);
        f.coeffs[t_power as usize] = c;
        f
    }

    /// `s^a t^b` with unit coefficient.
    pub fn st(field: FieldSpec, a: i64, b: i64) -> Self {
        Self::monomial(field, a + b, b, field.one())
    }

    /// Degree is `coeffs.len() - 1`; an empty list is rejected.
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a form needs at least one coefficient".into()));
        }
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch(format!("coefficient {bad} not in {field}")));
        }
        Ok(BiForm { degree: coeffs.len() as i64 - 1, coeffs, field })
    }

    pub fn from_i64s(field: FieldSpec, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `s^(degree - i) t^i`.
    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero of degree 0.
    pub fn is_nonzero_constant(&self) -> bool {
        self.degree == 0 && !self.coeffs[0].is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> BiForm {
        BiForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| self.field.mul(x, c)).collect(),
            field: self.field,
        }
    }

    /// The same form relabelled with another degree; only valid for zero forms.
    pub fn with_degree(&self, degree: i64) -> BiForm {
        if degree == self.degree {
            return self.clone();
        }
        assert!(self.is_zero(), "cannot regrade a nonzero form");
        BiForm::zero(self.field, degree)
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        // Horner in t/s, homogenized: sum c_i s^(d-i) t^i
        let mut spow = vec![f.one(); self.coeffs.len()];
        for i in 1..spow.len() {
            spow[i] = f.mul(&spow[i - 1], s);
        }
        let mut tpow = f.one();
        let d = self.coeffs.len();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = f.add(&acc, &f.mul(c, &f.mul(&spow[d - 1 - i], &tpow)));
            }
            tpow = f.mul(&tpow, t);
        }
        acc
    }

    /// Largest `k` with `t^k` dividing the form (the full degree for zero).
    pub fn t_valuation(&self) -> i64 {
        self.coeffs.iter().position(|c| !c.is_zero()).map_or(self.degree.max(0), |i| i as i64)
    }

    /// Largest `k` with `s^k` dividing the form (the full degree for zero).
    pub fn s_valuation(&self) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .position(|c| !c.is_zero())
            .map_or(self.degree.max(0), |i| i as i64)
    }

    /// Dehomogenization at s = 1 as a polynomial in t.
    pub fn dehomogenize_t(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Inverse of [`BiForm::dehomogenize_t`] in the given degree.
    pub fn homogenize_t(field: FieldSpec, p: &UniPoly, degree: i64) -> BiForm {
        let mut f = BiForm::zero(field, degree);
        for (i, c) in p.coeffs.iter().enumerate() {
            assert!((i as i64) <= degree, "polynomial exceeds degree {degree}");
            f.coeffs[i] = c.clone();
        }
        f
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &BiForm) -> Option<BiForm> {
        assert!(!divisor.is_zero(), "division by the zero form");
        let qdeg = self.degree - divisor.degree;
        if self.is_zero() {
            return Some(BiForm::zero(self.field, qdeg));
        }
        if qdeg < 0 {
            return None;
        }
        let (q, r) = self.dehomogenize_t().div_rem(&divisor.dehomogenize_t(), self.field);
        if !r.is_zero() {
            return None;
        }
        // Dehomogenizing loses powers of s; the degree count restores them,
        // but only if the t-chart quotient fits in the quotient degree.
        if q.degree().is_some_and(|d| d as i64 > qdeg) {
            return None;
        }
        Some(BiForm::homogenize_t(self.field, &q, qdeg))
    }

    /// `∂/∂s`, of degree `degree - 1`.
    pub fn d_ds(&self) -> BiForm {
        let f = self.field;
        let mut out = BiForm::zero(f, self.degree - 1);
        for i in 0..out.coeffs.len() {
            out.coeffs[i] = f.mul(&self.coeffs[i], &f.from_i64(self.degree - i as i64));
        }
        out
    }

    /// `∂/∂t`, of degree `degree - 1`.
    pub fn d_dt(&self) -> BiForm {
        let f = self.field;
        let mut out = BiForm::zero(f, self.degree - 1);
        for i in 0..out.coeffs.len() {
            out.coeffs[i] = f.mul(&self.coeffs[i + 1], &f.from_i64(i as i64 + 1));
        }
        out
    }

    /// Multiply by `s^a t^b`.
    pub fn shift(&self, a: i64, b: i64) -> BiForm {
        assert!(a >= 0 && b >= 0);
        let mut f = BiForm::zero(self.field, self.degree + a + b);
        for (i, c) in self.coeffs.iter().enumerate() {
            f.coeffs[i + b as usize] = c.clone();
        }
        f
    }

    fn combine(&self, other: &BiForm, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> BiForm {
        assert_eq!(self.field, other.field, "field mismatch");
        let (a, b) = match (self.degree == other.degree, self.is_zero(), other.is_zero()) {
            (true, _, _) => (self.clone(), other.clone()),
            (false, true, _) => (self.with_degree(other.degree), other.clone()),
            (false, _, true) => (self.clone(), other.with_degree(self.degree)),
            _ => panic!("adding forms of degrees {} and {}", self.degree, other.degree),
        };
        BiForm {
            degree: a.degree,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| op(x, y)).collect(),
            field: a.field,
        }
    }
}

impl Add for &BiForm {
    type Output = BiForm;
    fn add(self, rhs: &BiForm) -> BiForm {
        let f = self.field;
        self.combine(rhs, |x, y| f.add(x, y))
    }
}

impl Sub for &BiForm {
    type Output = BiForm;
    fn sub(self, rhs: &BiForm) -> BiForm {
        let f = self.field;
        self.combine(rhs, |x, y| f.sub(x, y))
    }
}

impl Neg for &BiForm {
    type Output = BiForm;
    fn neg(self) -> BiForm {
        self.scale(&self.field.from_i64(-1))
    }
}

impl Mul for &BiForm {
    type Output = BiForm;
    fn mul(self, rhs: &BiForm) -> BiForm {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        let degree = self.degree + rhs.degree;
        let mut out = BiForm::zero(f, degree);
        if self.degree < 0 || rhs.degree < 0 {
            return out;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = f.add(&out.coeffs[i + j], &f.mul(a, b));
                }
            }
        }
        out
    }
}

/// Monic greatest common divisor of a family of binary forms.
///
/// Each form is written as `s^a t^b g` with `g` prime to `s` and `t`; the
/// result is `s^min(a) t^min(b)` times the homogenized Euclidean gcd of the
/// `g`s in the chart `s = 1`. Zero forms are ignored.
pub fn gcd_set(forms: &[BiForm]) -> Result<BiForm> {
    let nonzero: Vec<&BiForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(Error::AllZero);
    };
    let field = first.field;
    let mut min_s = i64::MAX;
    let mut min_t = i64::MAX;
    let mut g = UniPoly::zero();
    for f in &nonzero {
        assert_eq!(f.field, field, "field mismatch");
        let a = f.s_valuation();
        let b = f.t_valuation();
        min_s = min_s.min(a);
        min_t = min_t.min(b);
        // Drop t^b: shift coefficients; drop s^a: the t-chart polynomial has degree deg - a - b.
        let core = UniPoly::new(f.coeffs[b as usize..=(f.degree - a) as usize].to_vec());
        g = g.gcd(&core, field);
    }
    let gdeg = g.degree().unwrap_or(0) as i64;
    let core = BiForm::homogenize_t(field, &g, gdeg);
    Ok(core.shift(min_s, min_t))
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = self.degree - i as i64;
            let b = i as i64;
            let mut mono = String::new();
            let pow = |v: &str, e: i64| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            for part in [pow("s", a), pow("t", b)] {
                if !part.is_empty() {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(&part);
                }
            }
            let coeff = match self.field.to_i64(c) {
                Some(v) => v.to_string(),
                None => c.to_string(),
            };
            terms.push(match (coeff.as_str(), mono.is_empty()) {
                (_, true) => coeff,
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{coeff}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiForm[deg {}]({})", self.degree, self)
    }
}
