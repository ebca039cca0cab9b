use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{random_nonzero_scalar, FieldSpec, Scalar, SplitMix64};
use crate::error::{Error, Result};
use crate::forms::BiForm;

/// A homogeneous polynomial in `x_0, …, x_{num_vars-1}`, stored sparsely.
///
/// Every exponent vector has length `num_vars` and sums to `degree`; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiForm {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Scalar>,
    field: FieldSpec,
}

impl MultiForm {
    pub fn zero(field: FieldSpec, num_vars: usize, degree: u32) -> Self {
        MultiForm { num_vars, degree, terms: BTreeMap::new(), field }
    }

    pub fn constant(field: FieldSpec, num_vars: usize, c: Scalar) -> Self {
        let mut f = Self::zero(field, num_vars, 0);
        f.add_term(vec![0; num_vars], c);
        f
    }

    pub fn var(field: FieldSpec, num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable x{i} outside x0..x{}", num_vars - 1);
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    pub fn monomial(field: FieldSpec, exps: Vec<u32>, c: Scalar) -> Self {
        let degree = exps.iter().sum();
        let mut f = Self::zero(field, exps.len(), degree);
        f.add_term(exps, c);
        f
    }

    /// Builds a form from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        field: FieldSpec,
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let mut f = Self::zero(field, num_vars, degree);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector of length {} for {num_vars} variables",
                    e.len()
                )));
            }
            if e.iter().sum::<u32>() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "monomial {e:?} in a form of degree {degree}"
                )));
            }
            if !field.contains(&c) {
                return Err(Error::FieldMismatch(format!("coefficient {c} not in {field}")));
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// The determinantal quadric `x_i x_{j-1} - x_j x_{i-1}`.
    pub fn q(field: FieldSpec, num_vars: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j && j < num_vars, "q[{i},{j}] outside x0..x{}", num_vars - 1);
        let a = &Self::var(field, num_vars, i) * &Self::var(field, num_vars, j - 1);
        let b = &Self::var(field, num_vars, j) * &Self::var(field, num_vars, i - 1);
        &a - &b
    }

    /// A form with up to `count` monomials chosen uniformly, with nonzero coefficients.
    pub fn random_sparse(
        field: FieldSpec,
        num_vars: usize,
        degree: u32,
        count: usize,
        rng: &mut SplitMix64,
    ) -> Result<Self> {
        let mut f = Self::zero(field, num_vars, degree);
        for _ in 0..count {
            let mut e = vec![0u32; num_vars];
            for _ in 0..degree {
                e[rng.below(num_vars as u64) as usize] += 1;
            }
            let c = random_nonzero_scalar(rng, field)?;
            f.add_term(e, c);
        }
        Ok(f)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|e| e.iter().rposition(|&x| x > 0)).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        debug_assert_eq!(exps.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        let f = self.field;
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = f.add(v, &c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiForm {
        let mut out = Self::zero(self.field, self.num_vars, self.degree);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), self.field.mul(v, c));
        }
        out
    }

    /// The same polynomial in `num_vars` variables (extra variables unused).
    pub fn widen(&self, num_vars: usize) -> MultiForm {
        assert!(num_vars >= self.num_vars);
        let mut out = Self::zero(self.field, num_vars, self.degree);
        for (e, v) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(num_vars, 0);
            out.terms.insert(e2, v.clone());
        }
        out
    }

    /// Formal partial derivative in `x_i`.
    pub fn partial(&self, i: usize) -> MultiForm {
        assert!(i < self.num_vars);
        let f = self.field;
        let mut out = Self::zero(f, self.num_vars, self.degree.saturating_sub(1));
        for (e, v) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, f.mul(v, &f.from_i64(e[i] as i64)));
        }
        out
    }

    /// Substitutes `x_i = param[i]`; all components must share one degree.
    pub fn restrict(&self, param: &[BiForm]) -> Result<BiForm> {
        if param.len() != self.num_vars {
            return Err(Error::InvalidArgument(format!(
                "{} components for a form in {} variables",
                param.len(),
                self.num_vars
            )));
        }
        let e = param.first().map_or(0, BiForm::degree);
        if let Some(bad) = param.iter().find(|p| p.degree() != e) {
            return Err(Error::DegreeMismatch(format!(
                "parametrization mixes degrees {e} and {}",
                bad.degree()
            )));
        }
        let f = self.field;
        let mut acc = BiForm::zero(f, self.degree as i64 * e);
        let mut powers: Vec<Vec<BiForm>> = param.iter().map(|p| vec![BiForm::one(f), p.clone()]).collect();
        for (exps, c) in &self.terms {
            let mut m = BiForm::constant(f, c.clone());
            for (i, &k) in exps.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &param[i];
                    powers[i].push(next);
                }
                m = &m * &powers[i][k as usize];
            }
            acc = &acc + &m;
        }
        Ok(acc)
    }

    fn combine(&self, other: &MultiForm, negate: bool) -> MultiForm {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let degree = match (self.is_zero(), other.is_zero()) {
            (true, false) => other.degree,
            (false, true) => self.degree,
            _ => {
                assert_eq!(self.degree, other.degree, "adding forms of different degrees");
                self.degree
            }
        };
        let mut out = self.clone();
        out.degree = degree;
        for (e, v) in &other.terms {
            let v = if negate { self.field.neg(v) } else { v.clone() };
            out.add_term(e.clone(), v);
        }
        out
    }
}

impl std::ops::Add for &MultiForm {
    type Output = MultiForm;
    fn add(self, rhs: &MultiForm) -> MultiForm {
        self.combine(rhs, false)
    }
}

impl std::ops::Sub for &MultiForm {
    type Output = MultiForm;
    fn sub(self, rhs: &MultiForm) -> MultiForm {
        self.combine(rhs, true)
    }
}

impl std::ops::Neg for &MultiForm {
    type Output = MultiForm;
    fn neg(self) -> MultiForm {
        self.scale(&self.field.from_i64(-1))
    }
}

impl std::ops::Mul for &MultiForm {
    type Output = MultiForm;
    fn mul(self, rhs: &MultiForm) -> MultiForm {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let f = self.field;
        let mut out = MultiForm::zero(f, self.num_vars, self.degree + rhs.degree);
        for (ea, va) in &self.terms {
            for (eb, vb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, f.mul(va, vb));
            }
        }
        out
    }
}

impl fmt::Display for MultiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending lex order reads naturally: x0^2 before x0*x1.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("x{i}") } else { format!("x{i}^{x}") })
                .collect();
            let (neg, mag) = match self.field.to_i64(c) {
                Some(v) if v < 0 => (true, (-v).to_string()),
                Some(v) => (false, v.to_string()),
                None => (false, format!("({c})")),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiForm[{} vars, deg {}]({})", self.num_vars, self.degree, self)
    }
}
