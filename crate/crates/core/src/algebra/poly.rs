//! Dense univariate polynomials over a [`FieldSpec`], used for dehomogenized
//! binary forms (gcds) and for exact generic ranks over small fields.

use crate::algebra::field::{FieldSpec, Scalar};

/// Coefficients low degree first, with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly, f: FieldSpec) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    f.add(
                        self.coeffs.get(i).unwrap_or(&z),
                        other.coeffs.get(i).unwrap_or(&z),
                    )
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly, f: FieldSpec) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    f.sub(
                        self.coeffs.get(i).unwrap_or(&z),
                        other.coeffs.get(i).unwrap_or(&z),
                    )
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly, f: FieldSpec) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &UniPoly, f: FieldSpec) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(&divisor.coeffs[dd]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if nd < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![f.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self, f: FieldSpec) -> UniPoly {
        match self.coeffs.last() {
            None => UniPoly::zero(),
            Some(lead) => {
                let inv = f.inv(lead).expect("nonzero leading coefficient");
                UniPoly::new(self.coeffs.iter().map(|c| f.mul(c, &inv)).collect())
            }
        }
    }

    pub fn scale(&self, c: &Scalar, f: FieldSpec) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| f.mul(x, c)).collect())
    }

    pub fn eval(&self, x: &Scalar, f: FieldSpec) -> Scalar {
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Quotient by `divisor`, which must divide exactly.
    pub fn div_exact(&self, divisor: &UniPoly, f: FieldSpec) -> UniPoly {
        let (q, r) = self.div_rem(divisor, f);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd by Euclid; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly, f: FieldSpec) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }
}

/// Fraction-free elimination on a polynomial matrix; returns the number of
/// pivots and, for square input, the determinant.
///
/// Every entry after step `k` is a `(k+1)`-minor of the input, so division by
/// the previous pivot is exact.
fn bareiss(mut m: Vec<Vec<UniPoly>>, f: FieldSpec) -> (usize, UniPoly) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = UniPoly::new(vec![f.one()]);
    let mut sign_negative = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign_negative = !sign_negative;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let a = m[r][c].mul(&m[i][j], f);
                let b = m[i][c].mul(&m[r][j], f);
                m[i][j] = a.sub(&b, f).div_exact(&prev, f);
            }
            m[i][c] = UniPoly::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows {
        if sign_negative {
            prev.scale(&f.from_i64(-1), f)
        } else {
            prev
        }
    } else {
        UniPoly::zero()
    };
    (r, det)
}

/// Rank of a matrix over the rational function field in one variable.
pub fn poly_matrix_rank(m: Vec<Vec<UniPoly>>, f: FieldSpec) -> usize {
    bareiss(m, f).0
}

/// Determinant of a square polynomial matrix.
pub fn poly_matrix_det(m: Vec<Vec<UniPoly>>, f: FieldSpec) -> UniPoly {
    assert!(m.iter().all(|row| row.len() == m.len()), "square matrix required");
    if m.is_empty() {
        return UniPoly::new(vec![f.one()]);
    }
    bareiss(m, f).1
}
