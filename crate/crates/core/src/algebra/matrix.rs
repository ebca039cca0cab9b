use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::field::{inv_mod, FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Largest dimension accepted for elimination over the rationals.
pub const RATIONAL_CAPACITY: usize = 400;

#[derive(Clone, PartialEq, Eq)]
enum Storage {
    Residues(Vec<u64>),
    Fractions(Vec<BigRational>),
}

/// A dense row-major matrix over a [`FieldSpec`].
///
/// Prime-field entries are stored as raw residues so elimination runs on
/// machine words; rational entries are kept as fractions and eliminated
/// fraction-free after clearing denominators.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Storage,
}

impl DenseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = match field {
            FieldSpec::Prime(_) => Storage::Residues(vec![0; rows * cols]),
            FieldSpec::Rational => Storage::Fractions(vec![BigRational::zero(); rows * cols]),
        };
        DenseMatrix { rows, cols, field, data }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, x) in row.iter().enumerate() {
                if !field.contains(x) {
                    return Err(Error::FieldMismatch(format!("entry ({r},{c}) = {x}")));
                }
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        match &self.data {
            Storage::Residues(v) => Scalar::Residue(v[r * self.cols + c]),
            Storage::Fractions(v) => Scalar::Fraction(v[r * self.cols + c].clone()),
        }
    }

    /// Panics if `x` belongs to a different field.
    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        let idx = r * self.cols + c;
        match (&mut self.data, x) {
            (Storage::Residues(v), Scalar::Residue(x)) => v[idx] = x,
            (Storage::Fractions(v), Scalar::Fraction(x)) => v[idx] = x,
            _ => panic!("scalar does not belong to {:?}", self.field),
        }
    }

    /// Adds `x` to entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, x: &Scalar) {
        let idx = r * self.cols + c;
        match (&mut self.data, x, self.field) {
            (Storage::Residues(v), Scalar::Residue(x), FieldSpec::Prime(p)) => {
                v[idx] = (v[idx] + x) % p;
            }
            (Storage::Fractions(v), Scalar::Fraction(x), _) => v[idx] += x,
            _ => panic!("scalar does not belong to {:?}", self.field),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &DenseMatrix) -> Result<Self> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::InvalidArgument("vstack shape or field mismatch".into()));
        }
        let mut m = Self::zeros(self.field, self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, c, other.get(r, c));
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    acc = self.field.add(&acc, &self.field.mul(&self.get(r, c), x));
                }
                acc
            })
            .collect()
    }

    fn check_capacity(&self) -> Result<()> {
        if self.field == FieldSpec::Rational
            && (self.rows > RATIONAL_CAPACITY || self.cols > RATIONAL_CAPACITY)
        {
            return Err(Error::Capacity(format!(
                "{}x{} rational matrix exceeds {RATIONAL_CAPACITY}x{RATIONAL_CAPACITY}; use a prime field",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Rank over the field. Partial pivoting over F_p, Bareiss over Q.
    pub fn rank(&self) -> Result<usize> {
        self.check_capacity()?;
        Ok(match (&self.data, self.field) {
            (Storage::Residues(v), FieldSpec::Prime(p)) => {
                let mut a = v.clone();
                echelon_mod(&mut a, self.rows, self.cols, p).len()
            }
            (Storage::Fractions(_), _) => {
                let mut a = self.integer_rows();
                bareiss_echelon(&mut a).len()
            }
            _ => unreachable!(),
        })
    }

    pub fn nullity(&self) -> Result<usize> {
        Ok(self.cols - self.rank()?)
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        self.check_capacity()?;
        match (&self.data, self.field) {
            (Storage::Residues(v), FieldSpec::Prime(p)) => {
                let mut a = v.clone();
                let pivots = echelon_mod(&mut a, self.rows, self.cols, p);
                reduce_mod(&mut a, self.cols, &pivots, p);
                let mut basis = Vec::new();
                for free in free_columns(&pivots, self.cols) {
                    let mut x = vec![0u64; self.cols];
                    x[free] = 1;
                    for (r, &pc) in pivots.iter().enumerate() {
                        x[pc] = (p - a[r * self.cols + free]) % p;
                    }
                    basis.push(x.into_iter().map(Scalar::Residue).collect());
                }
                Ok(basis)
            }
            (Storage::Fractions(_), _) => {
                let mut a = self.integer_rows();
                let pivots = bareiss_echelon(&mut a);
                Ok(free_columns(&pivots, self.cols)
                    .into_iter()
                    .map(|free| back_substitute(&a, &pivots, free, self.cols))
                    .map(|x| x.into_iter().map(Scalar::Fraction).collect())
                    .collect())
            }
            _ => unreachable!(),
        }
    }

    /// One solution of `self * x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, self.field.neg(&rhs[r]));
        }
        // A vector (x, 1) in the kernel of [A | -b] solves A x = b.
        for v in aug.kernel_basis()? {
            if !v[self.cols].is_zero() {
                let scale = self.field.inv(&v[self.cols]).expect("nonzero");
                return Ok(Some(
                    v[..self.cols].iter().map(|x| self.field.mul(x, &scale)).collect(),
                ));
            }
        }
        Ok(None)
    }

    /// Rows scaled to integers by their denominators' lcm; rank and kernel are unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let Storage::Fractions(v) = &self.data else {
            unreachable!()
        };
        (0..self.rows)
            .map(|r| {
                let row = &v[r * self.cols..(r + 1) * self.cols];
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect()
            })
            .collect()
    }
}

fn free_columns(pivots: &[usize], cols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// Row echelon form mod p in place; returns pivot columns, pivot rows normalized to 1.
fn echelon_mod(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        let (head, tail) = a.split_at_mut((r + 1) * cols);
        let pivot_row = &head[r * cols..];
        for i in 0..rows - r - 1 {
            let row = &mut tail[i * cols..(i + 1) * cols];
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for j in c..cols {
                row[j] = (row[j] + nf * pivot_row[j]) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Clears entries above pivots, producing reduced row echelon form.
fn reduce_mod(a: &mut [u64], cols: usize, pivots: &[usize], p: u64) {
    for (r, &c) in pivots.iter().enumerate().rev() {
        for i in 0..r {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for j in c..cols {
                a[i * cols + j] = (a[i * cols + j] + nf * a[r * cols + j]) % p;
            }
        }
    }
}

/// Fraction-free (Bareiss) row echelon form in place; returns pivot columns.
/// Every division performed is exact.
fn bareiss_echelon(a: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(pr, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel vector with a 1 in column `free`, from a (non-reduced) echelon form.
fn back_substitute(
    a: &[Vec<BigInt>],
    pivots: &[usize],
    free: usize,
    cols: usize,
) -> Vec<BigRational> {
    let mut x = vec![BigRational::zero(); cols];
    x[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = BigRational::zero();
        for j in pc + 1..cols {
            if !a[r][j].is_zero() && !x[j].is_zero() {
                acc += BigRational::from_integer(a[r][j].clone()) * &x[j];
            }
        }
        x[pc] = -acc / BigRational::from_integer(a[r][pc].clone());
    }
    x
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
