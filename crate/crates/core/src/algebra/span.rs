use crate::algebra::field::{FieldSpec, Scalar};

/// A growing set of linearly independent vectors kept in echelon form.
///
/// Each stored row has a pivot whose entry is 1 and whose column is zero in
/// every earlier row; insertion reduces against the stored rows first.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    field: FieldSpec,
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl IncrementalBasis {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        IncrementalBasis { field, dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length");
        let f = self.field;
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` if it is independent of the stored vectors; reports whether it was.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep earlier rows reduced in the new pivot column
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependent_vectors_rejected() {
        let f = FieldSpec::prime(5).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let mut b = IncrementalBasis::new(f, 3);
        assert!(b.insert(&v(&[1, 2, 0])));
        assert!(b.insert(&v(&[0, 1, 1])));
        assert!(!b.insert(&v(&[2, 0, 1]))); // 2*(1,2,0) - 4*(0,1,1) mod 5
        assert!(b.contains(&v(&[1, 3, 1])));
        assert!(b.insert(&v(&[0, 0, 1])));
        assert_eq!(b.len(), 3);
    }
}
