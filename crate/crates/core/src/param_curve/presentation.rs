use crate::algebra::FieldSpec;
use crate::error::{Error, Result};
use crate::forms::{BiForm, MultiForm};
use crate::graded::GradedMap;
use crate::param_curve::ParamCurve;

/// Generators `F_i` of a curve's ideal together with syzygies `S` with `S · F = 0`.
///
/// Row `r` of `S` is homogeneous: `deg S_{r,i} + deg F_i = s_r` for every nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    field: FieldSpec,
    generators: Vec<MultiForm>,
    syzygies: Vec<Vec<MultiForm>>,
    row_degrees: Vec<u32>,
}

impl Presentation {
    pub fn new(field: FieldSpec, generators: Vec<MultiForm>, syzygies: Vec<Vec<MultiForm>>) -> Result<Self> {
        let nv = generators.first().map(MultiForm::num_vars).ok_or_else(|| {
            Error::Presentation("no generators".into())
        })?;
        if generators.iter().any(|g| g.is_zero() || g.num_vars() != nv || g.field() != field) {
            return Err(Error::Presentation("generators must be nonzero forms over one ring".into()));
        }
        let mut row_degrees = Vec::with_capacity(syzygies.len());
        for (r, row) in syzygies.iter().enumerate() {
            if row.len() != generators.len() {
                return Err(Error::Presentation(format!("syzygy row {r} has {} entries", row.len())));
            }
            let mut deg = None;
            for (s, g) in row.iter().zip(&generators) {
                if s.is_zero() {
                    continue;
                }
                if s.num_vars() != nv || s.field() != field {
                    return Err(Error::Presentation(format!("syzygy row {r} lives in another ring")));
                }
                let d = s.degree() + g.degree();
                if deg.is_some_and(|x| x != d) {
                    return Err(Error::Presentation(format!("syzygy row {r} is not homogeneous")));
                }
                deg = Some(d);
            }
            let deg = deg.ok_or_else(|| Error::Presentation(format!("syzygy row {r} is zero")))?;
            let mut acc = MultiForm::zero(field, nv, deg);
            for (s, g) in row.iter().zip(&generators) {
                if !s.is_zero() {
                    acc = &acc + &(s * g);
                }
            }
            if !acc.is_zero() {
                return Err(Error::Presentation(format!("syzygy row {r} gives {acc}, not 0")));
            }
            row_degrees.push(deg);
        }
        Ok(Presentation { field, generators, syzygies, row_degrees })
    }

    pub fn generators(&self) -> &[MultiForm] {
        &self.generators
    }

    pub fn syzygies(&self) -> &[Vec<MultiForm>] {
        &self.syzygies
    }

    pub fn row_degrees(&self) -> &[u32] {
        &self.row_degrees
    }

    fn check_curve(&self, c: &ParamCurve) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(format!("curve over {}, presentation over {}", c.field(), self.field)));
        }
        if c.n() + 1 != self.generators[0].num_vars() {
            return Err(Error::Presentation("curve and presentation live in different spaces".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if !g.restrict(c.components())?.is_zero() {
                return Err(Error::Presentation(format!("generator {i} does not vanish on the curve")));
            }
        }
        Ok(())
    }

    /// `N_{C/P^n} = ker(⊕ O(e·d_i) → ⊕ O(e·s_r))`, the map given by the
    /// restricted syzygy rows.
    pub fn normal_map(&self, c: &ParamCurve) -> Result<GradedMap> {
        self.check_curve(c)?;
        let e = c.degree();
        let source: Vec<i64> = self.generators.iter().map(|g| e * g.degree() as i64).collect();
        let target: Vec<i64> = self.row_degrees.iter().map(|&s| e * s as i64).collect();
        let mut rows = Vec::with_capacity(self.syzygies.len());
        for (r, row) in self.syzygies.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (i, s) in row.iter().enumerate() {
                out.push(if s.is_zero() {
                    BiForm::zero(self.field, target[r] - source[i])
                } else {
                    s.restrict(c.components())?
                });
            }
            rows.push(out);
        }
        GradedMap::new(self.field, source, target, rows)
    }

    /// Degree of `Σ A_i F_i`.
    pub fn hypersurface_degree(&self, coeffs: &[MultiForm]) -> Result<u32> {
        if coeffs.len() != self.generators.len() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.generators.len()
            )));
        }
        let mut deg = None;
        for (a, g) in coeffs.iter().zip(&self.generators) {
            if a.is_zero() {
                continue;
            }
            let d = a.degree() + g.degree();
            if deg.is_some_and(|x| x != d) {
                return Err(Error::DegreeMismatch(format!("term {a} · {g} has degree {d}")));
            }
            deg = Some(d);
        }
        deg.ok_or(Error::AllZero)
    }

    /// The row `(A_i|_C)` of `N_{C/P^n} → O(e·deg F)` for `F = Σ A_i F_i`.
    pub fn hypersurface_row(&self, c: &ParamCurve, coeffs: &[MultiForm]) -> Result<(i64, Vec<BiForm>)> {
        if coeffs.len() != self.generators.len() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.generators.len()
            )));
        }
        let e = c.degree();
        let deg = self.hypersurface_degree(coeffs)? as i64;
        let row = coeffs
            .iter()
            .zip(&self.generators)
            .map(|(a, g)| {
                if a.is_zero() {
                    Ok(BiForm::zero(self.field, e * (deg - g.degree() as i64)))
                } else {
                    a.restrict(c.components())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((e * deg, row))
    }

    /// The map whose kernel is `N_{C/X}` for `X = V(Σ A_i F_i)`: the
    /// presentation's syzygy rows stacked with the hypersurface row.
    pub fn normal_map_in(&self, c: &ParamCurve, coeffs: &[MultiForm]) -> Result<GradedMap> {
        let base = self.normal_map(c)?;
        let (target, row) = self.hypersurface_row(c, coeffs)?;
        let extra = GradedMap::from_row(self.field, base.source_degrees().to_vec(), target, row)?;
        base.stack(&extra)
    }
}
