use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    poly_matrix_det, poly_matrix_rank, random_scalar, DenseMatrix, FieldSpec, IncrementalBasis,
    Scalar, SplitMix64, UniPoly, DEFAULT_SEED,
};
use crate::error::{Error, Result};
use crate::forms::{gcd_set, BiForm};
use crate::graded::sections::splitting_from_h0;
use crate::graded::{BundleSum, SplittingType};

/// A homomorphism `⊕ O(a_i) → ⊕ O(b_j)` on P^1.
///
/// Columns follow `source` and rows follow `target` in the order given (not
/// necessarily sorted); entry `(j, i)` has degree `b_j - a_i` and is zero
/// whenever that is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    field: FieldSpec,
    source: Vec<i64>,
    target: Vec<i64>,
    entries: Vec<Vec<BiForm>>,
}

impl GradedMap {
    pub fn new(
        field: FieldSpec,
        source: Vec<i64>,
        target: Vec<i64>,
        entries: Vec<Vec<BiForm>>,
    ) -> Result<Self> {
        if entries.len() != target.len() {
            return Err(Error::InvalidArgument(format!(
                "{} rows for a target of rank {}",
                entries.len(),
                target.len()
            )));
        }
        let mut checked = Vec::with_capacity(entries.len());
        for (j, row) in entries.into_iter().enumerate() {
            if row.len() != source.len() {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has {} entries for a source of rank {}",
                    row.len(),
                    source.len()
                )));
            }
            let mut out = Vec::with_capacity(row.len());
            for (i, e) in row.into_iter().enumerate() {
                if e.field() != field {
                    return Err(Error::FieldMismatch(format!("entry ({j},{i}) over {}", e.field())));
                }
                let want = target[j] - source[i];
                if e.is_zero() {
                    out.push(BiForm::zero(field, want));
                } else if e.degree() != want {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({j},{i}) = {e} has degree {}, expected {want}",
                        e.degree()
                    )));
                } else {
                    out.push(e);
                }
            }
            checked.push(out);
        }
        Ok(GradedMap { field, source, target, entries: checked })
    }

    pub fn zero(field: FieldSpec, source: Vec<i64>, target: Vec<i64>) -> Self {
        let entries = target
            .iter()
            .map(|b| source.iter().map(|a| BiForm::zero(field, b - a)).collect())
            .collect();
        GradedMap { field, source, target, entries }
    }

    /// A single-row map to `O(target)`.
    pub fn from_row(field: FieldSpec, source: Vec<i64>, target: i64, row: Vec<BiForm>) -> Result<Self> {
        Self::new(field, source, vec![target], vec![row])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Source degrees in column order.
    pub fn source_degrees(&self) -> &[i64] {
        &self.source
    }

    /// Target degrees in row order.
    pub fn target_degrees(&self) -> &[i64] {
        &self.target
    }

    pub fn source(&self) -> BundleSum {
        BundleSum::new(self.source.clone())
    }

    pub fn target(&self) -> BundleSum {
        BundleSum::new(self.target.clone())
    }

    pub fn entries(&self) -> &[Vec<BiForm>] {
        &self.entries
    }

    pub fn entry(&self, j: usize, i: usize) -> &BiForm {
        &self.entries[j][i]
    }

    /// The induced map `H^0(⊕ O(a_i + t)) → H^0(⊕ O(b_j + t))` in monomial bases.
    ///
    /// Summand `i` contributes the columns `s^(a_i+t-k) t^k`, `k = 0..=a_i+t`,
    /// and likewise for rows; blocks are laid out in source/target order.
    pub fn section_matrix(&self, t: i64) -> DenseMatrix {
        let width = |d: i64| (d + t + 1).max(0) as usize;
        let col_off: Vec<usize> = offsets(self.source.iter().map(|&a| width(a)));
        let row_off: Vec<usize> = offsets(self.target.iter().map(|&b| width(b)));
        let cols = col_off.last().copied().unwrap_or(0);
        let rows = row_off.last().copied().unwrap_or(0);
        let mut m = DenseMatrix::zeros(self.field, rows, cols);
        for (j, row) in self.entries.iter().enumerate() {
            for (i, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                for k in 0..width(self.source[i]) {
                    for (l, c) in e.coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            m.set(row_off[j] + k + l, col_off[i] + k, c.clone());
                        }
                    }
                }
            }
        }
        m
    }

    fn chart_matrix(&self) -> Vec<Vec<UniPoly>> {
        self.entries.iter().map(|row| row.iter().map(BiForm::dehomogenize_t).collect()).collect()
    }

    /// Rank over the function field K(P^1), computed exactly.
    pub fn exact_generic_rank(&self) -> usize {
        poly_matrix_rank(self.chart_matrix(), self.field)
    }

    fn eval_rank(&self, s: &Scalar, t: &Scalar) -> Result<usize> {
        let rows: Vec<Vec<Scalar>> =
            self.entries.iter().map(|row| row.iter().map(|e| e.eval(s, t)).collect()).collect();
        if rows.is_empty() {
            return Ok(0);
        }
        DenseMatrix::from_rows(self.field, &rows)?.rank()
    }

    /// Rank at a random point of P^1, maximized over three samples.
    ///
    /// A sampled rank below `min(rows, cols)` is confirmed by exact
    /// elimination over `K(P^1)`, so small fields cannot under-report.
    pub fn generic_rank(&self, rng: &mut SplitMix64) -> Result<usize> {
        if !self.field.is_prime() {
            return Err(Error::RationalField);
        }
        let full = self.source.len().min(self.target.len());
        let mut best = 0;
        for _ in 0..3 {
            let (s, t) = loop {
                let s = random_scalar(rng, self.field)?;
                let t = random_scalar(rng, self.field)?;
                if !(s.is_zero() && t.is_zero()) {
                    break (s, t);
                }
            };
            best = best.max(self.eval_rank(&s, &t)?);
            if best == full {
                return Ok(best);
            }
        }
        Ok(self.exact_generic_rank())
    }

    /// Generic rank without a caller-supplied generator; over Q this is exact elimination.
    fn internal_rank(&self) -> Result<usize> {
        if self.field.is_prime() {
            self.generic_rank(&mut SplitMix64::new(DEFAULT_SEED))
        } else {
            Ok(self.exact_generic_rank())
        }
    }

    fn twist_cap(&self) -> i64 {
        self.source.iter().chain(&self.target).map(|d| d.abs()).sum::<i64>() + 2
    }

    /// Splitting type of the kernel, from section nullities over twists.
    pub fn kernel_splitting(&self) -> Result<SplittingType> {
        let rank = self.source.len() - self.internal_rank()?;
        let Some(&top) = self.source.iter().max() else {
            return Ok(SplittingType::default());
        };
        splitting_from_h0(rank, -top - 1, self.twist_cap(), "kernel", |t| {
            self.section_matrix(t).nullity()
        })
    }

    /// Whether the map has full row rank at every point of P^1.
    ///
    /// Equivalent to the maximal minors having no common zero; the gcd is
    /// accumulated minor by minor and stops once it is a nonzero constant.
    pub fn surjective_everywhere(&self) -> bool {
        let r = self.target.len();
        if r > self.source.len() {
            return false;
        }
        if r == 0 {
            return true;
        }
        let chart = self.chart_matrix();
        let target_total: i64 = self.target.iter().sum();
        let mut g: Option<BiForm> = None;
        for cols in (0..self.source.len()).combinations(r) {
            let sub: Vec<Vec<UniPoly>> =
                chart.iter().map(|row| cols.iter().map(|&i| row[i].clone()).collect()).collect();
            let det = poly_matrix_det(sub, self.field);
            if det.is_zero() {
                continue;
            }
            let degree = target_total - cols.iter().map(|&i| self.source[i]).sum::<i64>();
            let minor = BiForm::homogenize_t(self.field, &det, degree);
            let next = match &g {
                None => gcd_set(&[minor]),
                Some(prev) => gcd_set(&[prev.clone(), minor]),
            }
            .expect("nonzero minor");
            if next.is_nonzero_constant() {
                return true;
            }
            g = Some(next);
        }
        false
    }

    /// The transpose `⊕ O(-b_j) → ⊕ O(-a_i)`.
    pub fn dual(&self) -> GradedMap {
        let entries = (0..self.source.len())
            .map(|i| self.entries.iter().map(|row| row[i].clone()).collect())
            .collect();
        GradedMap {
            field: self.field,
            source: self.target.iter().map(|b| -b).collect(),
            target: self.source.iter().map(|a| -a).collect(),
            entries,
        }
    }

    /// The same matrix between `⊕ O(a_i + t)` and `⊕ O(b_j + t)`.
    pub fn twist(&self, t: i64) -> GradedMap {
        GradedMap {
            field: self.field,
            source: self.source.iter().map(|a| a + t).collect(),
            target: self.target.iter().map(|b| b + t).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Rows of `self` followed by rows of `other`; the ordered sources must agree.
    pub fn stack(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.source != other.source || self.field != other.field {
            return Err(Error::InvalidArgument(format!(
                "stacking maps with sources {:?} and {:?}",
                self.source, other.source
            )));
        }
        let mut out = self.clone();
        out.target.extend_from_slice(&other.target);
        out.entries.extend(other.entries.iter().cloned());
        Ok(out)
    }

    /// `self ∘ inner`, where the target of `inner` is the source of `self`.
    pub fn compose(&self, inner: &GradedMap) -> Result<GradedMap> {
        if inner.target != self.source {
            return Err(Error::InvalidArgument("composition of incompatible maps".into()));
        }
        let f = self.field;
        let entries = self
            .target
            .iter()
            .enumerate()
            .map(|(j, b)| {
                (0..inner.source.len())
                    .map(|i| {
                        let mut acc = BiForm::zero(f, b - inner.source[i]);
                        for l in 0..self.source.len() {
                            acc = &acc + &(&self.entries[j][l] * &inner.entries[l][i]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GradedMap::new(f, inner.source.clone(), self.target.clone(), entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(BiForm::is_zero)
    }

    /// A uniformly random map between the given sums.
    pub fn random(field: FieldSpec, source: Vec<i64>, target: Vec<i64>, rng: &mut SplitMix64) -> Result<Self> {
        let mut entries = Vec::with_capacity(target.len());
        for b in &target {
            let mut row = Vec::with_capacity(source.len());
            for a in &source {
                row.push(random_form(field, b - a, rng)?);
            }
            entries.push(row);
        }
        Self::new(field, source, target, entries)
    }

    /// A uniformly random map `⊕ O(a_i) → O(d)`.
    pub fn random_hom(field: FieldSpec, source: &BundleSum, d: i64, rng: &mut SplitMix64) -> Result<Self> {
        Self::random(field, source.degrees().to_vec(), vec![d], rng)
    }

    /// Minimal generators of the kernel, as an injective map `⊕ O(c_l) → source`
    /// whose image is the kernel.
    ///
    /// Generators are chosen degree by degree from the top: at twist `-c` the
    /// kernel sections not spanned by products of higher generators with
    /// monomials supply the new generators of degree `c`.
    pub fn kernel_generators(&self) -> Result<GradedMap> {
        let splitting = self.kernel_splitting()?;
        let f = self.field;
        let mut gens: Vec<(i64, Vec<BiForm>)> = Vec::new();
        let mut distinct: Vec<i64> = splitting.degrees().to_vec();
        distinct.dedup();
        for &c in distinct.iter().rev() {
            let need = splitting.degrees().iter().filter(|&&x| x == c).count();
            let t = -c;
            let dim = self.source.iter().map(|a| (a + t + 1).max(0) as usize).sum();
            let mut span = IncrementalBasis::new(f, dim);
            for (c_high, g) in &gens {
                let shift = c_high - c;
                for k in 0..=shift {
                    let v = flatten(g.iter().map(|x| x.shift(shift - k, k)), &self.source, t);
                    span.insert(&v);
                }
            }
            let mut added = 0;
            for v in self.section_matrix(t).kernel_basis()? {
                if added == need {
                    break;
                }
                if span.insert(&v) {
                    gens.push((c, unflatten(f, &v, &self.source, t)));
                    added += 1;
                }
            }
            if added != need {
                return Err(Error::Inconsistent(format!(
                    "found {added} of {need} kernel generators of degree {c}"
                )));
            }
        }
        let source: Vec<i64> = gens.iter().map(|(c, _)| *c).collect();
        let entries = (0..self.source.len())
            .map(|i| gens.iter().map(|(_, g)| g[i].clone()).collect())
            .collect();
        GradedMap::new(f, source, self.source.clone(), entries)
    }
}

fn offsets(widths: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for w in widths {
        out.push(out.last().unwrap() + w);
    }
    out
}

/// Concatenated coefficient vectors of forms of degrees `a_i + t`.
fn flatten(forms: impl Iterator<Item = BiForm>, source: &[i64], t: i64) -> Vec<Scalar> {
    let mut v = Vec::new();
    for (form, a) in forms.zip(source) {
        if a + t >= 0 {
            debug_assert_eq!(form.degree(), a + t);
            v.extend_from_slice(form.coeffs());
        }
    }
    v
}

fn unflatten(field: FieldSpec, v: &[Scalar], source: &[i64], t: i64) -> Vec<BiForm> {
    let mut pos = 0;
    source
        .iter()
        .map(|a| {
            let d = a + t;
            if d < 0 {
                return BiForm::zero(field, d);
            }
            let w = (d + 1) as usize;
            let form = BiForm::from_coeffs(field, v[pos..pos + w].to_vec()).expect("valid slice");
            pos += w;
            form
        })
        .collect()
}

/// A uniformly random form of the given degree (zero if negative).
pub fn random_form(field: FieldSpec, degree: i64, rng: &mut SplitMix64) -> Result<BiForm> {
    if degree < 0 {
        return Ok(BiForm::zero(field, degree));
    }
    let coeffs = (0..=degree).map(|_| random_scalar(rng, field)).collect::<Result<Vec<_>>>()?;
    BiForm::from_coeffs(field, coeffs)
}

/// Frequencies of kernel splittings over repeated random trials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RateReport {
    pub trials: usize,
    pub balanced: usize,
    pub splittings: BTreeMap<SplittingType, usize>,
}

impl RateReport {
    pub fn record(&mut self, s: SplittingType) {
        self.trials += 1;
        if s.is_balanced() {
            self.balanced += 1;
        }
        *self.splittings.entry(s).or_default() += 1;
    }

    pub fn rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.balanced as f64 / self.trials as f64
        }
    }

    /// Runs `trials` independent samples in parallel; trial `i` draws from
    /// the stream derived from `master` and `i`.
    pub fn collect(
        trials: usize,
        master: u64,
        sample: impl Fn(&mut SplitMix64) -> Result<SplittingType> + Sync,
    ) -> Result<RateReport> {
        let results: Vec<SplittingType> = (0..trials)
            .into_par_iter()
            .map(|i| sample(&mut SplitMix64::derive(master, i as u64)))
            .collect::<Result<_>>()?;
        let mut report = RateReport::default();
        for s in results {
            report.record(s);
        }
        Ok(report)
    }
}

/// How often the kernel of a random `⊕ O(a_i) → O(d)` is balanced.
pub fn balanced_kernel_rate(
    field: FieldSpec,
    source: &BundleSum,
    d: i64,
    trials: usize,
    rng: &mut SplitMix64,
) -> Result<RateReport> {
    let master = rng.next_u64();
    RateReport::collect(trials, master, |g| {
        GradedMap::random_hom(field, source, d, g)?.kernel_splitting()
    })
}
