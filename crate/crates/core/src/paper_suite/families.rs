use std::fmt;

use serde::Serialize;

use crate::algebra::{random_scalar, FieldSpec, SplitMix64, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::forms::{BiForm, MultiForm};
use crate::graded::{BundleSum, GradedMap, SplittingType};
use crate::param_curve::{ParamCurve, Presentation};
use crate::paper_suite::expected_balanced;
use crate::rnc::{ci_normal_map, HypersurfaceCombo, RncModel};

/// The explicit constructions with known normal bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum FamilyId {
    /// One quadric `Σ q_{i,i+1}` through `R_n ⊂ P^n`, `n >= 3`.
    CorQuadric { n: usize },
    /// Two quadrics through `R_n ⊂ P^n`, `n >= 5`.
    Ci22 { n: usize },
    /// Three quadrics through `R_n ⊂ P^n`, `n >= 6`.
    Ci222 { n: usize },
    /// `k` quadrics through `R_{2k+1} ⊂ P^{2k+1}`, `k >= 1`.
    Quadrics2k1 { k: usize },
    /// `k` quadrics through `R_{2k} ⊂ P^{2k}`, `k >= 2`.
    Quadrics2k { k: usize },
    /// `k` quadrics through `R_e ⊂ P^{k+2}`, `2 <= e <= k + 2`.
    QuadricsK2 { k: usize, e: usize },
    /// The quintic `[s^5 : s^4 t : s^2 t^3 : s t^4 : t^5]` in a quartic threefold.
    Quartic4n1,
}

impl FamilyId {
    pub const TAGS: [&'static str; 7] =
        ["cor_quadric", "ci_22", "ci_222", "quadrics_2k1", "quadrics_2k", "quadrics_k2", "quartic_4n1"];

    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::CorQuadric { .. } => "cor_quadric",
            FamilyId::Ci22 { .. } => "ci_22",
            FamilyId::Ci222 { .. } => "ci_222",
            FamilyId::Quadrics2k1 { .. } => "quadrics_2k1",
            FamilyId::Quadrics2k { .. } => "quadrics_2k",
            FamilyId::QuadricsK2 { .. } => "quadrics_k2",
            FamilyId::Quartic4n1 => "quartic_4n1",
        }
    }

    /// Builds an id from a tag and whichever of `n, k, e` it needs.
    pub fn parse(tag: &str, n: Option<usize>, k: Option<usize>, e: Option<usize>) -> Result<Self> {
        let need = |x: Option<usize>, name: &str| {
            x.ok_or_else(|| Error::InvalidArgument(format!("family {tag} needs --{name}")))
        };
        let id = match tag {
            "cor_quadric" => FamilyId::CorQuadric { n: need(n, "n")? },
            "ci_22" => FamilyId::Ci22 { n: need(n, "n")? },
            "ci_222" => FamilyId::Ci222 { n: need(n, "n")? },
            "quadrics_2k1" => FamilyId::Quadrics2k1 { k: need(k, "k")? },
            "quadrics_2k" => FamilyId::Quadrics2k { k: need(k, "k")? },
            "quadrics_k2" => {
                let k = need(k, "k")?;
                FamilyId::QuadricsK2 { k, e: e.unwrap_or(k + 2) }
            }
            "quartic_4n1" => FamilyId::Quartic4n1,
            _ => return Err(Error::InvalidArgument(format!("unknown family {tag}; expected one of {:?}", Self::TAGS))),
        };
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilyId::CorQuadric { n } => n >= 3,
            FamilyId::Ci22 { n } => n >= 5,
            FamilyId::Ci222 { n } => n >= 6,
            FamilyId::Quadrics2k1 { k } => k >= 1,
            FamilyId::Quadrics2k { k } => k >= 2,
            FamilyId::QuadricsK2 { k, e } => k >= 1 && (2..=k + 2).contains(&e),
            FamilyId::Quartic4n1 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{self}")))
        }
    }

    /// The curve model for the combo families.
    pub fn model(&self) -> Option<RncModel> {
        let (e, n) = match *self {
            FamilyId::CorQuadric { n } | FamilyId::Ci22 { n } | FamilyId::Ci222 { n } => (n, n),
            FamilyId::Quadrics2k1 { k } => (2 * k + 1, 2 * k + 1),
            FamilyId::Quadrics2k { k } => (2 * k, 2 * k),
            FamilyId::QuadricsK2 { k, e } => (e, k + 2),
            FamilyId::Quartic4n1 => return None,
        };
        RncModel::new(e, n).ok()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::CorQuadric { n } | FamilyId::Ci22 { n } | FamilyId::Ci222 { n } => {
                write!(f, "{}(n={n})", self.tag())
            }
            FamilyId::Quadrics2k1 { k } | FamilyId::Quadrics2k { k } => write!(f, "{}(k={k})", self.tag()),
            FamilyId::QuadricsK2 { k, e } => write!(f, "{}(k={k}, e={e})", self.tag()),
            FamilyId::Quartic4n1 => write!(f, "{}", self.tag()),
        }
    }
}

/// How a family's equations were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Explicit,
    /// The explicit equations were singular or unbalanced; a seeded random
    /// combination of the same shape was used instead.
    RandomFallback,
}

/// A built family: hypersurfaces through a rational normal curve, or an
/// explicitly presented curve together with a hypersurface.
#[derive(Clone, Debug)]
pub enum Family {
    Combos { model: RncModel, combos: Vec<HypersurfaceCombo>, construction: Construction },
    Presented { curve: ParamCurve, presentation: Presentation, hypersurface: Vec<MultiForm> },
}

fn pairs_sum(f: FieldSpec, n: usize, pairs: &[(usize, usize)]) -> Result<HypersurfaceCombo> {
    let nv = n + 1;
    let mut h = HypersurfaceCombo::new(f, nv, 2)?;
    for &(i, j) in pairs {
        if i != j {
            h.add_quadric(i, j, MultiForm::constant(f, nv, f.one()))?;
        }
    }
    Ok(h)
}

fn ci22_pairs(n: usize) -> [Vec<(usize, usize)>; 2] {
    let k1 = (n - 2) / 2;
    let k2 = (n - 1) / 2;
    let mut f1: Vec<_> = (1..=k1).map(|j| (2 * j - 1, 2 * j)).collect();
    f1.push((n - 1, n));
    let mut f2 = vec![(1, 3)];
    f2.extend((2..k2).map(|m| (2 * m, 2 * m + 1)));
    f2.push((n - 2, n));
    [f1, f2]
}

fn ci222_pairs(n: usize) -> [Vec<(usize, usize)>; 3] {
    let u = (n / 3) as i64;
    let run = |start: i64, hi: i64| -> Vec<(usize, usize)> {
        (0..=hi).map(|i| ((start + 3 * i) as usize, (start + 3 * i + 1) as usize)).collect()
    };
    let mut f1 = vec![(1, 2), (5, 6)];
    let mut f2 = vec![(1, 3), (4, 6)];
    let mut f3 = vec![(1, 4), (5, 7)];
    match n % 3 {
        0 => {
            f1.extend(run(7, u - 4));
            f2.extend(run(8, u - 4));
            f3.extend(run(9, u - 5));
        }
        1 => {
            f1.extend(run(7, u - 5));
            f1.push((n - 5, n - 4));
            f2.extend(run(8, u - 5));
            f2.push((n - 6, n - 4));
            f3.extend(run(9, u - 4));
        }
        _ => {
            f1.extend(run(7, u - 3));
            f2.extend(run(8, u - 4));
            f3.extend(run(9, u - 4));
        }
    }
    f1.push((n - 1, n));
    f2.push((n - 2, n));
    f3.push((n - 3, n));
    [f1, f2, f3]
}

/// `k` quadrics through `R_{k+2}` in `P^{k+2}`, or the first block of the
/// `e < k + 2` construction (then `k = e - 2` and the ambient space is larger).
fn k2_block(f: FieldSpec, n: usize, k: usize, e: usize) -> Result<Vec<HypersurfaceCombo>> {
    let mut out = Vec::with_capacity(k);
    for i in 1..k {
        out.push(pairs_sum(f, n, &[(1, i + 1), (i + 2, e)])?);
    }
    if k >= 1 {
        out.push(pairs_sum(f, n, &[(1, e)])?);
    }
    Ok(out)
}

fn quadrics_k2(f: FieldSpec, k: usize, e: usize) -> Result<Vec<HypersurfaceCombo>> {
    let n = k + 2;
    if e == k + 2 {
        return k2_block(f, n, k, e);
    }
    let nv = n + 1;
    let mut out = k2_block(f, n, e - 2, e)?;
    let x = |i| MultiForm::var(f, nv, i);
    let mut glue = pairs_sum(f, n, &[(1, (e - 1).max(2))])?;
    glue.add_linear(e + 1, x(e))?;
    out.push(glue);
    for r in 1..(k + 2 - e) {
        let mut h = HypersurfaceCombo::new(f, nv, 2)?;
        h.add_linear(e + r, x(0))?;
        h.add_linear(e + r + 1, x(e))?;
        out.push(h);
    }
    Ok(out)
}

fn random_scalar_quadrics(f: FieldSpec, model: &RncModel, count: usize, rng: &mut SplitMix64) -> Result<Vec<HypersurfaceCombo>> {
    let nv = model.num_vars();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut h = HypersurfaceCombo::new(f, nv, 2)?;
        for j in 2..=model.e {
            for i in 1..j {
                h.add_quadric(i, j, MultiForm::constant(f, nv, random_scalar(rng, f)?))?;
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// Monomial `c · Π x_v` in five variables.
fn z(f: FieldSpec, vars: &[usize], c: i64) -> MultiForm {
    let mut e = vec![0u32; 5];
    for &v in vars {
        e[v] += 1;
    }
    MultiForm::monomial(f, e, f.from_i64(c))
}

fn z0(f: FieldSpec) -> MultiForm {
    MultiForm::zero(f, 5, 0)
}

/// The quintic `[s^5 : s^4 t : s^2 t^3 : s t^4 : t^5]` with its five
/// generators and eight syzygies.
pub fn quartic_4n1_data(f: FieldSpec) -> Result<(ParamCurve, Presentation)> {
    let curve = ParamCurve::new(f, [0, 1, 3, 4, 5].iter().map(|&j| BiForm::st(f, 5 - j, j)).collect())?;
    let gens = vec![
        &z(f, &[3, 3], 1) + &z(f, &[2, 4], -1),
        &z(f, &[1, 3], 1) + &z(f, &[0, 4], -1),
        &z(f, &[2, 2], 1) + &z(f, &[1, 4], -1),
        &z(f, &[1, 2], 1) + &z(f, &[0, 3], -1),
        &z(f, &[1, 1, 1], 1) + &z(f, &[0, 0, 2], -1),
    ];
    let syz = vec![
        vec![z(f, &[1], 1), z(f, &[3], -1), z0(f), z(f, &[4], 1), z0(f)],
        vec![z(f, &[0], 1), z(f, &[2], -1), z0(f), z(f, &[3], 1), z0(f)],
        vec![
            z0(f),
            &z(f, &[2, 2], 1) + &z(f, &[1, 4], -1),
            &z(f, &[0, 4], 1) + &z(f, &[1, 3], -1),
            z0(f),
            z0(f),
        ],
        vec![
            z(f, &[2, 2], 1),
            z(f, &[3, 4], -1),
            &z(f, &[2, 4], 1) + &z(f, &[3, 3], -1),
            z(f, &[4, 4], 1),
            z0(f),
        ],
        vec![
            z0(f),
            z0(f),
            &z(f, &[1, 2], 1) + &z(f, &[0, 3], -1),
            &z(f, &[1, 4], 1) + &z(f, &[2, 2], -1),
            z0(f),
        ],
        vec![z0(f), z(f, &[0, 1], 1), z(f, &[0, 0], -1), z(f, &[1, 1], 1), z(f, &[2], -1)],
        vec![z0(f), z(f, &[0, 2], 1), z(f, &[1, 1], -1), z(f, &[1, 2], 1), z(f, &[4], -1)],
        vec![z0(f), z(f, &[1, 1], 1), z(f, &[0, 1], -1), z(f, &[0, 2], 1), z(f, &[3], -1)],
    ];
    Ok((curve, Presentation::new(f, gens, syz)?))
}

/// Coefficients `A_i` of the quartic `Σ A_i F_i`: `z4^2 F1 + z0 z4 F4 + z0 F5`
/// in characteristic 2 and `z4^2 F1 + 2 z2^2 F4 + z0 F5` otherwise.
pub fn quartic_4n1_threefold(f: FieldSpec) -> Vec<MultiForm> {
    let a4 = if f.characteristic() == 2 { z(f, &[0, 4], 1) } else { z(f, &[2, 2], 2) };
    vec![z(f, &[4, 4], 1), z0(f), z0(f), a4, z(f, &[0], 1)]
}

fn check_combos(f: FieldSpec, model: &RncModel, hs: &[HypersurfaceCombo], expected: &SplittingType) -> bool {
    ci_normal_map(f, hs, model)
        .ok()
        .filter(GradedMap::surjective_everywhere)
        .and_then(|m| m.kernel_splitting().ok())
        .is_some_and(|k| &k == expected)
}

/// The explicit equations of a family.
pub fn build_family(field: FieldSpec, id: FamilyId) -> Result<Family> {
    id.validate()?;
    let explicit = |model: RncModel, combos| Ok(Family::Combos { model, combos, construction: Construction::Explicit });
    match id {
        FamilyId::CorQuadric { n } => {
            let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            explicit(RncModel::new(n, n)?, vec![pairs_sum(field, n, &pairs)?])
        }
        FamilyId::Ci22 { n } => {
            let combos = ci22_pairs(n).iter().map(|p| pairs_sum(field, n, p)).collect::<Result<_>>()?;
            explicit(RncModel::new(n, n)?, combos)
        }
        FamilyId::Ci222 { n } => {
            let model = RncModel::new(n, n)?;
            let expected = expected_balanced(n, &[2, 2, 2], n)?;
            // For small n the index formulas may leave the valid range.
            let combos: Result<Vec<_>> = ci222_pairs(n).iter().map(|p| pairs_sum(field, n, p)).collect();
            if let Ok(combos) = combos {
                if check_combos(field, &model, &combos, &expected) {
                    return explicit(model, combos);
                }
            }
            let mut rng = SplitMix64::derive(DEFAULT_SEED, n as u64);
            for _ in 0..8 {
                let combos = random_scalar_quadrics(field, &model, 3, &mut rng)?;
                if check_combos(field, &model, &combos, &expected) {
                    return Ok(Family::Combos { model, combos, construction: Construction::RandomFallback });
                }
            }
            Err(Error::NoSolution(format!("no balanced (2,2,2) sample for n = {n}")))
        }
        FamilyId::Quadrics2k1 { k } => {
            let n = 2 * k + 1;
            let combos = (1..=k)
                .map(|i| pairs_sum(field, n, &[(1, i + 1), (2 * k - i + 1, 2 * k + 1)]))
                .collect::<Result<_>>()?;
            explicit(RncModel::new(n, n)?, combos)
        }
        FamilyId::Quadrics2k { k } => {
            let n = 2 * k;
            let mut combos: Vec<_> =
                (1..k).map(|i| pairs_sum(field, n, &[(1, i + 1), (2 * k - i, 2 * k)])).collect::<Result<_>>()?;
            combos.push(pairs_sum(field, n, &[(1, 2 * k)])?);
            explicit(RncModel::new(n, n)?, combos)
        }
        FamilyId::QuadricsK2 { k, e } => explicit(RncModel::new(e, k + 2)?, quadrics_k2(field, k, e)?),
        FamilyId::Quartic4n1 => {
            if field.characteristic() == 5 {
                return Err(Error::CharDividesDegree { p: 5, e: 5 });
            }
            let (curve, presentation) = quartic_4n1_data(field)?;
            Ok(Family::Presented { curve, presentation, hypersurface: quartic_4n1_threefold(field) })
        }
    }
}

/// The splitting a family is known to have.
pub fn expected_family_splitting(id: FamilyId) -> Result<SplittingType> {
    id.validate()?;
    Ok(match id {
        FamilyId::CorQuadric { n } => BundleSum::uniform(n as i64 + 1, n - 2),
        FamilyId::Ci22 { n } => expected_balanced(n, &[2, 2], n)?,
        FamilyId::Ci222 { n } => expected_balanced(n, &[2, 2, 2], n)?,
        FamilyId::Quadrics2k1 { k } => BundleSum::uniform(4, k),
        FamilyId::Quadrics2k { k } => BundleSum::uniform(2, k - 1),
        FamilyId::QuadricsK2 { k, e } => BundleSum::new(vec![e as i64 * (3 - k as i64) - 2]),
        FamilyId::Quartic4n1 => BundleSum::new(vec![1, 2]),
    })
}

/// Outcome of recomputing one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub computed: SplittingType,
    pub expected: SplittingType,
    #[serde(rename = "match")]
    pub matches: bool,
    pub smooth_along_curve: bool,
    pub construction: Construction,
}

/// Builds the family, computes the normal bundle in the complete
/// intersection and compares with the known answer.
pub fn verify_family(field: FieldSpec, id: FamilyId) -> Result<FamilyCheck> {
    let expected = expected_family_splitting(id)?;
    let (computed, smooth, construction) = match build_family(field, id)? {
        Family::Combos { model, combos, construction } => {
            let map = ci_normal_map(field, &combos, &model)?;
            (map.kernel_splitting()?, map.surjective_everywhere(), construction)
        }
        Family::Presented { curve, presentation, hypersurface } => {
            // The syzygy map is not onto, so smoothness along C is read off
            // the kernel: N_{C/X} -> N_{C/P^n} -> O(e deg X) exact on the right
            // iff rank and degree drop by exactly one line bundle.
            let ambient = presentation.normal_map(&curve)?.kernel_splitting()?;
            let computed = presentation.normal_map_in(&curve, &hypersurface)?.kernel_splitting()?;
            let twist = curve.degree() * presentation.hypersurface_degree(&hypersurface)? as i64;
            let smooth = computed.rank() + 1 == ambient.rank() && computed.degree() == ambient.degree() - twist;
            (computed, smooth, Construction::Explicit)
        }
    };
    Ok(FamilyCheck {
        family: id.to_string(),
        matches: smooth && computed == expected,
        computed,
        expected,
        smooth_along_curve: smooth,
        construction,
    })
}

/// `N_{C/P^4}` of the quintic by the presentation and by the Jacobian.
pub fn quartic_4n1_ambient(field: FieldSpec) -> Result<(SplittingType, SplittingType)> {
    let (curve, presentation) = quartic_4n1_data(field)?;
    Ok((presentation.normal_map(&curve)?.kernel_splitting()?, curve.normal_via_jacobian()?))
}
