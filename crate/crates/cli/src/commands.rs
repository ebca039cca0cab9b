use clap::{Args, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use splitkit::algebra::{FieldSpec, SplitMix64};
use splitkit::graded::SplittingType;
use splitkit::param_curve::{
    chain_double_conditions, expected_chain_conditions, h0_ideal, h0_ideal_sq, last_case_bound, phi_surjective,
    ParamCurve, PhiReport,
};
use splitkit::paper_suite::{
    conjecture_scan, expected_balanced, fano_check, induction_inequality, verify_family, very_free_min_degree,
    FamilyCheck, FamilyId, ScanReport,
};
use splitkit::rnc::{ci_normal_map, RncModel};

use crate::output::{list, Output, Table};
use crate::parse::{parse_combo, parse_curve, parse_graded_map};
use crate::{CliError, Global};

type Run = Result<Output, CliError>;

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::with_input(e, path))
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::with_input(e, path))
    }
}

fn parse_expect(s: &str) -> Result<SplittingType, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Ok(SplittingType::default());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad degree {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(SplittingType::new)
}

fn compare(expect: &Option<SplittingType>, got: &SplittingType) -> (Option<bool>, bool) {
    match expect {
        Some(x) => (Some(x == got), x != got),
        None => (None, false),
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

// ---------------------------------------------------------------- splitting

#[derive(Args, Debug)]
pub struct SplittingArgs {
    /// Graded map JSON file, or `-` for stdin.
    #[arg(long)]
    input: String,
    /// Fail with status 2 unless the kernel has these degrees.
    #[arg(long, value_parser = parse_expect)]
    expect: Option<SplittingType>,
}

#[derive(Serialize)]
struct SplittingOut {
    char: u64,
    source: SplittingType,
    target: SplittingType,
    kernel: SplittingType,
    balanced: bool,
    surjective_everywhere: bool,
    expected: Option<SplittingType>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

pub fn splitting(field: FieldSpec, a: SplittingArgs) -> Run {
    let text = read_input(&a.input)?;
    let map = parse_graded_map(field, &text).map_err(|e| CliError::with_input(e, text.trim()))?;
    let kernel = map.kernel_splitting().map_err(|e| CliError::with_input(e, text.trim()))?;
    let (matches, mismatch) = compare(&a.expect, &kernel);
    let out = SplittingOut {
        char: field.characteristic(),
        source: map.source(),
        target: map.target(),
        balanced: kernel.is_balanced(),
        surjective_everywhere: map.surjective_everywhere(),
        kernel,
        expected: a.expect,
        matches,
    };
    let mut t = Table::new(&["source", "target", "kernel", "balanced", "surjective_everywhere", "match"]);
    t.push(vec![
        list(out.source.degrees()),
        list(out.target.degrees()),
        list(out.kernel.degrees()),
        out.balanced.to_string(),
        out.surjective_everywhere.to_string(),
        opt(&out.matches),
    ]);
    Ok(Output::new(&out, t, mismatch))
}

// ---------------------------------------------------------------- rnc-ci

#[derive(Args, Debug)]
pub struct RncCiArgs {
    /// Degree of the rational normal curve.
    #[arg(long)]
    e: usize,
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// A hypersurface `q[i,j] * (<form>) + … + x[j] * (<form>)`; repeatable.
    #[arg(long)]
    combo: Vec<String>,
    /// File with one combo per line (`#` starts a comment), or `-`.
    #[arg(long)]
    input: Option<String>,
    /// Hypersurface degree when it cannot be inferred from the terms.
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long, value_parser = parse_expect)]
    expect: Option<SplittingType>,
}

#[derive(Serialize)]
struct RncCiOut {
    char: u64,
    e: usize,
    n: usize,
    degrees: Vec<u32>,
    kernel: SplittingType,
    balanced: bool,
    smooth_along_curve: bool,
    expected: Option<SplittingType>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

pub fn rnc_ci(field: FieldSpec, a: RncCiArgs) -> Run {
    let model = RncModel::new(a.e, a.n)?;
    let mut sources = a.combo.clone();
    if let Some(path) = &a.input {
        let text = read_input(path)?;
        sources.extend(
            text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()).map(String::from),
        );
    }
    let hs = sources
        .iter()
        .map(|s| parse_combo(field, model.num_vars(), s, a.degree).map_err(|e| CliError::with_input(e, s.as_str())))
        .collect::<Result<Vec<_>, _>>()?;
    let map = ci_normal_map(field, &hs, &model).map_err(|e| CliError::with_input(e, sources.join(" ; ")))?;
    let kernel = map.kernel_splitting()?;
    let (matches, mismatch) = compare(&a.expect, &kernel);
    let out = RncCiOut {
        char: field.characteristic(),
        e: a.e,
        n: a.n,
        degrees: hs.iter().map(|h| h.degree()).collect(),
        balanced: kernel.is_balanced(),
        smooth_along_curve: map.surjective_everywhere(),
        kernel,
        expected: a.expect,
        matches,
    };
    let mut t = Table::new(&["e", "n", "degrees", "kernel", "balanced", "smooth_along_curve", "match"]);
    t.push(vec![
        out.e.to_string(),
        out.n.to_string(),
        list(&out.degrees),
        list(out.kernel.degrees()),
        out.balanced.to_string(),
        out.smooth_along_curve.to_string(),
        opt(&out.matches),
    ]);
    Ok(Output::new(&out, t, mismatch))
}

// ---------------------------------------------------------------- curve-normal

#[derive(Args, Debug)]
pub struct CurveArgs {
    /// `rnc <e> <n>` or a JSON array of coefficient lists.
    #[arg(long, conflicts_with = "input")]
    curve: Option<String>,
    /// File holding the curve JSON, or `-`.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_parser = parse_expect)]
    expect: Option<SplittingType>,
}

#[derive(Serialize)]
struct CurveOut {
    char: u64,
    n: usize,
    degree: i64,
    normal: SplittingType,
    balanced: bool,
    expected: Option<SplittingType>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

pub fn curve_normal(field: FieldSpec, a: CurveArgs) -> Run {
    let src = match (&a.curve, &a.input) {
        (Some(c), _) => c.clone(),
        (None, Some(p)) => read_input(p)?,
        (None, None) => return Err(CliError::new("pass --curve or --input")),
    };
    let c = parse_curve(field, &src).map_err(|e| CliError::with_input(e, src.trim()))?;
    let normal = c.normal_via_jacobian().map_err(|e| CliError::with_input(e, src.trim()))?;
    let (matches, mismatch) = compare(&a.expect, &normal);
    let out = CurveOut {
        char: field.characteristic(),
        n: c.n(),
        degree: c.degree(),
        balanced: normal.is_balanced(),
        normal,
        expected: a.expect,
        matches,
    };
    let mut t = Table::new(&["n", "degree", "normal", "balanced", "match"]);
    t.push(vec![
        out.n.to_string(),
        out.degree.to_string(),
        list(out.normal.degrees()),
        out.balanced.to_string(),
        opt(&out.matches),
    ]);
    Ok(Output::new(&out, t, mismatch))
}

// ---------------------------------------------------------------- phi

#[derive(Args, Debug)]
pub struct PhiArgs {
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    d_min: u32,
    #[arg(long, default_value_t = 6)]
    d_max: u32,
    /// Use random curves of this degree in P^n (with `--n`, `--d`) instead of the RNC grid.
    #[arg(long, requires_all = ["n", "d"])]
    random: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    /// Number of random curves.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
}

#[derive(Serialize)]
struct PhiRow {
    n: usize,
    e: usize,
    d: u32,
    seed: Option<u64>,
    image_dim: usize,
    target_dim: usize,
    surjective: bool,
    /// `end - e(n+1+d) + n + 1` for rational normal curves.
    formula: Option<i64>,
}

#[derive(Serialize)]
struct PhiOut {
    char: u64,
    mode: &'static str,
    rows: Vec<PhiRow>,
    surjective_count: usize,
}

fn phi_row(n: usize, e: usize, d: u32, seed: Option<u64>, r: PhiReport, formula: Option<i64>) -> PhiRow {
    PhiRow { n, e, d, seed, image_dim: r.image_dim, target_dim: r.target_dim, surjective: r.surjective, formula }
}

pub fn phi(field: FieldSpec, g: &Global, a: PhiArgs) -> Run {
    let (mode, rows): (&'static str, Vec<PhiRow>) = if let Some(e) = a.random {
        let (n, d) = (a.n.unwrap(), a.d.unwrap());
        let master = g.seed();
        let rows = (0..a.seeds)
            .into_par_iter()
            .map(|i| {
                let c = ParamCurve::random(field, n, e, &mut SplitMix64::derive(master, i))?;
                Ok(phi_row(n, e, d, Some(i), phi_surjective(&c, d)?, None))
            })
            .collect::<Result<_, splitkit::error::Error>>()?;
        ("random", rows)
    } else {
        let cases: Vec<(usize, usize, u32)> = (a.n_min.max(2)..=a.n_max)
            .flat_map(|n| (2..=n).flat_map(move |e| (a.d_min..=a.d_max).map(move |d| (n, e, d))))
            .collect();
        let rows = cases
            .into_par_iter()
            .map(|(n, e, d)| {
                let c = ParamCurve::rnc(field, e, n)?;
                let (ni, ei, di) = (n as i64, e as i64, d as i64);
                let formula = ei * ni * di - ei * (ni + 1 + di) + ni + 1;
                Ok(phi_row(n, e, d, None, phi_surjective(&c, d)?, Some(formula)))
            })
            .collect::<Result<_, splitkit::error::Error>>()?;
        ("rnc", rows)
    };
    let mismatch = mode == "rnc" && rows.iter().any(|r| !r.surjective || Some(r.target_dim as i64) != r.formula);
    let mut t = Table::new(&["n", "e", "d", "seed", "image_dim", "target_dim", "formula", "surjective"]);
    for r in &rows {
        t.push(vec![
            r.n.to_string(),
            r.e.to_string(),
            r.d.to_string(),
            opt(&r.seed),
            r.image_dim.to_string(),
            r.target_dim.to_string(),
            opt(&r.formula),
            r.surjective.to_string(),
        ]);
    }
    let out = PhiOut { char: field.characteristic(), mode, surjective_count: rows.iter().filter(|r| r.surjective).count(), rows };
    Ok(Output::new(&out, t, mismatch))
}

// ---------------------------------------------------------------- counts

#[derive(Args, Debug)]
pub struct CountsArgs {
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    d_min: Option<u32>,
    #[arg(long)]
    d_max: Option<u32>,
    /// Count the `(n+1)`-line chain and a random degree-`(n+1)` curve instead;
    /// the bound needs `n, d >= 5`.
    #[arg(long)]
    last_case: bool,
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    e: usize,
    d: u32,
    h0_ideal: usize,
    h0_ideal_sq: usize,
    /// `binom(n+d,d) - e(nd+1) + (e-1)(n+2)`, or the last-case bound.
    bound: i64,
    chain_conditions: usize,
    expected_chain_conditions: i64,
    /// Whether `binom(2n,n)` agrees with `binom(n+d,d)`; last case only.
    binom_2n_agrees: Option<bool>,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct CountsOut {
    char: u64,
    mode: &'static str,
    rows: Vec<CountRow>,
}

fn binom(n: usize, k: usize) -> i64 {
    // exact at every step: acc * (n - i) = binom(n, i+1) * (i + 1)
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

pub fn counts(field: FieldSpec, g: &Global, a: CountsArgs) -> Run {
    let (mode, rows): (&'static str, Vec<CountRow>) = if a.last_case {
        let cases: Vec<(usize, u32)> =
            (a.n_min.unwrap_or(5).max(5)..=a.n_max.unwrap_or(7))
                .flat_map(|n| (a.d_min.unwrap_or(5).max(5)..=a.d_max.unwrap_or(6)).map(move |d| (n, d)))
                .collect();
        let master = g.seed();
        let rows = cases
            .into_par_iter()
            .map(|(n, d)| {
                let c = ParamCurve::random(field, n, n + 1, &mut SplitMix64::derive(master, (n as u64) << 8 | d as u64))?;
                let (bound, agrees) = last_case_bound(n, d);
                let sq = h0_ideal_sq(&c, d)?;
                let chain = chain_double_conditions(field, n, n + 1, d)?;
                let expected = expected_chain_conditions(n, n + 1, d)?;
                Ok(CountRow {
                    n,
                    e: n + 1,
                    d,
                    h0_ideal: h0_ideal(&c, d)?,
                    h0_ideal_sq: sq,
                    bound,
                    chain_conditions: chain,
                    expected_chain_conditions: expected,
                    binom_2n_agrees: Some(agrees),
                    matches: sq as i64 <= bound && chain as i64 == expected,
                })
            })
            .collect::<Result<_, splitkit::error::Error>>()?;
        ("last_case", rows)
    } else {
        let (d_min, d_max) = (a.d_min.unwrap_or(3), a.d_max.unwrap_or(5));
        let cases: Vec<(usize, usize, u32)> = (a.n_min.unwrap_or(2).max(2)..=a.n_max.unwrap_or(6))
            .flat_map(|n| (2..=n).flat_map(move |e| (d_min..=d_max).map(move |d| (n, e, d))))
            .collect();
        let rows = cases
            .into_par_iter()
            .map(|(n, e, d)| {
                let c = ParamCurve::rnc(field, e, n)?;
                let (ni, ei, di) = (n as i64, e as i64, d as i64);
                let bound = binom(n + d as usize, d as usize) - ei * (ni * di + 1) + (ei - 1) * (ni + 2);
                let sq = h0_ideal_sq(&c, d)?;
                let chain = chain_double_conditions(field, n, e, d)?;
                let expected = expected_chain_conditions(n, e, d)?;
                Ok(CountRow {
                    n,
                    e,
                    d,
                    h0_ideal: h0_ideal(&c, d)?,
                    h0_ideal_sq: sq,
                    bound,
                    chain_conditions: chain,
                    expected_chain_conditions: expected,
                    binom_2n_agrees: None,
                    matches: sq as i64 == bound && chain as i64 == expected,
                })
            })
            .collect::<Result<_, splitkit::error::Error>>()?;
        ("rnc", rows)
    };
    let mismatch = rows.iter().any(|r| !r.matches);
    let mut t = Table::new(&["n", "e", "d", "h0_ideal", "h0_ideal_sq", "bound", "chain", "chain_expected", "match"]);
    for r in &rows {
        t.push(vec![
            r.n.to_string(),
            r.e.to_string(),
            r.d.to_string(),
            r.h0_ideal.to_string(),
            r.h0_ideal_sq.to_string(),
            r.bound.to_string(),
            r.chain_conditions.to_string(),
            r.expected_chain_conditions.to_string(),
            r.matches.to_string(),
        ]);
    }
    Ok(Output::new(&CountsOut { char: field.characteristic(), mode, rows }, t, mismatch))
}

// ---------------------------------------------------------------- paper

#[derive(Args, Debug)]
pub struct PaperArgs {
    /// One of cor_quadric, ci_22, ci_222, quadrics_2k1, quadrics_2k,
    /// quadrics_k2, quartic_4n1, or `all`.
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
}

#[derive(Serialize)]
struct PaperOut {
    char: u64,
    checks: Vec<FamilyCheck>,
}

fn all_families() -> Vec<FamilyId> {
    let mut ids = Vec::new();
    ids.extend((3..=14).map(|n| FamilyId::CorQuadric { n }));
    ids.extend((5..=14).map(|n| FamilyId::Ci22 { n }));
    ids.extend((6..=14).map(|n| FamilyId::Ci222 { n }));
    ids.extend((1..=6).map(|k| FamilyId::Quadrics2k1 { k }));
    ids.extend((2..=6).map(|k| FamilyId::Quadrics2k { k }));
    ids.extend((1..=6).flat_map(|k| (2..=k + 2).map(move |e| FamilyId::QuadricsK2 { k, e })));
    ids.push(FamilyId::Quartic4n1);
    ids
}

pub fn paper(field: FieldSpec, a: PaperArgs) -> Run {
    let ids = if a.family == "all" {
        all_families()
    } else {
        vec![FamilyId::parse(&a.family, a.n, a.k, a.e)?]
    };
    let checks = ids
        .into_par_iter()
        .map(|id| verify_family(field, id).map_err(|e| CliError::with_input(e, id.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mismatch = checks.iter().any(|c| !c.matches);
    let mut t = Table::new(&["family", "computed", "expected", "match", "smooth_along_curve", "construction"]);
    for c in &checks {
        t.push(vec![
            c.family.clone(),
            list(c.computed.degrees()),
            list(c.expected.degrees()),
            c.matches.to_string(),
            c.smooth_along_curve.to_string(),
            serde_json::to_value(c.construction).unwrap().as_str().unwrap().to_string(),
        ]);
    }
    if checks.len() == 1 {
        let one = &checks[0];
        return Ok(Output::new(&SinglePaper { char: field.characteristic(), check: one }, t, mismatch));
    }
    Ok(Output::new(&PaperOut { char: field.characteristic(), checks }, t, mismatch))
}

#[derive(Serialize)]
struct SinglePaper<'a> {
    char: u64,
    #[serde(flatten)]
    check: &'a FamilyCheck,
}

// ---------------------------------------------------------------- conjecture

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    /// Number of quadrics; with `--n` scans one pair, otherwise the default grid.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, requires = "k")]
    n: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    /// More trials and a wider (k, n) grid.
    #[arg(long)]
    deep: bool,
}

#[derive(Serialize)]
struct ScanGrid {
    reports: Vec<ScanReport>,
}

fn scan_grid(k: Option<usize>, deep: bool) -> Vec<(usize, usize)> {
    let extra = if deep { 3 } else { 0 };
    let mut grid: Vec<(usize, usize)> = Vec::new();
    for (kk, lo, hi) in [(4, 9, 19 + extra), (5, 11, 16 + extra)] {
        if k.is_none_or_eq(kk) {
            grid.extend((lo..=hi).map(|n| (kk, n)));
        }
    }
    if let Some(kk) = k {
        if kk != 4 && kk != 5 {
            grid.extend((2 * kk..=2 * kk + 6 + extra).map(|n| (kk, n)));
        }
    }
    if deep && k.is_none() {
        grid.extend((7..=15).map(|n| (3, n)));
    }
    grid
}

trait NoneOrEq {
    fn is_none_or_eq(&self, x: usize) -> bool;
}

impl NoneOrEq for Option<usize> {
    fn is_none_or_eq(&self, x: usize) -> bool {
        self.map_or(true, |y| y == x)
    }
}

fn report_fails(r: &ScanReport) -> bool {
    r.fano && (r.unbalanced() > 0 || (r.balanced == 0 && r.smooth_failures < r.trials))
}

pub fn conjecture(field: FieldSpec, g: &Global, a: ConjectureArgs) -> Run {
    let trials = a.trials.unwrap_or(if a.deep { 10 } else { 3 });
    let pairs = match (a.k, a.n) {
        (Some(k), Some(n)) => vec![(k, n)],
        (k, _) => scan_grid(k, a.deep),
    };
    let reports = pairs
        .iter()
        .map(|&(k, n)| conjecture_scan(field, k, n, trials, g.seed()))
        .collect::<Result<Vec<_>, _>>()?;
    let mismatch = reports.iter().any(report_fails);
    let mut t = Table::new(&["k", "n", "char", "trials", "balanced", "smooth_failures", "splittings", "fano"]);
    for r in &reports {
        let types: Vec<String> =
            r.splittings.iter().map(|s| format!("{}x{}", list(s.splitting.degrees()), s.count)).collect();
        t.push(vec![
            r.k.to_string(),
            r.n.to_string(),
            r.char.to_string(),
            r.trials.to_string(),
            r.balanced.to_string(),
            r.smooth_failures.to_string(),
            types.join(" "),
            r.fano.to_string(),
        ]);
    }
    if reports.len() == 1 {
        return Ok(Output::new(&reports[0], t, mismatch));
    }
    Ok(Output::new(&ScanGrid { reports }, t, mismatch))
}

// ---------------------------------------------------------------- arith

#[derive(Subcommand, Debug)]
pub enum ArithCommand {
    /// Least degree of a very free curve: ceil((n-k+1)/(n-d+1)).
    VeryFree {
        #[arg(long)]
        n: usize,
        /// Hypersurface degrees, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
    },
    /// The balanced candidate for N_{R_e/X}.
    Balanced {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        e: usize,
    },
    /// Whether the complete intersection is Fano.
    Fano {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
    },
    /// The ceiling/floor inequality for j quadrics followed by degree d_next.
    Induction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d_next: i64,
    },
}

#[derive(Serialize)]
struct ArithOut {
    op: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_next: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    splitting: Option<SplittingType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<bool>,
}

pub fn arith(a: ArithCommand) -> Run {
    let out = match a {
        ArithCommand::VeryFree { n, degrees } => ArithOut {
            op: "very_free",
            n,
            m: Some(very_free_min_degree(n, &degrees)?),
            degrees: Some(degrees),
            e: None,
            j: None,
            d_next: None,
            splitting: None,
            value: None,
        },
        ArithCommand::Balanced { n, degrees, e } => ArithOut {
            op: "balanced",
            n,
            splitting: Some(expected_balanced(n, &degrees, e)?),
            degrees: Some(degrees),
            e: Some(e),
            j: None,
            d_next: None,
            m: None,
            value: None,
        },
        ArithCommand::Fano { n, degrees } => ArithOut {
            op: "fano",
            n,
            value: Some(fano_check(n, &degrees)),
            degrees: Some(degrees),
            e: None,
            j: None,
            d_next: None,
            m: None,
            splitting: None,
        },
        ArithCommand::Induction { n, j, d_next } => ArithOut {
            op: "induction",
            n,
            value: Some(induction_inequality(n, j, d_next)?),
            degrees: None,
            e: None,
            j: Some(j),
            d_next: Some(d_next),
            m: None,
            splitting: None,
        },
    };
    let mut headers = vec!["n"];
    let mut row = vec![out.n.to_string()];
    if let Some(d) = &out.degrees {
        headers.push("degrees");
        row.push(d.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    }
    for (h, v) in [("e", out.e.map(|x| x as i64)), ("j", out.j.map(|x| x as i64)), ("d_next", out.d_next)] {
        if let Some(v) = v {
            headers.push(h);
            row.push(v.to_string());
        }
    }
    if let Some(m) = out.m {
        headers.push("m");
        row.push(m.to_string());
    }
    if let Some(s) = &out.splitting {
        headers.push("splitting");
        row.push(list(s.degrees()));
    }
    if let Some(v) = out.value {
        headers.push(out.op);
        row.push(v.to_string());
    }
    let mut t = Table::new(&headers);
    t.push(row);
    Ok(Output::new(&out, t, false))
}
