//! Text and JSON input formats.

use num_bigint::BigInt;
use serde_json::Value;
use splitkit::algebra::{FieldSpec, Scalar};
use splitkit::forms::{BiForm, MultiForm};
use splitkit::graded::GradedMap;
use splitkit::param_curve::ParamCurve;
use splitkit::rnc::HypersurfaceCombo;

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Parsed<T> = Result<T, ParseError>;

fn fail<T>(msg: impl Into<String>) -> Parsed<T> {
    Err(ParseError(msg.into()))
}

/// A monomial term before reduction into a field.
#[derive(Clone, Debug)]
struct RawTerm {
    num: BigInt,
    den: BigInt,
    vars: Vec<(usize, u32)>,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Parsed<()> {
        if self.eat(c) {
            Ok(())
        } else {
            fail(format!("expected '{c}' at offset {} in {:?}", self.pos, self.src))
        }
    }

    fn digits(&mut self) -> Parsed<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return fail(format!("expected a number at offset {start} in {:?}", self.src));
        }
        Ok(&self.src[start..self.pos])
    }

    fn index(&mut self) -> Parsed<usize> {
        self.digits()?.parse().map_err(|e| ParseError(format!("bad index: {e}")))
    }

    #[cfg(test)]
    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn parse_term(lx: &mut Lexer, negative: bool) -> Parsed<RawTerm> {
    let mut t = RawTerm { num: BigInt::from(if negative { -1 } else { 1 }), den: BigInt::from(1), vars: Vec::new() };
    loop {
        match lx.peek() {
            Some('x') => {
                lx.pos += 1;
                let v = lx.index()?;
                let k = if lx.eat('^') { lx.index()? as u32 } else { 1 };
                t.vars.push((v, k));
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = lx.digits()?.parse().unwrap();
                t.num *= n;
                if lx.eat('/') {
                    let d: BigInt = lx.digits()?.parse().unwrap();
                    t.den *= d;
                }
            }
            other => return fail(format!("unexpected {other:?} in form {:?}", lx.src)),
        }
        if !lx.eat('*') {
            return Ok(t);
        }
    }
}

fn parse_poly(lx: &mut Lexer, stop: Option<char>) -> Parsed<Vec<RawTerm>> {
    let mut terms = Vec::new();
    let mut negative = lx.eat('-');
    if !negative {
        lx.eat('+');
    }
    loop {
        terms.push(parse_term(lx, negative)?);
        match lx.peek() {
            Some('+') => {
                lx.pos += 1;
                negative = false;
            }
            Some('-') => {
                lx.pos += 1;
                negative = true;
            }
            c if c == stop => return Ok(terms),
            other => return fail(format!("unexpected {other:?} in form {:?}", lx.src)),
        }
    }
}

fn build_form(field: FieldSpec, num_vars: usize, terms: &[RawTerm], degree: Option<u32>) -> Parsed<MultiForm> {
    let mut out = Vec::new();
    let mut deg = degree;
    for t in terms {
        let c = field.from_fraction(&t.num, &t.den).map_err(|e| ParseError(e.to_string()))?;
        let mut e = vec![0u32; num_vars];
        for &(v, k) in &t.vars {
            if v >= num_vars {
                return fail(format!("variable x{v} outside x0..x{}", num_vars - 1));
            }
            e[v] += k;
        }
        if c.is_zero() {
            continue;
        }
        let d = e.iter().sum();
        if deg.is_some_and(|x| x != d) {
            return fail(format!("form is not homogeneous of degree {}: term of degree {d}", deg.unwrap()));
        }
        deg = Some(d);
        out.push((e, c));
    }
    let Some(deg) = deg else {
        return fail("zero form without a known degree");
    };
    MultiForm::from_terms(field, num_vars, deg, out).map_err(|e| ParseError(e.to_string()))
}

#[cfg(test)]
/// Parses `3*x0^2*x4 - x1*x2` into a form in `num_vars` variables. A zero
/// form needs `degree`.
pub fn parse_multiform(field: FieldSpec, num_vars: usize, src: &str, degree: Option<u32>) -> Parsed<MultiForm> {
    let mut lx = Lexer::new(src);
    let terms = parse_poly(&mut lx, None)?;
    if !lx.at_end() {
        return fail(format!("trailing input in {src:?}"));
    }
    build_form(field, num_vars, &terms, degree)
}

enum Slot {
    Quadric(usize, usize),
    Linear(usize),
}

/// Parses `q[i,j] * (<form>) + … + x[j] * (<form>)`. A generator without a
/// factor has coefficient 1; `degree` is needed only when it cannot be
/// inferred.
pub fn parse_combo(field: FieldSpec, num_vars: usize, src: &str, degree: Option<u32>) -> Parsed<HypersurfaceCombo> {
    let mut lx = Lexer::new(src);
    let mut pieces: Vec<(Slot, Vec<RawTerm>, bool)> = Vec::new();
    let mut negative = lx.eat('-');
    if !negative {
        lx.eat('+');
    }
    loop {
        let slot = match lx.peek() {
            Some('q') => {
                lx.pos += 1;
                lx.expect('[')?;
                let i = lx.index()?;
                lx.expect(',')?;
                let j = lx.index()?;
                lx.expect(']')?;
                Slot::Quadric(i, j)
            }
            Some('x') => {
                lx.pos += 1;
                lx.expect('[')?;
                let j = lx.index()?;
                lx.expect(']')?;
                Slot::Linear(j)
            }
            other => return fail(format!("expected q[i,j] or x[j], found {other:?} in {src:?}")),
        };
        let coeff = if lx.eat('*') {
            lx.expect('(')?;
            let t = parse_poly(&mut lx, Some(')'))?;
            lx.expect(')')?;
            t
        } else {
            vec![RawTerm { num: BigInt::from(1), den: BigInt::from(1), vars: Vec::new() }]
        };
        pieces.push((slot, coeff, negative));
        match lx.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => return fail(format!("unexpected '{c}' in {src:?}")),
        }
        lx.pos += 1;
    }
    let mut deg = degree;
    for (slot, coeff, _) in &pieces {
        let shift = if matches!(slot, Slot::Quadric(..)) { 2 } else { 1 };
        if let Ok(c) = build_form(field, num_vars, coeff, None) {
            if !c.is_zero() {
                let d = c.degree() + shift;
                if deg.is_some_and(|x| x != d) {
                    return fail(format!("term gives degree {d}, expected {}", deg.unwrap()));
                }
                deg = Some(d);
            }
        }
    }
    let Some(deg) = deg else {
        return fail(format!("cannot infer the degree of {src:?}; pass --degree"));
    };
    let mut h = HypersurfaceCombo::new(field, num_vars, deg).map_err(|e| ParseError(e.to_string()))?;
    for (slot, coeff, neg) in pieces {
        let shift = if matches!(slot, Slot::Quadric(..)) { 2 } else { 1 };
        if deg < shift {
            return fail(format!("degree {deg} too small for a generator of degree {shift}"));
        }
        let mut c = build_form(field, num_vars, &coeff, Some(deg - shift))?;
        if neg {
            c = -&c;
        }
        let r = match slot {
            Slot::Quadric(i, j) => h.add_quadric(i, j, c),
            Slot::Linear(j) => h.add_linear(j, c),
        };
        r.map_err(|e| ParseError(e.to_string()))?;
    }
    Ok(h)
}

fn scalar(field: FieldSpec, v: &Value) -> Parsed<Scalar> {
    let (num, den) = match v {
        Value::Number(n) => match n.as_i64() {
            Some(x) => (BigInt::from(x), BigInt::from(1)),
            None => return fail(format!("coefficient {n} is not an integer")),
        },
        Value::String(s) => {
            let (a, b) = s.split_once('/').unwrap_or((s.as_str(), "1"));
            match (a.trim().parse::<BigInt>(), b.trim().parse::<BigInt>()) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return fail(format!("coefficient {s:?} is not an integer or fraction")),
            }
        }
        other => return fail(format!("coefficient {other} is not a number")),
    };
    field.from_fraction(&num, &den).map_err(|e| ParseError(e.to_string()))
}

fn coeff_list(field: FieldSpec, v: &Value, what: &str) -> Parsed<Vec<Scalar>> {
    let Value::Array(xs) = v else {
        return fail(format!("{what} must be an array of coefficients"));
    };
    xs.iter().map(|x| scalar(field, x)).collect()
}

fn int_list(v: Option<&Value>, what: &str) -> Parsed<Vec<i64>> {
    let Some(Value::Array(xs)) = v else {
        return fail(format!("missing integer array {what:?}"));
    };
    xs.iter().map(|x| x.as_i64().ok_or_else(|| ParseError(format!("{what} entry {x} is not an integer")))).collect()
}

/// `{"source":[a_i],"target":[b_j],"entries":[[coeffs of entry (j,i)]]}`,
/// coefficients of `s^(deg-k) t^k` at index `k`. An empty list is the zero
/// entry; entries of negative degree must be empty.
pub fn parse_graded_map(field: FieldSpec, json: &str) -> Parsed<GradedMap> {
    let v: Value = serde_json::from_str(json).map_err(|e| ParseError(format!("graded map JSON: {e}")))?;
    let source = int_list(v.get("source"), "source")?;
    let target = int_list(v.get("target"), "target")?;
    let Some(Value::Array(rows)) = v.get("entries") else {
        return fail("missing array \"entries\"");
    };
    if rows.len() != target.len() {
        return fail(format!("{} entry rows for {} target summands", rows.len(), target.len()));
    }
    let mut entries = Vec::with_capacity(rows.len());
    for (j, row) in rows.iter().enumerate() {
        let Value::Array(row) = row else {
            return fail(format!("entry row {j} is not an array"));
        };
        if row.len() != source.len() {
            return fail(format!("entry row {j} has {} entries for {} source summands", row.len(), source.len()));
        }
        let mut out = Vec::with_capacity(row.len());
        for (i, cell) in row.iter().enumerate() {
            let deg = target[j] - source[i];
            let cs = coeff_list(field, cell, "entry")?;
            let form = if cs.is_empty() {
                BiForm::zero(field, deg)
            } else if cs.len() as i64 != deg + 1 {
                return fail(format!("entry ({j},{i}) has {} coefficients, degree {deg} needs {}", cs.len(), deg + 1));
            } else {
                BiForm::from_coeffs(field, cs).map_err(|e| ParseError(e.to_string()))?
            };
            out.push(form);
        }
        entries.push(out);
    }
    GradedMap::new(field, source, target, entries).map_err(|e| ParseError(e.to_string()))
}

/// Either `rnc e n` or a JSON array of `n + 1` coefficient lists of equal length.
pub fn parse_curve(field: FieldSpec, src: &str) -> Parsed<ParamCurve> {
    let words: Vec<&str> = src.split_whitespace().collect();
    if words.first() == Some(&"rnc") {
        let [_, e, n] = words.as_slice() else {
            return fail("expected `rnc <e> <n>`");
        };
        let (Ok(e), Ok(n)) = (e.parse(), n.parse()) else {
            return fail(format!("bad rnc parameters in {src:?}"));
        };
        return ParamCurve::rnc(field, e, n).map_err(|e| ParseError(e.to_string()));
    }
    let v: Value = serde_json::from_str(src).map_err(|e| ParseError(format!("curve JSON: {e}")))?;
    let Value::Array(comps) = v else {
        return fail("curve must be a JSON array of coefficient lists");
    };
    let forms = comps
        .iter()
        .map(|c| BiForm::from_coeffs(field, coeff_list(field, c, "component")?).map_err(|e| ParseError(e.to_string())))
        .collect::<Parsed<Vec<_>>>()?;
    ParamCurve::new(field, forms).map_err(|e| ParseError(e.to_string()))
}
