//! Literal indeterminacy: numbers `a + bI` with `I^2 = I`, refined numbers
//! `a + b1 I1 + ... + bm Im`, matrices over them, and graph adjacency with
//! entries in `{0, 1, -1, I}`.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{conjunct, OperatorSystem};
use crate::value::Triplet;

/// `a + bI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NeutrosophicNumber<S> {
    pub a: S,
    pub b: S,
}

/// Exact rational neutrosophic number, used by matrices.
pub type Nn = NeutrosophicNumber<Rational64>;

impl<S: Num + Clone> NeutrosophicNumber<S> {
    pub fn new(a: S, b: S) -> Self {
        NeutrosophicNumber { a, b }
    }

    pub fn real(a: S) -> Self {
        NeutrosophicNumber { a, b: S::zero() }
    }

    /// The literal indeterminacy `I`.
    pub fn indeterminacy() -> Self {
        NeutrosophicNumber { a: S::zero(), b: S::one() }
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    /// Invertible iff `a != 0` and `a + b != 0`.
    pub fn inverse(&self) -> Option<Self> {
        let sum = self.a.clone() + self.b.clone();
        if self.a.is_zero() || sum.is_zero() {
            return None;
        }
        let inv_a = S::one() / self.a.clone();
        let inv_sum = S::one() / sum;
        Some(NeutrosophicNumber { b: inv_sum - inv_a.clone(), a: inv_a })
    }
}

pub fn nn_add<S: Num + Clone>(x: &NeutrosophicNumber<S>, y: &NeutrosophicNumber<S>) -> NeutrosophicNumber<S> {
    NeutrosophicNumber {
        a: x.a.clone() + y.a.clone(),
        b: x.b.clone() + y.b.clone(),
    }
}

/// `(a + bI)(c + dI) = ac + (ad + bc + bd)I`.
pub fn nn_mul<S: Num + Clone>(x: &NeutrosophicNumber<S>, y: &NeutrosophicNumber<S>) -> NeutrosophicNumber<S> {
    let (a, b, c, d) = (x.a.clone(), x.b.clone(), y.a.clone(), y.b.clone());
    NeutrosophicNumber {
        a: a.clone() * c.clone(),
        b: a * d.clone() + b.clone() * c + b * d,
    }
}

/// Integer power. `n <= 0` is only defined for invertible numbers; in
/// particular `I^n` is undefined for `n <= 0`.
pub fn nn_pow<S: Num + Clone>(x: &NeutrosophicNumber<S>, n: i64) -> Result<NeutrosophicNumber<S>> {
    let base = if n > 0 {
        x.clone()
    } else {
        match x.inverse() {
            Some(inv) => inv,
            None => {
                return Err(Error::Undefined(format!(
                    "power {n} of a non-invertible neutrosophic number"
                )))
            }
        }
    };
    let mut e = n.unsigned_abs();
    let mut acc = NeutrosophicNumber::real(S::one());
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = nn_mul(&acc, &sq);
        }
        sq = nn_mul(&sq, &sq);
        e >>= 1;
    }
    Ok(acc)
}

impl<S: Num + Clone> Add for NeutrosophicNumber<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        nn_add(&self, &rhs)
    }
}

impl<S: Num + Clone> Mul for NeutrosophicNumber<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        nn_mul(&self, &rhs)
    }
}

impl<S: Num + Clone + Neg<Output = S>> Neg for NeutrosophicNumber<S> {
    type Output = Self;
    fn neg(self) -> Self {
        NeutrosophicNumber { a: -self.a, b: -self.b }
    }
}

fn write_coeff<S: fmt::Display + Signed + Clone>(f: &mut fmt::Formatter<'_>, b: &S, sym: &str) -> fmt::Result {
    if b.is_one() {
        write!(f, "{sym}")
    } else if (-b.clone()).is_one() {
        write!(f, "-{sym}")
    } else {
        write!(f, "{b}{sym}")
    }
}

fn write_signed_term<S: fmt::Display + Signed + Clone>(f: &mut fmt::Formatter<'_>, b: &S, sym: &str) -> fmt::Result {
    if b.is_negative() {
        f.write_str("-")?;
    } else {
        f.write_str("+")?;
    }
    write_coeff(f, &b.abs(), sym)
}

/// Canonical form: `0`, `3`, `1/3`, `I`, `-I`, `5I`, `2+I`, `-1+4I`.
impl<S: fmt::Display + Signed + Clone> fmt::Display for NeutrosophicNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write_coeff(f, &self.b, "I"),
            (false, false) => {
                write!(f, "{}", self.a)?;
                write_signed_term(f, &self.b, "I")
            }
        }
    }
}

/// Parses `3`, `-1.25`, `1/3` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = |m: &str| Error::parse(format!("'{s}'"), m.to_string());
    if s.is_empty() {
        return Err(bad("empty number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad("bad numerator"))?;
        let d: i64 = d.parse().map_err(|_| bad("bad denominator"))?;
        if d == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational64::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad("empty number"));
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad("not a number"));
    }
    let digits = format!("{int}{frac}");
    let num: i64 = digits.parse().map_err(|_| bad("number too large"))?;
    let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(|| bad("too many decimals"))?;
    let r = Rational64::new(num, den);
    Ok(if neg { -r } else { r })
}

fn parse_coeff(s: &str, whole: &str) -> Result<Rational64> {
    match s {
        "" | "+" => Ok(Rational64::one()),
        "-" => Ok(-Rational64::one()),
        _ => parse_rational(s).map_err(|_| Error::parse(format!("'{whole}'"), "bad coefficient of I")),
    }
}

impl FromStr for Nn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('I') else {
            return Ok(Nn::real(parse_rational(s)?));
        };
        // split `a+bI` at the last sign that is not leading
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => Ok(Nn::new(parse_rational(&body[..i])?, parse_coeff(&body[i..], s)?)),
            None => Ok(Nn::new(Rational64::zero(), parse_coeff(body, s)?)),
        }
    }
}

/// `a + b1 I1 + ... + bm Im`. Only addition and scaling are defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedNeutrosophicNumber<S> {
    a: S,
    coeffs: Vec<S>,
}

impl<S: Num + Clone> RefinedNeutrosophicNumber<S> {
    pub fn new(a: S, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("refined neutrosophic number needs at least one sub-indeterminacy"));
        }
        Ok(RefinedNeutrosophicNumber { a, coeffs })
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    /// True when every coefficient, including `a`, is zero.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Coefficient-wise sum; the shorter number is zero-padded.
pub fn rnn_add<S: Num + Clone>(
    x: &RefinedNeutrosophicNumber<S>,
    y: &RefinedNeutrosophicNumber<S>,
) -> RefinedNeutrosophicNumber<S> {
    let m = x.m().max(y.m());
    let at = |v: &[S], k: usize| v.get(k).cloned().unwrap_or_else(S::zero);
    RefinedNeutrosophicNumber {
        a: x.a.clone() + y.a.clone(),
        coeffs: (0..m).map(|k| at(&x.coeffs, k) + at(&y.coeffs, k)).collect(),
    }
}

pub fn rnn_scale<S: Num + Clone>(x: &RefinedNeutrosophicNumber<S>, c: S) -> RefinedNeutrosophicNumber<S> {
    RefinedNeutrosophicNumber {
        a: x.a.clone() * c.clone(),
        coeffs: x.coeffs.iter().map(|b| b.clone() * c.clone()).collect(),
    }
}

impl<S: fmt::Display + Signed + Clone> fmt::Display for RefinedNeutrosophicNumber<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        for (k, b) in self.coeffs.iter().enumerate() {
            if !b.is_zero() {
                write_signed_term(f, b, &format!("I{}", k + 1))?;
            }
        }
        Ok(())
    }
}

/// Rectangular matrix over exact neutrosophic numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Nn>,
}

impl NeutroMatrix {
    pub fn from_rows(rows: Vec<Vec<Nn>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::usage("matrix must have at least one row and column"));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::usage(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
        }
        Ok(NeutroMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from string tokens such as `"2+I"`, `"1/3"`, `"5I"`.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|t| t.parse()).collect::<Result<Vec<Nn>>>())
            .collect::<Result<Vec<_>>>()?;
        NeutroMatrix::from_rows(parsed)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { Nn::real(Rational64::one()) } else { Nn::real(Rational64::zero()) })
                    .collect()
            })
            .collect();
        NeutroMatrix::from_rows(rows)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Nn> {
        if r < self.rows && c < self.cols {
            self.data.get(r * self.cols + c)
        } else {
            None
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Nn]> {
        self.data.chunks(self.cols)
    }

    /// Whitespace-separated tokens, one row per line. Lines starting with
    /// `#` and blank lines are skipped.
    pub fn parse_grid(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .enumerate()
                .map(|(c, tok)| {
                    tok.parse::<Nn>().map_err(|e| {
                        Error::parse(format!("line {}, column {}", lineno + 1, c + 1), e.to_string())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        NeutroMatrix::from_rows(rows)
    }

    /// Canonical grid text; `parse_grid(m.to_grid()) == m`.
    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let toks: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for NeutroMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

pub fn nm_add(m: &NeutroMatrix, n: &NeutroMatrix) -> Result<NeutroMatrix> {
    if m.shape() != n.shape() {
        return Err(Error::usage(format!("cannot add {:?} and {:?} matrices", m.shape(), n.shape())));
    }
    Ok(NeutroMatrix {
        rows: m.rows,
        cols: m.cols,
        data: m.data.iter().zip(&n.data).map(|(x, y)| nn_add(x, y)).collect(),
    })
}

pub fn nm_mul(m: &NeutroMatrix, n: &NeutroMatrix) -> Result<NeutroMatrix> {
    if m.cols != n.rows {
        return Err(Error::usage(format!("cannot multiply {:?} by {:?} matrices", m.shape(), n.shape())));
    }
    let mut data = Vec::with_capacity(m.rows * n.cols);
    for r in 0..m.rows {
        for c in 0..n.cols {
            let mut acc = Nn::real(Rational64::zero());
            for k in 0..m.cols {
                acc = nn_add(&acc, &nn_mul(&m.data[r * m.cols + k], &n.data[k * n.cols + c]));
            }
            data.push(acc);
        }
    }
    Ok(NeutroMatrix { rows: m.rows, cols: n.cols, data })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdjacencyKind {
    /// Entries `{0, 1, I}`.
    Graph,
    /// Entries `{0, 1, -1, I}`, zero diagonal.
    CognitiveMap,
}

impl FromStr for AdjacencyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "graph" => Ok(AdjacencyKind::Graph),
            "cognitivemap" | "ncm" | "map" => Ok(AdjacencyKind::CognitiveMap),
            _ => Err(Error::usage(format!("unknown adjacency kind '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyReport {
    pub kind: AdjacencyKind,
    pub size: usize,
    pub connections: usize,
    pub inverse_connections: usize,
    pub indeterminate: usize,
    pub symmetric: bool,
}

/// A validated adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroAdjacency {
    matrix: NeutroMatrix,
    kind: AdjacencyKind,
}

impl NeutroAdjacency {
    pub fn new(matrix: NeutroMatrix, kind: AdjacencyKind) -> Result<Self> {
        adjacency_validate(&matrix, kind)?;
        Ok(NeutroAdjacency { matrix, kind })
    }

    pub fn matrix(&self) -> &NeutroMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> AdjacencyKind {
        self.kind
    }
}

pub fn adjacency_validate(m: &NeutroMatrix, kind: AdjacencyKind) -> Result<AdjacencyReport> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(Error::usage(format!("adjacency matrix must be square, got {rows}x{cols}")));
    }
    let one = Rational64::one();
    let zero = Rational64::zero();
    let mut report = AdjacencyReport {
        kind,
        size: rows,
        connections: 0,
        inverse_connections: 0,
        indeterminate: 0,
        symmetric: true,
    };
    for r in 0..rows {
        for c in 0..cols {
            let x = &m.data[r * cols + c];
            let bad = |msg: String| Error::InvalidEntry { row: r + 1, col: c + 1, message: msg };
            match (x.a, x.b) {
                (a, b) if a == zero && b == zero => {}
                (a, b) if a == one && b == zero => report.connections += 1,
                (a, b) if a == -one && b == zero && kind == AdjacencyKind::CognitiveMap => {
                    report.inverse_connections += 1
                }
                (a, b) if a == zero && b == one => report.indeterminate += 1,
                _ => {
                    let allowed = match kind {
                        AdjacencyKind::Graph => "{0, 1, I}",
                        AdjacencyKind::CognitiveMap => "{0, 1, -1, I}",
                    };
                    return Err(bad(format!("entry {x} is not in {allowed}")));
                }
            }
            if kind == AdjacencyKind::CognitiveMap && r == c && !(x.a.is_zero() && x.b.is_zero()) {
                return Err(bad(format!("diagonal entry {x} must be 0")));
            }
            if m.data[c * cols + r] != *x {
                report.symmetric = false;
            }
        }
    }
    Ok(report)
}

/// Composes edge values along a path with the NS min/max conjunction.
pub fn path_influence(edges: &[Triplet]) -> Result<Triplet> {
    let (first, rest) = edges
        .split_first()
        .ok_or_else(|| Error::usage("path needs at least one edge"))?;
    let ns = OperatorSystem::ns();
    rest.iter().try_fold(*first, |acc, e| conjunct(&acc, e, &ns))
}
