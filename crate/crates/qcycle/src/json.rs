//! JSON forms of the core types. Field order in each struct is the key order
//! on output; compact serialization of a canonical form is byte-stable.

use qcycle_core::analysis::RetractQuotient;
use qcycle_core::extensions::{CoveringMap, DynamicalPair, Factorization};
use qcycle_core::report::{VerificationReport, Violation};
use qcycle_core::{OpTable, QCycleSet, SolutionMap};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;

pub type Nested = Vec<Vec<Vec<Vec<usize>>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcsJson {
    pub n: usize,
    pub dot: Vec<Vec<usize>>,
    pub colon: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub n: usize,
    pub r: Vec<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub base: QcsJson,
    pub m: usize,
    pub alpha: Nested,
    pub alpha_prime: Nested,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub source: QcsJson,
    pub target: QcsJson,
    pub p: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub n: usize,
    pub dot: Vec<Vec<usize>>,
    pub colon: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
}

/// An extension on `X × S` with the data needed to unflatten `x·m + s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    pub n: usize,
    pub dot: Vec<Vec<usize>>,
    pub colon: Vec<Vec<usize>>,
    pub base: QcsJson,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub m: usize,
    pub pair: PairJson,
    pub phi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub law: String,
    pub witness: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub ok: bool,
    pub violations: Vec<ViolationJson>,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            law: v.law.name().to_string(),
            witness: v.witness.clone(),
            lhs: v.lhs.clone(),
            rhs: v.rhs.clone(),
        }
    }
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            ok: r.ok(),
            violations: r.violations.iter().map(ViolationJson::from).collect(),
        }
    }
}

impl From<&QCycleSet> for QcsJson {
    fn from(x: &QCycleSet) -> Self {
        QcsJson {
            n: x.n(),
            dot: x.dot_table().to_rows(),
            colon: x.colon_table().to_rows(),
        }
    }
}

impl From<&SolutionMap> for SolutionJson {
    fn from(s: &SolutionMap) -> Self {
        SolutionJson {
            n: s.n(),
            r: s.to_rows()
                .into_iter()
                .map(|row| row.into_iter().map(|(a, b)| [a, b]).collect())
                .collect(),
        }
    }
}

impl From<&DynamicalPair> for PairJson {
    fn from(d: &DynamicalPair) -> Self {
        let (alpha, alpha_prime) = d.to_nested();
        PairJson {
            base: d.base().into(),
            m: d.m(),
            alpha,
            alpha_prime,
        }
    }
}

impl From<&CoveringMap> for CoverJson {
    fn from(c: &CoveringMap) -> Self {
        CoverJson {
            source: (&c.source).into(),
            target: (&c.target).into(),
            p: c.p.clone(),
        }
    }
}

impl From<&RetractQuotient> for QuotientJson {
    fn from(r: &RetractQuotient) -> Self {
        let q = QcsJson::from(&r.quotient);
        QuotientJson {
            n: q.n,
            dot: q.dot,
            colon: q.colon,
            classes: r.classes.clone(),
        }
    }
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson {
            m: f.m,
            pair: (&f.pair).into(),
            phi: f.phi.images().to_vec(),
        }
    }
}

impl ExtensionJson {
    pub fn new(x: &QCycleSet, base: &QCycleSet, m: usize) -> Self {
        let q = QcsJson::from(x);
        ExtensionJson {
            n: q.n,
            dot: q.dot,
            colon: q.colon,
            base: base.into(),
            m,
        }
    }
}

fn shape(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Shape(format!("{what}: {e}"))
}

fn check_n(n: usize, rows: usize) -> Result<(), CliError> {
    if n == rows {
        Ok(())
    } else {
        Err(CliError::Shape(format!("\"n\" is {n} but the table has {rows} rows")))
    }
}

impl QcsJson {
    /// Both tables, checked for shape and range only.
    pub fn tables(&self) -> Result<(OpTable, OpTable), CliError> {
        check_n(self.n, self.dot.len())?;
        check_n(self.n, self.colon.len())?;
        let dot = OpTable::from_rows(&self.dot).map_err(|e| shape("dot", e))?;
        let colon = OpTable::from_rows(&self.colon).map_err(|e| shape("colon", e))?;
        Ok((dot, colon))
    }

    /// The validated structure; axiom failures are reported as
    /// [`CliError::Invalid`].
    pub fn to_qcs(&self) -> Result<QCycleSet, CliError> {
        let (dot, colon) = self.tables()?;
        QCycleSet::new(dot, colon).map_err(CliError::from)
    }
}

impl SolutionJson {
    pub fn to_solution(&self) -> Result<SolutionMap, CliError> {
        check_n(self.n, self.r.len())?;
        let rows: Vec<Vec<(usize, usize)>> = self
            .r
            .iter()
            .map(|row| row.iter().map(|&[a, b]| (a, b)).collect())
            .collect();
        SolutionMap::new(&rows).map_err(|e| shape("r", e))
    }
}

impl PairJson {
    pub fn to_pair(&self) -> Result<DynamicalPair, CliError> {
        let base = self.base.to_qcs()?;
        DynamicalPair::from_nested(base, self.m, &self.alpha, &self.alpha_prime).map_err(|e| shape("pair", e))
    }
}

impl CoverJson {
    pub fn to_cover(&self) -> Result<CoveringMap, CliError> {
        let source = self.source.to_qcs()?;
        let target = self.target.to_qcs()?;
        CoveringMap::new(source, target, self.p.clone()).map_err(|e| shape("p", e))
    }
}

/// A parsed input file, classified by its keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Qcs(QcsJson),
    Solution(SolutionJson),
    Pair(PairJson),
    Cover(CoverJson),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Qcs(_) => "qcs",
            Input::Solution(_) => "solution",
            Input::Pair(_) => "pair",
            Input::Cover(_) => "cover",
        }
    }
}

const KINDS: [(&str, &[&str]); 4] = [
    ("qcs", &["dot", "colon"]),
    ("solution", &["r"]),
    ("pair", &["base", "alpha", "alpha_prime"]),
    ("cover", &["source", "target", "p"]),
];

pub fn parse_value(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn detect(obj: &Map<String, Value>) -> Result<&'static str, CliError> {
    let hits: Vec<&str> = KINDS
        .iter()
        .filter(|(_, keys)| keys.iter().any(|k| obj.contains_key(*k)))
        .map(|(kind, _)| *kind)
        .collect();
    match hits.as_slice() {
        [one] => Ok(one),
        [] => Err(CliError::UnknownInput),
        many => Err(CliError::Ambiguous(many.join(", "))),
    }
}

/// Parses a q-cycle set, solution, pair or covering, chosen by key set.
pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let value = parse_value(text)?;
    let Value::Object(obj) = &value else {
        return Err(CliError::UnknownInput);
    };
    let kind = detect(obj)?;
    let de = |e: serde_json::Error| shape(kind, e);
    Ok(match kind {
        "qcs" => Input::Qcs(serde_json::from_value(value).map_err(de)?),
        "solution" => Input::Solution(serde_json::from_value(value).map_err(de)?),
        "pair" => Input::Pair(serde_json::from_value(value).map_err(de)?),
        _ => Input::Cover(serde_json::from_value(value).map_err(de)?),
    })
}

/// A q-cycle set given directly or through the solution it encodes.
pub fn parse_structure(text: &str) -> Result<QCycleSet, CliError> {
    match parse_input(text)? {
        Input::Qcs(q) => q.to_qcs(),
        Input::Solution(s) => s.to_solution()?.to_qcycle_set().map_err(CliError::from),
        other => Err(CliError::WrongKind {
            expected: "qcs or solution",
            found: other.kind(),
        }),
    }
}

pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
