//! JSON records for results, batch jobs and solver reports.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use thomforge::algebra::{format_rational, parse_rational, Rational};
use thomforge::chern::{infer_weights, parse_monomial_map, GermSignature};
use thomforge::database::TpEntry;
use thomforge::invariants::{InvariantResult, IntersectionNumbers};
use thomforge::restriction::SolveOutcome;
use thomforge::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GermRecord {
    pub weights: Vec<Number>,
    pub degrees: Vec<Number>,
}

/// An integer, or a rational written as a string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Number {
    Int(u64),
    Text(String),
}

impl Number {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            Number::Int(n) => Ok(Rational::from_integer((*n).into())),
            Number::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ResultRecord {
    pub germ: GermRecord,
    pub invariant: String,
    pub value: String,
    pub integral: bool,
    pub warnings: Vec<String>,
}

impl ResultRecord {
    pub fn new(sig: &GermSignature, invariant: &str, r: InvariantResult) -> Self {
        let ints = |v: &[u64]| v.iter().map(|&x| Number::Int(x)).collect();
        ResultRecord {
            germ: GermRecord {
                weights: ints(sig.weights()),
                degrees: ints(sig.degrees()),
            },
            invariant: invariant.to_string(),
            value: r.value_string(),
            integral: r.integral,
            warnings: r.warnings,
        }
    }
}

/// One batch input line: a germ (or monomial map) and an invariant name.
#[derive(Clone, Debug, Deserialize)]
pub struct JobRecord {
    #[serde(default)]
    pub germ: Option<GermRecord>,
    #[serde(default)]
    pub map: Option<String>,
    pub invariant: String,
}

impl JobRecord {
    pub fn parse(line: &str) -> Result<JobRecord> {
        serde_json::from_str(line).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn signature(&self) -> Result<GermSignature> {
        match (&self.germ, &self.map) {
            (Some(g), None) => {
                let conv = |v: &[Number]| v.iter().map(Number::to_rational).collect::<Result<Vec<_>>>();
                GermSignature::from_rationals(&conv(&g.weights)?, &conv(&g.degrees)?)
            }
            (None, Some(m)) => infer_weights(&parse_monomial_map(m)?),
            _ => Err(Error::InvalidInput("job needs exactly one of germ, map".into())),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum BatchLine {
    Result(ResultRecord),
    Many { results: Vec<ResultRecord> },
    Error { line: usize, error: ErrorRecord },
}

#[derive(Serialize)]
pub struct ErrorRecord {
    pub category: &'static str,
    pub exit_code: u8,
    pub message: String,
}

impl BatchLine {
    pub fn error(line: usize, e: &Error) -> Self {
        let c = e.category();
        BatchLine::Error {
            line,
            error: ErrorRecord {
                category: match c {
                    thomforge::ErrorCategory::Parse => "parse",
                    thomforge::ErrorCategory::Precondition => "precondition",
                    thomforge::ErrorCategory::UnknownKey => "unknown_key",
                    thomforge::ErrorCategory::Internal => "internal",
                },
                exit_code: crate::category_code(c),
                message: e.to_string(),
            },
        }
    }
}

pub fn solve_json(outcome: &SolveOutcome) -> Value {
    match outcome {
        SolveOutcome::Unique { values, polynomial } => json!({
            "status": "unique",
            "values": values.iter().map(|(k, v)| (k.clone(), Value::from(format_rational(v)))).collect::<serde_json::Map<_, _>>(),
            "polynomial": polynomial.to_string(),
        }),
        SolveOutcome::Underdetermined { rank, free, particular, directions } => json!({
            "status": "underdetermined",
            "rank": rank,
            "free": free,
            "particular": particular.to_string(),
            "directions": directions.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        }),
        SolveOutcome::Inconsistent { rank, equations } => json!({
            "status": "inconsistent",
            "rank": rank,
            "equations": equations,
        }),
    }
}

pub fn entry_json(e: &TpEntry) -> Value {
    json!({
        "name": e.key.name,
        "kappa": e.key.kappa,
        "kind": e.key.kind.as_str(),
        "codim": e.codim,
        "deg1": e.deg1,
        "aut": e.aut,
        "max_valid_degree": e.max_valid_degree,
        "citation": e.citation,
        "polynomial": e.polynomial.to_string(),
    })
}

/// Reads the eight intersection numbers from a JSON object keyed by field name.
pub fn parse_intersections(text: &str) -> Result<IntersectionNumbers> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    let mut values = Vec::with_capacity(8);
    for field in IntersectionNumbers::FIELDS {
        let x = match v.get(field) {
            Some(Value::String(s)) => parse_rational(s)?,
            Some(Value::Number(n)) => parse_rational(&n.to_string())?,
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("missing or non-numeric field {field:?}"),
                })
            }
        };
        values.push(x);
    }
    let values: [Rational; 8] = values.try_into().expect("eight fields");
    Ok(IntersectionNumbers::from_values(values))
}
