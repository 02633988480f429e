//! Versioned store of Thom polynomials and higher Thom polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::algebra::{parse_poly, parse_rational, GradedPoly, Rational, VarSpace};
use crate::error::{Error, Result};
use crate::pushforward::rho;

const BUNDLED: &str = include_str!("../data/thom_polynomials.tpdb");

/// Environment variable naming an alternative database file.
pub const DB_ENV_VAR: &str = "THOMFORGE_DB";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryKind {
    TpSource,
    TpTarget,
    TpsmClosure,
    TpsmAlphaImage,
    TpsmAlphaImage2,
    TpsmAlphaDis,
    TpsmTargetImage,
    TpsmTargetDis,
    TpA,
}

impl EntryKind {
    pub const ALL: [EntryKind; 9] = [
        EntryKind::TpSource,
        EntryKind::TpTarget,
        EntryKind::TpsmClosure,
        EntryKind::TpsmAlphaImage,
        EntryKind::TpsmAlphaImage2,
        EntryKind::TpsmAlphaDis,
        EntryKind::TpsmTargetImage,
        EntryKind::TpsmTargetDis,
        EntryKind::TpA,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            EntryKind::TpSource => "tp_source",
            EntryKind::TpTarget => "tp_target",
            EntryKind::TpsmClosure => "tpsm_closure",
            EntryKind::TpsmAlphaImage => "tpsm_alpha_image",
            EntryKind::TpsmAlphaImage2 => "tpsm_alpha_image2",
            EntryKind::TpsmAlphaDis => "tpsm_alpha_dis",
            EntryKind::TpsmTargetImage => "tpsm_target_image",
            EntryKind::TpsmTargetDis => "tpsm_target_dis",
            EntryKind::TpA => "tpA",
        }
    }

    /// Exact polynomials rather than truncated series.
    pub fn is_exact(&self) -> bool {
        matches!(self, EntryKind::TpSource | EntryKind::TpTarget | EntryKind::TpA)
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntryKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownKey(format!("entry kind {s:?}")))
    }
}

/// Splits a multi-singularity name such as `A1^2A2` into mono types `[A1, A1, A2]`.
///
/// Returns `None` for names that are not tuples of `Letter digits` tokens.
pub fn parse_tuple(name: &str) -> Option<Vec<String>> {
    let b = name.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if !b[i].is_ascii_uppercase() {
            return None;
        }
        let start = i;
        i += 1;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == start + 1 {
            return None;
        }
        let token = &name[start..i];
        let mut reps = 1;
        if i < b.len() && b[i] == b'^' {
            i += 1;
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            reps = name[s..i].parse().ok()?;
        }
        for _ in 0..reps {
            out.push(token.to_string());
        }
    }
    if out.is_empty() {
        None
    } else {
        Some(out)
    }
}

/// Renders a tuple with runs compressed: `[A1, A1, A2]` becomes `A1^2A2`.
pub fn tuple_name(types: &[String]) -> String {
    let mut s = String::new();
    let mut i = 0;
    while i < types.len() {
        let mut j = i;
        while j < types.len() && types[j] == types[i] {
            j += 1;
        }
        s.push_str(&types[i]);
        if j - i > 1 {
            s.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    s
}

/// Canonical spelling of a key name (`A1A1` and `A_1^2` become `A1^2`).
pub fn canonical_name(name: &str) -> String {
    let compact: String = name.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
    match parse_tuple(&compact) {
        Some(t) => tuple_name(&t),
        None => name.to_string(),
    }
}

/// Multiplicity of the first entry, and the order of the symmetry group.
pub fn tuple_multiplicities(types: &[String]) -> (u32, u64) {
    let deg1 = types.iter().filter(|t| **t == types[0]).count() as u32;
    let mut counts: BTreeMap<&String, u64> = BTreeMap::new();
    for t in types {
        *counts.entry(t).or_default() += 1;
    }
    let aut = counts.values().map(|&c| (1..=c).product::<u64>()).product();
    (deg1, aut)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityKey {
    pub name: String,
    pub kappa: u32,
    pub kind: EntryKind,
}

impl SingularityKey {
    pub fn new(name: &str, kappa: u32, kind: EntryKind) -> Self {
        SingularityKey {
            name: canonical_name(name),
            kappa,
            kind,
        }
    }
}

impl fmt::Display for SingularityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (kappa={}, {})", self.name, self.kappa, self.kind)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TpEntry {
    pub key: SingularityKey,
    pub codim: u32,
    pub deg1: u32,
    pub aut: u64,
    pub max_valid_degree: u32,
    pub citation: String,
    pub polynomial: GradedPoly,
}

/// Coefficient vector of a constructible function in the closure basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Combination {
    pub name: String,
    pub kappa: u32,
    pub citation: String,
    pub terms: Vec<(Rational, String)>,
}

#[derive(Clone, Debug)]
pub struct Database {
    entries: BTreeMap<SingularityKey, TpEntry>,
    combinations: Vec<Combination>,
    version: String,
    content_hash: String,
}

fn db_err(line: usize, msg: impl fmt::Display) -> Error {
    Error::Database(format!("line {line}: {msg}"))
}

impl Database {
    /// The database compiled into the library.
    pub fn bundled() -> Database {
        Database::parse(BUNDLED).expect("bundled database parses")
    }

    pub fn from_path(path: &Path) -> Result<Database> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Database(format!("{}: {e}", path.display())))?;
        Database::parse(&text)
    }

    /// The file named by `THOMFORGE_DB`, or the bundled database.
    pub fn from_env() -> Result<Database> {
        match std::env::var_os(DB_ENV_VAR) {
            Some(p) => Database::from_path(Path::new(&p)),
            None => Ok(Database::bundled()),
        }
    }

    pub fn parse(text: &str) -> Result<Database> {
        let digest = Sha256::digest(text.as_bytes());
        let content_hash = digest.iter().map(|b| format!("{b:02x}")).collect();
        let mut version = String::from("unversioned");
        let mut entries = BTreeMap::new();
        let mut combinations = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("thomforge database") {
                    version = v.trim().to_string();
                }
                continue;
            }
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields[0] == "combination" {
                if fields.len() != 5 {
                    return Err(db_err(line_no, "combination records have 5 fields"));
                }
                let kappa = fields[2].parse().map_err(|_| db_err(line_no, "bad kappa"))?;
                let mut terms = Vec::new();
                for part in fields[4].split(',') {
                    let mut it = part.split_whitespace();
                    let (Some(c), Some(k), None) = (it.next(), it.next(), it.next()) else {
                        return Err(db_err(line_no, format!("bad combination term {part:?}")));
                    };
                    let c = parse_rational(c).map_err(|e| db_err(line_no, e))?;
                    terms.push((c, canonical_name(k)));
                }
                combinations.push(Combination {
                    name: fields[1].to_string(),
                    kappa,
                    citation: fields[3].to_string(),
                    terms,
                });
                continue;
            }
            if fields.len() != 9 {
                return Err(db_err(line_no, format!("expected 9 fields, found {}", fields.len())));
            }
            let num = |i: usize, what: &str| -> Result<u64> {
                fields[i]
                    .parse()
                    .map_err(|_| db_err(line_no, format!("bad {what} {:?}", fields[i])))
            };
            let kappa = num(1, "kappa")? as u32;
            let kind: EntryKind = fields[2].parse().map_err(|e| db_err(line_no, e))?;
            let codim = num(3, "codim")? as u32;
            let deg1 = num(4, "deg1")? as u32;
            let aut = num(5, "aut")?;
            let max_valid_degree = num(6, "max_degree")? as u32;
            let mut polynomial = parse_poly(fields[8], VarSpace::characteristic(kappa))
                .map_err(|e| db_err(line_no, e))?;
            if !kind.is_exact() {
                polynomial = polynomial.truncate(max_valid_degree);
            }
            let key = SingularityKey::new(fields[0], kappa, kind);
            let entry = TpEntry {
                key: key.clone(),
                codim,
                deg1,
                aut,
                max_valid_degree,
                citation: fields[7].to_string(),
                polynomial,
            };
            if entries.insert(key.clone(), entry).is_some() {
                return Err(db_err(line_no, format!("duplicate key {key}")));
            }
        }
        Ok(Database {
            entries,
            combinations,
            version,
            content_hash,
        })
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    /// SHA-256 of the data file, hex encoded.
    pub fn content_hash(&self) -> &str {
        &self.content_hash
    }

    pub fn get(&self, key: &SingularityKey) -> Result<&TpEntry> {
        self.entries
            .get(key)
            .ok_or_else(|| Error::UnknownKey(key.to_string()))
    }

    pub fn lookup(&self, name: &str, kappa: u32, kind: EntryKind) -> Result<&TpEntry> {
        self.get(&SingularityKey::new(name, kappa, kind))
    }

    pub fn entries(&self) -> impl Iterator<Item = &TpEntry> {
        self.entries.values()
    }

    pub fn combinations(&self) -> &[Combination] {
        &self.combinations
    }

    pub fn combination(&self, name: &str, kappa: u32) -> Result<&Combination> {
        self.combinations
            .iter()
            .find(|c| c.name == name && c.kappa == kappa)
            .ok_or_else(|| Error::UnknownKey(format!("combination {name} (kappa={kappa})")))
    }

    /// Best available tp^SM series for a stratum closure: the closure entry if
    /// present, otherwise the Thom polynomial, valid only at its codimension.
    pub fn closure_series(&self, name: &str, kappa: u32) -> Result<(GradedPoly, u32)> {
        if let Ok(e) = self.lookup(name, kappa, EntryKind::TpsmClosure) {
            return Ok((e.polynomial.clone(), e.max_valid_degree));
        }
        let e = self.lookup(name, kappa, EntryKind::TpSource)?;
        Ok((e.polynomial.clone().truncate(e.codim), e.codim))
    }

    /// `Σ coefficient · tp^SM(closure)` and the degree through which it is valid.
    pub fn evaluate_combination(&self, comb: &Combination) -> Result<(GradedPoly, u32)> {
        let mut acc = GradedPoly::zero(VarSpace::characteristic(comb.kappa));
        let mut valid = u32::MAX;
        for (c, name) in &comb.terms {
            let (series, deg) = self.closure_series(name, comb.kappa)?;
            valid = valid.min(deg);
            acc = acc.add(&series.scale(c))?;
        }
        Ok((acc.truncate(valid), valid))
    }

    /// Runs every structural check over the database.
    pub fn validate_all(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for e in self.entries.values() {
            self.check_grading(e, &mut report);
            if let Some(types) = parse_tuple(&e.key.name) {
                if matches!(e.key.kind, EntryKind::TpSource | EntryKind::TpsmClosure) {
                    let (deg1, aut) = tuple_multiplicities(&types);
                    report.push(
                        &e.key,
                        "deg1 and |Aut| match the name",
                        deg1 == e.deg1 && aut == e.aut,
                        format!("stored ({}, {}), from name ({deg1}, {aut})", e.deg1, e.aut),
                    );
                }
            }
            if e.key.kind == EntryKind::TpsmClosure {
                if let Ok(tp) = self.lookup(&e.key.name, e.key.kappa, EntryKind::TpSource) {
                    let lead = e.polynomial.grade_component(e.codim);
                    let ok = lead.as_ref().is_ok_and(|l| *l == tp.polynomial);
                    report.push(
                        &e.key,
                        "leading term equals the Thom polynomial",
                        ok,
                        match lead {
                            Ok(l) => format!("leading term {l}"),
                            Err(err) => err.to_string(),
                        },
                    );
                }
            }
            if e.key.kind == EntryKind::TpA {
                let ss = crate::chern::supersymmetry_check(&e.polynomial, 2, 2);
                report.push(
                    &e.key,
                    "not expressible in quotient Chern classes",
                    matches!(ss, Ok(false)),
                    format!("supersymmetric: {ss:?}"),
                );
            }
        }
        self.check_milnor_cancellation(&mut report);
        for comb in &self.combinations {
            self.check_combination(comb, &mut report);
        }
        self.check_target_series(
            ("alpha_dis", 0, EntryKind::TpsmAlphaDis),
            ("dis", EntryKind::TpsmTargetDis),
            &mut report,
        );
        self.check_target_series(
            ("alpha_image", 1, EntryKind::TpsmAlphaImage),
            ("image", EntryKind::TpsmTargetImage),
            &mut report,
        );
        report
    }

    fn check_grading(&self, e: &TpEntry, report: &mut ValidationReport) {
        let p = &e.polynomial;
        let (ok, detail) = if e.key.kind.is_exact() {
            (
                p.is_homogeneous_of(e.codim),
                format!("homogeneous of degree {}", e.codim),
            )
        } else {
            let lowest = p.min_degree();
            (
                lowest == Some(e.codim) && p.max_degree().unwrap_or(0) <= e.max_valid_degree,
                format!(
                    "lowest degree {lowest:?}, codim {}, valid through {}",
                    e.codim, e.max_valid_degree
                ),
            )
        };
        report.push(&e.key, "grading", ok, detail);
    }

    fn check_milnor_cancellation(&self, report: &mut ValidationReport) {
        let key = SingularityKey::new("A1+A2+A3+A4", 0, EntryKind::TpsmClosure);
        let space = VarSpace::characteristic(0);
        let sum = ["A1", "A2", "A3", "A4"].iter().try_fold(
            GradedPoly::zero(space),
            |acc, n| -> Result<GradedPoly> {
                let e = self.lookup(n, 0, EntryKind::TpsmClosure)?;
                acc.add(&e.polynomial)
            },
        );
        let expected = parse_poly("c1 + c2 + c3 + c4", space).expect("literal");
        match sum {
            Ok(s) => {
                let s = s.truncate(4);
                let ok = s == expected.truncate(4);
                report.push(&key, "sum of closures is c1 + c2 + c3 + c4", ok, s.to_string());
            }
            Err(e) => report.push(&key, "sum of closures is c1 + c2 + c3 + c4", false, e.to_string()),
        }
    }

    fn check_combination(&self, comb: &Combination, report: &mut ValidationReport) {
        let target = self
            .entries
            .values()
            .find(|e| e.key.name == comb.name && e.key.kappa == comb.kappa && !e.key.kind.is_exact());
        let key = SingularityKey::new(&comb.name, comb.kappa, target.map_or(EntryKind::TpsmClosure, |e| e.key.kind));
        let check = "coefficient vector reproduces the series";
        let (Some(target), Ok((series, valid))) = (target, self.evaluate_combination(comb)) else {
            report.push(&key, check, false, "missing series or constituents".into());
            return;
        };
        let through = valid.min(target.max_valid_degree);
        let ok = series.clone().truncate(through) == target.polynomial.clone().truncate(through);
        report.push(&key, check, ok, format!("compared through degree {through}"));
    }

    fn check_target_series(
        &self,
        source: (&str, u32, EntryKind),
        target: (&str, EntryKind),
        report: &mut ValidationReport,
    ) {
        let (name, kappa, kind) = source;
        let key = SingularityKey::new(target.0, kappa, target.1);
        let check = "rho of the source series equals the target series";
        let (Ok(src), Ok(tgt)) = (self.lookup(name, kappa, kind), self.lookup(target.0, kappa, target.1)) else {
            report.push(&key, check, false, "missing entries".into());
            return;
        };
        let through = tgt.max_valid_degree.min(src.max_valid_degree + kappa);
        let pushed = rho(&src.polynomial, through);
        let ok = pushed.clone().truncate(through) == tgt.polynomial.clone().truncate(through);
        report.push(&key, check, ok, format!("compared through degree {through}"));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub subject: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    fn push(&mut self, key: &SingularityKey, check: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            subject: key.to_string(),
            check: check.to_string(),
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// True when the polynomial has no `s_I` factors.
pub fn is_s_free(p: &GradedPoly) -> bool {
    !p.involves(|v| v.is_s())
}
