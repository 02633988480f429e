//! Restriction method: evaluate candidate polynomials at equivariant model
//! germs and solve for unknown coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    parse_poly, parse_rational, rat, solve_exact, GradedPoly, LinearSystem, Rational,
    Solution, Var, VarSpace,
};
use crate::chern::{total_chern_of_rep, MultiWeight};
use crate::error::{Error, Result};

/// One branch of a (multi-)germ: source weights and target degrees as torus characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub weights: Vec<MultiWeight>,
    pub degrees: Vec<MultiWeight>,
}

/// Torus-equivariant model germ with one or more branches sharing a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelGerm {
    torus_rank: u32,
    branches: Vec<Branch>,
    distinguished: usize,
    label: String,
}

impl ModelGerm {
    pub fn new(torus_rank: u32, branches: Vec<Branch>, distinguished: usize, label: &str) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidInput("model germ needs at least one branch".into()));
        }
        if distinguished >= branches.len() {
            return Err(Error::InvalidInput(format!(
                "distinguished branch {distinguished} out of range"
            )));
        }
        let kappa = branches[0].degrees.len() as i64 - branches[0].weights.len() as i64;
        for b in &branches {
            for w in b.weights.iter().chain(&b.degrees) {
                if w.rank() != torus_rank {
                    return Err(Error::RankMismatch {
                        expected: torus_rank,
                        found: w.rank(),
                    });
                }
            }
            if b.degrees.len() as i64 - b.weights.len() as i64 != kappa || kappa < 0 {
                return Err(Error::InvalidInput(
                    "branches must share a nonnegative relative dimension".into(),
                ));
            }
        }
        Ok(ModelGerm {
            torus_rank,
            branches,
            distinguished,
            label: label.to_string(),
        })
    }

    /// Single-branch model over a one-dimensional torus.
    pub fn scalar(weights: &[i64], degrees: &[i64], label: &str) -> Result<Self> {
        let wrap = |v: &[i64]| v.iter().map(|&x| MultiWeight(vec![x])).collect();
        ModelGerm::new(
            1,
            vec![Branch {
                weights: wrap(weights),
                degrees: wrap(degrees),
            }],
            0,
            label,
        )
    }

    pub fn torus_rank(&self) -> u32 {
        self.torus_rank
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kappa(&self) -> u32 {
        let b = &self.branches[0];
        (b.degrees.len() - b.weights.len()) as u32
    }

    fn space(&self) -> VarSpace {
        VarSpace::torus(self.torus_rank)
    }

    fn branch(&self, i: usize) -> Result<&Branch> {
        self.branches
            .get(i)
            .ok_or_else(|| Error::InvalidInput(format!("no branch {i} in model {}", self.label)))
    }
}

/// `∏(1 + ⟨d_j, a⟩) / ∏(1 + ⟨w_i, a⟩)` for one branch, through degree `k`.
pub fn model_quotient_chern(model: &ModelGerm, branch: usize, k: u32) -> Result<GradedPoly> {
    let b = model.branch(branch)?;
    let r = model.torus_rank;
    let num = total_chern_of_rep(&b.degrees, r, k)?;
    let den = total_chern_of_rep(&b.weights, r, k)?.invert_series(k)?;
    num.mul(&den)
}

fn proportion(d: &MultiWeight, w: &MultiWeight) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for (&x, &y) in d.0.iter().zip(&w.0) {
        match (x == 0, y == 0) {
            (true, true) => {}
            (false, false) => {
                let q = Rational::new(x.into(), y.into());
                match &ratio {
                    Some(r) if *r != q => return None,
                    Some(_) => {}
                    None => ratio = Some(q),
                }
            }
            _ => return None,
        }
    }
    ratio.or(if d.is_zero() && w.is_zero() { Some(rat(1)) } else { None })
}

/// Equivariant pushforward of `1` along one branch: target forms over source forms,
/// cancelled pairwise up to scalars.
pub fn branch_s0(model: &ModelGerm, branch: usize) -> Result<GradedPoly> {
    let b = model.branch(branch)?;
    let mut numer: Vec<&MultiWeight> = b.degrees.iter().collect();
    let mut constant = rat(1);
    for w in &b.weights {
        let pos = numer
            .iter()
            .position(|d| *d == w)
            .or_else(|| numer.iter().position(|d| proportion(d, w).is_some()))
            .ok_or_else(|| {
                Error::NonProper(format!("source weight {:?} of model {} has no matching target degree", w.0, model.label))
            })?;
        let d = numer.remove(pos);
        constant *= proportion(d, w).expect("matched");
    }
    let mut out = GradedPoly::constant(model.space(), constant);
    for d in numer {
        out = out.mul(&d.linear_form())?;
    }
    Ok(out)
}

fn chern_components(c: &GradedPoly, k: u32) -> Result<Vec<GradedPoly>> {
    (0..=k).map(|i| c.grade_component(i)).collect()
}

fn c_power(components: &[GradedPoly], exps: &[u32], space: VarSpace, k: u32) -> Result<GradedPoly> {
    let mut acc = GradedPoly::one(space).truncate(k);
    for (j, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let cj = components.get(j + 1).cloned().unwrap_or_else(|| GradedPoly::zero(space));
        acc = acc.mul(&cj.pow(e))?;
    }
    Ok(acc)
}

/// `s_I` of the model: `Σ_branches c^I(branch) · s_0(branch)`, through degree `k`.
pub fn model_s_classes(model: &ModelGerm, index: &[u32], k: u32) -> Result<GradedPoly> {
    let space = model.space();
    let mut acc = GradedPoly::zero(space).truncate(k);
    for i in 0..model.branches.len() {
        let c = model_quotient_chern(model, i, k)?;
        let comps = chern_components(&c, k)?;
        let term = c_power(&comps, index, space, k)?.mul(&branch_s0(model, i)?)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Substitutes the model's classes into a characteristic polynomial: `c_i` from
/// the distinguished branch, `s_I` summed over branches.
pub fn evaluate_at_model(p: &GradedPoly, model: &ModelGerm, k: u32) -> Result<GradedPoly> {
    if p.space().kappa() != model.kappa() {
        return Err(Error::KappaMismatch {
            expected: p.space().kappa(),
            found: model.kappa(),
        });
    }
    let space = model.space();
    let c = model_quotient_chern(model, model.distinguished, k)?;
    let comps = chern_components(&c, k)?;
    let mut assignment = HashMap::new();
    for (m, _) in p.terms() {
        for (v, _) in m.factors() {
            if assignment.contains_key(v) {
                continue;
            }
            let img = match v {
                Var::C(i) => comps
                    .get(*i as usize)
                    .cloned()
                    .unwrap_or_else(|| GradedPoly::zero(space)),
                Var::S(index) => model_s_classes(model, index.exponents(), k)?,
                other => {
                    return Err(Error::InvalidMonomial(format!(
                        "{other} cannot be evaluated at a model germ"
                    )))
                }
            };
            assignment.insert(v.clone(), img);
        }
    }
    p.substitute(&assignment, space, Some(k))
}

/// `∏⟨ν_i, a⟩ / ∏(1 + ⟨ν_i, a⟩)`: SSM class of a smooth invariant piece with the given normal weights.
pub fn inverse_normal_class(normal: &[MultiWeight], rank: u32, k: u32) -> Result<GradedPoly> {
    if normal.is_empty() {
        return Err(Error::InvalidInput("normal weights must be nonempty".into()));
    }
    let space = VarSpace::torus(rank);
    let mut top = GradedPoly::one(space);
    for v in normal {
        if v.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: v.rank(),
            });
        }
        top = top.mul(&v.linear_form())?;
    }
    let inv = total_chern_of_rep(normal, rank, k)?.invert_series(k)?;
    Ok(top.mul(&inv)?.truncate(k))
}

/// Signed sum of [`inverse_normal_class`] terms (inclusion–exclusion over smooth pieces).
pub fn union_ssm(pieces: &[(i64, Vec<MultiWeight>)], rank: u32, k: u32) -> Result<GradedPoly> {
    let mut acc = GradedPoly::zero(VarSpace::torus(rank)).truncate(k);
    for (sign, normal) in pieces {
        acc = acc.add(&inverse_normal_class(normal, rank, k)?.scale(&rat(*sign)))?;
    }
    Ok(acc)
}

/// Candidate `fixed + Σ u_k · basis_k` with unknown coefficients `u_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ansatz {
    pub degree: u32,
    pub fixed: GradedPoly,
    pub basis: Vec<GradedPoly>,
    pub unknowns: Vec<String>,
}

impl Ansatz {
    pub fn new(degree: u32, fixed: GradedPoly, basis: Vec<GradedPoly>, unknowns: Vec<String>) -> Result<Self> {
        if basis.len() != unknowns.len() {
            return Err(Error::InvalidInput(format!(
                "{} basis elements for {} unknowns",
                basis.len(),
                unknowns.len()
            )));
        }
        for b in &basis {
            if b.space() != fixed.space() {
                return Err(Error::SpaceMismatch(
                    format!("{:?}", fixed.space()),
                    format!("{:?}", b.space()),
                ));
            }
            if !b.is_homogeneous_of(degree) {
                return Err(Error::InvalidInput(format!(
                    "basis element {b} is not homogeneous of degree {degree}"
                )));
            }
        }
        Ok(Ansatz {
            degree,
            fixed,
            basis,
            unknowns,
        })
    }

    /// The candidate with the given unknown values substituted.
    pub fn instantiate(&self, values: &[Rational]) -> GradedPoly {
        self.basis
            .iter()
            .zip(values)
            .fold(self.fixed.clone(), |acc, (b, v)| acc.add(&b.scale(v)).expect("same space"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConstraintKind {
    /// The candidate evaluated at the model equals `expected` in the listed degrees.
    SeriesEquality { expected: GradedPoly, degrees: Vec<u32> },
    /// `[c(E₀) · candidate]_m = χ · c_m(E₀)` with `E₀` the distinguished source.
    EulerDegree { chi: Rational },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub model: ModelGerm,
    pub kind: ConstraintKind,
}

/// Rows `(coefficients, rhs)` of one constraint, one per torus monomial.
fn constraint_rows(ansatz: &Ansatz, c: &Constraint) -> Result<Vec<(Vec<Rational>, Rational)>> {
    let model = &c.model;
    let space = model.space();
    let (target, k, degrees, weight): (GradedPoly, u32, Vec<u32>, GradedPoly) = match &c.kind {
        ConstraintKind::SeriesEquality { expected, degrees } => {
            if expected.space() != space {
                return Err(Error::RankMismatch {
                    expected: model.torus_rank,
                    found: expected.space().torus_rank(),
                });
            }
            let k = degrees.iter().copied().max().unwrap_or(0);
            (expected.clone(), k, degrees.clone(), GradedPoly::one(space))
        }
        ConstraintKind::EulerDegree { chi } => {
            let b = model.branch(model.distinguished)?;
            let m = b.weights.len() as u32;
            let mut top = GradedPoly::one(space);
            for w in &b.weights {
                top = top.mul(&w.linear_form())?;
            }
            let ce0 = total_chern_of_rep(&b.weights, model.torus_rank, m)?;
            (top.scale(chi), m, vec![m], ce0)
        }
    };
    let eval = |p: &GradedPoly| -> Result<GradedPoly> {
        weight.mul(&evaluate_at_model(p, model, k)?).map(|q| q.truncate(k))
    };
    let fixed = eval(&ansatz.fixed)?;
    let basis = ansatz.basis.iter().map(eval).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for &d in &degrees {
        let mut monomials = BTreeSet::new();
        for p in std::iter::once(&target).chain(std::iter::once(&fixed)).chain(&basis) {
            for (m, _) in p.terms() {
                if m.degree(&space) == d {
                    monomials.insert(m.clone());
                }
            }
        }
        for m in monomials {
            let coeffs = basis
                .iter()
                .map(|b| b.coefficient_of(&m))
                .collect::<Result<Vec<_>>>()?;
            rows.push((coeffs, target.coefficient_of(&m)? - fixed.coefficient_of(&m)?));
        }
    }
    Ok(rows)
}

/// The linear system imposed by the constraints on the ansatz unknowns.
pub fn assemble(ansatz: &Ansatz, constraints: &[Constraint]) -> Result<LinearSystem> {
    let mut sys = LinearSystem::new(ansatz.unknowns.clone());
    for c in constraints {
        for (coeffs, rhs) in constraint_rows(ansatz, c)? {
            sys.push(coeffs, rhs)?;
        }
    }
    Ok(sys)
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    Unique {
        values: Vec<(String, Rational)>,
        polynomial: GradedPoly,
    },
    /// Affine family `particular + span(directions)`.
    Underdetermined {
        rank: usize,
        free: Vec<String>,
        particular: GradedPoly,
        directions: Vec<GradedPoly>,
    },
    Inconsistent {
        rank: usize,
        equations: usize,
    },
}

pub fn assemble_and_solve(ansatz: &Ansatz, constraints: &[Constraint]) -> Result<SolveOutcome> {
    let sys = assemble(ansatz, constraints)?;
    let homogeneous = |v: &[Rational]| -> GradedPoly {
        ansatz
            .basis
            .iter()
            .zip(v)
            .fold(GradedPoly::zero(ansatz.fixed.space()), |acc, (b, x)| {
                acc.add(&b.scale(x)).expect("same space")
            })
    };
    Ok(match solve_exact(&sys) {
        Solution::Unique(v) => SolveOutcome::Unique {
            polynomial: ansatz.instantiate(&v),
            values: ansatz.unknowns.iter().cloned().zip(v).collect(),
        },
        Solution::Underdetermined {
            rank,
            free,
            particular,
            directions,
        } => SolveOutcome::Underdetermined {
            rank,
            free,
            particular: ansatz.instantiate(&particular),
            directions: directions.iter().map(|d| homogeneous(d)).collect(),
        },
        Solution::Inconsistent { rank } => SolveOutcome::Inconsistent {
            rank,
            equations: sys.rows().len(),
        },
    })
}

/// Whether a fully known polynomial satisfies a constraint.
pub fn satisfies(candidate: &GradedPoly, constraint: &Constraint) -> Result<bool> {
    let ansatz = Ansatz::new(0, candidate.clone(), vec![], vec![])?;
    Ok(constraint_rows(&ansatz, constraint)?
        .iter()
        .all(|(_, rhs)| rhs.is_zero()))
}

/// A torus character given as a bare integer (rank one) or a vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Scalar(i64),
    Vector(Vec<i64>),
}

impl WeightSpec {
    fn to_weight(&self) -> MultiWeight {
        match self {
            WeightSpec::Scalar(x) => MultiWeight(vec![*x]),
            WeightSpec::Vector(v) => MultiWeight(v.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchSpec {
    pub weights: Vec<WeightSpec>,
    pub degrees: Vec<WeightSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    #[serde(default = "one")]
    pub torus_rank: u32,
    pub branches: Vec<BranchSpec>,
    #[serde(default)]
    pub distinguished: usize,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieceSpec {
    pub sign: i64,
    pub normal: Vec<WeightSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub union: Option<Vec<PieceSpec>>,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerSpec {
    pub chi: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSpec {
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnsatzSpec {
    pub degree: u32,
    #[serde(default)]
    pub fixed: Option<String>,
    pub basis: Vec<String>,
    pub unknowns: Vec<String>,
}

/// Solver job file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverJob {
    pub kappa: u32,
    pub ansatz: AnsatzSpec,
    pub models: BTreeMap<String, ModelSpec>,
    pub constraints: Vec<ConstraintSpec>,
}

impl SolverJob {
    pub fn from_json(text: &str) -> Result<SolverJob> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))
    }

    pub fn build(&self) -> Result<(Ansatz, Vec<Constraint>)> {
        let space = VarSpace::characteristic(self.kappa);
        let a = &self.ansatz;
        let fixed = match &a.fixed {
            Some(t) => parse_poly(t, space)?,
            None => GradedPoly::zero(space),
        };
        let basis = a
            .basis
            .iter()
            .map(|t| parse_poly(t, space))
            .collect::<Result<Vec<_>>>()?;
        let ansatz = Ansatz::new(a.degree, fixed, basis, a.unknowns.clone())?;
        let mut models = BTreeMap::new();
        for (name, spec) in &self.models {
            let conv = |ws: &[WeightSpec]| ws.iter().map(WeightSpec::to_weight).collect();
            let branches = spec
                .branches
                .iter()
                .map(|b| Branch {
                    weights: conv(&b.weights),
                    degrees: conv(&b.degrees),
                })
                .collect();
            models.insert(name.clone(), ModelGerm::new(spec.torus_rank, branches, spec.distinguished, name)?);
        }
        let mut constraints = Vec::new();
        for c in &self.constraints {
            let model: &ModelGerm = models
                .get(&c.model)
                .ok_or_else(|| Error::InvalidInput(format!("unknown model {:?}", c.model)))?;
            let kind = match (&c.series, &c.euler) {
                (Some(s), None) => {
                    let k = s.degrees.iter().copied().max().unwrap_or(0);
                    let expected = match (&s.expected, &s.union) {
                        (Some(t), None) => parse_poly(t, model.space())?,
                        (None, Some(pieces)) => {
                            let pieces: Vec<_> = pieces
                                .iter()
                                .map(|p| (p.sign, p.normal.iter().map(WeightSpec::to_weight).collect()))
                                .collect();
                            union_ssm(&pieces, model.torus_rank, k)?
                        }
                        _ => {
                            return Err(Error::InvalidInput(
                                "series constraint needs exactly one of expected, union".into(),
                            ))
                        }
                    };
                    ConstraintKind::SeriesEquality {
                        expected,
                        degrees: s.degrees.clone(),
                    }
                }
                (None, Some(e)) => ConstraintKind::EulerDegree {
                    chi: parse_rational(&e.chi)?,
                },
                _ => {
                    return Err(Error::InvalidInput(
                        "constraint needs exactly one of series, euler".into(),
                    ))
                }
            };
            constraints.push(Constraint {
                model: model.clone(),
                kind,
            });
        }
        Ok((ansatz, constraints))
    }

    pub fn solve(&self) -> Result<SolveOutcome> {
        let (ansatz, constraints) = self.build()?;
        assemble_and_solve(&ansatz, &constraints)
    }
}

impl std::fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveOutcome::Unique { values, polynomial } => {
                for (name, v) in values {
                    writeln!(f, "{name} = {}", crate::algebra::format_rational(v))?;
                }
                write!(f, "{polynomial}")
            }
            SolveOutcome::Underdetermined {
                rank,
                free,
                particular,
                directions,
            } => {
                writeln!(f, "underdetermined: rank {rank}, free {}", free.join(", "))?;
                writeln!(f, "particular: {particular}")?;
                for (name, d) in free.iter().zip(directions) {
                    writeln!(f, "direction {name}: {d}")?;
                }
                Ok(())
            }
            SolveOutcome::Inconsistent { rank, equations } => {
                write!(f, "inconsistent: rank {rank} over {equations} equations")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(s: &str, rank: u32) -> GradedPoly {
        parse_poly(s, VarSpace::torus(rank)).unwrap()
    }

    #[test]
    fn quotient_chern_of_models() {
        let a2 = ModelGerm::scalar(&[1, 2], &[3, 2], "A2").unwrap();
        assert_eq!(model_quotient_chern(&a2, 0, 3).unwrap(), torus("1 + 2 a1 - 2 a1^2 + 2 a1^3", 1).truncate(3));
        let a3 = ModelGerm::scalar(&[1, 2, 3], &[4, 2, 3], "A3").unwrap();
        assert_eq!(model_quotient_chern(&a3, 0, 3).unwrap(), torus("1 + 3 a1 - 3 a1^2 + 3 a1^3", 1).truncate(3));
        let i22 = ModelGerm::scalar(&[1, 1, 1, 1], &[2, 2, 1, 1], "I22").unwrap();
        assert_eq!(model_quotient_chern(&i22, 0, 4).unwrap(), torus("1 + 2 a1 - a1^2 + a1^4", 1).truncate(4));
    }

    #[test]
    fn inverse_normal_classes() {
        let w = |v: &[i64]| v.iter().map(|&x| MultiWeight(vec![x])).collect::<Vec<_>>();
        assert_eq!(inverse_normal_class(&w(&[2, 3]), 1, 3).unwrap(), torus("6 a1^2 - 30 a1^3", 1).truncate(3));
        assert_eq!(inverse_normal_class(&w(&[1, 2]), 1, 3).unwrap(), torus("2 a1^2 - 6 a1^3", 1).truncate(3));
        assert_eq!(inverse_normal_class(&w(&[1]), 1, 3).unwrap(), torus("a1 - a1^2 + a1^3", 1).truncate(3));
        assert!(inverse_normal_class(&[], 1, 3).is_err());
    }

    #[test]
    fn union_of_disjoint_pieces_is_sum() {
        let p = vec![MultiWeight(vec![1, 0])];
        let q = vec![MultiWeight(vec![0, 1])];
        let u = union_ssm(&[(1, p.clone()), (1, q.clone())], 2, 3).unwrap();
        let sum = inverse_normal_class(&p, 2, 3).unwrap().add(&inverse_normal_class(&q, 2, 3).unwrap()).unwrap();
        assert_eq!(u, sum);
    }

    #[test]
    fn non_proper_branch_rejected() {
        let m = ModelGerm::new(
            2,
            vec![Branch {
                weights: vec![MultiWeight(vec![1, 0])],
                degrees: vec![MultiWeight(vec![0, 1]), MultiWeight(vec![1, 1])],
            }],
            0,
            "bad",
        )
        .unwrap();
        assert!(matches!(branch_s0(&m, 0), Err(Error::NonProper(_))));
    }
}
