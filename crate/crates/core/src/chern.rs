//! Characteristic classes of weighted-homogeneous germs under torus localization.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    nullspace, rat, solve_exact, GradedPoly, LinearSystem, Monomial, Rational, SIndex, Solution,
    Var, VarSpace,
};
use crate::error::{Error, Result};

/// Weights of the source coordinates and degrees of the target coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GermSignature {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

impl GermSignature {
    pub fn new(weights: Vec<u64>, degrees: Vec<u64>) -> Result<Self> {
        if weights.is_empty() || degrees.is_empty() {
            return Err(Error::InvalidSignature(
                "weights and degrees must be nonempty".into(),
            ));
        }
        if weights.iter().chain(&degrees).any(|&x| x == 0) {
            return Err(Error::InvalidSignature(
                "weights and degrees must be positive".into(),
            ));
        }
        if degrees.len() < weights.len() {
            return Err(Error::InvalidSignature(format!(
                "negative relative codimension ({} -> {}) is not supported",
                weights.len(),
                degrees.len()
            )));
        }
        Ok(GermSignature { weights, degrees })
    }

    /// Clears denominators of rational weights and degrees to a primitive integer vector.
    pub fn from_rationals(weights: &[Rational], degrees: &[Rational]) -> Result<Self> {
        let all: Vec<&Rational> = weights.iter().chain(degrees).collect();
        if all.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidSignature(
                "weights and degrees must be positive".into(),
            ));
        }
        let lcm = all
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = all.iter().map(|x| (*x * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let to_u64 = |x: &BigInt| -> Result<u64> {
            u64::try_from(x / &g)
                .map_err(|_| Error::InvalidSignature("entry too large".into()))
        };
        let vals = ints.iter().map(to_u64).collect::<Result<Vec<_>>>()?;
        let (w, d) = vals.split_at(weights.len());
        GermSignature::new(w.to_vec(), d.to_vec())
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn m(&self) -> u32 {
        self.weights.len() as u32
    }

    pub fn n(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn kappa(&self) -> u32 {
        self.n() - self.m()
    }

    pub fn weight_product(&self) -> Rational {
        self.weights.iter().map(|&w| rat(w as i64)).product()
    }

    pub fn degree_product(&self) -> Rational {
        self.degrees.iter().map(|&d| rat(d as i64)).product()
    }

    pub fn scaled(&self, lambda: u64) -> GermSignature {
        GermSignature {
            weights: self.weights.iter().map(|w| w * lambda).collect(),
            degrees: self.degrees.iter().map(|d| d * lambda).collect(),
        }
    }
}

/// Character of an r-dimensional torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiWeight(pub Vec<i64>);

impl MultiWeight {
    pub fn rank(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The linear form `Σ w_j a_j`.
    pub fn linear_form(&self) -> GradedPoly {
        let space = VarSpace::torus(self.rank());
        let terms = self
            .0
            .iter()
            .enumerate()
            .map(|(j, &w)| (Monomial::var(Var::Torus(j as u32 + 1)), rat(w)));
        GradedPoly::from_terms(space, terms).expect("indices within rank")
    }
}

/// The single torus generator `a = a1`.
pub fn torus_generator() -> GradedPoly {
    GradedPoly::var(VarSpace::torus(1), Var::Torus(1)).expect("rank 1")
}

fn one_plus_linear(coeff: u64) -> GradedPoly {
    let a = torus_generator();
    GradedPoly::one(VarSpace::torus(1))
        .add(&a.scale(&rat(coeff as i64)))
        .expect("same space")
}

/// `c(f) = ∏(1 + d_j a) / ∏(1 + w_i a)` through degree `k`.
pub fn quotient_chern(sig: &GermSignature, k: u32) -> GradedPoly {
    let space = VarSpace::torus(1);
    let mut num = GradedPoly::one(space).truncate(k);
    for &d in sig.degrees() {
        num = num.mul(&one_plus_linear(d)).expect("same space");
    }
    let mut den = GradedPoly::one(space).truncate(k);
    for &w in sig.weights() {
        den = den.mul(&one_plus_linear(w)).expect("same space");
    }
    num.mul(&den.invert_series(k).expect("unit constant term"))
        .expect("same space")
}

/// Coefficients `[c_0, c_1, ..., c_k]` of the quotient Chern class, `c_i = coeff · a^i`.
pub fn quotient_chern_coefficients(sig: &GermSignature, k: u32) -> Vec<Rational> {
    let c = quotient_chern(sig, k);
    (0..=k)
        .map(|i| {
            c.coefficient_of(&Monomial::from_factors([(Var::Torus(1), i)]))
                .expect("within truncation")
        })
        .collect()
}

fn a_power(i: u32) -> Monomial {
    Monomial::from_factors([(Var::Torus(1), i)])
}

/// `s_I = c^I · s_0` with `s_0 = (∏d / ∏w) a^κ`, through degree `k`.
pub fn landweber_novikov(sig: &GermSignature, index: &SIndex, k: u32) -> GradedPoly {
    let coeffs = quotient_chern_coefficients(sig, k.max(1));
    let space = VarSpace::torus(1);
    let s0 = sig.degree_product() / sig.weight_product();
    let mut acc = GradedPoly::term(space, a_power(sig.kappa()), s0).truncate(k);
    for (j, &e) in index.exponents().iter().enumerate() {
        let i = j as u32 + 1;
        let ci = coeffs.get(i as usize).cloned().unwrap_or_else(Rational::zero);
        let class = GradedPoly::term(space, a_power(i), ci);
        acc = acc.mul(&class.pow(e)).expect("same space");
    }
    acc
}

/// Evaluates a polynomial in `c_i`, `s_I` at the germ, giving a series in `a` through degree `k`.
pub fn specialize(p: &GradedPoly, sig: &GermSignature, k: u32) -> Result<GradedPoly> {
    let kappa = p.space().kappa();
    if kappa != sig.kappa() {
        return Err(Error::KappaMismatch {
            expected: kappa,
            found: sig.kappa(),
        });
    }
    let space = VarSpace::torus(1);
    let coeffs = quotient_chern_coefficients(sig, k.max(1));
    let mut assignment = HashMap::new();
    for (m, _) in p.terms() {
        for (v, _) in m.factors() {
            if assignment.contains_key(v) {
                continue;
            }
            let img = match v {
                Var::C(i) => {
                    let c = coeffs.get(*i as usize).cloned().unwrap_or_else(Rational::zero);
                    GradedPoly::term(space, a_power(*i), c)
                }
                Var::S(index) => landweber_novikov(sig, index, k),
                other => {
                    return Err(Error::InvalidMonomial(format!(
                        "{other} cannot be specialized at a germ"
                    )))
                }
            };
            assignment.insert(v.clone(), img.truncate(k));
        }
    }
    p.substitute(&assignment, space, Some(k))
}

/// `∏ (1 + ⟨w, a⟩)` over the given characters, through degree `k`.
pub fn total_chern_of_rep(weights: &[MultiWeight], rank: u32, k: u32) -> Result<GradedPoly> {
    let space = VarSpace::torus(rank);
    let mut acc = GradedPoly::one(space).truncate(k);
    for w in weights {
        if w.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: w.rank(),
            });
        }
        let factor = GradedPoly::one(space).add(&w.linear_form())?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Elementary symmetric classes of the listed torus variables: `[e_0, e_1, ..., e_len]`.
fn elementary(vars: &[Var], space: VarSpace) -> Vec<GradedPoly> {
    let mut acc = GradedPoly::one(space);
    for v in vars {
        let lin = GradedPoly::one(space)
            .add(&GradedPoly::var(space, v.clone()).expect("valid torus var"))
            .expect("same space");
        acc = acc.mul(&lin).expect("same space");
    }
    (0..=vars.len() as u32)
        .map(|i| acc.grade_component(i).expect("exact"))
        .collect()
}

const SUPERSYMMETRY_BOUND: u32 = 6;

/// Whether `P(c, c')` becomes independent of `t` after expanding into roots and
/// setting the last source root equal to the last target root.
pub fn supersymmetry_check(p: &GradedPoly, m: u32, n: u32) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("m and n must be positive".into()));
    }
    if m > SUPERSYMMETRY_BOUND || n > SUPERSYMMETRY_BOUND {
        return Err(Error::InvalidInput(format!(
            "root expansion is limited to m, n <= {SUPERSYMMETRY_BOUND}"
        )));
    }
    let rank = m + n - 1;
    let space = VarSpace::torus(rank);
    let t = Var::Torus(rank);
    let mut src: Vec<Var> = (1..m).map(Var::Torus).collect();
    src.push(t.clone());
    let mut tgt: Vec<Var> = (m..m + n - 1).map(Var::Torus).collect();
    tgt.push(t.clone());
    let e_src = elementary(&src, space);
    let e_tgt = elementary(&tgt, space);
    let mut assignment = HashMap::new();
    for (mono, _) in p.terms() {
        for (v, _) in mono.factors() {
            let img = match v {
                Var::C(k) => e_src
                    .get(*k as usize)
                    .cloned()
                    .unwrap_or_else(|| GradedPoly::zero(space)),
                Var::CPrime(k) => e_tgt
                    .get(*k as usize)
                    .cloned()
                    .unwrap_or_else(|| GradedPoly::zero(space)),
                other => {
                    return Err(Error::InvalidMonomial(format!(
                        "{other} is not a source or target Chern class"
                    )))
                }
            };
            assignment.insert(v.clone(), img);
        }
    }
    let expanded = p.substitute(&assignment, space, None)?;
    Ok(!expanded.involves(|v| *v == t))
}

/// Degree-`k` quotient classes expressed in source/target Chern classes of ranks `m`, `n`.
fn quotient_classes_in_cc(m: u32, n: u32, k: u32) -> Vec<GradedPoly> {
    let space = VarSpace::characteristic(0);
    let mut src = GradedPoly::one(space);
    for i in 1..=m.min(k) {
        src = src.add(&GradedPoly::var(space, Var::C(i)).expect("c var")).expect("same space");
    }
    let mut tgt = GradedPoly::one(space);
    for i in 1..=n.min(k) {
        tgt = tgt
            .add(&GradedPoly::var(space, Var::CPrime(i)).expect("c' var"))
            .expect("same space");
    }
    let q = tgt
        .mul(&src.invert_series(k).expect("unit"))
        .expect("same space");
    (0..=k).map(|i| q.grade_component(i).expect("exact")).collect()
}

/// Rewrites a polynomial in quotient classes `c_i` in terms of source/target classes.
pub fn quotient_to_cc(p: &GradedPoly, m: u32, n: u32) -> Result<GradedPoly> {
    let k = p.max_degree().unwrap_or(0);
    let q = quotient_classes_in_cc(m, n, k);
    let space = VarSpace::characteristic(0);
    let mut assignment = HashMap::new();
    for (mono, _) in p.terms() {
        for (v, _) in mono.factors() {
            match v {
                Var::C(i) => {
                    assignment.insert(v.clone(), q[*i as usize].clone());
                }
                other => {
                    return Err(Error::InvalidMonomial(format!(
                        "{other} is not a quotient Chern class"
                    )))
                }
            }
        }
    }
    p.substitute(&assignment, space, None)
}

fn partitions(d: u32, max: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=d.min(max)).rev() {
        for mut rest in partitions(d - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Rewrites a supersymmetric `P(c, c')` as a polynomial in quotient classes `c_i`.
pub fn to_quotient_classes(p: &GradedPoly, m: u32, n: u32, k: u32) -> Result<GradedPoly> {
    if !supersymmetry_check(p, m, n)? {
        return Err(Error::NotSupersymmetric);
    }
    let space = VarSpace::characteristic(0);
    let q = quotient_classes_in_cc(m, n, k);
    let mut out = GradedPoly::zero(space);
    for d in 0..=k {
        let target = p.grade_component(d)?;
        if target.is_zero() {
            continue;
        }
        let parts = partitions(d, d);
        let images: Vec<GradedPoly> = parts
            .iter()
            .map(|lam| {
                lam.iter().fold(GradedPoly::one(space), |acc, &i| {
                    acc.mul(&q[i as usize]).expect("same space")
                })
            })
            .collect();
        let mut monos: Vec<Monomial> = images
            .iter()
            .flat_map(|img| img.terms().map(|(m, _)| m.clone()))
            .chain(target.terms().map(|(m, _)| m.clone()))
            .collect();
        monos.sort();
        monos.dedup();
        let names = parts
            .iter()
            .map(|lam| format!("{lam:?}"))
            .collect::<Vec<_>>();
        let mut sys = LinearSystem::new(names);
        for mono in &monos {
            let row = images
                .iter()
                .map(|img| img.coefficient_of(mono))
                .collect::<Result<Vec<_>>>()?;
            sys.push(row, target.coefficient_of(mono)?)?;
        }
        match solve_exact(&sys) {
            Solution::Unique(x) => {
                for (lam, c) in parts.iter().zip(x) {
                    let mono = Monomial::from_factors(lam.iter().map(|&i| (Var::C(i), 1)));
                    out = out.add(&GradedPoly::term(space, mono, c))?;
                }
            }
            Solution::Inconsistent { .. } => return Err(Error::NotSupersymmetric),
            Solution::Underdetermined { .. } => {
                return Err(Error::InvalidInput(format!(
                    "quotient monomials of degree {d} are dependent at (m, n) = ({m}, {n})"
                )))
            }
        }
    }
    Ok(out)
}

/// Exponent vectors of each component of a monomial map, plus variable names in column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub variables: Vec<String>,
    pub components: Vec<Vec<Vec<u32>>>,
}

/// Parses `"x^2+y^2+x*z, x*y, z"`; coefficients are accepted and ignored.
pub fn parse_monomial_map(text: &str) -> Result<MonomialMap> {
    let mut names: Vec<String> = Vec::new();
    let mut raw: Vec<Vec<Vec<(usize, u32)>>> = Vec::new();
    let mut offset = 0;
    for comp in text.split(',') {
        let mut monos = Vec::new();
        let mut cur: Vec<(usize, u32)> = Vec::new();
        let mut nonempty = false;
        let mut dangling = false;
        let cb = comp.as_bytes();
        let mut i = 0;
        while i < cb.len() {
            let b = cb[i];
            if b.is_ascii_whitespace() || b == b'*' {
                i += 1;
            } else if b == b'+' || b == b'-' {
                if nonempty {
                    monos.push(std::mem::take(&mut cur));
                    nonempty = false;
                } else if dangling || !monos.is_empty() {
                    return Err(Error::parse(offset + i, "missing term between signs"));
                }
                dangling = true;
                i += 1;
            } else if b.is_ascii_digit() || b == b'/' || b == b'.' {
                i += 1;
                nonempty = true;
            } else if b.is_ascii_alphabetic() {
                let start = i;
                i += 1;
                while i < cb.len() && cb[i].is_ascii_digit() {
                    i += 1;
                }
                let name = &comp[start..i];
                let idx = match names.iter().position(|n| n == name) {
                    Some(p) => p,
                    None => {
                        names.push(name.to_string());
                        names.len() - 1
                    }
                };
                let mut e = 1u32;
                let mut j = i;
                while j < cb.len() && cb[j].is_ascii_whitespace() {
                    j += 1;
                }
                if j < cb.len() && cb[j] == b'^' {
                    j += 1;
                    while j < cb.len() && cb[j].is_ascii_whitespace() {
                        j += 1;
                    }
                    let s = j;
                    while j < cb.len() && cb[j].is_ascii_digit() {
                        j += 1;
                    }
                    e = comp[s..j].parse().map_err(|_| {
                        Error::parse(offset + s, "expected exponent after '^'")
                    })?;
                    i = j;
                }
                cur.push((idx, e));
                nonempty = true;
            } else {
                return Err(Error::parse(
                    offset + i,
                    format!("unexpected '{}'", b as char),
                ));
            }
        }
        if nonempty {
            monos.push(cur);
        } else if dangling {
            return Err(Error::parse(offset + comp.len(), "expected a term after the sign"));
        }
        if monos.is_empty() {
            return Err(Error::parse(offset, "empty component"));
        }
        raw.push(monos);
        offset += comp.len() + 1;
    }
    let indexed: Option<Vec<u32>> = names
        .iter()
        .map(|n| n.strip_prefix('x').and_then(|d| d.parse().ok()))
        .collect();
    let mut order: Vec<usize> = (0..names.len()).collect();
    if let Some(ix) = &indexed {
        order.sort_by_key(|&i| ix[i]);
    }
    let column: Vec<usize> = {
        let mut c = vec![0; names.len()];
        for (col, &i) in order.iter().enumerate() {
            c[i] = col;
        }
        c
    };
    let components = raw
        .into_iter()
        .map(|monos| {
            monos
                .into_iter()
                .map(|factors| {
                    let mut e = vec![0u32; names.len()];
                    for (i, x) in factors {
                        e[column[i]] += x;
                    }
                    e
                })
                .collect()
        })
        .collect();
    Ok(MonomialMap {
        variables: order.iter().map(|&i| names[i].clone()).collect(),
        components,
    })
}

fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Finds the primitive positive weights making every component weighted homogeneous.
pub fn infer_weights(map: &MonomialMap) -> Result<GermSignature> {
    let m = map.variables.len();
    let mut rows = Vec::new();
    for comp in &map.components {
        let first = &comp[0];
        for other in &comp[1..] {
            rows.push(
                other
                    .iter()
                    .zip(first)
                    .map(|(&a, &b)| rat(a as i64 - b as i64))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let basis = nullspace(&rows, m);
    match basis.len() {
        0 => Err(Error::NoPositiveSolution),
        1 => {
            let mut v = primitive_integer(&basis[0]);
            if v.iter().all(|x| x.is_negative()) {
                v = v.into_iter().map(|x| -x).collect();
            }
            if !v.iter().all(|x| x.is_positive()) {
                return Err(Error::NoPositiveSolution);
            }
            let w: Vec<u64> = v
                .iter()
                .map(|x| u64::try_from(x).map_err(|_| Error::NoPositiveSolution))
                .collect::<Result<_>>()?;
            let d = map
                .components
                .iter()
                .map(|comp| comp[0].iter().zip(&w).map(|(&e, &x)| e as u64 * x).sum())
                .collect();
            GermSignature::new(w, d)
        }
        _ => Err(Error::AmbiguousSolution {
            basis: basis
                .iter()
                .map(|b| {
                    primitive_integer(b)
                        .iter()
                        .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                        .collect()
                })
                .collect(),
        }),
    }
}
