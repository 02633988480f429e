//! Formal Gysin pushforward, the operator `ρ(ω) = f_*(c(f)^{-1} ω)`, target
//! classes and the residual-polynomial recursion for multi-singularities.

use std::collections::BTreeMap;

use crate::algebra::{rat, GradedPoly, Monomial, Rational, SIndex, Var, VarSpace};
use crate::database::{is_s_free, tuple_multiplicities, tuple_name, Database, EntryKind, TpEntry};
use crate::error::{Error, Result};

/// `c^J · ∏ s_{I_l} ↦ s_J · ∏ s_{I_l}`; a c-free monomial gains a factor `s_0`.
///
/// Degrees rise by `κ`; a truncation order `T` becomes `T + κ`.
pub fn formal_pushforward(p: &GradedPoly) -> GradedPoly {
    let space = p.space();
    let out = p.map_monomials(space, |m| {
        let (c_part, rest) = m.split(Var::is_chern);
        let mut j = Vec::new();
        for (v, e) in c_part.factors() {
            if let Var::C(k) = v {
                let k = *k as usize;
                if j.len() < k {
                    j.resize(k, 0);
                }
                j[k - 1] = *e;
            }
        }
        let mut out = rest;
        out.mul_var(Var::S(SIndex::new(j)), 1);
        out
    });
    match p.truncation() {
        Some(t) => out.truncate(t + space.kappa()),
        None => out,
    }
}

/// `1 + c1 + c2 + ... + ck` in the characteristic space of `p`.
fn total_chern(space: VarSpace, k: u32) -> GradedPoly {
    let terms = std::iter::once((Monomial::one(), rat(1)))
        .chain((1..=k).map(|i| (Monomial::var(Var::C(i)), rat(1))));
    GradedPoly::from_terms(space, terms).expect("chern variables")
}

/// `ρ(p) = f_*(c(f)^{-1} · p)` through target degree `k`.
pub fn rho(p: &GradedPoly, k: u32) -> GradedPoly {
    let space = p.space();
    let kappa = space.kappa();
    if k < kappa {
        return GradedPoly::zero(space).truncate(k);
    }
    let bound = k - kappa;
    let inv = total_chern(space, bound)
        .invert_series(bound)
        .expect("unit series");
    let prod = inv.mul(p).expect("same space").truncate(bound);
    formal_pushforward(&prod).truncate(k)
}

/// `(1/deg₁) f_* tp(η)`, the target Thom polynomial.
pub fn target_tp(entry: &TpEntry) -> Result<GradedPoly> {
    if entry.key.kind != EntryKind::TpSource {
        return Err(Error::WrongKind {
            key: entry.key.to_string(),
            expected: EntryKind::TpSource.to_string(),
        });
    }
    Ok(formal_pushforward(&entry.polynomial).scale(&Rational::new(1.into(), entry.deg1.into())))
}

/// How cross terms of the residue recursion push classes to the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLevel {
    /// Fundamental classes: plain `f^*f_*`, exact degrees.
    Fundamental,
    /// SSM series: `ρ`, truncated at the given degree.
    Ssm { order: u32 },
}

/// Normalization of the α-class of a tuple relative to its tabulated Thom polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TupleConvention {
    /// `α_η = |Aut(η₂, ..., η_r)| · tp(η)`.
    #[default]
    AutWeighted,
    /// `α_η = tp(η)`.
    Plain,
}

/// First entry kept in place, the rest sorted.
pub fn canonical_tuple(t: &[String]) -> Vec<String> {
    let mut out = t.to_vec();
    if out.len() > 1 {
        out[1..].sort();
    }
    out
}

/// Residual polynomials `R_η`, each free of `s`-classes.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueTable {
    kappa: u32,
    level: ClassLevel,
    residues: BTreeMap<Vec<String>, GradedPoly>,
}

/// All set partitions of `0..n`, blocks in increasing order of their least element.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

impl ResidueTable {
    pub fn new(kappa: u32, level: ClassLevel) -> Self {
        ResidueTable {
            kappa,
            level,
            residues: BTreeMap::new(),
        }
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn level(&self) -> ClassLevel {
        self.level
    }

    pub fn insert(&mut self, tuple: &[String], residue: GradedPoly) -> Result<()> {
        if residue.space().kappa() != self.kappa {
            return Err(Error::KappaMismatch {
                expected: self.kappa,
                found: residue.space().kappa(),
            });
        }
        if !is_s_free(&residue) {
            return Err(Error::ResidueNotSFree {
                tuple: tuple_name(tuple),
                residue: residue.to_string(),
            });
        }
        self.residues.insert(canonical_tuple(tuple), residue);
        Ok(())
    }

    pub fn get(&self, tuple: &[String]) -> Result<&GradedPoly> {
        self.residues
            .get(&canonical_tuple(tuple))
            .ok_or_else(|| Error::MissingResidue(tuple_name(tuple)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<String>, &GradedPoly)> {
        self.residues.iter()
    }

    /// `f^*f_*` or `ρ` depending on the level.
    pub fn push(&self, p: &GradedPoly) -> GradedPoly {
        match self.level {
            ClassLevel::Fundamental => formal_pushforward(p),
            ClassLevel::Ssm { order } => rho(p, order),
        }
    }

    fn clip(&self, p: GradedPoly) -> GradedPoly {
        match self.level {
            ClassLevel::Fundamental => p,
            ClassLevel::Ssm { order } => p.truncate(order),
        }
    }

    fn block(tuple: &[String], idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| tuple[i].clone()).collect()
    }

    /// Source class α_η and target class β_η from the residues.
    ///
    /// α sums `R_{B₀} · ∏ push(R_B)` over set partitions, `B₀` the block of the
    /// first entry; β sums `∏ push(R_B)` over all blocks.
    pub fn multi_recursion(&self, tuple: &[String]) -> Result<(GradedPoly, GradedPoly)> {
        let (alpha, beta) = self.recursion_terms(tuple, true)?;
        Ok((alpha, beta))
    }

    fn recursion_terms(&self, tuple: &[String], include_whole: bool) -> Result<(GradedPoly, GradedPoly)> {
        let space = VarSpace::characteristic(self.kappa);
        let mut alpha = GradedPoly::zero(space);
        let mut beta = GradedPoly::zero(space);
        let mut pushed: BTreeMap<Vec<String>, GradedPoly> = BTreeMap::new();
        for partition in set_partitions(tuple.len()) {
            if !include_whole && partition.len() == 1 {
                continue;
            }
            let mut a = GradedPoly::one(space);
            let mut b = GradedPoly::one(space);
            for (n, idx) in partition.iter().enumerate() {
                let blk = canonical_tuple(&Self::block(tuple, idx));
                let r = self.get(&blk)?;
                if !pushed.contains_key(&blk) {
                    pushed.insert(blk.clone(), self.push(r));
                }
                let pr = &pushed[&blk];
                a = self.clip(a.mul(if n == 0 { r } else { pr })?);
                b = self.clip(b.mul(pr)?);
            }
            alpha = alpha.add(&a)?;
            beta = beta.add(&b)?;
        }
        Ok((alpha, beta))
    }
}

/// Extracts fundamental-class residues of the given tuples (and every sub-tuple
/// they need) from the Thom polynomials in the database.
pub fn extract_residues(
    db: &Database,
    kappa: u32,
    tuples: &[Vec<String>],
    convention: TupleConvention,
) -> Result<ResidueTable> {
    let mut table = ResidueTable::new(kappa, ClassLevel::Fundamental);
    for t in tuples {
        ensure_residue(db, &mut table, &canonical_tuple(t), convention)?;
    }
    Ok(table)
}

fn ensure_residue(
    db: &Database,
    table: &mut ResidueTable,
    tuple: &[String],
    convention: TupleConvention,
) -> Result<()> {
    if table.get(tuple).is_ok() {
        return Ok(());
    }
    for partition in set_partitions(tuple.len()) {
        if partition.len() == 1 {
            continue;
        }
        for idx in &partition {
            let blk = canonical_tuple(&ResidueTable::block(tuple, idx));
            ensure_residue(db, table, &blk, convention)?;
        }
    }
    let entry = db.lookup(&tuple_name(tuple), table.kappa, EntryKind::TpSource)?;
    let weight = match convention {
        TupleConvention::Plain => 1,
        TupleConvention::AutWeighted if tuple.len() > 1 => tuple_multiplicities(&tuple[1..]).1,
        TupleConvention::AutWeighted => 1,
    };
    let alpha = entry.polynomial.scale(&rat(weight as i64));
    let (cross, _) = table.recursion_terms(tuple, false)?;
    let residue = alpha.sub(&cross)?;
    table.insert(tuple, residue)
}

fn marker_monomial(tuple: &[String]) -> Monomial {
    Monomial::from_factors(tuple.iter().map(|t| (Var::Marker(t.clone()), 1)))
}

fn marker_count(m: &Monomial) -> u32 {
    m.factors()
        .iter()
        .filter(|(v, _)| matches!(v, Var::Marker(_)))
        .map(|(_, e)| e)
        .sum()
}

fn multisets(types: &[String], size: usize) -> Vec<Vec<String>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, t) in types.iter().enumerate() {
        for mut rest in multisets(&types[i..], size - 1) {
            rest.insert(0, t.clone());
            out.push(rest);
        }
    }
    out
}

/// `exp(Σ push(R_η) t^η / |Aut η|)` over multisets of `types` of size ≤ `max_size`,
/// truncated to at most `max_size` markers.
pub fn generating_function(
    table: &ResidueTable,
    types: &[String],
    max_size: usize,
) -> Result<GradedPoly> {
    if max_size == 0 {
        return Err(Error::InvalidInput("maximal tuple size must be positive".into()));
    }
    let mut types = types.to_vec();
    types.sort();
    types.dedup();
    let space = VarSpace::characteristic(table.kappa);
    let mut x = GradedPoly::zero(space);
    for size in 1..=max_size {
        for eta in multisets(&types, size) {
            let r = table.get(&eta)?;
            let aut = tuple_multiplicities(&eta).1;
            let term = table
                .push(r)
                .mul(&GradedPoly::term(space, marker_monomial(&eta), Rational::new(1.into(), aut.into())))?;
            x = x.add(&term)?;
        }
    }
    let keep = |p: GradedPoly| -> GradedPoly {
        let trunc = p.truncation();
        let filtered = p.map_monomials(space, |m| m.clone());
        let mut out = GradedPoly::zero(space);
        for (m, c) in filtered.terms() {
            if marker_count(m) as usize <= max_size {
                out = out.add(&GradedPoly::term(space, m.clone(), c.clone())).expect("same space");
            }
        }
        match trunc {
            Some(k) => out.truncate(k),
            None => out,
        }
    };
    let mut sum = GradedPoly::one(space);
    let mut power = GradedPoly::one(space);
    let mut factorial = rat(1);
    for j in 1..=max_size {
        power = keep(power.mul(&x)?);
        factorial *= rat(j as i64);
        sum = sum.add(&power.scale(&factorial.recip()))?;
    }
    Ok(keep(sum))
}

/// `|Aut η|` times the coefficient of `t^η` in a generating function.
pub fn generating_coefficient(series: &GradedPoly, tuple: &[String]) -> GradedPoly {
    let space = series.space();
    let target = marker_monomial(tuple);
    let aut = tuple_multiplicities(tuple).1;
    let mut out = GradedPoly::zero(space);
    for (m, c) in series.terms() {
        let (markers, rest) = m.split(|v| matches!(v, Var::Marker(_)));
        if markers == target {
            out = out
                .add(&GradedPoly::term(space, rest, c * rat(aut as i64)))
                .expect("same space");
        }
    }
    match series.truncation() {
        Some(k) => out.truncate(k),
        None => out,
    }
}
