//! Sparse graded polynomials and truncated power series over exact rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var, VarSpace};
use super::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial over `Rational`, optionally truncated above a degree.
///
/// Truncation order `Some(k)` means every term of degree `> k` is unknown
/// and has been discarded; `None` means the polynomial is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    space: VarSpace,
    terms: BTreeMap<Monomial, Rational>,
    trunc: Option<u32>,
}

fn min_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl GradedPoly {
    pub fn zero(space: VarSpace) -> Self {
        GradedPoly {
            space,
            terms: BTreeMap::new(),
            trunc: None,
        }
    }

    pub fn constant(space: VarSpace, c: Rational) -> Self {
        let mut p = GradedPoly::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(space: VarSpace) -> Self {
        GradedPoly::constant(space, Rational::one())
    }

    pub fn var(space: VarSpace, v: Var) -> Result<Self> {
        space.check(&v)?;
        Ok(GradedPoly::term(space, Monomial::var(v), Rational::one()))
    }

    /// Single term; the monomial is not validated.
    pub fn term(space: VarSpace, m: Monomial, c: Rational) -> Self {
        let mut p = GradedPoly::zero(space);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        space: VarSpace,
        terms: I,
    ) -> Result<Self> {
        let mut p = GradedPoly::zero(space);
        for (m, c) in terms {
            for (v, _) in m.factors() {
                space.check(v)?;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn truncation(&self) -> Option<u32> {
        self.trunc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Tightens the truncation order to `min(current, k)` and drops terms above it.
    pub fn truncate(mut self, k: u32) -> Self {
        self.trunc = min_trunc(self.trunc, Some(k));
        let space = self.space;
        self.terms.retain(|m, _| m.degree(&space) <= k);
        self
    }

    fn with_trunc(self, t: Option<u32>) -> Self {
        match t {
            Some(k) => self.truncate(k),
            None => self,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(k) = self.trunc {
            if m.degree(&self.space) > k {
                return;
            }
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_space(&self, other: &GradedPoly) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(
                self.space.to_string(),
                other.space.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.same_space(other)?;
        let mut out = self.clone().with_trunc(other.trunc);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            let mut z = GradedPoly::zero(self.space);
            z.trunc = self.trunc;
            return z;
        }
        GradedPoly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.same_space(other)?;
        let trunc = min_trunc(self.trunc, other.trunc);
        let mut out = GradedPoly::zero(self.space);
        out.trunc = trunc;
        let space = self.space;
        let with_deg = |p: &GradedPoly| -> Vec<(u32, Monomial, Rational)> {
            p.terms
                .iter()
                .map(|(m, c)| (m.degree(&space), m.clone(), c.clone()))
                .collect()
        };
        let (a, b) = (with_deg(self), with_deg(other));
        for (da, ma, ca) in &a {
            for (db, mb, cb) in &b {
                if let Some(k) = trunc {
                    if da + db > k {
                        continue;
                    }
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(self.space).with_trunc(self.trunc);
        for _ in 0..n {
            acc = acc.mul(self).expect("same space");
        }
        acc
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Result<Rational> {
        for (v, _) in m.factors() {
            self.space.check(v)?;
        }
        if let Some(k) = self.trunc {
            let d = m.degree(&self.space);
            if d > k {
                return Err(Error::BeyondTruncation {
                    requested: d,
                    order: k,
                });
            }
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(Rational::zero))
    }

    /// Sum of the terms of degree exactly `d`; the result is exact.
    pub fn grade_component(&self, d: u32) -> Result<GradedPoly> {
        if let Some(k) = self.trunc {
            if d > k {
                return Err(Error::BeyondTruncation {
                    requested: d,
                    order: k,
                });
            }
        }
        let space = self.space;
        Ok(GradedPoly {
            space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(&space) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            trunc: None,
        })
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree(&self.space)).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree(&self.space)).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree(&self.space) == d)
    }

    pub fn involves(&self, pred: impl Fn(&Var) -> bool) -> bool {
        self.terms.keys().any(|m| m.any_var(&pred))
    }

    /// Inverse of a unit series, valid through degree `k`.
    pub fn invert_series(&self, k: u32) -> Result<GradedPoly> {
        let space = self.space;
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible("zero constant term".into()));
        }
        if self
            .terms
            .keys()
            .any(|m| !m.is_one() && m.degree(&space) == 0)
        {
            return Err(Error::NotInvertible(
                "degree-0 part is not a constant".into(),
            ));
        }
        let trunc = min_trunc(self.trunc, Some(k)).unwrap_or(k);
        let inv0 = c0.recip();
        // q = inv0 * Σ (-(p - c0) * inv0)^j, each power raising the degree by at least one.
        let mut rest = self.clone().truncate(trunc);
        rest.terms.remove(&Monomial::one());
        let step = rest.scale(&-inv0.clone());
        let mut power = GradedPoly::one(space).truncate(trunc);
        let mut sum = power.clone();
        for _ in 0..trunc {
            power = power.mul(&step)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum.scale(&inv0))
    }

    /// Replaces variables by polynomials in `target`; unassigned variables pass through.
    pub fn substitute(
        &self,
        assignment: &HashMap<Var, GradedPoly>,
        target: VarSpace,
        k: Option<u32>,
    ) -> Result<GradedPoly> {
        for img in assignment.values() {
            if img.space != target {
                return Err(Error::SpaceMismatch(
                    img.space.to_string(),
                    target.to_string(),
                ));
            }
        }
        let mut trunc = min_trunc(k, self.trunc);
        for img in assignment.values() {
            trunc = min_trunc(trunc, img.trunc);
        }
        let mut out = GradedPoly::zero(target);
        out.trunc = trunc;
        let mut powers: HashMap<(Var, u32), GradedPoly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut acc = GradedPoly::constant(target, c.clone()).with_trunc(trunc);
            let mut plain = Monomial::one();
            for (v, e) in m.factors() {
                match assignment.get(v) {
                    Some(img) => {
                        let key = (v.clone(), *e);
                        if !powers.contains_key(&key) {
                            powers.insert(key.clone(), img.clone().with_trunc(trunc).pow(*e));
                        }
                        acc = acc.mul(&powers[&key])?;
                        if acc.is_zero() {
                            break;
                        }
                    }
                    None => {
                        target.check(v)?;
                        plain.mul_var(v.clone(), *e);
                    }
                }
            }
            if acc.is_zero() {
                continue;
            }
            let shifted = GradedPoly::term(target, plain, Rational::one());
            let t = acc.mul(&shifted)?;
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every monomial, accumulating `coefficient * f(m)`.
    pub fn map_monomials(
        &self,
        target: VarSpace,
        mut f: impl FnMut(&Monomial) -> Monomial,
    ) -> GradedPoly {
        let mut out = GradedPoly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Terms sorted for display: increasing degree, then descending lex.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let space = self.space;
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            a.degree(&space)
                .cmp(&b.degree(&space))
                .then_with(|| a.display_cmp(b))
        });
        v
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}
