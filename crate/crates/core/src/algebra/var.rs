use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a Landweber–Novikov class `s_I`, over `(c1, c2, c3, ...)`.
///
/// Trailing zeros are stripped so `s[0]` and `s[]` name the same class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SIndex(Vec<u32>);

impl SIndex {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        SIndex(exps)
    }

    pub fn empty() -> Self {
        SIndex(Vec::new())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Weighted size `Σ j·i_j`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &e)| (j as u32 + 1) * e)
            .sum()
    }
}

/// A polynomial variable.
///
/// The derived order (torus < c < c' < s < marker, then by index) is the
/// global variable order used for canonical term ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Torus character `a_j`, 1-based.
    Torus(u32),
    /// Chern class `c_k` (quotient or source, depending on context).
    C(u32),
    /// Target Chern class `c'_k`.
    CPrime(u32),
    /// Landweber–Novikov class `s_I`.
    S(SIndex),
    /// Formal bookkeeping marker `t[name]` of degree 0.
    Marker(String),
}

impl Var {
    pub fn s(exps: &[u32]) -> Var {
        Var::S(SIndex::new(exps.to_vec()))
    }

    pub fn s0() -> Var {
        Var::S(SIndex::empty())
    }

    pub fn is_s(&self) -> bool {
        matches!(self, Var::S(_))
    }

    pub fn is_chern(&self) -> bool {
        matches!(self, Var::C(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Torus(j) => write!(f, "a{j}"),
            Var::C(k) => write!(f, "c{k}"),
            Var::CPrime(k) => write!(f, "c'{k}"),
            Var::S(i) => {
                write!(f, "s[")?;
                for (n, e) in i.0.iter().enumerate() {
                    if n > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "]")
            }
            Var::Marker(name) => write!(f, "t[{name}]"),
        }
    }
}

/// Grading context shared by polynomials that may be combined.
///
/// `kappa` fixes the degree of `s_I` classes; `torus_rank` bounds the
/// admissible torus characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSpace {
    kappa: u32,
    torus_rank: u32,
}

impl VarSpace {
    /// Characteristic classes `c_i`, `c'_i`, `s_I` with relative codimension `kappa`.
    pub fn characteristic(kappa: u32) -> Self {
        VarSpace {
            kappa,
            torus_rank: 0,
        }
    }

    /// Torus characters `a1..a_rank`.
    pub fn torus(rank: u32) -> Self {
        VarSpace {
            kappa: 0,
            torus_rank: rank,
        }
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn torus_rank(&self) -> u32 {
        self.torus_rank
    }

    pub fn degree(&self, v: &Var) -> u32 {
        match v {
            Var::Torus(_) => 1,
            Var::C(k) | Var::CPrime(k) => *k,
            Var::S(i) => self.kappa + i.weight(),
            Var::Marker(_) => 0,
        }
    }

    pub fn check(&self, v: &Var) -> Result<()> {
        let ok = match v {
            Var::Torus(j) => *j >= 1 && *j <= self.torus_rank,
            Var::C(k) | Var::CPrime(k) => *k >= 1,
            Var::S(_) | Var::Marker(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMonomial(format!("{v} is not a variable of {self}")))
        }
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space(kappa={}, torus rank={})", self.kappa, self.torus_rank)
    }
}

/// Sparse monomial: variables in increasing global order with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(factors: I) -> Self {
        let mut out = Monomial::one();
        for (v, e) in factors {
            out.mul_var(v, e);
        }
        out
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul_var(&mut self, v: Var, e: u32) {
        if e == 0 {
            return;
        }
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1 += e,
            Err(i) => self.0.insert(i, (v, e)),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn degree(&self, space: &VarSpace) -> u32 {
        self.0.iter().map(|(v, e)| space.degree(v) * e).sum()
    }

    pub fn any_var(&self, pred: impl Fn(&Var) -> bool) -> bool {
        self.0.iter().any(|(v, _)| pred(v))
    }

    /// Splits into the factors satisfying `pred` and the rest.
    pub fn split(&self, pred: impl Fn(&Var) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().cloned().partition(|(v, _)| pred(v));
        (Monomial(a), Monomial(b))
    }

    /// Descending lexicographic comparison on dense exponent vectors, so that
    /// `c1^3 < c1 c2 < c3` in display order.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => {
                        if ea != eb {
                            return eb.cmp(ea);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
