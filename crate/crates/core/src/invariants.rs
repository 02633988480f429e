//! Singularity counts, image and discriminant Milnor numbers, and global
//! Euler-characteristic formulas.

use num_traits::{Signed, Zero};

use crate::algebra::{format_rational, rat, ratio, GradedPoly, Monomial, Rational, Var, VarSpace};
use crate::chern::{specialize, GermSignature};
use crate::database::{Database, EntryKind, SingularityKey, TpEntry};
use crate::error::{Error, Result};
use crate::pushforward::target_tp;

/// A computed invariant with sanity flags.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantResult {
    pub value: Rational,
    pub integral: bool,
    pub nonnegative: bool,
    pub warnings: Vec<String>,
}

impl InvariantResult {
    pub fn new(value: Rational) -> Self {
        let integral = value.is_integer();
        let nonnegative = !value.is_negative();
        let mut warnings = Vec::new();
        if !integral {
            warnings.push(
                "non-integer output: input likely not A-finite or wrong type/kappa".to_string(),
            );
        }
        InvariantResult {
            value,
            integral,
            nonnegative,
            warnings,
        }
    }

    fn expect_nonnegative(mut self, what: &str) -> Self {
        if !self.nonnegative {
            self.warnings.push(format!("negative {what}: input likely not A-finite"));
        }
        self
    }

    pub fn value_string(&self) -> String {
        format_rational(&self.value)
    }
}

fn a_pow(m: u32) -> Monomial {
    Monomial::from_factors([(Var::Torus(1), m)])
}

fn top_coefficient(p: &GradedPoly, sig: &GermSignature, m: u32) -> Result<Rational> {
    specialize(p, sig, m)?.coefficient_of(&a_pow(m))
}

fn check_kappa(expected: u32, sig: &GermSignature) -> Result<()> {
    if sig.kappa() != expected {
        return Err(Error::KappaMismatch {
            expected,
            found: sig.kappa(),
        });
    }
    Ok(())
}

/// Number of `η`-points in a stable perturbation of the germ.
///
/// Computed from the source Thom polynomial and from its pushforward; the two
/// must agree.
pub fn count_stable(db: &Database, sig: &GermSignature, key: &SingularityKey) -> Result<InvariantResult> {
    let entry = db.get(key)?;
    count_entry(entry, sig)
}

fn count_entry(entry: &TpEntry, sig: &GermSignature) -> Result<InvariantResult> {
    if entry.key.kind != EntryKind::TpSource {
        return Err(Error::WrongKind {
            key: entry.key.to_string(),
            expected: EntryKind::TpSource.to_string(),
        });
    }
    check_kappa(entry.key.kappa, sig)?;
    let (m, n) = (sig.m(), sig.n());
    if entry.codim != m {
        return Err(Error::CodimMismatch {
            key: entry.key.to_string(),
            codim: entry.codim,
            m,
        });
    }
    let source = top_coefficient(&entry.polynomial, sig, m)?
        / (sig.weight_product() * rat(entry.deg1 as i64));
    let target = top_coefficient(&target_tp(entry)?, sig, n)? / sig.degree_product();
    if source != target {
        return Err(Error::RouteMismatch {
            key: entry.key.to_string(),
            source_value: format_rational(&source),
            target_value: format_rational(&target),
        });
    }
    Ok(InvariantResult::new(source).expect_nonnegative("count"))
}

/// Counts of every tabulated type of codimension `m` at the germ's `κ`.
pub fn count_all(db: &Database, sig: &GermSignature) -> Result<Vec<(SingularityKey, InvariantResult)>> {
    db.entries()
        .filter(|e| {
            e.key.kind == EntryKind::TpSource && e.key.kappa == sig.kappa() && e.codim == sig.m()
        })
        .map(|e| Ok((e.key.clone(), count_entry(e, sig)?)))
        .collect()
}

/// `[∏(1 + w_i a) · series(f)]_m / ∏ w`.
fn localized_euler(db: &Database, sig: &GermSignature, name: &str, kappa: u32, kind: EntryKind) -> Result<Rational> {
    check_kappa(kappa, sig)?;
    let entry = db.lookup(name, kappa, kind)?;
    let m = sig.m();
    if m > entry.max_valid_degree {
        return Err(Error::BeyondValidity {
            key: entry.key.to_string(),
            requested: m,
            max: entry.max_valid_degree,
        });
    }
    let space = VarSpace::torus(1);
    let mut chern = GradedPoly::one(space);
    for &w in sig.weights() {
        let factor = GradedPoly::from_terms(
            space,
            [(Monomial::one(), rat(1)), (a_pow(1), rat(w as i64))],
        )?;
        chern = chern.mul(&factor)?;
    }
    let spec = specialize(&entry.polynomial, sig, m)?;
    Ok(chern.mul(&spec)?.coefficient_of(&a_pow(m))? / sig.weight_product())
}

fn sign(e: u32) -> Rational {
    if e % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Euler characteristic of the image of a stable perturbation (`κ = 1`).
pub fn chi_image(db: &Database, sig: &GermSignature) -> Result<Rational> {
    localized_euler(db, sig, "alpha_image", 1, EntryKind::TpsmAlphaImage)
}

/// `μ_I = (−1)^m (χ(image) − 1)`.
pub fn mu_image(db: &Database, sig: &GermSignature) -> Result<InvariantResult> {
    let chi = chi_image(db, sig)?;
    Ok(InvariantResult::new(sign(sig.m()) * (chi - rat(1))).expect_nonnegative("image Milnor number"))
}

/// Euler characteristic of the double-point image of a stable perturbation.
pub fn chi_image2(db: &Database, sig: &GermSignature) -> Result<Rational> {
    localized_euler(db, sig, "alpha_image2", 1, EntryKind::TpsmAlphaImage2)
}

/// `μ_{I₂} = (−1)^{m−1} (χ(double-point image) − 1)`.
pub fn mu_image2(db: &Database, sig: &GermSignature) -> Result<InvariantResult> {
    let chi = chi_image2(db, sig)?;
    Ok(InvariantResult::new(sign(sig.m() + 1) * (chi - rat(1)))
        .expect_nonnegative("second image Milnor number"))
}

/// Euler characteristic of the discriminant of a stable perturbation (`m = n`).
pub fn chi_discriminant(db: &Database, sig: &GermSignature) -> Result<Rational> {
    localized_euler(db, sig, "alpha_dis", 0, EntryKind::TpsmAlphaDis)
}

/// `μ_Δ = (−1)^{n−1} (χ(discriminant) − 1)`.
pub fn mu_discriminant(db: &Database, sig: &GermSignature) -> Result<InvariantResult> {
    let chi = chi_discriminant(db, sig)?;
    Ok(InvariantResult::new(sign(sig.n() + 1) * (chi - rat(1)))
        .expect_nonnegative("discriminant Milnor number"))
}

/// Euler characteristic of the image of a real surface: `χ(M) + C/2 + T`.
pub fn izumiya_marar_real(chi_m: i64, crosscaps: i64, triple_points: i64) -> Result<i64> {
    if crosscaps < 0 || triple_points < 0 {
        return Err(Error::InvalidInput("point counts must be nonnegative".into()));
    }
    if crosscaps % 2 != 0 {
        return Err(Error::OddCrosscapCount(crosscaps));
    }
    Ok(chi_m + crosscaps / 2 + triple_points)
}

/// Intersection numbers on a compact complex surface `M` mapped to a 3-fold.
///
/// `c_i` and `s_I` are the quotient and Landweber–Novikov classes of the map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntersectionNumbers {
    pub c1tm_c1: Rational,
    pub c2tm: Rational,
    pub c1tm_s0: Rational,
    pub c1_sq: Rational,
    pub c2: Rational,
    pub c1_s0: Rational,
    pub s0_sq: Rational,
    pub s1: Rational,
}

impl IntersectionNumbers {
    pub const FIELDS: [&'static str; 8] =
        ["c1tm_c1", "c2tm", "c1tm_s0", "c1_sq", "c2", "c1_s0", "s0_sq", "s1"];

    pub fn from_values(v: [Rational; 8]) -> Self {
        let [c1tm_c1, c2tm, c1tm_s0, c1_sq, c2, c1_s0, s0_sq, s1] = v;
        IntersectionNumbers {
            c1tm_c1,
            c2tm,
            c1tm_s0,
            c1_sq,
            c2,
            c1_s0,
            s0_sq,
            s1,
        }
    }

    pub fn values(&self) -> [&Rational; 8] {
        [
            &self.c1tm_c1,
            &self.c2tm,
            &self.c1tm_s0,
            &self.c1_sq,
            &self.c2,
            &self.c1_s0,
            &self.s0_sq,
            &self.s1,
        ]
    }
}

/// Euler characteristic of the image of a surface with corank-one singularities.
pub fn chi_image_global(x: &IntersectionNumbers) -> Rational {
    let weights = [3, 6, -3, -1, -1, -2, 1, 2];
    let sum = x
        .values()
        .iter()
        .zip(weights)
        .fold(Rational::zero(), |acc, (v, w)| acc + *v * rat(w));
    sum / rat(6)
}

/// Chern numbers and image Euler characteristic for a degree-`d` surface in
/// `ℙ³` with `δ`-line double curve, `C` crosscaps and `T` triple points,
/// resolved by its normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnriquesInvariants {
    pub c1_sq: Rational,
    pub c2: Rational,
    pub chi: Rational,
}

fn enriques_check(d: i64, delta: i64, c: i64, t: i64) -> Result<()> {
    if d < 1 || delta < 0 || c < 0 || t < 0 {
        return Err(Error::InvalidInput(
            "need d >= 1 and nonnegative delta, C, T".into(),
        ));
    }
    Ok(())
}

pub fn enriques_invariants(d: i64, delta: i64, c: i64, t: i64) -> Result<EnriquesInvariants> {
    enriques_check(d, delta, c, t)?;
    let (d, delta, c, t) = (rat(d), rat(delta), rat(c), rat(t));
    let base = &d * (&d * &d - rat(4) * &d + rat(6));
    let c1_sq = &d * (&d - rat(4)) * (&d - rat(4)) - (rat(3) * &d - rat(16)) * &delta + rat(3) * &t - &c;
    let c2 = &base - (rat(3) * &d - rat(8)) * &delta - rat(2) * &c + rat(3) * &t;
    let chi = base + rat(2) * (rat(2) - &d) * &delta + &t - ratio(3, 2) * &c;
    Ok(EnriquesInvariants { c1_sq, c2, chi })
}

/// The eight intersection numbers of the normalization `M → ℙ³` of such a surface.
pub fn enriques_intersection_numbers(d: i64, delta: i64, c: i64, t: i64) -> Result<IntersectionNumbers> {
    let inv = enriques_invariants(d, delta, c, t)?;
    let (d, delta) = (rat(d), rat(delta));
    let k1h = &d * (rat(4) - &d) + rat(2) * &delta;
    let k1sq = inv.c1_sq;
    let k2 = inv.c2;
    Ok(IntersectionNumbers {
        c1tm_c1: rat(4) * &k1h - &k1sq,
        c2tm: k2.clone(),
        c1tm_s0: &d * &k1h,
        c1_sq: rat(16) * &d - rat(8) * &k1h + &k1sq,
        c2: rat(6) * &d - rat(4) * &k1h + &k1sq - &k2,
        c1_s0: &d * (rat(4) * &d - &k1h),
        s0_sq: &d * &d * &d,
        s1: (&d * &d - rat(2) * &delta) * &d,
    })
}
