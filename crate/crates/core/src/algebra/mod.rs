//! Exact rational arithmetic, sparse graded polynomials and linear solving.

mod linear;
mod poly;
mod text;
mod var;

pub use linear::{nullspace, solve_exact, LinearSystem, Solution};
pub use poly::GradedPoly;
pub use text::parse_poly;
pub use var::{Monomial, SIndex, Var, VarSpace};

pub(crate) use poly::fmt_rational;

/// Arbitrary-precision exact rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `p/q` as a [`Rational`].
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Renders a rational as an integer or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    fmt_rational(r)
}

/// Parses an integer or `p/q`.
pub fn parse_rational(s: &str) -> crate::error::Result<Rational> {
    let s = s.trim();
    let bad = || crate::error::Error::parse(0, format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&d) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
