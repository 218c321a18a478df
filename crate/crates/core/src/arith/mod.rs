//! Exact arithmetic over Z[q]: integers, rationals, dense polynomials,
//! Laurent polynomials and reduced fractions.

mod laurent;
mod poly;
mod qexpr;

pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use qexpr::{rational_const, QExpr};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(Integer::from(numer), Integer::from(denom))
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        return Integer::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Integer::from(1);
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}
