//! Generalized Lehmer-Euler numbers `W_{r,n}^{(α)}`.
//!
//! With `ζ` a primitive r-th root of unity, `Σ_j e^{ζ^j t} = r Σ_l t^{rl}/(rl)!`,
//! so `(r / Σ_j e^{ζ^j t})^α` is the `-α` power of the rational series
//! `Σ_l t^{rl}/(rl)!` and no root-of-unity arithmetic is needed.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Integer, Rational};
use crate::error::ArithError;
use crate::series::RationalSeries;

/// `Σ_{l>=0} t^{rl} / (rl)!` through `t^order`.
pub fn base_series(r: u32, order: usize) -> RationalSeries {
    assert!(r >= 1, "r must be positive");
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = Integer::one();
    for i in 0..=order {
        if i > 0 {
            fact *= Integer::from(i);
        }
        if i % r as usize == 0 {
            coeffs.push(Rational::new(Integer::one(), fact.clone()));
        } else {
            coeffs.push(Rational::zero());
        }
    }
    RationalSeries::new(coeffs, order)
}

/// `f^{-α}` through the order of `f`.
pub fn series_pow_neg(f: &RationalSeries, alpha: u32) -> Result<RationalSeries, ArithError> {
    f.pow_neg(alpha)
}

/// `W_{r,n}^{(α)}` for `n = 0..=count`.
///
/// The top value is recomputed with four extra orders of truncation and
/// must agree; a mismatch would mean the truncated arithmetic leaked.
pub fn lehmer_euler_numbers(r: u32, alpha: u32, count: usize) -> Vec<Rational> {
    let values = series_pow_neg(&base_series(r, count), alpha)
        .expect("base series has constant term 1")
        .egf_values();
    let wider = series_pow_neg(&base_series(r, count + 4), alpha)
        .expect("base series has constant term 1")
        .egf_values();
    assert_eq!(values[count], wider[count], "truncation mismatch");
    values
}

/// One exported row: `W_{r,n}^{(α)} = numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LehmerRow {
    pub r: u32,
    pub alpha: u32,
    pub n: usize,
    pub numerator: String,
    pub denominator: String,
}

pub fn lehmer_euler_rows(r: u32, alpha: u32, count: usize) -> Vec<LehmerRow> {
    lehmer_euler_numbers(r, alpha, count)
        .into_iter()
        .enumerate()
        .map(|(n, w)| LehmerRow {
            r,
            alpha,
            n,
            numerator: w.numer().to_string(),
            denominator: w.denom().to_string(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat};
    use crate::euler::euler_numbers;

    #[test]
    fn base_series_examples() {
        assert_eq!(
            base_series(1, 3).coeffs(),
            &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]
        );
        assert_eq!(
            base_series(2, 4).coeffs(),
            &[rat(1, 1), rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 24)]
        );
        assert_eq!(
            base_series(3, 6).coeffs(),
            &[rat(1, 1), rat(0, 1), rat(0, 1), rat(1, 6), rat(0, 1), rat(0, 1), rat(1, 720)]
        );
    }

    #[test]
    fn inverse_powers() {
        let e = base_series(1, 5);
        let inv = series_pow_neg(&e, 1).unwrap();
        assert_eq!(
            &inv.coeffs()[..4],
            &[rat(1, 1), rat(-1, 1), rat(1, 2), rat(-1, 6)]
        );
        assert_eq!(&e * &inv, RationalSeries::one(5));
        let sech = series_pow_neg(&base_series(2, 4), 1).unwrap();
        assert_eq!(
            sech.coeffs(),
            &[rat(1, 1), rat(0, 1), rat(-1, 2), rat(0, 1), rat(5, 24)]
        );
    }

    #[test]
    fn order_one_is_exponential() {
        for alpha in 1..=4u32 {
            let w = lehmer_euler_numbers(1, alpha, 12);
            for (n, v) in w.iter().enumerate() {
                let expect = Integer::from(-(alpha as i64)).pow(n as u32);
                assert_eq!(v, &Rational::from_integer(expect));
            }
        }
    }

    #[test]
    fn r_two_order_one_is_euler() {
        let w = lehmer_euler_numbers(2, 1, 24);
        let e = euler_numbers(24);
        for n in 0..=24 {
            assert_eq!(w[n], Rational::from_integer(e.values()[n].clone()));
        }
    }

    #[test]
    fn constant_term_is_one() {
        for r in 1..=5 {
            for alpha in 1..=3 {
                assert_eq!(lehmer_euler_numbers(r, alpha, 0), vec![rat(1, 1)]);
            }
        }
    }

    #[test]
    fn lehmer_cubic_sequence() {
        // Lehmer's r = 3 numbers: 1, 0, 0, -1, 0, 0, 19, 0, 0, -1513, ...
        let w = lehmer_euler_numbers(3, 1, 9);
        assert_eq!(w[3], rat(-1, 1));
        assert_eq!(w[6], rat(19, 1));
        assert_eq!(w[9], rat(-1513, 1));
    }

    #[test]
    fn orders_multiply() {
        for r in 1..=3 {
            for (a, b) in [(1, 1), (1, 2), (2, 3)] {
                let wa = lehmer_euler_numbers(r, a, 12);
                let wb = lehmer_euler_numbers(r, b, 12);
                let wab = lehmer_euler_numbers(r, a + b, 12);
                for n in 0..=12 {
                    let conv: Rational = (0..=n)
                        .map(|k| {
                            Rational::from_integer(binomial(n as i64, k as i64))
                                * &wa[k]
                                * &wb[n - k]
                        })
                        .sum();
                    assert_eq!(conv, wab[n], "r={r} a={a} b={b} n={n}");
                }
            }
        }
    }
}
