//! Truncated power series with rational coefficients.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::arith::{Integer, Rational};
use crate::error::ArithError;

/// `Σ_{i=0}^{order} c_i t^i`; products are truncated at the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        RationalSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        RationalSeries::new(vec![Rational::one()], order)
    }

    /// `e^{c t}` through `order`.
    pub fn exp_scaled(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for i in 0..=order {
            coeffs.push(term.clone());
            term = term * c / Rational::from_integer(Integer::from(i + 1));
        }
        RationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        RationalSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &RationalSeries) -> Self {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        if !self.coeffs[0].is_one() {
            return Err(ArithError::ConstantTermNotUnit);
        }
        let n = self.order();
        let mut inv: Vec<Rational> = Vec::with_capacity(n + 1);
        inv.push(Rational::one());
        for i in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[i - j];
                }
            }
            inv.push(-acc);
        }
        Ok(RationalSeries { coeffs: inv })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RationalSeries::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^{-alpha}`: exact inversion then repeated squaring.
    pub fn pow_neg(&self, alpha: u32) -> Result<Self, ArithError> {
        Ok(self.inverse()?.pow(alpha))
    }

    /// `n! · c_n` for every `n`: the exponential-generating-function values.
    pub fn egf_values(&self) -> Vec<Rational> {
        let mut fact = Integer::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Integer::from(n);
                }
                c * Rational::from_integer(fact.clone())
            })
            .collect()
    }
}

impl Mul<&RationalSeries> for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs: out }
    }
}
