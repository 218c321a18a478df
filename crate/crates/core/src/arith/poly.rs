use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Integer, Rational};
use crate::error::ArithError;

/// Dense univariate polynomial in `q` over the integers.
///
/// `coeffs[i]` is the coefficient of `q^i`. The zero polynomial is the empty
/// vector, and the last stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Integer>,
}

impl Poly {
    pub fn new(coeffs: Vec<Integer>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: Integer) -> Self {
        Poly::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: Integer, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Poly::monomial(BigInt::one(), 1)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        if k == 0 {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        Poly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` standing for the degree of zero (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Exponent of the largest power of `q` dividing `self` (0 for zero).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn mul_q_pow(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Drops the lowest `k` coefficients; exact when `k <= low_order()`.
    pub fn div_q_pow(&self, k: usize) -> Poly {
        debug_assert!(k <= self.low_order() || self.is_zero());
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &Integer) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &Integer) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content(self)`; the sign is kept.
    pub fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Multiplies by -1 if needed so that the leading coefficient is positive.
    pub fn with_positive_lead(self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self,
            _ => self,
        }
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    /// Exact quotient `self / divisor` over the integers.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let (quot, rem_zero) = self.div_rem_integral(divisor)?;
        if rem_zero {
            Ok(quot)
        } else {
            Err(ArithError::NotDivisible)
        }
    }

    /// Whether `divisor` divides `self` in Z[q].
    pub fn is_divisible_by(&self, divisor: &Poly) -> Result<bool, ArithError> {
        Ok(self.div_rem_integral(divisor)?.1)
    }

    // Long division that succeeds only if every quotient coefficient is integral.
    // Returns the quotient and whether the remainder vanished.
    fn div_rem_integral(&self, divisor: &Poly) -> Result<(Poly, bool), ArithError> {
        let Some(dlc) = divisor.leading_coeff() else {
            return Err(ArithError::DivideByZero);
        };
        if self.is_zero() {
            return Ok((Poly::zero(), true));
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return Ok((Poly::zero(), false));
        }
        let unit_lead = dlc.abs().is_one();
        let lead_neg = dlc.is_negative();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let top = &rem[i + m - 1];
            if top.is_zero() {
                continue;
            }
            let qc = if unit_lead {
                if lead_neg {
                    -top
                } else {
                    top.clone()
                }
            } else {
                let (qc, r) = top.div_rem(dlc);
                if !r.is_zero() {
                    return Ok((Poly::zero(), false));
                }
                qc
            };
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &qc * d;
                }
            }
            quot[i] = qc;
        }
        let rem_zero = rem[..m - 1].iter().all(Zero::is_zero);
        Ok((Poly::new(quot), rem_zero))
    }

    /// `self * (1 - q^i)` in linear time.
    pub fn mul_one_minus_q_pow(&self, i: usize) -> Poly {
        if i == 0 || self.is_zero() {
            return Poly::zero();
        }
        let mut out = self.coeffs.clone();
        out.resize(self.coeffs.len() + i, BigInt::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j + i] -= c;
        }
        Poly::new(out)
    }

    /// `self / (1 - q^i)` in linear time, failing unless exact.
    pub fn div_one_minus_q_pow(&self, i: usize) -> Result<Poly, ArithError> {
        if i == 0 {
            return Err(ArithError::DivideByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let n = self.coeffs.len();
        if n <= i {
            return Err(ArithError::NotDivisible);
        }
        // c_j = a_j + c_{j-i}, and the top i coefficients must come out zero.
        let mut c = self.coeffs.clone();
        for j in i..n {
            let prev = c[j - i].clone();
            c[j] += prev;
        }
        if c[n - i..].iter().any(|x| !x.is_zero()) {
            return Err(ArithError::NotDivisible);
        }
        c.truncate(n - i);
        Ok(Poly::new(c))
    }

    /// A nonzero rational multiple of the remainder of `self` modulo `divisor`,
    /// computed without leaving Z[q].
    pub fn pseudo_rem(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let Some(dlc) = divisor.leading_coeff() else {
            return Err(ArithError::DivideByZero);
        };
        let m = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        while rem.len() >= m {
            let top = rem.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() + 1 - m;
            let g = top.gcd(dlc);
            let mut a = dlc / &g;
            let mut b = top / &g;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            if !a.is_one() {
                for c in rem.iter_mut() {
                    *c *= &a;
                }
            }
            for (j, d) in divisor.coeffs[..m - 1].iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + j] -= &b * d;
                }
            }
        }
        Ok(Poly::new(rem))
    }

    /// Generator of the ideal `(a, b)` over the rationals, returned as a
    /// primitive integer polynomial with positive leading coefficient.
    pub fn gcd_rational(a: &Poly, b: &Poly) -> Result<Poly, ArithError> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return Err(ArithError::BothZero),
            (true, false) => return Ok(b.primitive_part().with_positive_lead()),
            (false, true) => return Ok(a.primitive_part().with_positive_lead()),
            _ => {}
        }
        let (mut f, mut g) = (a.primitive_part(), b.primitive_part());
        if f.coeffs.len() < g.coeffs.len() {
            std::mem::swap(&mut f, &mut g);
        }
        // Common powers of q split off cheaply.
        let low = f.low_order().min(g.low_order());
        f = f.div_q_pow(f.low_order());
        g = g.div_q_pow(g.low_order());
        if f.coeffs.len() < g.coeffs.len() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            if g.degree() == Some(0) {
                return Ok(Poly::monomial(BigInt::one(), low));
            }
            let r = f.pseudo_rem(&g)?;
            f = g;
            g = r.primitive_part();
        }
        Ok(f.with_positive_lead().mul_q_pow(low))
    }

    /// Coefficients as decimal strings, ascending.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly, String> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {:?}: {e}", s.as_ref()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Poly::from_decimal_strings(&items).map_err(D::Error::custom)
    }
}

impl From<Integer> for Poly {
    fn from(c: Integer) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(BigInt::from(c))
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
