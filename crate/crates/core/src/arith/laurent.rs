use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Integer, Poly};

/// `q^shift * base`, with `base(0) != 0` unless the whole thing is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    base: Poly,
    shift: i64,
}

impl LaurentPoly {
    pub fn new(base: Poly, shift: i64) -> Self {
        if base.is_zero() {
            return LaurentPoly::zero();
        }
        let low = base.low_order();
        LaurentPoly {
            base: base.div_q_pow(low),
            shift: shift + low as i64,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            base: Poly::zero(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        LaurentPoly::from(Poly::one())
    }

    /// The monomial `q^t`.
    pub fn q_pow(t: i64) -> Self {
        LaurentPoly {
            base: Poly::one(),
            shift: t,
        }
    }

    pub fn constant(c: Integer) -> Self {
        LaurentPoly::from(Poly::constant(c))
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Returns the ordinary polynomial when no negative powers are present.
    pub fn to_poly(&self) -> Option<Poly> {
        usize::try_from(self.shift)
            .ok()
            .map(|s| self.base.mul_q_pow(s))
    }

    pub fn scale(&self, c: &Integer) -> Self {
        LaurentPoly::new(self.base.scale(c), self.shift)
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        LaurentPoly::new(&self.base * p, self.shift)
    }

    pub fn mul_q_pow(&self, t: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            base: self.base.clone(),
            shift: self.shift + t,
        }
    }

    pub fn eval_at_one(&self) -> Integer {
        self.base.eval_at_one()
    }

    pub fn pow(&self, e: u32) -> Self {
        LaurentPoly::new(self.base.pow(e), self.shift * e as i64)
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::new(p, 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.base),
            s if self.base.is_one() => write!(f, "q^{s}"),
            s => write!(f, "q^{s}*({})", self.base),
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.shift.min(rhs.shift);
        let a = self.base.mul_q_pow((self.shift - low) as usize);
        let b = rhs.base.mul_q_pow((rhs.shift - low) as usize);
        LaurentPoly::new(a + b, low)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(&self.base * &rhs.base, self.shift + rhs.shift)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            base: -&self.base,
            shift: self.shift,
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            base: -self.base,
            shift: self.shift,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn normalizes_low_zeros_into_shift() {
        let l = LaurentPoly::new(Poly::from_i64s(&[0, 0, 1, 1]), -3);
        assert_eq!(l.shift(), -1);
        assert_eq!(l.base(), &Poly::from_i64s(&[1, 1]));
        assert_eq!(LaurentPoly::new(Poly::zero(), 7), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().shift(), 0);
    }

    #[test]
    fn q_powers() {
        assert_eq!(LaurentPoly::q_pow(0), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::q_pow(3).to_poly(),
            Some(Poly::monomial(BigInt::one(), 3))
        );
        let inv = LaurentPoly::q_pow(-2);
        assert_eq!(inv.to_poly(), None);
        assert_eq!(&inv * &LaurentPoly::q_pow(2), LaurentPoly::one());
    }

    #[test]
    fn add_aligns_shifts() {
        let a = LaurentPoly::q_pow(-1);
        let b = LaurentPoly::q_pow(1);
        let s = &a + &b;
        assert_eq!(s.shift(), -1);
        assert_eq!(s.base(), &Poly::from_i64s(&[1, 0, 1]));
        assert!((&s - &s).is_zero());
    }
}
