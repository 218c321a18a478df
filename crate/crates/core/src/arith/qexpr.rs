use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, LaurentPoly, Poly, Rational};
use crate::error::ArithError;

/// A rational function in `q`, held as `num / den` in lowest terms.
///
/// Canonical form: `den` is nonzero with positive leading coefficient and
/// nonzero constant term (powers of `q` live in the numerator's shift);
/// numerator and denominator share no nonconstant factor over the rationals;
/// their integer contents are coprime. Equal expressions therefore compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QExpr {
    num: LaurentPoly,
    den: Poly,
}

impl QExpr {
    pub fn zero() -> Self {
        QExpr {
            num: LaurentPoly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        QExpr::from(Poly::one())
    }

    pub fn from_int(c: i64) -> Self {
        QExpr::from(Poly::from(c))
    }

    pub fn from_rational(r: &Rational) -> Self {
        QExpr {
            num: LaurentPoly::constant(r.numer().clone()),
            den: Poly::constant(r.denom().clone()),
        }
    }

    /// `q^t`.
    pub fn q_pow(t: i64) -> Self {
        QExpr {
            num: LaurentPoly::q_pow(t),
            den: Poly::one(),
        }
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn normalize(num: LaurentPoly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        if num.is_zero() {
            return Ok(QExpr::zero());
        }
        let low = den.low_order();
        let shift = num.shift() - low as i64;
        let mut top = num.base().clone();
        let mut bottom = den.div_q_pow(low);

        let g = Poly::gcd_rational(&top, &bottom)?;
        if g.degree() != Some(0) {
            top = top.exact_div(&g)?;
            bottom = bottom.exact_div(&g)?;
        }
        let c = top.content().gcd(&bottom.content());
        if !c.is_one() {
            top = top.div_scalar_exact(&c);
            bottom = bottom.div_scalar_exact(&c);
        }
        if bottom.leading_coeff().is_some_and(Signed::is_negative) {
            top = -top;
            bottom = -bottom;
        }
        Ok(QExpr {
            num: LaurentPoly::new(top, shift),
            den: bottom,
        })
    }

    pub fn new(num: impl Into<LaurentPoly>, den: Poly) -> Result<Self, ArithError> {
        QExpr::normalize(num.into(), den)
    }

    /// `num / den` for polynomial parts; panics if `den` is zero.
    pub fn ratio(num: &Poly, den: &Poly) -> Self {
        QExpr::normalize(LaurentPoly::from(num.clone()), den.clone())
            .expect("denominator must be nonzero")
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The plain polynomial, when the expression is one.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            self.num.to_poly()
        } else {
            None
        }
    }

    pub fn checked_add(&self, rhs: &QExpr) -> QExpr {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QExpr::normalize(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        // Only the cofactors of the shared part of the denominators are crossed.
        let g = Poly::gcd_rational(&self.den, &rhs.den).expect("denominators are nonzero");
        let (a_co, b_co) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                rhs.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let num = &self.num.mul_poly(&b_co) + &rhs.num.mul_poly(&a_co);
        QExpr::normalize(num, &self.den * &b_co).expect("nonzero denominator")
    }

    pub fn checked_mul(&self, rhs: &QExpr) -> QExpr {
        if self.is_zero() || rhs.is_zero() {
            return QExpr::zero();
        }
        QExpr::normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<QExpr, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        QExpr::normalize(
            LaurentPoly::new(self.den.clone(), -self.num.shift()),
            self.num.base().clone(),
        )
    }

    pub fn checked_div(&self, rhs: &QExpr) -> Result<QExpr, ArithError> {
        Ok(self.checked_mul(&rhs.recip()?))
    }

    pub fn scale(&self, c: &Rational) -> QExpr {
        self.checked_mul(&QExpr::from_rational(c))
    }

    pub fn mul_poly(&self, p: &Poly) -> QExpr {
        self.checked_mul(&QExpr::from(p.clone()))
    }

    pub fn mul_q_pow(&self, t: i64) -> QExpr {
        QExpr {
            num: self.num.mul_q_pow(t),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> QExpr {
        // Powers of a reduced fraction stay reduced.
        QExpr {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<Rational, ArithError> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(ArithError::PoleAtOne);
        }
        Ok(Rational::new(self.num.eval_at_one(), d))
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a QExpr>) -> QExpr {
        items
            .into_iter()
            .fold(QExpr::zero(), |acc, x| acc.checked_add(x))
    }
}

impl Default for QExpr {
    fn default() -> Self {
        QExpr::zero()
    }
}

impl From<Poly> for QExpr {
    fn from(p: Poly) -> Self {
        QExpr::from(LaurentPoly::from(p))
    }
}

impl From<LaurentPoly> for QExpr {
    fn from(num: LaurentPoly) -> Self {
        // Integer content of a polynomial over denominator 1 is already coprime.
        QExpr {
            num,
            den: Poly::one(),
        }
    }
}

impl From<Integer> for QExpr {
    fn from(c: Integer) -> Self {
        QExpr::from(Poly::constant(c))
    }
}

impl fmt::Debug for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QExpr({self})")
    }
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&QExpr> for &QExpr {
    type Output = QExpr;
    fn add(self, rhs: &QExpr) -> QExpr {
        self.checked_add(rhs)
    }
}

impl Sub<&QExpr> for &QExpr {
    type Output = QExpr;
    fn sub(self, rhs: &QExpr) -> QExpr {
        self.checked_add(&-rhs)
    }
}

impl Mul<&QExpr> for &QExpr {
    type Output = QExpr;
    fn mul(self, rhs: &QExpr) -> QExpr {
        self.checked_mul(rhs)
    }
}

/// Panics on division by zero; use [`QExpr::checked_div`] to recover.
impl Div<&QExpr> for &QExpr {
    type Output = QExpr;
    fn div(self, rhs: &QExpr) -> QExpr {
        self.checked_div(rhs).expect("division by zero QExpr")
    }
}

impl Neg for &QExpr {
    type Output = QExpr;
    fn neg(self) -> QExpr {
        QExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QExpr {
    type Output = QExpr;
    fn neg(self) -> QExpr {
        QExpr {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QExpr> for QExpr {
            type Output = QExpr;
            fn $m(self, rhs: QExpr) -> QExpr { (&self).$m(&rhs) }
        }
        impl $tr<&QExpr> for QExpr {
            type Output = QExpr;
            fn $m(self, rhs: &QExpr) -> QExpr { (&self).$m(rhs) }
        }
        impl $tr<QExpr> for &QExpr {
            type Output = QExpr;
            fn $m(self, rhs: QExpr) -> QExpr { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

/// Small constructor used by tests and statement builders: `r` as a rational
/// constant expression.
pub fn rational_const(numer: i64, denom: i64) -> QExpr {
    QExpr::from_rational(&Rational::new(BigInt::from(numer), BigInt::from(denom)))
}

impl QExpr {
    /// Whether the representation satisfies every canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        if self.den.is_zero() || self.den.coeff(0).is_zero() {
            return false;
        }
        if self.den.leading_coeff().is_some_and(Signed::is_negative) {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one() && self.num.shift() == 0;
        }
        let g = Poly::gcd_rational(self.num.base(), &self.den).expect("nonzero");
        g.is_one()
            && self
                .num
                .base()
                .content()
                .gcd(&self.den.content())
                .is_one()
    }
}
