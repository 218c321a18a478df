//! Congruences between rational q-expressions modulo products of
//! cyclotomic powers, and between rationals modulo integers.
//!
//! `A ≡ B (mod ∏ Φ_d^{e_d})` is decided on the reduced difference
//! `A - B = N / E`: it holds when `v_d(N) - v_d(E) >= e_d` for every factor,
//! where `v_d` is the Φ_d-adic valuation. For a difference whose
//! denominator is coprime to the modulus this is plain divisibility of the
//! numerator; it also covers expressions such as the q-Fermat quotient whose
//! raw denominator contains the modulus but cancels after reduction. A
//! difference with a genuine pole at some Φ_d is reported as ill-posed
//! rather than failing.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Integer, Poly, QExpr, Rational};
use crate::cyclotomic::{cyclotomic, phi_valuation, Valuation};
use crate::error::ArithError;

/// `∏ Φ_d^{e}` held as sorted `(d, e)` pairs with distinct `d` and `e >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CycloModulus {
    factors: Vec<(u64, u32)>,
}

impl CycloModulus {
    /// Builds a modulus from a multiset of factors; repeated indices have
    /// their exponents added, zero exponents are dropped.
    pub fn from_factors(
        factors: impl IntoIterator<Item = (u64, u32)>,
    ) -> Result<Self, ArithError> {
        let mut merged: BTreeMap<u64, u32> = BTreeMap::new();
        for (d, e) in factors {
            if d == 0 {
                return Err(ArithError::ZeroIndex);
            }
            if e > 0 {
                *merged.entry(d).or_default() += e;
            }
        }
        Ok(CycloModulus {
            factors: merged.into_iter().collect(),
        })
    }

    /// `Φ_d^e`.
    pub fn phi_pow(d: u64, e: u32) -> Self {
        CycloModulus::from_factors([(d, e)]).expect("positive index")
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn times(&self, other: &CycloModulus) -> CycloModulus {
        CycloModulus::from_factors(self.factors.iter().chain(&other.factors).copied())
            .expect("indices already validated")
    }

    /// The represented polynomial.
    pub fn to_poly(&self) -> Poly {
        self.factors.iter().fold(Poly::one(), |acc, &(d, e)| {
            &acc * &cyclotomic(d).expect("positive index").pow(e)
        })
    }
}

impl fmt::Display for CycloModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (d, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match e {
                1 => write!(f, "Phi_{d}")?,
                _ => write!(f, "Phi_{d}^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    IllPosed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::IllPosed => "ill_posed",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Valuation data for one modulus factor. For polynomial congruences `d`
/// is a cyclotomic index; for integer congruences it is a prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDiag {
    pub d: u64,
    pub required: u32,
    pub val_num: Valuation,
    pub val_den: Valuation,
}

impl FactorDiag {
    /// Net valuation `val_num - val_den`; `None` for infinity.
    pub fn net(&self) -> Option<i64> {
        let num = self.val_num.finite()? as i64;
        let den = self.val_den.finite().unwrap_or(0) as i64;
        Some(num - den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub factors: Vec<FactorDiag>,
}

impl Verdict {
    /// A verdict for an exact identity: no modulus, just equality.
    pub fn from_equality(equal: bool) -> Verdict {
        Verdict {
            status: if equal { Status::Holds } else { Status::Fails },
            factors: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// Decides `lhs ≡ rhs` modulo `modulus`, factor by factor.
pub fn check_congruence(lhs: &QExpr, rhs: &QExpr, modulus: &CycloModulus) -> Verdict {
    let diff = lhs - rhs;
    verdict_for_difference(&diff, modulus)
}

/// Decides `diff ≡ 0` modulo `modulus`.
pub fn verdict_for_difference(diff: &QExpr, modulus: &CycloModulus) -> Verdict {
    let mut factors = Vec::with_capacity(modulus.factors().len());
    let mut ill_posed = false;
    let mut holds = true;
    for &(d, e) in modulus.factors() {
        let val_num = phi_valuation(diff.num().base(), d).expect("positive index");
        let val_den = phi_valuation(diff.den(), d).expect("positive index");
        let diag = FactorDiag {
            d,
            required: e,
            val_num,
            val_den,
        };
        match diag.net() {
            None => {}
            Some(net) if net < 0 => ill_posed = true,
            Some(net) if net < e as i64 => holds = false,
            Some(_) => {}
        }
        factors.push(diag);
    }
    let status = if ill_posed {
        Status::IllPosed
    } else if holds {
        Status::Holds
    } else {
        Status::Fails
    };
    Verdict { status, factors }
}

/// Whether `expr` has no pole at `Φ_d`.
pub fn is_admissible(expr: &QExpr, d: u64) -> bool {
    phi_valuation(expr.den(), d).expect("positive index") == Valuation::Finite(0)
}

/// Decides `lhs ≡ rhs (mod modulus)` over the rationals.
///
/// The modulus is split into prime powers `p^e`. A factor is ill-posed when
/// either side's denominator is divisible by `p`; otherwise it holds when
/// `p^e` divides the numerator of the reduced difference. In the
/// diagnostics `val_num` is the `p`-adic valuation of that numerator and
/// `val_den` the largest `p`-adic valuation among the two denominators.
pub fn check_int_congruence(
    lhs: &Rational,
    rhs: &Rational,
    modulus: &Integer,
) -> Result<Verdict, ArithError> {
    if !modulus.is_positive() {
        return Err(ArithError::DivideByZero);
    }
    let diff = lhs - rhs;
    let mut factors = Vec::new();
    let mut ill_posed = false;
    let mut holds = true;
    for (p, e) in factor_integer(modulus) {
        let pb = Integer::from(p);
        let val_num = if diff.is_zero() {
            Valuation::Infinity
        } else {
            Valuation::Finite(int_valuation(diff.numer(), &pb))
        };
        let side_den = int_valuation(lhs.denom(), &pb).max(int_valuation(rhs.denom(), &pb));
        if side_den > 0 {
            ill_posed = true;
        } else if val_num < Valuation::Finite(e) {
            holds = false;
        }
        factors.push(FactorDiag {
            d: p,
            required: e,
            val_num,
            val_den: Valuation::Finite(side_den),
        });
    }
    let status = if ill_posed {
        Status::IllPosed
    } else if holds {
        Status::Holds
    } else {
        Status::Fails
    };
    Ok(Verdict { status, factors })
}

fn int_valuation(x: &Integer, p: &Integer) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let mut v = 0;
    let mut cur = x.clone();
    loop {
        let (q, r) = cur.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        cur = q;
        v += 1;
    }
}

/// Prime-power factorization by trial division; moduli here are small.
pub fn factor_integer(n: &Integer) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n.abs();
    let mut p = Integer::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((u64::try_from(&p).expect("small prime"), e));
        }
        p += 1u32;
    }
    if m > Integer::one() {
        out.push((u64::try_from(&m).expect("modulus fits in u64"), 1));
    }
    out
}

/// `scale * poly`, the canonical residue of an expression modulo a
/// cyclotomic product: `poly` is a primitive integer polynomial of degree
/// below the modulus degree with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub scale: Rational,
    pub poly: Poly,
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn to_qexpr(&self) -> QExpr {
        QExpr::from(self.poly.clone()).scale(&self.scale)
    }
}

/// Reduces `expr` modulo the polynomial of `modulus` by inverting its
/// denominator (and any negative power of `q`) over the rationals.
pub fn reduce_mod(expr: &QExpr, modulus: &CycloModulus) -> Result<Residue, ArithError> {
    let m = RatPoly::from_poly(&modulus.to_poly());
    let mut value = RatPoly::from_poly(expr.num().base()).rem(&m);
    let shift = expr.num().shift();
    let q_factor = if shift >= 0 {
        RatPoly::from_poly(&Poly::q().pow(shift as u32)).rem(&m)
    } else {
        let q_inv = RatPoly::from_poly(&Poly::q())
            .inverse_mod(&m)
            .ok_or_else(|| ArithError::NotInvertible(modulus.to_string()))?;
        q_inv.pow_mod((-shift) as u32, &m)
    };
    value = value.mul(&q_factor).rem(&m);
    if !expr.den().is_one() {
        let inv = RatPoly::from_poly(expr.den())
            .inverse_mod(&m)
            .ok_or_else(|| ArithError::NotInvertible(modulus.to_string()))?;
        value = value.mul(&inv).rem(&m);
    }
    Ok(value.into_residue())
}

/// Dense polynomial over Q, only what modular inversion needs.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<Rational>);

impl RatPoly {
    fn from_poly(p: &Poly) -> Self {
        RatPoly(
            p.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly(out).trimmed()
    }

    fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        RatPoly(out).trimmed()
    }

    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let m = divisor.0.len();
        let lc = divisor.0.last().expect("nonzero divisor").clone();
        let mut rem = self.0.clone();
        if rem.len() < m {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - m + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + m - 1] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        (RatPoly(quot).trimmed(), RatPoly(rem).trimmed())
    }

    fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.div_rem(divisor).1
    }

    /// Inverse modulo `m` by the extended Euclidean algorithm.
    fn inverse_mod(&self, m: &RatPoly) -> Option<RatPoly> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (RatPoly(Vec::new()), RatPoly(vec![Rational::one()]));
        while !r1.is_zero() {
            let (quot, r2) = r0.div_rem(&r1);
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        if r0.0.len() != 1 {
            return None;
        }
        let c = r0.0[0].recip();
        Some(RatPoly(s0.0.into_iter().map(|x| x * &c).collect()).rem(m))
    }

    fn pow_mod(&self, mut e: u32, m: &RatPoly) -> RatPoly {
        let mut base = self.rem(m);
        let mut acc = RatPoly(vec![Rational::one()]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    fn into_residue(self) -> Residue {
        if self.is_zero() {
            return Residue {
                scale: Rational::zero(),
                poly: Poly::zero(),
            };
        }
        let den_lcm = self
            .0
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let poly = Poly::new(ints);
        let content = poly.content();
        let mut prim = poly.div_scalar_exact(&content);
        let mut scale = Rational::new(content, den_lcm);
        if prim.leading_coeff().is_some_and(Signed::is_negative) {
            prim = -prim;
            scale = -scale;
        }
        Residue { scale, poly: prim }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, LaurentPoly};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn qe(c: &[i64]) -> QExpr {
        QExpr::from(p(c))
    }

    #[test]
    fn modulus_merges_and_sorts() {
        let m = CycloModulus::from_factors([(5, 1), (2, 1), (5, 3), (7, 0)]).unwrap();
        assert_eq!(m.factors(), &[(2, 1), (5, 4)]);
        assert_eq!(m.to_string(), "Phi_2*Phi_5^4");
        assert_eq!(
            CycloModulus::from_factors([(0, 1)]),
            Err(ArithError::ZeroIndex)
        );
        assert_eq!(CycloModulus::phi_pow(2, 2).to_poly(), p(&[1, 2, 1]));
    }

    #[test]
    fn q_pow_n_is_one_mod_phi_n() {
        let v = check_congruence(&QExpr::q_pow(5), &QExpr::one(), &CycloModulus::phi_pow(5, 1));
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn q_power_expansion_mod_phi_squared() {
        // q^{2*3} against 1 - 2(1 - q^3), modulo Φ_3^2
        let rhs = &QExpr::one() - &(&QExpr::from_int(2) * &qe(&[1, 0, 0, -1]));
        let v = check_congruence(&QExpr::q_pow(6), &rhs, &CycloModulus::phi_pow(3, 2));
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.factors[0].val_num, Valuation::Finite(2));
        // not a congruence modulo Φ_3^3
        let v = check_congruence(&QExpr::q_pow(6), &rhs, &CycloModulus::phi_pow(3, 3));
        assert_eq!(v.status, Status::Fails);
    }

    #[test]
    fn pole_at_modulus_is_ill_posed() {
        let phi3 = cyclotomic(3).unwrap();
        let lhs = QExpr::ratio(&Poly::one(), &phi3);
        let v = check_congruence(&lhs, &QExpr::zero(), &CycloModulus::phi_pow(3, 1));
        assert_eq!(v.status, Status::IllPosed);
        assert!(!is_admissible(&lhs, 3));
        assert!(is_admissible(&lhs, 5));
    }

    #[test]
    fn cancelling_poles_are_compared_on_the_difference() {
        let phi3 = cyclotomic(3).unwrap();
        let x = &QExpr::ratio(&Poly::one(), &phi3) + &QExpr::from(p(&[-1, 0, 0, 1]));
        let y = QExpr::ratio(&Poly::one(), &phi3);
        let v = check_congruence(&x, &y, &CycloModulus::phi_pow(3, 1));
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn identical_sides_have_infinite_valuation() {
        let x = QExpr::ratio(&p(&[1, 2]), &p(&[3, 1]));
        let v = check_congruence(&x, &x, &CycloModulus::phi_pow(7, 9));
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.factors[0].val_num, Valuation::Infinity);
    }

    #[test]
    fn integer_congruences() {
        let nine = int(9);
        let v = check_int_congruence(&rat(1, 2), &rat(5, 1), &nine).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.factors, vec![FactorDiag { d: 3, required: 2, val_num: Valuation::Finite(2), val_den: Valuation::Finite(0) }]);
        let v = check_int_congruence(&rat(1, 3), &rat(0, 1), &nine).unwrap();
        assert_eq!(v.status, Status::IllPosed);
        let v = check_int_congruence(&rat(7, 1), &rat(7, 1), &int(25)).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = check_int_congruence(&rat(1, 1), &rat(4, 1), &nine).unwrap();
        assert_eq!(v.status, Status::Fails);
        let v = check_int_congruence(&rat(1, 1), &rat(4, 1), &int(1)).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.factors.is_empty());
        assert!(check_int_congruence(&rat(1, 1), &rat(4, 1), &int(0)).is_err());
    }

    #[test]
    fn integer_factorization() {
        assert_eq!(factor_integer(&int(360)), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_integer(&int(169)), vec![(13, 2)]);
        assert!(factor_integer(&int(1)).is_empty());
    }

    #[test]
    fn reduce_mod_examples() {
        let r = reduce_mod(&QExpr::q_pow(5), &CycloModulus::phi_pow(5, 1)).unwrap();
        assert_eq!(r.poly, Poly::one());
        assert_eq!(r.scale, rat(1, 1));
        let r = reduce_mod(&qe(&[1, 2, 1]), &CycloModulus::phi_pow(2, 2)).unwrap();
        assert!(r.is_zero());
        let e = QExpr::ratio(&p(&[1, 1, 1]), &Poly::one());
        assert!(reduce_mod(&e, &CycloModulus::phi_pow(3, 1)).unwrap().is_zero());
    }

    #[test]
    fn reduce_mod_inverts_denominators_and_negative_powers() {
        // 1/q mod Φ_3: q^2 ≡ -1 - q
        let r = reduce_mod(&QExpr::q_pow(-1), &CycloModulus::phi_pow(3, 1)).unwrap();
        assert_eq!(r.to_qexpr(), qe(&[-1, -1]));
        // 1/2 stays a scalar
        let half = QExpr::from_rational(&rat(1, 2));
        let r = reduce_mod(&half, &CycloModulus::phi_pow(5, 2)).unwrap();
        assert_eq!(r.scale, rat(1, 2));
        assert_eq!(r.poly, Poly::one());
        // the residue is congruent to the input
        let x = QExpr::normalize(LaurentPoly::new(p(&[3, 1, 4]), -2), p(&[1, 0, 1])).unwrap();
        let m = CycloModulus::from_factors([(3, 2), (5, 1)]).unwrap();
        let r = reduce_mod(&x, &m).unwrap();
        assert!(r.poly.degree().unwrap() < m.to_poly().degree().unwrap());
        assert!(check_congruence(&x, &r.to_qexpr(), &m).holds());
    }

    #[test]
    fn reduce_mod_rejects_shared_factors() {
        let e = QExpr::ratio(&Poly::one(), &p(&[1, 1]));
        assert!(matches!(
            reduce_mod(&e, &CycloModulus::phi_pow(2, 1)),
            Err(ArithError::NotInvertible(_))
        ));
    }
}
