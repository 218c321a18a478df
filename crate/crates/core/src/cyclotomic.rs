//! Cyclotomic polynomials and Φ_d-adic valuations.
//!
//! `Φ_n` is obtained by exact division of `q^n - 1` by the already known
//! `Φ_d` for the proper divisors `d` of `n`. Results are memoized in a
//! shared table; a concurrent fill of the same index computes the same
//! polynomial, so whichever write lands last is harmless.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::Poly;
use crate::congruence::CycloModulus;
use crate::error::ArithError;

/// Memo table `n -> Φ_n(q)`.
#[derive(Default)]
pub struct CycloTable {
    memo: RwLock<HashMap<u64, Arc<Poly>>>,
}

impl CycloTable {
    pub fn new() -> Self {
        CycloTable::default()
    }

    /// Shared process-wide table.
    pub fn global() -> &'static CycloTable {
        static TABLE: OnceLock<CycloTable> = OnceLock::new();
        TABLE.get_or_init(CycloTable::new)
    }

    pub fn get(&self, n: u64) -> Result<Arc<Poly>, ArithError> {
        if n == 0 {
            return Err(ArithError::ZeroIndex);
        }
        if let Some(p) = self.memo.read().expect("cyclotomic table poisoned").get(&n) {
            return Ok(Arc::clone(p));
        }
        let mut acc = q_pow_minus_one(n);
        for d in divisors(n) {
            if d < n {
                let phi_d = self.get(d)?;
                acc = acc.exact_div(&phi_d)?;
            }
        }
        let acc = Arc::new(acc);
        self.memo
            .write()
            .expect("cyclotomic table poisoned")
            .insert(n, Arc::clone(&acc));
        Ok(acc)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("cyclotomic table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Φ_n(q)` from the global table.
pub fn cyclotomic(n: u64) -> Result<Arc<Poly>, ArithError> {
    CycloTable::global().get(n)
}

/// `q^n - 1`.
pub fn q_pow_minus_one(n: u64) -> Poly {
    let n = n as usize;
    let mut coeffs = vec![BigInt::from(0); n + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n] += BigInt::one();
    Poly::new(coeffs)
}

/// Independent route via the Möbius product `Φ_n = ∏_{d|n} (q^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_mobius(n: u64) -> Result<Poly, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroIndex);
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &q_pow_minus_one(d),
            -1 => den = &den * &q_pow_minus_one(d),
            _ => {}
        }
    }
    num.exact_div(&den)
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn mobius(n: u64) -> i8 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `[n] = ∏_{d | n, d > 1} Φ_d` as a modulus.
pub fn factor_q_integer(n: u64) -> CycloModulus {
    CycloModulus::from_factors(divisors(n).into_iter().filter(|&d| d > 1).map(|d| (d, 1)))
        .expect("divisors are distinct and positive")
}

/// Exponent of the largest power of `Φ_d` dividing a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Option<u32>", from = "Option<u32>")]
pub enum Valuation {
    Finite(u32),
    /// Valuation of the zero polynomial.
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }
}

impl From<Valuation> for Option<u32> {
    fn from(v: Valuation) -> Self {
        v.finite()
    }
}

impl From<Option<u32>> for Valuation {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Valuation::Infinity, Valuation::Finite)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

pub fn phi_valuation(a: &Poly, d: u64) -> Result<Valuation, ArithError> {
    if a.is_zero() {
        return Ok(Valuation::Infinity);
    }
    let phi = cyclotomic(d)?;
    let mut cur = a.clone();
    let mut v = 0;
    loop {
        match cur.exact_div(&phi) {
            Ok(next) => {
                cur = next;
                v += 1;
            }
            Err(ArithError::NotDivisible) => return Ok(Valuation::Finite(v)),
            Err(e) => return Err(e),
        }
    }
}
