//! Statements over the integers and rationals: the q = 1 corollary, the
//! Apéry-type divisibility, the alternating power-sum identity and its
//! harmonic shadow mod p.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, Integer, Rational};
use crate::congruence::Verdict;
use crate::euler::{alt_power_sum_formula, euler_polynomial};

use super::{Built, Variant};

fn ri(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn r64(v: i64) -> Rational {
    ri(Integer::from(v))
}

/// `M_n^*(α) = Σ_{k=0}^{n} C(α+k-1, k) C(α+n, n-k)`.
pub fn m_star(n: i64, alpha: i64) -> Integer {
    (0..=n)
        .map(|k| binomial(alpha + k - 1, k) * binomial(alpha + n, n - k))
        .sum()
}

/// `q_p(2)`: the standard `(2^{p-1} - 1)/p`, or `(2^p - 1)/p` as printed.
pub fn fermat_quotient_two(p: i64, variant: Variant) -> Rational {
    let e = match variant {
        Variant::AsPrinted => p,
        Variant::Corrected => p - 1,
    };
    Rational::new(Integer::from(2).pow(e as u32) - 1, Integer::from(p))
}

fn cor_summand(p: i64, a: i64, k: i64) -> Integer {
    binomial(a + k - 1, k) * binomial(a + p - 1, p - 1 - k)
}

/// First corollary congruence, mod `p²`.
pub fn cor1a(p: i64, a: i64, variant: Variant) -> Built {
    let lhs: Integer = (0..p).map(|k| cor_summand(p, a, k)).sum();
    let e = euler_polynomial((p - 2) as usize);
    let pq = r64(p);
    let rhs = -Rational::one()
        - r64(2) * &pq * fermat_quotient_two(p, variant)
        - &pq * (e.eval_int(0) - e.eval_int(a));
    Built::IntCongruence {
        lhs: ri(lhs),
        rhs,
        modulus: Integer::from(p * p),
    }
}

/// Second corollary congruence, mod `p²`.
pub fn cor1b(p: i64, a: i64, variant: Variant) -> Built {
    let mut inner = Integer::zero();
    let mut lhs = Integer::zero();
    for j in 0..p {
        inner += cor_summand(p, a, j);
        lhs += &inner;
    }
    let e = euler_polynomial((p - 2) as usize);
    let (pq, aq) = (r64(p), r64(a));
    let rhs = -&aq
        - r64(2) * &aq * &pq * fermat_quotient_two(p, variant)
        - &aq * &pq * (e.eval_int(a + 1) + e.eval_int(0));
    Built::IntCongruence {
        lhs: ri(lhs),
        rhs,
        modulus: Integer::from(p * p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryVerdict {
    pub first: Verdict,
    pub second: Verdict,
}

impl CorollaryVerdict {
    pub fn holds(&self) -> bool {
        self.first.holds() && self.second.holds()
    }
}

pub fn verify_corollary(p: i64, alpha: i64, variant: Variant) -> CorollaryVerdict {
    CorollaryVerdict {
        first: cor1a(p, alpha, variant).decide(),
        second: cor1b(p, alpha, variant).decide(),
    }
}

/// `Σ_{k=0}^{n-1} C(n+k, k)² C(n-1, k)² ≡ 0 (mod n)`.
pub fn guozeng_01(n: i64) -> Built {
    let lhs: Integer = (0..n)
        .map(|k| {
            let b = binomial(n + k, k) * binomial(n - 1, k);
            &b * &b
        })
        .sum();
    Built::IntCongruence {
        lhs: ri(lhs),
        rhs: Rational::zero(),
        modulus: Integer::from(n),
    }
}

/// `Σ_{k=1}^{n} (-1)^k k^m` against the Euler-polynomial closed form.
pub fn identity_t0(m: i64, n: i64) -> Built {
    let direct: Integer = (1..=n)
        .map(|k| {
            let v = Integer::from(k).pow(m as u32);
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum();
    Built::Identity {
        lhs: ri(direct),
        rhs: alt_power_sum_formula(&euler_polynomial(m as usize), n as u64),
    }
}

/// `Σ_{k=1}^{α} (-1)^k / k` against the same closed form at `m = p - 2`, mod `p`.
pub fn cong_t0a(p: i64, alpha: i64) -> Built {
    let lhs: Rational = (1..=alpha)
        .map(|k| Rational::new(Integer::from(if k % 2 == 0 { 1 } else { -1 }), Integer::from(k)))
        .sum();
    Built::IntCongruence {
        lhs,
        rhs: alt_power_sum_formula(&euler_polynomial((p - 2) as usize), alpha as u64),
        modulus: Integer::from(p),
    }
}

/// The q = 1 shadow of Pan's first congruence:
/// `Σ_{j=1}^{(p-1)/2} 1/j ≡ -2 q_p(2) (mod p)`.
pub fn pan_shadow(p: i64) -> Built {
    let lhs: Rational = (1..=(p - 1) / 2)
        .map(|j| Rational::new(Integer::one(), Integer::from(j)))
        .sum();
    Built::IntCongruence {
        lhs,
        rhs: -r64(2) * fermat_quotient_two(p, Variant::Corrected),
        modulus: Integer::from(p),
    }
}
