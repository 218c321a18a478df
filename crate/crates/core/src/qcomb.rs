//! Constructors for the q-objects: q-integers, q-Pochhammer symbols,
//! Gaussian binomials, q-power units, q-Fermat quotients and q-harmonic sums.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{LaurentPoly, Poly, QExpr};

/// `[n] = 1 + q + ... + q^{n-1}`; zero for `n = 0`.
pub fn q_integer(n: u64) -> Poly {
    Poly::new(vec![BigInt::one(); n as usize])
}

/// `[n]` as an expression.
pub fn q_int(n: u64) -> QExpr {
    QExpr::from(q_integer(n))
}

/// `(q^m; q^m)_k = ∏_{j=1}^{k} (1 - q^{m j})`.
pub fn q_pochhammer(m: u64, k: u64) -> Poly {
    (1..=k).fold(Poly::one(), |acc, j| {
        acc.mul_one_minus_q_pow((m * j) as usize)
    })
}

type BinomialCache = RwLock<HashMap<(u64, u64), Arc<Poly>>>;

fn binomial_cache() -> &'static BinomialCache {
    static CACHE: OnceLock<BinomialCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Gaussian binomial coefficient; zero unless `0 <= k <= n`.
///
/// Computed as `∏_{i=1}^{k} (1 - q^{n-k+i}) / (q;q)_k` (the common factor
/// `(q;q)_{n-k}` of the defining quotient cancelled), dividing out one
/// factor `1 - q^i` at a time. Every intermediate quotient is itself a
/// Gaussian binomial times a polynomial, so each division is exact.
pub fn q_binomial(n: i64, k: i64) -> Poly {
    if k < 0 || n < 0 || k > n {
        return Poly::zero();
    }
    let (n, k) = (n as u64, k.min(n - k) as u64);
    if let Some(hit) = binomial_cache().read().expect("cache poisoned").get(&(n, k)) {
        return (**hit).clone();
    }
    let mut acc = Poly::one();
    for i in 1..=k {
        acc = acc.mul_one_minus_q_pow((n - k + i) as usize);
    }
    for i in 1..=k {
        acc = acc
            .div_one_minus_q_pow(i as usize)
            .expect("q-binomial quotient is always exact");
    }
    binomial_cache()
        .write()
        .expect("cache poisoned")
        .insert((n, k), Arc::new(acc.clone()));
    acc
}

/// Gaussian binomial as an expression.
pub fn q_binom(n: i64, k: i64) -> QExpr {
    QExpr::from(q_binomial(n, k))
}

/// The unit `q^t`.
pub fn q_power(t: i64) -> LaurentPoly {
    LaurentPoly::q_pow(t)
}

/// `Q_n(m, q) = ((q^m;q^m)_{n-1} / (q;q)_{n-1} - 1) / [n]`.
pub fn q_fermat_quotient(m: u64, n: u64) -> QExpr {
    assert!(m >= 1 && n >= 1, "q-Fermat quotient needs m, n >= 1");
    let inner = if m == 2 {
        // (q^2;q^2)_{n-1} / (q;q)_{n-1} = ∏ (1 + q^k)
        let prod = (1..n).fold(Poly::one(), |acc, k| {
            let mut f = Poly::one();
            f += &Poly::monomial(BigInt::one(), k as usize);
            &acc * &f
        });
        QExpr::from(prod)
    } else {
        QExpr::ratio(&q_pochhammer(m, n - 1), &q_pochhammer(1, n - 1))
    };
    let shifted = &inner - &QExpr::one();
    QExpr::ratio(&Poly::one(), &q_integer(n)).checked_mul(&shifted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HarmonicKind {
    /// `Σ 1/[2k]`
    PlainEven,
    /// `Σ (-1)^k/[k]`
    Alternating,
    /// `Σ (-q)^k/[k]`
    AlternatingQ,
}

/// `Σ_{k=1}^{bound}` of the chosen q-harmonic term, accumulated left to right.
pub fn q_harmonic(kind: HarmonicKind, bound: u64) -> QExpr {
    let mut acc = QExpr::zero();
    for k in 1..=bound {
        let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
        let term = match kind {
            HarmonicKind::PlainEven => QExpr::ratio(&Poly::one(), &q_integer(2 * k)),
            HarmonicKind::Alternating => QExpr::ratio(&Poly::from(sign), &q_integer(k)),
            HarmonicKind::AlternatingQ => QExpr::ratio(
                &Poly::monomial(BigInt::from(sign), k as usize),
                &q_integer(k),
            ),
        };
        acc = acc.checked_add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat};
    use crate::congruence::is_admissible;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), Poly::one());
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
    }

    #[test]
    fn pochhammers() {
        assert_eq!(q_pochhammer(1, 0), Poly::one());
        assert_eq!(q_pochhammer(1, 2), p(&[1, -1, -1, 1]));
        assert_eq!(
            q_pochhammer(2, 2),
            &Poly::one_minus_q_pow(2) * &Poly::one_minus_q_pow(4)
        );
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0), Poly::one());
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(7, 1), q_integer(7));
    }

    #[test]
    fn binomial_matches_full_definition() {
        for n in 0..12 {
            for k in 0..=n {
                let full = q_pochhammer(1, n)
                    .exact_div(&(&q_pochhammer(1, k) * &q_pochhammer(1, n - k)))
                    .unwrap();
                assert_eq!(q_binomial(n as i64, k as i64), full);
            }
        }
    }

    #[test]
    fn binomial_at_one_is_ordinary() {
        for n in 0..20 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k).eval_at_one(), binomial(n, k));
            }
        }
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(q_fermat_quotient(2, 3), QExpr::q_pow(1));
        assert!(q_fermat_quotient(2, 1).is_zero());
        assert_eq!(q_fermat_quotient(2, 5).eval_at_one(), Ok(rat(3, 1)));
        // q -> 1 gives (m^{n-1} - 1)/n
        assert_eq!(q_fermat_quotient(3, 5).eval_at_one(), Ok(rat(80, 5)));
    }

    #[test]
    fn fermat_quotient_denominator_free_of_phi_n() {
        for n in (3..=21).step_by(2) {
            assert!(is_admissible(&q_fermat_quotient(2, n), n), "n = {n}");
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(
            q_harmonic(HarmonicKind::Alternating, 2),
            QExpr::ratio(&p(&[0, -1]), &p(&[1, 1]))
        );
        assert!(q_harmonic(HarmonicKind::AlternatingQ, 0).is_zero());
        assert_eq!(
            q_harmonic(HarmonicKind::PlainEven, 1),
            QExpr::ratio(&Poly::one(), &p(&[1, 1]))
        );
        // q -> 1 recovers the classical alternating harmonic number
        assert_eq!(
            q_harmonic(HarmonicKind::Alternating, 4).eval_at_one(),
            Ok(rat(-7, 12))
        );
        assert_eq!(
            q_harmonic(HarmonicKind::AlternatingQ, 4).eval_at_one(),
            Ok(rat(-7, 12))
        );
    }

    #[test]
    fn q_power_units() {
        assert_eq!(q_power(0), LaurentPoly::one());
        assert_eq!(q_power(3).to_poly(), Some(Poly::monomial(BigInt::one(), 3)));
        assert_eq!(q_power(-2).shift(), -2);
    }
}
