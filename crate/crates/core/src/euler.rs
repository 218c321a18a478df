//! Euler numbers, Euler polynomials, higher-order Euler numbers and the
//! alternating power-sum identities built on them.

use num_traits::{One, Zero};

use crate::arith::{binomial, Integer, Rational};
use crate::congruence::{check_int_congruence, Verdict};
use crate::series::RationalSeries;

/// `E_0 ... E_count` with `2/(e^x + e^{-x}) = Σ E_n x^n / n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerNumberTable {
    values: Vec<Integer>,
}

impl EulerNumberTable {
    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.values.get(n)
    }
}

/// Euler numbers from `Σ_{k=0}^{n} C(2n, 2k) E_{2k} = 0`, `E_0 = 1`.
pub fn euler_numbers(count: usize) -> EulerNumberTable {
    let mut values = vec![Integer::zero(); count + 1];
    values[0] = Integer::one();
    for n in 1..=count / 2 {
        let mut acc = Integer::zero();
        for k in 0..n {
            acc += binomial(2 * n as i64, 2 * k as i64) * &values[2 * k];
        }
        values[2 * n] = -acc;
    }
    EulerNumberTable { values }
}

/// `E_m(x)` with ascending rational coefficients in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPolynomial {
    coeffs: Vec<Rational>,
}

impl EulerPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(Integer::from(x)))
    }

    /// Coefficients of `E_m(x + 1)`.
    pub fn shifted_by_one(&self) -> Vec<Rational> {
        let m = self.degree();
        let mut out = vec![Rational::zero(); m + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            for i in 0..=j {
                out[i] += c * Rational::from_integer(binomial(j as i64, i as i64));
            }
        }
        out
    }
}

/// `E_m(x)` from `2 e^{xt} / (e^t + 1) = Σ E_m(x) t^m / m!`.
///
/// The coefficient of `t^j` in `2/(e^t+1)` comes from inverting the
/// truncated series `(e^t + 1)/2`; multiplying by `e^{xt}` then gives
/// `E_m(x) = Σ_j C(m, j) (j! c_j) x^{m-j}`.
pub fn euler_polynomial(m: usize) -> EulerPolynomial {
    let half = Rational::new(Integer::one(), Integer::from(2));
    let exp = RationalSeries::exp_scaled(&Rational::one(), m);
    let denom = exp.add(&RationalSeries::one(m)).scale(&half);
    let weights = denom
        .inverse()
        .expect("constant term of (e^t+1)/2 is 1")
        .egf_values();
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (j, w) in weights.iter().enumerate() {
        coeffs[m - j] = w * Rational::from_integer(binomial(m as i64, j as i64));
    }
    EulerPolynomial { coeffs }
}

/// Checks `Σ_{k=1}^{n} (-1)^k k^m = ((-1)^n / 2)(E_m(n+1) + (-1)^n E_m(0))`.
pub fn alt_power_sum_check(m: usize, n: u64) -> bool {
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
    alt_power_sum_formula(&euler_polynomial(m), n) == Rational::from_integer(direct)
}

/// Right-hand side of the alternating power-sum identity.
pub fn alt_power_sum_formula(poly: &EulerPolynomial, n: u64) -> Rational {
    let sign = if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let e0 = poly.eval_int(0);
    let inner = poly.eval_int(n as i64 + 1) + &sign * e0;
    sign * inner / Rational::from_integer(Integer::from(2))
}

/// `E_n^{(α)} = Σ_k C(α+k-1, k) C(α+n, n-k) (-1/2)^k Σ_j C(k, j) (k-2j)^n`.
pub fn higher_order_euler(alpha: u32, n: u32) -> Rational {
    let a = alpha as i64;
    let n64 = n as i64;
    let mut total = Rational::zero();
    for k in 0..=n64 {
        let mut inner = Integer::zero();
        for j in 0..=k {
            inner += binomial(k, j) * Integer::from(k - 2 * j).pow(n);
        }
        let weight = binomial(a + k - 1, k) * binomial(a + n64, n64 - k) * inner;
        let half_pow = Rational::new(
            if k % 2 == 0 { Integer::one() } else { -Integer::one() },
            Integer::from(2).pow(k as u32),
        );
        total += Rational::from_integer(weight) * half_pow;
    }
    total
}

/// Decides `Σ_{k=1}^{α} (-1)^k / k ≡ ((-1)^α/2)(E_{p-2}(α+1) + (-1)^α E_{p-2}(0)) (mod p)`.
pub fn alt_harmonic_mod_p_check(alpha: u64, p: u64) -> Verdict {
    let lhs: Rational = (1..=alpha)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(Integer::from(sign), Integer::from(k))
        })
        .sum();
    let rhs = alt_power_sum_formula(&euler_polynomial(p as usize - 2), alpha);
    check_int_congruence(&lhs, &rhs, &Integer::from(p)).expect("p is positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::congruence::Status;

    #[test]
    fn first_euler_numbers() {
        let t = euler_numbers(10);
        let expect = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521];
        assert_eq!(t.values(), expect.map(int).as_slice());
        assert_eq!(euler_numbers(0).values(), &[int(1)]);
    }

    #[test]
    fn euler_recurrence_holds() {
        let t = euler_numbers(40);
        for n in 1..=20 {
            let s: Integer = (0..=n)
                .map(|k| binomial(2 * n, 2 * k) * t.get(2 * k as usize).unwrap())
                .sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(euler_polynomial(0).coeffs(), &[rat(1, 1)]);
        assert_eq!(euler_polynomial(1).coeffs(), &[rat(-1, 2), rat(1, 1)]);
        assert_eq!(euler_polynomial(2).coeffs(), &[rat(0, 1), rat(-1, 1), rat(1, 1)]);
        assert_eq!(
            euler_polynomial(3).coeffs(),
            &[rat(1, 4), rat(0, 1), rat(-3, 2), rat(1, 1)]
        );
    }

    #[test]
    fn reflection_identity() {
        for m in 0..=20 {
            let e = euler_polynomial(m);
            let shifted = e.shifted_by_one();
            for (i, c) in shifted.iter().enumerate() {
                let expect = if i == m { rat(2, 1) } else { rat(0, 1) };
                assert_eq!(c + &e.coeffs()[i], expect, "m = {m}, i = {i}");
            }
        }
    }

    #[test]
    fn half_value_bridge() {
        let t = euler_numbers(20);
        for n in 0..=10usize {
            let v = euler_polynomial(2 * n).eval(&rat(1, 2))
                * Rational::from_integer(Integer::from(4).pow(n as u32));
            assert_eq!(v, Rational::from_integer(t.values()[2 * n].clone()));
        }
    }

    #[test]
    fn power_sum_examples() {
        assert!(alt_power_sum_check(2, 3));
        assert_eq!(alt_power_sum_formula(&euler_polynomial(2), 3), rat(-6, 1));
        assert!(alt_power_sum_check(5, 10));
        // E_m(1) = -E_m(0) only for m >= 1, so m = 0 gives -1 vs 0
        assert!(!alt_power_sum_check(0, 1));
        assert_eq!(alt_power_sum_formula(&euler_polynomial(0), 1), rat(0, 1));
    }

    #[test]
    fn higher_order_examples() {
        assert_eq!(higher_order_euler(1, 0), rat(1, 1));
        assert_eq!(higher_order_euler(1, 2), rat(-1, 1));
        assert_eq!(higher_order_euler(2, 2), rat(-2, 1));
        assert_eq!(higher_order_euler(2, 1), rat(0, 1));
        let t = euler_numbers(16);
        for n in 0..=16 {
            assert_eq!(
                higher_order_euler(1, n),
                Rational::from_integer(t.values()[n as usize].clone())
            );
        }
    }

    #[test]
    fn alternating_harmonic_mod_p() {
        assert_eq!(alt_harmonic_mod_p_check(2, 5).status, Status::Holds);
        assert_eq!(alt_harmonic_mod_p_check(4, 7).status, Status::Holds);
        assert_eq!(alt_harmonic_mod_p_check(1, 3).status, Status::Holds);
    }
}
