//! Instantiation of the q-statements as (lhs, rhs, modulus) triples.
//!
//! Every sum is expanded term by term; no closed forms are substituted.

use crate::arith::{rat, Poly, QExpr};
use crate::congruence::CycloModulus;
use crate::cyclotomic::divisors;
use crate::qcomb::{q_binomial, q_fermat_quotient, q_harmonic, q_integer, HarmonicKind};

use super::{Built, StatementId, Variant};

fn qi(n: i64) -> QExpr {
    QExpr::from(q_integer(n.max(0) as u64))
}

fn qb(n: i64, k: i64) -> QExpr {
    QExpr::from(q_binomial(n, k))
}

fn qp(t: i64) -> QExpr {
    QExpr::q_pow(t)
}

fn c(n: i64, d: i64) -> QExpr {
    QExpr::from_rational(&rat(n, d))
}

fn int(v: i64) -> QExpr {
    QExpr::from_int(v)
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `1 - q^k`
fn one_minus(k: i64) -> QExpr {
    QExpr::from(Poly::one_minus_q_pow(k as usize))
}

/// `1 / (1 - q^k)`
fn inv_one_minus(k: i64) -> QExpr {
    QExpr::ratio(&Poly::one(), &Poly::one_minus_q_pow(k as usize))
}

fn tri(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn sum(lo: i64, hi: i64, f: impl Fn(i64) -> QExpr) -> QExpr {
    (lo..=hi).fold(QExpr::zero(), |acc, k| acc.checked_add(&f(k)))
}

fn poly_sum(lo: i64, hi: i64, f: impl Fn(i64) -> Poly) -> Poly {
    (lo..=hi).fold(Poly::zero(), |acc, k| acc + f(k))
}

fn phi_sq(n: i64) -> CycloModulus {
    CycloModulus::phi_pow(n as u64, 2)
}

fn phi(n: i64) -> CycloModulus {
    CycloModulus::phi_pow(n as u64, 1)
}

/// `T_k = q^{C(k+1,2)} [α+k-1, k] [α+n-1, n-1-k]`, the summand shared by
/// the main theorem and its proof steps.
fn summand(n: i64, a: i64, k: i64) -> Poly {
    (&q_binomial(a + k - 1, k) * &q_binomial(a + n - 1, n - 1 - k)).mul_q_pow(tri(k) as usize)
}

fn summand_sum(n: i64, a: i64, lo: i64) -> QExpr {
    QExpr::from(poly_sum(lo, n - 1, |k| summand(n, a, k)))
}

/// `Σ_{k=1}^{n-1} T_k [k]`
fn weighted_summand_sum(n: i64, a: i64) -> QExpr {
    QExpr::from(poly_sum(1, n - 1, |k| &summand(n, a, k) * &q_integer(k as u64)))
}

/// `Σ_{j=0}^{n-1} q^j Σ_{k=0}^{j} T_k`, accumulated as displayed.
fn double_sum(n: i64, a: i64) -> QExpr {
    let mut inner = Poly::zero();
    let mut outer = Poly::zero();
    for j in 0..n {
        inner = inner + summand(n, a, j);
        outer = outer + inner.mul_q_pow(j as usize);
    }
    QExpr::from(outer)
}

fn fermat(n: i64) -> QExpr {
    q_fermat_quotient(2, n as u64)
}

/// `Σ_{k=1}^{a} (-1)^k / [k]`
fn alt_harmonic(a: i64) -> QExpr {
    q_harmonic(HarmonicKind::Alternating, a as u64)
}

/// `Σ_{k=1}^{a} (-q)^k / [k]`
fn alt_q_harmonic(a: i64) -> QExpr {
    q_harmonic(HarmonicKind::AlternatingQ, a as u64)
}

fn q_congruence(lhs: QExpr, rhs: QExpr, modulus: CycloModulus) -> Built {
    Built::QCongruence { lhs, rhs, modulus }
}

/// Main theorem, first congruence (mod Φ_n²).
pub fn t1(n: i64, a: i64) -> Built {
    let qn = qi(n);
    let lhs = summand_sum(n, a, 0);
    let rhs = &(&qn * &one_minus(1)).scale(&rat(2, 1))
        + &(&(&(&qp(a) * &qn).scale(&rat(2, 1)) - &qi(a)) / &qi(a))
        - (&qn * &fermat(n)).scale(&rat(2, 1))
        - (&qn * &alt_harmonic(a)).scale(&rat(2, 1));
    q_congruence(lhs, rhs, phi_sq(n))
}

/// Main theorem, second congruence (mod Φ_n²).
pub fn t2(n: i64, a: i64) -> Built {
    let (qn, qa) = (qi(n), qi(a));
    let weight = (&(&qa * &qn) * &qp(-a)).scale(&rat(2, 1));
    let rhs = -&qn
        - &(&qa - &qn) * &qp(-a)
        - &weight * &fermat(n)
        - &weight * &alt_q_harmonic(a);
    q_congruence(double_sum(n, a), rhs, phi_sq(n))
}

pub fn lemma_a1(n: i64) -> Built {
    let h = (n - 1) / 2;
    let lhs = sum(1, n - 1, |k| inv_one_minus(k).scale(&rat(sign(k), 1)));
    let rhs = sum(1, h, |k| inv_one_minus(2 * k)).scale(&rat(2, 1)) - c(n - 1, 2);
    q_congruence(lhs, rhs, phi(n))
}

pub fn lemma_a2(n: i64) -> Built {
    let h = (n - 1) / 2;
    let lhs = sum(1, h, |k| inv_one_minus(2 * k));
    let rhs = -(&fermat(n) * &inv_one_minus(1));
    q_congruence(lhs, rhs, phi(n))
}

pub fn step_a3(n: i64, a: i64) -> Built {
    let lhs = sum(1, n - 1, |k| inv_one_minus(k + a).scale(&rat(sign(k), 1)));
    let rhs = -sum(1, a, |k| inv_one_minus(k).scale(&rat(sign(k), 1))).scale(&rat(2, 1))
        - (&fermat(n) * &inv_one_minus(1)).scale(&rat(2, 1))
        - inv_one_minus(n)
        - c(n - 1, 2)
        + inv_one_minus(a);
    q_congruence(lhs, rhs, phi(n))
}

pub fn step_a4(n: i64, a: i64, k: i64) -> Built {
    let lhs = qb(a + n - 1, a + k);
    let den = &one_minus(a + k) * &qb(a + k - 1, k);
    let rhs = &(&one_minus(n) * &qp(-tri(k))).scale(&rat(sign(k), 1)) / &den;
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a5(n: i64, a: i64) -> Built {
    let tail = &(&qb(n - 1, n - a) * &qb(n + a - 1, a - 1)) * &qp(tri(n - a));
    let lhs = &summand_sum(n, a, 1) - &tail;
    let inner = sum(1, n - 1, |k| inv_one_minus(k + a).scale(&rat(sign(k), 1)));
    let rhs = &(&one_minus(n) * &inner) + &int(1);
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a6(n: i64, a: i64) -> Built {
    let lhs = qb(n + a - 1, a - 1);
    let inner = sum(1, a - 1, |i| &(&int(1) + &qp(i)) * &inv_one_minus(i));
    let bracket = &int(1) + &(&one_minus(n) * &inner);
    let rhs = (&(&qb(n - 1, n - a) * &qp(a * (a - 1) / 2)) * &bracket).scale(&rat(sign(a - 1), 1));
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a7(n: i64, a: i64, variant: Variant) -> Built {
    let lhs = qb(n - 1, a - 1);
    let mut inner = sum(1, a - 1, inv_one_minus);
    if variant == Variant::Corrected {
        inner = &one_minus(n) * &inner;
    }
    let rhs = (&qp(-(a * (a - 1) / 2)) * &(&int(1) - &inner)).scale(&rat(sign(a - 1), 1));
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a8(n: i64, a: i64) -> Built {
    let lhs = &qb(n - 1, a - 1) * &qb(n + a - 1, a - 1);
    let unit = qp(-(a * (a - 1) / 2));
    let rhs = &(&unit * &one_minus(n)).scale(&rat(a - 1, 1)) - &unit;
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a9_0(n: i64, t: i64) -> Built {
    let rhs = &int(1) - &one_minus(n).scale(&rat(t, 1));
    q_congruence(qp(t * n), rhs, phi_sq(n))
}

pub fn step_a9(n: i64, a: i64) -> Built {
    let lhs = qp(tri(n - a) - a * (a - 1) / 2);
    let rhs = &int(1) + &one_minus(n).scale(&rat(2 * a - n - 1, 2));
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_a10(n: i64, a: i64) -> Built {
    let (qn, qa) = (qi(n), qi(a));
    let rhs = (&qn * &one_minus(1)).scale(&rat(2, 1))
        + &(&(&qn * &(&qp(a).scale(&rat(2, 1)) - &int(1))) - &qa) / &qa
        - (&qn * &fermat(n)).scale(&rat(2, 1))
        - (&qn * &alt_harmonic(a)).scale(&rat(2, 1));
    q_congruence(summand_sum(n, a, 1), rhs, phi_sq(n))
}

pub fn step_a11_a12(n: i64, a: i64) -> Built {
    let rhs = &summand_sum(n, a, 1) + &(&qi(n) / &qi(a));
    q_congruence(summand_sum(n, a, 0), rhs, phi_sq(n))
}

pub fn step_b1(n: i64, a: i64, variant: Variant) -> Built {
    let lead = match variant {
        Variant::AsPrinted => qi(n),
        Variant::Corrected => -qi(n),
    };
    let rhs = &lead - &weighted_summand_sum(n, a);
    q_congruence(double_sum(n, a), rhs, phi_sq(n))
}

pub fn step_b2(n: i64, a: i64) -> Built {
    let tail = &(&(&qi(n - a) * &qb(n - 1, n - a)) * &qb(a + n - 1, n)) * &qp(tri(n - a));
    let lhs = &weighted_summand_sum(n, a) - &tail;
    let inner = sum(1, n - 1, |k| {
        (&qi(k) * &inv_one_minus(k + a)).scale(&rat(sign(k), 1))
    });
    let rhs = &(&one_minus(n) * &inner) + &qi(n - a);
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_b3(n: i64) -> Built {
    let lhs = sum(1, n - 1, |k| {
        (&qp(k) * &inv_one_minus(k)).scale(&rat(sign(k), 1))
    });
    let rhs = -c(n - 1, 2) - (&inv_one_minus(1) * &fermat(n)).scale(&rat(2, 1));
    q_congruence(lhs, rhs, phi(n))
}

pub fn step_b4(n: i64, a: i64) -> Built {
    let lhs = sum(1, n - 1, |k| {
        (&qp(k) * &inv_one_minus(k + a)).scale(&rat(sign(k), 1))
    });
    let bracket = &one_minus(1).scale(&rat(1 - n, 2))
        - &fermat(n).scale(&rat(2, 1))
        - alt_q_harmonic(a).scale(&rat(2, 1))
        - &qp(n) / &qi(n)
        + &qp(a) / &qi(a);
    let rhs = &(&qp(-a) * &inv_one_minus(1)) * &bracket;
    q_congruence(lhs, rhs, phi(n))
}

pub fn step_b5(n: i64, a: i64) -> Built {
    let lhs = qp(tri(n - a) - tri(a));
    let rhs = &qp(-a) + &(&one_minus(n) * &qp(-a)).scale(&rat(2 * a - n - 1, 2));
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_b6(n: i64, a: i64, variant: Variant) -> Built {
    let (qn, qa) = (qi(n), qi(a));
    let lhs = &(&(&qi(n - a) * &qb(a + n - 1, n)) * &qb(n - 1, n - a)) * &qp(tri(n - a));
    let factor = match variant {
        Variant::AsPrinted => rat(2 * a - n - 1, 1),
        Variant::Corrected => rat(2 * a - n - 1, 2),
    };
    let first = &int(1) + &one_minus(n).scale(&factor);
    let second = &(&qa - &(&(&qa * &qn) * &one_minus(1)).scale(&rat(a - 1, 1))) - &qn;
    let rhs = &(&first * &second) * &qp(-a);
    q_congruence(lhs, rhs, phi_sq(n))
}

pub fn step_b7(n: i64, a: i64) -> Built {
    let (qn, qa) = (qi(n), qi(a));
    let weight = (&(&qa * &qn) * &qp(-a)).scale(&rat(2, 1));
    let rhs = &(&qa - &qn) * &qp(-a) + &weight * &fermat(n) + &weight * &alt_q_harmonic(a);
    q_congruence(weighted_summand_sum(n, a), rhs, phi_sq(n))
}

/// Gu-Guo: `Σ q^{(n-k)²} [n+k,k]² [n-1,k]² ≡ q[n] (mod Φ_n²)`.
pub fn guguo(n: i64) -> Built {
    let lhs = poly_sum(0, n - 1, |k| {
        let b = &q_binomial(n + k, k) * &q_binomial(n - 1, k);
        b.pow(2).mul_q_pow(((n - k) * (n - k)) as usize)
    });
    let rhs = &qp(1) * &qi(n);
    q_congruence(QExpr::from(lhs), rhs, phi_sq(n))
}

/// `Σ q^{r(n-k)²+(r-1)k} [n+k,k]^{2r} [n-1,k]^{2r}` against its two-term
/// expansion, modulo `[n] Φ_n³`.
pub fn gsz_03(n: i64, r: i64) -> Built {
    let lhs = poly_sum(0, n - 1, |k| {
        let b = &q_binomial(n + k, k) * &q_binomial(n - 1, k);
        b.pow(2 * r as u32)
            .mul_q_pow((r * (n - k) * (n - k) + (r - 1) * k) as usize)
    });
    let qn = qi(n);
    let correction = (&(&qp(1) * &one_minus(1).pow(2)) * &qn.pow(3))
        .scale(&rat(r * (2 * r - 1) * (n - 1) * (n - 1), 4));
    let rhs = &(&qp((r - 1) * n + 1) * &qn) - &correction;
    let mut factors: Vec<(u64, u32)> = divisors(n as u64)
        .into_iter()
        .filter(|&d| d > 1 && d != n as u64)
        .map(|d| (d, 1))
        .collect();
    factors.push((n as u64, 4));
    let modulus = CycloModulus::from_factors(factors).expect("positive indices");
    q_congruence(QExpr::from(lhs), rhs, modulus)
}

/// `Σ_{j=1}^{(p-1)/2} 1/[2j]`
fn half_harmonic(p: i64) -> QExpr {
    q_harmonic(HarmonicKind::PlainEven, ((p - 1) / 2) as u64)
}

/// Pan's first congruence (mod Φ_p²).
pub fn pan1(p: i64) -> Built {
    let qf = fermat(p);
    let qpp = qi(p);
    let lhs = half_harmonic(p).scale(&rat(2, 1)) + qf.scale(&rat(2, 1)) - &qf.pow(2) * &qpp;
    let inner = &(&qf * &one_minus(1)) + &one_minus(1).pow(2).scale(&rat(p * p - 1, 8));
    let rhs = &inner * &qpp;
    q_congruence(lhs, rhs, phi_sq(p))
}

/// Pan's second congruence (mod Φ_p²). The corrected form drops the
/// factor 2 in front of the alternating sum.
pub fn pan2(p: i64, variant: Variant) -> Built {
    let alt = alt_harmonic(p - 1);
    let lhs = match variant {
        Variant::AsPrinted => alt.scale(&rat(2, 1)),
        Variant::Corrected => alt,
    };
    let rhs = half_harmonic(p).scale(&rat(2, 1))
        - one_minus(1).scale(&rat(p - 1, 2))
        - (&one_minus(1).pow(2) * &qi(p)).scale(&rat(p * p - 1, 24));
    q_congruence(lhs, rhs, phi_sq(p))
}

/// Builds a q-statement from already validated parameters.
pub(super) fn build_q(id: StatementId, get: impl Fn(&str) -> i64, variant: Variant) -> Built {
    use StatementId::*;
    let n = || get("n");
    let a = || get("alpha");
    match id {
        T1 => t1(n(), a()),
        T2 => t2(n(), a()),
        LemmaA1 => lemma_a1(n()),
        LemmaA2 => lemma_a2(n()),
        StepA3 => step_a3(n(), a()),
        StepA4 => step_a4(n(), a(), get("k")),
        StepA5 => step_a5(n(), a()),
        StepA6 => step_a6(n(), a()),
        StepA7 => step_a7(n(), a(), variant),
        StepA8 => step_a8(n(), a()),
        StepA9_0 => step_a9_0(n(), get("t")),
        StepA9 => step_a9(n(), a()),
        StepA10 => step_a10(n(), a()),
        StepA11A12 => step_a11_a12(n(), a()),
        StepB1 => step_b1(n(), a(), variant),
        StepB2 => step_b2(n(), a()),
        StepB3 => step_b3(n()),
        StepB4 => step_b4(n(), a()),
        StepB5 => step_b5(n(), a()),
        StepB6 => step_b6(n(), a(), variant),
        StepB7 => step_b7(n(), a()),
        Guguo => guguo(n()),
        Gsz03 => gsz_03(n(), get("r")),
        Pan1 => pan1(get("p")),
        Pan2 => pan2(get("p"), variant),
        _ => unreachable!("{} is not a q-statement", id.as_str()),
    }
}

/// Both of Pan's congruences for an odd prime `p`.
pub fn pan_statements(p: i64, variant: Variant) -> [Built; 2] {
    [pan1(p), pan2(p, variant)]
}
