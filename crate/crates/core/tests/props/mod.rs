//! Randomized property checks shared by the property tests and the
//! acceptance run. Each check returns the first counterexample as text.

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qcert_core::arith::binomial;
use qcert_core::congruence::{reduce_mod, verdict_for_difference};
use qcert_core::cyclotomic::{cyclotomic, phi_valuation, Valuation};
use qcert_core::qcomb::{q_binomial, q_fermat_quotient, q_integer, q_pochhammer};
use qcert_core::theorems::{verify_cell, Params, StatementId, Variant, VerdictRecord};
use qcert_core::{check_congruence, CycloModulus, Poly, QExpr, Verdict};

#[allow(dead_code)]
pub type Check = fn(u32) -> Result<(), String>;

#[allow(dead_code)]
pub const ALL: &[(&str, Check)] = &[
    ("poly ring axioms", poly_ring_axioms),
    ("qexpr field axioms", qexpr_field_axioms),
    ("exact division round-trip", exact_div_round_trip),
    ("gcd round-trip", gcd_round_trip),
    ("normalize idempotent", normalize_idempotent),
    ("eval at q=1 is a homomorphism", eval_at_one_homomorphism),
    ("q-binomial symmetry/Pascal/q=1", qbinomial_identities),
    ("plain-definition consistency", plain_definitions),
    ("congruence is an equivalence", congruence_equivalence),
    ("congruence monotone in modulus", congruence_monotone),
    ("unit invariance", unit_invariance),
    ("valuation of a*Phi_d", valuation_shift),
    ("json round-trip", json_round_trip),
];

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

fn poly() -> impl Strategy<Value = Poly> {
    vec(-4i64..=4, 0..6).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qexpr() -> impl Strategy<Value = QExpr> {
    (poly(), nonzero_poly(), -3i64..=3).prop_map(|(n, d, t)| QExpr::ratio(&n, &d).mul_q_pow(t))
}

fn index() -> impl Strategy<Value = u64> {
    1u64..=12
}

pub fn poly_ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (poly(), poly(), poly()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        let same = a.clone();
        prop_assert!((&a - &same).is_zero());
        prop_assert_eq!(-(-&a), a.clone());
        Ok(())
    })
}

pub fn qexpr_field_axioms(cases: u32) -> Result<(), String> {
    run(cases, (qexpr(), qexpr(), qexpr()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let same = a.clone();
        prop_assert!((&a - &same).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), QExpr::one());
        }
        prop_assert!((&a + &b).is_canonical());
        prop_assert!((&a * &c).is_canonical());
        Ok(())
    })
}

pub fn exact_div_round_trip(cases: u32) -> Result<(), String> {
    run(cases, (poly(), nonzero_poly()), |(a, b)| {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        prop_assert!(prod.is_divisible_by(&b).unwrap());
        Ok(())
    })
}

pub fn gcd_round_trip(cases: u32) -> Result<(), String> {
    run(cases, (nonzero_poly(), nonzero_poly(), nonzero_poly()), |(a, b, c)| {
        let g = Poly::gcd_rational(&a, &b).unwrap();
        prop_assert!(a.is_divisible_by(&g).unwrap());
        prop_assert!(b.is_divisible_by(&g).unwrap());
        // gcd(ac, bc) = gcd(a, b) * c up to a rational constant
        let gc = Poly::gcd_rational(&(&a * &c), &(&b * &c)).unwrap();
        let expect = (&g * &c).primitive_part().with_positive_lead();
        prop_assert_eq!(gc, expect);
        // cofactors share nothing
        let (a1, b1) = (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap());
        prop_assert!(Poly::gcd_rational(&a1, &b1).unwrap().is_one());
        Ok(())
    })
}

pub fn normalize_idempotent(cases: u32) -> Result<(), String> {
    run(cases, qexpr(), |x| {
        prop_assert!(x.is_canonical());
        let again = QExpr::normalize(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(again, x);
        Ok(())
    })
}

pub fn eval_at_one_homomorphism(cases: u32) -> Result<(), String> {
    run(cases, (qexpr(), qexpr()), |(a, b)| {
        if let (Ok(va), Ok(vb)) = (a.eval_at_one(), b.eval_at_one()) {
            prop_assert_eq!((&a + &b).eval_at_one().unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval_at_one().unwrap(), &va * &vb);
            prop_assert_eq!((-&a).eval_at_one().unwrap(), -va);
        }
        Ok(())
    })
}

pub fn qbinomial_identities(cases: u32) -> Result<(), String> {
    let cell = (0i64..=24).prop_flat_map(|n| (Just(n), -1i64..=n + 1));
    run(cases, cell, |(n, k)| {
        let b = q_binomial(n, k);
        prop_assert_eq!(&b, &q_binomial(n, n - k));
        prop_assert_eq!(b.eval_at_one(), binomial(n, k));
        if n >= 1 {
            let pascal =
                &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).mul_q_pow(k.max(0) as usize);
            prop_assert_eq!(&b, &pascal);
            let mirror = &q_binomial(n - 1, k) + &q_binomial(n - 1, k - 1).mul_q_pow((n - k).max(0) as usize);
            prop_assert_eq!(&b, &mirror);
        }
        Ok(())
    })
}

pub fn plain_definitions(cases: u32) -> Result<(), String> {
    let cell = (1u64..=16).prop_flat_map(|n| (Just(n), 0u64..=n, 1u64..=6, 1u32..=2, poly()));
    run(cases, cell, |(n, k, d, e, a)| {
        // Gaussian binomial against the Pochhammer quotient
        let lhs = &(&q_binomial(n as i64, k as i64) * &q_pochhammer(1, k)) * &q_pochhammer(1, n - k);
        prop_assert_eq!(lhs, q_pochhammer(1, n));
        // [n] = (1 - q^n)/(1 - q)
        prop_assert_eq!(
            Poly::one_minus_q_pow(n as usize).exact_div(&Poly::one_minus_q_pow(1)).unwrap(),
            q_integer(n)
        );
        // Q_n(2, q) from its defining quotient
        let ratio = QExpr::ratio(&q_pochhammer(2, n - 1), &q_pochhammer(1, n - 1));
        let expect = (&ratio - &QExpr::one()).checked_div(&QExpr::from(q_integer(n))).unwrap();
        prop_assert_eq!(q_fermat_quotient(2, n), expect);
        // congruence verdict agrees with reduction to the residue
        let m = CycloModulus::phi_pow(d, e);
        let v = verdict_for_difference(&QExpr::from(a.clone()), &m);
        prop_assert_eq!(v.holds(), reduce_mod(&QExpr::from(a), &m).unwrap().is_zero());
        Ok(())
    })
}

pub fn congruence_equivalence(cases: u32) -> Result<(), String> {
    run(cases, (qexpr(), qexpr(), poly(), poly(), index(), 1u32..=3), |(a, x, r, s, d, e)| {
        let m = CycloModulus::phi_pow(d, e);
        let step = QExpr::from(cyclotomic(d).unwrap().pow(e));
        let b = &a + &(&step * &QExpr::from(r));
        let c = &b + &(&step * &QExpr::from(s));
        prop_assert!(check_congruence(&a, &a, &m).holds());
        prop_assert!(check_congruence(&a, &b, &m).holds());
        prop_assert!(check_congruence(&b, &a, &m).holds());
        prop_assert!(check_congruence(&b, &c, &m).holds());
        prop_assert!(check_congruence(&a, &c, &m).holds());
        // symmetry on arbitrary pairs, whatever the verdict
        prop_assert_eq!(
            check_congruence(&a, &x, &m).status,
            check_congruence(&x, &a, &m).status
        );
        Ok(())
    })
}

pub fn congruence_monotone(cases: u32) -> Result<(), String> {
    run(cases, (qexpr(), poly(), index(), index(), 1u32..=3), |(a, r, d1, d2, e)| {
        let target = CycloModulus::phi_pow(d1, e).times(&CycloModulus::phi_pow(d2, 1));
        let b = &a + &(&QExpr::from(target.to_poly()) * &QExpr::from(r));
        prop_assert!(check_congruence(&a, &b, &target).holds());
        for e2 in 1..=e {
            prop_assert!(check_congruence(&a, &b, &CycloModulus::phi_pow(d1, e2)).holds());
        }
        prop_assert!(check_congruence(&a, &b, &CycloModulus::phi_pow(d2, 1)).holds());
        Ok(())
    })
}

pub fn unit_invariance(cases: u32) -> Result<(), String> {
    let unit = (-3i64..=3, prop_oneof![-5i64..=-1, 1i64..=5]);
    run(cases, (qexpr(), qexpr(), index(), 1u32..=3, unit, qexpr()), |(a, b, d, e, (t, c), z)| {
        let m = CycloModulus::phi_pow(d, e);
        let u = QExpr::from_int(c).mul_q_pow(t);
        let base = check_congruence(&a, &b, &m).status;
        prop_assert_eq!(check_congruence(&(&u * &a), &(&u * &b), &m).status, base);
        prop_assert_eq!(check_congruence(&(&a + &z), &(&b + &z), &m).status, base);
        Ok(())
    })
}

pub fn valuation_shift(cases: u32) -> Result<(), String> {
    run(cases, (nonzero_poly(), index()), |(a, d)| {
        let phi = cyclotomic(d).unwrap();
        let Valuation::Finite(v) = phi_valuation(&a, d).unwrap() else {
            return Err(TestCaseError::fail("nonzero polynomial has infinite valuation"));
        };
        prop_assert_eq!(phi_valuation(&(&a * &*phi), d).unwrap(), Valuation::Finite(v + 1));
        prop_assert_eq!(phi_valuation(&Poly::zero(), d).unwrap(), Valuation::Infinity);
        Ok(())
    })
}

pub fn json_round_trip(cases: u32) -> Result<(), String> {
    run(cases, (poly(), qexpr(), qexpr(), index(), 1u32..=2), |(p, a, b, d, e)| {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p.clone());
        prop_assert_eq!(Poly::from_decimal_strings(&p.to_decimal_strings()).unwrap(), p);
        let v = check_congruence(&a, &b, &CycloModulus::phi_pow(d, e));
        let s = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<Verdict>(&s).unwrap(), v);
        Ok(())
    })?;
    // records carry parameter maps; keep these to cheap statements
    run(cases.min(200), (1i64..=30, 1i64..=8), |(n, m)| {
        let cells = [
            (StatementId::Guozeng01, Params::new().with("n", n)),
            (StatementId::IdentityT0, Params::new().with("m", m).with("n", n)),
        ];
        for (id, params) in cells {
            let rec = verify_cell(id, &params, Variant::AsPrinted).unwrap();
            let s = serde_json::to_string(&rec).unwrap();
            prop_assert_eq!(serde_json::from_str::<VerdictRecord>(&s).unwrap(), rec);
        }
        Ok(())
    })
}
