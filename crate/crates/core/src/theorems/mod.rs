//! Registry of parameterized statements: the main q-supercongruences,
//! every intermediate congruence of their proofs, the literature results
//! they build on, and the integer-side corollaries.
//!
//! Each statement compiles to a [`Built`] triple and is decided exactly.
//! Where a statement fails as written, a corrected variant sits beside it;
//! the two are never conflated.

pub mod build;
pub mod classical;
pub mod grid;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Integer, QExpr, Rational};
use crate::congruence::{check_congruence, check_int_congruence, CycloModulus, FactorDiag, Status, Verdict};

pub use build::pan_statements;
pub use classical::{m_star, verify_corollary, CorollaryVerdict};
pub use grid::{ParamGrid, ParamSpec, Params, Parity};

use grid::{even_range, is_prime, odd_range};

macro_rules! statements {
    ($($variant:ident => $tag:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(try_from = "String", into = "String")]
        pub enum StatementId {
            $($variant),*
        }

        impl StatementId {
            pub const ALL: &'static [StatementId] = &[$(StatementId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(StatementId::$variant => $tag),*
                }
            }
        }

        impl FromStr for StatementId {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($tag => Ok(StatementId::$variant),)*
                    _ => Err(format!("unknown statement {s:?}")),
                }
            }
        }
    };
}

statements! {
    T1 => "t1",
    T2 => "t2",
    Cor1a => "cor1a",
    Cor1b => "cor1b",
    Pan1 => "pan1",
    Pan2 => "pan2",
    Guozeng01 => "guozeng_01",
    Guguo => "guguo",
    Gsz03 => "gsz_03",
    LemmaA1 => "lemma_a1",
    LemmaA2 => "lemma_a2",
    StepA3 => "step_a3",
    StepA4 => "step_a4",
    StepA5 => "step_a5",
    StepA6 => "step_a6",
    StepA7 => "step_a7",
    StepA8 => "step_a8",
    StepA9_0 => "step_a9_0",
    StepA9 => "step_a9",
    StepA10 => "step_a10",
    StepA11A12 => "step_a11_a12",
    StepB1 => "step_b1",
    StepB2 => "step_b2",
    StepB3 => "step_b3",
    StepB4 => "step_b4",
    StepB5 => "step_b5",
    StepB6 => "step_b6",
    StepB7 => "step_b7",
    IdentityT0 => "identity_t0",
    CongT0a => "cong_t0a",
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<StatementId> for String {
    fn from(id: StatementId) -> String {
        id.as_str().to_string()
    }
}

impl TryFrom<String> for StatementId {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// Which form of a statement to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    #[default]
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "as_printed" => Ok(Variant::AsPrinted),
            "corrected" | "standard_fermat_quotient" => Ok(Variant::Corrected),
            _ => Err(format!("unknown variant {s:?}")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Congruence in Z[q] modulo cyclotomic factors.
    Q,
    /// Congruence between rationals modulo an integer.
    Int,
    /// Exact equality of rationals.
    Identity,
}

/// Registry metadata for one statement.
#[derive(Debug, Clone, Copy)]
pub struct StatementInfo {
    pub id: StatementId,
    pub title: &'static str,
    pub hypotheses: &'static str,
    pub params: &'static [&'static str],
    pub kind: Kind,
    /// What the corrected variant changes, if there is one.
    pub correction: Option<&'static str>,
}

const N_ALPHA: &[&str] = &["n", "alpha"];
const ODD_N_EVEN_ALPHA: &str = "n odd, alpha even, 2 <= alpha <= n";

impl StatementId {
    pub fn info(self) -> StatementInfo {
        use Kind::*;
        use StatementId::*;
        let (title, hypotheses, params, kind, correction): (_, _, &'static [&'static str], _, _) = match self {
            T1 => (
                "sum_{k<n} q^{C(k+1,2)} [a+k-1,k][a+n-1,n-1-k] against 2[n](1-q) + (2q^a[n]-[a])/[a] - 2[n]Q_n - 2[n] sum_{k<=a} (-1)^k/[k], mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            T2 => (
                "sum_{j<n} q^j sum_{k<=j} T_k against -[n] - ([a]-[n])/q^a - 2[a][n]q^{-a}(Q_n + sum_{k<=a} (-q)^k/[k]), mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            Cor1a => (
                "M*_{p-1}(a) = -1 - 2p q_p(2) - p(E_{p-2}(0) - E_{p-2}(a)) mod p^2",
                "p odd prime, alpha even, alpha <= p-1", &["p", "alpha"], Int,
                Some("q_p(2) = (2^{p-1}-1)/p instead of (2^p-1)/p"),
            ),
            Cor1b => (
                "sum_j sum_{k<=j} C(a+k-1,k)C(a+p-1,p-1-k) = -a - 2ap q_p(2) - ap(E_{p-2}(a+1) + E_{p-2}(0)) mod p^2",
                "p odd prime, alpha even, alpha <= p-1", &["p", "alpha"], Int,
                Some("q_p(2) = (2^{p-1}-1)/p instead of (2^p-1)/p"),
            ),
            Pan1 => (
                "2 sum_{j<=(p-1)/2} 1/[2j] + 2Q_p - Q_p^2[p] against (Q_p(1-q) + (p^2-1)(1-q)^2/8)[p], mod Phi_p^2",
                "p odd prime", &["p"], Q, None,
            ),
            Pan2 => (
                "2 sum_{j<p} (-1)^j/[j] against 2 sum_{j<=(p-1)/2} 1/[2j] - (p-1)(1-q)/2 - (p^2-1)(1-q)^2[p]/24, mod Phi_p^2",
                "p odd prime", &["p"], Q,
                Some("no factor 2 in front of the alternating sum"),
            ),
            Guozeng01 => (
                "sum_{k<n} C(n+k,k)^2 C(n-1,k)^2 = 0 mod n",
                "n >= 1", &["n"], Int, None,
            ),
            Guguo => (
                "sum_{k<n} q^{(n-k)^2} [n+k,k]^2 [n-1,k]^2 = q[n] mod Phi_n^2",
                "n >= 1", &["n"], Q, None,
            ),
            Gsz03 => (
                "sum_{k<n} q^{r(n-k)^2+(r-1)k} [n+k,k]^{2r}[n-1,k]^{2r} = q^{(r-1)n+1}[n] - r(2r-1)(n-1)^2 q(1-q)^2[n]^3/4 mod [n]Phi_n^3",
                "n >= 2, r >= 1", &["n", "r"], Q, None,
            ),
            LemmaA1 => (
                "sum_{k<n} (-1)^k/(1-q^k) = 2 sum_{k<=(n-1)/2} 1/(1-q^{2k}) - (n-1)/2 mod Phi_n",
                "n odd", &["n"], Q, None,
            ),
            LemmaA2 => (
                "sum_{k<=(n-1)/2} 1/(1-q^{2k}) = -Q_n/(1-q) mod Phi_n",
                "n odd", &["n"], Q, None,
            ),
            StepA3 => (
                "sum_{k<n} (-1)^k/(1-q^{k+a}) = -2 sum_{k<=a} (-1)^k/(1-q^k) - 2Q_n/(1-q) - 1/(1-q^n) - (n-1)/2 + 1/(1-q^a) mod Phi_n",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA4 => (
                "[a+n-1, a+k] = (1-q^n)(-1)^k q^{-C(k+1,2)} / ((1-q^{a+k})[a+k-1,k]) mod Phi_n^2",
                "n odd, alpha even, 2 <= alpha <= n, 0 <= k <= n-1, k != n-alpha", &["n", "alpha", "k"], Q,
                Some("restricted to k < n-alpha"),
            ),
            StepA5 => (
                "sum_{1<=k<n} T_k - q^{C(n-a+1,2)}[n-1,n-a][n+a-1,a-1] = (1-q^n) sum_{k<n} (-1)^k/(1-q^{k+a}) + 1 mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA6 => (
                "[n+a-1,a-1] = [n-1,n-a](-1)^{a-1}q^{C(a,2)}(1 + (1-q^n) sum_{i<a} (1+q^i)/(1-q^i)) mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA7 => (
                "[n-1,a-1] = (-1)^{a-1}q^{-C(a,2)}(1 - sum_{i<a} 1/(1-q^i)) mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q,
                Some("the sum is multiplied by (1-q^n)"),
            ),
            StepA8 => (
                "[n-1,a-1][n+a-1,a-1] = q^{-C(a,2)}((a-1)(1-q^n) - 1) mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA9_0 => (
                "q^{tn} = 1 - t(1-q^n) mod Phi_n^2",
                "n >= 1", &["n", "t"], Q, None,
            ),
            StepA9 => (
                "q^{C(n-a+1,2) - C(a,2)} = 1 + (2a-n-1)(1-q^n)/2 mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA10 => (
                "sum_{1<=k<n} T_k = 2[n](1-q) + ([n](2q^a-1) - [a])/[a] - 2[n]Q_n - 2[n] sum_{k<=a} (-1)^k/[k] mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepA11A12 => (
                "sum_{k<n} T_k = sum_{1<=k<n} T_k + [n]/[a] mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepB1 => (
                "sum_{j<n} q^j sum_{k<=j} T_k = [n] - sum_{1<=k<n} T_k[k] mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q,
                Some("leading term -[n] instead of [n]"),
            ),
            StepB2 => (
                "sum_{1<=k<n} T_k[k] - [n-a][n-1,n-a][a+n-1,n]q^{C(n-a+1,2)} = (1-q^n) sum_{k<n} (-1)^k[k]/(1-q^{k+a}) + [n-a] mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepB3 => (
                "sum_{k<n} (-q)^k/(1-q^k) = -(n-1)/2 - 2Q_n/(1-q) mod Phi_n",
                "n odd", &["n"], Q, None,
            ),
            StepB4 => (
                "sum_{k<n} (-q)^k/(1-q^{k+a}) = q^{-a}/(1-q) ((1-n)(1-q)/2 - 2Q_n - 2 sum_{k<=a} (-q)^k/[k] - q^n/[n] + q^a/[a]) mod Phi_n",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepB5 => (
                "q^{C(n-a+1,2) - C(a+1,2)} = q^{-a} + (2a-n-1)(1-q^n)/(2q^a) mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            StepB6 => (
                "[n-a][a+n-1,n][n-1,n-a]q^{C(n-a+1,2)} = (1 + (2a-n-1)(1-q^n))([a] - (a-1)[a][n](1-q) - [n])q^{-a} mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q,
                Some("factor (2a-n-1)/2 instead of (2a-n-1)"),
            ),
            StepB7 => (
                "sum_{1<=k<n} T_k[k] = ([a]-[n])q^{-a} + 2[a][n]q^{-a}(Q_n + sum_{k<=a} (-q)^k/[k]) mod Phi_n^2",
                ODD_N_EVEN_ALPHA, N_ALPHA, Q, None,
            ),
            IdentityT0 => (
                "sum_{k<=n} (-1)^k k^m = ((-1)^n/2)(E_m(n+1) + (-1)^n E_m(0))",
                "m >= 1, n >= 1", &["m", "n"], Identity, None,
            ),
            CongT0a => (
                "sum_{k<=a} (-1)^k/k = ((-1)^a/2)(E_{p-2}(a+1) + (-1)^a E_{p-2}(0)) mod p",
                "p odd prime, 1 <= alpha <= p-1", &["p", "alpha"], Int, None,
            ),
        };
        StatementInfo {
            id: self,
            title,
            hypotheses,
            params,
            kind,
            correction,
        }
    }

    /// The grid the acceptance run uses.
    pub fn default_grid(self) -> ParamGrid {
        use StatementId::*;
        let primes = [3, 5, 7, 11, 13];
        let g = ParamGrid::new();
        match self {
            T1 | T2 => g.axis("n", odd_range(3, 25)).axis("alpha", even_range(2, 25)),
            LemmaA1 | LemmaA2 => g.axis("n", odd_range(3, 25)),
            StepB3 => g.axis("n", odd_range(3, 15)),
            StepA4 => g
                .axis("n", odd_range(3, 15))
                .axis("alpha", even_range(2, 15))
                .axis("k", 0..=14),
            StepA9_0 => g.axis("n", odd_range(3, 15)).axis("t", -4..=4),
            StepA3 | StepA5 | StepA6 | StepA7 | StepA8 | StepA9 | StepA10 | StepA11A12 | StepB1
            | StepB2 | StepB4 | StepB5 | StepB6 | StepB7 => {
                g.axis("n", odd_range(3, 15)).axis("alpha", even_range(2, 15))
            }
            Guozeng01 => g.axis("n", 1..=50),
            Guguo => g.axis("n", 2..=20),
            Gsz03 => g.axis("n", 2..=12).axis("r", 1..=3),
            Cor1a | Cor1b => g.axis("p", primes).axis("alpha", even_range(2, 12)),
            Pan1 | Pan2 => g.axis("p", [3, 5, 7, 11]),
            IdentityT0 => g.axis("m", 1..=10).axis("n", 1..=50),
            CongT0a => g.axis("p", primes).axis("alpha", 1..=12),
        }
    }

    /// The variant actually applied: statements without a correction are
    /// always checked as printed.
    pub fn effective_variant(self, variant: Variant) -> Variant {
        if self.info().correction.is_some() {
            variant
        } else {
            Variant::AsPrinted
        }
    }
}

/// A parameter cell outside a statement's domain.
///
/// Relational violations (such as `alpha > n`) arise naturally from
/// rectangular grids and are skipped silently; the others mean the
/// requested range itself is wrong.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{statement}: {message} ({params})")]
pub struct HypothesisViolation {
    pub statement: StatementId,
    pub params: Params,
    pub message: String,
    pub relational: bool,
}

/// A compiled statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Built {
    QCongruence {
        lhs: QExpr,
        rhs: QExpr,
        modulus: CycloModulus,
    },
    IntCongruence {
        lhs: Rational,
        rhs: Rational,
        modulus: Integer,
    },
    Identity {
        lhs: Rational,
        rhs: Rational,
    },
}

impl Built {
    pub fn decide(&self) -> Verdict {
        match self {
            Built::QCongruence { lhs, rhs, modulus } => check_congruence(lhs, rhs, modulus),
            Built::IntCongruence { lhs, rhs, modulus } => {
                check_int_congruence(lhs, rhs, modulus).expect("statement moduli are positive")
            }
            Built::Identity { lhs, rhs } => Verdict::from_equality(lhs == rhs),
        }
    }
}

/// Checks the hypotheses of `id` at `params`.
pub fn check_hypotheses(
    id: StatementId,
    params: &Params,
    variant: Variant,
) -> Result<(), HypothesisViolation> {
    use StatementId::*;
    let fail = |message: String, relational: bool| HypothesisViolation {
        statement: id,
        params: params.clone(),
        message,
        relational,
    };
    let mut vals = Vec::new();
    for &name in id.info().params {
        match params.get(name) {
            Some(v) => vals.push(v),
            None => return Err(fail(format!("missing parameter {name}"), false)),
        }
    }
    let hard = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(fail(msg.to_string(), false)) };
    let rel = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(fail(msg.to_string(), true)) };
    let odd_n = |n: i64| hard(n >= 3 && n % 2 != 0, "n must be an odd integer >= 3");
    let even_alpha = |a: i64| hard(a >= 2 && a % 2 == 0, "alpha must be a positive even integer");
    let odd_prime = |p: i64| hard(p >= 3 && is_prime(p), "p must be an odd prime");
    match id {
        LemmaA1 | LemmaA2 | StepB3 => odd_n(vals[0]),
        Guozeng01 | Guguo => hard(vals[0] >= 1, "n must be positive"),
        StepA9_0 => hard(vals[0] >= 1, "n must be positive"),
        Gsz03 => {
            hard(vals[0] >= 2, "n must be at least 2")?;
            hard(vals[1] >= 1, "r must be positive")
        }
        Pan1 | Pan2 => odd_prime(vals[0]),
        Cor1a | Cor1b => {
            odd_prime(vals[0])?;
            even_alpha(vals[1])?;
            rel(vals[1] < vals[0], "alpha must not exceed p-1")
        }
        CongT0a => {
            odd_prime(vals[0])?;
            hard(vals[1] >= 1, "alpha must be positive")?;
            rel(vals[1] < vals[0], "alpha must not exceed p-1")
        }
        IdentityT0 => {
            hard(vals[0] >= 1, "m must be positive")?;
            hard(vals[1] >= 1, "n must be positive")
        }
        StepA4 => {
            let (n, a, k) = (vals[0], vals[1], vals[2]);
            odd_n(n)?;
            even_alpha(a)?;
            rel(a <= n, "alpha must not exceed n")?;
            rel((0..n).contains(&k), "k must lie in [0, n-1]")?;
            match variant {
                Variant::AsPrinted => rel(k != n - a, "k must differ from n-alpha"),
                Variant::Corrected => rel(k < n - a, "k must be below n-alpha"),
            }
        }
        T1 | T2 | StepA3 | StepA5 | StepA6 | StepA7 | StepA8 | StepA9 | StepA10 | StepA11A12
        | StepB1 | StepB2 | StepB4 | StepB5 | StepB6 | StepB7 => {
            odd_n(vals[0])?;
            even_alpha(vals[1])?;
            rel(vals[1] <= vals[0], "alpha must not exceed n")
        }
    }
}

/// Compiles `id` at `params`, refusing cells outside its hypotheses.
pub fn build_statement(
    id: StatementId,
    params: &Params,
    variant: Variant,
) -> Result<Built, HypothesisViolation> {
    let variant = id.effective_variant(variant);
    check_hypotheses(id, params, variant)?;
    let get = |name: &str| params.get(name).expect("checked above");
    Ok(match id {
        StatementId::Cor1a => classical::cor1a(get("p"), get("alpha"), variant),
        StatementId::Cor1b => classical::cor1b(get("p"), get("alpha"), variant),
        StatementId::Guozeng01 => classical::guozeng_01(get("n")),
        StatementId::IdentityT0 => classical::identity_t0(get("m"), get("n")),
        StatementId::CongT0a => classical::cong_t0a(get("p"), get("alpha")),
        _ => build::build_q(id, get, variant),
    })
}

/// One decided grid cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub statement: StatementId,
    pub params: Params,
    pub variant: Variant,
    pub status: Status,
    pub factors: Vec<FactorDiag>,
    pub elapsed_ms: u64,
}

pub fn verify_cell(
    id: StatementId,
    params: &Params,
    variant: Variant,
) -> Result<VerdictRecord, HypothesisViolation> {
    let start = Instant::now();
    let built = build_statement(id, params, variant)?;
    let verdict = built.decide();
    Ok(VerdictRecord {
        statement: id,
        params: params.clone(),
        variant: id.effective_variant(variant),
        status: verdict.status,
        factors: verdict.factors,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Splits grid cells into those inside the statement's domain and the
/// violations for the rest.
pub fn partition_grid(
    id: StatementId,
    grid: &ParamGrid,
    variant: Variant,
) -> (Vec<Params>, Vec<HypothesisViolation>) {
    let variant = id.effective_variant(variant);
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for cell in grid.cells() {
        match check_hypotheses(id, &cell, variant) {
            Ok(()) => ok.push(cell),
            Err(v) => bad.push(v),
        }
    }
    (ok, bad)
}

/// Decides every in-domain cell of `grid` in parallel. Results follow grid
/// order regardless of scheduling; out-of-domain cells are skipped.
pub fn verify(id: StatementId, grid: &ParamGrid, variant: Variant) -> Vec<VerdictRecord> {
    let (cells, _) = partition_grid(id, grid, variant);
    cells
        .par_iter()
        .map(|cell| verify_cell(id, cell, variant).expect("cell passed hypothesis check"))
        .collect()
}

/// Per-statement totals for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementSummary {
    pub statement: StatementId,
    pub variant: Variant,
    pub cells: usize,
    pub holds: usize,
    pub fails: usize,
    pub ill_posed: usize,
    pub elapsed_ms: u64,
}

impl StatementSummary {
    pub fn from_records(id: StatementId, variant: Variant, records: &[VerdictRecord]) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        StatementSummary {
            statement: id,
            variant: id.effective_variant(variant),
            cells: records.len(),
            holds: count(Status::Holds),
            fails: count(Status::Fails),
            ill_posed: count(Status::IllPosed),
            elapsed_ms: records.iter().map(|r| r.elapsed_ms).sum(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.holds == self.cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(pairs: &[(&str, i64)]) -> Params {
        pairs.iter().fold(Params::new(), |p, &(k, v)| p.with(k, v))
    }

    #[test]
    fn tags_round_trip() {
        assert_eq!(StatementId::ALL.len(), 30);
        for &id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>(), Ok(id));
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert!("t3".parse::<StatementId>().is_err());
    }

    #[test]
    fn variants_parse() {
        assert_eq!("standard_fermat_quotient".parse(), Ok(Variant::Corrected));
        assert_eq!("as_printed".parse(), Ok(Variant::AsPrinted));
        assert!("x".parse::<Variant>().is_err());
    }

    #[test]
    fn t1_smallest_case_holds() {
        let built = build_statement(StatementId::T1, &cell(&[("n", 3), ("alpha", 2)]), Variant::AsPrinted)
            .unwrap();
        assert!(built.decide().holds());
    }

    #[test]
    fn t1_rejects_even_n() {
        let err = build_statement(StatementId::T1, &cell(&[("n", 4), ("alpha", 2)]), Variant::AsPrinted)
            .unwrap_err();
        assert!(!err.relational);
        let err = build_statement(StatementId::T1, &cell(&[("n", 3), ("alpha", 3)]), Variant::AsPrinted)
            .unwrap_err();
        assert!(!err.relational);
        let err = build_statement(StatementId::T1, &cell(&[("n", 3), ("alpha", 4)]), Variant::AsPrinted)
            .unwrap_err();
        assert!(err.relational);
    }

    #[test]
    fn missing_parameter_is_reported() {
        let err = build_statement(StatementId::T1, &cell(&[("n", 3)]), Variant::AsPrinted).unwrap_err();
        assert!(err.message.contains("alpha"));
    }

    #[test]
    fn guguo_two_terms() {
        let built = build_statement(StatementId::Guguo, &cell(&[("n", 2)]), Variant::AsPrinted).unwrap();
        let Built::QCongruence { lhs, rhs, modulus } = &built else { panic!() };
        // q^4 + q [3,1]^2 = q^4 + q(1+q+q^2)^2
        let expect = crate::Poly::from_i64s(&[0, 1, 2, 3, 3, 1]);
        assert_eq!(lhs.as_poly(), Some(expect));
        assert_eq!(rhs.as_poly(), Some(crate::Poly::from_i64s(&[0, 1, 1])));
        assert_eq!(modulus, &CycloModulus::phi_pow(2, 2));
        assert!(built.decide().holds());
    }

    #[test]
    fn verify_is_ordered_and_skips_out_of_domain() {
        let grid = ParamGrid::new().axis("n", [3, 4, 5]).axis("alpha", [2, 4, 6]);
        let recs = verify(StatementId::T1, &grid, Variant::AsPrinted);
        let cells: Vec<(i64, i64)> = recs
            .iter()
            .map(|r| (r.params.get("n").unwrap(), r.params.get("alpha").unwrap()))
            .collect();
        assert_eq!(cells, vec![(3, 2), (5, 2), (5, 4)]);
        assert!(recs.iter().all(|r| r.status == Status::Holds));
    }

    #[test]
    fn lemma_a1_small() {
        let grid = ParamGrid::new().axis("n", [3, 5, 7, 9]);
        let recs = verify(StatementId::LemmaA1, &grid, Variant::AsPrinted);
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.status == Status::Holds));
    }

    #[test]
    fn corrections_are_registered() {
        let corrected: Vec<&str> = StatementId::ALL
            .iter()
            .filter(|id| id.info().correction.is_some())
            .map(|id| id.as_str())
            .collect();
        assert_eq!(
            corrected,
            vec!["cor1a", "cor1b", "pan2", "step_a4", "step_a7", "step_b1", "step_b6"]
        );
        assert_eq!(StatementId::T1.effective_variant(Variant::Corrected), Variant::AsPrinted);
    }

    #[test]
    fn record_json_round_trip() {
        let rec = verify_cell(StatementId::T1, &cell(&[("n", 3), ("alpha", 2)]), Variant::AsPrinted).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"statement\":\"t1\""));
        assert!(json.contains("\"status\":\"holds\""));
        let back: VerdictRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}
