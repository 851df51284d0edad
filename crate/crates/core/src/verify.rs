//! Named identity suites. Each suite walks a fixed family of instances in a fixed order and
//! reports one [`Check`] per instance.

use std::fmt;
use std::str::FromStr;

use crate::graphs::{
    bijection_check, build_graph, chromatic_polynomial, enumerate_forest_families, enumerate_forest_partitions,
    weighted_family_count, weighted_forest_count,
};
use crate::partitions::{classical_numbers, lah_row, p_q, stirling1_row, stirling2_row};
use crate::qpoly::LaurentPoly;
use crate::rooks::{
    factor_polynomial, lah_by_difference, q_factorization_check, rook_lah, rook_stirling1, stirling1_by_esym,
};
use crate::weyl::{
    bar_qstirling2_row, basis_word, carlitz_qstirling2_row, lah_by_recurrence, normal_order, qlah_row,
    qreduction_identities_check, stirling1_by_recurrence, Basis, Expander,
};
use crate::words::{balanced_words, dyck_words, x_initial_words, Word};
use crate::zpoly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// q = 1: every computation path for the `(xD)^k` and `x D^k x^(k-1)` coefficients.
    CrossOracle,
    /// q-deformed paths, plus specialization to q = 1.
    CrossOracleQ,
    /// Lah coefficients of every balanced word starting with `x`, Dyck or not.
    LahRooks,
    /// Identities for `x^n D^n` and `(xD)^n`.
    Classical,
    /// Rook factorization, chromatic polynomial, and the q-factorization samples.
    Factorization,
    /// Forest partitions against broken-circuit-free subgraphs.
    Bijection,
    /// Rewriting engine: specialization, degree conservation, expansion round trips.
    Rewriting,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::CrossOracle,
        Suite::CrossOracleQ,
        Suite::LahRooks,
        Suite::Classical,
        Suite::Factorization,
        Suite::Bijection,
        Suite::Rewriting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CrossOracle => "cross-oracle",
            Suite::CrossOracleQ => "cross-oracle-q",
            Suite::LahRooks => "lah-rooks",
            Suite::Classical => "classical",
            Suite::Factorization => "factorization",
            Suite::Bijection => "bijection",
            Suite::Rewriting => "rewriting",
        }
    }

    /// Largest semi-length (or `n`) checked when no bound is given.
    pub fn default_max(self) -> usize {
        match self {
            Suite::CrossOracle | Suite::Factorization => 6,
            Suite::Classical => 8,
            _ => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub instance: String,
    pub passed: bool,
    /// Which comparisons failed, when any did.
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.suite, self.instance)?;
        if !self.passed {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Collects named comparisons for one instance.
struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new() }
    }

    fn expect(&mut self, label: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(label.into());
        }
    }

    fn check(self, suite: Suite, instance: impl Into<String>) -> Check {
        Check {
            suite,
            instance: instance.into(),
            passed: self.failures.is_empty(),
            detail: self.failures.join(", "),
        }
    }
}

fn consts<T: Into<num_bigint::BigInt>>(v: impl IntoIterator<Item = T>) -> Vec<LaurentPoly> {
    v.into_iter().map(|c| LaurentPoly::constant(c.into())).collect()
}

/// Runs `suite` over instances up to `max` (semi-length, or `n` for the classical suite).
pub fn run_suite(suite: Suite, max: Option<usize>) -> Vec<Check> {
    let max = max.unwrap_or(suite.default_max());
    match suite {
        Suite::CrossOracle => cross_oracle(max),
        Suite::CrossOracleQ => cross_oracle_q(max),
        Suite::LahRooks => lah_rooks(max),
        Suite::Classical => classical(max),
        Suite::Factorization => factorization(max),
        Suite::Bijection => bijection(max),
        Suite::Rewriting => rewriting(max),
    }
}

fn dyck_upto(max: usize) -> impl Iterator<Item = Word> {
    (1..=max).flat_map(dyck_words)
}

fn cross_oracle(max: usize) -> Vec<Check> {
    let mut ex = Expander::new(false);
    dyck_upto(max)
        .map(|w| {
            let n = w.semi_length();
            let ks = 0..=n;
            let mut t = Tally::new();
            let g = build_graph(&w).expect("Dyck word");
            match (ex.expand(&w, Basis::PowerXd), ex.expand(&w, Basis::Lah)) {
                (Ok(s1), Ok(lah)) => {
                    let s1 = s1.unsigned_all();
                    let lah = lah.unsigned_all();
                    let rec = stirling1_by_recurrence(&w, false).map(|e| e.unsigned_all());
                    t.expect("stirling recurrence", rec.as_ref() == Ok(&s1));
                    let forests = consts(ks.clone().map(|k| enumerate_forest_partitions(&g, k).len()));
                    t.expect("forests", forests == s1);
                    let rooks: Vec<_> = ks.clone().map(|k| rook_stirling1(&w, k, false).unwrap()).collect();
                    t.expect("rooks", rooks == s1);
                    let esym = consts(ks.clone().map(|k| stirling1_by_esym(&w, k).unwrap()));
                    t.expect("elementary symmetric", esym == s1);

                    let rec = lah_by_recurrence(&w).map(|e| e.unsigned_all());
                    t.expect("lah recurrence", rec.as_ref() == Ok(&lah));
                    let families = consts(ks.clone().map(|k| enumerate_forest_families(&g, k).len()));
                    t.expect("forest families", families == lah);
                    let rooks: Vec<_> = ks.clone().map(|k| rook_lah(&w, k, false).unwrap()).collect();
                    t.expect("truncated rooks", rooks == lah);
                    let diff: Result<Vec<_>, _> = ks.map(|k| lah_by_difference(&w, k)).collect();
                    t.expect("difference formula", diff.map(consts).as_ref() == Ok(&lah));
                }
                _ => t.expect("expansion", false),
            }
            t.check(Suite::CrossOracle, w.to_string())
        })
        .collect()
}

fn cross_oracle_q(max: usize) -> Vec<Check> {
    let mut ex = Expander::new(true);
    let mut ex1 = Expander::new(false);
    dyck_upto(max)
        .map(|w| {
            let n = w.semi_length();
            let mut t = Tally::new();
            let g = build_graph(&w).expect("Dyck word");
            match (ex.expand(&w, Basis::PowerXd), ex.expand(&w, Basis::Lah)) {
                (Ok(s1e), Ok(lahe)) => {
                    let s1 = s1e.unsigned_all();
                    let lah = lahe.unsigned_all();
                    let rec = stirling1_by_recurrence(&w, true).map(|e| e.unsigned_all());
                    t.expect("q-recurrence", rec.as_ref() == Ok(&s1));
                    let forests: Vec<_> = (0..=n).map(|k| weighted_forest_count(&g, k)).collect();
                    t.expect("weighted forests", forests == s1);
                    let rooks: Vec<_> = (0..=n).map(|k| rook_stirling1(&w, k, true).unwrap()).collect();
                    t.expect("weighted rooks", rooks == s1);
                    let trunc: Vec<_> = (0..=n).map(|k| rook_lah(&w, k, true).unwrap()).collect();
                    t.expect("weighted truncated rooks", trunc == lah);

                    let at_one = |e: &crate::weyl::Expansion| e.eval_at_one().coefficients().to_vec();
                    let mut plain = |b| ex1.expand(&w, b).map(|e| e.coefficients().to_vec());
                    t.expect("specialization (xD)^k", plain(Basis::PowerXd).as_ref() == Ok(&at_one(&s1e)));
                    t.expect("specialization lah", plain(Basis::Lah).as_ref() == Ok(&at_one(&lahe)));
                    let flat = |v: &[LaurentPoly]| consts(v.iter().map(LaurentPoly::eval_at_one));
                    let forests1 = consts((0..=n).map(|k| enumerate_forest_partitions(&g, k).len()));
                    t.expect("specialization forests", flat(&forests) == forests1);
                    let rooks1: Vec<_> = (0..=n).map(|k| rook_stirling1(&w, k, false).unwrap()).collect();
                    t.expect("specialization rooks", flat(&rooks) == rooks1);
                    let trunc1: Vec<_> = (0..=n).map(|k| rook_lah(&w, k, false).unwrap()).collect();
                    t.expect("specialization truncated rooks", flat(&trunc) == trunc1);
                }
                _ => t.expect("expansion", false),
            }
            t.check(Suite::CrossOracleQ, w.to_string())
        })
        .collect()
}

fn lah_rooks(max: usize) -> Vec<Check> {
    let mut ex = Expander::new(true);
    let mut ex1 = Expander::new(false);
    (1..=max)
        .flat_map(x_initial_words)
        .map(|w| {
            let n = w.semi_length();
            let mut t = Tally::new();
            match (ex.expand(&w, Basis::Lah), ex1.expand(&w, Basis::Lah)) {
                (Ok(q), Ok(one)) => {
                    let rooks: Vec<_> = (0..=n).map(|k| rook_lah(&w, k, true).unwrap()).collect();
                    t.expect("weighted truncated rooks", rooks == q.unsigned_all());
                    let rooks1: Vec<_> = (0..=n).map(|k| rook_lah(&w, k, false).unwrap()).collect();
                    t.expect("truncated rooks", rooks1 == one.unsigned_all());
                    let diff: Result<Vec<_>, _> = (0..=n).map(|k| lah_by_difference(&w, k)).collect();
                    t.expect("difference formula", diff.map(consts).as_ref() == Ok(&rooks1));
                    let fac = q_factorization_check(&w, Basis::Lah);
                    t.expect("q-factorization", fac.is_ok_and(|r| r.passed()));
                }
                _ => t.expect("expansion", false),
            }
            t.check(Suite::LahRooks, w.to_string())
        })
        .collect()
}

fn classical(max: usize) -> Vec<Check> {
    let mut ex = Expander::new(false);
    let mut exq = Expander::new(true);
    let mut out = Vec::new();
    for n in 0..=max {
        let mut t = Tally::new();
        let s1 = stirling1_row(n);
        let s2 = stirling2_row(n);
        let lah = lah_row(n);

        let xd_n = Word::xd_power(n);
        let nf = normal_order(&xd_n, false);
        t.expect("(xD)^n normal order", (0..=n).all(|k| nf.coefficient(k, k).eval_at_one() == s2[k]));
        let xndn = Word::monomial(n, n);
        let e = ex.expand(&xndn, Basis::PowerXd).map(|e| e.unsigned_all());
        t.expect("x^n D^n over (xD)^k", e == Ok(consts(s1.iter().cloned())));
        // Σ_j (-1)^(n-j) [n,j] {j,k} = δ_{nk}
        let inverse = (0..=n).all(|k| {
            let sum: num_bigint::BigInt = (k..=n)
                .map(|j| {
                    let term = &s1[j] * &stirling2_row(j)[k];
                    if (n - j) % 2 == 1 { -term } else { term }
                })
                .sum();
            sum == num_bigint::BigInt::from(u8::from(k == n))
        });
        t.expect("stirling inversion", inverse);
        let e = ex.expand(&xndn, Basis::Lah).map(|e| e.unsigned_all());
        t.expect("x^n D^n over lah basis", e == Ok(consts(lah.iter().cloned())));
        let nf = normal_order(&basis_word(Basis::Lah, n), false);
        t.expect("x D^n x^(n-1) normal order", (0..=n).all(|k| nf.coefficient(k, k).eval_at_one() == lah[k]));
        t.expect(
            "lah cross identity",
            (0..=n).all(|k| {
                let sum: num_bigint::BigInt = (k..=n).map(|j| &s1[j] * &stirling2_row(j)[k]).sum();
                sum == classical_numbers(n, k).lah
            }),
        );

        let bar = bar_qstirling2_row(n);
        t.expect("bar q-stirling = p_q", (0..=n).all(|k| bar[k] == p_q(n, k)));
        let e = exq.expand(&xd_n, Basis::Lah).map(|e| e.unsigned_all());
        t.expect("bar q-stirling = (xD)^n over lah basis", e.as_ref() == Ok(&bar));
        let ql = qlah_row(n);
        let e = exq.expand(&xndn, Basis::Lah).map(|e| e.unsigned_all());
        t.expect("q-lah = x^n D^n over lah basis", e.as_ref() == Ok(&ql));
        if (1..=6).contains(&n) && n <= max.min(6) {
            t.expect("q-lah = weighted families", (0..=n).all(|k| ql[k] == weighted_family_count(n, k)));
        }
        let nf = normal_order(&xd_n, true);
        let carlitz = carlitz_qstirling2_row(n);
        t.expect("carlitz recurrence", (0..=n).all(|k| nf.coefficient(k, k) == carlitz[k]));
        if n >= 1 {
            t.expect("q commutation of x past D^n", qreduction_identities_check(n).passed());
        }
        out.push(t.check(Suite::Classical, format!("n={n}")));
    }
    out
}

fn factorization(max: usize) -> Vec<Check> {
    let mut ex = Expander::new(false);
    dyck_upto(max)
        .map(|w| {
            let n = w.semi_length();
            let mut t = Tally::new();
            let p = factor_polynomial(&w).unwrap();
            match (ex.expand(&w, Basis::PowerXd), ex.expand(&w, Basis::Lah)) {
                (Ok(s1), Ok(lah)) => {
                    let gen = IntPoly::from_coeffs(s1.coefficients().iter().map(LaurentPoly::eval_at_one));
                    t.expect("alternating (xD)^k generating function", gen == p);
                    let rising: IntPoly = lah
                        .coefficients()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| IntPoly::rising_factorial(k).scale(&c.eval_at_one()))
                        .sum();
                    t.expect("alternating rising-factorial expansion", rising == p);
                }
                _ => t.expect("expansion", false),
            }
            t.expect("chromatic polynomial", chromatic_polynomial(&w).as_ref() == Ok(&p));
            if n <= 5 {
                for basis in [Basis::PowerXd, Basis::Lah] {
                    let r = q_factorization_check(&w, basis);
                    t.expect(format!("q-factorization {basis}"), r.is_ok_and(|r| r.passed()));
                }
            }
            t.check(Suite::Factorization, w.to_string())
        })
        .collect()
}

fn bijection(max: usize) -> Vec<Check> {
    dyck_upto(max)
        .map(|w| {
            let g = build_graph(&w).expect("Dyck word");
            let mut t = Tally::new();
            for k in 0..=w.semi_length() {
                let r = bijection_check(&g, k);
                t.expect(format!("k={k} ({} forests, {} subgraphs)", r.forests, r.bcf_subgraphs), r.passed);
            }
            t.check(Suite::Bijection, w.to_string())
        })
        .collect()
}

fn rewriting(max: usize) -> Vec<Check> {
    let mut exq = Expander::new(true);
    let mut ex1 = Expander::new(false);
    (0..=max)
        .flat_map(balanced_words)
        .map(|w| {
            let n = w.semi_length();
            let mut t = Tally::new();
            let nfq = normal_order(&w, true);
            let nf1 = normal_order(&w, false);
            t.expect("specialization", nfq.eval_at_one() == nf1);
            t.expect("degree conservation", nfq.terms().all(|((i, j), _)| i == j && i <= n));
            for ex in [&mut exq, &mut ex1] {
                let nf = if ex.q_deformed() { &nfq } else { &nf1 };
                for basis in [Basis::Normal, Basis::PowerXd, Basis::Lah] {
                    let required = basis == Basis::Normal
                        || (basis == Basis::PowerXd && w.is_dyck())
                        || (basis == Basis::Lah && w.letters().first() != Some(&crate::words::Letter::D));
                    match ex.expand(&w, basis) {
                        Ok(e) => t.expect(format!("round trip {basis}"), &e.resubstitute() == nf),
                        Err(_) => t.expect(format!("expansion {basis}"), !required),
                    }
                }
            }
            let label = if w.is_empty() { "(empty)".to_string() } else { w.to_string() };
            t.check(Suite::Rewriting, label)
        })
        .collect()
}
