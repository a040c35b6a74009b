//! Verification of the identities over parameter grids.
//!
//! Each check produces a [`VerificationReport`]; a failed report always
//! carries a [`Witness`] and a passing one never does.

#![allow(clippy::result_large_err)]

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generating::{build_f_direct, build_f_eulerian, egf_polys, exp_zx, x_over_expm1_pow};
use crate::poly::{falling_product, UniPoly, Var};
use crate::rational::{from_bigint, int, rat, to_fraction_string, Rational};
use crate::special::{bernoulli_cache_snapshot, bernoulli_poly, eulerian_poly, polylog_neg_series};
use crate::tornheim::{
    self, a_even_closed, a_jkn, c3_residuals, c_closed, c_flags, coeff_z_closed, coeff_z_thm8,
    lemma5_coeffs, multisum_poly, p_from, seq_a, seq_c, seq_c3, u_nu, u_series, AjRoute,
    MultisumRoute, Route,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Remainder { divisor: UniPoly, remainder: UniPoly },
    PolyMismatch { left: (String, UniPoly), right: (String, UniPoly) },
    ValueMismatch { expected: Rational, actual: Rational },
    NonzeroAt { at: Rational, value: Rational },
    Message(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Remainder { divisor, remainder } => {
                write!(f, "dividing by {divisor} leaves remainder {remainder}")
            }
            Witness::PolyMismatch { left, right } => {
                write!(f, "{} = {} but {} = {}", left.0, left.1, right.0, right.1)
            }
            Witness::ValueMismatch { expected, actual } => write!(
                f,
                "expected {} got {}",
                to_fraction_string(expected),
                to_fraction_string(actual)
            ),
            Witness::NonzeroAt { at, value } => write!(
                f,
                "value at {} is {}",
                to_fraction_string(at),
                to_fraction_string(value)
            ),
            Witness::Message(m) => f.write_str(m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub statement: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn pass(statement: &'static str, params: Vec<(&'static str, i64)>) -> Self {
        VerificationReport { statement, params, witness: None }
    }

    pub fn fail(statement: &'static str, params: Vec<(&'static str, i64)>, witness: Witness) -> Self {
        VerificationReport { statement, params, witness: Some(witness) }
    }

    fn from_check(
        statement: &'static str,
        params: Vec<(&'static str, i64)>,
        check: std::result::Result<(), Witness>,
    ) -> Self {
        VerificationReport { statement, params, witness: check.err() }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn param_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}", self.statement, self.param_string())?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

fn nk(n: usize, k: usize) -> Vec<(&'static str, i64)> {
    vec![("n", n as i64), ("k", k as i64)]
}

fn poly_eq(
    left: (&str, &UniPoly),
    right: (&str, &UniPoly),
) -> std::result::Result<(), Witness> {
    if left.1 == right.1 {
        Ok(())
    } else {
        Err(Witness::PolyMismatch {
            left: (left.0.to_string(), left.1.clone()),
            right: (right.0.to_string(), right.1.clone()),
        })
    }
}

fn value_eq(expected: &Rational, actual: &Rational) -> std::result::Result<(), Witness> {
    if expected == actual {
        Ok(())
    } else {
        Err(Witness::ValueMismatch { expected: expected.clone(), actual: actual.clone() })
    }
}

fn divides(divisor: &UniPoly, p: &UniPoly) -> std::result::Result<(), Witness> {
    let (_, remainder) = p.div_rem(divisor).expect("nonzero divisor of matching variable");
    if remainder.is_zero() {
        Ok(())
    } else {
        Err(Witness::Remainder { divisor: divisor.clone(), remainder })
    }
}

/// Symmetry `S(1-z) = (-1)^{(k+1)(n+1)-1} S(z)` and divisibility by
/// `z prod_{j=1}^{n+1} ((n+1) z - j)`.
pub fn check_reflection_divisibility(n: usize, k: usize, s: &UniPoly) -> VerificationReport {
    let check = || {
        let sign = if tornheim::reflection_sign_odd(n, k) { int(-1) } else { int(1) };
        poly_eq(("S(1-z)", &s.reflect()), ("(-1)^e S(z)", &s.scale(&sign)))?;
        let divisor = &UniPoly::identity(Var::Z) * &falling_product(Var::Z, n as i64 + 1, 0, n + 1);
        divides(&divisor, s)
    };
    VerificationReport::from_check("thm1", nk(n, k), check())
}

pub fn verify_theorem1(n: usize, k: usize) -> VerificationReport {
    check_reflection_divisibility(n, k, &tornheim::s_series(n, k))
}

/// `S(0) = S(1) = 0`, and `S(1/2) = 0` when `n` or `k` is odd.
pub fn check_vanishing(n: usize, k: usize, s: &UniPoly) -> VerificationReport {
    let mut points = vec![int(0), int(1)];
    if n % 2 == 1 || k % 2 == 1 {
        points.push(rat(1, 2));
    }
    let check = points.into_iter().try_for_each(|at| {
        let value = s.eval(&at);
        if value.is_zero() {
            Ok(())
        } else {
            Err(Witness::NonzeroAt { at, value })
        }
    });
    VerificationReport::from_check("corollary", nk(n, k), check)
}

pub fn verify_corollary_numbers(n: usize, k: usize) -> VerificationReport {
    check_vanishing(n, k, &tornheim::s_series(n, k))
}

/// `z^2 (z-1)^2` divides `S_{n,k}` for even `n` and `k`.
pub fn check_double_roots(n: usize, k: usize, s: &UniPoly) -> Result<VerificationReport> {
    if n % 2 == 1 || k % 2 == 1 || n == 0 || k == 0 {
        return Err(Error::OutOfRange("both n and k must be positive and even".into()));
    }
    let divisor = UniPoly::from_ints(Var::Z, &[0, -1, 1]).pow(2);
    Ok(VerificationReport::from_check("thm6", nk(n, k), divides(&divisor, s)))
}

pub fn verify_theorem6(n: usize, k: usize) -> Result<VerificationReport> {
    if n % 2 == 1 || k % 2 == 1 || n == 0 || k == 0 {
        return Err(Error::OutOfRange("both n and k must be positive and even".into()));
    }
    check_double_roots(n, k, &tornheim::s_series(n, k))
}

/// For even `k`, the degree is `(k+1)(n+1) - 1`.
pub fn check_degree(n: usize, k: usize, s: &UniPoly) -> VerificationReport {
    let expected = tornheim::expected_degree(n, k);
    let check = match s.degree() {
        Some(d) if d == expected => Ok(()),
        other => Err(Witness::Message(format!(
            "degree {} instead of {expected}",
            other.map_or_else(|| "-inf".to_string(), |d| d.to_string())
        ))),
    };
    VerificationReport::from_check("degree", nk(n, k), check)
}

pub fn degree_check(n: usize, k: usize) -> Result<VerificationReport> {
    if k % 2 == 1 {
        return Err(Error::OutOfRange("the degree statement covers even k only".into()));
    }
    Ok(check_degree(n, k, &tornheim::s_series(n, k)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Routes,
    Thm1,
    Corollary,
    Thm6,
    Degree,
    Lemma4,
    Lemma5,
    Lemma7,
    Thm8,
    Cor9,
    Cor10,
    C3,
    Sec5,
    Pn,
    Eq28,
    Bernoulli,
}

impl Suite {
    /// Everything `all` runs. The Bernoulli cache audit goes last so that
    /// it sees every entry the other suites pulled in.
    pub const ALL: [Suite; 16] = [
        Suite::Routes,
        Suite::Thm1,
        Suite::Corollary,
        Suite::Thm6,
        Suite::Degree,
        Suite::Lemma4,
        Suite::Lemma5,
        Suite::Lemma7,
        Suite::Thm8,
        Suite::Cor9,
        Suite::Cor10,
        Suite::C3,
        Suite::Sec5,
        Suite::Pn,
        Suite::Eq28,
        Suite::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Thm1 => "thm1",
            Suite::Corollary => "corollary",
            Suite::Thm6 => "thm6",
            Suite::Degree => "degree",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::Lemma7 => "lemma7",
            Suite::Thm8 => "thm8",
            Suite::Cor9 => "cor9",
            Suite::Cor10 => "cor10",
            Suite::C3 => "c3",
            Suite::Sec5 => "sec5",
            Suite::Pn => "pn",
            Suite::Eq28 => "eq2.8",
            Suite::Bernoulli => "bernoulli",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub k_max: usize,
    pub parallel: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { n_max: 4, k_max: 3, parallel: false }
    }
}

/// Runs suites and memoizes `S_{n,k}` between them.
pub struct Sweep {
    config: SweepConfig,
    s_memo: RwLock<HashMap<(usize, usize, Route), UniPoly>>,
}

impl Sweep {
    pub fn new(config: SweepConfig) -> Self {
        Sweep { config, s_memo: RwLock::new(HashMap::new()) }
    }

    pub fn config(&self) -> &SweepConfig {
        &self.config
    }

    fn s(&self, n: usize, k: usize, route: Route) -> UniPoly {
        if let Some(p) = self.s_memo.read().unwrap().get(&(n, k, route)) {
            return p.clone();
        }
        let p = tornheim::s_nk(n, k, route).expect("valid range").poly;
        self.s_memo.write().unwrap().insert((n, k, route), p.clone());
        p
    }

    fn map<T, F>(&self, tasks: Vec<T>, f: F) -> Vec<VerificationReport>
    where
        T: Send + Sync,
        F: Fn(&T) -> Vec<VerificationReport> + Send + Sync,
    {
        if self.config.parallel {
            tasks.par_iter().flat_map_iter(&f).collect()
        } else {
            tasks.iter().flat_map(&f).collect()
        }
    }

    fn grid(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in 1..=self.config.n_max {
            for k in 1..=self.config.k_max {
                out.push((n, k));
            }
        }
        out
    }

    pub fn run(&self, suites: &[Suite]) -> Vec<VerificationReport> {
        suites.iter().flat_map(|&s| self.run_suite(s)).collect()
    }

    pub fn run_suite(&self, suite: Suite) -> Vec<VerificationReport> {
        let cfg = self.config;
        match suite {
            Suite::Routes => self.map(self.grid(), |&(n, k)| {
                let direct = self.s(n, k, Route::Direct);
                let check = [Route::Series, Route::Eulerian].iter().try_for_each(|&r| {
                    poly_eq(("direct", &direct), (r.name(), &self.s(n, k, r)))
                });
                vec![VerificationReport::from_check("routes", nk(n, k), check)]
            }),
            Suite::Thm1 => self.map(self.grid(), |&(n, k)| {
                vec![check_reflection_divisibility(n, k, &self.s(n, k, Route::Series))]
            }),
            Suite::Corollary => self.map(self.grid(), |&(n, k)| {
                vec![check_vanishing(n, k, &self.s(n, k, Route::Series))]
            }),
            Suite::Thm6 => {
                let tasks: Vec<_> = self
                    .grid()
                    .into_iter()
                    .filter(|(n, k)| n % 2 == 0 && k % 2 == 0)
                    .collect();
                self.map(tasks, |&(n, k)| {
                    vec![check_double_roots(n, k, &self.s(n, k, Route::Series)).expect("even")]
                })
            }
            Suite::Degree => {
                let tasks: Vec<_> = self.grid().into_iter().filter(|(_, k)| k % 2 == 0).collect();
                self.map(tasks, |&(n, k)| vec![check_degree(n, k, &self.s(n, k, Route::Series))])
            }
            Suite::Lemma4 => self.map((1..=cfg.k_max).collect(), |&k| {
                let order = 6 * (k + 1);
                let direct = build_f_direct(k, order);
                let eul = build_f_eulerian(k, order);
                let check = direct
                    .coeffs()
                    .iter()
                    .zip(eul.coeffs())
                    .enumerate()
                    .try_for_each(|(m, (a, b))| {
                        poly_eq((&format!("[x^{m}] F direct"), a), (&format!("[x^{m}] F eulerian"), b))
                    });
                vec![VerificationReport::from_check(
                    "lemma4",
                    vec![("k", k as i64), ("N", order as i64)],
                    check,
                )]
            }),
            Suite::Lemma5 => {
                let mut tasks = Vec::new();
                for k in 1..=cfg.k_max {
                    for n in 1..=cfg.n_max {
                        for nu in 1..=n * k {
                            tasks.push((k, n, nu));
                        }
                    }
                }
                self.map(tasks, |&(k, n, nu)| {
                    let check = || {
                        let p = multisum_poly(k, nu, n, MultisumRoute::Enumeration);
                        let q = multisum_poly(k, nu, n, MultisumRoute::Multinomial);
                        poly_eq(("enumeration", &p), ("multinomial", &q))?;
                        let c = lemma5_coeffs(k, nu, n);
                        value_eq(&from_bigint(c.c1), &p.coeff(1))?;
                        value_eq(&from_bigint(c.c2), &p.coeff(2))?;
                        value_eq(&from_bigint(c.c_nu), &p.coeff(nu))?;
                        if p.degree() == Some(nu) && p.constant_term().is_zero() {
                            Ok(())
                        } else {
                            Err(Witness::Message(format!("unexpected shape {p}")))
                        }
                    };
                    vec![VerificationReport::from_check(
                        "lemma5",
                        vec![("k", k as i64), ("n", n as i64), ("nu", nu as i64)],
                        check(),
                    )]
                })
            }
            Suite::Lemma7 => self.map(self.grid(), |&(n, k)| {
                let check = || {
                    let top = multisum_poly(k, n * k, n, MultisumRoute::Enumeration);
                    poly_eq(("S_{k,nk}", &top), ("A_k^n", &eulerian_poly(k).pow(n as u32)))?;
                    divides(&UniPoly::monomial(Var::Y, Rational::one(), n), &top)
                };
                vec![VerificationReport::from_check("lemma7", nk(n, k), check())]
            }),
            Suite::Thm8 => self.map(self.grid(), |&(n, k)| {
                let check = || {
                    let c = coeff_z_thm8(n, k);
                    let direct = self.s(n, k, Route::Direct).coeff(1);
                    value_eq(&c.value, &direct)?;
                    if c.both_even {
                        value_eq(&Rational::zero(), &c.formula)?;
                    }
                    Ok(())
                };
                vec![VerificationReport::from_check("thm8", nk(n, k), check())]
            }),
            Suite::Cor9 => {
                let top = 2 * cfg.n_max;
                let mut tasks: Vec<(usize, usize)> = (1..=top).map(|n| (n, 1)).collect();
                tasks.extend((1..=top + 1).step_by(2).map(|n| (n, 2)));
                self.map(tasks, |&(n, k)| {
                    let check = || {
                        let closed = coeff_z_closed(n, k)
                            .map_err(|e| Witness::Message(e.to_string()))?;
                        value_eq(&coeff_z_thm8(n, k).value, &closed)?;
                        if k == 2 {
                            let c = seq_c(n + 1).values[n].clone();
                            value_eq(&-c, &closed)?;
                        }
                        Ok(())
                    };
                    vec![VerificationReport::from_check("cor9", nk(n, k), check())]
                })
            }
            Suite::Cor10 => {
                let count = 3 * cfg.n_max + 1;
                let c = seq_c(count);
                let a = seq_a(count);
                self.map((0..count).collect(), |&n| {
                    let check = || {
                        let cn = &c.values[n];
                        let flags = c_flags(n, cn);
                        if !flags.all() {
                            return Err(Witness::Message(format!(
                                "1/c_{n} = {} fails {flags:?}",
                                to_fraction_string(&cn.recip())
                            )));
                        }
                        value_eq(&c_closed(n), cn)?;
                        let an = &a.values[n];
                        if !an.is_integer() || *an <= Rational::zero() {
                            return Err(Witness::Message(format!("a_{n} = {an} is not a positive integer")));
                        }
                        if n % 2 == 0 {
                            value_eq(&from_bigint(a_even_closed(n)), an)?;
                        }
                        Ok(())
                    };
                    vec![VerificationReport::from_check("cor10", vec![("n", n as i64)], check())]
                })
            }
            Suite::C3 => {
                let count = 5 * cfg.n_max + 2;
                let table = seq_c3(count);
                let mut reports: Vec<_> = c3_residuals(&table)
                    .into_iter()
                    .map(|(n, r)| {
                        let check = if r.is_zero() {
                            Ok(())
                        } else {
                            Err(Witness::Message(format!("residual {}", to_fraction_string(&r))))
                        };
                        VerificationReport::from_check("c3-recurrence", vec![("n", n as i64)], check)
                    })
                    .collect();
                reports.extend(self.map((1..=cfg.n_max).collect(), |&n| {
                    let check = value_eq(&coeff_z_thm8(n, 3).value, table.get(n).unwrap());
                    vec![VerificationReport::from_check("c3-coefficient", vec![("n", n as i64)], check)]
                }));
                reports
            }
            Suite::Sec5 => {
                let mut tasks = Vec::new();
                for k in 1..=cfg.k_max {
                    for n in 1..=cfg.n_max {
                        tasks.push((k, n));
                    }
                }
                let nu_max = 2 * cfg.n_max;
                self.map(tasks, move |&(k, n)| {
                    let params = vec![("k", k as i64), ("n", n as i64)];
                    let a_check = || {
                        let row: Vec<BigInt> =
                            (0..=n * (k - 1)).map(|j| a_jkn(k, n, j, AjRoute::PolyPower)).collect();
                        for (j, a) in row.iter().enumerate() {
                            for route in [AjRoute::Multinomial, AjRoute::Inversion] {
                                let other = a_jkn(k, n, j, route);
                                if other != *a {
                                    return Err(Witness::Message(format!(
                                        "a_{j}: power {a} vs {route:?} {other}"
                                    )));
                                }
                            }
                        }
                        if row.iter().eq(row.iter().rev()) {
                            Ok(())
                        } else {
                            Err(Witness::Message("a_j row is not palindromic".into()))
                        }
                    };
                    let u_check = || {
                        let series = u_series(k, n, nu_max);
                        series.iter().enumerate().try_for_each(|(nu, c)| {
                            value_eq(&from_bigint(u_nu(k, n, nu)), c)
                        })
                    };
                    vec![
                        VerificationReport::from_check("a_jkn", params.clone(), a_check()),
                        VerificationReport::from_check(
                            "u_nu",
                            params.into_iter().chain([("nu_max", nu_max as i64)]).collect(),
                            u_check(),
                        ),
                    ]
                })
            }
            Suite::Pn => self.map((1..=cfg.n_max + 2).collect(), |&n| {
                let check = || {
                    let p = p_from(n, &self.s(n, 1, Route::Series))
                        .map_err(|e| Witness::Message(e.to_string()))?;
                    let sign = if (n - 1) % 2 == 0 { int(1) } else { int(-1) };
                    poly_eq(("p(1-z)", &p.reflect()), ("(-1)^(n-1) p(z)", &p.scale(&sign)))?;
                    if p.degree().unwrap_or(0) > n.saturating_sub(1) {
                        return Err(Witness::Message(format!("degree of {p} exceeds n-1")));
                    }
                    if n % 2 == 0 {
                        divides(&UniPoly::from_ints(Var::Z, &[-1, 2]), &p)?;
                    }
                    Ok(())
                };
                vec![VerificationReport::from_check("pn", vec![("n", n as i64)], check())]
            }),
            Suite::Eq28 => self.map((1..=cfg.k_max).collect(), |&k| {
                let order = 20;
                let series = polylog_neg_series(k, order);
                let check = series.iter().enumerate().try_for_each(|(m, c)| {
                    value_eq(&from_bigint(BigInt::from(m).pow(k as u32)), c)
                });
                vec![VerificationReport::from_check(
                    "eq2.8",
                    vec![("k", k as i64), ("N", order as i64)],
                    check,
                )]
            }),
            Suite::Bernoulli => {
                // cover at least what the grid suites touch
                let need = (cfg.k_max + 1) * (cfg.n_max + 1);
                bernoulli_poly(need.max(6 * (cfg.k_max + 1)));
                let cache = bernoulli_cache_snapshot();
                let top = cache.len() - 1;
                let reference = egf_polys(&x_over_expm1_pow(1, top).mul(&exp_zx(top)));
                self.map((0..=top).collect(), |&m| {
                    let check = || {
                        let cached = cache.poly(m).expect("in range");
                        poly_eq(("cached B_m(z)", cached), ("generating function", &reference[m]))?;
                        value_eq(cache.number(m).expect("in range"), &cached.eval(&Rational::zero()))
                    };
                    vec![VerificationReport::from_check("bernoulli", vec![("m", m as i64)], check())]
                })
            }
        }
    }
}

/// Reports in canonical order: by statement, then by parameters.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.statement.cmp(b.statement).then_with(|| a.params.cmp(&b.params)));
}
