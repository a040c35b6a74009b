//! The convolution sums `S_{n,k}(z)` by three independent routes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{binomial, factorial, for_each_weak_composition};
use crate::error::{Error, Result};
use crate::generating::build_f_direct;
use crate::poly::{falling_product, UniPoly, Var};
use crate::rational::{from_bigint, Rational};
use crate::special::bernoulli_poly;

use super::multisum::d_coeffs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Literal double sum over compositions of Bernoulli-polynomial products.
    Direct,
    /// `k!^n [x^{(k+1)(n+1)-1}] F_k(x,z)^{n+1}`.
    Series,
    /// Falling-factorial expansion weighted by the d-coefficients.
    Eulerian,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Direct, Route::Series, Route::Eulerian];

    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Series => "series",
            Route::Eulerian => "eulerian",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnkResult {
    pub n: usize,
    pub k: usize,
    pub route: Route,
    pub poly: UniPoly,
}

/// `S_{n,k}(z)` by the chosen route.
pub fn s_nk(n: usize, k: usize, route: Route) -> Result<SnkResult> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let poly = match route {
        Route::Direct => s_direct(n, k),
        Route::Series => s_series(n, k),
        Route::Eulerian => {
            if k == 0 {
                return Err(Error::OutOfRange("the eulerian route needs k >= 1".into()));
            }
            s_eulerian(n, k)
        }
    };
    Ok(SnkResult { n, k, route, poly })
}

/// Every route applicable to `(n, k)`.
pub fn routes_for(k: usize) -> &'static [Route] {
    if k == 0 {
        &Route::ALL[..2]
    } else {
        &Route::ALL
    }
}

/// Brute-force reference:
/// `sum_{m=1}^{n} C(n+1,m) k!^{n-m} (-1)^{km}
///   sum_{j_1+..+j_m = (k+1)(n-m)+k} prod B_{k+1+j_i}(z) / (j_i! (k+1+j_i))`.
pub fn s_direct(n: usize, k: usize) -> UniPoly {
    assert!(n >= 1);
    let kfact = factorial(k);
    let max_sum = (k + 1) * (n - 1) + k;
    let terms: Vec<UniPoly> = (0..=max_sum)
        .map(|j| {
            let den = factorial(j) * BigInt::from(k + 1 + j);
            bernoulli_poly(k + 1 + j).scale(&Rational::new(BigInt::one(), den))
        })
        .collect();

    let mut total = UniPoly::zero(Var::Z);
    for m in 1..=n {
        let mut weight = from_bigint(binomial(n as i64 + 1, m as i64) * kfact.pow((n - m) as u32));
        if (k * m) % 2 == 1 {
            weight = -weight;
        }
        let sum = (k + 1) * (n - m) + k;
        let mut inner = UniPoly::zero(Var::Z);
        for_each_weak_composition(sum, m, |parts| {
            let prod = parts
                .iter()
                .fold(UniPoly::one(Var::Z), |acc, &j| &acc * &terms[j]);
            inner = &inner + &prod;
        });
        total = &total + &inner.scale(&weight);
    }
    total
}

/// `k!^n [x^{(k+1)(n+1)-1}] F_k(x,z)^{n+1}`.
pub fn s_series(n: usize, k: usize) -> UniPoly {
    assert!(n >= 1);
    let order = (k + 1) * (n + 1);
    let f = build_f_direct(k, order);
    let power = f.pow(n as u32 + 1);
    power
        .coefficient(order - 1)
        .expect("within order")
        .scale(&from_bigint(factorial(k).pow(n as u32)))
}

/// With `m = n + 1` and `M = m(k+1)`:
/// `S_{n,k}(z) = 1/(k! (M-1)!) sum_{nu=0}^{mk} z^nu sum_{j=0}^{mk}
///   d_j^{(mk-nu)} prod_{r=1}^{M-1} (m z + j - r)`,
/// where the d-coefficients come from `(1-y)^{mk-nu} S^{(m)}_{k,nu}(y)`.
pub fn s_eulerian(n: usize, k: usize) -> UniPoly {
    assert!(n >= 1 && k >= 1);
    let m = n + 1;
    let mk = m * k;
    let big_m = m * (k + 1);
    let tables: Vec<Vec<BigInt>> = (0..=mk).map(|nu| d_coeffs(m, k, nu).d).collect();

    let mut total = UniPoly::zero(Var::Z);
    for j in 0..=mk {
        // sum_nu d_j^{(mk-nu)} z^nu
        let weights = UniPoly::new(
            Var::Z,
            (0..=mk)
                .map(|nu| from_bigint(tables[mk - nu][j].clone()))
                .collect(),
        );
        if weights.is_zero() {
            continue;
        }
        let product = falling_product(Var::Z, m as i64, j as i64, big_m - 1);
        total = &total + &(&weights * &product);
    }
    let den = factorial(k) * factorial(big_m - 1);
    total.scale(&Rational::new(BigInt::one(), den))
}
