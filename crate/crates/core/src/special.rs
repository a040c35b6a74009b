//! Bernoulli numbers and polynomials, Eulerian numbers and polynomials,
//! higher-order Bernoulli polynomials, and the negative-order polylogarithm
//! as a rational function.
//!
//! Bernoulli and Eulerian values are memoized in process-wide caches. A cache
//! only ever grows; readers take a shared lock and see fully built prefixes.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial};
use crate::generating::{exp_zx, x_over_expm1_pow};
use crate::poly::{UniPoly, Var};
use crate::rational::{from_bigint, Rational};
use crate::series::TruncSeries;

/// Bernoulli numbers `B_0, B_1, ...` (with `B_1 = -1/2`) and polynomials
/// `B_0(z), B_1(z), ...`.
#[derive(Clone, Debug, Default)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
    polys: Vec<UniPoly>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Extend so that indices `0..=k` are present.
    pub fn ensure(&mut self, k: usize) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
        while self.numbers.len() <= k {
            let m = self.numbers.len();
            let b = if m == 0 {
                Rational::one()
            } else {
                let s = self
                    .numbers
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (j, bj)| {
                        acc + from_bigint(binomial(m as i64 + 1, j as i64)) * bj
                    });
                -s / from_bigint(BigInt::from(m + 1))
            };
            self.numbers.push(b);
        }
        // B_m(z) = sum_j C(m, j) B_j z^(m-j)
        while self.polys.len() <= k {
            let m = self.polys.len();
            let coeffs = (0..=m)
                .map(|i| from_bigint(binomial(m as i64, (m - i) as i64)) * &self.numbers[m - i])
                .collect();
            self.polys.push(UniPoly::new(Var::Z, coeffs));
        }
    }

    pub fn number(&self, k: usize) -> Option<&Rational> {
        self.numbers.get(k)
    }

    pub fn poly(&self, k: usize) -> Option<&UniPoly> {
        self.polys.get(k)
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }

    /// Overwrite coefficient `j` of the cached `B_k(z)` with itself plus one.
    /// Used to check that verification sweeps catch a corrupted cache.
    pub fn corrupt_poly(&mut self, k: usize, j: usize) {
        self.ensure(k);
        let mut coeffs = self.polys[k].coeffs().to_vec();
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Rational::zero());
        }
        coeffs[j] += Rational::one();
        self.polys[k] = UniPoly::new(Var::Z, coeffs);
    }
}

static BERNOULLI: LazyLock<RwLock<BernoulliCache>> =
    LazyLock::new(|| RwLock::new(BernoulliCache::new()));

fn with_bernoulli<T>(k: usize, f: impl Fn(&BernoulliCache) -> T) -> T {
    {
        let cache = BERNOULLI.read().expect("bernoulli cache poisoned");
        if cache.len() > k {
            return f(&cache);
        }
    }
    let mut cache = BERNOULLI.write().expect("bernoulli cache poisoned");
    cache.ensure(k);
    f(&cache)
}

/// `B_k`, with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize) -> Rational {
    with_bernoulli(k, |c| c.numbers[k].clone())
}

/// The monic degree-`k` Bernoulli polynomial `B_k(z)`.
pub fn bernoulli_poly(k: usize) -> UniPoly {
    with_bernoulli(k, |c| c.polys[k].clone())
}

/// Copy of the shared cache as it stands.
pub fn bernoulli_cache_snapshot() -> BernoulliCache {
    BERNOULLI.read().expect("bernoulli cache poisoned").clone()
}

/// Corrupt the shared cache; see [`BernoulliCache::corrupt_poly`].
#[doc(hidden)]
pub fn inject_bernoulli_fault(k: usize, j: usize) {
    BERNOULLI
        .write()
        .expect("bernoulli cache poisoned")
        .corrupt_poly(k, j);
}

/// Eulerian triangle `A(k, j)` and polynomials `A_k(y) = sum_j A(k, j) y^j`.
#[derive(Clone, Debug, Default)]
pub struct EulerianCache {
    triangle: Vec<Vec<BigInt>>,
    polys: Vec<UniPoly>,
}

impl EulerianCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ensure(&mut self, k: usize) {
        // A(k, j) = j A(k-1, j) + (k-j+1) A(k-1, j-1), A(0, 0) = 1
        while self.triangle.len() <= k {
            let n = self.triangle.len();
            let row: Vec<BigInt> = if n == 0 {
                vec![BigInt::one()]
            } else {
                let prev = &self.triangle[n - 1];
                let at = |j: usize| prev.get(j).cloned().unwrap_or_default();
                (0..=n)
                    .map(|j| {
                        let left = if j == 0 { BigInt::zero() } else { at(j - 1) * (n - j + 1) };
                        at(j) * j + left
                    })
                    .collect()
            };
            self.polys.push(UniPoly::new(
                Var::Y,
                row.iter().cloned().map(from_bigint).collect(),
            ));
            self.triangle.push(row);
        }
    }

    pub fn row(&self, k: usize) -> Option<&[BigInt]> {
        self.triangle.get(k).map(Vec::as_slice)
    }

    pub fn poly(&self, k: usize) -> Option<&UniPoly> {
        self.polys.get(k)
    }
}

static EULERIAN: LazyLock<RwLock<EulerianCache>> =
    LazyLock::new(|| RwLock::new(EulerianCache::new()));

fn with_eulerian<T>(k: usize, f: impl Fn(&EulerianCache) -> T) -> T {
    {
        let cache = EULERIAN.read().expect("eulerian cache poisoned");
        if cache.triangle.len() > k {
            return f(&cache);
        }
    }
    let mut cache = EULERIAN.write().expect("eulerian cache poisoned");
    cache.ensure(k);
    f(&cache)
}

/// `A_k(y)`; `A_0 = 1` and `A_k(0) = 0` for `k >= 1`.
pub fn eulerian_poly(k: usize) -> UniPoly {
    with_eulerian(k, |c| c.polys[k].clone())
}

/// Eulerian number `A(k, j)`, zero for `j > k`.
pub fn eulerian_number(k: usize, j: usize) -> BigInt {
    with_eulerian(k, |c| c.triangle[k].get(j).cloned().unwrap_or_default())
}

/// `B_m^{(r)}(z)`: `m!` times `[x^m]` of `(x/(e^x - 1))^r e^{zx}`.
pub fn higher_bernoulli_poly(m: usize, r: u32) -> UniPoly {
    assert!(r >= 1, "order r must be at least 1");
    let gf = x_over_expm1_pow(r, m).mul(&exp_zx(m));
    gf.coefficient(m)
        .expect("order is m")
        .scale(&from_bigint(factorial(m)))
}

/// Expands `A_k(y) / (1 - y)^{k+1}` through `y^order` by series division
/// and checks that the coefficient of `y^m` is `m^k`.
pub fn polylog_neg_check(k: usize, order: usize) -> bool {
    polylog_neg_series(k, order)
        .iter()
        .enumerate()
        .all(|(m, c)| *c == from_bigint(BigInt::from(m).pow(k as u32)))
}

/// Coefficients of `A_k(y) / (1 - y)^{k+1}` through `y^order`.
pub fn polylog_neg_series(k: usize, order: usize) -> Vec<Rational> {
    let a = TruncSeries::from_rationals(Var::Y, order, eulerian_poly(k).into_coeffs());
    let denom = TruncSeries::from_rationals(
        Var::Y,
        order,
        vec![Rational::one(), -Rational::one()],
    )
    .pow(k as u32 + 1);
    a.mul(&denom.inverse().expect("constant term is 1"))
        .constant_terms()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::falling_product;
    use crate::rational::{int, rat};

    fn zpoly(c: &[Rational]) -> UniPoly {
        UniPoly::new(Var::Z, c.to_vec())
    }

    #[test]
    fn bernoulli_numbers_reference_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(3), int(0));
        for k in (3..40).step_by(2) {
            assert!(bernoulli_number(k).is_zero(), "B_{k}");
        }
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_polys_reference_values() {
        assert_eq!(bernoulli_poly(0), UniPoly::one(Var::Z));
        assert_eq!(bernoulli_poly(2), zpoly(&[rat(1, 6), int(-1), int(1)]));
        assert_eq!(
            bernoulli_poly(6),
            zpoly(&[rat(1, 42), int(0), rat(-1, 2), int(0), rat(5, 2), int(-3), int(1)])
        );
    }

    #[test]
    fn bernoulli_cache_invariants() {
        let mut cache = BernoulliCache::new();
        cache.ensure(25);
        for k in 0..=25 {
            let p = cache.poly(k).unwrap();
            assert_eq!(p.degree(), Some(k));
            assert!(p.leading().unwrap().is_one());
            assert_eq!(&p.eval(&int(0)), cache.number(k).unwrap());
        }
    }

    #[test]
    fn reflection_of_bernoulli_polys() {
        for k in 0..=20 {
            let b = bernoulli_poly(k);
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(b.reflect(), b.scale(&sign), "k={k}");
        }
    }

    #[test]
    fn corrupt_poly_changes_only_that_entry() {
        let mut cache = BernoulliCache::new();
        cache.ensure(5);
        let before = cache.clone();
        cache.corrupt_poly(3, 1);
        assert_ne!(cache.poly(3), before.poly(3));
        assert_eq!(cache.poly(4), before.poly(4));
        cache.corrupt_poly(8, 0);
        assert_eq!(cache.len(), 9);
    }

    #[test]
    fn eulerian_polys_reference_values() {
        let y = |c: &[i64]| UniPoly::from_ints(Var::Y, c);
        assert_eq!(eulerian_poly(0), y(&[1]));
        assert_eq!(eulerian_poly(1), y(&[0, 1]));
        assert_eq!(eulerian_poly(4), y(&[0, 1, 11, 11, 1]));
        assert_eq!(eulerian_poly(6), y(&[0, 1, 57, 302, 302, 57, 1]));
        assert_eq!(eulerian_number(4, 2), BigInt::from(11));
        assert_eq!(eulerian_number(4, 7), BigInt::zero());
        for k in 1..=6 {
            assert_eq!(eulerian_number(k, 1), BigInt::one());
        }
        for nu in 2..=12usize {
            let expect = BigInt::from(2).pow(nu as u32) - nu - 1;
            assert_eq!(eulerian_number(nu, 2), expect);
        }
    }

    #[test]
    fn eulerian_row_sums_and_symmetry() {
        for k in 0..=12usize {
            let a = eulerian_poly(k);
            assert_eq!(a.eval(&int(1)), from_bigint(factorial(k)));
            if k >= 1 {
                assert_eq!(a.degree(), Some(k));
                assert!(a.leading().unwrap().is_one());
                assert!(a.constant_term().is_zero());
                let (p, reduced) = a.strip_var_power();
                assert_eq!(p, 1);
                assert!(reduced.is_palindromic(), "k={k}");
                for j in 1..=k {
                    assert_eq!(eulerian_number(k, j), eulerian_number(k, k + 1 - j));
                }
            }
        }
    }

    #[test]
    fn higher_order_bernoulli() {
        assert_eq!(higher_bernoulli_poly(2, 3), UniPoly::from_ints(Var::Z, &[2, -3, 1]));
        for k in 0..=8 {
            assert_eq!(higher_bernoulli_poly(k, 1), bernoulli_poly(k));
        }
        for r in 1..5 {
            assert_eq!(higher_bernoulli_poly(0, r), UniPoly::one(Var::Z));
        }
        for m in 2..=10usize {
            assert_eq!(
                higher_bernoulli_poly(m - 1, m as u32),
                falling_product(Var::Z, 1, 0, m - 1),
                "m={m}"
            );
        }
    }

    #[test]
    fn polylog_at_negative_order() {
        let sq: Vec<Rational> = (0..=6).map(|m| int(m * m)).collect();
        assert_eq!(polylog_neg_series(2, 6), sq);
        assert!(polylog_neg_check(2, 6));
        assert!(polylog_neg_check(1, 5));
        assert!(polylog_neg_check(6, 12));
    }

    #[test]
    fn polylog_check_brute_force() {
        // independent: m^6 computed directly, compared with the series division
        let series = polylog_neg_series(6, 12);
        for (m, c) in series.iter().enumerate() {
            let m = m as i64;
            assert_eq!(*c, int(m * m * m * m * m * m));
        }
    }
}
