//! The multisum polynomials
//! `S^{(n)}_{k,nu}(y) = sum_{j_1+..+j_n = nu} prod C(k, j_i) A_{j_i}(y)`
//! and the d-coefficient tables derived from them.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{binomial, for_each_bounded_composition, for_each_weak_composition, multinomial};
use crate::poly::{UniPoly, Var};
use crate::rational::from_bigint;
use crate::special::eulerian_poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultisumRoute {
    /// Sum over every `(j_1, .., j_n)` with `j_i <= k`.
    Enumeration,
    /// Group equal indices: multiplicity vectors weighted by multinomials.
    Multinomial,
}

fn weighted_eulerian(k: usize) -> Vec<UniPoly> {
    (0..=k)
        .map(|j| eulerian_poly(j).scale(&from_bigint(binomial(k as i64, j as i64))))
        .collect()
}

/// `S^{(n)}_{k,nu}(y)`.
pub fn multisum_poly(k: usize, nu: usize, n: usize, route: MultisumRoute) -> UniPoly {
    let factors = weighted_eulerian(k);
    let mut total = UniPoly::zero(Var::Y);
    match route {
        MultisumRoute::Enumeration => {
            for_each_bounded_composition(nu, n, k, |parts| {
                let prod = parts
                    .iter()
                    .fold(UniPoly::one(Var::Y), |acc, &j| &acc * &factors[j]);
                total = &total + &prod;
            });
        }
        MultisumRoute::Multinomial => {
            // t_i = number of indices equal to i; sum t_i = n, sum i t_i = nu
            for_each_weak_composition(n, k + 1, |t| {
                let weight: usize = t.iter().enumerate().map(|(i, &c)| i * c).sum();
                if weight != nu {
                    return;
                }
                let prod = t
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .fold(UniPoly::one(Var::Y), |acc, (i, &c)| {
                        &acc * &factors[i].pow(c as u32)
                    });
                total = &total + &prod.scale(&from_bigint(multinomial(t)));
            });
        }
    }
    total
}

/// Closed forms for the coefficients of `y`, `y^2` and `y^nu` in
/// `S^{(n)}_{k,nu}(y)` (`nu >= 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma5Coeffs {
    pub c1: BigInt,
    pub c2: BigInt,
    pub c_nu: BigInt,
}

pub fn lemma5_coeffs(k: usize, nu: usize, n: usize) -> Lemma5Coeffs {
    assert!(nu >= 1);
    let (k, nu, n) = (k as i64, nu as i64, n as i64);
    let ck = binomial(k, nu);
    let c1 = BigInt::from(n) * &ck;
    let eulerian2 = (BigInt::from(1) << nu as usize) - nu - 1;
    let c2 = binomial(n, 2) * (binomial(2 * k, nu) - BigInt::from(2) * &ck)
        + BigInt::from(n) * eulerian2 * &ck;
    Lemma5Coeffs {
        c1,
        c2,
        c_nu: binomial(n * k, nu),
    }
}

/// Integer coefficients of `(1 - y)^{nk - nu} S^{(n)}_{k,nu}(y)`, indexed
/// `j = 0..=nk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCoeffTable {
    pub n: usize,
    pub k: usize,
    pub nu: usize,
    pub d: Vec<BigInt>,
}

/// Here `n` is the number of factors in the multisum (the power of `F_k`).
pub fn d_coeffs(n: usize, k: usize, nu: usize) -> DCoeffTable {
    let nk = n * k;
    assert!(nu <= nk, "nu must not exceed nk");
    let one_minus_y = UniPoly::from_ints(Var::Y, &[1, -1]);
    let poly = &one_minus_y.pow((nk - nu) as u32)
        * &multisum_poly(k, nu, n, MultisumRoute::Enumeration);
    let ints = poly.integer_coeffs().expect("integer polynomial");
    let mut d = vec![BigInt::zero(); nk + 1];
    for (slot, c) in d.iter_mut().zip(ints) {
        *slot = c;
    }
    DCoeffTable { n, k, nu, d }
}
