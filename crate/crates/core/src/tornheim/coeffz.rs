//! Coefficient of `z` in `S_{n,k}(z)`, and the integers
//! `a_j^{(k,n)} = [y^j] (A_k(y)/y)^n` and `u_nu^{(k,n)}` feeding it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, for_each_composition, for_each_weak_composition, multinomial};
use crate::error::{Error, Result};
use crate::poly::{UniPoly, Var};
use crate::rational::Rational;
use crate::series::TruncSeries;
use crate::special::{eulerian_number, eulerian_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AjRoute {
    /// Coefficient of `y^j` in the polynomial power `(A_k(y)/y)^n`.
    PolyPower,
    /// Constrained multinomial sum over Eulerian numbers.
    Multinomial,
    /// Alternating binomial inversion of the `u_nu` numbers.
    Inversion,
}

impl AjRoute {
    pub const ALL: [AjRoute; 3] = [AjRoute::PolyPower, AjRoute::Multinomial, AjRoute::Inversion];
}

/// `A_k(y)/y`, a self-reciprocal polynomial of degree `k - 1`.
pub fn reduced_eulerian(k: usize) -> UniPoly {
    assert!(k >= 1);
    eulerian_poly(k).strip_var_power().1
}

/// All of `a_0^{(k,n)}, .., a_{n(k-1)}^{(k,n)}` via the polynomial power.
pub fn a_row(k: usize, n: usize) -> Vec<BigInt> {
    reduced_eulerian(k)
        .pow(n as u32)
        .integer_coeffs()
        .expect("integer polynomial")
}

pub fn a_jkn(k: usize, n: usize, j: usize, route: AjRoute) -> BigInt {
    assert!(k >= 1 && n >= 1);
    if j > n * (k - 1) {
        return BigInt::zero();
    }
    match route {
        AjRoute::PolyPower => a_row(k, n).swap_remove(j),
        AjRoute::Multinomial => a_jkn_multinomial(k, n, j),
        AjRoute::Inversion => {
            let top = ((k + 1) * n) as i64;
            (0..=j).fold(BigInt::zero(), |acc, nu| {
                let term = binomial(top, (j - nu) as i64) * u_nu(k, n, nu);
                if (j - nu).is_multiple_of(2) {
                    acc + term
                } else {
                    acc - term
                }
            })
        }
    }
}

// sum_{r=0}^{n} C(n, r) sum_{j_2+..+j_k = r, j_2 + 2 j_3 + .. + (k-1) j_k = j}
//   multinomial(r; j_2..j_k) A(k,2)^{j_2} .. A(k,k)^{j_k}
fn a_jkn_multinomial(k: usize, n: usize, j: usize) -> BigInt {
    let eul: Vec<BigInt> = (2..=k).map(|i| eulerian_number(k, i)).collect();
    let mut total = BigInt::zero();
    for r in 0..=n {
        let mut inner = BigInt::zero();
        for_each_weak_composition(r, k - 1, |parts| {
            let weight: usize = parts.iter().enumerate().map(|(i, &p)| (i + 1) * p).sum();
            if weight != j {
                return;
            }
            let prod = parts
                .iter()
                .zip(&eul)
                .fold(multinomial(parts), |acc, (&p, a)| acc * a.pow(p as u32));
            inner += prod;
        });
        total += binomial(n as i64, r as i64) * inner;
    }
    total
}

/// `sum over j_1..j_n >= 1 with sum nu + n of (j_1 .. j_n)^k`.
pub fn u_nu(k: usize, n: usize, nu: usize) -> BigInt {
    let mut total = BigInt::zero();
    for_each_composition(nu + n, n, |parts| {
        let prod = parts.iter().fold(BigInt::one(), |acc, &p| acc * p);
        total += prod.pow(k as u32);
    });
    total
}

/// Coefficients of `(A_k(y)/y)^n / (1 - y)^{(k+1)n}` through `y^order`.
pub fn u_series(k: usize, n: usize, order: usize) -> Vec<Rational> {
    let num = TruncSeries::from_rationals(
        Var::Y,
        order,
        reduced_eulerian(k).pow(n as u32).into_coeffs(),
    );
    let den = TruncSeries::from_rationals(Var::Y, order, vec![Rational::one(), -Rational::one()])
        .pow(((k + 1) * n) as u32);
    num.mul(&den.inverse().expect("unit constant term"))
        .constant_terms()
}

/// Coefficient of `z` in `S_{n,k}(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffZ {
    /// The coefficient. Forced to zero when `n` and `k` are both even.
    pub value: Rational,
    /// The explicit sum over `a_j^{(k,n+1)}`, evaluated for every parity.
    pub formula: Rational,
    pub both_even: bool,
}

impl CoeffZ {
    /// False only if the explicit sum disagrees with the zero forced by
    /// parity.
    pub fn consistent(&self) -> bool {
        self.value == self.formula
    }
}

/// `(-1)^{k(n+1)-1} (n+1) / (k! ((k+1)(n+1)-1)!)
///   sum_j (-1)^j a_j^{(k,n+1)} (n+j)! (k(n+1)-1-j)!`.
pub fn coeff_z_formula(n: usize, k: usize) -> Rational {
    assert!(n >= 1 && k >= 1);
    let m = n + 1;
    let row = a_row(k, m);
    let mut sum = BigInt::zero();
    for (j, a) in row.iter().enumerate() {
        let term = a * factorial(n + j) * factorial(k * m - 1 - j);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut value = Rational::new(
        sum * m,
        factorial(k) * factorial((k + 1) * m - 1),
    );
    if (k * m - 1) % 2 == 1 {
        value = -value;
    }
    value
}

pub fn coeff_z_thm8(n: usize, k: usize) -> CoeffZ {
    let formula = coeff_z_formula(n, k);
    let both_even = n.is_multiple_of(2) && k.is_multiple_of(2);
    let value = if both_even {
        Rational::zero()
    } else {
        formula.clone()
    };
    CoeffZ {
        value,
        formula,
        both_even,
    }
}

/// Closed forms for `k = 1` (any `n`) and `k = 2` (odd `n`).
pub fn coeff_z_closed(n: usize, k: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    match k {
        1 => {
            let c = Rational::new(BigInt::one(), binomial(2 * n as i64 + 1, n as i64));
            Ok(if n % 2 == 1 { -c } else { c })
        }
        2 if n.is_multiple_of(2) => Err(Error::VanishesByParity),
        2 => Ok(-c_closed_odd(n)),
        _ => Err(Error::OutOfRange("closed form exists for k = 1 and k = 2 only".into())),
    }
}

/// `(n+1)!^2 (n + (n+1)/2)! / (2 (3n+2)! ((n+1)/2)!)` for odd `n`.
pub(crate) fn c_closed_odd(n: usize) -> Rational {
    assert!(n % 2 == 1);
    let h = n.div_ceil(2);
    Rational::new(
        factorial(n + 1).pow(2) * factorial(n + h),
        BigInt::from(2) * factorial(3 * n + 2) * factorial(h),
    )
}
