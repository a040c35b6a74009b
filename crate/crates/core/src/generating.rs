//! Generating functions used throughout: exponentials, powers of
//! `x/(e^x - 1)`, and the two constructions of the auxiliary series
//! `F_k(x, z)` together with `G_k(x, z)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::factorial;
use crate::poly::{UniPoly, Var};
use crate::rational::{from_bigint, Rational};
use crate::series::TruncSeries;
use crate::special::{bernoulli_poly, eulerian_poly};

fn inv_factorial(m: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(m))
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `e^{zx} = sum z^m/m! x^m`.
pub fn exp_zx(order: usize) -> TruncSeries {
    TruncSeries::new(
        Var::Z,
        order,
        (0..=order)
            .map(|m| UniPoly::monomial(Var::Z, inv_factorial(m), m))
            .collect(),
    )
}

/// `e^x` with constant coefficients.
pub fn exp_x(order: usize) -> TruncSeries {
    TruncSeries::from_rationals(Var::Z, order, (0..=order).map(inv_factorial).collect())
}

/// `(x/(e^x - 1))^r`, obtained by inverting `(e^x - 1)/x = sum x^m/(m+1)!`.
pub fn x_over_expm1_pow(r: u32, order: usize) -> TruncSeries {
    let expm1_over_x =
        TruncSeries::from_rationals(Var::Z, order, (0..=order).map(|m| inv_factorial(m + 1)).collect());
    expm1_over_x
        .inverse()
        .expect("constant term is 1")
        .pow(r)
}

/// `p(S)` with the coefficients of `p` read as constants.
pub fn poly_at_series(p: &UniPoly, s: &TruncSeries) -> TruncSeries {
    TruncSeries::compose_poly(p, s)
}

/// `F_k(x, z)` from its Bernoulli-polynomial expansion:
/// `[x^0] = 1`, `[x^1..x^k] = 0`, and
/// `[x^{k+1+m}] = (-1)^k B_{m+k+1}(z) / (k! m! (m+k+1))`.
pub fn build_f_direct(k: usize, order: usize) -> TruncSeries {
    let mut coeffs = vec![UniPoly::zero(Var::Z); order + 1];
    coeffs[0] = UniPoly::one(Var::Z);
    let kfact = from_bigint(factorial(k));
    for idx in (k + 1)..=order {
        let m = idx - k - 1;
        let scale = sign(k % 2 == 1)
            / (&kfact * from_bigint(factorial(m)) * from_bigint(BigInt::from(idx)));
        coeffs[idx] = &coeffs[idx] + &bernoulli_poly(idx).scale(&scale);
    }
    TruncSeries::new(Var::Z, order, coeffs)
}

/// `F_k(x, z)` as
/// `(x/(e^x-1))^{k+1} e^{xz} sum_{j=0}^{k} (1-e^x)^j A_{k-j}(e^x)/(k-j)! z^j/j!`,
/// built from Eulerian polynomials only. Requires `k >= 1`.
pub fn build_f_eulerian(k: usize, order: usize) -> TruncSeries {
    assert!(k >= 1, "Eulerian form of F_k needs k >= 1");
    let ex = exp_x(order);
    let one_minus_ex = TruncSeries::one(Var::Z, order).sub(&ex);

    let mut sum = TruncSeries::zero(Var::Z, order);
    let mut power = TruncSeries::one(Var::Z, order);
    for j in 0..=k {
        let a = poly_at_series(&eulerian_poly(k - j), &ex);
        let zj = UniPoly::monomial(
            Var::Z,
            Rational::new(BigInt::one(), factorial(k - j) * factorial(j)),
            j,
        );
        sum = sum.add(&power.mul(&a).scale(&zj));
        if j < k {
            power = power.mul(&one_minus_ex);
        }
    }
    x_over_expm1_pow(k as u32 + 1, order)
        .mul(&exp_zx(order))
        .mul(&sum)
}

/// `G_k(x, z) = (-1)^k/k! sum_{j>=1} B_{j+k}(z) / ((j-1)! (j+k)) x^j`.
pub fn build_g(k: usize, order: usize) -> TruncSeries {
    let kfact = from_bigint(factorial(k));
    let coeffs = (0..=order)
        .map(|j| {
            if j == 0 {
                return UniPoly::zero(Var::Z);
            }
            let scale = sign(k % 2 == 1)
                / (&kfact
                    * from_bigint(factorial(j - 1))
                    * from_bigint(BigInt::from(j + k)));
            bernoulli_poly(j + k).scale(&scale)
        })
        .collect();
    TruncSeries::new(Var::Z, order, coeffs)
}

/// `1 + x^k G_k`, which should reproduce `F_k`.
pub fn one_plus_shifted_g(k: usize, order: usize) -> TruncSeries {
    TruncSeries::one(Var::Z, order).add(&build_g(k, order).shift(k))
}

/// Coefficients of a constant-coefficient series multiplied by `m!`.
pub fn egf_values(s: &TruncSeries) -> Vec<Rational> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(m, p)| p.constant_term() * from_bigint(factorial(m)))
        .collect()
}

/// Coefficients of `s` multiplied by `m!`.
pub fn egf_polys(s: &TruncSeries) -> Vec<UniPoly> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(m, p)| p.scale(&from_bigint(factorial(m))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::special::bernoulli_number;

    #[test]
    fn exponentials() {
        let e = exp_zx(2);
        assert_eq!(e.coeffs()[0], UniPoly::one(Var::Z));
        assert_eq!(e.coeffs()[1], UniPoly::identity(Var::Z));
        assert_eq!(e.coeffs()[2], UniPoly::monomial(Var::Z, rat(1, 2), 2));
        assert_eq!(
            exp_zx(5).coefficient(3).unwrap(),
            &UniPoly::monomial(Var::Z, rat(1, 6), 3)
        );
    }

    #[test]
    fn x_over_expm1_gives_bernoulli_numbers() {
        assert_eq!(
            egf_values(&x_over_expm1_pow(1, 4)),
            vec![int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30)]
        );
        let v = egf_values(&x_over_expm1_pow(1, 10));
        for (m, b) in v.iter().enumerate() {
            assert_eq!(*b, bernoulli_number(m));
        }
        let polys = egf_polys(&x_over_expm1_pow(1, 8).mul(&exp_zx(8)));
        for (m, p) in polys.iter().enumerate() {
            assert_eq!(*p, bernoulli_poly(m));
        }
    }

    #[test]
    fn poly_at_exponential() {
        let y = UniPoly::identity(Var::Y);
        assert_eq!(poly_at_series(&y, &exp_x(6)), exp_x(6));
        let a2 = UniPoly::from_ints(Var::Y, &[0, 1, 1]);
        let s = poly_at_series(&a2, &exp_x(4));
        // e^{2x} + e^x: 2, 3, 5/2, 3/2, 17/24
        assert_eq!(
            s.constant_terms(),
            vec![int(2), int(3), rat(5, 2), rat(3, 2), rat(17, 24)]
        );
        assert_eq!(
            poly_at_series(&UniPoly::one(Var::Y), &exp_x(3)),
            TruncSeries::one(Var::Z, 3)
        );
    }

    #[test]
    fn f_direct_shapes() {
        // k = 0: F_0 = x e^{zx}/(e^x - 1) term by term
        let f0 = build_f_direct(0, 6);
        for j in 0..=6 {
            let expect = bernoulli_poly(j).scale(&Rational::new(BigInt::one(), factorial(j)));
            assert_eq!(f0.coeffs()[j], expect, "j={j}");
        }
        let f1 = build_f_direct(1, 2);
        let b2 = UniPoly::new(Var::Z, vec![rat(1, 6), int(-1), int(1)]);
        let expect = vec![UniPoly::one(Var::Z), UniPoly::zero(Var::Z), b2.scale(&rat(-1, 2))];
        assert_eq!(f1.coeffs(), expect.as_slice());
        let f2 = build_f_direct(2, 5);
        assert!(f2.coeffs()[1].is_zero() && f2.coeffs()[2].is_zero());
        assert_eq!(build_f_direct(1, 4).coefficient(0).unwrap(), &UniPoly::one(Var::Z));
    }

    #[test]
    fn eulerian_form_matches_direct_form() {
        assert_eq!(build_f_eulerian(1, 2), build_f_direct(1, 2));
        assert_eq!(build_f_eulerian(1, 8), build_f_direct(1, 8));
        assert_eq!(build_f_eulerian(3, 10), build_f_direct(3, 10));
    }

    #[test]
    fn g_relation() {
        assert_eq!(one_plus_shifted_g(0, 4), build_f_direct(0, 4));
        assert_eq!(one_plus_shifted_g(2, 6), build_f_direct(2, 6));
        for k in 0..4 {
            assert!(build_g(k, 3).coeffs()[0].is_zero());
        }
    }

    #[test]
    fn reflection_of_f() {
        for k in 0..=4 {
            let f = build_f_direct(k, 12);
            for (m, c) in f.coeffs().iter().enumerate() {
                let s = if m % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(c.reflect().scale(&s), *c, "k={k} m={m}");
            }
        }
    }
}
