//! Truncated power series in `x` with polynomial coefficients, i.e. the ring
//! `Q[z][[x]] / (x^(N+1))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lifted::{convolve_into, Lifted};
use crate::poly::{UniPoly, Var};
use crate::rational::Rational;

/// Series `sum_{m=0}^{order} coeffs[m] x^m`, kept through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    var: Var,
    coeffs: Vec<UniPoly>,
}

impl TruncSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept. Every coefficient must use `var`.
    pub fn new(var: Var, order: usize, mut coeffs: Vec<UniPoly>) -> Self {
        coeffs.resize(order + 1, UniPoly::zero(var));
        debug_assert!(coeffs.iter().all(|c| c.var() == var));
        TruncSeries { order, var, coeffs }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::new(var, order, Vec::new())
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, order, UniPoly::one(var))
    }

    pub fn constant(var: Var, order: usize, c: UniPoly) -> Self {
        Self::new(var, order, vec![c])
    }

    /// Series whose coefficients are the given constants.
    pub fn from_rationals(var: Var, order: usize, coeffs: Vec<Rational>) -> Self {
        Self::new(
            var,
            order,
            coeffs
                .into_iter()
                .map(|c| UniPoly::constant(var, c))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// `[x^m]` of the series.
    pub fn coefficient(&self, m: usize) -> Result<&UniPoly> {
        self.coeffs.get(m).ok_or(Error::IndexBeyondOrder {
            index: m,
            order: self.order,
        })
    }

    /// Constant terms of the coefficients, for series whose coefficients are
    /// all constants.
    pub fn constant_terms(&self) -> Vec<Rational> {
        self.coeffs.iter().map(UniPoly::constant_term).collect()
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        let order = order.min(self.order);
        TruncSeries {
            order,
            var: self.var,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncSeries { order, var: self.var, coeffs }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &UniPoly) -> TruncSeries {
        TruncSeries {
            order: self.order,
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> TruncSeries {
        TruncSeries {
            order: self.order,
            var: self.var,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiply by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut coeffs = vec![UniPoly::zero(self.var); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(k)).cloned());
        TruncSeries { order: self.order, var: self.var, coeffs }
    }

    /// Truncated product. Both operands are lifted to integer coefficient
    /// arrays over a single denominator each, so the convolution itself runs
    /// without any rational normalization.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.var, other.var, "series coefficient variable mismatch");
        let order = self.order.min(other.order);
        let a = LiftedSeries::new(&self.coeffs[..=order]);
        let b = LiftedSeries::new(&other.coeffs[..=order]);
        let den = &a.den * &b.den;
        let coeffs = (0..=order)
            .map(|m| {
                let mut acc = Vec::new();
                for i in 0..=m {
                    convolve_into(&mut acc, &a.nums[i], &b.nums[m - i]);
                }
                UniPoly::new(
                    self.var,
                    Lifted { nums: acc, den: den.clone() }.into_rationals(),
                )
            })
            .collect();
        TruncSeries { order, var: self.var, coeffs }
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, mut n: u32) -> TruncSeries {
        let mut acc = TruncSeries::one(self.var, self.order);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse. The constant coefficient must be a nonzero
    /// constant polynomial.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let c0 = &self.coeffs[0];
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.constant_term().recip();
        let mut out: Vec<UniPoly> = Vec::with_capacity(self.order + 1);
        out.push(UniPoly::constant(self.var, inv0.clone()));
        for m in 1..=self.order {
            let mut acc = UniPoly::zero(self.var);
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[m - i]);
                }
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(TruncSeries { order: self.order, var: self.var, coeffs: out })
    }

    /// `p(S)` by Horner's rule in the series ring. The coefficients of `p`
    /// are taken as constants.
    pub fn compose_poly(p: &UniPoly, s: &TruncSeries) -> TruncSeries {
        p.coeffs()
            .iter()
            .rev()
            .fold(TruncSeries::zero(s.var, s.order), |acc, c| {
                let mut next = acc.mul(s);
                next.coeffs[0] = &next.coeffs[0] + &UniPoly::constant(s.var, c.clone());
                next
            })
    }
}

struct LiftedSeries {
    nums: Vec<Vec<BigInt>>,
    den: BigInt,
}

impl LiftedSeries {
    fn new(coeffs: &[UniPoly]) -> Self {
        let den = coeffs
            .iter()
            .flat_map(|p| p.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .map(|c| {
                        if c.is_zero() {
                            BigInt::zero()
                        } else {
                            c.numer() * (&den / c.denom())
                        }
                    })
                    .collect()
            })
            .collect();
        LiftedSeries { nums, den }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn consts(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_rationals(Var::Z, order, c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn ring_basics() {
        let a = consts(3, &[1, 1]);
        let b = consts(3, &[1, -1]);
        assert_eq!(a.mul(&b), consts(3, &[1, 0, -1]));
        assert_eq!(a.pow(0), TruncSeries::one(Var::Z, 3));
        assert_eq!(a.pow(3), consts(3, &[1, 3, 3, 1]));
        // mixed orders truncate to the smaller one
        assert_eq!(consts(5, &[1, 1]).mul(&consts(2, &[1, 1])), consts(2, &[1, 2, 1]));
        assert_eq!(consts(2, &[1, 2, 3]).shift(1), consts(2, &[0, 1, 2]));
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let inv = consts(5, &[1, -1]).inverse().unwrap();
        assert_eq!(inv, consts(5, &[1, 1, 1, 1, 1, 1]));
        assert_eq!(consts(3, &[0, 1]).inverse(), Err(Error::NonUnitConstantTerm));
        let z = TruncSeries::constant(Var::Z, 3, UniPoly::identity(Var::Z));
        assert_eq!(z.inverse(), Err(Error::NonUnitConstantTerm));
        // non-monic unit constant term
        let two = consts(2, &[2, 1]);
        assert_eq!(two.mul(&two.inverse().unwrap()), TruncSeries::one(Var::Z, 2));
    }

    #[test]
    fn coefficient_bounds() {
        let s = consts(2, &[1, 2, 3]);
        assert_eq!(s.coefficient(2).unwrap(), &UniPoly::constant(Var::Z, int(3)));
        assert_eq!(
            s.coefficient(3),
            Err(Error::IndexBeyondOrder { index: 3, order: 2 })
        );
    }

    #[test]
    fn compose_with_constant_polynomial() {
        let s = consts(4, &[2, 7, 1]);
        let one = UniPoly::one(Var::Y).with_var(Var::Z);
        assert_eq!(TruncSeries::compose_poly(&one, &s), TruncSeries::one(Var::Z, 4));
        let id = UniPoly::identity(Var::Z);
        assert_eq!(TruncSeries::compose_poly(&id, &s), s);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec(
            proptest::collection::vec((-9i64..9, 1i64..5), 0..4),
            order + 1,
        )
        .prop_map(move |cs| {
            TruncSeries::new(
                Var::Z,
                order,
                cs.into_iter()
                    .map(|c| UniPoly::new(Var::Z, c.into_iter().map(|(n, d)| rat(n, d)).collect()))
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_is_commutative_and_associative(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn pow_is_repeated_mul(a in arb_series(4), n in 0u32..6) {
            let naive = (0..n).fold(TruncSeries::one(Var::Z, 4), |acc, _| acc.mul(&a));
            prop_assert_eq!(a.pow(n), naive);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_series(6), c0 in 1i64..20) {
            let mut coeffs = a.coeffs().to_vec();
            coeffs[0] = UniPoly::constant(Var::Z, int(c0));
            let a = TruncSeries::new(Var::Z, 6, coeffs);
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv), TruncSeries::one(Var::Z, 6));
            prop_assert_eq!(inv.mul(&a), TruncSeries::one(Var::Z, 6));
        }
    }
}
