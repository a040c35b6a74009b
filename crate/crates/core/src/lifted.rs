//! Integer-lifted coefficient vectors.
//!
//! Multiplying polynomials coefficient by coefficient over `BigRational`
//! pays a gcd on every product and every partial sum. Here a vector of
//! rationals is rewritten as `nums / den` with one shared denominator, the
//! convolution runs over plain integers, and reduction happens once per
//! output coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Lifted {
    pub nums: Vec<BigInt>,
    pub den: BigInt,
}

impl Lifted {
    pub fn from_rationals<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Rational>,
        I::IntoIter: Clone,
    {
        let iter = coeffs.into_iter();
        let den = iter
            .clone()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = iter
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Lifted { nums, den }
    }

    pub fn into_rationals(self) -> Vec<Rational> {
        let den = self.den;
        self.nums
            .into_iter()
            .map(|n| Rational::new(n, den.clone()))
            .collect()
    }
}

/// Integer convolution, `out[i + j] += a[i] * b[j]`.
pub(crate) fn convolve_into(out: &mut Vec<BigInt>, a: &[BigInt], b: &[BigInt]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    let need = a.len() + b.len() - 1;
    if out.len() < need {
        out.resize(need, BigInt::zero());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
}

pub(crate) fn mul_rational_vecs(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let la = Lifted::from_rationals(a);
    let lb = Lifted::from_rationals(b);
    let mut out = Vec::new();
    convolve_into(&mut out, &la.nums, &lb.nums);
    Lifted {
        nums: out,
        den: la.den * lb.den,
    }
    .into_rationals()
}
