//! The sequences `a_n`, `c_n` (coefficient of `z` in `S_{n,2}` up to sign)
//! and `c_n^{(3)}` (coefficient of `z` in `S_{n,3}`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, binomial_rational, factorial};
use crate::rational::{from_bigint, int, is_integral, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqName {
    C,
    A,
    C3,
}

impl SeqName {
    pub fn name(self) -> &'static str {
        match self {
            SeqName::C => "c",
            SeqName::A => "a",
            SeqName::C3 => "c3",
        }
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `values[i]` is the term with index `first + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqTable {
    pub name: SeqName,
    pub first: usize,
    pub values: Vec<Rational>,
}

impl SeqTable {
    pub fn get(&self, index: usize) -> Option<&Rational> {
        index
            .checked_sub(self.first)
            .and_then(|i| self.values.get(i))
    }

    pub fn indexed(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().enumerate().map(|(i, v)| (self.first + i, v))
    }
}

/// `a_0, .., a_{count-1}` from `A = 1 + 3z A^2 - 2z^2 A^3`, i.e.
/// `a_n = [n=0] + 3 sum_{i+j=n-1} a_i a_j - 2 sum_{i+j+l=n-2} a_i a_j a_l`.
pub fn seq_a_integers(count: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(count);
    // square[m] = [z^m] A^2, kept in step with `a`
    let mut square: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut v = if n == 0 { BigInt::one() } else { BigInt::zero() };
        if n >= 1 {
            v += &square[n - 1] * 3;
        }
        if n >= 2 {
            // [z^{n-2}] A^3 = sum_i a_i [z^{n-2-i}] A^2
            let cube: BigInt = (0..=n - 2).map(|i| &a[i] * &square[n - 2 - i]).sum();
            v -= cube * 2;
        }
        a.push(v);
        let sq: BigInt = (0..=n).map(|i| &a[i] * &a[n - i]).sum();
        square.push(sq);
    }
    a
}

pub fn seq_a(count: usize) -> SeqTable {
    SeqTable {
        name: SeqName::A,
        first: 0,
        values: seq_a_integers(count).into_iter().map(from_bigint).collect(),
    }
}

/// `a_n = 2^{2n}/(n+1) C(3n/2, n)` for even `n`.
pub fn a_even_closed(n: usize) -> BigInt {
    assert!(n.is_multiple_of(2));
    (BigInt::one() << (2 * n)) * binomial(3 * n as i64 / 2, n as i64) / (n + 1)
}

/// `c_n = 1 / (2 (3n+2) a_n)` for `n = 0..count`.
pub fn seq_c(count: usize) -> SeqTable {
    let values = seq_a_integers(count)
        .into_iter()
        .enumerate()
        .map(|(n, a)| Rational::new(BigInt::one(), a * (2 * (3 * n + 2))))
        .collect();
    SeqTable {
        name: SeqName::C,
        first: 0,
        values,
    }
}

/// `c_n = 2^{-2n-2} / C(3n/2 + 1, n + 1)` with a generalized binomial,
/// valid for every `n >= 0`.
pub fn c_closed(n: usize) -> Rational {
    let top = rat(3 * n as i64 + 2, 2);
    let b = binomial_rational(&top, n + 1);
    Rational::new(BigInt::one(), BigInt::one() << (2 * n + 2)) / b
}

/// Divisibility facts about `1/c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFlags {
    pub unit_fraction: bool,
    pub even: bool,
    pub divisible_by_2_3n_plus_2: bool,
}

impl CFlags {
    pub fn all(&self) -> bool {
        self.unit_fraction && self.even && self.divisible_by_2_3n_plus_2
    }
}

pub fn c_flags(n: usize, c: &Rational) -> CFlags {
    let unit_fraction = c.numer().is_one() && c.denom().is_positive();
    let den = c.denom();
    CFlags {
        unit_fraction,
        even: unit_fraction && (den % 2u32).is_zero(),
        divisible_by_2_3n_plus_2: unit_fraction && (den % (2 * (3 * n + 2))).is_zero(),
    }
}

/// `c_n^{(3)}` for `n = 1..=count`, from
/// `(n+1)/(6 (4n+3)!) sum_j (-1)^{n+j} (n+j)! (3n+2-j)!
///   sum_i C(n+1, i) C(n+1-i, j-2i) 4^{j-2i}`.
pub fn seq_c3(count: usize) -> SeqTable {
    SeqTable {
        name: SeqName::C3,
        first: 1,
        values: (1..=count).map(c3_term).collect(),
    }
}

/// `[y^j] (1 + 4y + y^2)^{n+1}` as a binomial double sum.
pub fn a3_binomial(n: usize, j: usize) -> BigInt {
    let m = n as i64 + 1;
    let j = j as i64;
    (0..=m)
        .filter(|&i| j - 2 * i >= 0)
        .map(|i| binomial(m, i) * binomial(m - i, j - 2 * i) * (BigInt::one() << (2 * (j - 2 * i)) as usize))
        .sum()
}

fn c3_term(n: usize) -> Rational {
    let mut sum = BigInt::zero();
    for j in 0..=2 * n + 2 {
        let term = factorial(n + j) * factorial(3 * n + 2 - j) * a3_binomial(n, j);
        if (n + j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational::new(sum * (n + 1), factorial(4 * n + 3) * 6)
}

/// `12(4n+5)(4n+11) c_{n+2} - 8(n+3)(2n+3) c_{n+1} - (n+2)(n+3) c_n`.
pub fn c3_recurrence_residual(n: usize, cn: &Rational, cn1: &Rational, cn2: &Rational) -> Rational {
    let n = n as i64;
    int(12 * (4 * n + 5) * (4 * n + 11)) * cn2
        - int(8 * (n + 3) * (2 * n + 3)) * cn1
        - int((n + 2) * (n + 3)) * cn
}

/// Residuals for every consecutive triple of the table.
pub fn c3_residuals(table: &SeqTable) -> Vec<(usize, Rational)> {
    table
        .values
        .windows(3)
        .enumerate()
        .map(|(i, w)| {
            let n = table.first + i;
            (n, c3_recurrence_residual(n, &w[0], &w[1], &w[2]))
        })
        .collect()
}

pub fn all_integral(table: &SeqTable) -> bool {
    table.values.iter().all(|v| is_integral(v) && v.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tornheim::coeffz::{c_closed_odd, coeff_z_thm8};

    #[test]
    fn a_sequence() {
        let a = seq_a_integers(7);
        assert_eq!(a[..5], [1, 3, 16, 105, 768].map(BigInt::from));
        assert_eq!(a[6], BigInt::from(49152));
        for n in (0..=10).step_by(2) {
            assert_eq!(seq_a_integers(n + 1)[n], a_even_closed(n), "n={n}");
        }
        assert!(all_integral(&seq_a(15)));
    }

    #[test]
    fn c_sequence() {
        let c = seq_c(5);
        let expect = [4, 30, 256, 2310, 21504].map(|d| rat(1, d));
        assert_eq!(c.values, expect);
        assert_eq!(c.get(1), Some(&rat(1, 30)));
        for (n, v) in seq_c(13).indexed() {
            assert!(c_flags(n, v).all(), "n={n}");
            assert_eq!(*v, c_closed(n), "n={n}");
            if n % 2 == 1 {
                assert_eq!(*v, c_closed_odd(n));
            }
        }
    }

    #[test]
    fn c_matches_coefficient_of_z_for_odd_n() {
        let c = seq_c(10);
        for n in (1..=9).step_by(2) {
            assert_eq!(-c.get(n).unwrap().clone(), coeff_z_thm8(n, 2).value, "n={n}");
        }
    }

    #[test]
    fn c3_sequence() {
        let t = seq_c3(4);
        assert_eq!(
            t.values,
            vec![rat(-1, 126), rat(-1, 1155), rat(-1, 6930), rat(-10, 513513)]
        );
        for n in 1..=4 {
            assert_eq!(t.get(n).unwrap(), &coeff_z_thm8(n, 3).value);
        }
    }

    #[test]
    fn c3_recurrence_holds() {
        // with the listed values at n = 1
        let r = c3_recurrence_residual(1, &rat(-1, 126), &rat(-1, 1155), &rat(-1, 6930));
        assert!(r.is_zero());
        for (n, r) in c3_residuals(&seq_c3(22)) {
            assert!(r.is_zero(), "n={n}");
        }
    }

    #[test]
    fn flags_reject_non_unit_fractions() {
        assert!(!c_flags(0, &rat(3, 4)).all());
        assert!(!c_flags(1, &rat(1, 15)).even);
        assert!(!c_flags(1, &rat(1, 4)).divisible_by_2_3n_plus_2);
    }
}
