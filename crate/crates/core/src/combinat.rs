//! Integer combinatorics: factorials, binomials, multinomials and
//! composition enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, m)`; zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `C(top, m)` for rational `top`.
pub fn binomial_rational(top: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= top - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// `n! / (j_1! ... j_r!)` where `n = sum j_i`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0i64;
    for &p in parts {
        for i in 1..=p as i64 {
            total += 1;
            acc *= total;
            acc /= i;
        }
    }
    acc
}

/// Calls `f` on every tuple `(j_1, ..., j_parts)` of non-negative integers
/// summing to `sum`, in lexicographic order. `parts == 0` yields the empty
/// tuple only when `sum == 0`.
pub fn for_each_weak_composition<F: FnMut(&[usize])>(sum: usize, parts: usize, mut f: F) {
    let mut buf = vec![0; parts];
    if parts == 0 {
        if sum == 0 {
            f(&buf);
        }
        return;
    }
    fill_weak(&mut buf, 0, sum, &mut f);
}

fn fill_weak<F: FnMut(&[usize])>(buf: &mut [usize], pos: usize, rest: usize, f: &mut F) {
    if pos + 1 == buf.len() {
        buf[pos] = rest;
        f(buf);
        return;
    }
    for v in 0..=rest {
        buf[pos] = v;
        fill_weak(buf, pos + 1, rest - v, f);
    }
}

/// Like [`for_each_weak_composition`] but every part is at least 1.
pub fn for_each_composition<F: FnMut(&[usize])>(sum: usize, parts: usize, mut f: F) {
    if sum < parts {
        return;
    }
    let mut shifted = vec![0; parts];
    for_each_weak_composition(sum - parts, parts, |c| {
        for (s, &v) in shifted.iter_mut().zip(c) {
            *s = v + 1;
        }
        f(&shifted);
    });
}

/// Weak compositions of `sum` into `parts` parts with every part `<= cap`.
pub fn for_each_bounded_composition<F: FnMut(&[usize])>(
    sum: usize,
    parts: usize,
    cap: usize,
    mut f: F,
) {
    if sum > parts * cap {
        return;
    }
    let mut buf = vec![0; parts];
    if parts == 0 {
        if sum == 0 {
            f(&buf);
        }
        return;
    }
    fill_bounded(&mut buf, 0, sum, cap, &mut f);
}

fn fill_bounded<F: FnMut(&[usize])>(
    buf: &mut [usize],
    pos: usize,
    rest: usize,
    cap: usize,
    f: &mut F,
) {
    let remaining_parts = buf.len() - pos;
    if rest > remaining_parts * cap {
        return;
    }
    if remaining_parts == 1 {
        buf[pos] = rest;
        f(buf);
        return;
    }
    for v in 0..=rest.min(cap) {
        buf[pos] = v;
        fill_bounded(buf, pos + 1, rest - v, cap, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn half_integer_binomial() {
        // C(5/2, 2) = (5/2)(3/2)/2
        assert_eq!(binomial_rational(&rat(5, 2), 2), rat(15, 8));
        assert_eq!(binomial_rational(&rat(7, 1), 3), rat(35, 1));
    }

    #[test]
    fn multinomial_matches_factorial_quotient() {
        for parts in [[3usize, 0, 2], [1, 1, 1], [4, 4, 0]] {
            let n: usize = parts.iter().sum();
            let den = parts.iter().fold(BigInt::one(), |a, &p| a * factorial(p));
            assert_eq!(multinomial(&parts), factorial(n) / den);
        }
    }

    #[test]
    fn composition_counts() {
        for (sum, parts) in [(0, 0), (0, 3), (5, 1), (7, 3), (4, 5)] {
            let mut count = 0i64;
            for_each_weak_composition(sum, parts, |c| {
                assert_eq!(c.iter().sum::<usize>(), sum);
                count += 1;
            });
            let expect = if parts == 0 {
                i64::from(sum == 0)
            } else {
                binomial((sum + parts - 1) as i64, parts as i64 - 1).try_into().unwrap()
            };
            assert_eq!(count, expect, "sum={sum} parts={parts}");
        }
        let mut positive = Vec::new();
        for_each_composition(4, 2, |c| positive.push(c.to_vec()));
        assert_eq!(positive, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);

        let mut bounded = 0;
        for_each_bounded_composition(4, 3, 2, |c| {
            assert!(c.iter().all(|&v| v <= 2));
            bounded += 1;
        });
        // coefficient of w^4 in (1 + w + w^2)^3
        assert_eq!(bounded, 6);
    }
}
