//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::lifted::mul_rational_vecs;
use crate::rational::{int, Rational};

/// Name of the polynomial variable. Metadata only, but arithmetic between
/// different variables is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Y => "y",
        }
    }

    pub fn parse(s: &str) -> Result<Var, ParseError> {
        match s {
            "z" => Ok(Var::Z),
            "y" => Ok(Var::Y),
            other => Err(ParseError::Variable(other.to_string())),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense polynomial, `coeffs[i]` is the coefficient of `var^i`.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs, var };
        p.normalize();
        p
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn identity(var: Var) -> Self {
        Self::monomial(var, Rational::one(), 1)
    }

    pub fn monomial(var: Var, c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs, var }
    }

    /// `a*var + b`.
    pub fn linear(var: Var, a: Rational, b: Rational) -> Self {
        Self::new(var, vec![b, a])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// `None` stands for the degree of the zero polynomial (negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    fn check_var(&self, other: &UniPoly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_var(other)?;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Ok(UniPoly::new(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_var(other)?;
        Ok(UniPoly::new(
            self.var,
            mul_rational_vecs(&self.coeffs, &other.coeffs),
        ))
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.var);
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            var: self.var,
        }
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs, var: self.var }
    }

    pub fn pow(&self, mut n: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.var);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// `p(a*var + b)`, expanded.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> UniPoly {
        let inner = UniPoly::linear(self.var, a.clone(), b.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(self.var), |acc, c| {
                &(&acc * &inner) + &UniPoly::constant(self.var, c.clone())
            })
    }

    /// `p(1 - var)`.
    pub fn reflect(&self) -> UniPoly {
        self.compose_affine(&-Rational::one(), &Rational::one())
    }

    /// Long division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_var(d)?;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(dp) = self.degree().filter(|&dp| dp >= dd) else {
            return Ok((UniPoly::zero(self.var), self.clone()));
        };
        let mut quot = vec![Rational::zero(); dp - dd + 1];
        for i in (0..=dp - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(self.var, quot), UniPoly::new(self.var, rem)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn divide_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        match r.degree() {
            None => Ok(q),
            Some(degree) => Err(Error::NotDivisible { degree }),
        }
    }

    pub fn divides(&self, p: &UniPoly) -> Result<bool> {
        Ok(p.div_rem(self)?.1.is_zero())
    }

    /// Coefficients read in reverse order equal the original.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Divide out the largest power of `var` dividing the polynomial.
    pub fn strip_var_power(&self) -> (usize, UniPoly) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (0, self.clone());
        }
        (
            k,
            UniPoly {
                coeffs: self.coeffs[k..].to_vec(),
                var: self.var,
            },
        )
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `(c, q)` with `self = c * q`, `q` having coprime integer coefficients
    /// and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, UniPoly) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if nums.last().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        let content = Rational::new(g.clone(), den);
        let prim = nums
            .into_iter()
            .map(|n| Rational::from_integer(n / &g))
            .collect();
        (content, UniPoly::new(self.var, prim))
    }
}

/// `prod_{r=1}^{len} (a*var + b - r)`; the empty product is 1.
pub fn falling_product(var: Var, a: i64, b: i64, len: usize) -> UniPoly {
    (1..=len as i64).fold(UniPoly::one(var), |acc, r| {
        &acc * &UniPoly::linear(var, int(a), int(b - r))
    })
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

// Operator forms panic on a variable mismatch; use the `checked_*` methods
// when the variables are not known to agree.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$checked(rhs).expect("polynomial variable mismatch")
            }
        }
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Descending powers, e.g. `-2/3 z^3 + z^2 - 1/3 z`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if i == 0 || !unit {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}
