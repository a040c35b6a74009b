//! The quotient polynomials `p_n(z) = S_{n,1}(z) / (z (z-1) B_n^{(n+1)}((n+1)z))`,
//! normalized to constant coefficient 1.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{UniPoly, Var};
use crate::rational::{int, Rational};
use crate::special::higher_bernoulli_poly;

use super::snk::s_series;

/// `z (z - 1) B_n^{(n+1)}((n+1) z)`.
pub fn p_divisor(n: usize) -> UniPoly {
    let b = higher_bernoulli_poly(n, n as u32 + 1).compose_affine(&int(n as i64 + 1), &Rational::zero());
    let zz = UniPoly::from_ints(Var::Z, &[0, -1, 1]);
    &zz * &b
}

/// Quotient before normalization.
pub fn p_raw(n: usize, s_n1: &UniPoly) -> Result<UniPoly> {
    s_n1.divide_exact(&p_divisor(n))
}

pub fn p_poly(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    p_from(n, &s_series(n, 1))
}

/// Normalize the quotient of a given `S_{n,1}`.
pub fn p_from(n: usize, s_n1: &UniPoly) -> Result<UniPoly> {
    let q = p_raw(n, s_n1)?;
    let c0 = q.constant_term();
    if c0.is_zero() {
        return Err(Error::ZeroConstantCoefficient);
    }
    Ok(q.scale(&c0.recip()))
}
