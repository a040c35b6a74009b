//! The convolution sums `S_{n,k}(z)` and everything built around them:
//! multisum polynomials and d-coefficients, coefficient-of-`z` formulas,
//! the sequences `a_n`, `c_n`, `c_n^{(3)}`, and the quotients `p_n(z)`.

pub mod coeffz;
pub mod multisum;
pub mod quotient;
pub mod sequences;
pub mod snk;

pub use coeffz::{
    a_jkn, a_row, coeff_z_closed, coeff_z_formula, coeff_z_thm8, reduced_eulerian, u_nu, u_series,
    AjRoute, CoeffZ,
};
pub use multisum::{d_coeffs, lemma5_coeffs, multisum_poly, DCoeffTable, Lemma5Coeffs, MultisumRoute};
pub use quotient::{p_divisor, p_from, p_poly};
pub use sequences::{
    a_even_closed, c3_recurrence_residual, c3_residuals, c_closed, c_flags, seq_a, seq_c, seq_c3,
    CFlags, SeqName, SeqTable,
};
pub use snk::{routes_for, s_direct, s_eulerian, s_nk, s_series, Route, SnkResult};

/// `(k+1)(n+1) - 1`, the degree of every product in the defining sum.
pub fn expected_degree(n: usize, k: usize) -> usize {
    (k + 1) * (n + 1) - 1
}

/// `(k+1)(n+1) - 1` is the exponent in the reflection symmetry
/// `S(1 - z) = (-1)^e S(z)`.
pub fn reflection_sign_odd(n: usize, k: usize) -> bool {
    expected_degree(n, k) % 2 == 1
}
