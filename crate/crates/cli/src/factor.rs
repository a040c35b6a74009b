//! Pulls the expected rational linear factors out of `S_{n,k}(z)` for
//! display.

use bernkit_core::poly::{UniPoly, Var};
use num_integer::Integer;
use num_traits::{One, Zero};

/// A factor `base^power` with `base` primitive and integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub constant: bernkit_core::Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

/// Tries the roots `0, 1, j/(n+1)` and `1/2` in that order; whatever is
/// left becomes a primitive cofactor and a constant.
pub fn factor_known_roots(p: &UniPoly, n: usize) -> Factorization {
    let mut roots: Vec<(i64, i64)> = vec![(0, 1), (1, 1)];
    let m = n as i64 + 1;
    for j in 1..m {
        let g = j.gcd(&m);
        roots.push((j / g, m / g));
    }
    roots.push((1, 2));
    let mut seen = Vec::new();
    roots.retain(|r| {
        let fresh = !seen.contains(r);
        seen.push(*r);
        fresh
    });

    let mut rest = p.clone();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return Factorization { constant: bernkit_core::Rational::zero(), factors };
    }
    for (a, b) in roots {
        let lin = UniPoly::from_ints(Var::Z, &[-a, b]).with_var(p.var());
        let mut power = 0;
        while let Ok(q) = rest.divide_exact(&lin) {
            rest = q;
            power += 1;
        }
        if power > 0 {
            factors.push((lin, power));
        }
    }
    let (constant, prim) = rest.content_primitive();
    if !prim.is_constant() {
        factors.push((prim, 1));
    }
    Factorization { constant, factors }
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let var = self.factors.first().map_or(Var::Z, |(f, _)| f.var());
        self.factors.iter().fold(UniPoly::constant(var, self.constant.clone()), |acc, (f, e)| {
            &acc * &f.pow(*e as u32)
        })
    }

    /// Factor strings: the constant (omitted when 1), then each factor.
    pub fn display_parts(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            out.push(self.constant.to_string());
        }
        for (f, e) in &self.factors {
            let base = if f.degree() == Some(1) && f.coeff(0).is_zero() {
                f.to_string()
            } else {
                format!("({f})")
            };
            out.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        out
    }
}
