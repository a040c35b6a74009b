//! LaTeX rendering for polynomials and `tabular` fragments.

use bernkit_core::poly::UniPoly;
use bernkit_core::Rational;
use num_traits::{One, Signed, Zero};

pub fn rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

pub fn poly(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = p.var().name();
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { "-" } else { "+" });
        }
        if i == 0 || !mag.is_one() {
            out.push_str(&rational(&mag));
        }
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{{{i}}}")),
        }
    }
    out
}

/// `\begin{tabular}...\end{tabular}` with a header row and one row per entry.
/// Cells are inserted verbatim.
pub fn tabular(spec: &str, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("\\begin{{tabular}}{{{spec}}}\n\\hline\n");
    out.push_str(&header.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in rows {
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

pub fn math(s: &str) -> String {
    format!("${s}$")
}
