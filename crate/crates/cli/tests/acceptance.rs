//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use bernkit_core::combinat::factorial;
use bernkit_core::generating::{build_f_direct, build_f_eulerian};
use bernkit_core::poly::{falling_product, UniPoly, Var};
use bernkit_core::rational::{from_bigint, int, rat, Rational};
use bernkit_core::special::{bernoulli_poly, eulerian_poly};
use bernkit_core::tornheim::{
    a_jkn, c3_residuals, c_flags, coeff_z_closed, coeff_z_thm8, p_poly, s_direct, s_eulerian,
    s_series, seq_a, seq_c, seq_c3, u_nu, u_series, AjRoute,
};
use bernkit_core::verify::check_reflection_divisibility;
use num_traits::Zero;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn z(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_ints(Var::Z, coeffs)
}

fn product(constant: Rational, factors: &[&[i64]]) -> UniPoly {
    factors
        .iter()
        .fold(UniPoly::constant(Var::Z, constant), |acc, f| &acc * &z(f))
}

const Z: &[i64] = &[0, 1];
const Z1: &[i64] = &[-1, 1];
const HALF: &[i64] = &[-1, 2];

fn published_sums() -> Check {
    let full: Vec<(usize, usize, Rational, Vec<&[i64]>)> = vec![
        (1, 1, rat(-1, 3), vec![Z, Z1, HALF]),
        (1, 2, rat(1, 20), vec![Z, Z1, &[-1, 3], &[-2, 3], HALF]),
        (1, 3, rat(-1, 105), vec![Z, Z1, &[-1, 4], HALF, &[-3, 4], &[1, -1, 1]]),
        (
            1,
            4,
            rat(-1, 18144),
            vec![Z, Z1, &[-1, 5], &[-2, 5], &[-3, 5], &[-4, 5], HALF, &[-6, -13, 13]],
        ),
        (2, 1, rat(1, 30), vec![Z, Z1, HALF, &[-1, -3, 3]]),
        (2, 2, rat(1, 160), vec![Z, Z, Z1, Z1, &[-1, 3], &[-2, 3], &[-2, -7, 7]]),
    ];
    for (k, n, c, factors) in full {
        let s = s_direct(n, k);
        ensure(s == product(c, &factors), || format!("row k={k} n={n}: got {s}"))?;
    }
    let elided: Vec<(usize, usize, Rational, Vec<&[i64]>, i64, i64)> = vec![
        (2, 3, rat(1, 20790), vec![Z, Z1, &[-1, 4], HALF, &[-3, 4]], 321, -3),
        (
            2,
            4,
            rat(1, 16765056),
            vec![Z, Z, Z1, Z1, &[-1, 5], &[-2, 5], &[-3, 5], &[-4, 5]],
            19302,
            -348,
        ),
    ];
    for (k, n, c, factors, lead, tail) in elided {
        let s = s_direct(n, k);
        ensure(s.degree() == Some((k + 1) * (n + 1) - 1), || format!("degree of row k={k} n={n}"))?;
        let q = s
            .divide_exact(&product(c, &factors))
            .map_err(|e| format!("row k={k} n={n}: {e}"))?;
        ensure(
            q.degree() == Some(6) && q.leading() == Some(&int(lead)) && q.constant_term() == int(tail),
            || format!("row k={k} n={n}: cofactor {q}"),
        )?;
    }
    Ok(())
}

fn bernoulli_and_eulerian() -> Check {
    let b: [Vec<Rational>; 7] = [
        vec![int(1)],
        vec![rat(-1, 2), int(1)],
        vec![rat(1, 6), int(-1), int(1)],
        vec![int(0), rat(1, 2), rat(-3, 2), int(1)],
        vec![rat(-1, 30), int(0), int(1), int(-2), int(1)],
        vec![int(0), rat(-1, 6), int(0), rat(5, 3), rat(-5, 2), int(1)],
        vec![rat(1, 42), int(0), rat(-1, 2), int(0), rat(5, 2), int(-3), int(1)],
    ];
    let a: [&[i64]; 7] = [
        &[1],
        &[0, 1],
        &[0, 1, 1],
        &[0, 1, 4, 1],
        &[0, 1, 11, 11, 1],
        &[0, 1, 26, 66, 26, 1],
        &[0, 1, 57, 302, 302, 57, 1],
    ];
    for k in 0..=6 {
        ensure(bernoulli_poly(k) == UniPoly::new(Var::Z, b[k].clone()), || format!("B_{k}"))?;
        ensure(eulerian_poly(k) == UniPoly::from_ints(Var::Y, a[k]), || format!("A_{k}"))?;
    }
    Ok(())
}

fn quotients() -> Check {
    let rows: [Vec<Rational>; 6] = [
        vec![int(1)],
        vec![int(1), int(-2)],
        vec![int(1), int(-1), int(1)],
        vec![int(1), rat(1, 6), rat(-13, 2), rat(13, 3)],
        vec![int(1), rat(3, 2), rat(-27, 2), int(24), int(-12)],
        vec![int(1), rat(179, 60), rat(-473, 24), int(29), rat(-571, 24), rat(571, 60)],
    ];
    for (i, row) in rows.iter().enumerate() {
        let n = i + 1;
        let p = p_poly(n).map_err(|e| format!("p_{n}: {e}"))?;
        ensure(p == UniPoly::new(Var::Z, row.clone()), || format!("p_{n} = {p}"))?;
    }
    Ok(())
}

fn routes() -> Check {
    for n in 1..=4 {
        for k in 1..=3 {
            let d = s_direct(n, k);
            ensure(d == s_series(n, k), || format!("series differs at n={n} k={k}"))?;
            ensure(d == s_eulerian(n, k), || format!("eulerian differs at n={n} k={k}"))?;
        }
    }
    Ok(())
}

fn reflection_and_divisibility() -> Check {
    for n in 1..=5 {
        for k in 1..=4 {
            let r = check_reflection_divisibility(n, k, &s_series(n, k));
            ensure(r.passed(), || r.to_string())?;
        }
    }
    Ok(())
}

fn k_zero() -> Check {
    for n in 1..=6usize {
        let expect = falling_product(Var::Z, n as i64 + 1, 0, n);
        for (name, s) in [("direct", s_direct(n, 0)), ("series", s_series(n, 0))] {
            let lhs = s.scale(&from_bigint(factorial(n)));
            ensure(lhs == expect, || format!("{name} n={n}: {lhs}"))?;
        }
    }
    Ok(())
}

fn f_two_ways() -> Check {
    for k in 1..=5 {
        let order = 6 * (k + 1);
        ensure(build_f_eulerian(k, order) == build_f_direct(k, order), || format!("k={k}"))?;
    }
    Ok(())
}

fn sequences() -> Check {
    let c = seq_c(13);
    let expect_c = [4, 30, 256, 2310, 21504].map(|d| rat(1, d));
    ensure(c.values[..5] == expect_c, || format!("c = {:?}", &c.values[..5]))?;
    let a = seq_a(5);
    ensure(a.values == [1, 3, 16, 105, 768].map(int), || format!("a = {:?}", a.values))?;
    let c3 = seq_c3(22);
    let expect_c3 = [rat(-1, 126), rat(-1, 1155), rat(-1, 6930), rat(-10, 513513)];
    ensure(c3.values[..4] == expect_c3, || format!("c3 = {:?}", &c3.values[..4]))?;
    let residuals = c3_residuals(&c3);
    ensure(residuals.last().map(|r| r.0) == Some(20), || "recurrence not checked through 20".into())?;
    for (n, r) in residuals {
        ensure(r.is_zero(), || format!("c3 residual at n={n} is {r}"))?;
    }
    for (n, v) in c.indexed() {
        ensure(c_flags(n, v).all(), || format!("1/c_{n} flags"))?;
    }
    Ok(())
}

fn coefficient_of_z() -> Check {
    for n in 1..=4 {
        for k in 1..=3 {
            let c = coeff_z_thm8(n, k);
            let direct = s_direct(n, k).coeff(1);
            ensure(c.value == direct, || format!("n={n} k={k}: {} vs {direct}", c.value))?;
            if c.both_even {
                ensure(c.formula.is_zero() && direct.is_zero(), || format!("n={n} k={k} nonzero"))?;
            }
        }
    }
    for n in 1..=8 {
        let closed = coeff_z_closed(n, 1).map_err(|e| e.to_string())?;
        ensure(closed == coeff_z_thm8(n, 1).value, || format!("k=1 closed form n={n}"))?;
        ensure(closed == s_series(n, 1).coeff(1), || format!("k=1 closed form n={n} vs S"))?;
    }
    for n in (1..=9).step_by(2) {
        let closed = coeff_z_closed(n, 2).map_err(|e| e.to_string())?;
        ensure(closed == coeff_z_thm8(n, 2).value, || format!("k=2 closed form n={n}"))?;
        ensure(closed == s_series(n, 2).coeff(1), || format!("k=2 closed form n={n} vs S"))?;
    }
    Ok(())
}

fn a_and_u() -> Check {
    for k in 1..=3 {
        for n in 1..=4 {
            for j in 0..=n * (k - 1) {
                let a = a_jkn(k, n, j, AjRoute::PolyPower);
                for route in [AjRoute::Multinomial, AjRoute::Inversion] {
                    ensure(a_jkn(k, n, j, route) == a, || format!("a_{j} k={k} n={n} {route:?}"))?;
                }
            }
            for (nu, v) in u_series(k, n, 8).into_iter().enumerate() {
                ensure(v == from_bigint(u_nu(k, n, nu)), || format!("u_{nu} k={k} n={n}"))?;
            }
        }
    }
    Ok(())
}

fn fault_injection() -> Check {
    let bin = env!("CARGO_BIN_EXE_bernkit");
    let clean = Command::new(bin).args(["verify", "all"]).output().map_err(|e| e.to_string())?;
    ensure(clean.status.code() == Some(0), || "clean run did not exit 0".into())?;
    for (k, j) in [(0, 0), (1, 0), (3, 1), (6, 6), (12, 0), (17, 9), (24, 24), (40, 17)] {
        let out = Command::new(bin)
            .args(["verify", "all", "--inject-fault", &format!("{k}:{j}")])
            .output()
            .map_err(|e| e.to_string())?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.code() == Some(1), || format!("fault {k}:{j}: exit {:?}", out.status.code()))?;
        ensure(stdout.lines().any(|l| l.starts_with("FAIL") && l.contains(": ")), || {
            format!("fault {k}:{j}: no witness")
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 11] = [
        ("S_{n,k} for k = 1, 2 and n <= 4", Duration::from_secs(10), published_sums),
        ("B_k and A_k for k <= 6", Duration::from_secs(1), bernoulli_and_eulerian),
        ("p_n for n <= 6", Duration::from_secs(30), quotients),
        ("route agreement", Duration::from_secs(120), routes),
        ("symmetry and divisibility", Duration::from_secs(300), reflection_and_divisibility),
        ("k = 0 falling product", Duration::from_secs(5), k_zero),
        ("generating function two ways", Duration::from_secs(30), f_two_ways),
        ("sequences", Duration::from_secs(10), sequences),
        ("coefficient of z", Duration::from_secs(120), coefficient_of_z),
        ("a_j and u_nu identities", Duration::from_secs(60), a_and_u),
        ("fault injection", Duration::from_secs(300), fault_injection),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            })
            .and_then(|()| {
                let t = start.elapsed();
                ensure(t <= *limit, || format!("took {t:.2?}, limit {limit:?}"))
            });
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
