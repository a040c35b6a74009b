use std::collections::BTreeMap;
use std::fmt::Write as _;

use bernkit_core::generating::{build_f_direct, build_f_eulerian};
use bernkit_core::poly::{UniPoly, Var};
use bernkit_core::rational::{from_bigint, to_fraction_string};
use bernkit_core::special::{bernoulli_poly, eulerian_poly, inject_bernoulli_fault};
use bernkit_core::tornheim::{
    a_jkn, c3_residuals, c_flags, d_coeffs, multisum_poly, p_poly, s_direct, s_nk, seq_a, seq_c,
    seq_c3, u_nu, u_series, AjRoute, MultisumRoute, Route, SeqTable,
};
use bernkit_core::verify::{sort_reports, Suite, Sweep, SweepConfig, VerificationReport};
use bernkit_core::Rational;
use serde_json::json;
use thiserror::Error;

use crate::document::{ObjectDocument, PolynomialDocument};
use crate::factor::{factor_known_roots, Factorization};
use crate::{
    latex, AjArg, Cli, Command, FRoute, MultisumArg, OutputFormat, SRoute, SeqArg, SuiteArg,
    Target, UArg,
};

/// Text for stdout and whether the command counts as a success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub success: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, success: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bernkit_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.to_string())
}

pub fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    if let Some((k, j)) = cli.inject_fault {
        inject_bernoulli_fault(k, j);
    }
    match &cli.command {
        Command::Compute { target } => compute(target, cli.format),
        Command::Table { which } => Ok(Rendered::ok(table(*which, cli.format))),
        Command::Seq { name, count } => Ok(seq(*name, *count as usize, cli.format)),
        Command::Verify { suite, n_max, k_max } => {
            let config = SweepConfig {
                n_max: *n_max as usize,
                k_max: *k_max as usize,
                parallel: cli.parallel,
            };
            Ok(verify(*suite, config, cli.sorted, cli.format))
        }
    }
}

struct Computed {
    title: String,
    doc: ObjectDocument,
    poly: UniPoly,
    routes: Vec<(&'static str, UniPoly)>,
    factors: Option<Factorization>,
}

impl Computed {
    fn new(title: String, object: &str, params: &[(&str, usize)], routes: Vec<(&'static str, UniPoly)>) -> Self {
        let poly = routes[0].1.clone();
        let mut doc = ObjectDocument::new(object, params, PolynomialDocument::from_poly(&poly));
        if routes.len() > 1 {
            doc = doc.with_routes(&routes);
        }
        Computed { title, doc, poly, routes, factors: None }
    }

    fn with_factors(mut self, f: Factorization) -> Self {
        self.doc.poly = self.doc.poly.clone().with_factors(f.display_parts());
        self.factors = Some(f);
        self
    }

    fn agree(&self) -> bool {
        self.doc.agreement.unwrap_or(true)
    }
}

fn compute(target: &Target, format: OutputFormat) -> Result<Rendered, CliError> {
    let computed = match *target {
        Target::S { n, k, route } => {
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            let chosen: Vec<Route> = match route {
                SRoute::Direct => vec![Route::Direct],
                SRoute::Series => vec![Route::Series],
                SRoute::Eulerian if k == 0 => return Err(usage("the eulerian route needs k >= 1")),
                SRoute::Eulerian => vec![Route::Eulerian],
                SRoute::All => bernkit_core::tornheim::routes_for(k).to_vec(),
            };
            let routes = chosen
                .into_iter()
                .map(|r| Ok((r.name(), s_nk(n, k, r)?.poly)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let f = factor_known_roots(&routes[0].1, n);
            Computed::new(format!("S_{{{n},{k}}}(z)"), "s", &[("n", n), ("k", k)], routes).with_factors(f)
        }
        Target::FCoeff { k, m, route } => {
            let order = m.max(1);
            let direct = || ("direct", build_f_direct(k, order).coeffs()[m].clone());
            let eulerian = || -> Result<_, CliError> {
                if k == 0 {
                    return Err(usage("the eulerian route needs k >= 1"));
                }
                Ok(("eulerian", build_f_eulerian(k, order).coeffs()[m].clone()))
            };
            let routes = match route {
                FRoute::Direct => vec![direct()],
                FRoute::Eulerian => vec![eulerian()?],
                FRoute::All if k == 0 => vec![direct()],
                FRoute::All => vec![direct(), eulerian()?],
            };
            Computed::new(format!("[x^{m}] F_{k}(x,z)"), "F-coeff", &[("k", k), ("m", m)], routes)
        }
        Target::Multisum { k, nu, n, route } => {
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            let one = |r: MultisumRoute, name| (name, multisum_poly(k, nu, n, r));
            let routes = match route {
                MultisumArg::Enumeration => vec![one(MultisumRoute::Enumeration, "enumeration")],
                MultisumArg::Multinomial => vec![one(MultisumRoute::Multinomial, "multinomial")],
                MultisumArg::All => vec![
                    one(MultisumRoute::Enumeration, "enumeration"),
                    one(MultisumRoute::Multinomial, "multinomial"),
                ],
            };
            Computed::new(
                format!("S^{{({n})}}_{{{k},{nu}}}(y)"),
                "multisum",
                &[("k", k), ("nu", nu), ("n", n)],
                routes,
            )
        }
        Target::DCoeffs { n, k, nu } => {
            if n == 0 || k == 0 {
                return Err(usage("n and k must be at least 1"));
            }
            if nu > n * k {
                return Err(usage("nu must not exceed n k"));
            }
            let table = d_coeffs(n, k, nu);
            let poly = UniPoly::new(Var::Y, table.d.into_iter().map(from_bigint).collect());
            Computed::new(
                format!("sum_j d_j^({nu}) y^j, n={n} k={k}"),
                "d-coeffs",
                &[("n", n), ("k", k), ("nu", nu)],
                vec![("multisum", poly)],
            )
        }
        Target::P { n } => {
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            Computed::new(format!("p_{n}(z)"), "p", &[("n", n)], vec![("quotient", p_poly(n)?)])
        }
        Target::Ajkn { k, n, route } => {
            if n == 0 || k == 0 {
                return Err(usage("n and k must be at least 1"));
            }
            let row = |r: AjRoute| {
                UniPoly::new(
                    Var::Y,
                    (0..=n * (k - 1)).map(|j| from_bigint(a_jkn(k, n, j, r))).collect(),
                )
            };
            let all = [
                ("poly-power", AjRoute::PolyPower),
                ("multinomial", AjRoute::Multinomial),
                ("inversion", AjRoute::Inversion),
            ];
            let routes = match route {
                AjArg::PolyPower => vec![(all[0].0, row(all[0].1))],
                AjArg::Multinomial => vec![(all[1].0, row(all[1].1))],
                AjArg::Inversion => vec![(all[2].0, row(all[2].1))],
                AjArg::All => all.iter().map(|&(name, r)| (name, row(r))).collect(),
            };
            Computed::new(format!("(A_{k}(y)/y)^{n}"), "a_jkn", &[("k", k), ("n", n)], routes)
        }
        Target::Unu { k, n, nu, route } => {
            if n == 0 || k == 0 {
                return Err(usage("n and k must be at least 1"));
            }
            let enumeration = || {
                ("enumeration", UniPoly::new(Var::Y, (0..=nu).map(|v| from_bigint(u_nu(k, n, v))).collect()))
            };
            let series = || ("series", UniPoly::new(Var::Y, u_series(k, n, nu)));
            let routes = match route {
                UArg::Enumeration => vec![enumeration()],
                UArg::Series => vec![series()],
                UArg::All => vec![enumeration(), series()],
            };
            Computed::new(
                format!("sum_nu u_nu^({k},{n}) y^nu"),
                "u_nu",
                &[("k", k), ("n", n), ("nu", nu)],
                routes,
            )
        }
    };
    let text = render_computed(&computed, format);
    Ok(Rendered { text, success: computed.agree() })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_computed(c: &Computed, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let mut out = format!("{} = {}\n", c.title, c.poly);
            if let Some(f) = &c.doc.poly.factored {
                let _ = writeln!(out, "  factored: {}", f.join(" "));
            }
            if c.routes.len() > 1 {
                for (name, p) in &c.routes {
                    let _ = writeln!(out, "  [{name}] {p}");
                }
                let _ = writeln!(out, "  routes agree: {}", yes_no(c.agree()));
            }
            out
        }
        OutputFormat::Json => json_string(&c.doc),
        OutputFormat::Latex => {
            let mut rows = vec![vec![latex::math(&c.title), latex::math(&latex::poly(&c.poly))]];
            if let Some(f) = &c.factors {
                rows.push(vec!["factored".into(), latex::math(&latex_factored(f))]);
            }
            if c.routes.len() > 1 {
                for (name, p) in &c.routes {
                    rows.push(vec![name.to_string(), latex::math(&latex::poly(p))]);
                }
                rows.push(vec!["agreement".into(), yes_no(c.agree()).into()]);
            }
            latex::tabular("|l|l|", &["object", "value"], &rows)
        }
    }
}

fn json_string<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn latex_factored(f: &Factorization) -> String {
    let mut out = if f.factors.is_empty() || f.constant != Rational::from_integer(1.into()) {
        latex::rational(&f.constant)
    } else {
        String::new()
    };
    for (p, e) in &f.factors {
        let body = latex::poly(p);
        let base = if p.degree() == Some(1) && body.len() == 1 { body } else { format!("({body})") };
        out.push_str(&base);
        if *e > 1 {
            let _ = write!(out, "^{{{e}}}");
        }
    }
    out
}

fn table(which: u8, format: OutputFormat) -> String {
    match which {
        1 => sums_table(format),
        2 => bernoulli_table(format),
        _ => quotient_table(format),
    }
}

fn sums_table(format: OutputFormat) -> String {
    let mut entries = Vec::new();
    for k in 1..=2 {
        for n in 1..=4 {
            let s = s_direct(n, k);
            let f = factor_known_roots(&s, n);
            entries.push((k, n, s, f));
        }
    }
    match format {
        OutputFormat::Plain => {
            let mut out = String::from("k n S_{n,k}(z)\n");
            for (k, n, s, f) in &entries {
                let _ = writeln!(out, "{k} {n} {}", f.display_parts().join(" "));
                let _ = writeln!(out, "    = {s}");
            }
            out
        }
        OutputFormat::Json => {
            let docs: Vec<_> = entries
                .iter()
                .map(|(k, n, s, f)| {
                    ObjectDocument::new(
                        "s",
                        &[("n", *n), ("k", *k)],
                        PolynomialDocument::from_poly(s).with_factors(f.display_parts()),
                    )
                })
                .collect();
            json_string(&json!({ "table": 1, "entries": docs }))
        }
        OutputFormat::Latex => {
            let rows: Vec<_> = entries
                .iter()
                .map(|(k, n, _, f)| vec![k.to_string(), n.to_string(), latex::math(&latex_factored(f))])
                .collect();
            latex::tabular("|r||l|l|", &["$k$", "$n$", "$S_{n,k}(z)$"], &rows)
        }
    }
}

fn bernoulli_table(format: OutputFormat) -> String {
    let rows: Vec<_> = (0..=6).map(|k| (k, bernoulli_poly(k), eulerian_poly(k))).collect();
    match format {
        OutputFormat::Plain => {
            let mut out = String::from("k B_k(z) | A_k(y)\n");
            for (k, b, a) in &rows {
                let _ = writeln!(out, "{k} {b} | {a}");
            }
            out
        }
        OutputFormat::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(k, b, a)| {
                    json!({
                        "k": k,
                        "bernoulli": PolynomialDocument::from_poly(b),
                        "eulerian": PolynomialDocument::from_poly(a),
                    })
                })
                .collect();
            json_string(&json!({ "table": 2, "entries": entries }))
        }
        OutputFormat::Latex => {
            let cells: Vec<_> = rows
                .iter()
                .map(|(k, b, a)| {
                    vec![k.to_string(), latex::math(&latex::poly(b)), latex::math(&latex::poly(a))]
                })
                .collect();
            latex::tabular("|r||l|l|", &["$k$", "$B_k(z)$", "$A_k(y)$"], &cells)
        }
    }
}

fn quotient_table(format: OutputFormat) -> String {
    let rows: Vec<_> = (1..=6).map(|n| (n, p_poly(n).expect("quotient exists"))).collect();
    match format {
        OutputFormat::Plain => {
            let mut out = String::from("n p_n(z)\n");
            for (n, p) in &rows {
                let _ = writeln!(out, "{n} {p}");
            }
            out
        }
        OutputFormat::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(n, p)| ObjectDocument::new("p", &[("n", *n)], PolynomialDocument::from_poly(p)))
                .collect();
            json_string(&json!({ "table": 3, "entries": entries }))
        }
        OutputFormat::Latex => {
            let cells: Vec<_> = rows
                .iter()
                .map(|(n, p)| vec![n.to_string(), latex::math(&latex::poly(p))])
                .collect();
            latex::tabular("|r|l|", &["$n$", "$p_n(z)$"], &cells)
        }
    }
}

struct SeqRow {
    index: usize,
    value: Rational,
    flags: Vec<(&'static str, bool)>,
}

fn seq(name: SeqArg, count: usize, format: OutputFormat) -> Rendered {
    let (table, rows, residuals): (SeqTable, Vec<SeqRow>, Vec<(usize, Rational)>) = match name {
        SeqArg::C => {
            let t = seq_c(count);
            let rows = t
                .indexed()
                .map(|(n, v)| {
                    let f = c_flags(n, v);
                    SeqRow {
                        index: n,
                        value: v.clone(),
                        flags: vec![
                            ("unit_fraction", f.unit_fraction),
                            ("even", f.even),
                            ("divisible_by_2(3n+2)", f.divisible_by_2_3n_plus_2),
                        ],
                    }
                })
                .collect();
            (t, rows, Vec::new())
        }
        SeqArg::A => {
            let t = seq_a(count);
            let rows = t
                .indexed()
                .map(|(n, v)| SeqRow { index: n, value: v.clone(), flags: vec![("integer", v.is_integer())] })
                .collect();
            (t, rows, Vec::new())
        }
        SeqArg::C3 => {
            let t = seq_c3(count);
            let rows = t.indexed().map(|(n, v)| SeqRow { index: n, value: v.clone(), flags: vec![] }).collect();
            let residuals = c3_residuals(&t);
            (t, rows, residuals)
        }
    };
    let success = rows.iter().all(|r| r.flags.iter().all(|f| f.1))
        && residuals.iter().all(|(_, r)| *r == Rational::default());
    let label = table.name.name();
    let text = match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = write!(out, "{label}_{} = {}", r.index, r.value);
                if !r.flags.is_empty() {
                    let flags: Vec<_> = r.flags.iter().map(|(n, b)| format!("{n}: {}", yes_no(*b))).collect();
                    let _ = write!(out, "  [{}]", flags.join(", "));
                }
                out.push('\n');
            }
            for (n, res) in &residuals {
                let _ = writeln!(out, "recurrence residual at n={n}: {res}");
            }
            out
        }
        OutputFormat::Json => {
            let values: Vec<_> = rows.iter().map(|r| to_fraction_string(&r.value)).collect();
            let flags: Vec<BTreeMap<&str, bool>> =
                rows.iter().map(|r| r.flags.iter().copied().collect()).collect();
            let res: Vec<_> = residuals
                .iter()
                .map(|(n, r)| json!({ "n": n, "residual": to_fraction_string(r) }))
                .collect();
            json_string(&json!({
                "object": "seq",
                "name": label,
                "first": table.first,
                "values": values,
                "flags": flags,
                "residuals": res,
                "consistent": success,
            }))
        }
        OutputFormat::Latex => {
            let cells: Vec<_> = rows
                .iter()
                .map(|r| {
                    let ok = r.flags.iter().all(|f| f.1);
                    vec![r.index.to_string(), latex::math(&latex::rational(&r.value)), yes_no(ok).into()]
                })
                .collect();
            latex::tabular("|r|l|l|", &["$n$", &format!("${label}_n$"), "flags"], &cells)
        }
    };
    Rendered { text, success }
}

fn verify(suite: SuiteArg, config: SweepConfig, sorted: bool, format: OutputFormat) -> Rendered {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::One(s) => vec![s],
    };
    let mut reports = Sweep::new(config).run(&suites);
    if sorted {
        sort_reports(&mut reports);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let success = failed == 0;
    let text = match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            let _ = writeln!(out, "{} checks, {} passed, {failed} failed", reports.len(), reports.len() - failed);
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = reports.iter().map(report_json).collect();
            json_string(&json!({
                "object": "verify",
                "suite": match suite { SuiteArg::All => "all", SuiteArg::One(s) => s.name() },
                "params": { "n_max": config.n_max, "k_max": config.k_max },
                "reports": items,
                "passed": success,
            }))
        }
        OutputFormat::Latex => {
            let cells: Vec<_> = reports
                .iter()
                .map(|r| {
                    vec![
                        format!("\\texttt{{{}}}", r.statement),
                        r.param_string(),
                        if r.passed() { "pass".into() } else { "fail".into() },
                    ]
                })
                .collect();
            latex::tabular("|l|l|l|", &["statement", "parameters", "result"], &cells)
        }
    };
    Rendered { text, success }
}

fn report_json(r: &VerificationReport) -> serde_json::Value {
    let params: BTreeMap<_, _> = r.params.iter().copied().collect();
    json!({
        "statement": r.statement,
        "params": params,
        "passed": r.passed(),
        "witness": r.witness.as_ref().map(|w| w.to_string()),
    })
}
