use std::fmt::Write as _;

use dompoly::graph::DEFAULT_PRODUCT_CAP;
use dompoly::method::all_methods;
use dompoly::polynomial::parse_rational;
use dompoly::reduction::{interpolation_reduction, BruteForceEvaluator, BruteMode};
use dompoly::sequences::{
    domination_number_sequence, extract_coeff_sequence, family_polynomials, grid5_reference,
    guess_cfinite_with_margin, guess_holonomic_with_margin, guess_polyx_recurrence_with_margin,
    ladder_domination_number, partial_sum_sequence, verify_recurrence, CoeffIndexSpec,
    FamilySpec, IndexedSequence, RecurrenceData, RecurrenceSpec, Rounding, VerifyReport,
    DEFAULT_CFINITE_MARGIN, DEFAULT_HOLONOMIC_MARGIN, DEFAULT_POLYX_MARGIN,
};
use dompoly::verify::{run_suites, Bounds, Suite, SuiteReport, DEFAULT_SEED};
use dompoly::{compute, Caps, Error, IntPolynomial, Method, Result, Shape};
use serde_json::{json, Value};

use crate::args::{
    Cli, ComputeArgs, Format, GuessKind, InterpolateArgs, Reference, SequenceArgs, VerifyArgs,
};

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            passed: true,
        }
    }
}

pub fn caps(cli: &Cli) -> Caps {
    let d = Caps::default();
    let pick = |v: Option<u64>, default: usize| v.map_or(default, |v| v as usize);
    Caps {
        brute: pick(cli.cap_brute, d.brute),
        product: pick(cli.cap_product, DEFAULT_PRODUCT_CAP),
        gk2: pick(cli.cap_gk2, d.gk2),
    }
}

fn strings(p: &IntPolynomial) -> Value {
    json!(p.to_decimal_strings())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize") + "\n"
}

pub fn compute_cmd(args: &ComputeArgs, caps: &Caps, format: Format) -> Result<Outcome> {
    let shape = Shape::parse(&args.graph)?;
    if args.all_methods {
        caps.oracle()?;
        let results = all_methods(&shape, caps);
        if results.is_empty() {
            return Err(Error::MethodMismatch {
                method: "any".into(),
                expr: shape.to_string(),
            });
        }
        let agree = results.windows(2).all(|w| w[0].polynomial == w[1].polynomial);
        let output = match format {
            Format::Json => pretty(&json!({
                "graph": shape.to_string(),
                "agree": agree,
                "results": results.iter().map(|c| json!({
                    "method": c.method.name(),
                    "detail": c.detail,
                    "coefficients": strings(&c.polynomial),
                })).collect::<Vec<_>>(),
            })),
            Format::Csv => {
                let mut out = String::from("method,degree,coefficient\n");
                for c in &results {
                    for (i, v) in c.polynomial.coeffs().iter().enumerate() {
                        let _ = writeln!(out, "{},{i},{v}", c.method);
                    }
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for c in &results {
                    let _ = writeln!(out, "{:<15} {}", c.method.name(), c.polynomial);
                }
                let verdict = if agree { "all methods agree" } else { "METHODS DISAGREE" };
                let _ = writeln!(out, "{verdict}");
                out
            }
        };
        return Ok(Outcome {
            output,
            passed: agree,
        });
    }
    let method: Method = args.method.parse()?;
    let c = compute(&shape, method, caps)?;
    let output = match format {
        Format::Json => pretty(&json!({
            "graph": shape.to_string(),
            "method": c.method.name(),
            "detail": c.detail,
            "coefficients": strings(&c.polynomial),
            "polynomial": c.polynomial.to_string(),
        })),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, v) in c.polynomial.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{i},{v}");
            }
            out
        }
        Format::Text => format!(
            "D({shape}, x) = {}\nmethod: {} ({})\n",
            c.polynomial, c.method, c.detail
        ),
    };
    Ok(Outcome::ok(output))
}

pub fn verify_cmd(args: &VerifyArgs, seed: Option<u64>, format: Format) -> Result<Outcome> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let bounds = Bounds {
        max_n: args.max_n,
        trials: args.trials,
        seed: seed.unwrap_or(DEFAULT_SEED),
    };
    let reports = run_suites(&suites, &bounds)?;
    let passed = reports.iter().all(|r| r.passed);
    let output = match format {
        Format::Json => pretty(&json!({ "passed": passed, "suites": reports })),
        Format::Csv => {
            let mut out = String::from("suite,passed,checks,failures\n");
            for r in &reports {
                let _ = writeln!(out, "{},{},{},{}", r.suite, r.passed, r.checks, r.failures.len());
            }
            out
        }
        Format::Text => reports.iter().map(render_report).collect(),
    };
    Ok(Outcome { output, passed })
}

fn render_report(r: &SuiteReport) -> String {
    let mut out = format!(
        "{} {} ({} checks)\n",
        if r.passed { "PASS" } else { "FAIL" },
        r.suite,
        r.checks
    );
    for f in &r.failures {
        let _ = writeln!(out, "  {}: {}", f.case, f.detail);
    }
    out
}

enum Data {
    Sequence(IndexedSequence),
    Polys { start: usize, polys: Vec<IntPolynomial> },
}

fn parse_pair(src: &str) -> Result<(dompoly::Rational, dompoly::Rational)> {
    let (q, p) = src.split_once(',').ok_or_else(|| Error::Parse {
        position: 0,
        message: format!("expected \"q,p\", got {src:?}"),
    })?;
    Ok((parse_rational(q.trim())?, parse_rational(p.trim())?))
}

pub fn sequence_cmd(args: &SequenceArgs, caps: &Caps, format: Format) -> Result<Outcome> {
    let last = match args.to {
        Some(to) => to,
        None if args.terms == 0 => {
            return Err(Error::InvalidParameter("--terms must be at least 1".into()))
        }
        None => args.from + args.terms - 1,
    };
    if last < args.from {
        return Err(Error::InvalidParameter(format!(
            "empty range {}..={last}",
            args.from
        )));
    }
    let family = FamilySpec::parse(&args.family, args.from..=last)?;
    let method: Method = args.method.parse()?;
    let fam = family_polynomials(&family, method, caps)?;

    let data = if let Some(spec) = &args.coeff {
        let rounding = if args.ceil { Rounding::Ceil } else { Rounding::Floor };
        let spec = CoeffIndexSpec::parse(spec, rounding)?;
        Data::Sequence(extract_coeff_sequence(fam.start, &fam.polys, &spec))
    } else if let Some(pair) = &args.partial {
        let (q, p) = parse_pair(pair)?;
        Data::Sequence(partial_sum_sequence(fam.start, &fam.polys, &q, &p, &fam.sizes)?)
    } else if args.gamma_number {
        Data::Sequence(domination_number_sequence(fam.start, &fam.polys)?)
    } else {
        Data::Polys {
            start: fam.start,
            polys: fam.polys.clone(),
        }
    };

    let guess = match args.guess {
        None => None,
        Some(kind) => Some(guess_for(kind, &data, args)?),
    };
    let passed = guess
        .as_ref()
        .is_none_or(|g| g.as_ref().is_none_or(|(_, report)| report.passed));

    let reference = |n: i64| -> Option<usize> {
        let n = n as usize;
        args.reference.map(|r| match r {
            Reference::Ladder => ladder_domination_number(n),
            Reference::Grid5 => grid5_reference(n),
        })
    };
    let methods: Vec<&str> = fam.methods.iter().map(|m| m.name()).collect();

    let output = match format {
        Format::Json => {
            let data_json = match &data {
                Data::Sequence(s) => json!({
                    "start": s.start,
                    "terms": s.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "reference": args.reference.map(|_| {
                        s.indexed().map(|(n, _)| reference(n)).collect::<Vec<_>>()
                    }),
                }),
                Data::Polys { start, polys } => json!({
                    "start": start,
                    "polynomials": polys.iter().map(strings).collect::<Vec<_>>(),
                }),
            };
            let guess_json = guess.as_ref().map(|g| match g {
                Some((rec, report)) => json!({ "recurrence": rec, "verification": report }),
                None => Value::Null,
            });
            pretty(&json!({
                "family": family.expr.to_string(),
                "methods": methods,
                "sizes": fam.sizes,
                "data": data_json,
                "guess": guess_json,
            }))
        }
        Format::Csv => match &data {
            Data::Sequence(s) if args.reference.is_some() => {
                let mut out = String::from("n,value,reference\n");
                for (n, t) in s.indexed() {
                    let _ = writeln!(out, "{n},{t},{}", reference(n).unwrap_or_default());
                }
                out
            }
            Data::Sequence(s) => s.to_csv(),
            Data::Polys { start, polys } => {
                let mut out = String::from("n,value\n");
                for (i, p) in polys.iter().enumerate() {
                    let _ = writeln!(out, "{},{}", start + i, p.to_decimal_strings().join(" "));
                }
                out
            }
        },
        Format::Text => {
            let mut out = format!("family {} via {}\n", family.expr, summarize(&methods));
            match &data {
                Data::Sequence(s) => {
                    for (n, t) in s.indexed() {
                        match reference(n) {
                            Some(r) => {
                                let _ = writeln!(out, "{n:>4}  {t}  (reference {r})");
                            }
                            None => {
                                let _ = writeln!(out, "{n:>4}  {t}");
                            }
                        }
                    }
                }
                Data::Polys { start, polys } => {
                    for (i, p) in polys.iter().enumerate() {
                        let _ = writeln!(out, "{:>4}  {p}", start + i);
                    }
                }
            }
            match &guess {
                None => {}
                Some(None) => out.push_str("no recurrence found within bounds\n"),
                Some(Some((rec, report))) => {
                    let _ = writeln!(out, "recurrence (order {}): {rec}", rec.order);
                    let status = if report.passed { "verified" } else { "FAILED" };
                    let _ = writeln!(out, "{status} on {} instances", report.checked);
                }
            }
            out
        }
    };
    Ok(Outcome { output, passed })
}

fn summarize(methods: &[&str]) -> String {
    let mut unique: Vec<&str> = Vec::new();
    for m in methods {
        if !unique.contains(m) {
            unique.push(m);
        }
    }
    unique.join(", ")
}

fn guess_for(
    kind: GuessKind,
    data: &Data,
    args: &SequenceArgs,
) -> Result<Option<(RecurrenceSpec, VerifyReport)>> {
    let found = match (kind, data) {
        (GuessKind::Cfinite, Data::Sequence(s)) => guess_cfinite_with_margin(
            s,
            args.max_order.unwrap_or(4),
            args.margin.unwrap_or(DEFAULT_CFINITE_MARGIN),
        )?,
        (GuessKind::Holonomic, Data::Sequence(s)) => guess_holonomic_with_margin(
            s,
            args.max_order.unwrap_or(2),
            args.max_degree.unwrap_or(1),
            args.margin.unwrap_or(DEFAULT_HOLONOMIC_MARGIN),
        )?,
        (GuessKind::Polyx, Data::Polys { polys, .. }) => guess_polyx_recurrence_with_margin(
            polys,
            args.max_order.unwrap_or(5),
            args.max_degree.unwrap_or(3),
            args.margin.unwrap_or(DEFAULT_POLYX_MARGIN),
        )?,
        (GuessKind::Polyx, Data::Sequence(_)) => {
            return Err(Error::KindMismatch {
                recurrence: "poly-x",
                data: "integer sequence",
            })
        }
        (_, Data::Polys { .. }) => {
            return Err(Error::KindMismatch {
                recurrence: if kind == GuessKind::Cfinite { "c-finite" } else { "holonomic" },
                data: "polynomial sequence",
            })
        }
    };
    let Some(rec) = found else { return Ok(None) };
    let report = match data {
        Data::Sequence(s) => verify_recurrence(RecurrenceData::Sequence(s), &rec)?,
        Data::Polys { start, polys } => verify_recurrence(
            RecurrenceData::Polynomials {
                start: *start,
                polys,
            },
            &rec,
        )?,
    };
    Ok(Some((rec, report)))
}

pub fn interpolate_cmd(args: &InterpolateArgs, caps: &Caps, format: Format) -> Result<Outcome> {
    let gamma = parse_rational(&args.gamma)?;
    dompoly::reduction::check_gamma(&gamma)?;
    let g = Shape::parse(&args.graph)?.build(caps.product)?;
    let oracle = BruteForceEvaluator::with_oracle(gamma, caps.oracle()?, BruteMode::Auto);
    let trace = interpolation_reduction(&g, &oracle, caps.product)?;
    let output = match format {
        Format::Json => pretty(&serde_json::to_value(&trace).map_err(|e| Error::Internal(e.to_string()))?),
        Format::Csv => {
            let mut out = String::from("r,vertices,abscissa,value\n");
            for s in &trace.steps {
                let _ = writeln!(out, "{},{},{},{}", s.r, s.vertices, s.abscissa, s.value);
            }
            out
        }
        Format::Text => {
            let mut out = format!("gamma = {}\n", trace.gamma);
            for s in &trace.steps {
                let _ = writeln!(
                    out,
                    "r = {:>2}  |V| = {:>3}  x = {}  D = {}",
                    s.r, s.vertices, s.abscissa, s.value
                );
            }
            let _ = writeln!(out, "D(G, x) = {}", trace.polynomial);
            out
        }
    };
    Ok(Outcome::ok(output))
}
