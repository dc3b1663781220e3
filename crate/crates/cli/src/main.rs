//! `diffpow`: differential powers of monomial ideals from the command line.
//!
//! Exit status is 0 on success, 1 for usage or parse errors and 2 when the
//! input is well formed but outside the hypotheses of the requested
//! computation.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diffpow_core::analysis::{
    lower_containment_c, nmin_search_with, no_uniform_polynomial_demo, principal_containment_check,
    principality_2d, principality_3d, upper_containment_check, ContainmentReport, SearchMode,
};
use diffpow_core::oracle::{bruteforce_diffpower, default_box, membership_witness, Polynomial};
use diffpow_core::staircase::{overlay_glyph, render_staircase, required_extent};
use diffpow_core::{
    decompose, differential_closure, diffpower_traced, parse_ideal_with, parse_monomial,
    witness_probe, Error, ExponentVector, IdealExpression, MonomialIdeal, PurePowerIdeal,
    RenderFormat, StaircaseRender,
};
use serde_json::{json, Map, Value};

const DEFAULT_NMIN_CAP: u32 = 64;
const STAIRCASE_MARGIN: u32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "diffpow",
    version,
    about = "Differential powers of monomial ideals"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Number of variables, when the expression does not use them all.
    #[arg(long, global = true, value_name = "D")]
    vars: Option<usize>,

    /// Show intermediate data (decompositions, per-level checks).
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The differential power I^<n>.
    Compute {
        #[arg(short)]
        n: u32,
        ideal: String,
    },
    /// The ordinary power I^n.
    Power {
        #[arg(short)]
        n: u32,
        ideal: String,
    },
    /// Irredundant decomposition into pure-power ideals.
    Decompose { ideal: String },
    /// The radical.
    Radical { ideal: String },
    /// The differential closure.
    Closure { ideal: String },
    /// Certify r in the closure with multiplier c = r^k.
    Witness {
        ideal: String,
        /// Defaults to every generator of the radical.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
    },
    /// Closed-form principality index (two or three variables).
    Principality { ideal: String },
    /// Least n with I^<n> principal.
    Nmin {
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_NMIN_CAP)]
        cap: u32,
        /// Scan every level instead of bisecting.
        #[arg(long)]
        linear: bool,
    },
    /// Containment between ordinary and differential powers.
    Contain {
        ideal: String,
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(short)]
        n: u32,
    },
    /// A failure of I^<p(n)> in I^n for the polynomial p.
    NoUniform {
        /// Coefficients of p from the constant term up, e.g. `0,2` for 2n.
        #[arg(long, value_delimiter = ',', required = true)]
        poly: Vec<u64>,
    },
    /// Brute-force differential power by applying every operator.
    Oracle {
        ideal: String,
        #[arg(short)]
        n: u32,
        /// Search box (one bound per variable).
        #[arg(long = "box", value_delimiter = ',')]
        bounds: Option<Vec<u32>>,
        /// Test a single monomial instead and report a failing operator.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Draw the exponent set of a two-variable ideal.
    Staircase {
        ideal: String,
        #[arg(long, value_delimiter = ',')]
        extent: Option<Vec<u32>>,
        /// Differential-power levels to overlay.
        #[arg(long, value_delimiter = ',')]
        overlay: Vec<u32>,
        #[arg(long)]
        svg: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    /// I^<c n> inside I^n.
    Up,
    /// I^n inside I^<n + c>.
    Down,
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Map<String, Value>,
}

impl Output {
    fn new(expr: Option<&IdealExpression>) -> Self {
        let mut json = Map::new();
        if let Some(e) = expr {
            json.insert("d".into(), json!(e.dim));
            json.insert("gens".into(), json!(e.ideal.generators()));
        }
        Output {
            text: String::new(),
            json,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }
}

fn ideal_value(expr: &IdealExpression, i: &MonomialIdeal) -> Value {
    json!({ "gens": i.generators(), "text": expr.format(i) })
}

fn pure_value(expr: &IdealExpression, q: &PurePowerIdeal) -> Value {
    ideal_value(expr, &q.to_ideal())
}

fn exit_code(e: &Error) -> u8 {
    if e.is_usage() {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if cli.json {
                let v = Value::Object(out.json);
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&v).expect("json values serialize")
                )
            } else {
                stdout.write_all(out.text.as_bytes())
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let parse = |s: &str| parse_ideal_with(s, cli.vars);
    match &cli.command {
        Command::Compute { n, ideal } => {
            let expr = parse(ideal)?;
            let trace = diffpower_traced(&expr.ideal, *n)?;
            let mut out = Output::new(Some(&expr));
            out.set("n", json!(n));
            if cli.trace {
                let mut steps = Vec::new();
                match &trace.decomposition {
                    None => out.line("trace: principal formula"),
                    Some(dec) => {
                        for (q, p) in &trace.component_powers {
                            out.line(format!(
                                "trace: {}^<{n}> = {}",
                                expr.format(&q.to_ideal()),
                                expr.format(p)
                            ));
                            steps.push(json!({ "component": pure_value(&expr, q), "power": ideal_value(&expr, p) }));
                        }
                        debug_assert_eq!(dec.components().len(), steps.len());
                    }
                }
                out.set("trace", Value::Array(steps));
            }
            out.line(expr.format(&trace.result));
            out.set("result", ideal_value(&expr, &trace.result));
            Ok(out)
        }
        Command::Power { n, ideal } => {
            let expr = parse(ideal)?;
            let p = expr.ideal.power(*n)?;
            let mut out = Output::new(Some(&expr));
            out.set("n", json!(n));
            out.line(expr.format(&p));
            out.set("result", ideal_value(&expr, &p));
            Ok(out)
        }
        Command::Decompose { ideal } => {
            let expr = parse(ideal)?;
            let dec = decompose(&expr.ideal)?;
            let mut out = Output::new(Some(&expr));
            for q in dec.components() {
                out.line(expr.format(&q.to_ideal()));
            }
            out.set(
                "components",
                Value::Array(
                    dec.components()
                        .iter()
                        .map(|q| pure_value(&expr, q))
                        .collect(),
                ),
            );
            Ok(out)
        }
        Command::Radical { ideal } => {
            let expr = parse(ideal)?;
            expr.ideal.ensure_proper()?;
            let r = expr.ideal.radical();
            let mut out = Output::new(Some(&expr));
            out.line(expr.format(&r));
            out.set("result", ideal_value(&expr, &r));
            Ok(out)
        }
        Command::Closure { ideal } => {
            let expr = parse(ideal)?;
            let cl = differential_closure(&expr.ideal)?;
            let mut out = Output::new(Some(&expr));
            out.line(expr.format(&cl));
            out.set("result", ideal_value(&expr, &cl));
            Ok(out)
        }
        Command::Witness {
            ideal,
            element,
            nmax,
        } => {
            let expr = parse(ideal)?;
            expr.ideal.ensure_proper()?;
            let elements = match element {
                Some(s) => vec![parse_monomial(s, Some(expr.dim))?],
                None => expr.ideal.radical().generators().to_vec(),
            };
            let mut out = Output::new(Some(&expr));
            let mut list = Vec::new();
            for r in &elements {
                let w = witness_probe(&expr.ideal, r, *nmax)?;
                out.line(format!(
                    "r = {}  k = {}  c = {}  verified for n = 1..{}",
                    expr.format_monomial(r),
                    w.k,
                    expr.format_monomial(&w.c),
                    w.n_checked
                ));
                let mut checks = Vec::new();
                for c in &w.checks {
                    if cli.trace {
                        let oracle = c.oracle.map_or("skipped".to_string(), |b| b.to_string());
                        out.line(format!(
                            "trace: n = {}  formula: {}  oracle: {oracle}",
                            c.n, c.fast
                        ));
                    }
                    checks.push(json!({ "n": c.n, "formula": c.fast, "oracle": c.oracle }));
                }
                list.push(json!({
                    "r": r,
                    "k": w.k,
                    "c": w.c,
                    "n_checked": w.n_checked,
                    "checks": checks,
                }));
            }
            out.set("witnesses", Value::Array(list));
            Ok(out)
        }
        Command::Principality { ideal } => {
            let expr = parse(ideal)?;
            let mut out = Output::new(Some(&expr));
            let (bound, n_min, gen) = match expr.dim {
                2 | 3 => {
                    let r = if expr.dim == 2 {
                        principality_2d(&expr.ideal)?
                    } else {
                        principality_3d(&expr.ideal)?
                    };
                    out.line(format!("N = {}", r.n_bound));
                    out.line(format!(
                        "I^<{}> = ({})",
                        r.n_bound,
                        expr.format_monomial(&r.generator_at_bound)
                    ));
                    out.set("n_bound", json!(r.n_bound));
                    out.set("generator_at_bound", json!(r.generator_at_bound));
                    (Some(r.n_bound), r.n_min, r.principal_gen_at_n_min)
                }
                _ => {
                    let found =
                        nmin_search_with(&expr.ideal, DEFAULT_NMIN_CAP, SearchMode::Binary)?;
                    let (n, g) = found.unzip();
                    (None, n, g)
                }
            };
            if bound.is_none() {
                out.set("n_bound", Value::Null);
                out.set("search_cap", json!(DEFAULT_NMIN_CAP));
            }
            report_nmin(
                &mut out,
                &expr,
                n_min,
                gen.as_ref(),
                bound.unwrap_or(DEFAULT_NMIN_CAP),
            )?;
            Ok(out)
        }
        Command::Nmin { ideal, cap, linear } => {
            let expr = parse(ideal)?;
            let mode = if *linear {
                SearchMode::Linear
            } else {
                SearchMode::Binary
            };
            let found = nmin_search_with(&expr.ideal, *cap, mode)?;
            let mut out = Output::new(Some(&expr));
            out.set("search_cap", json!(cap));
            let (n, g) = found.unzip();
            report_nmin(&mut out, &expr, n, g.as_ref(), *cap)?;
            Ok(out)
        }
        Command::Contain { ideal, dir, n } => {
            let expr = parse(ideal)?;
            let mut out = Output::new(Some(&expr));
            out.set("n", json!(n));
            let pure = PurePowerIdeal::from_ideal(&expr.ideal);
            let report = match dir {
                Direction::Down => {
                    let q = pure.ok_or_else(|| {
                        Error::Precondition("the lower containment needs a pure-power ideal".into())
                    })?;
                    let lower = lower_containment_c(&q, *n)?;
                    out.set("minimizer", json!(lower.minimizer));
                    lower.report
                }
                Direction::Up => match (pure, expr.ideal.principal_generator()) {
                    (Some(q), _) => upper_containment_check(&q, *n)?,
                    (None, Some(g)) => principal_containment_check(g, *n)?,
                    (None, None) => {
                        return Err(Error::Precondition(
                            "the upper containment needs a pure-power or principal ideal".into(),
                        ))
                    }
                },
            };
            describe_containment(&mut out, &report);
            if !report.verified {
                return Err(Error::VerificationFailed(format!(
                    "containment with c = {} does not hold",
                    report.c_value
                )));
            }
            Ok(out)
        }
        Command::NoUniform { poly } => {
            let w = no_uniform_polynomial_demo(poly)?;
            let expr = parse_ideal_with(&w.ideal.to_string(), Some(1))?;
            let mut out = Output::new(Some(&expr));
            out.line(format!("I = {}", expr.format(&w.ideal)));
            out.line(format!("n = {}  p(n) = {}", w.n, w.p_n));
            out.line(format!(
                "{} is in I^<{}> but not in I^{}",
                expr.format_monomial(&w.witness),
                w.p_n,
                w.n
            ));
            out.set("poly", json!(poly));
            out.set("c", json!(w.c));
            out.set("n", json!(w.n));
            out.set("p_n", json!(w.p_n));
            out.set("witness", json!(w.witness));
            out.set("in_diffpower", json!(w.in_diffpower));
            out.set("in_ordinary_power", json!(w.in_ordinary_power));
            Ok(out)
        }
        Command::Oracle {
            ideal,
            n,
            bounds,
            witness,
        } => {
            let expr = parse(ideal)?;
            let mut out = Output::new(Some(&expr));
            out.set("n", json!(n));
            if let Some(m) = witness {
                let gamma = parse_monomial(m, Some(expr.dim))?;
                let w = membership_witness(&Polynomial::monomial(gamma.clone()), &expr.ideal, *n)?;
                out.set("element", json!(gamma));
                out.set("member", json!(w.is_none()));
                match w {
                    None => {
                        out.line(format!("{} is in I^<{n}>", expr.format_monomial(&gamma)));
                        out.set("operator", Value::Null);
                    }
                    Some(w) => {
                        out.line(format!(
                            "{} is not in I^<{n}>",
                            expr.format_monomial(&gamma)
                        ));
                        out.line(format!(
                            "operator d^{:?} gives {} {}, outside I",
                            w.operator.0.entries(),
                            w.coefficient,
                            expr.format_monomial(&w.term)
                        ));
                        out.set(
                            "operator",
                            json!({
                                "beta": w.operator.0,
                                "term": w.term,
                                "coefficient": w.coefficient.to_string(),
                            }),
                        );
                    }
                }
                return Ok(out);
            }
            let bound = match bounds {
                Some(b) => ExponentVector::new(b.clone())?,
                None => default_box(&expr.ideal, *n)?,
            };
            if bound.dim() != expr.dim {
                return Err(Error::InvalidArgument(format!(
                    "--box needs {} entries, got {}",
                    expr.dim,
                    bound.dim()
                )));
            }
            let r = bruteforce_diffpower(&expr.ideal, *n, &bound)?;
            out.line(expr.format(&r));
            out.set("box", json!(bound));
            out.set("result", ideal_value(&expr, &r));
            Ok(out)
        }
        Command::Staircase {
            ideal,
            extent,
            overlay,
            svg,
        } => {
            let expr = parse(ideal)?;
            if expr.dim != 2 {
                return Err(Error::Precondition(format!(
                    "staircases are drawn for two variables only, got {}",
                    expr.dim
                )));
            }
            let mut overlays = Vec::with_capacity(overlay.len());
            for &k in overlay {
                let p = diffpower_traced(&expr.ideal, k)?.result;
                overlays.push((format!("I^<{k}>"), p));
            }
            let extent = match extent {
                Some(e) => ExponentVector::new(e.clone())?,
                None => {
                    let r = required_extent(&expr.ideal, &overlays);
                    ExponentVector::new(
                        r.entries().iter().map(|&v| v + STAIRCASE_MARGIN).collect(),
                    )?
                }
            };
            let format = if *svg {
                RenderFormat::Svg
            } else {
                RenderFormat::Ascii
            };
            let req = StaircaseRender {
                ideal: expr.ideal.clone(),
                overlays,
                format,
                extent,
            };
            let picture = render_staircase(&req)?;
            let mut out = Output::new(Some(&expr));
            out.text.push_str(&picture);
            out.set("extent", json!(req.extent));
            out.set(
                "overlays",
                Value::Array(
                    req.overlays
                        .iter()
                        .enumerate()
                        .map(|(k, (label, o))| {
                            json!({
                                "label": label,
                                "glyph": overlay_glyph(k).to_string(),
                                "ideal": ideal_value(&expr, o),
                            })
                        })
                        .collect(),
                ),
            );
            out.set("format", json!(if *svg { "svg" } else { "ascii" }));
            out.set("picture", json!(picture));
            Ok(out)
        }
    }
}

fn report_nmin(
    out: &mut Output,
    expr: &IdealExpression,
    n_min: Option<u32>,
    gen: Option<&ExponentVector>,
    cap: u32,
) -> Result<(), Error> {
    match (n_min, gen) {
        (Some(n), Some(g)) => {
            out.line(format!("N_min = {n}"));
            out.line(format!("I^<{n}> = ({})", expr.format_monomial(g)));
            out.set("n_min", json!(n));
            out.set("generator_at_n_min", json!(g));
            if n > 1 {
                let before = diffpower_traced(&expr.ideal, n - 1)?.result;
                out.line(format!("I^<{}> = {}", n - 1, expr.format(&before)));
                out.set("before_n_min", ideal_value(expr, &before));
            }
        }
        _ => {
            out.line(format!("no principal differential power for n <= {cap}"));
            out.set("n_min", Value::Null);
            out.set("generator_at_n_min", Value::Null);
        }
    }
    Ok(())
}

fn describe_containment(out: &mut Output, r: &ContainmentReport) {
    out.line(format!("c = {}", r.c_value));
    for &level in &r.checked_levels {
        let claim = match r.direction {
            diffpow_core::ContainmentDirection::OrdinaryInDiff => {
                format!("I^{} in I^<{level}>", r.n)
            }
            diffpow_core::ContainmentDirection::DiffInOrdinary => {
                format!("I^<{level}> in I^{}", r.n)
            }
        };
        out.line(format!(
            "{claim}: {}",
            if r.verified { "verified" } else { "fails" }
        ));
    }
    out.set("c", json!(r.c_value.to_string()));
    out.set("direction", json!(r.direction.as_str()));
    out.set("checked_levels", json!(r.checked_levels));
    out.set("verified", json!(r.verified));
}
