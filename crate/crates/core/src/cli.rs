//! Command-line front end: literal parsing, configuration and dispatch.
//!
//! Polynomial grammar: terms joined by `+` or `-`, each term a coefficient,
//! a coefficient followed by an optional `*` and `x` (with optional
//! `^exponent`), or `x` alone. Coefficients are decimal and reduced mod p;
//! whitespace is ignored. Ideals are written `u;v`, forms `a,b,c`.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::discriminant::Discriminant;
use crate::elliptic::EllipticCurve;
use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::ideal::MumfordIdeal;
use crate::oracle::{oracle_classes_with, OracleOptions};
use crate::poly::Poly;
use crate::quadform::QuadForm;
use crate::report::{self, ClassifyJson, EllipticJson, OracleJson};
use crate::selftest;

/// Exponents above this are rejected rather than allocated.
const MAX_EXPONENT: usize = 4096;

pub const SEED_ENV: &str = "FFCLASS_SEED";
pub const DEFAULT_SEED: u64 = 20_240_601;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Option<u128>> {
        let start = self.pos;
        let mut value: u128 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u128))
                .ok_or_else(|| self.error("number too large"))?;
            self.pos += 1;
        }
        Ok((self.pos > start).then_some(value))
    }
}

/// Parses a polynomial over `field`.
pub fn parse_poly(s: &str, field: PrimeField) -> Result<Poly> {
    let mut cur = Cursor {
        chars: s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
        src: s,
    };
    if cur.chars.is_empty() {
        return Err(cur.error("empty polynomial"));
    }
    let p = field.p();
    let mut coeffs: Vec<u64> = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            if first {
                return Err(Error::Parse {
                    pos: cur.chars[cur.pos - 1].0,
                    msg: "unexpected '+'".into(),
                });
            }
            false
        } else if first {
            false
        } else {
            return Err(cur.error("expected '+' or '-'"));
        };
        first = false;

        let coeff = cur.number()?;
        let has_x = if coeff.is_some() {
            let star = cur.eat('*');
            let x = cur.eat('x');
            if star && !x {
                return Err(cur.error("expected 'x' after '*'"));
            }
            x
        } else if cur.eat('x') {
            true
        } else {
            return Err(cur.error("expected a coefficient or 'x'"));
        };
        let exponent = if has_x {
            if cur.eat('^') {
                let e = cur.number()?.ok_or_else(|| cur.error("expected an exponent"))?;
                if e > MAX_EXPONENT as u128 {
                    return Err(cur.error("exponent too large"));
                }
                e as usize
            } else {
                1
            }
        } else {
            0
        };
        let c = (coeff.unwrap_or(1) % p as u128) as u64;
        let c = if negative { field.neg(c) } else { c };
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, 0);
        }
        coeffs[exponent] = field.add(coeffs[exponent], c);
    }
    Ok(Poly::from_raw(field, coeffs))
}

fn split_literal(s: &str, sep: char, parts: usize) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push((start, &s[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &s[start..]));
    if out.len() != parts {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected {parts} parts separated by '{sep}'"),
        });
    }
    Ok(out)
}

fn parse_part(part: (usize, &str), field: PrimeField) -> Result<Poly> {
    parse_poly(part.1, field).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: pos + part.0,
            msg,
        },
        other => other,
    })
}

/// Parses and validates an ideal literal `u;v`.
pub fn parse_ideal(s: &str, disc: &Discriminant) -> Result<MumfordIdeal> {
    let parts = split_literal(s, ';', 2)?;
    let field = disc.field();
    let u = parse_part(parts[0], field)?;
    let v = parse_part(parts[1], field)?;
    MumfordIdeal::new(u, v, disc)
}

/// Parses a form literal `a,b,c`.
pub fn parse_form(s: &str, field: PrimeField) -> Result<QuadForm> {
    let parts = split_literal(s, ',', 3)?;
    Ok(QuadForm::new(
        parse_part(parts[0], field)?,
        parse_part(parts[1], field)?,
        parse_part(parts[2], field)?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Full class table: forms, ideals, orders, structure, improper classes, genera.
    Classify,
    /// Reduce a form to its class representative.
    Reduce {
        #[arg(long)]
        form: String,
    },
    /// Compose two ideal classes.
    Compose {
        #[arg(long)]
        i1: String,
        #[arg(long)]
        i2: String,
    },
    /// Decide proper equivalence of two forms.
    Equiv {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Genus characters and principal-genus membership of a form.
    Genus {
        #[arg(long)]
        form: String,
    },
    /// Points of y^2 = alpha and the isomorphism onto the class group.
    Elliptic,
    /// Count classes by brute-force orbit closure.
    Oracle {
        /// Degree box for a, b, c (defaults to deg alpha).
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Rerun with a larger box and warn if the count changes.
        #[arg(long)]
        verify_bound: bool,
    },
    /// Run the acceptance criteria.
    Selftest,
}

/// Parsed command line.
#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "ffclass", version, about = "Quadratic forms and class groups over F_p[x]")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Odd prime p.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Monic squarefree alpha of odd degree, e.g. "x^3+x+1".
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Seed for randomized checks (overrides FFCLASS_SEED).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

impl RunConfig {
    /// `--seed`, then `FFCLASS_SEED`, then the built-in default.
    pub fn effective_seed(&self) -> u64 {
        self.seed.unwrap_or_else(seed_from_env)
    }
}

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn ok(stdout: String) -> Self {
        RunOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(err: &Error) -> Self {
        let code = match err {
            Error::Parse { .. } => 2,
            _ => 1,
        };
        RunOutcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }

    fn usage(msg: &str) -> Self {
        RunOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    if config.command == Command::Selftest {
        return run_selftest(config);
    }
    let (Some(p), Some(alpha)) = (config.p, config.alpha.as_deref()) else {
        return RunOutcome::usage("--p and --alpha are required");
    };
    match dispatch(config, p, alpha) {
        Ok(stdout) => RunOutcome::ok(stdout),
        Err(e) => RunOutcome::failure(&e),
    }
}

fn render<T: Serialize>(format: OutputFormat, json: &T, text: impl FnOnce() -> String) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(json).expect("serializable") + "\n",
        OutputFormat::Text => text(),
    }
}

#[derive(Serialize)]
struct IdealJson {
    u: String,
    v: String,
}

impl From<&MumfordIdeal> for IdealJson {
    fn from(i: &MumfordIdeal) -> Self {
        IdealJson {
            u: i.u().to_string(),
            v: i.v().to_string(),
        }
    }
}

fn form_json(q: &QuadForm) -> [String; 3] {
    [q.a.to_string(), q.b.to_string(), q.c.to_string()]
}

fn dispatch(config: &RunConfig, p: u64, alpha: &str) -> Result<String> {
    let field = PrimeField::new(p)?;
    let disc = Discriminant::new(parse_poly(alpha, field)?)?;
    let out = config.output;
    Ok(match &config.command {
        Command::Classify => {
            let c = report::classify(&disc)?;
            render(out, &ClassifyJson::new(&c), || report::classify_text(&c))
        }
        Command::Reduce { form } => {
            let q = parse_form(form, field)?;
            let (r, t) = q.reduce(&disc)?;
            let ideal = r.to_mumford(&disc)?;
            let json = serde_json::json!({
                "input": form_json(&q),
                "reduced": form_json(&r),
                "transform": [[t.m00.to_string(), t.m01.to_string()], [t.m10.to_string(), t.m11.to_string()]],
                "ideal": IdealJson::from(&ideal),
            });
            render(out, &json, || {
                format!(
                    "{q} reduces to {r}\ntransform [[{}, {}], [{}, {}]]\nideal {}\n",
                    t.m00, t.m01, t.m10, t.m11, ideal
                )
            })
        }
        Command::Compose { i1, i2 } => {
            let a = parse_ideal(i1, &disc)?;
            let b = parse_ideal(i2, &disc)?;
            let r = a.compose(&b)?;
            let json = serde_json::json!({
                "i1": IdealJson::from(&a),
                "i2": IdealJson::from(&b),
                "result": IdealJson::from(&r),
                "form": form_json(&r.to_form()),
                "is_identity": r.is_identity(),
            });
            render(out, &json, || {
                format!(
                    "{} * {} = {}{}\nform {}\n",
                    a.to_literal(),
                    b.to_literal(),
                    r.to_literal(),
                    if r.is_identity() { " (identity)" } else { "" },
                    r.to_form()
                )
            })
        }
        Command::Equiv { f1, f2 } => {
            let q1 = parse_form(f1, field)?;
            let q2 = parse_form(f2, field)?;
            let r1 = q1.reduce(&disc)?.0;
            let r2 = q2.reduce(&disc)?.0;
            let equivalent = r1 == r2;
            let json = serde_json::json!({
                "f1": form_json(&q1),
                "f2": form_json(&q2),
                "reduced1": form_json(&r1),
                "reduced2": form_json(&r2),
                "properly_equivalent": equivalent,
            });
            render(out, &json, || {
                format!(
                    "{q1} -> {r1}\n{q2} -> {r2}\n{}\n",
                    if equivalent {
                        "properly equivalent"
                    } else {
                        "not properly equivalent"
                    }
                )
            })
        }
        Command::Genus { form } => {
            let q = parse_form(form, field)?;
            let r = q.reduce(&disc)?.0;
            let ctx = crate::genus::GenusContext::new(&disc)?;
            let g = ctx.genus(&q)?;
            let principal = ctx.is_principal(&q)?;
            let json = serde_json::json!({
                "form": form_json(&q),
                "reduced": form_json(&r),
                "primes": ctx.primes().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "chars": g.chars,
                "twist": ctx.twist(),
                "genus": g.normalized,
                "principal": principal,
            });
            render(out, &json, || {
                let primes: Vec<String> = ctx.primes().iter().map(|p| p.to_string()).collect();
                format!(
                    "{q} (reduced {r})\nprimes {primes:?}\ncharacters {:?}, twist {:?}\ngenus {:?}, principal: {}\n",
                    g.chars,
                    ctx.twist(),
                    g.normalized,
                    if principal { "yes" } else { "no" }
                )
            })
        }
        Command::Elliptic => {
            let curve = EllipticCurve::new(&disc)?;
            let iso = curve.verify_isomorphism()?;
            let json = EllipticJson::new(&curve, &iso)?;
            render(out, &json, || report::elliptic_text(&json))
        }
        Command::Oracle {
            degree_bound,
            verify_bound,
        } => {
            let mut opts = OracleOptions::new(degree_bound.unwrap_or(disc.degree()));
            opts.verify_bound = *verify_bound;
            let r = oracle_classes_with(&disc, &opts)?;
            let json = OracleJson::from(&r);
            render(out, &json, || report::oracle_text(&json))
        }
        Command::Selftest => unreachable!("handled in run"),
    })
}

fn run_selftest(config: &RunConfig) -> RunOutcome {
    let outcomes = selftest::run_all(config.effective_seed());
    let all_passed = outcomes.iter().all(|o| o.passed);
    let stdout = render(config.output, &outcomes, || {
        outcomes.iter().map(|o| format!("{o}\n")).collect()
    });
    RunOutcome {
        code: if all_passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
