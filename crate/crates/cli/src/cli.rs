//! Argument parsing and the command implementations behind `vfilt`.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;
use serde_json::json;
use vfilt_core::asymptotics::{
    find_fit, quasi_linear_fit, v_series, SeriesReport, DEFAULT_MAX_PERIOD,
};
use vfilt_core::closure::closure_power;
use vfilt_core::decomp::{associated_primes, minimal_primes};
use vfilt_core::filtration::svd_detect;
use vfilt_core::lp::Rational;
use vfilt_core::vnumber::{local_v, v_number};
use vfilt_core::{
    cover_ideal, edge_ideal, parse_ideal, FamilyTag, FiltrationKind, FiltrationSpec, Graph,
    Monomial, MonomialIdeal, MonomialPrime, RingContext,
};

use crate::limits::{Limits, DEFAULT_MAX_VARS, MAX_VARS_ENV};
use crate::verify::{default_cases, default_cases_for, verify_all, CaseId, TheoremCase};

#[derive(Debug, Parser)]
#[command(
    name = "vfilt",
    version,
    about = "v-numbers of monomial ideals and their filtrations"
)]
pub struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest number of variables the series and verify commands accept.
    #[arg(long, global = true, env = MAX_VARS_ENV, default_value_t = DEFAULT_MAX_VARS)]
    pub max_vars: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The v-number with its prime and witness.
    V(IdealArg),
    /// The local v-number at one associated prime.
    Vlocal {
        #[command(flatten)]
        ideal: IdealArg,
        /// Variables generating the prime, e.g. `x,y`.
        #[arg(long)]
        prime: String,
    },
    /// Associated primes.
    Ass(IdealArg),
    /// Minimal primes.
    Min(IdealArg),
    /// Least degree of a generator.
    Alpha(IdealArg),
    /// `(I : J)` where J is an ideal or a single monomial.
    Colon {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        by: String,
    },
    /// `I ∩ J`.
    Intersect {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        with: String,
    },
    /// `(I : J^∞)`.
    Saturate {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        by: String,
    },
    /// Integral closure of `I^n`.
    Closure {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// The n-th symbolic power of an ideal or of a graph's cover ideal.
    Symbolic {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 2)]
        power: u64,
        /// Intersect over all associated primes rather than the minimal ones.
        #[arg(long)]
        all_primes: bool,
    },
    /// v(I_n) over a range of n, with an optional exact fit.
    Series {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Filtration::Symbolic)]
        filtration: Filtration,
        #[arg(long, default_value = "1..6", value_parser = parse_range)]
        range: (u64, u64),
        /// Local v-number at this prime instead of the global one.
        #[arg(long)]
        prime: Option<String>,
        /// Fit a quasi-linear function to the values.
        #[arg(long)]
        fit: bool,
        /// Fit with exactly this period instead of searching.
        #[arg(long)]
        period: Option<u64>,
    },
    /// Least e with I_{en} = I_e^n over the sampled range.
    Svd {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Filtration::Symbolic)]
        filtration: Filtration,
        #[arg(long, default_value_t = 4)]
        e_max: u64,
        #[arg(long, default_value_t = 4)]
        n_max: u64,
    },
    /// Check the closed forms against computed values.
    Verify {
        /// Case id; every default case runs when omitted.
        case: Option<String>,
        /// Case parameter as name=value; repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, i64)>,
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
        /// Seed for the randomized corpus cases.
        #[arg(long)]
        seed: Option<u64>,
        /// Add this to every expected value (exercises the failure path).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        inject_offset: i64,
    },
    /// Describe a graph and its edge and cover ideals.
    Graph {
        /// Family such as `Kb(2,3)`, `K(4)`, `C(5)`, `Kpend(2,2)`,
        /// `fakhari(C(5),2)`, `hbip(2)`, or a JSON graph.
        #[arg(long)]
        graph: String,
    },
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Text such as `(x^2, x*y^4) in [x,y]`, JSON, or `@file`.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Base ideal: text, JSON, or `@file`.
    #[arg(long, conflicts_with_all = ["graph", "spec"])]
    pub ideal: Option<String>,
    /// Graph family or JSON graph; its cover ideal is the base.
    #[arg(long, conflicts_with = "spec")]
    pub graph: Option<String>,
    /// Use the edge ideal of the graph instead of the cover ideal.
    #[arg(long, requires = "graph")]
    pub edge: bool,
    /// A named filtration (`squares`, `sqrt2`), a JSON spec, or `@file`.
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filtration {
    Ordinary,
    Symbolic,
    SymbolicAss,
    Closure,
}

pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, found {s:?}"))?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {a:?}"))?;
    let b: u64 = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end {b:?}"))?;
    if a == 0 || a > b {
        return Err(format!("range {a}..{b} must satisfy 1 <= A <= B"));
    }
    Ok((a, b))
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, found {s:?}"))?;
    let v: i64 = v
        .trim()
        .parse()
        .map_err(|_| format!("bad value in {s:?}"))?;
    Ok((k.trim().to_string(), v))
}

/// Reads `@path` arguments from disk.
fn load(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_string()),
    }
}

fn ideal_from(arg: &str) -> Result<MonomialIdeal> {
    let src = load(arg)?;
    parse_ideal(&src).with_context(|| format!("parsing ideal {:?}", src.trim()))
}

pub fn graph_from(arg: &str) -> Result<Graph> {
    let src = load(arg)?;
    if src.trim_start().starts_with('{') {
        return serde_json::from_str(&src).context("parsing graph JSON");
    }
    let tag =
        FamilyTag::from_str(&src).with_context(|| format!("parsing graph {:?}", src.trim()))?;
    Ok(tag.build()?)
}

/// `(x^2, x y^{n^2})` in `k[x,y]` for n up to `end`.
fn squares_spec(end: u64) -> Result<FiltrationSpec> {
    let ring = RingContext::new(["x", "y"])?;
    let table = (1..=end)
        .map(|n| {
            let e = u32::try_from(n * n).context("n too large")?;
            Ok(MonomialIdeal::from_exponents(
                ring.clone(),
                vec![vec![2, 0], vec![1, e]],
            )?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationSpec::explicit(table)?)
}

/// `(x^c)` in `k[x]` with `c = ⌈n√2⌉` for n up to `end`.
fn sqrt2_spec(end: u64) -> Result<FiltrationSpec> {
    let ring = RingContext::new(["x"])?;
    let table = (1..=end)
        .map(|n| {
            let target = 2 * n * n;
            let c = (0u64..)
                .find(|c| c * c >= target)
                .expect("unbounded search");
            let c = u32::try_from(c).context("n too large")?;
            Ok(MonomialIdeal::principal(
                ring.clone(),
                Monomial::new(vec![c]),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationSpec::explicit(table)?)
}

fn kind_of(f: Filtration) -> FiltrationKind {
    match f {
        Filtration::Ordinary => FiltrationKind::Ordinary,
        Filtration::Symbolic => FiltrationKind::SymbolicMinAss,
        Filtration::SymbolicAss => FiltrationKind::SymbolicAss,
        Filtration::Closure => FiltrationKind::Closure,
    }
}

impl SourceArgs {
    fn base(&self) -> Result<MonomialIdeal> {
        match (&self.ideal, &self.graph) {
            (Some(i), _) => ideal_from(i),
            (None, Some(g)) => {
                let g = graph_from(g)?;
                Ok(if self.edge {
                    edge_ideal(&g)?
                } else {
                    cover_ideal(&g)?
                })
            }
            (None, None) => bail!("give one of --ideal, --graph or --spec"),
        }
    }

    /// The filtration to sample; named specs are tabulated up to `end`.
    fn spec(&self, filtration: Filtration, end: u64) -> Result<FiltrationSpec> {
        match &self.spec {
            None => Ok(FiltrationSpec::new(kind_of(filtration), self.base()?)),
            Some(s) => {
                let src = load(s)?;
                match src.trim() {
                    "squares" => squares_spec(end),
                    "sqrt2" => sqrt2_spec(end),
                    json if json.starts_with('{') => {
                        serde_json::from_str(json).context("parsing filtration JSON")
                    }
                    other => {
                        bail!("unknown filtration {other:?}; named ones are squares and sqrt2")
                    }
                }
            }
        }
    }
}

fn prime_from(ideal: &MonomialIdeal, s: &str) -> Result<MonomialPrime> {
    let names: Vec<&str> = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .collect();
    Ok(MonomialPrime::from_names(ideal.ring().clone(), &names)?)
}

/// Text printed on success and whether every requested check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(Outcome::ok(if json {
        serde_json::to_string_pretty(value)?
    } else {
        human()
    }))
}

fn primes_text(primes: &[MonomialPrime]) -> String {
    let parts: Vec<String> = primes.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let mut limits = Limits::from_env()?;
    limits.max_vars = cli.max_vars;
    let json = cli.json;
    match cli.command {
        Command::V(a) => {
            let i = ideal_from(&a.ideal)?;
            let r = v_number(&i).context("computing the v-number")?;
            emit(json, &r, || {
                format!(
                    "v = {}\nprime: {}\nwitness: {}",
                    r.value,
                    r.prime,
                    i.format_monomial(&r.witness)
                )
            })
        }
        Command::Vlocal { ideal, prime } => {
            let i = ideal_from(&ideal.ideal)?;
            let p = prime_from(&i, &prime)?;
            let r = local_v(&i, &p).context("computing the local v-number")?;
            emit(json, &r, || {
                format!(
                    "v_{} = {}\nwitness: {}",
                    r.prime,
                    r.value,
                    i.format_monomial(&r.witness)
                )
            })
        }
        Command::Ass(a) => {
            let i = ideal_from(&a.ideal)?;
            let ass = associated_primes(&i).context("computing associated primes")?;
            emit(json, &ass, || primes_text(&ass))
        }
        Command::Min(a) => {
            let i = ideal_from(&a.ideal)?;
            let min = minimal_primes(&i).context("computing minimal primes")?;
            emit(json, &min, || primes_text(&min))
        }
        Command::Alpha(a) => {
            let i = ideal_from(&a.ideal)?;
            let alpha = i.alpha().context("computing alpha")?;
            emit(json, &alpha, || alpha.to_string())
        }
        Command::Colon { ideal, by } => {
            let i = ideal_from(&ideal.ideal)?;
            let j = ideal_from(&by)?;
            let c = i.colon_ideal(&j).context("computing the colon ideal")?;
            emit(json, &c, || c.to_string())
        }
        Command::Intersect { ideal, with } => {
            let i = ideal_from(&ideal.ideal)?;
            let j = ideal_from(&with)?;
            i.ensure_same_ring(&j)?;
            let c = i.intersect(&j);
            emit(json, &c, || c.to_string())
        }
        Command::Saturate { ideal, by } => {
            let i = ideal_from(&ideal.ideal)?;
            let j = ideal_from(&by)?;
            let c = i.saturation(&j).context("computing the saturation")?;
            emit(json, &c, || c.to_string())
        }
        Command::Closure { ideal, power } => {
            let i = ideal_from(&ideal.ideal)?;
            let c = closure_power(&i, power);
            emit(json, &c, || c.to_string())
        }
        Command::Symbolic {
            source,
            power,
            all_primes,
        } => {
            let kind = if all_primes {
                FiltrationKind::SymbolicAss
            } else {
                FiltrationKind::SymbolicMinAss
            };
            let c = FiltrationSpec::new(kind, source.base()?)
                .evaluate(power)
                .context("computing the symbolic power")?;
            emit(json, &c, || c.to_string())
        }
        Command::Series {
            source,
            filtration,
            range,
            prime,
            fit,
            period,
        } => {
            let spec = source.spec(filtration, range.1)?;
            limits.check_vars("series", spec.base.dim())?;
            limits.check_n("series", range.1)?;
            let p = prime.map(|s| prime_from(&spec.base, &s)).transpose()?;
            let series =
                v_series(&spec, range.0, range.1, p.as_ref()).context("computing the series")?;
            let fitted = match (fit || period.is_some(), period) {
                (false, _) => None,
                (true, Some(t)) => quasi_linear_fit(&series, t)?,
                (true, None) => find_fit(&series.values(), DEFAULT_MAX_PERIOD),
            };
            let report = SeriesReport::new(&series, fitted.clone());
            emit(json, &report, || {
                let mut out = String::from("  n  v     witness\n");
                for (n, r) in &series.samples {
                    let _ = writeln!(
                        out,
                        "{n:>3}  {:<4}  {}",
                        r.value,
                        spec.base.format_monomial(&r.witness)
                    );
                }
                if fit || period.is_some() {
                    match &fitted {
                        None => out.push_str("fit: none\n"),
                        Some(f) => {
                            let _ = writeln!(out, "fit: period {}, from n = {}", f.period, f.n0);
                            for (class, line) in f.lines.iter().enumerate() {
                                let _ = writeln!(
                                    out,
                                    "  n = {class} mod {}: {}",
                                    f.period,
                                    line_text(&line.slope, &line.intercept)
                                );
                            }
                        }
                    }
                }
                out.trim_end().to_string()
            })
        }
        Command::Svd {
            source,
            filtration,
            e_max,
            n_max,
        } => {
            let spec = source.spec(filtration, e_max * n_max)?;
            limits.check_vars("svd", spec.base.dim())?;
            limits.check_n("svd", n_max)?;
            let cert = svd_detect(&spec, e_max, n_max).context("detecting the Veronese degree")?;
            let value = json!({"svd": cert.as_ref().map(|c| c.e), "n_max": n_max});
            emit(json, &value, || match &cert {
                Some(c) => format!("svd = {} (checked for n <= {})", c.e, c.n_max),
                None => format!("no e <= {e_max} works for n <= {n_max}"),
            })
        }
        Command::Verify {
            case,
            params,
            range,
            seed,
            inject_offset,
        } => {
            let cases = select_cases(case.as_deref(), params, range, seed)?;
            let results = verify_all(&cases, &limits, inject_offset);
            let mut reports = Vec::new();
            for r in results {
                reports.push(r?);
            }
            let ok = reports.iter().all(|r| r.pass);
            let text = if json {
                serde_json::to_string_pretty(&reports)?
            } else {
                let mut out: String = reports.iter().map(|r| r.render()).collect();
                let passed = reports.iter().filter(|r| r.pass).count();
                let _ = write!(out, "{passed}/{} cases pass", reports.len());
                out
            };
            Ok(Outcome { text, ok })
        }
        Command::Graph { graph } => {
            let g = graph_from(&graph)?;
            let cover = cover_ideal(&g)?;
            let edges = edge_ideal(&g)?;
            let value = json!({
                "graph": g,
                "bipartite": g.is_bipartite(),
                "complete_multipartite": g.is_complete_multipartite(),
                "edge_ideal": edges,
                "cover_ideal": cover,
            });
            emit(json, &value, || {
                format!(
                    "{g}\nbipartite: {}\ncomplete multipartite: {}\nedge ideal: {edges}\ncover ideal: {cover}",
                    g.is_bipartite(),
                    g.is_complete_multipartite()
                )
            })
        }
    }
}

fn line_text(slope: &Rational, intercept: &Rational) -> String {
    if intercept.is_negative() {
        format!("{slope} n - {}", -intercept)
    } else {
        format!("{slope} n + {intercept}")
    }
}

fn select_cases(
    id: Option<&str>,
    params: Vec<(String, i64)>,
    range: Option<(u64, u64)>,
    seed: Option<u64>,
) -> Result<Vec<TheoremCase>> {
    let Some(id) = id else {
        if !params.is_empty() || range.is_some() {
            bail!("--param and --range need a case id");
        }
        let mut cases = default_cases();
        if let Some(seed) = seed {
            for c in &mut cases {
                if let Some(s) = c.params.get_mut("seed") {
                    *s = seed as i64;
                }
            }
        }
        return Ok(cases);
    };
    let id = CaseId::from_str(id)?;
    let mut cases = if params.is_empty() {
        default_cases_for(id)
    } else {
        let mut p: Vec<(&str, i64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        if id.params().contains(&"seed") && !params.iter().any(|(k, _)| k == "seed") {
            p.push(("seed", crate::corpus::DEFAULT_SEED as i64));
        }
        if id.params().contains(&"count") && !params.iter().any(|(k, _)| k == "count") {
            p.push(("count", 200));
        }
        vec![TheoremCase::new(
            id,
            &p,
            range.unwrap_or(if id.uses_range() { (1, 4) } else { (1, 1) }),
        )?]
    };
    for c in &mut cases {
        if let Some(r) = range {
            c.range = r;
        }
        if let (Some(s), true) = (seed, c.params.contains_key("seed")) {
            c.params.insert("seed".into(), s as i64);
        }
        c.validate().map_err(|e| anyhow!(e))?;
    }
    Ok(cases)
}
