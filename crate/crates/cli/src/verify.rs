//! Closed-form expectations for the graph families and examples, checked
//! against values computed from scratch.
//!
//! Every case builds its ideals directly, computes v-numbers with the
//! quotient method, and compares them with the stated formula. At the first
//! `n` of each case the quotient-method values are also re-derived by the
//! brute-force oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Roots;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use vfilt_core::asymptotics::{fit_values, slope_gap, DEFAULT_MAX_PERIOD};
use vfilt_core::decomp::{associated_primes, bight, irreducible_decomposition};
use vfilt_core::graph::{fakhari, reg_closed_form};
use vfilt_core::lp::{rational, Rational};
use vfilt_core::polarize::polarize;
use vfilt_core::vnumber::{all_local_v, local_v_oracle, v_number};
use vfilt_core::{
    cover_ideal, edge_ideal, Error, FamilyTag, FiltrationSpec, Monomial, MonomialIdeal,
    MonomialPrime, RingContext, VResult,
};

use crate::corpus::{self, companion, DEFAULT_SEED};
use crate::limits::{LimitError, Limits};

/// Samples used for the no-fit check on the squares example: period 4 needs
/// three samples in each class.
pub const SQUARES_FIT_WINDOW: u64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseId {
    CompleteBipartite,
    Complete,
    Cycle,
    Pendant,
    Hbip,
    RegGap,
    SlopeGap,
    Squares,
    Sqrt2,
    ThreePrimes,
    Polarization,
    Oracle,
    Identities,
}

impl CaseId {
    pub const ALL: [CaseId; 13] = [
        CaseId::CompleteBipartite,
        CaseId::Complete,
        CaseId::Cycle,
        CaseId::Pendant,
        CaseId::Hbip,
        CaseId::RegGap,
        CaseId::SlopeGap,
        CaseId::Squares,
        CaseId::Sqrt2,
        CaseId::ThreePrimes,
        CaseId::Polarization,
        CaseId::Oracle,
        CaseId::Identities,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::CompleteBipartite => "complete-bipartite",
            CaseId::Complete => "complete",
            CaseId::Cycle => "cycle",
            CaseId::Pendant => "pendant",
            CaseId::Hbip => "hbip",
            CaseId::RegGap => "reg-gap",
            CaseId::SlopeGap => "slope-gap",
            CaseId::Squares => "squares",
            CaseId::Sqrt2 => "sqrt2",
            CaseId::ThreePrimes => "three-primes",
            CaseId::Polarization => "polarization",
            CaseId::Oracle => "oracle",
            CaseId::Identities => "identities",
        }
    }

    /// Parameter names the case needs. Polarization takes exactly one of
    /// `m` (the complete graph) or `u` (the cycle) besides `k`.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            CaseId::CompleteBipartite => &["p1", "p2"],
            CaseId::Complete => &["m"],
            CaseId::Cycle => &["u"],
            CaseId::Pendant => &["m", "s"],
            CaseId::Hbip => &["p"],
            CaseId::RegGap => &["m", "k"],
            CaseId::SlopeGap => &["m", "t"],
            CaseId::Squares | CaseId::Sqrt2 | CaseId::ThreePrimes => &[],
            CaseId::Polarization => &["k"],
            CaseId::Oracle | CaseId::Identities => &["count", "seed"],
        }
    }

    /// Whether the case samples a range of `n`.
    pub fn uses_range(self) -> bool {
        matches!(
            self,
            CaseId::CompleteBipartite
                | CaseId::Complete
                | CaseId::Cycle
                | CaseId::Pendant
                | CaseId::SlopeGap
                | CaseId::Squares
                | CaseId::Sqrt2
                | CaseId::ThreePrimes
        )
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let known: Vec<&str> = CaseId::ALL.iter().map(|id| id.as_str()).collect();
                VerifyError::Params(format!(
                    "unknown case {s:?}; known cases: {}",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("refused: {0}")]
    Limit(LimitError),
    #[error("bad parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl From<LimitError> for VerifyError {
    fn from(e: LimitError) -> Self {
        VerifyError::Limit(e)
    }
}

/// A case id, its parameters and the range of `n` it samples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub id: CaseId,
    pub params: BTreeMap<String, i64>,
    pub range: (u64, u64),
}

impl TheoremCase {
    pub fn new(id: CaseId, params: &[(&str, i64)], range: (u64, u64)) -> Result<Self, VerifyError> {
        let case = Self {
            id,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            range,
        };
        case.validate()?;
        Ok(case)
    }

    /// Checks that the parameters are complete and in range.
    pub fn validate(&self) -> Result<(), VerifyError> {
        let mut allowed: Vec<&str> = self.id.params().to_vec();
        if self.id == CaseId::Polarization {
            allowed.extend(["m", "u"]);
            let graphs = ["m", "u"]
                .iter()
                .filter(|k| self.params.contains_key(**k))
                .count();
            if graphs != 1 {
                return Err(VerifyError::Params(
                    "polarization needs exactly one of m (complete graph) or u (cycle)".into(),
                ));
            }
        }
        for name in self.id.params() {
            if !self.params.contains_key(*name) {
                return Err(VerifyError::Params(format!(
                    "{} needs parameter {name}",
                    self.id
                )));
            }
        }
        for (name, &value) in &self.params {
            if !allowed.contains(&name.as_str()) {
                return Err(VerifyError::Params(format!(
                    "{} takes no parameter {name}",
                    self.id
                )));
            }
            if name != "seed" && value < 1 {
                return Err(VerifyError::Params(format!(
                    "{name} = {value} must be positive"
                )));
            }
        }
        let (start, end) = self.range;
        if start == 0 || start > end {
            return Err(VerifyError::Params(format!("bad range {start}..{end}")));
        }
        let p = |name: &str| self.params[name];
        let fail = |msg: &str| Err(VerifyError::Params(msg.to_string()));
        match self.id {
            CaseId::CompleteBipartite if p("p1") > p("p2") => {
                fail("complete-bipartite needs p1 <= p2")
            }
            CaseId::Complete if p("m") < 3 => fail("complete needs m >= 3"),
            CaseId::Cycle if p("u") < 3 => fail("cycle needs u >= 3"),
            CaseId::Pendant | CaseId::SlopeGap if p("m") < 2 => fail("pendant graphs need m >= 2"),
            CaseId::Polarization if self.params.get("u").is_some_and(|&u| u < 3) => {
                fail("cycle needs u >= 3")
            }
            CaseId::Polarization if self.params.get("m").is_some_and(|&m| m < 2) => {
                fail("complete graph needs m >= 2")
            }
            CaseId::SlopeGap if end - start + 1 < 3 => {
                fail("slope-gap needs at least three values of n")
            }
            _ => Ok(()),
        }
    }

    fn param(&self, name: &str) -> usize {
        usize::try_from(self.params[name]).expect("validated as positive")
    }

    fn label(&self) -> String {
        let mut out = self.id.to_string();
        for (k, v) in &self.params {
            out.push_str(&format!(" {k}={v}"));
        }
        if self.id.uses_range() {
            out.push_str(&format!(" n={}..{}", self.range.0, self.range.1));
        }
        out
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The cases at the default desk scale.
pub fn default_cases() -> Vec<TheoremCase> {
    let case = |id, params: &[(&str, i64)], range| TheoremCase::new(id, params, range).unwrap();
    let mut cases = Vec::new();
    for (p1, p2) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        cases.push(case(
            CaseId::CompleteBipartite,
            &[("p1", p1), ("p2", p2)],
            (1, 5),
        ));
    }
    for m in 3..=5 {
        cases.push(case(CaseId::Complete, &[("m", m)], (1, 6)));
    }
    for u in 4..=7 {
        cases.push(case(CaseId::Cycle, &[("u", u)], (1, 5)));
    }
    for (m, s) in [(2, 2), (3, 2), (2, 3)] {
        cases.push(case(CaseId::Pendant, &[("m", m), ("s", s)], (1, 4)));
    }
    cases.push(case(CaseId::ThreePrimes, &[], (1, 6)));
    cases.push(case(CaseId::Squares, &[], (1, 5)));
    cases.push(case(CaseId::Sqrt2, &[], (1, 5)));
    for p in 2..=3 {
        cases.push(case(CaseId::Hbip, &[("p", p)], (1, 1)));
    }
    cases.push(case(CaseId::RegGap, &[("m", 2), ("k", 1)], (1, 1)));
    for t in 1..=2 {
        cases.push(case(CaseId::SlopeGap, &[("m", 2), ("t", t)], (1, 6)));
    }
    cases.push(case(CaseId::Polarization, &[("m", 3), ("k", 2)], (1, 1)));
    cases.push(case(CaseId::Polarization, &[("u", 5), ("k", 2)], (1, 1)));
    let seed = DEFAULT_SEED as i64;
    cases.push(case(
        CaseId::Oracle,
        &[("count", 200), ("seed", seed)],
        (1, 1),
    ));
    cases.push(case(
        CaseId::Identities,
        &[("count", 200), ("seed", seed)],
        (1, 1),
    ));
    cases
}

/// The default case list filtered to one id.
pub fn default_cases_for(id: CaseId) -> Vec<TheoremCase> {
    default_cases().into_iter().filter(|c| c.id == id).collect()
}

/// An expected or computed quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Number(Rational),
    Flag(bool),
    /// No exact quasi-linear fit exists.
    NoFit,
    Text(String),
}

impl Value {
    pub fn int(v: i64) -> Self {
        Value::Number(rational(v))
    }

    fn count(v: u64) -> Self {
        Value::int(i64::try_from(v).expect("value fits in i64"))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => write!(f, "{q}"),
            Value::Flag(b) => write!(f, "{b}"),
            Value::NoFit => f.write_str("no fit"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: u64,
    pub quantity: String,
    pub expected: Value,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Row {
    pub fn passes(&self) -> bool {
        self.expected == self.computed
    }
}

/// A quotient-method value re-derived by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub n: u64,
    pub prime: String,
    pub quotient: u64,
    /// `None` when the search found no witness up to the quotient value.
    pub oracle: Option<u64>,
}

impl OracleCheck {
    pub fn passes(&self) -> bool {
        self.oracle == Some(self.quotient)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub case: TheoremCase,
    pub rows: Vec<Row>,
    pub oracle: Vec<OracleCheck>,
    pub pass: bool,
    /// Index into `rows` of the first row whose values differ.
    pub first_mismatch: Option<usize>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    fn new(case: TheoremCase, rows: Vec<Row>, oracle: Vec<OracleCheck>, elapsed_ms: u64) -> Self {
        let first_mismatch = rows.iter().position(|r| !r.passes());
        let pass = first_mismatch.is_none() && oracle.iter().all(OracleCheck::passes);
        Self {
            case,
            rows,
            oracle,
            pass,
            first_mismatch,
            elapsed_ms,
        }
    }

    pub fn mismatch(&self) -> Option<&Row> {
        self.first_mismatch.map(|i| &self.rows[i])
    }

    /// The human-readable table.
    pub fn render(&self) -> String {
        let mut out = format!(
            "[{}] {} ({} rows, {} oracle checks, {} ms)\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.case,
            self.rows.len(),
            self.oracle.len(),
            self.elapsed_ms
        );
        let width = self
            .rows
            .iter()
            .map(|r| r.quantity.len())
            .max()
            .unwrap_or(0)
            .max(8);
        out.push_str(&format!(
            "  {:>3}  {:<width$}  {:>10}  {:>10}  witness\n",
            "n", "quantity", "expected", "computed"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "  {:>3}  {:<width$}  {:>10}  {:>10}  {}{}\n",
                row.n,
                row.quantity,
                row.expected.to_string(),
                row.computed.to_string(),
                row.witness.as_deref().unwrap_or("-"),
                if row.passes() { "" } else { "   <-- mismatch" }
            ));
        }
        for check in self.oracle.iter().filter(|c| !c.passes()) {
            out.push_str(&format!(
                "  oracle disagrees at n={} for {}: quotient {} vs oracle {}\n",
                check.n,
                check.prime,
                check.quotient,
                check.oracle.map_or("none".to_string(), |v| v.to_string())
            ));
        }
        if let Some(row) = self.mismatch() {
            out.push_str(&format!(
                "  first mismatch: n={} {} expected {} computed {}\n",
                row.n, row.quantity, row.expected, row.computed
            ));
        }
        out
    }
}

/// Collects rows; `offset` is added to every numeric expectation, which
/// lets the harness be exercised against a deliberately wrong formula.
struct Rows {
    rows: Vec<Row>,
    oracle: Vec<OracleCheck>,
    offset: i64,
}

impl Rows {
    fn new(offset: i64) -> Self {
        Self {
            rows: Vec::new(),
            oracle: Vec::new(),
            offset,
        }
    }

    fn push(&mut self, n: u64, quantity: impl Into<String>, expected: Value, computed: Value) {
        self.push_with(n, quantity, expected, computed, None);
    }

    fn push_with(
        &mut self,
        n: u64,
        quantity: impl Into<String>,
        expected: Value,
        computed: Value,
        witness: Option<String>,
    ) {
        let expected = match expected {
            Value::Number(q) => Value::Number(q + rational(self.offset)),
            other => other,
        };
        self.rows.push(Row {
            n,
            quantity: quantity.into(),
            expected,
            computed,
            witness,
        });
    }

    fn push_v(
        &mut self,
        n: u64,
        quantity: impl Into<String>,
        expected: Rational,
        ideal: &MonomialIdeal,
        r: &VResult,
    ) {
        let witness = Some(ideal.format_monomial(&r.witness));
        self.push_with(
            n,
            quantity,
            Value::Number(expected),
            Value::count(r.value),
            witness,
        );
    }
}

fn q(num: i64, den: i64) -> Rational {
    rational(num) / rational(den)
}

fn qn(n: u64) -> Rational {
    rational(i64::try_from(n).expect("n fits in i64"))
}

fn qu(v: usize) -> Rational {
    rational(i64::try_from(v).expect("parameter fits in i64"))
}

/// Every local v-number of `I_n` together with the global one.
struct Sample {
    n: u64,
    ideal: MonomialIdeal,
    locals: Vec<VResult>,
    global: VResult,
}

fn sample(ideal: MonomialIdeal, n: u64) -> Result<Sample, VerifyError> {
    let locals = all_local_v(&ideal)?;
    let global = v_number(&ideal)?;
    Ok(Sample {
        n,
        ideal,
        locals,
        global,
    })
}

fn samples(spec: &FiltrationSpec, (start, end): (u64, u64)) -> Result<Vec<Sample>, VerifyError> {
    (start..=end)
        .into_par_iter()
        .map(|n| sample(spec.evaluate(n)?, n))
        .collect()
}

/// Re-derives every local value of `s` by exhaustive search. The search
/// runs up to the quotient value, so a smaller oracle value or a missing
/// witness both show up as disagreement.
fn oracle_checks(s: &Sample) -> Vec<OracleCheck> {
    s.locals
        .par_iter()
        .map(|r| OracleCheck {
            n: s.n,
            prime: r.prime.to_string(),
            quotient: r.value,
            oracle: local_v_oracle(&s.ideal, &r.prime, r.value)
                .ok()
                .map(|o| o.value),
        })
        .collect()
}

/// Adds a row per associated prime and one for the global value, all with
/// the same expectation, and oracle checks at the first sample.
fn push_uniform(rows: &mut Rows, samples: &[Sample], expected: impl Fn(u64) -> Rational) {
    for (k, s) in samples.iter().enumerate() {
        let e = expected(s.n);
        for r in &s.locals {
            rows.push_v(s.n, format!("v_{}", r.prime), e.clone(), &s.ideal, r);
        }
        rows.push_v(s.n, "v", e, &s.ideal, &s.global);
        if k == 0 {
            rows.oracle.extend(oracle_checks(s));
        }
    }
}

fn cover_of(tag: &FamilyTag) -> Result<MonomialIdeal, VerifyError> {
    Ok(cover_ideal(&tag.build()?)?)
}

/// Runs one case with the expectations as stated.
pub fn verify(case: &TheoremCase, limits: &Limits) -> Result<VerifyReport, VerifyError> {
    verify_with_offset(case, limits, 0)
}

/// Runs one case with `offset` added to every numeric expectation.
pub fn verify_with_offset(
    case: &TheoremCase,
    limits: &Limits,
    offset: i64,
) -> Result<VerifyReport, VerifyError> {
    case.validate()?;
    check_scale(case, limits)?;
    let started = Instant::now();
    let mut rows = Rows::new(offset);
    match case.id {
        CaseId::CompleteBipartite => complete_bipartite(case, &mut rows)?,
        CaseId::Complete => complete(case, &mut rows)?,
        CaseId::Cycle => cycle(case, &mut rows)?,
        CaseId::Pendant => pendant(case, &mut rows)?,
        CaseId::Hbip => hbip(case, &mut rows)?,
        CaseId::RegGap => reg_gap(case, &mut rows)?,
        CaseId::SlopeGap => slope_gap_case(case, &mut rows)?,
        CaseId::Squares => squares(case, &mut rows)?,
        CaseId::Sqrt2 => sqrt2(case, &mut rows)?,
        CaseId::ThreePrimes => three_primes(case, &mut rows)?,
        CaseId::Polarization => polarization(case, &mut rows)?,
        CaseId::Oracle => oracle_corpus(case, &mut rows)?,
        CaseId::Identities => identities(case, &mut rows)?,
    }
    let elapsed_ms = u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX);
    Ok(VerifyReport::new(
        case.clone(),
        rows.rows,
        rows.oracle,
        elapsed_ms,
    ))
}

/// Runs the cases concurrently; reports come back in the order given.
pub fn verify_all(
    cases: &[TheoremCase],
    limits: &Limits,
    offset: i64,
) -> Vec<Result<VerifyReport, VerifyError>> {
    cases
        .par_iter()
        .map(|c| verify_with_offset(c, limits, offset))
        .collect()
}

/// Number of variables of the largest ring a case works in.
pub fn case_vars(case: &TheoremCase) -> usize {
    let p = |name: &str| case.param(name);
    match case.id {
        CaseId::CompleteBipartite => p("p1") + p("p2"),
        CaseId::Complete => p("m"),
        CaseId::Cycle => p("u"),
        CaseId::Pendant => p("m") * (p("s") + 1),
        CaseId::Hbip => 4 * p("p"),
        CaseId::RegGap => (2 * p("m") + 1) * (p("k") + 1),
        CaseId::SlopeGap => p("m") * (p("t") + 2),
        CaseId::Squares => 2,
        CaseId::Sqrt2 => 1,
        CaseId::ThreePrimes => 4,
        CaseId::Polarization => {
            let base = case
                .params
                .get("m")
                .or(case.params.get("u"))
                .copied()
                .unwrap_or(0);
            usize::try_from(base).unwrap_or(0) * p("k")
        }
        CaseId::Oracle | CaseId::Identities => corpus::MAX_VARS,
    }
}

fn check_scale(case: &TheoremCase, limits: &Limits) -> Result<(), LimitError> {
    limits.check_vars(case, case_vars(case))?;
    let top = match case.id {
        CaseId::RegGap => case.param("k") as u64 + 1,
        CaseId::Polarization => case.param("k") as u64,
        _ if case.id.uses_range() => case.range.1,
        _ => 1,
    };
    limits.check_n(case, top)
}

fn complete_bipartite(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (p1, p2) = (case.param("p1"), case.param("p2"));
    let tag = FamilyTag::CompleteBipartite(p1, p2);
    let spec = FiltrationSpec::symbolic(cover_of(&tag)?);
    let samples = samples(&spec, case.range)?;
    push_uniform(rows, &samples, |n| qn(n) * qu(p1) + qu(p2) - rational(2));
    for s in &samples {
        let gap = (qn(s.n) - rational(1)) * (qu(p2) - qu(p1));
        let reg = reg_closed_form(&tag, s.n)?;
        let computed = rational(reg) - qn(s.global.value);
        rows.push(s.n, "reg - v", Value::Number(gap), Value::Number(computed));
    }
    Ok(())
}

fn complete_v(m: usize, n: u64) -> Rational {
    let half = q(i64::try_from(m).expect("m fits"), 2);
    if n.is_multiple_of(2) {
        &half * qn(n) + qu(m) - rational(3)
    } else {
        &half * qn(n) + half - rational(2)
    }
}

fn complete(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let m = case.param("m");
    let tag = FamilyTag::Complete(m);
    let spec = FiltrationSpec::symbolic(cover_of(&tag)?);
    let samples = samples(&spec, case.range)?;
    push_uniform(rows, &samples, |n| complete_v(m, n));
    for s in &samples {
        let reg = reg_closed_form(&tag, s.n)?;
        let expected = rational(reg) - complete_v(m, s.n);
        let computed = rational(reg) - qn(s.global.value);
        rows.push(
            s.n,
            "reg - v",
            Value::Number(expected),
            Value::Number(computed),
        );
    }
    Ok(())
}

fn cycle(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let u = case.param("u");
    let spec = FiltrationSpec::symbolic(cover_of(&FamilyTag::Cycle(u))?);
    let samples = samples(&spec, case.range)?;
    push_uniform(rows, &samples, |n| {
        let shift = if u % 2 == 1 && !n.is_multiple_of(2) {
            q(-1, 2)
        } else {
            rational(0)
        };
        q(i64::try_from(u).expect("u fits"), 2) * qn(n) + shift
    });
    Ok(())
}

/// Pendant edges have a vertex `x{j}_{l}`; the clique edges do not.
fn is_pendant_prime(p: &MonomialPrime) -> bool {
    p.names().iter().any(|name| name.contains('_'))
}

fn pendant_rows(m: usize, s: usize, samples: &[Sample], rows: &mut Rows) {
    let pendant = |n: u64| qu(m) * qn(n) + qu(s) - rational(2);
    let clique = |n: u64| qu(m + s - 1) * qn(n) + qu(s) - rational(1);
    for (k, sample) in samples.iter().enumerate() {
        for r in &sample.locals {
            let e = if is_pendant_prime(&r.prime) {
                pendant(sample.n)
            } else {
                clique(sample.n)
            };
            rows.push_v(sample.n, format!("v_{}", r.prime), e, &sample.ideal, r);
        }
        rows.push_v(
            sample.n,
            "v",
            pendant(sample.n),
            &sample.ideal,
            &sample.global,
        );
        if k == 0 {
            rows.oracle.extend(oracle_checks(sample));
        }
    }
}

fn pendant(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (m, s) = (case.param("m"), case.param("s"));
    let spec = FiltrationSpec::symbolic(cover_of(&FamilyTag::Pendant(m, s))?);
    let samples = samples(&spec, case.range)?;
    pendant_rows(m, s, &samples, rows);
    Ok(())
}

fn hbip(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let p = case.param("p");
    let g = FamilyTag::HBip(p).build()?;
    rows.push(
        1,
        "bipartite",
        Value::Flag(true),
        Value::Flag(g.is_bipartite()),
    );
    rows.push(
        1,
        "unmixed",
        Value::Flag(true),
        Value::Flag(g.is_unmixed_edge_ideal()?),
    );
    rows.push(
        1,
        "complete multipartite",
        Value::Flag(false),
        Value::Flag(g.is_complete_multipartite()),
    );
    if p == 2 {
        let found = g.multipartite_partition_search().is_some();
        rows.push(
            1,
            "multipartite partition found",
            Value::Flag(false),
            Value::Flag(found),
        );
    }
    let j = cover_ideal(&g)?;
    let s = sample(j, 1)?;
    let b = bight(&edge_ideal(&g)?)?;
    rows.push_v(1, "v", qu(3 * p) - rational(2), &s.ideal, &s.global);
    rows.push(1, "bight", Value::Number(qu(2 * p)), Value::Number(qu(b)));
    let diff = qn(s.global.value) - qu(b);
    rows.push(
        1,
        "v - bight",
        Value::Number(qu(p) - rational(2)),
        Value::Number(diff),
    );
    rows.oracle.extend(oracle_checks(&s));
    Ok(())
}

fn reg_gap(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (m, k) = (case.param("m"), case.param("k"));
    let base = FamilyTag::CompleteBipartite(m, m + 1);
    let h = fakhari(&base.build()?, k + 1)?;
    let n = k as u64 + 1;
    rows.push(
        k as u64,
        "bipartite",
        Value::Flag(true),
        Value::Flag(h.is_bipartite()),
    );
    let s = sample(cover_ideal(&h)?, k as u64)?;
    // v(J(G)^(n)) for G = K_{m,m+1}, which the polarization preserves
    let v_expected = qn(n) * qu(m) + qu(m + 1) - rational(2);
    rows.push_v(k as u64, "v", v_expected, &s.ideal, &s.global);
    let reg = rational(reg_closed_form(&base, n)?);
    let computed = reg - qn(s.global.value);
    rows.push(
        k as u64,
        "reg - v",
        Value::Number(qu(k)),
        Value::Number(computed),
    );
    rows.oracle.extend(oracle_checks(&s));
    Ok(())
}

fn slope_gap_case(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (m, t) = (case.param("m"), case.param("t"));
    let s = t + 1;
    let spec = FiltrationSpec::symbolic(cover_of(&FamilyTag::Pendant(m, s))?);
    let ring = spec.base.ring().clone();
    let pendant = MonomialPrime::from_names(ring.clone(), &["x1", "x1_1"])?;
    let clique = MonomialPrime::from_names(ring, &["x1", "x2"])?;
    let samples = samples(&spec, case.range)?;
    pendant_rows(m, s, &samples, rows);
    let (start, end) = case.range;
    let computed = match slope_gap(&spec, &pendant, &clique, start, end, DEFAULT_MAX_PERIOD) {
        Ok(gap) => Value::Number(gap),
        Err(Error::NoLimit(_)) => Value::NoFit,
        Err(e) => return Err(e.into()),
    };
    rows.push(
        end,
        format!("slope gap {clique} - {pendant}"),
        Value::Number(qu(t)),
        computed,
    );
    Ok(())
}

fn squares_table(
    ring: &std::sync::Arc<RingContext>,
    end: u64,
) -> Result<Vec<MonomialIdeal>, VerifyError> {
    (1..=end)
        .map(|n| {
            let e = u32::try_from(n * n)
                .map_err(|_| VerifyError::Params(format!("n = {n} too large")))?;
            Ok(MonomialIdeal::from_exponents(
                ring.clone(),
                vec![vec![2, 0], vec![1, e]],
            )?)
        })
        .collect()
}

fn squares(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let ring = RingContext::new(["x", "y"])?;
    let end = case.range.1.max(SQUARES_FIT_WINDOW);
    let spec = FiltrationSpec::explicit(squares_table(&ring, end)?)?;
    let samples = samples(&spec, case.range)?;
    push_uniform(rows, &samples, |n| qn(n * n));
    let window: Vec<(u64, u64)> = (1..=SQUARES_FIT_WINDOW)
        .into_par_iter()
        .map(|n| Ok((n, v_number(&spec.evaluate(n)?)?.value)))
        .collect::<Result<_, Error>>()?;
    for period in 1..=4 {
        let computed = match fit_values(&window, period)? {
            None => Value::NoFit,
            Some(fit) => Value::Text(format!("fit with n0 = {}", fit.n0)),
        };
        rows.push(
            SQUARES_FIT_WINDOW,
            format!("fit period {period}"),
            Value::NoFit,
            computed,
        );
    }
    Ok(())
}

/// `⌈n√2⌉` as the least `c` with `c² ≥ 2n²`.
fn ceil_n_sqrt2(n: u64) -> u32 {
    let target = 2 * n * n;
    let mut c = 0u64;
    while c * c < target {
        c += 1;
    }
    u32::try_from(c).expect("exponent fits in u32")
}

fn sqrt2(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let ring = RingContext::new(["x"])?;
    let table = (1..=case.range.1)
        .map(|n| MonomialIdeal::principal(ring.clone(), Monomial::new(vec![ceil_n_sqrt2(n)])))
        .collect();
    let spec = FiltrationSpec::explicit(table)?;
    let samples = samples(&spec, case.range)?;
    // ⌈√(2n²)⌉ − 1 = ⌊√(2n² − 1)⌋ for n ≥ 1
    push_uniform(rows, &samples, |n| qn((2 * n * n - 1).sqrt()));
    Ok(())
}

fn three_primes(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let ring = RingContext::new(["x", "y", "z", "w"])?;
    let i = MonomialIdeal::from_exponents(
        ring,
        vec![
            vec![1, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
        ],
    )?;
    let spec = FiltrationSpec::symbolic(i);
    let samples = samples(&spec, case.range)?;
    push_uniform(rows, &samples, |n| {
        if n.is_multiple_of(2) {
            q(3, 2) * qn(n)
        } else {
            (q(3, 1) * qn(n) - rational(1)) / rational(2)
        }
    });
    Ok(())
}

fn polarization(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let k = case.param("k");
    let tag = match (case.params.get("m"), case.params.get("u")) {
        (Some(&m), _) => FamilyTag::Complete(m as usize),
        (_, Some(&u)) => FamilyTag::Cycle(u as usize),
        _ => unreachable!("validated"),
    };
    let g = tag.build()?;
    let jk = FiltrationSpec::symbolic(cover_ideal(&g)?).evaluate(k as u64)?;
    let gk = fakhari(&g, k)?;
    let cover = cover_ideal(&gk)?;
    let pol = polarize(&jk);
    let aligned = pol.embed_into(&gk.ring())?;
    let n = k as u64;
    rows.push(
        n,
        format!("polarization = J({tag}_{k})"),
        Value::Flag(true),
        Value::Flag(aligned == cover),
    );
    let base = sample(jk, n)?;
    let expected = qn(base.global.value);
    let pol_v = sample(pol, n)?;
    rows.push_v(
        n,
        "v of the polarization",
        expected.clone(),
        &pol_v.ideal,
        &pol_v.global,
    );
    let cover_v = sample(cover, n)?;
    rows.push_v(
        n,
        format!("v(J({tag}_{k}))"),
        expected,
        &cover_v.ideal,
        &cover_v.global,
    );
    rows.oracle.extend(oracle_checks(&base));
    Ok(())
}

fn corpus_of(case: &TheoremCase) -> (Vec<MonomialIdeal>, u64) {
    let seed = case.params["seed"] as u64;
    (corpus::corpus(seed, case.param("count")), seed)
}

/// A degree cap that always reaches the oracle's witness.
fn degree_cap(ideal: &MonomialIdeal) -> u64 {
    ideal.max_exponents().iter().map(|&e| u64::from(e)).sum()
}

fn oracle_corpus(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (ideals, _) = corpus_of(case);
    let checks: Vec<(Vec<OracleCheck>, bool)> = ideals
        .par_iter()
        .enumerate()
        .map(|(idx, i)| {
            let ass = associated_primes(i)?;
            let mut checks = Vec::new();
            let mut valid = true;
            for p in &ass {
                let fast = vfilt_core::vnumber::local_v_with_ass(i, p, &ass)?;
                let slow = local_v_oracle(i, p, degree_cap(i)).ok();
                valid &= fast.is_valid_for(i) && slow.as_ref().is_some_and(|s| s.is_valid_for(i));
                checks.push(OracleCheck {
                    n: idx as u64 + 1,
                    prime: format!("{p} of {i}"),
                    quotient: fast.value,
                    oracle: slow.map(|s| s.value),
                });
            }
            Ok((checks, valid))
        })
        .collect::<Result<_, Error>>()?;
    let total: usize = checks.iter().map(|(c, _)| c.len()).sum();
    let agree = checks
        .iter()
        .flat_map(|(c, _)| c)
        .filter(|c| c.passes())
        .count();
    let valid = checks.iter().all(|(_, v)| *v);
    rows.push(
        1,
        "ideals",
        Value::count(case.param("count") as u64),
        Value::count(ideals.len() as u64),
    );
    rows.push(
        1,
        "primes where quotient = oracle",
        Value::count(total as u64),
        Value::count(agree as u64),
    );
    rows.push(
        1,
        "witnesses validate",
        Value::Flag(true),
        Value::Flag(valid),
    );
    rows.oracle.extend(checks.into_iter().flat_map(|(c, _)| c));
    Ok(())
}

/// Every exponent vector in `[0, bound]^dim`.
fn box_points(dim: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=bound).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Membership straight from divisibility by the listed generators.
fn divisible(gens: &[Monomial], f: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(f))
}

/// The first failing identity for `i` with companions `j` and `k`.
fn identity_failure(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
) -> Result<Option<&'static str>, Error> {
    if i.colon_ideal(j)?.colon_ideal(k)? != i.colon_ideal(&j.product(k))? {
        return Ok(Some("(I:J):K = I:(JK)"));
    }
    let meet = i.intersect(j);
    let colon = i.colon_ideal(j)?;
    let bound = 2 * corpus::MAX_EXPONENT;
    for f in box_points(i.dim(), bound) {
        if meet.contains(&f) != (divisible(i.generators(), &f) && divisible(j.generators(), &f)) {
            return Ok(Some("intersection membership"));
        }
        let all = j
            .generators()
            .iter()
            .all(|h| divisible(i.generators(), &f.mul(h)));
        if colon.contains(&f) != all {
            return Ok(Some("colon membership"));
        }
    }
    let again = MonomialIdeal::new(i.ring().clone(), i.generators().to_vec())?;
    if &again != i {
        return Ok(Some("minimalize idempotence"));
    }
    let ring = i.ring().clone();
    let comps: Vec<MonomialIdeal> = irreducible_decomposition(i)?
        .iter()
        .map(|c| c.to_ideal(&ring))
        .collect();
    if &MonomialIdeal::intersect_all(&ring, &comps) != i {
        return Ok(Some("decomposition re-intersects"));
    }
    Ok(None)
}

fn identities(case: &TheoremCase, rows: &mut Rows) -> Result<(), VerifyError> {
    let (ideals, seed) = corpus_of(case);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let triples: Vec<(MonomialIdeal, MonomialIdeal, MonomialIdeal)> = ideals
        .into_iter()
        .map(|i| {
            let j = companion(&i, &mut rng);
            let k = companion(&i, &mut rng);
            (i, j, k)
        })
        .collect();
    let failures: Vec<Option<String>> = triples
        .par_iter()
        .map(|(i, j, k)| {
            Ok(identity_failure(i, j, k)?
                .map(|what| format!("{what} fails for I = {i}, J = {j}, K = {k}")))
        })
        .collect::<Result<_, Error>>()?;
    let first = failures.iter().flatten().next().cloned();
    rows.push(
        1,
        "ideals",
        Value::count(case.param("count") as u64),
        Value::count(triples.len() as u64),
    );
    rows.push_with(
        1,
        "identities hold",
        Value::Flag(true),
        Value::Flag(first.is_none()),
        first,
    );
    Ok(())
}
