//! v-number series along filtrations and their exact quasi-linear fits.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::decomp::{associated_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::filtration::FiltrationSpec;
use crate::lp::{rational, Rational};
use crate::vnumber::{local_v_with_ass, v_number, VResult};

/// Least number of samples per residue class a fit needs.
pub const MIN_SAMPLES_PER_CLASS: usize = 3;

/// Largest period tried by [`slope_limit`] unless told otherwise.
pub const DEFAULT_MAX_PERIOD: u64 = 6;

/// `v(I_n)` or `v_p(I_n)` for every `n` in a range, with witnesses.
#[derive(Debug, Clone)]
pub struct VSeries {
    pub spec: FiltrationSpec,
    /// `None` for the global v-number.
    pub prime: Option<MonomialPrime>,
    pub samples: BTreeMap<u64, VResult>,
    pub range: (u64, u64),
}

impl VSeries {
    /// `(n, value)` pairs in increasing `n`.
    pub fn values(&self) -> Vec<(u64, u64)> {
        self.samples.iter().map(|(&n, r)| (n, r.value)).collect()
    }
}

fn sample(spec: &FiltrationSpec, n: u64, prime: Option<&MonomialPrime>) -> Result<VResult> {
    let ideal = spec.evaluate(n)?;
    match prime {
        None => v_number(&ideal),
        Some(p) => {
            let ass = associated_primes(&ideal)?;
            if !ass.contains(p) {
                return Err(Error::PrimeLeftAss {
                    prime: p.to_string(),
                    n,
                });
            }
            local_v_with_ass(&ideal, p, &ass)
        }
    }
}

/// Computes `v(I_n)` (or `v_p(I_n)`) for `start ≤ n ≤ end`. Samples are
/// computed concurrently; the error reported is the one at the least `n`.
pub fn v_series(
    spec: &FiltrationSpec,
    start: u64,
    end: u64,
    prime: Option<&MonomialPrime>,
) -> Result<VSeries> {
    if start == 0 || start > end {
        return Err(Error::EmptyRange { start, end });
    }
    if let Some(p) = prime {
        if p.ring() != spec.base.ring() {
            return Err(Error::RingMismatch(format!(
                "prime {p} does not live in the ring of {}",
                spec.base
            )));
        }
    }
    let results: Vec<(u64, Result<VResult>)> = (start..=end)
        .into_par_iter()
        .map(|n| (n, sample(spec, n, prime)))
        .collect();
    let mut samples = BTreeMap::new();
    for (n, r) in results {
        samples.insert(n, r?);
    }
    Ok(VSeries {
        spec: spec.clone(),
        prime: prime.cloned(),
        samples,
        range: (start, end),
    })
}

/// The line `slope·n + intercept`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Line {
    pub fn at(&self, n: u64) -> Rational {
        &self.slope * rational(n as i64) + &self.intercept
    }
}

#[derive(Serialize)]
struct LineRepr {
    slope: String,
    intercept: String,
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LineRepr {
            slope: self.slope.to_string(),
            intercept: self.intercept.to_string(),
        }
        .serialize(serializer)
    }
}

/// One exact line per residue class: `lines[i]` covers `n ≡ i (mod period)`
/// for every sampled `n ≥ n0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiLinearFit {
    pub period: u64,
    pub lines: Vec<Line>,
    pub n0: u64,
}

impl QuasiLinearFit {
    pub fn line_for(&self, n: u64) -> &Line {
        &self.lines[(n % self.period) as usize]
    }

    pub fn predict(&self, n: u64) -> Rational {
        self.line_for(n).at(n)
    }

    /// The common slope when every class has the same one.
    pub fn common_slope(&self) -> Option<Rational> {
        let first = &self.lines.first()?.slope;
        self.lines
            .iter()
            .all(|l| &l.slope == first)
            .then(|| first.clone())
    }
}

/// Fits one exact line per residue class mod `period` to the tail of
/// `samples`.
///
/// Each class's line runs through its last two samples and must reproduce
/// at least [`MIN_SAMPLES_PER_CLASS`] trailing samples, otherwise there is no
/// fit. `n0` is one past the last sample off its line, or the first sample.
pub fn fit_values(samples: &[(u64, u64)], period: u64) -> Result<Option<QuasiLinearFit>> {
    assert!(period > 0, "period must be positive");
    let Some(&(first_n, _)) = samples.first() else {
        return Err(Error::InsufficientSamples {
            period,
            class: 0,
            need: MIN_SAMPLES_PER_CLASS,
            found: 0,
        });
    };
    let mut lines = Vec::with_capacity(period as usize);
    let mut n0 = first_n;
    for class in 0..period {
        let points: Vec<(Rational, Rational)> = samples
            .iter()
            .filter(|(n, _)| n % period == class)
            .map(|&(n, v)| (rational(n as i64), rational(v as i64)))
            .collect();
        if points.len() < MIN_SAMPLES_PER_CLASS {
            return Err(Error::InsufficientSamples {
                period,
                class,
                need: MIN_SAMPLES_PER_CLASS,
                found: points.len(),
            });
        }
        let (n1, v1) = &points[points.len() - 2];
        let (n2, v2) = &points[points.len() - 1];
        let slope = (v2 - v1) / (n2 - n1);
        let intercept = v2 - &slope * n2;
        let line = Line { slope, intercept };
        let on_line = points
            .iter()
            .rev()
            .take_while(|(n, v)| &line.slope * n + &line.intercept == *v)
            .count();
        if on_line < MIN_SAMPLES_PER_CLASS {
            return Ok(None);
        }
        if on_line < points.len() {
            let (last_off, _) = &points[points.len() - on_line - 1];
            let next = last_off.to_integer() + 1u32;
            let next = u64::try_from(next).expect("sample index fits in u64");
            n0 = n0.max(next);
        }
        lines.push(line);
    }
    Ok(Some(QuasiLinearFit { period, lines, n0 }))
}

/// [`fit_values`] applied to a series.
pub fn quasi_linear_fit(series: &VSeries, period: u64) -> Result<Option<QuasiLinearFit>> {
    fit_values(&series.values(), period)
}

/// The first exact fit over periods `1..=max_period`, trying periods only
/// while every class has enough samples.
pub fn find_fit(samples: &[(u64, u64)], max_period: u64) -> Option<QuasiLinearFit> {
    for period in 1..=max_period {
        match fit_values(samples, period) {
            Ok(Some(fit)) => return Some(fit),
            Ok(None) => continue,
            Err(_) => break,
        }
    }
    None
}

/// The limit of `v(I_n)/n` read off an exact fit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeLimit {
    /// All residue classes share this slope.
    Converges {
        slope: Rational,
        fit: QuasiLinearFit,
    },
    /// A fit exists but the classes disagree.
    PerClass {
        slopes: Vec<Rational>,
        fit: QuasiLinearFit,
    },
    /// No period up to the bound fits; the raw `v(n)/n` values.
    Diverges { tail: Vec<(u64, Rational)> },
}

impl SlopeLimit {
    pub fn slope(&self) -> Option<&Rational> {
        match self {
            SlopeLimit::Converges { slope, .. } => Some(slope),
            _ => None,
        }
    }
}

pub fn slope_limit_of(samples: &[(u64, u64)], max_period: u64) -> SlopeLimit {
    match find_fit(samples, max_period) {
        Some(fit) => match fit.common_slope() {
            Some(slope) => SlopeLimit::Converges { slope, fit },
            None => SlopeLimit::PerClass {
                slopes: fit.lines.iter().map(|l| l.slope.clone()).collect(),
                fit,
            },
        },
        None => SlopeLimit::Diverges {
            tail: samples
                .iter()
                .map(|&(n, v)| (n, rational(v as i64) / rational(n as i64)))
                .collect(),
        },
    }
}

pub fn slope_limit(series: &VSeries, max_period: u64) -> SlopeLimit {
    slope_limit_of(&series.values(), max_period)
}

/// `lim v_b(I_n)/n − lim v_a(I_n)/n`, each limit read off an exact fit of
/// the local series over `start..=end`.
pub fn slope_gap(
    spec: &FiltrationSpec,
    prime_a: &MonomialPrime,
    prime_b: &MonomialPrime,
    start: u64,
    end: u64,
    max_period: u64,
) -> Result<Rational> {
    let limit = |p: &MonomialPrime| -> Result<Rational> {
        let series = v_series(spec, start, end, Some(p))?;
        slope_limit(&series, max_period)
            .slope()
            .cloned()
            .ok_or_else(|| Error::NoLimit(p.to_string()))
    };
    let a = limit(prime_a)?;
    if prime_a == prime_b {
        return Ok(Rational::zero());
    }
    Ok(limit(prime_b)? - a)
}

/// `α(I_n)` for `start ≤ n ≤ end`.
pub fn alpha_series(spec: &FiltrationSpec, start: u64, end: u64) -> Result<Vec<(u64, u64)>> {
    if start == 0 || start > end {
        return Err(Error::EmptyRange { start, end });
    }
    (start..=end)
        .into_par_iter()
        .map(|n| Ok((n, spec.evaluate(n)?.alpha()?)))
        .collect()
}

/// Whether `α(I_{km}) ≤ k·α(I_m)` holds for every pair of sampled indices
/// `m` and `km`, the inequality subadditivity forces.
pub fn alpha_subadditive_on(samples: &[(u64, u64)]) -> bool {
    let by_n: BTreeMap<u64, u64> = samples.iter().copied().collect();
    by_n.iter().all(|(&m, &am)| {
        by_n.iter()
            .filter(|(&n, _)| n % m == 0)
            .all(|(&n, &an)| an <= (n / m) * am)
    })
}

/// `{"samples":{"1":3,…},"fit":{"period":…,"lines":[…],"n0":…}}`
#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub samples: BTreeMap<u64, u64>,
    pub fit: Option<QuasiLinearFit>,
}

impl SeriesReport {
    pub fn new(series: &VSeries, fit: Option<QuasiLinearFit>) -> Self {
        Self {
            samples: series.values().into_iter().collect(),
            fit,
        }
    }
}

/// Whether every slope of the fit is nonnegative.
pub fn slopes_nonnegative(fit: &QuasiLinearFit) -> bool {
    fit.lines.iter().all(|l| !l.slope.is_negative())
}
