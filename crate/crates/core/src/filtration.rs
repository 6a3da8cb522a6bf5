//! Filtrations `n ↦ I_n`: ordinary, symbolic and generalized symbolic powers,
//! integral closures of powers, and explicit tables.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closure::closure_power;
use crate::decomp::{associated_primes, minimal_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiltrationKind {
    Ordinary,
    /// `I^(n) = ⋂_{Q ∈ Min(I)} I^n R_Q ∩ R`.
    SymbolicMinAss,
    /// `I^(n) = ⋂_{Q ∈ Ass(I)} I^n R_Q ∩ R`.
    SymbolicAss,
    /// `I_n = I^n : L^∞`.
    Generalized(MonomialIdeal),
    /// `I_n = closure(I^n)`.
    Closure,
    /// `I_n` read from a table whose first entry is `I_1`.
    Explicit(Vec<MonomialIdeal>),
}

impl FiltrationKind {
    pub fn name(&self) -> &'static str {
        match self {
            FiltrationKind::Ordinary => "ordinary",
            FiltrationKind::SymbolicMinAss => "symbolic_minass",
            FiltrationKind::SymbolicAss => "symbolic_ass",
            FiltrationKind::Generalized(_) => "generalized",
            FiltrationKind::Closure => "closure",
            FiltrationKind::Explicit(_) => "explicit",
        }
    }
}

/// A filtration rule together with its base ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationSpec {
    pub kind: FiltrationKind,
    pub base: MonomialIdeal,
}

impl FiltrationSpec {
    pub fn new(kind: FiltrationKind, base: MonomialIdeal) -> Self {
        Self { kind, base }
    }

    pub fn ordinary(base: MonomialIdeal) -> Self {
        Self::new(FiltrationKind::Ordinary, base)
    }

    pub fn symbolic(base: MonomialIdeal) -> Self {
        Self::new(FiltrationKind::SymbolicMinAss, base)
    }

    pub fn closure(base: MonomialIdeal) -> Self {
        Self::new(FiltrationKind::Closure, base)
    }

    /// An explicit table; `table[0]` is `I_1`.
    pub fn explicit(table: Vec<MonomialIdeal>) -> Result<Self> {
        let base = table
            .first()
            .cloned()
            .ok_or(Error::ExplicitOutOfRange { n: 1, len: 0 })?;
        for ideal in &table {
            base.ensure_same_ring(ideal)?;
        }
        Ok(Self::new(FiltrationKind::Explicit(table), base))
    }

    pub fn evaluate(&self, n: u64) -> Result<MonomialIdeal> {
        evaluate(self, n)
    }
}

fn exponent(n: u64) -> u32 {
    u32::try_from(n).expect("filtration index fits in u32")
}

/// `⋂_{Q ∈ primes} I^n R_Q ∩ R`.
fn localized_intersection(base: &MonomialIdeal, primes: &[MonomialPrime], n: u64) -> MonomialIdeal {
    let power = base.power(exponent(n));
    let parts: Vec<MonomialIdeal> = primes
        .iter()
        .map(|q| power.localize_at(q.support()))
        .collect();
    MonomialIdeal::intersect_all(base.ring(), &parts)
}

/// `I_n` for the given filtration; `I_0` is always the unit ideal.
pub fn evaluate(spec: &FiltrationSpec, n: u64) -> Result<MonomialIdeal> {
    let base = &spec.base;
    if n == 0 {
        return Ok(MonomialIdeal::unit(base.ring().clone()));
    }
    match &spec.kind {
        FiltrationKind::Ordinary => Ok(base.power(exponent(n))),
        FiltrationKind::SymbolicMinAss | FiltrationKind::SymbolicAss
            if !base.is_proper() || base.is_zero() =>
        {
            Ok(base.power(exponent(n)))
        }
        FiltrationKind::SymbolicMinAss => {
            Ok(localized_intersection(base, &minimal_primes(base)?, n))
        }
        FiltrationKind::SymbolicAss => {
            Ok(localized_intersection(base, &associated_primes(base)?, n))
        }
        FiltrationKind::Generalized(l) => base.power(exponent(n)).saturation(l),
        FiltrationKind::Closure => Ok(closure_power(base, exponent(n))),
        FiltrationKind::Explicit(table) => table
            .get(usize::try_from(n - 1).unwrap_or(usize::MAX))
            .cloned()
            .ok_or(Error::ExplicitOutOfRange {
                n,
                len: table.len(),
            }),
    }
}

/// `⋂_{p ∈ Ass(I)} p^n` for a squarefree ideal.
pub fn symbolic_power_via_primes(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree {
            op: "symbolic_power_via_primes",
        });
    }
    let ass = associated_primes(ideal)?;
    let powers: Vec<MonomialIdeal> = ass
        .iter()
        .map(|p| p.to_ideal().power(exponent(n)))
        .collect();
    Ok(MonomialIdeal::intersect_all(ideal.ring(), &powers))
}

/// Outcome of [`svd_detect`]: `I_{en} = I_e^n` was checked for `n ≤ n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SvdCertificate {
    pub e: u64,
    pub n_max: u64,
}

/// Smallest `e ≤ e_max` with `I_{en} = I_e^n` for every `n ≤ n_max`.
/// This is a check on a finite range, not a proof.
pub fn svd_detect(spec: &FiltrationSpec, e_max: u64, n_max: u64) -> Result<Option<SvdCertificate>> {
    for e in 1..=e_max {
        let base = evaluate(spec, e)?;
        let mut power = base.clone();
        let mut holds = true;
        for n in 2..=n_max {
            power = power.product(&base);
            if evaluate(spec, e * n)? != power {
                holds = false;
                break;
            }
        }
        if holds {
            return Ok(Some(SvdCertificate { e, n_max }));
        }
    }
    Ok(None)
}

/// `Ass(I_n)` over a range and the first index from which it stays constant
/// to the end of the range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssStabilization {
    pub per_n: Vec<(u64, Vec<MonomialPrime>)>,
    pub stable_from: u64,
}

pub fn ass_stabilization(spec: &FiltrationSpec, start: u64, end: u64) -> Result<AssStabilization> {
    if start == 0 || start > end {
        return Err(Error::EmptyRange { start, end });
    }
    let mut per_n = Vec::new();
    for n in start..=end {
        per_n.push((n, associated_primes(&evaluate(spec, n)?)?));
    }
    let last = per_n.last().map(|(_, a)| a.clone()).unwrap_or_default();
    let stable_from = per_n
        .iter()
        .rev()
        .take_while(|(_, a)| *a == last)
        .last()
        .map(|(n, _)| *n)
        .unwrap_or(end);
    Ok(AssStabilization { per_n, stable_from })
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    kind: String,
    base: MonomialIdeal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l: Option<MonomialIdeal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ideals: Option<Vec<MonomialIdeal>>,
}

/// `{"kind":"symbolic_minass","base":{…}}`; the generalized kind adds `"l"`
/// and the explicit kind adds `"ideals"` (entry `k` is `I_{k+1}`).
impl Serialize for FiltrationSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (l, ideals) = match &self.kind {
            FiltrationKind::Generalized(l) => (Some(l.clone()), None),
            FiltrationKind::Explicit(t) => (None, Some(t.clone())),
            _ => (None, None),
        };
        SpecRepr {
            kind: self.kind.name().to_string(),
            base: self.base.clone(),
            l,
            ideals,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiltrationSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SpecRepr::deserialize(deserializer)?;
        let kind = match repr.kind.as_str() {
            "ordinary" => FiltrationKind::Ordinary,
            "symbolic_minass" | "symbolic" => FiltrationKind::SymbolicMinAss,
            "symbolic_ass" => FiltrationKind::SymbolicAss,
            "closure" => FiltrationKind::Closure,
            "generalized" => {
                let l = repr.l.ok_or_else(|| D::Error::missing_field("l"))?;
                repr.base.ensure_same_ring(&l).map_err(D::Error::custom)?;
                FiltrationKind::Generalized(l)
            }
            "explicit" => {
                let table = repr
                    .ideals
                    .ok_or_else(|| D::Error::missing_field("ideals"))?;
                for i in &table {
                    repr.base.ensure_same_ring(i).map_err(D::Error::custom)?;
                }
                FiltrationKind::Explicit(table)
            }
            other => {
                return Err(D::Error::custom(format!(
                    "unknown filtration kind {other:?}"
                )))
            }
        };
        Ok(FiltrationSpec {
            kind,
            base: repr.base,
        })
    }
}
