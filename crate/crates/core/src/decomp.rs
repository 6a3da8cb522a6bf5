//! Irreducible decomposition, associated and minimal primes, and the ideal
//! `Q_p` of associated primes strictly above a given one.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// A monomial prime `(x_i : i ∈ support)`.
///
/// Primes order by their sorted support vectors; this is the canonical
/// tie-break order wherever primes compete.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Arc<RingContext>,
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: Arc<RingContext>, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::InvalidRing(
                "a monomial prime needs at least one variable".into(),
            ));
        }
        if let Some(&i) = support.iter().find(|&&i| i >= ring.dim()) {
            return Err(Error::DimensionMismatch {
                expected: ring.dim(),
                found: i + 1,
            });
        }
        Ok(Self { ring, support })
    }

    pub fn from_names<S: AsRef<str>>(ring: Arc<RingContext>, names: &[S]) -> Result<Self> {
        let support = names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                ring.index_of(n)
                    .ok_or_else(|| Error::RingMismatch(format!("unknown variable {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, support)
    }

    /// Recovers the prime from an ideal generated by distinct variables.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        let mut support = Vec::new();
        for g in ideal.generators() {
            if g.degree() != 1 {
                return None;
            }
            support.extend(g.support());
        }
        Self::new(ideal.ring().clone(), support).ok()
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn names(&self) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| self.ring.name(i).to_string())
            .collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::generated_by_variables(self.ring.clone(), &self.support)
    }

    /// Inclusion of primes is inclusion of supports.
    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.support
            .iter()
            .all(|i| other.support.binary_search(i).is_ok())
    }

    pub fn is_proper_subset_of(&self, other: &MonomialPrime) -> bool {
        self.support.len() < other.support.len() && self.is_subset_of(other)
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.support.cmp(&other.support)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the list of variable names, in ring order.
impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.names().serialize(serializer)
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ dom)`, stored as sorted
/// `(variable, exponent)` pairs with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    fn exponent_of(&self, i: usize) -> Option<u32> {
        self.powers
            .binary_search_by_key(&i, |&(j, _)| j)
            .ok()
            .map(|k| self.powers[k].1)
    }

    /// `other ⊆ self`: every generator `x_i^b` of `other` has `i ∈ dom(self)`
    /// with `a_i ≤ b`.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other
            .powers
            .iter()
            .all(|&(i, b)| self.exponent_of(i).is_some_and(|a| a <= b))
    }

    pub fn to_ideal(&self, ring: &Arc<RingContext>) -> MonomialIdeal {
        let dim = ring.dim();
        let gens = self
            .powers
            .iter()
            .map(|&(i, a)| Monomial::pure_power(i, a, dim))
            .collect();
        MonomialIdeal::new(ring.clone(), gens).expect("dimensions match")
    }

    pub fn radical(&self, ring: &Arc<RingContext>) -> MonomialPrime {
        MonomialPrime::new(ring.clone(), self.powers.iter().map(|&(i, _)| i).collect())
            .expect("components have nonempty support")
    }
}

fn ensure_proper_nonzero(ideal: &MonomialIdeal, op: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal { op });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal { op });
    }
    Ok(())
}

/// Dense form of an irreducible component: `e[i] = a` for `x_i^a`, `0` when
/// `x_i` does not occur.
type Dense = Vec<u32>;

fn dense_contains(q: &Dense, m: &Monomial) -> bool {
    q.iter().zip(m.exponents()).any(|(&a, &b)| a > 0 && b >= a)
}

/// `c ⊆ q` for dense components.
fn dense_subset(c: &Dense, q: &Dense) -> bool {
    c.iter().zip(q).all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
}

/// Irredundant decomposition of a proper nonzero monomial ideal into
/// irreducible monomial ideals.
///
/// Generators are added one at a time. With `I = ⋂ Q` and a new generator
/// `m = ∏ x_i^{b_i}`, `I + (m) = ⋂ (Q + (m))`, and `Q + (m)` is either `Q`
/// (when `m ∈ Q`) or `⋂_{b_i > 0} (Q + (x_i^{b_i}))`. After each step every
/// component containing another one is dropped.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ensure_proper_nonzero(ideal, "irreducible_decomposition")?;
    let dim = ideal.dim();
    let mut gens: Vec<&Monomial> = ideal.generators().iter().collect();
    gens.sort_by_key(|g| (g.support_size(), g.degree()));

    // The all-zero vector is the zero ideal, the decomposition of `(0)`.
    let mut comps: Vec<Dense> = vec![vec![0; dim]];
    for m in gens {
        let (kept, split): (Vec<Dense>, Vec<Dense>) =
            comps.into_iter().partition(|q| dense_contains(q, m));
        let mut candidates: Vec<Dense> = Vec::new();
        for q in &split {
            for i in m.support() {
                let mut c = q.clone();
                c[i] = m.exponent(i);
                candidates.push(c);
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        // Kept components are already pairwise irredundant and none of them
        // contains a candidate (a candidate is strictly inside some old
        // component only if that component misses m). So only candidates
        // can be redundant.
        let survivors: Vec<Dense> = candidates
            .iter()
            .filter(|c| {
                !kept.iter().any(|k| dense_subset(k, c))
                    && !candidates.iter().any(|d| d != *c && dense_subset(d, c))
            })
            .cloned()
            .collect();
        comps = kept;
        comps.extend(survivors);
    }

    let mut out: Vec<IrreducibleComponent> = comps
        .into_iter()
        .map(|d| IrreducibleComponent {
            powers: d.into_iter().enumerate().filter(|&(_, a)| a > 0).collect(),
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `Ass(R/I)`: the radicals of the irreducible components, sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let comps = irreducible_decomposition(ideal)?;
    let mut primes: Vec<MonomialPrime> = comps.iter().map(|c| c.radical(ideal.ring())).collect();
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

/// Inclusion-minimal elements of a prime list.
pub fn minimal_elements(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.is_proper_subset_of(p)))
        .cloned()
        .collect()
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(minimal_elements(&associated_primes(ideal)?))
}

/// Largest height of an associated prime.
pub fn bight(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(associated_primes(ideal)?
        .iter()
        .map(MonomialPrime::height)
        .max()
        .expect("a proper nonzero ideal has an associated prime"))
}

/// Product of the primes in `ass` strictly containing `p`; the unit ideal
/// when there are none.
pub fn q_p_from(ass: &[MonomialPrime], p: &MonomialPrime) -> MonomialIdeal {
    ass.iter()
        .filter(|q| p.is_proper_subset_of(q))
        .fold(MonomialIdeal::unit(p.ring().clone()), |acc, q| {
            acc.product(&q.to_ideal())
        })
}

/// `Q_p` for `p ∈ Ass(I)`.
pub fn q_p(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<MonomialIdeal> {
    let ass = associated_primes(ideal)?;
    if !ass.contains(p) {
        return Err(Error::NotAssociated {
            prime: p.to_string(),
            ideal: ideal.to_string(),
        });
    }
    Ok(q_p_from(&ass, p))
}
