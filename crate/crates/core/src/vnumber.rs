//! Local and global v-numbers of monomial ideals.
//!
//! For `p ∈ Ass(I)` the local v-number is the least degree of a monomial `f`
//! with `(I : f) = p`. It is computed as the least degree of a nonzero element
//! of `(I : p) / (I : (p + Q_p^∞))`, where `(I : (p + Q^∞))` stands for
//! `(I : p) ∩ (I : Q^∞)` and `Q_p` is the product of the associated primes
//! strictly containing `p`. Since the denominator is an ideal, the least
//! degree is attained at a minimal generator of `(I : p)` lying outside it.
//! Every result carries a witness that is re-checked before returning.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{associated_primes, q_p_from, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A v-number together with its prime and a witness monomial `f` satisfying
/// `(I : f) = prime` and `deg f = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VResult {
    pub value: u64,
    pub prime: MonomialPrime,
    pub witness: Monomial,
}

impl VResult {
    /// Checks the witness condition against `ideal`.
    pub fn is_valid_for(&self, ideal: &MonomialIdeal) -> bool {
        self.witness.degree() == self.value && ideal.colon(&self.witness) == self.prime.to_ideal()
    }
}

#[derive(Serialize)]
struct VResultRepr<'a> {
    value: u64,
    prime: &'a MonomialPrime,
    witness: &'a [u32],
}

/// `{"value": 2, "prime": ["x3","x4"], "witness": [0,1,0,0,1]}`
impl Serialize for VResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VResultRepr {
            value: self.value,
            prime: &self.prime,
            witness: self.witness.exponents(),
        }
        .serialize(serializer)
    }
}

fn not_associated(ideal: &MonomialIdeal, p: &MonomialPrime) -> Error {
    Error::NotAssociated {
        prime: p.to_string(),
        ideal: ideal.to_string(),
    }
}

/// `v_p(I)` when `Ass(I)` is already known.
pub fn local_v_with_ass(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    ass: &[MonomialPrime],
) -> Result<VResult> {
    if !ass.contains(p) {
        return Err(not_associated(ideal, p));
    }
    let p_ideal = p.to_ideal();
    let numerator = ideal.colon_ideal(&p_ideal)?;
    let q = q_p_from(ass, p);
    let denominator = numerator.intersect(&ideal.saturation(&q)?);

    let witness = numerator
        .generators()
        .iter()
        .filter(|g| !denominator.contains(g))
        .min_by_key(|g| g.degree())
        .cloned()
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "(I : {p}) is contained in (I : ({p} + Q^inf)) for I = {ideal}"
            ))
        })?;

    let result = VResult {
        value: witness.degree(),
        prime: p.clone(),
        witness,
    };
    if !result.is_valid_for(ideal) {
        return Err(Error::Inconsistent(format!(
            "witness {} gives (I : f) = {} instead of {p} for I = {ideal}",
            ideal.format_monomial(&result.witness),
            ideal.colon(&result.witness)
        )));
    }
    Ok(result)
}

/// The local v-number `v_p(I)` for `p ∈ Ass(I)`.
pub fn local_v(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<VResult> {
    let ass = associated_primes(ideal)?;
    local_v_with_ass(ideal, p, &ass)
}

/// Every local v-number of `I`, in prime order.
pub fn all_local_v(ideal: &MonomialIdeal) -> Result<Vec<VResult>> {
    let ass = associated_primes(ideal)?;
    ass.par_iter()
        .map(|p| local_v_with_ass(ideal, p, &ass))
        .collect()
}

/// `v(I) = min_p v_p(I)`; ties go to the smallest prime.
pub fn v_number(ideal: &MonomialIdeal) -> Result<VResult> {
    let locals = all_local_v(ideal)?;
    Ok(locals
        .into_iter()
        .min_by(|a, b| a.value.cmp(&b.value).then_with(|| a.prime.cmp(&b.prime)))
        .expect("a proper nonzero ideal has an associated prime"))
}

/// Visits every monomial of total degree `degree` with `e_i <= bounds[i]`,
/// in lexicographically descending order, until `visit` returns `true`.
fn for_each_bounded(bounds: &[u32], degree: u64, visit: &mut dyn FnMut(&Monomial) -> bool) -> bool {
    fn rec(
        bounds: &[u32],
        i: usize,
        left: u64,
        current: &mut Vec<u32>,
        visit: &mut dyn FnMut(&Monomial) -> bool,
    ) -> bool {
        if i == bounds.len() {
            return left == 0 && visit(&Monomial::new(current.clone()));
        }
        let tail: u64 = bounds[i + 1..].iter().map(|&b| u64::from(b)).sum();
        let hi = u64::from(bounds[i]).min(left);
        let lo = left.saturating_sub(tail);
        if lo > hi {
            return false;
        }
        for e in (lo..=hi).rev() {
            current[i] = e as u32;
            if rec(bounds, i + 1, left - e, current, visit) {
                return true;
            }
        }
        current[i] = 0;
        false
    }
    let mut current = vec![0; bounds.len()];
    rec(bounds, 0, degree, &mut current, visit)
}

/// Brute-force `v_p(I)`: scans monomials by increasing degree up to
/// `degree_cap` for the first `f` with `(I : f) = p`.
///
/// Exponents are capped at the largest exponent of each variable in `G(I)`,
/// since raising an exponent past that bound leaves `(I : f)` unchanged.
pub fn local_v_oracle(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    degree_cap: u64,
) -> Result<VResult> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal {
            op: "local_v_oracle",
        });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal {
            op: "local_v_oracle",
        });
    }
    let target = p.to_ideal();
    let bounds = ideal.max_exponents();
    for degree in 0..=degree_cap {
        let mut found = None;
        for_each_bounded(&bounds, degree, &mut |m| {
            if ideal.colon(m) == target {
                found = Some(m.clone());
                true
            } else {
                false
            }
        });
        if let Some(witness) = found {
            return Ok(VResult {
                value: degree,
                prime: p.clone(),
                witness,
            });
        }
    }
    Err(Error::NoWitness {
        cap: degree_cap,
        prime: p.to_string(),
    })
}
