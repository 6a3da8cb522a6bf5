//! Monomial ideals and their operation algebra.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{same_ring, Monomial, RingContext};

/// A monomial ideal, stored as its minimal monomial generators.
///
/// Generators form an antichain under divisibility and are kept in
/// descending lexicographic order of their exponent vectors (so `x^2` comes
/// before `x*y^4`), which makes two ideals equal
/// exactly when their generator lists are. No generators means the zero
/// ideal; the single generator `1` means the unit ideal.
///
/// Binary operations require both operands to live in the same ring and
/// panic otherwise; use [`MonomialIdeal::ensure_same_ring`] to check inputs
/// coming from outside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to the divisibility antichain generating the same ideal.
pub fn minimalize(gens: Vec<Monomial>, ring: &Arc<RingContext>) -> Result<MonomialIdeal> {
    for g in &gens {
        if g.dim() != ring.dim() {
            return Err(Error::DimensionMismatch {
                expected: ring.dim(),
                found: g.dim(),
            });
        }
    }
    Ok(MonomialIdeal::from_gens(ring.clone(), gens))
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree_lex_key().cmp(&b.degree_lex_key()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators, checking their dimension.
    pub fn new(ring: Arc<RingContext>, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens, &ring)
    }

    pub(crate) fn from_gens(ring: Arc<RingContext>, gens: Vec<Monomial>) -> Self {
        Self {
            ring,
            gens: minimal_antichain(gens),
        }
    }

    /// Builds an ideal from exponent vectors.
    pub fn from_exponents(ring: Arc<RingContext>, gens: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(ring, gens.into_iter().map(Monomial::new).collect())
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        Self {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Arc<RingContext>) -> Self {
        let one = Monomial::one(ring.dim());
        Self {
            ring,
            gens: vec![one],
        }
    }

    /// The prime `(x_i : i in support)`.
    pub fn generated_by_variables(ring: Arc<RingContext>, support: &[usize]) -> Self {
        let dim = ring.dim();
        Self::from_gens(
            ring,
            support.iter().map(|&i| Monomial::var(i, dim)).collect(),
        )
    }

    pub fn principal(ring: Arc<RingContext>, m: Monomial) -> Self {
        Self {
            ring,
            gens: vec![m],
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn ensure_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.variables().join(","),
                other.ring.variables().join(",")
            )))
        }
    }

    fn assert_same_ring(&self, other: &MonomialIdeal) {
        if let Err(e) = self.ensure_same_ring(other) {
            panic!("{e}");
        }
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.assert_same_ring(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        Self::from_gens(self.ring.clone(), gens)
    }

    /// `self^n`; `self^0` is the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Self::from_gens(self.ring.clone(), gens)
    }

    /// Intersection of all `ideals`, minimalizing after every fold step.
    /// The empty intersection is the unit ideal of `ring`.
    pub fn intersect_all<'a, I>(ring: &Arc<RingContext>, ideals: I) -> MonomialIdeal
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc = Self::unit(ring.clone());
        for ideal in ideals {
            acc = acc.intersect(ideal);
        }
        acc
    }

    /// `(self : f)`.
    pub fn colon(&self, f: &Monomial) -> MonomialIdeal {
        assert_eq!(f.dim(), self.dim(), "colon: monomial dimension mismatch");
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    /// `(self : J) = ⋂_{g ∈ G(J)} (self : g)`.
    pub fn colon_ideal(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ensure_same_ring(j)?;
        if j.is_zero() {
            return Err(Error::ZeroIdeal { op: "colon_ideal" });
        }
        let parts: Vec<MonomialIdeal> = j.gens.iter().map(|g| self.colon(g)).collect();
        Ok(Self::intersect_all(&self.ring, &parts))
    }

    /// `(self : J^∞)`, computed as the fixpoint of repeated colons by `J`.
    pub fn saturation(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal(j)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u64> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroIdeal { op: "alpha" })
    }

    pub fn is_equigenerated(&self) -> bool {
        let mut degrees = self.gens.iter().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::from_gens(
            self.ring.clone(),
            self.gens.iter().map(Monomial::radical).collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Per-variable maximum exponent over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// `I R_p ∩ R` for the monomial prime on `support`: every variable outside
    /// the prime becomes a unit, so its exponent is erased.
    pub fn localize_at(&self, support: &[usize]) -> MonomialIdeal {
        let keep: HashSet<usize> = support.iter().copied().collect();
        let outside: Vec<usize> = (0..self.dim()).filter(|i| !keep.contains(i)).collect();
        Self::from_gens(
            self.ring.clone(),
            self.gens.iter().map(|g| g.erase(&outside)).collect(),
        )
    }

    /// Re-expresses this ideal in `target` by matching variable names.
    pub fn embed_into(&self, target: &Arc<RingContext>) -> Result<MonomialIdeal> {
        let map: Vec<usize> = self
            .ring
            .variables()
            .iter()
            .map(|name| {
                target.index_of(name).ok_or_else(|| {
                    Error::RingMismatch(format!(
                        "variable {name:?} is missing from the target ring"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; target.dim()];
                for (i, &a) in g.exponents().iter().enumerate() {
                    e[map[i]] = a;
                }
                Monomial::new(e)
            })
            .collect();
        Ok(Self::from_gens(target.clone(), gens))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.ring.format_monomial(m)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.gens.is_empty() {
            "0".to_string()
        } else {
            self.gens
                .iter()
                .map(|g| self.ring.format_monomial(g))
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "ideal({}) in [{}]",
            body,
            self.ring.variables().join(",")
        )
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            variables: self.ring.variables().to_vec(),
            generators: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        let ring = RingContext::new(repr.variables).map_err(serde::de::Error::custom)?;
        MonomialIdeal::from_exponents(ring, repr.generators).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<RingContext> {
        RingContext::new(["x", "y"]).unwrap()
    }

    fn ideal(ring: &Arc<RingContext>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring.clone(), gens.iter().map(|g| g.to_vec()).collect())
            .unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[2, 1], &[0, 3]]);
        assert_eq!(i, ideal(&r, &[&[2, 0], &[0, 3]]));
        assert!(ideal(&r, &[]).is_zero());
        assert!(minimalize(vec![Monomial::new(vec![1])], &r).is_err());
    }

    #[test]
    fn example_ideal_is_already_minimal() {
        let r = RingContext::new(["x", "y", "z", "w"]).unwrap();
        let gens: &[&[u32]] = &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0]];
        assert_eq!(ideal(&r, gens).generators().len(), 4);
    }

    #[test]
    fn membership() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        assert!(i.contains(&Monomial::new(vec![3, 0])));
        assert!(!i.contains(&Monomial::new(vec![1, 3])));
        assert!(!MonomialIdeal::zero(r).contains(&Monomial::one(2)));
    }

    #[test]
    fn powers() {
        let r = xy();
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.power(2), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(m.power(0).is_unit());
        let k3 = RingContext::numbered("x", 3);
        let j = ideal(&k3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(j.power(2).alpha().unwrap(), 4);
    }

    #[test]
    fn intersections() {
        let r = xy();
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.intersect(&y), ideal(&r, &[&[1, 1]]));

        let k3 = RingContext::numbered("x", 3);
        let primes = [
            MonomialIdeal::generated_by_variables(k3.clone(), &[0, 1]),
            MonomialIdeal::generated_by_variables(k3.clone(), &[0, 2]),
            MonomialIdeal::generated_by_variables(k3.clone(), &[1, 2]),
        ];
        let j = MonomialIdeal::intersect_all(&k3, &primes);
        assert_eq!(j, ideal(&k3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));

        let a = ideal(&r, &[&[1, 0], &[0, 4]]);
        let b = ideal(&r, &[&[2, 0], &[1, 3]]);
        assert_eq!(a.intersect(&b), ideal(&r, &[&[2, 0], &[1, 3]]));
    }

    #[test]
    fn colons() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        assert_eq!(
            i.colon(&Monomial::new(vec![1, 0])),
            ideal(&r, &[&[1, 0], &[0, 4]])
        );
        assert_eq!(i.colon(&Monomial::one(2)), i);
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(i.colon_ideal(&m).unwrap(), ideal(&r, &[&[2, 0], &[1, 3]]));
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(r.clone())).unwrap(), i);
        assert!(i.colon_ideal(&MonomialIdeal::zero(r.clone())).is_err());
        let xy1 = ideal(&r, &[&[1, 1]]);
        assert_eq!(
            xy1.colon_ideal(&ideal(&r, &[&[1, 0]])).unwrap(),
            ideal(&r, &[&[0, 1]])
        );

        let k3 = RingContext::numbered("x", 3);
        let j = ideal(&k3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            j.colon(&Monomial::var(2, 3)),
            MonomialIdeal::generated_by_variables(k3, &[0, 1])
        );
    }

    #[test]
    fn saturations() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(i.saturation(&m).unwrap(), ideal(&r, &[&[1, 0]]));
        assert_eq!(i.saturation(&MonomialIdeal::unit(r.clone())).unwrap(), i);
        let x2y = ideal(&r, &[&[2, 1]]);
        assert_eq!(
            x2y.saturation(&ideal(&r, &[&[0, 1]])).unwrap(),
            ideal(&r, &[&[2, 0]])
        );
    }

    #[test]
    fn alpha_radical_equality() {
        let r = xy();
        assert_eq!(MonomialIdeal::unit(r.clone()).alpha().unwrap(), 0);
        assert!(MonomialIdeal::zero(r.clone()).alpha().is_err());
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        assert_eq!(i.radical(), ideal(&r, &[&[1, 0]]));
        assert!(!i.is_squarefree());
        assert_eq!(
            ideal(&r, &[&[1, 0], &[0, 1]]),
            ideal(&r, &[&[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn localization_erases_outside_variables() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        assert_eq!(i.localize_at(&[0]), ideal(&r, &[&[1, 0]]));
        assert_eq!(i.localize_at(&[0, 1]), i);
    }

    #[test]
    fn json_shape() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 4]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"variables":["x","y"],"generators":[[2,0],[1,4]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
    }
}
