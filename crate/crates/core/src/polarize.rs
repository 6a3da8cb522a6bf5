//! Polarization of monomial ideals.

use std::sync::Arc;

use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// Name of the `slot`-th copy of a variable, `slot ≥ 1`.
pub fn polarized_name(name: &str, slot: u32) -> String {
    format!("{name}_{slot}")
}

/// Polarizes `I`: `x_i^a ↦ x_{i,1}⋯x_{i,a}`.
///
/// The new ring has variables `{x}_1, …, {x}_d` for each variable `x`, where
/// `d` is the largest exponent of `x` in `G(I)`; variables absent from `G(I)`
/// disappear. Copies of one variable are adjacent in the new ring.
pub fn polarize(ideal: &MonomialIdeal) -> MonomialIdeal {
    let bounds = ideal.max_exponents();
    let ring = ideal.ring();
    let mut names = Vec::new();
    let mut offset = Vec::with_capacity(bounds.len());
    for (i, &d) in bounds.iter().enumerate() {
        offset.push(names.len());
        for slot in 1..=d {
            names.push(polarized_name(ring.name(i), slot));
        }
    }
    let target: Arc<RingContext> =
        RingContext::new(names).expect("polarized names are distinct for distinct variables");
    let dim = target.dim();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; dim];
            for (i, &a) in g.exponents().iter().enumerate() {
                for slot in 0..a as usize {
                    e[offset[i] + slot] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(target, gens).expect("polarized generators match the new ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_power() {
        let r = RingContext::new(["x"]).unwrap();
        let i = MonomialIdeal::from_exponents(r, vec![vec![2]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.ring().variables(), ["x_1", "x_2"]);
        assert_eq!(p.generators(), [Monomial::new(vec![1, 1])]);
    }

    #[test]
    fn mixed_exponents() {
        let r = RingContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::from_exponents(r, vec![vec![2, 0], vec![1, 3]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.ring().variables(), ["x_1", "x_2", "y_1", "y_2", "y_3"]);
        assert!(p.is_squarefree());
        assert_eq!(p.generators().len(), 2);
        assert!(p.contains(&Monomial::new(vec![1, 0, 1, 1, 1])));
    }

    #[test]
    fn squarefree_is_renamed_only() {
        let r = RingContext::numbered("x", 3);
        let i = MonomialIdeal::from_exponents(r, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.ring().variables(), ["x1_1", "x2_1", "x3_1"]);
        let gens: Vec<_> = p
            .generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect();
        let orig: Vec<_> = i
            .generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect();
        assert_eq!(gens, orig);
    }
}
