//! Integral closure of powers of monomial ideals through the Newton
//! polyhedron.

use crate::ideal::MonomialIdeal;
use crate::lp::{is_feasible, rational, Rational};
use crate::monomial::Monomial;

/// `conv(a_1, …, a_k) + ℝ^m_{≥0}` for the generator exponents `a_i` of an
/// ideal. A monomial `x^v` lies in the closure of `I^n` iff `v ∈ n·NP(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    vertices: Vec<Vec<u32>>,
    dim: usize,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Self {
        Self {
            vertices: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
            dim: ideal.dim(),
        }
    }

    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    /// `v ∈ n·NP`: some `λ ≥ 0` with `Σλ_i = n` and `Σλ_i a_i ≤ v`.
    pub fn contains_scaled(&self, v: &[u32], n: u32) -> bool {
        assert_eq!(v.len(), self.dim, "point dimension");
        let k = self.vertices.len();
        if k == 0 {
            return false;
        }
        if n == 0 {
            return true;
        }
        // Columns: λ_1..λ_k, then one slack per coordinate.
        let cols = k + self.dim;
        let mut a: Vec<Vec<Rational>> = Vec::with_capacity(self.dim + 1);
        let mut b: Vec<Rational> = Vec::with_capacity(self.dim + 1);
        for j in 0..self.dim {
            let mut row = vec![rational(0); cols];
            for (i, vert) in self.vertices.iter().enumerate() {
                row[i] = rational(i64::from(vert[j]));
            }
            row[k + j] = rational(1);
            a.push(row);
            b.push(rational(i64::from(v[j])));
        }
        let mut row = vec![rational(0); cols];
        for x in row.iter_mut().take(k) {
            *x = rational(1);
        }
        a.push(row);
        b.push(rational(i64::from(n)));
        is_feasible(&a, &b)
    }
}

/// Whether `v` lies in the integral closure of `I^n`.
pub fn closure_membership(ideal: &MonomialIdeal, v: &Monomial, n: u32) -> bool {
    NewtonPolyhedron::of(ideal).contains_scaled(v.exponents(), n)
}

/// The integral closure of `I^n`.
///
/// Minimal generators lie in the box `[0, n·d_j]` where `d_j` is the largest
/// exponent of `x_j` in `G(I)`: a point beyond the box in coordinate `j`
/// stays in the polyhedron after lowering that coordinate. The box is scanned
/// by increasing degree, skipping multiples of generators already found.
pub fn closure_power(ideal: &MonomialIdeal, n: u32) -> MonomialIdeal {
    let ring = ideal.ring().clone();
    if ideal.is_zero() {
        return MonomialIdeal::zero(ring);
    }
    if n == 0 || ideal.is_unit() {
        return MonomialIdeal::unit(ring);
    }
    let poly = NewtonPolyhedron::of(ideal);
    let bounds: Vec<u32> = ideal.max_exponents().iter().map(|d| d * n).collect();
    let mut points = box_points(&bounds);
    points.sort_by_key(|p| p.iter().map(|&e| u64::from(e)).sum::<u64>());

    let mut gens: Vec<Monomial> = Vec::new();
    for p in points {
        let m = Monomial::new(p);
        if gens.iter().any(|g| g.divides(&m)) {
            continue;
        }
        if poly.contains_scaled(m.exponents(), n) {
            gens.push(m);
        }
    }
    MonomialIdeal::new(ring, gens).expect("box points match the ring dimension")
}

fn box_points(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingContext;

    fn xy(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            RingContext::new(["x", "y"]).unwrap(),
            gens.iter().map(|g| g.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn membership() {
        let i = xy(&[&[2, 0], &[0, 2]]);
        assert!(closure_membership(&i, &Monomial::new(vec![1, 1]), 1));
        assert!(!closure_membership(&i, &Monomial::new(vec![1, 0]), 1));
        for g in i.power(3).generators() {
            assert!(closure_membership(&i, g, 3));
        }
    }

    #[test]
    fn closures() {
        let i = xy(&[&[2, 0], &[0, 2]]);
        assert_eq!(closure_power(&i, 1), xy(&[&[2, 0], &[1, 1], &[0, 2]]));
        let m = xy(&[&[1, 0], &[0, 1]]);
        assert_eq!(closure_power(&m, 1), m);
        assert!(closure_power(&i, 0).is_unit());
        let j = xy(&[&[3, 0], &[1, 1], &[0, 3]]);
        assert!(j.is_subset_of(&closure_power(&j, 1)));
    }
}
