//! Exact-rational feasibility of `{x ≥ 0 : A x = b}` by phase-one simplex
//! with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Whether some `x ≥ 0` satisfies `A x = b` exactly.
///
/// # Panics
/// If the rows of `a` differ in length or `b` has the wrong length.
pub fn is_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    assert!(
        a.iter().all(|row| row.len() == n),
        "ragged constraint matrix"
    );

    // Columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let rhs = n + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (arow, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row = vec![Rational::zero(); width];
        for (j, v) in arow.iter().enumerate() {
            row[j] = if flip { -v.clone() } else { v.clone() };
        }
        row[n + i] = rational(1);
        row[rhs] = if flip { -bi.clone() } else { bi.clone() };
        rows.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of `minimize Σ artificials`; the last entry is minus the
    // current objective value.
    let mut cost = vec![Rational::zero(); width];
    for row in &rows {
        for j in (0..n).chain(std::iter::once(rhs)) {
            cost[j] -= &row[j];
        }
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero, so a negative
        // reduced cost always has a positive entry in its column.
        let (r, _) = leave.expect("phase one is bounded");
        pivot(&mut rows, &mut cost, r, enter);
        basis[r] = enter;
    }
    cost[rhs].is_zero()
}

fn pivot(rows: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let p = rows[r][c].clone();
    for v in rows[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = rows[r].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rational(v)).collect())
            .collect()
    }

    fn v(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0  ->  x = y = 1/2
        assert!(is_feasible(&q(&[&[1, 1], &[1, -1]]), &v(&[1, 0])));
        // x + y = -1 has no nonnegative solution
        assert!(!is_feasible(&q(&[&[1, 1]]), &v(&[-1])));
        // x = 2, x = 3
        assert!(!is_feasible(&q(&[&[1], &[1]]), &v(&[2, 3])));
        assert!(is_feasible(&[], &[]));
    }

    #[test]
    fn degenerate_system() {
        // x + y + z = 0 forces zero, still feasible
        assert!(is_feasible(&q(&[&[1, 1, 1], &[1, 0, 0]]), &v(&[0, 0])));
        // -x = 1 infeasible; x - y = -2 feasible via y = 2
        assert!(!is_feasible(&q(&[&[-1]]), &v(&[1])));
        assert!(is_feasible(&q(&[&[1, -1]]), &v(&[-2])));
    }
}
