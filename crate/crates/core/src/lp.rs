//! Exact rational feasibility for systems `A x >= b, x >= 0`.
//!
//! A dense two-phase tableau; only phase one is needed because every caller
//! asks for a feasible point, never an optimum. Bland's rule keeps it from
//! cycling.

use crate::linalg::{q, Q};
use num_traits::{Signed, Zero};

/// Returns a point of `{x >= 0 : A x >= b}` or `None` if it is empty.
///
/// `a` has one row per constraint, each of length `nvars`.
pub fn feasible_point(a: &[Vec<i64>], b: &[i64], nvars: usize) -> Option<Vec<Q>> {
    let m = a.len();
    debug_assert_eq!(b.len(), m);
    if m == 0 {
        return Some(vec![Q::zero(); nvars]);
    }
    // Columns: x (nvars), surplus (m), artificial (m), rhs.
    let width = nvars + 2 * m + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Q::zero(); width];
        let sign = if b[i] < 0 { -1 } else { 1 };
        for j in 0..nvars {
            row[j] = q(sign * a[i][j]);
        }
        row[nvars + i] = q(-sign);
        row[nvars + m + i] = q(1);
        row[rhs] = q(sign * b[i]);
        t.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| nvars + m + i).collect();

    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for j in 0..nvars + m {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..nvars + 2 * m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry.
        let r = leave.expect("phase-one simplex cannot be unbounded");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); nvars];
    for (i, &v) in basis.iter().enumerate() {
        if v < nvars {
            x[v] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Q>], cost: &mut [Q], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x = &*x * &inv;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
    }
}

/// Checks `A x >= b` and `x >= 0` exactly.
pub fn satisfies(a: &[Vec<i64>], b: &[i64], x: &[Q]) -> bool {
    if x.iter().any(Signed::is_negative) {
        return false;
    }
    a.iter().zip(b).all(|(row, &bi)| {
        let lhs: Q = row.iter().zip(x).map(|(&aij, xj)| q(aij) * xj).sum();
        lhs >= q(bi)
    })
}
