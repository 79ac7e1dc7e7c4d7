//! Small exact linear algebra over the rationals.
//!
//! Everything here works on dense row-major matrices of machine integers on
//! input and uses `BigRational` internally, so results are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    // Fraction-free elimination; entries stay small for the sizes used here.
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r
}

/// Basis of the rational kernel `{x : M x = 0}` of an integer matrix with
/// `ncols` columns.
pub fn kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Q]) -> Vec<i64> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("primitive vector entry overflows i64")
        })
        .collect()
}

/// Coordinates of `target` in the span of linearly independent `basis`
/// vectors, if it lies there.
pub fn coordinates(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<Q>> {
    let k = basis.len();
    let n = target.len();
    // Augmented system with one row per coordinate.
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| q(b[i])).collect();
            row.push(q(target[i]));
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][k].clone();
    }
    Some(x)
}

/// Determinant of a square integer matrix.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev: i128 = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

pub fn is_nonneg_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[vec![1, 1], vec![2, 2]]), 1);
        assert_eq!(rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]), 3);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
    }

    #[test]
    fn kernel_of_opposite_rows() {
        let k = kernel(&[vec![1, -1], vec![-1, 1]], 2);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive(&k[0]), vec![1, 1]);
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[]), 1);
        assert_eq!(det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 4);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn coordinates_in_basis() {
        let x = coordinates(&[vec![1, 1, 0], vec![0, 1, 1]], &[2, 3, 1]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(coordinates(&[vec![1, 0, 0]], &[0, 1, 0]).is_none());
    }
}
