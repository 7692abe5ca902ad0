//! Small dense exact linear algebra.

use crate::scalar::Scalar;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot columns.
pub(crate) fn rref<S: Scalar>(rows: &mut [Vec<S>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}

/// Some solution of `a · x = b`, with free variables set to zero; `None` if inconsistent.
pub(crate) fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![S::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` if singular.
pub(crate) fn invert<S: Scalar>(m: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = m.len();
    let mut aug: Vec<Vec<S>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect()
    }

    #[test]
    fn solves_singular_consistent_system() {
        let a = q(&[&[1, 1], &[2, 2]]);
        let b = vec![Q::from_integer(3), Q::from_integer(6)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0] + x[1], Q::from_integer(3));
        assert!(solve(&a, &[Q::from_integer(1), Q::from_integer(3)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv, q(&[&[1, -1], &[-1, 2]]));
        assert!(invert(&q(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4], &[0, 1]])), 2);
    }
}
