//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::polynomial::Rational;

/// Reduced row echelon form of a matrix with `cols` columns.
pub(crate) struct Rref {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref(mut m: Vec<Vec<Rational>>, cols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (v, pv) in r.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    Rref { rows: m, pivots }
}

/// Solves `a · u = b`; free unknowns are set to zero. `None` if inconsistent.
pub(crate) fn solve(a: Vec<Vec<Rational>>, b: Vec<Rational>, unknowns: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    let r = rref(augmented, unknowns + 1);
    if r.pivots.last() == Some(&unknowns) {
        return None;
    }
    let mut u = vec![Rational::zero(); unknowns];
    for (row, &col) in r.rows.iter().zip(&r.pivots) {
        u[col] = row[unknowns].clone();
    }
    Some(u)
}

/// A basis of the right nullspace, one vector per free column, in column order.
pub(crate) fn nullspace(a: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let r = rref(a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in r.rows.iter().zip(&r.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn solves_square_system() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let u = solve(a, vec![q(5), q(10)], 2).unwrap();
        assert_eq!(u, vec![q(1), q(3)]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        assert!(solve(a, vec![q(1), q(3)], 2).is_none());
    }

    #[test]
    fn underdetermined_sets_free_to_zero() {
        let a = mat(&[&[1, 1, 0]]);
        assert_eq!(solve(a, vec![q(4)], 3).unwrap(), vec![q(4), q(0), q(0)]);
    }

    #[test]
    fn nullspace_basis() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(a.clone(), 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert!(nullspace(mat(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }
}
