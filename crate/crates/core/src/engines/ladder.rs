//! The ladder `L_n = P_n □ K_2`.

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

/// `D(L_1) ..= D(L_5)`, lowest degree first.
const LADDER_ROWS: [&[i64]; 5] = [
    &[0, 2, 1],
    &[0, 0, 6, 4, 1],
    &[0, 0, 3, 16, 15, 6, 1],
    &[0, 0, 0, 12, 48, 52, 28, 8, 1],
    &[0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1],
];

/// Seed data for the ladder recurrences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderBases {
    /// `D(L_1) ..= D(L_5)`
    pub rows: [IntPolynomial; 5],
    pub a1: IntPolynomial,
    pub a2: IntPolynomial,
}

impl Default for LadderBases {
    fn default() -> Self {
        Self {
            rows: LADDER_ROWS.map(IntPolynomial::from_i64s),
            a1: IntPolynomial::x_pow(2),
            a2: IntPolynomial::linear_power(1, 2).shift(2),
        }
    }
}

/// `D(L_0) ..= D(L_n)`, with `D(L_0) = 1`.
pub fn ladder_polys(n: usize) -> Vec<IntPolynomial> {
    let bases = LadderBases::default();
    let mut out = Vec::with_capacity(n + 1);
    out.push(IntPolynomial::one());
    out.extend(bases.rows.iter().take(n).cloned());
    let c1 = IntPolynomial::from_i64s(&[0, 2, 1]); // x(x+2)
    let c2 = IntPolynomial::from_i64s(&[0, 1, 1]); // x(x+1)
    let c3 = IntPolynomial::from_i64s(&[0, 0, 1, 1]); // x^2(x+1)
    let x3 = IntPolynomial::x_pow(3);
    for k in 6..=n {
        let next = &(&(&(&c1 * &out[k - 1]) + &(&c2 * &out[k - 2])) + &(&c3 * &out[k - 3]))
            - &(&x3 * &(&out[k - 4] + &out[k - 5]));
        out.push(next);
    }
    out
}

/// `D(L_n, x)`; table rows for `n <= 5`, the five-term recurrence beyond.
pub fn ladder_poly(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("ladder index must be at least 1".into()));
    }
    Ok(ladder_polys(n).swap_remove(n))
}

/// Generating polynomial of dominating sets of `L_n` containing both
/// vertices of the last rung.
pub fn ladder_a_poly(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("ladder index must be at least 1".into()));
    }
    let bases = LadderBases::default();
    let d = ladder_polys(n);
    let mut a = vec![IntPolynomial::zero(), bases.a1, bases.a2];
    for k in 3..=n {
        let inner = &(&d[k - 1] + &d[k - 2]) - &a[k - 2];
        a.push(inner.shift(2));
    }
    Ok(a.swap_remove(n))
}
