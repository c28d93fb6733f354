//! `D(P_n □ K_r)` through the relaxed polynomials `m^t_{n,r}`: the
//! domination polynomial of `P_n □ K_r` when `t` vertices of the left-end
//! copy of `K_r` need not be dominated.

use crate::error::{Error, Result};
use crate::polynomial::{pascal_row, IntPolynomial};

/// Memo table of `m^t_{n,r}` for a fixed `r`, built row by row.
#[derive(Clone, Debug)]
pub struct MTable {
    r: usize,
    binom_r: Vec<IntPolynomial>,
    /// `rows[n][t]`
    rows: Vec<Vec<IntPolynomial>>,
}

impl MTable {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("P_n □ K_r needs r >= 1".into()));
        }
        let binom_r = pascal_row(r)
            .into_iter()
            .map(IntPolynomial::constant)
            .collect();
        let mut table = Self {
            r,
            binom_r,
            rows: Vec::new(),
        };
        table.rows.push(vec![IntPolynomial::one(); r + 1]);
        table.rows.push(table.row_one());
        table.rows.push(table.row_two());
        Ok(table)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn delta(&self, t: usize) -> IntPolynomial {
        if t == self.r {
            IntPolynomial::one()
        } else {
            IntPolynomial::zero()
        }
    }

    fn row_one(&self) -> Vec<IntPolynomial> {
        let kr = IntPolynomial::binomial_shift(self.r);
        (0..=self.r).map(|t| &kr + &self.delta(t)).collect()
    }

    fn row_two(&self) -> Vec<IntPolynomial> {
        let r = self.r;
        let xp1_r = IntPolynomial::linear_power(1, r);
        let common = &(&(&xp1_r.pow(2) - &xp1_r.scale(&2.into())) + &IntPolynomial::x_pow(r))
            + &IntPolynomial::one();
        (0..=r)
            .map(|t| {
                let mixed = IntPolynomial::linear_power(1, t).shift(r - t);
                &(&common + &mixed) - &self.delta(t)
            })
            .collect()
    }

    fn next_row(&self, n: usize) -> Vec<IntPolynomial> {
        let r = self.r;
        let prev = &self.rows[n - 1];
        let prev2 = &self.rows[n - 2];
        // Σ_{i=lo}^{r} C(r,i) x^i m^i_{n-1}
        let choose_left = |lo: usize| -> IntPolynomial {
            (lo..=r)
                .map(|i| (&self.binom_r[i] * &prev[i]).shift(i))
                .sum()
        };
        let nonempty = choose_left(1);
        (0..=r)
            .map(|t| {
                if t == r {
                    return &nonempty + &prev[0];
                }
                let binom_t = pascal_row(t);
                let skip: IntPolynomial = (0..=t)
                    .map(|i| prev2[r - t + i].scale(&binom_t[i]).shift(i))
                    .sum();
                &nonempty + &skip.shift(r - t)
            })
            .collect()
    }

    /// Extends the table through row `n`.
    pub fn ensure(&mut self, n: usize) {
        while self.rows.len() <= n {
            let next = self.next_row(self.rows.len());
            self.rows.push(next);
        }
    }

    /// `m^t_{n,r}`
    pub fn get(&mut self, n: usize, t: usize) -> Result<&IntPolynomial> {
        if t > self.r {
            return Err(Error::InvalidParameter(format!(
                "exempt count t = {t} exceeds r = {}",
                self.r
            )));
        }
        self.ensure(n);
        Ok(&self.rows[n][t])
    }
}

/// `m^t_{n,r}(x)`.
pub fn m_poly(n: usize, t: usize, r: usize) -> Result<IntPolynomial> {
    MTable::new(r)?.get(n, t).cloned()
}

/// `D(P_n □ K_r, x) = m^0_{n,r}(x)`.
pub fn pn_kr_poly(n: usize, r: usize) -> Result<IntPolynomial> {
    m_poly(n, 0, r)
}
