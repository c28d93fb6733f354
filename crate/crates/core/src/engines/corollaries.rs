//! Recurrences for strong products with `K_r`, obtained by substituting
//! `y = (x+1)^r - 1` into the path, cycle and ladder recurrences.

use serde::Serialize;

use super::{cycle_poly, ladder_polys, path_poly};
use crate::polynomial::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StrongFamily {
    /// `P_n ⊠ K_r`
    Path,
    /// `C_n ⊠ K_r`
    Cycle,
    /// `L_n ⊠ K_r`
    Ladder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCheck {
    pub family: StrongFamily,
    pub n: usize,
    pub r: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub checks: Vec<CorollaryCheck>,
}

impl CorollaryReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CorollaryCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks, for `r = 1..=r_max`:
/// - `H_{n} = y (H_{n-1} + H_{n-2} + H_{n-3})` for `4 <= n <= n_max`,
/// - the same shape for `C_n ⊠ K_r`, `6 <= n <= n_max`,
/// - the ladder-product recurrence for `Z_n = L_n ⊠ K_r`, `6 <= n <= n_max + 1`.
///
/// Family members are `D(G_n, y)`; the right-hand sides use the expanded
/// coefficients in `x`.
pub fn verify_strong_corollaries(n_max: usize, r_max: usize) -> CorollaryReport {
    let mut checks = Vec::new();
    for r in 1..=r_max {
        let y = IntPolynomial::binomial_shift(r);
        let y_sum3 = |polys: &[IntPolynomial], n: usize| {
            &y * &(&(&polys[n - 1] + &polys[n - 2]) + &polys[n - 3])
        };

        let h: Vec<IntPolynomial> = (0..=n_max).map(|k| path_poly(k).compose(&y)).collect();
        for n in 4..=n_max {
            checks.push(CorollaryCheck {
                family: StrongFamily::Path,
                n,
                r,
                passed: h[n] == y_sum3(&h, n),
            });
        }

        let c: Vec<IntPolynomial> = (0..=n_max)
            .map(|k| {
                cycle_poly(k)
                    .map(|p| p.compose(&y))
                    .unwrap_or_else(|_| IntPolynomial::zero())
            })
            .collect();
        for n in 6..=n_max {
            checks.push(CorollaryCheck {
                family: StrongFamily::Cycle,
                n,
                r,
                passed: c[n] == y_sum3(&c, n),
            });
        }

        let z_max = n_max + 1;
        let z: Vec<IntPolynomial> = ladder_polys(z_max).iter().map(|p| p.compose(&y)).collect();
        let xp1_r = IntPolynomial::linear_power(1, r);
        let k1 = &IntPolynomial::linear_power(1, 2 * r) - &IntPolynomial::one();
        let k2 = &y * &xp1_r;
        let k3 = &(&y * &y) * &xp1_r;
        let k4 = y.pow(3);
        for n in 6..=z_max {
            let rhs = &(&(&(&k1 * &z[n - 1]) + &(&k2 * &z[n - 2])) + &(&k3 * &z[n - 3]))
                - &(&k4 * &(&z[n - 4] + &z[n - 5]));
            checks.push(CorollaryCheck {
                family: StrongFamily::Ladder,
                n,
                r,
                passed: z[n] == rhs,
            });
        }
    }
    CorollaryReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let report = verify_strong_corollaries(8, 2);
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let count = |f| report.checks.iter().filter(|c| c.family == f && c.r == 2).count();
        assert_eq!(count(StrongFamily::Path), 5); // n = 4..=8
        assert_eq!(count(StrongFamily::Cycle), 3); // n = 6..=8
        assert_eq!(count(StrongFamily::Ladder), 4); // n = 6..=9
    }
}
