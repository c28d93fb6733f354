use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

/// Runs `D_{k+1} = x (D_k + D_{k-1} + D_{k-2})` forward from three seeds
/// indexed `first, first+1, first+2` until index `n`.
fn tribonacci_x(seeds: [IntPolynomial; 3], first: usize, n: usize) -> IntPolynomial {
    let [mut a, mut b, mut c] = seeds;
    if n < first + 3 {
        return Vec::from([a, b, c]).swap_remove(n - first);
    }
    for _ in first + 3..=n {
        let next = (&(&a + &b) + &c).shift(1);
        a = b;
        b = c;
        c = next;
    }
    c
}

/// `D(P_n, x)`.
pub fn path_poly(n: usize) -> IntPolynomial {
    let seeds = [
        IntPolynomial::one(),
        IntPolynomial::x(),
        IntPolynomial::from_i64s(&[0, 2, 1]),
    ];
    tribonacci_x(seeds, 0, n)
}

/// `D(C_n, x)` for `n >= 3`. The seeds for `C_4` and `C_5` were generated by
/// subset enumeration and are re-checked in the tests.
pub fn cycle_poly(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let seeds = [
        IntPolynomial::binomial_shift(3),
        IntPolynomial::from_i64s(&[0, 0, 6, 4, 1]),
        IntPolynomial::from_i64s(&[0, 0, 5, 10, 5, 1]),
    ];
    Ok(tribonacci_x(seeds, 3, n))
}

/// `D(K_r, x) = (x+1)^r - 1`, except `K_0` (the null graph) which gives 1.
pub fn complete_poly(r: usize) -> IntPolynomial {
    if r == 0 {
        IntPolynomial::one()
    } else {
        IntPolynomial::binomial_shift(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_values() {
        assert_eq!(path_poly(0), IntPolynomial::one());
        assert_eq!(path_poly(2), IntPolynomial::from_i64s(&[0, 2, 1]));
        assert_eq!(path_poly(3), IntPolynomial::from_i64s(&[0, 1, 3, 1]));
    }

    #[test]
    fn cycle_values() {
        assert_eq!(cycle_poly(3).unwrap(), IntPolynomial::binomial_shift(3));
        assert_eq!(cycle_poly(4).unwrap(), IntPolynomial::from_i64s(&[0, 0, 6, 4, 1]));
        assert_eq!(
            cycle_poly(5).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, 5, 10, 5, 1])
        );
        assert!(cycle_poly(2).is_err());
    }

    #[test]
    fn complete_values() {
        assert_eq!(complete_poly(0), IntPolynomial::one());
        assert_eq!(complete_poly(1), IntPolynomial::x());
        assert_eq!(complete_poly(2), IntPolynomial::from_i64s(&[0, 2, 1]));
        assert_eq!(complete_poly(4), IntPolynomial::from_i64s(&[0, 4, 6, 4, 1]));
    }
}
