use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polynomial::{pascal_row, IntPolynomial};

/// `D(K_r □ K_s, x)` by inclusion-exclusion over empty columns:
/// `((x+1)^r - 1)^s - Σ_{k=1}^{s-1} C(s,k) (-1)^k ((x+1)^{s-k} - 1)^r`.
pub fn kr_ks_poly(r: usize, s: usize) -> Result<IntPolynomial> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_r □ K_s needs r, s >= 1, got r = {r}, s = {s}"
        )));
    }
    let mut acc = IntPolynomial::binomial_shift(r).pow(s);
    let binom = pascal_row(s);
    for (k, c) in binom.iter().enumerate().take(s).skip(1) {
        let term = IntPolynomial::binomial_shift(s - k).pow(r);
        // subtracting C(s,k)(-1)^k: odd k adds, even k subtracts
        let signed: BigInt = if k % 2 == 1 { c.clone() } else { -c.clone() };
        acc = &acc + &term.scale(&signed);
    }
    Ok(acc)
}

/// `D(G ⊠ K_r, x) = D(G, (x+1)^r - 1)`.
pub fn strong_with_complete(d_g: &IntPolynomial, r: usize) -> Result<IntPolynomial> {
    if r == 0 {
        return Err(Error::InvalidParameter("strong product with K_0".into()));
    }
    Ok(d_g.compose(&IntPolynomial::binomial_shift(r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn krk2(r: usize) -> IntPolynomial {
        &IntPolynomial::binomial_shift(r).pow(2) + &IntPolynomial::x_pow(r).scale(&2.into())
    }

    fn krk3(r: usize) -> IntPolynomial {
        let tail = &IntPolynomial::linear_power(2, r) - &IntPolynomial::one();
        &IntPolynomial::binomial_shift(r).pow(3)
            + &(&IntPolynomial::x_pow(r) * &tail).scale(&3.into())
    }

    #[test]
    fn special_cases() {
        assert_eq!(kr_ks_poly(3, 2).unwrap(), krk2(3));
        assert_eq!(
            kr_ks_poly(2, 2).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, 6, 4, 1])
        );
        assert_eq!(kr_ks_poly(4, 3).unwrap(), krk3(4));
        assert_eq!(kr_ks_poly(1, 1).unwrap(), IntPolynomial::x());
        assert!(kr_ks_poly(0, 2).is_err());
    }

    #[test]
    fn commutative() {
        for r in 1..=6 {
            for s in 1..=6 {
                assert_eq!(kr_ks_poly(r, s).unwrap(), kr_ks_poly(s, r).unwrap(), "r={r} s={s}");
            }
        }
    }

    #[test]
    fn strong_compose_examples() {
        let k2 = IntPolynomial::from_i64s(&[0, 2, 1]);
        assert_eq!(strong_with_complete(&k2, 1).unwrap(), k2);
        assert_eq!(
            strong_with_complete(&k2, 2).unwrap(),
            IntPolynomial::binomial_shift(4)
        );
        assert!(strong_with_complete(&k2, 0).is_err());
    }
}
