//! Exact univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored densely, lowest degree first, and are always
//! normalized so the last stored coefficient is nonzero. The zero polynomial
//! is the empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses `a/b` or a bare integer. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |message: &str| Error::Parse {
        position: 0,
        message: format!("{message}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid rational numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("invalid rational denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Row `n` of Pascal's triangle, `C(n, 0) ..= C(n, n)`.
pub fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    pascal_row(n).swap_remove(k)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let len = terms.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); len];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `(x + 1)^r - 1`, the domination polynomial of `K_r`.
    pub fn binomial_shift(r: usize) -> Self {
        let mut row = pascal_row(r);
        row[0] -= 1;
        Self::from_coeffs(row)
    }

    /// `(x + c)^k`
    pub fn linear_power(c: i64, k: usize) -> Self {
        Self::from_i64s(&[c, 1]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`; zero whenever `i` is out of range.
    pub fn coefficient(&self, i: i64) -> BigInt {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Least exponent with a nonzero coefficient.
    pub fn min_support(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(q(x))`, by Horner's scheme.
    pub fn compose(&self, q: &IntPolynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// Returns `s` with `self = q * s`, failing unless the division is exact.
    pub fn exact_divide(&self, q: &IntPolynomial) -> Result<Self> {
        let lead = q.leading_coefficient().ok_or(Error::DivisionByZero)?;
        let dq = q.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dq {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision(format!("({self}) / ({q})")))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dq];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({q})")));
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &c * qc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({q})")));
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn eval_rational(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Decimal strings, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.as_ref().trim().parse::<BigInt>().map_err(|_| Error::Parse {
                    position: i,
                    message: format!("invalid integer coefficient {:?}", s.as_ref()),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::from_coeffs(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned_binops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_binops!(IntPolynomial);
forward_owned_binops!(RatPolynomial);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

fn write_terms<C, F>(f: &mut fmt::Formatter<'_>, coeffs: &[C], is_zero: F) -> fmt::Result
where
    C: fmt::Display + Signed,
    F: Fn(&C) -> bool,
{
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one();
        match k {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "x")?,
            1 => write!(f, "{mag}x")?,
            _ if unit => write!(f, "x^{k}")?,
            _ => write!(f, "{mag}x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, Zero::is_zero)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Converts to an integer polynomial; any non-integral coefficient is an error.
    pub fn to_integral(&self) -> Result<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPolynomial::from_coeffs)
    }

    /// Coefficients as `a` or `a/b` strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        p.to_rational()
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        RatPolynomial::from_coeffs(out)
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, Zero::is_zero)
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

impl Serialize for RatPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// The unique polynomial of degree below `points.len()` through every point.
///
/// Uses Newton divided differences over exact rationals.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<RatPolynomial> {
    if points.is_empty() {
        return Err(Error::InvalidParameter(
            "interpolation needs at least one point".into(),
        ));
    }
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| a == b) {
            return Err(Error::DuplicateAbscissa(a.to_string()));
        }
    }
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Newton form: table[0] + table[1](x - x0) + table[2](x - x0)(x - x1) + ...
    let mut acc = RatPolynomial::constant(table[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = RatPolynomial::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &factor) + &RatPolynomial::constant(table[i].clone());
    }
    Ok(acc)
}
