//! Guess-and-verify recurrence mining over exact rationals.
//!
//! Every guesser searches by increasing order, then increasing coefficient
//! degree, solves the ansatz exactly, and returns the first fit. Unknowns
//! left free by an underdetermined system are set to zero, so results are
//! deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{nullspace, solve};
use super::IndexedSequence;
use crate::error::{Error, Result};
use crate::polynomial::{IntPolynomial, RatPolynomial, Rational};

pub const DEFAULT_CFINITE_MARGIN: usize = 4;
pub const DEFAULT_HOLONOMIC_MARGIN: usize = 4;
pub const DEFAULT_POLYX_MARGIN: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceKind {
    /// `a_n = Σ_{j=1}^{k} c_j a_{n-j}` with rational constants `c_j`.
    CFinite,
    /// `D_n(x) = Σ_{j=1}^{k} c_j(x) D_{n-j}(x)` with `c_j ∈ Q[x]`.
    PolyX,
    /// `Σ_{j=0}^{k} c_j(n) a_{n+j} = 0` with `c_j ∈ Q[n]`.
    Holonomic,
}

impl RecurrenceKind {
    fn name(self) -> &'static str {
        match self {
            RecurrenceKind::CFinite => "c-finite",
            RecurrenceKind::PolyX => "poly-x",
            RecurrenceKind::Holonomic => "holonomic",
        }
    }
}

/// A linear recurrence. Constant coefficients are stored as degree-zero
/// polynomials so every kind serializes the same way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceSpec {
    pub kind: RecurrenceKind,
    pub order: usize,
    pub coefficients: Vec<RatPolynomial>,
}

impl RecurrenceSpec {
    pub fn c_finite(coefficients: Vec<Rational>) -> Self {
        Self {
            kind: RecurrenceKind::CFinite,
            order: coefficients.len(),
            coefficients: coefficients.into_iter().map(RatPolynomial::constant).collect(),
        }
    }

    pub fn poly_x(coefficients: Vec<RatPolynomial>) -> Self {
        Self {
            kind: RecurrenceKind::PolyX,
            order: coefficients.len(),
            coefficients,
        }
    }

    /// `coefficients[j]` multiplies `a_{n+j}`.
    pub fn holonomic(coefficients: Vec<RatPolynomial>) -> Self {
        Self {
            kind: RecurrenceKind::Holonomic,
            order: coefficients.len().saturating_sub(1),
            coefficients,
        }
    }

    /// Largest coefficient degree.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .filter_map(RatPolynomial::degree)
            .max()
            .unwrap_or(0)
    }

    fn expected_len(&self) -> usize {
        match self.kind {
            RecurrenceKind::Holonomic => self.order + 1,
            _ => self.order,
        }
    }

    fn check_shape(&self) -> Result<()> {
        if self.order == 0 || self.coefficients.len() != self.expected_len() {
            return Err(Error::InvalidParameter(format!(
                "{} recurrence of order {} with {} coefficients",
                self.kind.name(),
                self.order,
                self.coefficients.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RecurrenceKind::CFinite | RecurrenceKind::PolyX => {
                let var = if self.kind == RecurrenceKind::CFinite { "a" } else { "D" };
                write!(f, "{var}(n) =")?;
                for (j, c) in self.coefficients.iter().enumerate() {
                    let sep = if j == 0 { " " } else { " + " };
                    write!(f, "{sep}({c})·{var}(n-{})", j + 1)?;
                }
                Ok(())
            }
            RecurrenceKind::Holonomic => {
                for (j, c) in self.coefficients.iter().enumerate() {
                    let sep = if j == 0 { "" } else { " + " };
                    let c = c.to_string().replace('x', "n");
                    if j == 0 {
                        write!(f, "{sep}({c})·a(n)")?;
                    } else {
                        write!(f, "{sep}({c})·a(n+{j})")?;
                    }
                }
                write!(f, " = 0")
            }
        }
    }
}

fn too_few(needed: usize, got: usize) -> Result<()> {
    if got < needed {
        Err(Error::TooFewTerms { needed, got })
    } else {
        Ok(())
    }
}

fn rat(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

pub fn guess_cfinite(seq: &IndexedSequence, max_order: usize) -> Result<Option<RecurrenceSpec>> {
    guess_cfinite_with_margin(seq, max_order, DEFAULT_CFINITE_MARGIN)
}

/// Minimal-order constant-coefficient recurrence; needs at least
/// `2 * max_order + margin` terms.
pub fn guess_cfinite_with_margin(
    seq: &IndexedSequence,
    max_order: usize,
    margin: usize,
) -> Result<Option<RecurrenceSpec>> {
    if max_order == 0 {
        return Err(Error::InvalidParameter("max_order must be at least 1".into()));
    }
    let a = &seq.terms;
    too_few(2 * max_order + margin, a.len())?;
    for k in 1..=max_order {
        let rows: Vec<Vec<Rational>> = (k..a.len())
            .map(|n| (1..=k).map(|j| rat(&a[n - j])).collect())
            .collect();
        let rhs: Vec<Rational> = (k..a.len()).map(|n| rat(&a[n])).collect();
        if let Some(c) = solve(rows, rhs, k) {
            return Ok(Some(RecurrenceSpec::c_finite(c)));
        }
    }
    Ok(None)
}

pub fn guess_holonomic(
    seq: &IndexedSequence,
    max_order: usize,
    max_degree: usize,
) -> Result<Option<RecurrenceSpec>> {
    guess_holonomic_with_margin(seq, max_order, max_degree, DEFAULT_HOLONOMIC_MARGIN)
}

/// Minimal `(order, degree)` recurrence `Σ_j c_j(n) a_{n+j} = 0`, where `n`
/// is the true sequence index (`seq.start` for the first term).
pub fn guess_holonomic_with_margin(
    seq: &IndexedSequence,
    max_order: usize,
    max_degree: usize,
    margin: usize,
) -> Result<Option<RecurrenceSpec>> {
    if max_order == 0 {
        return Err(Error::InvalidParameter("max_order must be at least 1".into()));
    }
    let a = &seq.terms;
    let unknowns = (max_order + 1) * (max_degree + 1);
    too_few(max_order + unknowns - 1 + margin, a.len())?;
    for k in 1..=max_order {
        for d in 0..=max_degree {
            let cols = (k + 1) * (d + 1);
            let rows: Vec<Vec<Rational>> = (0..a.len() - k)
                .map(|i| {
                    let n = Rational::from_integer(BigInt::from(seq.start + i as i64));
                    let mut row = Vec::with_capacity(cols);
                    for j in 0..=k {
                        let mut pow = Rational::one();
                        for _ in 0..=d {
                            row.push(&pow * rat(&a[i + j]));
                            pow *= &n;
                        }
                    }
                    row
                })
                .collect();
            let basis = nullspace(rows, cols);
            let to_polys = |v: &[Rational]| -> Vec<RatPolynomial> {
                v.chunks(d + 1)
                    .map(|c| RatPolynomial::from_coeffs(c.to_vec()))
                    .collect()
            };
            let chosen = basis
                .iter()
                .find(|v| {
                    let p = to_polys(v);
                    !p[0].is_zero() && !p[k].is_zero()
                })
                .or(basis.first());
            if let Some(v) = chosen {
                let polys = normalize_primitive(to_polys(v));
                return Ok(Some(RecurrenceSpec::holonomic(polys)));
            }
        }
    }
    Ok(None)
}

/// Scales to integral coefficients with unit content and a positive leading
/// coefficient on the last nonzero polynomial.
fn normalize_primitive(polys: Vec<RatPolynomial>) -> Vec<RatPolynomial> {
    let all: Vec<&Rational> = polys.iter().flat_map(|p| p.coeffs()).collect();
    let lcm = all
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = all.iter().map(|c| (*c * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if gcd.is_zero() {
        return polys;
    }
    let sign_ref = polys
        .iter()
        .rev()
        .find_map(|p| p.coeffs().last())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    let mut scale = Rational::new(lcm, gcd);
    if sign_ref {
        scale = -scale;
    }
    polys.iter().map(|p| p.scale(&scale)).collect()
}

pub fn guess_polyx_recurrence(
    polys: &[IntPolynomial],
    max_order: usize,
    max_coeff_degree: usize,
) -> Result<Option<RecurrenceSpec>> {
    guess_polyx_recurrence_with_margin(polys, max_order, max_coeff_degree, DEFAULT_POLYX_MARGIN)
}

/// Minimal recurrence `D_n = Σ_{j=1}^{k} c_j(x) D_{n-j}` holding as a
/// polynomial identity for every supplied `n >= k`. Each power of `x` in
/// each instance is one linear constraint.
pub fn guess_polyx_recurrence_with_margin(
    polys: &[IntPolynomial],
    max_order: usize,
    max_coeff_degree: usize,
    margin: usize,
) -> Result<Option<RecurrenceSpec>> {
    if max_order == 0 {
        return Err(Error::InvalidParameter("max_order must be at least 1".into()));
    }
    too_few(2 * max_order + margin, polys.len())?;
    let max_deg = polys.iter().filter_map(IntPolynomial::degree).max().unwrap_or(0);
    for k in 1..=max_order {
        for d in 0..=max_coeff_degree {
            let unknowns = k * (d + 1);
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for n in k..polys.len() {
                for m in 0..=max_deg + d {
                    let mut row = Vec::with_capacity(unknowns);
                    for j in 1..=k {
                        for e in 0..=d {
                            row.push(rat(&polys[n - j].coefficient(m as i64 - e as i64)));
                        }
                    }
                    rows.push(row);
                    rhs.push(rat(&polys[n].coefficient(m as i64)));
                }
            }
            if let Some(u) = solve(rows, rhs, unknowns) {
                let coefficients = u
                    .chunks(d + 1)
                    .map(|c| RatPolynomial::from_coeffs(c.to_vec()))
                    .collect();
                return Ok(Some(RecurrenceSpec::poly_x(coefficients)));
            }
        }
    }
    Ok(None)
}

/// Data a recurrence can be checked against.
#[derive(Clone, Copy, Debug)]
pub enum RecurrenceData<'a> {
    Sequence(&'a IndexedSequence),
    Polynomials { start: usize, polys: &'a [IntPolynomial] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    /// Number of recurrence instances checked.
    pub checked: usize,
    /// Index of the newest term in the first violated instance.
    pub first_failure: Option<i64>,
}

/// Exact re-substitution of the recurrence at every applicable index.
pub fn verify_recurrence(data: RecurrenceData<'_>, rec: &RecurrenceSpec) -> Result<VerifyReport> {
    rec.check_shape()?;
    let k = rec.order;
    let mut checked = 0;
    let mut first_failure = None;
    match (data, rec.kind) {
        (RecurrenceData::Sequence(seq), RecurrenceKind::CFinite) => {
            let c: Vec<Rational> = rec.coefficients.iter().map(|p| p.coefficient(0)).collect();
            for n in k..seq.terms.len() {
                let predicted: Rational = (1..=k).map(|j| &c[j - 1] * rat(&seq.terms[n - j])).sum();
                checked += 1;
                if predicted != rat(&seq.terms[n]) {
                    first_failure = Some(seq.start + n as i64);
                    break;
                }
            }
        }
        (RecurrenceData::Sequence(seq), RecurrenceKind::Holonomic) => {
            for i in 0..seq.terms.len().saturating_sub(k) {
                let n = Rational::from_integer(BigInt::from(seq.start + i as i64));
                let total: Rational = (0..=k)
                    .map(|j| rec.coefficients[j].eval(&n) * rat(&seq.terms[i + j]))
                    .sum();
                checked += 1;
                if !total.is_zero() {
                    first_failure = Some(seq.start + (i + k) as i64);
                    break;
                }
            }
        }
        (RecurrenceData::Polynomials { start, polys }, RecurrenceKind::PolyX) => {
            let polys: Vec<RatPolynomial> = polys.iter().map(IntPolynomial::to_rational).collect();
            for n in k..polys.len() {
                let predicted = (1..=k).fold(RatPolynomial::zero(), |acc, j| {
                    &acc + &(&rec.coefficients[j - 1] * &polys[n - j])
                });
                checked += 1;
                if predicted != polys[n] {
                    first_failure = Some((start + n) as i64);
                    break;
                }
            }
        }
        (data, kind) => {
            return Err(Error::KindMismatch {
                recurrence: kind.name(),
                data: match data {
                    RecurrenceData::Sequence(_) => "integer sequence",
                    RecurrenceData::Polynomials { .. } => "polynomial sequence",
                },
            })
        }
    }
    Ok(VerifyReport {
        passed: first_failure.is_none(),
        checked,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{cycle_poly, ladder_poly, path_poly};
    use crate::polynomial::binomial;

    fn seq(start: i64, terms: Vec<BigInt>) -> IndexedSequence {
        IndexedSequence { start, terms }
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn fib(n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(), BigInt::one()];
        while v.len() < n {
            let next = &v[v.len() - 1] + &v[v.len() - 2];
            v.push(next);
        }
        v
    }

    #[test]
    fn cfinite_examples() {
        let rec = guess_cfinite(&seq(0, fib(10)), 2).unwrap().unwrap();
        assert_eq!(rec, RecurrenceSpec::c_finite(vec![q(1), q(1)]));

        let rec = guess_cfinite(&seq(0, ints(&[7; 10])), 2).unwrap().unwrap();
        assert_eq!(rec, RecurrenceSpec::c_finite(vec![q(1)]));

        let ones: Vec<BigInt> = (1..=12)
            .map(|n| ladder_poly(n).unwrap().coefficient(2 * n as i64))
            .collect();
        assert_eq!(guess_cfinite(&seq(1, ones), 3).unwrap().unwrap().order, 1);
    }

    #[test]
    fn cfinite_needs_data() {
        let err = guess_cfinite(&seq(0, fib(7)), 2).unwrap_err();
        assert_eq!(err, Error::TooFewTerms { needed: 8, got: 7 });
        // no order-1 fit for Fibonacci
        assert_eq!(guess_cfinite(&seq(0, fib(10)), 1).unwrap(), None);
    }

    #[test]
    fn cfinite_shift_stable() {
        // a_n = 2a_{n-1} + 3a_{n-2} - a_{n-3}
        let mut v = ints(&[1, 0, 2]);
        for n in 3..20 {
            let next = &v[n - 1] * 2 + &v[n - 2] * 3 - &v[n - 3];
            v.push(next);
        }
        let a = guess_cfinite(&seq(0, v[..16].to_vec()), 4).unwrap();
        let b = guess_cfinite(&seq(1, v[1..17].to_vec()), 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.unwrap(), RecurrenceSpec::c_finite(vec![q(2), q(3), q(-1)]));
    }

    #[test]
    fn holonomic_central_binomial() {
        let terms: Vec<BigInt> = (1..=15).map(|n| binomial(2 * n, n)).collect();
        let s = seq(1, terms);
        let rec = guess_holonomic(&s, 1, 1).unwrap().unwrap();
        assert_eq!((rec.order, rec.degree()), (1, 1));
        // (4n+2) a_n - (n+1) a_{n+1} = 0, normalized with positive lead on c_1
        let expected = RecurrenceSpec::holonomic(vec![
            RatPolynomial::from_coeffs(vec![q(-2), q(-4)]),
            RatPolynomial::from_coeffs(vec![q(1), q(1)]),
        ]);
        assert_eq!(rec, expected);
        assert!(verify_recurrence(RecurrenceData::Sequence(&s), &rec).unwrap().passed);
    }

    #[test]
    fn holonomic_simple_sequences() {
        let mut fact = vec![BigInt::one()];
        for n in 1..14 {
            let next = &fact[n - 1] * n;
            fact.push(next);
        }
        let rec = guess_holonomic(&seq(0, fact), 1, 1).unwrap().unwrap();
        assert_eq!((rec.order, rec.degree()), (1, 1));

        let pow2: Vec<BigInt> = (0..12).map(|n| BigInt::from(2).pow(n)).collect();
        let rec = guess_holonomic(&seq(0, pow2), 1, 1).unwrap().unwrap();
        assert_eq!((rec.order, rec.degree()), (1, 0));

        assert!(matches!(
            guess_holonomic(&seq(0, ints(&[1, 2, 3])), 1, 1),
            Err(Error::TooFewTerms { .. })
        ));
    }

    #[test]
    fn polyx_examples() {
        let x = RatPolynomial::from_coeffs(vec![q(0), q(1)]);
        let paths: Vec<IntPolynomial> = (0..=12).map(path_poly).collect();
        let rec = guess_polyx_recurrence(&paths, 3, 1).unwrap().unwrap();
        assert_eq!(rec, RecurrenceSpec::poly_x(vec![x.clone(), x.clone(), x.clone()]));

        let cycles: Vec<IntPolynomial> = (3..=14).map(|n| cycle_poly(n).unwrap()).collect();
        let rec = guess_polyx_recurrence(&cycles, 3, 1).unwrap().unwrap();
        assert_eq!(rec, RecurrenceSpec::poly_x(vec![x.clone(), x.clone(), x]));
    }

    #[test]
    fn verify_detects_perturbation() {
        let x = RatPolynomial::from_coeffs(vec![q(0), q(1)]);
        let rec = RecurrenceSpec::poly_x(vec![x.clone(), x.clone(), x]);
        let mut paths: Vec<IntPolynomial> = (0..=10).map(path_poly).collect();
        let ok = verify_recurrence(RecurrenceData::Polynomials { start: 0, polys: &paths }, &rec)
            .unwrap();
        assert_eq!((ok.passed, ok.checked), (true, 8));
        paths[7] = &paths[7] + &IntPolynomial::one();
        let bad = verify_recurrence(RecurrenceData::Polynomials { start: 0, polys: &paths }, &rec)
            .unwrap();
        assert_eq!(bad.first_failure, Some(7));

        let mut f = fib(12);
        f[9] += 1;
        let rec = RecurrenceSpec::c_finite(vec![q(1), q(1)]);
        let r = verify_recurrence(RecurrenceData::Sequence(&seq(0, f)), &rec).unwrap();
        assert_eq!(r.first_failure, Some(9));
    }

    #[test]
    fn verify_kind_mismatch() {
        let rec = RecurrenceSpec::c_finite(vec![q(1)]);
        let polys = [IntPolynomial::one()];
        assert!(matches!(
            verify_recurrence(RecurrenceData::Polynomials { start: 0, polys: &polys }, &rec),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let rec = RecurrenceSpec::c_finite(vec![q(1), Rational::new(1.into(), 2.into())]);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(json, r#"{"kind":"c-finite","order":2,"coefficients":[["1"],["1/2"]]}"#);
        let back: RecurrenceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}
