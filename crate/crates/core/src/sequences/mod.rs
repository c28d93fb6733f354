//! Coefficient sequences of graph families and recurrence mining.

mod guess;
mod linalg;

pub use guess::{
    guess_cfinite, guess_cfinite_with_margin, guess_holonomic, guess_holonomic_with_margin,
    guess_polyx_recurrence, guess_polyx_recurrence_with_margin, verify_recurrence,
    RecurrenceData, RecurrenceKind, RecurrenceSpec, VerifyReport, DEFAULT_CFINITE_MARGIN,
    DEFAULT_HOLONOMIC_MARGIN, DEFAULT_POLYX_MARGIN,
};

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::GraphExpr;
use crate::method::{compute, Caps, Method};
use crate::polynomial::{parse_rational, IntPolynomial, Rational};

/// A graph expression in the parameter `n` together with the range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub expr: GraphExpr,
    pub range: RangeInclusive<usize>,
}

impl FamilySpec {
    pub fn parse(expr: &str, range: RangeInclusive<usize>) -> Result<Self> {
        Ok(Self {
            expr: GraphExpr::parse(expr)?,
            range,
        })
    }
}

/// Polynomials `D(G_n)` for consecutive `n` starting at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyData {
    pub start: usize,
    pub polys: Vec<IntPolynomial>,
    /// `|V(G_n)|` for each member.
    pub sizes: Vec<usize>,
    pub methods: Vec<Method>,
}

/// Computes every member of the family; members run in parallel and are
/// collected in order of `n`.
pub fn family_polynomials(f: &FamilySpec, method: Method, caps: &Caps) -> Result<FamilyData> {
    let ns: Vec<usize> = f.range.clone().collect();
    let members: Vec<(IntPolynomial, usize, Method)> = ns
        .par_iter()
        .map(|&n| {
            let at = |source: Error| Error::AtParameter {
                n,
                source: Box::new(source),
            };
            let shape = f.expr.instantiate(n).map_err(at)?;
            let size = shape.vertex_count().map_err(at)?;
            let c = compute(&shape, method, caps).map_err(at)?;
            Ok((c.polynomial, size, c.method))
        })
        .collect::<Result<_>>()?;
    let mut data = FamilyData {
        start: *f.range.start(),
        polys: Vec::with_capacity(members.len()),
        sizes: Vec::with_capacity(members.len()),
        methods: Vec::with_capacity(members.len()),
    };
    for (p, s, m) in members {
        data.polys.push(p);
        data.sizes.push(s);
        data.methods.push(m);
    }
    Ok(data)
}

/// Integer terms `a_start, a_{start+1}, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedSequence {
    pub start: i64,
    #[serde(serialize_with = "decimal_strings")]
    pub terms: Vec<BigInt>,
}

fn decimal_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(BigInt::to_string))
}

impl IndexedSequence {
    pub fn new(start: i64, terms: Vec<BigInt>) -> Self {
        Self { start, terms }
    }

    pub fn indexed(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().enumerate().map(|(i, t)| (self.start + i as i64, t))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, t) in self.indexed() {
            let _ = writeln!(out, "{n},{t}");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    Floor,
    Ceil,
}

impl Rounding {
    fn apply(self, v: &Rational) -> BigInt {
        match self {
            Rounding::Floor => v.floor().to_integer(),
            Rounding::Ceil => v.ceil().to_integer(),
        }
    }
}

/// Selects coefficient `round(q·n + p)` of member `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffIndexSpec {
    pub q: Rational,
    pub p: Rational,
    pub rounding: Rounding,
}

impl CoeffIndexSpec {
    pub fn new(q: Rational, p: Rational) -> Self {
        Self {
            q,
            p,
            rounding: Rounding::Floor,
        }
    }

    /// Parses affine expressions such as `n`, `2n+1`, `n/2+1/2`, `3` or `-n+4`.
    pub fn parse(src: &str, rounding: Rounding) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty coefficient index".into(),
            });
        }
        let mut q = Rational::zero();
        let mut p = Rational::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                continue;
            }
            let term = &s[start..i];
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let bad = |msg: &str| Error::Parse {
                position: start,
                message: format!("{msg} in coefficient index {src:?}"),
            };
            if body.is_empty() {
                return Err(bad("empty term"));
            }
            let sign = Rational::from_integer(sign.into());
            if let Some(k) = body.find('n') {
                let before = body[..k].trim_end_matches('*');
                let after = &body[k + 1..];
                let mut c = match before {
                    "" => Rational::from_integer(1.into()),
                    b => parse_rational(b).map_err(|_| bad("bad coefficient"))?,
                };
                if let Some(d) = after.strip_prefix('/') {
                    c /= parse_rational(d).map_err(|_| bad("bad divisor"))?;
                } else if !after.is_empty() {
                    return Err(bad("unexpected text after n"));
                }
                q += sign * c;
            } else {
                p += sign * parse_rational(body).map_err(|_| bad("bad constant"))?;
            }
            start = i;
        }
        Ok(Self { q, p, rounding })
    }

    pub fn index(&self, n: i64) -> BigInt {
        let v = &self.q * Rational::from_integer(n.into()) + &self.p;
        self.rounding.apply(&v)
    }
}

fn coefficient_at(p: &IntPolynomial, i: &BigInt) -> BigInt {
    i.to_i64().map(|i| p.coefficient(i)).unwrap_or_else(BigInt::zero)
}

/// Term `n` is the coefficient of `x^round(q·n + p)` in `polys[n - start]`.
pub fn extract_coeff_sequence(
    start: usize,
    polys: &[IntPolynomial],
    spec: &CoeffIndexSpec,
) -> IndexedSequence {
    let terms = polys
        .iter()
        .enumerate()
        .map(|(i, p)| coefficient_at(p, &spec.index((start + i) as i64)))
        .collect();
    IndexedSequence::new(start as i64, terms)
}

/// Term `n` counts dominating sets of `G_n` with at most
/// `⌊q'·sizes[n] + p'⌋` vertices.
pub fn partial_sum_sequence(
    start: usize,
    polys: &[IntPolynomial],
    q: &Rational,
    p: &Rational,
    sizes: &[usize],
) -> Result<IndexedSequence> {
    if sizes.len() != polys.len() {
        return Err(Error::InvalidParameter(format!(
            "{} sizes for {} polynomials",
            sizes.len(),
            polys.len()
        )));
    }
    let terms = polys
        .iter()
        .zip(sizes)
        .map(|(poly, &size)| {
            let bound = (q * Rational::from_integer(size.into()) + p).floor().to_integer();
            match bound.to_i64() {
                Some(b) if b >= 0 => {
                    let b = b.min(poly.coeffs().len() as i64) as usize;
                    poly.coeffs().iter().take(b + 1).sum()
                }
                Some(_) => BigInt::zero(),
                None => poly.coeffs().iter().sum(),
            }
        })
        .collect();
    Ok(IndexedSequence::new(start as i64, terms))
}

/// Domination numbers read off as the lowest nonzero coefficient.
pub fn domination_number_sequence(start: usize, polys: &[IntPolynomial]) -> Result<IndexedSequence> {
    let terms = polys
        .iter()
        .map(|p| p.min_support().map(BigInt::from))
        .collect::<Result<_>>()?;
    Ok(IndexedSequence::new(start as i64, terms))
}

/// `γ(P_n □ K_2) = ⌈(n+1)/2⌉`.
pub fn ladder_domination_number(n: usize) -> usize {
    (n + 2) / 2
}

/// The large-`n` value `⌊(6n+8)/5⌋` for the `5 × n` grid.
pub fn grid5_reference(n: usize) -> usize {
    (6 * n + 8) / 5
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub n: usize,
    pub gamma: usize,
    pub reference: usize,
    pub matches: bool,
}

/// Computes `γ(P_5 □ P_n)` by brute force next to the large-`n` reference.
/// Small `n` are expected to deviate; this is a report, not a check.
pub fn grid5_report(ns: RangeInclusive<usize>, caps: &Caps) -> Result<Vec<GridRow>> {
    let oracle = caps.oracle()?;
    ns.map(|n| {
        let g = crate::graph::product(
            crate::graph::ProductKind::Cartesian,
            &crate::graph::Graph::path(5)?,
            &crate::graph::Graph::path(n)?,
            caps.product,
        )?
        .0;
        let gamma = oracle.domination_number(&g)?;
        let reference = grid5_reference(n);
        Ok(GridRow {
            n,
            gamma,
            reference,
            matches: gamma == reference,
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{kr_ks_poly, ladder_poly, path_poly};
    use crate::polynomial::binomial;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn family_examples() {
        let caps = Caps::default();
        let f = FamilySpec::parse("P:n", 0..=3).unwrap();
        let d = family_polynomials(&f, Method::Recurrence, &caps).unwrap();
        assert_eq!(
            d.polys,
            vec![
                IntPolynomial::one(),
                IntPolynomial::x(),
                IntPolynomial::from_i64s(&[0, 2, 1]),
                IntPolynomial::from_i64s(&[0, 1, 3, 1]),
            ]
        );
        assert_eq!(d.sizes, vec![0, 1, 2, 3]);

        let f = FamilySpec::parse("cart(P:n,K:2)", 1..=6).unwrap();
        let brute = family_polynomials(&f, Method::Brute, &caps).unwrap();
        let rec = family_polynomials(&f, Method::Recurrence, &caps).unwrap();
        assert_eq!(brute.polys, rec.polys);

        let f = FamilySpec::parse("cart(K:n,K:2)", 1..=4).unwrap();
        let formula = family_polynomials(&f, Method::Formula, &caps).unwrap();
        assert_eq!(formula.polys, family_polynomials(&f, Method::Brute, &caps).unwrap().polys);
    }

    #[test]
    fn family_errors_carry_n() {
        let f = FamilySpec::parse("P:n", 20..=30).unwrap();
        let err = family_polynomials(&f, Method::Brute, &Caps::default()).unwrap_err();
        assert!(err.is_capacity());
        assert!(matches!(err, Error::AtParameter { n: 27, .. }));
    }

    #[test]
    fn coeff_index_parsing() {
        let s = CoeffIndexSpec::parse("n/2+1/2", Rounding::Floor).unwrap();
        assert_eq!((s.q.clone(), s.p.clone()), (q(1, 2), q(1, 2)));
        assert_eq!(s.index(4), BigInt::from(2));
        let s = CoeffIndexSpec::parse("2n + 1", Rounding::Ceil).unwrap();
        assert_eq!((s.q.clone(), s.p.clone()), (q(2, 1), q(1, 1)));
        let s = CoeffIndexSpec::parse("-n+4", Rounding::Floor).unwrap();
        assert_eq!(s.index(1), BigInt::from(3));
        assert!(CoeffIndexSpec::parse("2m", Rounding::Floor).is_err());
        assert!(CoeffIndexSpec::parse("", Rounding::Floor).is_err());
        let s = CoeffIndexSpec::parse("2*n", Rounding::Floor).unwrap();
        assert_eq!(s.q, q(2, 1));
    }

    #[test]
    fn central_binomial_extraction() {
        let polys: Vec<IntPolynomial> = (1..=12).map(|n| kr_ks_poly(n, 2).unwrap()).collect();
        let seq = extract_coeff_sequence(1, &polys, &CoeffIndexSpec::parse("n", Rounding::Floor).unwrap());
        let expected: Vec<BigInt> = (1..=12).map(|n| binomial(2 * n, n)).collect();
        assert_eq!(seq.terms, expected);
        assert_eq!(seq.to_csv().lines().next(), Some("n,value"));
        assert_eq!(seq.to_csv().lines().nth(1), Some("1,2"));
    }

    #[test]
    fn leading_coefficients_are_one() {
        let polys: Vec<IntPolynomial> = (0..8).map(|_| path_poly(5)).collect();
        let seq = extract_coeff_sequence(0, &polys, &CoeffIndexSpec::new(q(0, 1), q(5, 1)));
        assert!(seq.terms.iter().all(|t| *t == BigInt::from(1)));
        // out of range reads as zero
        let seq = extract_coeff_sequence(0, &polys, &CoeffIndexSpec::new(q(0, 1), q(9, 1)));
        assert!(seq.terms.iter().all(Zero::is_zero));
    }

    #[test]
    fn path_thirds() {
        let polys: Vec<IntPolynomial> = (0..=6).map(|n| path_poly(3 * n)).collect();
        let seq = extract_coeff_sequence(0, &polys, &CoeffIndexSpec::new(q(1, 1), q(0, 1)));
        let expected: Vec<BigInt> = (0..=6).map(|n| path_poly(3 * n).coefficient(n as i64)).collect();
        assert_eq!(seq.terms, expected);
        assert_eq!(seq.terms[0], BigInt::from(1));
        assert_eq!(seq.terms[1], BigInt::from(1));
    }

    #[test]
    fn partial_sums() {
        let polys: Vec<IntPolynomial> = (1..=8).map(|n| ladder_poly(n).unwrap()).collect();
        let sizes: Vec<usize> = (1..=8).map(|n| 2 * n).collect();
        let full = partial_sum_sequence(1, &polys, &q(1, 1), &q(0, 1), &sizes).unwrap();
        for (t, p) in full.terms.iter().zip(&polys) {
            assert_eq!(*t, p.eval_int(&BigInt::from(1)));
        }
        let d0 = partial_sum_sequence(1, &polys, &q(0, 1), &q(0, 1), &sizes).unwrap();
        assert!(d0.terms.iter().all(Zero::is_zero));
        let null = partial_sum_sequence(0, &[IntPolynomial::one()], &q(0, 1), &q(0, 1), &[0]).unwrap();
        assert_eq!(null.terms, vec![BigInt::from(1)]);

        let half = partial_sum_sequence(1, &polys, &q(1, 2), &q(1, 2), &sizes).unwrap();
        for (i, (t, p)) in half.terms.iter().zip(&polys).enumerate() {
            let bound = i + 1;
            let direct: BigInt = (0..=bound as i64).map(|k| p.coefficient(k)).sum();
            assert_eq!(*t, direct);
        }
        assert!(partial_sum_sequence(1, &polys, &q(1, 1), &q(0, 1), &sizes[..3]).is_err());
    }

    #[test]
    fn ladder_gamma() {
        let polys: Vec<IntPolynomial> = (1..=14).map(|n| ladder_poly(n).unwrap()).collect();
        let seq = domination_number_sequence(1, &polys).unwrap();
        for (n, g) in seq.indexed() {
            assert_eq!(*g, BigInt::from(ladder_domination_number(n as usize)));
        }
    }

    #[test]
    fn grid_report_runs() {
        let rows = grid5_report(1..=3, &Caps::default()).unwrap();
        assert_eq!(rows[0].gamma, 2);
        assert_eq!(rows.len(), 3);
    }
}
