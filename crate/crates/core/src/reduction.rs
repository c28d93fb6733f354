//! Recovering `D(G, x)` from an oracle for `D(-, γ)` at a single point.
//!
//! Since `D(G ⊠ K_r, γ) = D(G, (1+γ)^r - 1)`, querying the oracle on
//! `G ⊠ K_1, ..., G ⊠ K_{n+1}` gives `n + 1` values of `D(G, x)` at distinct
//! abscissae, which determine the polynomial.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{product, Graph, ProductKind};
use crate::oracle::BruteForce;
use crate::polynomial::{lagrange_interpolate, IntPolynomial, Rational};

/// Answers `D(H, γ)` for a fixed `γ`.
pub trait EvaluationOracle: Sync {
    fn gamma(&self) -> &Rational;
    fn evaluate(&self, g: &Graph) -> Result<Rational>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BruteMode {
    /// Plain subset enumeration within the cap, twin classes beyond it.
    #[default]
    Auto,
    Plain,
    TwinClasses,
}

/// Evaluates the exact domination polynomial by enumeration.
#[derive(Clone, Debug)]
pub struct BruteForceEvaluator {
    gamma: Rational,
    oracle: BruteForce,
    mode: BruteMode,
}

impl BruteForceEvaluator {
    pub fn new(gamma: Rational) -> Self {
        Self::with_oracle(gamma, BruteForce::default(), BruteMode::Auto)
    }

    pub fn with_oracle(gamma: Rational, oracle: BruteForce, mode: BruteMode) -> Self {
        Self { gamma, oracle, mode }
    }
}

impl EvaluationOracle for BruteForceEvaluator {
    fn gamma(&self) -> &Rational {
        &self.gamma
    }

    fn evaluate(&self, g: &Graph) -> Result<Rational> {
        let plain = match self.mode {
            BruteMode::Plain => true,
            BruteMode::TwinClasses => false,
            BruteMode::Auto => g.n() <= self.oracle.cap(),
        };
        let poly = if plain {
            self.oracle.domination_polynomial(g)?
        } else {
            self.oracle.twin_class_polynomial(g)?
        };
        Ok(poly.eval_rational(&self.gamma))
    }
}

/// Wraps a closure as an oracle.
pub struct FnEvaluator<F> {
    gamma: Rational,
    f: F,
}

impl<F> FnEvaluator<F>
where
    F: Fn(&Graph) -> Result<Rational> + Sync,
{
    pub fn new(gamma: Rational, f: F) -> Self {
        Self { gamma, f }
    }
}

impl<F> EvaluationOracle for FnEvaluator<F>
where
    F: Fn(&Graph) -> Result<Rational> + Sync,
{
    fn gamma(&self) -> &Rational {
        &self.gamma
    }

    fn evaluate(&self, g: &Graph) -> Result<Rational> {
        (self.f)(g)
    }
}

/// Rejects `γ ∈ {0, -1, -2}`.
pub fn check_gamma(gamma: &Rational) -> Result<()> {
    let forbidden = [0i64, -1, -2].map(|v| Rational::from_integer(v.into()));
    if forbidden.contains(gamma) {
        return Err(Error::RejectedGamma(gamma.to_string()));
    }
    Ok(())
}

/// `(1+γ)^r - 1` for `r = 1..=count`, checked pairwise distinct.
pub fn abscissae(gamma: &Rational, count: usize) -> Result<Vec<Rational>> {
    check_gamma(gamma)?;
    if count == 0 {
        return Err(Error::InvalidParameter("abscissa count must be at least 1".into()));
    }
    let base = Rational::one() + gamma;
    let mut power = Rational::one();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        power *= &base;
        out.push(&power - Rational::one());
    }
    let mut sorted = out.clone();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0].to_string()));
    }
    Ok(out)
}

fn as_string<T: ToString, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub r: usize,
    pub vertices: usize,
    #[serde(serialize_with = "as_string")]
    pub abscissa: Rational,
    #[serde(serialize_with = "as_string")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    #[serde(serialize_with = "as_string")]
    pub gamma: Rational,
    pub steps: Vec<ReductionStep>,
    pub polynomial: IntPolynomial,
}

impl ReductionTrace {
    pub fn queries(&self) -> usize {
        self.steps.len()
    }
}

/// Queries the oracle on `G ⊠ K_r` for `r = 1..=|V(G)|+1` and interpolates.
pub fn interpolation_reduction(
    g: &Graph,
    oracle: &dyn EvaluationOracle,
    product_cap: usize,
) -> Result<ReductionTrace> {
    let gamma = oracle.gamma().clone();
    let xs = abscissae(&gamma, g.n() + 1)?;
    let steps: Vec<ReductionStep> = xs
        .into_par_iter()
        .enumerate()
        .map(|(i, abscissa)| {
            let r = i + 1;
            let (h, _) = product(ProductKind::Strong, g, &Graph::complete(r)?, product_cap)?;
            let value = oracle.evaluate(&h)?;
            Ok(ReductionStep {
                r,
                vertices: h.n(),
                abscissa,
                value,
            })
        })
        .collect::<Result<_>>()?;
    let points: Vec<(Rational, Rational)> = steps
        .iter()
        .map(|s| (s.abscissa.clone(), s.value.clone()))
        .collect();
    let interpolated = lagrange_interpolate(&points)?;
    let polynomial = interpolated.to_integral().map_err(|e| {
        Error::OracleInconsistency(format!("interpolated polynomial {interpolated} ({e})"))
    })?;
    if g.n() > 0 && !polynomial.coefficient(0).is_zero() {
        return Err(Error::OracleInconsistency(format!(
            "recovered {polynomial} has a nonzero constant term"
        )));
    }
    Ok(ReductionTrace {
        gamma,
        steps,
        polynomial,
    })
}
