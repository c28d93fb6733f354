//! `D(G □ K_2)` as a sum over vertex subsets `W` of the first copy of `G`.
//!
//! For each `W` the copy-two vertices outside `N[W]` are forced, and the
//! remaining freedom is counted on the auxiliary graph `J_W`:
//!
//! ```text
//! term(W) = x^{|V| - |N(W)|} · [D(J/z) + D(J - N[z]) + D(J) - D(J - z)] / (x + 1)
//! ```
//!
//! The four sub-polynomials come from the brute-force oracle, and every
//! division by `x + 1` must be exact.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::BruteForce;
use crate::polynomial::IntPolynomial;

pub const DEFAULT_GK2_CAP: usize = 12;

#[derive(Clone, Copy, Debug)]
pub struct Gk2Engine {
    pub cap: usize,
    pub oracle: BruteForce,
}

impl Default for Gk2Engine {
    fn default() -> Self {
        Self {
            cap: DEFAULT_GK2_CAP,
            oracle: BruteForce::default(),
        }
    }
}

/// One summand of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gk2Term {
    pub w: VertexSet,
    pub open_size: usize,
    pub bracket: IntPolynomial,
    pub term: IntPolynomial,
}

impl Gk2Engine {
    pub fn term(&self, g: &Graph, w: VertexSet) -> Result<Gk2Term> {
        let (_, open) = g.neighborhoods(w);
        let (j, z) = g.build_jw(w)?;
        let d = |h: &Graph| self.oracle.domination_polynomial(h);
        let contracted = d(&j.contract_vertex(z)?)?;
        let outside = d(&j.delete_vertices(j.closed_neighbors(z)).0)?;
        let whole = d(&j)?;
        let without_z = d(&j.delete_vertex(z)?)?;
        let bracket = &(&(&contracted + &outside) + &whole) - &without_z;
        let quotient = bracket
            .exact_divide(&IntPolynomial::from_i64s(&[1, 1]))
            .map_err(|e| match e {
                Error::InexactDivision(msg) => {
                    Error::Internal(format!("G□K_2 term for W = {w:?} not divisible: {msg}"))
                }
                other => other,
            })?;
        let term = quotient.shift(g.n() - open.len());
        Ok(Gk2Term {
            w,
            open_size: open.len(),
            bracket,
            term,
        })
    }

    pub fn terms(&self, g: &Graph) -> Result<Vec<Gk2Term>> {
        if g.n() == 0 {
            return Err(Error::InvalidParameter("G □ K_2 needs a non-null G".into()));
        }
        if g.n() > self.cap {
            return Err(Error::Capacity {
                what: "G □ K_2 decomposition",
                requested: g.n(),
                cap: self.cap,
            });
        }
        (0..1u128 << g.n())
            .into_par_iter()
            .map(|bits| self.term(g, VertexSet::from_bits(bits)))
            .collect()
    }

    pub fn poly(&self, g: &Graph) -> Result<IntPolynomial> {
        Ok(self.terms(g)?.into_iter().map(|t| t.term).sum())
    }
}

/// `D(G □ K_2, x)` with the default caps.
pub fn gk2_poly(g: &Graph) -> Result<IntPolynomial> {
    Gk2Engine::default().poly(g)
}
