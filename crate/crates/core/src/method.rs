//! Maps a concrete [`Shape`] and a method name onto an engine.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::engines::{
    complete_poly, cycle_poly, kr_ks_poly, ladder_poly, path_poly, pn_kr_poly,
    strong_with_complete, Gk2Engine, DEFAULT_GK2_CAP,
};
use crate::error::{Error, Result};
use crate::expr::Shape;
use crate::graph::{ProductKind, DEFAULT_PRODUCT_CAP};
use crate::oracle::{BruteForce, DEFAULT_BRUTE_CAP};
use crate::polynomial::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    Brute,
    Recurrence,
    Formula,
    Gk2,
    Pnkr,
    StrongCompose,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Auto,
        Method::Brute,
        Method::Recurrence,
        Method::Formula,
        Method::Gk2,
        Method::Pnkr,
        Method::StrongCompose,
    ];

    /// Order in which `auto` tries the concrete methods.
    pub const AUTO_ORDER: [Method; 6] = [
        Method::Formula,
        Method::StrongCompose,
        Method::Recurrence,
        Method::Pnkr,
        Method::Gk2,
        Method::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Brute => "brute",
            Method::Recurrence => "recurrence",
            Method::Formula => "formula",
            Method::Gk2 => "gk2",
            Method::Pnkr => "pnkr",
            Method::StrongCompose => "strong-compose",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub brute: usize,
    pub product: usize,
    pub gk2: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            brute: DEFAULT_BRUTE_CAP,
            product: DEFAULT_PRODUCT_CAP,
            gk2: DEFAULT_GK2_CAP,
        }
    }
}

impl Caps {
    pub fn oracle(&self) -> Result<BruteForce> {
        BruteForce::new(self.brute)
    }
}

/// A computed polynomial together with the method that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Computation {
    pub polynomial: IntPolynomial,
    pub method: Method,
    pub detail: String,
}

fn mismatch(method: Method, shape: &Shape) -> Error {
    Error::MethodMismatch {
        method: method.to_string(),
        expr: shape.to_string(),
    }
}

/// `(a, b)` when `shape` is a product of `kind`, in either factor order.
fn factors(shape: &Shape, kind: ProductKind) -> Option<(&Shape, &Shape)> {
    match shape {
        Shape::Product(k, a, b) if *k == kind => Some((a, b)),
        _ => None,
    }
}

/// Finds a factor pair `(other, r)` where one side is `K:r` (optionally with `r` fixed).
fn with_complete_factor(shape: &Shape, kind: ProductKind, r: Option<usize>) -> Option<(&Shape, usize)> {
    let (a, b) = factors(shape, kind)?;
    let matches = |s: &Shape| match *s {
        Shape::Complete(k) if r.is_none_or(|want| want == k) => Some(k),
        _ => None,
    };
    matches(b).map(|k| (a, k)).or_else(|| matches(a).map(|k| (b, k)))
}

/// Computes `D(G, x)` for the shape with the requested method.
pub fn compute(shape: &Shape, method: Method, caps: &Caps) -> Result<Computation> {
    match method {
        Method::Auto => {
            let mut last_capacity = None;
            for m in Method::AUTO_ORDER {
                match compute(shape, m, caps) {
                    Ok(c) => return Ok(c),
                    Err(Error::MethodMismatch { .. }) => {}
                    Err(e) if e.is_capacity() => last_capacity = Some(e),
                    Err(e) => return Err(e),
                }
            }
            Err(last_capacity.unwrap_or_else(|| mismatch(Method::Auto, shape)))
        }
        Method::Brute => {
            let g = shape.build(caps.product)?;
            let polynomial = caps.oracle()?.domination_polynomial(&g)?;
            Ok(Computation {
                polynomial,
                method,
                detail: format!("subset enumeration over {} vertices", g.n()),
            })
        }
        Method::Formula => {
            let (polynomial, detail) = match shape {
                Shape::Complete(r) => (complete_poly(*r), format!("(x+1)^{r} - 1")),
                _ => match factors(shape, ProductKind::Cartesian) {
                    Some((Shape::Complete(r), Shape::Complete(s))) if *r > 0 && *s > 0 => (
                        kr_ks_poly(*r, *s)?,
                        format!("K_{r} □ K_{s} inclusion-exclusion"),
                    ),
                    _ => return Err(mismatch(method, shape)),
                },
            };
            Ok(Computation {
                polynomial,
                method,
                detail,
            })
        }
        Method::Recurrence => {
            let (polynomial, detail) = match shape {
                Shape::Path(n) => (path_poly(*n), format!("path recurrence, n = {n}")),
                Shape::Cycle(n) => (cycle_poly(*n)?, format!("cycle recurrence, n = {n}")),
                _ => match with_complete_factor(shape, ProductKind::Cartesian, Some(2)) {
                    Some((Shape::Path(n), _)) if *n >= 1 => {
                        (ladder_poly(*n)?, format!("ladder recurrence, n = {n}"))
                    }
                    _ => return Err(mismatch(method, shape)),
                },
            };
            Ok(Computation {
                polynomial,
                method,
                detail,
            })
        }
        Method::Pnkr => match with_complete_factor(shape, ProductKind::Cartesian, None) {
            Some((Shape::Path(n), r)) if r >= 1 => Ok(Computation {
                polynomial: pn_kr_poly(*n, r)?,
                method,
                detail: format!("m^t table, n = {n}, r = {r}"),
            }),
            _ => Err(mismatch(method, shape)),
        },
        Method::Gk2 => match with_complete_factor(shape, ProductKind::Cartesian, Some(2)) {
            Some((other, _)) => {
                let g = other.build(caps.product)?;
                if g.n() == 0 {
                    return Err(mismatch(method, shape));
                }
                let engine = Gk2Engine {
                    cap: caps.gk2,
                    oracle: caps.oracle()?,
                };
                Ok(Computation {
                    polynomial: engine.poly(&g)?,
                    method,
                    detail: format!("sum over {} subsets W of {other}", 1u128 << g.n()),
                })
            }
            None => Err(mismatch(method, shape)),
        },
        Method::StrongCompose => match with_complete_factor(shape, ProductKind::Strong, None) {
            Some((other, r)) if r >= 1 => {
                let inner = compute(other, Method::Auto, caps)?;
                Ok(Computation {
                    polynomial: strong_with_complete(&inner.polynomial, r)?,
                    method,
                    detail: format!("D({other}) via {} composed with (x+1)^{r} - 1", inner.method),
                })
            }
            _ => Err(mismatch(method, shape)),
        },
    }
}

/// Every concrete method that succeeds on `shape`, with its result.
pub fn all_methods(shape: &Shape, caps: &Caps) -> Vec<Computation> {
    Method::AUTO_ORDER
        .into_iter()
        .filter_map(|m| compute(shape, m, caps).ok())
        .collect()
}
