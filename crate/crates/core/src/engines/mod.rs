//! Closed forms and recurrences for domination polynomials of specific
//! families. Every engine returns an exact [`IntPolynomial`](crate::IntPolynomial).

mod complete;
mod corollaries;
mod gk2;
mod ladder;
mod paths;
mod pnkr;

pub use complete::{kr_ks_poly, strong_with_complete};
pub use corollaries::{verify_strong_corollaries, CorollaryCheck, CorollaryReport, StrongFamily};
pub use gk2::{gk2_poly, Gk2Engine, Gk2Term, DEFAULT_GK2_CAP};
pub use ladder::{ladder_a_poly, ladder_poly, ladder_polys, LadderBases};
pub use paths::{complete_poly, cycle_poly, path_poly};
pub use pnkr::{m_poly, pn_kr_poly, MTable};
