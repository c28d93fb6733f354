pub mod engines;
pub mod error;
pub mod expr;
pub mod graph;
pub mod method;
pub mod oracle;
pub mod polynomial;
pub mod reduction;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use expr::{GraphExpr, Shape};
pub use graph::{Graph, ProductKind, VertexSet};
pub use method::{compute, Caps, Computation, Method};
pub use polynomial::{IntPolynomial, RatPolynomial, Rational};
