//! Graph expressions:
//!
//! ```text
//! E    := P:S | C:S | K:S | KB:S,S | cart(E,E) | strong(E,E) | tensor(E,E) | file(path)
//! S    := integer | affine expression in the family parameter `n` (e.g. `n`, `3n+2`, `2*n-1`)
//! ```
//!
//! A [`GraphExpr`] may mention `n`; instantiating it yields a concrete [`Shape`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{product, Graph, ProductKind};

/// `coef * n + constant`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeExpr {
    pub coef: i64,
    pub constant: i64,
}

impl SizeExpr {
    pub fn literal(v: usize) -> Self {
        Self {
            coef: 0,
            constant: v as i64,
        }
    }

    pub fn is_literal(&self) -> bool {
        self.coef == 0
    }

    pub fn eval(&self, n: usize) -> Result<usize> {
        let v = self.coef * n as i64 + self.constant;
        usize::try_from(v).map_err(|_| {
            Error::InvalidParameter(format!("size {self} is negative at n = {n}"))
        })
    }
}

impl fmt::Display for SizeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coef, self.constant) {
            (0, c) => write!(f, "{c}"),
            (a, c) => {
                match a {
                    1 => write!(f, "n")?,
                    -1 => write!(f, "-n")?,
                    a => write!(f, "{a}n")?,
                }
                match c {
                    0 => Ok(()),
                    c if c > 0 => write!(f, "+{c}"),
                    c => write!(f, "{c}"),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Path(SizeExpr),
    Cycle(SizeExpr),
    Complete(SizeExpr),
    Bipartite(SizeExpr, SizeExpr),
    Product(ProductKind, Box<GraphExpr>, Box<GraphExpr>),
    File(String),
}

/// A fully instantiated graph expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Bipartite(usize, usize),
    Product(ProductKind, Box<Shape>, Box<Shape>),
    File(String),
}

fn product_name(kind: ProductKind) -> &'static str {
    match kind {
        ProductKind::Cartesian => "cart",
        ProductKind::Strong => "strong",
        ProductKind::Tensor => "tensor",
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Path(s) => write!(f, "P:{s}"),
            GraphExpr::Cycle(s) => write!(f, "C:{s}"),
            GraphExpr::Complete(s) => write!(f, "K:{s}"),
            GraphExpr::Bipartite(a, b) => write!(f, "KB:{a},{b}"),
            GraphExpr::Product(k, a, b) => write!(f, "{}({a},{b})", product_name(*k)),
            GraphExpr::File(p) => write!(f, "file({p})"),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Path(s) => write!(f, "P:{s}"),
            Shape::Cycle(s) => write!(f, "C:{s}"),
            Shape::Complete(s) => write!(f, "K:{s}"),
            Shape::Bipartite(a, b) => write!(f, "KB:{a},{b}"),
            Shape::Product(k, a, b) => write!(f, "{}({a},{b})", product_name(*k)),
            Shape::File(p) => write!(f, "file({p})"),
        }
    }
}

impl GraphExpr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn is_parametric(&self) -> bool {
        match self {
            GraphExpr::Path(s) | GraphExpr::Cycle(s) | GraphExpr::Complete(s) => !s.is_literal(),
            GraphExpr::Bipartite(a, b) => !a.is_literal() || !b.is_literal(),
            GraphExpr::Product(_, a, b) => a.is_parametric() || b.is_parametric(),
            GraphExpr::File(_) => false,
        }
    }

    /// Substitutes the family parameter.
    pub fn instantiate(&self, n: usize) -> Result<Shape> {
        Ok(match self {
            GraphExpr::Path(s) => Shape::Path(s.eval(n)?),
            GraphExpr::Cycle(s) => Shape::Cycle(s.eval(n)?),
            GraphExpr::Complete(s) => Shape::Complete(s.eval(n)?),
            GraphExpr::Bipartite(a, b) => Shape::Bipartite(a.eval(n)?, b.eval(n)?),
            GraphExpr::Product(k, a, b) => {
                Shape::Product(*k, Box::new(a.instantiate(n)?), Box::new(b.instantiate(n)?))
            }
            GraphExpr::File(p) => Shape::File(p.clone()),
        })
    }

    /// The concrete shape of an expression without `n`.
    pub fn to_shape(&self) -> Result<Shape> {
        if self.is_parametric() {
            return Err(Error::InvalidParameter(format!(
                "expression {self} mentions the family parameter n"
            )));
        }
        self.instantiate(0)
    }
}

impl Shape {
    pub fn parse(src: &str) -> Result<Self> {
        GraphExpr::parse(src)?.to_shape()
    }

    pub fn vertex_count(&self) -> Result<usize> {
        Ok(match self {
            Shape::Path(n) | Shape::Cycle(n) | Shape::Complete(n) => *n,
            Shape::Bipartite(a, b) => a + b,
            Shape::Product(_, a, b) => a.vertex_count()?.saturating_mul(b.vertex_count()?),
            Shape::File(_) => self.build(usize::MAX)?.n(),
        })
    }

    /// Materializes the graph; products larger than `product_cap` fail.
    pub fn build(&self, product_cap: usize) -> Result<Graph> {
        match self {
            Shape::Path(n) => Graph::path(*n),
            Shape::Cycle(n) => Graph::cycle(*n),
            Shape::Complete(n) => Graph::complete(*n),
            Shape::Bipartite(a, b) => Graph::complete_bipartite(*a, *b),
            Shape::Product(k, a, b) => {
                let g = a.build(product_cap)?;
                let h = b.build(product_cap)?;
                Ok(product(*k, &g, &h, product_cap)?.0)
            }
            Shape::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Io(format!("{p}: {e}")))?;
                crate::graph::parse_edge_list(&text)
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        self.skip_ws();
        for (name, kind) in [
            ("cart(", ProductKind::Cartesian),
            ("strong(", ProductKind::Strong),
            ("tensor(", ProductKind::Tensor),
        ] {
            if self.eat(name) {
                let a = self.expr()?;
                self.expect(",")?;
                let b = self.expr()?;
                self.expect(")")?;
                return Ok(GraphExpr::Product(kind, Box::new(a), Box::new(b)));
            }
        }
        if self.eat("file(") {
            let end = self
                .rest()
                .find(')')
                .ok_or_else(|| self.error("unterminated file("))?;
            let path = self.rest()[..end].trim().to_string();
            if path.is_empty() {
                return Err(self.error("empty file path"));
            }
            self.pos += end + 1;
            return Ok(GraphExpr::File(path));
        }
        if self.eat("KB:") {
            let a = self.size()?;
            self.expect(",")?;
            let b = self.size()?;
            return Ok(GraphExpr::Bipartite(a, b));
        }
        if self.eat("P:") {
            return Ok(GraphExpr::Path(self.size()?));
        }
        if self.eat("C:") {
            return Ok(GraphExpr::Cycle(self.size()?));
        }
        if self.eat("K:") {
            return Ok(GraphExpr::Complete(self.size()?));
        }
        Err(self.error("expected P:, C:, K:, KB:, cart(, strong(, tensor( or file("))
    }

    fn integer(&mut self) -> Option<i64> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        let v = self.rest()[..digits].parse().ok()?;
        self.pos += digits;
        Some(v)
    }

    /// `term (('+'|'-') term)*` where a term is `k`, `n`, `kn` or `k*n`.
    fn size(&mut self) -> Result<SizeExpr> {
        let start = self.pos;
        let mut out = SizeExpr { coef: 0, constant: 0 };
        let mut sign = if self.eat("-") { -1 } else { 1 };
        loop {
            let k = self.integer();
            let has_n = if k.is_some() {
                let save = self.pos;
                if self.eat("*") {
                    if !self.eat("n") {
                        return Err(self.error("expected `n` after `*`"));
                    }
                    true
                } else {
                    self.pos = save;
                    self.eat("n")
                }
            } else {
                self.eat("n")
            };
            match (k, has_n) {
                (None, false) => return Err(self.error("expected a size")),
                (k, true) => out.coef += sign * k.unwrap_or(1),
                (Some(k), false) => out.constant += sign * k,
            }
            if self.eat("+") {
                sign = 1;
            } else if self.eat("-") {
                sign = -1;
            } else {
                break;
            }
        }
        if out.is_literal() && out.constant < 0 {
            self.pos = start;
            return Err(self.error("negative size"));
        }
        Ok(out)
    }
}
