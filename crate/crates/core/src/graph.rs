//! Finite simple undirected graphs stored as per-vertex neighbor bitsets,
//! together with the standard families, products and local operations
//! used by the domination formulas.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use rand::Rng;

use crate::error::{Error, Result};

/// Hard limit on the number of vertices of any [`Graph`].
pub const MAX_VERTICES: usize = 128;

/// Default cap on the vertex count of product graphs.
pub const DEFAULT_PRODUCT_CAP: usize = MAX_VERTICES;

/// A subset of the vertices `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const fn empty() -> Self {
        Self(0)
    }

    /// `{0, .., n-1}`
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Self(u128::MAX)
        } else {
            Self((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        Self(1u128 << v)
    }

    pub const fn from_bits(bits: u128) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        *self = *self | Self::singleton(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member plus one, or zero when empty.
    pub fn bound(self) -> usize {
        MAX_VERTICES - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(Self::empty(), |acc, v| acc | Self::singleton(v))
    }
}

impl BitOr for VertexSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        Self(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        Self(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = Self;
    fn not(self) -> Self {
        Self(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph",
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Self {
            n,
            adj: vec![VertexSet::empty(); n],
            labels: None,
        })
    }

    pub fn null() -> Self {
        Self {
            n: 0,
            adj: Vec::new(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidVertex { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.bound() > self.n {
            return Err(Error::InvalidVertex {
                vertex: s.bound() - 1,
                n: self.n,
            });
        }
        Ok(())
    }

    // ---- families ----

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(r: usize) -> Result<Self> {
        let mut g = Self::empty(r)?;
        for u in 0..r {
            g.adj[u] = VertexSet::full(r) - VertexSet::singleton(u);
        }
        Ok(g)
    }

    /// `K_{m,t}`: parts `0..m` and `m..m+t`.
    pub fn complete_bipartite(m: usize, t: usize) -> Result<Self> {
        let mut g = Self::empty(m + t)?;
        for u in 0..m {
            for v in m..m + t {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// G(n, p) with independent edge probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Vertices of `h` follow those of `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + h.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in h.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    // ---- local operations ----

    /// Induced subgraph on `keep`, reindexed densely in increasing order.
    /// The returned map sends old indices to new ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let keep = keep & self.vertices();
        let mut old_to_new = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut adj = Vec::with_capacity(keep.len());
        for old in keep.iter() {
            let set: VertexSet = (self.adj[old] & keep)
                .iter()
                .filter_map(|w| old_to_new[w])
                .collect();
            adj.push(set);
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|v| l[v].clone()).collect());
        let g = Graph {
            n: keep.len(),
            adj,
            labels,
        };
        (g, old_to_new)
    }

    /// `G - S`, with the old-to-new index map.
    pub fn delete_vertices(&self, s: VertexSet) -> (Graph, Vec<Option<usize>>) {
        self.induced_subgraph(self.vertices() - s)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(VertexSet::singleton(v)).0)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// `(N[W], N(W))`
    pub fn neighborhoods(&self, w: VertexSet) -> (VertexSet, VertexSet) {
        let closed = w
            .iter()
            .fold(w, |acc, v| acc | self.adj.get(v).copied().unwrap_or_default());
        (closed, closed - w)
    }

    pub fn closed_neighborhood(&self, w: VertexSet) -> VertexSet {
        self.neighborhoods(w).0
    }

    /// `G/v`: remove `v` and join every non-adjacent pair of its neighbors.
    pub fn contract_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let nb = self.adj[v];
        for u in nb.iter() {
            g.adj[u] = g.adj[u] | (nb - VertexSet::singleton(u));
        }
        Ok(g.delete_vertices(VertexSet::singleton(v)).0)
    }

    /// The auxiliary graph `J_W`: the subgraph induced by `N[W]` plus a new
    /// vertex `z` (returned, always the last index) adjacent to the members of
    /// `N[W]` lying in `W` or in `N(V - N[W])`.
    pub fn build_jw(&self, w: VertexSet) -> Result<(Graph, usize)> {
        self.check_set(w)?;
        let (closed, _) = self.neighborhoods(w);
        let outside = self.vertices() - closed;
        let outside_nbrs = outside
            .iter()
            .fold(VertexSet::empty(), |acc, v| acc | self.adj[v]);
        let z_targets = (w | outside_nbrs) & closed;

        let (sub, map) = self.induced_subgraph(closed);
        let mut j = Graph::empty(sub.n + 1)?;
        j.adj[..sub.n].copy_from_slice(&sub.adj);
        let z = sub.n;
        for old in z_targets.iter() {
            let new = map[old].expect("target lies in N[W]");
            j.add_edge(new, z)?;
        }
        Ok((j, z))
    }

    /// Isomorphism by trying every bijection; only for graphs with at most 9 vertices.
    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool> {
        const LIMIT: usize = 9;
        if self.n > LIMIT || other.n > LIMIT {
            return Err(Error::Capacity {
                what: "brute-force isomorphism",
                requested: self.n.max(other.n),
                cap: LIMIT,
            });
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut deg_a: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<_> = (0..other.n).map(|v| other.degree(v)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return Ok(false);
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        Ok(permutations_any(&mut perm, 0, &mut |p| {
            self.edges().all(|(u, v)| other.has_edge(p[u], p[v]))
        }))
    }
}

fn permutations_any(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations_any(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    EdgeList(String),
}

pub fn build_family(kind: &FamilyKind) -> Result<Graph> {
    match *kind {
        FamilyKind::Path(n) => Graph::path(n),
        FamilyKind::Cycle(n) => Graph::cycle(n),
        FamilyKind::Complete(r) => Graph::complete(r),
        FamilyKind::CompleteBipartite(m, t) => Graph::complete_bipartite(m, t),
        FamilyKind::EdgeList(ref text) => parse_edge_list(text),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Tensor,
}

/// Index bijection of a product graph: `(u, v)` lives at `u * right + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub left: usize,
    pub right: usize,
}

impl ProductVertexMap {
    pub fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.left && v < self.right);
        u * self.right + v
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.right, i % self.right)
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All product vertices whose left coordinate is `u` (the copy `{u} x H`).
    pub fn left_fiber(&self, u: usize) -> VertexSet {
        (0..self.right).map(|v| self.index(u, v)).collect()
    }

    /// All product vertices whose right coordinate is `v` (the copy `G x {v}`).
    pub fn right_fiber(&self, v: usize) -> VertexSet {
        (0..self.left).map(|u| self.index(u, v)).collect()
    }
}

pub fn product(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<(Graph, ProductVertexMap)> {
    let total = g.n.checked_mul(h.n).unwrap_or(usize::MAX);
    let cap = cap.min(MAX_VERTICES);
    if total > cap {
        return Err(Error::Capacity {
            what: "product graph",
            requested: total,
            cap,
        });
    }
    let map = ProductVertexMap {
        left: g.n,
        right: h.n,
    };
    let mut out = Graph::empty(total)?;
    for u1 in 0..g.n {
        for v1 in 0..h.n {
            let a = map.index(u1, v1);
            for u2 in 0..g.n {
                for v2 in 0..h.n {
                    let b = map.index(u2, v2);
                    if b <= a {
                        continue;
                    }
                    let ge = g.has_edge(u1, u2);
                    let he = h.has_edge(v1, v2);
                    let cart = (u1 == u2 && he) || (ge && v1 == v2);
                    let adjacent = match kind {
                        ProductKind::Cartesian => cart,
                        ProductKind::Tensor => ge && he,
                        ProductKind::Strong => cart || (ge && he),
                    };
                    if adjacent {
                        out.add_edge(a, b)?;
                    }
                }
            }
        }
    }
    Ok((out, map))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Cartesian, g, h, DEFAULT_PRODUCT_CAP)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Strong, g, h, DEFAULT_PRODUCT_CAP)
}

pub fn tensor_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Tensor, g, h, DEFAULT_PRODUCT_CAP)
}

/// Parses the edge-list format: a header line `n <count>` followed by
/// whitespace-separated `u v` pairs (0-based). `#` starts a comment.
/// Duplicate and reversed edges collapse; self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            position: lineno + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(parse_err(format!("expected header `n <count>`, got {line:?}")));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex count {:?}", fields[1])))?;
                graph = Some(Graph::empty(n)?);
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(parse_err(format!("expected `u v`, got {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f
                        .parse()
                        .map_err(|_| parse_err(format!("invalid vertex {f:?}")))?;
                }
                match g.add_edge(ends[0], ends[1]) {
                    Ok(()) => {}
                    Err(Error::InvalidVertex { vertex, n }) => {
                        return Err(parse_err(format!(
                            "vertex {vertex} out of range for n = {n}"
                        )))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    graph.ok_or_else(|| Error::Parse {
        position: 0,
        message: "missing `n <count>` header".into(),
    })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
