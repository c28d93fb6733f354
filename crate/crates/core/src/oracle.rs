//! Brute-force ground truth: every quantity here is obtained by enumerating
//! vertex subsets and testing closed-neighborhood coverage directly.
//!
//! Enumeration splits the candidate vertices into a low part, whose subset
//! covers are tabulated once, and a high part walked in fixed-size blocks.
//! Blocks may run on different threads; their per-size count vectors are
//! summed in block order, so results never depend on the worker count.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph, VertexSet};
use crate::polynomial::IntPolynomial;

pub const DEFAULT_BRUTE_CAP: usize = 26;

/// Subset masks are single machine words.
pub const MAX_BRUTE_CAP: usize = 63;

const LOW_BITS: usize = 14;
const HIGH_BLOCK: usize = 16;
const PARALLEL_THRESHOLD: usize = 18;

/// Counts of dominating sets by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationProfile {
    pub n: usize,
    pub counts: Vec<BigInt>,
}

impl DominationProfile {
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.counts.clone())
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            cap: DEFAULT_BRUTE_CAP,
        }
    }
}

impl BruteForce {
    pub fn new(cap: usize) -> Result<Self> {
        if cap == 0 || cap > MAX_BRUTE_CAP {
            return Err(Error::InvalidParameter(format!(
                "brute-force cap must lie in 1..={MAX_BRUTE_CAP}, got {cap}"
            )));
        }
        Ok(Self { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::Capacity {
                what,
                requested: n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Counts `S ⊆ candidates` by size such that `base ∪ N[S] ⊇ required`.
    fn count(
        &self,
        g: &Graph,
        candidates: VertexSet,
        base: VertexSet,
        required: VertexSet,
    ) -> Vec<u64> {
        let covers: Vec<u64> = candidates
            .iter()
            .map(|v| g.closed_neighbors(v).bits() as u64)
            .collect();
        count_covering_subsets(&covers, base.bits() as u64, required.bits() as u64)
    }

    pub fn domination_profile(&self, g: &Graph) -> Result<DominationProfile> {
        self.check("brute-force domination", g.n())?;
        let counts = self.count(g, g.vertices(), VertexSet::empty(), g.vertices());
        Ok(DominationProfile {
            n: g.n(),
            counts: counts.into_iter().map(BigInt::from).collect(),
        })
    }

    pub fn domination_polynomial(&self, g: &Graph) -> Result<IntPolynomial> {
        Ok(self.domination_profile(g)?.polynomial())
    }

    /// Counts sets dominating every vertex outside `exempt`.
    pub fn relaxed_domination_polynomial(
        &self,
        g: &Graph,
        exempt: VertexSet,
    ) -> Result<IntPolynomial> {
        self.check("brute-force relaxed domination", g.n())?;
        let counts = self.count(g, g.vertices(), VertexSet::empty(), g.vertices() - exempt);
        Ok(to_poly(counts))
    }

    /// Smallest dominating set size; zero for the null graph.
    pub fn domination_number(&self, g: &Graph) -> Result<usize> {
        self.domination_polynomial(g)?.min_support()
    }

    /// Sets `S ⊆ V - N[z]` that dominate every vertex except `z`.
    pub fn pz_polynomial(&self, g: &Graph, z: usize) -> Result<IntPolynomial> {
        self.check("brute-force p_z", g.n())?;
        if z >= g.n() {
            return Err(Error::InvalidVertex { vertex: z, n: g.n() });
        }
        let candidates = g.vertices() - g.closed_neighbors(z);
        let required = g.vertices() - VertexSet::singleton(z);
        let counts = self.count(g, candidates, VertexSet::empty(), required);
        Ok(to_poly(counts))
    }

    /// Dominating sets of the ladder `P_n □ K_2` containing both vertices of
    /// the last rung.
    pub fn both_endpoints_count(&self, n: usize) -> Result<IntPolynomial> {
        if n == 0 {
            return Err(Error::InvalidParameter("ladder index must be at least 1".into()));
        }
        self.check("brute-force ladder endpoint count", 2 * n)?;
        let (ladder, map) = cartesian_product(&Graph::path(n)?, &Graph::complete(2)?)?;
        let rung = map.left_fiber(n - 1);
        let base = ladder.closed_neighborhood(rung);
        let counts = self.count(&ladder, ladder.vertices() - rung, base, ladder.vertices());
        Ok(to_poly(counts).shift(2))
    }

    /// Exact domination polynomial by enumerating subsets of closed-twin
    /// classes (vertices with identical `N[v]`). A set dominates exactly when
    /// the classes it meets do, and a class of size `s` can be met in
    /// `(x+1)^s - 1` ways. The cap bounds the number of classes, so graphs
    /// with large twin classes stay tractable.
    pub fn twin_class_polynomial(&self, g: &Graph) -> Result<IntPolynomial> {
        let mut classes: Vec<(VertexSet, usize)> = Vec::new();
        for v in 0..g.n() {
            let nb = g.closed_neighbors(v);
            match classes.iter_mut().find(|(c, _)| *c == nb) {
                Some((_, size)) => *size += 1,
                None => classes.push((nb, 1)),
            }
        }
        self.check("brute-force twin classes", classes.len())?;
        let weights: Vec<IntPolynomial> = classes
            .iter()
            .map(|&(_, s)| IntPolynomial::binomial_shift(s))
            .collect();
        let mut total = IntPolynomial::zero();
        twin_dfs(
            &classes,
            &weights,
            0,
            VertexSet::empty(),
            IntPolynomial::one(),
            g.vertices(),
            &mut total,
        );
        Ok(total)
    }
}

fn twin_dfs(
    classes: &[(VertexSet, usize)],
    weights: &[IntPolynomial],
    i: usize,
    covered: VertexSet,
    acc: IntPolynomial,
    all: VertexSet,
    total: &mut IntPolynomial,
) {
    if i == classes.len() {
        if covered == all {
            *total = &*total + &acc;
        }
        return;
    }
    // prune: even taking every remaining class cannot dominate
    let reachable = classes[i..].iter().fold(covered, |c, (nb, _)| c | *nb);
    if reachable != all {
        return;
    }
    twin_dfs(classes, weights, i + 1, covered, acc.clone(), all, total);
    let with = &acc * &weights[i];
    twin_dfs(classes, weights, i + 1, covered | classes[i].0, with, all, total);
}

fn to_poly(counts: Vec<u64>) -> IntPolynomial {
    IntPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// Counts subsets `S` of `covers` by size with `base | ⋃_{i∈S} covers[i] ⊇ required`.
pub(crate) fn count_covering_subsets(covers: &[u64], base: u64, required: u64) -> Vec<u64> {
    let k = covers.len();
    assert!(k < 64);
    let low = k.min(LOW_BITS);
    let high = k - low;
    let (low_covers, high_covers) = covers.split_at(low);

    let mut low_table = vec![0u64; 1 << low];
    for m in 1..low_table.len() {
        low_table[m] = low_table[m & (m - 1)] | low_covers[m.trailing_zeros() as usize];
    }
    let mut low_hist = vec![0u64; low + 1];
    for m in 0..1usize << low {
        low_hist[m.count_ones() as usize] += 1;
    }

    let run_block = |block: std::ops::Range<u64>| -> Vec<u64> {
        let mut counts = vec![0u64; k + 1];
        for h in block {
            let mut cover = base;
            let mut bits = h;
            while bits != 0 {
                cover |= high_covers[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            let hp = h.count_ones() as usize;
            if cover & required == required {
                for (j, c) in low_hist.iter().enumerate() {
                    counts[hp + j] += c;
                }
                continue;
            }
            for (m, &lc) in low_table.iter().enumerate() {
                if (cover | lc) & required == required {
                    counts[hp + m.count_ones() as usize] += 1;
                }
            }
        }
        counts
    };

    let high_count = 1u64 << high;
    let blocks: Vec<std::ops::Range<u64>> = (0..high_count)
        .step_by(HIGH_BLOCK)
        .map(|s| s..(s + HIGH_BLOCK as u64).min(high_count))
        .collect();
    let partials: Vec<Vec<u64>> = if k >= PARALLEL_THRESHOLD {
        blocks.into_par_iter().map(run_block).collect()
    } else {
        blocks.into_iter().map(run_block).collect()
    };
    let mut counts = vec![0u64; k + 1];
    for part in partials {
        for (c, p) in counts.iter_mut().zip(part) {
            *c += p;
        }
    }
    counts
}

pub fn domination_polynomial(g: &Graph) -> Result<IntPolynomial> {
    BruteForce::default().domination_polynomial(g)
}

pub fn relaxed_domination_polynomial(g: &Graph, exempt: VertexSet) -> Result<IntPolynomial> {
    BruteForce::default().relaxed_domination_polynomial(g, exempt)
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    BruteForce::default().domination_number(g)
}

pub fn pz_polynomial(g: &Graph, z: usize) -> Result<IntPolynomial> {
    BruteForce::default().pz_polynomial(g, z)
}

pub fn both_endpoints_count(n: usize) -> Result<IntPolynomial> {
    BruteForce::default().both_endpoints_count(n)
}

/// Number of subsets of `g` that do not dominate, by a plain per-subset test.
pub fn count_non_dominating(g: &Graph) -> Result<BigInt> {
    BruteForce::default().check("brute-force tally", g.n())?;
    let all = g.vertices();
    let mut bad = BigInt::zero();
    for s in 0..1u64 << g.n() {
        let set = VertexSet::from_bits(s as u128);
        if g.closed_neighborhood(set) != all {
            bad += 1;
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{strong_product, ProductKind};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn table1(n: usize) -> IntPolynomial {
        let rows: [&[i64]; 3] = [
            &[0, 2, 1],
            &[0, 0, 6, 4, 1],
            &[0, 0, 3, 16, 15, 6, 1],
        ];
        p(rows[n - 1])
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(domination_polynomial(&Graph::null()).unwrap(), IntPolynomial::one());
        let l3 = cartesian_product(&Graph::path(3).unwrap(), &Graph::complete(2).unwrap())
            .unwrap()
            .0;
        assert_eq!(domination_polynomial(&l3).unwrap(), table1(3));
        assert_eq!(
            domination_polynomial(&Graph::cycle(5).unwrap()).unwrap(),
            p(&[0, 0, 5, 10, 5, 1])
        );
    }

    #[test]
    fn cap_is_enforced() {
        let bf = BruteForce::new(5).unwrap();
        let err = bf.domination_polynomial(&Graph::path(6).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Capacity { cap: 5, requested: 6, .. }));
        assert!(BruteForce::new(64).is_err());
        assert!(BruteForce::new(0).is_err());
    }

    #[test]
    fn relaxed_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            relaxed_domination_polynomial(&c5, VertexSet::empty()).unwrap(),
            domination_polynomial(&c5).unwrap()
        );
        assert_eq!(
            relaxed_domination_polynomial(&c5, c5.vertices()).unwrap(),
            IntPolynomial::linear_power(1, 5)
        );
        let k2 = Graph::complete(2).unwrap();
        let (c4, map) = cartesian_product(&k2, &k2).unwrap();
        let exempt = VertexSet::singleton(map.index(0, 0));
        assert_eq!(
            relaxed_domination_polynomial(&c4, exempt).unwrap(),
            p(&[0, 1, 6, 4, 1])
        );
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&Graph::complete(5).unwrap()).unwrap(), 1);
        let l5 = cartesian_product(&Graph::path(5).unwrap(), &Graph::complete(2).unwrap())
            .unwrap()
            .0;
        assert_eq!(domination_number(&l5).unwrap(), 3);
        assert_eq!(domination_number(&Graph::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(domination_number(&Graph::null()).unwrap(), 0);
    }

    #[test]
    fn pz_examples() {
        assert_eq!(pz_polynomial(&Graph::complete(1).unwrap(), 0).unwrap(), IntPolynomial::one());
        assert!(pz_polynomial(&Graph::complete(2).unwrap(), 0).unwrap().is_zero());
        assert_eq!(pz_polynomial(&Graph::path(3).unwrap(), 0).unwrap(), IntPolynomial::x());
        assert!(pz_polynomial(&Graph::path(3).unwrap(), 3).is_err());
    }

    #[test]
    fn endpoint_counts() {
        assert_eq!(both_endpoints_count(1).unwrap(), p(&[0, 0, 1]));
        assert_eq!(both_endpoints_count(2).unwrap(), p(&[0, 0, 1, 2, 1]));
        assert_eq!(both_endpoints_count(3).unwrap(), p(&[0, 0, 0, 2, 6, 4, 1]));
        assert!(both_endpoints_count(0).is_err());
    }

    #[test]
    fn profile_invariants() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let prof = BruteForce::default().domination_profile(&g).unwrap();
        assert_eq!(prof.counts[6], BigInt::from(1));
        assert!(prof.counts[0].is_zero());
        let first = prof.counts.iter().position(|c| !c.is_zero()).unwrap();
        assert!(prof.counts[first..].iter().all(|c| !c.is_zero()));
        let total = BigInt::from(64) - count_non_dominating(&g).unwrap();
        assert_eq!(prof.total(), total);
    }

    #[test]
    fn parallel_and_serial_agree() {
        // 20 vertices crosses the parallel threshold
        let g = Graph::cycle(20).unwrap();
        let covers: Vec<u64> = (0..20).map(|v| g.closed_neighbors(v).bits() as u64).collect();
        let all = (1u64 << 20) - 1;
        let par = count_covering_subsets(&covers, 0, all);
        let mut serial = vec![0u64; 21];
        for s in 0u64..1 << 20 {
            let mut c = 0;
            for (i, cv) in covers.iter().enumerate() {
                if s >> i & 1 == 1 {
                    c |= cv;
                }
            }
            if c == all {
                serial[s.count_ones() as usize] += 1;
            }
        }
        assert_eq!(par, serial);
    }

    #[test]
    fn twin_classes_match_plain_enumeration() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let (s, _) = strong_product(&g, &Graph::complete(3).unwrap()).unwrap();
        let bf = BruteForce::default();
        assert_eq!(
            bf.twin_class_polynomial(&s).unwrap(),
            bf.domination_polynomial(&s).unwrap()
        );
        let (c, _) = crate::graph::product(ProductKind::Cartesian, &g, &Graph::complete(2).unwrap(), 64)
            .unwrap();
        assert_eq!(
            bf.twin_class_polynomial(&c).unwrap(),
            bf.domination_polynomial(&c).unwrap()
        );
        assert_eq!(bf.twin_class_polynomial(&Graph::null()).unwrap(), IntPolynomial::one());
    }
}
