//! Named cross-validation suites comparing engines with the enumeration oracle.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::engines::{
    cycle_poly, kr_ks_poly, ladder_a_poly, ladder_poly, ladder_polys, path_poly, pn_kr_poly,
    strong_with_complete, verify_strong_corollaries, Gk2Engine, MTable,
};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, strong_product, Graph, VertexSet, DEFAULT_PRODUCT_CAP};
use crate::oracle::BruteForce;
use crate::polynomial::{binomial, parse_rational, IntPolynomial, RatPolynomial, Rational};
use crate::reduction::{interpolation_reduction, BruteForceEvaluator, FnEvaluator};
use crate::sequences::{
    guess_holonomic, guess_polyx_recurrence, ladder_domination_number, verify_recurrence,
    IndexedSequence, RecurrenceData, RecurrenceSpec,
};

pub const DEFAULT_SEED: u64 = 0x5eed_d0e5;

/// `D(P_n □ K_2)` for `n = 1..=6`.
pub const LADDER_ROWS: [&[i64]; 6] = [
    &[0, 2, 1],
    &[0, 0, 6, 4, 1],
    &[0, 0, 3, 16, 15, 6, 1],
    &[0, 0, 0, 12, 48, 52, 28, 8, 1],
    &[0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1],
    &[0, 0, 0, 0, 17, 168, 470, 604, 453, 216, 66, 12, 1],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Table1,
    Kk,
    Strong,
    Gk2,
    Paths,
    Mtable,
    Lemma,
    Pz,
    Central,
    LadderGamma,
    Recurrences,
    Corollaries,
    Reduction,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Table1,
        Suite::Kk,
        Suite::Strong,
        Suite::Gk2,
        Suite::Paths,
        Suite::Mtable,
        Suite::Lemma,
        Suite::Pz,
        Suite::Central,
        Suite::LadderGamma,
        Suite::Recurrences,
        Suite::Corollaries,
        Suite::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Kk => "kk",
            Suite::Strong => "strong",
            Suite::Gk2 => "gk2",
            Suite::Paths => "paths",
            Suite::Mtable => "mtable",
            Suite::Lemma => "lemma",
            Suite::Pz => "pz",
            Suite::Central => "central",
            Suite::LadderGamma => "ladder-gamma",
            Suite::Recurrences => "recurrences",
            Suite::Corollaries => "corollaries",
            Suite::Reduction => "reduction",
        }
    }

    fn default_max_n(self) -> usize {
        match self {
            Suite::Table1 => 6,
            Suite::Kk => 10,
            Suite::Strong => 8,
            Suite::Gk2 | Suite::Pz | Suite::Reduction => 9,
            Suite::Paths | Suite::Central => 12,
            Suite::Mtable => 6,
            Suite::Lemma => 10,
            Suite::LadderGamma => 14,
            Suite::Recurrences => 14,
            Suite::Corollaries => 8,
        }
    }

    fn default_trials(self) -> usize {
        match self {
            Suite::Pz => 50,
            Suite::Reduction => 10,
            _ => 20,
        }
    }

    pub fn run(self, bounds: &Bounds) -> Result<SuiteReport> {
        let max_n = bounds.max_n.unwrap_or(self.default_max_n());
        let trials = bounds.trials.unwrap_or(self.default_trials());
        let mut ctx = Checker::new(self);
        match self {
            Suite::Table1 => table1(&mut ctx, max_n)?,
            Suite::Kk => kk(&mut ctx, max_n)?,
            Suite::Strong => strong(&mut ctx, bounds.seed, trials, max_n)?,
            Suite::Gk2 => gk2(&mut ctx, bounds.seed, trials, max_n)?,
            Suite::Paths => paths(&mut ctx, max_n)?,
            Suite::Mtable => mtable(&mut ctx, max_n)?,
            Suite::Lemma => lemma(&mut ctx, max_n)?,
            Suite::Pz => pz(&mut ctx, bounds.seed, trials, max_n)?,
            Suite::Central => central(&mut ctx, max_n)?,
            Suite::LadderGamma => ladder_gamma(&mut ctx, max_n)?,
            Suite::Recurrences => recurrences(&mut ctx, max_n)?,
            Suite::Corollaries => corollaries(&mut ctx, max_n)?,
            Suite::Reduction => reduction(&mut ctx, bounds.seed, trials, max_n)?,
        }
        Ok(ctx.finish())
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Overrides for a suite's default size and sample bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_n: None,
            trials: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

struct Checker {
    suite: Suite,
    checks: usize,
    failures: Vec<Failure>,
}

impl Checker {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, case: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                case: case.into(),
                detail: detail(),
            });
        }
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, case: impl Into<String>, expected: &T, got: &T) {
        self.check(case, expected == got, || format!("expected {expected}, got {got}"));
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            passed: self.failures.is_empty(),
            checks: self.checks,
            failures: self.failures,
        }
    }
}

/// `count` seeded Erdős–Rényi graphs with `1..=max_n` vertices and edge
/// probability drawn from `[0.2, 0.8]`.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Result<Vec<Graph>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let p = rng.gen_range(0.2..=0.8);
            Graph::random(n, p, &mut rng)
        })
        .collect()
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn brute(g: &Graph) -> Result<IntPolynomial> {
    BruteForce::new(crate::oracle::MAX_BRUTE_CAP)?.domination_polynomial(g)
}

fn table1(c: &mut Checker, max_n: usize) -> Result<()> {
    let engine = Gk2Engine::default();
    for n in 1..=max_n.min(LADDER_ROWS.len()) {
        let row = IntPolynomial::from_i64s(LADDER_ROWS[n - 1]);
        let p = Graph::path(n)?;
        let ladder = cartesian_product(&p, &Graph::complete(2)?)?.0;
        c.equal(format!("brute n={n}"), &row, &brute(&ladder)?);
        c.equal(format!("ladder n={n}"), &row, &ladder_poly(n)?);
        c.equal(format!("gk2 n={n}"), &row, &engine.poly(&p)?);
        c.equal(format!("pnkr n={n}"), &row, &pn_kr_poly(n, 2)?);
    }
    Ok(())
}

fn kk(c: &mut Checker, max_r: usize) -> Result<()> {
    for r in 2..=5 {
        for s in 2..=4 {
            if r * s > 20 {
                continue;
            }
            let g = cartesian_product(&Graph::complete(r)?, &Graph::complete(s)?)?.0;
            c.equal(format!("K{r}□K{s} vs brute"), &brute(&g)?, &kr_ks_poly(r, s)?);
        }
    }
    for r in 1..=max_r {
        let y = IntPolynomial::binomial_shift(r);
        let xr = IntPolynomial::x_pow(r);
        let two = &y.pow(2) + &xr.scale(&2.into());
        c.equal(format!("K{r}□K2 identity"), &two, &kr_ks_poly(r, 2)?);
        let tail = &IntPolynomial::linear_power(2, r) - &IntPolynomial::one();
        let three = &y.pow(3) + &(&xr * &tail).scale(&3.into());
        c.equal(format!("K{r}□K3 identity"), &three, &kr_ks_poly(r, 3)?);
    }
    Ok(())
}

fn strong(c: &mut Checker, seed: u64, trials: usize, max_n: usize) -> Result<()> {
    for (i, g) in random_graphs(seed, trials, max_n)?.iter().enumerate() {
        let d = brute(g)?;
        for r in [2, 3] {
            let h = strong_product(g, &Graph::complete(r)?)?.0;
            c.equal(
                format!("graph {i} ({}) ⊠ K{r}", describe(g)),
                &brute(&h)?,
                &strong_with_complete(&d, r)?,
            );
        }
    }
    Ok(())
}

fn gk2_case(c: &mut Checker, engine: &Gk2Engine, name: String, g: &Graph) -> Result<()> {
    let expected = brute(&cartesian_product(g, &Graph::complete(2)?)?.0)?;
    match engine.terms(g) {
        Ok(terms) => {
            let sum: IntPolynomial = terms.into_iter().map(|t| t.term).sum();
            c.equal(name, &expected, &sum);
        }
        Err(Error::Internal(msg)) => c.check(name, false, || msg),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn gk2(c: &mut Checker, seed: u64, trials: usize, max_n: usize) -> Result<()> {
    let engine = Gk2Engine::default();
    for (i, g) in random_graphs(seed, trials, max_n)?.iter().enumerate() {
        gk2_case(c, &engine, format!("graph {i} ({})", describe(g)), g)?;
    }
    for n in 1..=max_n {
        gk2_case(c, &engine, format!("P{n}"), &Graph::path(n)?)?;
        gk2_case(c, &engine, format!("K{n}"), &Graph::complete(n)?)?;
        if n >= 3 {
            gk2_case(c, &engine, format!("C{n}"), &Graph::cycle(n)?)?;
        }
    }
    Ok(())
}

fn paths(c: &mut Checker, max_n: usize) -> Result<()> {
    for n in 0..=max_n {
        c.equal(format!("P{n}"), &brute(&Graph::path(n)?)?, &path_poly(n));
        if n >= 3 {
            c.equal(format!("C{n}"), &brute(&Graph::cycle(n)?)?, &cycle_poly(n)?);
        }
    }
    Ok(())
}

/// `m^t_{n,r}` by enumeration: the first `t` vertices of the left-end copy
/// of `K_r` are exempt.
pub fn relaxed_pnkr(n: usize, t: usize, r: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let g = cartesian_product(&Graph::path(n)?, &Graph::complete(r)?)?.0;
    let exempt: VertexSet = (0..t).collect();
    BruteForce::new(crate::oracle::MAX_BRUTE_CAP)?.relaxed_domination_polynomial(&g, exempt)
}

fn mtable(c: &mut Checker, max_n: usize) -> Result<()> {
    for r in 1..=4 {
        let mut table = MTable::new(r)?;
        let top = if r <= 3 { 5 } else { 2 };
        for n in 0..=top {
            for t in 0..=r {
                let got = table.get(n, t)?.clone();
                c.equal(format!("m^{t}_{{{n},{r}}}"), &relaxed_pnkr(n, t, r)?, &got);
            }
        }
    }
    for n in 1..=max_n {
        let g = cartesian_product(&Graph::path(n)?, &Graph::complete(3)?)?.0;
        c.equal(format!("P{n}□K3"), &brute(&g)?, &pn_kr_poly(n, 3)?);
    }
    Ok(())
}

fn lemma(c: &mut Checker, max_n: usize) -> Result<()> {
    let oracle = BruteForce::new(crate::oracle::MAX_BRUTE_CAP)?;
    for n in 1..=max_n {
        c.equal(format!("A_{n}"), &oracle.both_endpoints_count(n)?, &ladder_a_poly(n)?);
    }
    Ok(())
}

/// `x·D(G/z) + x·D(G - N[z]) + D(G - z) - D(G)`.
pub fn pz_rhs(g: &Graph, z: usize) -> Result<IntPolynomial> {
    let x = IntPolynomial::x();
    let contracted = brute(&g.contract_vertex(z)?)?;
    let outside = brute(&g.delete_vertices(g.closed_neighbors(z)).0)?;
    let without = brute(&g.delete_vertex(z)?)?;
    Ok(&(&(&(&x * &contracted) + &(&x * &outside)) + &without) - &brute(g)?)
}

fn pz(c: &mut Checker, seed: u64, trials: usize, max_n: usize) -> Result<()> {
    let oracle = BruteForce::new(crate::oracle::MAX_BRUTE_CAP)?;
    let x1 = IntPolynomial::from_i64s(&[1, 1]);
    for (i, g) in random_graphs(seed, trials, max_n)?.iter().enumerate() {
        for z in 0..g.n() {
            let lhs = &oracle.pz_polynomial(g, z)? * &x1;
            c.equal(format!("graph {i} ({}), z={z}", describe(g)), &pz_rhs(g, z)?, &lhs);
        }
    }
    Ok(())
}

fn central(c: &mut Checker, max_n: usize) -> Result<()> {
    let mut terms = Vec::new();
    for n in 1..=max_n {
        let got = kr_ks_poly(n, 2)?.coefficient(n as i64);
        c.equal(format!("[x^{n}] K{n}□K2"), &binomial(2 * n, n), &got);
        terms.push(got);
    }
    let seq = IndexedSequence::new(1, terms);
    match guess_holonomic(&seq, 1, 1)? {
        Some(rec) => {
            c.check("holonomic order/degree", rec.order == 1 && rec.degree() == 1, || {
                format!("found {rec}")
            });
            let report = verify_recurrence(RecurrenceData::Sequence(&seq), &rec)?;
            c.check("holonomic re-verifies", report.passed, || {
                format!("fails at {:?}", report.first_failure)
            });
        }
        None => c.check("holonomic guess", false, || "no recurrence found".into()),
    }
    Ok(())
}

fn ladder_gamma(c: &mut Checker, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        let got = ladder_poly(n)?.min_support()?;
        c.equal(format!("γ(L{n})"), &ladder_domination_number(n), &got);
    }
    Ok(())
}

fn xpoly(c: &[i64]) -> RatPolynomial {
    IntPolynomial::from_i64s(c).to_rational()
}

fn expect_polyx(
    c: &mut Checker,
    name: &str,
    polys: &[IntPolynomial],
    max_order: usize,
    degree: usize,
    expected: RecurrenceSpec,
) -> Result<()> {
    let got = guess_polyx_recurrence(polys, max_order, degree)?;
    c.check(name, got.as_ref() == Some(&expected), || {
        format!("expected {expected}, got {got:?}")
    });
    Ok(())
}

/// `(x, x, x)` from paths and cycles and the five-term ladder recurrence.
fn recurrences(c: &mut Checker, max_n: usize) -> Result<()> {
    let x = xpoly(&[0, 1]);
    let eq1 = RecurrenceSpec::poly_x(vec![x.clone(), x.clone(), x]);
    let paths: Vec<IntPolynomial> = (0..=max_n.min(12)).map(path_poly).collect();
    expect_polyx(c, "paths", &paths, 3, 1, eq1.clone())?;
    let cycles: Vec<IntPolynomial> = (3..=max_n).map(cycle_poly).collect::<Result<_>>()?;
    expect_polyx(c, "cycles", &cycles, 3, 1, eq1)?;
    let ladder = RecurrenceSpec::poly_x(vec![
        xpoly(&[0, 2, 1]),
        xpoly(&[0, 1, 1]),
        xpoly(&[0, 0, 1, 1]),
        xpoly(&[0, 0, 0, -1]),
        xpoly(&[0, 0, 0, -1]),
    ]);
    let ladders = ladder_polys(max_n).split_off(1);
    expect_polyx(c, "ladders", &ladders, 5, 3, ladder)?;
    Ok(())
}

/// Strong-product recurrences on composed members, and the composed members
/// against enumeration of the product graphs.
fn corollaries(c: &mut Checker, max_n: usize) -> Result<()> {
    let report = verify_strong_corollaries(max_n, 3);
    for check in &report.checks {
        c.check(
            format!("{:?} n={} r={}", check.family, check.n, check.r),
            check.passed,
            || "recurrence does not hold".into(),
        );
    }
    let oracle = BruteForce::new(crate::oracle::MAX_BRUTE_CAP)?;
    let ladders = ladder_polys(max_n + 1);
    for r in 1..=3 {
        let y = IntPolynomial::binomial_shift(r);
        let kr = Graph::complete(r)?;
        for n in 1..=max_n + 1 {
            let cases = [
                ("P", Some((Graph::path(n)?, path_poly(n)))),
                (
                    "C",
                    if n >= 3 { Some((Graph::cycle(n)?, cycle_poly(n)?)) } else { None },
                ),
                (
                    "L",
                    Some((
                        cartesian_product(&Graph::path(n)?, &Graph::complete(2)?)?.0,
                        ladders[n].clone(),
                    )),
                ),
            ];
            for (name, case) in cases {
                let Some((g, d)) = case else { continue };
                let (h, _) = crate::graph::product(
                    crate::graph::ProductKind::Strong,
                    &g,
                    &kr,
                    DEFAULT_PRODUCT_CAP,
                )?;
                c.equal(
                    format!("{name}{n}⊠K{r} member"),
                    &oracle.twin_class_polynomial(&h)?,
                    &d.compose(&y),
                );
            }
        }
    }
    Ok(())
}

fn reduction(c: &mut Checker, seed: u64, trials: usize, max_n: usize) -> Result<()> {
    let gammas: Vec<Rational> = ["1", "2", "1/2", "-3"]
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_>>()?;
    for (i, g) in random_graphs(seed, trials, max_n)?.iter().enumerate() {
        let expected = brute(g)?;
        for gamma in &gammas {
            let trace =
                interpolation_reduction(g, &BruteForceEvaluator::new(gamma.clone()), DEFAULT_PRODUCT_CAP)?;
            let case = format!("graph {i} ({}), γ={gamma}", describe(g));
            c.equal(case.clone(), &expected, &trace.polynomial);
            c.equal(format!("{case} queries"), &(g.n() + 1), &trace.queries());
        }
    }
    for bad in ["0", "-1", "-2"] {
        let gamma = parse_rational(bad)?;
        let never = FnEvaluator::new(gamma, |_: &Graph| -> Result<Rational> {
            Err(Error::Internal("oracle queried for a forbidden γ".into()))
        });
        let result = interpolation_reduction(&Graph::path(2)?, &never, DEFAULT_PRODUCT_CAP);
        c.check(format!("γ={bad} rejected"), matches!(result, Err(Error::RejectedGamma(_))), || {
            format!("got {result:?}")
        });
    }
    Ok(())
}

/// Runs several suites; `bounds` apply to each.
pub fn run_suites(suites: &[Suite], bounds: &Bounds) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|s| s.run(bounds)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn random_graphs_are_seeded() {
        let a = random_graphs(7, 5, 9).unwrap();
        let b = random_graphs(7, 5, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.n() >= 1 && g.n() <= 9));
    }

    #[test]
    fn small_suites_pass() {
        let small = Bounds {
            max_n: Some(4),
            trials: Some(3),
            ..Bounds::default()
        };
        for s in [Suite::Table1, Suite::Paths, Suite::Lemma, Suite::Pz, Suite::Strong, Suite::Gk2] {
            let report = s.run(&small).unwrap();
            assert!(report.passed, "{s}: {:?}", report.failures);
            assert!(report.checks > 0);
        }
    }
}
