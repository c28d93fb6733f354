//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use dompoly::engines::{
    cycle_poly, kr_ks_poly, ladder_a_poly, ladder_poly, path_poly, pn_kr_poly,
    strong_with_complete, Gk2Engine, MTable,
};
use dompoly::graph::{cartesian_product, strong_product};
use dompoly::oracle::{BruteForce, MAX_BRUTE_CAP};
use dompoly::polynomial::{binomial, parse_rational};
use dompoly::reduction::{interpolation_reduction, BruteForceEvaluator, FnEvaluator};
use dompoly::sequences::{
    guess_holonomic, guess_polyx_recurrence, verify_recurrence, IndexedSequence, RecurrenceData,
    RecurrenceSpec,
};
use dompoly::{Error, Graph, IntPolynomial, RatPolynomial, Rational, VertexSet};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

const TABLE1: [&[i64]; 6] = [
    &[0, 2, 1],
    &[0, 0, 6, 4, 1],
    &[0, 0, 3, 16, 15, 6, 1],
    &[0, 0, 0, 12, 48, 52, 28, 8, 1],
    &[0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1],
    &[0, 0, 0, 0, 17, 168, 470, 604, 453, 216, 66, 12, 1],
];

fn oracle() -> BruteForce {
    BruteForce::new(MAX_BRUTE_CAP).unwrap()
}

fn brute(g: &Graph) -> IntPolynomial {
    oracle().domination_polynomial(g).unwrap()
}

/// Plain enumeration up to 20 vertices, closed-twin classes beyond.
fn brute_large(g: &Graph) -> IntPolynomial {
    if g.n() <= 20 {
        brute(g)
    } else {
        oracle().twin_class_polynomial(g).unwrap()
    }
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn k(r: usize) -> Graph {
    Graph::complete(r).unwrap()
}

fn ladder(n: usize) -> Graph {
    cartesian_product(&Graph::path(n).unwrap(), &k(2)).unwrap().0
}

fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let prob = rng.gen_range(0.25..0.75);
            Graph::random(n, prob, &mut rng).unwrap()
        })
        .collect()
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, want: &T, got: &T) -> Outcome {
    if want == got {
        Ok(())
    } else {
        Err(format!("{what}: expected {want}, got {got}"))
    }
}

fn table1_agreement() -> Outcome {
    let engine = Gk2Engine::default();
    for n in 1..=6 {
        let row = p(TABLE1[n - 1]);
        expect_eq(&format!("brute L{n}"), &row, &brute(&ladder(n)))?;
        expect_eq(&format!("ladder recurrence L{n}"), &row, &ladder_poly(n).unwrap())?;
        let gk2 = engine.poly(&Graph::path(n).unwrap()).unwrap();
        expect_eq(&format!("gk2 P{n}"), &row, &gk2)?;
        expect_eq(&format!("pnkr n={n}"), &row, &pn_kr_poly(n, 2).unwrap())?;
    }
    Ok(())
}

fn kr_ks_closed_form() -> Outcome {
    for r in 2..=5 {
        for s in 2..=4 {
            if r * s > 20 {
                continue;
            }
            let g = cartesian_product(&k(r), &k(s)).unwrap().0;
            expect_eq(&format!("K{r}□K{s}"), &brute(&g), &kr_ks_poly(r, s).unwrap())?;
        }
    }
    for r in 1..=10 {
        let y = IntPolynomial::binomial_shift(r);
        let xr = IntPolynomial::x_pow(r);
        let s2 = &(&y * &y) + &xr.scale(&BigInt::from(2));
        expect_eq(&format!("K{r}□K2 identity"), &s2, &kr_ks_poly(r, 2).unwrap())?;
        let x2r = &IntPolynomial::linear_power(2, r) - &IntPolynomial::one();
        let s3 = &y.pow(3) + &(&xr * &x2r).scale(&BigInt::from(3));
        expect_eq(&format!("K{r}□K3 identity"), &s3, &kr_ks_poly(r, 3).unwrap())?;
    }
    Ok(())
}

fn strong_composition() -> Outcome {
    for (i, g) in random_graphs(101, 20, 8).iter().enumerate() {
        let d = brute(g);
        for r in [2, 3] {
            let h = strong_product(g, &k(r)).unwrap().0;
            let composed = d.compose(&IntPolynomial::binomial_shift(r));
            expect_eq(&format!("graph {i} ⊠ K{r}"), &brute(&h), &composed)?;
            expect_eq("strong_with_complete", &composed, &strong_with_complete(&d, r).unwrap())?;
        }
    }
    Ok(())
}

fn gk2_case(engine: &Gk2Engine, name: &str, g: &Graph) -> Outcome {
    let expected = brute(&cartesian_product(g, &k(2)).unwrap().0);
    let terms = engine.terms(g).map_err(|e| format!("{name}: {e}"))?;
    let x1 = p(&[1, 1]);
    for t in &terms {
        let q = t
            .bracket
            .exact_divide(&x1)
            .map_err(|e| format!("{name}, W={:?}: {e}", t.w.iter().collect::<Vec<_>>()))?;
        if &q * &x1 != t.bracket || q.shift(g.n() - t.open_size) != t.term {
            return Err(format!("{name}: term for W={:?} inconsistent", t.w.iter().collect::<Vec<_>>()));
        }
    }
    let sum: IntPolynomial = terms.into_iter().map(|t| t.term).sum();
    expect_eq(name, &expected, &sum)
}

fn gk2_decomposition() -> Outcome {
    let engine = Gk2Engine::default();
    for (i, g) in random_graphs(202, 20, 9).iter().enumerate() {
        gk2_case(&engine, &format!("random graph {i}"), g)?;
    }
    for n in 1..=9 {
        gk2_case(&engine, &format!("P{n}"), &Graph::path(n).unwrap())?;
        gk2_case(&engine, &format!("K{n}"), &k(n))?;
        if n >= 3 {
            gk2_case(&engine, &format!("C{n}"), &Graph::cycle(n).unwrap())?;
        }
    }
    Ok(())
}

fn paths_and_cycles() -> Outcome {
    for n in 0..=12 {
        expect_eq(&format!("P{n}"), &brute(&Graph::path(n).unwrap()), &path_poly(n))?;
        if n >= 3 {
            let c = Graph::cycle(n).unwrap();
            expect_eq(&format!("C{n}"), &brute(&c), &cycle_poly(n).unwrap())?;
        }
    }
    Ok(())
}

fn relaxed(n: usize, t: usize, r: usize) -> IntPolynomial {
    if n == 0 {
        return IntPolynomial::one();
    }
    let g = cartesian_product(&Graph::path(n).unwrap(), &k(r)).unwrap().0;
    let exempt: VertexSet = (0..t).collect();
    oracle().relaxed_domination_polynomial(&g, exempt).unwrap()
}

fn m_system() -> Outcome {
    let one = IntPolynomial::one();
    for r in 1..=4 {
        let xp1 = |e: usize| IntPolynomial::linear_power(1, e);
        for t in 0..=r {
            let delta = if t == r { one.clone() } else { IntPolynomial::zero() };
            expect_eq(&format!("m^{t}_0,{r}"), &one, &relaxed(0, t, r))?;
            let m1 = &(&xp1(r) - &one) + &delta;
            expect_eq(&format!("m^{t}_1,{r}"), &m1, &relaxed(1, t, r))?;
            let m2 = &(&(&(&(&xp1(2 * r) - &xp1(r).scale(&BigInt::from(2))) + &IntPolynomial::x_pow(r))
                + &one)
                + &(&IntPolynomial::x_pow(r - t) * &xp1(t)))
                - &delta;
            expect_eq(&format!("m^{t}_2,{r}"), &m2, &relaxed(2, t, r))?;
        }
    }
    for r in 1..=3 {
        let rows: Vec<Vec<IntPolynomial>> =
            (0..=5).map(|n| (0..=r).map(|t| relaxed(n, t, r)).collect()).collect();
        let mut table = MTable::new(r).unwrap();
        for n in 3..=5 {
            let prev = &rows[n - 1];
            let prev2 = &rows[n - 2];
            let nonempty: IntPolynomial = (1..=r).map(|i| prev[i].scale(&binomial(r, i)).shift(i)).sum();
            for t in 0..=r {
                let want = if t == r {
                    &nonempty + &prev[0]
                } else {
                    let inner: IntPolynomial = (0..=t)
                        .map(|i| prev2[r - t + i].scale(&binomial(t, i)).shift(i))
                        .sum();
                    &nonempty + &inner.shift(r - t)
                };
                expect_eq(&format!("recursion m^{t}_{n},{r}"), &want, &rows[n][t])?;
                expect_eq(&format!("MTable m^{t}_{n},{r}"), &rows[n][t], table.get(n, t).unwrap())?;
            }
        }
    }
    for n in 1..=6 {
        let g = cartesian_product(&Graph::path(n).unwrap(), &k(3)).unwrap().0;
        expect_eq(&format!("P{n}□K3"), &brute(&g), &pn_kr_poly(n, 3).unwrap())?;
    }
    Ok(())
}

fn ladder_lemma() -> Outcome {
    for n in 1..=10 {
        let want = oracle().both_endpoints_count(n).unwrap();
        expect_eq(&format!("A_{n}"), &want, &ladder_a_poly(n).unwrap())?;
    }
    Ok(())
}

fn pz_identity() -> Outcome {
    let x = IntPolynomial::x();
    let x1 = p(&[1, 1]);
    for (i, g) in random_graphs(303, 50, 9).iter().enumerate() {
        let whole = brute(g);
        for z in 0..g.n() {
            let lhs = &oracle().pz_polynomial(g, z).unwrap() * &x1;
            let contracted = brute(&g.contract_vertex(z).unwrap());
            let outside = brute(&g.delete_vertices(g.closed_neighbors(z)).0);
            let without = brute(&g.delete_vertex(z).unwrap());
            let rhs = &(&(&(&x * &contracted) + &(&x * &outside)) + &without) - &whole;
            expect_eq(&format!("graph {i}, z = {z}"), &rhs, &lhs)?;
        }
    }
    Ok(())
}

fn central_binomial() -> Outcome {
    let mut terms = Vec::new();
    for n in 1..=12 {
        let c = kr_ks_poly(n, 2).unwrap().coefficient(n as i64);
        expect_eq(&format!("[x^{n}] K{n}□K2"), &binomial(2 * n, n), &c)?;
        terms.push(c);
    }
    let seq = IndexedSequence::new(1, terms);
    let rec = guess_holonomic(&seq, 1, 1)
        .map_err(|e| e.to_string())?
        .ok_or("no holonomic recurrence found")?;
    if rec.order != 1 || rec.degree() != 1 {
        return Err(format!("expected order 1, degree 1; found {rec}"));
    }
    let report = verify_recurrence(RecurrenceData::Sequence(&seq), &rec).map_err(|e| e.to_string())?;
    if !report.passed || report.checked != 11 {
        return Err(format!("re-verification failed: {report:?}"));
    }
    Ok(())
}

fn ladder_domination_number() -> Outcome {
    for n in 1..=14 {
        let got = ladder_poly(n).unwrap().min_support().unwrap();
        expect_eq(&format!("γ(L{n})"), &(n + 1).div_ceil(2), &got)?;
    }
    Ok(())
}

fn xpoly(c: &[i64]) -> RatPolynomial {
    p(c).to_rational()
}

fn recurrence_mining() -> Outcome {
    let x = xpoly(&[0, 1]);
    let paths: Vec<IntPolynomial> = (0..=12).map(path_poly).collect();
    let got = guess_polyx_recurrence(&paths, 3, 1).map_err(|e| e.to_string())?;
    let want = RecurrenceSpec::poly_x(vec![x.clone(), x.clone(), x]);
    if got.as_ref() != Some(&want) {
        return Err(format!("paths: expected {want}, got {got:?}"));
    }

    let ladders: Vec<IntPolynomial> = (1..=14).map(|n| ladder_poly(n).unwrap()).collect();
    let got = guess_polyx_recurrence(&ladders, 5, 3).map_err(|e| e.to_string())?;
    let want = RecurrenceSpec::poly_x(vec![
        xpoly(&[0, 2, 1]),
        xpoly(&[0, 1, 1]),
        xpoly(&[0, 0, 1, 1]),
        xpoly(&[0, 0, 0, -1]),
        xpoly(&[0, 0, 0, -1]),
    ]);
    if got.as_ref() != Some(&want) {
        return Err(format!("ladders: expected {want}, got {got:?}"));
    }

    // strong-product corollaries on enumerated members
    for r in 1..=3 {
        let y = IntPolynomial::binomial_shift(r);
        let xp1 = IntPolynomial::linear_power(1, r);
        let h: Vec<IntPolynomial> = (0..=8)
            .map(|n| brute_large(&strong_product(&Graph::path(n).unwrap(), &k(r)).unwrap().0))
            .collect();
        for n in 4..=8 {
            let rhs = &y * &(&(&h[n - 1] + &h[n - 2]) + &h[n - 3]);
            expect_eq(&format!("H_{n},{r}"), &rhs, &h[n])?;
        }
        let c: Vec<IntPolynomial> = (0..=8)
            .map(|n| match n {
                0..=2 => IntPolynomial::zero(),
                _ => brute_large(&strong_product(&Graph::cycle(n).unwrap(), &k(r)).unwrap().0),
            })
            .collect();
        for n in 6..=8 {
            let rhs = &y * &(&(&c[n - 1] + &c[n - 2]) + &c[n - 3]);
            expect_eq(&format!("C_{n}⊠K_{r}"), &rhs, &c[n])?;
        }
        let z: Vec<IntPolynomial> = (0..=9)
            .map(|n| match n {
                0 => IntPolynomial::one(),
                _ => brute_large(&strong_product(&ladder(n), &k(r)).unwrap().0),
            })
            .collect();
        let k1 = &IntPolynomial::linear_power(1, 2 * r) - &IntPolynomial::one();
        let k2 = &y * &xp1;
        let k3 = &(&y * &y) * &xp1;
        let k4 = y.pow(3);
        for n in 6..=9 {
            let rhs = &(&(&(&k1 * &z[n - 1]) + &(&k2 * &z[n - 2])) + &(&k3 * &z[n - 3]))
                - &(&k4 * &(&z[n - 4] + &z[n - 5]));
            expect_eq(&format!("Z_{n},{r}"), &rhs, &z[n])?;
        }
    }
    Ok(())
}

fn interpolation() -> Outcome {
    let gammas: Vec<Rational> = ["1", "2", "1/2", "-3"]
        .iter()
        .map(|s| parse_rational(s).unwrap())
        .collect();
    for (i, g) in random_graphs(404, 10, 9).iter().enumerate() {
        let want = brute(g);
        for gamma in &gammas {
            let oracle = BruteForceEvaluator::new(gamma.clone());
            let trace = interpolation_reduction(g, &oracle, 128).map_err(|e| e.to_string())?;
            expect_eq(&format!("graph {i}, γ = {gamma}"), &want, &trace.polynomial)?;
            expect_eq(&format!("graph {i} query count"), &(g.n() + 1), &trace.steps.len())?;
        }
    }
    for bad in ["0", "-1", "-2"] {
        let never = FnEvaluator::new(parse_rational(bad).unwrap(), |_: &Graph| -> dompoly::Result<Rational> {
            Err(Error::Internal("queried".into()))
        });
        match interpolation_reduction(&Graph::path(3).unwrap(), &never, 128) {
            Err(Error::RejectedGamma(_)) => {}
            other => return Err(format!("γ = {bad} not rejected: {other:?}")),
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("ladder table four-way agreement, n = 1..6", table1_agreement),
        ("K_r □ K_s closed form and identities", kr_ks_closed_form),
        ("strong product with K_r by composition", strong_composition),
        ("G □ K_2 decomposition with exact divisions", gk2_decomposition),
        ("path and cycle engines, n <= 12", paths_and_cycles),
        ("m^t bases, recursion and P_n □ K_3", m_system),
        ("both-endpoint ladder count, n <= 10", ladder_lemma),
        ("p_z expansion identity, 50 random graphs", pz_identity),
        ("central binomial coefficients and holonomic guess", central_binomial),
        ("ladder domination number, n <= 14", ladder_domination_number),
        ("recurrence mining and strong-product recurrences", recurrence_mining),
        ("interpolation reduction from point evaluations", interpolation),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
