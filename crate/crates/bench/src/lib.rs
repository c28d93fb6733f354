//! Shared inputs for the criterion benchmarks in `benches/`.

use dompoly::engines::{ladder_poly, path_poly};
use dompoly::sequences::IndexedSequence;
use dompoly::{Graph, IntPolynomial};

/// `G □ K_2` subject graphs: paths, cycles and a dense graph.
pub fn gk2_inputs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [6, 8, 10] {
        out.push((format!("P{n}"), Graph::path(n).expect("path")));
        out.push((format!("C{n}"), Graph::cycle(n).expect("cycle")));
    }
    out.push(("K8".into(), Graph::complete(8).expect("complete")));
    out
}

/// `D(P_0) ..= D(P_n)`.
pub fn path_family(n: usize) -> Vec<IntPolynomial> {
    (0..=n).map(path_poly).collect()
}

/// `D(L_1) ..= D(L_n)`.
pub fn ladder_family(n: usize) -> Vec<IntPolynomial> {
    (1..=n).map(|k| ladder_poly(k).expect("ladder index >= 1")).collect()
}

/// `C(2n, n)` for `n = 1..=count`.
pub fn central_binomials(count: usize) -> IndexedSequence {
    let terms = (1..=count).map(|n| dompoly::polynomial::binomial(2 * n, n)).collect();
    IndexedSequence::new(1, terms)
}
