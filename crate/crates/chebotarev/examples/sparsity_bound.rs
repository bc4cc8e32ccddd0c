//! The sparsity bound: a nonzero polynomial of degree < n with k roots
//! among the n-th roots of unity satisfies w(P) * (n - k) >= n.
//!
//! Run with: cargo run --release --example sparsity_bound

use chebotarev::spectral::SparsePoly;
use chebotarev::uncertainty::{check_bound, prime_case_check};

fn report(p: &SparsePoly) {
    let b = check_bound(p).unwrap();
    println!(
        "  P = {p} over n = {}: w = {}, k = {}, w*(n-k) = {} {} n{}",
        b.n,
        b.w,
        b.k,
        b.product,
        if b.product > b.n { ">" } else { "=" },
        if b.equality { "  (equality!)" } else { "" }
    );
}

fn main() {
    println!("Bound reports (always checked in integer product form):");
    report(&SparsePoly::from_int_terms(4, &[(0, 1), (2, 1)]).unwrap());
    report(&SparsePoly::from_int_terms(4, &[(0, 1), (1, 1), (2, 1)]).unwrap());
    report(&SparsePoly::from_int_terms(6, &[(1, 1), (4, 1)]).unwrap());
    report(&SparsePoly::from_int_terms(9, &[(0, 5)]).unwrap());
    report(&SparsePoly::from_int_terms(12, &[(0, 1), (1, 2), (5, -1), (7, 3)]).unwrap());

    // Dense vanishing: (z^n - 1)/(z - 1) has every nontrivial root.
    let n = 10;
    let all_ones: Vec<(usize, i64)> = (0..n).map(|e| (e, 1)).collect();
    report(&SparsePoly::from_int_terms(n, &all_ones).unwrap());

    // For prime n the bound sharpens to the statement w(P) > k.
    println!("\nPrime restatement w(P) > k:");
    for p in [3usize, 7, 13] {
        let poly = SparsePoly::from_int_terms(p, &[(0, 1), (1, -1)]).unwrap();
        println!(
            "  n = {p}, P = {poly}: w > k holds: {}",
            prime_case_check(&poly).unwrap()
        );
    }
}
