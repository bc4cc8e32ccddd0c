//! Circulant matrices of sparse polynomials: layout, eigenstructure, and
//! the rank identity rank(C) = n - k.
//!
//! Run with: cargo run --release --example circulant_eigenstructure

use chebotarev::spectral::{circulant, eigencheck, rank_lemma_check, root_count, SparsePoly};

fn main() {
    // P = 1 + z^2 over n = 4.
    let p = SparsePoly::from_int_terms(4, &[(0, 1), (2, 1)]).unwrap();
    let c = circulant(&p);
    println!("Circulant of P = {p} over n = 4:");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| c.at(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    // The DFT vectors f_i are eigenvectors with eigenvalues P(w^i); the
    // check is exact for every i.
    println!("\nEigenstructure check: {}", eigencheck(&p).unwrap());
    for i in 0..4 {
        println!("  P(w^{i}) = {}", p.evaluate_at_root(i));
    }

    // rank(C) = n - k ties the circulant's rank to the number of n-th
    // roots of unity annihilating P.
    println!("\nRank identity on a few polynomials:");
    let samples = [
        SparsePoly::from_int_terms(4, &[(0, 1), (1, 1), (2, 1), (3, 1)]).unwrap(),
        SparsePoly::from_int_terms(4, &[(0, 1), (2, 1)]).unwrap(),
        SparsePoly::from_int_terms(9, &[(0, 2), (5, -1)]).unwrap(),
        SparsePoly::from_int_terms(12, &[(0, 1), (4, 1), (8, 1)]).unwrap(),
    ];
    for p in &samples {
        let lemma = rank_lemma_check(p).unwrap();
        println!(
            "  P = {p} (n = {}): rank = {}, k = {}, rank + k = n holds: {}",
            p.modulus(),
            lemma.rank,
            lemma.k,
            lemma.holds
        );
    }

    // The k above is a count of exact zeros, cross-checkable through
    // gcd(P, x^n - 1) for rational coefficients.
    let p = SparsePoly::from_int_terms(12, &[(0, 1), (4, 1), (8, 1)]).unwrap();
    println!(
        "\nRoot count of {p}: evaluation route = {}, gcd route = {}",
        root_count(&p).unwrap(),
        chebotarev::spectral::root_count_gcd(&p).unwrap()
    );
}
