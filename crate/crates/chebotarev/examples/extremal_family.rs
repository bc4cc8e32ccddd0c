//! The extremal family D_{n,r,l}(z) = z^l (1 + z^r + ... + z^((n/r-1)r)):
//! the only polynomials attaining equality in the sparsity bound, up to
//! rotation z -> w^j z and scalar multiples.
//!
//! Run with: cargo run --release --example extremal_family

use chebotarev::cyclotomic::root_power;
use chebotarev::uncertainty::{
    check_bound, classify_extremal, decompose_progression, enumerate_extremal, generate_extremal,
    rotate, scale,
};

fn main() {
    let n = 12;
    println!("All sigma({n}) family members (r | n, 0 <= l < r):");
    for (r, l, poly) in enumerate_extremal(n).unwrap() {
        let b = check_bound(&poly).unwrap();
        println!("  D_{{{n},{r},{l}}} = {poly}  (w = {}, k = {})", b.w, b.k);
    }

    // Rotations and scalings stay on the boundary and classify back to a
    // canonical descriptor with j reduced modulo n/r.
    println!("\nOrbit round-trips:");
    let base = generate_extremal(12, 4, 1).unwrap();
    for (j, c) in [(0i64, 1i64), (5, 1), (7, 3)] {
        let p = scale(&rotate(&base, j), &chebotarev::CycElem::from_integer(12, c)).unwrap();
        let d = classify_extremal(&p).unwrap().unwrap();
        println!("  rotate by {j}, scale by {c}: {p}",);
        println!(
            "    -> descriptor (r = {}, l = {}, j = {}, c = {}), rebuilt = {}",
            d.r,
            d.l,
            d.j,
            d.c,
            d.reconstruct().unwrap()
        );
    }

    // A rotation by w itself: coefficients leave the rationals but the
    // descriptor still reconstructs the input exactly.
    let twisted = scale(&rotate(&base, 2), &root_power(12, 5)).unwrap();
    let d = classify_extremal(&twisted).unwrap().unwrap();
    println!("\nTwisted by w^5: {twisted}");
    println!(
        "  -> (r = {}, l = {}, j = {}, c = {}), exact round-trip: {}",
        d.r,
        d.l,
        d.j,
        d.c,
        d.reconstruct().unwrap() == twisted
    );

    // The structural facts behind the classification: an equality case
    // decomposes as z^l Q(z^r) with a rank-1 sub-circulant.
    let (l, r, q) = decompose_progression(&twisted).unwrap().unwrap();
    println!(
        "\nProgression decomposition: l = {l}, r = {r}, Q = {q} (sub-circulant rank = {})",
        chebotarev::spectral::circulant(&q).rank()
    );

    // Polynomials off the boundary are simply not members.
    let off = chebotarev::SparsePoly::from_int_terms(12, &[(0, 1), (1, 1)]).unwrap();
    println!(
        "\nP = {off}: equality = {}, classified = {:?}",
        check_bound(&off).unwrap().equality,
        classify_extremal(&off).unwrap().map(|d| (d.r, d.l, d.j))
    );
}
