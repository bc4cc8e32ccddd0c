//! Exact arithmetic in Q(w_n): cyclotomic polynomials, root powers,
//! inverses, and the geometric sum identity.
//!
//! Run with: cargo run --release --example cyclotomic_arithmetic

use chebotarev::cyclotomic::{
    cyclotomic_polynomial, geometric_root_sum, root_power, CycElem, Rational,
};

fn main() {
    println!("Cyclotomic polynomials (minimal polynomials of w_n):");
    for n in [1usize, 2, 3, 4, 6, 12, 30] {
        println!("  Phi_{n}(x) = {}", cyclotomic_polynomial(n));
    }

    // Everything below happens in exact coordinates over the power basis;
    // no floating point is involved anywhere.
    println!("\nPower-basis representatives over n = 12 (phi(12) = 4):");
    for e in [0i64, 1, 4, 7, 11] {
        println!("  w^{e} = {}", root_power(12, e));
    }

    println!("\nField arithmetic over n = 3:");
    let w = root_power(3, 1);
    let one_plus_w = &CycElem::one(3) + &w;
    println!("  (1 + w)^2      = {}", &one_plus_w * &one_plus_w);
    let inv = one_plus_w.inv().unwrap();
    println!("  (1 + w)^-1     = {inv}");
    println!("  product check  = {}", &one_plus_w * &inv);

    println!("\nRational coordinates stay exact:");
    let half = CycElem::from_rational(12, Rational::new(1.into(), 2.into()));
    let mixed = &half + &root_power(12, 5);
    println!("  1/2 + w^5      = {mixed}");
    println!(
        "  parsed back    = {}",
        CycElem::parse(12, &mixed.to_string()).unwrap()
    );

    println!("\nGeometric sums 1 + w^i + ... + w^((n-1)i) over n = 6:");
    for i in 0..8i64 {
        println!("  i = {i}: {}", geometric_root_sum(6, i));
    }
}
