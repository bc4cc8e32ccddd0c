//! Exhaustive finite verification of the sparsity bound and its equality
//! characterization: for every support set S and root set R, the strict
//! region has full column rank (no polynomial beats the bound) and every
//! boundary kernel vector classifies into the extremal family.
//!
//! Run with: cargo run --release --example theorem_sweep

use chebotarev::uncertainty::verify_theorem_exhaustive;

fn main() {
    println!("n | pairs checked | boundary kernels | verdict | time");
    println!("--+---------------+------------------+---------+------");
    for n in 2..=12usize {
        let report = verify_theorem_exhaustive(n).unwrap();
        let kernels: u64 = report.shards.iter().map(|s| s.boundary_kernels).sum();
        println!(
            "{:2} | {:13} | {:16} | {:7} | {} ms",
            n,
            report.pairs_checked,
            kernels,
            if report.passed { "pass" } else { "FAIL" },
            report.elapsed.as_millis()
        );
        assert!(report.passed);
    }

    // The shard breakdown for one n shows where the work concentrates:
    // (|S|, |R|) size classes with w * (n - |R|) <= n.
    let n = 10;
    let report = verify_theorem_exhaustive(n).unwrap();
    println!("\nShards for n = {n} (support size, root size, pairs, kernels):");
    for s in report.shards.iter().filter(|s| s.boundary_kernels > 0) {
        println!(
            "  w = {:2}, k = {:2}: {:6} pairs, {} boundary kernels",
            s.support_size, s.root_size, s.pairs, s.boundary_kernels
        );
    }
}
