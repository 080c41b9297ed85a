//! Watch the branching-tree guarantees hold on live runs.
//!
//! The engine's trees are provably small: a 2-CNF theory over `n` atoms
//! branches into at most `3^(n/3)` leaves, and a simplified 3-CNF
//! theory into at most `1.6702^n`.  The `F` family shows the 2-CNF
//! bound is tight — `F(2,k)` produces exactly `3^k = 3^(n/3)` leaves,
//! every one of them a model.  Dead ends count as leaves too, so the
//! measured number is an honest tree size.
//!
//! Run with `cargo run --example leaf_bounds`.

use minmod::theory::sigma_simplify;
use minmod::{gen_f, gen_random, min_mod, EngineOptions, GenMode, Instance};

fn main() {
    let opts = EngineOptions::default();

    println!("F(2,k): leaves hit the 3^(n/3) ceiling exactly");
    for k in 1..=5u32 {
        let i = gen_f(2, k, GenMode::Cnf).unwrap();
        let Instance::Cnf { theory, .. } = &i else { unreachable!() };
        let e = min_mod(theory, &opts);
        let n = theory.n();
        assert_eq!(e.stats.leaves, 3u64.pow(k));
        println!(
            "  k={k}: n={n}, leaves={} = 3^{}, models={}",
            e.stats.leaves,
            n / 3,
            e.models.len()
        );
    }

    println!("random simplified 3-CNF: leaves stay under 1.6702^n");
    for seed in 0..8u64 {
        let n = 9;
        let i = gen_random(n, 18, 3, GenMode::Cnf, seed);
        let Instance::Cnf { theory, .. } = &i else { unreachable!() };
        let simplified = sigma_simplify(theory);
        let e = min_mod(&simplified, &opts);
        let bound = 1.6702f64.powi(n as i32);
        assert!((e.stats.leaves as f64) <= bound);
        println!(
            "  seed={seed}: leaves={:4}  bound={bound:.0}  models={}",
            e.stats.leaves,
            e.models.len()
        );
    }
}
