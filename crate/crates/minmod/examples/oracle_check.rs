//! Cross-check the branching engine against the brute-force oracles on
//! a seeded random corpus.
//!
//! The oracles enumerate candidate sets exhaustively — exponential, but
//! trustworthy and entirely independent of the branching machinery.  On
//! instances small enough for both, the two must agree exactly; this
//! example runs that comparison live over three semantics.
//!
//! Run with `cargo run --example oracle_check`.

use minmod::checkers::{brute_answer_sets, brute_minimal_models, brute_stable_models};
use minmod::{ans_set, gen_random, min_mod, stb_mod, EngineOptions, GenMode, Instance};

fn main() {
    let opts = EngineOptions::default();
    let (mut theories, mut programs) = (0u32, 0u32);

    for seed in 0..40 {
        let n = 4 + seed % 5;
        let i = gen_random(n, 2 * n, 3, GenMode::Cnf, u64::from(seed));
        let Instance::Cnf { theory, .. } = &i else { unreachable!() };
        let engine = min_mod(theory, &opts).models;
        let oracle = brute_minimal_models(theory, None).expect("within oracle cap");
        assert_eq!(engine, oracle, "minimal-model mismatch at seed {seed}");
        theories += 1;
    }

    for seed in 0..40 {
        let n = 3 + seed % 5;
        let i = gen_random(n, 2 * n, 3, GenMode::Normal, u64::from(seed));
        let Instance::Program { program, .. } = &i else { unreachable!() };
        let engine = stb_mod(program, &opts).models;
        let oracle = brute_stable_models(program, None).expect("within oracle cap");
        assert_eq!(engine, oracle, "stable-model mismatch at seed {seed}");

        let i = gen_random(n, 2 * n, 3, GenMode::Disjunctive, u64::from(seed));
        let Instance::Program { program, .. } = &i else { unreachable!() };
        let engine = ans_set(program, &opts).models;
        let oracle = brute_answer_sets(program, None).expect("within oracle cap");
        assert_eq!(engine, oracle, "answer-set mismatch at seed {seed}");
        programs += 2;
    }

    println!("engine agrees with the oracle on {theories} random theories");
    println!("engine agrees with the oracle on {programs} random programs");
}
