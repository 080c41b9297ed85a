//! The built-in instance families and their exact model counts.
//!
//! `E(t, x)` — all width-`t` positive clauses over `x` atoms — has
//! exactly `C(x, t-1)` minimal models, each of size `x - t + 1`.
//! `F(t, k)` — `k` disjoint copies of `E` over `2t-1` atoms — has
//! `C(2t-1, t)^k` models while its size grows only linearly in `k`,
//! which is what makes it a stress test for enumeration.  Both exist in
//! three isomorphic forms (CNF, normal rules, disjunctive facts) whose
//! model sets coincide atom for atom.
//!
//! Run with `cargo run --example families`.

use minmod::{gen_e, gen_f, min_mod, stb_mod, EngineOptions, GenMode, Instance};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn main() {
    let opts = EngineOptions::default();

    println!("E family: C(x, t-1) minimal models over x atoms");
    for (t, x) in [(2u32, 4u32), (2, 6), (3, 5), (4, 7)] {
        let i = gen_e(t, x, GenMode::Cnf).unwrap();
        let Instance::Cnf { theory, .. } = &i else { unreachable!() };
        let found = min_mod(theory, &opts).models.len() as u64;
        let formula = binomial(u64::from(x), u64::from(t - 1));
        assert_eq!(found, formula);
        println!("  E(t={t}, x={x}): {found} models (C({x},{}) = {formula})", t - 1);
    }

    println!("F family: C(2t-1, t)^k models from k disjoint blocks");
    for (t, k) in [(2u32, 1u32), (2, 3), (3, 2)] {
        let i = gen_f(t, k, GenMode::Cnf).unwrap();
        let Instance::Cnf { theory, .. } = &i else { unreachable!() };
        let e = min_mod(theory, &opts);
        let base = binomial(u64::from(2 * t - 1), u64::from(t));
        assert_eq!(e.models.len() as u64, base.pow(k));
        println!(
            "  F(t={t}, k={k}): {} atoms, {} clauses, {} models = {base}^{k}",
            theory.n(),
            theory.clause_count(),
            e.models.len()
        );
    }

    // The same combinatorics through stable-model glasses: the normal
    // form of F(2,2) has the same nine models as its CNF form.
    let nrm = gen_f(2, 2, GenMode::Normal).unwrap();
    let Instance::Program { program, .. } = &nrm else { unreachable!() };
    let stable = stb_mod(program, &opts);
    println!(
        "F(2,2) as a normal program: {} stable models (same sets as CNF)",
        stable.models.len()
    );
}
