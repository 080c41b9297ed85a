//! Enumerate every minimal model of a small CNF theory.
//!
//! The theory says: at least one of `rain`/`sprinkler` happened, either
//! way the grass is `wet`, and a `wet` lawn rules out `mowing`.  A
//! minimal model is one from which no true atom can be dropped; the
//! enumeration below finds exactly the two circumstance-minimal
//! explanations rather than all eight satisfying assignments.
//!
//! Run with `cargo run --example minimal_models`.

use minmod::{min_mod, EngineOptions, Lit, Symbols, Theory};

fn main() {
    let (rain, sprinkler, wet, mowing) = (0, 1, 2, 3);
    let symbols = Symbols::new(
        ["rain", "sprinkler", "wet", "mowing"]
            .map(String::from)
            .to_vec(),
    );
    let theory = Theory::from_clause_lits(
        4,
        [
            vec![Lit::pos(rain), Lit::pos(sprinkler)],
            vec![Lit::neg(rain), Lit::pos(wet)],
            vec![Lit::neg(sprinkler), Lit::pos(wet)],
            vec![Lit::neg(wet), Lit::neg(mowing)],
        ],
    );

    let result = min_mod(&theory, &EngineOptions::default());
    println!("minimal models of the lawn theory:");
    for m in &result.models {
        println!("  {{{}}}", symbols.model_line(m));
    }
    println!(
        "branching tree: {} leaves, {} nodes, depth {}",
        result.stats.leaves, result.stats.nodes, result.stats.max_depth
    );
}
