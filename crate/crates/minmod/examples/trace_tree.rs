//! Inspect the branching tree itself through the engine's trace.
//!
//! With tracing enabled, the engine records one line per branch taken:
//! the depth, the id of the cover case that fired at the parent node,
//! and the literal set the branch assumes.  On a triangle of 2-clauses
//! the tree is the canonical three-way split — each branch commits one
//! atom positively and shuts its neighbor off — which is exactly the
//! structure behind the `3^(n/3)` leaf bound.
//!
//! Run with `cargo run --example trace_tree`.

use minmod::{min_mod, EngineOptions, Lit, Symbols, Theory};

fn main() {
    let symbols = Symbols::new(["p", "q", "r"].map(String::from).to_vec());
    // The triangle p∨q, p∨r, q∨r: its minimal models are the three
    // two-element subsets.
    let theory = Theory::from_clause_lits(
        3,
        [
            [Lit::pos(0), Lit::pos(1)],
            [Lit::pos(0), Lit::pos(2)],
            [Lit::pos(1), Lit::pos(2)],
        ],
    );

    let opts = EngineOptions {
        trace: true,
        ..EngineOptions::default()
    };
    let e = min_mod(&theory, &opts);

    println!("branch trace for the triangle theory:");
    for line in &e.trace {
        println!(
            "  depth {}  case {:<8}  assume {}",
            line.depth,
            line.case,
            line.branch.display(&symbols)
        );
    }
    println!("leaves: {}  models: {}", e.stats.leaves, e.models.len());
    for m in &e.models {
        println!("  model {{{}}}", symbols.model_line(m));
    }
}
