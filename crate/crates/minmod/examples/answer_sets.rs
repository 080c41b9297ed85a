//! Enumerate the answer sets of a disjunctive logic program.
//!
//! Disjunctive heads express genuine choice: `tea | coffee.` forces one
//! of the two but — by the minimality built into answer-set semantics —
//! never both without a reason.  The second rule adds a dependent
//! consequence, and the third shows that disjunction interacts with
//! negation: cake is on offer unless tea was picked.
//!
//! Run with `cargo run --example answer_sets`.

use minmod::programs::{Program, ProgramKind, Rule};
use minmod::{ans_set, EngineOptions, Symbols};

fn main() {
    let (tea, coffee, water, cake) = (0, 1, 2, 3);
    let symbols = Symbols::new(
        ["tea", "coffee", "water", "cake"].map(String::from).to_vec(),
    );
    let program = Program::new(
        4,
        [
            Rule::new([tea, coffee], [], []),
            Rule::new([water], [tea], []),
            Rule::new([cake], [], [tea]),
        ],
    )
    .expect("well-formed program");
    assert_eq!(program.kind(), ProgramKind::Disjunctive);

    let result = ans_set(&program, &EngineOptions::default());
    println!("answer sets of the beverage program:");
    for m in &result.models {
        println!("  {{{}}}", symbols.model_line(m));
    }

    // Each answer set is minimal: {tea, coffee, ...} never appears,
    // because dropping either atom still satisfies the disjunction.
    assert!(result
        .models
        .iter()
        .all(|m| !(m.contains(&tea) && m.contains(&coffee))));
    println!("no answer set takes both tea and coffee");
}
