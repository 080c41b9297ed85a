//! Enumerate the stable models of a normal logic program.
//!
//! The program is the classic two-cycle of mutual exclusion through
//! negation — `day :- not night. night :- not day.` — plus a rule that
//! lamps burn at night.  Stable models are the self-justifying
//! interpretations: assuming the model's negative facts, the program
//! derives exactly the model's positive ones.
//!
//! Run with `cargo run --example stable_models`.

use minmod::programs::{Program, Rule};
use minmod::{stb_mod, EngineOptions, Symbols};

fn main() {
    let (day, night, lamp) = (0, 1, 2);
    let symbols = Symbols::new(["day", "night", "lamp"].map(String::from).to_vec());
    let program = Program::new(
        3,
        [
            Rule::new([day], [], [night]),
            Rule::new([night], [], [day]),
            Rule::new([lamp], [night], []),
        ],
    )
    .expect("well-formed program");

    let result = stb_mod(&program, &EngineOptions::default());
    println!("stable models of the day/night program:");
    for m in &result.models {
        println!("  {{{}}}", symbols.model_line(m));
    }
    println!(
        "candidates emitted {}, surviving the stability test {}",
        result.stats.candidates_after_dedup,
        result.models.len()
    );

    // A program whose only rule defeats itself has no stable model at
    // all; the enumeration is simply empty.
    let paradox = Program::new(1, [Rule::new([0], [], [0])]).unwrap();
    let none = stb_mod(&paradox, &EngineOptions::default());
    println!("\"a :- not a.\" has {} stable models", none.models.len());
}
