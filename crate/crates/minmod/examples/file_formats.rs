//! Read and write both instance formats, round-trip intact.
//!
//! CNF theories travel as DIMACS (with atom names preserved in
//! `c atom` comments); programs travel as ground rule text (with the
//! atom universe pinned by a `% atoms:` comment).  Parsing what the
//! emitters write reconstructs the instance exactly — names, numbering
//! and all — which is what lets generated benchmark files flow back in
//! through the CLI unchanged.
//!
//! Run with `cargo run --example file_formats`.

use minmod::cli_io::{emit_dimacs, emit_program, parse_dimacs, parse_program};
use minmod::{gen_e, GenMode, Instance};

fn main() {
    // A CNF instance out and back through DIMACS.
    let cnf = gen_e(2, 3, GenMode::Cnf).unwrap();
    let Instance::Cnf { theory, symbols } = &cnf else { unreachable!() };
    let text = emit_dimacs(theory, symbols);
    println!("E(2,3) as DIMACS:\n{text}");
    let parsed = parse_dimacs(&text).unwrap();
    assert_eq!(&parsed.theory, theory);
    assert_eq!(&parsed.symbols, symbols);
    println!("parsed back: {} atoms, {} clauses, names {:?}\n",
        parsed.theory.n(),
        parsed.theory.clause_count(),
        parsed.symbols.names());

    // The same instance as a normal program, out and back through rule
    // text.
    let nrm = gen_e(2, 3, GenMode::Normal).unwrap();
    let Instance::Program { program, symbols } = &nrm else { unreachable!() };
    let text = emit_program(program, symbols);
    println!("E(2,3) as a normal program:\n{text}");
    let parsed = parse_program(&text).unwrap();
    assert_eq!(&parsed.program, program);
    assert_eq!(&parsed.symbols, symbols);
    println!(
        "parsed back: {} rules over {:?}, kind {:?}",
        parsed.program.rules().len(),
        parsed.symbols.names(),
        parsed.program.kind()
    );

    // Hand-written input works the same way; names are free-form.
    let hand = "p cnf 3 2\nc atom 3 veto\n1 2 0\n-3 1 0\n";
    let f = parse_dimacs(hand).unwrap();
    println!(
        "\nhand-written DIMACS gives names {:?} ({} warnings)",
        f.symbols.names(),
        f.warnings.len()
    );
}
