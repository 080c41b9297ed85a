//! File formats, reports, and the command-line surface.
//!
//! This module holds everything that faces the outside world: the
//! DIMACS CNF parser and emitter ([`parse_dimacs`], [`emit_dimacs`]),
//! the ground-program parser and emitter ([`parse_program`],
//! [`emit_program`]), the serialized solve report ([`SolveReport`],
//! stable JSON keys `mode`, `models`, `count`,
//! `stats{leaves, nodes, max_depth, candidates}`, `wall_ms`), and the
//! four subcommands behind [`run`]: `solve`, `verify`, `gen`, `bench`.
//!
//! Both emitters round-trip: parsing what they write reconstructs the
//! instance exactly, atom names and numbering included.
//!
//! Exit codes are contractual: `0` success, `10` a solve that found no
//! models, `1` a verification mismatch, `2` input or usage errors.

mod asp;
mod commands;
mod dimacs;
mod report;

pub use asp::{emit_program, parse_program, AspError, AspFile};
pub use commands::run;
pub use dimacs::{emit_dimacs, parse_dimacs, CnfFile, DimacsError};
pub use report::{bench_csv, bench_text, fingerprint, BenchRow, ReportStats, SolveReport};
