//! Enumeration of minimal models, stable models, and answer sets.
//!
//! The central algorithm is a branching procedure that enumerates a small
//! candidate family guaranteed to contain every minimal model of a CNF
//! theory.  At each node the current theory is reduced by the literals
//! assumed so far, simplified, and handed to a *cover function* that
//! returns a family of literal sets with two guarantees:
//!
//! * every minimal model of the current theory is consistent with at
//!   least one returned set (so no minimal model is lost), and
//! * each returned set mentions at least one atom, so the atom set
//!   shrinks strictly along every branch and the recursion terminates.
//!
//! The cover functions are width-specific.  For 2-CNF the branching tree
//! has at most `3^(n/3)` leaves, which is optimal because a disjoint
//! union of positive triangles has that many minimal models.  For
//! 3-CNF (after a cheap simplification pass) the tree has at most
//! `1.6702^n` leaves, and for width `t >= 4` at most `alpha_t^n` leaves
//! where `alpha_t < 2` is the largest root of `x^(t+1) - 2x^t + 1`.
//! Candidates that survive a semantics-specific minimality or stability
//! check are exactly the minimal models / stable models / answer sets.
//!
//! Modules:
//!
//! * [`theory`] — literals, clauses, CNF theories, reduction `T_L`, the
//!   simplification `sigma`, and model checking.
//! * [`covers`] — the cover functions `cover2`, `cover3`, `cover_t`
//!   and the neighbourhood graph used by the 3-CNF case analysis.
//! * [`engine`] — the branching enumerator and the user-facing drivers
//!   [`engine::min_mod`], [`engine::stb_mod`], [`engine::ans_set`].
//! * [`checkers`] — minimality tests (SCC-based for 2-CNF, SAT-based in
//!   general), a small DPLL decision procedure, and brute-force oracles.
//! * [`programs`] — normal and disjunctive logic programs, the reduct,
//!   least models, and the stability / answer-set tests.
//! * [`generators`] — hard instance families and seeded random instances.
//! * [`cli_io`] — DIMACS and rule-text parsing, report formatting, and
//!   the `solve` / `verify` / `gen` / `bench` subcommands.

pub mod checkers;
pub mod cli_io;
pub mod covers;
pub mod engine;
pub mod generators;
pub mod instance;
pub mod programs;
pub mod theory;

pub use engine::{ans_set, min_mod, min_plus, stb_mod, BranchStats, EngineOptions, Enumeration};
pub use generators::{gen_e, gen_f, gen_f_exact, gen_random, GenError, GenMode};
pub use instance::Instance;
pub use theory::{Clause, Lit, LitSet, Model, Symbols, Theory};
