//! A parsed or generated problem instance: a CNF theory or a logic
//! program, together with the atom name table that gives its atoms
//! external identities.

use crate::programs::Program;
use crate::theory::{Symbols, Theory};

/// One problem instance with its atom names.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    /// A CNF theory (minimal-model semantics).
    Cnf { theory: Theory, symbols: Symbols },
    /// A logic program (stable-model or answer-set semantics).
    Program { program: Program, symbols: Symbols },
}

impl Instance {
    /// The atom name table.
    pub fn symbols(&self) -> &Symbols {
        match self {
            Instance::Cnf { symbols, .. } => symbols,
            Instance::Program { symbols, .. } => symbols,
        }
    }

    /// The theory, if this is a CNF instance.
    pub fn as_theory(&self) -> Option<&Theory> {
        match self {
            Instance::Cnf { theory, .. } => Some(theory),
            Instance::Program { .. } => None,
        }
    }

    /// The program, if this is a program instance.
    pub fn as_program(&self) -> Option<&Program> {
        match self {
            Instance::Program { program, .. } => Some(program),
            Instance::Cnf { .. } => None,
        }
    }
}
