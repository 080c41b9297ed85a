//! DIMACS CNF reading and writing.
//!
//! The accepted input is conventional DIMACS: optional comment lines
//! starting with `c`, a `p cnf <atoms> <clauses>` header, and clauses
//! as whitespace-separated signed integers each terminated by `0`.
//! Clauses may span lines and share lines.  Atom `i` is named `a<i>`
//! by default; a comment of the shape `c atom <i> <name>` overrides
//! that name, which is how files written by [`emit_dimacs`] carry
//! their atom names through an otherwise standard format.
//!
//! Tautological clauses are dropped and duplicate literals merged, as
//! everywhere else in the library.  A clause count that disagrees with
//! the header is reported as a warning, not an error.

use std::fmt::Write as _;

use thiserror::Error;

use crate::theory::{Clause, Lit, Symbols, Theory};

/// A parsed DIMACS file: the theory, atom names, and any non-fatal
/// irregularities noticed while reading.
#[derive(Clone, Debug)]
pub struct CnfFile {
    /// The parsed theory.
    pub theory: Theory,
    /// Atom names: `a1 … an` unless overridden by `c atom` comments.
    pub symbols: Symbols,
    /// Non-fatal irregularities (count mismatches, ignored comments).
    pub warnings: Vec<String>,
}

/// Errors that make a DIMACS file unreadable.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    /// The first non-comment line is not `p cnf <atoms> <clauses>`.
    #[error("line {line}: malformed header {text:?} (expected \"p cnf <atoms> <clauses>\")")]
    MalformedHeader {
        /// 1-based source line.
        line: usize,
        /// The offending line.
        text: String,
    },
    /// The file has clause data but no header at all.
    #[error("no \"p cnf\" header found")]
    MissingHeader,
    /// A literal references an atom beyond the declared count.
    #[error("line {line}: literal {lit} is out of range for {n} atoms")]
    LiteralOutOfRange {
        /// 1-based source line.
        line: usize,
        /// The offending literal as written.
        lit: i64,
        /// Declared atom count.
        n: u32,
    },
    /// A clause token is not a signed integer.
    #[error("line {line}: {token:?} is not a literal")]
    BadToken {
        /// 1-based source line.
        line: usize,
        /// The offending token.
        token: String,
    },
    /// The file ends inside a clause, before its `0` terminator.
    #[error("the final clause is not 0-terminated")]
    MissingTerminator,
}

/// Parse DIMACS CNF text.
pub fn parse_dimacs(text: &str) -> Result<CnfFile, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut overrides: Vec<(usize, u32, String)> = Vec::new();
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut tautologies = 0usize;
    let mut warnings = Vec::new();

    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('c') && !trimmed.starts_with("cnf") {
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            if toks.len() == 4 && toks[0] == "c" && toks[1] == "atom" {
                if let Ok(id) = toks[2].parse::<u32>() {
                    overrides.push((ln, id, toks[3].to_string()));
                }
            }
            continue;
        }
        let Some((n, _)) = header else {
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match toks.as_slice() {
                ["p", "cnf", n, m] => n.parse::<u32>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            match parsed {
                Some(h) => header = Some(h),
                None => {
                    return Err(DimacsError::MalformedHeader {
                        line: ln,
                        text: trimmed.to_string(),
                    })
                }
            }
            continue;
        };
        for tok in trimmed.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| DimacsError::BadToken {
                line: ln,
                token: tok.to_string(),
            })?;
            if v == 0 {
                // End of clause; tautologies vanish here.
                match Clause::new(current.drain(..)) {
                    Some(c) => clauses.push(c),
                    None => tautologies += 1,
                }
            } else {
                let atom = v.unsigned_abs();
                if atom > u64::from(n) {
                    return Err(DimacsError::LiteralOutOfRange { line: ln, lit: v, n });
                }
                current.push(Lit::new((atom - 1) as u32, v > 0));
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(DimacsError::MissingHeader);
    };
    if !current.is_empty() {
        return Err(DimacsError::MissingTerminator);
    }
    let total = clauses.len() + tautologies;
    if total != m {
        warnings.push(format!("header declares {m} clauses but the file contains {total}"));
    }
    if tautologies > 0 {
        warnings.push(format!("{tautologies} tautological clause(s) dropped"));
    }

    let mut names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    for (ln, id, name) in overrides {
        if id == 0 || id > n {
            warnings.push(format!("line {ln}: atom comment for unknown atom {id} ignored"));
            continue;
        }
        let idx = (id - 1) as usize;
        if names.iter().enumerate().any(|(j, existing)| j != idx && *existing == name) {
            warnings.push(format!("line {ln}: atom name {name:?} already in use, ignored"));
            continue;
        }
        names[idx] = name;
    }

    Ok(CnfFile {
        theory: Theory::new(n, clauses),
        symbols: Symbols::new(names),
        warnings,
    })
}

/// Render a theory as DIMACS text, with `c atom` comments carrying the
/// atom names so that [`parse_dimacs`] reconstructs the file exactly.
pub fn emit_dimacs(t: &Theory, symbols: &Symbols) -> String {
    let mut out = String::new();
    for (i, name) in symbols.names().iter().enumerate() {
        writeln!(out, "c atom {} {}", i + 1, name).unwrap();
    }
    writeln!(out, "p cnf {} {}", t.n(), t.clause_count()).unwrap();
    for c in t.clauses() {
        for l in c.lits() {
            let v = i64::from(l.atom()) + 1;
            write!(out, "{} ", if l.is_positive() { v } else { -v }).unwrap();
        }
        writeln!(out, "0").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_e, gen_f, gen_random, GenMode};
    use crate::instance::Instance;

    fn roundtrip(i: &Instance) {
        let Instance::Cnf { theory, symbols } = i else {
            panic!("cnf instance expected")
        };
        let parsed = parse_dimacs(&emit_dimacs(theory, symbols)).unwrap();
        assert!(parsed.warnings.is_empty(), "{:?}", parsed.warnings);
        let back = Instance::Cnf {
            theory: parsed.theory,
            symbols: parsed.symbols,
        };
        assert_eq!(&back, i);
    }

    #[test]
    fn parses_the_basic_shapes() {
        let f = parse_dimacs("p cnf 2 1\n1 2 0\n").unwrap();
        assert_eq!(f.theory.n(), 2);
        assert_eq!(f.theory.clause_count(), 1);
        assert_eq!(f.theory.clauses()[0].lits(), [Lit::pos(0), Lit::pos(1)]);
        assert_eq!(f.symbols.names(), ["a1", "a2"]);
        assert!(f.warnings.is_empty());

        // A tautology is dropped but the atom stays.
        let f = parse_dimacs("p cnf 1 1\n1 -1 0\n").unwrap();
        assert_eq!(f.theory.n(), 1);
        assert_eq!(f.theory.clause_count(), 0);
        assert!(f.warnings.iter().any(|w| w.contains("tautological")));

        let f = parse_dimacs("p cnf 0 0\n").unwrap();
        assert_eq!(f.theory.n(), 0);
        assert_eq!(f.theory.clause_count(), 0);
    }

    #[test]
    fn clauses_span_and_share_lines() {
        let f = parse_dimacs("p cnf 3 2\n1 2\n-3 0 2 0\n").unwrap();
        assert_eq!(f.theory.clause_count(), 2);
        assert_eq!(
            f.theory.clauses()[0].lits(),
            [Lit::pos(0), Lit::pos(1), Lit::neg(2)]
        );
        assert_eq!(f.theory.clauses()[1].lits(), [Lit::pos(1)]);
    }

    #[test]
    fn comments_and_name_overrides() {
        let text = "c a general remark\nc atom 2 fire\np cnf 2 1\nc mid-stream comment\n1 -2 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.symbols.names(), ["a1", "fire"]);
        assert!(f.warnings.is_empty());

        // Overrides that would collide or point nowhere degrade to
        // warnings rather than errors.
        let text = "c atom 1 x\nc atom 2 x\nc atom 9 y\np cnf 2 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.symbols.names(), ["x", "a2"]);
        assert_eq!(f.warnings.len(), 2);
    }

    #[test]
    fn header_mismatch_is_a_warning() {
        let f = parse_dimacs("p cnf 2 5\n1 0\n").unwrap();
        assert_eq!(f.theory.clause_count(), 1);
        assert!(f.warnings.iter().any(|w| w.contains("declares 5")));
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_dimacs("p dnf 2 1\n1 0\n"),
            Err(DimacsError::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("c only a comment\n"),
            Err(DimacsError::MissingHeader)
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 3 0\n"),
            Err(DimacsError::LiteralOutOfRange { line: 2, lit: 3, n: 2 })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 two 0\n"),
            Err(DimacsError::BadToken { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 2\n"),
            Err(DimacsError::MissingTerminator)
        ));
    }

    #[test]
    fn empty_clause_is_representable() {
        let f = parse_dimacs("p cnf 2 1\n0\n").unwrap();
        assert!(f.theory.has_empty_clause());
    }

    #[test]
    fn generator_outputs_roundtrip() {
        roundtrip(&gen_e(2, 4, GenMode::Cnf).unwrap());
        roundtrip(&gen_e(3, 5, GenMode::Cnf).unwrap());
        roundtrip(&gen_f(2, 3, GenMode::Cnf).unwrap());
        roundtrip(&gen_f(3, 2, GenMode::Cnf).unwrap());
        for seed in 0..5 {
            roundtrip(&gen_random(8, 16, 3, GenMode::Cnf, seed));
        }
    }
}
