//! Ground program reading and writing.
//!
//! The grammar is the usual textual form of ground disjunctive rules:
//!
//! ```text
//! rule := head [":-" body] "."
//! head := atom ("|" atom)*
//! body := elem ("," elem)*
//! elem := atom | "not" atom
//! atom := [a-z][A-Za-z0-9_]*
//! ```
//!
//! `%` starts a comment running to the end of the line.  `not` is a
//! reserved word.  Rules with empty heads (constraints) are rejected.
//!
//! Atom ids are assigned in first-occurrence order.  A comment line of
//! the shape `% atoms: x y z` pre-declares the atom universe in id
//! order instead, which lets [`emit_program`] round-trip programs whose
//! numbering differs from occurrence order or whose atoms do not all
//! occur in rules.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::programs::{Program, Rule};
use crate::theory::Symbols;

/// A parsed program file: the program and its atom names.
#[derive(Clone, Debug, PartialEq)]
pub struct AspFile {
    /// The parsed program; its kind is inferred from the heads.
    pub program: Program,
    /// Atom names in id order.
    pub symbols: Symbols,
}

/// Errors that make a program file unreadable.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AspError {
    /// Any lexical or grammatical fault, located in the source.
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        /// 1-based source line.
        line: usize,
        /// 1-based source column.
        col: usize,
        /// What went wrong.
        msg: String,
    },
    /// A rule starts with `:-` or `.`: constraints are not supported.
    #[error("line {line}, column {col}: empty rule head (constraints are not supported)")]
    EmptyHead {
        /// 1-based source line.
        line: usize,
        /// 1-based source column.
        col: usize,
    },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> AspError {
    AspError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Arrow,
    Dot,
    Comma,
    Pipe,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

/// Split the source into tokens with positions; comments vanish here.
fn tokenize(text: &str) -> Result<Vec<Spanned>, AspError> {
    let mut toks = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut p = 0;
        while p < chars.len() {
            let (col, c) = (p + 1, chars[p]);
            match c {
                '%' => break,
                c if c.is_whitespace() => p += 1,
                'a'..='z' => {
                    let start = p;
                    while p < chars.len()
                        && (chars[p].is_ascii_alphanumeric() || chars[p] == '_')
                    {
                        p += 1;
                    }
                    let word: String = chars[start..p].iter().collect();
                    toks.push(Spanned { tok: Tok::Atom(word), line: ln, col });
                }
                ':' => {
                    if chars.get(p + 1) != Some(&'-') {
                        return Err(syntax(ln, col, "expected \":-\""));
                    }
                    toks.push(Spanned { tok: Tok::Arrow, line: ln, col });
                    p += 2;
                }
                '.' => {
                    toks.push(Spanned { tok: Tok::Dot, line: ln, col });
                    p += 1;
                }
                ',' => {
                    toks.push(Spanned { tok: Tok::Comma, line: ln, col });
                    p += 1;
                }
                '|' => {
                    toks.push(Spanned { tok: Tok::Pipe, line: ln, col });
                    p += 1;
                }
                'A'..='Z' => {
                    return Err(syntax(ln, col, "atom names start with a lowercase letter"));
                }
                c => return Err(syntax(ln, col, format!("unexpected character {c:?}"))),
            }
        }
    }
    Ok(toks)
}

/// Interning symbol table preserving declaration order.
#[derive(Default)]
struct Names {
    order: Vec<String>,
    index: HashMap<String, u32>,
}

impl Names {
    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.order.len() as u32;
        self.order.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }
}

/// Token-stream cursor for the rule grammar.
struct Parser<'a> {
    toks: &'a [Spanned],
    p: usize,
}

impl<'a> Parser<'a> {
    /// Position to blame when the input ends too early.
    fn eof_pos(&self) -> (usize, usize) {
        self.toks.last().map_or((1, 1), |t| (t.line, t.col))
    }

    fn next(&mut self, expect: &str) -> Result<&'a Spanned, AspError> {
        let t = self.toks.get(self.p).ok_or_else(|| {
            let (line, col) = self.eof_pos();
            syntax(line, col, format!("unexpected end of input, expected {expect}"))
        })?;
        self.p += 1;
        Ok(t)
    }

    /// An atom token; `not` is never a valid atom name.
    fn atom(&mut self, names: &mut Names) -> Result<u32, AspError> {
        let t = self.next("an atom")?;
        match &t.tok {
            Tok::Atom(s) if s == "not" => {
                Err(syntax(t.line, t.col, "\"not\" is a reserved word"))
            }
            Tok::Atom(s) => Ok(names.intern(s)),
            _ => Err(syntax(t.line, t.col, "expected an atom")),
        }
    }

    /// One rule, starting at its head.
    fn rule(&mut self, names: &mut Names) -> Result<Rule, AspError> {
        let first = &self.toks[self.p];
        if matches!(first.tok, Tok::Arrow | Tok::Dot) {
            return Err(AspError::EmptyHead {
                line: first.line,
                col: first.col,
            });
        }
        let mut head = vec![self.atom(names)?];
        loop {
            let t = self.next("\"|\", \":-\" or \".\"")?;
            match t.tok {
                Tok::Pipe => head.push(self.atom(names)?),
                Tok::Dot => return Ok(Rule::new(head, [], [])),
                Tok::Arrow => break,
                _ => return Err(syntax(t.line, t.col, "expected \"|\", \":-\" or \".\"")),
            }
        }
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        loop {
            let t = self.next("a body element")?;
            match &t.tok {
                Tok::Atom(s) if s == "not" => neg.push(self.atom(names)?),
                Tok::Atom(s) => pos.push(names.intern(s)),
                _ => return Err(syntax(t.line, t.col, "expected a body element")),
            }
            let t = self.next("\",\" or \".\"")?;
            match t.tok {
                Tok::Comma => {}
                Tok::Dot => return Ok(Rule::new(head, pos, neg)),
                _ => return Err(syntax(t.line, t.col, "expected \",\" or \".\"")),
            }
        }
    }
}

/// Parse ground program text.
pub fn parse_program(text: &str) -> Result<AspFile, AspError> {
    let mut names = Names::default();
    // Honor `% atoms:` declarations before any rule assigns ids.
    for (i, line) in text.lines().enumerate() {
        let Some(rest) = line.trim_start().strip_prefix("% atoms:") else {
            continue;
        };
        for name in rest.split_whitespace() {
            let mut chars = name.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_lowercase())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
                && name != "not";
            if !ok {
                return Err(syntax(i + 1, 1, format!("invalid atom name {name:?} in declaration")));
            }
            names.intern(name);
        }
    }

    let toks = tokenize(text)?;
    let mut parser = Parser { toks: &toks, p: 0 };
    let mut rules = Vec::new();
    while parser.p < toks.len() {
        rules.push(parser.rule(&mut names)?);
    }
    let program = Program::new(names.order.len() as u32, rules)
        .expect("parsed rules have non-empty heads and in-range atoms");
    Ok(AspFile {
        program,
        symbols: Symbols::new(names.order),
    })
}

/// Render a program as rule text, preceded by a `% atoms:` declaration
/// that pins the atom universe and numbering for exact round-trips.
pub fn emit_program(p: &Program, symbols: &Symbols) -> String {
    let mut out = String::from("% atoms:");
    for name in symbols.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for r in p.rules() {
        let head: Vec<&str> = r.head().iter().map(|&a| symbols.name(a)).collect();
        out.push_str(&head.join(" | "));
        if r.pos().is_empty() && r.neg().is_empty() {
            out.push_str(".\n");
        } else {
            let mut elems: Vec<String> =
                r.pos().iter().map(|&a| symbols.name(a).to_string()).collect();
            elems.extend(r.neg().iter().map(|&a| format!("not {}", symbols.name(a))));
            writeln!(out, " :- {}.", elems.join(", ")).unwrap();
        }
    }
    out
}
