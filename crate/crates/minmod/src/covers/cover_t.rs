//! The general-width cover: branch on a longest clause.
//!
//! For a longest clause `β1 ∨ ... ∨ βk` (literals in sorted order) the
//! branches are `A_i = {¬β1, ..., ¬β(i-1), βi}`: a model satisfying the
//! clause makes some literal true, and the branches index the *first*
//! true literal, so they cover all models (minimal or not) and are
//! pairwise inconsistent.  Branch `A_i` retires `i` atoms, which gives
//! the `alpha_t^n` leaf bound with `alpha_t` the largest root of
//! `x^(t+1) - 2x^t + 1`.
//!
//! Degenerate regime: when the longest clause is a unit `ω` the scheme
//! above would produce a single branch over a multi-atom theory and the
//! tree would stop splitting; pairing the unit with a second atom —
//! `{ω, y}`, `{ω, ¬y}` — keeps the cover splitting and retires two
//! atoms per branch, well within the bound.

use super::{ls, Cover, View};
use crate::theory::{Lit, LitSet, Theory};

/// Cover function for theories of arbitrary width (no empty clause, at
/// least one clause).
pub fn cover_t(s: &Theory) -> Cover {
    let v = View::build(s);
    // First clause of maximal width in the canonical order.
    let mut best = 0usize;
    for (i, c) in v.clauses().iter().enumerate() {
        if c.width() > v.clause(best).width() {
            best = i;
        }
    }
    let lits = v.clause(best).lits();
    if lits.len() == 1 {
        let w = lits[0];
        if v.atoms().len() == 1 {
            return Cover::new("t/unit", vec![ls([w])]);
        }
        let y = *v.atoms().iter().find(|&&b| b != w.atom()).expect("second atom");
        return Cover::new("t/unit-pair", vec![ls([w, Lit::pos(y)]), ls([w, Lit::neg(y)])]);
    }
    let branches = (0..lits.len())
        .map(|i| {
            LitSet::from_lits(
                lits[..i]
                    .iter()
                    .map(|l| l.dual())
                    .chain(std::iter::once(lits[i])),
            )
        })
        .collect();
    Cover::new("t/split", branches)
}
