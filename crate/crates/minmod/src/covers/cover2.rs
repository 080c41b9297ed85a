//! The 2-CNF cover: five structural cases that keep the branching tree
//! within `3^(n/3)` leaves.
//!
//! The case order matters and each case assumes the earlier ones failed:
//!
//! 1. a single atom — branch on the (unit) first clause;
//! 2. a unit clause `ω` — pair it with a second atom, branching
//!    `{ω, y}`, `{ω, ¬y}` so both branches drop two atoms;
//! 3. an atom `x` occurring only negatively — minimal models avoid `x`,
//!    so branch `{¬x, y}`, `{¬x, ¬y}`;
//! 4. a clause with a negative literal `¬x` next to `ω` — since `x`
//!    also occurs positively (case 3 failed) in some `x ∨ β`, the
//!    branches `{x, ω}`, `{¬x, β}` cover every model;
//! 5. all clauses are positive 2-clauses:
//!    a) an atom in exactly one clause `x ∨ y` branches `{x, ¬y}`,
//!       `{¬x, y}` — a minimal model never keeps both sides;
//!    b) an atom in ≥ 3 clauses branches `{x}` against
//!       `{¬x, y1, y2, y3}`;
//!    c) otherwise every atom sits in exactly two clauses; around the
//!       smallest atom `w` with clauses `w ∨ u`, `w ∨ v` and the second
//!       clauses `u ∨ u'`, `v ∨ v'` of its neighbours, the three
//!       branches `{¬u, u', w}`, `{¬v, v', w}`, `{¬w, u, v}` each
//!       retire three atoms — the disjoint-triangle worst case shows
//!       the resulting `3^(n/3)` is tight.

use super::{ls, Cover, View};
use crate::theory::{Lit, LitSet, Theory};

/// Cover function for theories of width ≤ 2 (no empty clause, at least
/// one clause).  Deterministic: smallest-id / first-clause tie breaks
/// throughout.
pub fn cover2(s: &Theory) -> Cover {
    assert!(s.max_width() <= 2, "cover2 requires a 2-CNF theory");
    let v = View::build(s);

    // Case 1: a single occurring atom.
    if v.atoms().len() == 1 {
        return Cover::new("2cnf/1", vec![ls([v.clause(0).lits()[0]])]);
    }

    // Case 2: a unit clause.
    if let Some(&u) = v.units().first() {
        let w = v.clause(u).lits()[0];
        let y = first_other_atom(&v, w.atom());
        return Cover::new("2cnf/2", vec![ls([w, Lit::pos(y)]), ls([w, Lit::neg(y)])]);
    }

    // Case 3: an atom occurring only negatively.
    for &a in v.atoms() {
        if v.occ_lit(Lit::pos(a)).is_empty() {
            let y = first_other_atom(&v, a);
            return Cover::new(
                "2cnf/3",
                vec![ls([Lit::neg(a), Lit::pos(y)]), ls([Lit::neg(a), Lit::neg(y)])],
            );
        }
    }

    // Case 4: a clause with a negative literal ¬x ∨ ω.  Case 3 failed,
    // so x also occurs positively in some clause x ∨ β.
    for (i, c) in v.clauses().iter().enumerate() {
        if let Some(&xlit) = c.lits().iter().find(|l| !l.is_positive()) {
            let x = xlit.atom();
            let omega = v.other_lit(i, x);
            let pos_clause = *v
                .occ_lit(Lit::pos(x))
                .first()
                .expect("case 3 failed: x occurs positively");
            let beta = v.other_lit(pos_clause, x);
            return Cover::new(
                "2cnf/4",
                vec![ls([Lit::pos(x), omega]), ls([Lit::neg(x), beta])],
            );
        }
    }

    // Cases 5a–5c: every clause is an all-positive 2-clause.
    let count = |a: u32| v.occ_lit(Lit::pos(a)).len();

    // 5a: an atom in exactly one clause x ∨ y.
    for &x in v.atoms() {
        if count(x) == 1 {
            let y = v.other_lit(v.occ_lit(Lit::pos(x))[0], x);
            return Cover::new(
                "2cnf/5a",
                vec![ls([Lit::pos(x), y.dual()]), ls([Lit::neg(x), y])],
            );
        }
    }

    // 5b: an atom in at least three clauses.
    for &x in v.atoms() {
        if count(x) >= 3 {
            let occ = v.occ_lit(Lit::pos(x));
            let mut branch = vec![Lit::neg(x)];
            branch.extend(occ.iter().take(3).map(|&i| v.other_lit(i, x)));
            return Cover::new(
                "2cnf/5b",
                vec![ls([Lit::pos(x)]), LitSet::from_lits(branch)],
            );
        }
    }

    // 5c: every atom in exactly two clauses.  w ∨ u and w ∨ v are the
    // clauses of the smallest atom; u ∨ u' and v ∨ v' are the second
    // clauses of u and v.
    let w = v.atoms()[0];
    debug_assert_eq!(count(w), 2);
    let wocc = v.occ_lit(Lit::pos(w));
    let (cu, cv) = (wocc[0], wocc[1]);
    let u = v.other_lit(cu, w).atom();
    let vv = v.other_lit(cv, w).atom();
    let second = |a: u32, not: usize| -> Lit {
        let occ = v.occ_lit(Lit::pos(a));
        debug_assert_eq!(occ.len(), 2);
        let other = if occ[0] == not { occ[1] } else { occ[0] };
        v.other_lit(other, a)
    };
    let up = second(u, cu);
    let vp = second(vv, cv);
    Cover::new(
        "2cnf/5c",
        vec![
            ls([Lit::neg(u), up, Lit::pos(w)]),
            ls([Lit::neg(vv), vp, Lit::pos(w)]),
            ls([Lit::neg(w), Lit::pos(u), Lit::pos(vv)]),
        ],
    )
}

/// Smallest occurring atom different from `a` (cases that pair a second
/// atom all run with ≥ 2 atoms).
fn first_other_atom(v: &View, a: u32) -> u32 {
    *v.atoms()
        .iter()
        .find(|&&b| b != a)
        .expect("at least two occurring atoms")
}
