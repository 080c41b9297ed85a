//! The 3-CNF branching catalog.
//!
//! [`cover3`] inspects a σ-simplified theory of width ≤ 3 and returns a
//! cover drawn from a fixed list of 21 case families.  The families are
//! tried in a fixed order and each family scans the theory in a fixed
//! order (clauses in canonical order, atoms ascending, literals in
//! sorted order), so the selected cover is a deterministic function of
//! the theory.  The early families peel off degenerate shapes (single
//! atoms, unit clauses, purely negative atoms); the middle families
//! resolve every interaction between 2-clauses and 3-clauses; the late
//! families apply only when every clause has width 3 and branch on the
//! neighbourhood graph `Γ(a)` of a chosen atom.  The case analysis is
//! arranged so that the branching tree of the recursive enumeration has
//! at most `1.6702^n` leaves on σ-simplified 3-CNF inputs.
//!
//! Every branch of every returned cover strictly reduces the set of
//! occurring atoms, and the branches jointly preserve the minimal
//! models: each minimal model of the theory is consistent with at least
//! one branch.  The individual case builders return `Option` and treat
//! any violated side condition as "no match", so the diagnostic
//! [`cover3_case_flags`] can evaluate every family on any input without
//! panicking; [`cover3`] itself panics only if no family matches, which
//! would be an internal error for a σ-simplified input.

use std::collections::HashSet;

use super::gamma::{gamma_from_clauses, GammaGraph, GammaShape};
use super::{ls, Cover, View};
use crate::theory::{Clause, Lit, LitSet, Theory};

/// The case families in selection order.  Each entry pairs the family
/// label with its matcher; `cover3` fires the first one that matches.
#[allow(clippy::type_complexity)]
const CASES: [(&str, fn(&View) -> Option<Cover>); 21] = [
    ("3cnf/1", case1),
    ("3cnf/2", case2),
    ("3cnf/3", case3),
    ("3cnf/4", case4),
    ("3cnf/5", case5),
    ("3cnf/6", case6),
    ("3cnf/7", case7),
    ("3cnf/8", case8),
    ("3cnf/9", case9),
    ("3cnf/10", case10),
    ("3cnf/11", case11),
    ("3cnf/12", case12),
    ("3cnf/13", case13),
    ("3cnf/14", case14),
    ("3cnf/15", case15),
    ("3cnf/16", case16),
    ("3cnf/17", case17),
    ("3cnf/18", case18),
    ("3cnf/19", case19),
    ("3cnf/20", case20),
    ("3cnf/21", case21),
];

/// Select a cover for a σ-simplified theory of width ≤ 3 with at least
/// one clause and no empty clause.
pub fn cover3(s: &Theory) -> Cover {
    assert!(s.max_width() <= 3, "cover3 requires width ≤ 3");
    let v = View::build(s);
    for (_, case) in CASES {
        if let Some(c) = case(&v) {
            return c;
        }
    }
    panic!("internal error: no 3-CNF case matched a σ-simplified theory");
}

/// Evaluate every case family's premise on the theory.  Returns the
/// families in selection order with a flag telling whether each one
/// matches.  The first matching family is the one `cover3` fires.
pub fn cover3_case_flags(s: &Theory) -> Vec<(&'static str, bool)> {
    assert!(s.max_width() <= 3, "cover3 requires width ≤ 3");
    let v = View::build(s);
    CASES.iter().map(|&(name, case)| (name, case(&v).is_some())).collect()
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

/// True when every clause has width 3; the Γ-based families require it.
fn all_three(v: &View) -> bool {
    v.units().is_empty() && v.twos().is_empty()
}

/// The smallest occurring atom other than `a`.
fn smallest_other_atom(v: &View, a: u32) -> Option<u32> {
    v.atoms().iter().copied().find(|&x| x != a)
}

/// The two literals of a 3-clause over atoms other than `a`, sorted.
fn rest_two(c: &Clause, a: u32) -> Option<(Lit, Lit)> {
    let rest = c.lits_excluding(&[a]);
    if rest.len() == 2 {
        Some((rest[0], rest[1]))
    } else {
        None
    }
}

/// The single literal of `c` over an atom outside `{a1, a2}`.
fn third_lit(c: &Clause, a1: u32, a2: u32) -> Option<Lit> {
    let rest = c.lits_excluding(&[a1, a2]);
    if rest.len() == 1 {
        Some(rest[0])
    } else {
        None
    }
}

/// The first 2-clause containing the exact literal `l`, with its other
/// literal.  Past the 2-clause interaction cases each 2-clause atom
/// occurs only positively, so a negative `l` finds nothing.
fn two_exact(v: &View, l: Lit) -> Option<(usize, Lit)> {
    let (i, other) = v.two_with_atom(l.atom())?;
    (v.clause(i).contains(l)).then_some((i, other))
}

/// The 3-clauses containing the positive literal of `a`, in canonical
/// order.
fn d_threes(v: &View, a: u32) -> Vec<usize> {
    v.occ_lit(Lit::pos(a))
        .iter()
        .copied()
        .filter(|&i| v.clause(i).width() == 3)
        .collect()
}

/// An anchor for the 2-clause occurrence cases: atom `a` sits positively
/// in the 2-clause `c1`, occurs nowhere negatively, and every other
/// occurrence is a positive 3-clause occurrence.
fn anchor(v: &View, a: u32) -> Option<(usize, Lit)> {
    let (c1i, b) = v.two_with_atom(a)?;
    if v.clause(c1i).lit_over(a) != Some(Lit::pos(a)) {
        return None;
    }
    if !v.occ_lit(Lit::neg(a)).is_empty() {
        return None;
    }
    let clean = v
        .occ_lit(Lit::pos(a))
        .iter()
        .all(|&i| i == c1i || v.clause(i).width() == 3);
    clean.then_some((c1i, b))
}

/// Number of atoms two clauses share.
fn shared_atom_count(c1: &Clause, c2: &Clause) -> usize {
    c1.lits().iter().filter(|l| c2.contains_atom(l.atom())).count()
}

/// Γ(a) built from the canonical clause view.
fn gamma_for(v: &View, a: u32) -> GammaGraph {
    gamma_from_clauses(a, v.occ_lit(Lit::pos(a)).iter().map(|&i| v.clause(i)))
}

/// After the dual-literal family no two clauses of `T(a)` contain dual
/// literals, so the vertex set of Γ(a) holds no dual pair.  The Γ-based
/// builders rely on that to emit consistent branches.
fn gamma_sane(g: &GammaGraph) -> bool {
    g.vertices().windows(2).all(|w| w[0].atom() != w[1].atom())
}

// ---------------------------------------------------------------------------
// Cases 1-3: degenerate shapes
// ---------------------------------------------------------------------------

/// A single occurring atom: every clause is the same unit.
fn case1(v: &View) -> Option<Cover> {
    if v.atoms().len() != 1 {
        return None;
    }
    let lit = v.clause(0).lits()[0];
    Some(Cover::new("3cnf/1", vec![ls([lit])]))
}

/// A unit clause `ω` with other atoms around: assume `ω` and split on
/// the smallest other atom so both branches shrink.
fn case2(v: &View) -> Option<Cover> {
    let &ui = v.units().first()?;
    let w = v.clause(ui).lits()[0];
    let y = smallest_other_atom(v, w.atom())?;
    Some(Cover::new("3cnf/2", vec![ls([w, Lit::pos(y)]), ls([w, Lit::neg(y)])]))
}

/// An atom occurring only negatively is false in every minimal model.
fn case3(v: &View) -> Option<Cover> {
    let a = v
        .atoms()
        .iter()
        .copied()
        .find(|&a| v.occ_lit(Lit::pos(a)).is_empty() && !v.occ_lit(Lit::neg(a)).is_empty())?;
    let y = smallest_other_atom(v, a)?;
    let na = Lit::neg(a);
    Some(Cover::new("3cnf/3", vec![ls([na, Lit::pos(y)]), ls([na, Lit::neg(y)])]))
}

// ---------------------------------------------------------------------------
// Case 4: an atom shared by two 2-clauses
// ---------------------------------------------------------------------------

fn case4(v: &View) -> Option<Cover> {
    // (i) Both polarities of some atom appear in 2-clauses: the two
    // clauses resolve on it.
    for &a in v.atoms() {
        let pos2 = v.occ_lit(Lit::pos(a)).iter().copied().find(|&i| v.clause(i).width() == 2);
        let neg2 = v.occ_lit(Lit::neg(a)).iter().copied().find(|&i| v.clause(i).width() == 2);
        if let (Some(pi), Some(ni)) = (pos2, neg2) {
            let w = Lit::pos(a);
            let beta = v.other_lit(pi, a);
            let gamma = v.other_lit(ni, a);
            return Some(Cover::new("3cnf/4i", vec![ls([w, gamma]), ls([w.dual(), beta])]));
        }
    }
    // (ii) Two 2-clauses share a literal: assuming it false forces both
    // of their other literals.
    for &a in v.atoms() {
        for lit in [Lit::pos(a), Lit::neg(a)] {
            let pair: Vec<usize> = v
                .occ_lit(lit)
                .iter()
                .copied()
                .filter(|&i| v.clause(i).width() == 2)
                .take(2)
                .collect();
            if pair.len() == 2 {
                let beta = v.other_lit(pair[0], a);
                let gamma = v.other_lit(pair[1], a);
                return Some(Cover::new("3cnf/4ii", vec![ls([lit]), ls([lit.dual(), beta, gamma])]));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Case 5: a 3-clause literal whose dual sits in a 2-clause over fresh atoms
// ---------------------------------------------------------------------------

/// How an atom of a 3-clause touches the 2-clauses: not at all, with the
/// same literal, or with its dual.  The payload is the 2-clause's other
/// literal.
enum Touch {
    Free,
    Same(Lit),
    Dual(Lit),
}

fn touch(v: &View, l: Lit) -> Touch {
    match v.two_with_atom(l.atom()) {
        None => Touch::Free,
        Some((i, other)) => match v.clause(i).lit_over(l.atom()) {
            Some(own) if own == l => Touch::Same(other),
            Some(_) => Touch::Dual(other),
            None => Touch::Free,
        },
    }
}

fn case5(v: &View) -> Option<Cover> {
    for &ci in v.threes() {
        let c1 = v.clause(ci);
        for &beta in c1.lits() {
            for &ti in v.occ_lit(beta.dual()) {
                if v.clause(ti).width() != 2 {
                    continue;
                }
                let delta = v.other_lit(ti, beta.atom());
                if c1.contains_atom(delta.atom()) {
                    continue;
                }
                if let Some(c) = build5(v, c1, beta, delta) {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn build5(v: &View, c1: &Clause, beta: Lit, delta: Lit) -> Option<Cover> {
    let (w, g) = rest_two(c1, beta.atom())?;
    // Guards: the touch clauses live over atoms outside c1 and outside
    // the β-clause, or an earlier family would have fired.
    let guard = |e: Lit| !c1.contains_atom(e.atom()) && e.atom() != delta.atom();
    let assume = ls([beta, delta]);
    match (touch(v, w), touch(v, g)) {
        (Touch::Free, Touch::Free) => {
            Some(Cover::new("3cnf/5i", vec![assume, ls([beta.dual()])]))
        }
        (Touch::Dual(e), _) if guard(e) => Some(Cover::new(
            "3cnf/5ii",
            vec![assume, ls([beta.dual(), w, e]), ls([beta.dual(), w.dual(), g])],
        )),
        (_, Touch::Dual(e)) if guard(e) => Some(Cover::new(
            "3cnf/5ii",
            vec![assume, ls([beta.dual(), g, e]), ls([beta.dual(), g.dual(), w])],
        )),
        (Touch::Same(e), Touch::Free) if guard(e) => Some(Cover::new(
            "3cnf/5iii",
            vec![assume, ls([beta.dual(), w]), ls([beta.dual(), w.dual(), g, e])],
        )),
        (Touch::Free, Touch::Same(e)) if guard(e) => Some(Cover::new(
            "3cnf/5iii",
            vec![assume, ls([beta.dual(), g]), ls([beta.dual(), g.dual(), w, e])],
        )),
        (Touch::Same(l), Touch::Same(e)) if guard(l) && guard(e) && l.atom() != e.atom() => {
            Some(Cover::new(
                "3cnf/5iv",
                vec![
                    ls([w]),
                    ls([w.dual(), g, l]),
                    LitSet::from_lits([w.dual(), g.dual(), l, e, beta, delta]),
                ],
            ))
        }
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Case 6: a 2-clause whose atoms both sit inside a 3-clause
// ---------------------------------------------------------------------------

fn case6(v: &View) -> Option<Cover> {
    for &ti in v.twos() {
        for &ci in v.threes() {
            let two = v.clause(ti);
            let three = v.clause(ci);
            if !two.lits().iter().all(|l| three.contains_atom(l.atom())) {
                continue;
            }
            if let Some(c) = build6(v, ti, ci) {
                return Some(c);
            }
        }
    }
    None
}

fn build6(v: &View, ti: usize, ci: usize) -> Option<Cover> {
    let two = v.clause(ti);
    let three = v.clause(ci);
    // σ removed any 3-clause that contains a 2-clause outright, so at
    // least one literal of the 2-clause appears dualized in the 3-clause.
    let gamma = two.lits().iter().copied().find(|l| three.contains(l.dual()))?;
    let w = v.other_lit(ti, gamma.atom());
    let w_in_three = three.lit_over(w.atom())?;
    let beta = third_lit(three, gamma.atom(), w.atom())?;
    match two_exact(v, beta) {
        None if v.two_with_atom(beta.atom()).is_none() => {
            Some(Cover::new("3cnf/6i", vec![ls([gamma.dual(), w]), ls([gamma])]))
        }
        Some((_, e)) if e.atom() != gamma.atom() && e.atom() != w.atom() => Some(Cover::new(
            "3cnf/6ii",
            vec![
                ls([beta]),
                LitSet::from_lits([beta.dual(), gamma.dual(), e, w]),
                LitSet::from_lits([beta.dual(), gamma, e, w_in_three]),
            ],
        )),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Cases 7-8: 2-clause atoms with few occurrences
// ---------------------------------------------------------------------------

/// A 2-clause atom occurring exactly once in the whole theory.
fn case7(v: &View) -> Option<Cover> {
    for &a in v.atoms() {
        if v.atom_occ(a) != 1 {
            continue;
        }
        if let Some((_, b)) = anchor(v, a) {
            let pa = Lit::pos(a);
            return Some(Cover::new("3cnf/7", vec![ls([pa, b.dual()]), ls([pa.dual(), b])]));
        }
    }
    None
}

/// A 2-clause atom occurring exactly twice: once in its 2-clause and
/// once in a 3-clause.
fn case8(v: &View) -> Option<Cover> {
    for &a in v.atoms() {
        if v.atom_occ(a) != 2 {
            continue;
        }
        let Some((c1i, b)) = anchor(v, a) else { continue };
        let Some(&c2i) = v.occ_lit(Lit::pos(a)).iter().find(|&&i| i != c1i) else { continue };
        let c2 = v.clause(c2i);
        if c2.width() != 3 || c2.contains_atom(b.atom()) {
            continue;
        }
        let Some((g, d)) = rest_two(c2, a) else { continue };
        let pa = Lit::pos(a);
        return Some(Cover::new(
            "3cnf/8",
            vec![
                ls([pa.dual(), b]),
                ls([pa, b.dual()]),
                LitSet::from_lits([pa, b, g.dual(), d.dual()]),
            ],
        ));
    }
    None
}

// ---------------------------------------------------------------------------
// Cases 9-10: a 2-clause atom with several 3-clause occurrences
// ---------------------------------------------------------------------------

/// Case 9: some pair of `a`'s 3-clauses shares only `a` itself.
fn case9(v: &View) -> Option<Cover> {
    for &a in v.atoms() {
        let Some((_, b)) = anchor(v, a) else { continue };
        let ds = d_threes(v, a);
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                let (x, y) = (v.clause(ds[i]), v.clause(ds[j]));
                if shared_atom_count(x, y) != 1 {
                    continue;
                }
                if x.contains_atom(b.atom()) || y.contains_atom(b.atom()) {
                    continue;
                }
                if let Some(c) = build_case9(v, a, b, ds[i], ds[j]) {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Case 10: every pair of `a`'s 3-clauses shares a second atom.
fn case10(v: &View) -> Option<Cover> {
    for &a in v.atoms() {
        let Some((_, b)) = anchor(v, a) else { continue };
        let ds = d_threes(v, a);
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                let (x, y) = (v.clause(ds[i]), v.clause(ds[j]));
                if shared_atom_count(x, y) < 2 {
                    continue;
                }
                if x.contains_atom(b.atom()) || y.contains_atom(b.atom()) {
                    continue;
                }
                if let Some(c) = build_case10(v, a, b, ds[i], ds[j]) {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn build_case9(v: &View, a: u32, b: Lit, c2: usize, c3: usize) -> Option<Cover> {
    let pa = Lit::pos(a);
    let na = Lit::neg(a);
    let (mut c2i, mut c3i) = (c2, c3);
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    loop {
        if !visited.insert((c2i, c3i)) {
            return None;
        }
        let (g, d) = rest_two(v.clause(c2i), a)?;
        let (e, l) = rest_two(v.clause(c3i), a)?;
        let tg = two_exact(v, g);
        let td = two_exact(v, d);
        let te = two_exact(v, e);
        let tl = two_exact(v, l);
        let side2 = tg.is_some() || td.is_some();
        let side3 = te.is_some() || tl.is_some();
        // (i) No side touches a 2-clause: branch on `a` alone.
        if !side2 && !side3 {
            return Some(Cover::new("3cnf/9i", vec![ls([pa]), ls([na, b])]));
        }
        // (ii) Exactly one side touches a 2-clause.
        if side2 != side3 {
            let (gamma, delta, h) = if side2 {
                match (tg, td) {
                    (Some((_, h)), _) => (g, d, h),
                    (None, Some((_, h))) => (d, g, h),
                    _ => unreachable!(),
                }
            } else {
                match (te, tl) {
                    (Some((_, h)), _) => (e, l, h),
                    (None, Some((_, h))) => (l, e, h),
                    _ => unreachable!(),
                }
            };
            if h.atom() == delta.atom() || h.atom() == b.atom() {
                return None;
            }
            return Some(Cover::new(
                "3cnf/9ii",
                vec![
                    ls([pa]),
                    ls([na, gamma, b]),
                    LitSet::from_lits([na, gamma.dual(), b, h, delta]),
                ],
            ));
        }
        // Both sides touched.  (iii) Look for 2-clauses on each side that
        // avoid the other side's atoms.
        for (x, tx) in [(g, tg), (d, td)] {
            let Some((cxi, h)) = tx else { continue };
            if shared_atom_count(v.clause(cxi), v.clause(c3i)) != 0 {
                continue;
            }
            for (y, ty) in [(e, te), (l, tl)] {
                let Some((cyi, f)) = ty else { continue };
                if shared_atom_count(v.clause(cyi), v.clause(c2i)) != 0 {
                    continue;
                }
                if h.atom() == f.atom() || h.atom() == b.atom() || f.atom() == b.atom() {
                    return None;
                }
                let delta = if x == g { d } else { g };
                let lambda = if y == e { l } else { e };
                return Some(Cover::new(
                    "3cnf/9iii",
                    vec![
                        ls([pa]),
                        ls([na, x, y, b]),
                        LitSet::from_lits([na, x, y.dual(), b, f, lambda]),
                        LitSet::from_lits([na, x.dual(), y, b, h, delta]),
                        LitSet::from_lits([na, x.dual(), y.dual(), b, h, f, delta, lambda]),
                    ],
                ));
            }
        }
        // Every touching 2-clause bridges the two sides.  Pick the first
        // bridge and relabel around it.
        let bridge = v.twos().iter().copied().find(|&ti| {
            let c = v.clause(ti);
            let in2 = [g, d].iter().filter(|l| c.contains_atom(l.atom())).count();
            let in3 = [e, l].iter().filter(|l| c.contains_atom(l.atom())).count();
            in2 == 1 && in3 == 1
        })?;
        let cb = v.clause(bridge);
        let gamma = [g, d].into_iter().find(|l| cb.contains_atom(l.atom()))?;
        let delta = if gamma == g { d } else { g };
        let eps = [e, l].into_iter().find(|l| cb.contains_atom(l.atom()))?;
        let lambda = if eps == e { l } else { e };
        if !cb.contains(gamma) || !cb.contains(eps) {
            return None;
        }
        let t_delta = two_exact(v, delta);
        let t_lambda = two_exact(v, lambda);
        match (t_delta, t_lambda) {
            // (iv) Neither leftover atom touches a 2-clause.
            (None, None) => {
                return Some(Cover::new(
                    "3cnf/9iv",
                    vec![
                        ls([pa]),
                        ls([na, gamma, b]),
                        LitSet::from_lits([na, gamma.dual(), b, delta, eps]),
                    ],
                ));
            }
            // (v) Exactly one leftover atom touches a 2-clause; orient
            // so that it is the δ side.
            (t_d @ Some(_), None) | (t_d @ None, Some(_)) => {
                let (delta, eps, gamma, lambda, j) = match (t_d, t_lambda) {
                    (Some((_, j)), _) => (delta, eps, gamma, lambda, j),
                    (None, Some((_, j))) => (lambda, gamma, eps, delta, j),
                    _ => unreachable!(),
                };
                if j.atom() == gamma.atom() || j.atom() == eps.atom() || j.atom() == b.atom() {
                    return None;
                }
                let mut branches = vec![
                    ls([pa]),
                    LitSet::from_lits([na, delta, eps, b]),
                    LitSet::from_lits([na, delta, eps.dual(), b, gamma, lambda]),
                    LitSet::from_lits([na, delta.dual(), eps, b, j, gamma]),
                ];
                // When the touching 2-clause is {δ, λ̄}, falsifying δ
                // forces λ false, and the ε of that region is already
                // forced by the 3-clause — the (δ̄, ε̄) region is empty.
                if j != lambda.dual() {
                    branches.push(LitSet::from_lits([
                        na,
                        delta.dual(),
                        eps.dual(),
                        b,
                        j,
                        gamma,
                        lambda,
                    ]));
                }
                return Some(Cover::new("3cnf/9v", branches));
            }
            // (vi) Both leftover atoms touch 2-clauses; the analysis
            // forces them into one shared 2-clause {δ, λ}.
            (Some((c5i, j)), Some((c6i, _))) => {
                if c5i != c6i || j.atom() != lambda.atom() {
                    return None;
                }
                let extra: Vec<usize> =
                    d_threes(v, a).into_iter().filter(|&i| i != c2i && i != c3i).collect();
                if extra.is_empty() {
                    return Some(Cover::new(
                        "3cnf/9vi",
                        vec![
                            ls([na, b]),
                            ls([pa, b.dual()]),
                            LitSet::from_lits([pa, b, gamma.dual(), delta.dual(), eps, lambda]),
                            LitSet::from_lits([pa, b, eps.dual(), lambda.dual(), gamma, delta]),
                        ],
                    ));
                }
                let c = extra[0];
                if v.clause(c).contains_atom(b.atom()) {
                    return None;
                }
                let sh2 = shared_atom_count(v.clause(c), v.clause(c2i));
                let sh3 = shared_atom_count(v.clause(c), v.clause(c3i));
                if sh2 == 1 {
                    c3i = c;
                } else if sh3 == 1 {
                    c2i = c3i;
                    c3i = c;
                } else {
                    return build_case10(v, a, b, c2i, c);
                }
            }
        }
    }
}

fn build_case10(v: &View, a: u32, b: Lit, c2: usize, c3: usize) -> Option<Cover> {
    let pa = Lit::pos(a);
    let na = Lit::neg(a);
    let (c2i, mut c3i) = (c2, c3);
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    loop {
        if !visited.insert((c2i, c3i)) {
            return None;
        }
        let (cl2, cl3) = (v.clause(c2i), v.clause(c3i));
        let shared: Vec<u32> = cl2
            .lits()
            .iter()
            .map(|l| l.atom())
            .filter(|&x| x != a && cl3.contains_atom(x))
            .collect();
        if shared.is_empty() {
            return None;
        }
        // (i) A shared atom with opposite polarities: the two clauses
        // resolve on it.
        for &x in &shared {
            let l2 = cl2.lit_over(x)?;
            let l3 = cl3.lit_over(x)?;
            if l2 == l3.dual() {
                let delta = third_lit(cl2, a, x)?;
                let lambda = third_lit(cl3, a, x)?;
                return Some(Cover::new(
                    "3cnf/10i",
                    vec![
                        ls([pa]),
                        LitSet::from_lits([na, l2, b, lambda]),
                        LitSet::from_lits([na, l3, b, delta]),
                    ],
                ));
            }
        }
        // The clauses are distinct, so they share exactly one atom with
        // equal polarity.
        if shared.len() != 1 {
            return None;
        }
        let x = shared[0];
        let gamma = cl2.lit_over(x)?;
        if cl3.lit_over(x)? != gamma {
            return None;
        }
        let delta = third_lit(cl2, a, x)?;
        let lambda = third_lit(cl3, a, x)?;
        // (ii) The shared atom sits in a 2-clause.
        if let Some((_, h)) = two_exact(v, gamma) {
            if h.atom() == delta.atom() || h.atom() == lambda.atom() || h.atom() == b.atom() {
                return None;
            }
            return Some(Cover::new(
                "3cnf/10ii",
                vec![
                    ls([pa]),
                    ls([na, gamma, b]),
                    LitSet::from_lits([na, gamma.dual(), b, h, delta, lambda]),
                ],
            ));
        }
        let t_delta = v.two_with_atom(delta.atom());
        let t_lambda = v.two_with_atom(lambda.atom());
        // (iii) A leftover atom outside the 2-clauses.
        if t_delta.is_none() || t_lambda.is_none() {
            return Some(Cover::new(
                "3cnf/10iii",
                vec![
                    ls([pa]),
                    ls([na, gamma, b]),
                    LitSet::from_lits([na, gamma.dual(), b, delta, lambda]),
                ],
            ));
        }
        // (iv) Both leftover atoms touch 2-clauses.
        let extra: Vec<usize> =
            d_threes(v, a).into_iter().filter(|&i| i != c2i && i != c3i).collect();
        if extra.is_empty() {
            return Some(Cover::new(
                "3cnf/10iv",
                vec![
                    ls([pa, b.dual()]),
                    ls([pa, b, gamma.dual()]),
                    ls([na, gamma, b]),
                    LitSet::from_lits([na, gamma.dual(), b, delta, lambda]),
                ],
            ));
        }
        let c = extra[0];
        let cc = v.clause(c);
        if cc.contains_atom(b.atom()) {
            return None;
        }
        if cc.contains(gamma.dual()) {
            c3i = c;
            continue;
        }
        if cc.contains(gamma) {
            let phi = third_lit(cc, a, x)?;
            if v.two_with_atom(phi.atom()).is_none() {
                c3i = c;
                continue;
            }
            if phi.atom() == delta.atom() || phi.atom() == lambda.atom() {
                return None;
            }
            // Re-pairing with `c` would re-create the same configuration,
            // so extend the γ̄ branch with the forced third literal instead.
            return Some(Cover::new(
                "3cnf/10iv",
                vec![
                    ls([pa]),
                    ls([na, gamma, b]),
                    LitSet::from_lits([na, gamma.dual(), b, delta, lambda, phi]),
                ],
            ));
        }
        c3i = c;
    }
}

// ---------------------------------------------------------------------------
// Case 11: dual literals inside one atom's clause set
// ---------------------------------------------------------------------------

fn case11(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let ta = v.occ_lit(Lit::pos(a));
        for i in 0..ta.len() {
            for j in i + 1..ta.len() {
                let c1 = v.clause(ta[i]);
                let c2 = v.clause(ta[j]);
                let Some(beta) =
                    c1.lits_excluding(&[a]).into_iter().find(|l| c2.contains(l.dual()))
                else {
                    continue;
                };
                if let Some(c) = build11(v, a, ta[i], ta[j], beta) {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn build11(v: &View, a: u32, c1i: usize, c2i: usize, beta: Lit) -> Option<Cover> {
    let pa = Lit::pos(a);
    let na = Lit::neg(a);
    let gamma = third_lit(v.clause(c1i), a, beta.atom())?;
    let delta = third_lit(v.clause(c2i), a, beta.atom())?;
    // (i) The third literals agree.
    if gamma == delta {
        return Some(Cover::new("3cnf/11i", vec![ls([pa]), ls([na, gamma])]));
    }
    let ta: Vec<usize> =
        v.occ_lit(pa).iter().copied().filter(|&i| i != c1i && i != c2i).collect();
    // (ii) Another clause of T(a) mentions the β atom.
    for &c3i in &ta {
        let c3 = v.clause(c3i);
        let Some(bl) = c3.lit_over(beta.atom()) else { continue };
        // Orient the pair so that c3 contains β itself.
        let (b1, g1, d1) = if bl == beta { (beta, gamma, delta) } else { (beta.dual(), delta, gamma) };
        let eps = third_lit(c3, a, beta.atom())?;
        if eps == g1.dual() {
            // c1 and c3 differ only in their third literal: resolving
            // them forces β under ā.
            return Some(Cover::new("3cnf/11i", vec![ls([pa]), ls([na, b1])]));
        }
        return Some(Cover::new(
            "3cnf/11ii",
            vec![
                ls([pa]),
                ls([na, b1, d1]),
                LitSet::from_lits([na, b1.dual(), g1, eps]),
            ],
        ));
    }
    // (iii) A clause of T(a) avoiding both third atoms.
    for &c3i in &ta {
        let c3 = v.clause(c3i);
        if !c3.contains_atom(gamma.atom()) && !c3.contains_atom(delta.atom()) {
            return Some(Cover::new(
                "3cnf/11iii",
                vec![ls([pa]), ls([na, beta, delta]), ls([na, beta.dual(), gamma])],
            ));
        }
    }
    // (iv) T(a) is exactly the dual pair.
    if ta.is_empty() {
        return Some(Cover::new(
            "3cnf/11iv",
            vec![
                ls([na, beta, delta]),
                ls([na, beta.dual(), gamma]),
                ls([pa, beta, delta.dual()]),
                ls([pa, beta.dual(), gamma.dual()]),
            ],
        ));
    }
    // (v) A clause of T(a) dualizes one of the third literals.
    for &c3i in &ta {
        let c3 = v.clause(c3i);
        if c3.contains(gamma.dual()) {
            let eps = third_lit(c3, a, gamma.atom())?;
            return Some(Cover::new(
                "3cnf/11v",
                vec![
                    ls([pa]),
                    LitSet::from_lits([na, beta.dual(), gamma, eps]),
                    ls([na, beta, delta]),
                ],
            ));
        }
        if c3.contains(delta.dual()) {
            let eps = third_lit(c3, a, delta.atom())?;
            return Some(Cover::new(
                "3cnf/11v",
                vec![
                    ls([pa]),
                    LitSet::from_lits([na, beta, delta, eps]),
                    ls([na, beta.dual(), gamma]),
                ],
            ));
        }
    }
    // (vi) Every remaining clause of T(a) repeats γ or δ.
    if ta
        .iter()
        .any(|&ci| !v.clause(ci).contains(gamma) && !v.clause(ci).contains(delta))
    {
        return None;
    }
    let is_gd = |ci: usize| {
        let c = v.clause(ci);
        c.contains(gamma) && c.contains(delta) && c.width() == 3 && c.contains(pa)
    };
    if ta.len() == 1 && is_gd(ta[0]) {
        return Some(Cover::new(
            "3cnf/11vi",
            vec![
                LitSet::from_lits([pa, delta, gamma.dual(), beta.dual()]),
                ls([pa, delta.dual()]),
                ls([na, gamma]),
                LitSet::from_lits([na, gamma.dual(), beta, delta]),
            ],
        ));
    }
    let c4i = ta.iter().copied().find(|&ci| !is_gd(ci))?;
    let c4 = v.clause(c4i);
    if c4.contains(gamma) && !c4.contains(delta) {
        let eps = third_lit(c4, a, gamma.atom())?;
        if eps.atom() == delta.atom() || eps.atom() == beta.atom() {
            return None;
        }
        return Some(Cover::new(
            "3cnf/11vi",
            vec![
                LitSet::from_lits([pa, delta, gamma.dual()]),
                ls([pa, delta.dual()]),
                ls([na, gamma]),
                LitSet::from_lits([na, gamma.dual(), eps, beta, delta]),
            ],
        ));
    }
    if c4.contains(delta) && !c4.contains(gamma) {
        let eps = third_lit(c4, a, delta.atom())?;
        if eps.atom() == gamma.atom() || eps.atom() == beta.atom() {
            return None;
        }
        return Some(Cover::new(
            "3cnf/11vi",
            vec![
                LitSet::from_lits([pa, gamma, delta.dual()]),
                ls([pa, gamma.dual()]),
                ls([na, delta]),
                LitSet::from_lits([na, delta.dual(), eps, beta.dual(), gamma]),
            ],
        ));
    }
    None
}

// ---------------------------------------------------------------------------
// Cases 12-20: branching on the neighbourhood graph Γ(a)
// ---------------------------------------------------------------------------

/// Neighbour literals of a vertex, in ascending order, capped at `k`.
fn neighbor_lits(g: &GammaGraph, vi: u32, k: usize) -> Vec<Lit> {
    g.neighbors(vi).iter().take(k).map(|&j| g.vertex(j)).collect()
}

/// Case 12: a vertex of degree ≥ 5.
fn case12(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() < 5 {
            continue;
        }
        let bi = (0..g.vertex_count() as u32).find(|&i| g.degree(i) >= 5)?;
        let beta = g.vertex(bi);
        let mut rest = vec![Lit::neg(a), beta.dual()];
        rest.extend(neighbor_lits(&g, bi, 5));
        return Some(Cover::new(
            "3cnf/12",
            vec![ls([Lit::pos(a)]), ls([Lit::neg(a), beta]), LitSet::from_lits(rest)],
        ));
    }
    None
}

/// Case 13: maximum degree 3 or 4.
fn case13(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || !(3..=4).contains(&g.max_degree()) {
            continue;
        }
        let pa = Lit::pos(a);
        let na = Lit::neg(a);
        let deg = g.max_degree();
        let bi = (0..g.vertex_count() as u32).find(|&i| g.degree(i) == deg)?;
        let beta = g.vertex(bi);
        let e = g.edge_count();
        if deg == 4 && e >= 5 {
            let mut rest = vec![na, beta.dual()];
            rest.extend(neighbor_lits(&g, bi, 4));
            return Some(Cover::new(
                "3cnf/13i",
                vec![ls([pa]), ls([na, beta]), LitSet::from_lits(rest)],
            ));
        }
        if e == deg {
            // All edges are incident to β: removing `a` keeps every
            // clause of T(a) satisfied whenever β holds.
            let mut rest = vec![na, beta.dual()];
            rest.extend(neighbor_lits(&g, bi, 3));
            return Some(Cover::new(
                "3cnf/13ii",
                vec![ls([pa, beta.dual()]), ls([na, beta]), LitSet::from_lits(rest)],
            ));
        }
        let off: Vec<(u32, u32)> =
            g.edges().iter().copied().filter(|&(x, y)| x != bi && y != bi).collect();
        if deg == 3 && e >= 5 {
            if off.len() < 2 {
                return None;
            }
            let (x1, y1) = off[0];
            let (x2, y2) = off[1];
            let mut rest = vec![na, beta.dual()];
            rest.extend(neighbor_lits(&g, bi, 3));
            let shared = [x2, y2].iter().copied().find(|&z| z == x1 || z == y1);
            return Some(match shared {
                None => Cover::new(
                    "3cnf/13iii",
                    vec![ls([pa]), ls([na, beta]), LitSet::from_lits(rest)],
                ),
                Some(dv) => {
                    let g1 = if x1 == dv { y1 } else { x1 };
                    let g2 = if x2 == dv { y2 } else { x2 };
                    Cover::new(
                        "3cnf/13iii",
                        vec![
                            ls([pa]),
                            ls([na, beta, g.vertex(dv)]),
                            LitSet::from_lits([
                                na,
                                beta,
                                g.vertex(dv).dual(),
                                g.vertex(g1),
                                g.vertex(g2),
                            ]),
                            LitSet::from_lits(rest),
                        ],
                    )
                }
            });
        }
        if deg == 3 && e == 4 {
            if off.len() != 1 {
                return None;
            }
            let (x1, y1) = off[0];
            let mut rest = vec![na, beta.dual()];
            rest.extend(neighbor_lits(&g, bi, 3));
            return Some(Cover::new(
                "3cnf/13iv",
                vec![
                    ls([pa, beta.dual()]),
                    LitSet::from_lits([pa, beta, g.vertex(x1).dual(), g.vertex(y1).dual()]),
                    ls([na, beta]),
                    LitSet::from_lits(rest),
                ],
            ));
        }
        return None;
    }
    None
}

/// Case 14: a matching of size ≥ 4 in a degree-≤2 graph makes both
/// polarities of `a` shrink the theory enough on their own.
fn case14(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() > 2 {
            continue;
        }
        if g.max_matching() >= 4 {
            return Some(Cover::new("3cnf/14", vec![ls([Lit::pos(a)]), ls([Lit::neg(a)])]));
        }
    }
    None
}

/// First pair of non-adjacent degree-2 vertices, ascending.
fn nonadjacent_deg2_pair(g: &GammaGraph) -> Option<(u32, u32)> {
    let d2: Vec<u32> = (0..g.vertex_count() as u32).filter(|&i| g.degree(i) == 2).collect();
    for i in 0..d2.len() {
        for j in i + 1..d2.len() {
            if !g.adjacent(d2[i], d2[j]) {
                return Some((d2[i], d2[j]));
            }
        }
    }
    None
}

/// Case 15: ≥ 5 edges, maximum degree ≤ 2.
fn case15(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() > 2 || g.edge_count() < 5 {
            continue;
        }
        let pa = Lit::pos(a);
        let na = Lit::neg(a);
        if let Some((bi, gi)) = nonadjacent_deg2_pair(&g) {
            let beta = g.vertex(bi);
            let gam = g.vertex(gi);
            let nb = neighbor_lits(&g, bi, 2);
            let ng = neighbor_lits(&g, gi, 2);
            return Some(Cover::new(
                "3cnf/15i",
                vec![
                    ls([pa]),
                    LitSet::from_lits([na, beta.dual(), nb[0], nb[1]]),
                    ls([na, beta, gam]),
                    LitSet::from_lits([na, beta, gam.dual(), ng[0], ng[1]]),
                ],
            ));
        }
        let bi = (0..g.vertex_count() as u32).find(|&i| g.degree(i) == 2)?;
        let beta = g.vertex(bi);
        let nb = neighbor_lits(&g, bi, 2);
        return Some(Cover::new(
            "3cnf/15ii",
            vec![
                ls([pa]),
                ls([na, beta]),
                LitSet::from_lits([na, beta.dual(), nb[0], nb[1]]),
            ],
        ));
    }
    None
}

/// Case 16: exactly 4 edges with a non-adjacent degree-2 pair; their
/// edges then exhaust T(a), enabling minimality branches on `a`.
fn case16(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() > 2 || g.edge_count() != 4 {
            continue;
        }
        let Some((bi, gi)) = nonadjacent_deg2_pair(&g) else { continue };
        let pa = Lit::pos(a);
        let na = Lit::neg(a);
        let beta = g.vertex(bi);
        let gam = g.vertex(gi);
        let nb = neighbor_lits(&g, bi, 2);
        let ng = neighbor_lits(&g, gi, 2);
        return Some(Cover::new(
            "3cnf/16",
            vec![
                ls([pa, beta.dual()]),
                ls([pa, beta, gam.dual()]),
                LitSet::from_lits([na, beta.dual(), nb[0], nb[1]]),
                ls([na, beta, gam]),
                LitSet::from_lits([na, beta, gam.dual(), ng[0], ng[1]]),
            ],
        ));
    }
    None
}

/// Case 17: exactly 4 edges and exactly one degree-2 vertex.
fn case17(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() > 2 || g.edge_count() != 4 {
            continue;
        }
        let d2: Vec<u32> = (0..g.vertex_count() as u32).filter(|&i| g.degree(i) == 2).collect();
        if d2.len() != 1 {
            continue;
        }
        let beta = g.vertex(d2[0]);
        let nb = neighbor_lits(&g, d2[0], 2);
        return Some(Cover::new(
            "3cnf/17",
            vec![
                ls([Lit::pos(a)]),
                ls([Lit::neg(a), beta]),
                LitSet::from_lits([Lit::neg(a), beta.dual(), nb[0], nb[1]]),
            ],
        ));
    }
    None
}

/// Case 18: exactly 3 edges with a degree-2 vertex (a 2-edge path plus
/// one independent edge).
fn case18(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.max_degree() > 2 || g.edge_count() != 3 {
            continue;
        }
        let Some(bi) = (0..g.vertex_count() as u32).find(|&i| g.degree(i) == 2) else { continue };
        let beta = g.vertex(bi);
        let nb = neighbor_lits(&g, bi, 2);
        let off: Vec<(u32, u32)> =
            g.edges().iter().copied().filter(|&(x, y)| x != bi && y != bi).collect();
        if off.len() != 1 {
            continue;
        }
        let (x1, y1) = off[0];
        let (ga, g1) = (g.vertex(x1), g.vertex(y1));
        let pa = Lit::pos(a);
        let na = Lit::neg(a);
        return Some(Cover::new(
            "3cnf/18",
            vec![
                ls([pa, beta.dual()]),
                LitSet::from_lits([pa, beta, ga.dual(), g1.dual()]),
                LitSet::from_lits([na, beta.dual(), nb[0], nb[1]]),
                ls([na, beta, ga]),
                LitSet::from_lits([na, beta, ga.dual(), g1]),
            ],
        ));
    }
    None
}

/// Case 19: exactly two vertex-disjoint edges.
fn case19(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) || g.edge_count() != 2 {
            continue;
        }
        let (x1, y1) = g.edges()[0];
        let (x2, y2) = g.edges()[1];
        if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
            continue;
        }
        let pa = Lit::pos(a);
        return Some(Cover::new(
            "3cnf/19",
            vec![
                LitSet::from_lits([pa, g.vertex(x1).dual(), g.vertex(y1).dual()]),
                LitSet::from_lits([pa, g.vertex(x2).dual(), g.vertex(y2).dual()]),
                ls([Lit::neg(a)]),
            ],
        ));
    }
    None
}

/// Case 20: one edge, or two edges sharing a vertex.
fn case20(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) {
            continue;
        }
        let beta = match g.edge_count() {
            1 => g.vertex(g.edges()[0].0),
            2 => {
                let (x1, y1) = g.edges()[0];
                let (x2, y2) = g.edges()[1];
                let shared = [x2, y2].iter().copied().find(|&z| z == x1 || z == y1);
                match shared {
                    Some(s) => g.vertex(s),
                    None => continue,
                }
            }
            _ => continue,
        };
        return Some(Cover::new("3cnf/20", vec![ls([Lit::neg(a)]), ls([Lit::pos(a), beta.dual()])]));
    }
    None
}

// ---------------------------------------------------------------------------
// Case 21: the terminal shapes
// ---------------------------------------------------------------------------

/// A 3-branch cover for a triangle-plus-edge graph: branch on the
/// smallest triangle vertex.
fn triangle_cover(a: u32, g: &GammaGraph) -> Option<Cover> {
    let comps = g.components();
    let tri = comps.iter().find(|c| c.len() == 3)?;
    let beta = g.vertex(tri[0]);
    let nb = neighbor_lits(g, tri[0], 2);
    Some(Cover::new(
        "3cnf/21i",
        vec![
            ls([Lit::pos(a)]),
            ls([Lit::neg(a), beta]),
            LitSet::from_lits([Lit::neg(a), beta.dual(), nb[0], nb[1]]),
        ],
    ))
}

fn case21(v: &View) -> Option<Cover> {
    if !all_three(v) {
        return None;
    }
    // (i) Some atom occurs negatively: split on the first such atom.
    if let Some(&a) = v
        .atoms()
        .iter()
        .find(|&&a| !v.occ_lit(Lit::neg(a)).is_empty())
    {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) {
            return None;
        }
        return match g.classify() {
            GammaShape::P3PlusP1 | GammaShape::ThreeP1 => {
                Some(Cover::new("3cnf/21i", vec![ls([Lit::pos(a)]), ls([Lit::neg(a)])]))
            }
            GammaShape::C3PlusP1 => triangle_cover(a, &g),
            GammaShape::Other => None,
        };
    }
    // (ii) The theory is purely positive.
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if !gamma_sane(&g) {
            return None;
        }
        if g.classify() != GammaShape::P3PlusP1 {
            continue;
        }
        // Path with adjacent midpoints b, c and b-side endpoint d, plus
        // the independent edge {f, g}.
        let comps = g.components();
        let path = comps.iter().find(|c| c.len() == 4)?;
        let p1 = comps.iter().find(|c| c.len() == 2)?;
        let mids: Vec<u32> = path.iter().copied().filter(|&i| g.degree(i) == 2).collect();
        if mids.len() != 2 || !g.adjacent(mids[0], mids[1]) {
            return None;
        }
        let (bv, cv) = (mids[0], mids[1]);
        let dv = g.neighbors(bv).iter().copied().find(|&x| x != cv)?;
        let (b, c, d) = (g.vertex(bv), g.vertex(cv), g.vertex(dv));
        let (f, g2) = (g.vertex(p1[0]), g.vertex(p1[1]));
        let pa = Lit::pos(a);
        let na = Lit::neg(a);
        return Some(Cover::new(
            "3cnf/21ii",
            vec![
                LitSet::from_lits([pa, b, c, f.dual(), g2.dual()]),
                ls([pa, b, c.dual()]),
                ls([pa, b.dual()]),
                ls([na, b]),
                LitSet::from_lits([na, b.dual(), c, d]),
            ],
        ));
    }
    for &a in v.atoms() {
        let g = gamma_for(v, a);
        if g.classify() == GammaShape::C3PlusP1 {
            let mut cov = triangle_cover(a, &g)?;
            cov.case = super::CaseId("3cnf/21ii");
            return Some(cov);
        }
    }
    // Every atom's graph is three independent edges.
    let &a = v.atoms().first()?;
    let g = gamma_for(v, a);
    if g.classify() != GammaShape::ThreeP1 {
        return None;
    }
    let mut branches = vec![ls([Lit::neg(a)])];
    for &(x, y) in g.edges() {
        branches.push(LitSet::from_lits([Lit::pos(a), g.vertex(x).dual(), g.vertex(y).dual()]));
    }
    Some(Cover::new("3cnf/21ii", branches))
}
