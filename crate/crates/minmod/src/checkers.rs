//! Minimality tests, a small SAT decision procedure, and brute-force
//! oracles.
//!
//! Two polynomial ingredients make candidate filtering cheap relative to
//! enumeration:
//!
//! * [`test_min_2cnf`] decides minimality of a model of a 2-CNF theory in
//!   linear time.  After reducing by the negations of the atoms outside
//!   `M`, every surviving clause has one of the shapes `a`, `a ∨ b`,
//!   `a ∨ ¬b` with all atoms inside `M`.   The mixed clauses induce an
//!   implication graph on `M` (`a ∨ ¬b` is `b → a`), and `M` is minimal
//!   exactly when every strongly connected component without incoming
//!   edges contains an all-positive clause lying fully inside it — some
//!   clause forces that component to be true, and everything else is
//!   pulled in along implications.
//! * [`test_min_sat`] handles arbitrary CNF with one SAT call per atom of
//!   `M`: the reduced theory together with `¬a` is satisfiable iff a model
//!   strictly below `M` avoids `a`.
//!
//! The brute-force oracles ([`brute_minimal_models`],
//! [`brute_stable_models`], [`brute_answer_sets`]) enumerate candidate
//! atom sets directly from the semantic definitions, without touching the
//! branching engine or the cover functions, and are the ground truth the
//! rest of the crate is validated against.  They refuse instances above a
//! (configurable) atom cap rather than run forever.

use thiserror::Error;

use crate::programs::{reduct, test_stb, translate, Program};
use crate::theory::{is_model, Clause, Lit, LitSet, Model, Theory};

/// Default occurring-atom cap for the CNF oracle (2^14 candidate sets).
pub const DEFAULT_CNF_ORACLE_CAP: u32 = 14;
/// Default occurring-atom cap for the program oracles.
pub const DEFAULT_PROGRAM_ORACLE_CAP: u32 = 12;

/// Errors from the brute-force oracles.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// The instance has more occurring atoms than the cap allows.
    #[error("instance has {0} occurring atoms, above the oracle cap of {1}")]
    CapExceeded(usize, u32),
}

/// The assumption set `{¬a : a ∈ At(T) \ M}` used by both minimality
/// tests: reducing by it confines the theory to the atoms of `M`.
fn outside_negations(t: &Theory, m: &[u32]) -> LitSet {
    LitSet::from_lits(
        t.occurring_atoms()
            .into_iter()
            .filter(|a| m.binary_search(a).is_err())
            .map(Lit::neg),
    )
}

/// The implication graph of a reduced 2-CNF theory: one vertex per
/// occurring atom, and an edge `b → a` for every clause `a ∨ ¬b`.
/// All-positive clauses contribute no edges; they act as the sources of
/// truth the minimality criterion looks for.
pub struct ImplicationGraph {
    atoms: Vec<u32>,
    vertex_of: Vec<u32>,
    adj: Vec<Vec<u32>>,
    scc_of: Vec<u32>,
    scc_count: usize,
    has_incoming: Vec<bool>,
}

impl ImplicationGraph {
    /// Build from a theory whose clauses all have width ≤ 2.
    pub fn build(t: &Theory) -> ImplicationGraph {
        assert!(t.max_width() <= 2, "implication graph requires 2-CNF");
        let atoms = t.occurring_atoms();
        let mut vertex_of = vec![u32::MAX; t.n() as usize];
        for (i, &a) in atoms.iter().enumerate() {
            vertex_of[a as usize] = i as u32;
        }
        let mut adj = vec![Vec::new(); atoms.len()];
        for c in t.clauses() {
            if c.width() != 2 {
                continue;
            }
            let (l0, l1) = (c.lits()[0], c.lits()[1]);
            // A mixed clause pos ∨ ¬src reads "src implies pos".
            let edge = match (l0.is_positive(), l1.is_positive()) {
                (true, false) => Some((l1.atom(), l0.atom())),
                (false, true) => Some((l0.atom(), l1.atom())),
                _ => None,
            };
            if let Some((src, dst)) = edge {
                adj[vertex_of[src as usize] as usize].push(vertex_of[dst as usize]);
            }
        }
        let (scc_of, scc_count) = tarjan_scc(&adj);
        let mut has_incoming = vec![false; scc_count];
        for (u, outs) in adj.iter().enumerate() {
            for &v in outs {
                if scc_of[u] != scc_of[v as usize] {
                    has_incoming[scc_of[v as usize] as usize] = true;
                }
            }
        }
        ImplicationGraph { atoms, vertex_of, adj, scc_of, scc_count, has_incoming }
    }

    /// The vertex atoms in ascending order.
    pub fn atoms(&self) -> &[u32] {
        &self.atoms
    }

    /// Number of strongly connected components.
    pub fn scc_count(&self) -> usize {
        self.scc_count
    }

    /// Component id of an occurring atom.
    pub fn scc_of_atom(&self, atom: u32) -> u32 {
        let v = self.vertex_of[atom as usize];
        assert!(v != u32::MAX, "atom {atom} does not occur in the graph");
        self.scc_of[v as usize]
    }

    /// Whether a component has no incoming edge from another component.
    pub fn is_zero_rank(&self, scc: u32) -> bool {
        !self.has_incoming[scc as usize]
    }

    /// The components as atom sets (sorted), indexed by component id.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.scc_count];
        for (v, &a) in self.atoms.iter().enumerate() {
            out[self.scc_of[v] as usize].push(a);
        }
        out
    }

    /// Successor vertices (by atom id) of an atom, for inspection.
    pub fn successors(&self, atom: u32) -> Vec<u32> {
        let v = self.vertex_of[atom as usize];
        assert!(v != u32::MAX, "atom {atom} does not occur in the graph");
        let mut out: Vec<u32> = self.adj[v as usize]
            .iter()
            .map(|&w| self.atoms[w as usize])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Iterative Tarjan SCC over an adjacency list; returns the component id
/// of each vertex and the component count.  Ids are assigned in reverse
/// topological discovery order, but the minimality test only needs the
/// partition plus the inter-component edges.
fn tarjan_scc(adj: &[Vec<u32>]) -> (Vec<u32>, usize) {
    const UNSET: u32 = u32::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut scc_of = vec![0u32; n];
    let mut scc_count = 0usize;
    let mut next_index = 0u32;
    let mut frames: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        frames.push((root, 0));
        while let Some(&(v, child)) = frames.last() {
            let vu = v as usize;
            if child == 0 {
                index[vu] = next_index;
                low[vu] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[vu] = true;
            }
            if child < adj[vu].len() {
                frames.last_mut().expect("frame exists").1 += 1;
                let w = adj[vu][child] as usize;
                if index[w] == UNSET {
                    frames.push((w as u32, 0));
                } else if on_stack[w] {
                    low[vu] = low[vu].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _)) = frames.last() {
                    let pu = p as usize;
                    low[pu] = low[pu].min(low[vu]);
                }
                if low[vu] == index[vu] {
                    loop {
                        let w = stack.pop().expect("scc stack nonempty");
                        on_stack[w as usize] = false;
                        scc_of[w as usize] = scc_count as u32;
                        if w == v {
                            break;
                        }
                    }
                    scc_count += 1;
                }
            }
        }
    }
    (scc_of, scc_count)
}

/// Linear-time minimality test for models of 2-CNF theories.
///
/// Steps: check `M` is a model; reduce by the negations of the atoms
/// outside `M`; require the reduction to mention every atom of `M`
/// (an unmentioned atom could be dropped); then check that every
/// zero-rank strongly connected component of the implication graph
/// contains an all-positive clause lying fully inside it.
///
/// Rejects theories of width > 2.
pub fn test_min_2cnf(t: &Theory, m: &[u32]) -> bool {
    assert!(t.max_width() <= 2, "test_min_2cnf requires a 2-CNF theory");
    if !is_model(t, m) {
        return false;
    }
    let tl = t
        .reduce(&outside_negations(t, m))
        .expect("complement negations are consistent");
    if tl.occurring_atoms() != m {
        return false;
    }
    // Shape audit: since M is a model, every reduced clause keeps at
    // least one positive literal and is never empty.
    debug_assert!(tl.clauses().iter().all(|c| {
        (1..=2).contains(&c.width()) && c.lits().iter().any(|l| l.is_positive())
    }));
    let g = ImplicationGraph::build(&tl);
    let mut anchored = vec![false; g.scc_count()];
    for c in tl.clauses() {
        if !c.lits().iter().all(|l| l.is_positive()) {
            continue;
        }
        let s0 = g.scc_of_atom(c.lits()[0].atom());
        if c.width() == 1 || g.scc_of_atom(c.lits()[1].atom()) == s0 {
            anchored[s0 as usize] = true;
        }
    }
    (0..g.scc_count() as u32).all(|s| !g.is_zero_rank(s) || anchored[s as usize])
}

/// DPLL satisfiability decision with unit propagation and pure-literal
/// elimination; branches on a most-frequent literal (ties: smaller atom
/// id, then the positive polarity).  Exponential worst case, used only on
/// the small reduced theories produced by [`test_min_sat`] and in tests.
pub fn sat_decide(t: &Theory) -> bool {
    let clauses: Vec<Vec<Lit>> = t.clauses().iter().map(|c| c.lits().to_vec()).collect();
    dpll(clauses, t.n())
}

/// Assign `lit` true: satisfied clauses vanish, dual literals are erased.
fn dpll_assign(clauses: &[Vec<Lit>], lit: Lit) -> Vec<Vec<Lit>> {
    let mut out = Vec::with_capacity(clauses.len());
    for c in clauses {
        if c.contains(&lit) {
            continue;
        }
        out.push(c.iter().copied().filter(|&l| l != lit.dual()).collect());
    }
    out
}

fn dpll(mut clauses: Vec<Vec<Lit>>, n: u32) -> bool {
    loop {
        if clauses.is_empty() {
            return true;
        }
        if clauses.iter().any(|c| c.is_empty()) {
            return false;
        }
        if let Some(unit) = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) {
            clauses = dpll_assign(&clauses, unit);
            continue;
        }
        // Pure literal: an atom occurring with a single polarity can be
        // assigned that polarity without losing satisfiability.
        let mut occ = vec![0u32; 2 * n as usize];
        for c in &clauses {
            for &l in c {
                occ[l.code()] += 1;
            }
        }
        let pure = (0..n).find_map(|a| {
            let (p, q) = (occ[Lit::pos(a).code()], occ[Lit::neg(a).code()]);
            match (p > 0, q > 0) {
                (true, false) => Some(Lit::pos(a)),
                (false, true) => Some(Lit::neg(a)),
                _ => None,
            }
        });
        if let Some(l) = pure {
            clauses = dpll_assign(&clauses, l);
            continue;
        }
        // Branch on a most-frequent literal.
        let mut best = None;
        for a in 0..n {
            for l in [Lit::pos(a), Lit::neg(a)] {
                let c = occ[l.code()];
                if c > 0 && best.map_or(true, |(bc, _)| c > bc) {
                    best = Some((c, l));
                }
            }
        }
        let (_, l) = best.expect("non-empty clauses have literals");
        return dpll(dpll_assign(&clauses, l), n) || dpll(dpll_assign(&clauses, l.dual()), n);
    }
}

/// SAT-based minimality test for models of arbitrary CNF theories: `M` is
/// minimal iff for every `a ∈ M` the reduced theory together with `¬a` is
/// unsatisfiable (no model strictly below `M` avoids `a`).
pub fn test_min_sat(t: &Theory, m: &[u32]) -> bool {
    if !is_model(t, m) {
        return false;
    }
    let tl = t
        .reduce(&outside_negations(t, m))
        .expect("complement negations are consistent");
    for &a in m {
        let mut clauses = tl.clauses().to_vec();
        clauses.push(Clause::new([Lit::neg(a)]).expect("unit clause"));
        if sat_decide(&Theory::new(t.n(), clauses)) {
            return false;
        }
    }
    true
}

/// Decode a bitmask over `atoms` into a sorted atom set.
fn decode_mask(mask: u32, atoms: &[u32], buf: &mut Vec<u32>) {
    buf.clear();
    for (i, &a) in atoms.iter().enumerate() {
        if mask >> i & 1 == 1 {
            buf.push(a);
        }
    }
}

fn check_cap(k: usize, cap: u32) -> Result<(), OracleError> {
    assert!(cap <= 26, "oracle cap {cap} is unreasonably large");
    if k > cap as usize {
        return Err(OracleError::CapExceeded(k, cap));
    }
    Ok(())
}

/// Brute-force minimal-model oracle: enumerate subsets of the occurring
/// atoms in cardinality order and keep those models not above an already
/// accepted one.  Independent of the branching engine and the cover
/// functions.  `cap` bounds the occurring-atom count
/// (default [`DEFAULT_CNF_ORACLE_CAP`]); output is sorted
/// lexicographically.
pub fn brute_minimal_models(t: &Theory, cap: Option<u32>) -> Result<Vec<Model>, OracleError> {
    let atoms = t.occurring_atoms();
    check_cap(atoms.len(), cap.unwrap_or(DEFAULT_CNF_ORACLE_CAP))?;
    let mut order: Vec<u32> = (0..1u32 << atoms.len()).collect();
    order.sort_unstable_by_key(|&mask| (mask.count_ones(), mask));
    let mut accepted: Vec<u32> = Vec::new();
    let mut models: Vec<Model> = Vec::new();
    let mut buf = Vec::with_capacity(atoms.len());
    for &mask in &order {
        // Cardinality order guarantees every strict subset was visited
        // first, so a superset test against accepted masks suffices.
        if accepted.iter().any(|&p| p & mask == p) {
            continue;
        }
        decode_mask(mask, &atoms, &mut buf);
        if is_model(t, &buf) {
            accepted.push(mask);
            models.push(buf.clone());
        }
    }
    models.sort();
    Ok(models)
}

/// Brute-force stable-model oracle for normal programs: test every subset
/// of the occurring atoms against the reduct/least-model definition.
/// `cap` defaults to [`DEFAULT_PROGRAM_ORACLE_CAP`]; output is sorted
/// lexicographically.
pub fn brute_stable_models(p: &Program, cap: Option<u32>) -> Result<Vec<Model>, OracleError> {
    let atoms = p.occurring_atoms();
    check_cap(atoms.len(), cap.unwrap_or(DEFAULT_PROGRAM_ORACLE_CAP))?;
    let mut models: Vec<Model> = Vec::new();
    let mut buf = Vec::with_capacity(atoms.len());
    for mask in 0..1u32 << atoms.len() {
        decode_mask(mask, &atoms, &mut buf);
        if test_stb(p, &buf) {
            models.push(buf.clone());
        }
    }
    models.sort();
    Ok(models)
}

/// Brute-force answer-set oracle for arbitrary programs, straight from
/// the definition: `M` is an answer set iff it satisfies the translated
/// reduct and no proper subset does.  The inner subset walk keeps this
/// independent of the minimality checkers used by the solver path.
/// `cap` defaults to [`DEFAULT_PROGRAM_ORACLE_CAP`]; output is sorted
/// lexicographically.
pub fn brute_answer_sets(p: &Program, cap: Option<u32>) -> Result<Vec<Model>, OracleError> {
    let atoms = p.occurring_atoms();
    check_cap(atoms.len(), cap.unwrap_or(DEFAULT_PROGRAM_ORACLE_CAP))?;
    let mut models: Vec<Model> = Vec::new();
    let mut buf = Vec::with_capacity(atoms.len());
    let mut sub_buf = Vec::with_capacity(atoms.len());
    for mask in 0..1u32 << atoms.len() {
        decode_mask(mask, &atoms, &mut buf);
        let tr = translate(&reduct(p, &buf));
        if !is_model(&tr, &buf) {
            continue;
        }
        let mut minimal = true;
        if mask != 0 {
            // Enumerate the proper submasks of `mask`, empty set included.
            let mut sub = (mask - 1) & mask;
            loop {
                decode_mask(sub, &atoms, &mut sub_buf);
                if is_model(&tr, &sub_buf) {
                    minimal = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        if minimal {
            models.push(buf.clone());
        }
    }
    models.sort();
    Ok(models)
}
