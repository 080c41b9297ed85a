//! The neighbourhood graph `Γ(a)` driving the 3-CNF case analysis.
//!
//! For an atom `a` of a theory whose clauses are all 3-clauses, the
//! vertices of `Γ(a)` are the literals appearing next to the positive
//! literal `a`, with an edge `β — γ` for every clause `a ∨ β ∨ γ`.
//! Clause sets being duplicate-free, each clause contributes a distinct
//! edge, so the graph determines (and is determined by) the set of
//! clauses containing `a` positively.  Cases 12–21 of the 3-CNF cover
//! catalog branch purely on the shape of this graph: maximum degree,
//! edge count, maximum matching, and finally one of three terminal
//! shapes.

use std::fmt;

use crate::theory::{Clause, Lit, Theory};

/// The terminal shapes distinguished by the last case of the 3-CNF
/// catalog, plus a catch-all for every other graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaShape {
    /// A triangle plus one independent edge (5 vertices, 4 edges).
    C3PlusP1,
    /// A 3-edge path plus one independent edge (6 vertices, 4 edges).
    P3PlusP1,
    /// Three pairwise independent edges (6 vertices, 3 edges).
    ThreeP1,
    /// Any other shape.
    Other,
}

/// The neighbourhood graph of one atom.  Vertices are literals in sorted
/// order; edges and adjacency lists are index-based and deterministic.
pub struct GammaGraph {
    anchor: u32,
    verts: Vec<Lit>,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

/// Build `Γ(a)`.  Every clause containing the positive literal `a` must
/// be a 3-clause; the caller (the 3-CNF catalog past its 2-clause cases)
/// guarantees this.
pub fn build_gamma(s: &Theory, a: u32) -> GammaGraph {
    let clauses = s.occ(Lit::pos(a)).iter().map(|&ci| &s.clauses()[ci as usize]);
    gamma_from_clauses(a, clauses)
}

/// Build `Γ(a)` from an explicit list of the clauses containing `+a`.
pub(crate) fn gamma_from_clauses<'a>(
    a: u32,
    clauses: impl Iterator<Item = &'a Clause>,
) -> GammaGraph {
    let mut pairs: Vec<(Lit, Lit)> = Vec::new();
    for c in clauses {
        assert_eq!(c.width(), 3, "gamma graph requires 3-clauses around atom {a}");
        let rest = c.lits_excluding(&[a]);
        debug_assert_eq!(rest.len(), 2);
        pairs.push((rest[0], rest[1]));
    }
    let mut verts: Vec<Lit> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
    verts.sort_unstable();
    verts.dedup();
    let index = |l: Lit| verts.binary_search(&l).expect("vertex present") as u32;
    let mut edges: Vec<(u32, u32)> = pairs
        .iter()
        .map(|&(x, y)| {
            let (i, j) = (index(x), index(y));
            if i < j {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut adj = vec![Vec::new(); verts.len()];
    for &(i, j) in &edges {
        adj[i as usize].push(j);
        adj[j as usize].push(i);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    GammaGraph { anchor: a, verts, edges, adj }
}

impl GammaGraph {
    /// The atom this graph describes.
    pub fn anchor(&self) -> u32 {
        self.anchor
    }

    /// Vertex literals, sorted by literal code.
    pub fn vertices(&self) -> &[Lit] {
        &self.verts
    }

    /// The literal of a vertex index.
    pub fn vertex(&self, i: u32) -> Lit {
        self.verts[i as usize]
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Edges as sorted index pairs `(i, j)`, `i < j`, in sorted order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbour indices of a vertex, ascending.
    pub fn neighbors(&self, i: u32) -> &[u32] {
        &self.adj[i as usize]
    }

    pub fn degree(&self, i: u32) -> usize {
        self.adj[i as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn adjacent(&self, i: u32, j: u32) -> bool {
        self.adj[i as usize].binary_search(&j).is_ok()
    }

    /// Vertex indices of each connected component, components ordered by
    /// their smallest vertex, vertices ascending within.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut comp = vec![u32::MAX; self.verts.len()];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for start in 0..self.verts.len() as u32 {
            if comp[start as usize] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start as usize] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in self.neighbors(v) {
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Maximum matching size.  Only needed (and only exact) for graphs
    /// of maximum degree ≤ 2, where every component is a path or a
    /// cycle: a path with `e` edges contributes `ceil(e/2)`, a cycle
    /// with `v` vertices contributes `floor(v/2)`.
    pub fn max_matching(&self) -> usize {
        assert!(self.max_degree() <= 2, "matching formula requires max degree <= 2");
        self.components()
            .iter()
            .map(|members| {
                let v = members.len();
                let e: usize = members.iter().map(|&m| self.degree(m)).sum::<usize>() / 2;
                if e == v {
                    v / 2 // cycle
                } else {
                    debug_assert_eq!(e + 1, v, "degree-≤2 component is a path or cycle");
                    e.div_ceil(2) // path
                }
            })
            .sum()
    }

    /// Classify against the three terminal shapes of the catalog.
    pub fn classify(&self) -> GammaShape {
        let comps = self.components();
        let mut profile: Vec<(usize, usize, usize)> = comps
            .iter()
            .map(|members| {
                let v = members.len();
                let e: usize = members.iter().map(|&m| self.degree(m)).sum::<usize>() / 2;
                let maxdeg = members.iter().map(|&m| self.degree(m)).max().unwrap_or(0);
                (v, e, maxdeg)
            })
            .collect();
        profile.sort_unstable();
        match profile.as_slice() {
            [(2, 1, 1), (2, 1, 1), (2, 1, 1)] => GammaShape::ThreeP1,
            [(2, 1, 1), (3, 3, 2)] => GammaShape::C3PlusP1,
            [(2, 1, 1), (4, 3, 2)] => GammaShape::P3PlusP1,
            _ => GammaShape::Other,
        }
    }
}

impl fmt::Debug for GammaGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GammaGraph(a=x{}, verts={:?}, edges={:?})",
            self.anchor, self.verts, self.edges
        )
    }
}
