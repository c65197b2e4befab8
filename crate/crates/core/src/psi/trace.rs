//! Derivation trees for psi that can be re-checked by replay.

use std::collections::HashMap;
use std::fmt;

use crate::ext::ExtInt;
use crate::graph::{canonical_form, CanonicalKey, Edge, Graph, MAX_CANON_ORDER};

use super::PSI_EMPTY;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseCase {
    Empty,
    Discrete,
    IsolatedVertex,
}

#[derive(Clone, Debug)]
pub enum TraceKind {
    Base(BaseCase),
    /// The isomorphism class was already expanded earlier in the tree.
    Repeat,
    /// Every edge with both branches; `attaining` is the first edge whose
    /// branch minimum equals the node value.
    Branches {
        branches: Vec<EdgeBranch>,
        attaining: Edge,
    },
}

#[derive(Clone, Debug)]
pub struct EdgeBranch {
    pub edge: Edge,
    pub deleted: TraceNode,
    pub excluded: TraceNode,
    /// `min(deleted.value, excluded.value + 1)`
    pub value: ExtInt,
}

#[derive(Clone, Debug)]
pub struct TraceNode {
    pub graph: Graph,
    pub value: ExtInt,
    pub kind: TraceKind,
}

/// Full derivation of psi. Unlike [`super::psi`] no edge is skipped, so the
/// tree carries both branch values for every edge of every expanded class.
pub fn psi_trace(g: &Graph) -> TraceNode {
    let mut seen = HashMap::new();
    build(g, &mut seen)
}

fn key_of(g: &Graph) -> Option<CanonicalKey> {
    (g.n() <= MAX_CANON_ORDER).then(|| canonical_form(g).expect("order checked"))
}

fn build(g: &Graph, seen: &mut HashMap<CanonicalKey, ExtInt>) -> TraceNode {
    let base = |case, value| TraceNode {
        graph: g.clone(),
        value,
        kind: TraceKind::Base(case),
    };
    if g.is_empty() {
        return base(BaseCase::Empty, PSI_EMPTY);
    }
    if g.is_discrete() {
        return base(BaseCase::Discrete, ExtInt::PosInf);
    }
    if g.has_isolated_vertex() {
        return base(BaseCase::IsolatedVertex, ExtInt::PosInf);
    }
    let key = key_of(g);
    if let Some(&value) = key.as_ref().and_then(|k| seen.get(k)) {
        return TraceNode {
            graph: g.clone(),
            value,
            kind: TraceKind::Repeat,
        };
    }
    let mut branches = Vec::new();
    for e in g.edges() {
        let excluded = build(&g.exclude_edge(e).expect("edge of g"), seen);
        let deleted = build(&g.delete_edge(e).expect("edge of g"), seen);
        let value = deleted.value.min(excluded.value.succ());
        branches.push(EdgeBranch {
            edge: e,
            deleted,
            excluded,
            value,
        });
    }
    let value = branches.iter().map(|b| b.value).max().expect("non-discrete");
    let attaining = branches.iter().find(|b| b.value == value).expect("max attained").edge;
    if let Some(k) = key {
        seen.insert(k, value);
    }
    TraceNode {
        graph: g.clone(),
        value,
        kind: TraceKind::Branches { branches, attaining },
    }
}

impl TraceNode {
    /// Re-derives every value in the tree from the graphs it records.
    /// `Repeat` leaves are checked against the value of the expanded node of
    /// the same isomorphism class.
    pub fn replay(&self) -> Result<ExtInt, String> {
        let mut expanded = HashMap::new();
        self.collect_expanded(&mut expanded)?;
        self.check(&expanded)
    }

    fn collect_expanded(&self, out: &mut HashMap<CanonicalKey, ExtInt>) -> Result<(), String> {
        if let TraceKind::Branches { branches, .. } = &self.kind {
            if let Some(k) = key_of(&self.graph) {
                if let Some(prev) = out.insert(k, self.value) {
                    if prev != self.value {
                        return Err(format!("{:?} expanded with two values", self.graph));
                    }
                }
            }
            for b in branches {
                b.deleted.collect_expanded(out)?;
                b.excluded.collect_expanded(out)?;
            }
        }
        Ok(())
    }

    fn check(&self, expanded: &HashMap<CanonicalKey, ExtInt>) -> Result<ExtInt, String> {
        let g = &self.graph;
        let fail = |why: &str| Err(format!("{g:?}: {why}"));
        let derived = match &self.kind {
            TraceKind::Base(BaseCase::Empty) if g.is_empty() => PSI_EMPTY,
            TraceKind::Base(BaseCase::Discrete) if !g.is_empty() && g.is_discrete() => ExtInt::PosInf,
            TraceKind::Base(BaseCase::IsolatedVertex) if g.has_isolated_vertex() => ExtInt::PosInf,
            TraceKind::Base(_) => return fail("base case does not apply"),
            TraceKind::Repeat => match key_of(g).and_then(|k| expanded.get(&k)) {
                Some(&v) => v,
                None => return fail("repeat without an expanded occurrence"),
            },
            TraceKind::Branches { branches, attaining } => {
                let edges: Vec<Edge> = g.edges().collect();
                let recorded: Vec<Edge> = branches.iter().map(|b| b.edge).collect();
                if edges != recorded {
                    return fail("branch edges differ from the graph's edges");
                }
                let mut best: Option<ExtInt> = None;
                for b in branches {
                    if b.deleted.graph != g.delete_edge(b.edge).unwrap()
                        || b.excluded.graph != g.exclude_edge(b.edge).unwrap()
                    {
                        return fail("branch graph mismatch");
                    }
                    let v = b.deleted.check(expanded)?.min(b.excluded.check(expanded)?.succ());
                    if v != b.value {
                        return fail("branch value mismatch");
                    }
                    best = Some(best.map_or(v, |x| x.max(v)));
                }
                let best = best.ok_or_else(|| format!("{g:?}: no branches"))?;
                if branches.iter().find(|b| b.value == best).map(|b| b.edge) != Some(*attaining) {
                    return fail("attaining edge is not the first maximizer");
                }
                best
            }
        };
        if derived != self.value {
            return fail("recorded value differs from replay");
        }
        Ok(derived)
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, label: &str, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        let (n, m) = (self.graph.n(), self.graph.edge_count());
        match &self.kind {
            TraceKind::Base(case) => {
                let why = match case {
                    BaseCase::Empty => "empty graph",
                    BaseCase::Discrete => "discrete graph",
                    BaseCase::IsolatedVertex => "isolated vertex",
                };
                writeln!(f, "{pad}{label}{} [n={n} m={m}] base case: {why}", self.value)
            }
            TraceKind::Repeat => writeln!(f, "{pad}{label}{} [n={n} m={m}] (seen above)", self.value),
            TraceKind::Branches { branches, attaining } => {
                writeln!(f, "{pad}{label}{} [n={n} m={m}]", self.value)?;
                for b in branches {
                    let mark = if b.edge == *attaining { " *" } else { "" };
                    writeln!(
                        f,
                        "{pad}  edge {}-{}: min({}, {}+1) = {}{mark}",
                        b.edge.u(),
                        b.edge.v(),
                        b.deleted.value,
                        b.excluded.value,
                        b.value
                    )?;
                    b.deleted.write_indented(f, "G-e: ", depth + 2)?;
                    b.excluded.write_indented(f, "G\\e: ", depth + 2)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for TraceNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, "psi = ", 0)
    }
}
