//! The recursive connectivity bound psi.
//!
//! * `psi(empty) = -2`
//! * `psi(G) = +inf` for a non-empty graph without edges
//! * otherwise `psi(G) = max over edges e of min(psi(G - e), psi(G \ e) + 1)`
//!
//! [`psi`] memoizes on canonical keys and prunes; [`psi_naive`] evaluates the
//! bare recursion on bitmasks and serves as the oracle for it.

mod naive;
mod trace;

use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;

use crate::ext::ExtInt;
use crate::graph::{canonical_form, CanonicalKey, Graph, MAX_CANON_ORDER};

pub use naive::{psi_naive, psi_naive_with_limit, NaiveGuardError, NAIVE_DEFAULT_LIMIT, NAIVE_HARD_LIMIT};
pub use trace::{psi_trace, BaseCase, EdgeBranch, TraceKind, TraceNode};

/// Value of psi on the empty graph.
pub const PSI_EMPTY: ExtInt = ExtInt::Finite(-2);

/// Shared memo table from isomorphism class to psi value.
///
/// Safe for concurrent get-or-compute: two workers may compute the same
/// class, but they insert the same value and the first write wins.
#[derive(Default)]
pub struct PsiMemo {
    table: DashMap<CanonicalKey, ExtInt>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl PsiMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<ExtInt> {
        let found = self.table.get(key).map(|v| *v);
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Records `value` unless the class already has an entry; returns the
    /// stored value.
    pub fn insert(&self, key: CanonicalKey, value: ExtInt) -> ExtInt {
        let stored = *self.table.entry(key).or_insert(value);
        debug_assert_eq!(stored, value, "psi memo entries are immutable");
        stored
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn hit_rate(&self) -> f64 {
        let total = self.hits() + self.misses();
        if total == 0 {
            0.0
        } else {
            self.hits() as f64 / total as f64
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PsiOptions {
    /// Return `+inf` as soon as a vertex has degree zero. The isolated vertex
    /// survives in both `G - e` and `G \ e`, so every branch is `+inf`.
    pub prune_isolated: bool,
}

impl Default for PsiOptions {
    fn default() -> Self {
        PsiOptions { prune_isolated: true }
    }
}

pub fn psi(g: &Graph, memo: &PsiMemo) -> ExtInt {
    psi_with(g, memo, PsiOptions::default())
}

/// Graphs above [`MAX_CANON_ORDER`] vertices are evaluated without the memo;
/// the recursion depth is bounded by `|V| + |E|`.
pub fn psi_with(g: &Graph, memo: &PsiMemo, opts: PsiOptions) -> ExtInt {
    if g.is_empty() {
        return PSI_EMPTY;
    }
    if g.is_discrete() || (opts.prune_isolated && g.has_isolated_vertex()) {
        return ExtInt::PosInf;
    }
    let key = (g.n() <= MAX_CANON_ORDER).then(|| canonical_form(g).expect("order checked"));
    if let Some(v) = key.as_ref().and_then(|k| memo.get(k)) {
        return v;
    }

    let mut best: Option<ExtInt> = None;
    for e in g.edges() {
        let excluded = psi_with(&g.exclude_edge(e).expect("edge of g"), memo, opts).succ();
        // min(psi(G-e), excluded) <= excluded, so this edge cannot raise the max.
        if best.is_some_and(|b| excluded <= b) {
            continue;
        }
        let deleted = psi_with(&g.delete_edge(e).expect("edge of g"), memo, opts);
        let value = deleted.min(excluded);
        best = Some(best.map_or(value, |b| b.max(value)));
        if value == ExtInt::PosInf {
            break;
        }
    }
    let value = best.expect("non-discrete graphs have an edge");
    match key {
        Some(k) => memo.insert(k, value),
        None => value,
    }
}
