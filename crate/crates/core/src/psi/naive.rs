//! Unmemoized, unpruned evaluation of psi on bitmask graphs.
//!
//! Deliberately shares nothing with the main evaluator: no `Graph`
//! operations, no canonical forms, no shortcuts. A state is a set of live
//! vertices plus a set of live vertex pairs.

use thiserror::Error;

use crate::ext::ExtInt;
use crate::graph::Graph;

pub const NAIVE_DEFAULT_LIMIT: usize = 7;
/// 11 vertices have 55 pairs, the most a `u64` pair mask holds.
pub const NAIVE_HARD_LIMIT: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("naive psi refused a graph on {n} vertices (limit {limit})")]
pub struct NaiveGuardError {
    pub n: usize,
    pub limit: usize,
}

pub fn psi_naive(g: &Graph) -> Result<ExtInt, NaiveGuardError> {
    psi_naive_with_limit(g, NAIVE_DEFAULT_LIMIT)
}

/// `limit` is clamped to [`NAIVE_HARD_LIMIT`].
pub fn psi_naive_with_limit(g: &Graph, limit: usize) -> Result<ExtInt, NaiveGuardError> {
    let limit = limit.min(NAIVE_HARD_LIMIT);
    let n = g.n();
    if n > limit {
        return Err(NaiveGuardError { n, limit });
    }
    let mut pairs = Vec::new();
    let mut incident = vec![0u64; n];
    let mut edges = 0u64;
    for v in 0..n {
        for u in 0..v {
            let bit = 1u64 << pairs.len();
            incident[u] |= bit;
            incident[v] |= bit;
            if g.has_edge(u, v) {
                edges |= bit;
            }
            pairs.push((u, v));
        }
    }
    let ctx = Ctx { pairs, incident };
    let verts = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok(ctx.eval(verts, edges))
}

struct Ctx {
    pairs: Vec<(usize, usize)>,
    incident: Vec<u64>,
}

impl Ctx {
    fn eval(&self, verts: u32, edges: u64) -> ExtInt {
        if verts == 0 {
            return ExtInt::Finite(-2);
        }
        if edges == 0 {
            return ExtInt::PosInf;
        }
        let mut best: Option<ExtInt> = None;
        let mut rest = edges;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.pairs[p];

            let deleted = self.eval(verts, edges & !(1u64 << p));

            // closed neighbourhood of {u, v}: endpoints of every live pair touching u or v
            let mut closed = 0u32;
            let mut touch = edges & (self.incident[u] | self.incident[v]);
            while touch != 0 {
                let q = touch.trailing_zeros() as usize;
                touch &= touch - 1;
                let (a, b) = self.pairs[q];
                closed |= (1 << a) | (1 << b);
            }
            let mut sub_edges = edges;
            let mut gone = closed;
            while gone != 0 {
                let w = gone.trailing_zeros() as usize;
                gone &= gone - 1;
                sub_edges &= !self.incident[w];
            }
            let excluded = self.eval(verts & !closed, sub_edges).succ();

            let value = deleted.min(excluded);
            best = Some(best.map_or(value, |b| b.max(value)));
        }
        best.expect("at least one edge")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(psi_naive(&Graph::empty()), Ok(ExtInt::Finite(-2)));
        assert_eq!(psi_naive(&Graph::discrete(3)), Ok(ExtInt::PosInf));
        assert_eq!(psi_naive(&Graph::complete(2)), Ok(ExtInt::Finite(-1)));
        assert_eq!(psi_naive(&Graph::complete(3)), Ok(ExtInt::Finite(-1)));
        assert_eq!(psi_naive(&Graph::cycle(4)), Ok(ExtInt::Finite(-1)));
        assert_eq!(psi_naive(&Graph::path(3)), Ok(ExtInt::Finite(-1)));
        assert_eq!(psi_naive(&Graph::cycle(5)), Ok(ExtInt::Finite(0)));
        let k2_plus = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(psi_naive(&k2_plus), Ok(ExtInt::PosInf));
    }

    #[test]
    fn guard() {
        assert_eq!(psi_naive(&Graph::discrete(8)), Err(NaiveGuardError { n: 8, limit: 7 }));
        assert!(psi_naive_with_limit(&Graph::discrete(8), 8).is_ok());
        assert!(psi_naive_with_limit(&Graph::discrete(12), 100).is_err());
    }
}
