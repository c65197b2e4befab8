//! Canonical labeling by partition refinement and individualization.
//!
//! The search explores every leaf of the refinement tree, except that among
//! twin vertices of a target cell only one is individualized: swapping two
//! twins is an automorphism fixing everything individualized so far, so their
//! subtrees produce identical codes. The canonical code is the least
//! adjacency bit-string over all explored leaves.

use std::fmt;

use super::{Graph, GraphError};

/// Largest order `canonical_form` accepts; the code fits in a `u128`.
pub const MAX_CANON_ORDER: usize = 16;

/// Isomorphism-class identifier: the order followed by the canonical
/// upper-triangle adjacency code.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    fn new(n: usize, code: u128) -> Self {
        let mut bytes = Vec::with_capacity(17);
        bytes.push(n as u8);
        bytes.extend_from_slice(&code.to_be_bytes());
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey, GraphError> {
    canonical_labeling(g).map(|(key, _)| key)
}

/// Returns the key and a labeling `perm` (`perm[old] = new`) such that
/// `g.relabel(&perm)` is the canonical representative of the class.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalKey, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(GraphError::OrderTooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).fold(0u16, |m, w| m | (1 << w))).collect();
    let mut search = Search { adj: &adj, best: None };
    if n > 0 {
        search.descend(vec![(0..n).collect()]);
    }
    let (code, order) = search.best.unwrap_or((0, Vec::new()));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalKey::new(n, code), perm))
}

struct Search<'a> {
    adj: &'a [u16],
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.adj, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = leaf_code(self.adj, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cells[ti] {
            if reps.iter().any(|&r| twins(self.adj, r, v)) {
                continue;
            }
            reps.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[ti].iter().copied().filter(|&w| w != v).collect();
            next[ti] = vec![v];
            next.insert(ti + 1, rest);
            self.descend(next);
        }
    }
}

fn twins(adj: &[u16], a: usize, b: usize) -> bool {
    let ma = !(1u16 << b);
    let mb = !(1u16 << a);
    adj[a] & ma == adj[b] & mb
}

/// Splits cells by neighbor counts into splitter cells until the ordered
/// partition is equitable. Sub-cells are ordered by increasing count.
fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let mask = cells[s].iter().fold(0u16, |m, &v| m | (1 << v));
            let mut split_any = false;
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| ((adj[v] & mask).count_ones(), v)).collect();
                keyed.sort_unstable();
                let first = keyed[0].0;
                if keyed.iter().all(|(k, _)| *k == first) {
                    next.push(cell.clone());
                    continue;
                }
                split_any = true;
                let mut cur: Vec<usize> = Vec::new();
                let mut cur_key = first;
                for (k, v) in keyed {
                    if k != cur_key {
                        next.push(std::mem::take(&mut cur));
                        cur_key = k;
                    }
                    cur.push(v);
                }
                next.push(cur);
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

/// Upper triangle in column order, first pair most significant.
fn leaf_code(adj: &[u16], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1) as u128;
        }
    }
    code
}
