use fixedbitset::FixedBitSet;

use super::{Face, SimplicialComplex};
use crate::graph::Graph;

/// The complex of non-empty independent vertex sets of `g`.
///
/// Facets are the maximal independent sets, found with pivoting
/// Bron–Kerbosch on the complement of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let n = g.n();
    let labels = (0..n).map(|i| i.to_string()).collect();
    if n == 0 {
        return SimplicialComplex::from_facets_unchecked(labels, Vec::new());
    }
    // non[v]: vertices other than v not adjacent to v
    let non: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert_range(..);
            s.difference_with(g.neighbor_set(v));
            s.set(v, false);
            s
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut facets = Vec::new();
    bron_kerbosch(&non, &mut Vec::new(), all, FixedBitSet::with_capacity(n), &mut facets);
    SimplicialComplex::from_facets_unchecked(labels, facets)
}

fn bron_kerbosch(
    non: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Face>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            let mut face = current.clone();
            face.sort_unstable();
            out.push(face);
        }
        return;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| candidates.intersection(&non[u]).count())
        .expect("candidates non-empty");
    let mut branch = candidates.clone();
    branch.difference_with(&non[pivot]);
    for v in branch.ones() {
        current.push(v);
        bron_kerbosch(non, current, meet(&candidates, &non[v]), meet(&excluded, &non[v]), out);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

fn meet(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut c = a.clone();
    c.intersect_with(b);
    c
}
