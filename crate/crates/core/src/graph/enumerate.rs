//! One representative per isomorphism class, by edge augmentation.

use std::collections::BTreeMap;

use super::{canonical_labeling, CanonicalKey, Graph, GraphError};

pub const MAX_ENUM_ORDER: usize = 8;

/// All simple graphs on `n` vertices up to isomorphism, as canonical
/// representatives ordered by canonical key.
///
/// Level `m + 1` is obtained from level `m` by adding each missing edge to
/// each representative and deduplicating on the canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(GraphError::OrderOutOfRange {
            n,
            min: 1,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut all: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    insert_canonical(&mut level, Graph::discrete(n));
    while !level.is_empty() {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v).expect("in range");
                        insert_canonical(&mut next, h);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    Ok(all.into_values().collect())
}

fn insert_canonical(into: &mut BTreeMap<CanonicalKey, Graph>, g: Graph) {
    let (key, perm) = canonical_labeling(&g).expect("enumeration orders are canonicalizable");
    into.entry(key).or_insert_with(|| g.relabel(&perm));
}
