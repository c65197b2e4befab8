//! Complex isomorphism by joint colour refinement and backtracking.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use super::{Face, SimplicialComplex};

/// Search nodes explored before giving up.
pub const DEFAULT_ISO_BUDGET: usize = 200_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("isomorphism search exceeded its budget of {budget} nodes")]
pub struct IsoBudgetExceeded {
    pub budget: usize,
}

pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool, IsoBudgetExceeded> {
    is_isomorphic_with_budget(a, b, DEFAULT_ISO_BUDGET)
}

/// True iff some vertex bijection carries the facets of `a` onto those of
/// `b`. Running out of budget is an error, never `false`.
pub fn is_isomorphic_with_budget(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    budget: usize,
) -> Result<bool, IsoBudgetExceeded> {
    if a.vertex_count() != b.vertex_count() || a.facets().len() != b.facets().len() {
        return Ok(false);
    }
    let sizes = |k: &SimplicialComplex| {
        let mut s: Vec<usize> = k.facets().iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(a) != sizes(b) {
        return Ok(false);
    }
    let mut search = Search {
        a: Side::new(a),
        b: Side::new(b),
        target: b.facets().iter().cloned().collect(),
        nodes: 0,
        budget,
    };
    let n = a.vertex_count();
    search.descend(vec![0; n], vec![0; n])
}

struct Side<'a> {
    facets: &'a [Face],
    incident: Vec<Vec<usize>>,
}

impl<'a> Side<'a> {
    fn new(k: &'a SimplicialComplex) -> Self {
        let mut incident = vec![Vec::new(); k.vertex_count()];
        for (i, f) in k.facets().iter().enumerate() {
            for &v in f {
                incident[v].push(i);
            }
        }
        Side {
            facets: k.facets(),
            incident,
        }
    }

    fn facet_signatures(&self, colors: &[u32]) -> Vec<Vec<u32>> {
        self.facets
            .iter()
            .map(|f| {
                let mut s: Vec<u32> = f.iter().map(|&v| colors[v]).collect();
                s.sort_unstable();
                s
            })
            .collect()
    }
}

struct Search<'a> {
    a: Side<'a>,
    b: Side<'a>,
    target: HashSet<Face>,
    nodes: usize,
    budget: usize,
}

fn class_count(colors: &[u32]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Assigns dense ids to signatures drawn from both sides, in sorted order,
/// so equal signatures get equal ids on either side.
fn joint_ids<T: Ord + Clone>(xs: &[T], ys: &[T]) -> (Vec<u32>, Vec<u32>) {
    let mut all: Vec<&T> = xs.iter().chain(ys.iter()).collect();
    all.sort();
    all.dedup();
    let id = |t: &T| all.binary_search(&t).expect("present") as u32;
    (xs.iter().map(id).collect(), ys.iter().map(id).collect())
}

impl Search<'_> {
    fn refine(&self, ca: &mut Vec<u32>, cb: &mut Vec<u32>) {
        loop {
            let before = class_count(ca) + class_count(cb);
            let (fa, fb) = joint_ids(&self.a.facet_signatures(ca), &self.b.facet_signatures(cb));
            let vertex_sigs = |side: &Side, colors: &[u32], fcol: &[u32]| -> Vec<(u32, Vec<u32>)> {
                (0..colors.len())
                    .map(|v| {
                        let mut s: Vec<u32> = side.incident[v].iter().map(|&f| fcol[f]).collect();
                        s.sort_unstable();
                        (colors[v], s)
                    })
                    .collect()
            };
            let (na, nb) = joint_ids(&vertex_sigs(&self.a, ca, &fa), &vertex_sigs(&self.b, cb, &fb));
            *ca = na;
            *cb = nb;
            if class_count(ca) + class_count(cb) == before {
                return;
            }
        }
    }

    fn descend(&mut self, mut ca: Vec<u32>, mut cb: Vec<u32>) -> Result<bool, IsoBudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(IsoBudgetExceeded { budget: self.budget });
        }
        self.refine(&mut ca, &mut cb);
        let hist = histogram(&ca);
        if hist != histogram(&cb) {
            return Ok(false);
        }
        let Some((&color, _)) = hist.iter().filter(|(_, &k)| k > 1).min_by_key(|(&c, &k)| (k, c)) else {
            return Ok(self.check_bijection(&ca, &cb));
        };
        let fresh = hist.keys().next_back().map_or(0, |c| c + 1);
        let v = ca.iter().position(|&c| c == color).expect("class is non-empty");
        let candidates: Vec<usize> = (0..cb.len()).filter(|&w| cb[w] == color).collect();
        for w in candidates {
            let mut na = ca.clone();
            let mut nb = cb.clone();
            na[v] = fresh;
            nb[w] = fresh;
            if self.descend(na, nb)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check_bijection(&self, ca: &[u32], cb: &[u32]) -> bool {
        let mut by_color = vec![usize::MAX; cb.len()];
        for (w, &c) in cb.iter().enumerate() {
            by_color[c as usize] = w;
        }
        self.a.facets.iter().all(|f| {
            let mut image: Face = f.iter().map(|&v| by_color[ca[v] as usize]).collect();
            image.sort_unstable();
            self.target.contains(&image)
        })
    }
}
