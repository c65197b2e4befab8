//! Fundamental groups: edge-path presentations, bounded Tietze
//! simplification and a three-valued simple-connectivity check.
//!
//! No procedure can decide simple connectivity of finite complexes in
//! general, so the check answers `Unknown` when its effort budget runs out.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::{invariant_factors, reduced_homology, IntMatrix};
use crate::complex::{Presentation, SimplicialComplex};

/// Finitely generated abelian group `Z^rank + Z/t1 + Z/t2 + ...`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// Each greater than one and dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelianization from the Smith form of the relator exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let mut m = IntMatrix::zeros(p.relators().len(), p.generators());
    for (i, r) in p.relators().iter().enumerate() {
        for &letter in r {
            let j = letter.unsigned_abs() as usize - 1;
            m[(i, j)] += BigInt::from(letter.signum());
        }
    }
    let factors = invariant_factors(&m);
    AbelianInvariants {
        rank: p.generators() - factors.len(),
        torsion: factors.into_iter().filter(|x| !x.is_one()).collect(),
    }
}

/// First homology of a complex, in the same shape as [`abelianization`].
pub fn first_homology(k: &SimplicialComplex) -> AbelianInvariants {
    let g = reduced_homology(k).group(1);
    AbelianInvariants {
        rank: g.betti,
        torsion: g.torsion,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Pi1Error {
    #[error("the complex is empty")]
    Empty,
    #[error("the complex has {components} connected components")]
    Disconnected { components: usize },
}

/// Connected components of the 1-skeleton.
pub fn component_count(k: &SimplicialComplex) -> usize {
    let n = k.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for f in k.facets() {
        for w in f.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

/// Presentation of the edge-path group based at vertex 0.
///
/// A breadth-first spanning tree of the 1-skeleton is chosen; each
/// remaining edge `{u < v}` becomes a generator read in the direction
/// `u -> v`, and each triangle `{a < b < c}` contributes the relator
/// `[a,b][b,c][a,c]^-1` with tree edges omitted.
pub fn edge_path_presentation(k: &SimplicialComplex) -> Result<Presentation, Pi1Error> {
    if k.is_empty() {
        return Err(Pi1Error::Empty);
    }
    let components = component_count(k);
    if components != 1 {
        return Err(Pi1Error::Disconnected { components });
    }
    let n = k.vertex_count();
    let edges = k.faces(1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &edges {
        adj[e[0]].push(e[1]);
        adj[e[1]].push(e[0]);
    }
    let mut in_tree = vec![false; n];
    let mut tree_edges = std::collections::HashSet::new();
    let mut queue = VecDeque::from([0usize]);
    in_tree[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !in_tree[w] {
                in_tree[w] = true;
                tree_edges.insert((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
    }
    let mut generator = std::collections::HashMap::new();
    for e in &edges {
        if !tree_edges.contains(&(e[0], e[1])) {
            let id = generator.len() as i32 + 1;
            generator.insert((e[0], e[1]), id);
        }
    }
    let letter = |a: usize, b: usize| generator.get(&(a, b)).copied();
    let relators = k
        .faces(2)
        .iter()
        .map(|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            [letter(a, b), letter(b, c), letter(a, c).map(|x| -x)]
                .into_iter()
                .flatten()
                .collect()
        })
        .collect();
    Ok(Presentation::new(generator.len(), relators).expect("letters are generator ids"))
}

/// Effort limits for [`simplify_presentation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeBudget {
    pub steps: usize,
    pub max_relator_len: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget {
            steps: 10_000,
            max_relator_len: 10_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplifyOutcome {
    /// No move applies any more.
    Fixpoint,
    StepsExhausted,
    RelatorTooLong,
}

#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    pub outcome: SimplifyOutcome,
    pub steps: usize,
}

/// Rewrites `p` into a presentation of the same group with no more
/// generators, using free and cyclic reduction, removal of trivial and
/// duplicate relators, and elimination of a generator that occurs exactly
/// once in some relator. Each reduction pass and each elimination is one
/// step.
pub fn simplify_presentation(p: &Presentation, budget: TietzeBudget) -> Simplified {
    let mut alive = vec![true; p.generators() + 1];
    alive[0] = false;
    let mut relators: Vec<Vec<i32>> = p.relators().to_vec();
    let mut steps = 0;
    let outcome = loop {
        if steps >= budget.steps {
            break SimplifyOutcome::StepsExhausted;
        }
        steps += 1;
        relators = normalize(relators);
        if relators.iter().any(|r| r.len() > budget.max_relator_len) {
            break SimplifyOutcome::RelatorTooLong;
        }
        let Some((ri, pos)) = elimination_candidate(&relators) else {
            break SimplifyOutcome::Fixpoint;
        };
        if steps >= budget.steps {
            break SimplifyOutcome::StepsExhausted;
        }
        steps += 1;
        let r = relators.swap_remove(ri);
        let x = r[pos];
        // r rotated to x w = 1, so x = w^-1
        let w: Vec<i32> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let image = inverse(&w);
        let gen = x.unsigned_abs() as usize;
        alive[gen] = false;
        for rel in &mut relators {
            if rel.iter().any(|l| l.unsigned_abs() as usize == gen) {
                *rel = substitute(rel, x, &image);
            }
        }
    };
    let relators = normalize(relators);
    let mut renumber = vec![0i32; alive.len()];
    let mut next = 0;
    for (g, &live) in alive.iter().enumerate() {
        if live {
            next += 1;
            renumber[g] = next;
        }
    }
    let relators = relators
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|l| renumber[l.unsigned_abs() as usize] * l.signum())
                .collect()
        })
        .collect();
    Simplified {
        presentation: Presentation::new(next as usize, relators).expect("renumbered letters"),
        outcome,
        steps,
    }
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

/// Replaces every occurrence of letter `x` by `image` (and `-x` by its
/// inverse).
fn substitute(word: &[i32], x: i32, image: &[i32]) -> Vec<i32> {
    let inv = inverse(image);
    let mut out = Vec::with_capacity(word.len() + image.len());
    for &l in word {
        if l == x {
            out.extend_from_slice(image);
        } else if l == -x {
            out.extend_from_slice(&inv);
        } else {
            out.push(l);
        }
    }
    out
}

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut word: Vec<i32>) -> Vec<i32> {
    let mut start = 0;
    let mut end = word.len();
    while end - start >= 2 && word[start] == -word[end - 1] {
        start += 1;
        end -= 1;
    }
    word.truncate(end);
    word.drain(..start);
    word
}

/// Least rotation of the word or of its inverse, so conjugate and inverse
/// relators compare equal.
fn canonical_cyclic(word: &[i32]) -> Vec<i32> {
    let inv = inverse(word);
    let rotations = |w: &[i32]| -> Vec<Vec<i32>> {
        (0..w.len())
            .map(|i| w[i..].iter().chain(&w[..i]).copied().collect())
            .collect()
    };
    rotations(word)
        .into_iter()
        .chain(rotations(&inv))
        .min()
        .unwrap_or_default()
}

fn normalize(relators: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = relators
        .into_iter()
        .map(|r| cyclic_reduce(free_reduce(&r)))
        .filter(|r| !r.is_empty())
        .map(|r| canonical_cyclic(&r))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Shortest relator containing some generator exactly once; returns the
/// relator index and the position of that letter. Ties go to the smaller
/// generator.
fn elimination_candidate(relators: &[Vec<i32>]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, u32, usize, usize)> = None;
    for (ri, r) in relators.iter().enumerate() {
        for (pos, &l) in r.iter().enumerate() {
            let g = l.unsigned_abs();
            if r.iter().filter(|m| m.unsigned_abs() == g).count() == 1 {
                let key = (r.len(), g, ri, pos);
                if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                    best = Some(key);
                }
            }
        }
    }
    best.map(|(_, _, ri, pos)| (ri, pos))
}

/// Why a complex is known not to be simply connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSimplyConnected {
    Empty,
    Disconnected {
        components: usize,
    },
    /// Nonzero first homology, hence a nontrivial fundamental group.
    FirstHomology(AbelianInvariants),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No(NotSimplyConnected),
    /// Simplification stopped after `steps` steps without reaching the
    /// trivial presentation.
    Unknown {
        steps: usize,
        remaining_generators: usize,
    },
}

impl TriState {
    pub fn is_yes(&self) -> bool {
        matches!(self, TriState::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, TriState::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TriState::Unknown { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No(_) => "no",
            TriState::Unknown { .. } => "unknown",
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriState::Yes => f.write_str("Yes"),
            TriState::No(NotSimplyConnected::Empty) => f.write_str("No (empty complex)"),
            TriState::No(NotSimplyConnected::Disconnected { components }) => {
                write!(f, "No ({components} components)")
            }
            TriState::No(NotSimplyConnected::FirstHomology(h)) => write!(f, "No (H1 = {h})"),
            TriState::Unknown {
                steps,
                remaining_generators,
            } => {
                write!(
                    f,
                    "Unknown ({remaining_generators} generators left after {steps} steps)"
                )
            }
        }
    }
}

/// `No` with a witness when homology or connectivity refutes simple
/// connectivity, `Yes` when Tietze simplification of the edge-path group
/// reaches the trivial presentation, `Unknown` otherwise.
pub fn simple_connectivity(k: &SimplicialComplex, budget: TietzeBudget) -> TriState {
    let presentation = match edge_path_presentation(k) {
        Ok(p) => p,
        Err(Pi1Error::Empty) => return TriState::No(NotSimplyConnected::Empty),
        Err(Pi1Error::Disconnected { components }) => {
            return TriState::No(NotSimplyConnected::Disconnected { components })
        }
    };
    let h1 = first_homology(k);
    if !h1.is_trivial() {
        return TriState::No(NotSimplyConnected::FirstHomology(h1));
    }
    let s = simplify_presentation(&presentation, budget);
    if s.presentation.is_empty() {
        TriState::Yes
    } else {
        TriState::Unknown {
            steps: s.steps,
            remaining_generators: s.presentation.generators(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_facets;

    fn pres(g: usize, rels: &[&[i32]]) -> Presentation {
        Presentation::new(g, rels.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn simplify(p: &Presentation) -> Presentation {
        simplify_presentation(p, TietzeBudget::default()).presentation
    }

    #[test]
    fn tietze_examples() {
        assert!(simplify(&pres(1, &[&[1]])).is_empty());
        assert!(simplify(&pres(2, &[&[1, 2], &[2]])).is_empty());
        assert_eq!(simplify(&pres(1, &[&[1, 1]])), pres(1, &[&[-1, -1]]));
        // conjugates and inverses collapse to one relator
        assert_eq!(simplify(&pres(1, &[&[1, 1, 1], &[-1, -1, -1]])).relators().len(), 1);
        // a b a^-1 b^-1 stays put: every generator occurs twice
        let comm = simplify(&pres(2, &[&[1, 2, -1, -2]]));
        assert_eq!(
            (comm.generators(), comm.relators().len(), comm.relators()[0].len()),
            (2, 1, 4)
        );
    }

    #[test]
    fn word_helpers() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(vec![2, 1, 3, -2]), vec![1, 3]);
        assert_eq!(canonical_cyclic(&[2, 1]), canonical_cyclic(&[-1, -2]));
        assert_eq!(substitute(&[1, 2, -1], 1, &[2, 2]), vec![2, 2, 2, -2, -2]);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = pres(2, &[&[1, 2], &[2]]);
        let s = simplify_presentation(
            &p,
            TietzeBudget {
                steps: 1,
                max_relator_len: 100,
            },
        );
        assert_eq!(s.outcome, SimplifyOutcome::StepsExhausted);
        assert!(!s.presentation.is_empty());
    }

    #[test]
    fn abelianizations() {
        assert_eq!(
            abelianization(&pres(1, &[])),
            AbelianInvariants {
                rank: 1,
                torsion: vec![]
            }
        );
        assert!(abelianization(&pres(1, &[&[1]])).is_trivial());
        assert_eq!(abelianization(&pres(1, &[&[1, 1]])).torsion, vec![BigInt::from(2)]);
        assert_eq!(abelianization(&pres(2, &[&[1, 2, -1, -2]])).rank, 2);
        assert_eq!(abelianization(&pres(2, &[&[1, 1]])).to_string(), "Z + Z/2");
    }

    #[test]
    fn edge_path_examples() {
        let tri = SimplicialComplex::simplex(2);
        let p = edge_path_presentation(&tri).unwrap();
        assert_eq!((p.generators(), p.relators().len()), (1, 1));
        assert!(simplify(&p).is_empty());

        let circle = SimplicialComplex::simplex_boundary(2);
        let p = edge_path_presentation(&circle).unwrap();
        assert_eq!((p.generators(), p.relators().len()), (1, 0));

        let two_points = SimplicialComplex::from_index_faces(2, vec![]).unwrap();
        assert_eq!(
            edge_path_presentation(&two_points),
            Err(Pi1Error::Disconnected { components: 2 })
        );
    }

    #[test]
    fn simple_connectivity_examples() {
        assert_eq!(
            simple_connectivity(&SimplicialComplex::simplex(2), TietzeBudget::default()),
            TriState::Yes
        );
        let circle = simple_connectivity(&SimplicialComplex::simplex_boundary(2), TietzeBudget::default());
        assert_eq!(
            circle,
            TriState::No(NotSimplyConnected::FirstHomology(AbelianInvariants {
                rank: 1,
                torsion: vec![]
            }))
        );
        let rp2 = parse_facets("0 1 2\n0 2 3\n0 3 4\n0 4 5\n0 5 1\n1 2 4\n2 3 5\n3 4 1\n4 5 2\n5 1 3\n").unwrap();
        let TriState::No(NotSimplyConnected::FirstHomology(h)) = simple_connectivity(&rp2, TietzeBudget::default())
        else {
            panic!("projective plane must be refuted by homology");
        };
        assert_eq!(h.torsion, vec![BigInt::from(2)]);
        // the 2-sphere is simply connected
        assert_eq!(
            simple_connectivity(&SimplicialComplex::simplex_boundary(3), TietzeBudget::default()),
            TriState::Yes
        );
    }
}
