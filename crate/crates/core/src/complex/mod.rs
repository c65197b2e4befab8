//! Finite abstract simplicial complexes stored by their facets.
//!
//! Faces are sorted vectors of vertex indices. Only maximal faces are
//! stored; every non-empty subset of a facet is a face. Vertex labels are
//! opaque tokens kept for I/O only.

mod independence;
mod iso;
mod presentation;
mod small;
mod subdivision;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

pub use independence::independence_complex;
pub use iso::{is_isomorphic, is_isomorphic_with_budget, IsoBudgetExceeded, DEFAULT_ISO_BUDGET};
pub use presentation::{parse_presentation, presentation_complex, write_presentation, Presentation, PresentationError};
pub use small::complexes_on_vertices;
pub use subdivision::{barycentric_subdivision, complex_to_graph};

pub type Face = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet references vertex {vertex}, but only {n} vertices exist")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// Sorted, pairwise incomparable, each sorted internally.
    facets: Vec<Face>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Normalizes arbitrary generating faces into facets: vertices are
    /// sorted and deduplicated, empty and non-maximal faces dropped. A vertex
    /// that lies in no given face becomes a 0-dimensional facet.
    pub fn from_faces(labels: Vec<String>, faces: Vec<Face>) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut faces: Vec<Face> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        if let Some(&vertex) = faces.iter().flatten().find(|&&v| v >= n) {
            return Err(ComplexError::VertexOutOfRange { vertex, n });
        }
        let mut covered = vec![false; n];
        for &v in faces.iter().flatten() {
            covered[v] = true;
        }
        faces.extend((0..n).filter(|&v| !covered[v]).map(|v| vec![v]));
        Ok(SimplicialComplex {
            labels,
            facets: maximal(faces),
        })
    }

    /// Vertices labeled by their decimal index.
    pub fn from_index_faces(n: usize, faces: Vec<Face>) -> Result<Self, ComplexError> {
        Self::from_faces((0..n).map(|i| i.to_string()).collect(), faces)
    }

    /// Caller guarantees `facets` are sorted, maximal, duplicate free and
    /// cover every vertex.
    pub(crate) fn from_facets_unchecked(labels: Vec<String>, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        SimplicialComplex { labels, facets }
    }

    /// The full simplex on `k + 1` vertices.
    pub fn simplex(k: usize) -> Self {
        Self::from_index_faces(k + 1, vec![(0..=k).collect()]).expect("valid")
    }

    /// The boundary of the simplex on `k + 1` vertices (a `(k-1)`-sphere).
    pub fn simplex_boundary(k: usize) -> Self {
        let facets = (0..=k).map(|skip| (0..=k).filter(|&v| v != skip).collect()).collect();
        Self::from_index_faces(k + 1, facets).expect("valid")
    }

    /// The cone with apex `n` over `self`.
    pub fn cone(&self) -> Self {
        let apex = self.labels.len();
        let mut labels = self.labels.clone();
        labels.push(format!("apex{apex}"));
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().copied().chain(std::iter::once(apex)).collect())
            .collect();
        let facets = if self.facets.is_empty() {
            vec![vec![apex]]
        } else {
            facets
        };
        Self::from_faces(labels, facets).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// All faces with `k + 1` vertices, sorted lexicographically.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() > k {
                for_each_subset_of_size(f, k + 1, &mut |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        out.into_iter().collect()
    }

    /// Every face, ordered by dimension and then lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        if let Some(d) = self.dim() {
            for k in 0..=d {
                out.extend(self.faces(k));
            }
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.dim().map_or(0, |d| (0..=d).map(|k| self.faces(k).len()).sum())
    }

    pub(crate) fn face_label(&self, face: &[usize]) -> String {
        let mut s = String::new();
        for (i, &v) in face.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&self.labels[v]);
        }
        s
    }
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn for_each_subset_of_size(set: &[usize], size: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(set: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        for i in start..=set.len() - (size - cur.len()) {
            cur.push(set[i]);
            go(set, size, i + 1, cur, visit);
            cur.pop();
        }
    }
    go(set, size, 0, &mut Vec::with_capacity(size), visit);
}

/// Keeps the inclusion-maximal faces, sorted and deduplicated.
fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|k| k.len() > f.len() && is_subset(&f, k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Parses a facet file: one face per line, whitespace separated vertex
/// tokens, `#` comments. Vertices are indexed by first appearance.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let face = line
            .split_whitespace()
            .map(|tok| {
                *index.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    labels.len() - 1
                })
            })
            .collect();
        faces.push(face);
    }
    SimplicialComplex::from_faces(labels, faces)
}

/// One facet per line in internal order, labels separated by single spaces.
pub fn write_facets(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in &k.facets {
        let toks: Vec<&str> = f.iter().map(|&v| k.labels[v].as_str()).collect();
        writeln!(out, "{}", toks.join(" ")).unwrap();
    }
    out
}
