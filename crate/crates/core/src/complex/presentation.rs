//! Finite group presentations and a simplicial 2-complex realizing each.
//!
//! Letters are signed 1-based generator numbers: `2` is the second
//! generator, `-2` its inverse.

use std::fmt::Write as _;

use thiserror::Error;

use super::SimplicialComplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("letter {letter} does not name one of the {generators} generators")]
    BadLetter { letter: i32, generators: usize },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

impl Presentation {
    /// Empty relators are dropped.
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self, PresentationError> {
        for &letter in relators.iter().flatten() {
            if letter == 0 || letter.unsigned_abs() as usize > generators {
                return Err(PresentationError::BadLetter { letter, generators });
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Presentation { generators, relators })
    }

    pub fn trivial() -> Self {
        Presentation {
            generators: 0,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// No generators at all (relators are then necessarily absent).
    pub fn is_empty(&self) -> bool {
        self.generators == 0
    }
}

/// Reads `gens g` followed by one relator per line. `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });
    let fmt_err = |line, message: String| PresentationError::Format { line, message };
    let (hline, header) = lines
        .next()
        .ok_or_else(|| fmt_err(1, "missing `gens <g>` header".into()))?;
    let generators = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["gens", g] => g
            .parse::<usize>()
            .map_err(|_| fmt_err(hline, format!("bad generator count {g:?}")))?,
        _ => return Err(fmt_err(hline, "header must be `gens <g>`".into())),
    };
    let mut relators = Vec::new();
    for (line, body) in lines {
        let word = body
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| fmt_err(line, format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&letter) = word.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > generators) {
            return Err(fmt_err(
                line,
                PresentationError::BadLetter { letter, generators }.to_string(),
            ));
        }
        relators.push(word);
    }
    Presentation::new(generators, relators)
}

pub fn write_presentation(p: &Presentation) -> String {
    let mut out = format!("gens {}\n", p.generators);
    for r in &p.relators {
        let toks: Vec<String> = r.iter().map(i32::to_string).collect();
        writeln!(out, "{}", toks.join(" ")).unwrap();
    }
    out
}

/// A 2-dimensional simplicial complex whose fundamental group is the group
/// presented by `p`.
///
/// The 1-skeleton is a wedge of triangles at a base vertex `b`, one per
/// generator. A relator of length `l` traces a closed edge path of length
/// `3l` through the wedge. For each relator a fresh `3l`-gon is coned off
/// from a fresh centre and joined to that path by a triangulated collar
/// (the mapping cylinder of the attaching map), two triangles per polygon
/// side. The polygon vertices are all distinct, so no two triangles share
/// their vertex set even when the path revisits edges.
pub fn presentation_complex(p: &Presentation) -> SimplicialComplex {
    let mut labels = vec!["b".to_string()];
    let mut loops = Vec::with_capacity(p.generators);
    for i in 1..=p.generators {
        labels.push(format!("x{i}a"));
        labels.push(format!("x{i}b"));
        loops.push((labels.len() - 2, labels.len() - 1));
    }
    let mut faces: Vec<Vec<usize>> = vec![vec![0]];
    for &(a, b) in &loops {
        faces.extend([vec![0, a], vec![a, b], vec![b, 0]]);
    }
    for (r, word) in p.relators.iter().enumerate() {
        let path: Vec<usize> = word
            .iter()
            .flat_map(|&letter| {
                let (a, b) = loops[letter.unsigned_abs() as usize - 1];
                if letter > 0 {
                    [0, a, b]
                } else {
                    [0, b, a]
                }
            })
            .collect();
        let len = path.len();
        let first_q = labels.len();
        labels.extend((0..len).map(|j| format!("r{}q{j}", r + 1)));
        labels.push(format!("r{}c", r + 1));
        let centre = labels.len() - 1;
        for j in 0..len {
            let next = (j + 1) % len;
            let (q, q_next) = (first_q + j, first_q + next);
            faces.push(vec![centre, q, q_next]);
            faces.push(vec![q, q_next, path[next]]);
            faces.push(vec![q, path[j], path[next]]);
        }
    }
    SimplicialComplex::from_faces(labels, faces).expect("indices in range")
}
