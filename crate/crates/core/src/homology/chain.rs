//! Reduced simplicial homology over the integers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{invariant_factors, IntMatrix};
use crate::complex::{Face, SimplicialComplex};
use crate::ext::ExtInt;

/// Signed boundary operator `C_k -> C_{k-1}` of the augmented chain complex.
///
/// Rows are the `(k-1)`-faces and columns the `k`-faces, both in
/// lexicographic order; deleting the `i`-th vertex of a face contributes
/// `(-1)^i`. `k = 0` gives the augmentation row of ones. Beyond
/// `dim + 1` the matrix is `0 x 0`.
pub fn boundary_matrix(k: &SimplicialComplex, dim: usize) -> IntMatrix {
    let Some(top) = k.dim() else {
        return IntMatrix::zeros(0, 0);
    };
    if dim > top + 1 {
        return IntMatrix::zeros(0, 0);
    }
    let cols = if dim <= top { k.faces(dim) } else { Vec::new() };
    if dim == 0 {
        return augmentation(cols.len());
    }
    boundary_between(&k.faces(dim - 1), &cols)
}

fn augmentation(vertices: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(1, vertices);
    for j in 0..vertices {
        m[(0, j)] = BigInt::one();
    }
    m
}

fn boundary_between(rows: &[Face], cols: &[Face]) -> IntMatrix {
    let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    let mut facet = Vec::new();
    for (j, face) in cols.iter().enumerate() {
        for skip in 0..face.len() {
            facet.clear();
            facet.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            m[(index[facet.as_slice()], j)] = BigInt::from(sign);
        }
    }
    m
}

/// Reduced homology in one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Torsion coefficients greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// `groups[k]` is the reduced homology in dimension `k`, for
/// `k = 0..=dim(K)`. The empty complex has no entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologySummary {
    pub groups: Vec<HomologyGroup>,
    /// Retained so connectivity can tell the empty complex apart from a point.
    pub empty: bool,
}

impl HomologySummary {
    pub fn group(&self, k: usize) -> HomologyGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn is_acyclic(&self) -> bool {
        !self.empty && self.groups.iter().all(HomologyGroup::is_trivial)
    }

    /// `-2` for the empty complex, `+inf` when everything vanishes, and
    /// otherwise `k - 1` for the least `k` with nonzero reduced homology.
    pub fn connectivity(&self) -> ExtInt {
        if self.empty {
            return ExtInt::Finite(-2);
        }
        match self.groups.iter().position(|g| !g.is_trivial()) {
            Some(k) => ExtInt::Finite(k as i64 - 1),
            None => ExtInt::PosInf,
        }
    }

    /// Alternating sum of Betti numbers.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            // the augmentation C_{-1} = Z survives
            return writeln!(f, "-1: betti=1 torsion=[]");
        }
        for (k, g) in self.groups.iter().enumerate() {
            let torsion: Vec<String> = g.torsion.iter().map(BigInt::to_string).collect();
            writeln!(f, "{k}: betti={} torsion=[{}]", g.betti, torsion.join(","))?;
        }
        Ok(())
    }
}

pub fn reduced_homology(k: &SimplicialComplex) -> HomologySummary {
    let Some(top) = k.dim() else {
        return HomologySummary {
            groups: Vec::new(),
            empty: true,
        };
    };
    let faces: Vec<Vec<Face>> = (0..=top).map(|d| k.faces(d)).collect();
    // factors[d] = invariant factors of the boundary C_d -> C_{d-1}, d = 0..=top+1
    let mut factors: Vec<Vec<BigInt>> = Vec::with_capacity(top + 2);
    factors.push(vec![BigInt::one()]); // augmentation onto Z is surjective
    for d in 1..=top {
        factors.push(invariant_factors(&boundary_between(&faces[d - 1], &faces[d])));
    }
    factors.push(Vec::new());
    let groups = (0..=top)
        .map(|d| HomologyGroup {
            betti: faces[d].len() - factors[d].len() - factors[d + 1].len(),
            torsion: factors[d + 1].iter().filter(|x| !x.is_one()).cloned().collect(),
        })
        .collect();
    HomologySummary { groups, empty: false }
}

pub fn homological_connectivity(k: &SimplicialComplex) -> ExtInt {
    reduced_homology(k).connectivity()
}

/// Alternating count of faces, minus one for the augmentation.
pub fn reduced_euler_from_faces(k: &SimplicialComplex) -> i64 {
    let Some(top) = k.dim() else {
        return -1;
    };
    (0..=top)
        .map(|d| {
            let n = k.faces(d).len() as i64;
            if d % 2 == 0 {
                n
            } else {
                -n
            }
        })
        .sum::<i64>()
        - 1
}
