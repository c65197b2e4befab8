//! Barycentric subdivision and the face-poset graph of a complex.
//!
//! Both constructions index the faces of `K` in the same order (dimension,
//! then lexicographic), so vertex `i` of `sd(K)` and vertex `i` of
//! `complex_to_graph(K)` name the same face.

use std::collections::HashMap;

use super::{is_subset, Face, SimplicialComplex};
use crate::graph::Graph;

/// `sd(K)`: vertices are the faces of `K`, simplices are chains of faces
/// under strict inclusion. Facets are the maximal chains, one for each
/// ordering of the vertices of each facet of `K`. Vertex labels are the
/// comma-joined labels of the face.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let faces = k.all_faces();
    let index: HashMap<&[usize], usize> = faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut facets = Vec::new();
    for facet in k.facets() {
        let mut order = facet.clone();
        for_each_permutation(&mut order, 0, &mut |perm| {
            let mut prefix: Face = Vec::with_capacity(perm.len());
            let mut chain: Face = Vec::with_capacity(perm.len());
            for &v in perm {
                let at = prefix.partition_point(|&x| x < v);
                prefix.insert(at, v);
                chain.push(index[prefix.as_slice()]);
            }
            chain.sort_unstable();
            facets.push(chain);
        });
    }
    let labels = faces.iter().map(|f| k.face_label(f)).collect();
    SimplicialComplex::from_facets_unchecked(labels, facets)
}

fn for_each_permutation(items: &mut [usize], start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        for_each_permutation(items, start + 1, visit);
        items.swap(start, i);
    }
}

/// The graph on the faces of `K` in which two faces are adjacent iff neither
/// contains the other. Its independence complex is `sd(K)`.
pub fn complex_to_graph(k: &SimplicialComplex) -> Graph {
    let faces = k.all_faces();
    let mut g = Graph::discrete(faces.len());
    for (j, b) in faces.iter().enumerate() {
        for (i, a) in faces.iter().enumerate().take(j) {
            // a precedes b, so a has no more vertices than b
            if !is_subset(a, b) {
                g.add_edge(i, j).expect("distinct in-range faces");
            }
        }
    }
    g
}
