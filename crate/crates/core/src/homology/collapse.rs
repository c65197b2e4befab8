//! Greedy elementary collapses.

use std::collections::{BTreeSet, HashMap};

use crate::complex::{Face, SimplicialComplex};

fn boundary(face: &[usize]) -> impl Iterator<Item = Face> + '_ {
    (0..face.len()).filter(move |_| face.len() > 1).map(move |skip| {
        face.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

struct State {
    faces: BTreeSet<Face>,
    cofaces: HashMap<Face, BTreeSet<Face>>,
    free: BTreeSet<Face>,
}

impl State {
    fn is_free(&self, face: &Face) -> bool {
        let Some(up) = self.cofaces.get(face) else { return false };
        up.len() == 1 && up.iter().all(|t| self.cofaces[t].is_empty())
    }

    fn refresh(&mut self, face: &Face) {
        if self.faces.contains(face) && self.is_free(face) {
            self.free.insert(face.clone());
        } else {
            self.free.remove(face);
        }
    }

    fn remove(&mut self, face: &Face) {
        self.faces.remove(face);
        self.free.remove(face);
        self.cofaces.remove(face);
        for b in boundary(face) {
            if let Some(up) = self.cofaces.get_mut(&b) {
                up.remove(face);
            }
        }
    }
}

/// Runs elementary collapses until none applies, always removing the
/// lexicographically least free face together with its unique coface, and
/// reports whether a single vertex is left.
///
/// A face is free when it lies in exactly one face of one dimension higher
/// and that face is maximal. `true` proves the complex collapsible; `false`
/// only says this greedy order got stuck, except for the empty complex.
pub fn is_collapsible(k: &SimplicialComplex) -> bool {
    if k.is_empty() {
        return false;
    }
    let faces: BTreeSet<Face> = k.all_faces().into_iter().collect();
    let mut cofaces: HashMap<Face, BTreeSet<Face>> = faces.iter().map(|f| (f.clone(), BTreeSet::new())).collect();
    for f in &faces {
        for b in boundary(f) {
            cofaces.get_mut(&b).expect("closed under faces").insert(f.clone());
        }
    }
    let mut state = State {
        faces,
        cofaces,
        free: BTreeSet::new(),
    };
    let all: Vec<Face> = state.faces.iter().cloned().collect();
    for f in &all {
        state.refresh(f);
    }
    while let Some(sigma) = state.free.pop_first() {
        let tau = state.cofaces[&sigma]
            .iter()
            .next()
            .cloned()
            .expect("free face has a coface");
        state.remove(&tau);
        state.remove(&sigma);
        let mut touched: BTreeSet<Face> = BTreeSet::new();
        for b in boundary(&tau).chain(boundary(&sigma)) {
            touched.extend(boundary(&b));
            touched.insert(b);
        }
        for f in &touched {
            state.refresh(f);
        }
    }
    state.faces.len() == 1
}
