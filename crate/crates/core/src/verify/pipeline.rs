use std::fmt;

use crate::complex::{
    barycentric_subdivision, complex_to_graph, independence_complex, is_isomorphic_with_budget, presentation_complex,
    Presentation, DEFAULT_ISO_BUDGET,
};
use crate::ext::ExtInt;
use crate::homology::{
    abelianization, edge_path_presentation, simple_connectivity, AbelianInvariants, TietzeBudget, TriState,
};
use crate::psi::{psi, PsiMemo};

#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    /// psi is attempted only when the 2-complex has at most this many faces,
    /// i.e. the encoding graph has at most this many vertices.
    pub psi_face_ceiling: usize,
    pub tietze: TietzeBudget,
    pub iso_budget: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            psi_face_ceiling: 10,
            tietze: TietzeBudget::default(),
            iso_budget: DEFAULT_ISO_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiOutcome {
    Computed(ExtInt),
    /// Over the face ceiling; psi was not attempted.
    Skipped {
        faces: usize,
        ceiling: usize,
    },
}

/// Whether "psi is positive" matches the simple-connectivity verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignAgreement {
    Agree,
    /// psi <= 0 for a simply connected complex: the situation the
    /// conjecture rules out unless the complex is contractible.
    PsiNonPositiveButSimplyConnected,
    /// psi >= 1 while the complex is not simply connected, which the lower
    /// bound forbids.
    PsiPositiveButNotSimplyConnected,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub complex_vertices: usize,
    pub complex_faces: usize,
    pub graph_vertices: usize,
    pub graph_edges: usize,
    /// `None` when the isomorphism search ran out of budget.
    pub isomorphic: Option<bool>,
    pub psi: PsiOutcome,
    pub pi1: TriState,
    pub presentation_abelianization: AbelianInvariants,
    /// Abelianization of the edge-path group of the 2-complex.
    pub complex_abelianization: AbelianInvariants,
    pub sign: SignAgreement,
}

impl PipelineReport {
    pub fn abelianization_ok(&self) -> bool {
        self.presentation_abelianization == self.complex_abelianization
    }

    pub fn contradicts_lower_bound(&self) -> bool {
        self.sign == SignAgreement::PsiPositiveButNotSimplyConnected
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let iso = match self.isomorphic {
            Some(true) => "ok",
            Some(false) => "FAILED",
            None => "undecided",
        };
        writeln!(f, "isomorphism: {iso}, pi1: {}", self.pi1)?;
        writeln!(
            f,
            "complex: {} vertices, {} faces; graph: {} vertices, {} edges",
            self.complex_vertices, self.complex_faces, self.graph_vertices, self.graph_edges
        )?;
        match self.psi {
            PsiOutcome::Computed(v) => writeln!(f, "psi = {v}")?,
            PsiOutcome::Skipped { faces, ceiling } => {
                writeln!(f, "psi skipped: {faces} faces exceed the ceiling of {ceiling}")?
            }
        }
        writeln!(
            f,
            "abelianization: presentation {}, complex {}",
            self.presentation_abelianization, self.complex_abelianization
        )?;
        let sign = match self.sign {
            SignAgreement::Agree => "agree",
            SignAgreement::PsiNonPositiveButSimplyConnected => "psi <= 0 but simply connected",
            SignAgreement::PsiPositiveButNotSimplyConnected => "psi >= 1 but not simply connected (bound violated)",
            SignAgreement::Inconclusive => "inconclusive",
        };
        writeln!(f, "psi sign vs pi1: {sign}")
    }
}

/// Builds the 2-complex of `p`, its encoding graph G, and compares the
/// independence complex of G with the barycentric subdivision; then reports
/// psi(G) next to the simple-connectivity verdict for that independence
/// complex.
pub fn pipeline_presentation(p: &Presentation, opts: PipelineOptions) -> PipelineReport {
    let k = presentation_complex(p);
    let g = complex_to_graph(&k);
    let ind = independence_complex(&g);
    let sd = barycentric_subdivision(&k);
    let isomorphic = is_isomorphic_with_budget(&ind, &sd, opts.iso_budget).ok();

    let faces = k.face_count();
    let psi = if faces <= opts.psi_face_ceiling {
        PsiOutcome::Computed(psi(&g, &PsiMemo::new()))
    } else {
        PsiOutcome::Skipped {
            faces,
            ceiling: opts.psi_face_ceiling,
        }
    };
    let pi1 = simple_connectivity(&ind, opts.tietze);
    let complex_abelianization =
        abelianization(&edge_path_presentation(&k).expect("presentation complexes are connected"));
    let sign = match (psi, &pi1) {
        (PsiOutcome::Skipped { .. }, _) | (_, TriState::Unknown { .. }) => SignAgreement::Inconclusive,
        (PsiOutcome::Computed(v), TriState::Yes) if v < ExtInt::Finite(1) => {
            SignAgreement::PsiNonPositiveButSimplyConnected
        }
        (PsiOutcome::Computed(v), TriState::No(_)) if v >= ExtInt::Finite(1) => {
            SignAgreement::PsiPositiveButNotSimplyConnected
        }
        _ => SignAgreement::Agree,
    };
    PipelineReport {
        complex_vertices: k.vertex_count(),
        complex_faces: faces,
        graph_vertices: g.n(),
        graph_edges: g.edge_count(),
        isomorphic,
        psi,
        pi1,
        presentation_abelianization: abelianization(p),
        complex_abelianization,
        sign,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_on_one_generator() {
        let r = pipeline_presentation(&Presentation::new(1, vec![]).unwrap(), PipelineOptions::default());
        assert_eq!(r.isomorphic, Some(true));
        assert!(r.abelianization_ok());
        assert!(r.pi1.is_no());
        assert!(!r.contradicts_lower_bound());
        let PsiOutcome::Computed(v) = r.psi else {
            panic!("tiny complex")
        };
        assert!(v <= ExtInt::Finite(0));
    }
}
