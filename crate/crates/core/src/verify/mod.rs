//! Exhaustive checks of the psi lower bound on connectivity, triage of
//! graphs where the bound might not be tight, and the presentation-to-graph
//! pipeline.

mod chordal;
mod pipeline;
mod report;
mod scan;

use std::fmt;
use std::time::{Duration, Instant};

use crate::complex::independence_complex;
use crate::ext::ExtInt;
use crate::graph::{write_graph6, Graph};
use crate::homology::{is_collapsible, reduced_homology, simple_connectivity, TietzeBudget, TriState};
use crate::psi::{psi, PsiMemo};

pub use chordal::{is_chordal, maximum_cardinality_order};
pub use pipeline::{pipeline_presentation, PipelineOptions, PipelineReport, PsiOutcome, SignAgreement};
pub use report::{write_report, write_summary, TSV_HEADER};
pub use scan::{scan, BoundViolation, ScanOptions, ScanOutcome, ScanSummary};

/// How a graph fares against "I_G is not (psi+1)-connected unless it is
/// contractible".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GapGrade {
    /// psi is -2, or psi is infinite and the complex is not shown
    /// contractible by other means.
    NotApplicable,
    /// Homology or the fundamental group shows the complex is not
    /// (psi+1)-connected.
    Refuted,
    /// Collapsible, or acyclic and simply connected.
    Contractible,
    /// Homology vanishes through dimension psi+1 and the fundamental group
    /// is trivial or irrelevant; higher homotopy is not examined.
    Candidate,
    /// Homology vanishes through dimension psi+1 but the fundamental group
    /// could not be decided.
    NeedsReview,
}

impl GapGrade {
    pub fn label(self) -> &'static str {
        match self {
            GapGrade::NotApplicable => "n/a",
            GapGrade::Refuted => "refuted",
            GapGrade::Contractible => "contractible",
            GapGrade::Candidate => "candidate",
            GapGrade::NeedsReview => "needs-review",
        }
    }
}

impl fmt::Display for GapGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub psi: Duration,
    pub homology: Duration,
    pub pi1: Duration,
    pub collapse: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub psi: ExtInt,
    /// Homological connectivity of the independence complex.
    pub homconn: ExtInt,
    /// `None` when not computed: the complex is empty or disconnected, or
    /// psi is at most zero and homology already decides (psi+1)-connectivity.
    pub pi1: Option<TriState>,
    /// Whether the greedy lexicographic collapse reached a point.
    pub collapsible: bool,
    /// Reduced homology vanishes in every dimension up to psi.
    pub bound_ok: bool,
    pub gap_flag: bool,
    pub grade: GapGrade,
    pub timings: Timings,
}

impl GraphReport {
    /// Infinite psi with vanishing homology but no proof of contractibility.
    pub fn is_unresolved(&self) -> bool {
        self.psi == ExtInt::PosInf && self.bound_ok && self.grade != GapGrade::Contractible
    }

    pub fn pi1_label(&self) -> &'static str {
        self.pi1.as_ref().map_or("-", TriState::label)
    }
}

/// Evaluates psi, the homology and (when relevant) the fundamental group of
/// the independence complex of `g`.
pub fn check_lower_bound(g: &Graph, memo: &PsiMemo) -> GraphReport {
    check_lower_bound_with(g, memo, TietzeBudget::default())
}

pub fn check_lower_bound_with(g: &Graph, memo: &PsiMemo, budget: TietzeBudget) -> GraphReport {
    let mut timings = Timings::default();
    let clock = Instant::now();
    let psi = psi(g, memo);
    timings.psi = clock.elapsed();

    let complex = independence_complex(g);
    let clock = Instant::now();
    let homology = reduced_homology(&complex);
    let homconn = homology.connectivity();
    timings.homology = clock.elapsed();

    let bound_ok = homconn >= psi;
    let target = psi.succ();
    // pi1 matters for (psi+1)-connectivity when psi+1 >= 1, and for the
    // bound itself when psi >= 1; it is skipped once homology refutes both.
    let wants_pi1 = homconn >= ExtInt::Finite(0)
        && (psi >= ExtInt::Finite(1) || (target >= ExtInt::Finite(1) && homconn >= target));
    let clock = Instant::now();
    let pi1 = wants_pi1.then(|| simple_connectivity(&complex, budget));
    timings.pi1 = clock.elapsed();

    let clock = Instant::now();
    let collapsible = is_collapsible(&complex);
    timings.collapse = clock.elapsed();

    let contractible = collapsible || (homology.is_acyclic() && pi1.as_ref().is_some_and(TriState::is_yes));
    let grade = if contractible {
        GapGrade::Contractible
    } else if !psi.is_finite() || psi == ExtInt::Finite(-2) || !bound_ok {
        GapGrade::NotApplicable
    } else if homconn < target {
        GapGrade::Refuted
    } else if target < ExtInt::Finite(1) {
        GapGrade::Candidate
    } else {
        match pi1 {
            Some(TriState::Yes) => GapGrade::Candidate,
            Some(TriState::No(_)) => GapGrade::Refuted,
            Some(TriState::Unknown { .. }) | None => GapGrade::NeedsReview,
        }
    };
    GraphReport {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        psi,
        homconn,
        pi1,
        collapsible,
        bound_ok,
        gap_flag: matches!(grade, GapGrade::Candidate | GapGrade::NeedsReview),
        grade,
        timings,
    }
}
