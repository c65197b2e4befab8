use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use super::{check_lower_bound_with, GapGrade, GraphReport};
use crate::graph::Graph;
use crate::homology::TietzeBudget;
use crate::psi::PsiMemo;

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    pub tietze: TietzeBudget,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 1,
            tietze: TietzeBudget::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: usize,
    pub violations: usize,
    /// Graphs graded [`GapGrade::Candidate`].
    pub candidates: usize,
    /// Graphs graded [`GapGrade::NeedsReview`].
    pub needs_review: usize,
    pub unknown_pi1: usize,
    /// Input positions of infinite-psi graphs not shown contractible.
    pub unresolved: Vec<usize>,
    /// Input positions of flagged graphs, in input order.
    pub flagged: Vec<usize>,
}

impl ScanSummary {
    pub fn from_reports(reports: &[GraphReport]) -> Self {
        let mut s = ScanSummary {
            total: reports.len(),
            ..Default::default()
        };
        for (i, r) in reports.iter().enumerate() {
            s.violations += usize::from(!r.bound_ok);
            s.candidates += usize::from(r.grade == GapGrade::Candidate);
            s.needs_review += usize::from(r.grade == GapGrade::NeedsReview);
            s.unknown_pi1 += usize::from(r.pi1.as_ref().is_some_and(|p| p.is_unknown()));
            if r.gap_flag {
                s.flagged.push(i);
            }
            if r.is_unresolved() {
                s.unresolved.push(i);
            }
        }
        s
    }
}

#[derive(Debug)]
pub struct ScanOutcome {
    pub reports: Vec<GraphReport>,
    pub summary: ScanSummary,
    pub wall_time: Duration,
    pub memo_hit_rate: f64,
}

/// A graph whose independence complex has nonvanishing homology at or
/// below psi. This contradicts the lower bound and means the
/// implementation is wrong somewhere.
#[derive(Debug, Error)]
#[error("lower bound violated by graph #{index} ({graph6}): psi = {psi}, homological connectivity = {homconn}")]
pub struct BoundViolation {
    pub index: usize,
    pub graph6: String,
    pub psi: crate::ExtInt,
    pub homconn: crate::ExtInt,
    /// Everything computed, so the caller can still write the reports.
    pub outcome: Box<ScanOutcome>,
}

/// Checks every graph with `opts.workers` threads sharing one psi memo.
/// Reports come back in input order whatever the worker count.
pub fn scan(graphs: &[Graph], opts: ScanOptions) -> Result<ScanOutcome, BoundViolation> {
    let start = Instant::now();
    let memo = PsiMemo::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .expect("thread pool");
    let reports: Vec<GraphReport> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| check_lower_bound_with(g, &memo, opts.tietze))
            .collect()
    });
    let summary = ScanSummary::from_reports(&reports);
    let outcome = ScanOutcome {
        reports,
        summary,
        wall_time: start.elapsed(),
        memo_hit_rate: memo.hit_rate(),
    };
    match outcome.reports.iter().position(|r| !r.bound_ok) {
        None => Ok(outcome),
        Some(index) => {
            let r = &outcome.reports[index];
            Err(BoundViolation {
                index,
                graph6: r.graph6.clone(),
                psi: r.psi,
                homconn: r.homconn,
                outcome: Box::new(outcome),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn small_scan_is_clean_and_ordered() {
        let graphs: Vec<Graph> = (1..=4).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
        let out = scan(
            &graphs,
            ScanOptions {
                workers: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(out.summary.total, 18);
        assert_eq!(out.summary.violations, 0);
        let order: Vec<usize> = out.reports.iter().map(|r| r.n).collect();
        let expected: Vec<usize> = graphs.iter().map(Graph::n).collect();
        assert_eq!(order, expected);
    }
}
