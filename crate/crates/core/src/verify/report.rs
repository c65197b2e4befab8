use std::io::{self, Write};

use super::{GraphReport, ScanSummary};

pub const TSV_HEADER: &str = "graph6\tn\tm\tpsi\thomconn\tpi1\tcollapsible\tbound_ok\tgap_flag";

/// One tab-separated row per report under [`TSV_HEADER`]. Timings are left
/// out so the output depends only on the input.
pub fn write_report<W: Write>(reports: &[GraphReport], mut out: W) -> io::Result<()> {
    writeln!(out, "{TSV_HEADER}")?;
    for r in reports {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.graph6,
            r.n,
            r.m,
            r.psi,
            r.homconn,
            r.pi1_label(),
            r.collapsible,
            r.bound_ok,
            r.gap_flag
        )?;
    }
    Ok(())
}

impl ScanSummary {
    pub fn headline(&self) -> String {
        format!(
            "{} graphs, {} violations, {} gap candidates, {} need review",
            self.total, self.violations, self.candidates, self.needs_review
        )
    }
}

/// Totals followed by the flagged and unresolved graphs, each listed by
/// input position, graph6 and grade.
pub fn write_summary<W: Write>(summary: &ScanSummary, reports: &[GraphReport], mut out: W) -> io::Result<()> {
    writeln!(out, "{}", summary.headline())?;
    writeln!(out, "total: {}", summary.total)?;
    writeln!(out, "bound violations: {}", summary.violations)?;
    writeln!(out, "gap candidates: {}", summary.candidates)?;
    writeln!(out, "needs review: {}", summary.needs_review)?;
    writeln!(out, "unknown pi1: {}", summary.unknown_pi1)?;
    writeln!(out, "unresolved: {}", summary.unresolved.len())?;
    for (title, list) in [("flagged", &summary.flagged), ("unresolved", &summary.unresolved)] {
        if list.is_empty() {
            continue;
        }
        writeln!(out, "[{title}]")?;
        for &i in list {
            let r = &reports[i];
            writeln!(
                out,
                "{i}\t{}\tpsi={}\thomconn={}\tpi1={}\t{}",
                r.graph6,
                r.psi,
                r.homconn,
                r.pi1_label(),
                r.grade
            )?;
        }
    }
    Ok(())
}
