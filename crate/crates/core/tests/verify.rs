mod common;

use common::permutations;
use indcomplex::complex::Presentation;
use indcomplex::graph::enumerate_graphs;
use indcomplex::homology::{NotSimplyConnected, TriState};
use indcomplex::psi::PsiMemo;
use indcomplex::verify::{
    check_lower_bound, is_chordal, pipeline_presentation, scan, write_report, write_summary, GapGrade, PipelineOptions,
    PsiOutcome, ScanOptions,
};
use indcomplex::{ExtInt, Graph};

/// Chordal iff no vertex subset of size at least 4 induces a cycle.
fn chordal_oracle(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 4 {
            continue;
        }
        let deg_two = vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
        if !deg_two {
            continue;
        }
        // 2-regular; a cycle iff connected
        let mut seen = vec![vs[0]];
        let mut frontier = vec![vs[0]];
        while let Some(v) = frontier.pop() {
            for &w in &vs {
                if g.has_edge(v, w) && !seen.contains(&w) {
                    seen.push(w);
                    frontier.push(w);
                }
            }
        }
        if seen.len() == vs.len() {
            return false;
        }
    }
    true
}

#[test]
fn chordality_matches_the_induced_cycle_definition() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(is_chordal(&g), chordal_oracle(&g), "{g:?}");
        }
    }
}

#[test]
fn chordality_ignores_labels() {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    for p in permutations(5) {
        assert!(is_chordal(&g.relabel(&p)));
    }
}

#[test]
fn report_invariants_on_all_small_graphs() {
    let memo = PsiMemo::new();
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let r = check_lower_bound(&g, &memo);
            assert!(r.bound_ok, "{}", r.graph6);
            assert!(!r.gap_flag || r.bound_ok);
            if r.psi == ExtInt::PosInf {
                assert_eq!(r.homconn, ExtInt::PosInf, "{}", r.graph6);
            }
            if r.collapsible {
                assert_eq!(r.grade, GapGrade::Contractible);
            }
            if let Some(TriState::No(NotSimplyConnected::FirstHomology(_))) = r.pi1 {
                assert!(r.homconn <= ExtInt::Finite(0));
            }
        }
    }
}

fn rendered(graphs: &[Graph], workers: usize) -> (Vec<u8>, Vec<u8>) {
    let out = scan(
        graphs,
        ScanOptions {
            workers,
            ..Default::default()
        },
    )
    .unwrap();
    let (mut tsv, mut summary) = (Vec::new(), Vec::new());
    write_report(&out.reports, &mut tsv).unwrap();
    write_summary(&out.summary, &out.reports, &mut summary).unwrap();
    (tsv, summary)
}

#[test]
fn scan_output_does_not_depend_on_worker_count() {
    let graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    let one = rendered(&graphs, 1);
    assert_eq!(one, rendered(&graphs, 3));
    assert_eq!(one, rendered(&graphs, 8));
    let tsv = String::from_utf8(one.0).unwrap();
    assert_eq!(tsv.lines().count(), graphs.len() + 1);
}

#[test]
fn pentagon_row() {
    let out = scan(&[Graph::cycle(5)], ScanOptions::default()).unwrap();
    let mut tsv = Vec::new();
    write_report(&out.reports, &mut tsv).unwrap();
    let row = String::from_utf8(tsv).unwrap().lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = row.split('\t').collect();
    assert_eq!(&cols[..5], &["Dhc", "5", "5", "0", "0"]);
    assert_eq!(cols[8], "false");
}

#[test]
fn pipeline_examples() {
    let opts = PipelineOptions::default();
    let trivial = pipeline_presentation(&Presentation::new(1, vec![vec![1]]).unwrap(), opts);
    assert_eq!(trivial.isomorphic, Some(true));
    assert_eq!(trivial.pi1, TriState::Yes);
    assert!(matches!(trivial.psi, PsiOutcome::Skipped { .. }));

    let circle = pipeline_presentation(&Presentation::new(1, vec![]).unwrap(), opts);
    assert_eq!(circle.isomorphic, Some(true));
    assert!(circle.pi1.is_no());
    assert!(matches!(circle.psi, PsiOutcome::Computed(v) if v <= ExtInt::Finite(0)));

    let z2 = pipeline_presentation(&Presentation::new(1, vec![vec![1, 1]]).unwrap(), opts);
    let TriState::No(NotSimplyConnected::FirstHomology(h)) = &z2.pi1 else {
        panic!("{}", z2.pi1)
    };
    assert_eq!(h.to_string(), "Z/2");
    assert!(z2.abelianization_ok());
}
