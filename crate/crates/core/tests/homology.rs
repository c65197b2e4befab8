mod common;

use common::{big, exponent_rows, is_smith_diagonal, reduced_betti_over, to_i64_rows};
use indcomplex::complex::{
    barycentric_subdivision, complexes_on_vertices, independence_complex, parse_facets, presentation_complex,
    Presentation, SimplicialComplex,
};
use indcomplex::graph::enumerate_graphs;
use indcomplex::homology::{
    abelianization, boundary_matrix, edge_path_presentation, first_homology, homological_connectivity,
    invariant_factors, is_collapsible, reduced_euler_from_faces, reduced_homology, simple_connectivity,
    simplify_presentation, smith_normal_form, AbelianInvariants, IntMatrix, TietzeBudget, TriState,
};
use indcomplex::ExtInt;
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

const RP2: &str = "0 1 2\n0 2 3\n0 3 4\n0 4 5\n0 5 1\n1 2 4\n2 3 5\n3 4 1\n4 5 2\n5 1 3\n";

fn corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let rp2 = parse_facets(RP2).unwrap();
    let torus_free = parse_facets("a b\nb c\nc a\nc d\nd e\ne c\n").unwrap();
    vec![
        ("point", SimplicialComplex::simplex(0)),
        ("triangle", SimplicialComplex::simplex(2)),
        ("circle", SimplicialComplex::simplex_boundary(2)),
        ("2-sphere", SimplicialComplex::simplex_boundary(3)),
        ("3-sphere", SimplicialComplex::simplex_boundary(4)),
        ("projective plane", rp2.clone()),
        ("cone on projective plane", rp2.cone()),
        ("wedge of circles", torus_free),
        ("two points", SimplicialComplex::from_index_faces(2, vec![]).unwrap()),
    ]
}

/// Number of torsion summands of order divisible by `p` in each dimension,
/// from ranks over the rationals and over `F_p`. By universal coefficients
/// the mod-p Betti number in dimension d exceeds the rational one by the
/// p-torsion counts in dimensions d and d-1.
fn p_torsion_counts(k: &SimplicialComplex, p: i64) -> Vec<usize> {
    let q = reduced_betti_over(k, 0);
    let fp = reduced_betti_over(k, p);
    let mut counts: Vec<usize> = Vec::new();
    for d in 0..q.len() {
        let below = if d == 0 { 0 } else { counts[d - 1] };
        counts.push(fp[d] - q[d] - below);
    }
    counts
}

#[test]
fn betti_numbers_agree_with_field_ranks() {
    for (name, k) in corpus() {
        let h = reduced_homology(&k);
        let q = reduced_betti_over(&k, 0);
        for (d, &b) in q.iter().enumerate() {
            assert_eq!(h.group(d).betti, b, "{name} in dimension {d}");
        }
        for p in [2i64, 3, 5, 7] {
            let expected = p_torsion_counts(&k, p);
            for (d, &count) in expected.iter().enumerate() {
                let got = h
                    .group(d)
                    .torsion
                    .iter()
                    .filter(|t| (*t % p) == BigInt::from(0))
                    .count();
                assert_eq!(got, count, "{name}: {p}-torsion in dimension {d}");
            }
        }
    }
}

#[test]
fn corpus_values() {
    let z = |b: usize, t: &[i64]| (b, big(t));
    let summary = |k: &SimplicialComplex, d: usize| {
        let g = reduced_homology(k).group(d);
        (g.betti, g.torsion)
    };
    let c = corpus();
    let get = |name: &str| c.iter().find(|(n, _)| *n == name).unwrap().1.clone();
    assert_eq!(summary(&get("circle"), 1), z(1, &[]));
    assert_eq!(summary(&get("2-sphere"), 2), z(1, &[]));
    assert_eq!(summary(&get("3-sphere"), 3), z(1, &[]));
    assert_eq!(summary(&get("projective plane"), 1), z(0, &[2]));
    assert_eq!(summary(&get("projective plane"), 2), z(0, &[]));
    assert_eq!(summary(&get("wedge of circles"), 1), z(2, &[]));
    assert_eq!(summary(&get("two points"), 0), z(1, &[]));
    assert!(reduced_homology(&get("cone on projective plane")).is_acyclic());
}

#[test]
fn cones_are_acyclic_and_subdivision_preserves_homology() {
    for (name, k) in corpus() {
        assert!(reduced_homology(&k.cone()).is_acyclic(), "cone on {name}");
        assert_eq!(
            reduced_homology(&barycentric_subdivision(&k)),
            reduced_homology(&k),
            "{name}"
        );
    }
}

#[test]
fn euler_characteristic_two_ways() {
    for (name, k) in corpus() {
        assert_eq!(
            reduced_homology(&k).reduced_euler_characteristic(),
            reduced_euler_from_faces(&k),
            "{name}"
        );
    }
    for k in complexes_on_vertices(4) {
        assert_eq!(
            reduced_homology(&k).reduced_euler_characteristic(),
            reduced_euler_from_faces(&k)
        );
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    for (name, k) in corpus() {
        let top = k.dim().unwrap();
        for d in 0..=top {
            assert!(
                (&boundary_matrix(&k, d) * &boundary_matrix(&k, d + 1)).is_zero(),
                "{name} at {d}"
            );
        }
    }
}

#[test]
fn connectivity_of_independence_complexes_survives_subdivision() {
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let k = independence_complex(&g);
            assert_eq!(
                homological_connectivity(&k),
                homological_connectivity(&barycentric_subdivision(&k)),
                "{g:?}"
            );
        }
    }
}

#[test]
fn abelianized_edge_path_group_is_first_homology() {
    let connected = corpus().into_iter().filter(|(n, _)| *n != "two points");
    for (name, k) in connected {
        let p = edge_path_presentation(&k).unwrap();
        assert_eq!(abelianization(&p), first_homology(&k), "{name}");
    }
    for n in 1..=4 {
        for k in complexes_on_vertices(n) {
            if let Ok(p) = edge_path_presentation(&k) {
                assert_eq!(abelianization(&p), first_homology(&k), "{:?}", k.facets());
            }
        }
    }
}

#[test]
fn simple_connectivity_is_consistent() {
    let budget = TietzeBudget::default();
    let mut ks: Vec<SimplicialComplex> = corpus().into_iter().map(|(_, k)| k).collect();
    for n in 1..=4 {
        ks.extend(complexes_on_vertices(n));
    }
    for n in 1..=6 {
        ks.extend(enumerate_graphs(n).unwrap().iter().map(independence_complex));
    }
    for k in &ks {
        let verdict = simple_connectivity(k, budget);
        if !first_homology(k).is_trivial() {
            assert!(!verdict.is_yes(), "{:?}", k.facets());
        }
        if is_collapsible(k) {
            assert!(!verdict.is_no(), "{:?}", k.facets());
        }
    }
    assert_eq!(
        simple_connectivity(&parse_facets(RP2).unwrap().cone(), budget),
        TriState::Yes
    );
}

fn arb_presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|g| {
        let letter = (1..=g as i32).prop_flat_map(|x| prop_oneof![Just(x), Just(-x)]);
        proptest::collection::vec(proptest::collection::vec(letter, 1..6), 0..4)
            .prop_map(move |rels| Presentation::new(g, rels).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tietze_moves_preserve_abelianization(p in arb_presentation(), steps in 1usize..30) {
        let before = abelianization(&p);
        let s = simplify_presentation(&p, TietzeBudget { steps, max_relator_len: 10_000 });
        prop_assert_eq!(abelianization(&s.presentation), before);
        prop_assert!(s.presentation.generators() <= p.generators());
    }

    #[test]
    fn presentation_complex_realizes_the_abelianization(p in arb_presentation()) {
        let k = presentation_complex(&p);
        prop_assert_eq!(first_homology(&k), abelianization(&p));
        prop_assert!(reduced_homology(&k).group(0).is_trivial());
    }

    #[test]
    fn abelianization_rank_matches_field_rank(p in arb_presentation()) {
        let rows = exponent_rows(p.relators(), p.generators());
        let r = if rows.is_empty() { 0 } else { common::rank_rational(&rows) };
        prop_assert_eq!(abelianization(&p).rank, p.generators() - r);
    }
}

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #[test]
    fn smith_certificates(rows in arb_matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let f = smith_normal_form(&a);
        prop_assert_eq!(&(&f.u * &a) * &f.v, f.d.clone());
        prop_assert!(f.u.determinant().abs() == BigInt::from(1));
        prop_assert!(f.v.determinant().abs() == BigInt::from(1));
        prop_assert!(is_smith_diagonal(&f.d));
        prop_assert_eq!(f.invariant_factors(), invariant_factors(&a));
        prop_assert_eq!(f.rank(), common::rank_rational(&rows));
    }
}

#[test]
fn smith_form_of_known_matrices() {
    let f = smith_normal_form(&IntMatrix::from_rows(&[
        vec![2, 4, 4],
        vec![-6, 6, 12],
        vec![10, -4, -16],
    ]));
    assert_eq!(f.d.diagonal(), big(&[2, 6, 12]));
    let f = smith_normal_form(&IntMatrix::zeros(2, 3));
    assert!(f.d.is_zero());
    // entries far beyond i64 after elimination
    let huge = IntMatrix::from_rows(&[vec![i64::MAX, i64::MAX - 1], vec![i64::MAX - 1, i64::MAX - 2]]);
    let f = smith_normal_form(&huge);
    assert_eq!(&(&f.u * &huge) * &f.v, f.d);
    assert_eq!(f.d.diagonal(), big(&[1, 1]));
    assert_eq!(to_i64_rows(&IntMatrix::identity(2)), vec![vec![1, 0], vec![0, 1]]);
}

#[test]
fn abelian_invariants_display() {
    let a = AbelianInvariants {
        rank: 2,
        torsion: big(&[2, 6]),
    };
    assert_eq!(a.to_string(), "Z^2 + Z/2 + Z/6");
    assert_eq!(AbelianInvariants::default().to_string(), "0");
    assert_eq!(homological_connectivity(&SimplicialComplex::simplex(3)), ExtInt::PosInf);
}
