use std::collections::BTreeSet;

use dowker::collapse::is_strong_collapsible;
use dowker::complex_io::{
    gen_sphere_cube, gen_torus_grid, parse_toplex_file, witness_relation, write_toplex_file,
};
use dowker::reducer::{pair_star, reduce};
use dowker::{Relation, ToplexList};
use proptest::prelude::*;

fn relation_from(bits: Vec<Vec<bool>>) -> Option<Relation> {
    let m: Vec<Vec<u8>> = bits
        .iter()
        .map(|row| row.iter().map(|&b| u8::from(b)).collect())
        .collect();
    let n_cols = m.first()?.len();
    Relation::from_dense(
        (0..m.len()).map(|i| format!("r{i}")).collect(),
        (0..n_cols).map(|j| format!("c{j}")).collect(),
        &m,
    )
    .ok()
}

fn arb_relation(max: usize) -> impl Strategy<Value = Relation> {
    (1..=max, 1..=max)
        .prop_flat_map(|(n, m)| prop::collection::vec(prop::collection::vec(any::<bool>(), m), n))
        .prop_filter_map("empty row or column", relation_from)
}

fn arb_complex() -> impl Strategy<Value = Relation> {
    (2usize..=10).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=4.min(n)), 1..=14).prop_map(
            move |facets| {
                let names = (0..n).map(|i| format!("v{i}")).collect();
                let facets = facets
                    .into_iter()
                    .map(|f| f.into_iter().collect())
                    .collect();
                Relation::from_toplexes(&ToplexList::from_indexed(names, facets).unwrap())
            },
        )
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(r in arb_relation(8)) {
        prop_assert_eq!(r.transpose().transpose(), r);
    }

    #[test]
    fn scoped_cleanup_matches_full_cleanup_after_a_merge(r in arb_complex()) {
        // after adding a union row only the union's columns can become reducible
        prop_assume!(r.n_rows() >= 2);
        let z = union_cols(&r, 0, 1);
        let grown = r.add_row("z", &z).unwrap();
        prop_assert_eq!(
            grown.make_column_irreducible(Some(&z)),
            grown.make_column_irreducible(None)
        );
    }

    #[test]
    fn toplex_round_trip(r in arb_complex()) {
        prop_assert!(r.is_column_irreducible());
        prop_assert_eq!(Relation::from_toplexes(&r.to_toplexes()), r.clone());
        let text = write_toplex_file(&r.to_toplexes());
        let parsed = Relation::from_toplexes(&parse_toplex_file(&text).unwrap());
        prop_assert_eq!(parsed.to_toplexes().len(), r.n_cols());
    }

    #[test]
    fn relation_text_round_trip(r in arb_relation(8)) {
        prop_assert_eq!(Relation::from_text(&r.to_text().unwrap()).unwrap(), r);
    }

    #[test]
    fn reduce_invariants(r in arb_complex()) {
        let red = reduce(&r);
        prop_assert_eq!(&reduce(&r), &red);
        let s = &red.stats;
        prop_assert_eq!(s.rows_after, s.rows_before - s.steps_applied);
        prop_assert!(s.cols_after <= s.cols_before);
        prop_assert!(red.relation.is_column_irreducible());
        prop_assert_eq!(red.tests.iter().filter(|t| t.collapsible).count(), s.steps_applied);
        prop_assert_eq!(red.steps.len(), s.steps_applied);
        for w in red.steps.windows(2) {
            prop_assert!(w[1].cols_before == w[0].cols_after);
        }
        for w in s.max_history.windows(2) {
            prop_assert!(w[1].0 <= 2 * w[0].0 && w[1].1 <= 2 * w[0].1);
        }
    }

    #[test]
    fn witness_relation_is_column_irreducible(
        cover in prop::collection::vec(prop::collection::vec(0u8..12, 1..6), 1..8)
    ) {
        let named: Vec<(String, Vec<u8>)> = cover
            .into_iter()
            .enumerate()
            .map(|(i, s)| (format!("U{i}"), s))
            .collect();
        let r = witness_relation(&named).unwrap();
        prop_assert!(r.is_column_irreducible());
        prop_assert_eq!(r.n_rows(), named.len());
    }
}

fn union_cols(r: &Relation, a: usize, b: usize) -> Vec<usize> {
    let mut cols: Vec<usize> = r.row(a).iter().chain(r.row(b)).copied().collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

#[test]
fn pair_star_of_a_closed_surface_edge_is_collapsible() {
    for tl in [gen_sphere_cube(), gen_torus_grid(4, 4).unwrap()] {
        let r = Relation::from_toplexes(&tl);
        let (a, b) = (0, r.star_vertices(0)[1]);
        assert!(is_strong_collapsible(&pair_star(&r, a, b).unwrap()).unwrap());
    }
}

fn named_facets(tl: &ToplexList) -> BTreeSet<BTreeSet<String>> {
    tl.toplexes()
        .iter()
        .map(|t| t.iter().map(|&v| tl.vertex_names()[v].clone()).collect())
        .collect()
}

#[test]
fn generator_toplex_files_round_trip() {
    for tl in [gen_sphere_cube(), gen_torus_grid(5, 6).unwrap()] {
        let parsed = parse_toplex_file(&write_toplex_file(&tl)).unwrap();
        assert_eq!(named_facets(&parsed), named_facets(&tl));
    }
}

/// The budget counts pairs of the input; pairs involving merged rows are new,
/// so the test count can exceed it.
#[test]
fn test_count_can_exceed_budget() {
    let r = Relation::from_text(
        "6 6\nv0 v1 v2 v3 v4 v6\ny0 y1 y2 y3 y4 y5\n0 5\n0 3 4\n1\n2 3 5\n2 4\n1 4\n",
    )
    .unwrap();
    let s = reduce(&r).stats;
    assert_eq!(
        (
            s.steps_applied,
            s.contractibility_tests,
            s.comparison_budget
        ),
        (2, 14, 13)
    );
}
