//! Pair reduction by coning and strong collapse.
//!
//! For two rows `xi`, `xj` whose union of closed stars `L` is strong
//! collapsible, a new row `z` with `R(z) = R(xi) ∪ R(xj)` glues the cone
//! `z * L` onto the complex without changing its homotopy type. `z` then
//! dominates `xi` and `xj`, which are removed. Columns of `R(z)` may have
//! become duplicates or faces of each other and are cleaned up; columns
//! outside `R(z)` cannot have.
//!
//! [`reduce`] applies this step in a single pass over the rows.

use std::fmt;

use serde::Serialize;

use crate::collapse::is_strong_collapsible;
use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::sets;

/// Bookkeeping for one reduction step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    /// Labels of the two merged rows, cursor row first.
    pub pair: (String, String),
    pub z_label: String,
    pub cols_before: usize,
    pub cols_after: usize,
    /// Columns dropped because they became a face of another column.
    pub faces_absorbed: usize,
    /// Columns dropped because they became equal to another column.
    pub duplicates_merged: usize,
    /// Vertex count of `St̄(z)` after the step, `z` included.
    pub delta_z: usize,
    /// Toplex count of `St̄(z)` after the step.
    pub epsilon_z: usize,
}

impl StepReport {
    /// The step-log line for the `n`-th step.
    pub fn log_line(&self, n: usize) -> String {
        format!(
            "STEP {n}: merge {} {} -> {} cols {}->{} dup {} face {}",
            self.pair.0,
            self.pair.1,
            self.z_label,
            self.cols_before,
            self.cols_after,
            self.duplicates_merged,
            self.faces_absorbed
        )
    }
}

/// One strong-collapsibility test of a candidate pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTest {
    pub left: String,
    pub right: String,
    pub collapsible: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub steps_applied: usize,
    pub contractibility_tests: usize,
    /// Number of distinct pair subcomplexes of the input.
    pub comparison_budget: usize,
    pub delta_max_seen: usize,
    pub epsilon_max_seen: usize,
    /// `(δ_max, ε_max)` over live rows: initial value, then after each step.
    pub max_history: Vec<(usize, usize)>,
    pub rows_before: usize,
    pub cols_before: usize,
    pub rows_after: usize,
    pub cols_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub relation: Relation,
    pub stats: ReductionStats,
    pub steps: Vec<StepReport>,
    /// Every pair test in the order performed.
    pub tests: Vec<PairTest>,
}

impl fmt::Display for ReductionStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} -> {}x{} in {} steps, {} tests (budget {})",
            self.rows_before,
            self.cols_before,
            self.rows_after,
            self.cols_after,
            self.steps_applied,
            self.contractibility_tests,
            self.comparison_budget
        )
    }
}

/// `δ_x`: number of vertices of `St̄(x)`, `x` included.
pub fn delta(r: &Relation, x: usize) -> usize {
    r.star_vertices(x).len()
}

/// `ε_x`: number of toplexes of `St̄(x)`.
pub fn epsilon(r: &Relation, x: usize) -> usize {
    r.row(x).len()
}

fn max_star_sizes(r: &Relation) -> (usize, usize) {
    (0..r.n_rows()).fold((0, 0), |(d, e), x| {
        (d.max(delta(r, x)), e.max(epsilon(r, x)))
    })
}

/// `c = Σ (d_x − 1) / 2` where `d_x` counts the vertices of `St̄(St̄(x))`.
pub fn comparison_budget(r: &Relation) -> usize {
    let total: usize = (0..r.n_rows())
        .map(|x| r.two_hop_vertices(x).len() - 1)
        .sum();
    total / 2
}

/// Rows after `x` whose closed star meets `St̄(x)`.
///
/// Rows sharing a column with `x` come first, then rows two column-hops
/// away; ascending within each class.
pub fn candidate_vertices(r: &Relation, x: usize) -> Vec<usize> {
    let one_hop = r.star_vertices(x);
    let mut near = vec![false; r.n_rows()];
    for &v in &one_hop {
        near[v] = true;
    }
    let mut far = vec![false; r.n_rows()];
    for &v in &one_hop {
        for &y in r.row(v) {
            for &w in r.col(y) {
                if !near[w] {
                    far[w] = true;
                }
            }
        }
    }
    let first = one_hop.iter().copied().filter(|&v| v > x);
    let second = (x + 1..r.n_rows()).filter(|&w| far[w]);
    first.chain(second).collect()
}

/// The sub-relation whose Dowker complex is `St̄(xi) ∪ St̄(xj)`.
pub fn pair_star(r: &Relation, xi: usize, xj: usize) -> Result<Relation> {
    let cols = sets::union(r.row(xi), r.row(xj));
    Ok(r.restrict_to_columns(&cols)?.into_relation())
}

/// Merges rows `xi` and `xj` into a new last row `z_label`.
///
/// The caller must already know that `St̄(xi) ∪ St̄(xj)` is contractible
/// (e.g. by [`is_strong_collapsible`] on [`pair_star`]); otherwise the result
/// need not be homotopy equivalent to the input. Debug builds check Betti
/// numbers on inputs of at most 500 columns.
pub fn reduction_step(
    r: &Relation,
    xi: usize,
    xj: usize,
    z_label: &str,
) -> Result<(Relation, StepReport)> {
    if xi == xj {
        return Err(Error::Precondition("cannot merge a row with itself".into()));
    }
    if xi.max(xj) >= r.n_rows() {
        return Err(Error::Precondition(format!(
            "row {} out of range ({} rows)",
            xi.max(xj),
            r.n_rows()
        )));
    }
    let z_cols = sets::union(r.row(xi), r.row(xj));
    let coned = r.add_row(z_label, &z_cols)?;
    // every column of xi or xj now also holds z, so none is emptied
    let collapsed = coned.remove_row_indices(&[xi, xj]);
    let (out, cleanup) = collapsed.clean_columns(Some(&z_cols));
    let z = out.n_rows() - 1;
    let report = StepReport {
        pair: (r.row_label(xi).to_string(), r.row_label(xj).to_string()),
        z_label: z_label.to_string(),
        cols_before: r.n_cols(),
        cols_after: out.n_cols(),
        faces_absorbed: cleanup.faces.len(),
        duplicates_merged: cleanup.duplicates.len(),
        delta_z: delta(&out, z),
        epsilon_z: epsilon(&out, z),
    };
    #[cfg(debug_assertions)]
    debug_check_homology(r, &out);
    Ok((out, report))
}

#[cfg(debug_assertions)]
fn debug_check_homology(before: &Relation, after: &Relation) {
    use crate::homology::betti_gf2_capped;
    if before.n_cols() > 500 {
        return;
    }
    let before_tl = before.to_toplexes();
    let dim = before_tl.dimension().unwrap_or(0);
    let cap = 200_000;
    if let (Ok(b), Ok(a)) = (
        betti_gf2_capped(&before_tl, dim, cap),
        betti_gf2_capped(&after.to_toplexes(), dim, cap),
    ) {
        debug_assert_eq!(b, a, "reduction step changed Betti numbers");
    }
}

fn fresh_z_label(r: &Relation, counter: &mut usize) -> String {
    loop {
        let label = format!("z{counter}");
        *counter += 1;
        if r.row_index(&label).is_none() {
            return label;
        }
    }
}

/// Single-pass pair reduction.
///
/// A cursor walks the rows by position. For the cursor row, candidates from
/// [`candidate_vertices`] are tested in order; the first whose pair star is
/// strong collapsible is merged, the new row goes to the end, and the cursor
/// stays put (it now points at the next unprocessed row). When no candidate
/// passes, the cursor advances. Rows behind the cursor are never revisited.
///
/// The input must be column irreducible.
pub fn reduce(r: &Relation) -> Reduction {
    reduce_observed(r, |_, _, _| {})
}

/// [`reduce`], calling `observe(before, after, report)` after every step.
pub fn reduce_observed<F>(r: &Relation, mut observe: F) -> Reduction
where
    F: FnMut(&Relation, &Relation, &StepReport),
{
    let mut rel = r.clone();
    let mut stats = ReductionStats {
        comparison_budget: comparison_budget(r),
        rows_before: r.n_rows(),
        cols_before: r.n_cols(),
        ..Default::default()
    };
    let initial = max_star_sizes(&rel);
    stats.max_history.push(initial);
    stats.delta_max_seen = initial.0;
    stats.epsilon_max_seen = initial.1;
    let mut steps = Vec::new();
    let mut tests = Vec::new();
    let mut z_counter = 0;
    let mut cursor = 0;

    while cursor < rel.n_rows() {
        let mut merged = None;
        for xj in candidate_vertices(&rel, cursor) {
            let star = pair_star(&rel, cursor, xj).expect("candidate rows have columns");
            let collapsible = is_strong_collapsible(&star).expect("pair star is non-empty");
            tests.push(PairTest {
                left: rel.row_label(cursor).to_string(),
                right: rel.row_label(xj).to_string(),
                collapsible,
            });
            if collapsible {
                merged = Some(xj);
                break;
            }
        }
        match merged {
            Some(xj) => {
                let z = fresh_z_label(&rel, &mut z_counter);
                let (next, report) =
                    reduction_step(&rel, cursor, xj, &z).expect("valid merge of live rows");
                observe(&rel, &next, &report);
                rel = next;
                let sizes = max_star_sizes(&rel);
                stats.max_history.push(sizes);
                stats.delta_max_seen = stats.delta_max_seen.max(sizes.0);
                stats.epsilon_max_seen = stats.epsilon_max_seen.max(sizes.1);
                steps.push(report);
            }
            None => cursor += 1,
        }
    }

    stats.steps_applied = steps.len();
    stats.contractibility_tests = tests.len();
    stats.rows_after = rel.n_rows();
    stats.cols_after = rel.n_cols();
    Reduction {
        relation: rel,
        stats,
        steps,
        tests,
    }
}

/// Checks the star-size update rules of one step against counts recomputed
/// from scratch.
///
/// With `δ` counting star vertices (self included) and `ε` star toplexes:
/// - `z`: `δ_z = δ_i + δ_j − δ_{i∩j} − 1` (the union of the two stars loses
///   `xi`, `xj` and gains `z`) and
///   `ε_z = ε_i + ε_j − ε_{i∩j} − #faces − #same/2`;
/// - a row whose star holds both `xi` and `xj`: `δ − 1`, and `ε` minus the
///   removed columns that contained it;
/// - any other row: unchanged.
///
/// Also checks the report's own counts.
pub fn verify_step_equations(before: &Relation, after: &Relation, report: &StepReport) -> bool {
    let (Some(xi), Some(xj)) = (
        before.row_index(&report.pair.0),
        before.row_index(&report.pair.1),
    ) else {
        return false;
    };
    let Some(z) = after.row_index(&report.z_label) else {
        return false;
    };
    if after.n_rows() + 1 != before.n_rows()
        || report.cols_before != before.n_cols()
        || report.cols_after != after.n_cols()
        || report.faces_absorbed + report.duplicates_merged != before.n_cols() - after.n_cols()
    {
        return false;
    }

    let star_i = before.star_vertices(xi);
    let star_j = before.star_vertices(xj);
    let shared_vertices = sets::intersection_len(&star_i, &star_j);
    let shared_toplexes = sets::intersection_len(before.row(xi), before.row(xj));
    let removed = before.n_cols() - after.n_cols();

    let delta_z = star_i.len() + star_j.len() - shared_vertices - 1;
    let epsilon_z = before.row(xi).len() + before.row(xj).len()
        - shared_toplexes
        - report.faces_absorbed
        - report.duplicates_merged;
    if delta(after, z) != delta_z
        || epsilon(after, z) != epsilon_z
        || report.delta_z != delta_z
        || report.epsilon_z != epsilon_z
        || removed != report.faces_absorbed + report.duplicates_merged
    {
        return false;
    }

    let mut surviving_col = vec![false; before.n_cols()];
    for l in after.col_labels() {
        match before.col_index(l) {
            Some(j) => surviving_col[j] = true,
            None => return false,
        }
    }

    for k in (0..after.n_rows()).filter(|&k| k != z) {
        let Some(k_before) = before.row_index(after.row_label(k)) else {
            return false;
        };
        let star_k = before.star_vertices(k_before);
        let both = star_k.binary_search(&xi).is_ok() && star_k.binary_search(&xj).is_ok();
        let (d0, e0) = (star_k.len(), epsilon(before, k_before));
        let (d1, e1) = (delta(after, k), epsilon(after, k));
        let ok = if both {
            let removed_here = before
                .row(k_before)
                .iter()
                .filter(|&&y| !surviving_col[y])
                .count();
            d1 + 1 == d0 && e1 + removed_here == e0
        } else {
            d1 == d0 && e1 == e0
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_io::{gen_simplex_boundary, gen_sphere_cube, ToplexList};
    use crate::fixtures::{example_m_r, example_m_r_second};
    use crate::homology::betti_gf2;

    fn relation_of(toplexes: &[&[&str]]) -> Relation {
        Relation::from_toplexes(&ToplexList::from_names(toplexes.iter().map(|t| t.iter())).unwrap())
    }

    #[test]
    fn candidates_in_worked_example() {
        let r = example_m_r();
        // x3 is row 2: one-hop x4, x5 first, then x6
        assert_eq!(candidate_vertices(&r, 2), vec![3, 4, 5]);
        let x1 = candidate_vertices(&r, 0);
        assert_eq!(x1, vec![1, 2, 3, 4]);
    }

    #[test]
    fn candidates_of_isolated_vertex_and_simplex() {
        let r = relation_of(&[&["a"], &["b", "c"]]);
        assert!(candidate_vertices(&r, 0).is_empty());
        let s = relation_of(&[&["a", "b", "c", "d"]]);
        assert_eq!(candidate_vertices(&s, 0), vec![1, 2, 3]);
    }

    #[test]
    fn candidate_ordering_puts_one_hop_first() {
        // a - b - c - d path plus e adjacent to a; from b: one-hop {c} (> b),
        // two-hop {d} and e (via a)
        let r = relation_of(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "e"]]);
        let b = r.row_index("b").unwrap();
        let got: Vec<&str> = candidate_vertices(&r, b)
            .into_iter()
            .map(|k| r.row_label(k))
            .collect();
        assert_eq!(got, vec!["c", "d", "e"]);
    }

    #[test]
    fn worked_example_step() {
        let r = example_m_r();
        let (out, report) = reduction_step(&r, 2, 3, "z").unwrap();
        assert_eq!(out, example_m_r_second());
        assert_eq!((report.faces_absorbed, report.duplicates_merged), (0, 0));
        assert_eq!(report.delta_z, 5);
        assert_eq!(report.epsilon_z, 4);
        assert!(verify_step_equations(&r, &out, &report));
        // the un-reduced union of stars has 6 vertices: 5 + 5 − 4
        assert_eq!(pair_star(&r, 2, 3).unwrap().n_rows(), 6);
    }

    #[test]
    fn step_merging_duplicates() {
        let r = relation_of(&[&["x1", "a", "b"], &["x2", "a", "b"]]);
        let (x1, x2) = (r.row_index("x1").unwrap(), r.row_index("x2").unwrap());
        assert!(is_strong_collapsible(&pair_star(&r, x1, x2).unwrap()).unwrap());
        let (out, report) = reduction_step(&r, x1, x2, "z0").unwrap();
        assert_eq!(out.n_cols(), 1);
        assert_eq!(report.duplicates_merged, 1);
        assert_eq!(report.faces_absorbed, 0);
        assert_eq!(report.epsilon_z, 1);
        let mut col: Vec<&str> = out.col(0).iter().map(|&k| out.row_label(k)).collect();
        col.sort();
        assert_eq!(col, vec!["a", "b", "z0"]);
        assert!(verify_step_equations(&r, &out, &report));
    }

    #[test]
    fn step_without_absorption() {
        let r = relation_of(&[&["x1", "x2", "a"], &["a", "b"]]);
        let (x1, x2) = (r.row_index("x1").unwrap(), r.row_index("x2").unwrap());
        let (out, report) = reduction_step(&r, x1, x2, "z0").unwrap();
        assert_eq!((report.faces_absorbed, report.duplicates_merged), (0, 0));
        assert_eq!(out.n_cols(), 2);
        assert!(verify_step_equations(&r, &out, &report));
    }

    #[test]
    fn step_absorbing_a_face() {
        // {x1, x2, a} shrinks to {z, a}, a face of {x1, a, b} → {z, a, b}
        let r = relation_of(&[&["x1", "x2", "a"], &["x1", "a", "b"], &["x2", "c"]]);
        let (x1, x2) = (r.row_index("x1").unwrap(), r.row_index("x2").unwrap());
        assert!(is_strong_collapsible(&pair_star(&r, x1, x2).unwrap()).unwrap());
        let (out, report) = reduction_step(&r, x1, x2, "z").unwrap();
        assert_eq!(report.faces_absorbed, 1);
        assert_eq!(out.n_cols(), 2);
        assert!(verify_step_equations(&r, &out, &report));
    }

    #[test]
    fn step_errors() {
        let r = example_m_r();
        assert!(reduction_step(&r, 1, 1, "z").is_err());
        assert!(reduction_step(&r, 1, 9, "z").is_err());
        assert!(matches!(
            reduction_step(&r, 2, 3, "x1"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn untouched_rows_keep_their_stars() {
        let r = example_m_r();
        let (out, report) = reduction_step(&r, 2, 3, "z").unwrap();
        // x1's star holds x3 but not x4: the "otherwise" case
        let k = out.row_index("x1").unwrap();
        assert_eq!(delta(&out, k), delta(&r, 0));
        assert!(verify_step_equations(&r, &out, &report));
        let mut bad = report.clone();
        bad.delta_z += 1;
        assert!(!verify_step_equations(&r, &out, &bad));
    }

    #[test]
    fn reduce_cube_sphere() {
        let r = Relation::from_toplexes(&gen_sphere_cube());
        let red = reduce(&r);
        let betti = betti_gf2(&red.relation.to_toplexes(), 2).unwrap();
        assert_eq!(betti, vec![1, 0, 1]);
        assert!(red.stats.contractibility_tests <= red.stats.comparison_budget);
        assert_eq!(red.stats.rows_after, 8 - red.stats.steps_applied);
    }

    #[test]
    fn reduce_simplex_boundary_is_stuck() {
        let r = Relation::from_toplexes(&gen_simplex_boundary(2));
        let red = reduce(&r);
        assert_eq!(red.relation, r);
        assert_eq!(red.stats.steps_applied, 0);
        assert_eq!(red.stats.contractibility_tests, 6);
        assert_eq!(red.stats.comparison_budget, 6);
    }

    #[test]
    fn reduce_single_toplex_to_a_point() {
        let r = relation_of(&[&["a", "b", "c", "d", "e"]]);
        let red = reduce(&r);
        assert_eq!(red.relation.shape(), (1, 1));
        assert_eq!(red.stats.steps_applied, 4);
        let mut cur = r.clone();
        for step in &red.steps {
            let xi = cur.row_index(&step.pair.0).unwrap();
            let xj = cur.row_index(&step.pair.1).unwrap();
            let (next, _) = reduction_step(&cur, xi, xj, &step.z_label).unwrap();
            assert_eq!(
                betti_gf2(&next.to_toplexes(), 4).unwrap(),
                vec![1, 0, 0, 0, 0]
            );
            cur = next;
        }
        assert_eq!(cur, red.relation);
    }

    #[test]
    fn reduce_degenerate_inputs() {
        let empty = reduce(&Relation::default());
        assert_eq!(empty.stats.steps_applied, 0);
        let point = relation_of(&[&["p"]]);
        assert_eq!(reduce(&point).relation, point);
        // two components never merge across
        let two = relation_of(&[&["a"], &["b"]]);
        let red = reduce(&two);
        assert_eq!(red.relation, two);
        assert_eq!(red.stats.contractibility_tests, 0);
    }

    #[test]
    fn z_labels_skip_taken_names() {
        let r = relation_of(&[&["z0", "b"]]);
        let red = reduce(&r);
        assert_eq!(red.relation.row_labels(), &["z1"]);
    }

    #[test]
    fn log_line_format() {
        let r = example_m_r();
        let (_, report) = reduction_step(&r, 2, 3, "z0").unwrap();
        assert_eq!(
            report.log_line(1),
            "STEP 1: merge x3 x4 -> z0 cols 6->6 dup 0 face 0"
        );
    }
}
