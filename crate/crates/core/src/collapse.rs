//! Strong collapses on relations.
//!
//! A row `x1` is dominated when `R(x1) ⊆ R(x2)` for another row `x2`;
//! removing it leaves `L_R` unchanged, so `|K_R|` keeps its homotopy type.
//! Columns are handled through the same test on `R⁻¹`. Equal rows (or
//! columns) count as dominated only by a lower-indexed twin, so exactly one
//! copy survives.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::sets;

/// Returns the dominator of `x`, if any.
fn dominator(lines: &[Vec<usize>], transposed: &[Vec<usize>], x: usize) -> Option<usize> {
    let set = &lines[x];
    // Every dominator shares the rarest entry of `set`.
    let pivot = set.iter().copied().min_by_key(|&y| transposed[y].len())?;
    transposed[pivot].iter().copied().find(|&k| {
        k != x && sets::is_subset(set, &lines[k]) && (lines[k].len() > set.len() || k < x)
    })
}

/// First dominated row in ascending order, with its lowest dominator.
pub fn find_dominated_row(r: &Relation) -> Option<(usize, usize)> {
    (0..r.n_rows()).find_map(|x| dominator(r.rows(), r.cols(), x).map(|d| (x, d)))
}

/// First dominated column in ascending order, with its lowest dominator.
pub fn find_dominated_column(r: &Relation) -> Option<(usize, usize)> {
    (0..r.n_cols()).find_map(|y| dominator(r.cols(), r.rows(), y).map(|d| (y, d)))
}

fn dominated_rows(r: &Relation) -> Vec<usize> {
    (0..r.n_rows())
        .filter(|&x| dominator(r.rows(), r.cols(), x).is_some())
        .collect()
}

fn dominated_cols(r: &Relation) -> Vec<usize> {
    (0..r.n_cols())
        .filter(|&y| dominator(r.cols(), r.rows(), y).is_some())
        .collect()
}

/// Removes dominated rows, then dominated columns, until neither exists.
///
/// Within a phase, row sets do not change as rows disappear, and a row
/// dominated by a removed row is still dominated by that row's surviving
/// dominator. One scan therefore exhausts the phase and gives the same
/// result as restarting after every removal.
pub fn collapse_core(r: &Relation) -> Relation {
    let mut cur = r.clone();
    loop {
        let rows = dominated_rows(&cur);
        if !rows.is_empty() {
            cur = cur.remove_row_indices(&rows);
        }
        let cols = dominated_cols(&cur);
        if !cols.is_empty() {
            cur = cur.remove_col_indices(&cols);
        }
        if rows.is_empty() && cols.is_empty() {
            return cur;
        }
    }
}

/// True iff the core is a single vertex. `true` certifies that `K_R` is
/// contractible; `false` is inconclusive.
pub fn is_strong_collapsible(r: &Relation) -> Result<bool> {
    if r.is_empty() {
        return Err(Error::Precondition(
            "strong collapsibility of an empty relation".into(),
        ));
    }
    Ok(collapse_core(r).shape() == (1, 1))
}
