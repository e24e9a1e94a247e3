//! Sparse binary relations between vertices (rows) and toplexes (columns).
//!
//! A [`Relation`] `R ⊂ X × Y` is stored twice: each row keeps the ascending
//! list of its columns and each column keeps the ascending list of its rows.
//! Both directions are kept in sync by every constructor, so domination scans
//! over rows and clean-up scans over columns never need a transpose.
//!
//! Values are immutable: every mutation returns a fresh relation. Row and
//! column labels travel with the incidence through all operations.

mod sub;
mod text;

use std::collections::{HashMap, HashSet};

use crate::complex_io::ToplexList;
use crate::error::{Error, Result};
use crate::sets::{self, Fate};

pub use sub::SubRelation;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Relation {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

/// Columns removed by a clean-up pass, as indices into the input relation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColumnCleanup {
    /// Columns strictly contained in a surviving column.
    pub faces: Vec<usize>,
    /// Columns equal to a lower-indexed column.
    pub duplicates: Vec<usize>,
}

impl ColumnCleanup {
    pub fn removed(&self) -> usize {
        self.faces.len() + self.duplicates.len()
    }
}

impl Relation {
    /// Builds a relation from per-row column lists.
    ///
    /// Row lists are sorted and deduplicated. Every row and every column must
    /// carry at least one incidence and all labels must be unique.
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if rows.len() != row_labels.len() {
            return Err(Error::Malformed(format!(
                "{} row labels for {} rows",
                row_labels.len(),
                rows.len()
            )));
        }
        check_unique(&row_labels)?;
        check_unique(&col_labels)?;
        let n_cols = col_labels.len();
        let mut rows = rows;
        for (i, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            if row.is_empty() {
                return Err(Error::Malformed(format!(
                    "row `{}` has no incidence",
                    row_labels[i]
                )));
            }
            if let Some(&c) = row.last().filter(|&&c| c >= n_cols) {
                return Err(Error::Malformed(format!(
                    "row `{}` references column {c} of {n_cols}",
                    row_labels[i]
                )));
            }
        }
        let rel = Self::from_rows_unchecked(row_labels, col_labels, rows);
        if let Some(j) = rel.cols.iter().position(Vec::is_empty) {
            return Err(Error::Malformed(format!(
                "column `{}` has no incidence",
                rel.col_labels[j]
            )));
        }
        Ok(rel)
    }

    /// Builds a relation from a dense 0/1 matrix given row by row.
    pub fn from_dense(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        matrix: &[Vec<u8>],
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(matrix.len());
        for (i, line) in matrix.iter().enumerate() {
            if line.len() != col_labels.len() {
                return Err(Error::Malformed(format!(
                    "dense row {i} has {} entries, expected {}",
                    line.len(),
                    col_labels.len()
                )));
            }
            rows.push(
                line.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, _)| j)
                    .collect(),
            );
        }
        Self::new(row_labels, col_labels, rows)
    }

    /// Rows must already be sorted and in range.
    pub(crate) fn from_rows_unchecked(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Self {
        let cols = sets::transpose(&rows, col_labels.len());
        Self {
            row_labels,
            col_labels,
            rows,
            cols,
        }
    }

    /// The relation `x R y ⇔ x ∈ y` between vertices and toplexes.
    ///
    /// Contained and duplicate toplexes are already gone from a
    /// [`ToplexList`], so the result is column irreducible. Columns are
    /// labelled `y0, y1, …` in toplex order.
    pub fn from_toplexes(toplexes: &ToplexList) -> Self {
        let row_labels = toplexes.vertex_names().to_vec();
        let col_labels = (0..toplexes.len()).map(|j| format!("y{j}")).collect();
        let cols: Vec<Vec<usize>> = toplexes.toplexes().to_vec();
        let rows = sets::transpose(&cols, row_labels.len());
        Self {
            row_labels,
            col_labels,
            rows,
            cols,
        }
    }

    /// The toplexes of the Dowker complex `K_R`, named by row label.
    pub fn to_toplexes(&self) -> ToplexList {
        ToplexList::from_indexed(self.row_labels.clone(), self.cols.clone())
            .expect("relation columns are non-empty")
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n_rows(), self.n_cols())
    }

    /// `R(x)`: the columns incident to row `x`.
    pub fn row(&self, x: usize) -> &[usize] {
        &self.rows[x]
    }

    /// `R⁻¹(y)`: the rows incident to column `y`.
    pub fn col(&self, y: usize) -> &[usize] {
        &self.cols[y]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn row_label(&self, x: usize) -> &str {
        &self.row_labels[x]
    }

    pub fn col_label(&self, y: usize) -> &str {
        &self.col_labels[y]
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].binary_search(&y).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| {
                let mut line = vec![0u8; self.n_cols()];
                for &y in row {
                    line[y] = 1;
                }
                line
            })
            .collect()
    }

    /// Vertices of the closed star of `x`: every row sharing a column with it,
    /// `x` included. Ascending.
    pub fn star_vertices(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.rows[x]
            .iter()
            .flat_map(|&y| self.cols[y].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Vertices of `St̄(St̄(x))`, `x` included. Ascending.
    pub fn two_hop_vertices(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n_rows()];
        let mut out = Vec::new();
        for v in self.star_vertices(x) {
            for &y in &self.rows[v] {
                for &w in &self.cols[y] {
                    if !seen[w] {
                        seen[w] = true;
                        out.push(w);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Restricts to the given columns, dropping rows left without incidence.
    pub fn restrict_to_columns(&self, cols: &[usize]) -> Result<SubRelation> {
        SubRelation::new(self, cols)
    }

    /// Appends a row with the given incidence.
    pub fn add_row(&self, label: &str, cols: &[usize]) -> Result<Self> {
        if self.row_index(label).is_some() {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        if cols.is_empty() {
            return Err(Error::Precondition(format!(
                "row `{label}` would have no incidence"
            )));
        }
        let mut new_row = cols.to_vec();
        new_row.sort_unstable();
        new_row.dedup();
        if let Some(&c) = new_row.last().filter(|&&c| c >= self.n_cols()) {
            return Err(Error::Precondition(format!(
                "column {c} out of range ({} columns)",
                self.n_cols()
            )));
        }
        let z = self.n_rows();
        let mut out = self.clone();
        for &y in &new_row {
            out.cols[y].push(z);
        }
        out.rows.push(new_row);
        out.row_labels.push(label.to_string());
        Ok(out)
    }

    /// Removes rows by label. Columns left without incidence go too.
    pub fn remove_rows<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        let index: HashMap<&str, usize> = self
            .row_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut idx = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            idx.push(
                *index
                    .get(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))?,
            );
        }
        Ok(self.remove_row_indices(&idx))
    }

    /// Index form of [`Relation::remove_rows`]. Out-of-range indices panic.
    pub fn remove_row_indices(&self, idx: &[usize]) -> Self {
        let mut drop = vec![false; self.n_rows()];
        for &i in idx {
            drop[i] = true;
        }
        let keep_rows: Vec<usize> = (0..self.n_rows()).filter(|&i| !drop[i]).collect();
        // A column survives if some kept row still touches it.
        let mut col_alive = vec![false; self.n_cols()];
        for &i in &keep_rows {
            for &y in &self.rows[i] {
                col_alive[y] = true;
            }
        }
        let keep_cols: Vec<usize> = (0..self.n_cols()).filter(|&j| col_alive[j]).collect();
        self.select(&keep_rows, &keep_cols)
    }

    /// Removes columns by index. Rows are kept even if emptied; callers only
    /// remove columns contained in surviving ones.
    pub(crate) fn remove_col_indices(&self, idx: &[usize]) -> Self {
        let mut drop = vec![false; self.n_cols()];
        for &j in idx {
            drop[j] = true;
        }
        let keep_cols: Vec<usize> = (0..self.n_cols()).filter(|&j| !drop[j]).collect();
        let keep_rows: Vec<usize> = (0..self.n_rows()).collect();
        self.select(&keep_rows, &keep_cols)
    }

    /// The submatrix on ascending `keep_rows × keep_cols`, re-indexed.
    pub(crate) fn select(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Self {
        const GONE: usize = usize::MAX;
        let mut col_map = vec![GONE; self.n_cols()];
        for (new, &old) in keep_cols.iter().enumerate() {
            col_map[old] = new;
        }
        let rows: Vec<Vec<usize>> = keep_rows
            .iter()
            .map(|&i| {
                self.rows[i]
                    .iter()
                    .map(|&y| col_map[y])
                    .filter(|&y| y != GONE)
                    .collect()
            })
            .collect();
        Self::from_rows_unchecked(
            keep_rows
                .iter()
                .map(|&i| self.row_labels[i].clone())
                .collect(),
            keep_cols
                .iter()
                .map(|&j| self.col_labels[j].clone())
                .collect(),
            rows,
        )
    }

    pub fn transpose(&self) -> Self {
        Self {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    /// Drops every column whose row set is contained in another's.
    ///
    /// With `restrict_to`, only pairs of columns that both lie in the given
    /// set are compared. Exact duplicates keep the lower-indexed column.
    pub fn make_column_irreducible(&self, restrict_to: Option<&[usize]>) -> Self {
        self.clean_columns(restrict_to).0
    }

    /// [`Relation::make_column_irreducible`], also reporting what was removed.
    pub fn clean_columns(&self, restrict_to: Option<&[usize]>) -> (Self, ColumnCleanup) {
        let fate = sets::maximal_filter(&self.cols, &self.rows, restrict_to);
        let mut cleanup = ColumnCleanup::default();
        for (j, f) in fate.iter().enumerate() {
            match f {
                Fate::Kept => {}
                Fate::Face => cleanup.faces.push(j),
                Fate::Duplicate => cleanup.duplicates.push(j),
            }
        }
        if cleanup.removed() == 0 {
            return (self.clone(), cleanup);
        }
        let mut removed: Vec<usize> = cleanup
            .faces
            .iter()
            .chain(&cleanup.duplicates)
            .copied()
            .collect();
        removed.sort_unstable();
        (self.remove_col_indices(&removed), cleanup)
    }

    /// True when no column's row set is contained in another's.
    pub fn is_column_irreducible(&self) -> bool {
        sets::maximal_filter(&self.cols, &self.rows, None)
            .iter()
            .all(|f| *f == Fate::Kept)
    }

    /// Renders the relation in the line-oriented text format.
    pub fn to_text(&self) -> Result<String> {
        text::write(self)
    }

    /// Parses the line-oriented text format.
    pub fn from_text(input: &str) -> Result<Self> {
        text::parse(input)
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
