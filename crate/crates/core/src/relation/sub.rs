use super::Relation;
use crate::error::{Error, Result};

/// A relation restricted to a column subset, with empty rows dropped.
///
/// When the selected columns are `∪ R(x)` over a vertex set `A`, the Dowker
/// complex of the restriction is the union of the closed stars of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRelation {
    parent_rows: Vec<usize>,
    parent_cols: Vec<usize>,
    relation: Relation,
}

impl SubRelation {
    pub(super) fn new(parent: &Relation, cols: &[usize]) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::Precondition("empty column selection".into()));
        }
        let mut parent_cols = cols.to_vec();
        parent_cols.sort_unstable();
        parent_cols.dedup();
        if let Some(&c) = parent_cols.last().filter(|&&c| c >= parent.n_cols()) {
            return Err(Error::Precondition(format!(
                "column {c} out of range ({} columns)",
                parent.n_cols()
            )));
        }
        let mut parent_rows: Vec<usize> = parent_cols
            .iter()
            .flat_map(|&y| parent.col(y).iter().copied())
            .collect();
        parent_rows.sort_unstable();
        parent_rows.dedup();
        let relation = parent.select(&parent_rows, &parent_cols);
        Ok(Self {
            parent_rows,
            parent_cols,
            relation,
        })
    }

    /// Parent row index of each local row.
    pub fn parent_rows(&self) -> &[usize] {
        &self.parent_rows
    }

    /// Parent column index of each local column.
    pub fn parent_cols(&self) -> &[usize] {
        &self.parent_cols
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn into_relation(self) -> Relation {
        self.relation
    }
}

#[cfg(test)]
mod tests {
    use crate::fixtures::{example_m_r, example_m_r_st};
    use crate::sets;

    #[test]
    fn union_of_stars_matches_example() {
        let r = example_m_r();
        let cols = sets::union(r.row(2), r.row(3));
        let sub = r.restrict_to_columns(&cols).unwrap();
        assert_eq!(sub.relation().to_dense(), example_m_r_st().to_dense());
        assert_eq!(sub.parent_cols(), &[1, 2, 3, 4]);
        assert_eq!(sub.parent_rows(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn local_incidence_is_parent_restriction() {
        let r = example_m_r();
        let sub = r.restrict_to_columns(&[4, 0]).unwrap();
        let local = sub.relation();
        for (li, &pi) in sub.parent_rows().iter().enumerate() {
            for (lj, &pj) in sub.parent_cols().iter().enumerate() {
                assert_eq!(local.contains(li, lj), r.contains(pi, pj));
            }
            assert!(!local.row(li).is_empty());
        }
    }
}
