//! Relations from covers: rows are cover sets, columns are the distinct
//! membership patterns of the underlying elements.

use std::collections::BTreeMap;

use super::ToplexList;
use crate::error::{Error, Result};
use crate::relation::Relation;

/// Builds the witness relation of a named cover.
///
/// Each element contributes the set of cover members containing it; distinct
/// patterns become columns, and contained patterns are dropped. `K_R` is the
/// nerve of the cover restricted to intersections some element witnesses.
/// Columns are labelled `w0, w1, …` in order of their smallest witness.
pub fn witness_relation<S, E>(cover: &[(S, Vec<E>)]) -> Result<Relation>
where
    S: AsRef<str>,
    E: Ord,
{
    let mut patterns: BTreeMap<&E, Vec<usize>> = BTreeMap::new();
    for (i, (name, set)) in cover.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::Malformed(format!(
                "cover set `{}` is empty",
                name.as_ref()
            )));
        }
        for e in set {
            let p = patterns.entry(e).or_default();
            if p.last() != Some(&i) {
                p.push(i);
            }
        }
    }
    let names: Vec<String> = cover.iter().map(|(n, _)| n.as_ref().to_string()).collect();
    let tl = ToplexList::from_indexed(names.clone(), patterns.into_values().collect())?;
    // every cover set is non-empty, so no name was dropped
    debug_assert_eq!(tl.vertex_names(), &names[..]);
    let rows = crate::sets::transpose(tl.toplexes(), tl.n_vertices());
    Relation::new(
        names,
        (0..tl.len()).map(|j| format!("w{j}")).collect(),
        rows,
    )
}
