//! Toplex lists and the formats and constructions that produce them.
//!
//! A [`ToplexList`] is the interchange value between parsers, generators,
//! the relation builder and the homology oracle.

mod generators;
mod off;
mod toplex_file;
mod witness;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::sets::{self, Fate};

pub use generators::{gen_simplex_boundary, gen_sphere_cube, gen_sphere_uv, gen_torus_grid};
pub use off::{parse_off, write_off};
pub use toplex_file::{parse_toplex_file, write_toplex_file};
pub use witness::witness_relation;

/// Maximal simplices over named vertices.
///
/// Toplexes are ascending vertex-index lists. No toplex is empty and none is
/// contained in another; construction removes duplicates (keeping the first)
/// and strictly contained toplexes, preserving the order of the rest.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ToplexList {
    vertex_names: Vec<String>,
    toplexes: Vec<Vec<usize>>,
}

impl ToplexList {
    /// Builds from index lists over `vertex_names`. Names that no toplex uses
    /// are dropped.
    pub fn from_indexed(vertex_names: Vec<String>, toplexes: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertex_names.len();
        let mut toplexes = toplexes;
        for (k, t) in toplexes.iter_mut().enumerate() {
            if t.is_empty() {
                return Err(Error::Malformed(format!("toplex {k} is empty")));
            }
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Malformed(format!("toplex {k} repeats a vertex")));
            }
            if t[t.len() - 1] >= n {
                return Err(Error::Malformed(format!(
                    "toplex {k} references vertex {} of {n}",
                    t[t.len() - 1]
                )));
            }
        }
        let mut used = vec![false; n];
        toplexes.iter().flatten().for_each(|&v| used[v] = true);
        let (vertex_names, toplexes) = if used.iter().all(|&u| u) {
            (vertex_names, toplexes)
        } else {
            let mut remap = vec![usize::MAX; n];
            let mut names = Vec::new();
            for (v, name) in vertex_names.into_iter().enumerate() {
                if used[v] {
                    remap[v] = names.len();
                    names.push(name);
                }
            }
            let toplexes = toplexes
                .into_iter()
                .map(|t| t.into_iter().map(|v| remap[v]).collect())
                .collect();
            (names, toplexes)
        };
        let members = sets::transpose(&toplexes, vertex_names.len());
        let fate = sets::maximal_filter(&toplexes, &members, None);
        let toplexes = toplexes
            .into_iter()
            .zip(fate)
            .filter(|(_, f)| *f == Fate::Kept)
            .map(|(t, _)| t)
            .collect();
        let mut seen = HashMap::with_capacity(vertex_names.len());
        for name in &vertex_names {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self {
            vertex_names,
            toplexes,
        })
    }

    /// Builds from toplexes given by vertex name. Vertices are indexed in
    /// order of first appearance.
    pub fn from_names<I, T, S>(toplexes: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut names = Vec::new();
        let mut indexed = Vec::new();
        for t in toplexes {
            let mut ids = Vec::new();
            for name in t {
                let name = name.as_ref();
                let id = *index.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                });
                ids.push(id);
            }
            indexed.push(ids);
        }
        Self::from_indexed(names, indexed)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn toplexes(&self) -> &[Vec<usize>] {
        &self.toplexes
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn len(&self) -> usize {
        self.toplexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.toplexes.is_empty()
    }

    /// Dimension of the largest toplex, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.toplexes.iter().map(|t| t.len() - 1).max()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }
}
