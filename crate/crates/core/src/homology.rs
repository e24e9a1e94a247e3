//! Simplicial homology over GF(2).
//!
//! This is an oracle: it expands toplexes into every simplex and reduces the
//! boundary matrices, so it is only used to certify reductions, never to
//! drive them.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::complex_io::ToplexList;
use crate::error::{Error, Result};
use crate::sets;

pub const DEFAULT_SIZE_CAP: usize = 5_000_000;

/// Sparse GF(2) matrix stored by column; each column is an ascending list of
/// row indices holding a one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Gf2Matrix {
    n_rows: usize,
    columns: Vec<Vec<usize>>,
}

impl Gf2Matrix {
    pub fn new(n_rows: usize, mut columns: Vec<Vec<usize>>) -> Self {
        for c in &mut columns {
            c.sort_unstable();
            // pairs cancel over GF(2)
            let mut out: Vec<usize> = Vec::with_capacity(c.len());
            for &r in c.iter() {
                assert!(r < n_rows, "row {r} out of range");
                if out.last() == Some(&r) {
                    out.pop();
                } else {
                    out.push(r);
                }
            }
            *c = out;
        }
        Self { n_rows, columns }
    }

    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let n_cols = rows.first().map_or(0, Vec::len);
        let columns = (0..n_cols)
            .map(|j| (0..rows.len()).filter(|&i| rows[i][j] & 1 == 1).collect())
            .collect();
        Self {
            n_rows: rows.len(),
            columns,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn transpose(&self) -> Self {
        Self {
            n_rows: self.columns.len(),
            columns: sets::transpose(&self.columns, self.n_rows),
        }
    }

    /// `self · other` over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Self {
        assert_eq!(self.n_cols(), other.n_rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .fold(Vec::new(), |acc, &k| sets::xor(&acc, &self.columns[k]))
            })
            .collect();
        Self {
            n_rows: self.n_rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Rank over GF(2) by column reduction on the lowest one of each column.
pub fn rank_gf2(m: &Gf2Matrix) -> usize {
    let mut pivot_of: Vec<Option<usize>> = vec![None; m.n_rows];
    let mut reduced: Vec<Vec<usize>> = Vec::with_capacity(m.columns.len());
    let mut rank = 0;
    for col in &m.columns {
        let mut col = col.clone();
        while let Some(&low) = col.last() {
            match pivot_of[low] {
                Some(k) => col = sets::xor(&col, &reduced[k]),
                None => {
                    pivot_of[low] = Some(reduced.len());
                    rank += 1;
                    break;
                }
            }
        }
        reduced.push(col);
    }
    rank
}

/// Every simplex of a complex up to some dimension, with boundary maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexGF2 {
    /// `simplices_by_dim[k]`: sorted list of k-simplices as ascending
    /// vertex-index tuples.
    pub simplices_by_dim: Vec<Vec<Vec<usize>>>,
    /// `boundary[k]` is ∂_k from k-chains to (k−1)-chains; `boundary[0]` is
    /// the zero map on vertices.
    pub boundary: Vec<Gf2Matrix>,
}

impl ChainComplexGF2 {
    pub fn count(&self, k: usize) -> usize {
        self.simplices_by_dim.get(k).map_or(0, Vec::len)
    }

    pub fn top_dim(&self) -> usize {
        self.simplices_by_dim.len().saturating_sub(1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices_by_dim
            .iter()
            .enumerate()
            .map(|(k, s)| {
                if k % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }
}

/// Expands toplexes into all simplices of dimension ≤ `max_dim + 1`.
pub fn enumerate_simplices(toplexes: &ToplexList, max_dim: usize) -> Result<ChainComplexGF2> {
    enumerate_simplices_capped(toplexes, max_dim, DEFAULT_SIZE_CAP)
}

pub fn enumerate_simplices_capped(
    toplexes: &ToplexList,
    max_dim: usize,
    cap: usize,
) -> Result<ChainComplexGF2> {
    let top = match toplexes.dimension() {
        Some(d) => d.min(max_dim + 1),
        None => {
            return Ok(ChainComplexGF2 {
                simplices_by_dim: Vec::new(),
                boundary: Vec::new(),
            })
        }
    };
    let mut total = 0usize;
    let mut simplices_by_dim = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut layer: HashSet<Vec<usize>> = HashSet::new();
        for t in toplexes.toplexes() {
            if t.len() < k + 1 {
                continue;
            }
            for s in t.iter().copied().combinations(k + 1) {
                if layer.insert(s) && total + layer.len() > cap {
                    return Err(Error::SizeCap { cap });
                }
            }
        }
        total += layer.len();
        let mut layer: Vec<Vec<usize>> = layer.into_iter().collect();
        layer.sort_unstable();
        simplices_by_dim.push(layer);
    }

    let mut boundary = vec![Gf2Matrix::new(
        0,
        vec![Vec::new(); simplices_by_dim[0].len()],
    )];
    for k in 1..=top {
        let index: HashMap<&[usize], usize> = simplices_by_dim[k - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let columns = simplices_by_dim[k]
            .iter()
            .map(|s| {
                let mut col: Vec<usize> = (0..s.len())
                    .map(|drop| {
                        let face: Vec<usize> = s
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        index[face.as_slice()]
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        boundary.push(Gf2Matrix {
            n_rows: simplices_by_dim[k - 1].len(),
            columns,
        });
    }
    Ok(ChainComplexGF2 {
        simplices_by_dim,
        boundary,
    })
}

/// `β_k = dim ker ∂_k − rank ∂_{k+1}` for `0 ≤ k ≤ max_dim`.
pub fn betti_gf2(toplexes: &ToplexList, max_dim: usize) -> Result<Vec<usize>> {
    betti_gf2_capped(toplexes, max_dim, DEFAULT_SIZE_CAP)
}

pub fn betti_gf2_capped(toplexes: &ToplexList, max_dim: usize, cap: usize) -> Result<Vec<usize>> {
    let cc = enumerate_simplices_capped(toplexes, max_dim, cap)?;
    Ok(betti_of(&cc, max_dim))
}

/// Betti numbers of an already enumerated chain complex.
pub fn betti_of(cc: &ChainComplexGF2, max_dim: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=max_dim + 1)
        .map(|k| cc.boundary.get(k).map_or(0, rank_gf2))
        .collect();
    (0..=max_dim)
        .map(|k| cc.count(k) - ranks[k] - ranks[k + 1])
        .collect()
}

/// Dimension of the largest toplex; 0 for the empty complex.
pub fn default_max_dim(toplexes: &ToplexList) -> usize {
    toplexes.dimension().unwrap_or(0)
}
