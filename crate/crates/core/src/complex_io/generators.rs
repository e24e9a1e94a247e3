//! Closed-surface fixtures: cube sphere, latitude/longitude sphere, grid
//! torus, and simplex boundaries.

use super::ToplexList;
use crate::error::{Error, Result};

fn named(n: usize, toplexes: Vec<Vec<usize>>) -> ToplexList {
    ToplexList::from_indexed((0..n).map(|v| format!("v{v}")).collect(), toplexes)
        .expect("generated toplexes are well formed")
}

/// Cube surface, each square split along a diagonal: 8 vertices, 12 triangles.
pub fn gen_sphere_cube() -> ToplexList {
    // vertex = 4x + 2y + z for the unit cube corners
    let squares = [
        [0, 1, 3, 2], // x = 0
        [4, 6, 7, 5], // x = 1
        [0, 4, 5, 1], // y = 0
        [2, 3, 7, 6], // y = 1
        [0, 2, 6, 4], // z = 0
        [1, 5, 7, 3], // z = 1
    ];
    let toplexes = squares
        .iter()
        .flat_map(|&[a, b, c, d]| [vec![a, b, c], vec![a, c, d]])
        .collect();
    named(8, toplexes)
}

/// Latitude/longitude sphere: two poles plus `stacks - 1` rings of `slices`
/// vertices; `slices·(stacks−1)+2` vertices and `2·slices·(stacks−1)`
/// triangles.
pub fn gen_sphere_uv(slices: usize, stacks: usize) -> Result<ToplexList> {
    if slices < 3 || stacks < 3 {
        return Err(Error::Precondition(format!(
            "sphere-uv needs slices ≥ 3 and stacks ≥ 3, got {slices}, {stacks}"
        )));
    }
    let rings = stacks - 1;
    let north = 0;
    let south = slices * rings + 1;
    let at = |ring: usize, s: usize| 1 + ring * slices + s % slices;
    let mut toplexes = Vec::with_capacity(2 * slices * rings);
    for s in 0..slices {
        toplexes.push(vec![north, at(0, s), at(0, s + 1)]);
    }
    for ring in 0..rings - 1 {
        for s in 0..slices {
            let (a, b) = (at(ring, s), at(ring, s + 1));
            let (c, d) = (at(ring + 1, s), at(ring + 1, s + 1));
            toplexes.push(vec![a, c, d]);
            toplexes.push(vec![a, d, b]);
        }
    }
    for s in 0..slices {
        toplexes.push(vec![south, at(rings - 1, s + 1), at(rings - 1, s)]);
    }
    Ok(named(south + 1, toplexes))
}

/// `m × n` vertex grid with wraparound, each cell split along a diagonal:
/// `mn` vertices and `2mn` triangles.
pub fn gen_torus_grid(m: usize, n: usize) -> Result<ToplexList> {
    if m < 3 || n < 3 {
        return Err(Error::Precondition(format!(
            "torus needs m ≥ 3 and n ≥ 3, got {m}, {n}"
        )));
    }
    let at = |i: usize, j: usize| (i % m) * n + j % n;
    let mut toplexes = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            let (a, b, c, d) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            toplexes.push(vec![a, b, c]);
            toplexes.push(vec![a, c, d]);
        }
    }
    Ok(named(m * n, toplexes))
}

/// The `n + 2` facets of the boundary of the `(n+1)`-simplex.
pub fn gen_simplex_boundary(n: usize) -> ToplexList {
    let k = n + 2;
    let toplexes = (0..k)
        .map(|skip| (0..k).filter(|&v| v != skip).collect())
        .collect();
    named(k, toplexes)
}
