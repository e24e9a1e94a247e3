//! Reduction of simplicial complexes stored as vertex–toplex relations.
//!
//! A complex `K` is held as a binary relation `R ⊂ X × Y` between its
//! vertices and its toplexes, so that `K` is the Dowker complex `K_R`. The
//! [`reducer`] repeatedly glues a cone over the union of two vertex stars and
//! strong-collapses the two vertices away, which preserves homotopy type
//! whenever that union is contractible. Contractibility is certified by
//! strong collapsibility ([`collapse`]); an independent GF(2) [`homology`]
//! oracle checks that Betti numbers survive.
//!
//! ```
//! use dowker::{complex_io, homology, reducer, Relation};
//!
//! let torus = complex_io::gen_torus_grid(4, 4).unwrap();
//! let r = Relation::from_toplexes(&torus);
//! let out = reducer::reduce(&r);
//! assert!(out.relation.n_rows() < 16);
//! let betti = homology::betti_gf2(&out.relation.to_toplexes(), 2).unwrap();
//! assert_eq!(betti, vec![1, 2, 1]);
//! ```

pub mod cli;
pub mod collapse;
pub mod complex_io;
pub mod error;
pub mod homology;
pub mod reducer;
pub mod relation;
mod sets;

#[cfg(test)]
mod fixtures;

pub use complex_io::ToplexList;
pub use error::{Error, Result};
pub use relation::{Relation, SubRelation};
