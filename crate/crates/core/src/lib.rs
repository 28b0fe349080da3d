//! Combinatorial second homotopy of abstract simplicial complexes.
//!
//! The central object is the face sphere: a simplicial map
//! `(I_m x I_n, boundary) -> (X, x0)` stored as a grid of vertex labels with
//! the rectangle's boundary pinned to the basepoint.  Face spheres form an
//! abelian group under the block-diagonal product, up to the equivalence
//! generated by row/column duplication and single-entry spider rewrites.
//! This crate provides:
//!
//! - complexes and membership tests ([`complex`]);
//! - simplicial maps, contiguity, and interval collapses ([`maps`]);
//! - face spheres and their operations ([`sphere`]);
//! - the move system, certificates, and canonical forms ([`moves`]);
//! - proof-derived certificates for the group laws ([`certificates`]);
//! - a bounded bidirectional certificate search ([`search`]);
//! - the degree invariant over oriented closed surfaces ([`degree`]);
//! - the triangulated-grid bridge and digitization ([`bridge`]);
//! - edge loops, the one-dimensional analogue ([`loops`]).
//!
//! Everything is `no_std` (with `alloc`), exact integer arithmetic, and
//! deterministic.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bridge;
pub mod certificates;
pub mod complex;
pub mod degree;
pub mod grid;
pub mod loops;
pub mod maps;
pub mod moves;
pub mod search;
pub mod sphere;

pub use complex::{
    boundary_contains, build_explicit, cartesian_grid, categorical_product, clique_complex,
    grid_product, interval, octahedron, ComplexError, PointedComplex, Simplex, SimplicialComplex,
    VertexId,
};
pub use grid::LabelGrid;
pub use loops::{concat, EdgeLoop, LoopError, LoopMove};
pub use maps::{
    collapse, collapse_pow, collapse_seq, compose, is_contiguous as maps_contiguous, pair_map,
    product_map, projection, MapError, SimplicialMap, Translation,
};
pub use moves::{
    apply_move, contiguity_to_spiders, legal_moves, normalize, normalize_with_moves, Move,
    MoveCertificate, MoveError,
};
pub use search::{loop_search, search_equivalence, LoopCertificate, SearchBudget, SearchOutcome};
pub use sphere::FaceSphere;
