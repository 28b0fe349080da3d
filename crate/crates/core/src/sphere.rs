//! Face spheres: simplicial maps `(I_m x I_n, boundary) -> (X, x0)` stored as
//! label grids.  The boundary of the rectangle is pinned to the basepoint and
//! every unit 2x2 block must map into a simplex of the target.
//!
//! Row 0 is the bottom row, matching the array-style pictures; serializers
//! emit the top row first.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{PointedComplex, VertexId};
use crate::grid::LabelGrid;
use crate::loops::EdgeLoop;
use crate::maps::collapse_seq_eval;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SphereError {
    /// A boundary entry differs from the basepoint.
    BoundaryViolation { i: usize, j: usize },
    /// The 2x2 block with lower-left corner `(i, j)` maps outside the target.
    SimplexViolation { i: usize, j: usize },
    /// A label is not a vertex of the target.
    UnknownVertex { i: usize, j: usize },
    /// Grid dimensions do not match.
    ShapeMismatch,
    /// The two spheres live over different pointed complexes.
    TargetMismatch,
    /// An index parameter is out of range.
    IndexError { index: usize, bound: usize },
    /// The patch block disagrees with the host on the patch boundary.
    PatchBoundaryMismatch { i: usize, j: usize },
}

impl fmt::Display for SphereError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereError::BoundaryViolation { i, j } => {
                write!(f, "boundary entry ({i},{j}) is not the basepoint")
            }
            SphereError::SimplexViolation { i, j } => {
                write!(f, "block at cell ({i},{j}) does not map into a simplex")
            }
            SphereError::UnknownVertex { i, j } => {
                write!(f, "label at ({i},{j}) is not a vertex of the target")
            }
            SphereError::ShapeMismatch => write!(f, "sphere sizes differ"),
            SphereError::TargetMismatch => write!(f, "spheres have different targets"),
            SphereError::IndexError { index, bound } => {
                write!(f, "index {index} out of range 0..={bound}")
            }
            SphereError::PatchBoundaryMismatch { i, j } => {
                write!(f, "patch block disagrees with host at ({i},{j})")
            }
        }
    }
}

/// A face sphere: an `(m+1) x (n+1)` grid of target vertices with basepoint
/// boundary, every unit block a simplex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceSphere {
    target: PointedComplex,
    grid: LabelGrid,
}

impl FaceSphere {
    /// Validates and wraps a grid.  Violations are reported for the first
    /// offending position in raster order (bottom-to-top, left-to-right);
    /// boundary and label checks run before block checks.
    pub fn from_grid(target: PointedComplex, grid: LabelGrid) -> Result<FaceSphere, SphereError> {
        validate_grid(&target, &grid)?;
        Ok(FaceSphere { target, grid })
    }

    /// Wraps a grid the caller has already proven valid (used by the move
    /// engine, which guarantees legality move by move).
    pub(crate) fn from_grid_unchecked(target: PointedComplex, grid: LabelGrid) -> FaceSphere {
        debug_assert!(validate_grid(&target, &grid).is_ok());
        FaceSphere { target, grid }
    }

    /// The all-basepoint sphere of size `m x n`.
    pub fn constant(target: &PointedComplex, m: usize, n: usize) -> FaceSphere {
        let grid = LabelGrid::filled(m + 1, n + 1, target.basepoint);
        FaceSphere { target: target.clone(), grid }
    }

    pub fn target(&self) -> &PointedComplex {
        &self.target
    }

    pub fn grid(&self) -> &LabelGrid {
        &self.grid
    }

    /// Number of columns minus one.
    pub fn m(&self) -> usize {
        self.grid.width() - 1
    }

    /// Number of rows minus one.
    pub fn n(&self) -> usize {
        self.grid.height() - 1
    }

    pub fn at(&self, i: usize, j: usize) -> VertexId {
        self.grid.at(i, j)
    }

    pub fn is_constant(&self) -> bool {
        self.grid.labels().iter().all(|v| *v == self.target.basepoint)
    }

    /// Trivial extension: pad with `r` extra columns and `s` extra rows of
    /// basepoint (repeats the last column/row).
    pub fn trivial_extension(&self, r: usize, s: usize) -> FaceSphere {
        self.extend(self.m(), r, self.n(), s).expect("last row/column always in range")
    }

    /// General doubling: repeat column `i` an extra `r` times and row `j` an
    /// extra `s` times (precomposition with a collapse product).
    pub fn extend(&self, i: usize, r: usize, j: usize, s: usize) -> Result<FaceSphere, SphereError> {
        if i > self.m() {
            return Err(SphereError::IndexError { index: i, bound: self.m() });
        }
        if j > self.n() {
            return Err(SphereError::IndexError { index: j, bound: self.n() });
        }
        let col = move |ii: usize| {
            if ii <= i {
                ii
            } else if ii >= i + r {
                ii - r
            } else {
                i
            }
        };
        let row = move |jj: usize| {
            if jj <= j {
                jj
            } else if jj >= j + s {
                jj - s
            } else {
                j
            }
        };
        let grid = LabelGrid::from_fn(self.grid.width() + r, self.grid.height() + s, |ii, jj| {
            self.grid.at(col(ii), row(jj))
        });
        Ok(FaceSphere { target: self.target.clone(), grid })
    }

    /// Precomposition with a product of collapse sequences: entry `(i, j)`
    /// of the result reads `self` at the collapsed indices.
    pub fn precompose_collapses(&self, cols: &[usize], rows: &[usize]) -> FaceSphere {
        let grid = LabelGrid::from_fn(
            self.grid.width() + cols.len(),
            self.grid.height() + rows.len(),
            |i, j| self.grid.at(collapse_seq_eval(cols, i), collapse_seq_eval(rows, j)),
        );
        debug_assert!(validate_grid(&self.target, &grid).is_ok());
        FaceSphere { target: self.target.clone(), grid }
    }

    /// Horizontal flip, `(i, j) -> (m - i, j)`; the group inverse.
    pub fn inverse(&self) -> FaceSphere {
        let m = self.m();
        let grid = LabelGrid::from_fn(self.grid.width(), self.grid.height(), |i, j| {
            self.grid.at(m - i, j)
        });
        FaceSphere { target: self.target.clone(), grid }
    }

    /// Reads row `j` as an edge loop.
    pub fn row_loop(&self, j: usize) -> EdgeLoop {
        EdgeLoop::from_vertices_unchecked(self.target.clone(), self.grid.row(j).into())
    }

    /// Rows as edge loops, bottom row first.
    pub fn rows_as_edge_loops(&self) -> Vec<EdgeLoop> {
        (0..self.grid.height()).map(|j| self.row_loop(j)).collect()
    }
}

fn validate_grid(target: &PointedComplex, grid: &LabelGrid) -> Result<(), SphereError> {
    let (w, h) = (grid.width(), grid.height());
    for j in 0..h {
        for i in 0..w {
            let v = grid.at(i, j);
            if !target.complex.contains_vertex(v) {
                return Err(SphereError::UnknownVertex { i, j });
            }
            let on_boundary = i == 0 || i == w - 1 || j == 0 || j == h - 1;
            if on_boundary && v != target.basepoint {
                return Err(SphereError::BoundaryViolation { i, j });
            }
        }
    }
    for j in 0..h - 1 {
        for i in 0..w - 1 {
            let block = [grid.at(i, j), grid.at(i + 1, j), grid.at(i, j + 1), grid.at(i + 1, j + 1)];
            if !target.complex.spans_simplex(&block) {
                return Err(SphereError::SimplexViolation { i, j });
            }
        }
    }
    Ok(())
}

/// The block-diagonal product: `f` in the lower-left corner, `g` translated
/// to the upper-right corner, basepoint elsewhere.
pub fn product(f: &FaceSphere, g: &FaceSphere) -> Result<FaceSphere, SphereError> {
    if f.target != g.target {
        return Err(SphereError::TargetMismatch);
    }
    let (m, n) = (f.m(), f.n());
    let (r, s) = (g.m(), g.n());
    let grid = LabelGrid::from_fn(m + r + 2, n + s + 2, |i, j| {
        if i <= m && j <= n {
            f.at(i, j)
        } else if i >= m + 1 && j >= n + 1 {
            g.at(i - (m + 1), j - (n + 1))
        } else {
            f.target.basepoint
        }
    });
    // Validity is provable, but translation bugs are cheap to catch here.
    FaceSphere::from_grid(f.target.clone(), grid)
}

/// Contiguity for same-size spheres, relative the boundary: the union of the
/// two blocks over every cell must be a simplex.
pub fn is_contiguous(f: &FaceSphere, g: &FaceSphere) -> Result<bool, SphereError> {
    if f.target != g.target {
        return Err(SphereError::TargetMismatch);
    }
    if f.m() != g.m() || f.n() != g.n() {
        return Err(SphereError::ShapeMismatch);
    }
    for j in 0..f.n() {
        for i in 0..f.m() {
            let union = [
                f.at(i, j),
                f.at(i + 1, j),
                f.at(i, j + 1),
                f.at(i + 1, j + 1),
                g.at(i, j),
                g.at(i + 1, j),
                g.at(i, j + 1),
                g.at(i + 1, j + 1),
            ];
            if !f.target.complex.spans_simplex(&union) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Replaces the entries of `f` inside the rectangle `[p, q] x [r, s]` by the
/// block's.  The block must agree with `f` on the rectangle's boundary; the
/// result is re-validated.
pub fn patch(
    f: &FaceSphere,
    rect: (usize, usize, usize, usize),
    block: &LabelGrid,
) -> Result<FaceSphere, SphereError> {
    let (p, q, r, s) = rect;
    if p > q || q > f.m() {
        return Err(SphereError::IndexError { index: q, bound: f.m() });
    }
    if r > s || s > f.n() {
        return Err(SphereError::IndexError { index: s, bound: f.n() });
    }
    if block.width() != q - p + 1 || block.height() != s - r + 1 {
        return Err(SphereError::ShapeMismatch);
    }
    for jj in 0..block.height() {
        for ii in 0..block.width() {
            let edge = ii == 0 || ii == block.width() - 1 || jj == 0 || jj == block.height() - 1;
            if edge && block.at(ii, jj) != f.at(p + ii, r + jj) {
                return Err(SphereError::PatchBoundaryMismatch { i: p + ii, j: r + jj });
            }
        }
    }
    let grid = LabelGrid::from_fn(f.grid.width(), f.grid.height(), |i, j| {
        if i >= p && i <= q && j >= r && j <= s {
            block.at(i - p, j - r)
        } else {
            f.at(i, j)
        }
    });
    FaceSphere::from_grid(f.target.clone(), grid)
}

/// Pairs two same-size spheres into one over the categorical product of
/// their targets.
pub fn pair(f: &FaceSphere, g: &FaceSphere) -> Result<FaceSphere, SphereError> {
    if f.m() != g.m() || f.n() != g.n() {
        return Err(SphereError::ShapeMismatch);
    }
    let complex = alloc::sync::Arc::new(crate::complex::categorical_product(
        f.target.complex.clone(),
        g.target.complex.clone(),
    ));
    let rc = g.target.complex.vertex_count() as u32;
    let basepoint = VertexId(f.target.basepoint.0 * rc + g.target.basepoint.0);
    let target = PointedComplex::new(complex, basepoint).expect("pair basepoint in range");
    let grid = LabelGrid::from_fn(f.grid.width(), f.grid.height(), |i, j| {
        VertexId(f.at(i, j).0 * rc + g.at(i, j).0)
    });
    FaceSphere::from_grid(target, grid)
}

/// Projects a sphere over a product target onto one factor (0 = left,
/// 1 = right).
pub fn project(f: &FaceSphere, side: usize) -> Result<FaceSphere, SphereError> {
    let (left, right) = f
        .target
        .complex
        .product_factors()
        .ok_or(SphereError::TargetMismatch)?;
    let rc = right.vertex_count() as u32;
    let (factor, base) = if side == 0 {
        (left.clone(), VertexId(f.target.basepoint.0 / rc))
    } else {
        (right.clone(), VertexId(f.target.basepoint.0 % rc))
    };
    let target = PointedComplex::new(factor, base).expect("factor basepoint in range");
    let grid = LabelGrid::from_fn(f.grid.width(), f.grid.height(), |i, j| {
        let v = f.at(i, j);
        if side == 0 {
            VertexId(v.0 / rc)
        } else {
            VertexId(v.0 % rc)
        }
    });
    FaceSphere::from_grid(target, grid)
}

/// The built-in 5 x 4 sphere over the octahedron whose image omits `-e2`;
/// it represents the trivial class.
pub fn example_trivial_sphere(oct: &PointedComplex) -> FaceSphere {
    sphere_from_names(
        oct,
        &[
            &["-e1", "-e1", "-e1", "-e1", "-e1", "-e1"],
            &["-e1", "e3", "e3", "e3", "e3", "-e1"],
            &["-e1", "e2", "e2", "e1", "e2", "-e1"],
            &["-e1", "-e3", "e2", "e3", "e2", "-e1"],
            &["-e1", "-e1", "-e1", "-e1", "-e1", "-e1"],
        ],
    )
}

/// The built-in 4 x 4 sphere over the octahedron hitting every face once; it
/// generates the face group.
pub fn example_generator_sphere(oct: &PointedComplex) -> FaceSphere {
    sphere_from_names(
        oct,
        &[
            &["-e1", "-e1", "-e1", "-e1", "-e1"],
            &["-e1", "-e3", "-e2", "-e2", "-e1"],
            &["-e1", "-e3", "e1", "e3", "-e1"],
            &["-e1", "e2", "e2", "e3", "-e1"],
            &["-e1", "-e1", "-e1", "-e1", "-e1"],
        ],
    )
}

/// Builds a sphere from rows of vertex names listed bottom-up.
fn sphere_from_names(target: &PointedComplex, rows: &[&[&str]]) -> FaceSphere {
    let id_rows: Vec<Vec<VertexId>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|name| target.complex.vertex_by_name(name).expect("known vertex"))
                .collect()
        })
        .collect();
    let grid = LabelGrid::from_rows(&id_rows).expect("rectangular rows");
    FaceSphere::from_grid(target.clone(), grid).expect("built-in sphere is valid")
}
