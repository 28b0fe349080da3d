//! The bridge between the triangulated grid and the categorical grid:
//! label-grid maps out of the triangulation, the inclusion and collapse maps
//! relating the two, and the digitization that adjusts a doubled grid map at
//! isolated vertices so that it becomes a face sphere.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{cartesian_grid, grid_product, grid_vertex, PointedComplex, VertexId};
use crate::grid::LabelGrid;
use crate::maps::{collapse_seq_eval, MapError, SimplicialMap};
use crate::moves::{contiguity_to_spiders, Move, MoveCertificate, MoveError, Rng};
use crate::sphere::{self, FaceSphere, SphereError};

/// A simplicial map `(I_{m,n}, boundary) -> (X, x0)` stored as a label grid.
/// Unlike a face sphere, only the two triangles of each cell are
/// constrained; the anti-diagonal pair of a cell need not span a simplex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridMap {
    target: PointedComplex,
    grid: LabelGrid,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BridgeError {
    /// The two grid maps are not a valid single-vertex rewrite pair.
    NotSpiderPair,
    Invalid(SphereError),
}

impl fmt::Display for BridgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BridgeError::NotSpiderPair => write!(f, "maps are not a spider pair"),
            BridgeError::Invalid(e) => write!(f, "invalid grid map: {e}"),
        }
    }
}

impl GridMap {
    pub fn from_grid(target: PointedComplex, grid: LabelGrid) -> Result<GridMap, SphereError> {
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
                let lower = [grid.at(i, j), grid.at(i + 1, j), grid.at(i + 1, j + 1)];
                let upper = [grid.at(i, j), grid.at(i, j + 1), grid.at(i + 1, j + 1)];
                if !target.complex.spans_simplex(&lower)
                    || !target.complex.spans_simplex(&upper)
                {
                    return Err(SphereError::SimplexViolation { i, j });
                }
            }
        }
        Ok(GridMap { target, grid })
    }

    pub fn constant(target: &PointedComplex, m: usize, n: usize) -> GridMap {
        GridMap {
            target: target.clone(),
            grid: LabelGrid::filled(m + 1, n + 1, target.basepoint),
        }
    }

    /// Restriction of a face sphere along the triangulation inclusion: the
    /// label grid is unchanged.
    pub fn of_sphere(f: &FaceSphere) -> GridMap {
        GridMap { target: f.target().clone(), grid: f.grid().clone() }
    }

    pub fn target(&self) -> &PointedComplex {
        &self.target
    }

    pub fn grid(&self) -> &LabelGrid {
        &self.grid
    }

    pub fn m(&self) -> usize {
        self.grid.width() - 1
    }

    pub fn n(&self) -> usize {
        self.grid.height() - 1
    }

    pub fn at(&self, i: usize, j: usize) -> VertexId {
        self.grid.at(i, j)
    }

    pub fn is_constant(&self) -> bool {
        self.grid.labels().iter().all(|v| *v == self.target.basepoint)
    }
}

/// Contiguity of two same-size grid maps: over every triangle of the
/// triangulation, the union of the two images spans a simplex.
pub fn grid_maps_contiguous(a: &GridMap, b: &GridMap) -> Result<bool, SphereError> {
    if a.target != b.target {
        return Err(SphereError::TargetMismatch);
    }
    if a.m() != b.m() || a.n() != b.n() {
        return Err(SphereError::ShapeMismatch);
    }
    let complex = &a.target.complex;
    for j in 0..a.n() {
        for i in 0..a.m() {
            let corners_lower = [(i, j), (i + 1, j), (i + 1, j + 1)];
            let corners_upper = [(i, j), (i, j + 1), (i + 1, j + 1)];
            for corners in [corners_lower, corners_upper] {
                let union = [
                    a.at(corners[0].0, corners[0].1),
                    a.at(corners[1].0, corners[1].1),
                    a.at(corners[2].0, corners[2].1),
                    b.at(corners[0].0, corners[0].1),
                    b.at(corners[1].0, corners[1].1),
                    b.at(corners[2].0, corners[2].1),
                ];
                if !complex.spans_simplex(&union) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The inclusion `I_{m,n} -> I_m x I_n`, the identity on vertex indices.
/// The reverse vertex correspondence is not simplicial (anti-diagonal
/// edges), which `SimplicialMap::new` detects.
pub fn inclusion(m: usize, n: usize) -> SimplicialMap {
    let domain = alloc::sync::Arc::new(cartesian_grid(m, n));
    let codomain = alloc::sync::Arc::new(grid_product(m, n));
    let assignment = (0..domain.vertex_count() as u32).map(VertexId).collect();
    SimplicialMap::new(domain, codomain, assignment).expect("inclusion is simplicial")
}

/// The subdivision collapse `I_{km,kn} -> I_{m,n}` sending each `k x k`
/// block to its lower-left corner: `(ki+r, kj+s) -> (i, j)` for
/// `0 <= r, s < k`.  Requires `k >= 2`.
pub fn block_collapse(m: usize, n: usize, k: usize) -> Result<SimplicialMap, MapError> {
    if k < 2 {
        return Err(MapError::IndexError { index: k, bound: 2 });
    }
    let domain = alloc::sync::Arc::new(cartesian_grid(k * m, k * n));
    let codomain = alloc::sync::Arc::new(cartesian_grid(m, n));
    let mut assignment = Vec::with_capacity(domain.vertex_count());
    for b in 0..=k * n {
        for a in 0..=k * m {
            assignment.push(grid_vertex((a / k).min(m), (b / k).min(n), m));
        }
    }
    SimplicialMap::new(domain, codomain, assignment)
}

/// The halving collapse `I_{2m+1,2n+1} -> I_{m,n}` sending each `2 x 2`
/// block to one vertex: `(2k+e1, 2l+e2) -> (k, l)`.  Precomposition doubles
/// every row and column of a grid map.
pub fn pair_collapse(m: usize, n: usize) -> SimplicialMap {
    let domain = alloc::sync::Arc::new(cartesian_grid(2 * m + 1, 2 * n + 1));
    let codomain = alloc::sync::Arc::new(cartesian_grid(m, n));
    let mut assignment = Vec::with_capacity(domain.vertex_count());
    for j in 0..=2 * n + 1 {
        for i in 0..=2 * m + 1 {
            assignment.push(grid_vertex(i / 2, j / 2, m));
        }
    }
    SimplicialMap::new(domain, codomain, assignment).expect("halving collapse is simplicial")
}

/// The label grid of `f` composed with the halving collapse: every row and
/// column doubled.
fn doubled_grid(f: &GridMap) -> LabelGrid {
    LabelGrid::from_fn(2 * f.m() + 2, 2 * f.n() + 2, |i, j| f.at(i / 2, j / 2))
}

/// Digitization: the doubled grid of `f`, adjusted at the isolated vertices
/// `(2k+1, 2l)` for `1 <= k <= m-2`, `2 <= l <= n-1` (where the value one
/// row down is used instead), read as a face sphere on the categorical grid
/// of size `(2m+1) x (2n+1)`.
pub fn digitize(f: &GridMap) -> Result<FaceSphere, SphereError> {
    let (m, n) = (f.m(), f.n());
    let grid = LabelGrid::from_fn(2 * m + 2, 2 * n + 2, |i, j| {
        if i % 2 == 1 && j % 2 == 0 && m >= 3 && n >= 3 {
            let k = (i - 1) / 2;
            let l = j / 2;
            if (1..=m - 2).contains(&k) && (2..=n - 1).contains(&l) {
                return f.at(k, l - 1);
            }
        }
        f.at(i / 2, j / 2)
    });
    FaceSphere::from_grid(f.target.clone(), grid)
}

/// Checks the digitization contiguity: `f` doubled and the digitization read
/// back over the triangulation are contiguous as grid maps.
pub fn digitize_contiguous(f: &GridMap) -> Result<bool, SphereError> {
    let doubled = GridMap { target: f.target.clone(), grid: doubled_grid(f) };
    let sphere = digitize(f)?;
    let restricted = GridMap::of_sphere(&sphere);
    grid_maps_contiguous(&doubled, &restricted)
}

/// For a single-vertex rewrite pair of grid maps, checks that their
/// digitizations are contiguous in one step.
pub fn spider_move_lifts(a: &GridMap, b: &GridMap) -> Result<bool, BridgeError> {
    if a.target != b.target || a.m() != b.m() || a.n() != b.n() {
        return Err(BridgeError::NotSpiderPair);
    }
    if a.grid == b.grid {
        return Ok(true);
    }
    let mut diff = None;
    for j in 0..=a.n() {
        for i in 0..=a.m() {
            if a.at(i, j) != b.at(i, j) {
                if diff.is_some() {
                    return Err(BridgeError::NotSpiderPair);
                }
                diff = Some((i, j));
            }
        }
    }
    let (i, j) = diff.expect("grids differ");
    if i == 0 || i == a.m() || j == 0 || j == a.n() {
        return Err(BridgeError::NotSpiderPair);
    }
    if !grid_maps_contiguous(a, b).map_err(BridgeError::Invalid)? {
        return Err(BridgeError::NotSpiderPair);
    }
    let da = digitize(a).map_err(BridgeError::Invalid)?;
    let db = digitize(b).map_err(BridgeError::Invalid)?;
    sphere::is_contiguous(&da, &db).map_err(BridgeError::Invalid)
}

/// Certificate from the digitization of `g`'s restriction back to `g`: one
/// contiguity onto the doubled sphere, a collapse-index walk to the trivial
/// extension, then deletions.
pub fn digitize_roundtrip_certificate(g: &FaceSphere) -> Result<MoveCertificate, MoveError> {
    let (m, n) = (g.m(), g.n());
    let start = digitize(&GridMap::of_sphere(g)).map_err(|_| MoveError::ReplayMismatch)?;

    let halving: Vec<usize> = (0..=m).map(|t| 2 * t).collect();
    let halving_rows: Vec<usize> = (0..=n).map(|t| 2 * t).collect();
    let doubled = g.precompose_collapses(&halving, &halving_rows);

    let mut moves = contiguity_to_spiders(&start, &doubled)?.moves;

    // Walk the column collapses to the trivial extension, then the rows.
    let mut cols = halving.clone();
    let mut prev = doubled;
    for t in 0..cols.len() {
        while cols[t] != m {
            if cols[t] < m {
                cols[t] += 1;
            } else {
                cols[t] -= 1;
            }
            let next = g.precompose_collapses(&cols, &halving_rows);
            moves.extend(contiguity_to_spiders(&prev, &next)?.moves);
            prev = next;
        }
    }
    let mut rows = halving_rows.clone();
    for t in 0..rows.len() {
        while rows[t] != n {
            if rows[t] < n {
                rows[t] += 1;
            } else {
                rows[t] -= 1;
            }
            let next = g.precompose_collapses(&cols, &rows);
            moves.extend(contiguity_to_spiders(&prev, &next)?.moves);
            prev = next;
        }
    }
    debug_assert_eq!(prev, g.trivial_extension(m + 1, n + 1));
    for _ in 0..n + 1 {
        moves.push(Move::RowDel(n));
    }
    for _ in 0..m + 1 {
        moves.push(Move::ColDel(m));
    }

    let cert = MoveCertificate { start, moves, end: g.clone() };
    cert.replay()?;
    Ok(cert)
}

/// Report for the compatibility of the subdivision collapse with the
/// inclusion: the composite equals a collapse-product composed with the
/// inclusion on the nose, and that collapse-product rewires to the trivial
/// extension through verified one-step contiguities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdivisionReport {
    pub maps_agree: bool,
    pub chain_steps: usize,
    pub chain_ok: bool,
}

impl SubdivisionReport {
    pub fn holds(&self) -> bool {
        self.maps_agree && self.chain_ok
    }
}

fn staircase_indices(m: usize, k: usize) -> Vec<usize> {
    // The collapse list (0 .. 0, k .. k, ..., (m-1)k .. (m-1)k), each block
    // of length k-1, whose composite sends ik+r to i.
    let mut out = Vec::with_capacity(m * (k - 1));
    for block in 0..m {
        for _ in 0..k - 1 {
            out.push(block * k);
        }
    }
    out
}

/// Verifies that the inclusion composed with the block collapse agrees with
/// the staircase collapse-product composed with the inclusion, and that the
/// staircase rewires step by step to the trivial-extension collapse.
pub fn subdivision_compatibility(m: usize, n: usize, k: usize) -> Result<SubdivisionReport, MapError> {
    if k < 2 {
        return Err(MapError::IndexError { index: k, bound: 2 });
    }
    let domain = alloc::sync::Arc::new(cartesian_grid(k * m, k * n));
    let codomain = alloc::sync::Arc::new(grid_product(m, n));
    let cols0 = staircase_indices(m, k);
    let rows0 = staircase_indices(n, k);

    let build = |cols: &[usize], rows: &[usize]| -> Result<SimplicialMap, MapError> {
        let mut assignment = Vec::with_capacity(domain.vertex_count());
        for b in 0..=k * n {
            for a in 0..=k * m {
                let i = collapse_seq_eval(cols, a);
                let j = collapse_seq_eval(rows, b);
                assignment.push(grid_vertex(i, j, m));
            }
        }
        SimplicialMap::new(domain.clone(), codomain.clone(), assignment)
    };

    // Exact agreement of the two composites on every vertex.
    let mut maps_agree = true;
    for b in 0..=k * n {
        for a in 0..=k * m {
            let via_collapse = grid_vertex((a / k).min(m), (b / k).min(n), m);
            let via_staircase = grid_vertex(
                collapse_seq_eval(&cols0, a),
                collapse_seq_eval(&rows0, b),
                m,
            );
            if via_collapse != via_staircase {
                maps_agree = false;
            }
        }
    }

    let mut chain_steps = 0usize;
    let mut chain_ok = true;
    let mut prev = build(&cols0, &rows0)?;
    let mut cols = cols0;
    let mut rows = rows0;
    for t in 0..cols.len() {
        while cols[t] != m {
            if cols[t] < m {
                cols[t] += 1;
            } else {
                cols[t] -= 1;
            }
            let next = build(&cols, &rows)?;
            chain_steps += 1;
            chain_ok &= crate::maps::is_contiguous(&prev, &next)?;
            prev = next;
        }
    }
    for t in 0..rows.len() {
        while rows[t] != n {
            if rows[t] < n {
                rows[t] += 1;
            } else {
                rows[t] -= 1;
            }
            let next = build(&cols, &rows)?;
            chain_steps += 1;
            chain_ok &= crate::maps::is_contiguous(&prev, &next)?;
            prev = next;
        }
    }
    Ok(SubdivisionReport { maps_agree, chain_steps, chain_ok })
}

/// Labels that may replace the interior entry `(i, j)` of a grid map while
/// keeping the result valid and one-step contiguous with the original: the
/// label must span a simplex with each of the six incident triangles.
pub fn grid_rewrite_candidates(f: &GridMap, i: usize, j: usize) -> Vec<VertexId> {
    let (m, n) = (f.m(), f.n());
    if i == 0 || j == 0 || i >= m || j >= n {
        return Vec::new();
    }
    let triangles = [
        [(i - 1, j - 1), (i, j - 1), (i, j)],
        [(i - 1, j - 1), (i - 1, j), (i, j)],
        [(i - 1, j), (i, j), (i, j + 1)],
        [(i, j - 1), (i, j), (i + 1, j)],
        [(i, j), (i + 1, j), (i + 1, j + 1)],
        [(i, j), (i, j + 1), (i + 1, j + 1)],
    ];
    let complex = &f.target.complex;
    (0..f.target.complex.vertex_count() as u32)
        .map(VertexId)
        .filter(|v| {
            triangles.iter().all(|tri| {
                let set = [
                    f.at(tri[0].0, tri[0].1),
                    f.at(tri[1].0, tri[1].1),
                    f.at(tri[2].0, tri[2].1),
                    *v,
                ];
                complex.spans_simplex(&set)
            })
        })
        .collect()
}

/// A random valid grid map: the constant map after `steps` random legal
/// single-vertex rewrites.  Deterministic in the seed.
pub fn random_grid_map(
    target: &PointedComplex,
    m: usize,
    n: usize,
    steps: usize,
    seed: u64,
) -> GridMap {
    let mut rng = Rng::new(seed);
    let mut cur = GridMap::constant(target, m, n);
    if m < 2 || n < 2 {
        return cur;
    }
    for _ in 0..steps {
        let i = 1 + rng.below(m - 1);
        let j = 1 + rng.below(n - 1);
        let candidates = grid_rewrite_candidates(&cur, i, j);
        if candidates.is_empty() {
            continue;
        }
        let v = candidates[rng.below(candidates.len())];
        let mut grid = cur.grid.clone();
        grid.set(i, j, v);
        cur = GridMap { target: cur.target, grid };
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{octahedron, Simplex};
    use crate::sphere::example_trivial_sphere;
    use alloc::sync::Arc;

    #[test]
    fn inclusion_validates_and_reverse_fails() {
        let inc = inclusion(3, 2);
        assert!(inc.validate().is_ok());
        // The reverse correspondence is not simplicial.
        let domain = Arc::new(grid_product(3, 2));
        let codomain = Arc::new(cartesian_grid(3, 2));
        let assignment = (0..domain.vertex_count() as u32).map(VertexId).collect();
        assert!(matches!(
            SimplicialMap::new(domain, codomain, assignment),
            Err(MapError::Validation(_))
        ));
    }

    #[test]
    fn block_collapse_formula() {
        let rho = block_collapse(1, 1, 2).unwrap();
        assert!(rho.validate().is_ok());
        // (2*1+1, 2*0+0) -> (1, 0): vertex (3, 0) of I_{2,2} -> (1, 0).
        assert_eq!(rho.apply(grid_vertex(3, 0, 2)), grid_vertex(1, 0, 1));
        // Block corners are fixed points up to scale.
        assert_eq!(rho.apply(grid_vertex(2, 2, 2)), grid_vertex(1, 1, 1));
        assert!(block_collapse(2, 2, 1).is_err());
        for k in [2usize, 3] {
            for (m, n) in [(1usize, 1usize), (2, 2), (3, 2)] {
                assert!(block_collapse(m, n, k).unwrap().validate().is_ok());
            }
        }
    }

    #[test]
    fn pair_collapse_doubles() {
        let oct = octahedron();
        let gamma = pair_collapse(2, 2);
        assert!(gamma.validate().is_ok());
        assert_eq!(gamma.apply(grid_vertex(5, 5, 2)), grid_vertex(2, 2, 2));
        let f = random_grid_map(&oct, 2, 2, 4, 3);
        let doubled = doubled_grid(&f);
        for j in 0..=5 {
            for i in 0..=5 {
                assert_eq!(doubled.at(i, j), f.at(i / 2, j / 2));
            }
        }
    }

    #[test]
    fn grid_map_allows_antidiagonal_nonsimplex() {
        let oct = octahedron();
        let e2 = oct.complex.vertex_by_name("e2").unwrap();
        let me2 = oct.complex.vertex_by_name("-e2").unwrap();
        let mut grid = LabelGrid::filled(4, 4, oct.basepoint);
        grid.set(1, 2, e2);
        grid.set(2, 1, me2);
        let g = GridMap::from_grid(oct.clone(), grid.clone()).expect("valid grid map");
        // The same grid is not a face sphere: the block at (1,1) contains
        // the antipodal pair.
        assert!(FaceSphere::from_grid(oct.clone(), grid).is_err());
        assert!(!oct
            .complex
            .is_simplex(&Simplex::new(alloc::vec![g.at(1, 2), g.at(2, 1)]))
            .unwrap());
    }

    #[test]
    fn digitize_constant_is_constant() {
        let oct = octahedron();
        for (m, n) in [(1usize, 1usize), (2, 3), (4, 4)] {
            let c = GridMap::constant(&oct, m, n);
            let d = digitize(&c).unwrap();
            assert!(d.is_constant());
            assert_eq!((d.m(), d.n()), (2 * m + 1, 2 * n + 1));
        }
    }

    #[test]
    fn digitize_small_maps_are_pure_doubling() {
        let oct = octahedron();
        for seed in 0..4 {
            let f = random_grid_map(&oct, 2, 2, 5, seed);
            let d = digitize(&f).unwrap();
            let doubled = doubled_grid(&f);
            assert_eq!(d.grid(), &doubled);
        }
    }

    #[test]
    fn digitize_validates_and_checks_on_random_maps() {
        let oct = octahedron();
        for seed in 0..24 {
            let m = 3 + (seed as usize % 3);
            let n = 3 + (seed as usize / 3 % 3);
            let f = random_grid_map(&oct, m, n, 3 * m * n, seed);
            let d = digitize(&f).expect("digitization is a valid sphere");
            assert_eq!((d.m(), d.n()), (2 * m + 1, 2 * n + 1));
            assert!(digitize_contiguous(&f).unwrap());
        }
    }

    #[test]
    fn digitize_adjusts_only_odd_even_vertices() {
        let oct = octahedron();
        let f = random_grid_map(&oct, 4, 4, 30, 77);
        let d = digitize(&f).unwrap();
        let doubled = doubled_grid(&f);
        for j in 0..=2 * 4 + 1 {
            for i in 0..=2 * 4 + 1 {
                if d.at(i, j) != doubled.at(i, j) {
                    assert!(i % 2 == 1 && j % 2 == 0);
                }
            }
        }
    }

    #[test]
    fn roundtrip_certificate_replays() {
        let oct = octahedron();
        let g = example_trivial_sphere(&oct);
        let cert = digitize_roundtrip_certificate(&g).unwrap();
        assert_eq!((cert.start.m(), cert.start.n()), (11, 9));
        assert_eq!(cert.end, g);

        let c = FaceSphere::constant(&oct, 1, 1);
        digitize_roundtrip_certificate(&c).unwrap();
    }

    #[test]
    fn spider_lift_on_rewrite_pairs() {
        let oct = octahedron();
        let f = random_grid_map(&oct, 4, 4, 10, 5);
        assert!(spider_move_lifts(&f, &f).unwrap());
        let mut found = 0;
        for i in 1..4 {
            for j in 1..4 {
                for v in grid_rewrite_candidates(&f, i, j) {
                    if v == f.at(i, j) {
                        continue;
                    }
                    let mut grid = f.grid().clone();
                    grid.set(i, j, v);
                    let g = GridMap::from_grid(oct.clone(), grid).unwrap();
                    assert!(spider_move_lifts(&f, &g).unwrap());
                    found += 1;
                }
            }
        }
        assert!(found > 0);
        // Two-vertex changes are rejected.
        let mut grid = f.grid().clone();
        let c1 = grid_rewrite_candidates(&f, 1, 1);
        let c2 = grid_rewrite_candidates(&f, 3, 3);
        if let (Some(a), Some(b)) = (c1.iter().find(|v| **v != f.at(1, 1)), c2.iter().find(|v| **v != f.at(3, 3))) {
            grid.set(1, 1, *a);
            grid.set(3, 3, *b);
            if let Ok(g) = GridMap::from_grid(oct.clone(), grid) {
                assert_eq!(spider_move_lifts(&f, &g), Err(BridgeError::NotSpiderPair));
            }
        }
    }

    #[test]
    fn subdivision_compatibility_small() {
        for (m, n, k) in [(1usize, 1usize, 2usize), (2, 2, 2), (2, 1, 3)] {
            let report = subdivision_compatibility(m, n, k).unwrap();
            assert!(report.maps_agree, "agree at ({m},{n},{k})");
            assert!(report.chain_ok, "chain at ({m},{n},{k})");
        }
        assert!(subdivision_compatibility(1, 1, 1).is_err());
    }

    #[test]
    fn random_generator_hits_antidiagonal_nonsimplices() {
        let oct = octahedron();
        let mut found = false;
        'outer: for seed in 0..40 {
            let f = random_grid_map(&oct, 4, 4, 48, 1000 + seed);
            for j in 0..4 {
                for i in 0..4 {
                    let pair = [f.at(i, j + 1), f.at(i + 1, j)];
                    if !oct.complex.spans_simplex(&pair) {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found, "generator never produced an anti-diagonal non-simplex");
    }
}
