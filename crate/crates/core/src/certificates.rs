//! Constructive certificates for the group laws: the inverse-cancellation
//! chain taking `f * flip(f)` to a constant sphere, and the block-sliding
//! chain taking `f * g` to `g * f`.
//!
//! Both are built the same way: a block of the grid is rewritten through a
//! family of collapse compositions, one collapse index stepping at a time.
//! Each step is a single contiguity, which decomposes into spider moves, so
//! the whole chain replays move by move.

use alloc::vec::Vec;

use crate::complex::VertexId;
use crate::grid::LabelGrid;
use crate::maps::collapse_seq_eval;
use crate::moves::{apply_move, contiguity_to_spiders, normalize_with_moves, Move, MoveCertificate, MoveError};
use crate::sphere::{self, FaceSphere};

/// All index lists on a straight walk from `start` to `end`, changing one
/// entry by one at a time (entries walked left to right).  Includes both
/// endpoints.
fn interpolation_walk(start: &[usize], end: &[usize]) -> Vec<Vec<usize>> {
    debug_assert_eq!(start.len(), end.len());
    let mut out = Vec::new();
    let mut cur: Vec<usize> = start.into();
    out.push(cur.clone());
    for t in 0..cur.len() {
        while cur[t] != end[t] {
            if cur[t] < end[t] {
                cur[t] += 1;
            } else {
                cur[t] -= 1;
            }
            out.push(cur.clone());
        }
    }
    out
}

/// Concatenates spider decompositions between consecutive spheres of a
/// chain.  Consecutive entries must be contiguous.
pub(crate) fn chain_moves(states: &[FaceSphere]) -> Result<Vec<Move>, MoveError> {
    let mut moves = Vec::new();
    for pair in states.windows(2) {
        debug_assert!(sphere::is_contiguous(&pair[0], &pair[1]).unwrap_or(false));
        let cert = contiguity_to_spiders(&pair[0], &pair[1])?;
        moves.extend(cert.moves);
    }
    Ok(moves)
}

fn assemble(start: FaceSphere, moves: Vec<Move>) -> Result<MoveCertificate, MoveError> {
    let mut end = start.clone();
    for mv in &moves {
        end = apply_move(&end, *mv)?;
    }
    Ok(MoveCertificate { start, moves, end })
}

/// The certificate from `f * flip(f)` down to the constant 1x1 sphere.
///
/// The chain slides the flipped block to the bottom (one collapse index at a
/// time), deletes the now-constant upper rows and the repeated centre
/// column, then for `r = m, ..., 1` rewrites column `r` to the neighbouring
/// column of values and deletes the resulting repeats.
pub fn inverse_cancellation_certificate(f: &FaceSphere) -> Result<MoveCertificate, MoveError> {
    let flipped = f.inverse();
    let start = sphere::product(f, &flipped).expect("same target");
    let (m, n) = (f.m(), f.n());
    let x0 = f.target().basepoint;

    if m == 0 || n == 0 {
        // Degenerate spheres are all-basepoint; the product already is
        // constant and only needs normalizing.
        let (_, moves) = normalize_with_moves(&start);
        return assemble(start, moves);
    }

    let mut moves: Vec<Move> = Vec::new();

    // Slide the flipped block from the top rows to the bottom rows.
    let at_block = |beta: &[usize], i: usize, j: usize| -> VertexId {
        if i <= m {
            if j <= n {
                f.at(i, j)
            } else {
                x0
            }
        } else {
            flipped.at(i - (m + 1), collapse_seq_eval(beta, j))
        }
    };
    let walk = interpolation_walk(&alloc::vec![0; n + 1], &alloc::vec![n; n + 1]);
    let spheres: Vec<FaceSphere> = walk
        .iter()
        .map(|beta| {
            let grid = LabelGrid::from_fn(2 * m + 3, 2 * n + 2, |i, j| at_block(beta, i, j));
            FaceSphere::from_grid(f.target().clone(), grid).expect("slide stage is valid")
        })
        .collect();
    debug_assert_eq!(spheres[0], start);
    moves.extend(chain_moves(&spheres)?);

    // Rows n..2n+1 are now all basepoint; delete down to height n.
    for _ in 0..n + 1 {
        moves.push(Move::RowDel(n));
    }
    // The two centre columns are both basepoint.
    moves.push(Move::ColDel(m));

    // Fold the mirrored halves together, one column pair at a time.
    // Before iteration r the sphere is g_r on I_{2r} x I_n.
    let g = |r: usize, i: usize, j: usize| -> VertexId {
        if i <= r {
            f.at(i, j)
        } else {
            f.at(2 * r - i, j)
        }
    };
    for r in (1..=m).rev() {
        let cur = LabelGrid::from_fn(2 * r + 1, n + 1, |i, j| g(r, i, j));
        let folded = LabelGrid::from_fn(2 * r + 1, n + 1, |i, j| {
            // g_{r-1} after repeating its column r-1 twice.
            let ii = if i <= r - 1 {
                i
            } else if i <= r + 1 {
                r - 1
            } else {
                i - 2
            };
            g(r - 1, ii, j)
        });
        let a = FaceSphere::from_grid(f.target().clone(), cur).expect("fold stage is valid");
        let b = FaceSphere::from_grid(f.target().clone(), folded).expect("fold stage is valid");
        moves.extend(chain_moves(&[a, b])?);
        if r >= 2 {
            moves.push(Move::ColDel(r - 1));
            moves.push(Move::ColDel(r - 1));
        } else {
            moves.push(Move::ColDel(0));
        }
    }

    // Collapse the remaining constant 1 x n sphere to 1 x 1.
    for _ in 0..n.saturating_sub(1) {
        moves.push(Move::RowDel(0));
    }

    let cert = assemble(start, moves)?;
    debug_assert!(cert.end.is_constant());
    Ok(cert)
}

/// The certificate from `f * g` to `g * f`: slide `g` down, `f` up, `f`
/// right, then `g` left, each slide one collapse index at a time.
pub fn commutativity_certificate(
    f: &FaceSphere,
    g: &FaceSphere,
) -> Result<MoveCertificate, MoveError> {
    if f.target() != g.target() {
        return Err(MoveError::TargetMismatch);
    }
    let start = sphere::product(f, g).expect("same target");
    let (m, n) = (f.m(), f.n());
    let (r, s) = (g.m(), g.n());
    let x0 = f.target().basepoint;
    let width = m + r + 2;
    let height = n + s + 2;
    let target = f.target().clone();
    let build = |eval: &dyn Fn(usize, usize) -> VertexId| -> FaceSphere {
        let grid = LabelGrid::from_fn(width, height, |i, j| eval(i, j));
        FaceSphere::from_grid(target.clone(), grid).expect("slide stage is valid")
    };
    let mut moves: Vec<Move> = Vec::new();

    // g slides from the top rows to the bottom rows.
    let stage_a = |beta: &[usize], i: usize, j: usize| {
        if i <= m {
            if j <= n {
                f.at(i, j)
            } else {
                x0
            }
        } else {
            g.at(i - (m + 1), collapse_seq_eval(beta, j))
        }
    };
    let mut spheres = Vec::new();
    for beta in interpolation_walk(&alloc::vec![0; n + 1], &alloc::vec![s; n + 1]) {
        spheres.push(build(&|i, j| stage_a(&beta, i, j)));
    }
    debug_assert_eq!(spheres[0], start);
    moves.extend(chain_moves(&spheres)?);

    // f slides from the bottom rows to the top rows.
    let stage_b = |chi: &[usize], i: usize, j: usize| {
        if i <= m {
            f.at(i, collapse_seq_eval(chi, j))
        } else {
            g.at(i - (m + 1), j.min(s))
        }
    };
    let mut spheres = Vec::new();
    for chi in interpolation_walk(&alloc::vec![n; s + 1], &alloc::vec![0; s + 1]) {
        spheres.push(build(&|i, j| stage_b(&chi, i, j)));
    }
    moves.extend(chain_moves(&spheres)?);

    // f slides from the left columns to the right columns.
    let stage_c = |psi: &[usize], i: usize, j: usize| {
        if j >= s + 1 {
            f.at(collapse_seq_eval(psi, i), j - (s + 1))
        } else if i >= m + 1 {
            g.at(i - (m + 1), j)
        } else {
            x0
        }
    };
    let mut spheres = Vec::new();
    for psi in interpolation_walk(&alloc::vec![m; r + 1], &alloc::vec![0; r + 1]) {
        spheres.push(build(&|i, j| stage_c(&psi, i, j)));
    }
    moves.extend(chain_moves(&spheres)?);

    // g slides from the right columns to the left columns.
    let stage_d = |omega: &[usize], i: usize, j: usize| {
        if j <= s {
            g.at(collapse_seq_eval(omega, i), j)
        } else if i >= r + 1 {
            f.at(i - (r + 1), j - (s + 1))
        } else {
            x0
        }
    };
    let mut spheres = Vec::new();
    for omega in interpolation_walk(&alloc::vec![0; m + 1], &alloc::vec![r; m + 1]) {
        spheres.push(build(&|i, j| stage_d(&omega, i, j)));
    }
    moves.extend(chain_moves(&spheres)?);

    let cert = assemble(start, moves)?;
    debug_assert_eq!(cert.end, sphere::product(g, f).expect("same target"));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::octahedron;
    use crate::moves::random_sphere;
    use crate::sphere::{example_generator_sphere, example_trivial_sphere};

    #[test]
    fn cancellation_on_tiny_constant() {
        let oct = octahedron();
        let f = FaceSphere::constant(&oct, 1, 1);
        let cert = inverse_cancellation_certificate(&f).unwrap();
        cert.replay().unwrap();
        assert!(cert.end.is_constant());
        let point = FaceSphere::constant(&oct, 0, 0);
        let cert = inverse_cancellation_certificate(&point).unwrap();
        cert.replay().unwrap();
        assert!(cert.end.is_constant());
    }

    #[test]
    fn cancellation_on_builtin_spheres() {
        let oct = octahedron();
        for f in [example_trivial_sphere(&oct), example_generator_sphere(&oct)] {
            let cert = inverse_cancellation_certificate(&f).unwrap();
            assert_eq!(cert.start, sphere::product(&f, &f.inverse()).unwrap());
            cert.replay().unwrap();
            assert!(cert.end.is_constant());
        }
    }

    #[test]
    fn cancellation_on_random_spheres() {
        let oct = octahedron();
        for seed in 0..12 {
            let f = random_sphere(&oct, 3 + (seed % 3) as usize, 2 + (seed % 4) as usize, 9, seed);
            let cert = inverse_cancellation_certificate(&f).unwrap();
            cert.replay().unwrap();
            assert!(cert.end.is_constant());
        }
    }

    #[test]
    fn commutativity_between_builtins() {
        let oct = octahedron();
        let f = example_trivial_sphere(&oct);
        let g = example_generator_sphere(&oct);
        let cert = commutativity_certificate(&f, &g).unwrap();
        assert_eq!(cert.start, sphere::product(&f, &g).unwrap());
        assert_eq!(cert.end, sphere::product(&g, &f).unwrap());
        cert.replay().unwrap();
    }

    #[test]
    fn commutativity_with_constants_and_self() {
        let oct = octahedron();
        let f = example_trivial_sphere(&oct);
        let c = FaceSphere::constant(&oct, 1, 1);
        let cert = commutativity_certificate(&c, &f).unwrap();
        cert.replay().unwrap();
        let cert = commutativity_certificate(&f, &f).unwrap();
        cert.replay().unwrap();
        assert_eq!(cert.start, cert.end);
        let point = FaceSphere::constant(&oct, 0, 0);
        let cert = commutativity_certificate(&point, &f).unwrap();
        cert.replay().unwrap();
    }

    #[test]
    fn commutativity_on_random_pairs() {
        let oct = octahedron();
        for seed in 0..8 {
            let f = random_sphere(&oct, 3, 3, 6, 100 + seed);
            let g = random_sphere(&oct, 2, 4, 6, 200 + seed);
            let cert = commutativity_certificate(&f, &g).unwrap();
            cert.replay().unwrap();
            assert_eq!(cert.end, sphere::product(&g, &f).unwrap());
        }
    }
}
