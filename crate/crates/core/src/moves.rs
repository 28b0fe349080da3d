//! The intrinsic rewriting moves on face spheres: row/column duplication and
//! deletion, and spider moves that rewrite a single interior entry subject to
//! four local simplex conditions.  Certificates are replayable move
//! sequences; replaying re-checks legality at every step.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::VertexId;
use crate::sphere::FaceSphere;

/// One rewriting move.
///
/// Deletions are legal only when the adjacent row/column is identical and
/// the grid stays at least 2x2.  Spider moves are restricted to interior
/// entries; the four 5-vertex sets that must be simplices are the images of
/// the four incident blocks together with the old and new entry.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Move {
    RowDup(usize),
    RowDel(usize),
    ColDup(usize),
    ColDel(usize),
    Spider { i: usize, j: usize, label: VertexId },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::RowDup(j) => write!(f, "rowdup {j}"),
            Move::RowDel(j) => write!(f, "rowdel {j}"),
            Move::ColDup(i) => write!(f, "coldup {i}"),
            Move::ColDel(i) => write!(f, "coldel {i}"),
            Move::Spider { i, j, label } => write!(f, "spider {i} {j} #{}", label.0),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveError {
    /// The move's legality condition fails; carries a short reason.
    IllegalMove { mv: Move, reason: &'static str },
    /// Raster-order spider decomposition hit an illegal intermediate.
    DecompositionFailed { i: usize, j: usize },
    /// Certificate replay did not reproduce the recorded end sphere.
    ReplayMismatch,
    /// Spheres live over different targets.
    TargetMismatch,
    /// Spheres have different sizes.
    ShapeMismatch,
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::IllegalMove { mv, reason } => write!(f, "illegal move {mv}: {reason}"),
            MoveError::DecompositionFailed { i, j } => {
                write!(f, "spider decomposition stuck at ({i},{j})")
            }
            MoveError::ReplayMismatch => write!(f, "certificate replay missed its end sphere"),
            MoveError::TargetMismatch => write!(f, "spheres have different targets"),
            MoveError::ShapeMismatch => write!(f, "spheres have different sizes"),
        }
    }
}

/// Checks spider legality at `(i, j)` with replacement `label`: the four
/// incident blocks, each together with the old and new entry, must all span
/// simplices.  Boundary entries are immutable.
pub fn spider_legal(f: &FaceSphere, i: usize, j: usize, label: VertexId) -> bool {
    let (m, n) = (f.m(), f.n());
    if i == 0 || j == 0 || i >= m || j >= n {
        return false;
    }
    if !f.target().complex.contains_vertex(label) {
        return false;
    }
    let old = f.at(i, j);
    let complex = &f.target().complex;
    let blocks = [
        [(i - 1, j - 1), (i, j - 1), (i - 1, j), (i, j)],
        [(i, j - 1), (i + 1, j - 1), (i, j), (i + 1, j)],
        [(i - 1, j), (i, j), (i - 1, j + 1), (i, j + 1)],
        [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)],
    ];
    blocks.iter().all(|corners| {
        let set = [
            f.at(corners[0].0, corners[0].1),
            f.at(corners[1].0, corners[1].1),
            f.at(corners[2].0, corners[2].1),
            f.at(corners[3].0, corners[3].1),
            old,
            label,
        ];
        complex.spans_simplex(&set)
    })
}

fn check_legal(f: &FaceSphere, mv: Move) -> Result<(), MoveError> {
    let (m, n) = (f.m(), f.n());
    let fail = |reason| Err(MoveError::IllegalMove { mv, reason });
    match mv {
        Move::RowDup(j) => {
            if j > n {
                return fail("row index out of range");
            }
        }
        Move::RowDel(j) => {
            if n < 2 {
                return fail("grid would drop below 1x1");
            }
            if j >= n {
                return fail("row index out of range");
            }
            if !f.grid().rows_equal(j, j + 1) {
                return fail("adjacent row differs");
            }
        }
        Move::ColDup(i) => {
            if i > m {
                return fail("column index out of range");
            }
        }
        Move::ColDel(i) => {
            if m < 2 {
                return fail("grid would drop below 1x1");
            }
            if i >= m {
                return fail("column index out of range");
            }
            if !f.grid().cols_equal(i, i + 1) {
                return fail("adjacent column differs");
            }
        }
        Move::Spider { i, j, label } => {
            if !spider_legal(f, i, j, label) {
                return fail("spider conditions fail");
            }
        }
    }
    Ok(())
}

/// Applies a move after checking its legality.
pub fn apply_move(f: &FaceSphere, mv: Move) -> Result<FaceSphere, MoveError> {
    check_legal(f, mv)?;
    let grid = match mv {
        Move::RowDup(j) => f.grid().duplicate_row(j),
        Move::RowDel(j) => f.grid().remove_row(j),
        Move::ColDup(i) => f.grid().duplicate_col(i),
        Move::ColDel(i) => f.grid().remove_col(i),
        Move::Spider { i, j, label } => {
            let mut g = f.grid().clone();
            g.set(i, j, label);
            g
        }
    };
    Ok(FaceSphere::from_grid_unchecked(f.target().clone(), grid))
}

/// Enumerates all legal moves in a fixed order: row duplications, row
/// deletions, column duplications, column deletions, then spider moves by
/// `(i, j, label)`.  Spider candidates run over the target's vertex list in
/// input order and include the entry's current label.
pub fn legal_moves(f: &FaceSphere) -> Vec<Move> {
    let (m, n) = (f.m(), f.n());
    let mut out = Vec::new();
    for j in 0..=n {
        out.push(Move::RowDup(j));
    }
    if n >= 2 {
        for j in 0..n {
            if f.grid().rows_equal(j, j + 1) {
                out.push(Move::RowDel(j));
            }
        }
    }
    for i in 0..=m {
        out.push(Move::ColDup(i));
    }
    if m >= 2 {
        for i in 0..m {
            if f.grid().cols_equal(i, i + 1) {
                out.push(Move::ColDel(i));
            }
        }
    }
    let vertex_count = f.target().complex.vertex_count() as u32;
    for i in 1..m.max(1) {
        for j in 1..n.max(1) {
            for label in 0..vertex_count {
                let label = VertexId(label);
                if spider_legal(f, i, j, label) {
                    out.push(Move::Spider { i, j, label });
                }
            }
        }
    }
    out
}

/// A replayable chain of legal moves between two spheres.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveCertificate {
    pub start: FaceSphere,
    pub moves: Vec<Move>,
    pub end: FaceSphere,
}

impl MoveCertificate {
    /// Replays the moves from `start`, checking legality at each step, and
    /// verifies the result equals `end`.
    pub fn replay(&self) -> Result<(), MoveError> {
        let mut cur = self.start.clone();
        for mv in &self.moves {
            cur = apply_move(&cur, *mv)?;
        }
        if cur == self.end {
            Ok(())
        } else {
            Err(MoveError::ReplayMismatch)
        }
    }

    /// The reversed certificate: end to start, each move inverted.
    pub fn reversed(&self) -> Result<MoveCertificate, MoveError> {
        let mut states = Vec::with_capacity(self.moves.len() + 1);
        states.push(self.start.clone());
        for mv in &self.moves {
            let next = apply_move(states.last().unwrap(), *mv)?;
            states.push(next);
        }
        if states.last() != Some(&self.end) {
            return Err(MoveError::ReplayMismatch);
        }
        let mut moves = Vec::with_capacity(self.moves.len());
        for (k, mv) in self.moves.iter().enumerate().rev() {
            moves.push(invert_move(*mv, &states[k]));
        }
        Ok(MoveCertificate {
            start: self.end.clone(),
            moves,
            end: self.start.clone(),
        })
    }
}

/// The inverse of a move, given the sphere it was applied to.
pub fn invert_move(mv: Move, before: &FaceSphere) -> Move {
    match mv {
        Move::RowDup(j) => Move::RowDel(j),
        Move::RowDel(j) => Move::RowDup(j),
        Move::ColDup(i) => Move::ColDel(i),
        Move::ColDel(i) => Move::ColDup(i),
        Move::Spider { i, j, .. } => Move::Spider { i, j, label: before.at(i, j) },
    }
}

/// Decomposes a single contiguity into spider moves, rewriting one interior
/// entry at a time in raster order.  Every intermediate state stays inside
/// the union bound `f(σ) ∪ g(σ)`, so each step passes the spider conditions;
/// a failure is reported with the stuck cell.
pub fn contiguity_to_spiders(f: &FaceSphere, g: &FaceSphere) -> Result<MoveCertificate, MoveError> {
    if f.target() != g.target() {
        return Err(MoveError::TargetMismatch);
    }
    if f.m() != g.m() || f.n() != g.n() {
        return Err(MoveError::ShapeMismatch);
    }
    let mut moves = Vec::new();
    let mut cur = f.clone();
    for j in 0..=f.n() {
        for i in 0..=f.m() {
            let want = g.at(i, j);
            if cur.at(i, j) == want {
                continue;
            }
            let mv = Move::Spider { i, j, label: want };
            cur = apply_move(&cur, mv).map_err(|_| MoveError::DecompositionFailed { i, j })?;
            moves.push(mv);
        }
    }
    Ok(MoveCertificate { start: f.clone(), moves, end: g.clone() })
}

/// Normal form: repeatedly delete the lowest-index deletable row, then the
/// lowest-index deletable column, until none remain.  The floor is 1x1.
pub fn normalize(f: &FaceSphere) -> FaceSphere {
    normalize_with_moves(f).0
}

/// Normal form together with the deletion moves that reach it.
pub fn normalize_with_moves(f: &FaceSphere) -> (FaceSphere, Vec<Move>) {
    let mut cur = f.clone();
    let mut moves = Vec::new();
    'outer: loop {
        if cur.n() >= 2 {
            for j in 0..cur.n() {
                if cur.grid().rows_equal(j, j + 1) {
                    let mv = Move::RowDel(j);
                    cur = apply_move(&cur, mv).expect("checked deletion");
                    moves.push(mv);
                    continue 'outer;
                }
            }
        }
        if cur.m() >= 2 {
            for i in 0..cur.m() {
                if cur.grid().cols_equal(i, i + 1) {
                    let mv = Move::ColDel(i);
                    cur = apply_move(&cur, mv).expect("checked deletion");
                    moves.push(mv);
                    continue 'outer;
                }
            }
        }
        return (cur, moves);
    }
}

/// A tiny deterministic generator (xorshift64*) for randomized tests and
/// sphere sampling; not a statistical-quality source.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound.max(1) as u64) as usize
    }
}

/// A random valid sphere: the constant `m x n` sphere after `steps` random
/// legal spider moves.  Deterministic in the seed.
pub fn random_sphere(
    target: &crate::complex::PointedComplex,
    m: usize,
    n: usize,
    steps: usize,
    seed: u64,
) -> FaceSphere {
    let mut rng = Rng::new(seed);
    let mut cur = FaceSphere::constant(target, m, n);
    for _ in 0..steps {
        let spiders: Vec<Move> = legal_moves(&cur)
            .into_iter()
            .filter(|mv| matches!(mv, Move::Spider { .. }))
            .collect();
        if spiders.is_empty() {
            break;
        }
        let mv = spiders[rng.below(spiders.len())];
        cur = apply_move(&cur, mv).expect("sampled from legal moves");
    }
    cur
}

/// Like `random_sphere`, but re-rolls until the result is its own normal
/// form (no deletable rows or columns).  Falls back to the last sample.
pub fn random_reduced_sphere(
    target: &crate::complex::PointedComplex,
    m: usize,
    n: usize,
    steps: usize,
    seed: u64,
) -> FaceSphere {
    let mut seed = seed;
    for _ in 0..32 {
        let f = random_sphere(target, m, n, steps, seed);
        if normalize(&f) == f {
            return f;
        }
        seed = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
    random_sphere(target, m, n, steps, seed)
}

/// Renders a grid in array style, top row first, for error messages and the
/// CLI.  Labels are padded to a common width.
pub fn render_ascii(f: &FaceSphere) -> String {
    use core::fmt::Write;
    let names: Vec<Vec<String>> = (0..=f.n())
        .map(|j| {
            (0..=f.m())
                .map(|i| f.target().complex.vertex_name(f.at(i, j)))
                .collect()
        })
        .collect();
    let width = names
        .iter()
        .flat_map(|row| row.iter().map(|s| s.len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for j in (0..=f.n()).rev() {
        for i in 0..=f.m() {
            if i > 0 {
                out.push(' ');
            }
            let name = &names[j][i];
            let _ = write!(out, "{name:>width$}");
        }
        out.push('\n');
    }
    out
}
