//! Bounded bidirectional search for extension-contiguity equivalence.
//!
//! Both spheres are normalized, padded to a common size, and searched over
//! single-entry rewrites with states keyed by their normal forms; padding
//! grows level by level up to the budget.  The frontier is expanded
//! breadth-first from whichever side is smaller and is capped by a
//! deterministic, seed-tied score, so the search is incomplete by design:
//! an `Unknown` outcome carries statistics, never a proof.  Certificates are
//! replay-verified before they are returned.

use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::complex::VertexId;
use crate::loops::{EdgeLoop, LoopError, LoopMove};
use crate::moves::{
    apply_move, invert_move, normalize_with_moves, spider_legal, Move, MoveCertificate, MoveError,
};
use crate::sphere::FaceSphere;

/// Budget knobs for the bounded search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBudget {
    /// Cap on stored states across both directions and all padding levels.
    pub max_states: u64,
    /// Extra rows/columns (or loop length) allowed beyond the larger input.
    pub max_pad: usize,
    /// Tie-breaking seed; the outcome status is deterministic per seed.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_states: 2_000_000, max_pad: 4, seed: 0 }
    }
}

/// Search result: a replayable certificate, or statistics about the failed
/// attempt.  `frontier_exhausted` reports that every padding level ran out
/// of reachable states before the budget did.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome<C> {
    Equivalent(C),
    Unknown { states_explored: u64, frontier_exhausted: bool },
}

impl<C> SearchOutcome<C> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, SearchOutcome::Equivalent(_))
    }
}

fn fnv1a(seed: u64, bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

/// A fixed-size rewrite space explored by the bidirectional engine.
trait SearchSpace {
    type State: Clone + PartialEq;
    type Step: Clone;

    /// Normal-form key bytes; equal keys mean provably equivalent states.
    fn key(&self, s: &Self::State) -> Vec<u8>;
    /// Single rewrites preserving the state's size.
    fn expand(&self, s: &Self::State, out: &mut Vec<(Self::Step, Self::State)>);
    /// Beam score against the opposite endpoint; lower is better.
    fn score(&self, s: &Self::State, other_end: &Self::State) -> u64;
    /// Steps from `a` to `b` when their keys agree.
    fn connect(&self, a: &Self::State, b: &Self::State) -> Vec<Self::Step>;
    /// The inverse step, given the state the step was applied to.
    fn invert(&self, step: &Self::Step, before: &Self::State) -> Self::Step;
}

struct Node<S, M> {
    state: S,
    parent: u32,
    step: Option<M>,
}

struct SideData<S, M> {
    nodes: Vec<Node<S, M>>,
    seen: HashMap<Vec<u8>, u32>,
    frontier: Vec<u32>,
}

impl<S: Clone, M: Clone> SideData<S, M> {
    fn new(root: S, key: Vec<u8>) -> Self {
        let mut seen = HashMap::new();
        seen.insert(key, 0u32);
        SideData {
            nodes: alloc::vec![Node { state: root, parent: u32::MAX, step: None }],
            seen,
            frontier: alloc::vec![0],
        }
    }

    fn path_from_root(&self, mut idx: u32) -> (Vec<M>, Vec<&S>) {
        let mut steps = Vec::new();
        let mut states = Vec::new();
        loop {
            let node = &self.nodes[idx as usize];
            states.push(&node.state);
            match &node.step {
                Some(m) => steps.push(m.clone()),
                None => break,
            }
            idx = node.parent;
        }
        steps.reverse();
        states.reverse();
        (steps, states)
    }
}

/// Outcome of one fixed-size bidirectional level: a path of steps from the
/// forward root to the backward root, or exhaustion.
enum LevelOutcome<M> {
    Found(Vec<M>),
    Exhausted,
    BudgetSpent,
}

fn bidirectional_level<SP: SearchSpace>(
    space: &SP,
    start: SP::State,
    goal: SP::State,
    beam_width: usize,
    seed: u64,
    states_left: &mut u64,
    explored: &mut u64,
) -> LevelOutcome<SP::Step> {
    let start_key = space.key(&start);
    let goal_key = space.key(&goal);
    if start_key == goal_key {
        let steps = space.connect(&start, &goal);
        return LevelOutcome::Found(steps);
    }
    let goal_state = goal.clone();
    let start_state = start.clone();
    let mut fwd: SideData<SP::State, SP::Step> = SideData::new(start, start_key);
    let mut bwd: SideData<SP::State, SP::Step> = SideData::new(goal, goal_key);

    let mut scratch: Vec<(SP::Step, SP::State)> = Vec::new();
    loop {
        if fwd.frontier.is_empty() && bwd.frontier.is_empty() {
            return LevelOutcome::Exhausted;
        }
        // Expand the smaller nonempty frontier.
        let forward_turn = if fwd.frontier.is_empty() {
            false
        } else if bwd.frontier.is_empty() {
            true
        } else {
            fwd.frontier.len() <= bwd.frontier.len()
        };
        let (this, other, other_end) = if forward_turn {
            (&mut fwd, &mut bwd, &goal_state)
        } else {
            (&mut bwd, &mut fwd, &start_state)
        };

        let mut candidates: Vec<(u64, u64, Vec<u8>, u32, SP::Step, SP::State)> = Vec::new();
        for &idx in &this.frontier {
            let state = this.nodes[idx as usize].state.clone();
            scratch.clear();
            space.expand(&state, &mut scratch);
            for (step, next) in scratch.drain(..) {
                let key = space.key(&next);
                if this.seen.contains_key(&key) {
                    continue;
                }
                let score = space.score(&next, other_end);
                let tie = fnv1a(seed, &key);
                candidates.push((score, tie, key, idx, step, next));
            }
        }
        candidates.sort_unstable_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        candidates.dedup_by(|a, b| a.2 == b.2);
        candidates.truncate(beam_width);

        let mut next_frontier = Vec::with_capacity(candidates.len());
        let mut meet: Option<(u32, u32)> = None; // (this node, other node)
        for (_, _, key, parent, step, state) in candidates {
            if *states_left == 0 {
                return LevelOutcome::BudgetSpent;
            }
            *states_left -= 1;
            *explored += 1;
            let node_idx = this.nodes.len() as u32;
            this.nodes.push(Node { state, parent, step: Some(step) });
            this.seen.insert(key.clone(), node_idx);
            next_frontier.push(node_idx);
            if let Some(&other_idx) = other.seen.get(&key) {
                meet = Some((node_idx, other_idx));
                break;
            }
        }
        this.frontier = next_frontier;

        if let Some((this_idx, other_idx)) = meet {
            let (fwd_idx, bwd_idx) = if forward_turn {
                (this_idx, other_idx)
            } else {
                (other_idx, this_idx)
            };
            // Forward half: root -> meet.
            let (mut steps, fwd_states) = fwd.path_from_root(fwd_idx);
            let fwd_meet = *fwd_states.last().expect("nonempty path");
            // Backward half: invert root -> meet into meet -> root.
            let (bwd_steps, bwd_states) = bwd.path_from_root(bwd_idx);
            let bwd_meet = *bwd_states.last().expect("nonempty path");
            steps.extend(space.connect(fwd_meet, bwd_meet));
            for (k, step) in bwd_steps.iter().enumerate().rev() {
                steps.push(space.invert(step, bwd_states[k]));
            }
            return LevelOutcome::Found(steps);
        }
    }
}

fn beam_width(budget: &SearchBudget) -> usize {
    (budget.max_states / 64).clamp(256, 65_536) as usize
}

// ---------------------------------------------------------------------------
// Face spheres
// ---------------------------------------------------------------------------

struct SphereSpace;

impl SearchSpace for SphereSpace {
    type State = FaceSphere;
    type Step = Move;

    fn key(&self, s: &FaceSphere) -> Vec<u8> {
        crate::moves::normalize(s).grid().canonical_bytes()
    }

    fn expand(&self, s: &FaceSphere, out: &mut Vec<(Move, FaceSphere)>) {
        let (m, n) = (s.m(), s.n());
        let vertex_count = s.target().complex.vertex_count() as u32;
        for i in 1..m.max(1) {
            for j in 1..n.max(1) {
                let current = s.at(i, j);
                for label in 0..vertex_count {
                    let label = VertexId(label);
                    if label == current || !spider_legal(s, i, j, label) {
                        continue;
                    }
                    let mv = Move::Spider { i, j, label };
                    let next = apply_move(s, mv).expect("checked spider");
                    out.push((mv, next));
                }
            }
        }
    }

    fn score(&self, s: &FaceSphere, other_end: &FaceSphere) -> u64 {
        s.grid()
            .labels()
            .iter()
            .zip(other_end.grid().labels())
            .filter(|(a, b)| a != b)
            .count() as u64
    }

    fn connect(&self, a: &FaceSphere, b: &FaceSphere) -> Vec<Move> {
        let (na, dels_a) = normalize_with_moves(a);
        let (nb, dels_b) = normalize_with_moves(b);
        debug_assert_eq!(na, nb);
        let mut steps = dels_a;
        steps.extend(invert_sequence(b, &dels_b));
        steps
    }

    fn invert(&self, step: &Move, before: &FaceSphere) -> Move {
        invert_move(*step, before)
    }
}

/// Inverts a legal move sequence applied from `base`: the returned moves
/// run from the sequence's end state back to `base`.
fn invert_sequence(base: &FaceSphere, moves: &[Move]) -> Vec<Move> {
    let mut states = Vec::with_capacity(moves.len() + 1);
    states.push(base.clone());
    for mv in moves {
        let next = apply_move(states.last().unwrap(), *mv).expect("sequence replays");
        states.push(next);
    }
    moves
        .iter()
        .enumerate()
        .rev()
        .map(|(k, mv)| invert_move(*mv, &states[k]))
        .collect()
}

/// Duplication moves realizing the trivial extension to `(m, n)`, applied in
/// sequence from `f`.
fn padding_moves(f: &FaceSphere, m: usize, n: usize) -> Vec<Move> {
    let mut out = Vec::new();
    for k in f.m()..m {
        out.push(Move::ColDup(k));
    }
    for k in f.n()..n {
        out.push(Move::RowDup(k));
    }
    out
}

/// Bounded bidirectional search for a certificate connecting `f` and `g` up
/// to trivial extension.
pub fn search_equivalence(
    f: &FaceSphere,
    g: &FaceSphere,
    budget: &SearchBudget,
) -> Result<SearchOutcome<MoveCertificate>, MoveError> {
    if f.target() != g.target() {
        return Err(MoveError::TargetMismatch);
    }
    let (nf, dels_f) = normalize_with_moves(f);
    let (ng, dels_g) = normalize_with_moves(g);

    let finish = |moves: Vec<Move>| -> Result<SearchOutcome<MoveCertificate>, MoveError> {
        let mut end = f.clone();
        for mv in &moves {
            end = apply_move(&end, *mv)?;
        }
        if end != *g {
            return Err(MoveError::ReplayMismatch);
        }
        let cert = MoveCertificate { start: f.clone(), moves, end };
        cert.replay()?;
        Ok(SearchOutcome::Equivalent(cert))
    };

    if nf == ng {
        let mut moves = dels_f;
        moves.extend(invert_sequence(g, &dels_g));
        return finish(moves);
    }

    let space = SphereSpace;
    let width = beam_width(budget);
    let mut states_left = budget.max_states;
    let mut explored = 0u64;
    let mut all_exhausted = true;
    for pad in 0..=budget.max_pad {
        let m = nf.m().max(ng.m()) + pad;
        let n = nf.n().max(ng.n()) + pad;
        let pad_f = padding_moves(&nf, m, n);
        let pad_g = padding_moves(&ng, m, n);
        let start = nf.trivial_extension(m - nf.m(), n - nf.n());
        let goal = ng.trivial_extension(m - ng.m(), n - ng.n());
        match bidirectional_level(&space, start, goal, width, budget.seed, &mut states_left, &mut explored)
        {
            LevelOutcome::Found(path) => {
                let mut moves = dels_f;
                moves.extend(pad_f);
                moves.extend(path);
                moves.extend(invert_sequence(&ng, &pad_g));
                moves.extend(invert_sequence(g, &dels_g));
                return finish(moves);
            }
            LevelOutcome::Exhausted => continue,
            LevelOutcome::BudgetSpent => {
                all_exhausted = false;
                break;
            }
        }
    }
    Ok(SearchOutcome::Unknown {
        states_explored: explored,
        frontier_exhausted: all_exhausted,
    })
}

// ---------------------------------------------------------------------------
// Edge loops
// ---------------------------------------------------------------------------

/// A replayable chain of legal loop moves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoopCertificate {
    pub start: EdgeLoop,
    pub moves: Vec<LoopMove>,
    pub end: EdgeLoop,
}

impl LoopCertificate {
    pub fn replay(&self) -> Result<(), LoopError> {
        let mut cur = self.start.clone();
        for mv in &self.moves {
            cur = cur.apply(*mv)?;
        }
        if cur == self.end {
            Ok(())
        } else {
            Err(LoopError::IllegalMove)
        }
    }
}

struct LoopSpace;

fn loop_key(l: &EdgeLoop) -> Vec<u8> {
    let n = l.normalize();
    let mut out = Vec::with_capacity(4 * n.vertices().len());
    for v in n.vertices() {
        out.extend_from_slice(&v.0.to_le_bytes());
    }
    out
}

fn invert_loop_move(mv: LoopMove, before: &EdgeLoop) -> LoopMove {
    match mv {
        LoopMove::Dup(i) => LoopMove::Del(i),
        LoopMove::Del(i) => LoopMove::Dup(i),
        LoopMove::Subst(i, _) => LoopMove::Subst(i, before.vertices()[i]),
    }
}

fn loop_normalize_with_moves(l: &EdgeLoop) -> (EdgeLoop, Vec<LoopMove>) {
    let mut cur = l.clone();
    let mut moves = Vec::new();
    'outer: loop {
        if cur.len() < 2 {
            return (cur, moves);
        }
        for i in 0..cur.len() {
            if cur.vertices()[i] == cur.vertices()[i + 1] {
                cur = cur.apply(LoopMove::Del(i)).expect("checked deletion");
                moves.push(LoopMove::Del(i));
                continue 'outer;
            }
        }
        return (cur, moves);
    }
}

fn invert_loop_sequence(base: &EdgeLoop, moves: &[LoopMove]) -> Vec<LoopMove> {
    let mut states = Vec::with_capacity(moves.len() + 1);
    states.push(base.clone());
    for mv in moves {
        let next = states.last().unwrap().apply(*mv).expect("sequence replays");
        states.push(next);
    }
    moves
        .iter()
        .enumerate()
        .rev()
        .map(|(k, mv)| invert_loop_move(*mv, &states[k]))
        .collect()
}

impl SearchSpace for LoopSpace {
    type State = EdgeLoop;
    type Step = LoopMove;

    fn key(&self, s: &EdgeLoop) -> Vec<u8> {
        loop_key(s)
    }

    fn expand(&self, s: &EdgeLoop, out: &mut Vec<(LoopMove, EdgeLoop)>) {
        for mv in s.legal_moves() {
            if let LoopMove::Subst(i, v) = mv {
                if s.vertices()[i] == v {
                    continue;
                }
                out.push((mv, s.apply(mv).expect("legal move")));
            }
        }
    }

    fn score(&self, s: &EdgeLoop, other_end: &EdgeLoop) -> u64 {
        s.vertices()
            .iter()
            .zip(other_end.vertices())
            .filter(|(a, b)| a != b)
            .count() as u64
    }

    fn connect(&self, a: &EdgeLoop, b: &EdgeLoop) -> Vec<LoopMove> {
        let (na, dels_a) = loop_normalize_with_moves(a);
        let (nb, dels_b) = loop_normalize_with_moves(b);
        debug_assert_eq!(na, nb);
        let mut steps = dels_a;
        steps.extend(invert_loop_sequence(b, &dels_b));
        steps
    }

    fn invert(&self, step: &LoopMove, before: &EdgeLoop) -> LoopMove {
        invert_loop_move(*step, before)
    }
}

fn loop_padding_moves(l: &EdgeLoop, len: usize) -> Vec<LoopMove> {
    (l.len()..len).map(LoopMove::Dup).collect()
}

/// Bounded bidirectional search over edge loops, mirroring the sphere
/// search with a one-dimensional state space.
pub fn loop_search(
    a: &EdgeLoop,
    b: &EdgeLoop,
    budget: &SearchBudget,
) -> Result<SearchOutcome<LoopCertificate>, LoopError> {
    if a.target() != b.target() {
        return Err(LoopError::TargetMismatch);
    }
    let (na, dels_a) = loop_normalize_with_moves(a);
    let (nb, dels_b) = loop_normalize_with_moves(b);

    let finish = |moves: Vec<LoopMove>| -> Result<SearchOutcome<LoopCertificate>, LoopError> {
        let mut end = a.clone();
        for mv in &moves {
            end = end.apply(*mv)?;
        }
        if end != *b {
            return Err(LoopError::IllegalMove);
        }
        let cert = LoopCertificate { start: a.clone(), moves, end };
        cert.replay()?;
        Ok(SearchOutcome::Equivalent(cert))
    };

    if na == nb {
        let mut moves = dels_a;
        moves.extend(invert_loop_sequence(b, &dels_b));
        return finish(moves);
    }

    let space = LoopSpace;
    let width = beam_width(budget);
    let mut states_left = budget.max_states;
    let mut explored = 0u64;
    let mut all_exhausted = true;
    for pad in 0..=budget.max_pad {
        let len = na.len().max(nb.len()) + pad;
        let pad_a = loop_padding_moves(&na, len);
        let pad_b = loop_padding_moves(&nb, len);
        let mut start = na.clone();
        for mv in &pad_a {
            start = start.apply(*mv).expect("padding replays");
        }
        let mut goal = nb.clone();
        for mv in &pad_b {
            goal = goal.apply(*mv).expect("padding replays");
        }
        match bidirectional_level(&space, start, goal, width, budget.seed, &mut states_left, &mut explored)
        {
            LevelOutcome::Found(path) => {
                let mut moves = dels_a;
                moves.extend(pad_a);
                moves.extend(path);
                moves.extend(invert_loop_sequence(&nb, &pad_b));
                moves.extend(invert_loop_sequence(b, &dels_b));
                return finish(moves);
            }
            LevelOutcome::Exhausted => continue,
            LevelOutcome::BudgetSpent => {
                all_exhausted = false;
                break;
            }
        }
    }
    Ok(SearchOutcome::Unknown {
        states_explored: explored,
        frontier_exhausted: all_exhausted,
    })
}
