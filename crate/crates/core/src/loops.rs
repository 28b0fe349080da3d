//! Edge loops and their rewriting moves: the one-dimensional counterpart of
//! the face-sphere system, used both on its own and as the row-wise view of
//! spheres.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{PointedComplex, VertexId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LoopError {
    /// An endpoint differs from the basepoint.
    EndpointViolation,
    /// `{v_i, v_{i+1}}` is not a simplex of the target.
    EdgeViolation { i: usize },
    /// A vertex is not in the target's universe.
    UnknownVertex { i: usize },
    /// The loops live over different targets.
    TargetMismatch,
    /// The requested move is not legal on this loop.
    IllegalMove,
}

impl fmt::Display for LoopError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopError::EndpointViolation => write!(f, "loop endpoints must be the basepoint"),
            LoopError::EdgeViolation { i } => write!(f, "entries {i},{} span no edge", i + 1),
            LoopError::UnknownVertex { i } => write!(f, "entry {i} is not a target vertex"),
            LoopError::TargetMismatch => write!(f, "loops have different targets"),
            LoopError::IllegalMove => write!(f, "move is not legal on this loop"),
        }
    }
}

/// A based edge loop `(v_0, ..., v_m)` with `v_0 = v_m = x0` and consecutive
/// entries spanning edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeLoop {
    target: PointedComplex,
    vertices: Vec<VertexId>,
}

/// A rewriting move on an edge loop.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum LoopMove {
    /// Repeat entry `i` (insert a copy after it).
    Dup(usize),
    /// Delete entry `i`; legal when it equals entry `i + 1`.
    Del(usize),
    /// Replace interior entry `i` by the given vertex; legal when both
    /// `{v_{i-1}, v_i, v'}` and `{v_i, v', v_{i+1}}` are simplices.
    Subst(usize, VertexId),
}

impl EdgeLoop {
    pub fn new(target: PointedComplex, vertices: Vec<VertexId>) -> Result<EdgeLoop, LoopError> {
        let l = EdgeLoop { target, vertices };
        l.validate()?;
        Ok(l)
    }

    pub(crate) fn from_vertices_unchecked(
        target: PointedComplex,
        vertices: Vec<VertexId>,
    ) -> EdgeLoop {
        EdgeLoop { target, vertices }
    }

    pub fn constant(target: &PointedComplex, m: usize) -> EdgeLoop {
        EdgeLoop {
            target: target.clone(),
            vertices: alloc::vec![target.basepoint; m + 1],
        }
    }

    pub fn validate(&self) -> Result<(), LoopError> {
        if self.vertices.is_empty() {
            return Err(LoopError::EndpointViolation);
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if !self.target.complex.contains_vertex(*v) {
                return Err(LoopError::UnknownVertex { i });
            }
        }
        if self.vertices[0] != self.target.basepoint
            || *self.vertices.last().unwrap() != self.target.basepoint
        {
            return Err(LoopError::EndpointViolation);
        }
        for i in 0..self.vertices.len() - 1 {
            if !self
                .target
                .complex
                .spans_simplex(&[self.vertices[i], self.vertices[i + 1]])
            {
                return Err(LoopError::EdgeViolation { i });
            }
        }
        Ok(())
    }

    pub fn target(&self) -> &PointedComplex {
        &self.target
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Length `m` of a loop `(v_0, ..., v_m)`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.iter().all(|v| *v == self.target.basepoint)
    }

    /// All legal moves, duplications first, then deletions, then
    /// substitutions ordered by index and label.
    pub fn legal_moves(&self) -> Vec<LoopMove> {
        let m = self.len();
        let mut out = Vec::new();
        for i in 0..=m {
            out.push(LoopMove::Dup(i));
        }
        if m >= 2 {
            for i in 0..m {
                if self.vertices[i] == self.vertices[i + 1] {
                    out.push(LoopMove::Del(i));
                }
            }
        }
        for i in 1..m {
            for v in 0..self.target.complex.vertex_count() as u32 {
                let v = VertexId(v);
                if self.subst_legal(i, v) {
                    out.push(LoopMove::Subst(i, v));
                }
            }
        }
        out
    }

    fn subst_legal(&self, i: usize, v: VertexId) -> bool {
        i >= 1
            && i < self.len()
            && self
                .target
                .complex
                .spans_simplex(&[self.vertices[i - 1], self.vertices[i], v])
            && self
                .target
                .complex
                .spans_simplex(&[self.vertices[i], v, self.vertices[i + 1]])
    }

    pub fn apply(&self, mv: LoopMove) -> Result<EdgeLoop, LoopError> {
        let mut vs = self.vertices.clone();
        match mv {
            LoopMove::Dup(i) => {
                if i > self.len() {
                    return Err(LoopError::IllegalMove);
                }
                vs.insert(i + 1, vs[i]);
            }
            LoopMove::Del(i) => {
                if self.len() < 2 || i >= self.len() || vs[i] != vs[i + 1] {
                    return Err(LoopError::IllegalMove);
                }
                vs.remove(i);
            }
            LoopMove::Subst(i, v) => {
                if !self.subst_legal(i, v) {
                    return Err(LoopError::IllegalMove);
                }
                vs[i] = v;
            }
        }
        Ok(EdgeLoop { target: self.target.clone(), vertices: vs })
    }

    /// Deletes repeated adjacent entries, lowest index first, down to length
    /// one at most.
    pub fn normalize(&self) -> EdgeLoop {
        let mut cur = self.clone();
        loop {
            let m = cur.len();
            if m < 2 {
                return cur;
            }
            let mut deleted = false;
            for i in 0..m {
                if cur.vertices[i] == cur.vertices[i + 1] {
                    cur = cur.apply(LoopMove::Del(i)).expect("deletion checked");
                    deleted = true;
                    break;
                }
            }
            if !deleted {
                return cur;
            }
        }
    }
}

/// Concatenation, dropping the duplicated basepoint in the middle.
pub fn concat(a: &EdgeLoop, b: &EdgeLoop) -> Result<EdgeLoop, LoopError> {
    if a.target != b.target {
        return Err(LoopError::TargetMismatch);
    }
    let mut vs = a.vertices.clone();
    vs.extend_from_slice(&b.vertices[1..]);
    Ok(EdgeLoop { target: a.target.clone(), vertices: vs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_explicit, octahedron, PointedComplex};
    use alloc::sync::Arc;
    use alloc::vec;

    fn solid_triangle() -> PointedComplex {
        let c = Arc::new(build_explicit(&[vec!["a", "b", "c"]]).unwrap());
        let a = c.vertex_by_name("a").unwrap();
        PointedComplex::new(c, a).unwrap()
    }

    fn hollow_triangle() -> PointedComplex {
        let c = Arc::new(
            build_explicit(&[vec!["a", "b"], vec!["b", "c"], vec!["c", "a"]]).unwrap(),
        );
        let a = c.vertex_by_name("a").unwrap();
        PointedComplex::new(c, a).unwrap()
    }

    #[test]
    fn constant_loop_substitutions_reach_neighbors() {
        let oct = octahedron();
        let l = EdgeLoop::constant(&oct, 2);
        let subs: Vec<_> = l
            .legal_moves()
            .into_iter()
            .filter_map(|m| match m {
                LoopMove::Subst(1, v) => Some(oct.complex.vertex_name(v)),
                _ => None,
            })
            .collect();
        // Every vertex joinable to -e1 by an edge, including -e1 itself.
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|n| n != "e1"));
    }

    #[test]
    fn deletions_only_on_repeats() {
        let tri = solid_triangle();
        let a = tri.basepoint;
        let b = tri.complex.vertex_by_name("b").unwrap();
        let l = EdgeLoop::new(tri.clone(), vec![a, b, b, a]).unwrap();
        let dels: Vec<_> = l
            .legal_moves()
            .into_iter()
            .filter(|m| matches!(m, LoopMove::Del(_)))
            .collect();
        assert_eq!(dels, vec![LoopMove::Del(1)]);
        let c = tri.complex.vertex_by_name("c").unwrap();
        let no_repeat = EdgeLoop::new(tri, vec![a, b, c, a]).unwrap();
        assert!(no_repeat
            .legal_moves()
            .iter()
            .all(|m| !matches!(m, LoopMove::Del(_))));
    }

    #[test]
    fn hollow_triangle_blocks_substitution() {
        let tri = hollow_triangle();
        let a = tri.basepoint;
        let b = tri.complex.vertex_by_name("b").unwrap();
        let c = tri.complex.vertex_by_name("c").unwrap();
        let l = EdgeLoop::new(tri, vec![a, b, c, a]).unwrap();
        assert!(l
            .legal_moves()
            .iter()
            .all(|m| !matches!(m, LoopMove::Subst(..))));
    }

    #[test]
    fn normalize_collapses_repeats() {
        let tri = solid_triangle();
        let a = tri.basepoint;
        let b = tri.complex.vertex_by_name("b").unwrap();
        let l = EdgeLoop::new(tri.clone(), vec![a, a, b, b, b, a]).unwrap();
        let n = l.normalize();
        assert_eq!(n.vertices(), &[a, b, a]);
        assert_eq!(EdgeLoop::constant(&tri, 4).normalize().len(), 1);
    }

    #[test]
    fn concat_drops_middle_basepoint() {
        let tri = solid_triangle();
        let a = tri.basepoint;
        let b = tri.complex.vertex_by_name("b").unwrap();
        let l1 = EdgeLoop::new(tri.clone(), vec![a, b, a]).unwrap();
        let l2 = EdgeLoop::new(tri.clone(), vec![a, a]).unwrap();
        let both = concat(&l1, &l2).unwrap();
        assert_eq!(both.vertices(), &[a, b, a, a]);
        assert!(both.validate().is_ok());
    }
}
