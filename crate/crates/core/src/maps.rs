//! Simplicial maps, contiguity, and the structural interval maps: the
//! collapse maps whose precompositions repeat rows and columns, and plane
//! translations.
//!
//! A map is stored as a total vertex assignment and is validated eagerly: the
//! image of every maximal simplex of the domain must be a simplex of the
//! codomain (checking maximal simplices suffices, since images of faces are
//! subsets of images).

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{categorical_product, Simplex, SimplicialComplex, VertexId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapError {
    /// The assignment does not cover the whole domain universe.
    MissingVertex { expected: usize, got: usize },
    /// Domains or codomains do not line up for the requested operation.
    ShapeMismatch,
    /// An index parameter is out of its allowed range.
    IndexError { index: usize, bound: usize },
    /// The vertex assignment maps some maximal simplex outside the codomain.
    Validation(Vec<Simplex>),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::MissingVertex { expected, got } => {
                write!(f, "assignment covers {got} of {expected} vertices")
            }
            MapError::ShapeMismatch => write!(f, "domain/codomain mismatch"),
            MapError::IndexError { index, bound } => {
                write!(f, "index {index} out of range 0..={bound}")
            }
            MapError::Validation(violations) => {
                write!(f, "{} maximal simplices map outside the codomain", violations.len())
            }
        }
    }
}

/// A simplicial map given by its total vertex assignment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialMap {
    domain: Arc<SimplicialComplex>,
    codomain: Arc<SimplicialComplex>,
    assignment: Vec<VertexId>,
}

impl SimplicialMap {
    /// Builds and validates a map.  Returns every violating maximal simplex
    /// on failure.
    pub fn new(
        domain: Arc<SimplicialComplex>,
        codomain: Arc<SimplicialComplex>,
        assignment: Vec<VertexId>,
    ) -> Result<SimplicialMap, MapError> {
        if assignment.len() != domain.vertex_count() {
            return Err(MapError::MissingVertex {
                expected: domain.vertex_count(),
                got: assignment.len(),
            });
        }
        for v in &assignment {
            if !codomain.contains_vertex(*v) {
                return Err(MapError::IndexError {
                    index: v.index(),
                    bound: codomain.vertex_count().saturating_sub(1),
                });
            }
        }
        let map = SimplicialMap { domain, codomain, assignment };
        match map.validate() {
            Ok(()) => Ok(map),
            Err(violations) => Err(MapError::Validation(violations)),
        }
    }

    /// Re-checks simpliciality: `Ok` iff every maximal domain simplex maps to
    /// a codomain simplex; otherwise lists all violations.
    pub fn validate(&self) -> Result<(), Vec<Simplex>> {
        let mut bad = Vec::new();
        for s in self.domain.maximal_simplices() {
            let image: Vec<VertexId> =
                s.vertices().iter().map(|v| self.assignment[v.index()]).collect();
            if !self.codomain.spans_simplex(&image) {
                bad.push(s);
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    pub fn identity(complex: Arc<SimplicialComplex>) -> SimplicialMap {
        let assignment = (0..complex.vertex_count() as u32).map(VertexId).collect();
        SimplicialMap { domain: complex.clone(), codomain: complex, assignment }
    }

    pub fn constant(
        domain: Arc<SimplicialComplex>,
        codomain: Arc<SimplicialComplex>,
        value: VertexId,
    ) -> SimplicialMap {
        let assignment = alloc::vec![value; domain.vertex_count()];
        SimplicialMap { domain, codomain, assignment }
    }

    pub fn domain(&self) -> &Arc<SimplicialComplex> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SimplicialComplex> {
        &self.codomain
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.assignment[v.index()]
    }

    pub fn assignment(&self) -> &[VertexId] {
        &self.assignment
    }

    pub fn image_of(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.apply(*v)).collect())
    }
}

/// Contiguity: `f(σ) ∪ g(σ)` is a simplex of the codomain for every simplex
/// `σ` of the shared domain; checked on maximal simplices only.
pub fn is_contiguous(f: &SimplicialMap, g: &SimplicialMap) -> Result<bool, MapError> {
    if f.domain != g.domain || f.codomain != g.codomain {
        return Err(MapError::ShapeMismatch);
    }
    for s in f.domain.maximal_simplices() {
        let mut image: Vec<VertexId> = Vec::with_capacity(2 * s.len());
        for v in s.vertices() {
            image.push(f.apply(*v));
            image.push(g.apply(*v));
        }
        if !f.codomain.spans_simplex(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g ∘ f`.
pub fn compose(g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap, MapError> {
    if f.codomain != g.domain {
        return Err(MapError::ShapeMismatch);
    }
    let assignment = f.assignment.iter().map(|v| g.apply(*v)).collect();
    Ok(SimplicialMap {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        assignment,
    })
}

/// The coordinate pairing `(f, g): K -> X x Y`, `v -> (f(v), g(v))`.
pub fn pair_map(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, MapError> {
    if f.domain != g.domain {
        return Err(MapError::ShapeMismatch);
    }
    let codomain = Arc::new(categorical_product(f.codomain.clone(), g.codomain.clone()));
    let rc = g.codomain.vertex_count() as u32;
    let assignment = f
        .assignment
        .iter()
        .zip(&g.assignment)
        .map(|(a, b)| VertexId(a.0 * rc + b.0))
        .collect();
    Ok(SimplicialMap { domain: f.domain.clone(), codomain, assignment })
}

/// The coordinate product `f x g: K1 x K2 -> X1 x X2`.
pub fn product_map(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, MapError> {
    let domain = Arc::new(categorical_product(f.domain.clone(), g.domain.clone()));
    let codomain = Arc::new(categorical_product(f.codomain.clone(), g.codomain.clone()));
    let dom_rc = g.domain.vertex_count() as u32;
    let cod_rc = g.codomain.vertex_count() as u32;
    let mut assignment = Vec::with_capacity(domain.vertex_count());
    for v in 0..domain.vertex_count() as u32 {
        let l = f.apply(VertexId(v / dom_rc));
        let r = g.apply(VertexId(v % dom_rc));
        assignment.push(VertexId(l.0 * cod_rc + r.0));
    }
    Ok(SimplicialMap { domain, codomain, assignment })
}

/// Projection `X x Y -> X` (side 0) or `-> Y` (side 1) of a lazy product.
pub fn projection(product: &Arc<SimplicialComplex>, side: usize) -> Result<SimplicialMap, MapError> {
    let (left, right) = product.product_factors().ok_or(MapError::ShapeMismatch)?;
    let rc = right.vertex_count() as u32;
    let codomain = if side == 0 { left.clone() } else { right.clone() };
    let assignment = (0..product.vertex_count() as u32)
        .map(|v| if side == 0 { VertexId(v / rc) } else { VertexId(v % rc) })
        .collect();
    Ok(SimplicialMap { domain: product.clone(), codomain, assignment })
}

/// Evaluates the collapse map `I_{m+1} -> I_m` at `s`: identity up to `i`,
/// shift down above it.  Precomposition repeats entry `i`.
pub(crate) fn collapse_eval(i: usize, s: usize) -> usize {
    if s <= i {
        s
    } else {
        s - 1
    }
}

/// Evaluates the composite `collapse(i_1) ∘ ... ∘ collapse(i_r)` at `s`
/// (the last index in the list is applied first).
pub(crate) fn collapse_seq_eval(indices: &[usize], s: usize) -> usize {
    let mut v = s;
    for i in indices.iter().rev() {
        v = collapse_eval(*i, v);
    }
    v
}

/// The collapse map `I_{m+1} -> I_m` folding vertex `i+1` onto `i`.
pub fn collapse(i: usize, m: usize) -> Result<SimplicialMap, MapError> {
    if i > m {
        return Err(MapError::IndexError { index: i, bound: m });
    }
    let domain = Arc::new(crate::complex::interval(m + 1));
    let codomain = Arc::new(crate::complex::interval(m));
    let assignment = (0..=m + 1).map(|s| VertexId(collapse_eval(i, s) as u32)).collect();
    Ok(SimplicialMap { domain, codomain, assignment })
}

/// The composite collapse `I_{m+r} -> I_m` for an index list `(i_1, ..,
/// i_r)`; requires `i_t <= m + t - 1` for each position.
pub fn collapse_seq(indices: &[usize], m: usize) -> Result<SimplicialMap, MapError> {
    for (t, i) in indices.iter().enumerate() {
        let bound = m + t; // t is zero-based here
        if *i > bound {
            return Err(MapError::IndexError { index: *i, bound });
        }
    }
    let r = indices.len();
    let domain = Arc::new(crate::complex::interval(m + r));
    let codomain = Arc::new(crate::complex::interval(m));
    let assignment = (0..=m + r)
        .map(|s| VertexId(collapse_seq_eval(indices, s) as u32))
        .collect();
    Ok(SimplicialMap { domain, codomain, assignment })
}

/// `collapse(i)` iterated `r` times: `I_{m+r} -> I_m`, repeating vertex `i`
/// `r` times under precomposition.
pub fn collapse_pow(i: usize, r: usize, m: usize) -> Result<SimplicialMap, MapError> {
    collapse_seq(&alloc::vec![i; r], m)
}

/// A translation of the integer plane, `(i, j) -> (i - p, j - q)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Translation {
    pub p: isize,
    pub q: isize,
}

impl Translation {
    pub fn new(p: isize, q: isize) -> Translation {
        Translation { p, q }
    }

    pub fn apply(&self, point: (isize, isize)) -> (isize, isize) {
        (point.0 - self.p, point.1 - self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{interval, octahedron};

    #[test]
    fn identity_and_constant_validate() {
        let oct = octahedron();
        let id = SimplicialMap::identity(oct.complex.clone());
        assert!(id.validate().is_ok());
        let c = SimplicialMap::constant(oct.complex.clone(), oct.complex.clone(), oct.basepoint);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn validation_catches_antipodal_image() {
        let oct = octahedron();
        let dom = Arc::new(crate::complex::grid_product(1, 1));
        let e1 = oct.complex.vertex_by_name("e1").unwrap();
        let me1 = oct.complex.vertex_by_name("-e1").unwrap();
        let e2 = oct.complex.vertex_by_name("e2").unwrap();
        let e3 = oct.complex.vertex_by_name("e3").unwrap();
        let err = SimplicialMap::new(dom, oct.complex.clone(), alloc::vec![e1, me1, e2, e3]);
        match err {
            Err(MapError::Validation(violations)) => assert_eq!(violations.len(), 1),
            other => panic!("expected validation failure, got {other:?}"),
        }
    }

    #[test]
    fn collapse_formula() {
        assert_eq!(collapse(2, 2).unwrap().apply(VertexId(3)), VertexId(2));
        assert_eq!(collapse(0, 1).unwrap().apply(VertexId(0)), VertexId(0));
        let a13 = collapse(1, 3).unwrap();
        let images: Vec<u32> = (0..5).map(|s| a13.apply(VertexId(s)).0).collect();
        assert_eq!(images, alloc::vec![0, 1, 1, 2, 3]);
        assert!(collapse(3, 2).is_err());
    }

    #[test]
    fn collapse_seq_composition() {
        // A singleton list is the plain collapse.
        let single = collapse_seq(&[2], 2).unwrap();
        let plain = collapse(2, 2).unwrap();
        assert_eq!(single.assignment(), plain.assignment());
        // Two folds at 1.
        assert_eq!(collapse_seq(&[1, 1], 2).unwrap().apply(VertexId(4)), VertexId(2));
        // Range rule: i_t <= m + t - 1.
        assert!(collapse_seq(&[3], 2).is_err());
        assert!(collapse_seq(&[2, 4], 2).is_err());
        assert!(collapse_seq(&[2, 3], 2).is_ok());
    }

    #[test]
    fn contiguity_of_adjacent_collapses() {
        for m in 1..=5 {
            for i in 0..m {
                let a = collapse(i, m).unwrap();
                let b = collapse(i + 1, m).unwrap();
                assert!(is_contiguous(&a, &b).unwrap(), "collapse {i} vs {} at m={m}", i + 1);
            }
        }
        // Skipping an index breaks one-step contiguity.
        let a0 = collapse(0, 2).unwrap();
        let a2 = collapse(2, 2).unwrap();
        assert!(!is_contiguous(&a0, &a2).unwrap());
        // Reflexivity.
        let f = collapse(1, 4).unwrap();
        assert!(is_contiguous(&f, &f).unwrap());
    }

    #[test]
    fn pairing_recovers_coordinates() {
        let dom = Arc::new(interval(2));
        let cod = Arc::new(interval(1));
        let f = collapse(0, 1).unwrap();
        let g = collapse(1, 1).unwrap();
        assert_eq!(f.domain(), &dom);
        let paired = pair_map(&f, &g).unwrap();
        assert!(paired.validate().is_ok());
        let p1 = projection(paired.codomain(), 0).unwrap();
        let p2 = projection(paired.codomain(), 1).unwrap();
        let back_f = compose(&p1, &paired).unwrap();
        let back_g = compose(&p2, &paired).unwrap();
        assert_eq!(back_f.assignment(), f.assignment());
        assert_eq!(back_g.assignment(), g.assignment());
        drop(cod);
    }

    #[test]
    fn product_map_coordinatewise() {
        let a = collapse(0, 1).unwrap();
        let prod = product_map(&a, &a).unwrap();
        assert!(prod.validate().is_ok());
        // Vertex (2, 2) of I_2 x I_2 maps to (1, 1) of I_1 x I_1.
        let dom_rc = 3u32;
        let cod_rc = 2u32;
        let v = VertexId(2 * dom_rc + 2);
        assert_eq!(prod.apply(v), VertexId(1 * cod_rc + 1));
    }

    #[test]
    fn compose_identity() {
        let oct = octahedron();
        let id = SimplicialMap::identity(oct.complex.clone());
        let c = SimplicialMap::constant(oct.complex.clone(), oct.complex.clone(), oct.basepoint);
        let both = compose(&id, &c).unwrap();
        assert_eq!(both.assignment(), c.assignment());
    }

    #[test]
    fn translations() {
        assert_eq!(Translation::new(0, 0).apply((3, 5)), (3, 5));
        assert_eq!(Translation::new(4, 3).apply((4, 3)), (0, 0));
        assert_eq!(Translation::new(3, 2).apply((5, 2)), (2, 0));
    }
}
