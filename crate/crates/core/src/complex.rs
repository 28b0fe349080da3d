//! Abstract simplicial complexes and the stock constructions used throughout
//! the crate: intervals, categorical grid products, Cartesian (triangulated)
//! grids, clique complexes and the octahedral 2-sphere.
//!
//! Complexes are immutable after construction.  Explicit complexes store only
//! their maximal simplices; membership for product-like complexes is decided
//! lazily from coordinate projections and is never enumerated.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a vertex within one complex's vertex universe.
///
/// Two vertices of the same complex are equal iff their display names are
/// equal, so a `VertexId` is only meaningful paired with its complex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A simplex: a strictly sorted, duplicate-free set of vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from arbitrary vertices, sorting and deduplicating.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `len - 1`; the empty simplex reports dimension 0 quirks to
    /// nobody because it is never stored.
    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        subset_of_sorted(&self.0, &other.0)
    }
}

fn subset_of_sorted(small: &[VertexId], big: &[VertexId]) -> bool {
    let mut it = big.iter();
    'outer: for v in small {
        for w in it.by_ref() {
            if w == v {
                continue 'outer;
            }
            if w > v {
                return false;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComplexError {
    /// `build_explicit` was handed no simplices, or one that is empty.
    EmptyComplex,
    /// A vertex name does not occur in the complex.
    UnknownVertex(String),
    /// A vertex id is out of range for the complex's universe.
    VertexOutOfRange { id: u32, universe: usize },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyComplex => write!(f, "complex has no simplices"),
            ComplexError::UnknownVertex(name) => write!(f, "unknown vertex: {name}"),
            ComplexError::VertexOutOfRange { id, universe } => {
                write!(f, "vertex id {id} out of range (universe size {universe})")
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Kind {
    /// Maximal simplices plus a vertex-to-maximal incidence index.
    Explicit {
        names: Vec<String>,
        maximal: Vec<Simplex>,
        incidence: Vec<Vec<u32>>,
    },
    /// The simplicial interval `0 -- 1 -- ... -- m`.
    Interval { m: usize },
    /// Categorical product of two intervals; vertices are pairs `(i, j)`.
    GridProduct { m: usize, n: usize },
    /// The grid triangulated by bottom-left-to-top-right diagonals.
    CartesianGrid { m: usize, n: usize },
    /// Lazy categorical product; membership via coordinate projections.
    Product {
        left: Arc<SimplicialComplex>,
        right: Arc<SimplicialComplex>,
    },
    /// Flag complex of a graph: simplices are cliques.
    Clique {
        names: Vec<String>,
        adjacency: Vec<bool>, // row-major v * count + w
    },
}

/// An abstract simplicial complex in one of several storage forms.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    kind: Kind,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (
                Kind::Explicit { names: a, maximal: ma, .. },
                Kind::Explicit { names: b, maximal: mb, .. },
            ) => a == b && ma == mb,
            (Kind::Interval { m: a }, Kind::Interval { m: b }) => a == b,
            (Kind::GridProduct { m: a, n: c }, Kind::GridProduct { m: b, n: d }) => {
                a == b && c == d
            }
            (Kind::CartesianGrid { m: a, n: c }, Kind::CartesianGrid { m: b, n: d }) => {
                a == b && c == d
            }
            (
                Kind::Product { left: la, right: ra },
                Kind::Product { left: lb, right: rb },
            ) => la == lb && ra == rb,
            (
                Kind::Clique { names: a, adjacency: pa },
                Kind::Clique { names: b, adjacency: pb },
            ) => a == b && pa == pb,
            _ => false,
        }
    }
}

impl Eq for SimplicialComplex {}

/// Builds an explicit complex from its maximal simplices, given by vertex
/// name.  Dominated simplices are dropped; the vertex universe is the union.
pub fn build_explicit(maximal: &[Vec<&str>]) -> Result<SimplicialComplex, ComplexError> {
    if maximal.is_empty() {
        return Err(ComplexError::EmptyComplex);
    }
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, u32> = BTreeMap::new();
    let mut simplices: Vec<Simplex> = Vec::new();
    for s in maximal {
        if s.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut ids = Vec::with_capacity(s.len());
        for name in s {
            let id = *index.entry((*name).to_string()).or_insert_with(|| {
                names.push((*name).to_string());
                (names.len() - 1) as u32
            });
            ids.push(VertexId(id));
        }
        simplices.push(Simplex::new(ids));
    }
    Ok(SimplicialComplex::explicit_from_simplices(names, simplices))
}

impl SimplicialComplex {
    pub(crate) fn explicit_from_simplices(
        names: Vec<String>,
        mut simplices: Vec<Simplex>,
    ) -> SimplicialComplex {
        // Drop dominated simplices.
        simplices.sort_by_key(|s| core::cmp::Reverse(s.len()));
        let mut maximal: Vec<Simplex> = Vec::new();
        for s in simplices {
            if !maximal.iter().any(|m| s.is_subset_of(m)) {
                maximal.push(s);
            }
        }
        maximal.sort();
        let mut incidence = vec![Vec::new(); names.len()];
        for (k, s) in maximal.iter().enumerate() {
            for v in s.vertices() {
                incidence[v.index()].push(k as u32);
            }
        }
        SimplicialComplex {
            kind: Kind::Explicit { names, maximal, incidence },
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.kind {
            Kind::Explicit { names, .. } | Kind::Clique { names, .. } => names.len(),
            Kind::Interval { m } => m + 1,
            Kind::GridProduct { m, n } | Kind::CartesianGrid { m, n } => (m + 1) * (n + 1),
            Kind::Product { left, right } => left.vertex_count() * right.vertex_count(),
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count()
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        match &self.kind {
            Kind::Explicit { names, .. } | Kind::Clique { names, .. } => names[v.index()].clone(),
            Kind::Interval { .. } => v.0.to_string(),
            Kind::GridProduct { m, .. } | Kind::CartesianGrid { m, .. } => {
                let (i, j) = grid_coords(v, *m);
                format!("({i},{j})")
            }
            Kind::Product { left, right } => {
                let rc = right.vertex_count() as u32;
                let l = VertexId(v.0 / rc);
                let r = VertexId(v.0 % rc);
                format!("({},{})", left.vertex_name(l), right.vertex_name(r))
            }
        }
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId, ComplexError> {
        let fail = || ComplexError::UnknownVertex(name.to_string());
        match &self.kind {
            Kind::Explicit { names, .. } | Kind::Clique { names, .. } => names
                .iter()
                .position(|n| n == name)
                .map(|i| VertexId(i as u32))
                .ok_or_else(fail),
            Kind::Interval { m } => {
                let i: usize = name.parse().map_err(|_| fail())?;
                if i <= *m {
                    Ok(VertexId(i as u32))
                } else {
                    Err(fail())
                }
            }
            Kind::GridProduct { m, n } | Kind::CartesianGrid { m, n } => {
                let body = name
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(fail)?;
                let (a, b) = body.split_once(',').ok_or_else(fail)?;
                let i: usize = a.trim().parse().map_err(|_| fail())?;
                let j: usize = b.trim().parse().map_err(|_| fail())?;
                if i <= *m && j <= *n {
                    Ok(grid_vertex(i, j, *m))
                } else {
                    Err(fail())
                }
            }
            Kind::Product { .. } => Err(fail()),
        }
    }

    /// Grid dimensions `(m, n)` when this is a grid-shaped complex.
    pub fn grid_dims(&self) -> Option<(usize, usize)> {
        match &self.kind {
            Kind::GridProduct { m, n } | Kind::CartesianGrid { m, n } => Some((*m, *n)),
            _ => None,
        }
    }

    /// Factors of a lazy categorical product.
    pub fn product_factors(&self) -> Option<(&Arc<SimplicialComplex>, &Arc<SimplicialComplex>)> {
        match &self.kind {
            Kind::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Membership test.  Errors on vertices outside the universe; the empty
    /// set is a simplex of every complex.
    pub fn is_simplex(&self, s: &Simplex) -> Result<bool, ComplexError> {
        for v in s.vertices() {
            if !self.contains_vertex(*v) {
                return Err(ComplexError::VertexOutOfRange {
                    id: v.0,
                    universe: self.vertex_count(),
                });
            }
        }
        Ok(self.spans_simplex_sorted(s.vertices()))
    }

    /// Membership for a small, possibly unsorted and duplicated vertex list.
    /// All ids must be in range.
    pub fn spans_simplex(&self, vs: &[VertexId]) -> bool {
        let mut buf = [VertexId(0); 8];
        if vs.len() <= buf.len() {
            buf[..vs.len()].copy_from_slice(vs);
            let slice = &mut buf[..vs.len()];
            slice.sort_unstable();
            let n = dedup_in_place(slice);
            self.spans_simplex_sorted(&slice[..n])
        } else {
            let mut owned: Vec<VertexId> = vs.into();
            owned.sort_unstable();
            owned.dedup();
            self.spans_simplex_sorted(&owned)
        }
    }

    fn spans_simplex_sorted(&self, vs: &[VertexId]) -> bool {
        if vs.is_empty() {
            return true;
        }
        match &self.kind {
            Kind::Explicit { maximal, incidence, .. } => incidence[vs[0].index()]
                .iter()
                .any(|&k| subset_of_sorted(vs, maximal[k as usize].vertices())),
            Kind::Interval { .. } => {
                let lo = vs[0].0;
                let hi = vs[vs.len() - 1].0;
                hi - lo <= 1
            }
            Kind::GridProduct { m, .. } => {
                let (mut ilo, mut ihi) = (usize::MAX, 0);
                let (mut jlo, mut jhi) = (usize::MAX, 0);
                for v in vs {
                    let (i, j) = grid_coords(*v, *m);
                    ilo = ilo.min(i);
                    ihi = ihi.max(i);
                    jlo = jlo.min(j);
                    jhi = jhi.max(j);
                }
                ihi - ilo <= 1 && jhi - jlo <= 1
            }
            Kind::CartesianGrid { m, n } => {
                if vs.len() > 3 {
                    return false;
                }
                let coords: Vec<(usize, usize)> =
                    vs.iter().map(|v| grid_coords(*v, *m)).collect();
                let i0 = coords.iter().map(|c| c.0).min().unwrap();
                let j0 = coords.iter().map(|c| c.1).min().unwrap();
                // Candidate cells touching the lower-left corner of the
                // bounding box; degenerate simplices may sit in two cells.
                for a in i0.saturating_sub(1)..=i0 {
                    for b in j0.saturating_sub(1)..=j0 {
                        if a + 1 > *m || b + 1 > *n {
                            continue;
                        }
                        let lower = [(a, b), (a + 1, b), (a + 1, b + 1)];
                        let upper = [(a, b), (a, b + 1), (a + 1, b + 1)];
                        if coords.iter().all(|c| lower.contains(c))
                            || coords.iter().all(|c| upper.contains(c))
                        {
                            return true;
                        }
                    }
                }
                false
            }
            Kind::Product { left, right } => {
                let rc = right.vertex_count() as u32;
                let mut ls: Vec<VertexId> = vs.iter().map(|v| VertexId(v.0 / rc)).collect();
                let mut rs: Vec<VertexId> = vs.iter().map(|v| VertexId(v.0 % rc)).collect();
                ls.sort_unstable();
                ls.dedup();
                rs.sort_unstable();
                rs.dedup();
                left.spans_simplex_sorted(&ls) && right.spans_simplex_sorted(&rs)
            }
            Kind::Clique { names, adjacency } => {
                let count = names.len();
                for (a, &va) in vs.iter().enumerate() {
                    for &vb in &vs[a + 1..] {
                        if !adjacency[va.index() * count + vb.index()] {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Maximal simplices.  Product complexes enumerate pairwise products of
    /// their factors' maximal simplices, which is exact for the categorical
    /// product.  Clique complexes are not enumerated.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        match &self.kind {
            Kind::Explicit { maximal, .. } => maximal.clone(),
            Kind::Interval { m } => {
                if *m == 0 {
                    vec![Simplex::new(vec![VertexId(0)])]
                } else {
                    (0..*m)
                        .map(|i| Simplex::new(vec![VertexId(i as u32), VertexId(i as u32 + 1)]))
                        .collect()
                }
            }
            Kind::GridProduct { m, n } => {
                let mut out = Vec::new();
                let is = if *m == 0 { 0..1 } else { 0..*m };
                for i in is {
                    let js = if *n == 0 { 0..1 } else { 0..*n };
                    for j in js {
                        let mut vs = Vec::new();
                        for di in 0..=usize::from(*m > 0) {
                            for dj in 0..=usize::from(*n > 0) {
                                vs.push(grid_vertex(i + di, j + dj, *m));
                            }
                        }
                        out.push(Simplex::new(vs));
                    }
                }
                out
            }
            Kind::CartesianGrid { m, n } => {
                let mut out = Vec::new();
                for j in 0..*n {
                    for i in 0..*m {
                        out.push(Simplex::new(vec![
                            grid_vertex(i, j, *m),
                            grid_vertex(i + 1, j, *m),
                            grid_vertex(i + 1, j + 1, *m),
                        ]));
                        out.push(Simplex::new(vec![
                            grid_vertex(i, j, *m),
                            grid_vertex(i, j + 1, *m),
                            grid_vertex(i + 1, j + 1, *m),
                        ]));
                    }
                }
                out
            }
            Kind::Product { left, right } => {
                let rc = right.vertex_count() as u32;
                let mut out = Vec::new();
                for sl in left.maximal_simplices() {
                    for sr in right.maximal_simplices() {
                        let mut vs = Vec::new();
                        for a in sl.vertices() {
                            for b in sr.vertices() {
                                vs.push(VertexId(a.0 * rc + b.0));
                            }
                        }
                        out.push(Simplex::new(vs));
                    }
                }
                out
            }
            Kind::Clique { .. } => Vec::new(),
        }
    }

    /// Face counts by dimension (index k holds the number of k-simplices),
    /// computed by closing the maximal simplices under subsets.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut seen: BTreeMap<Simplex, ()> = BTreeMap::new();
        for s in self.maximal_simplices() {
            let verts = s.vertices();
            let n = verts.len();
            for mask in 1u64..(1 << n) {
                let sub: Vec<VertexId> = (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| verts[b])
                    .collect();
                seen.insert(Simplex::new(sub), ());
            }
        }
        let mut counts = Vec::new();
        for s in seen.keys() {
            let d = s.dimension();
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }
}

pub(crate) fn grid_vertex(i: usize, j: usize, m: usize) -> VertexId {
    VertexId((j * (m + 1) + i) as u32)
}

pub(crate) fn grid_coords(v: VertexId, m: usize) -> (usize, usize) {
    let w = m + 1;
    (v.index() % w, v.index() / w)
}

fn dedup_in_place(slice: &mut [VertexId]) -> usize {
    let mut n = 0;
    for k in 0..slice.len() {
        if n == 0 || slice[k] != slice[n - 1] {
            slice[n] = slice[k];
            n += 1;
        }
    }
    n
}

/// The simplicial interval of length `m`.
pub fn interval(m: usize) -> SimplicialComplex {
    SimplicialComplex { kind: Kind::Interval { m } }
}

/// The categorical product of intervals; maximal simplices are the unit
/// 3-simplices `{(i,j),(i+1,j),(i,j+1),(i+1,j+1)}`.
pub fn grid_product(m: usize, n: usize) -> SimplicialComplex {
    SimplicialComplex { kind: Kind::GridProduct { m, n } }
}

/// The triangulated grid: each unit cell split along the bottom-left to
/// top-right diagonal, giving `2mn` triangles.
pub fn cartesian_grid(m: usize, n: usize) -> SimplicialComplex {
    SimplicialComplex { kind: Kind::CartesianGrid { m, n } }
}

/// Lazy categorical product of two complexes.  A set is a simplex iff both
/// coordinate projections are.
pub fn categorical_product(
    left: Arc<SimplicialComplex>,
    right: Arc<SimplicialComplex>,
) -> SimplicialComplex {
    SimplicialComplex { kind: Kind::Product { left, right } }
}

/// Clique (flag) complex of a graph.  Loops are dropped; edges are
/// symmetrized.
pub fn clique_complex(
    vertices: &[&str],
    edges: &[(&str, &str)],
) -> Result<SimplicialComplex, ComplexError> {
    let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let count = names.len();
    let index_of = |name: &str| -> Result<usize, ComplexError> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
    };
    let mut adjacency = vec![false; count * count];
    for (a, b) in edges {
        let ia = index_of(a)?;
        let ib = index_of(b)?;
        if ia == ib {
            continue;
        }
        adjacency[ia * count + ib] = true;
        adjacency[ib * count + ia] = true;
    }
    Ok(SimplicialComplex { kind: Kind::Clique { names, adjacency } })
}

/// Whether grid vertex `(i, j)` lies on the boundary of `I_m x I_n`, the
/// sub-complex `{0,m} x I_n  ∪  I_m x {0,n}`.
pub fn boundary_contains(m: usize, n: usize, v: (usize, usize)) -> Result<bool, ComplexError> {
    let (i, j) = v;
    if i > m || j > n {
        return Err(ComplexError::VertexOutOfRange {
            id: (j * (m + 1) + i) as u32,
            universe: (m + 1) * (n + 1),
        });
    }
    Ok(i == 0 || i == m || j == 0 || j == n)
}

/// A complex with a chosen basepoint vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedComplex {
    pub complex: Arc<SimplicialComplex>,
    pub basepoint: VertexId,
}

impl PointedComplex {
    pub fn new(
        complex: Arc<SimplicialComplex>,
        basepoint: VertexId,
    ) -> Result<PointedComplex, ComplexError> {
        if !complex.contains_vertex(basepoint) {
            return Err(ComplexError::VertexOutOfRange {
                id: basepoint.0,
                universe: complex.vertex_count(),
            });
        }
        Ok(PointedComplex { complex, basepoint })
    }
}

/// The octahedral model of the 2-sphere: vertices `±e1, ±e2, ±e3`, one
/// triangle for each choice of signs, based at `-e1`.
pub fn octahedron() -> PointedComplex {
    let mut triangles: Vec<Vec<&str>> = Vec::new();
    let names = [["e1", "-e1"], ["e2", "-e2"], ["e3", "-e3"]];
    for s1 in 0..2 {
        for s2 in 0..2 {
            for s3 in 0..2 {
                triangles.push(vec![names[0][s1], names[1][s2], names[2][s3]]);
            }
        }
    }
    let refs: Vec<Vec<&str>> = triangles;
    let complex = build_explicit(&refs).expect("octahedron is nonempty");
    let basepoint = complex.vertex_by_name("-e1").expect("basepoint exists");
    PointedComplex::new(Arc::new(complex), basepoint).expect("basepoint in universe")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_closure_and_domination() {
        let c = build_explicit(&[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        assert_eq!(c.vertex_count(), 3);
        let a = c.vertex_by_name("a").unwrap();
        let b = c.vertex_by_name("b").unwrap();
        let cc = c.vertex_by_name("c").unwrap();
        assert!(c.is_simplex(&Simplex::new(vec![a])).unwrap());
        assert!(c.is_simplex(&Simplex::new(vec![a, b])).unwrap());
        assert!(c.is_simplex(&Simplex::new(vec![b, cc])).unwrap());
        assert!(!c.is_simplex(&Simplex::new(vec![a, cc])).unwrap());

        let d = build_explicit(&[vec!["a", "b"], vec!["a", "b", "c"]]).unwrap();
        assert_eq!(d.maximal_simplices().len(), 1);
        assert_eq!(d.maximal_simplices()[0].len(), 3);
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(build_explicit(&[]), Err(ComplexError::EmptyComplex));
        assert_eq!(build_explicit(&[vec![]]), Err(ComplexError::EmptyComplex));
    }

    #[test]
    fn interval_shape() {
        let c = interval(0);
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.maximal_simplices().len(), 1);
        let c = interval(2);
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.face_counts(), vec![3, 2]);
        let c = interval(5);
        assert_eq!(c.face_counts(), vec![6, 5]);
    }

    #[test]
    fn grid_product_membership() {
        let c = grid_product(5, 4);
        assert_eq!(c.vertex_count(), 30);
        // A unit block is a 3-simplex.
        let s = Simplex::new(vec![
            grid_vertex(0, 0, 5),
            grid_vertex(1, 0, 5),
            grid_vertex(0, 1, 5),
            grid_vertex(1, 1, 5),
        ]);
        assert!(c.is_simplex(&s).unwrap());
        // Vertices two apart are not joined.
        let s = Simplex::new(vec![grid_vertex(0, 0, 5), grid_vertex(2, 0, 5)]);
        assert!(!c.is_simplex(&s).unwrap());
        let one = grid_product(1, 1);
        assert_eq!(one.maximal_simplices().len(), 1);
        assert_eq!(one.maximal_simplices()[0].len(), 4);
        // Degenerate product is an interval in disguise.
        let degenerate = grid_product(3, 0);
        let iv = interval(3);
        for a in 0..4u32 {
            for b in 0..4u32 {
                let s_deg = Simplex::new(vec![VertexId(a), VertexId(b)]);
                let s_int = Simplex::new(vec![VertexId(a), VertexId(b)]);
                assert_eq!(
                    degenerate.is_simplex(&s_deg).unwrap(),
                    iv.is_simplex(&s_int).unwrap()
                );
            }
        }
    }

    #[test]
    fn cartesian_grid_shape() {
        let c = cartesian_grid(5, 4);
        assert_eq!(c.vertex_count(), 30);
        assert_eq!(c.maximal_simplices().len(), 40);
        assert_eq!(cartesian_grid(1, 1).maximal_simplices().len(), 2);
        assert_eq!(cartesian_grid(2, 1).maximal_simplices().len(), 4);
        // The anti-diagonal pair is not an edge of the triangulation but is
        // an edge of the categorical product.
        let anti = Simplex::new(vec![grid_vertex(0, 1, 5), grid_vertex(1, 0, 5)]);
        assert!(!c.is_simplex(&anti).unwrap());
        assert!(grid_product(5, 4).is_simplex(&anti).unwrap());
        // Every triangulation simplex is a product simplex.
        let gp = grid_product(5, 4);
        for s in c.maximal_simplices() {
            assert!(c.is_simplex(&s).unwrap());
            assert!(gp.is_simplex(&s).unwrap());
        }
    }

    #[test]
    fn product_consistency_small_intervals() {
        // Exhaustive check of the projection rule on subsets of size <= 4.
        for (m, n) in [(1usize, 1usize), (2, 2), (3, 2)] {
            let left = Arc::new(interval(m));
            let right = Arc::new(interval(n));
            let prod = categorical_product(left.clone(), right.clone());
            let count = prod.vertex_count();
            let all: Vec<u32> = (0..count as u32).collect();
            let mut stack = vec![Vec::new()];
            while let Some(cur) = stack.pop() {
                if cur.len() == 4 {
                    continue;
                }
                let start = cur.last().map(|v: &u32| v + 1).unwrap_or(0);
                for v in start..all.len() as u32 {
                    let mut next = cur.clone();
                    next.push(v);
                    let s = Simplex::new(next.iter().map(|x| VertexId(*x)).collect());
                    let rc = right.vertex_count() as u32;
                    let ls =
                        Simplex::new(s.vertices().iter().map(|v| VertexId(v.0 / rc)).collect());
                    let rs =
                        Simplex::new(s.vertices().iter().map(|v| VertexId(v.0 % rc)).collect());
                    let expect = left.is_simplex(&ls).unwrap() && right.is_simplex(&rs).unwrap();
                    assert_eq!(prod.is_simplex(&s).unwrap(), expect);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn product_with_point_matches_factor() {
        let oct = octahedron();
        let point = Arc::new(interval(0));
        let prod = categorical_product(oct.complex.clone(), point);
        for s in oct.complex.maximal_simplices() {
            // With a single right-hand vertex the pairing is the identity.
            let lifted = Simplex::new(s.vertices().to_vec());
            assert!(prod.is_simplex(&lifted).unwrap());
        }
    }

    #[test]
    fn clique_complex_examples() {
        let tri = clique_complex(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let abc = Simplex::new(vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert!(tri.is_simplex(&abc).unwrap());

        let square = clique_complex(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        assert!(!square.is_simplex(&abc).unwrap());
        assert!(square
            .is_simplex(&Simplex::new(vec![VertexId(0), VertexId(1)]))
            .unwrap());

        // Unknown endpoint is an error.
        assert!(clique_complex(&["a"], &[("a", "z")]).is_err());
    }

    #[test]
    fn grid_graph_clique_complex_agrees_with_product() {
        for (m, n) in [(2usize, 2usize), (3, 2)] {
            let mut names: Vec<String> = Vec::new();
            for j in 0..=n {
                for i in 0..=m {
                    names.push(format!("({i},{j})"));
                }
            }
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let mut edges = Vec::new();
            for j in 0..=n {
                for i in 0..=m {
                    for j2 in 0..=n {
                        for i2 in 0..=m {
                            let di = (i as isize - i2 as isize).abs();
                            let dj = (j as isize - j2 as isize).abs();
                            if di.max(dj) == 1 {
                                edges.push((
                                    name_refs[j * (m + 1) + i],
                                    name_refs[j2 * (m + 1) + i2],
                                ));
                            }
                        }
                    }
                }
            }
            let cl = clique_complex(&name_refs, &edges).unwrap();
            let gp = grid_product(m, n);
            // Clique vertex k has the same (i, j) encoding as the grid.
            for j in 0..n {
                for i in 0..m {
                    let block = [
                        grid_vertex(i, j, m),
                        grid_vertex(i + 1, j, m),
                        grid_vertex(i, j + 1, m),
                        grid_vertex(i + 1, j + 1, m),
                    ];
                    for mask in 1u32..16 {
                        let vs: Vec<VertexId> = (0..4)
                            .filter(|b| mask & (1 << b) != 0)
                            .map(|b| block[b])
                            .collect();
                        let s = Simplex::new(vs);
                        assert_eq!(cl.is_simplex(&s).unwrap(), gp.is_simplex(&s).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn octahedron_census() {
        let oct = octahedron();
        assert_eq!(oct.complex.face_counts(), vec![6, 12, 8]);
        let e1 = oct.complex.vertex_by_name("e1").unwrap();
        let me1 = oct.complex.vertex_by_name("-e1").unwrap();
        let e2 = oct.complex.vertex_by_name("e2").unwrap();
        let e3 = oct.complex.vertex_by_name("e3").unwrap();
        assert!(!oct.complex.is_simplex(&Simplex::new(vec![e1, me1])).unwrap());
        assert!(oct.complex.is_simplex(&Simplex::new(vec![e1, e2, e3])).unwrap());
        assert_eq!(oct.basepoint, me1);
    }

    #[test]
    fn boundary_vertices() {
        assert!(crate::boundary_contains(5, 4, (0, 2)).unwrap());
        assert!(!crate::boundary_contains(5, 4, (2, 2)).unwrap());
        assert!(crate::boundary_contains(5, 4, (5, 4)).unwrap());
        assert!(crate::boundary_contains(5, 4, (6, 0)).is_err());
    }
}
