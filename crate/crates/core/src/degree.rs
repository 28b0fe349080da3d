//! The degree pairing: a signed count of triangles of the sphere's
//! triangulated domain mapped onto a fixed oriented face of a closed
//! orientable 2-complex.  The count is invariant under all legal moves and
//! separates trivial spheres from generators on the octahedron.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{PointedComplex, VertexId};
use crate::sphere::FaceSphere;

/// An oriented triangle, up to cyclic rotation.
pub type OrientedFace = [VertexId; 3];

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegreeError {
    /// A listed face is not a 2-simplex of the target, or has repeats.
    BadFace(usize),
    /// Some edge is not shared by exactly two faces with opposite induced
    /// directions, so the listed orientation is not coherent.
    NonOrientableTarget,
    /// The reference face is not in the oriented face list.
    FaceNotListed,
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeError::BadFace(k) => write!(f, "oriented face {k} is not a target 2-simplex"),
            DegreeError::NonOrientableTarget => {
                write!(f, "face orientations are not coherent")
            }
            DegreeError::FaceNotListed => write!(f, "reference face missing from orientation"),
        }
    }
}

/// Checks that the faces are distinct target 2-simplices and that every edge
/// occurs in exactly two faces with opposite induced directions.
pub fn check_orientation(
    target: &PointedComplex,
    faces: &[OrientedFace],
) -> Result<(), DegreeError> {
    let mut directed: Vec<(VertexId, VertexId)> = Vec::new();
    for (k, face) in faces.iter().enumerate() {
        if face[0] == face[1] || face[1] == face[2] || face[0] == face[2] {
            return Err(DegreeError::BadFace(k));
        }
        if !target.complex.spans_simplex(face) {
            return Err(DegreeError::BadFace(k));
        }
        for e in 0..3 {
            directed.push((face[e], face[(e + 1) % 3]));
        }
    }
    // Coherence: each directed edge appears once, and its reverse appears
    // exactly once too.
    let mut sorted = directed.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(DegreeError::NonOrientableTarget);
        }
    }
    for (a, b) in &directed {
        if sorted.binary_search(&(*b, *a)).is_err() {
            return Err(DegreeError::NonOrientableTarget);
        }
    }
    Ok(())
}

fn cyclically_equal(a: &OrientedFace, b: &OrientedFace) -> bool {
    (0..3).any(|r| (0..3).all(|k| a[k] == b[(k + r) % 3]))
}

/// Sign of the ordered triple against the oriented face: `+1` when it is a
/// cyclic rotation, `-1` for the reversed orientation, `0` when the triple
/// is degenerate or misses the face.
fn triangle_sign(triple: &[VertexId; 3], face: &OrientedFace) -> i64 {
    if triple[0] == triple[1] || triple[1] == triple[2] || triple[0] == triple[2] {
        return 0;
    }
    let mut sorted_t = *triple;
    sorted_t.sort_unstable();
    let mut sorted_f = *face;
    sorted_f.sort_unstable();
    if sorted_t != sorted_f {
        return 0;
    }
    if cyclically_equal(triple, face) {
        1
    } else {
        -1
    }
}

/// Degree of a sphere against one oriented face of a coherently oriented
/// closed 2-complex.  The sphere's grid is read over the triangulated domain
/// (every triangulation simplex is a product simplex, so the labels restrict
/// without change); each of the `2mn` triangles, in counterclockwise order,
/// contributes its orientation sign when it maps bijectively onto the face.
pub fn degree(
    f: &FaceSphere,
    orientation: &[OrientedFace],
    face: &OrientedFace,
) -> Result<i64, DegreeError> {
    check_orientation(f.target(), orientation)?;
    let reference = orientation
        .iter()
        .find(|of| cyclically_equal(of, face))
        .ok_or(DegreeError::FaceNotListed)?;
    let mut total = 0i64;
    for j in 0..f.n() {
        for i in 0..f.m() {
            // Counterclockwise: lower triangle then upper triangle.
            let lower = [f.at(i, j), f.at(i + 1, j), f.at(i + 1, j + 1)];
            let upper = [f.at(i, j), f.at(i + 1, j + 1), f.at(i, j + 1)];
            total += triangle_sign(&lower, reference);
            total += triangle_sign(&upper, reference);
        }
    }
    Ok(total)
}

/// The outward orientation of the built-in octahedron: the face with signs
/// `(s1, s2, s3)` is read in axis order when the sign product is positive
/// and with the last two vertices swapped otherwise.
pub fn octahedron_orientation(oct: &PointedComplex) -> Vec<OrientedFace> {
    let v = |name: &str| oct.complex.vertex_by_name(name).expect("octahedron vertex");
    let signed = |axis: usize, sign: i32| -> VertexId {
        let names = [["e1", "-e1"], ["e2", "-e2"], ["e3", "-e3"]];
        v(names[axis][usize::from(sign < 0)])
    };
    let mut faces = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            for s3 in [1, -1] {
                let (a, b, c) = (signed(0, s1), signed(1, s2), signed(2, s3));
                if s1 * s2 * s3 > 0 {
                    faces.push([a, b, c]);
                } else {
                    faces.push([a, c, b]);
                }
            }
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::octahedron;
    use crate::sphere::{example_generator_sphere, example_trivial_sphere, FaceSphere};

    fn face(oct: &PointedComplex, a: &str, b: &str, c: &str) -> OrientedFace {
        let v = |n: &str| oct.complex.vertex_by_name(n).unwrap();
        [v(a), v(b), v(c)]
    }

    #[test]
    fn octahedron_orientation_is_coherent() {
        let oct = octahedron();
        let faces = octahedron_orientation(&oct);
        assert_eq!(faces.len(), 8);
        check_orientation(&oct, &faces).unwrap();
    }

    #[test]
    fn flipping_one_face_breaks_coherence() {
        let oct = octahedron();
        let mut faces = octahedron_orientation(&oct);
        faces[0].swap(1, 2);
        assert_eq!(
            check_orientation(&oct, &faces),
            Err(DegreeError::NonOrientableTarget)
        );
    }

    #[test]
    fn constant_sphere_has_degree_zero() {
        let oct = octahedron();
        let faces = octahedron_orientation(&oct);
        let c = FaceSphere::constant(&oct, 4, 3);
        let reference = face(&oct, "e1", "e2", "e3");
        assert_eq!(degree(&c, &faces, &reference).unwrap(), 0);
    }

    #[test]
    fn builtin_spheres_separate() {
        let oct = octahedron();
        let faces = octahedron_orientation(&oct);
        let reference = face(&oct, "e1", "e2", "e3");
        let trivial = example_trivial_sphere(&oct);
        assert_eq!(degree(&trivial, &faces, &reference).unwrap(), 0);
        let generator = example_generator_sphere(&oct);
        assert_eq!(degree(&generator, &faces, &reference).unwrap().abs(), 1);
    }

    #[test]
    fn degree_is_the_same_against_every_face() {
        let oct = octahedron();
        let faces = octahedron_orientation(&oct);
        let generator = example_generator_sphere(&oct);
        let d0 = degree(&generator, &faces, &faces[0].clone()).unwrap();
        for f in &faces {
            assert_eq!(degree(&generator, &faces, f).unwrap(), d0);
        }
    }

    #[test]
    fn reference_face_must_be_listed() {
        let oct = octahedron();
        let faces = octahedron_orientation(&oct);
        let c = FaceSphere::constant(&oct, 1, 1);
        let bogus = face(&oct, "e1", "e2", "-e1");
        assert_eq!(degree(&c, &faces, &bogus), Err(DegreeError::FaceNotListed));
    }
}
