//! Rectangular label grids: the shared storage behind face spheres and
//! triangulated grid maps.  Entry `(i, j)` lives at `j * width + i`; row 0 is
//! the bottom row.

use alloc::vec::Vec;

use crate::complex::VertexId;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LabelGrid {
    width: usize,  // m + 1 columns
    height: usize, // n + 1 rows
    labels: Vec<VertexId>,
}

impl LabelGrid {
    pub fn filled(width: usize, height: usize, label: VertexId) -> LabelGrid {
        LabelGrid { width, height, labels: alloc::vec![label; width * height] }
    }

    /// Builds a grid by evaluating `f(i, j)` over all positions.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> VertexId) -> LabelGrid {
        let mut labels = Vec::with_capacity(width * height);
        for j in 0..height {
            for i in 0..width {
                labels.push(f(i, j));
            }
        }
        LabelGrid { width, height, labels }
    }

    /// Builds from rows listed bottom-up; rows must be rectangular.
    pub fn from_rows(rows: &[Vec<VertexId>]) -> Option<LabelGrid> {
        let height = rows.len();
        let width = rows.first()?.len();
        if rows.iter().any(|r| r.len() != width) || width == 0 {
            return None;
        }
        let mut labels = Vec::with_capacity(width * height);
        for row in rows {
            labels.extend_from_slice(row);
        }
        Some(LabelGrid { width, height, labels })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn at(&self, i: usize, j: usize) -> VertexId {
        self.labels[j * self.width + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: VertexId) {
        self.labels[j * self.width + i] = v;
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn row(&self, j: usize) -> &[VertexId] {
        &self.labels[j * self.width..(j + 1) * self.width]
    }

    pub fn rows_equal(&self, a: usize, b: usize) -> bool {
        self.row(a) == self.row(b)
    }

    pub fn cols_equal(&self, a: usize, b: usize) -> bool {
        (0..self.height).all(|j| self.at(a, j) == self.at(b, j))
    }

    /// Inserts a copy of row `j` directly above it.
    pub fn duplicate_row(&self, j: usize) -> LabelGrid {
        LabelGrid::from_fn(self.width, self.height + 1, |i, jj| {
            self.at(i, if jj <= j { jj } else { jj - 1 })
        })
    }

    pub fn remove_row(&self, j: usize) -> LabelGrid {
        LabelGrid::from_fn(self.width, self.height - 1, |i, jj| {
            self.at(i, if jj < j { jj } else { jj + 1 })
        })
    }

    /// Inserts a copy of column `i` directly to its right.
    pub fn duplicate_col(&self, i: usize) -> LabelGrid {
        LabelGrid::from_fn(self.width + 1, self.height, |ii, j| {
            self.at(if ii <= i { ii } else { ii - 1 }, j)
        })
    }

    pub fn remove_col(&self, i: usize) -> LabelGrid {
        LabelGrid::from_fn(self.width - 1, self.height, |ii, j| {
            self.at(if ii < i { ii } else { ii + 1 }, j)
        })
    }

    /// Canonical byte serialization: dimensions then labels, little endian.
    /// This is the hashing and dedup key for search and certificates.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + 4 * self.labels.len());
        out.extend_from_slice(&(self.width as u32).to_le_bytes());
        out.extend_from_slice(&(self.height as u32).to_le_bytes());
        for v in &self.labels {
            out.extend_from_slice(&v.0.to_le_bytes());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    #[test]
    fn row_and_col_edits_roundtrip() {
        let g = LabelGrid::from_rows(&[
            alloc::vec![v(0), v(1)],
            alloc::vec![v(2), v(3)],
        ])
        .unwrap();
        let up = g.duplicate_row(0);
        assert_eq!(up.height(), 3);
        assert!(up.rows_equal(0, 1));
        assert_eq!(up.remove_row(1), g);
        let right = g.duplicate_col(1);
        assert_eq!(right.width(), 3);
        assert!(right.cols_equal(1, 2));
        assert_eq!(right.remove_col(2), g);
    }

    #[test]
    fn canonical_bytes_distinguish_dims() {
        let a = LabelGrid::filled(2, 3, v(0));
        let b = LabelGrid::filled(3, 2, v(0));
        assert_ne!(a.canonical_bytes(), b.canonical_bytes());
    }
}
