//! Dense matrices over a field with exact Gaussian elimination:
//! rank, RREF, nullspace, determinant, row-space comparison.
//! First-nonzero pivoting keeps every computation deterministic.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Mat::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stacked(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns permuted: out[i][j] = self[i][perm[j]].
    pub fn permute_cols(&self, perm: &[usize]) -> Mat {
        assert_eq!(perm.len(), self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, &pj) in perm.iter().enumerate() {
                out.set(i, j, self.get(i, pj));
            }
        }
        out
    }

    /// Column j scaled by scale[j].
    pub fn scale_cols(&self, field: &Field, scale: &[Elem]) -> Mat {
        assert_eq!(scale.len(), self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, field.mul(self.get(i, j), scale[j]));
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for j in 0..self.cols {
                    acc = field.add(acc, field.mul(self.get(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    /// v (a row vector) times self.
    pub fn vec_mul(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut acc = vec![field.zero(); self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.val() == 0 {
                continue;
            }
            for j in 0..self.cols {
                acc[j] = field.add(acc[j], field.mul(vi, self.get(i, j)));
            }
        }
        acc
    }
}

/// In-place reduction to row echelon form; returns pivot column list and the
/// number of row swaps (for determinants).
fn echelon(field: &Field, m: &mut Mat) -> (Vec<usize>, usize) {
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..m.cols {
        let Some(pr) = (r..m.rows).find(|&i| m.get(i, c).val() != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(pr, j));
                m.set(r, j, b);
                m.set(pr, j, a);
            }
            swaps += 1;
        }
        let inv = field.inv(m.get(r, c)).expect("pivot nonzero");
        for j in c..m.cols {
            m.set(r, j, field.mul(m.get(r, j), inv));
        }
        for i in 0..m.rows {
            if i != r && m.get(i, c).val() != 0 {
                let factor = m.get(i, c);
                for j in c..m.cols {
                    let v = field.sub(m.get(i, j), field.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.rows {
            break;
        }
    }
    (pivots, swaps)
}

pub fn rank(field: &Field, m: &Mat) -> usize {
    let mut work = m.clone();
    echelon(field, &mut work).0.len()
}

/// Reduced row echelon form with pivot columns.
pub fn rref(field: &Field, m: &Mat) -> (Mat, Vec<usize>) {
    let mut work = m.clone();
    let (pivots, _) = echelon(field, &mut work);
    (work, pivots)
}

/// Deterministic basis of {x : m·x = 0}, one vector per free column.
pub fn nullspace(field: &Field, m: &Mat) -> Vec<Vec<Elem>> {
    let (r, pivots) = rref(field, m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(r.get(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Determinant by elimination: product of pivots with the swap sign.
pub fn determinant(field: &Field, m: &Mat) -> Result<Elem> {
    if m.rows != m.cols {
        return Err(Error::InvalidParameter("determinant of non-square".into()));
    }
    // Forward elimination without normalizing pivots.
    let mut w = m.clone();
    let n = m.rows;
    let mut det = field.one();
    let mut sign_swaps = 0usize;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| w.get(i, c).val() != 0) else {
            return Ok(field.zero());
        };
        if pr != c {
            for j in 0..n {
                let (a, b) = (w.get(c, j), w.get(pr, j));
                w.set(c, j, b);
                w.set(pr, j, a);
            }
            sign_swaps += 1;
        }
        let pivot = w.get(c, c);
        det = field.mul(det, pivot);
        let inv = field.inv(pivot).expect("pivot nonzero");
        for i in c + 1..n {
            let factor = field.mul(w.get(i, c), inv);
            if factor.val() == 0 {
                continue;
            }
            for j in c..n {
                let v = field.sub(w.get(i, j), field.mul(factor, w.get(c, j)));
                w.set(i, j, v);
            }
        }
    }
    if sign_swaps % 2 == 1 {
        det = field.neg(det);
    }
    Ok(det)
}

/// Row spaces are equal iff both ranks equal the rank of the stacked matrix.
pub fn row_spaces_equal(field: &Field, a: &Mat, b: &Mat) -> bool {
    let ra = rank(field, a);
    let rb = rank(field, b);
    ra == rb && rank(field, &a.stacked(b)) == ra
}
