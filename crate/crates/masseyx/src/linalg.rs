//! Dense exact matrices over a [`FieldSpec`], used by the code and scheme
//! layers. Row-major `u16` storage; every routine is pure.

use crate::gf::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u16>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u16>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        debug_assert!(rows.iter().all(|x| x.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Columns picked by index (may repeat / reorder).
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zero(self.rows, cols.len());
        for r in 0..self.rows {
            for (i, &c) in cols.iter().enumerate() {
                out.set(r, i, self.at(r, c));
            }
        }
        out
    }

    pub fn mul(&self, f: &FieldSpec, other: &Mat) -> Mat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.at(r, i);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let t = f.mul(a, other.at(i, c));
                    out.set(r, c, f.add(out.at(r, c), t));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self, f: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let tmp = self.at(r, j);
                    self.set(r, j, self.at(pr, j));
                    self.set(pr, j, tmp);
                }
            }
            let inv = f.inv(self.at(r, c));
            if inv != 1 {
                for j in 0..self.cols {
                    let v = f.mul(self.at(r, j), inv);
                    self.set(r, j, v);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.at(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, f: &FieldSpec) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(f);
        (m, piv)
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per row.
    pub fn kernel(&self, f: &FieldSpec) -> Mat {
        let (red, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(red.at(r, fc)));
            }
        }
        out
    }

    /// One solution of `A x = b`, if consistent.
    pub fn solve(&self, f: &FieldSpec, b: &[u16]) -> Option<Vec<u16>> {
        debug_assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.rref_in_place(f);
        if pivots.contains(&self.cols) {
            return None; // row [0 .. 0 | 1]
        }
        let mut x = vec![0u16; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols);
        }
        Some(x)
    }
}

/// v + scale * row, in place.
pub(crate) fn add_scaled(f: &FieldSpec, v: &mut [u16], row: &[u16], scale: u16) {
    if scale == 0 {
        return;
    }
    for (a, &b) in v.iter_mut().zip(row) {
        *a = f.add(*a, f.mul(scale, b));
    }
}

/// Inner product of two vectors.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn dot(f: &FieldSpec, a: &[u16], b: &[u16]) -> u16 {
    let mut acc = 0u16;
    for (&x, &y) in a.iter().zip(b) {
        acc = f.add(acc, f.mul(x, y));
    }
    acc
}
