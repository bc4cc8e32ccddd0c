//! Exact linear algebra over Q(w_n): determinant, rank, and right kernel by
//! Gaussian elimination with field division.
//!
//! Pivots are chosen as the first nonzero entry in the current column, so
//! eliminations are deterministic and reproducible bit for bit. There is no
//! stability concern: every nonzero pivot is exactly invertible.

use crate::cyclotomic::CycElem;

/// Dense row-major matrix of field elements sharing one conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    conductor: usize,
    rows: usize,
    cols: usize,
    entries: Vec<CycElem>,
}

/// Vector of field elements sharing one conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycVector {
    conductor: usize,
    entries: Vec<CycElem>,
}

impl CycVector {
    pub fn new(conductor: usize, entries: Vec<CycElem>) -> Self {
        for e in &entries {
            assert_eq!(e.conductor(), conductor, "conductor mismatch in vector");
        }
        CycVector { conductor, entries }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CycElem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

impl CycMatrix {
    /// Builds a rows x cols matrix entry by entry.
    pub fn from_fn(
        conductor: usize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycElem,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                assert_eq!(e.conductor(), conductor, "conductor mismatch at ({r},{c})");
                entries.push(e);
            }
        }
        CycMatrix {
            conductor,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(conductor: usize, rows: Vec<Vec<CycElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Self::from_fn(conductor, r, c, |i, j| rows[i][j].clone())
    }

    pub fn identity(conductor: usize, k: usize) -> Self {
        Self::from_fn(conductor, k, k, |i, j| {
            if i == j {
                CycElem::one(conductor)
            } else {
                CycElem::zero(conductor)
            }
        })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &CycElem {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> CycMatrix {
        Self::from_fn(self.conductor, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// The submatrix selecting the given rows and columns, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CycMatrix {
        Self::from_fn(self.conductor, rows.len(), cols.len(), |i, j| {
            self.at(rows[i], cols[j]).clone()
        })
    }

    pub fn mul_vector(&self, v: &CycVector) -> CycVector {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let entries = (0..self.rows)
            .map(|r| {
                let mut acc = CycElem::zero(self.conductor);
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    let x = &v.entries[c];
                    if !e.is_zero() && !x.is_zero() {
                        acc += &(e * x);
                    }
                }
                acc
            })
            .collect();
        CycVector::new(self.conductor, entries)
    }

    fn to_row_vecs(&self) -> Vec<Vec<CycElem>> {
        (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    /// Exact determinant by Gaussian elimination; the zero element for a
    /// singular matrix. Panics on non-square input.
    pub fn determinant(&self) -> CycElem {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        let n = self.rows;
        if n == 0 {
            return CycElem::one(self.conductor);
        }
        let mut m = self.to_row_vecs();
        let mut negate = false;
        let mut det = CycElem::one(self.conductor);
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return CycElem::zero(self.conductor);
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                negate = !negate;
            }
            let pivot = m[col][col].clone();
            let pinv = pivot.inv().expect("pivot is nonzero");
            det = &det * &pivot;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pinv;
                let (pivot_row_slice, target) = split_rows(&mut m, col, r);
                for c in col + 1..n {
                    if !pivot_row_slice[c].is_zero() {
                        target[c] = &target[c] - &(&factor * &pivot_row_slice[c]);
                    }
                }
                target[col] = CycElem::zero(self.conductor);
            }
        }
        if negate {
            -det
        } else {
            det
        }
    }

    /// Row rank over Q(w_n); 0 for the zero (or empty) matrix.
    pub fn rank(&self) -> usize {
        let mut m = self.to_row_vecs();
        let mut pivot_row = 0;
        let mut rank = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(r, pivot_row);
            let pinv = m[pivot_row][col].inv().expect("pivot is nonzero");
            for r in pivot_row + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pinv;
                let (src, dst) = split_rows(&mut m, pivot_row, r);
                for c in col + 1..self.cols {
                    if !src[c].is_zero() {
                        dst[c] = &dst[c] - &(&factor * &src[c]);
                    }
                }
                dst[col] = CycElem::zero(self.conductor);
            }
            rank += 1;
            pivot_row += 1;
        }
        rank
    }

    /// True iff rank equals the column count. Exits as soon as a column
    /// fails to produce a pivot, which makes the dense verification sweeps
    /// cheap in the common full-rank case.
    pub fn has_full_column_rank(&self) -> bool {
        if self.cols > self.rows {
            return false;
        }
        let mut m = self.to_row_vecs();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(r) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                return false;
            };
            m.swap(r, pivot_row);
            let pinv = m[pivot_row][col].inv().expect("pivot is nonzero");
            for r in pivot_row + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pinv;
                let (src, dst) = split_rows(&mut m, pivot_row, r);
                for c in col + 1..self.cols {
                    if !src[c].is_zero() {
                        dst[c] = &dst[c] - &(&factor * &src[c]);
                    }
                }
            }
            pivot_row += 1;
        }
        true
    }

    /// A basis of the right kernel {v : M v = 0}, of size cols - rank(M).
    ///
    /// Each basis vector is in reduced echelon parametrization: its free
    /// variable is set to 1 and the pivot variables are back-substituted
    /// from the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<CycVector> {
        let mut m = self.to_row_vecs();
        // pivots: (row, col) pairs of the reduced echelon form.
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(r, pivot_row);
            let pinv = m[pivot_row][col].inv().expect("pivot is nonzero");
            for entry in m[pivot_row][col..].iter_mut() {
                *entry = &*entry * &pinv;
            }
            for r in 0..self.rows {
                if r == pivot_row || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                let (src, dst) = split_rows(&mut m, pivot_row, r);
                for c in col..self.cols {
                    if !src[c].is_zero() {
                        dst[c] = &dst[c] - &(&factor * &src[c]);
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![CycElem::zero(self.conductor); self.cols];
            v[free] = CycElem::one(self.conductor);
            for &(pr, pc) in &pivots {
                v[pc] = -&m[pr][free];
            }
            basis.push(CycVector::new(self.conductor, v));
        }
        basis
    }
}

/// Disjoint mutable access to a source row and a target row.
fn split_rows<T>(rows: &mut [Vec<T>], src: usize, dst: usize) -> (&Vec<T>, &mut Vec<T>) {
    assert_ne!(src, dst);
    if src < dst {
        let (head, tail) = rows.split_at_mut(dst);
        (&head[src], &mut tail[0])
    } else {
        let (head, tail) = rows.split_at_mut(src);
        (&tail[0], &mut head[dst])
    }
}
