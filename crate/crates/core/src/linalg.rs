//! Dense matrices over an [`ExtField`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::ExtField;

/// Row-major matrix of raw field values.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: ExtField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Output of Gauss-Jordan elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: &ExtField, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &ExtField, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &ExtField, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(field, rows, cols)
    }

    /// Like [`Mat::from_rows`] but keeps the column count for an empty row list.
    pub fn from_rows_with_cols(field: &ExtField, rows: &[Vec<u32>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "ragged rows: expected {cols} columns, got {}",
                    r.len()
                )));
            }
            if let Some(&v) = r.iter().find(|&&v| v >= field.size()) {
                return Err(Error::CoefficientOutOfRange {
                    value: v,
                    p: field.size(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Mat {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        self.field.same_field(&rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Stacks the rows of `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.field.same_field(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::Dimension("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps only the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat {
            field: self.field.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Column j of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows, perm.len());
        for r in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.set(r, j, self.get(r, src));
            }
        }
        out
    }

    /// Gauss-Jordan elimination, pivoting on the first nonzero entry in
    /// column order.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Mat {
        let rref = self.rref();
        let keep: Vec<usize> = (0..rref.rank).collect();
        rref.matrix.select_rows(&keep)
    }

    pub fn same_row_space(&self, other: &Mat) -> bool {
        self.field == other.field
            && self.cols == other.cols
            && self.row_space_basis() == other.row_space_basis()
    }

    /// Basis of {x : M x^T = 0}, one vector per row.
    pub fn kernel_basis(&self) -> Mat {
        let f = &self.field;
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &rref.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in rref.pivots.iter().enumerate() {
                out.set(k, pc, f.neg(rref.matrix.get(r, fc)));
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let k = self.rows;
        let f = &self.field;
        let mut aug = Mat::zeros(f, k, 2 * k);
        for r in 0..k {
            for c in 0..k {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, k + r, 1);
        }
        let rref = aug.rref();
        if rref.pivots.iter().take(k).copied().ne(0..k) {
            return None;
        }
        let mut inv = Mat::zeros(f, k, k);
        for r in 0..k {
            for c in 0..k {
                inv.set(r, c, rref.matrix.get(r, k + c));
            }
        }
        Some(inv)
    }

    /// Uniform random matrix.
    pub fn random<R: Rng>(field: &ExtField, rows: usize, cols: usize, rng: &mut R) -> Mat {
        let q = field.size();
        let data = (0..rows * cols).map(|_| rng.gen_range(0..q)).collect();
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Serializes entries as coefficient vectors: `[[[c0,c1,..], ...], ...]`.
    pub fn to_coeff_rows(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| self.field.coeffs(v)).collect())
            .collect()
    }

    pub fn from_coeff_rows(field: &ExtField, rows: &[Vec<Vec<u32>>], cols: usize) -> Result<Mat> {
        let raw = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| field.from_coeffs(c).map(|e| e.value()))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows_with_cols(field, &raw, cols)
    }
}

/// Deterministic random invertible k x k matrix, by rejection sampling.
pub fn random_invertible(field: &ExtField, k: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_invertible_with(field, k, &mut rng)
}

pub fn random_invertible_with<R: Rng>(field: &ExtField, k: usize, rng: &mut R) -> Mat {
    loop {
        let m = Mat::random(field, k, k, rng);
        if m.rank() == k {
            return m;
        }
    }
}
