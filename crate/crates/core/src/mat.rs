//! Dense matrices over a small finite field, with just enough linear algebra
//! for generator matrices, rank, and hull computations.

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// Row-major matrix of field element indices. Entries must fit in u16, which
/// holds for every field this crate enumerates over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

fn check_field(field: &FieldSpec) -> Result<()> {
    if field.q() > u16::MAX as u64 {
        return Err(Error::Domain(format!(
            "matrix arithmetic limited to fields of size <= {}",
            u16::MAX
        )));
    }
    Ok(())
}

/// Rank over GF(q) by Gaussian elimination on a copy.
pub fn rank(field: &FieldSpec, m: &Mat) -> Result<usize> {
    check_field(field)?;
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&r| a.at(r, col) != 0);
        let Some(pr) = pivot else {
            col += 1;
            continue;
        };
        if pr != rank {
            for c in col..cols {
                let tmp = a.at(rank, c);
                a.set(rank, c, a.at(pr, c));
                a.set(pr, c, tmp);
            }
        }
        let inv = field.idx_inv(a.at(rank, col) as u64);
        for c in col..cols {
            a.set(rank, c, field.idx_mul(a.at(rank, c) as u64, inv) as u16);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let factor = a.at(r, col) as u64;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let v = field.idx_sub(a.at(r, c) as u64, field.idx_mul(factor, a.at(rank, c) as u64));
                a.set(r, c, v as u16);
            }
        }
        rank += 1;
        col += 1;
    }
    Ok(rank)
}

/// G * G^T for the cyclic generator layout (rows are shifts of g), computed
/// through the autocorrelation of g: entry (i, j) depends only on |i - j|.
pub fn gram_of_shifts(field: &FieldSpec, g: &[u16], k: usize) -> Result<Mat> {
    check_field(field)?;
    let mut corr = vec![0u16; k];
    for (d, slot) in corr.iter_mut().enumerate() {
        let mut acc = 0u64;
        for x in 0..g.len().saturating_sub(d) {
            acc = field.idx_add(acc, field.idx_mul(g[x] as u64, g[x + d] as u64));
        }
        *slot = acc as u16;
    }
    let mut m = Mat::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            m.set(i, j, corr[i.abs_diff(j)]);
        }
    }
    Ok(m)
}

/// Checks A * B^T = 0 for A (a x n) and B (b x n).
pub fn product_with_transpose_is_zero(field: &FieldSpec, a: &Mat, b: &Mat) -> Result<bool> {
    check_field(field)?;
    if a.cols != b.cols {
        return Err(Error::LengthMismatch { expected: a.cols, got: b.cols });
    }
    for i in 0..a.rows {
        for j in 0..b.rows {
            let mut acc = 0u64;
            for c in 0..a.cols {
                acc = field.idx_add(acc, field.idx_mul(a.at(i, c) as u64, b.at(j, c) as u64));
            }
            if acc != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
