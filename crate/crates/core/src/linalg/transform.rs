//! Quotient and expansion of square matrices by a partition.

use num_rational::Ratio;

use super::{IntScalar, Matrix, Partition, Scalar};
use crate::error::{Error, Result};

fn check_ground(m: &Matrix<impl Scalar>, partition: &Partition) -> Result<usize> {
    let n = m.dim()?;
    if partition.ground_size() != n {
        return Err(Error::DimensionMismatch(format!(
            "partition covers {} indices but the matrix has dimension {n}",
            partition.ground_size()
        )));
    }
    Ok(n)
}

/// The quotient matrix `(S^T S)^-1 S^T M S`: entry `(i, j)` is the average
/// row sum of the block of `M` with rows in block `i` and columns in block `j`.
pub fn quotient_matrix<T: IntScalar>(m: &Matrix<T>, partition: &Partition) -> Result<Matrix<Ratio<T>>> {
    check_ground(m, partition)?;
    let blocks = partition.blocks();
    let k = blocks.len();
    let mut out = Matrix::zeros(k, k);
    for (i, rows) in blocks.iter().enumerate() {
        let size = T::from_usize(rows.len());
        for (j, cols) in blocks.iter().enumerate() {
            let mut sum = T::zero();
            for &r in rows {
                for &c in cols {
                    sum = sum + m.get(r, c).clone();
                }
            }
            out.set(i, j, Ratio::new(sum, size.clone()));
        }
    }
    Ok(out)
}

/// Whether `partition` is equitable for `m`, i.e. `M S = S M^π` holds exactly.
pub fn is_equitable<T: IntScalar>(m: &Matrix<T>, partition: &Partition) -> Result<bool> {
    let q = quotient_matrix(m, partition)?;
    let s: Matrix<Ratio<T>> = partition.characteristic_matrix();
    let lifted = m.map(|x| Ratio::from_integer(x.clone()));
    Ok(lifted.mul(&s)? == s.mul(&q)?)
}

/// The expansion `S M (S^T S)^-1 S^T` of an `n`-dimensional `m` by a partition
/// with exactly `n` blocks; block `i` holds the copies of index `i`.
///
/// Entry `(r, c)` with `r` in block `i` and `c` in block `j` is
/// `M[i][j] / |C_j|`, which must be an integer.
pub fn expansion<T: IntScalar>(m: &Matrix<T>, partition: &Partition) -> Result<Matrix<T>> {
    let n = m.dim()?;
    if partition.len() != n {
        return Err(Error::BlockCountMismatch {
            blocks: partition.len(),
            dim: n,
        });
    }
    let size = partition.ground_size();
    let block_of = partition.block_of();
    let sizes: Vec<T> = partition.blocks().iter().map(|b| T::from_usize(b.len())).collect();
    let mut out = Matrix::zeros(size, size);
    for r in 0..size {
        for c in 0..size {
            let (i, j) = (block_of[r], block_of[c]);
            let (q, rem) = m.get(i, j).div_rem(&sizes[j]);
            if !rem.is_zero() {
                return Err(Error::ExpansionNotIntegral {
                    row: r,
                    col: c,
                    value: format!("{:?}/{:?}", m.get(i, j), sizes[j]),
                });
            }
            out.set(r, c, q);
        }
    }
    Ok(out)
}

trait FromUsize {
    fn from_usize(n: usize) -> Self;
}

impl<T: Scalar> FromUsize for T {
    fn from_usize(n: usize) -> Self {
        // Block sizes are small; repeated doubling keeps this O(log n).
        let mut acc = T::zero();
        let mut bit = T::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + bit.clone();
            }
            bit = bit.clone() + bit;
            n >>= 1;
        }
        acc
    }
}
