use std::fmt;
use std::str::FromStr;

use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// An ordered partition of `{0, ..., ground_size - 1}` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    ground_size: usize,
}

impl Partition {
    /// Validates that `blocks` are nonempty, pairwise disjoint and cover
    /// `0..ground_size`. Block order and the order inside each block are kept.
    pub fn new(blocks: Vec<Vec<usize>>, ground_size: usize) -> Result<Self> {
        let mut seen = vec![false; ground_size];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &x in block {
                if x >= ground_size {
                    return Err(Error::InvalidPartition(format!(
                        "index {x} is outside 0..{ground_size}"
                    )));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPartition(format!(
                        "index {x} appears more than once"
                    )));
                }
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("index {x} is not covered")));
        }
        Ok(Partition {
            blocks,
            ground_size,
        })
    }

    /// Partition whose ground size is inferred as the number of listed indices.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(blocks, n)
    }

    /// The discrete partition `{{0}, {1}, ..., {n-1}}`.
    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|i| vec![i]).collect(),
            ground_size: n,
        }
    }

    /// Consecutive blocks of the given sizes: `[1, 2]` gives `{{0}, {1, 2}}`.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            blocks.push((next..next + s).collect());
            next += s;
        }
        Self::new(blocks, next)
    }

    /// Groups indices by label; blocks are ordered by their smallest member.
    pub fn from_labels<L: Eq + std::hash::Hash + Clone>(labels: &[L]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            let b = *index.entry(l.clone()).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        Partition {
            blocks,
            ground_size: labels.len(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// `block_of()[x]` is the index of the block containing `x`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground_size];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x] = b;
            }
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The `ground_size x len()` 0/1 matrix `S` with `S[i][j] = 1` iff `i`
    /// lies in block `j`.
    pub fn characteristic_matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut s = Matrix::zeros(self.ground_size, self.blocks.len());
        for (j, block) in self.blocks.iter().enumerate() {
            for &i in block {
                s.set(i, j, T::one());
            }
        }
        s
    }
}

/// Blocks separated by `|`, indices within a block by `,`; whitespace is
/// ignored. The ground size is the number of indices listed.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Partition::singletons(0));
        }
        let blocks = compact
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(|x| {
                        x.parse::<usize>().map_err(|_| {
                            Error::InvalidPartition(format!("invalid state index {x:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(blocks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0, 1], vec![1]], 2).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![3]], 2).is_err());
    }

    #[test]
    fn characteristic_matrices() {
        let p: Partition = "0,1|2".parse().unwrap();
        assert_eq!(p.characteristic_matrix::<BigInt>(), int(&[&[1, 0], &[1, 0], &[0, 1]]));
        let p: Partition = "0 | 1, 2".parse().unwrap();
        assert_eq!(p.characteristic_matrix::<BigInt>(), int(&[&[1, 0], &[0, 1], &[0, 1]]));
        assert_eq!(
            Partition::singletons(3).characteristic_matrix::<BigInt>(),
            Matrix::identity(3)
        );
        // S^T S = diag(|C_1|, ..., |C_k|)
        let p: Partition = "0,3|1|2,4,5".parse().unwrap();
        let s = p.characteristic_matrix::<BigInt>();
        assert_eq!(s.transpose().mul(&s).unwrap(), int(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 3]]));
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = " 2 , 0 | 1 ".parse().unwrap();
        assert_eq!(p.blocks(), &[vec![2, 0], vec![1]]);
        assert_eq!(p.to_string(), "2,0|1");
        assert!("0,,1".parse::<Partition>().is_err());
        assert!("0|2".parse::<Partition>().is_err());
        assert_eq!(Partition::consecutive(&[1, 2, 1]).unwrap().to_string(), "0|1,2|3");
        assert_eq!(Partition::from_labels(&['x', 'y', 'x']).to_string(), "0,2|1");
    }
}
