//! Rank-one matrices and languages.
//!
//! A nonnegative integer matrix of rank one factors as `M = x y^T` where the
//! in-vector `y` is the primitive direction shared by all nonzero rows and the
//! out-vector `x` holds each row's multiple of it. Its only nonzero eigenvalue
//! is `λ = y^T x = trace(M)`, so `M^n = λ^(n-1) M` for `n >= 1`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::automaton::{minimize, Dfa};
use crate::error::{Error, Result};
use crate::linalg::{self, IntScalar, Matrix, Partition};

/// `M = out_vector · in_vector^T` with eigenvalue `lambda = in · out`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RankOneDecomposition<T> {
    pub in_vector: Vec<T>,
    pub out_vector: Vec<T>,
    pub lambda: T,
}

impl<T: IntScalar> RankOneDecomposition<T> {
    /// Rebuilds `out · in^T`.
    pub fn product(&self) -> Matrix<T> {
        let n = self.out_vector.len();
        let mut m = Matrix::zeros(n, self.in_vector.len());
        for (i, x) in self.out_vector.iter().enumerate() {
            for (j, y) in self.in_vector.iter().enumerate() {
                m.set(i, j, x.clone() * y.clone());
            }
        }
        m
    }
}

fn require_rank_one<T: IntScalar + PartialOrd>(m: &Matrix<T>) -> Result<()> {
    m.require_square()?;
    if m.entries().iter().any(|x| *x < T::zero()) {
        return Err(Error::NegativeEntry);
    }
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    match m.rank() {
        1 => Ok(()),
        r => Err(Error::NotRankOne(format!("matrix rank is {r}"))),
    }
}

/// The primitive row direction: any nonzero row divided by the gcd of its
/// entries.
pub fn in_vector<T: IntScalar + PartialOrd>(m: &Matrix<T>) -> Result<Vec<T>> {
    require_rank_one(m)?;
    let row = m
        .row_iter()
        .find(|r| r.iter().any(|x| !x.is_zero()))
        .expect("nonzero matrix has a nonzero row");
    let g = row.iter().fold(T::zero(), |g, x| g.gcd(x));
    Ok(row.iter().map(|x| x.clone() / g.clone()).collect())
}

fn out_from_in<T: IntScalar>(m: &Matrix<T>, in_vec: &[T]) -> Vec<T> {
    let pivot = in_vec.iter().position(|x| !x.is_zero()).expect("nonzero in-vector");
    m.row_iter()
        .map(|row| row[pivot].clone() / in_vec[pivot].clone())
        .collect()
}

/// Row multiples of the in-vector.
pub fn out_vector<T: IntScalar + PartialOrd>(m: &Matrix<T>) -> Result<Vec<T>> {
    let y = in_vector(m)?;
    Ok(out_from_in(m, &y))
}

pub fn decompose<T: IntScalar + PartialOrd>(m: &Matrix<T>) -> Result<RankOneDecomposition<T>> {
    let in_vector = in_vector(m)?;
    let out_vector = out_from_in(m, &in_vector);
    let lambda = linalg::dot(&in_vector, &out_vector);
    Ok(RankOneDecomposition {
        in_vector,
        out_vector,
        lambda,
    })
}

/// `M^n = λ^(n-1) M` for `n >= 1`.
pub fn fast_power<T: IntScalar>(
    dec: &RankOneDecomposition<T>,
    m: &Matrix<T>,
    n: u64,
) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::InvalidExponent);
    }
    Ok(m.scale(&power(&dec.lambda, n - 1)))
}

pub(crate) fn power<T: IntScalar>(base: &T, mut exp: u64) -> T {
    let mut result = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    result
}

/// Whether every in-vector entry is 0 or 1.
pub fn is_expanded_normal<T: IntScalar + PartialOrd>(m: &Matrix<T>) -> Result<bool> {
    Ok(in_vector(m)?.iter().all(|x| x.is_zero() || x.is_one()))
}

/// Consecutive blocks, one per index `i`, of size `in_i` (or 1 when `in_i`
/// is zero).
pub fn canonical_partition<T: IntScalar + PartialOrd + ToPrimitive>(m: &Matrix<T>) -> Result<Partition> {
    let sizes = in_vector(m)?
        .iter()
        .map(|x| {
            if x.is_zero() {
                Ok(1)
            } else {
                x.to_usize()
                    .ok_or_else(|| Error::DimensionMismatch("in-vector entry too large".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::consecutive(&sizes)
}

fn minimal_rank_one(d: &Dfa) -> Result<(Dfa, Matrix<BigInt>, RankOneDecomposition<BigInt>)> {
    let min = minimize(d);
    if min.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    let m = min.adjacency();
    match m.rank() {
        1 => {}
        r => return Err(Error::NotRankOne(format!("language rank is {r}"))),
    }
    let dec = decompose(&m)?;
    Ok((min, m, dec))
}

/// The expansion of the minimal automaton of `L(d)` by its canonical
/// partition, with transitions labelled deterministically.
///
/// State `q` of the minimal automaton becomes `|C_q|` consecutive copies.
/// The symbols from `p` to `q` (in alphabet order) are cut into `|C_q|`
/// contiguous runs of equal length; run `j` leads to copy `j` of `q`, the
/// same way from every copy of `p`. The initial state is copy 0 of the
/// minimal initial state and every copy of a final state is final.
pub fn expanded_canonical_automaton(d: &Dfa) -> Result<Dfa> {
    let (min, m, _) = minimal_rank_one(d)?;
    let partition = canonical_partition(&m)?;
    let sizes = partition.block_sizes();
    let offsets: Vec<usize> = partition.blocks().iter().map(|b| b[0]).collect();
    let n = min.state_count();
    let symbols = min.alphabet().len();

    let mut delta = vec![vec![None; symbols]; partition.ground_size()];
    let mut finals = vec![false; partition.ground_size()];
    for p in 0..n {
        let mut row = vec![None; symbols];
        for q in 0..n {
            let group: Vec<usize> = min.successors(p).filter(|&(_, t)| t == q).map(|(s, _)| s).collect();
            if group.is_empty() {
                continue;
            }
            if !group.len().is_multiple_of(sizes[q]) {
                return Err(Error::ExpansionNotIntegral {
                    row: p,
                    col: q,
                    value: format!("{}/{}", group.len(), sizes[q]),
                });
            }
            let run = group.len() / sizes[q];
            for (k, &s) in group.iter().enumerate() {
                row[s] = Some(offsets[q] + k / run);
            }
        }
        for copy in 0..sizes[p] {
            delta[offsets[p] + copy] = row.clone();
            finals[offsets[p] + copy] = min.is_final(p);
        }
    }
    let initial = min.initial().map(|q| offsets[q]);
    let expanded = Dfa::new(min.alphabet().to_vec(), delta, initial, finals)?;
    debug_assert_eq!(expanded.adjacency(), linalg::expansion(&m, &partition)?);
    Ok(expanded)
}

/// `C_L(0) = [ε ∈ L]` and `C_L(n) = c · λ^(n-1)` for `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCount {
    pub epsilon: bool,
    pub c: BigUint,
    pub lambda: BigUint,
}

impl ClosedFormCount {
    pub fn c0(&self) -> BigUint {
        BigUint::from(u8::from(self.epsilon))
    }

    pub fn count(&self, n: u64) -> BigUint {
        match n {
            0 => self.c0(),
            _ => &self.c * Pow::pow(&self.lambda, n - 1),
        }
    }

    /// `Σ_{k=0}^{n} C_L(k)`.
    pub fn cumulative(&self, n: u64) -> BigUint {
        if n == 0 {
            return self.c0();
        }
        let geometric = if self.lambda.is_zero() {
            BigUint::one()
        } else if self.lambda.is_one() {
            BigUint::from(n)
        } else {
            (Pow::pow(&self.lambda, n) - 1u32) / (&self.lambda - 1u32)
        };
        self.c0() + &self.c * geometric
    }

    /// `α` with `C_L(n) = α λ^n` for `n >= 1`, i.e. `c / λ`; undefined when
    /// `λ = 0`.
    pub fn alpha(&self) -> Option<BigRational> {
        (!self.lambda.is_zero()).then(|| {
            BigRational::new(BigInt::from(self.c.clone()), BigInt::from(self.lambda.clone()))
        })
    }
}

pub fn closed_form_count(d: &Dfa) -> Result<ClosedFormCount> {
    let (min, m, dec) = minimal_rank_one(d)?;
    let q0 = min.initial().expect("nonempty");
    let c: BigInt = min.finals().map(|f| m.get(q0, f).clone()).sum();
    let to_unsigned = |x: BigInt| x.abs().to_biguint().expect("nonnegative");
    Ok(ClosedFormCount {
        epsilon: min.is_final(q0),
        c: to_unsigned(c),
        lambda: to_unsigned(dec.lambda),
    })
}
