use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{IntScalar, Matrix, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates the polynomial at a square matrix (Horner's scheme).
    pub fn eval_matrix(&self, m: &Matrix<T>) -> Result<Matrix<T>> {
        let n = m.dim()?;
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add(&Matrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in self.coeffs.iter().skip(1) {
            k = k + T::one();
            out.push(c.clone() * k.clone());
        }
        Polynomial::new(out)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean division. `T` must be a field (every division by the
    /// divisor's leading coefficient is taken to be exact).
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Scales to leading coefficient one (field coefficients).
    pub fn to_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                self.map(|c| c.clone() / lead.clone())
            }
        }
    }

    /// Monic greatest common divisor (field coefficients); `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.to_monic()
    }

    /// The product of the distinct monic irreducible factors, `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.to_monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.to_monic()
    }
}

impl<T: Scalar> Matrix<T> {
    /// Characteristic polynomial `det(xI - M)`.
    ///
    /// Uses the division-free Samuelson-Berkowitz recurrence, so the result
    /// is exact over any commutative ring. The 0x0 matrix yields `1`.
    pub fn char_poly(&self) -> Result<Polynomial<T>> {
        let n = self.dim()?;
        if n == 0 {
            return Ok(Polynomial::one());
        }
        // Coefficients highest degree first while iterating.
        let mut p = vec![T::one(), T::zero() - self.get(n - 1, n - 1).clone()];
        for k in (0..n - 1).rev() {
            let m = n - k - 1;
            // Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
            let mut t = Vec::with_capacity(m + 2);
            t.push(T::one());
            t.push(T::zero() - self.get(k, k).clone());
            let mut v: Vec<T> = (k + 1..n).map(|i| self.get(i, k).clone()).collect();
            for step in 0..m {
                let rc = (k + 1..n).zip(&v).fold(T::zero(), |acc, (j, vj)| {
                    acc + self.get(k, j).clone() * vj.clone()
                });
                t.push(T::zero() - rc);
                if step + 1 < m {
                    v = (k + 1..n)
                        .map(|i| {
                            (k + 1..n).zip(&v).fold(T::zero(), |acc, (j, vj)| {
                                acc + self.get(i, j).clone() * vj.clone()
                            })
                        })
                        .collect();
                }
            }
            let next: Vec<T> = (0..m + 2)
                .map(|i| {
                    (0..=i.min(m)).fold(T::zero(), |acc, j| {
                        acc + t[i - j].clone() * p[j].clone()
                    })
                })
                .collect();
            p = next;
        }
        p.reverse();
        Ok(Polynomial::new(p))
    }
}

/// Whether every root of `small` is a root of `big` (as sets, over the
/// algebraic closure of the rationals).
///
/// Decided exactly: the squarefree part of `small` must divide `big`.
pub fn spectrum_included<T: IntScalar>(small: &Polynomial<T>, big: &Polynomial<T>) -> Result<bool> {
    if !small.is_monic() || !big.is_monic() {
        return Err(Error::NonMonic);
    }
    let lift = |p: &Polynomial<T>| p.map(|c| Ratio::from_integer(c.clone()));
    let q = lift(small).squarefree_part();
    let (_, r) = lift(big).div_rem(&q);
    Ok(r.is_zero())
}

impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let abs = if negative { T::zero() - c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
