//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's elimination, polynomial or counting code.
#![allow(dead_code)]

use dfa_spectra::{BigInt, BigRational, Dfa, IntMatrix};
use num_traits::{One, Zero};

pub fn int(rows: &[&[i64]]) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntMatrix::from_rows(&rows).unwrap()
}

pub fn from_vecs(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    if refs.is_empty() {
        return IntMatrix::zeros(0, 0);
    }
    int(&refs)
}

/// Reduced row echelon form over the rationals. Returns the pivot columns
/// and a kernel basis (one vector per free column).
pub fn rref_kernel(m: &IntMatrix) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigRational::from_integer(m.get(i, j).clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, v) in a[i].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect();
    (pivots, kernel)
}

type Poly = Vec<BigInt>;

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim_poly(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut acc: Poly = Vec::new();
    for j in 0..n {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let mut term = pmul(&m[0][j], &det(&minor));
        if j % 2 == 1 {
            term = term.into_iter().map(|x| -x).collect();
        }
        acc = padd(&acc, &term);
    }
    acc
}

/// `det(xI - M)` by cofactor expansion along the first row; coefficients
/// lowest degree first.
pub fn cofactor_char_poly(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.rows();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m.get(i, j).clone();
                    if i == j {
                        vec![c, BigInt::one()]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    trim_poly(det(&entries))
}

/// Accepted words of length exactly `n`, in shortlex order, by enumerating
/// every string over the alphabet.
pub fn brute_force_words(d: &Dfa, n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| d.alphabet().iter().map(move |a| format!("{w}{a}")))
            .collect();
    }
    words.into_iter().filter(|w| d.accepts(w)).collect()
}

pub fn brute_force_up_to(d: &Dfa, n: usize) -> Vec<String> {
    (0..=n).flat_map(|k| brute_force_words(d, k)).collect()
}

/// Accepted words of length at most `n` in shortlex order, found by walking
/// the transition table layer by layer. Only live paths are extended, so
/// this stays cheap for sparse languages over large alphabets.
pub fn shortlex_words(d: &Dfa, n: usize) -> Vec<String> {
    let Some(start) = d.initial() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut layer = vec![(String::new(), start)];
    for k in 0..=n {
        out.extend(layer.iter().filter(|(_, q)| d.is_final(*q)).map(|(w, _)| w.clone()));
        if k == n {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &layer {
            for &a in d.alphabet() {
                if let Some(t) = d.step(*q, a) {
                    next.push((format!("{w}{a}"), t));
                }
            }
        }
        layer = next;
    }
    out
}
