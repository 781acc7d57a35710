//! Seeded generators for property suites: random automata, regexes and
//! rank-one matrices, plus exhaustive enumeration of small trim automata.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

use crate::automaton::{trim, Dfa};
use crate::IntMatrix;

/// Parameters for [`random_trim_dfa`].
#[derive(Clone, Copy, Debug)]
pub struct DfaShape {
    pub max_states: usize,
    pub max_symbols: usize,
    /// Probability that a given (state, symbol) has a transition.
    pub density: f64,
    /// Probability that a state is final.
    pub final_density: f64,
}

impl Default for DfaShape {
    fn default() -> Self {
        DfaShape {
            max_states: 8,
            max_symbols: 4,
            density: 0.8,
            final_density: 0.3,
        }
    }
}

fn alphabet(k: usize) -> Vec<char> {
    let pool: Vec<char> = ('a'..='z').chain('A'..='Z').chain('0'..='9').collect();
    assert!(k <= pool.len(), "at most {} symbols", pool.len());
    let mut out: Vec<char> = pool.into_iter().take(k).collect();
    out.sort_unstable();
    out
}

/// A random automaton, trimmed; `None` when trimming leaves nothing.
pub fn random_trim_dfa<R: Rng + ?Sized>(rng: &mut R, shape: DfaShape) -> Option<Dfa> {
    let n = rng.gen_range(1..=shape.max_states);
    let k = rng.gen_range(1..=shape.max_symbols);
    let delta = (0..n)
        .map(|_| {
            (0..k)
                .map(|_| rng.gen_bool(shape.density).then(|| rng.gen_range(0..n)))
                .collect()
        })
        .collect();
    let finals = (0..n).map(|_| rng.gen_bool(shape.final_density)).collect();
    let d = Dfa::new(alphabet(k), delta, Some(0), finals).expect("valid by construction");
    let t = trim(&d);
    (!t.is_empty()).then_some(t)
}

/// `count` nonempty trim automata with at most 8 states and 4 symbols,
/// cycling through transition densities 0.5, 0.8 and 1.0.
pub fn random_trim_suite<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Dfa> {
    const DENSITIES: [f64; 3] = [0.5, 0.8, 1.0];
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let shape = DfaShape {
            density: DENSITIES[i % DENSITIES.len()],
            ..DfaShape::default()
        };
        i += 1;
        if let Some(d) = random_trim_dfa(rng, shape) {
            out.push(d);
        }
    }
    out
}

/// Every trim automaton with exactly `states` states over the first
/// `symbols` letters, one per isomorphism class (states numbered in
/// breadth-first order from the initial state 0).
pub fn enumerate_trim(states: usize, symbols: usize) -> Vec<Dfa> {
    let slots = states * symbols;
    let choices = states + 1; // None or a target
    let mut out = Vec::new();
    let mut code = vec![0usize; slots];
    loop {
        let table: Vec<Option<usize>> = code.iter().map(|&c| c.checked_sub(1)).collect();
        if is_bfs_canonical(&table, states, symbols) {
            let delta: Vec<Vec<Option<usize>>> =
                table.chunks(symbols).map(<[Option<usize>]>::to_vec).collect();
            for mask in 1u32..(1 << states) {
                let finals = (0..states).map(|q| mask >> q & 1 == 1).collect();
                let d = Dfa::new(alphabet(symbols), delta.clone(), Some(0), finals)
                    .expect("valid by construction");
                if d.is_trim() {
                    out.push(d);
                }
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == slots {
                return out;
            }
            code[i] += 1;
            if code[i] < choices {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

/// Breadth-first traversal from 0 discovers states in index order and
/// reaches all of them.
fn is_bfs_canonical(table: &[Option<usize>], states: usize, symbols: usize) -> bool {
    let mut discovered = 1;
    let mut head = 0;
    while head < discovered {
        for s in 0..symbols {
            if let Some(t) = table[head * symbols + s] {
                if t == discovered {
                    discovered += 1;
                } else if t > discovered {
                    return false;
                }
            }
        }
        head += 1;
    }
    discovered == states
}

/// A random pattern over the first `symbols` letters, `depth` levels of
/// nesting at most.
pub fn random_regex<R: Rng + ?Sized>(rng: &mut R, symbols: usize, depth: usize) -> String {
    let letters = alphabet(symbols);
    fn go<R: Rng + ?Sized>(rng: &mut R, letters: &[char], depth: usize) -> String {
        if depth == 0 || rng.gen_bool(0.25) {
            return letters[rng.gen_range(0..letters.len())].to_string();
        }
        match rng.gen_range(0..3) {
            0 => format!("({}+{})", go(rng, letters, depth - 1), go(rng, letters, depth - 1)),
            1 => format!("{}{}", go(rng, letters, depth - 1), go(rng, letters, depth - 1)),
            _ => format!("({})*", go(rng, letters, depth - 1)),
        }
    }
    go(rng, &letters, depth)
}

/// `x · y^T` with `x` positive and `y` nonnegative, primitive and nonzero;
/// entries at most `max_factor^2`.
pub fn random_rank_one_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_factor: u32) -> IntMatrix {
    let x: Vec<u32> = (0..dim).map(|_| rng.gen_range(1..=max_factor)).collect();
    let mut y: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=max_factor)).collect();
    if y.iter().all(|&v| v == 0) {
        let j = rng.gen_range(0..dim);
        y[j] = rng.gen_range(1..=max_factor);
    }
    let g = y.iter().fold(0u32, |g, &v| g.gcd(&v));
    let mut m = IntMatrix::zeros(dim, dim);
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            m.set(i, j, BigInt::from(xi * (yj / g)));
        }
    }
    m
}

/// An automaton whose adjacency matrix is `x · y^T` for small random `x`, `y`.
/// Symbols are assigned row by row, so the alphabet is as large as the
/// largest row sum. The result is trimmed and may be empty.
pub fn random_rank_one_dfa<R: Rng + ?Sized>(rng: &mut R, max_dim: usize, max_factor: u32) -> Dfa {
    let dim = rng.gen_range(1..=max_dim);
    let m = random_rank_one_matrix(rng, dim, max_factor);
    let row_sum = |i: usize| -> usize {
        m.row(i).iter().map(|x| usize::try_from(x).expect("small entry")).sum()
    };
    let width = (0..dim).map(row_sum).max().unwrap_or(0);
    let mut delta = vec![vec![None; width]; dim];
    for (p, row) in delta.iter_mut().enumerate() {
        let mut slots: Vec<usize> = (0..width).collect();
        // shuffle which symbols go where so labels are not always sorted
        for i in (1..slots.len()).rev() {
            slots.swap(i, rng.gen_range(0..=i));
        }
        let mut next = slots.into_iter();
        for q in 0..dim {
            let k = usize::try_from(m.get(p, q)).expect("small entry");
            for _ in 0..k {
                row[next.next().expect("row sum fits")] = Some(q);
            }
        }
    }
    let finals = (0..dim).map(|_| rng.gen_bool(0.4)).collect();
    let d = Dfa::new(alphabet(width), delta, Some(0), finals).expect("valid by construction");
    trim(&d)
}
