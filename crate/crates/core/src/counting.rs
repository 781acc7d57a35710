//! Counting, shortlex ranking and ranking-based compression.
//!
//! Words are ordered shortlex: shorter words first, words of equal length by
//! the alphabet order of their first differing symbol. The rank of `w` is the
//! number of words of the language that precede it.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::automaton::{minimize, Dfa};
use crate::error::{Error, Result};
use crate::rank_one::{closed_form_count, ClosedFormCount};

/// `T[k][q]`: number of words of length `k` accepted from state `q`.
/// Grown on demand.
#[derive(Clone, Debug)]
pub struct CountTable {
    dfa: Dfa,
    layers: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn new(dfa: Dfa) -> Self {
        let base = (0..dfa.state_count())
            .map(|q| BigUint::from(u8::from(dfa.is_final(q))))
            .collect();
        CountTable {
            dfa,
            layers: vec![base],
        }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn max_length(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn extend_to(&mut self, k: usize) {
        while self.layers.len() <= k {
            let prev = self.layers.last().expect("layer 0");
            let next = (0..self.dfa.state_count())
                .map(|q| {
                    self.dfa
                        .successors(q)
                        .fold(BigUint::zero(), |acc, (_, t)| acc + &prev[t])
                })
                .collect();
            self.layers.push(next);
        }
    }

    /// Words of length `k` accepted from `q`.
    pub fn get(&mut self, q: usize, k: usize) -> &BigUint {
        self.extend_to(k);
        &self.layers[k][q]
    }

    /// Words of length `k` in the language.
    pub fn count(&mut self, k: usize) -> BigUint {
        match self.dfa.initial() {
            None => BigUint::zero(),
            Some(q) => self.get(q, k).clone(),
        }
    }
}

/// `|{w ∈ L(d) : |w| = n}|`.
pub fn count_words(d: &Dfa, n: usize) -> BigUint {
    CountTable::new(d.clone()).count(n)
}

/// `I · M^n · F` evaluated with exact matrix powers; agrees with
/// [`count_words`].
pub fn count_words_by_matrix(d: &Dfa, n: u64) -> BigUint {
    let v = d.vectors();
    let power = d.adjacency().pow(n).expect("adjacency is square");
    let total: BigInt = power
        .mul_vec(&v.finals)
        .expect("conformable")
        .iter()
        .zip(&v.initial)
        .map(|(x, i)| x * i)
        .sum();
    total.to_biguint().expect("path counts are nonnegative")
}

/// `Σ_{k=0}^{n} count_words(d, k)`.
pub fn cumulative_count(d: &Dfa, n: usize) -> BigUint {
    let mut table = CountTable::new(d.clone());
    (0..=n).map(|k| table.count(k)).sum()
}

/// Ranks and unranks words of one language, reusing its count table.
///
/// Works on the minimal automaton. For rank-one languages the closed form
/// `c · λ^(n-1)` locates the length of the word with a given index without
/// walking the table length by length.
#[derive(Clone, Debug)]
pub struct Ranker {
    table: CountTable,
    closed_form: Option<ClosedFormCount>,
    /// Longest word length, when the language is finite.
    longest: Option<Option<usize>>,
}

impl Ranker {
    pub fn new(d: &Dfa) -> Self {
        let min = minimize(d);
        let closed_form = closed_form_count(&min).ok();
        let longest = longest_word(&min);
        Ranker {
            table: CountTable::new(min),
            closed_form,
            longest,
        }
    }

    pub fn dfa(&self) -> &Dfa {
        self.table.dfa()
    }

    pub fn closed_form(&self) -> Option<&ClosedFormCount> {
        self.closed_form.as_ref()
    }

    /// Whether the language is finite.
    pub fn is_finite(&self) -> bool {
        self.longest.is_some()
    }

    fn cumulative(&mut self, n: usize) -> BigUint {
        if let Some(cf) = &self.closed_form {
            return cf.cumulative(n as u64);
        }
        (0..=n).map(|k| self.table.count(k)).sum()
    }

    /// Number of words in the language preceding `word`.
    pub fn rank(&mut self, word: &str) -> Result<BigUint> {
        let dfa = self.table.dfa().clone();
        let not_in = || Error::WordNotInLanguage(word.to_string());
        let symbols: Vec<usize> = word
            .chars()
            .map(|a| dfa.symbol_index(a).ok_or_else(not_in))
            .collect::<Result<_>>()?;
        let n = symbols.len();
        let mut rank = if n == 0 {
            BigUint::zero()
        } else {
            self.cumulative(n - 1)
        };
        self.table.extend_to(n);
        let mut state = dfa.initial().ok_or_else(not_in)?;
        for (i, &s) in symbols.iter().enumerate() {
            let remaining = n - i - 1;
            for (b, t) in dfa.successors(state) {
                if b >= s {
                    break;
                }
                rank += self.table.get(t, remaining);
            }
            state = dfa.next(state, s).ok_or_else(not_in)?;
        }
        if !dfa.is_final(state) {
            return Err(not_in());
        }
        Ok(rank)
    }

    /// The word with the given rank.
    pub fn unrank(&mut self, index: &BigUint) -> Result<String> {
        let out_of_range = || Error::IndexOutOfLanguage(index.to_string());
        let dfa = self.table.dfa().clone();
        let Some(q0) = dfa.initial() else {
            return Err(out_of_range());
        };
        if let Some(longest) = self.longest {
            let total = longest.map_or_else(BigUint::zero, |n| self.cumulative(n));
            if *index >= total {
                return Err(out_of_range());
            }
        }
        let n = self.length_of(index);
        let mut rest = if n == 0 {
            index.clone()
        } else {
            index - self.cumulative(n - 1)
        };
        self.table.extend_to(n);
        let mut word = String::with_capacity(n);
        let mut state = q0;
        for i in 0..n {
            let remaining = n - i - 1;
            let mut chosen = None;
            for (b, t) in dfa.successors(state) {
                let c = self.table.get(t, remaining);
                if rest < *c {
                    chosen = Some((b, t));
                    break;
                }
                rest -= c;
            }
            let (b, t) = chosen.expect("index lies within the length-n words");
            word.push(dfa.alphabet()[b]);
            state = t;
        }
        Ok(word)
    }

    /// Smallest `n` with `cumulative(n) > index`; the index is known to be
    /// in range.
    fn length_of(&mut self, index: &BigUint) -> usize {
        if let Some(cf) = self.closed_form.clone() {
            let mut hi = 1usize;
            while cf.cumulative(hi as u64) <= *index {
                hi *= 2;
            }
            let mut lo = 0usize;
            if cf.cumulative(0) > *index {
                return 0;
            }
            // cumulative(lo) <= index < cumulative(hi)
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if cf.cumulative(mid as u64) <= *index {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return hi;
        }
        let mut total = BigUint::zero();
        let mut n = 0;
        loop {
            total += self.table.count(n);
            if total > *index {
                return n;
            }
            n += 1;
        }
    }
}

/// `None` if the trim automaton has a cycle (infinite language), otherwise
/// the length of the longest accepted word (`Some(None)` for the empty
/// language).
fn longest_word(trimmed: &Dfa) -> Option<Option<usize>> {
    let n = trimmed.state_count();
    if n == 0 {
        return Some(None);
    }
    // longest path from each state, via DFS with cycle detection
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done(usize),
    }
    fn visit(d: &Dfa, q: usize, marks: &mut [Mark]) -> Option<usize> {
        match marks[q] {
            Mark::Done(l) => return Some(l),
            Mark::Active => return None,
            Mark::New => {}
        }
        marks[q] = Mark::Active;
        let mut best = 0;
        for (_, t) in d.successors(q) {
            best = best.max(visit(d, t, marks)? + 1);
        }
        marks[q] = Mark::Done(best);
        Some(best)
    }
    let mut marks = vec![Mark::New; n];
    visit(trimmed, trimmed.initial()?, &mut marks).map(Some)
}

pub fn rank_word(d: &Dfa, word: &str) -> Result<BigUint> {
    Ranker::new(d).rank(word)
}

pub fn unrank_word(d: &Dfa, index: &BigUint) -> Result<String> {
    Ranker::new(d).unrank(index)
}

/// Big-endian bytes without leading zeros; zero is the empty string.
pub fn encode_index(index: &BigUint) -> Vec<u8> {
    if index.is_zero() {
        Vec::new()
    } else {
        index.to_bytes_be()
    }
}

pub fn decode_index(bytes: &[u8]) -> Result<BigUint> {
    if bytes.first() == Some(&0) {
        return Err(Error::MalformedIndexBytes);
    }
    Ok(BigUint::from_bytes_be(bytes))
}

/// Replaces a word by the bytes of its rank.
pub fn compress(d: &Dfa, word: &str) -> Result<Vec<u8>> {
    Ok(encode_index(&rank_word(d, word)?))
}

pub fn decompress(d: &Dfa, bytes: &[u8]) -> Result<String> {
    unrank_word(d, &decode_index(bytes)?)
}

/// Compressed length over word length in bytes; `None` for the empty word.
pub fn compression_ratio(d: &Dfa, word: &str) -> Result<Option<f64>> {
    let bytes = compress(d, word)?;
    Ok((!word.is_empty()).then(|| bytes.len() as f64 / word.len() as f64))
}

impl Ranker {
    /// Words of length at most `n` in shortlex order.
    pub fn words_up_to(&mut self, n: usize) -> Vec<String> {
        let total = self.cumulative(n);
        let mut out = Vec::new();
        let mut i = BigUint::zero();
        while i < total {
            out.push(self.unrank(&i).expect("in range"));
            i += BigUint::one();
        }
        out
    }
}
