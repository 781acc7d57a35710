//! Deterministic finite automata with partial transition functions.

mod minimize;
mod ops;
mod regex;
mod text;

pub use minimize::{minimize, nerode_partition, NerodePartitionResult};
pub use ops::{equivalent, quotient_automaton, trim};
pub use regex::compile_regex;
pub use text::{parse_dfa, serialize_dfa};

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::IntMatrix;

/// A deterministic, possibly partial, finite automaton.
///
/// States are `0..state_count`. The alphabet is a sorted list of distinct
/// characters; transitions are indexed by symbol position in that list.
/// An automaton with zero states has no initial state and recognizes the
/// empty language.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<char>,
    delta: Vec<Vec<Option<usize>>>,
    initial: Option<usize>,
    finals: Vec<bool>,
}

/// Initial row vector `I` and final column vector `F` with `C_L(n) = I M^n F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPair {
    pub initial: Vec<BigInt>,
    pub finals: Vec<BigInt>,
}

impl Dfa {
    /// Builds an automaton from a transition table `delta[state][symbol]`.
    ///
    /// `alphabet` must be strictly increasing. `initial` must be `Some`
    /// exactly when there is at least one state.
    pub fn new(
        alphabet: Vec<char>,
        delta: Vec<Vec<Option<usize>>>,
        initial: Option<usize>,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let n = delta.len();
        if alphabet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDfa(
                "alphabet must be sorted and free of duplicates".into(),
            ));
        }
        if finals.len() != n {
            return Err(Error::InvalidDfa(format!(
                "{} finality flags for {n} states",
                finals.len()
            )));
        }
        match initial {
            None if n > 0 => return Err(Error::InvalidDfa("missing initial state".into())),
            Some(_) if n == 0 => {
                return Err(Error::InvalidDfa("empty automaton has no initial state".into()))
            }
            Some(q) if q >= n => {
                return Err(Error::InvalidDfa(format!("initial state {q} out of range")))
            }
            _ => {}
        }
        for (p, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidDfa(format!(
                    "state {p} has {} transition slots for {} symbols",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(q) = row.iter().flatten().find(|&&q| q >= n) {
                return Err(Error::InvalidDfa(format!(
                    "transition from state {p} to {q} out of range"
                )));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            finals,
        })
    }

    /// Convenience constructor from `(source, symbol, target)` triples.
    /// The alphabet is sorted and deduplicated.
    pub fn from_transitions(
        state_count: usize,
        alphabet: &[char],
        transitions: &[(usize, char, usize)],
        initial: usize,
        finals: &[usize],
    ) -> Result<Self> {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let mut delta = vec![vec![None; alphabet.len()]; state_count];
        for &(p, a, q) in transitions {
            let s = alphabet
                .binary_search(&a)
                .map_err(|_| Error::InvalidDfa(format!("symbol '{a}' is not in the alphabet")))?;
            let slot = delta
                .get_mut(p)
                .ok_or_else(|| Error::InvalidDfa(format!("state {p} out of range")))?;
            if slot[s].replace(q).is_some() {
                return Err(Error::InvalidDfa(format!(
                    "duplicate transition from state {p} on '{a}'"
                )));
            }
        }
        let mut flags = vec![false; state_count];
        for &f in finals {
            *flags
                .get_mut(f)
                .ok_or_else(|| Error::InvalidDfa(format!("final state {f} out of range")))? = true;
        }
        let initial = (state_count > 0).then_some(initial);
        Self::new(alphabet, delta, initial, flags)
    }

    /// The automaton with no states over `alphabet`.
    pub fn empty(alphabet: Vec<char>) -> Self {
        Dfa {
            alphabet,
            delta: Vec::new(),
            initial: None,
            finals: Vec::new(),
        }
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    /// Position of `a` in the alphabet.
    pub fn symbol_index(&self, a: char) -> Option<usize> {
        self.alphabet.binary_search(&a).ok()
    }

    /// Transition on the symbol at alphabet position `s`.
    pub fn next(&self, q: usize, s: usize) -> Option<usize> {
        self.delta[q][s]
    }

    pub fn step(&self, q: usize, a: char) -> Option<usize> {
        self.next(q, self.symbol_index(a)?)
    }

    /// Transitions out of `q` as `(symbol index, target)` in alphabet order.
    pub fn successors(&self, q: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.delta[q]
            .iter()
            .enumerate()
            .filter_map(|(s, t)| t.map(|t| (s, t)))
    }

    /// State reached from the initial state by reading `word`, if any.
    pub fn run(&self, word: &str) -> Option<usize> {
        word.chars()
            .try_fold(self.initial?, |q, a| self.step(q, a))
    }

    pub fn accepts(&self, word: &str) -> bool {
        self.run(word).is_some_and(|q| self.finals[q])
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().flatten().flatten().count()
    }

    /// `M[i][j]` is the number of symbols leading from `i` to `j`.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.state_count();
        let mut counts = vec![0u64; n * n];
        for (p, row) in self.delta.iter().enumerate() {
            for &q in row.iter().flatten() {
                counts[p * n + q] += 1;
            }
        }
        IntMatrix::new(n, n, counts.into_iter().map(BigInt::from).collect())
            .expect("n*n entries")
    }

    pub fn vectors(&self) -> VectorPair {
        let n = self.state_count();
        let mut initial = vec![BigInt::from(0); n];
        if let Some(q) = self.initial {
            initial[q] = BigInt::from(1);
        }
        let finals = self.finals.iter().map(|&f| BigInt::from(u8::from(f))).collect();
        VectorPair { initial, finals }
    }

    /// States reachable from the initial state, in breadth-first order with
    /// symbols taken in alphabet order.
    pub(crate) fn bfs_order(&self, allowed: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut order = Vec::new();
        let Some(q0) = self.initial.filter(|&q| allowed(q)) else {
            return order;
        };
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([q0]);
        seen[q0] = true;
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for (_, q) in self.successors(p) {
                if allowed(q) && !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        order
    }

    /// The sub-automaton on `order` (old state indices), renumbered so that
    /// `order[i]` becomes state `i`. Transitions leaving the kept set vanish.
    pub(crate) fn restrict(&self, order: &[usize]) -> Dfa {
        if order.is_empty() {
            return Dfa::empty(self.alphabet.clone());
        }
        let mut new_index = vec![None; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            new_index[q] = Some(i);
        }
        let delta = order
            .iter()
            .map(|&q| {
                self.delta[q]
                    .iter()
                    .map(|t| t.and_then(|t| new_index[t]))
                    .collect()
            })
            .collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: self.initial.and_then(|q| new_index[q]),
            finals,
        }
    }

    /// Breadth-first renumbering of the accessible part. Two accessible
    /// automata are isomorphic iff their canonical forms are equal.
    pub fn canonical(&self) -> Dfa {
        self.restrict(&self.bfs_order(|_| true))
    }

    pub fn is_trim(&self) -> bool {
        let co = ops::co_accessible(self);
        let reach = self.bfs_order(|_| true);
        reach.len() == self.state_count() && co.iter().all(|&c| c)
    }

    /// Same automaton over a larger alphabet; new symbols have no transitions.
    pub fn with_alphabet(&self, alphabet: &[char]) -> Result<Dfa> {
        let mut merged: Vec<char> = alphabet.iter().chain(&self.alphabet).copied().collect();
        merged.sort_unstable();
        merged.dedup();
        let delta = self
            .delta
            .iter()
            .map(|row| {
                merged
                    .iter()
                    .map(|&a| self.symbol_index(a).and_then(|s| row[s]))
                    .collect()
            })
            .collect();
        Dfa::new(merged, delta, self.initial, self.finals.clone())
    }
}
