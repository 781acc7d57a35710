use std::collections::{HashMap, VecDeque};

use super::Dfa;
use crate::error::{Error, Result};
use crate::linalg::Partition;

/// `co[q]` is true iff some final state is reachable from `q`.
pub(crate) fn co_accessible(d: &Dfa) -> Vec<bool> {
    let n = d.state_count();
    let mut preds = vec![Vec::new(); n];
    for p in 0..n {
        for (_, q) in d.successors(p) {
            preds[q].push(p);
        }
    }
    let mut co = vec![false; n];
    let mut queue: VecDeque<usize> = d.finals().collect();
    for &q in &queue {
        co[q] = true;
    }
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if !co[p] {
                co[p] = true;
                queue.push_back(p);
            }
        }
    }
    co
}

/// Restricts `d` to its accessible and co-accessible states, numbered in
/// breadth-first order from the initial state. If no final state is
/// reachable the result is the empty automaton.
pub fn trim(d: &Dfa) -> Dfa {
    let co = co_accessible(d);
    d.restrict(&d.bfs_order(|q| co[q]))
}

/// The quotient of `d` by a congruence: block `i` becomes state `i`.
pub fn quotient_automaton(d: &Dfa, partition: &Partition) -> Result<Dfa> {
    if partition.ground_size() != d.state_count() {
        return Err(Error::DimensionMismatch(format!(
            "partition covers {} states but the automaton has {}",
            partition.ground_size(),
            d.state_count()
        )));
    }
    let block_of = partition.block_of();
    let symbols = d.alphabet().len();
    let mut delta = Vec::with_capacity(partition.len());
    let mut finals = Vec::with_capacity(partition.len());
    for (b, block) in partition.blocks().iter().enumerate() {
        let head = block[0];
        if block.iter().any(|&q| d.is_final(q) != d.is_final(head)) {
            return Err(Error::NotACongruence {
                block: b,
                symbol: None,
            });
        }
        let mut row = Vec::with_capacity(symbols);
        for s in 0..symbols {
            let target = d.next(head, s).map(|t| block_of[t]);
            if block.iter().any(|&q| d.next(q, s).map(|t| block_of[t]) != target) {
                return Err(Error::NotACongruence {
                    block: b,
                    symbol: Some(d.alphabet()[s]),
                });
            }
            row.push(target);
        }
        delta.push(row);
        finals.push(d.is_final(head));
    }
    let initial = d.initial().map(|q| block_of[q]);
    Dfa::new(d.alphabet().to_vec(), delta, initial, finals)
}

/// Language equality, decided on the product automaton over the union
/// alphabet. A missing transition (or a missing automaton) is a dead state.
pub fn equivalent(a: &Dfa, b: &Dfa) -> bool {
    let a = a.with_alphabet(b.alphabet()).expect("merged alphabet is sorted");
    let b = b.with_alphabet(a.alphabet()).expect("merged alphabet is sorted");
    let accepting = |d: &Dfa, q: Option<usize>| q.is_some_and(|q| d.is_final(q));
    let start = (a.initial(), b.initial());
    let mut seen = HashMap::from([(start, ())]);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if accepting(&a, p) != accepting(&b, q) {
            return false;
        }
        for s in 0..a.alphabet().len() {
            let next = (p.and_then(|p| a.next(p, s)), q.and_then(|q| b.next(q, s)));
            if next == (None, None) {
                continue;
            }
            if seen.insert(next, ()).is_none() {
                queue.push_back(next);
            }
        }
    }
    true
}
