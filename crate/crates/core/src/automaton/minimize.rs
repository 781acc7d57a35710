use std::collections::HashMap;

use super::{ops, Dfa};
use crate::error::{Error, Result};
use crate::linalg::Partition;

/// The Nerode partition of a trim automaton together with its quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerodePartitionResult {
    /// Blocks ordered by smallest member, members ascending.
    pub partition: Partition,
    /// Quotient automaton; block `i` is state `i`.
    pub minimal: Dfa,
}

/// Groups the states of a trim automaton by equal futures.
///
/// Moore refinement starting from {finals, non-finals}. Missing transitions
/// go to an implicit non-accepting sink which never shows up in the result.
pub fn nerode_partition(d: &Dfa) -> Result<NerodePartitionResult> {
    if d.is_empty() {
        return Err(Error::EmptyAutomaton);
    }
    if !d.is_trim() {
        return Err(Error::InvalidDfa("nerode_partition expects a trim automaton".into()));
    }
    let n = d.state_count();
    let sink = n;
    let symbols = d.alphabet().len();
    let target = |q: usize, s: usize| if q == sink { sink } else { d.next(q, s).unwrap_or(sink) };

    let mut class: Vec<usize> = (0..n).map(|q| usize::from(d.is_final(q))).collect();
    class.push(0);
    let mut count = class.iter().collect::<std::collections::HashSet<_>>().len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..=n)
            .map(|q| {
                let mut sig = Vec::with_capacity(symbols + 1);
                sig.push(class[q]);
                sig.extend((0..symbols).map(|s| class[target(q, s)]));
                let fresh = ids.len();
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        let next_count = ids.len();
        class = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    class.truncate(n);
    let partition = Partition::from_labels(&class);
    let minimal = ops::quotient_automaton(d, &partition)?;
    Ok(NerodePartitionResult { partition, minimal })
}

/// The minimal trim automaton of `L(d)` in canonical (breadth-first) numbering.
/// The empty language yields the empty automaton.
pub fn minimize(d: &Dfa) -> Dfa {
    let t = ops::trim(d);
    if t.is_empty() {
        return t;
    }
    nerode_partition(&t)
        .expect("trim nonempty automaton")
        .minimal
        .canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{compile_regex, equivalent, trim};
    use crate::linalg::quotient_matrix;

    fn b1() -> Dfa {
        Dfa::from_transitions(
            3,
            &['a', 'b', 'c', 'd'],
            &[
                (0, 'a', 0),
                (0, 'b', 1),
                (0, 'c', 2),
                (0, 'd', 2),
                (1, 'a', 1),
                (1, 'b', 1),
                (1, 'c', 2),
                (1, 'd', 2),
                (2, 'a', 2),
                (2, 'b', 2),
                (2, 'c', 0),
                (2, 'd', 0),
            ],
            0,
            &[0, 1],
        )
        .unwrap()
    }

    #[test]
    fn nerode_partition_of_b1() {
        let r = nerode_partition(&b1()).unwrap();
        assert_eq!(r.partition.to_string(), "0,1|2");
        assert_eq!(r.minimal.state_count(), 2);
        let two = num_bigint::BigInt::from(2);
        assert!(r.minimal.adjacency().entries().iter().all(|x| *x == two));
        let q = quotient_matrix(&b1().adjacency(), &r.partition).unwrap();
        assert_eq!(q, r.minimal.adjacency().map(|x| num_rational::BigRational::from_integer(x.clone())));
    }

    #[test]
    fn minimal_input_gives_singletons() {
        let fib = minimize(&compile_regex("(a+ba)*").unwrap());
        let r = nerode_partition(&fib).unwrap();
        assert_eq!(r.partition, Partition::singletons(2));
        assert_eq!(r.minimal, fib);
    }

    #[test]
    fn partial_automaton_keeps_missing_transitions_apart() {
        // 0 -a-> 1 -a-> 2, all final: futures {ε,a,aa}, {ε,a}, {ε}
        let d = Dfa::from_transitions(3, &['a'], &[(0, 'a', 1), (1, 'a', 2)], 0, &[0, 1, 2]).unwrap();
        assert_eq!(nerode_partition(&d).unwrap().partition, Partition::singletons(3));
    }

    #[test]
    fn errors() {
        assert_eq!(nerode_partition(&Dfa::empty(vec!['a'])), Err(Error::EmptyAutomaton));
        let dead = Dfa::from_transitions(2, &['a'], &[(0, 'a', 1)], 0, &[0]).unwrap();
        assert!(matches!(nerode_partition(&dead), Err(Error::InvalidDfa(_))));
    }

    #[test]
    fn minimize_is_idempotent_and_language_preserving() {
        for pattern in ["(a+ba)*", "(ab+ba)*a", "a*b*+b*a*", "((a+b)(a+b))*"] {
            let d = compile_regex(pattern).unwrap();
            let m = minimize(&d);
            assert!(equivalent(&d, &m), "{pattern}");
            assert_eq!(minimize(&m), m, "{pattern}");
            assert_eq!(minimize(&trim(&d)), m, "{pattern}");
        }
        assert!(minimize(&Dfa::empty(vec!['a'])).is_empty());
    }
}
