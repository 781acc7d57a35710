//! Small labelled automata with known adjacency matrices, used by the tests,
//! the acceptance suite and the documentation.
//!
//! The "even c/d" automata all recognize words over `{a, b, c, d}` with an
//! even number of `c`s and `d`s combined; they differ in how many states
//! duplicate the two Nerode classes.

use crate::automaton::Dfa;

fn build(n: usize, alphabet: &str, trans: &[(usize, &str, usize)], finals: &[usize]) -> Dfa {
    let alphabet: Vec<char> = alphabet.chars().collect();
    let triples: Vec<(usize, char, usize)> = trans
        .iter()
        .flat_map(|&(p, symbols, q)| symbols.chars().map(move |a| (p, a, q)))
        .collect();
    Dfa::from_transitions(n, &alphabet, &triples, 0, finals).expect("well-formed sample")
}

/// `(a+ba)*`, adjacency `[[1,1],[1,0]]`; counts are Fibonacci numbers.
pub fn fibonacci() -> Dfa {
    build(2, "ab", &[(0, "a", 0), (0, "b", 1), (1, "a", 0)], &[0])
}

/// Minimal even c/d automaton, adjacency `[[2,2],[2,2]]`.
pub fn even_cd_minimal() -> Dfa {
    build(
        2,
        "abcd",
        &[(0, "ab", 0), (0, "cd", 1), (1, "ab", 1), (1, "cd", 0)],
        &[0],
    )
}

/// Three-state even c/d automaton, adjacency `[[1,1,2],[0,2,2],[2,0,2]]`
/// (rank 2); Nerode partition `{{0,1},{2}}`.
pub fn even_cd_three_state() -> Dfa {
    build(
        3,
        "abcd",
        &[
            (0, "a", 0),
            (0, "b", 1),
            (0, "cd", 2),
            (1, "ab", 1),
            (1, "cd", 2),
            (2, "ab", 2),
            (2, "cd", 0),
        ],
        &[0, 1],
    )
}

/// Four-state even c/d automaton, adjacency all ones (rank 1); Nerode
/// partition `{{0,1},{2,3}}`.
pub fn even_cd_four_state() -> Dfa {
    build(
        4,
        "abcd",
        &[
            (0, "a", 0),
            (0, "b", 1),
            (0, "c", 2),
            (0, "d", 3),
            (1, "a", 0),
            (1, "b", 1),
            (1, "c", 2),
            (1, "d", 3),
            (2, "a", 2),
            (2, "b", 3),
            (2, "c", 0),
            (2, "d", 1),
            (3, "a", 2),
            (3, "b", 3),
            (3, "c", 0),
            (3, "d", 1),
        ],
        &[0, 1],
    )
}

/// Minimal rank-one automaton with adjacency `[[2,4],[1,2]]`
/// (in-vector `[1,2]`, out-vector `[2,1]`).
pub fn rank_one_two_state() -> Dfa {
    build(
        2,
        "abcdef",
        &[(0, "ab", 0), (0, "cdef", 1), (1, "a", 0), (1, "bc", 1)],
        &[0],
    )
}

/// Minimal rank-one automaton with adjacency `[[0,2,1],[0,4,2],[0,2,1]]`;
/// the initial state has no incoming transitions.
pub fn rank_one_with_source() -> Dfa {
    build(
        3,
        "abcdef",
        &[
            (0, "ab", 1),
            (0, "c", 2),
            (1, "abcd", 1),
            (1, "ef", 2),
            (2, "ab", 1),
            (2, "c", 2),
        ],
        &[2],
    )
}
