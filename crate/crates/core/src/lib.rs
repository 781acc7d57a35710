//! Graph-spectral analysis of deterministic finite automata.
//!
//! The adjacency matrix of an automaton counts, for every pair of states, the
//! symbols leading from one to the other. This crate computes exact ranks,
//! nullities and characteristic polynomials of such matrices, relates them to
//! Nerode (minimal-automaton) partitions through equitable partitions, detects
//! rank-one languages (whose counting function is a single power of one
//! eigenvalue), and ranks/unranks words of a regular language in shortlex
//! order for enumerative compression.
//!
//! Linear algebra is generic over the scalar type ([`linalg::Scalar`]); the
//! aliases below fix the arbitrary-precision instantiations used everywhere
//! else.

pub mod automaton;
pub mod counting;
mod error;
pub mod generate;
pub mod linalg;
pub mod rank_one;
pub mod samples;
pub mod spectral;

pub use automaton::{
    compile_regex, equivalent, minimize, nerode_partition, parse_dfa, quotient_automaton,
    serialize_dfa, trim, Dfa, NerodePartitionResult, VectorPair,
};
pub use counting::{
    compress, count_words, count_words_by_matrix, cumulative_count, decode_index, decompress,
    encode_index, rank_word, unrank_word, CountTable, Ranker,
};
pub use error::{Error, Result};
pub use linalg::{
    expansion, is_equitable, quotient_matrix, spectrum_included, Matrix, Partition, Polynomial,
};
pub use rank_one::{ClosedFormCount, RankOneDecomposition};
pub use spectral::{analyze, language_rank, verify_minimality, AnalysisReport, MinimalityCheck};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Matrix of arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;
/// Matrix of arbitrary-precision rationals in lowest terms.
pub type RatMatrix = Matrix<BigRational>;
/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Polynomial with arbitrary-precision rational coefficients.
pub type RatPolynomial = Polynomial<BigRational>;
/// Rank-one decomposition of an integer matrix.
pub type IntRankOne = RankOneDecomposition<BigInt>;
