//! Spectral invariants of automata and the per-automaton analysis report.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::automaton::{minimize, nerode_partition, Dfa};
use crate::error::{Error, Result};
use crate::linalg::{is_equitable, quotient_matrix, spectrum_included};
use crate::rank_one::{self, RankOneDecomposition};
use crate::IntPolynomial;

/// Rank of the adjacency matrix of the minimal automaton of `L(d)`.
/// The empty language has rank 0.
pub fn language_rank(d: &Dfa) -> usize {
    minimize(d).adjacency().rank()
}

/// Rank and nullity of an automaton next to those of its minimal automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalityCheck {
    pub given_rank: usize,
    pub given_nullity: usize,
    pub minimal_rank: usize,
    pub minimal_nullity: usize,
    pub rank_ok: bool,
    pub nullity_ok: bool,
}

impl MinimalityCheck {
    /// Both quantities of the given automaton equal the minimal ones.
    pub fn attains_minimum(&self) -> bool {
        self.given_rank == self.minimal_rank && self.given_nullity == self.minimal_nullity
    }
}

/// Compares rank and nullity of `d` with those of its minimal automaton.
/// For every automaton both `rank_ok` and `nullity_ok` hold.
pub fn verify_minimality(d: &Dfa) -> Result<MinimalityCheck> {
    if d.is_empty() {
        return Err(Error::EmptyAutomaton);
    }
    let given = d.adjacency();
    let minimal = minimize(d).adjacency();
    let (given_rank, minimal_rank) = (given.rank(), minimal.rank());
    let given_nullity = given.nullity()?;
    let minimal_nullity = minimal.nullity()?;
    Ok(MinimalityCheck {
        given_rank,
        given_nullity,
        minimal_rank,
        minimal_nullity,
        rank_ok: minimal_rank <= given_rank,
        nullity_ok: minimal_nullity <= given_nullity,
    })
}

/// How the Nerode partition of a trim automaton relates to its spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerodeSpectrum {
    /// The Nerode partition is equitable for the adjacency matrix.
    pub equitable: bool,
    /// Every eigenvalue of the quotient is an eigenvalue of the original.
    pub spectrum_included: bool,
    /// The quotient's characteristic polynomial divides the original's
    /// (multiplicities respected). Reported, not required.
    pub char_poly_divides: bool,
    /// The quotient matrix equals the minimal automaton's adjacency matrix.
    pub quotient_is_minimal_adjacency: bool,
}

pub fn nerode_spectrum(d: &Dfa) -> Result<NerodeSpectrum> {
    let nerode = nerode_partition(d)?;
    let m = d.adjacency();
    let q = quotient_matrix(&m, &nerode.partition)?;
    let minimal = nerode.minimal.adjacency();
    let quotient_is_minimal_adjacency = q == minimal.map(|x| num_rational::Ratio::from_integer(x.clone()));
    let small = minimal.char_poly()?;
    let big = m.char_poly()?;
    let lift = |p: &IntPolynomial| p.map(|c| num_rational::BigRational::from_integer(c.clone()));
    let char_poly_divides = lift(&big).div_rem(&lift(&small)).1.is_zero();
    Ok(NerodeSpectrum {
        equitable: is_equitable(&m, &nerode.partition)?,
        spectrum_included: spectrum_included(&small, &big)?,
        char_poly_divides,
        quotient_is_minimal_adjacency,
    })
}

/// Summary of the spectral structure of one automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    #[serde(rename = "states")]
    pub state_count: usize,
    #[serde(rename = "trim")]
    pub is_trim: bool,
    #[serde(rename = "minimal")]
    pub is_minimal: bool,
    pub rank: usize,
    pub nullity: usize,
    #[serde(rename = "charPoly", serialize_with = "json::polynomial")]
    pub char_poly: IntPolynomial,
    #[serde(rename = "languageRank")]
    pub language_rank: usize,
    /// Decomposition of the minimal automaton's adjacency matrix, present
    /// iff the language has rank one.
    #[serde(rename = "rankOne", serialize_with = "json::rank_one")]
    pub rank_one: Option<RankOneDecomposition<BigInt>>,
    /// The automaton's own adjacency matrix is rank one with a 0/1 in-vector.
    #[serde(rename = "expandedNormal")]
    pub is_expanded_normal: bool,
}

pub fn analyze(d: &Dfa) -> AnalysisReport {
    let m = d.adjacency();
    let min = minimize(d);
    let min_adj = min.adjacency();
    let rank = m.rank();
    let language_rank = min_adj.rank();
    let is_trim = d.is_trim();
    AnalysisReport {
        state_count: d.state_count(),
        is_trim,
        is_minimal: is_trim && d.state_count() == min.state_count(),
        rank,
        nullity: d.state_count() - rank,
        char_poly: m.char_poly().expect("adjacency is square"),
        language_rank,
        rank_one: (language_rank == 1)
            .then(|| rank_one::decompose(&min_adj).expect("rank-one adjacency")),
        is_expanded_normal: rank == 1
            && rank_one::is_expanded_normal(&m).expect("rank-one adjacency"),
    }
}

/// Integers go out as JSON numbers when they fit in an `i64`, as strings
/// otherwise.
mod json {
    use super::*;
    use serde::ser::SerializeStruct;

    struct Int<'a>(&'a BigInt);

    impl Serialize for Int<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self.0.to_i64() {
                Some(x) => s.serialize_i64(x),
                None => s.serialize_str(&self.0.to_string()),
            }
        }
    }

    fn ints(v: &[BigInt]) -> Vec<Int<'_>> {
        v.iter().map(Int).collect()
    }

    pub fn polynomial<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.coefficients().iter().map(Int))
    }

    pub fn rank_one<S: Serializer>(
        dec: &Option<RankOneDecomposition<BigInt>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let Some(dec) = dec else {
            return s.serialize_none();
        };
        let mut st = s.serialize_struct("RankOne", 3)?;
        st.serialize_field("inVector", &ints(&dec.in_vector))?;
        st.serialize_field("outVector", &ints(&dec.out_vector))?;
        st.serialize_field("lambda", &Int(&dec.lambda))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::compile_regex;
    use crate::samples;

    #[test]
    fn language_ranks() {
        assert_eq!(language_rank(&samples::even_cd_minimal()), 1);
        assert_eq!(language_rank(&samples::even_cd_three_state()), 1);
        assert_eq!(language_rank(&samples::even_cd_four_state()), 1);
        assert_eq!(language_rank(&compile_regex("(a+ba)*").unwrap()), 2);
        let eps = Dfa::from_transitions(1, &['a'], &[], 0, &[0]).unwrap();
        assert_eq!(language_rank(&eps), 0);
        assert_eq!(language_rank(&Dfa::empty(vec![])), 0);
    }

    #[test]
    fn minimality_of_three_state_automaton() {
        let c = verify_minimality(&samples::even_cd_three_state()).unwrap();
        assert_eq!((c.given_rank, c.given_nullity), (2, 1));
        assert_eq!((c.minimal_rank, c.minimal_nullity), (1, 1));
        assert!(c.rank_ok && c.nullity_ok);
        assert!(!c.attains_minimum());

        let c = verify_minimality(&samples::even_cd_minimal()).unwrap();
        assert!(c.attains_minimum() && c.rank_ok && c.nullity_ok);
        assert_eq!(verify_minimality(&Dfa::empty(vec![])), Err(Error::EmptyAutomaton));
    }

    #[test]
    fn nerode_spectrum_of_samples() {
        for d in [
            samples::even_cd_three_state(),
            samples::even_cd_four_state(),
            samples::fibonacci(),
        ] {
            let s = nerode_spectrum(&d).unwrap();
            assert!(s.equitable && s.spectrum_included && s.quotient_is_minimal_adjacency);
        }
    }

    #[test]
    fn report_for_three_state_automaton() {
        let r = analyze(&samples::even_cd_three_state());
        assert!(!r.is_minimal && r.is_trim);
        assert_eq!((r.rank, r.nullity, r.language_rank), (2, 1, 1));
        let dec = r.rank_one.as_ref().unwrap();
        assert_eq!(dec.lambda, BigInt::from(4));
        assert!(!r.is_expanded_normal);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "states": 3, "trim": true, "minimal": false, "rank": 2, "nullity": 1,
                "charPoly": [0, 4, -5, 1], "languageRank": 1,
                "rankOne": {"inVector": [1, 1], "outVector": [2, 2], "lambda": 4},
                "expandedNormal": false
            })
        );
    }

    #[test]
    fn report_for_fibonacci_and_empty() {
        let r = analyze(&samples::fibonacci());
        assert!(r.is_minimal);
        assert_eq!(r.language_rank, 2);
        assert_eq!(r.rank, r.language_rank);
        assert!(r.rank_one.is_none());
        assert_eq!(serde_json::to_value(&r).unwrap()["rankOne"], serde_json::Value::Null);

        let r = analyze(&Dfa::empty(vec!['a']));
        assert_eq!((r.state_count, r.rank, r.nullity, r.language_rank), (0, 0, 0, 0));
        assert_eq!(r.char_poly, IntPolynomial::one());
        assert!(r.rank_one.is_none() && !r.is_expanded_normal);
    }

    #[test]
    fn four_state_automaton_is_expanded_normal() {
        let r = analyze(&samples::even_cd_four_state());
        assert_eq!(r.rank, 1);
        assert!(r.is_expanded_normal);
        assert!(!r.is_minimal);
    }
}
