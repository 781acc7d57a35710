//! Line-oriented text format:
//!
//! ```text
//! # comment
//! alphabet: a b c
//! states: 3
//! initial: 0
//! finals: 0 2
//! trans: 0 a 1
//! trans: 1 b 2
//! ```

use std::fmt::Write;

use super::Dfa;
use crate::error::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_index(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| err(line, format!("invalid {what} {token:?}")))
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<()> {
    if slot.replace(value).is_some() {
        return Err(err(line, format!("duplicate `{key}` line")));
    }
    Ok(())
}

/// Parses the text format. Line numbers in errors are 1-based; line 0
/// refers to the file as a whole.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut alphabet: Option<Vec<char>> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<(usize, usize)> = None;
    let mut finals: Option<(usize, Vec<usize>)> = None;
    let mut trans: Vec<(usize, usize, char, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| err(line, "expected `key: value`"))?;
        let fields: Vec<&str> = rest.split_ascii_whitespace().collect();
        match key.trim() {
            "alphabet" => {
                let mut symbols = Vec::with_capacity(fields.len());
                for f in &fields {
                    let mut chars = f.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => symbols.push(c),
                        _ => return Err(err(line, format!("symbol {f:?} is not a single character"))),
                    }
                }
                let mut sorted = symbols.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != symbols.len() {
                    return Err(err(line, "duplicate alphabet symbol"));
                }
                set_once(&mut alphabet, sorted, line, "alphabet")?;
            }
            "states" => {
                let [n] = fields[..] else {
                    return Err(err(line, "`states` takes one count"));
                };
                set_once(&mut states, parse_index(line, n, "state count")?, line, "states")?;
            }
            "initial" => {
                let [q] = fields[..] else {
                    return Err(err(line, "`initial` takes one state"));
                };
                set_once(&mut initial, (line, parse_index(line, q, "state")?), line, "initial")?;
            }
            "finals" => {
                let qs = fields
                    .iter()
                    .map(|q| parse_index(line, q, "state"))
                    .collect::<Result<Vec<_>>>()?;
                set_once(&mut finals, (line, qs), line, "finals")?;
            }
            "trans" => {
                let [p, a, q] = fields[..] else {
                    return Err(err(line, "`trans` takes `source symbol target`"));
                };
                let mut chars = a.chars();
                let (Some(sym), None) = (chars.next(), chars.next()) else {
                    return Err(err(line, format!("symbol {a:?} is not a single character")));
                };
                trans.push((line, parse_index(line, p, "state")?, sym, parse_index(line, q, "state")?));
            }
            other => return Err(err(line, format!("unknown key {other:?}"))),
        }
    }

    let n = states.ok_or_else(|| err(0, "missing `states` line"))?;
    let alphabet = alphabet.unwrap_or_default();
    let check = |line: usize, q: usize| {
        if q < n {
            Ok(q)
        } else {
            Err(err(line, format!("state {q} out of range (states: {n})")))
        }
    };
    let initial = match (n, initial) {
        (0, None) => None,
        (0, Some((line, q))) => return Err(err(line, format!("state {q} out of range (states: 0)"))),
        (_, None) => return Err(err(0, "missing `initial` line")),
        (_, Some((line, q))) => Some(check(line, q)?),
    };
    let mut final_flags = vec![false; n];
    match finals {
        Some((line, qs)) => {
            for q in qs {
                final_flags[check(line, q)?] = true;
            }
        }
        None if n > 0 => return Err(err(0, "missing `finals` line")),
        None => {}
    }
    let mut delta = vec![vec![None; alphabet.len()]; n];
    for (line, p, a, q) in trans {
        let s = alphabet
            .binary_search(&a)
            .map_err(|_| err(line, format!("unknown symbol '{a}'")))?;
        let (p, q) = (check(line, p)?, check(line, q)?);
        if delta[p][s].replace(q).is_some() {
            return Err(err(
                line,
                format!("nondeterministic: second transition from {p} on '{a}'"),
            ));
        }
    }
    Dfa::new(alphabet, delta, initial, final_flags)
}

/// Canonical text form: transitions sorted by source state, then symbol.
pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::from("alphabet:");
    for a in d.alphabet() {
        write!(out, " {a}").unwrap();
    }
    writeln!(out, "\nstates: {}", d.state_count()).unwrap();
    if let Some(q) = d.initial() {
        writeln!(out, "initial: {q}").unwrap();
        out.push_str("finals:");
        for f in d.finals() {
            write!(out, " {f}").unwrap();
        }
        out.push('\n');
    }
    for p in 0..d.state_count() {
        for (s, q) in d.successors(p) {
            writeln!(out, "trans: {p} {} {q}", d.alphabet()[s]).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIB: &str = "\
# Fibonacci language (a+ba)*
alphabet: a b
states: 2
initial: 0
finals: 0
trans: 0 a 0
trans: 0 b 1
trans: 1 a 0
";

    #[test]
    fn parses_fibonacci() {
        let d = parse_dfa(FIB).unwrap();
        assert_eq!(d.state_count(), 2);
        let m = d.adjacency();
        assert_eq!(m.to_rows(), vec![vec![1.into(), 1.into()], vec![1.into(), 0.into()]]);
        assert_eq!(serialize_dfa(&d), FIB.lines().skip(1).collect::<Vec<_>>().join("\n") + "\n");
    }

    #[test]
    fn epsilon_only() {
        let d = parse_dfa("states: 1\ninitial: 0\nfinals: 0\n").unwrap();
        assert!(d.accepts(""));
        assert_eq!(d.transition_count(), 0);
    }

    #[test]
    fn empty_automaton() {
        let d = parse_dfa("alphabet: a\nstates: 0\n").unwrap();
        assert!(d.is_empty());
        assert_eq!(serialize_dfa(&d), "alphabet: a\nstates: 0\n");
        assert_eq!(parse_dfa(&serialize_dfa(&d)).unwrap(), d);
    }

    #[test]
    fn comments_and_unsorted_alphabet() {
        let d = parse_dfa("alphabet: b a # two letters\nstates: 1 \ninitial: 0\nfinals:\ntrans: 0 b 0\n").unwrap();
        assert_eq!(d.alphabet(), &['a', 'b']);
        assert_eq!(d.step(0, 'b'), Some(0));
    }

    fn parse_error_line(text: &str) -> usize {
        match parse_dfa(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let head = "alphabet: a b\nstates: 3\ninitial: 0\nfinals: 2\n";
        assert_eq!(parse_error_line(&format!("{head}trans: 0 a 1\ntrans: 0 a 2\n")), 6);
        assert_eq!(parse_error_line(&format!("{head}trans: 0 c 1\n")), 5);
        assert_eq!(parse_error_line(&format!("{head}trans: 0 a 3\n")), 5);
        assert_eq!(parse_error_line(&format!("{head}trans: 0 a\n")), 5);
        assert_eq!(parse_error_line(&format!("{head}bogus\n")), 5);
        assert_eq!(parse_error_line(&format!("{head}colour: red\n")), 5);
        assert_eq!(parse_error_line("alphabet: a\ninitial: 0\nfinals: 0\n"), 0);
        assert_eq!(parse_error_line("states: 2\nfinals: 0\n"), 0);
        assert_eq!(parse_error_line("states: 2\ninitial: 2\nfinals: 0\n"), 2);
        assert_eq!(parse_error_line("alphabet: a a\nstates: 0\n"), 1);
        assert_eq!(parse_error_line("alphabet: ab\nstates: 0\n"), 1);
        assert_eq!(parse_error_line("states: 1\nstates: 1\n"), 2);
    }
}
