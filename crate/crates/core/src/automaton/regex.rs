//! Regular expressions over single-character literals with `+` (union),
//! juxtaposition (concatenation), `*` (star) and parentheses. Whitespace is
//! ignored.
//!
//! Compilation goes through the position (Glushkov) automaton and the subset
//! construction; the result is trimmed but not minimized.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{ops, Dfa};
use crate::error::{Error, Result};

#[derive(Debug)]
enum Ast {
    Symbol(usize),
    Union(Box<Ast>, Box<Ast>),
    Concat(Box<Ast>, Box<Ast>),
    Star(Box<Ast>),
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    symbols: Vec<char>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or_else(|| self.tokens.last().map_or(0, |&(i, _)| i + 1), |&(i, _)| i)
    }

    fn error(&self, reason: &str) -> Error {
        Error::RegexSyntax {
            position: self.offset(),
            reason: reason.into(),
        }
    }

    fn union(&mut self) -> Result<Ast> {
        let mut left = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let right = self.concat()?;
            left = Ast::Union(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<Ast> {
        let mut left = self.star()?;
        while matches!(self.peek(), Some(c) if c != '+' && c != ')') {
            let right = self.star()?;
            left = Ast::Concat(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn star(&mut self) -> Result<Ast> {
        let mut inner = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            inner = Ast::Star(Box::new(inner));
        }
        Ok(inner)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            None => Err(self.error("unexpected end of pattern")),
            Some('(') => {
                self.pos += 1;
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c @ ('+' | '*' | ')')) => Err(self.error(&format!("unexpected '{c}'"))),
            Some(c) => {
                self.pos += 1;
                self.symbols.push(c);
                Ok(Ast::Symbol(self.symbols.len() - 1))
            }
        }
    }
}

/// nullable, first positions, last positions; fills `follow` as a side effect.
fn glushkov(ast: &Ast, follow: &mut [BTreeSet<usize>]) -> (bool, BTreeSet<usize>, BTreeSet<usize>) {
    match ast {
        Ast::Symbol(p) => (false, BTreeSet::from([*p]), BTreeSet::from([*p])),
        Ast::Union(a, b) => {
            let (na, fa, la) = glushkov(a, follow);
            let (nb, fb, lb) = glushkov(b, follow);
            (na || nb, &fa | &fb, &la | &lb)
        }
        Ast::Concat(a, b) => {
            let (na, fa, la) = glushkov(a, follow);
            let (nb, fb, lb) = glushkov(b, follow);
            for &p in &la {
                follow[p].extend(&fb);
            }
            let first = if na { &fa | &fb } else { fa };
            let last = if nb { &la | &lb } else { lb };
            (na && nb, first, last)
        }
        Ast::Star(a) => {
            let (_, fa, la) = glushkov(a, follow);
            for &p in &la {
                follow[p].extend(&fa);
            }
            (true, fa, la)
        }
    }
}

/// Compiles a pattern into a trim deterministic automaton.
pub fn compile_regex(pattern: &str) -> Result<Dfa> {
    let tokens: Vec<(usize, char)> = pattern
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        tokens,
        pos: 0,
        symbols: Vec::new(),
    };
    let ast = parser.union()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected ')'"));
    }
    let symbols = parser.symbols;
    let mut follow = vec![BTreeSet::new(); symbols.len()];
    let (nullable, first, last) = glushkov(&ast, &mut follow);

    let mut alphabet = symbols.clone();
    alphabet.sort_unstable();
    alphabet.dedup();

    // Subset construction; `None` is the initial state (no position read yet).
    type Key = Option<BTreeSet<usize>>;
    let successors = |key: &Key| -> Vec<Option<BTreeSet<usize>>> {
        let reachable: BTreeSet<usize> = match key {
            None => first.clone(),
            Some(set) => set.iter().flat_map(|&p| follow[p].iter().copied()).collect(),
        };
        alphabet
            .iter()
            .map(|&a| {
                let next: BTreeSet<usize> =
                    reachable.iter().copied().filter(|&p| symbols[p] == a).collect();
                (!next.is_empty()).then_some(next)
            })
            .collect()
    };
    let mut index: HashMap<Key, usize> = HashMap::from([(None, 0)]);
    let mut keys: Vec<Key> = vec![None];
    let mut queue = VecDeque::from([0usize]);
    let mut delta = Vec::new();
    while let Some(i) = queue.pop_front() {
        let row: Vec<Option<usize>> = successors(&keys[i])
            .into_iter()
            .map(|next| {
                next.map(|set| {
                    let key = Some(set);
                    *index.entry(key.clone()).or_insert_with(|| {
                        keys.push(key);
                        queue.push_back(keys.len() - 1);
                        keys.len() - 1
                    })
                })
            })
            .collect();
        delta.push(row);
    }
    let finals = keys
        .iter()
        .map(|k| match k {
            None => nullable,
            Some(set) => set.iter().any(|p| last.contains(p)),
        })
        .collect();
    let dfa = Dfa::new(alphabet, delta, Some(0), finals)?;
    Ok(ops::trim(&dfa))
}
