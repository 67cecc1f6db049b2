//! Exact search for the shortest repetition-free word accepted by a DFA,
//! plus exhaustive enumeration of repetition-free words used as an
//! independent oracle in tests.
//!
//! The search explores repetition-free words level by level, each node
//! carrying its full word and the DFA state it reaches. Nodes are never
//! merged by state alone: whether an extension stays repetition-free
//! depends on the whole word, and k-power-free languages are not regular,
//! so per-state memoization would drop valid candidates. Transitions into
//! the DFA's dead state are pruned. Expansion is lexicographic within each
//! level, which makes the returned word the lexicographically least one of
//! minimum length.

use rayon::prelude::*;

use crate::automata::Dfa;
use crate::words::{extension_is_free, Constraint, Symbol, Word, WordError};

/// Result of a bounded shortest-word search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The shortest repetition-free accepted word (lexicographically least
    /// among the minima).
    Found(Word),
    /// The frontier died out: no repetition-free accepted word exists at
    /// any length.
    NoneExists,
    /// Nothing found up to the bound; longer words might still exist.
    NoneWithin { max_len: usize },
}

impl SearchOutcome {
    pub fn word(&self) -> Option<&Word> {
        match self {
            SearchOutcome::Found(word) => Some(word),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Expand each level in parallel. The result is bit-identical to the
    /// sequential order: per-node child lists are concatenated in frontier
    /// order.
    pub parallel: bool,
    /// Emit one diagnostic line per level (level, frontier size) on stderr.
    pub verbose: bool,
}

struct Node {
    word: Vec<Symbol>,
    state: usize,
}

/// Shortest word that is both accepted by `dfa` and free of the given
/// repetition, searching words of length at most `max_len`.
pub fn shortest_free_accepted(
    dfa: &Dfa,
    constraint: &Constraint,
    max_len: usize,
) -> Result<SearchOutcome, WordError> {
    shortest_free_accepted_with(dfa, constraint, max_len, &SearchOptions::default())
}

pub fn shortest_free_accepted_with(
    dfa: &Dfa,
    constraint: &Constraint,
    max_len: usize,
    options: &SearchOptions,
) -> Result<SearchOutcome, WordError> {
    constraint.validate()?;
    let alphabet = dfa.alphabet_size();
    let mut frontier = vec![Node {
        word: Vec::new(),
        state: dfa.initial(),
    }];
    if Some(dfa.initial()) == dfa.dead() {
        frontier.clear();
    }
    for level in 0..=max_len {
        if options.verbose {
            eprintln!("level {level}: frontier {}", frontier.len());
        }
        if frontier.is_empty() {
            return Ok(SearchOutcome::NoneExists);
        }
        // frontier is in lexicographic order, so the first accepting node
        // at the shallowest level wins
        for node in &frontier {
            if dfa.is_final(node.state) {
                return Ok(SearchOutcome::Found(
                    Word::new(node.word.clone(), alphabet).expect("symbols from the alphabet"),
                ));
            }
        }
        if level == max_len {
            return Ok(SearchOutcome::NoneWithin { max_len });
        }
        let expand = |node: &Node| -> Vec<Node> {
            let mut children = Vec::new();
            for symbol in 0..alphabet as Symbol {
                let target = dfa.step_unchecked(node.state, symbol);
                if Some(target) == dfa.dead() {
                    continue;
                }
                if !extension_is_free(&node.word, symbol, constraint) {
                    continue;
                }
                let mut word = Vec::with_capacity(node.word.len() + 1);
                word.extend_from_slice(&node.word);
                word.push(symbol);
                children.push(Node {
                    word,
                    state: target,
                });
            }
            children
        };
        let expanded: Vec<Vec<Node>> = if options.parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        frontier = expanded.into_iter().flatten().collect();
    }
    unreachable!("loop returns at level == max_len")
}

/// Number of repetition-free words of exactly the given length, by
/// exhaustive extension of free prefixes.
pub fn enumerate_free(
    alphabet_size: usize,
    constraint: &Constraint,
    len: usize,
) -> Result<u64, WordError> {
    if alphabet_size == 0 {
        return Err(WordError::InvalidAlphabet { size: 0 });
    }
    constraint.validate()?;
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(len);
    count_free(&mut prefix, alphabet_size, constraint, len, &mut |_| {
        count += 1
    });
    Ok(count)
}

/// The repetition-free words of exactly the given length, in lexicographic
/// order.
pub fn free_words(
    alphabet_size: usize,
    constraint: &Constraint,
    len: usize,
) -> Result<Vec<Word>, WordError> {
    if alphabet_size == 0 {
        return Err(WordError::InvalidAlphabet { size: 0 });
    }
    constraint.validate()?;
    let mut words = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    count_free(&mut prefix, alphabet_size, constraint, len, &mut |symbols| {
        words.push(Word::new(symbols.to_vec(), alphabet_size).expect("valid symbols"))
    });
    Ok(words)
}

fn count_free(
    prefix: &mut Vec<Symbol>,
    alphabet: usize,
    constraint: &Constraint,
    len: usize,
    visit: &mut impl FnMut(&[Symbol]),
) {
    if prefix.len() == len {
        visit(prefix);
        return;
    }
    for symbol in 0..alphabet as Symbol {
        if extension_is_free(prefix, symbol, constraint) {
            prefix.push(symbol);
            count_free(prefix, alphabet, constraint, len, visit);
            prefix.pop();
        }
    }
}
