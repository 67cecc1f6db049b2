//! Builders for the word families used by the chain automata: base simple
//! k-powers, circularly squarefree ternary words, the recursive family `w_i`
//! over a growing alphabet, its fixed-alphabet variant `w'_i`, and simple
//! overlaps.
//!
//! The recursive family starts from a simple k-power `w_1` of length `n` over
//! `Σ_m` and interleaves partial conjugates with a fresh separator letter:
//!
//! ```text
//! w_{i+1} = cyc_0(w_i) a_i cyc_{n^{i-1}}(w_i) a_i ... cyc_{(n-1)n^{i-1}}(w_i) a_i
//! ```
//!
//! with `a_i = m+i-1`, so `|w_i| = n^i` and each `w_i` is again a simple
//! k-power. The variant `w'_i` replaces the fresh letter by a separator word
//! `b_i = m c_i m` over the fixed alphabet `Σ_{m+1}`, where the `c_i` are the
//! shortest k-power-free words over `Σ_m`, taken in length-lexicographic
//! order without repetition.

use thiserror::Error;

use crate::morphisms::thue_morse_prefix;
use crate::search::free_words;
use crate::words::{Constraint, Symbol, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("base word {word} is not a simple {k}-power")]
    NotSimplePower { word: String, k: usize },
    #[error("input {word} is not a simple square")]
    NotSimpleSquare { word: String },
    #[error("no circularly squarefree ternary word of length {len} exists")]
    NoCircularWitness { len: usize },
    #[error("family index must be at least 1")]
    IndexTooSmall,
    #[error("construction parameter too large: {what}")]
    TooLarge { what: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Lexicographically least ternary word of length `n` whose rotations are all
/// square-free, or `None` once backtracking has exhausted the search space.
///
/// Prefixes that already contain a square are pruned; rotations are only
/// checked at full length.
pub fn find_circularly_squarefree(n: usize) -> Option<Word> {
    if n == 0 {
        return None;
    }
    let mut prefix: Vec<Symbol> = Vec::with_capacity(n);
    if backtrack_circular(&mut prefix, n) {
        Some(Word::new(prefix, 3).expect("ternary symbols"))
    } else {
        None
    }
}

fn backtrack_circular(prefix: &mut Vec<Symbol>, n: usize) -> bool {
    if prefix.len() == n {
        let word = Word::new(prefix.clone(), 3).expect("ternary symbols");
        return word.is_circularly_squarefree().expect("nonempty");
    }
    for a in 0..3u8 {
        if !crate::words::extension_is_free(prefix, a, &Constraint::KPower { k: 2 }) {
            continue;
        }
        prefix.push(a);
        if backtrack_circular(prefix, n) {
            return true;
        }
        prefix.pop();
    }
    false
}

/// A base simple k-power to seed the recursive family with.
///
/// For `k >= 3` the base is `p^k` with `p` the Thue-Morse prefix of length
/// `2^size_param`, over the binary alphabet. For `k = 2` it is `p^2` for a
/// circularly squarefree ternary `p` of length `size_param`.
pub fn base_simple_power(k: usize, size_param: usize) -> Result<Word, ConstructionError> {
    if k < 2 {
        return Err(WordError::ExponentTooSmall { k }.into());
    }
    let root = if k == 2 {
        find_circularly_squarefree(size_param)
            .ok_or(ConstructionError::NoCircularWitness { len: size_param })?
    } else {
        if size_param > 20 {
            return Err(ConstructionError::TooLarge {
                what: format!("2^{size_param} base length"),
            });
        }
        thue_morse_prefix(1usize << size_param)
    };
    let mut symbols = Vec::with_capacity(root.len() * k);
    for _ in 0..k {
        symbols.extend_from_slice(root.symbols());
    }
    Ok(Word::new(symbols, root.alphabet_size())?)
}

fn check_base(w1: &Word, k: usize) -> Result<(), ConstructionError> {
    if !w1.is_simple_kpower(k)? {
        return Err(ConstructionError::NotSimplePower {
            word: w1.to_string(),
            k,
        });
    }
    Ok(())
}

/// The `i`-th member of the growing-alphabet family seeded by `w1`.
/// `w_1` is returned as-is; `w_i` lives over `Σ_{m+i-1}` and has length
/// `n^i` where `n = |w_1|` and `m` is the alphabet of `w_1`.
pub fn build_w(w1: &Word, k: usize, i: usize) -> Result<Word, ConstructionError> {
    if i == 0 {
        return Err(ConstructionError::IndexTooSmall);
    }
    check_base(w1, k)?;
    let n = w1.len();
    let m = w1.alphabet_size();
    if m + i - 1 > Symbol::MAX as usize + 1 {
        return Err(ConstructionError::TooLarge {
            what: format!("alphabet Σ_{}", m + i - 1),
        });
    }
    let mut word = w1.clone();
    for level in 1..i {
        let separator = (m + level - 1) as Symbol;
        let stride = n
            .checked_pow((level - 1) as u32)
            .ok_or_else(|| ConstructionError::TooLarge {
                what: format!("block stride n^{}", level - 1),
            })?;
        let target_len = word
            .len()
            .checked_mul(n)
            .ok_or_else(|| ConstructionError::TooLarge {
                what: "family word length".to_string(),
            })?;
        let mut symbols = Vec::with_capacity(target_len);
        for block in 0..n {
            symbols.extend_from_slice(word.cyc(block * stride)?.symbols());
            symbols.push(separator);
        }
        word = Word::new(symbols, m + level)?;
    }
    Ok(word)
}

/// Separator word `b_index = m c_index m` for the fixed-alphabet variant,
/// where `c_index` is the `index`-th (0-based) k-power-free word over `Σ_m`
/// in length-lexicographic order.
fn separator_word(m: usize, k: usize, index: usize) -> Result<Word, ConstructionError> {
    let constraint = Constraint::kpower(k)?;
    let mut remaining = index;
    for len in 1.. {
        let words = free_words(m, &constraint, len)?;
        if remaining < words.len() {
            let c = &words[remaining];
            let mut symbols = Vec::with_capacity(c.len() + 2);
            symbols.push(m as Symbol);
            symbols.extend_from_slice(c.symbols());
            symbols.push(m as Symbol);
            return Ok(Word::new(symbols, m + 1)?);
        }
        remaining -= words.len();
        if len > 64 {
            // free words of every length exist for the alphabets in use
            return Err(ConstructionError::TooLarge {
                what: format!("separator index {index}"),
            });
        }
    }
    unreachable!()
}

/// The fixed-alphabet variant of [`build_w`]: the same block structure, but
/// every level uses a separator word over `Σ_{m+1}` instead of a fresh
/// letter.
pub fn build_w_prime(w1: &Word, k: usize, i: usize) -> Result<Word, ConstructionError> {
    if i == 0 {
        return Err(ConstructionError::IndexTooSmall);
    }
    check_base(w1, k)?;
    let n = w1.len();
    let m = w1.alphabet_size();
    let mut word = w1.clone();
    for level in 1..i {
        let separator = separator_word(m, k, level - 1)?;
        let stride = n
            .checked_pow((level - 1) as u32)
            .ok_or_else(|| ConstructionError::TooLarge {
                what: format!("block stride n^{}", level - 1),
            })?;
        let mut symbols = Vec::new();
        for block in 0..n {
            symbols.extend_from_slice(word.cyc(block * stride)?.symbols());
            symbols.extend_from_slice(separator.symbols());
        }
        word = Word::new(symbols, m + 1)?;
    }
    Ok(word)
}

/// Extends a simple square `axax` to the simple overlap `axaxa`.
pub fn simple_overlap_from_square(square: &Word) -> Result<Word, ConstructionError> {
    if !square.is_simple_kpower(2)? {
        return Err(ConstructionError::NotSimpleSquare {
            word: square.to_string(),
        });
    }
    let mut symbols = square.symbols().to_vec();
    symbols.push(square.symbols()[0]);
    Ok(Word::new(symbols, square.alphabet_size())?)
}
