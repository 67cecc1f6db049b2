//! Core word algebra: factors, periods, conjugates, partial conjugates, and
//! the repetition predicates (k-power-freeness, overlap-freeness) that
//! everything else in this crate is built on.
//!
//! Words are finite sequences of small integer symbols over an explicitly
//! declared alphabet `Σ_m = {0, 1, ..., m-1}`. Symbols 0-9 render as digits,
//! larger ones as bracketed decimals, so `Word` values round-trip through
//! their `Display`/`FromStr` forms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A symbol of some alphabet `Σ_m`. Alphabets in this crate stay tiny.
pub type Symbol = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },
    #[error("alphabet size must be at least 1, got {size}")]
    InvalidAlphabet { size: usize },
    #[error("power exponent must be at least 2, got {k}")]
    ExponentTooSmall { k: usize },
    #[error("cannot parse word from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A finite word over `Σ_m`. Immutable after construction; every symbol is
/// guaranteed to be below the declared alphabet size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: usize,
}

/// The repetition shapes the detectors look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// A factor of the form `x^k` for nonempty `x`.
    KPower { k: usize },
    /// A factor of the form `axaxa` with `a` a letter and `x` possibly empty.
    Overlap,
}

impl Constraint {
    pub fn kpower(k: usize) -> Result<Self, WordError> {
        if k < 2 {
            return Err(WordError::ExponentTooSmall { k });
        }
        Ok(Constraint::KPower { k })
    }

    pub fn validate(&self) -> Result<(), WordError> {
        match *self {
            Constraint::KPower { k } if k < 2 => Err(WordError::ExponentTooSmall { k }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::KPower { k } => write!(f, "{k}-power"),
            Constraint::Overlap => write!(f, "overlap"),
        }
    }
}

/// A located repetition inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    pub period: usize,
    pub kind: OccurrenceKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OccurrenceKind {
    KPower { exponent: usize },
    Overlap,
}

impl Occurrence {
    /// Length of the repeated factor: `period * k` for a k-power,
    /// `2 * period + 1` for an overlap.
    pub fn len(&self) -> usize {
        match self.kind {
            OccurrenceKind::KPower { exponent } => self.period * exponent,
            OccurrenceKind::Overlap => 2 * self.period + 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: usize) -> Result<Self, WordError> {
        if alphabet_size == 0 {
            return Err(WordError::InvalidAlphabet { size: 0 });
        }
        if let Some(&s) = symbols.iter().find(|&&s| (s as usize) >= alphabet_size) {
            return Err(WordError::SymbolOutOfRange {
                symbol: s as usize,
                alphabet: alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    pub fn from_slice(symbols: &[Symbol], alphabet_size: usize) -> Result<Self, WordError> {
        Self::new(symbols.to_vec(), alphabet_size)
    }

    pub fn empty(alphabet_size: usize) -> Result<Self, WordError> {
        Self::new(Vec::new(), alphabet_size)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Same symbols, re-declared over a (usually larger) alphabet.
    pub fn with_alphabet(&self, alphabet_size: usize) -> Result<Self, WordError> {
        Self::new(self.symbols.clone(), alphabet_size)
    }

    /// Full conjugate: rotate left by `i` (taken modulo the length).
    pub fn rotated(&self, i: usize) -> Word {
        if self.symbols.is_empty() {
            return self.clone();
        }
        let n = self.symbols.len();
        let i = i % n;
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.symbols[i..]);
        symbols.extend_from_slice(&self.symbols[..i]);
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// The `i`-th partial conjugate: rotate left by `i`, then drop the last
    /// symbol. `cyc_0` just drops the last symbol. The result is always one
    /// symbol shorter than `self`.
    pub fn cyc(&self, i: usize) -> Result<Word, WordError> {
        let n = self.symbols.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        if i > n {
            return Err(WordError::IndexOutOfRange { index: i, len: n });
        }
        let symbols = if i == 0 {
            self.symbols[..n - 1].to_vec()
        } else {
            // w[i..n-1] followed by w[0..i-2], both ends inclusive
            let mut v = Vec::with_capacity(n - 1);
            v.extend_from_slice(&self.symbols[i..]);
            v.extend_from_slice(&self.symbols[..i - 1]);
            v
        };
        Ok(Word {
            symbols,
            alphabet_size: self.alphabet_size,
        })
    }

    /// True iff the word is not `p^k` for any proper divisor period `p`.
    pub fn is_primitive(&self) -> Result<bool, WordError> {
        let n = self.symbols.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        for d in 1..n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if (d..n).all(|i| self.symbols[i] == self.symbols[i - d]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All cyclic rotations, deduplicated. A primitive word of length `n`
    /// has exactly `n` of them.
    pub fn distinct_conjugates(&self) -> Result<BTreeSet<Word>, WordError> {
        if self.symbols.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok((0..self.symbols.len()).map(|i| self.rotated(i)).collect())
    }

    /// First `x^k` factor, scanning occurrences by start, then by period.
    /// `None` means the word is k-power-free.
    pub fn find_kpower(&self, k: usize) -> Result<Option<Occurrence>, WordError> {
        if k < 2 {
            return Err(WordError::ExponentTooSmall { k });
        }
        let s = &self.symbols;
        let n = s.len();
        for start in 0..n {
            let max_period = (n - start) / k;
            for period in 1..=max_period {
                if kpower_at(s, start, period, k) {
                    return Ok(Some(Occurrence {
                        start,
                        period,
                        kind: OccurrenceKind::KPower { exponent: k },
                    }));
                }
            }
        }
        Ok(None)
    }

    /// First `axaxa` factor, same tie-breaking as [`Word::find_kpower`].
    /// `None` means the word is overlap-free.
    pub fn find_overlap(&self) -> Option<Occurrence> {
        let s = &self.symbols;
        let n = s.len();
        for start in 0..n {
            let max_period = n.saturating_sub(start + 1) / 2;
            for period in 1..=max_period {
                if (start..=start + period).all(|i| s[i] == s[i + period]) {
                    return Some(Occurrence {
                        start,
                        period,
                        kind: OccurrenceKind::Overlap,
                    });
                }
            }
        }
        None
    }

    pub fn find_violation(&self, constraint: &Constraint) -> Result<Option<Occurrence>, WordError> {
        match *constraint {
            Constraint::KPower { k } => self.find_kpower(k),
            Constraint::Overlap => Ok(self.find_overlap()),
        }
    }

    pub fn is_kpower_free(&self, k: usize) -> Result<bool, WordError> {
        Ok(self.find_kpower(k)?.is_none())
    }

    pub fn is_overlap_free(&self) -> bool {
        self.find_overlap().is_none()
    }

    /// Given that `self` already satisfies `constraint`, does `self · a`
    /// still satisfy it? Only repetitions ending at the appended position
    /// are examined.
    pub fn is_free_extension(&self, a: Symbol, constraint: &Constraint) -> Result<bool, WordError> {
        if (a as usize) >= self.alphabet_size {
            return Err(WordError::SymbolOutOfRange {
                symbol: a as usize,
                alphabet: self.alphabet_size,
            });
        }
        constraint.validate()?;
        Ok(extension_is_free(&self.symbols, a, constraint))
    }

    /// True iff `self = p^k` for some `p` and no proper factor is a k-power.
    pub fn is_simple_kpower(&self, k: usize) -> Result<bool, WordError> {
        if k < 2 {
            return Err(WordError::ExponentTooSmall { k });
        }
        let s = &self.symbols;
        let n = s.len();
        if n == 0 || !n.is_multiple_of(k) {
            return Ok(false);
        }
        let root = n / k;
        if !kpower_at(s, 0, root, k) {
            return Ok(false);
        }
        // Any other (start, period) pair covers a proper factor.
        for start in 0..n {
            let max_period = (n - start) / k;
            for period in 1..=max_period {
                if start == 0 && period == root {
                    continue;
                }
                if kpower_at(s, start, period, k) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every cyclic rotation is square-free.
    pub fn is_circularly_squarefree(&self) -> Result<bool, WordError> {
        let n = self.symbols.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        for i in 0..n {
            if self.rotated(i).find_kpower(2)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Concatenation over the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.symbols.len() + other.symbols.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }
}

/// Does `s[start .. start + period*k)` spell the same length-`period` block
/// `k` times? Uses the shift characterization: equal to its own `period`-shift
/// across the whole range.
fn kpower_at(s: &[Symbol], start: usize, period: usize, k: usize) -> bool {
    let end = start + period * (k - 1);
    (start..end).all(|i| s[i] == s[i + period])
}

/// Slice-level core of [`Word::is_free_extension`]; the search module calls
/// this directly on its frontier buffers.
pub(crate) fn extension_is_free(s: &[Symbol], a: Symbol, constraint: &Constraint) -> bool {
    let n = s.len() + 1;
    let sym = |i: usize| if i == n - 1 { a } else { s[i] };
    match *constraint {
        Constraint::KPower { k } => {
            for period in 1..=n / k {
                // suffix block of length period*k ending at the new symbol
                let mut all = true;
                for j in (n - period * (k - 1))..n {
                    if sym(j) != sym(j - period) {
                        all = false;
                        break;
                    }
                }
                if all {
                    return false;
                }
            }
            true
        }
        Constraint::Overlap => {
            let max_period = n.saturating_sub(1) / 2;
            for period in 1..=max_period {
                let start = n - 1 - 2 * period;
                if (0..=period).all(|i| sym(start + i) == sym(start + i + period)) {
                    return false;
                }
            }
            true
        }
    }
}

pub(crate) fn render_symbol(s: Symbol) -> String {
    if s < 10 {
        s.to_string()
    } else {
        format!("[{s}]")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            if s < 10 {
                write!(f, "{s}")?;
            } else {
                write!(f, "[{s}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{}\" /{})", self, self.alphabet_size)
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses the compact word syntax: digits for symbols 0-9, `[n]` for
    /// larger symbols, and an optional `x<count>` repetition suffix, so
    /// `"01x3"` is `(01)^3`. The alphabet size is inferred as one more than
    /// the largest symbol (at least 1). `"eps"` and `""` are the empty word.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| WordError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if input == "eps" || input.is_empty() {
            return Word::empty(1);
        }
        let (body, reps) = match input.split_once('x') {
            Some((body, count)) => {
                let reps: usize = count
                    .parse()
                    .map_err(|_| parse_err("repetition count after 'x' must be a number"))?;
                (body, reps)
            }
            None => (input, 1),
        };
        let mut symbols = Vec::new();
        let mut chars = body.chars();
        while let Some(c) = chars.next() {
            match c {
                '0'..='9' => symbols.push(c as u8 - b'0'),
                '[' => {
                    let digits: String = chars.by_ref().take_while(|&c| c != ']').collect();
                    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                        return Err(parse_err("expected decimal number inside brackets"));
                    }
                    let value: usize = digits
                        .parse()
                        .map_err(|_| parse_err("bracketed symbol out of range"))?;
                    if value > Symbol::MAX as usize {
                        return Err(parse_err("bracketed symbol out of range"));
                    }
                    symbols.push(value as Symbol);
                }
                _ => return Err(parse_err("unexpected character")),
            }
        }
        if symbols.is_empty() {
            return Err(parse_err("no symbols before repetition suffix"));
        }
        let alphabet_size = symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(1);
        let mut repeated = Vec::with_capacity(symbols.len() * reps);
        for _ in 0..reps {
            repeated.extend_from_slice(&symbols);
        }
        Word::new(repeated, alphabet_size)
    }
}
