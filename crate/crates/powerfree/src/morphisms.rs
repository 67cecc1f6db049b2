//! Morphism application and fixed-point prefixes, in particular the
//! Thue-Morse morphism `0 -> 01, 1 -> 10` and its fixed point `t`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{Symbol, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("no image defined for symbol {symbol}")]
    MissingImage { symbol: usize },
    #[error("morphism is not prolongable at symbol {symbol}")]
    NotProlongable { symbol: usize },
    #[error("fixed point has only {available} symbols, {requested} requested")]
    FixedPointTooShort { available: usize, requested: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("cannot parse morphism from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A symbol-to-word substitution. The source alphabet is the number of
/// images, the target alphabet is declared explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Word>,
    target_alphabet: usize,
}

impl Morphism {
    pub fn new(images: Vec<Word>, target_alphabet: usize) -> Result<Self, MorphismError> {
        for image in &images {
            if let Some(&s) = image
                .symbols()
                .iter()
                .find(|&&s| (s as usize) >= target_alphabet)
            {
                return Err(WordError::SymbolOutOfRange {
                    symbol: s as usize,
                    alphabet: target_alphabet,
                }
                .into());
            }
        }
        Ok(Morphism {
            images,
            target_alphabet,
        })
    }

    /// The Thue-Morse morphism.
    pub fn thue_morse() -> Self {
        Morphism {
            images: vec![
                Word::from_slice(&[0, 1], 2).unwrap(),
                Word::from_slice(&[1, 0], 2).unwrap(),
            ],
            target_alphabet: 2,
        }
    }

    pub fn source_alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_alphabet_size(&self) -> usize {
        self.target_alphabet
    }

    pub fn image(&self, symbol: Symbol) -> Result<&Word, MorphismError> {
        self.images
            .get(symbol as usize)
            .ok_or(MorphismError::MissingImage {
                symbol: symbol as usize,
            })
    }

    /// Image of a word: the concatenation of the letter images in order.
    pub fn apply(&self, word: &Word) -> Result<Word, MorphismError> {
        let mut symbols = Vec::new();
        for &s in word.symbols() {
            symbols.extend_from_slice(self.image(s)?.symbols());
        }
        Ok(Word::new(symbols, self.target_alphabet)?)
    }

    fn apply_symbols(&self, symbols: &[Symbol]) -> Result<Vec<Symbol>, MorphismError> {
        let mut out = Vec::with_capacity(symbols.len() * 2);
        for &s in symbols {
            out.extend_from_slice(self.image(s)?.symbols());
        }
        Ok(out)
    }

    /// First `len` symbols of the fixed point starting at `a`. Requires the
    /// image of `a` to begin with `a` and be longer than one symbol; iterates
    /// the morphism on a buffer until enough symbols exist, so each step must
    /// grow the buffer.
    pub fn fixed_point_prefix(&self, a: Symbol, len: usize) -> Result<Word, MorphismError> {
        let image = self.image(a)?;
        if image.len() < 2 || image.symbols()[0] != a {
            return Err(MorphismError::NotProlongable { symbol: a as usize });
        }
        let mut buf = vec![a];
        while buf.len() < len {
            let next = self.apply_symbols(&buf)?;
            if next.len() <= buf.len() {
                return Err(MorphismError::FixedPointTooShort {
                    available: buf.len(),
                    requested: len,
                });
            }
            buf = next;
        }
        buf.truncate(len);
        Ok(Word::new(buf, self.target_alphabet)?)
    }
}

/// Prefix of the Thue-Morse word `t`.
pub fn thue_morse_prefix(len: usize) -> Word {
    Morphism::thue_morse()
        .fixed_point_prefix(0, len)
        .expect("the Thue-Morse morphism is prolongable at 0")
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, image) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}->{}", crate::words::render_symbol(i as Symbol), image)?;
        }
        Ok(())
    }
}

impl FromStr for Morphism {
    type Err = MorphismError;

    /// Parses the text form `"0->01,1->10"`. Every symbol below the source
    /// alphabet must get exactly one image; the target alphabet is inferred
    /// from the images and the source.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| MorphismError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut pairs: Vec<(usize, Word)> = Vec::new();
        for rule in input.split(',') {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| parse_err("each rule must look like 0->01"))?;
            let source: Word = lhs.trim().parse().map_err(MorphismError::Word)?;
            if source.len() != 1 {
                return Err(parse_err("left side of a rule must be a single symbol"));
            }
            let image: Word = rhs.trim().parse().map_err(MorphismError::Word)?;
            pairs.push((source.symbols()[0] as usize, image));
        }
        let source_alphabet = pairs.iter().map(|(s, _)| s + 1).max().unwrap_or(0);
        let mut images: Vec<Option<Word>> = vec![None; source_alphabet];
        for (s, image) in pairs {
            if images[s].replace(image).is_some() {
                return Err(parse_err("duplicate rule for a symbol"));
            }
        }
        let images: Vec<Word> = images
            .into_iter()
            .enumerate()
            .map(|(s, image)| image.ok_or(MorphismError::MissingImage { symbol: s }))
            .collect::<Result<_, _>>()?;
        let target_alphabet = images
            .iter()
            .flat_map(|w| w.symbols())
            .map(|&s| s as usize + 1)
            .max()
            .unwrap_or(1)
            .max(source_alphabet);
        Morphism::new(images, target_alphabet)
    }
}
