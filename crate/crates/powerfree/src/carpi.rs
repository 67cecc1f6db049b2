//! The 25-letter code Φ into binary words, its split form, bounded
//! inversion, and the functional-power automaton showing Φ-preimages of a
//! regular language form a regular language.
//!
//! Each letter of `Σ_25` encodes a pair of short binary words drawn from
//! `H = {ε, 0, 1, 00, 11}`; the code of a letter with halves `(h_l, h_r)`
//! is `5 * index(h_l) + index(h_r)`. The map Φ unfolds recursively through
//! the Thue-Morse morphism `μ`:
//!
//! ```text
//! Φ(ε) = ε        Φ(a w) = h_l(a) · μ(Φ(w)) · h_r(a)
//! ```
//!
//! so images grow like `2^|w|`. For a binary DFA `D` with state set `Q`,
//! the preimage language `{w : Φ(w) ∈ L(D)}` is accepted by an automaton
//! whose states are quadruples `[κ, λ, ζ0, ζ1]` of endofunctions on `Q`,
//! built here reachable-only with interned functions.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::automata::{Dfa, DfaError};
use crate::words::{Symbol, Word, WordError};

/// The five short binary words a letter half can take, in index order.
pub const H_WORDS: [&[Symbol]; 5] = [&[], &[0], &[1], &[0, 0], &[1, 1]];

/// Number of letters in the code alphabet.
pub const SIGMA: usize = 25;

#[derive(Debug, Error)]
pub enum CarpiError {
    #[error("letter code {code} out of range 0..25")]
    CodeOutOfRange { code: usize },
    #[error("half index {index} out of range 0..5")]
    HalfOutOfRange { index: usize },
    #[error("expected a binary automaton, alphabet is {alphabet}")]
    NotBinary { alphabet: usize },
    #[error("expected a binary word, got symbol {symbol}")]
    NotBinaryWord { symbol: usize },
    #[error("state budget {budget} exceeded while building the preimage automaton")]
    StateBudgetExceeded { budget: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Dfa(#[from] DfaError),
}

/// A letter of `Σ_25`: a pair of `H` indices packed as `5 * left + right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CarpiLetter(u8);

impl CarpiLetter {
    pub fn new(code: u8) -> Result<Self, CarpiError> {
        if (code as usize) >= SIGMA {
            return Err(CarpiError::CodeOutOfRange { code: code as usize });
        }
        Ok(CarpiLetter(code))
    }

    /// The unique letter with the given halves.
    pub fn from_halves(left: usize, right: usize) -> Result<Self, CarpiError> {
        if left >= H_WORDS.len() {
            return Err(CarpiError::HalfOutOfRange { index: left });
        }
        if right >= H_WORDS.len() {
            return Err(CarpiError::HalfOutOfRange { index: right });
        }
        Ok(CarpiLetter((5 * left + right) as u8))
    }

    pub fn code(&self) -> u8 {
        self.0
    }

    pub fn left_index(&self) -> usize {
        self.0 as usize / 5
    }

    pub fn right_index(&self) -> usize {
        self.0 as usize % 5
    }

    pub fn left_half(&self) -> &'static [Symbol] {
        H_WORDS[self.left_index()]
    }

    pub fn right_half(&self) -> &'static [Symbol] {
        H_WORDS[self.right_index()]
    }

    /// The two binary halves as words.
    pub fn decompose(&self) -> (Word, Word) {
        (
            Word::from_slice(self.left_half(), 2).expect("binary"),
            Word::from_slice(self.right_half(), 2).expect("binary"),
        )
    }
}

fn code_letters(word: &Word) -> Result<Vec<CarpiLetter>, CarpiError> {
    word.symbols()
        .iter()
        .map(|&s| CarpiLetter::new(s))
        .collect()
}

/// In-place Thue-Morse image: each bit becomes the pair (bit, 1-bit).
fn mu_symbols(symbols: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(symbols.len() * 2);
    for &b in symbols {
        out.push(b);
        out.push(1 - b);
    }
    out
}

/// μ-preimage of a binary string, if it is a μ-image.
fn mu_decode(symbols: &[Symbol]) -> Option<Vec<Symbol>> {
    if !symbols.len().is_multiple_of(2) {
        return None;
    }
    let mut out = Vec::with_capacity(symbols.len() / 2);
    for pair in symbols.chunks_exact(2) {
        match pair {
            [0, 1] => out.push(0),
            [1, 0] => out.push(1),
            _ => return None,
        }
    }
    Some(out)
}

/// The image Φ(w) of a `Σ_25` word, folded from the right.
pub fn phi(word: &Word) -> Result<Word, CarpiError> {
    let letters = code_letters(word)?;
    let mut image: Vec<Symbol> = Vec::new();
    for letter in letters.iter().rev() {
        let mut next = Vec::with_capacity(
            letter.left_half().len() + letter.right_half().len() + 2 * image.len(),
        );
        next.extend_from_slice(letter.left_half());
        next.extend(mu_symbols(&image));
        next.extend_from_slice(letter.right_half());
        image = next;
    }
    Ok(Word::new(image, 2)?)
}

/// The two halves `(Φ1(w), Φ2(w))` whose concatenation is Φ(w): the left
/// half collects the `μ^j`-images of the left letter halves, the right half
/// those of the right letter halves in reverse.
pub fn phi_split(word: &Word) -> Result<(Word, Word), CarpiError> {
    let letters = code_letters(word)?;
    let mut left: Vec<Symbol> = Vec::new();
    let mut right: Vec<Symbol> = Vec::new();
    for (j, letter) in letters.iter().enumerate() {
        let mut l = letter.left_half().to_vec();
        let mut r = letter.right_half().to_vec();
        for _ in 0..j {
            l = mu_symbols(&l);
            r = mu_symbols(&r);
        }
        left.extend_from_slice(&l);
        let mut prefixed = r;
        prefixed.extend_from_slice(&right);
        right = prefixed;
    }
    Ok((Word::new(left, 2)?, Word::new(right, 2)?))
}

/// Expected image length from the letter halves alone: letter `j` (0-based
/// from the left) contributes `2^j` copies of its halves.
pub fn phi_len(word: &Word) -> Result<usize, CarpiError> {
    let letters = code_letters(word)?;
    Ok(letters
        .iter()
        .enumerate()
        .map(|(j, letter)| (letter.left_half().len() + letter.right_half().len()) << j)
        .sum())
}

/// All `Σ_25` words of length at most `max_len` whose image is `x`,
/// found by peeling one letter at a time: `x = h_l · μ(y) · h_r` over all
/// half pairs, recursing on `y`. A bound is required because the letter
/// with two empty halves maps to the empty word at any depth.
pub fn invert_phi(x: &Word, max_len: usize) -> Result<BTreeSet<Word>, CarpiError> {
    if let Some(&s) = x.symbols().iter().find(|&&s| s > 1) {
        return Err(CarpiError::NotBinaryWord { symbol: s as usize });
    }
    let mut preimages = BTreeSet::new();
    for symbols in invert_symbols(x.symbols(), max_len) {
        preimages.insert(Word::new(symbols, SIGMA)?);
    }
    Ok(preimages)
}

fn invert_symbols(x: &[Symbol], budget: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    if x.is_empty() {
        out.push(Vec::new());
    }
    if budget == 0 {
        return out;
    }
    for (left, hl) in H_WORDS.iter().enumerate() {
        for (right, hr) in H_WORDS.iter().enumerate() {
            let hl: &[Symbol] = hl;
            let hr: &[Symbol] = hr;
            if x.len() < hl.len() + hr.len() {
                continue;
            }
            if !x.starts_with(hl) || !x.ends_with(hr) {
                continue;
            }
            let middle = &x[hl.len()..x.len() - hr.len()];
            let Some(y) = mu_decode(middle) else {
                continue;
            };
            let letter = (5 * left + right) as Symbol;
            for suffix in invert_symbols(&y, budget - 1) {
                let mut word = Vec::with_capacity(suffix.len() + 1);
                word.push(letter);
                word.extend_from_slice(&suffix);
                out.push(word);
            }
        }
    }
    out
}

/// A total function on the state set of a DFA, tabulated by state id.
pub type StateFn = Vec<usize>;

/// The function of reading `x` in `dfa`, leftmost symbol applied first.
/// Reading nothing is the identity; `eta(x·y) = eta(y) ∘ eta(x)`.
pub fn eta_compose(dfa: &Dfa, x: &Word) -> Result<StateFn, CarpiError> {
    let mut f: StateFn = (0..dfa.state_count()).collect();
    for &symbol in x.symbols() {
        if (symbol as usize) >= dfa.alphabet_size() {
            return Err(WordError::SymbolOutOfRange {
                symbol: symbol as usize,
                alphabet: dfa.alphabet_size(),
            }
            .into());
        }
        for slot in f.iter_mut() {
            *slot = dfa.step_unchecked(*slot, symbol);
        }
    }
    Ok(f)
}

/// The preimage automaton of a binary DFA, together with the endofunction
/// quadruple behind each of its states.
#[derive(Debug, Clone)]
pub struct PsiAutomaton {
    pub dfa: Dfa,
    tuples: Vec<[usize; 4]>,
    functions: Vec<StateFn>,
}

impl PsiAutomaton {
    /// The quadruple `[κ, λ, ζ0, ζ1]` reached at `state`.
    pub fn tuple(&self, state: usize) -> [&StateFn; 4] {
        let [k, l, z0, z1] = self.tuples[state];
        [
            &self.functions[k],
            &self.functions[l],
            &self.functions[z0],
            &self.functions[z1],
        ]
    }

    pub fn state_count(&self) -> usize {
        self.tuples.len()
    }
}

const DEFAULT_STATE_BUDGET: usize = 1_000_000;

pub fn build_psi_dfa(dfa: &Dfa) -> Result<PsiAutomaton, CarpiError> {
    build_psi_dfa_with_budget(dfa, DEFAULT_STATE_BUDGET)
}

/// Builds the automaton accepting `{w : Φ(w) ∈ L(dfa)}` by discovering
/// reachable endofunction quadruples from `[ι, ι, η0, η1]`. On a letter
/// with halves `(h_l, h_r)` the quadruple steps to
/// `[ζ_{h_l} ∘ κ, λ ∘ ζ_{h_r}, ζ1 ∘ ζ0, ζ0 ∘ ζ1]`, and a quadruple accepts
/// when `λ(κ(q0))` is final in the base automaton. At most `|Q|^(4|Q|)`
/// quadruples exist; `budget` caps the discovery loop.
pub fn build_psi_dfa_with_budget(dfa: &Dfa, budget: usize) -> Result<PsiAutomaton, CarpiError> {
    if dfa.alphabet_size() != 2 {
        return Err(CarpiError::NotBinary {
            alphabet: dfa.alphabet_size(),
        });
    }
    let states = dfa.state_count();

    let mut functions: Vec<StateFn> = Vec::new();
    let mut function_ids: HashMap<StateFn, usize> = HashMap::new();
    let mut intern = |f: StateFn, functions: &mut Vec<StateFn>| -> usize {
        if let Some(&id) = function_ids.get(&f) {
            return id;
        }
        let id = functions.len();
        function_ids.insert(f.clone(), id);
        functions.push(f);
        id
    };

    let identity: StateFn = (0..states).collect();
    let eta0: StateFn = (0..states).map(|q| dfa.step_unchecked(q, 0)).collect();
    let eta1: StateFn = (0..states).map(|q| dfa.step_unchecked(q, 1)).collect();
    let identity_id = intern(identity, &mut functions);
    let eta0_id = intern(eta0, &mut functions);
    let eta1_id = intern(eta1, &mut functions);

    let start = [identity_id, identity_id, eta0_id, eta1_id];
    let mut tuple_ids: HashMap<[usize; 4], usize> = HashMap::new();
    let mut tuples: Vec<[usize; 4]> = vec![start];
    tuple_ids.insert(start, 0);
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);

    // g ∘ f: apply f first
    let compose = |g: &StateFn, f: &StateFn| -> StateFn { f.iter().map(|&q| g[q]).collect() };
    // ζ over a half word, leftmost symbol applied first
    let zeta_half = |half: &[Symbol], z0: &StateFn, z1: &StateFn| -> StateFn {
        let mut f: StateFn = (0..states).collect();
        for &bit in half {
            let step = if bit == 0 { z0 } else { z1 };
            f = compose(step, &f);
        }
        f
    };

    while let Some(id) = queue.pop_front() {
        let [kappa_id, lambda_id, z0_id, z1_id] = tuples[id];
        let mut row = Vec::with_capacity(SIGMA);
        for code in 0..SIGMA {
            let letter = CarpiLetter::new(code as u8).expect("in range");
            let next = {
                let kappa = &functions[kappa_id];
                let lambda = &functions[lambda_id];
                let z0 = &functions[z0_id];
                let z1 = &functions[z1_id];
                [
                    compose(&zeta_half(letter.left_half(), z0, z1), kappa),
                    compose(lambda, &zeta_half(letter.right_half(), z0, z1)),
                    compose(z1, z0),
                    compose(z0, z1),
                ]
            };
            let next: [usize; 4] = {
                let [a, b, c, d] = next;
                [
                    intern(a, &mut functions),
                    intern(b, &mut functions),
                    intern(c, &mut functions),
                    intern(d, &mut functions),
                ]
            };
            let target = match tuple_ids.get(&next) {
                Some(&existing) => existing,
                None => {
                    let fresh = tuples.len();
                    if fresh >= budget {
                        return Err(CarpiError::StateBudgetExceeded { budget });
                    }
                    tuple_ids.insert(next, fresh);
                    tuples.push(next);
                    queue.push_back(fresh);
                    fresh
                }
            };
            row.push(target);
        }
        transitions.push(row);
    }

    let finals: BTreeSet<usize> = tuples
        .iter()
        .enumerate()
        .filter(|(_, [kappa, lambda, _, _])| {
            let reached = functions[*lambda][functions[*kappa][dfa.initial()]];
            dfa.is_final(reached)
        })
        .map(|(id, _)| id)
        .collect();
    let psi_dfa = Dfa::new(SIGMA, transitions, 0, finals, None)?;
    Ok(PsiAutomaton {
        dfa: psi_dfa,
        tuples,
        functions,
    })
}

/// A word found by the preimage-automaton pipeline: the binary image and
/// the code word mapping to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineWitness {
    pub image: Word,
    pub preimage: Word,
}

/// Searches the preimage automaton of `dfa` level by level for a shortest
/// (by code-word length) member whose image is overlap-free, and returns
/// that image. Subtrees whose image prefix or suffix already contains an
/// overlap are pruned; both persist under extension, so the pruning is
/// exact. The direct search oracle owns minimality in image length; this
/// pipeline minimizes the code-word length instead.
pub fn shortest_overlap_free_via_psi(
    dfa: &Dfa,
    max_len: usize,
) -> Result<Option<PipelineWitness>, CarpiError> {
    let psi = build_psi_dfa(dfa)?;

    struct Node {
        word: Vec<Symbol>,
        state: usize,
        // Φ1 of the word so far (an image prefix) and Φ2 (an image suffix)
        left: Vec<Symbol>,
        right: Vec<Symbol>,
    }

    let mut frontier = vec![Node {
        word: Vec::new(),
        state: psi.dfa.initial(),
        left: Vec::new(),
        right: Vec::new(),
    }];
    for level in 0..=max_len {
        for node in &frontier {
            if psi.dfa.is_final(node.state) {
                let mut image = node.left.clone();
                image.extend_from_slice(&node.right);
                let image = Word::new(image, 2)?;
                if image.find_overlap().is_none() {
                    return Ok(Some(PipelineWitness {
                        image,
                        preimage: Word::new(node.word.clone(), SIGMA)?,
                    }));
                }
            }
        }
        if level == max_len {
            break;
        }
        let mut next = Vec::new();
        for node in &frontier {
            for code in 0..SIGMA as Symbol {
                let letter = CarpiLetter::new(code).expect("in range");
                let mut l = letter.left_half().to_vec();
                let mut r = letter.right_half().to_vec();
                for _ in 0..level {
                    l = mu_symbols(&l);
                    r = mu_symbols(&r);
                }
                let mut left = node.left.clone();
                left.extend_from_slice(&l);
                let mut right = r;
                right.extend_from_slice(&node.right);
                let left_word = Word::new(left.clone(), 2)?;
                let right_word = Word::new(right.clone(), 2)?;
                if left_word.find_overlap().is_some() || right_word.find_overlap().is_some() {
                    continue;
                }
                let mut word = node.word.clone();
                word.push(code);
                next.push(Node {
                    state: psi.dfa.step_unchecked(node.state, code),
                    word,
                    left,
                    right,
                });
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Constraint;
    use std::collections::BTreeMap;

    fn w(s: &str) -> Word {
        s.parse().expect("test word")
    }

    fn sigma_word(codes: &[Symbol]) -> Word {
        Word::from_slice(codes, SIGMA).unwrap()
    }

    #[test]
    fn letter_codes_round_trip() {
        let origin = CarpiLetter::from_halves(0, 0).unwrap();
        assert_eq!(origin.code(), 0);
        assert_eq!(
            origin.decompose(),
            (Word::empty(2).unwrap(), Word::empty(2).unwrap())
        );
        let seven = CarpiLetter::new(7).unwrap();
        assert_eq!(
            seven.decompose(),
            (
                w("0").with_alphabet(2).unwrap(),
                w("1").with_alphabet(2).unwrap()
            )
        );
        let top = CarpiLetter::new(24).unwrap();
        assert_eq!(
            top.decompose(),
            (w("11").with_alphabet(2).unwrap(), w("11").with_alphabet(2).unwrap())
        );
        assert!(CarpiLetter::new(25).is_err());
        assert!(CarpiLetter::from_halves(5, 0).is_err());
        for code in 0..25u8 {
            let letter = CarpiLetter::new(code).unwrap();
            assert_eq!(
                CarpiLetter::from_halves(letter.left_index(), letter.right_index()).unwrap(),
                letter
            );
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi(&Word::empty(SIGMA).unwrap()).unwrap(),
            Word::empty(2).unwrap()
        );
        assert_eq!(
            phi(&sigma_word(&[7])).unwrap(),
            w("01").with_alphabet(2).unwrap()
        );
        assert_eq!(phi(&sigma_word(&[7, 7])).unwrap(), w("001101"));
    }

    #[test]
    fn phi_split_examples() {
        let (left, right) = phi_split(&sigma_word(&[7, 7])).unwrap();
        assert_eq!(left, w("001").with_alphabet(2).unwrap());
        assert_eq!(right, w("101"));
        let (left, right) = phi_split(&Word::empty(SIGMA).unwrap()).unwrap();
        assert!(left.is_empty() && right.is_empty());
        let (left, right) = phi_split(&sigma_word(&[0])).unwrap();
        assert!(left.is_empty() && right.is_empty());
    }

    #[test]
    fn split_concatenation_is_phi_exhaustively() {
        // every code word of length up to 3 over a 5-letter sub-alphabet
        let letters: [Symbol; 5] = [0, 1, 7, 13, 24];
        let mut stack = vec![Vec::new()];
        while let Some(word) = stack.pop() {
            let word_w = sigma_word(&word);
            let (left, right) = phi_split(&word_w).unwrap();
            assert_eq!(left.concat(&right), phi(&word_w).unwrap());
            assert_eq!(phi_len(&word_w).unwrap(), phi(&word_w).unwrap().len());
            if word.len() < 3 {
                for &l in &letters {
                    let mut next = word.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn invert_phi_examples() {
        let empty = Word::empty(2).unwrap();
        let preimages = invert_phi(&empty, 2).unwrap();
        let expected: BTreeSet<Word> = [vec![], vec![0], vec![0, 0]]
            .into_iter()
            .map(|v| sigma_word(&v))
            .collect();
        assert_eq!(preimages, expected);

        let preimages = invert_phi(&w("01").with_alphabet(2).unwrap(), 2).unwrap();
        let expected: BTreeSet<Word> = [vec![7], vec![7, 0], vec![0, 1], vec![0, 5]]
            .into_iter()
            .map(|v| sigma_word(&v))
            .collect();
        assert_eq!(preimages, expected);

        let preimages = invert_phi(&w("0").with_alphabet(2).unwrap(), 1).unwrap();
        let expected: BTreeSet<Word> = [vec![1], vec![5]]
            .into_iter()
            .map(|v| sigma_word(&v))
            .collect();
        assert_eq!(preimages, expected);

        assert!(invert_phi(&w("012"), 2).is_err());
    }

    #[test]
    fn inversion_is_sound_and_complete_against_enumeration() {
        // bucket the images of every code word of length <= 2
        let mut by_image: BTreeMap<Vec<Symbol>, BTreeSet<Word>> = BTreeMap::new();
        let mut enumerate = |word: Vec<Symbol>| {
            let image = phi(&sigma_word(&word)).unwrap();
            by_image
                .entry(image.symbols().to_vec())
                .or_default()
                .insert(sigma_word(&word));
        };
        enumerate(vec![]);
        for a in 0..SIGMA as Symbol {
            enumerate(vec![a]);
            for b in 0..SIGMA as Symbol {
                enumerate(vec![a, b]);
            }
        }
        // compare against invert_phi for every binary x up to length 6
        for len in 0..=6usize {
            for bits in 0..(1u32 << len) {
                let symbols: Vec<Symbol> = (0..len)
                    .map(|i| ((bits >> (len - 1 - i)) & 1) as Symbol)
                    .collect();
                let x = Word::new(symbols.clone(), 2).unwrap();
                let got = invert_phi(&x, 2).unwrap();
                let expected = by_image.get(&symbols).cloned().unwrap_or_default();
                assert_eq!(got, expected, "x={x}");
            }
        }
        // soundness at a deeper bound
        for preimage in invert_phi(&w("0110").with_alphabet(2).unwrap(), 4).unwrap() {
            assert_eq!(phi(&preimage).unwrap(), w("0110"));
        }
    }

    #[test]
    fn eta_compose_basics() {
        let dfa = Dfa::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            BTreeSet::from([1]),
            None,
        )
        .unwrap();
        assert_eq!(
            eta_compose(&dfa, &Word::empty(2).unwrap()).unwrap(),
            vec![0, 1]
        );
        // leftmost symbol applies first
        let via_word = eta_compose(&dfa, &w("01").with_alphabet(2).unwrap()).unwrap();
        let eta0 = eta_compose(&dfa, &w("0").with_alphabet(2).unwrap()).unwrap();
        let eta1 = eta_compose(&dfa, &w("1").with_alphabet(2).unwrap()).unwrap();
        let composed: Vec<usize> = (0..2).map(|q| eta1[eta0[q]]).collect();
        assert_eq!(via_word, composed);
        // matches step-by-step simulation from every state
        for (q, &expected) in via_word.iter().enumerate() {
            let mut state = q;
            for &b in w("01").symbols() {
                state = dfa.step(state, b).unwrap();
            }
            assert_eq!(expected, state);
        }
        assert!(eta_compose(&dfa, &w("012")).is_err());
    }

    #[test]
    fn eta_composition_law() {
        let dfa = Dfa::new(
            2,
            vec![vec![1, 2], vec![2, 0], vec![0, 0]],
            0,
            BTreeSet::from([2]),
            None,
        )
        .unwrap();
        for x_bits in 0..16u32 {
            for y_bits in 0..16u32 {
                for (x_len, y_len) in [(2usize, 3usize), (3, 2), (4, 4), (0, 3)] {
                    let x: Vec<Symbol> =
                        (0..x_len).map(|i| ((x_bits >> i) & 1) as Symbol).collect();
                    let y: Vec<Symbol> =
                        (0..y_len).map(|i| ((y_bits >> i) & 1) as Symbol).collect();
                    let xw = Word::new(x.clone(), 2).unwrap();
                    let yw = Word::new(y.clone(), 2).unwrap();
                    let xy = xw.concat(&yw);
                    let eta_x = eta_compose(&dfa, &xw).unwrap();
                    let eta_y = eta_compose(&dfa, &yw).unwrap();
                    let composed: Vec<usize> = (0..3).map(|q| eta_y[eta_x[q]]).collect();
                    assert_eq!(eta_compose(&dfa, &xy).unwrap(), composed);
                }
            }
        }
    }

    #[test]
    fn one_state_preimage_automata() {
        let all = build_psi_dfa(&Dfa::universal(2, true)).unwrap();
        assert_eq!(all.state_count(), 1);
        assert!(all.dfa.accepts(&sigma_word(&[3, 14, 24])).unwrap());
        assert!(all.dfa.accepts(&Word::empty(SIGMA).unwrap()).unwrap());

        let none = build_psi_dfa(&Dfa::universal(2, false)).unwrap();
        assert_eq!(none.state_count(), 1);
        assert_eq!(none.dfa.shortest_accepted(), None);
    }

    #[test]
    fn two_state_preimage_stays_within_bound() {
        let dfa = Dfa::new(
            2,
            vec![vec![0, 1], vec![1, 0]],
            0,
            BTreeSet::from([1]),
            None,
        )
        .unwrap();
        let psi = build_psi_dfa(&dfa).unwrap();
        assert!(psi.state_count() <= 256);
        assert_eq!(psi.dfa.alphabet_size(), SIGMA);
    }

    #[test]
    fn budget_is_enforced() {
        let dfa = Dfa::new(
            2,
            vec![vec![0, 1], vec![1, 0]],
            0,
            BTreeSet::from([1]),
            None,
        )
        .unwrap();
        assert!(matches!(
            build_psi_dfa_with_budget(&dfa, 2),
            Err(CarpiError::StateBudgetExceeded { budget: 2 })
        ));
    }

    #[test]
    fn non_binary_inputs_are_rejected() {
        assert!(matches!(
            build_psi_dfa(&Dfa::universal(3, true)),
            Err(CarpiError::NotBinary { alphabet: 3 })
        ));
    }

    #[test]
    fn preimage_automaton_simulates_the_base() {
        // exhaustive over code words of length <= 2 for a 3-state automaton
        let dfa = Dfa::new(
            2,
            vec![vec![1, 0], vec![2, 1], vec![2, 2]],
            0,
            BTreeSet::from([2]),
            None,
        )
        .unwrap();
        let psi = build_psi_dfa(&dfa).unwrap();
        let check = |codes: &[Symbol]| {
            let word = sigma_word(codes);
            let image = phi(&word).unwrap();
            assert_eq!(
                psi.dfa.accepts(&word).unwrap(),
                dfa.accepts(&image).unwrap(),
                "codes={codes:?}"
            );
        };
        check(&[]);
        for a in 0..SIGMA as Symbol {
            check(&[a]);
            for b in 0..SIGMA as Symbol {
                check(&[a, b]);
            }
        }
    }

    #[test]
    fn reached_tuples_follow_the_split_form() {
        let dfa = Dfa::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            BTreeSet::from([0]),
            None,
        )
        .unwrap();
        let psi = build_psi_dfa(&dfa).unwrap();
        let mu = crate::morphisms::Morphism::thue_morse();
        for codes in [vec![], vec![4], vec![7, 11], vec![24, 0, 13]] {
            let word = sigma_word(&codes);
            let state = psi.dfa.run(&word).unwrap();
            let [kappa, lambda, z0, z1] = psi.tuple(state);
            let (left, right) = phi_split(&word).unwrap();
            assert_eq!(kappa, &eta_compose(&dfa, &left).unwrap());
            assert_eq!(lambda, &eta_compose(&dfa, &right).unwrap());
            let mut mu_zero = w("0").with_alphabet(2).unwrap();
            let mut mu_one = w("1").with_alphabet(2).unwrap();
            for _ in 0..codes.len() {
                mu_zero = mu.apply(&mu_zero).unwrap();
                mu_one = mu.apply(&mu_one).unwrap();
            }
            assert_eq!(z0, &eta_compose(&dfa, &mu_zero).unwrap());
            assert_eq!(z1, &eta_compose(&dfa, &mu_one).unwrap());
        }
    }

    #[test]
    fn pipeline_finds_overlap_free_images() {
        let target = Dfa::exactly(&w("01").with_alphabet(2).unwrap());
        let witness = shortest_overlap_free_via_psi(&target, 3).unwrap().unwrap();
        assert_eq!(witness.image, w("01").with_alphabet(2).unwrap());
        assert_eq!(witness.preimage, sigma_word(&[7]));

        let cube_only = Dfa::exactly(&w("000").with_alphabet(2).unwrap());
        assert_eq!(shortest_overlap_free_via_psi(&cube_only, 3).unwrap(), None);

        let everything = Dfa::universal(2, true);
        let witness = shortest_overlap_free_via_psi(&everything, 2)
            .unwrap()
            .unwrap();
        assert!(witness.image.is_empty());
        assert!(witness.preimage.is_empty());
    }

    #[test]
    fn pipeline_agrees_with_the_direct_oracle_on_existence() {
        let samples = [
            Dfa::exactly(&w("0110")),
            Dfa::exactly(&w("000").with_alphabet(2).unwrap()),
            Dfa::exactly(&w("010101")),
            Dfa::universal(2, true),
        ];
        for dfa in &samples {
            let direct =
                crate::search::shortest_free_accepted(dfa, &Constraint::Overlap, 8).unwrap();
            let pipeline = shortest_overlap_free_via_psi(dfa, 4).unwrap();
            match (&pipeline, direct.word()) {
                (Some(witness), Some(direct_word)) => {
                    assert!(witness.image.find_overlap().is_none());
                    assert!(dfa.accepts(&witness.image).unwrap());
                    assert!(direct_word.len() <= witness.image.len());
                }
                (None, None) => {}
                other => panic!("pipeline and direct oracle disagree: {other:?}"),
            }
        }
    }
}
