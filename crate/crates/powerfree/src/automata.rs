//! Total-transition deterministic automata: acceptance, shortest accepted
//! word, product intersection, JSON and Graphviz serialization, and the
//! generator for the recursive chain family `D_i` built around the
//! k-power-free partial conjugate `cyc_0(w_i)` as its designated witness.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{render_symbol, Symbol, Word, WordError};

#[derive(Debug, Error)]
pub enum DfaError {
    #[error("automaton needs at least one state")]
    NoStates,
    #[error("transition table row {state} has {got} entries, alphabet is {alphabet}")]
    BadRow {
        state: usize,
        got: usize,
        alphabet: usize,
    },
    #[error("transition target {target} out of range for {states} states")]
    TargetOutOfRange { target: usize, states: usize },
    #[error("state {state} out of range for {states} states")]
    StateOutOfRange { state: usize, states: usize },
    #[error("dead state must not be final")]
    DeadStateFinal,
    #[error("dead state {state} has a transition leaving it")]
    DeadStateLeaks { state: usize },
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("symbol {symbol} out of range for alphabet {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },
    #[error("declared state count {declared} does not match table length {actual}")]
    StateCountMismatch { declared: usize, actual: usize },
    #[error("malformed automaton document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("family construction inconsistency: {0}")]
    Inconsistent(String),
    #[error("base word {word} is not a simple {k}-power")]
    NotSimplePower { word: String, k: usize },
    #[error("family index must be at least 1")]
    IndexTooSmall,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A deterministic finite automaton with a total transition table and an
/// optional designated dead state (a non-accepting sink).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet_size: usize,
    transitions: Vec<Vec<usize>>,
    initial: usize,
    finals: BTreeSet<usize>,
    dead: Option<usize>,
}

impl Dfa {
    pub fn new(
        alphabet_size: usize,
        transitions: Vec<Vec<usize>>,
        initial: usize,
        finals: BTreeSet<usize>,
        dead: Option<usize>,
    ) -> Result<Self, DfaError> {
        let states = transitions.len();
        if states == 0 {
            return Err(DfaError::NoStates);
        }
        for (state, row) in transitions.iter().enumerate() {
            if row.len() != alphabet_size {
                return Err(DfaError::BadRow {
                    state,
                    got: row.len(),
                    alphabet: alphabet_size,
                });
            }
            for &target in row {
                if target >= states {
                    return Err(DfaError::TargetOutOfRange { target, states });
                }
            }
        }
        if initial >= states {
            return Err(DfaError::StateOutOfRange {
                state: initial,
                states,
            });
        }
        if let Some(&worst) = finals.iter().max() {
            if worst >= states {
                return Err(DfaError::StateOutOfRange {
                    state: worst,
                    states,
                });
            }
        }
        if let Some(dead) = dead {
            if dead >= states {
                return Err(DfaError::StateOutOfRange {
                    state: dead,
                    states,
                });
            }
            if finals.contains(&dead) {
                return Err(DfaError::DeadStateFinal);
            }
            if transitions[dead].iter().any(|&t| t != dead) {
                return Err(DfaError::DeadStateLeaks { state: dead });
            }
        }
        Ok(Dfa {
            alphabet_size,
            transitions,
            initial,
            finals,
            dead,
        })
    }

    /// One-state automaton accepting every word (or none, when `accepting`
    /// is false) over the given alphabet.
    pub fn universal(alphabet_size: usize, accepting: bool) -> Self {
        let finals = if accepting {
            BTreeSet::from([0])
        } else {
            BTreeSet::new()
        };
        Dfa {
            alphabet_size,
            transitions: vec![vec![0; alphabet_size]],
            initial: 0,
            finals,
            dead: None,
        }
    }

    /// Chain automaton accepting exactly the given word. State `i` means
    /// "matched i symbols"; everything else falls into a dead state.
    pub fn exactly(word: &Word) -> Self {
        let n = word.len();
        let dead = n + 1;
        let alphabet = word.alphabet_size();
        let mut transitions = vec![vec![dead; alphabet]; n + 2];
        for (i, &s) in word.symbols().iter().enumerate() {
            transitions[i][s as usize] = i + 1;
        }
        Dfa {
            alphabet_size: alphabet,
            transitions,
            initial: 0,
            finals: BTreeSet::from([n]),
            dead: Some(dead),
        }
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn dead(&self) -> Option<usize> {
        self.dead
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    pub fn step(&self, state: usize, symbol: Symbol) -> Result<usize, DfaError> {
        if (symbol as usize) >= self.alphabet_size {
            return Err(DfaError::SymbolOutOfRange {
                symbol: symbol as usize,
                alphabet: self.alphabet_size,
            });
        }
        Ok(self.transitions[state][symbol as usize])
    }

    pub(crate) fn step_unchecked(&self, state: usize, symbol: Symbol) -> usize {
        self.transitions[state][symbol as usize]
    }

    /// State reached from the initial state after reading `word`.
    pub fn run(&self, word: &Word) -> Result<usize, DfaError> {
        let mut state = self.initial;
        for &s in word.symbols() {
            state = self.step(state, s)?;
        }
        Ok(state)
    }

    pub fn accepts(&self, word: &Word) -> Result<bool, DfaError> {
        Ok(self.finals.contains(&self.run(word)?))
    }

    /// Minimum-length accepted word, lexicographically least among the
    /// minima, or `None` for the empty language. Any returned word is
    /// shorter than the state count.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let states = self.state_count();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; states];
        let mut seen = vec![false; states];
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(state) = queue.pop_front() {
            if self.finals.contains(&state) {
                let mut symbols = Vec::new();
                let mut cursor = state;
                while let Some((prev, sym)) = parent[cursor] {
                    symbols.push(sym);
                    cursor = prev;
                }
                symbols.reverse();
                return Some(Word::new(symbols, self.alphabet_size).expect("valid symbols"));
            }
            for symbol in 0..self.alphabet_size {
                let target = self.transitions[state][symbol];
                if !seen[target] && Some(target) != self.dead {
                    seen[target] = true;
                    parent[target] = Some((state, symbol as Symbol));
                    queue.push_back(target);
                }
            }
        }
        None
    }

    /// Product automaton for the intersection, restricted to reachable
    /// pairs. Pairs containing either operand's dead state collapse into a
    /// single dead state of the product.
    pub fn product_intersection(&self, other: &Dfa) -> Result<Dfa, DfaError> {
        if self.alphabet_size != other.alphabet_size {
            return Err(DfaError::AlphabetMismatch {
                left: self.alphabet_size,
                right: other.alphabet_size,
            });
        }
        let is_dead_pair =
            |a: usize, b: usize| Some(a) == self.dead || Some(b) == other.dead;
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut dead_id: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();

        let start = (self.initial, other.initial);
        let initial = if is_dead_pair(start.0, start.1) {
            dead_id = Some(0);
            rows.push(Vec::new());
            0
        } else {
            ids.insert(start, 0);
            order.push(start);
            rows.push(Vec::new());
            queue.push_back(start);
            0
        };

        while let Some(pair) = queue.pop_front() {
            let id = ids[&pair];
            let mut row = Vec::with_capacity(self.alphabet_size);
            for symbol in 0..self.alphabet_size {
                let next = (
                    self.transitions[pair.0][symbol],
                    other.transitions[pair.1][symbol],
                );
                let target = if is_dead_pair(next.0, next.1) {
                    *dead_id.get_or_insert_with(|| {
                        rows.push(Vec::new());
                        rows.len() - 1
                    })
                } else {
                    *ids.entry(next).or_insert_with(|| {
                        order.push(next);
                        rows.push(Vec::new());
                        queue.push_back(next);
                        rows.len() - 1
                    })
                };
                row.push(target);
            }
            rows[id] = row;
        }
        if let Some(dead) = dead_id {
            rows[dead] = vec![dead; self.alphabet_size];
        }
        let finals: BTreeSet<usize> = order
            .iter()
            .filter(|(a, b)| self.finals.contains(a) && other.finals.contains(b))
            .map(|pair| ids[pair])
            .collect();
        Dfa::new(self.alphabet_size, rows, initial, finals, dead_id)
    }

    pub fn to_json(&self) -> String {
        let doc = DfaDoc {
            alphabet: self.alphabet_size,
            states: self.state_count(),
            initial: self.initial,
            finals: self.finals.iter().copied().collect(),
            dead: self.dead,
            transitions: self.transitions.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, DfaError> {
        let doc: DfaDoc = serde_json::from_str(text)?;
        if doc.states != doc.transitions.len() {
            return Err(DfaError::StateCountMismatch {
                declared: doc.states,
                actual: doc.transitions.len(),
            });
        }
        Dfa::new(
            doc.alphabet,
            doc.transitions,
            doc.initial,
            doc.finals.into_iter().collect(),
            doc.dead,
        )
    }

    /// Graphviz rendering. The dead state and its edges are suppressed
    /// unless `show_dead` is set; `labels` supplies display names for
    /// generated automata.
    pub fn to_dot(&self, labels: Option<&BTreeMap<usize, StateLabel>>, show_dead: bool) -> String {
        let name = |state: usize| -> String {
            if let Some(map) = labels {
                if let Some(label) = map.get(&state) {
                    return label.to_string();
                }
                if Some(state) == self.dead {
                    return "q_d".to_string();
                }
            }
            format!("s{state}")
        };
        let hidden = |state: usize| !show_dead && Some(state) == self.dead;
        let mut out = String::from("digraph {\n  rankdir=LR;\n  node [shape=circle];\n");
        out.push_str("  __start [shape=none, label=\"\"];\n");
        out.push_str(&format!("  __start -> n{};\n", self.initial));
        for state in 0..self.state_count() {
            if hidden(state) {
                continue;
            }
            let shape = if self.finals.contains(&state) {
                ", shape=doublecircle"
            } else {
                ""
            };
            out.push_str(&format!(
                "  n{state} [label=\"{}\"{shape}];\n",
                name(state)
            ));
        }
        for state in 0..self.state_count() {
            if hidden(state) {
                continue;
            }
            let mut grouped: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (symbol, &target) in self.transitions[state].iter().enumerate() {
                if hidden(target) {
                    continue;
                }
                grouped
                    .entry(target)
                    .or_default()
                    .push(render_symbol(symbol as Symbol));
            }
            for (target, symbols) in grouped {
                out.push_str(&format!(
                    "  n{state} -> n{target} [label=\"{}\"];\n",
                    symbols.join(",")
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// On-disk form of a [`Dfa`]. Row index is the state, column index the
/// symbol.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaDoc {
    alphabet: usize,
    states: usize,
    initial: usize,
    finals: Vec<usize>,
    dead: Option<usize>,
    transitions: Vec<Vec<usize>>,
}

/// Display name of a generated state: the subscript sequence `q_{s}` used
/// while unfolding the family construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateLabel {
    subscript: Vec<u32>,
}

impl StateLabel {
    pub fn new(subscript: Vec<u32>) -> Option<Self> {
        if subscript.is_empty() {
            None
        } else {
            Some(StateLabel { subscript })
        }
    }

    pub fn subscript(&self) -> &[u32] {
        &self.subscript
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q_{{")?;
        for (i, part) in self.subscript.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "}}")
    }
}

impl PartialOrd for StateLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StateLabel {
    /// Shorter subscripts first, then lexicographic; this fixes the dense
    /// state numbering of generated automata.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.subscript.len(), &self.subscript).cmp(&(other.subscript.len(), &other.subscript))
    }
}

/// A generated automaton together with the display names of its states.
/// The dead state carries no label.
#[derive(Debug, Clone)]
pub struct LabeledDfa {
    pub dfa: Dfa,
    pub labels: BTreeMap<usize, StateLabel>,
}

type LabelSeq = Vec<u32>;

/// Working form of a family member while the recursion unfolds: transitions
/// between labeled states, everything unlisted going to an implicit dead
/// state.
struct ProtoDfa {
    alphabet: usize,
    states: BTreeSet<LabelSeq>,
    transitions: BTreeMap<LabelSeq, BTreeMap<Symbol, LabelSeq>>,
    final_label: LabelSeq,
}

impl ProtoDfa {
    fn insert(&mut self, from: LabelSeq, symbol: Symbol, to: LabelSeq) -> Result<(), DfaError> {
        let row = self.transitions.entry(from.clone()).or_default();
        if let Some(existing) = row.get(&symbol) {
            return Err(DfaError::Inconsistent(format!(
                "duplicate transition from {from:?} on {symbol}: {existing:?} vs {to:?}"
            )));
        }
        row.insert(symbol, to);
        Ok(())
    }

    fn target(&self, from: &LabelSeq, symbol: Symbol) -> Option<&LabelSeq> {
        self.transitions.get(from).and_then(|row| row.get(&symbol))
    }
}

/// Builds the `i`-th member of the chain family seeded by the simple
/// k-power `w1`.
///
/// The first member is a plain chain spelling `cyc_0(w1)` into its unique
/// final state. Each later member doubles the non-final, non-dead states:
/// the old transitions are kept, the copies mirror them, the old final state
/// re-enters the chain on the two most recent letters, and every non-final
/// copy jumps back into the chain one position further than its original
/// did. The result has `2^(i-1)(n-1) + 2` states including the dead state,
/// and exactly one final state.
pub fn build_di(w1: &Word, k: usize, i: usize) -> Result<LabeledDfa, DfaError> {
    if i == 0 {
        return Err(DfaError::IndexTooSmall);
    }
    if !w1.is_simple_kpower(k)? {
        return Err(DfaError::NotSimplePower {
            word: w1.to_string(),
            k,
        });
    }
    let n = w1.len();
    let m = w1.alphabet_size();

    // level 1: the chain q_{1,0} .. q_{1,n-1} spelling cyc_0(w1)
    let mut proto = ProtoDfa {
        alphabet: m,
        states: (0..n as u32).map(|j| vec![1, j]).collect(),
        transitions: BTreeMap::new(),
        final_label: vec![1, (n - 1) as u32],
    };
    for j in 0..n - 1 {
        proto.insert(
            vec![1, j as u32],
            w1.symbols()[j],
            vec![1, (j + 1) as u32],
        )?;
    }

    for level in 1..i {
        proto = extend_family(proto, level, n, w1)?;
    }
    materialize(proto)
}

/// One unfolding step: builds the level `level + 1` member from the level
/// `level` member.
fn extend_family(old: ProtoDfa, level: usize, n: usize, w1: &Word) -> Result<ProtoDfa, DfaError> {
    let new_letter = old.alphabet as Symbol;
    let prev_letter: Symbol = if level == 1 {
        w1.symbols()[n - 1]
    } else {
        (old.alphabet - 1) as Symbol
    };
    let copy_tag = (level + 1) as u32;
    let copy_of = |label: &LabelSeq| -> LabelSeq {
        let mut copied = Vec::with_capacity(label.len() + 1);
        copied.push(copy_tag);
        copied.extend_from_slice(label);
        copied
    };
    let chain_end: LabelSeq = vec![1, (n - 1) as u32];

    // the copies: one per non-final old state
    let mut states = old.states.clone();
    for label in old.states.iter().filter(|l| **l != old.final_label) {
        states.insert(copy_of(label));
    }

    // new final: copy of the unique level-tagged state that can reach the
    // chain end
    let candidates: Vec<&LabelSeq> = old
        .states
        .iter()
        .filter(|label| **label != old.final_label && label[0] == level as u32)
        .filter(|label| {
            (0..old.alphabet as Symbol).any(|c| old.target(label, c) == Some(&chain_end))
        })
        .collect();
    if candidates.len() != 1 {
        return Err(DfaError::Inconsistent(format!(
            "expected exactly one final-state candidate at level {level}, found {}",
            candidates.len()
        )));
    }
    let final_label = copy_of(candidates[0]);

    let mut next = ProtoDfa {
        alphabet: old.alphabet + 1,
        states,
        transitions: BTreeMap::new(),
        final_label: final_label.clone(),
    };

    // old transitions survive, and the copies mirror those between
    // non-final states
    for (from, row) in &old.transitions {
        for (&symbol, to) in row {
            next.insert(from.clone(), symbol, to.clone())?;
            if *from != old.final_label && *to != old.final_label {
                next.insert(copy_of(from), symbol, copy_of(to))?;
            }
        }
    }

    // the old final state re-enters the chain
    next.insert(old.final_label.clone(), new_letter, vec![1, 1])?;
    next.insert(old.final_label.clone(), prev_letter, vec![copy_tag, 1, 0])?;

    // non-final copies jump back into the chain one position further than
    // their originals did
    if level == 1 {
        for j in 0..n.saturating_sub(2) {
            next.insert(
                vec![copy_tag, 1, j as u32],
                new_letter,
                vec![1, (j + 2) as u32],
            )?;
        }
    } else {
        for label in old.states.iter().filter(|l| **l != old.final_label) {
            let copied = copy_of(label);
            if copied == final_label {
                continue;
            }
            if let Some(target) = old.target(label, prev_letter) {
                if target.len() == 2 && target[0] == 1 {
                    let j = target[1] as usize;
                    if j + 1 > n - 1 {
                        return Err(DfaError::Inconsistent(format!(
                            "re-entry target q_{{1,{}}} does not exist",
                            j + 1
                        )));
                    }
                    next.insert(copied, new_letter, vec![1, (j + 1) as u32])?;
                }
            }
        }
    }
    Ok(next)
}

/// Assigns dense state ids (labels ordered by length, then lexicographically,
/// dead state last) and produces the total-transition automaton.
fn materialize(proto: ProtoDfa) -> Result<LabeledDfa, DfaError> {
    let mut ordered: Vec<&LabelSeq> = proto.states.iter().collect();
    ordered.sort_by_key(|label| (label.len(), (*label).clone()));
    let ids: HashMap<&LabelSeq, usize> = ordered
        .iter()
        .enumerate()
        .map(|(id, label)| (*label, id))
        .collect();
    let dead = ordered.len();
    let states = dead + 1;
    let mut transitions = vec![vec![dead; proto.alphabet]; states];
    for (from, row) in &proto.transitions {
        for (&symbol, to) in row {
            transitions[ids[from]][symbol as usize] = ids[to];
        }
    }
    let finals = BTreeSet::from([ids[&proto.final_label]]);
    let initial = *ids
        .get(&vec![1, 0])
        .ok_or_else(|| DfaError::Inconsistent("missing initial chain state".into()))?;
    let labels: BTreeMap<usize, StateLabel> = ordered
        .iter()
        .enumerate()
        .map(|(id, label)| (id, StateLabel::new((*label).clone()).expect("nonempty")))
        .collect();
    let dfa = Dfa::new(proto.alphabet, transitions, initial, finals, Some(dead))?;
    Ok(LabeledDfa { dfa, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::free_words;
    use crate::words::Constraint;

    fn w(s: &str) -> Word {
        s.parse().expect("test word")
    }

    fn d1() -> LabeledDfa {
        build_di(&w("01x3"), 3, 1).expect("family member")
    }

    #[test]
    fn first_member_accepts_exactly_the_partial_conjugate() {
        let family = d1();
        assert_eq!(family.dfa.state_count(), 7);
        assert!(family.dfa.accepts(&w("01010").with_alphabet(2).unwrap()).unwrap());
        assert!(!family.dfa.accepts(&w("0101").with_alphabet(2).unwrap()).unwrap());
        assert!(!family.dfa.accepts(&Word::empty(2).unwrap()).unwrap());
        // singleton language: no other word up to length 6 is accepted
        let mut accepted = Vec::new();
        for len in 0..=6 {
            for word in exhaustive_words(2, len) {
                if family.dfa.accepts(&word).unwrap() {
                    accepted.push(word);
                }
            }
        }
        assert_eq!(accepted, vec![w("01010").with_alphabet(2).unwrap()]);
    }

    fn exhaustive_words(alphabet: usize, len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let total = (alphabet as u64).pow(len as u32);
        for mut index in 0..total {
            let mut symbols = vec![0u8; len];
            for slot in (0..len).rev() {
                symbols[slot] = (index % alphabet as u64) as u8;
                index /= alphabet as u64;
            }
            out.push(Word::new(symbols, alphabet).unwrap());
        }
        out
    }

    #[test]
    fn state_count_law() {
        for (i, expected) in [(1usize, 7usize), (2, 12), (3, 22), (4, 42), (5, 82)] {
            let family = build_di(&w("01x3"), 3, i).unwrap();
            assert_eq!(family.dfa.state_count(), expected, "i={i}");
            assert_eq!(family.dfa.finals().len(), 1, "i={i}");
            assert_eq!(family.dfa.alphabet_size(), 2 + i - 1, "i={i}");
        }
    }

    #[test]
    fn family_accepts_its_witness() {
        let w1 = w("01x3");
        for i in 1..=4 {
            let family = build_di(&w1, 3, i).unwrap();
            let witness = crate::constructions::build_w(&w1, 3, i)
                .unwrap()
                .cyc(0)
                .unwrap();
            let witness = witness.with_alphabet(family.dfa.alphabet_size()).unwrap();
            assert!(family.dfa.accepts(&witness).unwrap(), "i={i}");
        }
    }

    #[test]
    fn ternary_square_family_counts() {
        let s1 = crate::constructions::base_simple_power(2, 3).unwrap();
        for (i, expected) in [(1usize, 7usize), (2, 12), (3, 22)] {
            let family = build_di(&s1, 2, i).unwrap();
            assert_eq!(family.dfa.state_count(), expected, "i={i}");
        }
    }

    #[test]
    fn chain_re_entry_edges_are_unique() {
        // from the second member on, exactly one state per chain position
        // 1..n-1 jumps back to it on the previous separator letter
        let w1 = w("01x3");
        let n = w1.len();
        for i in 2..=4usize {
            let family = build_di(&w1, 3, i).unwrap();
            let recent: Symbol = (family.dfa.alphabet_size() - 1) as Symbol;
            let chain_id = |j: usize| {
                family
                    .labels
                    .iter()
                    .find(|(_, label)| label.subscript() == [1, j as u32])
                    .map(|(&id, _)| id)
                    .expect("chain state")
            };
            for j in 1..n {
                let target = chain_id(j);
                let sources = (0..family.dfa.state_count())
                    .filter(|&s| family.dfa.step(s, recent).unwrap() == target)
                    .count();
                assert_eq!(sources, 1, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn rejected_bases() {
        assert!(matches!(
            build_di(&w("0110"), 2, 1),
            Err(DfaError::NotSimplePower { .. })
        ));
        assert!(matches!(build_di(&w("01x3"), 3, 0), Err(DfaError::IndexTooSmall)));
    }

    #[test]
    fn shortest_accepted_on_the_first_member() {
        let family = d1();
        let shortest = family.dfa.shortest_accepted().unwrap();
        assert_eq!(shortest, w("01010").with_alphabet(2).unwrap());
        assert!(shortest.len() < family.dfa.state_count());
        assert_eq!(
            Dfa::universal(2, true).shortest_accepted(),
            Some(Word::empty(2).unwrap())
        );
        assert_eq!(Dfa::universal(2, false).shortest_accepted(), None);
    }

    #[test]
    fn shortest_accepted_prefers_lexicographically_least() {
        // two-state automaton accepting any nonempty word: 0 and 1 both work
        let dfa = Dfa::new(
            2,
            vec![vec![1, 1], vec![1, 1]],
            0,
            BTreeSet::from([1]),
            None,
        )
        .unwrap();
        assert_eq!(
            dfa.shortest_accepted().unwrap(),
            w("0").with_alphabet(2).unwrap()
        );
    }

    #[test]
    fn product_with_universal_is_identity_on_small_words() {
        let family = d1();
        let product = Dfa::universal(2, true)
            .product_intersection(&family.dfa)
            .unwrap();
        for len in 0..=6 {
            for word in exhaustive_words(2, len) {
                assert_eq!(
                    product.accepts(&word).unwrap(),
                    family.dfa.accepts(&word).unwrap(),
                    "word={word}"
                );
            }
        }
        assert!(product.state_count() <= family.dfa.state_count());
    }

    #[test]
    fn product_with_empty_language_is_empty() {
        let family = d1();
        let product = Dfa::universal(2, false)
            .product_intersection(&family.dfa)
            .unwrap();
        assert_eq!(product.shortest_accepted(), None);
    }

    #[test]
    fn self_product_is_idempotent() {
        let family = d1();
        let product = family.dfa.product_intersection(&family.dfa).unwrap();
        assert_eq!(
            product.shortest_accepted().unwrap().symbols(),
            w("01010").symbols()
        );
        for len in 0..=6 {
            for word in exhaustive_words(2, len) {
                assert_eq!(
                    product.accepts(&word).unwrap(),
                    family.dfa.accepts(&word).unwrap()
                );
            }
        }
    }

    #[test]
    fn product_rejects_alphabet_mismatch() {
        assert!(matches!(
            Dfa::universal(2, true).product_intersection(&Dfa::universal(3, true)),
            Err(DfaError::AlphabetMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let family = build_di(&w("01x3"), 3, 2).unwrap();
        let text = family.dfa.to_json();
        let back = Dfa::from_json(&text).unwrap();
        assert_eq!(back, family.dfa);
    }

    #[test]
    fn json_rejects_malformed_documents() {
        assert!(matches!(
            Dfa::from_json(r#"{"alphabet": 2, "states": 1, "finals": [], "dead": null, "transitions": [[0,0]]}"#),
            Err(DfaError::Json(_))
        ));
        assert!(matches!(
            Dfa::from_json(r#"{"alphabet": 2, "states": 1, "initial": 0, "finals": [], "dead": null, "transitions": [[0,5]]}"#),
            Err(DfaError::TargetOutOfRange { target: 5, states: 1 })
        ));
        assert!(matches!(
            Dfa::from_json(r#"{"alphabet": 2, "states": 2, "initial": 0, "finals": [], "dead": null, "transitions": [[0,0]]}"#),
            Err(DfaError::StateCountMismatch { declared: 2, actual: 1 })
        ));
    }

    #[test]
    fn json_schema_field_order_is_stable() {
        let text = d1().dfa.to_json();
        let alphabet = text.find("\"alphabet\"").unwrap();
        let states = text.find("\"states\"").unwrap();
        let initial = text.find("\"initial\"").unwrap();
        let finals = text.find("\"finals\"").unwrap();
        let dead = text.find("\"dead\"").unwrap();
        let transitions = text.find("\"transitions\"").unwrap();
        assert!(alphabet < states && states < initial && initial < finals);
        assert!(finals < dead && dead < transitions);
    }

    #[test]
    fn dot_output_counts() {
        let family = d1();
        let dot = family.dfa.to_dot(Some(&family.labels), false);
        assert!(dot.starts_with("digraph {\n  rankdir=LR;"));
        let visible_nodes = dot.matches("label=\"q_{").count();
        assert_eq!(visible_nodes, 6); // dead state suppressed
        assert_eq!(dot.matches("doublecircle").count(), 1);
        assert!(dot.contains("q_{1,0}"));

        let with_dead = family.dfa.to_dot(Some(&family.labels), true);
        assert!(with_dead.contains("q_d"));

        let single = Dfa::universal(2, false).to_dot(None, false);
        assert_eq!(single.matches("label=\"s").count(), 1);
    }

    #[test]
    fn dot_names_second_member_states() {
        let family = build_di(&w("01x3"), 3, 2).unwrap();
        let dot = family.dfa.to_dot(Some(&family.labels), false);
        assert!(dot.contains("q_{1,0}"));
        assert!(dot.contains("q_{2,1,4}"));
    }

    #[test]
    fn invalid_automata_are_rejected() {
        assert!(matches!(
            Dfa::new(2, vec![], 0, BTreeSet::new(), None),
            Err(DfaError::NoStates)
        ));
        assert!(matches!(
            Dfa::new(2, vec![vec![0]], 0, BTreeSet::new(), None),
            Err(DfaError::BadRow { .. })
        ));
        assert!(matches!(
            Dfa::new(2, vec![vec![0, 0]], 0, BTreeSet::from([0]), Some(0)),
            Err(DfaError::DeadStateFinal)
        ));
        assert!(matches!(
            Dfa::new(
                2,
                vec![vec![1, 0], vec![1, 1]],
                0,
                BTreeSet::new(),
                Some(0)
            ),
            Err(DfaError::DeadStateLeaks { state: 0 })
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn dfa_over(alphabet: usize) -> impl Strategy<Value = Dfa> {
            (1usize..7).prop_flat_map(move |states| {
                (
                    proptest::collection::vec(
                        proptest::collection::vec(0..states, alphabet),
                        states,
                    ),
                    0..states,
                    proptest::collection::btree_set(0..states, 0..=states),
                )
                    .prop_map(move |(transitions, initial, finals)| {
                        Dfa::new(alphabet, transitions, initial, finals, None)
                            .expect("strategy builds valid automata")
                    })
            })
        }

        fn dfa_strategy() -> impl Strategy<Value = Dfa> {
            (1usize..4).prop_flat_map(dfa_over)
        }

        fn product_case() -> impl Strategy<Value = (Dfa, Dfa, Word)> {
            (1usize..4).prop_flat_map(|alphabet| {
                (
                    dfa_over(alphabet),
                    dfa_over(alphabet),
                    proptest::collection::vec(0..alphabet as u8, 0..7),
                )
                    .prop_map(move |(left, right, symbols)| {
                        (left, right, Word::new(symbols, alphabet).expect("in range"))
                    })
            })
        }

        proptest! {
            #[test]
            fn json_round_trip_is_identity(dfa in dfa_strategy()) {
                let back = Dfa::from_json(&dfa.to_json()).unwrap();
                prop_assert_eq!(back, dfa);
            }

            #[test]
            fn shortest_accepted_respects_the_state_bound(dfa in dfa_strategy()) {
                if let Some(word) = dfa.shortest_accepted() {
                    prop_assert!(word.len() < dfa.state_count());
                    prop_assert!(dfa.accepts(&word).unwrap());
                }
            }

            #[test]
            fn product_agrees_with_componentwise_acceptance(
                (left, right, word) in product_case(),
            ) {
                let product = left.product_intersection(&right).unwrap();
                prop_assert_eq!(
                    product.accepts(&word).unwrap(),
                    left.accepts(&word).unwrap() && right.accepts(&word).unwrap()
                );
            }
        }
    }

    #[test]
    fn family_language_is_infinite_but_constrained() {
        // the second member accepts words shorter than the free witness,
        // but none of them is cube-free
        let family = build_di(&w("01x3"), 3, 2).unwrap();
        let shortest = family.dfa.shortest_accepted().unwrap();
        assert!(shortest.len() < 35);
        assert!(shortest.find_kpower(3).unwrap().is_some());
        let cube_free: Vec<Word> = (0..=12)
            .flat_map(|len| free_words(3, &Constraint::KPower { k: 3 }, len).unwrap())
            .filter(|word| family.dfa.accepts(word).unwrap())
            .collect();
        assert!(cube_free.is_empty());
    }
}
