//! Repetition-free words and the automata that keep them long.
//!
//! This crate is a desk-scale toolkit for combinatorics on words and finite
//! automata, centered on three things:
//!
//! - **Word algebra** ([`words`], [`morphisms`]): k-power and overlap
//!   detection, primitivity, conjugates and partial conjugates, the
//!   Thue-Morse morphism and its fixed point.
//! - **A chain-automaton family** ([`constructions`], [`automata`],
//!   [`search`]): starting from a simple k-power, a recursive word family
//!   `w_i` of length `n^i` and matching automata `D_i` with
//!   `2^(i-1)(n-1)+2` states, built so that the k-power-free partial
//!   conjugate `cyc_0(w_i)` threads through the unique final state. An
//!   exact breadth-first oracle checks whether those witnesses really are
//!   the shortest repetition-free accepted words; they are for the first
//!   two members, and from the third member on the oracle finds shorter
//!   ones (see the README).
//! - **A functional-power construction** ([`carpi`]): the 25-letter code Φ
//!   mapping into binary words via the Thue-Morse morphism, its split form
//!   and bounded inversion, and an automaton over endofunction tuples
//!   showing that Φ-preimages of a regular language are again regular.
//!
//! The `examples/` directory has one runnable demonstration per capability;
//! the `powerfree` binary exposes the same functionality as subcommands.

pub mod automata;
pub mod carpi;
pub mod cli;
pub mod constructions;
pub mod morphisms;
pub mod search;
pub mod verify;
pub mod words;

pub use automata::{build_di, Dfa, DfaError, LabeledDfa, StateLabel};
pub use carpi::{
    build_psi_dfa, build_psi_dfa_with_budget, eta_compose, invert_phi, phi, phi_split,
    shortest_overlap_free_via_psi, CarpiError, CarpiLetter, PsiAutomaton,
};
pub use constructions::{
    base_simple_power, build_w, build_w_prime, find_circularly_squarefree,
    simple_overlap_from_square, ConstructionError,
};
pub use morphisms::{thue_morse_prefix, Morphism, MorphismError};
pub use search::{
    enumerate_free, free_words, shortest_free_accepted, shortest_free_accepted_with,
    SearchOptions, SearchOutcome,
};
pub use words::{Constraint, Occurrence, OccurrenceKind, Symbol, Word, WordError};
