//! The exact search oracle: shortest repetition-free accepted words, found
//! by level-order exploration of repetition-free words annotated with DFA
//! states. Includes the search that shows the third family member admits a
//! much shorter cube-free word than its designated witness.
//!
//! ```bash
//! cargo run --release --example shortest_search
//! ```

use powerfree::automata::{build_di, Dfa};
use powerfree::constructions::build_w;
use powerfree::search::{enumerate_free, shortest_free_accepted, SearchOutcome};
use powerfree::words::{Constraint, Word};

fn main() {
    let cube = Constraint::kpower(3).unwrap();

    println!("counts of repetition-free words (independent of any automaton):");
    println!("{:>4} {:>12} {:>12} {:>14}", "len", "overlap-free", "cube-free", "sq-free (Σ3)");
    for len in 0..=10usize {
        println!(
            "{len:>4} {:>12} {:>12} {:>14}",
            enumerate_free(2, &Constraint::Overlap, len).unwrap(),
            enumerate_free(2, &cube, len).unwrap(),
            enumerate_free(3, &Constraint::KPower { k: 2 }, len).unwrap(),
        );
    }

    let w1: Word = "01x3".parse().unwrap();
    println!("\nshortest cube-free accepted words of the family:");
    for i in 1..=2usize {
        let family = build_di(&w1, 3, i).unwrap();
        let expected = build_w(&w1, 3, i).unwrap().cyc(0).unwrap();
        let outcome = shortest_free_accepted(&family.dfa, &cube, 6usize.pow(i as u32)).unwrap();
        let word = outcome.word().unwrap();
        println!(
            "  i={i}: len={} matches cyc_0(w_{i})={}",
            word.len(),
            word.symbols() == expected.symbols()
        );
    }

    // the third member is a different story: its copy layer re-exposes
    // short cube-free sub-paths, so the search beats the 215-symbol family
    // witness (this takes a few seconds in debug builds)
    println!("\nthird member (22 states):");
    let family = build_di(&w1, 3, 3).unwrap();
    match shortest_free_accepted(&family.dfa, &cube, 216).unwrap() {
        SearchOutcome::Found(word) => {
            println!("  shortest cube-free accepted word: len={} (family witness has 215)", word.len());
            println!("  {word}");
            assert!(family.dfa.accepts(&word).unwrap());
            assert!(word.find_kpower(3).unwrap().is_none());
        }
        other => println!("  {other:?}"),
    }

    // the two flavors of "none"
    let cube_only = Dfa::exactly(&Word::from_slice(&[0, 0, 0], 2).unwrap());
    println!(
        "\nautomaton accepting only 000, cube-free search: {:?}",
        shortest_free_accepted(&cube_only, &cube, 10).unwrap()
    );
    let square_only = Dfa::exactly(&Word::from_slice(&[0, 1, 0, 1], 2).unwrap());
    println!(
        "automaton accepting only 0101, square-free search capped at 3: {:?}",
        shortest_free_accepted(&square_only, &Constraint::KPower { k: 2 }, 3).unwrap()
    );
}
