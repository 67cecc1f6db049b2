//! The chain-automaton family: state counts double per level while the
//! family witness length multiplies by n, and every member accepts its
//! witness into a single final state.
//!
//! ```bash
//! cargo run --example chain_automata
//! ```

use powerfree::automata::build_di;
use powerfree::constructions::build_w;
use powerfree::words::Word;

fn main() {
    let w1: Word = "01x3".parse().unwrap();

    println!("family members for base {w1} (n = 6):");
    println!("{:>3} {:>8} {:>10} {:>14}", "i", "states", "2^(i-1)5+2", "witness len");
    for i in 1..=5usize {
        let family = build_di(&w1, 3, i).unwrap();
        let witness_len = 6usize.pow(i as u32) - 1;
        println!(
            "{i:>3} {:>8} {:>10} {witness_len:>14}",
            family.dfa.state_count(),
            (1 << (i - 1)) * 5 + 2
        );
    }

    let family = build_di(&w1, 3, 2).unwrap();
    println!("\nsecond member, {} states, labels:", family.dfa.state_count());
    for (id, label) in &family.labels {
        let marker = if family.dfa.is_final(*id) {
            " (final)"
        } else if *id == family.dfa.initial() {
            " (initial)"
        } else {
            ""
        };
        println!("  state {id:2} = {label}{marker}");
    }

    let witness = build_w(&w1, 3, 2)
        .unwrap()
        .cyc(0)
        .unwrap()
        .with_alphabet(family.dfa.alphabet_size())
        .unwrap();
    println!(
        "\naccepts cyc_0(w_2) of length {}: {}",
        witness.len(),
        family.dfa.accepts(&witness).unwrap()
    );

    println!("\nDOT rendering of the first member (dead state suppressed):");
    let first = build_di(&w1, 3, 1).unwrap();
    print!("{}", first.dfa.to_dot(Some(&first.labels), false));
}
