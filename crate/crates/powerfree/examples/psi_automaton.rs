//! The functional-power construction: from a binary automaton to one over
//! the 25-letter code accepting exactly the preimages under Φ, with states
//! that are quadruples of endofunctions. Demonstrates the simulation
//! property and the overlap-free pipeline built on it.
//!
//! ```bash
//! cargo run --example psi_automaton
//! ```

use powerfree::carpi::{build_psi_dfa, phi, shortest_overlap_free_via_psi, SIGMA};
use powerfree::automata::Dfa;
use powerfree::words::{Symbol, Word};

fn main() {
    // a 2-state parity automaton: accepts words with an odd number of 1s
    let parity = Dfa::new(
        2,
        vec![vec![0, 1], vec![1, 0]],
        0,
        [1].into_iter().collect(),
        None,
    )
    .unwrap();

    let psi = build_psi_dfa(&parity).unwrap();
    println!(
        "parity automaton: 2 states -> preimage automaton: {} states (bound 2^8 = 256)",
        psi.state_count()
    );

    // the preimage automaton simulates the base on the image
    let mut agreements = 0usize;
    let mut total = 0usize;
    for a in 0..SIGMA as Symbol {
        for b in 0..SIGMA as Symbol {
            let word = Word::from_slice(&[a, b], SIGMA).unwrap();
            let image = phi(&word).unwrap();
            let simulated = psi.dfa.accepts(&word).unwrap();
            let direct = parity.accepts(&image).unwrap();
            total += 1;
            if simulated == direct {
                agreements += 1;
            }
        }
    }
    println!("simulation agreement on all {total} two-letter code words: {agreements}");

    // the quadruple reached by a word factors the image through the split
    let word = Word::from_slice(&[7, 11], SIGMA).unwrap();
    let state = psi.dfa.run(&word).unwrap();
    let [kappa, lambda, _, _] = psi.tuple(state);
    println!(
        "\nafter reading {:?}: kappa={kappa:?} lambda={lambda:?} (functions on the base states)",
        word.symbols()
    );
    println!(
        "accepting iff lambda(kappa(q0)) is final: {}",
        psi.dfa.is_final(state)
    );

    // the pipeline: shortest code word whose image is overlap-free and
    // accepted
    for (name, dfa) in [
        ("exactly 01", Dfa::exactly(&Word::from_slice(&[0, 1], 2).unwrap())),
        ("exactly 000", Dfa::exactly(&Word::from_slice(&[0, 0, 0], 2).unwrap())),
        ("parity of 1s", parity),
    ] {
        match shortest_overlap_free_via_psi(&dfa, 3).unwrap() {
            Some(witness) => println!(
                "\n{name}: overlap-free image {} via code word {:?}",
                witness.image,
                witness.preimage.symbols()
            ),
            None => println!("\n{name}: no overlap-free image within 3 code letters"),
        }
    }
}
