//! The recursive word families: members stay simple k-powers while their
//! length grows like n^i, on both the growing and the fixed alphabet.
//!
//! ```bash
//! cargo run --example word_families
//! ```

use powerfree::constructions::{base_simple_power, build_w, build_w_prime, simple_overlap_from_square};
use powerfree::words::Word;

fn main() {
    let w1: Word = "01x3".parse().unwrap();
    println!("base w1 = {w1} (simple cube: {})", w1.is_simple_kpower(3).unwrap());

    println!("\ngrowing-alphabet family (separator letter is fresh per level):");
    for i in 1..=3 {
        let wi = build_w(&w1, 3, i).unwrap();
        let shown = if wi.len() <= 40 {
            wi.to_string()
        } else {
            format!("{}... ({} symbols)", Word::from_slice(&wi.symbols()[..36], wi.alphabet_size()).unwrap(), wi.len())
        };
        println!(
            "  w_{i}: len={:4} alphabet={} simple cube={}  {shown}",
            wi.len(),
            wi.alphabet_size(),
            wi.is_simple_kpower(3).unwrap()
        );
    }

    println!("\nfixed-alphabet variant (separator words 202, 212, 2002, ...):");
    for i in 1..=3 {
        let wpi = build_w_prime(&w1, 3, i).unwrap();
        println!("  w'_{i}: len={:4} alphabet={}", wpi.len(), wpi.alphabet_size());
    }

    // partial conjugates of simple powers are repetition-free
    let w2 = build_w(&w1, 3, 2).unwrap();
    let witness = w2.cyc(0).unwrap();
    println!(
        "\ncyc_0(w_2) = {witness}\n  length {} and cube-free: {}",
        witness.len(),
        witness.find_kpower(3).unwrap().is_none()
    );

    // ternary squares from circularly squarefree roots
    let square_base = base_simple_power(2, 3).unwrap();
    println!("\nternary base {square_base} drives the square family:");
    for i in 1..=2 {
        let si = build_w(&square_base, 2, i).unwrap();
        println!("  s_{i}: len={:3} simple square={}", si.len(), si.is_simple_kpower(2).unwrap());
    }

    let overlap = simple_overlap_from_square(&square_base).unwrap();
    println!("\nsimple overlap from {square_base}: {overlap}");
}
