//! Witness search for circularly squarefree ternary words: every rotation
//! must be square-free. Witnesses exist for all lengths from 18 up (and
//! many small ones), with a handful of gaps in between.
//!
//! ```bash
//! cargo run --example circular_squarefree
//! ```

use powerfree::constructions::find_circularly_squarefree;

fn main() {
    println!("lexicographically least circularly squarefree ternary words:");
    for n in 1..=24usize {
        match find_circularly_squarefree(n) {
            Some(witness) => {
                debug_assert!(witness.is_circularly_squarefree().unwrap());
                println!("  n={n:2}  {witness}");
            }
            None => println!("  n={n:2}  none (exhaustive)"),
        }
    }
    println!("\nthe gaps are exactly n in {{5, 7, 9, 10, 14, 17}}");
}
