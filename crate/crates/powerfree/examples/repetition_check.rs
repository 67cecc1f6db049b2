//! The repetition detectors: k-powers, overlaps, primitivity, simple
//! powers, and incremental freeness checks.
//!
//! ```bash
//! cargo run --example repetition_check
//! ```

use powerfree::words::{Constraint, Word};

fn main() {
    let samples = ["010101", "0110", "0110100110010110", "000", "012012"];
    println!("{:>18}  {:>16} {:>16} {:>10}", "word", "square", "cube", "overlap");
    for text in samples {
        let word: Word = text.parse().unwrap();
        let fmt = |occ: Option<powerfree::words::Occurrence>| match occ {
            Some(o) => format!("start {} per {}", o.start, o.period),
            None => "none".to_string(),
        };
        println!(
            "{:>18}  {:>16} {:>16} {:>10}",
            text,
            fmt(word.find_kpower(2).unwrap()),
            fmt(word.find_kpower(3).unwrap()),
            fmt(word.find_overlap()),
        );
    }

    println!("\nprimitivity and conjugates:");
    for text in ["0110", "0101", "011"] {
        let word: Word = text.parse().unwrap();
        println!(
            "  {}: primitive={} distinct conjugates={}",
            text,
            word.is_primitive().unwrap(),
            word.distinct_conjugates().unwrap().len()
        );
    }

    println!("\nsimple powers (no shorter power hides inside):");
    for (text, k) in [("010101", 3), ("000000", 3), ("012012", 2), ("010010", 2)] {
        let word: Word = text.parse().unwrap();
        println!("  {text} as a {k}-power: simple={}", word.is_simple_kpower(k).unwrap());
    }

    // incremental checks only look at repetitions ending at the new symbol,
    // which is what the breadth-first search leans on
    println!("\nextending 01010 by each symbol under the cube constraint:");
    let word: Word = "01010".parse().unwrap();
    let cube = Constraint::kpower(3).unwrap();
    for a in 0..2u8 {
        println!("  01010 + {a}: stays cube-free = {}", word.is_free_extension(a, &cube).unwrap());
    }

    println!("\npartial conjugates of recompute-style rotations:");
    let word: Word = "010011".parse().unwrap();
    for i in [0usize, 2, 4] {
        println!("  cyc_{i}({word}) = {}", word.cyc(i).unwrap());
    }
}
