//! The 25-letter code: letters carry a pair of short binary halves, the
//! map Φ unfolds through the Thue-Morse morphism, and inversion peels
//! letters off with an explicit depth bound.
//!
//! ```bash
//! cargo run --example phi_code
//! ```

use powerfree::carpi::{invert_phi, phi, phi_len, phi_split, CarpiLetter, SIGMA};
use powerfree::words::Word;

fn code_word(codes: &[u8]) -> Word {
    Word::from_slice(codes, SIGMA).unwrap()
}

fn show(word: &Word) -> String {
    if word.is_empty() {
        "eps".to_string()
    } else {
        word.to_string()
    }
}

fn main() {
    println!("letters are pairs of halves from {{eps, 0, 1, 00, 11}}:");
    for code in [0u8, 1, 7, 13, 24] {
        let letter = CarpiLetter::new(code).unwrap();
        let (left, right) = letter.decompose();
        println!("  letter {code:2}: halves ({}, {})", show(&left), show(&right));
    }

    println!("\nimages grow through the doubling morphism:");
    for codes in [vec![7u8], vec![7, 7], vec![7, 7, 7], vec![24, 0, 13]] {
        let word = code_word(&codes);
        let image = phi(&word).unwrap();
        let (left, right) = phi_split(&word).unwrap();
        println!(
            "  phi({codes:?}) = {} = {} | {}  (len {} = predicted {})",
            show(&image),
            show(&left),
            show(&right),
            image.len(),
            phi_len(&word).unwrap()
        );
    }

    println!("\npreimages of 01 with at most 2 letters:");
    for preimage in invert_phi(&"01".parse::<Word>().unwrap().with_alphabet(2).unwrap(), 2).unwrap() {
        println!("  {:?}", preimage.symbols());
    }

    // the all-empty letter makes preimage sets infinite without a bound
    let empty = Word::empty(2).unwrap();
    println!(
        "\npreimages of eps with at most 3 letters: {} (letter 0 repeats freely)",
        invert_phi(&empty, 3).unwrap().len()
    );

    // overlap-free words always have a preimage within a logarithmic bound
    let x: Word = "0110100110".parse().unwrap();
    let bound = ((x.len() + 1) as f64).log2().ceil() as usize + 1;
    let preimages = invert_phi(&x, bound).unwrap();
    println!(
        "\n{} is overlap-free; {} preimages within {} letters, e.g. {:?}",
        x,
        preimages.len(),
        bound,
        preimages.iter().next().map(|w| w.symbols().to_vec())
    );
}
