//! The Thue-Morse morphism and its fixed point: prefix generation, the
//! doubling law, and freeness preservation.
//!
//! ```bash
//! cargo run --example thue_morse
//! ```

use powerfree::morphisms::{thue_morse_prefix, Morphism};
use powerfree::words::Word;

fn main() {
    let mu = Morphism::thue_morse();
    println!("morphism: {mu}");

    println!("\nprefixes of the fixed point t:");
    for n in [1usize, 2, 4, 8, 16, 32] {
        println!("  t[0..{:2}] = {}", n - 1, thue_morse_prefix(n));
    }

    // applying the morphism to a prefix doubles it
    let t = thue_morse_prefix(64);
    let prefix = Word::from_slice(&t.symbols()[..13], 2).unwrap();
    let image = mu.apply(&prefix).unwrap();
    println!("\nmu({prefix}) = {image}");
    println!("doubling law holds: {}", image.symbols() == &t.symbols()[..26]);

    // the fixed point is overlap-free, hence cube-free
    let long = thue_morse_prefix(512);
    println!("\nt[0..511] overlap occurrence: {:?}", long.find_overlap());
    println!("t[0..511] cube occurrence:    {:?}", long.find_kpower(3).unwrap());

    // the morphism preserves overlap-freeness of arbitrary words
    let free: Word = "001011".parse().unwrap();
    println!(
        "\n{} is overlap-free: {}; its image {} is overlap-free: {}",
        free,
        free.is_overlap_free(),
        mu.apply(&free).unwrap(),
        mu.apply(&free).unwrap().is_overlap_free()
    );

    // fixed points of other morphisms work the same way
    let period_doubling: Morphism = "0->01,1->00".parse().unwrap();
    println!(
        "\nperiod-doubling fixed point: {}",
        period_doubling.fixed_point_prefix(0, 32).unwrap()
    );
}
