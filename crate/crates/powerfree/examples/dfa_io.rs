//! Automaton serialization: the JSON schema, round-tripping, product
//! intersection, and Graphviz export.
//!
//! ```bash
//! cargo run --example dfa_io
//! ```

use powerfree::automata::{build_di, Dfa};
use powerfree::words::Word;

fn main() {
    let family = build_di(&"01x3".parse::<Word>().unwrap(), 3, 1).unwrap();

    let json = family.dfa.to_json();
    println!("JSON form of the first family member:\n{json}");

    let back = Dfa::from_json(&json).unwrap();
    println!("round trip is exact: {}", back == family.dfa);

    // malformed documents are rejected with a reason
    let broken = json.replace("\"initial\": 0,", "");
    println!("missing field: {:?}", Dfa::from_json(&broken).err().map(|e| e.to_string()));

    // intersection with a universal automaton is a no-op on the language
    let universal = Dfa::universal(family.dfa.alphabet_size(), true);
    let product = universal.product_intersection(&family.dfa).unwrap();
    println!(
        "product with the universal automaton: {} states, shortest accepted {:?}",
        product.state_count(),
        product.shortest_accepted().map(|w| w.to_string())
    );

    // self-intersection keeps the singleton language
    let self_product = family.dfa.product_intersection(&family.dfa).unwrap();
    println!(
        "self-product shortest accepted: {:?}",
        self_product.shortest_accepted().map(|w| w.to_string())
    );

    println!("\nDOT with the dead state shown:");
    print!("{}", family.dfa.to_dot(Some(&family.labels), true));
}
