//! Lists the component tableaux of a composition.
//!
//! `cargo run --example enumerate -- 2,1,1,2,1`

use component_tableaux::{component_tableaux, Composition, Diagram};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,1,2,1".into());
    let comp: Composition = arg.parse().expect("composition like 2,1,1,2");
    let d = Diagram::new(&comp);
    let pairs: Vec<String> = d.pairs().iter().map(|p| p.to_string()).collect();
    println!("{comp}: n = {}, neighbouring pairs {}", d.n(), pairs.join(" "));
    for (k, ct) in component_tableaux(&d).iter().enumerate() {
        let choices: Vec<String> = ct
            .choice_sequence()
            .iter()
            .map(|c| format!("{} (C{},C{}) down {}", c.entry, c.pair_left, c.pair_right, c.rows_down))
            .collect();
        println!("tableau {k}: {}", choices.join("; "));
        println!("  ones  {:?}", ct.ones);
        println!("  stars {:?}", ct.stars);
    }
}
