//! Prints the semi-invariant generator of every neighbouring pair.
//!
//! `cargo run --example invariants -- 1,2,1`

use component_tableaux::invariants;
use component_tableaux::{Composition, Diagram};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,1".into());
    let d = Diagram::new(&arg.parse::<Composition>().expect("composition"));
    for p in d.pairs() {
        let raw = invariants::symbolic_minor(&d, p);
        let rec = invariants::invariant(&d, p).unwrap();
        println!("{p}: minor {raw}");
        println!("  a^{} coefficient, degree {}: {}", rec.d_d, rec.true_degree, rec.poly);
    }
}
