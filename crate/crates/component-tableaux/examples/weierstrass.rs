//! Vanishing on the excluded roots and restriction to `e + V`.
//!
//! Each generator vanishes once `X` is zeroed, and restricted to `e + V` it
//! becomes a single starred coordinate, a different one per pair.
//!
//! `cargo run --example weierstrass -- 1,2,1,2`

use component_tableaux::invariants;
use component_tableaux::roots;
use component_tableaux::{component_tableaux, Composition, Diagram};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,1,2".into());
    let d = Diagram::new(&arg.parse::<Composition>().expect("composition"));
    let gens: Vec<_> = d.pairs().iter().map(|p| invariants::invariant(&d, p).unwrap()).collect();
    for (k, ct) in component_tableaux(&d).iter().enumerate() {
        let x = roots::excluded_roots(ct).unwrap();
        println!("tableau {k}: stars {:?}", ct.stars);
        for g in &gens {
            let zeroed = g.poly.set_zero(&x.union);
            let restricted = invariants::weierstrass_restrict(&g.poly, ct);
            println!("  {}: zero on X: {}, on e + V: {restricted}", g.pair, zeroed.is_zero());
        }
    }
}
