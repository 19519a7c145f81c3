//! Witnesses that distinct tableaux give distinct components.
//!
//! `cargo run --example injectivity -- 3,2,1,3,2,1`

use std::collections::BTreeSet;

use component_tableaux::report::{self, Check, RunConfig};
use component_tableaux::Composition;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,2,1,3,2,1".into());
    let comp: Composition = arg.parse().expect("composition");
    let cfg = RunConfig { checks: BTreeSet::from([Check::Injectivity]), ..RunConfig::default() };
    let rep = report::verify_composition(&comp, &cfg).unwrap();
    for p in &rep.injectivity_pairs {
        let w = p.witness.as_ref().unwrap();
        let (c, cp) = if w.c_index == 0 { (p.i, p.j) } else { (p.j, p.i) };
        println!(
            "C = {c}, C' = {cp}: pair {:?}, i = {}, i' = {}, l = {:?}, rightmost l' = {:?}, ok {}",
            w.pair, w.i, w.i_prime, w.ell, w.ell_prime, p.ok
        );
    }
}
