//! A small sweep and the JSON conformance report for one composition.
//!
//! `cargo run --release --example sweep_report -- 6`

use component_tableaux::report::{self, ConformanceReport, RunConfig};
use component_tableaux::Composition;

fn main() {
    let bound: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let cfg = RunConfig::default();
    for n in 1..=bound {
        let s = report::sweep_n(n, &cfg).unwrap();
        let total: usize = s.rows.iter().map(|r| r.tableaux).sum();
        println!("n = {n}: {} compositions, {total} tableaux, {:?}", s.rows.len(), s.status);
    }
    let comp: Composition = "2,1,1,2".parse().unwrap();
    let rep = report::verify_composition(&comp, &cfg).unwrap();
    let conf = ConformanceReport::new(&cfg, vec![rep]);
    println!("{}", serde_json::to_string_pretty(&conf).unwrap());
}
