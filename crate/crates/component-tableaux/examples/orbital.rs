//! Which components look like orbital variety closures.
//!
//! `cargo run --example orbital -- 2,1,2,2,1`

use component_tableaux::analysis;
use component_tableaux::report;
use component_tableaux::{Composition, Diagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,2,2,1".into());
    let d = Diagram::new(&arg.parse::<Composition>().expect("composition"));
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (k, t) in report::tableau_data(&d).unwrap().iter().enumerate() {
        let r = analysis::orbital_variety_test(&d, &t.labels, &mut rng).unwrap();
        println!(
            "tableau {k}: {:?} (generic orbit {} vs 2 dim component {}, samples {:?})",
            r.status, r.generic_orbit_dimension, r.twice_component_dimension, r.sample_dimensions
        );
    }
}
