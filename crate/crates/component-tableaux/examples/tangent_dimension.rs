//! Tangent-space dimension at `e` and the Jordan type of `e`.
//!
//! `cargo run --example tangent_dimension -- 2,1,1,1,2`

use component_tableaux::analysis;
use component_tableaux::report;
use component_tableaux::{Composition, Diagram};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,1,1,2".into());
    let d = Diagram::new(&arg.parse::<Composition>().expect("composition"));
    println!("dim m = {}, g = {}", d.dim_m(), d.pairs().len());
    for (k, t) in report::tableau_data(&d).unwrap().iter().enumerate() {
        let r = analysis::tangent_dimension(&d, &t.labels).unwrap();
        println!(
            "tableau {k}: dim(u + [n,e]) = {}, direct sum {}, Jordan type {:?}, orbit dimension {}",
            r.dim_u_plus_ne, r.direct_sum_ok, r.jordan_type_of_e, r.orbit_dimension_of_e
        );
    }
}
