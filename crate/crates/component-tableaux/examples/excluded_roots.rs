//! Shifted tableaux and the excluded roots they produce.
//!
//! `cargo run --example excluded_roots -- 1,2,2,1,3,2`

use component_tableaux::roots::{self, RootKind};
use component_tableaux::{component_tableaux, Composition, Diagram};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,2,1,3,2".into());
    let d = Diagram::new(&arg.parse::<Composition>().expect("composition"));
    for (k, ct) in component_tableaux(&d).iter().enumerate() {
        let x = roots::excluded_roots(ct).unwrap();
        println!("tableau {k}: X = {:?}", x.union);
        for g in &x.per_generator {
            let sh = roots::shifted_tableau(&d, &g.generator).unwrap();
            let of = |kind| g.roots.iter().filter(|r| *r.1 == kind).map(|r| *r.0).collect::<Vec<_>>();
            println!(
                "  T_({}, {:?}) columns {:?}: primary {:?}, secondary {:?}",
                g.generator.i,
                g.generator.j,
                sh.columns,
                of(RootKind::Primary),
                of(RootKind::Secondary)
            );
        }
    }
}
