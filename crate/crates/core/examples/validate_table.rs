//! Build a bracket table and check the Leibniz identity.
use leibniz::algebra::LeibnizAlgebra;

fn main() {
    let g = LeibnizAlgebra::builder("g", &["a1", "a2", "a3"]).bracket("a1", "a3", &[(1, "a1")]).build().unwrap();
    println!("{} violations: {}", g.name(), g.validate().len());
    println!("ann = {}", g.ann_ideal().space());

    let bad = LeibnizAlgebra::builder("bad", &["e1", "e2"])
        .bracket("e1", "e1", &[(1, "e2")])
        .bracket("e2", "e1", &[(1, "e1")])
        .build()
        .unwrap();
    for v in bad.validate() {
        println!("identity fails at {v}");
    }
}
