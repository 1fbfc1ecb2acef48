//! The truncated graded algebra: build a ring from an intersection table,
//! multiply classes, invert Todd classes, and integrate against the top
//! pairing.
//!
//! ```bash
//! cargo run -p prymcalc --example chow_ring
//! ```

use prymcalc::rat::Rat;
use prymcalc::ring::{todd_from_chern, ChowPresentation, GradedClass};

fn main() {
    // the degree 4 threefold: one generator H with H^3 = 4
    let ring = ChowPresentation::new(&["H"], 3, &[("H^3", Rat::int(4))]).unwrap();
    let h: GradedClass<Rat> = ring.gen_class("H");

    // td = 1 + c1/2 + (c1^2 + c2)/12 from c1 = 2H, c2 = 3H^2
    let todd = todd_from_chern(
        &h.scale_rat(&Rat::int(2)),
        &h.pow(2).scale_rat(&Rat::int(3)),
    )
    .unwrap();
    println!("td       = {todd}");

    let inverse = todd.inverse_unit().unwrap();
    println!("td^-1    = {inverse}");
    println!("product  = {}", todd.mul(&inverse));

    // exponentials of divisors truncate at the ring dimension
    let line_bundle = h.neg().exp_class().unwrap();
    println!("exp(-H)  = {line_bundle}");

    // a two-generator ring with the blow-up intersection table
    let blowup = ChowPresentation::new(
        &["E", "F"],
        3,
        &[
            ("F^3", Rat::int(32)),
            ("EF^2", Rat::int(64)),
            ("E^2F", Rat::int(32)),
            ("E^3", Rat::int(-128)),
        ],
    )
    .unwrap();
    let e: GradedClass<Rat> = blowup.gen_class("E");
    let f: GradedClass<Rat> = blowup.gen_class("F");

    // (E+F).E.(E+F) = E^3 + 2E^2F + EF^2 = -128 + 64 + 64 vanishes
    let s = e.add(&f);
    println!("(E+F).E.(E+F) = {}", s.mul(&e).mul(&s));
    println!("integral of E^3 = {}", e.pow(3).integrate());
    println!("integral of EF^2 = {}", e.mul(&f.pow(2)).integrate());
}
