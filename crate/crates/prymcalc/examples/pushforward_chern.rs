//! Chern characters of pushforwards along the degree 8 covers, computed
//! symbolically: the divisor coefficients a, b, m stay polynomial
//! indeterminates end to end.
//!
//! ```bash
//! cargo run -p prymcalc --example pushforward_chern
//! ```

use prymcalc::chern::{bogomolov_delta, grr_ch, LineBundleClass};
use prymcalc::poly::Poly;
use prymcalc::rat::Rat;
use prymcalc::varieties::builtin_presentations;

fn main() {
    let g = builtin_presentations();

    // degree one: L = O(aF + (b+1)E) on the blown-up abelian threefold
    let a = Poly::var("a");
    let b = Poly::var("b");
    let e = g.y1.ring.gen_class::<Poly>("E");
    let f = g.y1.ring.gen_class::<Poly>("F");
    let bundle = LineBundleClass::new(f.scale(&a).add(&e.scale(&(&b + &Poly::one())))).unwrap();
    let ch = grr_ch(&g.cover1, &bundle);
    println!("degree 1 pushforward:");
    println!("  ch = {}", ch.truncate_above(2));
    println!("  Delta-invariant = {}", bogomolov_delta(&ch));

    // degree zero: L = O(aF + bE) over projective 3-space
    let e0 = g.y0.ring.gen_class::<Poly>("E");
    let f0 = g.y0.ring.gen_class::<Poly>("F");
    let bundle0 = LineBundleClass::new(f0.scale(&a).add(&e0.scale(&b))).unwrap();
    let ch0 = grr_ch(&g.cover0, &bundle0);
    println!("degree 0 pushforward:");
    println!("  ch = {}", ch0.truncate_above(2));

    // imposing ch1 = 0 via E + 2F + m(E - 2F) collapses ch2 to a
    // quadratic in m with extremum at m = 0
    let m = Poly::var("m");
    let constrained = LineBundleClass::new(
        e0.add(&f0.scale(&Poly::int(2)))
            .add(&e0.sub(&f0.scale(&Poly::int(2))).scale(&m)),
    )
    .unwrap();
    let ch_m = grr_ch(&g.cover0, &constrained);
    println!("with ch1 = 0 imposed:");
    println!("  ch1 = {}", ch_m.graded_part(1));
    println!("  ch2 = {}", ch_m.graded_part(2));

    // pushforward of the structure sheaf recovers the cover degree, and
    // the exceptional divisor maps onto twice the 8H wobbly class
    let one = g.y1.ring.one::<Rat>();
    let e_rat = g.y1.ring.gen_class::<Rat>("E");
    println!("f_*(1) = {}", g.cover1.pushforward(&one));
    println!("f_*(E) = {}", g.cover1.pushforward(&e_rat));
}
