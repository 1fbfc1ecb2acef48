//! Parabolic weight bookkeeping: the averaged first Chern class, the
//! tacnode correction -1/8, the ramified-cover chain ending in
//! 8(1 - H + H^2/2), and the extremality computations singling out the
//! flat choice.
//!
//! ```bash
//! cargo run -p prymcalc --example parabolic_corrections
//! ```

use prymcalc::chern::{
    ch1_constraints, degree0_global_ch2, kawamata_bookkeeping, mu_one_ch2, parabolic_ch1,
    sharp_length_bound, tacnode_lattice, tacnode_local_ch2, tacnode_pieces, weight_half_ch2,
    LineBundleClass, ParabolicFamily, ParabolicPiece,
};
use prymcalc::poly::Poly;
use prymcalc::rat::Rat;
use prymcalc::varieties::builtin_presentations;

fn main() {
    let g = builtin_presentations();
    let a = Poly::var("a");
    let b = Poly::var("b");
    let e = g.y1.ring.gen_class::<Poly>("E");
    let f = g.y1.ring.gen_class::<Poly>("F");

    // two-step family at weight 1/2: O(aF + bE) below, O(aF + (b+1)E) above
    let family = ParabolicFamily::new(vec![
        ParabolicPiece {
            level: Rat::zero(),
            bundle: LineBundleClass::new(f.scale(&a).add(&e.scale(&b))).unwrap(),
        },
        ParabolicPiece {
            level: Rat::new(1, 2),
            bundle: LineBundleClass::new(f.scale(&a).add(&e.scale(&(&b + &Poly::one())))).unwrap(),
        },
    ])
    .unwrap();
    println!("parabolic ch1 = {}", parabolic_ch1(&family, &g.cover1));

    // the local correction over a resolved tacnode, and the global balance
    let lattice = tacnode_lattice();
    let local = tacnode_local_ch2(&lattice, &tacnode_pieces(&lattice));
    println!("tacnode local ch2 = {local}");
    let balance = degree0_global_ch2(&g.cover0, 0);
    println!(
        "global: {} + 32({local}) = {}",
        balance.raw_ch2, balance.total
    );

    // the ramified-cover chain, symbolic in the cover degree d
    let record = kawamata_bookkeeping(&g.cover1);
    println!("deg N = {}", record.deg_normal);
    println!(
        "ch(V'_Z): rank {}, c1 {}H, {} points{}",
        record.ch_vz_prime.0,
        record.ch_vz_prime.1,
        record.ch_vz_prime.2,
        if record.projectively_flat {
            "  [= 8(1 - H + H^2/2)]"
        } else {
            ""
        }
    );
    for ell in [0u64, 1, 5] {
        let bound = sharp_length_bound(&g.cover1, ell);
        println!(
            "image length {ell}: {}",
            if bound.violates_bogomolov_gieseker {
                "rejected"
            } else {
                "admissible"
            }
        );
    }

    // uniqueness: the ch1 constraint and both extremality quadratics
    let constraints = ch1_constraints(&g.cover1);
    println!("ch1 relation = {}", constraints.relation);
    println!("a at mu=1/2: {}", constraints.a_for_mu_half);
    println!("a at mu=1:   {}", constraints.a_for_mu_one);
    let half = weight_half_ch2(&g.cover1);
    println!(
        "weight 1/2: parabolic ch2 = {} (extremum b={})",
        half.par_ch2, half.extremum
    );
    let mu1 = mu_one_ch2(&g.cover1);
    println!(
        "weight 1:   H.ch2 = {} (max {} at m in {:?})",
        mu1.h_ch2, mu1.max_over_integers, mu1.argmax
    );
}
