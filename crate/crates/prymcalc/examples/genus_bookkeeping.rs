//! Genus and ramification accounting: Riemann-Hurwitz for the tower of
//! curves, adjunction for the hyperplane slice of the wobbly divisor, and
//! the node/cusp bookkeeping that reconciles its normalization.
//!
//! ```bash
//! cargo run -p prymcalc --example genus_bookkeeping
//! ```

use prymcalc::curves::{
    adjunction_genus, normalization_genus, riemann_hurwitz, spectral_curve_over_line,
    standard_genus_suite, wobbly_section_counts, CoverSpec, PlaneCurveOnSurface,
};
use prymcalc::rat::Rat;

fn main() {
    // the tower: genus 2 base, its branched double cover, and the two
    // 16-sheeted etale covers
    for (spec, expected) in standard_genus_suite() {
        let genus = riemann_hurwitz(&spec).unwrap();
        println!(
            "{:<24} base g={} deg={} ram {:?} -> genus {genus} (expected {expected})",
            spec.name, spec.base_genus, spec.degree, spec.ram_indices
        );
    }

    // adjunction on the hyperplane slice: S = 8H with K = -H and H^3 = 4
    let slice = PlaneCurveOnSurface {
        canonical_coeff: Rat::int(-1),
        curve_coeff: Rat::int(8),
        hyperplane_square: Rat::int(4),
    };
    println!(
        "slice arithmetic genus = {}",
        adjunction_genus(&slice).unwrap()
    );

    // 48 nodes and 48 cusps bring 113 down to the genus 17 normalization
    let counts = wobbly_section_counts();
    println!(
        "section: g={} with {} nodes and {} cusps, normalization genus {}",
        counts.arithmetic_genus, counts.nodes, counts.cusps, counts.normalization
    );
    println!(
        "check: 113 - 48 - 48 = {}",
        normalization_genus(113, 48, 48).unwrap()
    );

    // the spectral curve over a general line: two derivations of genus 25
    let line_curve = spectral_curve_over_line();
    println!(
        "line curve: genus {} by adjunction-style count, {} by Riemann-Hurwitz, {} branch points",
        line_curve.genus_from_canonical, line_curve.genus_from_hurwitz, line_curve.branch_points
    );

    // a parity violation is rejected rather than rounded
    let bad = CoverSpec::new("bad-parity", 2, 2, &[2]);
    println!(
        "odd ramification total: {:?}",
        riemann_hurwitz(&bad).unwrap_err()
    );
}
