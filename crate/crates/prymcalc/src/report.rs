//! The verification registry: every closed-form value the engine rederives
//! is registered as a named check with a source tag, an expected value
//! frozen here, and a computed value produced by the engine. The runner
//! executes selected checks in registration order and renders text or
//! JSON reports.

use crate::chern::{
    bogomolov_delta, ch1_constraints, degree0_global_ch2, grr_ch, h_coefficient,
    kawamata_bookkeeping, level_has_integer_solution, mu_one_ch2, parabolic_ch1,
    sharp_length_bound, tacnode_lattice, tacnode_local_ch2, tacnode_pieces, weight_half_ch2,
    LineBundleClass, ParabolicFamily, ParabolicPiece,
};
use crate::curves::{riemann_hurwitz, spectral_curve_over_line, wobbly_section_counts, CoverSpec};
use crate::kummer::{enumerate_nodes, enumerate_tropes, trope_line_count, verify_16_6};
use crate::localforms::{
    base_algebra, build_local_matrices, critical_quadratic, is_logarithmic, root_cover_matrices,
    root_substitution, verify_derivation_identities, verify_full_higgs_closure,
};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::ring::GradedClass;
use crate::varieties::{e3_from_ruled_surface, BuiltinGeometry};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// One verification result.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let status = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} [{}]\n", r.id, r.citation));
            if r.pass {
                out.push_str(&format!("     value: {}\n", r.computed));
            } else {
                out.push_str(&format!("     expected: {}\n", r.expected));
                out.push_str(&format!("     computed: {}\n", r.computed));
            }
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// Inputs every check runs against: the geometry (built-in or loaded
/// from a config file) and the integer scan radius for extremum windows.
pub struct CheckContext<'a> {
    pub geometry: &'a BuiltinGeometry,
    pub scan: i64,
}

type CheckFn = Box<dyn Fn(&CheckContext) -> (String, String)>;

pub struct CheckDef {
    pub id: &'static str,
    pub citation: &'static str,
    run: CheckFn,
}

/// Simple glob with `*` matching any (possibly empty) substring.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn go(p: &[u8], t: &[u8]) -> bool {
        match p.first() {
            None => t.is_empty(),
            Some(b'*') => (0..=t.len()).any(|k| go(&p[1..], &t[k..])),
            Some(c) => t.first() == Some(c) && go(&p[1..], &t[1..]),
        }
    }
    go(pattern.as_bytes(), text.as_bytes())
}

fn check(
    id: &'static str,
    citation: &'static str,
    run: impl Fn(&CheckContext) -> (String, String) + 'static,
) -> CheckDef {
    CheckDef {
        id,
        citation,
        run: Box::new(run),
    }
}

/// "8H - 24d" from an H coefficient and a point-count polynomial.
fn h_plus_points(h: &Rat, points: &Poly) -> String {
    let p = points.to_string();
    match p.strip_prefix('-') {
        Some(rest) => format!("{h}H - {rest}"),
        None => format!("{h}H + {p}"),
    }
}

fn poly_a_plus_b(coeff_a: i64, coeff_b: i64, constant: i64) -> Poly {
    let mut p = Poly::var("a").scale(&Rat::int(coeff_a));
    p = &p + &Poly::var("b").scale(&Rat::int(coeff_b));
    &p + &Poly::int(constant)
}

/// The Chern character stated for the degree one pushforward:
/// 8 + (8a + 16b)H + (4a^2 + 16ab + 4b^2 - 12b - 2)H^2.
fn stated_deg1_ch(g: &BuiltinGeometry) -> GradedClass<Poly> {
    let a = Poly::var("a");
    let b = Poly::var("b");
    let h = g.x1.ring.gen_class::<Poly>("H");
    let ch1 = poly_a_plus_b(8, 16, 0);
    let ch2 = &(&(&a.pow(2).scale(&Rat::int(4)) + &(&a * &b).scale(&Rat::int(16)))
        + &b.pow(2).scale(&Rat::int(4)))
        - &(&b.scale(&Rat::int(12)) + &Poly::int(2));
    g.x1.ring
        .constant(Poly::int(8))
        .add(&h.scale(&ch1))
        .add(&h.pow(2).scale(&ch2))
}

/// The stated degree zero Chern character:
/// 8 + (8(a-2) + 16(b-1))H + 4(a^2 + 4ab - 2b^2 - 8a - 4b + 11)H^2.
fn stated_deg0_ch(g: &BuiltinGeometry) -> GradedClass<Poly> {
    let a = Poly::var("a");
    let b = Poly::var("b");
    let h = g.x0.ring.gen_class::<Poly>("H");
    let ch1 = poly_a_plus_b(8, 16, -8 * 2 - 16);
    let inner = &(&(&(&(&a.pow(2) + &(&a * &b).scale(&Rat::int(4)))
        - &b.pow(2).scale(&Rat::int(2)))
        - &a.scale(&Rat::int(8)))
        - &b.scale(&Rat::int(4)))
        + &Poly::int(11);
    g.x0.ring
        .constant(Poly::int(8))
        .add(&h.scale(&ch1))
        .add(&h.pow(2).scale(&inner.scale(&Rat::int(4))))
}

fn deg1_symbolic_bundle(g: &BuiltinGeometry) -> LineBundleClass<Poly> {
    let a = Poly::var("a");
    let b = Poly::var("b");
    let e = g.y1.ring.gen_class::<Poly>("E");
    let f = g.y1.ring.gen_class::<Poly>("F");
    LineBundleClass::new(f.scale(&a).add(&e.scale(&(&b + &Poly::one())))).unwrap()
}

fn deg0_symbolic_bundle(g: &BuiltinGeometry) -> LineBundleClass<Poly> {
    let a = Poly::var("a");
    let b = Poly::var("b");
    let e = g.y0.ring.gen_class::<Poly>("E");
    let f = g.y0.ring.gen_class::<Poly>("F");
    LineBundleClass::new(f.scale(&a).add(&e.scale(&b))).unwrap()
}

/// All registered checks, in their fixed order.
pub fn registry() -> Vec<CheckDef> {
    vec![
        check("deg1.triple_intersections", "intersections1", |ctx| {
            let g = ctx.geometry;
            let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
            let f: GradedClass<Rat> = g.y1.ring.gen_class("F");
            let combo = e
                .pow(3)
                .add(&e.pow(2).mul(&f).scale_rat(&Rat::int(2)))
                .add(&e.mul(&f.pow(2)));
            let expected = "F^3=32, EF^2=64, E^2F=32, E^3=-128, E^3+2E^2F+EF^2=0".to_string();
            let computed = format!(
                "F^3={}, EF^2={}, E^2F={}, E^3={}, E^3+2E^2F+EF^2={}",
                f.pow(3).integrate(),
                e.mul(&f.pow(2)).integrate(),
                e.pow(2).mul(&f).integrate(),
                e.pow(3).integrate(),
                combo.integrate()
            );
            (expected, computed)
        }),
        check("deg0.triple_intersections", "intersections0", |ctx| {
            let g = ctx.geometry;
            let e: GradedClass<Rat> = g.y0.ring.gen_class("E");
            let f: GradedClass<Rat> = g.y0.ring.gen_class("F");
            let expected = "F^3=8, EF^2=16, E^2F=-16, E^3=16".to_string();
            let computed = format!(
                "F^3={}, EF^2={}, E^2F={}, E^3={}",
                f.pow(3).integrate(),
                e.mul(&f.pow(2)).integrate(),
                e.pow(2).mul(&f).integrate(),
                e.pow(3).integrate()
            );
            (expected, computed)
        }),
        check("deg1.todd_inverse", "todd1", |ctx| {
            let g = ctx.geometry;
            let h: GradedClass<Rat> = g.x1.ring.gen_class("H");
            let td =
                g.x1.ring
                    .one()
                    .add(&h)
                    .add(&h.pow(2).scale_rat(&Rat::new(7, 12)));
            let inv =
                g.x1.ring
                    .one()
                    .sub(&h)
                    .add(&h.pow(2).scale_rat(&Rat::new(5, 12)));
            ("1".to_string(), td.mul(&inv).truncate_above(2).render())
        }),
        check("deg0.todd_inverse", "todd0", |ctx| {
            let g = ctx.geometry;
            let h: GradedClass<Rat> = g.x0.ring.gen_class("H");
            let td =
                g.x0.ring
                    .one()
                    .add(&h.scale_rat(&Rat::int(2)))
                    .add(&h.pow(2).scale_rat(&Rat::new(11, 6)));
            let inv =
                g.x0.ring
                    .one()
                    .sub(&h.scale_rat(&Rat::int(2)))
                    .add(&h.pow(2).scale_rat(&Rat::new(13, 6)));
            ("1".to_string(), td.mul(&inv).truncate_above(2).render())
        }),
        check("deg1.relative_todd", "todd1", |ctx| {
            let g = ctx.geometry;
            let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
            let f: GradedClass<Rat> = g.y1.ring.gen_class("F");
            let left =
                g.y1.ring
                    .one()
                    .sub(&f)
                    .add(&f.pow(2).scale_rat(&Rat::new(5, 12)));
            let right =
                g.y1.ring
                    .one()
                    .add(&e.scale_rat(&Rat::new(-1, 2)))
                    .add(&e.pow(2).add(&e.mul(&f)).scale_rat(&Rat::new(1, 9)));
            let expected = left.mul(&right).truncate_above(2).render();
            let computed = g.cover1.relative_todd.truncate_above(2).render();
            (expected, computed)
        }),
        check("deg1.cover_degree", "deg8c1", |ctx| {
            let g = ctx.geometry;
            let one: GradedClass<Rat> = g.y1.ring.one();
            ("8".to_string(), g.cover1.pushforward(&one).render())
        }),
        check("deg0.cover_degree", "deg8c1", |ctx| {
            let g = ctx.geometry;
            let one: GradedClass<Rat> = g.y0.ring.one();
            ("8".to_string(), g.cover0.pushforward(&one).render())
        }),
        check("deg1.wobbly_class", "wobbly8h", |ctx| {
            let g = ctx.geometry;
            // the exceptional divisor double covers the wobbly divisor 8H
            let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
            ("16H".to_string(), g.cover1.pushforward(&e).render())
        }),
        check("deg1.e3_ruled_surface", "intersections1", |ctx| {
            let g = ctx.geometry;
            let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
            let expected = format!("{}", e.pow(3).integrate());
            let computed = format!("{}", e3_from_ruled_surface());
            (expected, computed)
        }),
        check("deg1.ch_Vab", "chv", |ctx| {
            let g = ctx.geometry;
            let expected = stated_deg1_ch(g).render();
            let computed = grr_ch(&g.cover1, &deg1_symbolic_bundle(g))
                .truncate_above(2)
                .render();
            (expected, computed)
        }),
        check("deg1.parabolic_ch1", "par-ch1-average", |ctx| {
            let g = ctx.geometry;
            let a = Poly::var("a");
            let b = Poly::var("b");
            let e = g.y1.ring.gen_class::<Poly>("E");
            let f = g.y1.ring.gen_class::<Poly>("F");
            let family = ParabolicFamily::new(vec![
                ParabolicPiece {
                    level: Rat::zero(),
                    bundle: LineBundleClass::new(f.scale(&a).add(&e.scale(&b))).unwrap(),
                },
                ParabolicPiece {
                    level: Rat::new(1, 2),
                    bundle: LineBundleClass::new(f.scale(&a).add(&e.scale(&(&b + &Poly::one()))))
                        .unwrap(),
                },
            ])
            .unwrap();
            let par = parabolic_ch1(&family, &g.cover1);
            let at_10 = h_coefficient(&par, 1).eval(&BTreeMap::from([
                ("a".to_string(), Rat::int(1)),
                ("b".to_string(), Rat::zero()),
            ]));
            let h = g.x1.ring.gen_class::<Poly>("H");
            let expected_class = h.scale(&poly_a_plus_b(8, 16, -8));
            (
                format!("{}; 0 at (a,b)=(1,0)", expected_class.render()),
                format!("{}; {} at (a,b)=(1,0)", par.render(), at_10),
            )
        }),
        check("deg1.delta_invariant", "delta-summary", |ctx| {
            let g = ctx.geometry;
            let b = Poly::var("b");
            let e = g.y1.ring.gen_class::<Poly>("E");
            let ch = grr_ch(
                &g.cover1,
                &LineBundleClass::new(e.scale(&(&b + &Poly::one()))).unwrap(),
            );
            let delta = bogomolov_delta(&ch);
            let eval = |k: i64| delta.eval(&BTreeMap::from([("b".to_string(), Rat::int(k))]));
            let expected = "12b^2 + 12b + 2; minimum 2 at b in {-1,0}".to_string();
            let minimum = eval(0).min(eval(-1));
            let interior_min = (-ctx.scan..=ctx.scan).all(|k| eval(k) >= minimum);
            let computed = format!(
                "{delta}; minimum {} at b in {{-1,0}}{}",
                minimum,
                if eval(0) == eval(-1) && interior_min {
                    ""
                } else {
                    " (not symmetric)"
                }
            );
            (expected, computed)
        }),
        check("deg1.kawamata_chain", "kawamata-cover", |ctx| {
            let g = ctx.geometry;
            let r = kawamata_bookkeeping(&g.cover1);
            let expected = "triple=8d, double=12d, R^2=64d, deg N=-8d, ch(U#)=8H - 24d, ch(V'_Z)=8(1 - H + H^2/2)".to_string();
            let flat = if r.projectively_flat {
                "8(1 - H + H^2/2)".to_string()
            } else {
                format!(
                    "rank {} + {}H + {} points",
                    r.ch_vz_prime.0, r.ch_vz_prime.1, r.ch_vz_prime.2
                )
            };
            let computed = format!(
                "triple={}, double={}, R^2={}, deg N={}, ch(U#)={}, ch(V'_Z)={}",
                r.triple_points,
                r.double_points,
                r.r_squared,
                r.deg_normal,
                h_plus_points(&r.ch_u_sharp_h, &r.ch_u_sharp_points),
                flat
            );
            (expected, computed)
        }),
        check("deg1.sharp_length", "sharp", |ctx| {
            let g = ctx.geometry;
            let ok: Vec<u64> = (0..=5)
                .filter(|&l| !sharp_length_bound(&g.cover1, l).violates_bogomolov_gieseker)
                .collect();
            (
                "only ell=0 admissible".to_string(),
                if ok == vec![0] {
                    "only ell=0 admissible".to_string()
                } else {
                    format!("admissible ell: {ok:?}")
                },
            )
        }),
        check("deg0.ch_L", "piLzero", |ctx| {
            let g = ctx.geometry;
            let expected = stated_deg0_ch(g).render();
            let computed = grr_ch(&g.cover0, &deg0_symbolic_bundle(g))
                .truncate_above(2)
                .render();
            (expected, computed)
        }),
        check("deg0.ch2_constrained", "piLzerocor", |ctx| {
            let g = ctx.geometry;
            let m = Poly::var("m");
            let e = g.y0.ring.gen_class::<Poly>("E");
            let f = g.y0.ring.gen_class::<Poly>("F");
            let divisor = e
                .add(&f.scale(&Poly::int(2)))
                .add(&e.sub(&f.scale(&Poly::int(2))).scale(&m));
            let ch = grr_ch(&g.cover0, &LineBundleClass::new(divisor).unwrap());
            let h = g.x0.ring.gen_class::<Poly>("H");
            let expected_class = h
                .pow(2)
                .scale(&(&m.pow(2).scale(&Rat::int(-24)) + &Poly::int(4)));
            let ch1 = ch.graded_part(1);
            (
                format!("ch1=0, ch2={}", expected_class.render()),
                format!("ch1={}, ch2={}", ch1.render(), ch.graded_part(2).render()),
            )
        }),
        check("deg0.ch2_extremum", "extremalzerocor", |ctx| {
            let g = ctx.geometry;
            let balance = degree0_global_ch2(&g.cover0, 0);
            let mut is_max = true;
            for k in -ctx.scan..=ctx.scan {
                if degree0_global_ch2(&g.cover0, k).raw_ch2 > balance.raw_ch2 {
                    is_max = false;
                }
            }
            (
                "4 at m=0, maximal over the integers".to_string(),
                format!(
                    "{} at m=0, {}",
                    balance.raw_ch2,
                    if is_max {
                        "maximal over the integers"
                    } else {
                        "not maximal"
                    }
                ),
            )
        }),
        check("tacnode.local", "tacnode-local", |_| {
            let lattice = tacnode_lattice();
            let value = tacnode_local_ch2(&lattice, &tacnode_pieces(&lattice));
            ("-1/8".to_string(), value.to_string())
        }),
        check("tacnode.global", "degzerothm", |ctx| {
            let g = ctx.geometry;
            let balance = degree0_global_ch2(&g.cover0, 0);
            (
                "4 - 4 = 0".to_string(),
                format!(
                    "{} {} = {}",
                    balance.raw_ch2,
                    if balance.correction.is_negative() {
                        format!("- {}", balance.correction.abs())
                    } else {
                        format!("+ {}", balance.correction)
                    },
                    balance.total
                ),
            )
        }),
        check("tacnode.global_off_extremum", "piLzerocor", |ctx| {
            let g = ctx.geometry;
            let at1 = degree0_global_ch2(&g.cover0, 1);
            let atm1 = degree0_global_ch2(&g.cover0, -1);
            (
                "-24 at m=1 and -24 at m=-1".to_string(),
                format!("{} at m=1 and {} at m=-1", at1.total, atm1.total),
            )
        }),
        check("uniq.ch1_constraints", "parchoices", |ctx| {
            let g = ctx.geometry;
            let c = ch1_constraints(&g.cover1);
            // levels in (0,1] with denominator up to 4 admitting integral (a,b)
            let mut admissible = Vec::new();
            for q in 1..=4i64 {
                for p in 1..=q {
                    let mu = Rat::new(p, q);
                    if level_has_integer_solution(&mu) && !admissible.contains(&mu) {
                        admissible.push(mu);
                    }
                }
            }
            admissible.sort();
            let levels = admissible
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            (
                "relation 32a + 64b - 64mu; a=-2b + 1 at mu=1/2; a=-2b + 2 at mu=1; levels 1/2, 1"
                    .to_string(),
                format!(
                    "relation {}; a={} at mu=1/2; a={} at mu=1; levels {}",
                    c.relation, c.a_for_mu_half, c.a_for_mu_one, levels
                ),
            )
        }),
        check("uniq.par_ch2", "uniqueness-ch2", |ctx| {
            let g = ctx.geometry;
            let r = weight_half_ch2(&g.cover1);
            (
                "c=-48b^2 + 48b, delta c=-96b, parabolic=-48b^2, extremum b=0".to_string(),
                format!(
                    "c={}, delta c={}, parabolic={}, extremum b={}",
                    r.c, r.delta_c, r.par_ch2, r.extremum
                ),
            )
        }),
        check("uniq.mu1_ch2", "mu-one-lemma", |ctx| {
            let g = ctx.geometry;
            let r = mu_one_ch2(&g.cover1);
            let square = if r.completed_square_matches {
                "-48(m + 1/2)^2 + 4".to_string()
            } else {
                "completed square mismatch".to_string()
            };
            let argmax = r
                .argmax
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",");
            (
                "-48m^2 - 48m - 8 = -48(m + 1/2)^2 + 4, max -8 at m in {-1,0}".to_string(),
                format!(
                    "{} = {}, max {} at m in {{{argmax}}}",
                    r.h_ch2, square, r.max_over_integers
                ),
            )
        }),
        check("genus.spectral_double_cover", "prop:hitchin.map", |_| {
            let spec = CoverSpec::new("spectral", 2, 2, &[2, 2, 2, 2]);
            (
                "5".to_string(),
                format!("{}", riemann_hurwitz(&spec).unwrap()),
            )
        }),
        check("genus.etale_covers", "geomw1", |_| {
            let g17 = riemann_hurwitz(&CoverSpec::new("a", 2, 16, &[])).unwrap();
            let g65 = riemann_hurwitz(&CoverSpec::new("b", 5, 16, &[])).unwrap();
            ("17, 65".to_string(), format!("{g17}, {g65}"))
        }),
        check("genus.trigonal_branch", "ellW", |_| {
            // 8 simple branch points on the trigonal cover of a line give
            // back the base genus 2
            let spec = CoverSpec::new("trigonal", 0, 3, &[2; 8]);
            (
                "genus 2 from 8 branch points".to_string(),
                format!(
                    "genus {} from 8 branch points",
                    riemann_hurwitz(&spec).unwrap()
                ),
            )
        }),
        check("genus.wobbly_section", "cusp-locus", |_| {
            let c = wobbly_section_counts();
            (
                "g=113, 48 nodes, 48 cusps, normalization 17".to_string(),
                format!(
                    "g={}, {} nodes, {} cusps, normalization {}",
                    c.arithmetic_genus, c.nodes, c.cusps, c.normalization
                ),
            )
        }),
        check("genus.spectral_line", "hlhyperplane", |_| {
            let c = spectral_curve_over_line();
            (
                "genus 25 = 25, 64 branch points".to_string(),
                format!(
                    "genus {} = {}, {} branch points",
                    c.genus_from_canonical, c.genus_from_hurwitz, c.branch_points
                ),
            )
        }),
        check("genus.normal_bundle_degree", "todd1", |ctx| {
            let g = ctx.geometry;
            // deg N = 2g - 2 at genus 65 agrees with -E^3
            let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
            let by_genus = 2 * 65 - 2;
            let by_e3 = -&e.pow(3).integrate();
            ("128 = 128".to_string(), format!("{by_genus} = {by_e3}"))
        }),
        check("local.derivation_identities", "coordcalcs", |_| {
            let m = build_local_matrices();
            let checks = verify_derivation_identities(&m);
            let passed = checks.iter().filter(|c| c.pass).count();
            let failures: Vec<String> = checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} at {:?}", c.name, c.mismatch))
                .collect();
            (
                format!("{} identities hold", checks.len()),
                if failures.is_empty() {
                    format!("{passed} identities hold")
                } else {
                    failures.join("; ")
                },
            )
        }),
        check("local.substitution", "root-cover", |_| {
            let base = base_algebra();
            let sub = root_substitution();
            let delta = base.from_poly(base.unit_poly("Delta").unwrap().clone());
            let image = sub.apply_expr(&delta).unwrap();
            let expected = sub
                .target
                .monomial(Rat::one(), &[("alpha", Rat::int(4)), ("beta", Rat::int(4))])
                .mul(
                    &sub.target
                        .from_poly(sub.target.unit_poly("beta4m1").unwrap().clone()),
                );
            (
                "Delta = alpha^4 beta^4 (beta^4 - 1)".to_string(),
                if image == expected {
                    "Delta = alpha^4 beta^4 (beta^4 - 1)".to_string()
                } else {
                    format!("Delta = {image}")
                },
            )
        }),
        check("local.star_pole", "root-cover", |_| {
            let m = root_cover_matrices().unwrap();
            let report = is_logarithmic("du", &m.du, &["alpha", "beta"]);
            let failures: Vec<String> = report
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "({},{}) order {} along {}",
                        f.row + 1,
                        f.col + 1,
                        f.order,
                        f.divisor
                    )
                })
                .collect();
            ("(4,1) order 2 along alpha".to_string(), failures.join("; "))
        }),
        check("local.higgs_closure", "root-cover", |_| {
            let reports = verify_full_higgs_closure().unwrap();
            let passing = reports.iter().filter(|r| r.passes()).count();
            let failing: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passes())
                .map(|r| r.matrix_name.as_str())
                .collect();
            (
                "8 of 8 products logarithmic".to_string(),
                if failing.is_empty() {
                    format!("{passing} of {} products logarithmic", reports.len())
                } else {
                    format!("failing: {failing:?}")
                },
            )
        }),
        check("local.critical_quadratic", "critical-locus", |_| {
            let branches: Vec<String> = [-3i64, -2, -1, 0, 1, 2, 3]
                .iter()
                .map(|&r| {
                    let q = critical_quadratic(&Rat::int(r), &Rat::one()).unwrap();
                    format!("{r}:{}", q.branch_count)
                })
                .collect();
            let disc = critical_quadratic(&Rat::int(1), &Rat::one())
                .unwrap()
                .discriminant;
            (
                format!(
                    "-3:2, -2:1, -1:2, 0:1, 1:2, 2:1, 3:2; discriminant {} at c=1",
                    Rat::int(-3)
                ),
                format!("{}; discriminant {disc} at c=1", branches.join(", ")),
            )
        }),
        check("kummer.counts", "wobblyc0", |_| {
            (
                "16 nodes, 16 tropes".to_string(),
                format!(
                    "{} nodes, {} tropes",
                    enumerate_nodes().len(),
                    enumerate_tropes().len()
                ),
            )
        }),
        check("kummer.incidence", "sixteensix", |_| {
            let s = verify_16_6();
            let rows_ok = s.row_sums.iter().all(|&x| x == 6);
            let cols_ok = s.col_sums.iter().all(|&x| x == 6);
            (
                "row sums all 6, column sums all 6, 96 incidences".to_string(),
                format!(
                    "row sums {}, column sums {}, {} incidences",
                    if rows_ok { "all 6" } else { "vary" },
                    if cols_ok { "all 6" } else { "vary" },
                    s.total_incidences
                ),
            )
        }),
        check("kummer.matrix", "sixteensix", |_| {
            // the symmetric-difference rule against the classical
            // plane-by-plane description
            let expected =
                crate::kummer::render_matrix(&crate::kummer::incidence_matrix_from_case_analysis());
            let computed = crate::kummer::render_matrix(&crate::kummer::incidence_matrix());
            (expected, computed)
        }),
        check("kummer.trope_lines", "trope-pencil", |_| {
            let all_good = enumerate_tropes().iter().all(|t| {
                let c = trope_line_count(t);
                c.incident_nodes == 6 && c.lines == 15 && c.pair_map_closed
            });
            (
                "15 lines per trope, pair moves stay tropes".to_string(),
                if all_good {
                    "15 lines per trope, pair moves stay tropes".to_string()
                } else {
                    "counts vary".to_string()
                },
            )
        }),
        check("kummer.translation_invariance", "heisenberg", |_| {
            let nodes = enumerate_nodes();
            let tropes = enumerate_tropes();
            let invariant = nodes.iter().all(|g0| {
                nodes.iter().all(|n| {
                    tropes.iter().all(|t| {
                        crate::kummer::incident(n, t)
                            == crate::kummer::incident(
                                &crate::kummer::Node(n.0.sym_diff(&g0.0)),
                                &crate::kummer::Trope(t.0.sym_diff(&g0.0)),
                            )
                    })
                })
            });
            (
                "incidence invariant under all 16 translations".to_string(),
                if invariant {
                    "incidence invariant under all 16 translations".to_string()
                } else {
                    "invariance fails".to_string()
                },
            )
        }),
        check("config.degree_relation", "deg8c1", |ctx| {
            let g = ctx.geometry;
            (
                "F^3 = degree x H^3 for both covers".to_string(),
                if g.cover1.degree_relation_holds() && g.cover0.degree_relation_holds() {
                    "F^3 = degree x H^3 for both covers".to_string()
                } else {
                    format!(
                        "cover1 F^3={}, cover0 F^3={}",
                        g.cover1.pullback_h.pow(3).integrate(),
                        g.cover0.pullback_h.pow(3).integrate()
                    )
                },
            )
        }),
    ]
}

/// Sanity used by tests and the runner: registered ids are unique.
pub fn ids_unique(defs: &[CheckDef]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    defs.iter().all(|d| seen.insert(d.id))
}

pub fn run(geometry: &BuiltinGeometry, pattern: &str) -> Option<Report> {
    run_with_scan(geometry, pattern, 5)
}

pub fn run_with_scan(geometry: &BuiltinGeometry, pattern: &str, scan: i64) -> Option<Report> {
    let ctx = CheckContext { geometry, scan };
    let defs = registry();
    debug_assert!(ids_unique(&defs));
    let selected: Vec<&CheckDef> = defs.iter().filter(|d| glob_match(pattern, d.id)).collect();
    if selected.is_empty() {
        return None;
    }
    let mut records = Vec::with_capacity(selected.len());
    for def in selected {
        let start = Instant::now();
        let (expected, computed) = (def.run)(&ctx);
        let runtime_ms = start.elapsed().as_millis() as u64;
        let pass = expected == computed;
        records.push(CheckRecord {
            id: def.id.to_string(),
            citation: def.citation.to_string(),
            expected,
            computed,
            pass,
            runtime_ms,
        });
    }
    let passed = records.iter().filter(|r| r.pass).count();
    let summary = Summary {
        total: records.len(),
        passed,
        failed: records.len() - passed,
    };
    Some(Report { summary, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::builtin_presentations;

    #[test]
    fn all_checks_pass_on_builtin_data() {
        let g = builtin_presentations();
        let report = run(&g, "*").unwrap();
        for r in &report.records {
            assert!(
                r.pass,
                "{}: expected {:?}, computed {:?}",
                r.id, r.expected, r.computed
            );
        }
        assert_eq!(report.summary.failed, 0);
        assert!(report.summary.total >= 30);
    }

    #[test]
    fn ids_are_unique_and_globs_select() {
        let defs = registry();
        assert!(ids_unique(&defs));
        let g = builtin_presentations();
        let deg1 = run(&g, "deg1.*").unwrap();
        assert!(deg1.records.iter().all(|r| r.id.starts_with("deg1.")));
        assert!(deg1.records.iter().any(|r| r.id == "deg1.ch_Vab"));
        assert!(run(&g, "no.such.check").is_none());
        let exact = run(&g, "tacnode.local").unwrap();
        assert_eq!(exact.records.len(), 1);
        assert_eq!(exact.records[0].expected, "-1/8");
    }

    #[test]
    fn glob_semantics() {
        assert!(glob_match("*", "anything"));
        assert!(glob_match("deg1.*", "deg1.ch_Vab"));
        assert!(!glob_match("deg1.*", "deg0.ch_L"));
        assert!(glob_match("*ch2*", "uniq.par_ch2"));
        assert!(glob_match("tacnode.local", "tacnode.local"));
        assert!(!glob_match("tacnode.local", "tacnode.local_x"));
    }

    #[test]
    fn json_shape_and_determinism() {
        let g = builtin_presentations();
        let a = run(&g, "kummer.*").unwrap();
        let b = run(&g, "kummer.*").unwrap();
        let strip = |r: &Report| {
            let mut r = r.clone();
            for rec in &mut r.records {
                rec.runtime_ms = 0;
            }
            r
        };
        assert_eq!(strip(&a).to_json(), strip(&b).to_json());
        let json = a.to_json();
        assert!(json.contains("\"summary\""));
        assert!(json.contains("\"records\""));
        assert!(json.contains("\"citation\""));
        assert!(json.contains("\"runtime_ms\""));
    }

    #[test]
    fn perturbed_table_fails_sensitive_checks() {
        use crate::config;
        let text = config::dump_builtin().replace("pair F^3 = 32", "pair F^3 = 33");
        let parsed = config::parse(&text).unwrap();
        let geometry = parsed.into_geometry().unwrap();
        let report = run(&geometry, "*").unwrap();
        let by_id = |id: &str| report.records.iter().find(|r| r.id == id).unwrap();
        assert!(
            !by_id("deg1.ch_Vab").pass,
            "perturbation must break the GRR identity"
        );
        assert!(!by_id("config.degree_relation").pass);
        assert!(!by_id("deg1.cover_degree").pass);
        // untouched parts still pass
        assert!(by_id("kummer.incidence").pass);
        assert!(by_id("deg0.ch_L").pass);
    }
}
