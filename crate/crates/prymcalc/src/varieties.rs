//! Built-in presentations of the four ambient spaces and their spectral
//! covers, together with the finite-cover pushforward.
//!
//! The degree one side is the intersection of two quadrics in P^5 with its
//! degree 8 covering by a blown-up abelian threefold; the degree zero side
//! is P^3 covered by an abelian threefold blown up at 16 points. All the
//! intersection numbers and Chern data are fixed inputs here; everything
//! downstream is computed from them.

use crate::lattice::SurfaceLattice;
use crate::rat::Rat;
use crate::ring::{todd_from_chern, ChowPresentation, Coeff, GradedClass, RingError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("todd class of {0} does not match its Chern data")]
    ToddMismatch(String),
    #[error("pullback class of cover {0} must be homogeneous of degree 1")]
    BadPullback(String),
    #[error("cover {name}: pullback^dim integrates to {found}, expected degree x target degree = {expected}")]
    DegreeMismatch {
        name: String,
        found: Box<Rat>,
        expected: Box<Rat>,
    },
}

/// A variety with its ring presentation and tangent Chern data.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietyPresentation {
    pub name: String,
    pub ring: ChowPresentation,
    pub tangent_c1: GradedClass<Rat>,
    pub tangent_c2: GradedClass<Rat>,
    pub todd: GradedClass<Rat>,
}

impl VarietyPresentation {
    pub fn new(
        name: &str,
        ring: ChowPresentation,
        tangent_c1: GradedClass<Rat>,
        tangent_c2: GradedClass<Rat>,
    ) -> Result<Self, VarietyError> {
        let todd = todd_from_chern(&tangent_c1, &tangent_c2)?;
        Ok(VarietyPresentation {
            name: name.to_string(),
            ring,
            tangent_c1,
            tangent_c2,
            todd,
        })
    }
}

/// A finite cover of one presentation by another, with the pullback of the
/// target hyperplane class and the relative Todd class.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverPresentation {
    pub name: String,
    pub source: VarietyPresentation,
    pub target: VarietyPresentation,
    pub degree: i64,
    pub pullback_h: GradedClass<Rat>,
    pub relative_todd: GradedClass<Rat>,
}

impl CoverPresentation {
    pub fn new(
        name: &str,
        source: VarietyPresentation,
        target: VarietyPresentation,
        degree: i64,
        pullback_h: GradedClass<Rat>,
    ) -> Result<Self, VarietyError> {
        if !pullback_h.is_homogeneous(1) || pullback_h.is_zero() {
            return Err(VarietyError::BadPullback(name.to_string()));
        }
        let dim = source.ring.dimension();
        let found = pullback_h.pow(dim).integrate();
        let target_top = target_hyperplane(&target).pow(dim).integrate();
        let expected = &Rat::int(degree) * &target_top;
        if found != expected {
            return Err(VarietyError::DegreeMismatch {
                name: name.to_string(),
                found: Box::new(found),
                expected: Box::new(expected),
            });
        }
        Self::from_config_parts(name, source, target, degree, pullback_h)
    }

    /// Build a cover without enforcing the degree relation, so that a
    /// deliberately perturbed intersection table still loads and shows up
    /// as failing checks downstream.
    pub fn from_config_parts(
        name: &str,
        source: VarietyPresentation,
        target: VarietyPresentation,
        degree: i64,
        pullback_h: GradedClass<Rat>,
    ) -> Result<Self, VarietyError> {
        if !pullback_h.is_homogeneous(1) || pullback_h.is_zero() {
            return Err(VarietyError::BadPullback(name.to_string()));
        }
        let target_todd_inv = target.todd.inverse_unit()?;
        let relative_todd =
            source
                .todd
                .mul(&pullback_along(&pullback_h, &target, &target_todd_inv));
        Ok(CoverPresentation {
            name: name.to_string(),
            source,
            target,
            degree,
            pullback_h,
            relative_todd,
        })
    }

    /// The degree relation integrate(F^dim) = degree x integrate(H^dim).
    pub fn degree_relation_holds(&self) -> bool {
        let dim = self.source.ring.dimension();
        let found = self.pullback_h.pow(dim).integrate();
        let target_top = target_hyperplane(&self.target).pow(dim).integrate();
        found == &Rat::int(self.degree) * &target_top
    }

    /// Pull a class back along the cover by substituting the pullback of
    /// the target hyperplane for each power of it.
    pub fn pullback<S: Coeff>(&self, class_on_target: &GradedClass<S>) -> GradedClass<S> {
        pullback_along(&self.pullback_h, &self.target, class_on_target)
    }

    /// Pushforward by top-pairing duality: the degree-k part of the image
    /// has H^k coefficient integrate(a_k . F^(dim-k)) / integrate(H^dim).
    pub fn pushforward<S: Coeff>(&self, class_on_source: &GradedClass<S>) -> GradedClass<S> {
        assert!(
            class_on_source.ring() == &self.source.ring,
            "pushforward argument lives on the wrong ring"
        );
        let dim = self.source.ring.dimension();
        let h: GradedClass<S> =
            target_hyperplane(&self.target).map_coeffs(|c| S::from_rat(c.clone()));
        let f: GradedClass<S> = self.pullback_h.map_coeffs(|c| S::from_rat(c.clone()));
        let h_top = target_hyperplane(&self.target).pow(dim).integrate();
        let mut out = self.target.ring.zero();
        for k in 0..=dim {
            let part = class_on_source.graded_part(k);
            if part.is_zero() {
                continue;
            }
            let coeff = part
                .mul(&f.pow(dim - k))
                .integrate()
                .mul_rat(&h_top.recip());
            out = out.add(&h.pow(k).scale(&coeff));
        }
        out
    }
}

fn hyperplane_name(v: &VarietyPresentation) -> &str {
    // X rings are generated by the hyperplane class H
    &v.ring.generators()[0]
}

fn target_hyperplane(v: &VarietyPresentation) -> GradedClass<Rat> {
    v.ring.gen_class(hyperplane_name(v))
}

fn pullback_along<S: Coeff>(
    pullback_h: &GradedClass<Rat>,
    target: &VarietyPresentation,
    class_on_target: &GradedClass<S>,
) -> GradedClass<S> {
    assert!(
        class_on_target.ring() == &target.ring,
        "pullback argument lives on the wrong ring"
    );
    let h_idx = target
        .ring
        .generator_index(hyperplane_name(target))
        .expect("target hyperplane generator");
    let f: GradedClass<S> = pullback_h.map_coeffs(|c| S::from_rat(c.clone()));
    let mut out = f.ring().zero();
    for (m, c) in class_on_target.terms() {
        let k = m.0[h_idx];
        out = out.add(&f.pow(k).scale(c));
    }
    out
}

/// The four presentations with their two covers.
#[derive(Debug, Clone)]
pub struct BuiltinGeometry {
    pub x1: VarietyPresentation,
    pub y1: VarietyPresentation,
    pub x0: VarietyPresentation,
    pub y0: VarietyPresentation,
    pub cover1: CoverPresentation,
    pub cover0: CoverPresentation,
}

/// The built-in data:
///   X1: degree 4 threefold in P^5, H^3 = 4, c1 = 2H, c2 = 3H^2;
///   Y1: blow-up of an abelian threefold along a curve,
///       F^3 = 32, EF^2 = 64, E^2F = 32, E^3 = -128,
///       c1 = -E, c2 = (E^2 + 4EF)/3;
///   X0: P^3, H^3 = 1, c1 = 4H, c2 = 6H^2;
///   Y0: blow-up of an abelian threefold at 16 points,
///       F^3 = 8, EF^2 = 16, E^2F = -16, E^3 = 16, c1 = -2E, c2 = 0;
/// with both covers of degree 8.
pub fn builtin_presentations() -> BuiltinGeometry {
    let x1_ring = ChowPresentation::new(&["H"], 3, &[("H^3", Rat::int(4))]).unwrap();
    let h1: GradedClass<Rat> = x1_ring.gen_class("H");
    let x1 = VarietyPresentation::new(
        "X1",
        x1_ring.clone(),
        h1.scale_rat(&Rat::int(2)),
        h1.pow(2).scale_rat(&Rat::int(3)),
    )
    .unwrap();

    let y1_ring = ChowPresentation::new(
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
    let e1: GradedClass<Rat> = y1_ring.gen_class("E");
    let f1: GradedClass<Rat> = y1_ring.gen_class("F");
    let y1 = VarietyPresentation::new(
        "Y1",
        y1_ring.clone(),
        e1.neg(),
        e1.pow(2)
            .add(&e1.mul(&f1).scale_rat(&Rat::int(4)))
            .scale_rat(&Rat::new(1, 3)),
    )
    .unwrap();

    let x0_ring = ChowPresentation::new(&["H"], 3, &[("H^3", Rat::int(1))]).unwrap();
    let h0: GradedClass<Rat> = x0_ring.gen_class("H");
    let x0 = VarietyPresentation::new(
        "X0",
        x0_ring.clone(),
        h0.scale_rat(&Rat::int(4)),
        h0.pow(2).scale_rat(&Rat::int(6)),
    )
    .unwrap();

    let y0_ring = ChowPresentation::new(
        &["E", "F"],
        3,
        &[
            ("F^3", Rat::int(8)),
            ("EF^2", Rat::int(16)),
            ("E^2F", Rat::int(-16)),
            ("E^3", Rat::int(16)),
        ],
    )
    .unwrap();
    let e0: GradedClass<Rat> = y0_ring.gen_class("E");
    let y0 = VarietyPresentation::new(
        "Y0",
        y0_ring.clone(),
        e0.scale_rat(&Rat::int(-2)),
        y0_ring.zero(),
    )
    .unwrap();

    let cover1 =
        CoverPresentation::new("f1", y1.clone(), x1.clone(), 8, y1_ring.gen_class("F")).unwrap();
    let cover0 =
        CoverPresentation::new("f0", y0.clone(), x0.clone(), 8, y0_ring.gen_class("F")).unwrap();

    BuiltinGeometry {
        x1,
        y1,
        x0,
        y0,
        cover1,
        cover0,
    }
}

/// The exceptional divisor of the degree one spectral cover is a ruled
/// surface over a genus 65 curve; its self-intersection class is
/// 64·fib - c in the standard rank-2 lattice, giving E^3 = (64 fib - c)^2.
pub fn e3_from_ruled_surface() -> Rat {
    let lattice = SurfaceLattice::ruled_surface();
    let cls = lattice
        .class(&[("fib", Rat::int(64)), ("c", Rat::int(-1))])
        .unwrap();
    lattice.self_intersection(&cls)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables() {
        let g = builtin_presentations();
        let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
        let f: GradedClass<Rat> = g.y1.ring.gen_class("F");
        assert_eq!(f.pow(3).integrate(), Rat::int(32));
        assert_eq!(e.mul(&f.pow(2)).integrate(), Rat::int(64));
        assert_eq!(e.pow(2).mul(&f).integrate(), Rat::int(32));
        assert_eq!(e.pow(3).integrate(), Rat::int(-128));

        let e0: GradedClass<Rat> = g.y0.ring.gen_class("E");
        let f0: GradedClass<Rat> = g.y0.ring.gen_class("F");
        assert_eq!(f0.pow(3).integrate(), Rat::int(8));
        assert_eq!(e0.mul(&f0.pow(2)).integrate(), Rat::int(16));
        assert_eq!(e0.pow(2).mul(&f0).integrate(), Rat::int(-16));
        assert_eq!(e0.pow(3).integrate(), Rat::int(16));
    }

    #[test]
    fn todd_classes_match_stated_forms() {
        let g = builtin_presentations();
        assert_eq!(g.x1.todd.render(), "1 + H + 7/12H^2");
        assert_eq!(g.x0.todd.render(), "1 + 2H + 11/6H^2");
        let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
        let f: GradedClass<Rat> = g.y1.ring.gen_class("F");
        // td(TY1) = 1 - E/2 + (E^2 + EF)/9
        let expected =
            g.y1.ring
                .one()
                .add(&e.scale_rat(&Rat::new(-1, 2)))
                .add(&e.pow(2).add(&e.mul(&f)).scale_rat(&Rat::new(1, 9)));
        assert_eq!(g.y1.todd, expected);
        // td(TY0) = 1 - E + E^2/3
        let e0: GradedClass<Rat> = g.y0.ring.gen_class("E");
        let expected0 =
            g.y0.ring
                .one()
                .add(&e0.neg())
                .add(&e0.pow(2).scale_rat(&Rat::new(1, 3)));
        assert_eq!(g.y0.todd, expected0);
    }

    #[test]
    fn relative_todd_is_product_of_stated_factors() {
        let g = builtin_presentations();
        for cover in [&g.cover1, &g.cover0] {
            let product = cover
                .source
                .todd
                .mul(&cover.pullback(&cover.target.todd.inverse_unit().unwrap()));
            assert_eq!(cover.relative_todd, product);
        }
        // degree 1: (1 - F + 5F^2/12)(1 - E/2 + (E^2+EF)/9), through degree 2
        let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
        let f: GradedClass<Rat> = g.y1.ring.gen_class("F");
        let left =
            g.y1.ring
                .one()
                .add(&f.neg())
                .add(&f.pow(2).scale_rat(&Rat::new(5, 12)));
        let right =
            g.y1.ring
                .one()
                .add(&e.scale_rat(&Rat::new(-1, 2)))
                .add(&e.pow(2).add(&e.mul(&f)).scale_rat(&Rat::new(1, 9)));
        assert_eq!(
            g.cover1.relative_todd.truncate_above(2),
            left.mul(&right).truncate_above(2)
        );
    }

    #[test]
    fn pushforward_examples() {
        let g = builtin_presentations();
        let one_y1: GradedClass<Rat> = g.y1.ring.one();
        assert_eq!(g.cover1.pushforward(&one_y1).render(), "8");
        let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
        // F^2.E = 64, H^3 = 4, so f(E) = 16H = 2 x the 8H divisor class
        assert_eq!(g.cover1.pushforward(&e).render(), "16H");
        let e0: GradedClass<Rat> = g.y0.ring.gen_class("E");
        assert_eq!(g.cover0.pushforward(&e0).render(), "16H");
    }

    #[test]
    fn e3_check() {
        assert_eq!(e3_from_ruled_surface(), Rat::int(-128));
        let g = builtin_presentations();
        let e: GradedClass<Rat> = g.y1.ring.gen_class("E");
        assert_eq!(e.pow(3).integrate(), e3_from_ruled_surface());
        // delta = deg N = 2g-2 at g = 65 agrees with -E^3
        assert_eq!(Rat::int(2 * 65 - 2), -&e.pow(3).integrate());
    }

    #[test]
    fn projection_formula_on_monomials() {
        let g = builtin_presentations();
        for cover in [&g.cover1, &g.cover0] {
            let h: GradedClass<Rat> = cover.target.ring.gen_class("H");
            let e: GradedClass<Rat> = cover.source.ring.gen_class("E");
            for k in 0..=2u32 {
                let x = h.pow(k);
                let lhs = cover.pushforward(&cover.pullback(&x).mul(&e));
                let rhs = x.mul(&cover.pushforward(&e));
                assert_eq!(lhs, rhs, "projection formula at H^{k} on {}", cover.name);
            }
        }
    }
}
