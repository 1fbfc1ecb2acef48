//! Genus and ramification bookkeeping for the curves that appear in the
//! spectral geometry: branched covers via Riemann-Hurwitz, curves on
//! surfaces via adjunction, and the node/cusp accounting for the wobbly
//! hyperplane section.

use crate::lattice::SurfaceLattice;
use crate::rat::Rat;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("ramification parity violation: 2g - 2 = {0} is odd")]
    ParityViolation(i64),
    #[error("computed 2g - 2 = {0} is below -2")]
    GenusTooSmall(i64),
    #[error("ramification index {0} must be at least 2")]
    BadRamificationIndex(i64),
    #[error("cover degree must be positive, found {0}")]
    BadDegree(i64),
    #[error("adjunction gives non-integer canonical degree {0}")]
    NonIntegerAdjunction(Rat),
    #[error("normalization genus would be negative: {arithmetic} - {delta}")]
    NegativeGenus { arithmetic: i64, delta: i64 },
}

/// A branched cover: base genus, degree, and the multiset of ramification
/// indices of the points upstairs.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverSpec {
    pub name: String,
    pub base_genus: u32,
    pub degree: i64,
    pub ram_indices: Vec<i64>,
}

impl CoverSpec {
    pub fn new(name: &str, base_genus: u32, degree: i64, ram_indices: &[i64]) -> Self {
        let mut ram: Vec<i64> = ram_indices.to_vec();
        ram.sort_unstable();
        CoverSpec {
            name: name.to_string(),
            base_genus,
            degree,
            ram_indices: ram,
        }
    }
}

/// 2g - 2 = n(2g_b - 2) + sum(e - 1).
pub fn riemann_hurwitz(spec: &CoverSpec) -> Result<u32, CurveError> {
    if spec.degree <= 0 {
        return Err(CurveError::BadDegree(spec.degree));
    }
    for &e in &spec.ram_indices {
        if e < 2 {
            return Err(CurveError::BadRamificationIndex(e));
        }
    }
    let ram: i64 = spec.ram_indices.iter().map(|e| e - 1).sum();
    let two_g_minus_2 = spec.degree * (2 * spec.base_genus as i64 - 2) + ram;
    if two_g_minus_2 % 2 != 0 {
        return Err(CurveError::ParityViolation(two_g_minus_2));
    }
    if two_g_minus_2 < -2 {
        return Err(CurveError::GenusTooSmall(two_g_minus_2));
    }
    Ok(((two_g_minus_2 + 2) / 2) as u32)
}

/// A curve on a surface described through its intersection numbers: the
/// canonical and curve classes are multiples of a hyperplane class whose
/// self-pairing on the surface is `hyperplane_square`.
#[derive(Debug, Clone)]
pub struct PlaneCurveOnSurface {
    pub canonical_coeff: Rat,
    pub curve_coeff: Rat,
    pub hyperplane_square: Rat,
}

/// Arithmetic genus by adjunction: 2g - 2 = (K + S).S.
pub fn adjunction_genus(c: &PlaneCurveOnSurface) -> Result<u32, CurveError> {
    let canonical_degree =
        &(&(&c.canonical_coeff + &c.curve_coeff) * &c.curve_coeff) * &c.hyperplane_square;
    let two_g_minus_2 = canonical_degree
        .to_i64()
        .ok_or(CurveError::NonIntegerAdjunction(canonical_degree.clone()))?;
    if two_g_minus_2 % 2 != 0 {
        return Err(CurveError::ParityViolation(two_g_minus_2));
    }
    if two_g_minus_2 < -2 {
        return Err(CurveError::GenusTooSmall(two_g_minus_2));
    }
    Ok(((two_g_minus_2 + 2) / 2) as u32)
}

/// Geometric genus after resolving nodes and cusps, each dropping the
/// genus by one.
pub fn normalization_genus(g_arith: u32, nodes: u32, cusps: u32) -> Result<u32, CurveError> {
    let delta = nodes + cusps;
    if delta > g_arith {
        return Err(CurveError::NegativeGenus {
            arithmetic: g_arith as i64,
            delta: delta as i64,
        });
    }
    Ok(g_arith - delta)
}

/// Singular-point accounting for the hyperplane slice of the wobbly
/// divisor: the cusp locus is the graph of a degree-32 map from the
/// normalizing curve to a line, meeting the hyperplane trace in 48
/// points; the nodes come from 96 points identified in pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct WobblySectionCounts {
    pub arithmetic_genus: u32,
    pub nodes: u32,
    pub cusps: u32,
    pub normalization: u32,
}

/// Intersection of the graph of a degree-`map_degree` map to a line with
/// the class [curve] + fiber_multiple.[line] on the product surface.
pub fn graph_section_count(map_degree: i64, fiber_multiple: i64) -> i64 {
    let lattice = SurfaceLattice::ruled_surface();
    // graph = c + (map degree) fib; trace class = c + (multiple) fib
    let graph = lattice
        .class(&[("c", Rat::int(1)), ("fib", Rat::int(map_degree))])
        .unwrap();
    let trace = lattice
        .class(&[("c", Rat::int(1)), ("fib", Rat::int(fiber_multiple))])
        .unwrap();
    lattice.pair(&graph, &trace).to_i64().unwrap()
}

pub fn wobbly_section_counts() -> WobblySectionCounts {
    // S = 8H on the hyperplane section with K = -H and H^3 = 4
    let arithmetic_genus = adjunction_genus(&PlaneCurveOnSurface {
        canonical_coeff: Rat::int(-1),
        curve_coeff: Rat::int(8),
        hyperplane_square: Rat::int(4),
    })
    .unwrap();
    // 6 horizontal curves each meet the trace in 16 points, identified in
    // pairs into nodes
    let nodes = (6 * 16) / 2;
    // cusps: graph of the degree-32 map against [curve] + 16 [line]
    let cusps = graph_section_count(32, 16) as u32;
    let normalization = normalization_genus(arithmetic_genus, nodes, cusps).unwrap();
    WobblySectionCounts {
        arithmetic_genus,
        nodes,
        cusps,
        normalization,
    }
}

/// The genus of the spectral curve over a general line in the degree zero
/// space, derived two independent ways, with its branch count.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLineCurve {
    pub genus_from_canonical: u32,
    pub genus_from_hurwitz: u32,
    pub branch_points: i64,
}

pub fn spectral_curve_over_line() -> SpectralLineCurve {
    // canonical degree: K of the blown-up abelian threefold is twice the
    // exceptional divisor, meeting the curve in 16 points; the normal
    // bundle contributes deg O(1)+O(1) pulled back through degree 8
    let exceptional_meets = 16i64;
    let normal_degree = 8 * 2;
    let canonical_degree = 2 * exceptional_meets + normal_degree;
    let genus_from_canonical = ((canonical_degree + 2) / 2) as u32;

    // branch points over the line: one over each of the 16 plane sections,
    // 4 over each of the 4 branch surface points, 32 movable
    let branch_points = 16 + 4 * 4 + 32;
    let genus_from_hurwitz = riemann_hurwitz(&CoverSpec::new(
        "spectral-over-line",
        0,
        8,
        &vec![2; branch_points as usize],
    ))
    .unwrap();
    SpectralLineCurve {
        genus_from_canonical,
        genus_from_hurwitz,
        branch_points,
    }
}

/// The four curves in the degree one story and their genera 2, 5, 17, 65.
pub fn standard_genus_suite() -> Vec<(CoverSpec, u32)> {
    vec![
        // double cover of the genus 2 curve branched at 4 points
        (
            CoverSpec::new("spectral-double-cover", 2, 2, &[2, 2, 2, 2]),
            5,
        ),
        // 16-sheeted etale covers of the genus 2 and genus 5 curves
        (CoverSpec::new("etale-16-of-base", 2, 16, &[]), 17),
        (CoverSpec::new("etale-16-of-spectral", 5, 16, &[]), 65),
        // trigonal cover of a line with 8 simple branch points
        (CoverSpec::new("trigonal", 0, 3, &[2; 8]), 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurwitz_examples() {
        for (spec, genus) in standard_genus_suite() {
            assert_eq!(riemann_hurwitz(&spec).unwrap(), genus, "{}", spec.name);
        }
    }

    #[test]
    fn hurwitz_errors() {
        // odd total ramification violates parity
        let spec = CoverSpec::new("bad", 2, 2, &[2]);
        assert!(matches!(
            riemann_hurwitz(&spec),
            Err(CurveError::ParityViolation(_))
        ));
        let spec = CoverSpec::new("bad-deg", 2, 0, &[]);
        assert!(riemann_hurwitz(&spec).is_err());
        let spec = CoverSpec::new("bad-ram", 2, 2, &[1, 3]);
        assert!(riemann_hurwitz(&spec).is_err());
    }

    #[test]
    fn etale_multiplicativity() {
        for (g, n) in [(2u32, 3i64), (3, 5), (5, 16)] {
            let spec = CoverSpec::new("etale", g, n, &[]);
            let upstairs = riemann_hurwitz(&spec).unwrap();
            assert_eq!(
                2 * upstairs as i64 - 2,
                n * (2 * g as i64 - 2),
                "etale covers scale 2g-2 by the degree"
            );
        }
    }

    #[test]
    fn adjunction_examples() {
        // wobbly hyperplane slice: 2g - 2 = 224 so g = 113
        let wob = PlaneCurveOnSurface {
            canonical_coeff: Rat::int(-1),
            curve_coeff: Rat::int(8),
            hyperplane_square: Rat::int(4),
        };
        assert_eq!(adjunction_genus(&wob).unwrap(), 113);
        // a hyperplane slice of the section is an elliptic curve
        let slice = PlaneCurveOnSurface {
            canonical_coeff: Rat::int(-1),
            curve_coeff: Rat::int(1),
            hyperplane_square: Rat::int(4),
        };
        assert_eq!(adjunction_genus(&slice).unwrap(), 1);
    }

    #[test]
    fn adjunction_rejects_non_integer_degrees() {
        let c = PlaneCurveOnSurface {
            canonical_coeff: Rat::int(-1),
            curve_coeff: Rat::int(8),
            hyperplane_square: Rat::new(1, 3),
        };
        assert!(matches!(
            adjunction_genus(&c),
            Err(CurveError::NonIntegerAdjunction(_))
        ));
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalization_genus(113, 48, 48).unwrap(), 17);
        assert_eq!(normalization_genus(7, 0, 0).unwrap(), 7);
        assert_eq!(normalization_genus(5, 1, 0).unwrap(), 4);
        assert!(normalization_genus(3, 2, 2).is_err());
    }

    #[test]
    fn wobbly_section() {
        let counts = wobbly_section_counts();
        assert_eq!(
            counts,
            WobblySectionCounts {
                arithmetic_genus: 113,
                nodes: 48,
                cusps: 48,
                normalization: 17
            }
        );
        // the two derivations of the 48-cusp count agree: genus deficit
        // beyond the nodes, and the graph intersection number
        let deficit = 113 - 48 - 17;
        assert_eq!(deficit, counts.cusps);
    }

    #[test]
    fn graph_counts() {
        assert_eq!(graph_section_count(32, 16), 48);
        // a constant section meets the trace in the fiber multiple
        assert_eq!(graph_section_count(0, 16), 16);
    }

    #[test]
    fn spectral_line_curve() {
        let c = spectral_curve_over_line();
        assert_eq!(c.genus_from_canonical, 25);
        assert_eq!(c.genus_from_hurwitz, 25);
        assert_eq!(c.branch_points, 64);
        assert_eq!(2 * 25 - 2, 48);
    }

    #[test]
    fn fiber_product_consistency() {
        // the genus 65 curve is both a 16-sheeted etale cover of the genus
        // 5 curve and a double cover of the genus 17 curve with 64 simple
        // ramification points
        let etale = riemann_hurwitz(&CoverSpec::new("a", 5, 16, &[])).unwrap();
        let double = riemann_hurwitz(&CoverSpec::new("b", 17, 2, &[2; 64])).unwrap();
        assert_eq!(etale, 65);
        assert_eq!(double, 65);
        assert_eq!(2 * 65 - 2, 2 * (2 * 17 - 2) + 64);
    }

    #[test]
    fn hurwitz_monotone_in_ramification() {
        let base = riemann_hurwitz(&CoverSpec::new("x", 2, 4, &[])).unwrap();
        let more = riemann_hurwitz(&CoverSpec::new("y", 2, 4, &[2, 2])).unwrap();
        assert!(more > base);
    }
}
