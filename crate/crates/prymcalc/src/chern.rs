//! Pushforward Chern characters, parabolic averages, tacnode corrections,
//! ramified-cover bookkeeping, and the extremality computations.
//!
//! Parameters such as a, b, m, d run both as concrete integers and as
//! polynomial indeterminates, so stated identities are checked as
//! polynomial identities rather than at sample points.

use crate::lattice::{LatticeClass, SurfaceLattice};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::ring::{Coeff, GradedClass, Monomial};
use crate::varieties::CoverPresentation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChernError {
    #[error("line bundle divisor must be homogeneous of degree 1")]
    DivisorNotDegreeOne,
    #[error("line bundle divisor must have integral coefficients, found {0}")]
    DivisorNotIntegral(String),
    #[error("parabolic family must be nonempty")]
    EmptyFamily,
    #[error("parabolic levels must be strictly increasing in [0,1), found {0}")]
    BadLevel(Rat),
}

/// A line bundle presented by its degree-1 divisor class on the cover
/// source. Coefficients are integers; rational twists enter only through
/// parabolic levels.
#[derive(Debug, Clone, PartialEq)]
pub struct LineBundleClass<S: Coeff = Rat> {
    divisor: GradedClass<S>,
    pub label: Option<String>,
}

impl<S: Coeff> LineBundleClass<S> {
    pub fn new(divisor: GradedClass<S>) -> Result<Self, ChernError> {
        if !divisor.is_homogeneous(1) {
            return Err(ChernError::DivisorNotDegreeOne);
        }
        for (_, c) in divisor.terms() {
            if !c.is_integral() {
                return Err(ChernError::DivisorNotIntegral(c.to_string()));
            }
        }
        Ok(LineBundleClass {
            divisor,
            label: None,
        })
    }

    pub fn labeled(divisor: GradedClass<S>, label: &str) -> Result<Self, ChernError> {
        let mut lb = Self::new(divisor)?;
        lb.label = Some(label.to_string());
        Ok(lb)
    }

    pub fn divisor(&self) -> &GradedClass<S> {
        &self.divisor
    }
}

/// ch(f_*(L)) = f_*(td(Y/X) . ch(L)) for the finite cover f.
pub fn grr_ch<S: Coeff>(cover: &CoverPresentation, bundle: &LineBundleClass<S>) -> GradedClass<S> {
    let ch_l = bundle.divisor.exp_class().expect("divisor is degree 1");
    let relative_todd: GradedClass<S> = cover.relative_todd.map_coeffs(|c| S::from_rat(c.clone()));
    cover.pushforward(&relative_todd.mul(&ch_l))
}

/// Coefficient of H^k in a class on a one-generator ring.
pub fn h_coefficient<S: Coeff>(class_on_x: &GradedClass<S>, k: u32) -> S {
    let n = class_on_x.ring().generators().len();
    assert_eq!(n, 1, "h_coefficient expects a one-generator ring");
    let mut mono = Monomial::unit(1);
    mono.0[0] = k;
    class_on_x.coefficient(&mono)
}

/// Bogomolov discriminant of a pushforward bundle: c1^2/(2r) - ch2,
/// reported as the H^2 coefficient. Unchanged under twisting by a line
/// bundle pulled back from the base.
pub fn bogomolov_delta<S: Coeff>(ch: &GradedClass<S>) -> S {
    let rank = h_coefficient(ch, 0)
        .as_rat()
        .expect("rank is a rational constant");
    let c1 = h_coefficient(ch, 1);
    let ch2 = h_coefficient(ch, 2);
    let two_r_inv = rank.mul_rat(&Rat::int(2)).recip();
    c1.mul(&c1).mul_rat(&two_r_inv).sub(&ch2)
}

/// One step of a parabolic family: a level in [0,1) and the bundle taken
/// on the interval starting there.
#[derive(Debug, Clone)]
pub struct ParabolicPiece<S: Coeff = Rat> {
    pub level: Rat,
    pub bundle: LineBundleClass<S>,
}

/// Pieces with strictly increasing levels; the family is periodic, level
/// mu + 1 corresponding to a twist by the parabolic divisor.
#[derive(Debug, Clone)]
pub struct ParabolicFamily<S: Coeff = Rat> {
    pieces: Vec<ParabolicPiece<S>>,
}

impl<S: Coeff> ParabolicFamily<S> {
    pub fn new(pieces: Vec<ParabolicPiece<S>>) -> Result<Self, ChernError> {
        if pieces.is_empty() {
            return Err(ChernError::EmptyFamily);
        }
        let mut prev: Option<&Rat> = None;
        for p in &pieces {
            if p.level.is_negative() || p.level >= Rat::one() {
                return Err(ChernError::BadLevel(p.level.clone()));
            }
            if let Some(q) = prev {
                if &p.level <= q {
                    return Err(ChernError::BadLevel(p.level.clone()));
                }
            }
            prev = Some(&p.level);
        }
        Ok(ParabolicFamily { pieces })
    }

    pub fn pieces(&self) -> &[ParabolicPiece<S>] {
        &self.pieces
    }

    /// Interval lengths: level mu_i holds on [mu_i, mu_{i+1}), the last
    /// piece up to 1.
    pub fn weights(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate() {
            let next = self
                .pieces
                .get(i + 1)
                .map(|q| q.level.clone())
                .unwrap_or_else(Rat::one);
            out.push(&next - &p.level);
        }
        out
    }
}

/// First parabolic Chern class as the weighted average of ch1 over the
/// level intervals.
pub fn parabolic_ch1<S: Coeff>(
    family: &ParabolicFamily<S>,
    cover: &CoverPresentation,
) -> GradedClass<S> {
    let mut total = cover.target.ring.zero();
    for (piece, w) in family.pieces().iter().zip(family.weights()) {
        let ch1 = grr_ch(cover, &piece.bundle).graded_part(1);
        total = total.add(&ch1.scale_rat(&w));
    }
    total
}

fn poly_gen(cover: &CoverPresentation, name: &str) -> GradedClass<Poly> {
    cover.source.ring.gen_class::<Poly>(name)
}

/// The two-level degree-one family at weight 1/2 under the ch1 constraint
/// a = 1 - 2b: pieces O((1-2b)F + bE) at level 0 and O((1-2b)F + (b+1)E)
/// at level 1/2.
pub fn weight_half_family(cover: &CoverPresentation) -> ParabolicFamily<Poly> {
    let b = Poly::var("b");
    let a = &Poly::one() - &b.scale(&Rat::int(2));
    let e = poly_gen(cover, "E");
    let f = poly_gen(cover, "F");
    let lower = f.scale(&a).add(&e.scale(&b));
    let upper = f.scale(&a).add(&e.scale(&(&b + &Poly::one())));
    ParabolicFamily::new(vec![
        ParabolicPiece {
            level: Rat::zero(),
            bundle: LineBundleClass::new(lower).unwrap(),
        },
        ParabolicPiece {
            level: Rat::new(1, 2),
            bundle: LineBundleClass::new(upper).unwrap(),
        },
    ])
    .unwrap()
}

/// The quantities entering the weight-1/2 extremality computation in the
/// degree one case, all polynomials in b.
#[derive(Debug, Clone)]
pub struct WeightHalfCh2 {
    /// c(b) = H.ch2 of the lower piece, constants in b dropped.
    pub c: Poly,
    /// c'(b), same for the upper piece.
    pub c_prime: Poly,
    /// Delta c(b) = c'(b) - c(b).
    pub delta_c: Poly,
    /// H.ch2^par modulo b-independent constants: c(b) + Delta c(b)/2.
    pub par_ch2: Poly,
    /// The integer where the concave quadratic is extremal.
    pub extremum: i64,
}

/// H.ch2 of the pushforward, as a polynomial in the divisor parameters:
/// the H^2 coefficient times the target degree H^3.
fn h_dot_ch2(cover: &CoverPresentation, divisor: GradedClass<Poly>) -> Poly {
    let ch = grr_ch(cover, &LineBundleClass::new(divisor).unwrap());
    let h_top = cover.target.ring.gen_class::<Rat>("H").pow(3).integrate();
    h_coefficient(&ch, 2).mul_rat(&h_top)
}

fn drop_constant(p: &Poly, var: &str) -> Poly {
    let at_zero = p.subst(var, &Poly::zero());
    p - &at_zero
}

/// The degree-one uniqueness computation at parabolic weight 1/2: with
/// ch1^par = 0 forcing a = 1 - 2b, the parabolic H.ch2 is -48 b^2 up to
/// constants, so the extremum sits at the integer b = 0.
pub fn weight_half_ch2(cover: &CoverPresentation) -> WeightHalfCh2 {
    let family = weight_half_family(cover);
    let lower = family.pieces()[0].bundle.divisor().clone();
    let upper = family.pieces()[1].bundle.divisor().clone();
    let c = drop_constant(&h_dot_ch2(cover, lower), "b");
    let c_prime = drop_constant(&h_dot_ch2(cover, upper), "b");
    let delta_c = &c_prime - &c;
    let par_ch2 = drop_constant(&(&c + &delta_c.scale(&Rat::new(1, 2))), "b");
    // concave quadratic alpha b^2 + beta b: extremum at -beta/(2 alpha)
    let alpha = par_ch2.coeff_of("b", 2);
    let beta = par_ch2.coeff_of("b", 1);
    assert!(alpha.is_negative(), "parabolic ch2 must be concave in b");
    let vertex = &(-&beta) / &(&alpha * &Rat::int(2));
    let extremum = vertex.to_i64().expect("extremum is an integer");
    WeightHalfCh2 {
        c,
        c_prime,
        delta_c,
        par_ch2,
        extremum,
    }
}

/// The mu = 1 branch: ch1 = 0 forces a = 2 - 2b; writing m = b - 1 the
/// divisor is -2mF + (m+1)E and H.ch2 = -48m^2 - 48m - 8, which equals
/// -48(m + 1/2)^2 + 4 and is at most -8 for integer m, attained at
/// m in {0, -1}.
#[derive(Debug, Clone)]
pub struct MuOneCh2 {
    pub h_ch2: Poly,
    pub completed_square_matches: bool,
    pub max_over_integers: Rat,
    pub argmax: Vec<i64>,
}

pub fn mu_one_ch2(cover: &CoverPresentation) -> MuOneCh2 {
    let m = Poly::var("m");
    let e = poly_gen(cover, "E");
    let f = poly_gen(cover, "F");
    let divisor = f
        .scale(&m.scale(&Rat::int(-2)))
        .add(&e.scale(&(&m + &Poly::one())));
    let h_ch2 = h_dot_ch2(cover, divisor);
    // -48(m + 1/2)^2 + 4
    let shifted = &m + &Poly::constant(Rat::new(1, 2));
    let square = &shifted.pow(2).scale(&Rat::int(-48)) + &Poly::int(4);
    let completed_square_matches = h_ch2 == square;
    // concave in m, so integer maxima are adjacent to the vertex -1/2
    let eval = |k: i64| {
        h_ch2.eval(&std::collections::BTreeMap::from([(
            "m".to_string(),
            Rat::int(k),
        )]))
    };
    let (v0, v1) = (eval(0), eval(-1));
    let max_over_integers = if v0 >= v1 { v0.clone() } else { v1.clone() };
    let mut argmax: Vec<i64> = Vec::new();
    if v1 == max_over_integers {
        argmax.push(-1);
    }
    if v0 == max_over_integers {
        argmax.push(0);
    }
    MuOneCh2 {
        h_ch2,
        completed_square_matches,
        max_over_integers,
        argmax,
    }
}

/// The linear relation forced by ch1^par = 0 on the degree one side:
/// H^2.ch1^par = 32(a-1) + 64(b + 1/2 - mu), so a = 2 mu - 2b and
/// integrality of a, b leaves only mu = 1/2 and mu = 1 in (0, 1].
#[derive(Debug, Clone)]
pub struct Ch1Constraints {
    /// H^2.ch1^par as a polynomial in a, b, mu.
    pub relation: Poly,
    /// a as a polynomial in b for mu = 1/2.
    pub a_for_mu_half: Poly,
    /// a as a polynomial in b for mu = 1.
    pub a_for_mu_one: Poly,
}

pub fn ch1_constraints(cover: &CoverPresentation) -> Ch1Constraints {
    let a = Poly::var("a");
    let b = Poly::var("b");
    let mu = Poly::var("mu");
    let e = poly_gen(cover, "E");
    let f = poly_gen(cover, "F");
    let td1: GradedClass<Poly> = cover
        .relative_todd
        .graded_part(1)
        .map_coeffs(|c| Poly::constant(c.clone()));
    let class = td1
        .add(&f.scale(&a))
        .add(&e.scale(&b))
        .add(&e.scale(&(&Poly::one() - &mu)));
    let relation = f.pow(2).mul(&class).integrate();
    let solve_a = |mu_value: Rat| {
        // relation is linear in a with coefficient 32
        let with_mu = relation.subst("mu", &Poly::constant(mu_value));
        let coeff_a = with_mu.coeff_of("a", 1);
        let rest = with_mu.subst("a", &Poly::zero());
        (-&rest).scale(&coeff_a.recip())
    };
    let a_for_mu_half = solve_a(Rat::new(1, 2));
    let a_for_mu_one = solve_a(Rat::int(1));
    Ch1Constraints {
        relation,
        a_for_mu_half,
        a_for_mu_one,
    }
}

/// Whether 32(a-1) + 64(b + 1/2 - mu) = 0 admits an integer solution
/// (a, b): equivalent to 2 mu being an integer.
pub fn level_has_integer_solution(mu: &Rat) -> bool {
    (mu.mul_rat(&Rat::int(2))).is_integer()
}

/// The exceptional lattice over a resolved tacnode: A is the strict
/// transform of the first exceptional divisor, B the second, with
/// A^2 = -2, B^2 = -1, A.B = 1.
pub fn tacnode_lattice() -> SurfaceLattice {
    SurfaceLattice::new(&["A", "B"], &[&[-2, 1], &[1, -1]]).unwrap()
}

/// The parabolic line bundle twists used over a resolved tacnode:
/// -A/4 - B/2, 0, 0, A/4 + B/2.
pub fn tacnode_pieces(lattice: &SurfaceLattice) -> Vec<LatticeClass> {
    let p4 = lattice
        .class(&[("A", Rat::new(1, 4)), ("B", Rat::new(1, 2))])
        .unwrap();
    let zero = lattice.class(&[]).unwrap();
    vec![p4.neg(), zero.clone(), zero, p4]
}

/// Local second Chern character of a direct sum of parabolic line
/// bundles: the sum of (divisor)^2/2 in the exceptional lattice.
pub fn tacnode_local_ch2(lattice: &SurfaceLattice, pieces: &[LatticeClass]) -> Rat {
    let mut total = Rat::zero();
    for p in pieces {
        total += &(&lattice.self_intersection(p) * &Rat::new(1, 2));
    }
    total
}

/// Number of tacnodes met by a general plane section in the degree zero
/// moduli space: two on each of the 16 trope conics.
pub const TACNODES_PER_PLANE_SECTION: i64 = 32;

/// The degree zero global check: the raw extremal ch2 plus the local
/// corrections vanish exactly.
#[derive(Debug, Clone)]
pub struct GlobalCh2Balance {
    pub raw_ch2: Rat,
    pub correction: Rat,
    pub total: Rat,
}

pub fn degree0_global_ch2(cover0: &CoverPresentation, m: i64) -> GlobalCh2Balance {
    let e: GradedClass<Rat> = cover0.source.ring.gen_class("E");
    let f: GradedClass<Rat> = cover0.source.ring.gen_class("F");
    // L = O(E + 2F + m(E - 2F))
    let divisor = e
        .add(&f.scale_rat(&Rat::int(2)))
        .add(&e.sub(&f.scale_rat(&Rat::int(2))).scale_rat(&Rat::int(m)));
    let ch = grr_ch(cover0, &LineBundleClass::new(divisor).unwrap());
    let h_top = cover0.target.ring.gen_class::<Rat>("H").pow(3).integrate();
    let raw_ch2 = &h_coefficient(&ch, 2) * &h_top;
    let lattice = tacnode_lattice();
    let local = tacnode_local_ch2(&lattice, &tacnode_pieces(&lattice));
    let correction = &Rat::int(TACNODES_PER_PLANE_SECTION) * &local;
    let total = &raw_ch2 + &correction;
    GlobalCh2Balance {
        raw_ch2,
        correction,
        total,
    }
}

/// Ramified-cover bookkeeping over a degree d covering of the hyperplane
/// section, symbolic in d. Point counts are 0-cycle degrees on the cover.
#[derive(Debug, Clone)]
pub struct KawamataRecord {
    pub triple_points: Poly,
    pub double_points: Poly,
    pub r_squared: Poly,
    pub deg_normal: Poly,
    /// ch of the pushforward of the rank-2 quotient from the normalized
    /// ramification curve: divisor part coefficient of H, plus points.
    pub ch_iu_h: Rat,
    pub ch_iu_points: Poly,
    /// ch after passing to the partially glued curve: 8H - 24d.
    pub ch_u_sharp_h: Rat,
    pub ch_u_sharp_points: Poly,
    /// ch2 of the restricted pushforward bundle, in points: -8d.
    pub ch2_vz: Poly,
    /// ch of the kernel bundle: rank, H coefficient, points.
    pub ch_vz_prime: (Rat, Rat, Poly),
    /// Whether ch(V'_Z) = 8(1 - H + H^2/2) under H^2/2 = 2d points.
    pub projectively_flat: bool,
}

pub fn kawamata_bookkeeping(cover1: &CoverPresentation) -> KawamataRecord {
    let d = Poly::var("d");
    // 48 cusps with local covering degree 6; 48 nodes with local degree 4
    let triple_points = d.scale(&Rat::int(48 / 6));
    let double_points = d.scale(&Rat::int(48 / 4));

    // the wobbly divisor class is half the pushforward of E
    let e: GradedClass<Rat> = cover1.source.ring.gen_class("E");
    let wob_h = &h_coefficient(&cover1.pushforward(&e), 1) * &Rat::new(1, 2);
    let h2_points = cover1.target.ring.gen_class::<Rat>("H").pow(3).integrate();

    // R = (wob/2).H pulled back: R^2 = (wob/2)^2 . H^2 . d points
    let r_class = &wob_h * &Rat::new(1, 2);
    let r_squared = d.scale(&(&(&r_class * &r_class) * &h2_points));
    // each node of R gains 2 self-intersections in the normalization, each
    // triple point 6
    let deg_normal =
        &(&r_squared - &double_points.scale(&Rat::int(2))) - &triple_points.scale(&Rat::int(6));

    // ch(i_* U) = 2R + deg U + (rank/2)(-deg N); deg U = 0 at (a,b) = (0,0)
    let ch_iu_h = wob_h.clone();
    let ch_iu_points = deg_normal.scale(&Rat::int(-1));
    // dropping skyscraper length 4 over each triple point
    let ch_u_sharp_h = ch_iu_h.clone();
    let ch_u_sharp_points = &ch_iu_points - &triple_points.scale(&Rat::int(4));

    // V_Z = V_{0,0} pulled back: divisor E, rank 8, ch1 = 0, ch2 = -2H^2
    let v00 = LineBundleClass::new(e).unwrap();
    let ch_v = grr_ch(cover1, &v00);
    let rank = h_coefficient(&ch_v, 0);
    let ch1_v = h_coefficient(&ch_v, 1);
    let ch2_vz = d.scale(&(&h_coefficient(&ch_v, 2) * &h2_points));

    let vz_h = &ch1_v - &ch_u_sharp_h;
    let vz_points = &ch2_vz - &ch_u_sharp_points;
    // 8(1 - H + H^2/2): H^2/2 is 2d points on the cover
    let expected_points = d.scale(&(&(&rank * &h2_points) * &Rat::new(1, 2)));
    let projectively_flat = rank == Rat::int(8) && vz_h == -&rank && vz_points == expected_points;
    KawamataRecord {
        triple_points,
        double_points,
        r_squared,
        deg_normal,
        ch_iu_h,
        ch_iu_points,
        ch_u_sharp_h,
        ch_u_sharp_points,
        ch2_vz,
        ch_vz_prime: (rank, vz_h, vz_points),
        projectively_flat,
    }
}

/// The image-sheaf length bound: ch(V'_Z) + ell is flagged as violating
/// the Bogomolov-Gieseker inequality whenever ell > 0.
#[derive(Debug, Clone)]
pub struct SharpLengthBound {
    pub ell: u64,
    pub ch_points: Poly,
    pub violates_bogomolov_gieseker: bool,
}

pub fn sharp_length_bound(cover1: &CoverPresentation, ell: u64) -> SharpLengthBound {
    let record = kawamata_bookkeeping(cover1);
    let ch_points = &record.ch_vz_prime.2 + &Poly::int(ell as i64);
    SharpLengthBound {
        ell,
        ch_points,
        violates_bogomolov_gieseker: ell > 0,
    }
}
