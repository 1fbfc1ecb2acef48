//! Truncated graded commutative algebra over exact rationals.
//!
//! A `ChowPresentation` is generated by divisor symbols in degree 1, with
//! products above the truncation degree (the variety dimension) discarded
//! and top-degree monomials evaluated through an intersection table. No
//! other relations are imposed; a class in top degree is identified with
//! its integral, which is all the downstream computations use.

use crate::poly::Poly;
use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("top intersection table is missing an entry for {0}")]
    MissingTopEntry(String),
    #[error("top intersection table has an entry {0} that is not of top degree")]
    BadTopEntry(String),
    #[error("expected a class homogeneous of degree {expected}, found a term of degree {found}")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("constant term must be 1 to invert, found {0}")]
    NotAUnit(String),
    #[error("ring has no generators")]
    NoGenerators,
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
}

/// Coefficient scalars for graded classes: exact rationals or polynomials
/// over them.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn mul_rat(&self, r: &Rat) -> Self;
    fn from_rat(r: Rat) -> Self;
    /// All coefficients integral (line bundle divisors require this).
    fn is_integral(&self) -> bool;
    /// Some(r) when the scalar is the constant r.
    fn as_rat(&self) -> Option<Rat>;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self * r
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn from_rat(r: Rat) -> Self {
        Poly::constant(r)
    }
    fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_constant()
    }
}

/// A monomial in the ring generators, stored as one exponent per generator.
/// All generators have degree 1, so the degree is the exponent sum.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(n_gens: usize) -> Self {
        Monomial(vec![0; n_gens])
    }

    pub fn generator(n_gens: usize, idx: usize) -> Self {
        let mut e = vec![0; n_gens];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Ordered by total degree, then lexicographically by exponents in
/// generator order (so on a Y ring E-heavy monomials come first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, PartialEq)]
struct RingData {
    generators: Vec<String>,
    dimension: u32,
    /// Integral of each top-degree monomial; total on all of them.
    top_table: BTreeMap<Monomial, Rat>,
    /// First top-degree monomial with a nonzero integral, used to store
    /// top-degree parts canonically (a top class is its integral).
    canonical_top: Option<Monomial>,
}

/// Handle to a ring presentation; cheap to clone and share.
#[derive(Clone, Debug)]
pub struct ChowPresentation(Arc<RingData>);

impl PartialEq for ChowPresentation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

/// All monomials of the given degree in `n_gens` generators.
pub fn monomials_of_degree(n_gens: usize, degree: u32) -> Vec<Monomial> {
    fn go(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, left: u32, slots: usize) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(out, prefix, left - e, slots - 1);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(&mut raw, &mut Vec::new(), degree, n_gens);
    let mut monos: Vec<Monomial> = raw.into_iter().map(Monomial).collect();
    monos.sort();
    monos
}

impl ChowPresentation {
    /// Build a presentation from generators, dimension, and a total
    /// top-degree intersection table.
    pub fn new(
        generators: &[&str],
        dimension: u32,
        top_table: &[(&str, Rat)],
    ) -> Result<Self, RingError> {
        if generators.is_empty() {
            return Err(RingError::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(RingError::DuplicateGenerator(g.to_string()));
            }
        }
        let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        let mut table = BTreeMap::new();
        for (mono_text, value) in top_table {
            let mono = parse_monomial(mono_text, &gens)
                .ok_or_else(|| RingError::BadTopEntry(mono_text.to_string()))?;
            if mono.degree() != dimension {
                return Err(RingError::BadTopEntry(mono_text.to_string()));
            }
            table.insert(mono, value.clone());
        }
        Self::from_parts(gens, dimension, table)
    }

    pub fn from_parts(
        generators: Vec<String>,
        dimension: u32,
        top_table: BTreeMap<Monomial, Rat>,
    ) -> Result<Self, RingError> {
        if generators.is_empty() {
            return Err(RingError::NoGenerators);
        }
        let all = monomials_of_degree(generators.len(), dimension);
        for m in &all {
            if !top_table.contains_key(m) {
                return Err(RingError::MissingTopEntry(render_monomial(m, &generators)));
            }
        }
        for m in top_table.keys() {
            if m.degree() != dimension {
                return Err(RingError::BadTopEntry(render_monomial(m, &generators)));
            }
        }
        let canonical_top = all.iter().rev().find(|m| !top_table[m].is_zero()).cloned();
        Ok(ChowPresentation(Arc::new(RingData {
            generators,
            dimension,
            top_table,
            canonical_top,
        })))
    }

    pub fn generators(&self) -> &[String] {
        &self.0.generators
    }

    pub fn dimension(&self) -> u32 {
        self.0.dimension
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.0.generators.iter().position(|g| g == name)
    }

    pub fn top_table(&self) -> &BTreeMap<Monomial, Rat> {
        &self.0.top_table
    }

    pub fn top_value(&self, m: &Monomial) -> Rat {
        self.0.top_table.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn zero<S: Coeff>(&self) -> GradedClass<S> {
        GradedClass {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: Coeff>(&self) -> GradedClass<S> {
        self.constant(S::one())
    }

    pub fn constant<S: Coeff>(&self, c: S) -> GradedClass<S> {
        let mut out = self.zero();
        out.add_term(Monomial::unit(self.0.generators.len()), c);
        out
    }

    /// The named degree-1 generator as a class.
    pub fn gen_class<S: Coeff>(&self, name: &str) -> GradedClass<S> {
        let idx = self
            .generator_index(name)
            .unwrap_or_else(|| panic!("no generator {name}"));
        let mut out = self.zero();
        out.add_term(Monomial::generator(self.0.generators.len(), idx), S::one());
        out
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        render_monomial(m, &self.0.generators)
    }
}

pub fn render_monomial(m: &Monomial, generators: &[String]) -> String {
    let mut s = String::new();
    for (g, e) in generators.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => s.push_str(g),
            _ => {
                s.push_str(g);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Parses "E^2F", "E^2 F", "H^3", "1"; factors may repeat ("E E F").
pub fn parse_monomial(text: &str, generators: &[String]) -> Option<Monomial> {
    let mut exps = vec![0u32; generators.len()];
    let mut rest = text.trim();
    if rest == "1" {
        return Some(Monomial(exps));
    }
    'outer: while !rest.is_empty() {
        rest = rest.trim_start_matches([' ', '*', '\u{b7}']);
        if rest.is_empty() {
            break;
        }
        // longest generator name match first
        let mut by_len: Vec<(usize, &String)> = generators.iter().enumerate().collect();
        by_len.sort_by_key(|(_, g)| std::cmp::Reverse(g.len()));
        for (idx, g) in by_len {
            if let Some(after) = rest.strip_prefix(g.as_str()) {
                let mut power = 1u32;
                let mut after = after;
                if let Some(num) = after.strip_prefix('^') {
                    let digits: String = num.chars().take_while(|c| c.is_ascii_digit()).collect();
                    if digits.is_empty() {
                        return None;
                    }
                    power = digits.parse().ok()?;
                    after = &num[digits.len()..];
                }
                exps[idx] += power;
                rest = after;
                continue 'outer;
            }
        }
        return None;
    }
    Some(Monomial(exps))
}

/// An element of the truncated graded algebra: a finite sum of monomials
/// with nonzero coefficients, every monomial of degree at most the ring
/// dimension, and the top-degree part stored canonically through the
/// intersection pairing.
#[derive(Clone, Debug)]
pub struct GradedClass<S: Coeff = Rat> {
    ring: ChowPresentation,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Coeff> GradedClass<S> {
    pub fn ring(&self) -> &ChowPresentation {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Inserts c·m, dropping terms above the truncation degree and folding
    /// top-degree terms onto the canonical top monomial via the pairing.
    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() || m.degree() > self.ring.dimension() {
            return;
        }
        let (m, c) = if m.degree() == self.ring.dimension() {
            match &self.ring.0.canonical_top {
                Some(top) if *top != m => {
                    let scale = &self.ring.top_value(&m) / &self.ring.top_value(top);
                    (top.clone(), c.mul_rat(&scale))
                }
                Some(_) => (m, c),
                // all top integrals vanish: the top part carries nothing
                None => return,
            }
        } else {
            (m, c)
        };
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &GradedClass<S>) {
        assert!(
            self.ring == other.ring,
            "ring mismatch between graded classes"
        );
    }

    pub fn add(&self, rhs: &GradedClass<S>) -> GradedClass<S> {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &GradedClass<S>) -> GradedClass<S> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> GradedClass<S> {
        GradedClass {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> GradedClass<S> {
        let mut out = self.ring.zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> GradedClass<S> {
        let mut out = self.ring.zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul_rat(r));
        }
        out
    }

    pub fn mul(&self, rhs: &GradedClass<S>) -> GradedClass<S> {
        self.assert_same_ring(rhs);
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> GradedClass<S> {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The part of the class in one degree.
    pub fn graded_part(&self, degree: u32) -> GradedClass<S> {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if m.degree() == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Drop all terms of degree above `max_degree`; the display convention
    /// for Chern characters truncates at codimension 2.
    pub fn truncate_above(&self, max_degree: u32) -> GradedClass<S> {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if m.degree() <= max_degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Pair the class against the intersection table: the sum over
    /// top-degree terms of coefficient times table value.
    pub fn integrate(&self) -> S {
        let mut total = S::zero();
        for (m, c) in &self.terms {
            if m.degree() == self.ring.dimension() {
                total = total.add(&c.mul_rat(&self.ring.top_value(m)));
            }
        }
        total
    }

    /// Truncated exponential of a degree-1 class: 1 + d + d²/2 + ...
    pub fn exp_class(&self) -> Result<GradedClass<S>, RingError> {
        for m in self.terms.keys() {
            if m.degree() != 1 {
                return Err(RingError::NotHomogeneous {
                    expected: 1,
                    found: m.degree(),
                });
            }
        }
        let mut out = self.ring.one();
        let mut power = self.ring.one();
        let mut factorial = Rat::one();
        for k in 1..=self.ring.dimension() {
            power = power.mul(self);
            factorial *= &Rat::int(k as i64);
            out = out.add(&power.scale_rat(&factorial.recip()));
        }
        Ok(out)
    }

    /// Inverse of a class with constant term 1, exact up to truncation:
    /// (1 + n)^{-1} = 1 - n + n² - ...
    pub fn inverse_unit(&self) -> Result<GradedClass<S>, RingError> {
        let unit_mono = Monomial::unit(self.ring.generators().len());
        let c0 = self.coefficient(&unit_mono);
        if c0 != S::one() {
            return Err(RingError::NotAUnit(c0.to_string()));
        }
        let nilpotent = self.sub(&self.ring.one());
        let mut out = self.ring.one();
        let mut power = self.ring.one();
        for _ in 1..=self.ring.dimension() {
            power = power.mul(&nilpotent).neg();
            out = out.add(&power);
        }
        Ok(out)
    }

    /// Change coefficient scalars, e.g. lift Rat classes into Poly classes.
    pub fn map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> T) -> GradedClass<T> {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Canonical text form: terms by degree then monomial order, polynomial
    /// coefficients in parentheses, rationals as p/q.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                // only for plain rationals; polynomial signs stay inside parens
                Some(rest) if !text.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mono = self.ring.render_monomial(m);
            if mono == "1" {
                s.push_str(&mag);
            } else {
                let needs_parens = mag.contains(' ');
                if needs_parens {
                    s.push('(');
                    s.push_str(&mag);
                    s.push(')');
                } else if mag != "1" {
                    s.push_str(&mag);
                }
                s.push_str(&mono);
            }
        }
        s
    }
}

impl<S: Coeff> PartialEq for GradedClass<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<S: Coeff> fmt::Display for GradedClass<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl GradedClass<Rat> {
    pub fn to_poly_class(&self) -> GradedClass<Poly> {
        self.map_coeffs(|c| Poly::constant(c.clone()))
    }
}

/// td = 1 + c1/2 + (c1² + c2)/12 from the first two Chern classes.
pub fn todd_from_chern<S: Coeff>(
    c1: &GradedClass<S>,
    c2: &GradedClass<S>,
) -> Result<GradedClass<S>, RingError> {
    if !c1.is_homogeneous(1) {
        return Err(RingError::NotHomogeneous {
            expected: 1,
            found: degree_of(c1),
        });
    }
    if !c2.is_homogeneous(2) {
        return Err(RingError::NotHomogeneous {
            expected: 2,
            found: degree_of(c2),
        });
    }
    let one = c1.ring().one();
    let quadratic = c1.mul(c1).add(c2).scale_rat(&Rat::new(1, 12));
    Ok(one.add(&c1.scale_rat(&Rat::new(1, 2))).add(&quadratic))
}

fn degree_of<S: Coeff>(c: &GradedClass<S>) -> u32 {
    c.terms().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1_ring() -> ChowPresentation {
        ChowPresentation::new(&["H"], 3, &[("H^3", Rat::int(4))]).unwrap()
    }

    fn y1_ring() -> ChowPresentation {
        ChowPresentation::new(
            &["E", "F"],
            3,
            &[
                ("F^3", Rat::int(32)),
                ("EF^2", Rat::int(64)),
                ("E^2F", Rat::int(32)),
                ("E^3", Rat::int(-128)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn missing_top_entry_is_named() {
        let err = ChowPresentation::new(
            &["E", "F"],
            3,
            &[
                ("F^3", Rat::int(32)),
                ("EF^2", Rat::int(64)),
                ("E^3", Rat::int(-128)),
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("E^2F"), "{err}");
    }

    #[test]
    fn add_examples() {
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        assert!(h.add(&h.neg()).is_zero());
        let a = r.one().add(&h);
        let b = r.zero().add(&h.mul(&h).scale_rat(&Rat::new(5, 12)));
        assert_eq!(a.add(&b).render(), "1 + H + 5/12H^2");
    }

    #[test]
    fn add_against_term_by_term_oracle() {
        // td + (td^-1 - 2) assembled coefficient by coefficient
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        let td = r.one().add(&h).add(&h.mul(&h).scale_rat(&Rat::new(7, 12)));
        let rhs = td.inverse_unit().unwrap().sub(&r.one()).sub(&r.one());
        let sum = td.add(&rhs);
        // independent oracle: add the coefficient lists directly
        let td_coeffs = [Rat::int(1), Rat::int(1), Rat::new(7, 12), Rat::zero()];
        let inv_coeffs = [Rat::int(-1), Rat::int(-1), Rat::new(5, 12), Rat::new(1, 6)];
        for k in 0..=3u32 {
            let mut mono = Monomial::unit(1);
            mono.0[0] = k;
            assert_eq!(
                sum.coefficient(&mono),
                &td_coeffs[k as usize] + &inv_coeffs[k as usize]
            );
        }
        assert_eq!(sum.render(), "H^2 + 1/6H^3");
    }

    #[test]
    fn mul_identity_and_truncation() {
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        let x = r.one().add(&h.scale_rat(&Rat::int(7)));
        assert_eq!(r.one().mul(&x), x);
        // H^4 dies by truncation
        assert!(h.pow(4).is_zero());
    }

    #[test]
    fn todd_inverse_x1() {
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        let td = todd_from_chern(
            &h.scale_rat(&Rat::int(2)),
            &h.mul(&h).scale_rat(&Rat::int(3)),
        )
        .unwrap();
        assert_eq!(td.truncate_above(2).render(), "1 + H + 7/12H^2");
        let inv = td.inverse_unit().unwrap();
        assert_eq!(inv.truncate_above(2).render(), "1 - H + 5/12H^2");
        assert_eq!(td.mul(&inv), r.one());
        // the displayed inverse alone leaves only a top-degree remainder
        let displayed = inv.truncate_above(2);
        let remainder = td.mul(&displayed).sub(&r.one());
        assert!(remainder.truncate_above(2).is_zero());
    }

    #[test]
    fn top_degree_classes_resolve_through_pairing() {
        let r = y1_ring();
        let e: GradedClass = r.gen_class("E");
        let f = r.gen_class("F");
        // (E+F)·E·(E+F) = E^3 + 2E^2F + EF^2 = -128 + 64 + 64 = 0
        let s = e.add(&f);
        assert!(s.mul(&e).mul(&s).is_zero());
        assert_eq!(e.pow(3).integrate(), Rat::int(-128));
    }

    #[test]
    fn exp_class_requires_degree_one() {
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        assert!(r.one().add(&h).exp_class().is_err());
        let e = h.neg().exp_class().unwrap();
        assert_eq!(e.render(), "1 - H + 1/2H^2 - 1/6H^3");
        // the degree-3 part pairs to -1/6 · 4 = -2/3
        assert_eq!(e.graded_part(3).integrate(), Rat::new(-2, 3));
    }

    #[test]
    fn integrate_examples() {
        let r = x1_ring();
        let h: GradedClass = r.gen_class("H");
        assert_eq!(h.pow(3).integrate(), Rat::int(4));
        assert_eq!(r.one::<Rat>().integrate(), Rat::zero());
    }
}
