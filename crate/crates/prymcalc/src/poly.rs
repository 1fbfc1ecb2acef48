//! Polynomials over exact rationals in named indeterminates.
//!
//! Identities such as a second Chern character expressed in parameters a, b
//! are checked as polynomial identities, not just at sample points. `Poly`
//! keeps a canonical map from exponent vectors to nonzero coefficients, so
//! equality is plain structural equality.

use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponents of the indeterminates appearing in one term, by variable name.
/// Zero exponents are never stored.
pub type VarExps = BTreeMap<String, u32>;

/// A multivariate polynomial with `Rat` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    terms: BTreeMap<VarExps, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(VarExps::new(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rat::int(n))
    }

    /// The indeterminate with the given name.
    pub fn var(name: &str) -> Self {
        let mut exps = VarExps::new();
        exps.insert(name.to_string(), 1);
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rat::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (exps, c) = self.terms.iter().next().unwrap();
                exps.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VarExps, &Rat)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exps: VarExps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate by substituting rational values for every variable present.
    pub fn eval(&self, values: &BTreeMap<String, Rat>) -> Rat {
        let mut total = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in exps {
                let val = values
                    .get(v)
                    .unwrap_or_else(|| panic!("no value for variable {v}"));
                term *= &val.pow(*e as i64);
            }
            total += &term;
        }
        total
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, var: &str, value: &Poly) -> Poly {
        let mut total = Poly::zero();
        for (exps, c) in &self.terms {
            let mut rest = exps.clone();
            let e = rest.remove(var).unwrap_or(0);
            let mut term = Poly {
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            term = &term * &value.pow(e);
            total = &total + &term;
        }
        total
    }

    /// Total degree of the polynomial, None for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.values().sum()).max()
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, exps: &VarExps) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of var^k in a univariate polynomial.
    pub fn coeff_of(&self, var: &str, k: u32) -> Rat {
        let mut exps = VarExps::new();
        if k > 0 {
            exps.insert(var.to_string(), k);
        }
        self.coeff(&exps)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = ea.clone();
                for (v, e) in eb {
                    *exps.entry(v.clone()).or_insert(0) += e;
                }
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

/// Renders terms by descending total degree, then lexicographically by
/// exponent vector, constants last: "4a^2 + 16ab + 4b^2 - 12b - 2".
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&VarExps, &Rat)> = self.terms.iter().collect();
        // within a degree, earlier variables with higher exponents come
        // first: a^2, ab, b^2, then lower-degree terms
        let var_order = |ea: &VarExps, eb: &VarExps| {
            let vars: std::collections::BTreeSet<&String> = ea.keys().chain(eb.keys()).collect();
            for v in vars {
                let xa = ea.get(v).copied().unwrap_or(0);
                let xb = eb.get(v).copied().unwrap_or(0);
                match xb.cmp(&xa) {
                    std::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            std::cmp::Ordering::Equal
        };
        ordered.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.values().sum();
            let db: u32 = eb.values().sum();
            db.cmp(&da).then_with(|| var_order(ea, eb))
        });
        for (i, (exps, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || exps.is_empty();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            for (v, e) in exps {
                write!(f, "{v}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Poly {
        Poly::var("a")
    }

    fn b() -> Poly {
        Poly::var("b")
    }

    #[test]
    fn display_ordering() {
        // 4a^2 + 16ab + 4b^2 - 12b - 2
        let p = &(&(&a().pow(2).scale(&Rat::int(4)) + &(&a() * &b()).scale(&Rat::int(16)))
            + &b().pow(2).scale(&Rat::int(4)))
            - &(&b().scale(&Rat::int(12)) + &Poly::int(2));
        assert_eq!(p.to_string(), "4a^2 + 16ab + 4b^2 - 12b - 2");
    }

    #[test]
    fn subst_and_eval() {
        // (a + 2b)^2 at a = 1 - 2b collapses to 1
        let p = (&a() + &b().scale(&Rat::int(2))).pow(2);
        let q = p.subst("a", &(&Poly::one() - &b().scale(&Rat::int(2))));
        assert_eq!(q, Poly::one());
        let vals = BTreeMap::from([("a".into(), Rat::int(3)), ("b".into(), Rat::int(-1))]);
        assert_eq!(p.eval(&vals), Rat::int(1));
    }

    #[test]
    fn cancellation_is_structural() {
        let p = &(&a() * &b()) - &(&b() * &a());
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero());
    }
}
