//! Symbolic verification of the local Higgs-field computations at a
//! tacnode of the branch divisor: the 4x4 multiplication and differential
//! matrices over the double-double cover x = u^2 + v, y = v^2, their
//! behavior under the blow-up and root substitutions, frame changes, and
//! the logarithmic-pole predicate.
//!
//! Entries live in a Laurent-Puiseux ring with declared unit denominators
//! (x^2 - y before substitution, beta^4 - 1 after). Differential forms are
//! stored in the dlog basis, one coefficient per dv/v, so logarithmicity
//! along a divisor variable is a nonnegative-exponent condition.

use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub const SIZE: usize = 4;

#[derive(Debug, Error)]
pub enum FormError {
    #[error("algebra mismatch between operands")]
    AlgebraMismatch,
    #[error("exponent {exp} of {var} does not respect root order {order}")]
    RootOrderViolation {
        var: String,
        exp: Box<Rat>,
        order: u32,
    },
    #[error("substitution image for {0} must be a nonzero monomial")]
    BadImage(String),
    #[error("no substitution image for unit {0}")]
    MissingUnitImage(String),
    #[error("fractional power {exp} of a monomial with coefficient {coeff}")]
    FractionalPower { exp: Box<Rat>, coeff: Box<Rat> },
    #[error("frame entries must be invertible monomials")]
    BadFrame,
    #[error("denominator parameter must be nonzero")]
    ZeroDenominator,
}

/// Exponent vector with rational entries; zero exponents never stored.
pub type Exps = BTreeMap<String, Rat>;

/// A finite sum of Puiseux monomials: exponent vector -> coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PuiseuxPoly(BTreeMap<Exps, Rat>);

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly(BTreeMap::new())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exps::new(), c);
        }
        PuiseuxPoly(terms)
    }

    /// c . prod var^exp with rational exponents.
    pub fn monomial(c: Rat, exps: &[(&str, Rat)]) -> Self {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        let mut e = Exps::new();
        for (v, k) in exps {
            if !k.is_zero() {
                let entry = e.entry(v.to_string()).or_insert_with(Rat::zero);
                *entry += k;
                if entry.is_zero() {
                    e.remove(*v);
                }
            }
        }
        PuiseuxPoly(BTreeMap::from([(e, c)]))
    }

    pub fn var(name: &str) -> Self {
        PuiseuxPoly::monomial(Rat::one(), &[(name, Rat::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.0.iter()
    }

    fn insert(&mut self, exps: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(exps) {
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

    pub fn add(&self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.0 {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> PuiseuxPoly {
        PuiseuxPoly(self.0.iter().map(|(e, c)| (e.clone(), -c)).collect())
    }

    pub fn sub(&self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> PuiseuxPoly {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly(self.0.iter().map(|(e, v)| (e.clone(), v * c)).collect())
    }

    pub fn mul(&self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = PuiseuxPoly::zero();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &rhs.0 {
                let mut e = ea.clone();
                for (v, k) in eb {
                    let entry = e.entry(v.clone()).or_insert_with(Rat::zero);
                    *entry += k;
                    if entry.is_zero() {
                        e.remove(v);
                    }
                }
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// Minimal exponent of `var` over the support (None when zero).
    pub fn min_exponent(&self, var: &str) -> Option<Rat> {
        self.0
            .keys()
            .map(|e| e.get(var).cloned().unwrap_or_else(Rat::zero))
            .min()
    }

    /// Exact division by a unit polynomial, keyed on its leading variable.
    /// Returns None when not divisible.
    fn divide_exact(&self, unit: &UnitPoly) -> Option<PuiseuxPoly> {
        let mut rem = self.clone();
        let mut quotient = PuiseuxPoly::zero();
        while !rem.is_zero() {
            // take the term with maximal exponent of the leading variable
            let (exps, coeff) = rem
                .0
                .iter()
                .max_by(|(ea, _), (eb, _)| {
                    let xa = ea.get(&unit.lead_var).cloned().unwrap_or_else(Rat::zero);
                    let xb = eb.get(&unit.lead_var).cloned().unwrap_or_else(Rat::zero);
                    xa.cmp(&xb)
                })
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let top = exps.get(&unit.lead_var).cloned().unwrap_or_else(Rat::zero);
            if top < unit.lead_exp {
                return None;
            }
            let mut q_exps = exps.clone();
            for (v, k) in &unit.lead_exps {
                let entry = q_exps.entry(v.clone()).or_insert_with(Rat::zero);
                *entry -= k;
                if entry.is_zero() {
                    q_exps.remove(v);
                }
            }
            let q = PuiseuxPoly(BTreeMap::from([(q_exps, &coeff / &unit.lead_coeff)]));
            rem = rem.sub(&q.mul(&unit.poly));
            quotient = quotient.add(&q);
        }
        Some(quotient)
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.0.iter().enumerate() {
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
            let mut wrote = if !mag.is_one() || exps.is_empty() {
                write!(f, "{mag}")?;
                true
            } else {
                false
            };
            for (v, e) in exps {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                if !e.is_one() {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

/// A declared unit: a polynomial inverted away from its zero locus,
/// tracked by id and never expanded into a series.
#[derive(Debug, Clone, PartialEq)]
struct UnitPoly {
    poly: PuiseuxPoly,
    lead_var: String,
    lead_exp: Rat,
    lead_exps: Exps,
    lead_coeff: Rat,
}

impl UnitPoly {
    fn new(poly: PuiseuxPoly) -> Self {
        // leading variable: one whose maximal exponent is achieved by a
        // unique term, so long division is well defined
        let vars: std::collections::BTreeSet<String> =
            poly.0.keys().flat_map(|e| e.keys().cloned()).collect();
        for var in &vars {
            let max = poly
                .0
                .keys()
                .map(|e| e.get(var).cloned().unwrap_or_else(Rat::zero))
                .max()
                .unwrap();
            let at_max: Vec<&Exps> = poly
                .0
                .keys()
                .filter(|e| e.get(var).cloned().unwrap_or_else(Rat::zero) == max)
                .collect();
            if at_max.len() == 1 && !max.is_zero() {
                let lead_exps = at_max[0].clone();
                let lead_coeff = poly.0[&lead_exps].clone();
                return UnitPoly {
                    poly: poly.clone(),
                    lead_var: var.clone(),
                    lead_exp: max,
                    lead_exps,
                    lead_coeff,
                };
            }
        }
        panic!("unit polynomial has no usable leading variable: {poly}");
    }
}

#[derive(Debug, PartialEq)]
struct AlgebraData {
    name: String,
    /// root order per variable (exponent denominators must divide it)
    root_orders: BTreeMap<String, u32>,
    units: BTreeMap<String, UnitPoly>,
}

/// The ambient localized Puiseux algebra: variables with root orders and
/// declared unit denominators. Cheap to clone.
#[derive(Clone, Debug)]
pub struct LocalAlgebra(Arc<AlgebraData>);

impl PartialEq for LocalAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl LocalAlgebra {
    pub fn new(name: &str, root_orders: &[(&str, u32)], units: &[(&str, PuiseuxPoly)]) -> Self {
        LocalAlgebra(Arc::new(AlgebraData {
            name: name.to_string(),
            root_orders: root_orders
                .iter()
                .map(|(v, r)| (v.to_string(), *r))
                .collect(),
            units: units
                .iter()
                .map(|(id, p)| (id.to_string(), UnitPoly::new(p.clone())))
                .collect(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn unit_poly(&self, id: &str) -> Option<&PuiseuxPoly> {
        self.0.units.get(id).map(|u| &u.poly)
    }

    fn root_order(&self, var: &str) -> u32 {
        self.0.root_orders.get(var).copied().unwrap_or(1)
    }

    fn check_root_orders(&self, poly: &PuiseuxPoly) -> Result<(), FormError> {
        for (exps, _) in poly.terms() {
            for (v, e) in exps {
                let order = self.root_order(v);
                if !(e * &Rat::int(order as i64)).is_integer() {
                    return Err(FormError::RootOrderViolation {
                        var: v.clone(),
                        exp: Box::new(e.clone()),
                        order,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> LocalExpr {
        LocalExpr {
            algebra: self.clone(),
            num: PuiseuxPoly::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Rat) -> LocalExpr {
        LocalExpr {
            algebra: self.clone(),
            num: PuiseuxPoly::constant(c),
            den: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> LocalExpr {
        self.constant(Rat::one())
    }

    pub fn monomial(&self, c: Rat, exps: &[(&str, Rat)]) -> LocalExpr {
        let num = PuiseuxPoly::monomial(c, exps);
        self.check_root_orders(&num)
            .expect("monomial respects root orders");
        LocalExpr {
            algebra: self.clone(),
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn var(&self, name: &str) -> LocalExpr {
        self.monomial(Rat::one(), &[(name, Rat::one())])
    }

    pub fn from_poly(&self, num: PuiseuxPoly) -> LocalExpr {
        self.check_root_orders(&num)
            .expect("polynomial respects root orders");
        LocalExpr {
            algebra: self.clone(),
            num,
            den: BTreeMap::new(),
        }
    }

    /// num / prod unit^power; reduced on construction.
    pub fn fraction(&self, num: PuiseuxPoly, den: &[(&str, u32)]) -> LocalExpr {
        let mut d = BTreeMap::new();
        for (id, p) in den {
            assert!(self.0.units.contains_key(*id), "undeclared unit {id}");
            if *p > 0 {
                *d.entry(id.to_string()).or_insert(0) += p;
            }
        }
        let mut out = LocalExpr {
            algebra: self.clone(),
            num,
            den: d,
        };
        out.reduce();
        out
    }
}

/// A localized Laurent-Puiseux expression: a polynomial numerator over a
/// product of declared-unit denominators, kept reduced.
#[derive(Clone, Debug)]
pub struct LocalExpr {
    algebra: LocalAlgebra,
    num: PuiseuxPoly,
    den: BTreeMap<String, u32>,
}

impl LocalExpr {
    pub fn algebra(&self) -> &LocalAlgebra {
        &self.algebra
    }

    pub fn numerator(&self) -> &PuiseuxPoly {
        &self.num
    }

    pub fn denominator_units(&self) -> &BTreeMap<String, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let ids: Vec<String> = self.den.keys().cloned().collect();
        for id in ids {
            let unit = &self.algebra.0.units[&id];
            while self.den.get(&id).copied().unwrap_or(0) > 0 {
                match self.num.divide_exact(unit) {
                    Some(q) => {
                        self.num = q;
                        let p = self.den.get_mut(&id).unwrap();
                        *p -= 1;
                        if *p == 0 {
                            self.den.remove(&id);
                        }
                    }
                    None => break,
                }
            }
        }
        self.algebra
            .check_root_orders(&self.num)
            .expect("root orders preserved by arithmetic");
    }

    fn check_algebra(&self, rhs: &LocalExpr) {
        assert!(self.algebra == rhs.algebra, "algebra mismatch");
    }

    pub fn add(&self, rhs: &LocalExpr) -> LocalExpr {
        self.check_algebra(rhs);
        // bring to a common denominator
        let mut den = self.den.clone();
        for (id, p) in &rhs.den {
            let e = den.entry(id.clone()).or_insert(0);
            *e = (*e).max(*p);
        }
        let lift = |num: &PuiseuxPoly, own: &BTreeMap<String, u32>| {
            let mut out = num.clone();
            for (id, p) in &den {
                let have = own.get(id).copied().unwrap_or(0);
                let unit = &self.algebra.0.units[id];
                for _ in have..*p {
                    out = out.mul(&unit.poly);
                }
            }
            out
        };
        let num = lift(&self.num, &self.den).add(&lift(&rhs.num, &rhs.den));
        let mut out = LocalExpr {
            algebra: self.algebra.clone(),
            num,
            den,
        };
        out.reduce();
        out
    }

    pub fn neg(&self) -> LocalExpr {
        LocalExpr {
            algebra: self.algebra.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &LocalExpr) -> LocalExpr {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &LocalExpr) -> LocalExpr {
        self.check_algebra(rhs);
        let mut den = self.den.clone();
        for (id, p) in &rhs.den {
            *den.entry(id.clone()).or_insert(0) += p;
        }
        let mut out = LocalExpr {
            algebra: self.algebra.clone(),
            num: self.num.mul(&rhs.num),
            den,
        };
        out.reduce();
        out
    }

    pub fn scale(&self, c: &Rat) -> LocalExpr {
        let mut out = LocalExpr {
            algebra: self.algebra.clone(),
            num: self.num.scale(c),
            den: self.den.clone(),
        };
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    /// Minimal exponent of `var`, treating unit denominators as exponent
    /// free: units here are required not to vanish along the divisor.
    pub fn min_exponent(&self, var: &str) -> Option<Rat> {
        self.num.min_exponent(var)
    }
}

impl PartialEq for LocalExpr {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.sub(other).is_zero()
    }
}

impl fmt::Display for LocalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})", self.num)?;
        for (id, p) in &self.den {
            write!(f, "/{id}")?;
            if *p > 1 {
                write!(f, "^{p}")?;
            }
        }
        Ok(())
    }
}

/// A differential form as coefficients in the dlog basis: one LocalExpr
/// per dvar/var.
#[derive(Clone, Debug, PartialEq)]
pub struct FormExpr {
    algebra: LocalAlgebra,
    coeffs: BTreeMap<String, LocalExpr>,
}

impl FormExpr {
    pub fn zero(algebra: &LocalAlgebra) -> Self {
        FormExpr {
            algebra: algebra.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// coefficient . dlog(var)
    pub fn dlog(coefficient: LocalExpr, var: &str) -> Self {
        let algebra = coefficient.algebra().clone();
        let mut coeffs = BTreeMap::new();
        if !coefficient.is_zero() {
            coeffs.insert(var.to_string(), coefficient);
        }
        FormExpr { algebra, coeffs }
    }

    /// d(var) = var . dlog(var)
    pub fn d_var(algebra: &LocalAlgebra, var: &str) -> Self {
        FormExpr::dlog(algebra.var(var), var)
    }

    pub fn coefficient(&self, var: &str) -> LocalExpr {
        self.coeffs
            .get(var)
            .cloned()
            .unwrap_or_else(|| self.algebra.zero())
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&String, &LocalExpr)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &FormExpr) -> FormExpr {
        assert!(self.algebra == rhs.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (v, c) in &rhs.coeffs {
            let sum = out.coefficient(v).add(c);
            if sum.is_zero() {
                out.coeffs.remove(v);
            } else {
                out.coeffs.insert(v.clone(), sum);
            }
        }
        out
    }

    pub fn neg(&self) -> FormExpr {
        FormExpr {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, c)| (v.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &FormExpr) -> FormExpr {
        self.add(&rhs.neg())
    }

    pub fn mul_expr(&self, scalar: &LocalExpr) -> FormExpr {
        let mut out = FormExpr::zero(&self.algebra);
        for (v, c) in &self.coeffs {
            let prod = c.mul(scalar);
            if !prod.is_zero() {
                out.coeffs.insert(v.clone(), prod);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> FormExpr {
        if c.is_zero() {
            return FormExpr::zero(&self.algebra);
        }
        FormExpr {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, x)| (v.clone(), x.scale(c)))
                .collect(),
        }
    }
}

impl fmt::Display for FormExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (v, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] dlog({v})")?;
        }
        Ok(())
    }
}

/// 4x4 matrix of localized function entries.
#[derive(Clone, Debug, PartialEq)]
pub struct FuncMatrix {
    algebra: LocalAlgebra,
    entries: Vec<Vec<LocalExpr>>,
}

/// 4x4 matrix of differential-form entries.
#[derive(Clone, Debug, PartialEq)]
pub struct FormMatrix {
    algebra: LocalAlgebra,
    entries: Vec<Vec<FormExpr>>,
}

impl FuncMatrix {
    pub fn from_entries(algebra: &LocalAlgebra, entries: Vec<Vec<LocalExpr>>) -> Self {
        assert_eq!(entries.len(), SIZE);
        assert!(entries.iter().all(|r| r.len() == SIZE));
        FuncMatrix {
            algebra: algebra.clone(),
            entries,
        }
    }

    pub fn zero(algebra: &LocalAlgebra) -> Self {
        let entries = (0..SIZE)
            .map(|_| (0..SIZE).map(|_| algebra.zero()).collect())
            .collect();
        FuncMatrix {
            algebra: algebra.clone(),
            entries,
        }
    }

    pub fn identity(algebra: &LocalAlgebra) -> Self {
        let mut m = FuncMatrix::zero(algebra);
        for i in 0..SIZE {
            m.entries[i][i] = algebra.one();
        }
        m
    }

    pub fn scalar(algebra: &LocalAlgebra, value: &LocalExpr) -> Self {
        let mut m = FuncMatrix::zero(algebra);
        for i in 0..SIZE {
            m.entries[i][i] = value.clone();
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> &LocalExpr {
        &self.entries[row][col]
    }

    pub fn mul(&self, rhs: &FuncMatrix) -> FuncMatrix {
        assert!(self.algebra == rhs.algebra, "algebra mismatch");
        let mut out = FuncMatrix::zero(&self.algebra);
        for i in 0..SIZE {
            for j in 0..SIZE {
                let mut acc = self.algebra.zero();
                for k in 0..SIZE {
                    acc = acc.add(&self.entries[i][k].mul(&rhs.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    /// Function matrix times form matrix.
    pub fn mul_form(&self, rhs: &FormMatrix) -> FormMatrix {
        assert!(self.algebra == rhs.algebra, "algebra mismatch");
        let mut out = FormMatrix::zero(&self.algebra);
        for i in 0..SIZE {
            for j in 0..SIZE {
                let mut acc = FormExpr::zero(&self.algebra);
                for k in 0..SIZE {
                    acc = acc.add(&rhs.entries[k][j].mul_expr(&self.entries[i][k]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn scale_expr(&self, scalar: &LocalExpr) -> FuncMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.mul(scalar)).collect())
            .collect();
        FuncMatrix {
            algebra: self.algebra.clone(),
            entries,
        }
    }
}

impl FormMatrix {
    pub fn from_entries(algebra: &LocalAlgebra, entries: Vec<Vec<FormExpr>>) -> Self {
        assert_eq!(entries.len(), SIZE);
        assert!(entries.iter().all(|r| r.len() == SIZE));
        FormMatrix {
            algebra: algebra.clone(),
            entries,
        }
    }

    pub fn zero(algebra: &LocalAlgebra) -> Self {
        let entries = (0..SIZE)
            .map(|_| (0..SIZE).map(|_| FormExpr::zero(algebra)).collect())
            .collect();
        FormMatrix {
            algebra: algebra.clone(),
            entries,
        }
    }

    /// form . identity
    pub fn scalar(algebra: &LocalAlgebra, form: &FormExpr) -> Self {
        let mut m = FormMatrix::zero(algebra);
        for i in 0..SIZE {
            m.entries[i][i] = form.clone();
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> &FormExpr {
        &self.entries[row][col]
    }

    pub fn add(&self, rhs: &FormMatrix) -> FormMatrix {
        assert!(self.algebra == rhs.algebra, "algebra mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a.add(b)).collect())
            .collect();
        FormMatrix {
            algebra: self.algebra.clone(),
            entries,
        }
    }

    pub fn sub(&self, rhs: &FormMatrix) -> FormMatrix {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FormMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.neg()).collect())
            .collect();
        FormMatrix {
            algebra: self.algebra.clone(),
            entries,
        }
    }

    pub fn scale(&self, c: &Rat) -> FormMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.scale(c)).collect())
            .collect();
        FormMatrix {
            algebra: self.algebra.clone(),
            entries,
        }
    }
}

/// A variable image under substitution: a nonzero coefficient times a
/// monomial in the target variables.
#[derive(Clone, Debug)]
pub struct MonomialImage {
    pub coeff: Rat,
    pub exps: Exps,
}

impl MonomialImage {
    pub fn new(coeff: Rat, exps: &[(&str, i64)]) -> Self {
        assert!(!coeff.is_zero());
        MonomialImage {
            coeff,
            exps: exps
                .iter()
                .filter(|(_, k)| *k != 0)
                .map(|(v, k)| (v.to_string(), Rat::int(*k)))
                .collect(),
        }
    }

    fn pow(&self, e: &Rat) -> Result<(Rat, Exps), FormError> {
        let coeff = if self.coeff.is_one() {
            Rat::one()
        } else if let Some(k) = e.to_i64() {
            self.coeff.pow(k)
        } else {
            return Err(FormError::FractionalPower {
                exp: Box::new(e.clone()),
                coeff: Box::new(self.coeff.clone()),
            });
        };
        let exps = self
            .exps
            .iter()
            .map(|(v, k)| (v.clone(), k * e))
            .filter(|(_, k)| !k.is_zero())
            .collect();
        Ok((coeff, exps))
    }

    /// dlog(c . prod v^e) = sum e dlog(v).
    fn dlog(&self, algebra: &LocalAlgebra) -> FormExpr {
        let mut out = FormExpr::zero(algebra);
        for (v, e) in &self.exps {
            out = out.add(&FormExpr::dlog(algebra.constant(e.clone()), v));
        }
        out
    }
}

/// Declared-unit rewrite data: id, monomial prefactor, unit factors.
pub type UnitImageSpec<'a> = (&'a str, MonomialImage, &'a [(&'a str, u32)]);

/// A substitution of variables by monomials, together with rewrite rules
/// for the declared units it affects and the algebra the result lives in.
pub struct Substitution {
    pub target: LocalAlgebra,
    var_images: BTreeMap<String, MonomialImage>,
    /// unit id -> (monomial prefactor, unit factors in the target)
    unit_images: BTreeMap<String, (MonomialImage, Vec<(String, u32)>)>,
}

impl Substitution {
    pub fn new(
        target: &LocalAlgebra,
        var_images: &[(&str, MonomialImage)],
        unit_images: &[UnitImageSpec],
    ) -> Self {
        Substitution {
            target: target.clone(),
            var_images: var_images
                .iter()
                .map(|(v, m)| (v.to_string(), m.clone()))
                .collect(),
            unit_images: unit_images
                .iter()
                .map(|(id, m, units)| {
                    (
                        id.to_string(),
                        (
                            m.clone(),
                            units.iter().map(|(u, p)| (u.to_string(), *p)).collect(),
                        ),
                    )
                })
                .collect(),
        }
    }

    pub fn apply_expr(&self, expr: &LocalExpr) -> Result<LocalExpr, FormError> {
        let mut num_out = PuiseuxPoly::zero();
        for (exps, c) in expr.num.terms() {
            let mut coeff = c.clone();
            let mut image_exps = Exps::new();
            for (v, e) in exps {
                match self.var_images.get(v) {
                    Some(img) => {
                        let (c2, es) = img.pow(e)?;
                        coeff *= &c2;
                        for (w, k) in es {
                            let entry = image_exps.entry(w).or_insert_with(Rat::zero);
                            *entry += &k;
                        }
                    }
                    None => {
                        let entry = image_exps.entry(v.clone()).or_insert_with(Rat::zero);
                        *entry += e;
                    }
                }
            }
            image_exps.retain(|_, k| !k.is_zero());
            num_out.insert(image_exps, coeff);
        }
        // rewrite the unit denominators
        let mut den_out: BTreeMap<String, u32> = BTreeMap::new();
        for (id, p) in &expr.den {
            match self.unit_images.get(id) {
                Some((prefactor, unit_factors)) => {
                    // 1/unit^p = prefactor^{-p} / prod target-units^{p.k}
                    let (c2, es) = prefactor.pow(&Rat::int(-(*p as i64)))?;
                    num_out = num_out
                        .mul(&PuiseuxPoly::monomial(c2, &[]))
                        .mul(&PuiseuxPoly(BTreeMap::from([(es, Rat::one())])));
                    for (u, k) in unit_factors {
                        *den_out.entry(u.clone()).or_insert(0) += k * p;
                    }
                }
                None => {
                    if self.target.unit_poly(id).is_none() {
                        return Err(FormError::MissingUnitImage(id.clone()));
                    }
                    *den_out.entry(id.clone()).or_insert(0) += p;
                }
            }
        }
        let den: Vec<(&str, u32)> = den_out.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        Ok(self.target.fraction(num_out, &den))
    }

    pub fn apply_form(&self, form: &FormExpr) -> Result<FormExpr, FormError> {
        let mut out = FormExpr::zero(&self.target);
        for (basis_var, coef) in form.coeffs() {
            let new_coef = self.apply_expr(coef)?;
            let dlog_image = match self.var_images.get(basis_var) {
                Some(img) => img.dlog(&self.target),
                None => FormExpr::dlog(self.target.one(), basis_var),
            };
            out = out.add(&dlog_image.mul_expr(&new_coef));
        }
        Ok(out)
    }

    pub fn apply_func_matrix(&self, m: &FuncMatrix) -> Result<FuncMatrix, FormError> {
        let mut entries = Vec::with_capacity(SIZE);
        for row in &m.entries {
            let mut out_row = Vec::with_capacity(SIZE);
            for e in row {
                out_row.push(self.apply_expr(e)?);
            }
            entries.push(out_row);
        }
        Ok(FuncMatrix::from_entries(&self.target, entries))
    }

    pub fn apply_form_matrix(&self, m: &FormMatrix) -> Result<FormMatrix, FormError> {
        let mut entries = Vec::with_capacity(SIZE);
        for row in &m.entries {
            let mut out_row = Vec::with_capacity(SIZE);
            for e in row {
                out_row.push(self.apply_form(e)?);
            }
            entries.push(out_row);
        }
        Ok(FormMatrix::from_entries(&self.target, entries))
    }
}

/// Conjugate by a diagonal frame of invertible monomials: entry (i,j)
/// is multiplied by frame_i / frame_j.
pub fn frame_conjugate_func(m: &FuncMatrix, frame: &[LocalExpr; SIZE]) -> FuncMatrix {
    let ratios = frame_ratios(&m.algebra, frame);
    let entries = (0..SIZE)
        .map(|i| {
            (0..SIZE)
                .map(|j| m.entries[i][j].mul(&ratios[i][j]))
                .collect()
        })
        .collect();
    FuncMatrix {
        algebra: m.algebra.clone(),
        entries,
    }
}

pub fn frame_conjugate_form(m: &FormMatrix, frame: &[LocalExpr; SIZE]) -> FormMatrix {
    let ratios = frame_ratios(&m.algebra, frame);
    let entries = (0..SIZE)
        .map(|i| {
            (0..SIZE)
                .map(|j| m.entries[i][j].mul_expr(&ratios[i][j]))
                .collect()
        })
        .collect();
    FormMatrix {
        algebra: m.algebra.clone(),
        entries,
    }
}

fn invert_monomial(e: &LocalExpr) -> LocalExpr {
    assert!(e.den.is_empty(), "frame entries must be pure monomials");
    assert_eq!(e.num.0.len(), 1, "frame entries must be pure monomials");
    let (exps, c) = e.num.0.iter().next().unwrap();
    let inv_exps: Vec<(&str, Rat)> = exps.iter().map(|(v, k)| (v.as_str(), -k)).collect();
    e.algebra.monomial(c.recip(), &inv_exps)
}

fn frame_ratios(algebra: &LocalAlgebra, frame: &[LocalExpr; SIZE]) -> Vec<Vec<LocalExpr>> {
    debug_assert!(frame.iter().all(|e| e.algebra() == algebra));
    (0..SIZE)
        .map(|i| {
            (0..SIZE)
                .map(|j| frame[i].mul(&invert_monomial(&frame[j])))
                .collect()
        })
        .collect()
}

/// One failing term of the logarithmicity check.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleFailure {
    pub row: usize,
    pub col: usize,
    pub basis_var: String,
    pub divisor: String,
    /// pole order: the negated minimal exponent of the divisor variable
    pub order: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogReport {
    pub matrix_name: String,
    pub failures: Vec<PoleFailure>,
}

impl LogReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A form matrix is logarithmic along the listed divisor variables when
/// every dlog coefficient has nonnegative exponents in each of them;
/// declared unit denominators are ignored (they do not vanish there).
pub fn is_logarithmic(name: &str, m: &FormMatrix, divisors: &[&str]) -> LogReport {
    let mut failures = Vec::new();
    for (i, row) in m.entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            for (basis_var, coef) in entry.coeffs() {
                for divisor in divisors {
                    if let Some(min) = coef.min_exponent(divisor) {
                        if min.is_negative() {
                            failures.push(PoleFailure {
                                row: i,
                                col: j,
                                basis_var: basis_var.clone(),
                                divisor: divisor.to_string(),
                                order: -&min,
                            });
                        }
                    }
                }
            }
        }
    }
    LogReport {
        matrix_name: name.to_string(),
        failures,
    }
}

// ---- The concrete local model ----
//
// Coordinates u, v upstairs with x = u^2 + v, y = v^2 downstairs; the
// branch divisor is y (x^2 - y) with Delta := x^2 - y. The direct image
// basis is 1, u, v, uv.

/// The base algebra in x, y with the unit Delta = x^2 - y.
pub fn base_algebra() -> LocalAlgebra {
    let delta = PuiseuxPoly::var("x")
        .mul(&PuiseuxPoly::var("x"))
        .sub(&PuiseuxPoly::var("y"));
    LocalAlgebra::new("xy", &[("x", 1), ("y", 1)], &[("Delta", delta)])
}

/// dlog(Delta) expanded over the dlog basis: d(Delta) = 2x dx - dy, so
/// dlog(Delta) = (2x^2 dlog x - y dlog y)/Delta.
pub fn dlog_delta(algebra: &LocalAlgebra) -> FormExpr {
    let dx_part = FormExpr::dlog(
        algebra.fraction(
            PuiseuxPoly::monomial(Rat::int(2), &[("x", Rat::int(2))]),
            &[("Delta", 1)],
        ),
        "x",
    );
    let dy_part = FormExpr::dlog(
        algebra.fraction(
            PuiseuxPoly::monomial(Rat::int(-1), &[("y", Rat::one())]),
            &[("Delta", 1)],
        ),
        "y",
    );
    dx_part.add(&dy_part)
}

/// The matrices of the local model in the basis 1, u, v, uv.
#[derive(Clone, Debug)]
pub struct LocalMatrices {
    pub algebra: LocalAlgebra,
    pub u: FuncMatrix,
    pub v: FuncMatrix,
    /// Delta times the inverse of u (entries polynomial).
    pub u_inv_delta: FuncMatrix,
    pub du: FormMatrix,
    pub dv: FormMatrix,
}

pub fn build_local_matrices() -> LocalMatrices {
    let alg = base_algebra();
    let x = || alg.var("x");
    let y = || alg.var("y");
    let zero = || alg.zero();
    let one = || alg.one();
    let int = |n: i64| alg.constant(Rat::int(n));

    let u = FuncMatrix::from_entries(
        &alg,
        vec![
            vec![zero(), x(), zero(), y().neg()],
            vec![one(), zero(), zero(), zero()],
            vec![zero(), int(-1), zero(), x()],
            vec![zero(), zero(), one(), zero()],
        ],
    );
    let v = FuncMatrix::from_entries(
        &alg,
        vec![
            vec![zero(), zero(), y(), zero()],
            vec![zero(), zero(), zero(), y()],
            vec![one(), zero(), zero(), zero()],
            vec![zero(), one(), zero(), zero()],
        ],
    );
    let delta = || alg.from_poly(alg.unit_poly("Delta").unwrap().clone());
    let u_inv_delta = FuncMatrix::from_entries(
        &alg,
        vec![
            vec![zero(), delta(), zero(), zero()],
            vec![x(), zero(), y(), zero()],
            vec![zero(), zero(), zero(), delta()],
            vec![one(), zero(), x(), zero()],
        ],
    );

    // dv = (v/2y) dy: entries of v times dlog(y)/2
    let half_dlog_y = FormExpr::dlog(alg.constant(Rat::new(1, 2)), "y");
    let dv = v.mul_form(&FormMatrix::scalar(&alg, &half_dlog_y));

    // du as displayed: (1/4) of [corner] + [dlog Delta terms] + [rest]
    let dld = dlog_delta(&alg);
    let form_zero = || FormExpr::zero(&alg);
    let dx2 = FormExpr::d_var(&alg, "x").mul_expr(&int(2));
    let minus_dy = FormExpr::d_var(&alg, "y").mul_expr(&int(-1));
    let minus_dlog_y = FormExpr::dlog(int(-1), "y");
    // (x/y) dlog Delta - (2x/y) dlog x
    let x_over_y = alg.monomial(Rat::one(), &[("x", Rat::one()), ("y", Rat::int(-1))]);
    let corner = dld
        .mul_expr(&x_over_y)
        .add(&FormExpr::dlog(x_over_y.scale(&Rat::int(-2)), "x"));
    let du = FormMatrix::from_entries(
        &alg,
        vec![
            vec![form_zero(), dx2.clone(), form_zero(), minus_dy],
            vec![
                dld.clone(),
                form_zero(),
                dx2.neg().add(&dld.mul_expr(&x())),
                form_zero(),
            ],
            vec![form_zero(), minus_dlog_y, form_zero(), dx2.clone()],
            vec![corner, form_zero(), dld.clone(), form_zero()],
        ],
    )
    .scale(&Rat::new(1, 4));

    LocalMatrices {
        algebra: alg,
        u,
        v,
        u_inv_delta,
        du,
        dv,
    }
}

/// Outcome of one matrix identity check, with the first mismatching entry
/// when it fails.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    pub mismatch: Option<(usize, usize)>,
}

fn compare_func(name: &str, lhs: &FuncMatrix, rhs: &FuncMatrix) -> IdentityCheck {
    for i in 0..SIZE {
        for j in 0..SIZE {
            if lhs.entry(i, j) != rhs.entry(i, j) {
                return IdentityCheck {
                    name: name.to_string(),
                    pass: false,
                    mismatch: Some((i, j)),
                };
            }
        }
    }
    IdentityCheck {
        name: name.to_string(),
        pass: true,
        mismatch: None,
    }
}

fn compare_form(name: &str, lhs: &FormMatrix, rhs: &FormMatrix) -> IdentityCheck {
    for i in 0..SIZE {
        for j in 0..SIZE {
            if lhs.entry(i, j) != rhs.entry(i, j) {
                return IdentityCheck {
                    name: name.to_string(),
                    pass: false,
                    mismatch: Some((i, j)),
                };
            }
        }
    }
    IdentityCheck {
        name: name.to_string(),
        pass: true,
        mismatch: None,
    }
}

/// Rebuild dv and du from the defining relations v^2 = y and
/// u^2 = x - v and compare with the displayed matrices, entry by entry:
///   u (Delta u^{-1}) = Delta Id,   v v = y Id,
///   dv = v dy/2y,                  du = u^{-1}(dx - dv)/2.
pub fn verify_derivation_identities(m: &LocalMatrices) -> Vec<IdentityCheck> {
    let alg = &m.algebra;
    let delta_expr = alg.from_poly(alg.unit_poly("Delta").unwrap().clone());
    let delta_id = FuncMatrix::scalar(alg, &delta_expr);
    let y_id = FuncMatrix::scalar(alg, &alg.var("y"));

    let mut checks = vec![
        compare_func(
            "u.(Delta u^-1) = Delta.Id",
            &m.u.mul(&m.u_inv_delta),
            &delta_id,
        ),
        compare_func(
            "(Delta u^-1).u = Delta.Id",
            &m.u_inv_delta.mul(&m.u),
            &delta_id,
        ),
        compare_func("v.v = y.Id", &m.v.mul(&m.v), &y_id),
    ];

    let half_dlog_y = FormExpr::dlog(alg.constant(Rat::new(1, 2)), "y");
    let dv_derived = m.v.mul_form(&FormMatrix::scalar(alg, &half_dlog_y));
    checks.push(compare_form("dv = v dy/2y", &m.dv, &dv_derived));

    let inv_delta = alg.fraction(PuiseuxPoly::constant(Rat::one()), &[("Delta", 1)]);
    let u_inv = m.u_inv_delta.scale_expr(&inv_delta);
    let dx_id = FormMatrix::scalar(alg, &FormExpr::d_var(alg, "x"));
    let du_derived = u_inv.mul_form(&dx_id.sub(&m.dv)).scale(&Rat::new(1, 2));
    checks.push(compare_form("du = u^-1(dx - dv)/2", &m.du, &du_derived));
    checks
}

/// The algebra after the two blow-ups and the root cover: alpha = a^{1/2},
/// beta = b^{1/4}, with the strict-transform unit beta^4 - 1.
pub fn root_algebra() -> LocalAlgebra {
    let beta4m1 = PuiseuxPoly::monomial(Rat::one(), &[("beta", Rat::int(4))])
        .sub(&PuiseuxPoly::constant(Rat::one()));
    LocalAlgebra::new(
        "alphabeta",
        &[("alpha", 2), ("beta", 4)],
        &[("beta4m1", beta4m1)],
    )
}

/// The composite substitution x = alpha^2 beta^4, y = alpha^4 beta^4;
/// Delta becomes alpha^4 beta^4 (beta^4 - 1).
pub fn root_substitution() -> Substitution {
    let target = root_algebra();
    Substitution::new(
        &target,
        &[
            (
                "x",
                MonomialImage::new(Rat::one(), &[("alpha", 2), ("beta", 4)]),
            ),
            (
                "y",
                MonomialImage::new(Rat::one(), &[("alpha", 4), ("beta", 4)]),
            ),
        ],
        &[(
            "Delta",
            MonomialImage::new(Rat::one(), &[("alpha", 4), ("beta", 4)]),
            &[("beta4m1", 1)],
        )],
    )
}

/// First blow-up chart (x, a) with y = ax; Delta = x (x - a).
pub fn first_chart_substitution() -> Substitution {
    let xma = PuiseuxPoly::var("x").sub(&PuiseuxPoly::var("a"));
    let target = LocalAlgebra::new("xa", &[("x", 1), ("a", 1)], &[("xma", xma)]);
    Substitution::new(
        &target,
        &[
            ("x", MonomialImage::new(Rat::one(), &[("x", 1)])),
            ("y", MonomialImage::new(Rat::one(), &[("a", 1), ("x", 1)])),
        ],
        &[(
            "Delta",
            MonomialImage::new(Rat::one(), &[("x", 1)]),
            &[("xma", 1)],
        )],
    )
}

/// Second blow-up chart (a, b) with x = ab, y = a^2 b; Delta = a^2 b (b-1).
pub fn second_chart_substitution() -> Substitution {
    let bm1 = PuiseuxPoly::var("b").sub(&PuiseuxPoly::constant(Rat::one()));
    let target = LocalAlgebra::new("ab", &[("a", 1), ("b", 1)], &[("bm1", bm1)]);
    Substitution::new(
        &target,
        &[
            ("x", MonomialImage::new(Rat::one(), &[("a", 1), ("b", 1)])),
            ("y", MonomialImage::new(Rat::one(), &[("a", 2), ("b", 1)])),
        ],
        &[(
            "Delta",
            MonomialImage::new(Rat::one(), &[("a", 2), ("b", 1)]),
            &[("bm1", 1)],
        )],
    )
}

/// The frame change over the root cover: the first basis vector is
/// divided by alpha beta and the last is multiplied by it.
pub fn standard_frame(algebra: &LocalAlgebra) -> [LocalExpr; SIZE] {
    [
        algebra.monomial(
            Rat::one(),
            &[("alpha", Rat::int(-1)), ("beta", Rat::int(-1))],
        ),
        algebra.one(),
        algebra.one(),
        algebra.monomial(Rat::one(), &[("alpha", Rat::one()), ("beta", Rat::one())]),
    ]
}

/// Everything needed for the logarithmicity verification over the root
/// cover: the substituted matrices before and after the frame change.
#[derive(Clone, Debug)]
pub struct RootCoverMatrices {
    pub algebra: LocalAlgebra,
    pub u: FuncMatrix,
    pub v: FuncMatrix,
    pub du: FormMatrix,
    pub dv: FormMatrix,
    pub u_framed: FuncMatrix,
    pub v_framed: FuncMatrix,
    pub du_framed: FormMatrix,
    pub dv_framed: FormMatrix,
}

pub fn root_cover_matrices() -> Result<RootCoverMatrices, FormError> {
    let local = build_local_matrices();
    let sub = root_substitution();
    let u = sub.apply_func_matrix(&local.u)?;
    let v = sub.apply_func_matrix(&local.v)?;
    let du = sub.apply_form_matrix(&local.du)?;
    let dv = sub.apply_form_matrix(&local.dv)?;
    let frame = standard_frame(&sub.target);
    let u_framed = frame_conjugate_func(&u, &frame);
    let v_framed = frame_conjugate_func(&v, &frame);
    let du_framed = frame_conjugate_form(&du, &frame);
    let dv_framed = frame_conjugate_form(&dv, &frame);
    Ok(RootCoverMatrices {
        algebra: sub.target,
        u,
        v,
        du,
        dv,
        u_framed,
        v_framed,
        du_framed,
        dv_framed,
    })
}

/// The eight products {1, u, v, uv} x {du, dv} in the new frame, each
/// checked for logarithmicity along alpha and beta.
pub fn closure_reports(m: &RootCoverMatrices) -> Vec<LogReport> {
    let id = FuncMatrix::identity(&m.algebra);
    let uv = m.u_framed.mul(&m.v_framed);
    let funcs: [(&str, &FuncMatrix); 4] = [
        ("1", &id),
        ("u", &m.u_framed),
        ("v", &m.v_framed),
        ("uv", &uv),
    ];
    let forms: [(&str, &FormMatrix); 2] = [("du", &m.du_framed), ("dv", &m.dv_framed)];
    let mut out = Vec::new();
    for (fname, func) in funcs {
        for (gname, form) in forms {
            let name = format!("{fname}.{gname}");
            out.push(is_logarithmic(
                &name,
                &func.mul_form(form),
                &["alpha", "beta"],
            ));
        }
    }
    out
}

pub fn verify_full_higgs_closure() -> Result<Vec<LogReport>, FormError> {
    Ok(closure_reports(&root_cover_matrices()?))
}

/// Coefficients, discriminant, and branch count of the first-order
/// equation x^2 + (2-c)xv + v^2 cutting the relative critical locus,
/// where c = (a+/b+)^2.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalQuadratic {
    pub c: Rat,
    /// coefficients of x^2, xv, v^2
    pub coefficients: (Rat, Rat, Rat),
    pub discriminant: Rat,
    pub branch_count: u32,
}

pub fn critical_quadratic(a_plus: &Rat, b_plus: &Rat) -> Result<CriticalQuadratic, FormError> {
    if b_plus.is_zero() {
        return Err(FormError::ZeroDenominator);
    }
    let ratio = a_plus / b_plus;
    let c = &ratio * &ratio;
    let middle = &Rat::int(2) - &c;
    let discriminant = &(&middle * &middle) - &Rat::int(4);
    // (2-c)^2 - 4 = c^2 - 4c; two branches unless c in {0, 4}
    debug_assert_eq!(discriminant, &(&c * &c) - &(&Rat::int(4) * &c));
    let branch_count = if c.is_zero() || c == Rat::int(4) {
        1
    } else {
        2
    };
    Ok(CriticalQuadratic {
        c,
        coefficients: (Rat::one(), middle, Rat::one()),
        discriminant,
        branch_count,
    })
}

/// Deterministic text rendering of the substituted, conjugated matrices
/// for golden-file comparison.
pub fn dump_matrices() -> Result<String, FormError> {
    let m = root_cover_matrices()?;
    let mut out = String::new();
    let func = |out: &mut String, name: &str, mat: &FuncMatrix| {
        out.push_str(&format!("[{name}]\n"));
        for i in 0..SIZE {
            for j in 0..SIZE {
                out.push_str(&format!("  ({},{}) {}\n", i + 1, j + 1, mat.entry(i, j)));
            }
        }
    };
    let form = |out: &mut String, name: &str, mat: &FormMatrix| {
        out.push_str(&format!("[{name}]\n"));
        for i in 0..SIZE {
            for j in 0..SIZE {
                out.push_str(&format!("  ({},{}) {}\n", i + 1, j + 1, mat.entry(i, j)));
            }
        }
    };
    func(&mut out, "u_f", &m.u_framed);
    func(&mut out, "v_f", &m.v_framed);
    form(&mut out, "du_f", &m.du_framed);
    form(&mut out, "dv_f", &m.dv_framed);
    Ok(out)
}
