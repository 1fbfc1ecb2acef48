//! Small symmetric intersection lattices on a surface.
//!
//! Used for divisor classes on a ruled surface (fiber and section classes),
//! for the exceptional divisors of a twice-blown-up surface point, and for
//! curve classes on a product of a curve with a line.

use crate::rat::Rat;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("gram matrix is not square")]
    NotSquare,
    #[error("gram matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("unknown lattice generator {0}")]
    UnknownGenerator(String),
}

/// A free module on named generators with a symmetric intersection pairing.
#[derive(Debug, Clone)]
pub struct SurfaceLattice {
    names: Vec<String>,
    gram: Vec<Vec<Rat>>,
}

/// A divisor class: rational coefficients in the lattice basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeClass(pub Vec<Rat>);

impl SurfaceLattice {
    #[allow(clippy::needless_range_loop)]
    pub fn new(names: &[&str], gram: &[&[i64]]) -> Result<Self, LatticeError> {
        let n = names.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SurfaceLattice {
            names: names.iter().map(|s| s.to_string()).collect(),
            gram: gram
                .iter()
                .map(|row| row.iter().map(|&v| Rat::int(v)).collect())
                .collect(),
        })
    }

    /// The hyperbolic rank-2 lattice f² = c² = 0, f·c = 1 of a ruled
    /// surface (fiber class, section class).
    pub fn ruled_surface() -> Self {
        SurfaceLattice::new(&["fib", "c"], &[&[0, 1], &[1, 0]]).unwrap()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn class(&self, coeffs: &[(&str, Rat)]) -> Result<LatticeClass, LatticeError> {
        let mut v = vec![Rat::zero(); self.names.len()];
        for (name, c) in coeffs {
            let idx = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| LatticeError::UnknownGenerator(name.to_string()))?;
            v[idx] = &v[idx] + c;
        }
        Ok(LatticeClass(v))
    }

    pub fn pair(&self, a: &LatticeClass, b: &LatticeClass) -> Rat {
        let mut total = Rat::zero();
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                total += &(&(ai * bj) * &self.gram[i][j]);
            }
        }
        total
    }

    pub fn self_intersection(&self, a: &LatticeClass) -> Rat {
        self.pair(a, a)
    }
}

impl LatticeClass {
    pub fn add(&self, rhs: &LatticeClass) -> LatticeClass {
        LatticeClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> LatticeClass {
        LatticeClass(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> LatticeClass {
        LatticeClass(self.0.iter().map(|a| a * c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ruled_surface_squares() {
        let l = SurfaceLattice::ruled_surface();
        // section plus a fibers has self-intersection 2a
        for a in [0i64, 1, 32, 64] {
            let cls = l
                .class(&[("c", Rat::int(1)), ("fib", Rat::int(a))])
                .unwrap();
            assert_eq!(l.self_intersection(&cls), Rat::int(2 * a));
        }
        // (32f - c).(32f + c) = 0: the two half-sums are orthogonal
        let minus = l
            .class(&[("fib", Rat::int(32)), ("c", Rat::int(-1))])
            .unwrap();
        let plus = l
            .class(&[("fib", Rat::int(32)), ("c", Rat::int(1))])
            .unwrap();
        assert_eq!(l.pair(&minus, &plus), Rat::zero());
    }

    #[test]
    fn symmetry_validated() {
        assert!(SurfaceLattice::new(&["A", "B"], &[&[0, 1], &[2, 0]]).is_err());
    }
}
