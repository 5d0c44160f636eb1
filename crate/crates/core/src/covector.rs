//! Length-`n` rational vectors used both for covectors in `g*` (axial
//! values, weights) and for vectors in `g` (polarizing directions).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use num_traits::Zero;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covector(pub Vec<Rational>);

impl Covector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Covector(coords)
    }

    pub fn zero(n: usize) -> Self {
        Covector(vec![Rational::zero(); n])
    }

    /// `i`-th standard basis covector (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = Self::zero(n);
        c.0[i] = Rational::from_integer(1.into());
        c
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Covector(
            coords
                .iter()
                .map(|&k| crate::rational::rat_int(k))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Pairing with a vector of `g` given in the dual coordinates.
    pub fn pair(&self, xi: &Covector) -> Rational {
        assert_eq!(self.dim(), xi.dim(), "dimension mismatch in pairing");
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(xi.0.iter()) {
            acc += a * b;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Covector {
        Covector(self.0.iter().map(|x| x * c).collect())
    }

    /// First index with a nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// True when `self` and `other` span at most a line.
    pub fn is_parallel(&self, other: &Covector) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }

    /// If `self = c * other` for a (unique) rational `c`, returns `c`.
    /// `other` must be nonzero.
    pub fn ratio_to(&self, other: &Covector) -> Option<Rational> {
        let p = other.pivot()?;
        let c = &self.0[p] / &other.0[p];
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Appends a coordinate (embedding `g*` into `g* + R`).
    pub fn extend(&self, last: Rational) -> Covector {
        let mut v = self.0.clone();
        v.push(last);
        Covector(v)
    }

    /// Drops the coordinate at `idx`.
    pub fn drop_coord(&self, idx: usize) -> Covector {
        let mut v = self.0.clone();
        v.remove(idx);
        Covector(v)
    }
}

impl Add for &Covector {
    type Output = Covector;
    fn add(self, rhs: &Covector) -> Covector {
        assert_eq!(self.dim(), rhs.dim());
        Covector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Covector {
    type Output = Covector;
    fn sub(self, rhs: &Covector) -> Covector {
        assert_eq!(self.dim(), rhs.dim());
        Covector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Covector {
    type Output = Covector;
    fn neg(self) -> Covector {
        Covector(self.0.iter().map(|a| -a).collect())
    }
}

fn fmt_coords(v: &Covector, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in v.0.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", c)?;
    }
    write!(f, ")")
}

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(self, f)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parallel_and_ratio() {
        let a = Covector::from_ints(&[2, -4, 0]);
        let b = Covector::from_ints(&[-1, 2, 0]);
        let c = Covector::from_ints(&[1, 0, 0]);
        assert!(a.is_parallel(&b));
        assert!(!a.is_parallel(&c));
        assert_eq!(a.ratio_to(&b), Some(rat(-2, 1)));
        assert_eq!(a.ratio_to(&c), None);
        assert!(Covector::zero(3).is_parallel(&a));
    }

    #[test]
    fn pairing() {
        let a = Covector::from_ints(&[1, -1, 0]);
        let xi = Covector::from_ints(&[1, 2, 3]);
        assert_eq!(a.pair(&xi), rat(-1, 1));
    }
}
