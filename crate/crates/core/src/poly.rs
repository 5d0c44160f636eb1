//! Sparse multivariate polynomials over exact rationals.
//!
//! A `Polynomial` in `n` variables is a map from exponent vectors to nonzero
//! coefficients; the zero polynomial has an empty term map. Terms are kept
//! in graded-lexicographic order, which fixes a canonical iteration order
//! for printing and serialization. Homogeneity is a property that callers
//! check where they need it, not an invariant of the representation.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

use crate::covector::Covector;
use crate::rational::Rational;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroCovector;

impl fmt::Display for ZeroCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "linear form is zero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial is not divisible by the linear form")
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    /// A covector read as a homogeneous degree-1 polynomial.
    pub fn from_covector(v: &Covector) -> Self {
        let n = v.dim();
        let mut p = Self::zero(n);
        for i in 0..n {
            if !v.coord(i).is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(Monomial(e), v.coord(i).clone());
            }
        }
        p
    }

    /// Inverse of `from_covector` for homogeneous degree-1 polynomials.
    pub fn to_covector(&self) -> Option<Covector> {
        let mut coords = vec![Rational::zero(); self.nvars];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.0.iter().position(|&e| e == 1).unwrap();
            coords[i] = c.clone();
        }
        Some(Covector::new(coords))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when every term has total degree `d` (zero counts as
    /// homogeneous of any degree and yields `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// True when zero or concentrated in total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes each variable by a linear form; `images[i]` is the image
    /// of `x_{i+1}`, all in a common target dimension.
    pub fn substitute_linear(&self, images: &[Covector]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let out_n = images.first().map(|c| c.dim()).unwrap_or(0);
        let lin: Vec<Polynomial> = images.iter().map(Polynomial::from_covector).collect();
        let mut acc = Polynomial::zero(out_n);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(out_n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &lin[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Relabels variables: exponent of `x_i` moves to `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &exp) in m.0.iter().enumerate() {
                e[perm[i]] += exp;
            }
            out.insert_term(Monomial(e), c.clone());
        }
        out
    }

    /// Division with remainder by a nonzero linear form `alpha`, eliminating
    /// the pivot variable (first nonzero coordinate of `alpha`). Returns
    /// `(quotient, remainder)` with `self = alpha * quotient + remainder` and
    /// the remainder free of the pivot variable. The remainder is the image
    /// of `self` under restriction to the hyperplane `alpha = 0`, embedded
    /// back into `n` variables.
    pub fn div_rem_linear(
        &self,
        alpha: &Covector,
    ) -> Result<(Polynomial, Polynomial), ZeroCovector> {
        assert_eq!(alpha.dim(), self.nvars, "covector dimension mismatch");
        let j = alpha.pivot().ok_or(ZeroCovector)?;
        let aj = alpha.coord(j).clone();
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.nvars);
        // Peel the top pivot-degree slice until none is left.
        loop {
            let top = rem.terms.keys().map(|m| m.0[j]).max().unwrap_or(0);
            if top == 0 {
                break;
            }
            // q_step = (slice of degree `top` in x_j) / (a_j * x_j)
            let mut q_step = Polynomial::zero(self.nvars);
            for (m, c) in &rem.terms {
                if m.0[j] == top {
                    let mut e = m.0.clone();
                    e[j] -= 1;
                    q_step.insert_term(Monomial(e), c / &aj);
                }
            }
            let lin = Polynomial::from_covector(alpha);
            rem = &rem - &(&lin * &q_step);
            quo = &quo + &q_step;
        }
        Ok((quo, rem))
    }
}

/// Image of `f` under the ring epimorphism that kills the linear form
/// `alpha` (substitutes the pivot variable). Zero exactly when `alpha`
/// divides `f`; invariant under rescaling of `alpha`.
pub fn restrict_to_hyperplane(
    f: &Polynomial,
    alpha: &Covector,
) -> Result<Polynomial, ZeroCovector> {
    f.div_rem_linear(alpha).map(|(_, r)| r)
}

/// Exact quotient `f / alpha` when the linear form divides `f`.
pub fn divide_by_linear(f: &Polynomial, alpha: &Covector) -> Result<Polynomial, DivideError> {
    let (q, r) = f.div_rem_linear(alpha).map_err(DivideError::ZeroCovector)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(DivideError::NotDivisible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivideError {
    ZeroCovector(ZeroCovector),
    NotDivisible,
}

impl fmt::Display for DivideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivideError::ZeroCovector(e) => write!(f, "{}", e),
            DivideError::NotDivisible => write!(f, "{}", NotDivisible),
        }
    }
}

/// dim S^k(g*) for an n-dimensional g*: binomial(k+n-1, n-1), and 0 for
/// negative k.
pub fn graded_dim(k: i64, n: usize) -> u64 {
    assert!(n >= 1);
    if k < 0 {
        return 0;
    }
    binomial(k as u64 + n as u64 - 1, n as u64 - 1)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// All exponent vectors of total degree `m` in `nvars` variables, in
/// graded-lex order.
pub fn monomials_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, m);
    fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, idx: usize, rest: u32) {
        if idx + 1 == cur.len() {
            cur[idx] = rest;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=rest {
            cur[idx] = e;
            fill(out, cur, idx + 1, rest - e);
        }
        cur[idx] = 0;
    }
    out.sort();
    out
}

/// Elementary symmetric polynomials e_1..e_N of the given linear forms;
/// `result[k-1]` is homogeneous of degree k.
pub fn elementary_symmetric(taus: &[Covector]) -> Vec<Polynomial> {
    let n = taus.first().map(|t| t.dim()).unwrap_or(0);
    // e[k] after processing i forms = e_k(t_1..t_i)
    let mut e: Vec<Polynomial> = (0..=taus.len()).map(|_| Polynomial::zero(n)).collect();
    e[0] = Polynomial::one(n);
    for t in taus {
        let tp = Polynomial::from_covector(t);
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * &tp;
            e[k] = &e[k] + &add;
        }
    }
    e.remove(0);
    e
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e: Vec<u32> = ma.0.iter().zip(mb.0.iter()).map(|(a, b)| a + b).collect();
                out.insert_term(Monomial(e), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest terms first reads naturally
        for (m, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    mono += &alloc::format!("x{}", i + 1);
                } else if e > 1 {
                    mono += &alloc::format!("x{}^{}", i + 1, e);
                }
                if e > 0 {
                    mono += "*";
                }
            }
            let mono = mono.trim_end_matches('*');
            if !first {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", c, mono)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(3, i)
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim(0, 5), 1);
        assert_eq!(graded_dim(2, 3), 6);
        assert_eq!(graded_dim(-1, 4), 0);
        assert_eq!(graded_dim(3, 1), 1);
    }

    #[test]
    fn graded_dim_stacking_identity() {
        // lambda_{a,n} = sum_{j=0..a} lambda_{j,n-1}
        for n in 2..=6usize {
            for a in 0..=10i64 {
                let lhs = graded_dim(a, n);
                let rhs: u64 = (0..=a).map(|j| graded_dim(j, n - 1)).sum();
                assert_eq!(lhs, rhs, "a={} n={}", a, n);
            }
        }
    }

    #[test]
    fn monomial_enumeration_matches_graded_dim() {
        for n in 1..=4usize {
            for m in 0..=5u32 {
                assert_eq!(
                    monomials_of_degree(n, m).len() as u64,
                    graded_dim(m as i64, n)
                );
            }
        }
    }

    #[test]
    fn restriction_examples() {
        // f = x1 - x2 restricted along alpha = (1,-1,0) vanishes
        let f = &x(0) - &x(1);
        let a = Covector::from_ints(&[1, -1, 0]);
        assert!(restrict_to_hyperplane(&f, &a).unwrap().is_zero());

        // f = x1^2 restricted along (1,-1,0): x1 <- x2
        let f = &x(0) * &x(0);
        let r = restrict_to_hyperplane(&f, &a).unwrap();
        assert_eq!(r, &x(1) * &x(1));

        // scaling alpha leaves the restriction unchanged
        let g = &(&x(0) * &x(2)) + &(&x(1) * &x(1));
        let r1 = restrict_to_hyperplane(&g, &a).unwrap();
        let r2 = restrict_to_hyperplane(&g, &a.scale(&rat(-7, 3))).unwrap();
        assert_eq!(r1, r2);

        assert_eq!(
            restrict_to_hyperplane(&f, &Covector::zero(3)),
            Err(ZeroCovector)
        );
    }

    #[test]
    fn division_examples() {
        // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
        let f = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let a = Covector::from_ints(&[1, -1, 0]);
        assert_eq!(divide_by_linear(&f, &a).unwrap(), &x(0) + &x(1));

        let f = &x(0) * &x(0);
        assert_eq!(divide_by_linear(&f, &a), Err(DivideError::NotDivisible));
    }

    #[test]
    fn divide_restrict_duality_on_random_inputs() {
        // alpha*g / alpha = g and restrict(alpha*g) = 0, for seeded random
        // homogeneous g; and restrict(f) = 0 iff alpha | f.
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let alphas = [
            Covector::from_ints(&[1, -1, 0]),
            Covector::from_ints(&[0, 2, 5]),
            Covector::from_ints(&[3, 1, -2]),
        ];
        for round in 0..50 {
            let a = &alphas[round % alphas.len()];
            let deg = (rng.next_u32() % 3) as u32;
            let mut g = Polynomial::zero(3);
            for m in monomials_of_degree(3, deg) {
                let c = (rng.next_u32() % 7) as i64 - 3;
                let mut t = Polynomial::zero(3);
                t.insert_term(m, rat_int(c));
                g = &g + &t;
            }
            let prod = &Polynomial::from_covector(a) * &g;
            assert_eq!(divide_by_linear(&prod, a).unwrap(), g);
            assert!(restrict_to_hyperplane(&prod, a).unwrap().is_zero());
        }
    }

    #[test]
    fn ring_laws_on_random_triples() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut random_poly = |deg_max: u32| {
            let mut p = Polynomial::zero(2);
            for d in 0..=deg_max {
                for m in monomials_of_degree(2, d) {
                    let c = (rng.next_u32() % 9) as i64 - 4;
                    let mut t = Polynomial::zero(2);
                    t.insert_term(m, rat_int(c));
                    p = &p + &t;
                }
            }
            p
        };
        for _ in 0..20 {
            let a = random_poly(2);
            let b = random_poly(2);
            let c = random_poly(1);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a + &b, &b + &a);
        }
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let f = &(&x(0) * &x(1)) + &x(2);
        let images = [
            Covector::from_ints(&[1, 1]),
            Covector::from_ints(&[0, -1]),
            Covector::from_ints(&[2, 0]),
        ];
        let g = f.substitute_linear(&images);
        // (y1+y2)(-y2) + 2y1 = -y1y2 - y2^2 + 2y1
        let y1 = Polynomial::var(2, 0);
        let y2 = Polynomial::var(2, 1);
        let expect = &(&(&y1 + &y2) * &-&y2) + &y1.scale(&rat_int(2));
        assert_eq!(g, expect);
    }

    #[test]
    fn elementary_symmetric_basics() {
        let taus = [Covector::from_ints(&[1, 0]), Covector::from_ints(&[0, 1])];
        let e = elementary_symmetric(&taus);
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        assert_eq!(e[0], &x1 + &x2);
        assert_eq!(e[1], &x1 * &x2);
    }
}
