//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are cleared to integers and updated by
//! cross-multiplication, dividing out the content after every step, so no
//! rounding and no pivot tolerance exists anywhere. Pivots are exactly zero
//! or exactly nonzero.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::covector::Covector;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependentPair;

impl fmt::Display for DependentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "covector pair is linearly dependent")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    acc += self.at(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self).pivots.len()
    }

    /// Exact basis of the right kernel `{x : Mx = 0}`; empty exactly when
    /// the kernel is trivial. Basis vectors are integer, content-free, with
    /// positive leading entry.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::reduce(self);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            // back-substitution over the echelon rows, bottom-up
            for &(r, c) in ech.pivots.iter().rev() {
                let mut acc = Rational::zero();
                for cc in (c + 1)..self.cols {
                    if !ech.mat[r][cc].is_zero() && !x[cc].is_zero() {
                        acc += Rational::from_integer(ech.mat[r][cc].clone()) * &x[cc];
                    }
                }
                x[c] = -acc / Rational::from_integer(ech.mat[r][c].clone());
            }
            basis.push(canonicalize(x));
        }
        basis
    }

    /// One exact solution of `Mx = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let ech = Echelon::reduce(&aug);
        // a pivot in the last column flags inconsistency
        if ech.pivots.iter().any(|&(_, c)| c == self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(r, c) in ech.pivots.iter().rev() {
            let mut acc = Rational::from_integer(ech.mat[r][self.cols].clone());
            for cc in (c + 1)..self.cols {
                if !ech.mat[r][cc].is_zero() && !x[cc].is_zero() {
                    acc -= Rational::from_integer(ech.mat[r][cc].clone()) * &x[cc];
                }
            }
            x[c] = acc / Rational::from_integer(ech.mat[r][c].clone());
        }
        Some(x)
    }
}

/// Integer row echelon form produced by fraction-free elimination.
struct Echelon {
    mat: Vec<Vec<BigInt>>,
    /// (row, col) of each pivot, in increasing column order.
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    fn reduce(m: &Matrix) -> Echelon {
        // clear denominators row by row
        let mut mat: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..m.cols {
                    lcm = lcm.lcm(m.at(r, c).denom());
                }
                (0..m.cols)
                    .map(|c| {
                        let v = m.at(r, c);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(row, p);
            let pivot = mat[row][col].clone();
            for r in (row + 1)..m.rows {
                if mat[r][col].is_zero() {
                    continue;
                }
                let g = pivot.gcd(&mat[r][col]);
                let a = &pivot / &g;
                let b = &mat[r][col] / &g;
                for c in 0..m.cols {
                    let v = &mat[r][c] * &a - &mat[row][c] * &b;
                    mat[r][c] = v;
                }
                divide_out_content(&mut mat[r]);
            }
            pivots.push((row, col));
            row += 1;
        }
        Echelon { mat, pivots }
    }
}

fn divide_out_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Integer vector with content 1 and positive leading entry representing
/// the same line.
fn canonicalize(x: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for v in &x {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}

/// Rank of a set of covectors.
pub fn rank_of(covectors: &[&Covector]) -> usize {
    if covectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(covectors.iter().map(|c| c.0.clone()).collect()).rank()
}

/// Exact basis of `{xi in g : alpha(xi) = beta(xi) = 0}`, a space of
/// dimension n-2 when the pair is independent.
pub fn annihilator_of_pair(
    alpha: &Covector,
    beta: &Covector,
) -> Result<Vec<Covector>, DependentPair> {
    if rank_of(&[alpha, beta]) < 2 {
        return Err(DependentPair);
    }
    let m = Matrix::from_rows(vec![alpha.0.clone(), beta.0.clone()]);
    Ok(m.kernel_basis().into_iter().map(Covector::new).collect())
}

/// Solves `target = lambda * a + c * b` exactly; `None` when `target` is
/// outside the span.
pub fn solve_pair_combination(
    target: &Covector,
    a: &Covector,
    b: &Covector,
) -> Option<(Rational, Rational)> {
    let n = target.dim();
    let m = Matrix::from_rows(
        (0..n)
            .map(|i| vec![a.coord(i).clone(), b.coord(i).clone()])
            .collect(),
    );
    let sol = m.solve(&target.0)?;
    Some((sol[0].clone(), sol[1].clone()))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand_core::{RngCore, SeedableRng};

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = Matrix::zero(2, 4);
        let b = m.kernel_basis();
        assert_eq!(b.len(), 4);
    }

    fn random_rat(rng: &mut rand_chacha::ChaCha8Rng) -> Rational {
        let n = (rng.next_u32() % 11) as i64 - 5;
        let d = (rng.next_u32() % 4) as i64 + 1;
        rat(n, d)
    }

    #[test]
    fn planted_kernel_vector_is_recovered() {
        // Build rows orthogonal to a planted v, then check v lies in the
        // span of the computed kernel.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..25 {
            let n = 5;
            let v: Vec<Rational> = (0..n).map(|_| random_rat(&mut rng)).collect();
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let vv: Rational = v.iter().map(|x| x * x).sum();
            let rows: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    let r: Vec<Rational> = (0..n).map(|_| random_rat(&mut rng)).collect();
                    let rv: Rational = r.iter().zip(&v).map(|(a, b)| a * b).sum();
                    let t = rv / &vv;
                    r.iter().zip(&v).map(|(a, b)| a - &(&t * b)).collect()
                })
                .collect();
            let m = Matrix::from_rows(rows);
            // every row annihilates v
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
            let kernel = m.kernel_basis();
            assert!(!kernel.is_empty());
            for k in &kernel {
                assert!(m.mul_vec(k).iter().all(|x| x.is_zero()));
            }
            // v in span(kernel): rank doesn't grow when adding v
            let mut rows2: Vec<Vec<Rational>> = kernel.clone();
            let r0 = Matrix::from_rows(rows2.clone()).rank();
            rows2.push(v);
            assert_eq!(Matrix::from_rows(rows2).rank(), r0);
        }
    }

    #[test]
    fn kernel_matches_rank_nullity_and_independence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let rows = 3 + (rng.next_u32() % 3) as usize;
            let cols = 3 + (rng.next_u32() % 4) as usize;
            let m = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| random_rat(&mut rng)).collect())
                    .collect(),
            );
            let k = m.kernel_basis();
            assert_eq!(k.len(), cols - m.rank());
            if !k.is_empty() {
                assert_eq!(Matrix::from_rows(k.clone()).rank(), k.len());
            }
            for x in &k {
                assert!(m.mul_vec(x).iter().all(|v| v.is_zero()));
            }
        }
    }

    #[test]
    fn solve_particular_and_inconsistent() {
        let m = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ]);
        assert_eq!(
            m.solve(&[rat_int(3), rat_int(6)]),
            Some(vec![rat_int(3), rat_int(0)])
        );
        assert_eq!(m.solve(&[rat_int(3), rat_int(7)]), None);
    }

    #[test]
    fn annihilator_examples() {
        let a = Covector::from_ints(&[1, 0, 0]);
        let b = Covector::from_ints(&[0, 1, 0]);
        let ann = annihilator_of_pair(&a, &b).unwrap();
        assert_eq!(ann.len(), 1);
        assert_eq!(ann[0], Covector::from_ints(&[0, 0, 1]));

        let a = Covector::from_ints(&[1, 1, 0, 0]);
        let b = Covector::from_ints(&[0, 0, 1, 1]);
        let ann = annihilator_of_pair(&a, &b).unwrap();
        assert_eq!(ann.len(), 2);
        for v in &ann {
            assert!(a.pair(v).is_zero());
            assert!(b.pair(v).is_zero());
        }

        assert_eq!(annihilator_of_pair(&a, &a), Err(DependentPair));
    }
}
