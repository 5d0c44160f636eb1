//! Divided-difference Schubert calculus on Johnson graphs.
//!
//! The symmetric group acts on the vertices (k-subsets) by relabeling and
//! on polynomials by permuting variables. Applying divided difference
//! operators along a Bruhat path to the top Thom class produces the
//! canonical generator at each vertex; by uniqueness these coincide with
//! the Thom classes, and their value table is the family of double
//! Schubert polynomials.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::builders::Johnson;
use crate::cohomology::CohomologyClass;
use crate::covector::Covector;
use crate::polarize::{flow_out, Polarization};
use crate::poly::{divide_by_linear, Polynomial};
use crate::skeleton::VertexId;

/// A permutation of `{1..n}` stored by images (0-based internally).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement(pub Vec<usize>);

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement((0..n).collect())
    }

    /// The elementary reflection swapping `i` and `i+1` (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        WeylElement(v)
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        WeylElement(inv)
    }

    /// Image of a 1-based element subset.
    pub fn act_subset(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        s.iter().map(|&x| self.0[x - 1] + 1).collect()
    }

    /// Action on polynomials by permuting variables.
    pub fn act_poly(&self, f: &Polynomial) -> Polynomial {
        f.permute_vars(&self.0)
    }

    /// Action on classes: `(sigma f)(p) = sigma(f(sigma^{-1} p))`.
    pub fn act_class(&self, j: &Johnson, f: &CohomologyClass) -> CohomologyClass {
        let inv = self.inverse();
        let values = (0..j.skeleton.vertex_count())
            .map(|v| {
                let pre = inv.act_subset(&j.subsets[v]);
                let pre_id = j.vertex_of(&pre).expect("relabeled subset is a vertex");
                self.act_poly(&f.values[pre_id])
            })
            .collect();
        CohomologyClass {
            degree: f.degree,
            values,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotDivisible {
    pub vertex: VertexId,
}

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "divided difference numerator at vertex {} is not divisible by the root",
            self.vertex
        )
    }
}

/// The divided difference operator for the reflection `i <-> i+1`:
/// `(D_i f)(p) = (f(p) - sigma_i f(sigma_i p)) / (x_i - x_{i+1})`.
/// Lowers degree by one; exact on classes.
pub fn divided_difference(
    j: &Johnson,
    i: usize,
    f: &CohomologyClass,
) -> Result<CohomologyClass, NotDivisible> {
    let n = j.n;
    assert!(1 <= i && i < n, "reflection index out of range");
    let sigma = WeylElement::transposition(n, i);
    let root = &Covector::basis(n, i - 1) - &Covector::basis(n, i);
    let mut values = Vec::with_capacity(j.skeleton.vertex_count());
    for v in 0..j.skeleton.vertex_count() {
        let pre = sigma.act_subset(&j.subsets[v]);
        let pre_id = j.vertex_of(&pre).expect("relabeled subset is a vertex");
        let moved = sigma.act_poly(&f.values[pre_id]);
        let numerator = &f.values[v] - &moved;
        let q = if numerator.is_zero() {
            Polynomial::zero(n)
        } else {
            divide_by_linear(&numerator, &root).map_err(|_| NotDivisible { vertex: v })?
        };
        values.push(q);
    }
    Ok(CohomologyClass {
        degree: f.degree.saturating_sub(1),
        values,
    })
}

/// Greedy Bruhat ascent from `p` to the top vertex `{n-k+1..n}`: always
/// apply the smallest reflection that moves an element up, raising the
/// subset sum by exactly one per step. Returns reflection indices in
/// application order.
pub fn bruhat_path(j: &Johnson, p: VertexId) -> Vec<usize> {
    let mut s = j.subsets[p].clone();
    let top: BTreeSet<usize> = ((j.n - j.k + 1)..=j.n).collect();
    let mut path = Vec::new();
    while s != top {
        let i = (1..j.n)
            .find(|&i| s.contains(&i) && !s.contains(&(i + 1)))
            .expect("below the top there is always an ascending reflection");
        s.remove(&i);
        s.insert(i + 1);
        path.push(i);
    }
    path
}

/// Morse index of a vertex: the number of inversions against the subset.
pub fn subset_index(j: &Johnson, p: VertexId) -> usize {
    let s = &j.subsets[p];
    s.iter()
        .map(|&i| (1..i).filter(|x| !s.contains(x)).count())
        .sum()
}

/// The canonical class at the top vertex: the product of the top weights
/// there, zero elsewhere.
pub fn top_class(j: &Johnson) -> CohomologyClass {
    let top: BTreeSet<usize> = ((j.n - j.k + 1)..=j.n).collect();
    let top_id = j.vertex_of(&top).expect("top subset is a vertex");
    let mut delta = Polynomial::one(j.n);
    for i in 1..=j.k {
        for jj in (j.k + 1)..=j.n {
            let root = &Covector::basis(j.n, i - 1) - &Covector::basis(j.n, jj - 1);
            delta = &delta * &Polynomial::from_covector(&root);
        }
    }
    let mut values = vec![Polynomial::zero(j.n); j.skeleton.vertex_count()];
    values[top_id] = delta;
    CohomologyClass {
        degree: (j.k * (j.n - j.k)) as u32,
        values,
    }
}

/// The Schubert class of `p`: divided differences applied along the Bruhat
/// path of `p`, innermost step the one arriving at the top.
pub fn schubert_class(j: &Johnson, p: VertexId) -> Result<CohomologyClass, NotDivisible> {
    let path = bruhat_path(j, p);
    let mut class = top_class(j);
    for &i in path.iter().rev() {
        class = divided_difference(j, i, &class)?;
    }
    Ok(class)
}

/// All double Schubert polynomials: `table[(p, q)] = tau_p(q)` over the
/// Bruhat-comparable pairs `p` before `q`, in vertex order.
pub fn double_schubert_table(
    j: &Johnson,
) -> Result<Vec<((VertexId, VertexId), Polynomial)>, NotDivisible> {
    let xi = Covector::new(
        (1..=j.n)
            .map(|i| crate::rational::rat(i as i64, 1))
            .collect(),
    );
    let pol = Polarization::build(&j.skeleton, xi).expect("Johnson orientations are acyclic");
    let mut out = Vec::new();
    for p in 0..j.skeleton.vertex_count() {
        let class = schubert_class(j, p)?;
        let reachable = flow_out(&j.skeleton, &pol, p);
        for q in 0..j.skeleton.vertex_count() {
            if reachable.contains(&q) {
                out.push(((p, q), class.values[q].clone()));
            }
        }
    }
    Ok(out)
}

/// Subset names for table rendering: `S={i,j}`.
pub fn table_key(j: &Johnson, p: VertexId) -> String {
    let inner: Vec<String> = j.subsets[p]
        .iter()
        .map(|x| alloc::string::ToString::to_string(x))
        .collect();
    alloc::format!("S={{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::cohomology::{class_check, random_class, thom_class, ThomBasis};
    use crate::rational::rat_int;

    fn j42() -> Johnson {
        builders::johnson(4, 2).unwrap()
    }

    #[test]
    fn self_indexing() {
        // subset sums equal the index plus k(k+1)/2
        let j = j42();
        for p in 0..j.skeleton.vertex_count() {
            let sum: usize = j.subsets[p].iter().sum();
            assert_eq!(sum, subset_index(&j, p) + 3);
        }
        // and the combinatorial index agrees with the orientation index
        let xi = Covector::from_ints(&[1, 2, 3, 4]);
        let pol = Polarization::build(&j.skeleton, xi).unwrap();
        for p in 0..j.skeleton.vertex_count() {
            assert_eq!(pol.index(p), subset_index(&j, p));
        }
    }

    #[test]
    fn bruhat_path_properties() {
        let j = j42();
        let top: BTreeSet<usize> = [3, 4].into_iter().collect();
        let top_id = j.vertex_of(&top).unwrap();
        assert!(bruhat_path(&j, top_id).is_empty());

        let bottom: BTreeSet<usize> = [1, 2].into_iter().collect();
        let bottom_id = j.vertex_of(&bottom).unwrap();
        let path = bruhat_path(&j, bottom_id);
        assert_eq!(path.len(), 4);

        // each step raises the index by exactly one
        for p in 0..j.skeleton.vertex_count() {
            let mut s = j.subsets[p].clone();
            let mut idx = subset_index(&j, p);
            for &i in &bruhat_path(&j, p) {
                s.remove(&i);
                s.insert(i + 1);
                let next_id = j.vertex_of(&s).unwrap();
                assert_eq!(subset_index(&j, next_id), idx + 1);
                idx += 1;
            }
            assert_eq!(idx, j.k * (j.n - j.k));
        }
    }

    #[test]
    fn divided_difference_basics() {
        let j = j42();
        // constants die
        let one = CohomologyClass::constant(&j.skeleton, rat_int(1));
        for i in 1..4 {
            let d = divided_difference(&j, i, &one).unwrap();
            assert!(d.is_zero());
        }
        // f = x_i everywhere: D_i f = 1
        let xi_poly = Polynomial::var(4, 0);
        let f = CohomologyClass {
            degree: 1,
            values: vec![xi_poly; j.skeleton.vertex_count()],
        };
        let d = divided_difference(&j, 1, &f).unwrap();
        for v in 0..j.skeleton.vertex_count() {
            assert_eq!(d.values[v], Polynomial::one(4));
        }
    }

    #[test]
    fn divided_difference_squares_to_zero() {
        let j = j42();
        for seed in 0..10 {
            let f = random_class(&j.skeleton, 2, seed).unwrap();
            for i in 1..4 {
                let d = divided_difference(&j, i, &f).unwrap();
                assert!(class_check(&j.skeleton, &d));
                let dd = divided_difference(&j, i, &d).unwrap();
                assert!(dd.is_zero(), "D_{}^2 != 0 at seed {}", i, seed);
            }
        }
    }

    #[test]
    fn weyl_action_preserves_classes() {
        let j = j42();
        for seed in 0..5 {
            let f = random_class(&j.skeleton, 2, seed).unwrap();
            for i in 1..4 {
                let sigma = WeylElement::transposition(4, i);
                let g = sigma.act_class(&j, &f);
                assert!(class_check(&j.skeleton, &g));
            }
        }
    }

    #[test]
    fn schubert_classes_match_thom_classes() {
        let j = j42();
        let xi = Covector::from_ints(&[1, 2, 3, 4]);
        let pol = Polarization::build(&j.skeleton, xi).unwrap();
        let thom = ThomBasis::build(&j.skeleton, &pol).unwrap();
        for p in 0..j.skeleton.vertex_count() {
            let s = schubert_class(&j, p).unwrap();
            assert_eq!(s, thom.classes[p], "vertex {}", j.skeleton.name(p));
        }
        // the bottom class is the constant 1
        let bottom: BTreeSet<usize> = [1, 2].into_iter().collect();
        let bottom_id = j.vertex_of(&bottom).unwrap();
        let s = schubert_class(&j, bottom_id).unwrap();
        assert_eq!(s, CohomologyClass::constant(&j.skeleton, rat_int(1)));
        // a single thom_class call agrees with the basis sweep
        let tau = thom_class(&j.skeleton, &pol, bottom_id).unwrap();
        assert_eq!(tau, thom.classes[bottom_id]);
    }

    #[test]
    fn path_independence_via_randomized_paths() {
        // applying reflections along any strictly ascending path gives the
        // same class; compare the greedy path with a largest-first variant
        let j = j42();
        let largest_first_path = |p: VertexId| -> Vec<usize> {
            let mut s = j.subsets[p].clone();
            let top: BTreeSet<usize> = [3, 4].into_iter().collect();
            let mut path = Vec::new();
            while s != top {
                let i = (1..4)
                    .rev()
                    .find(|&i| s.contains(&i) && !s.contains(&(i + 1)))
                    .unwrap();
                s.remove(&i);
                s.insert(i + 1);
                path.push(i);
            }
            path
        };
        for p in 0..j.skeleton.vertex_count() {
            let mut a = top_class(&j);
            for &i in bruhat_path(&j, p).iter().rev() {
                a = divided_difference(&j, i, &a).unwrap();
            }
            let mut b = top_class(&j);
            for &i in largest_first_path(p).iter().rev() {
                b = divided_difference(&j, i, &b).unwrap();
            }
            assert_eq!(a, b);
        }
    }

    #[test]
    fn double_schubert_table_values() {
        let j = j42();
        let table = double_schubert_table(&j).unwrap();
        let lookup = |p: VertexId, q: VertexId| -> Option<&Polynomial> {
            table
                .iter()
                .find(|((a, b), _)| *a == p && *b == q)
                .map(|(_, poly)| poly)
        };
        let bottom = j.vertex_of(&[1, 2].into_iter().collect()).unwrap();
        for q in 0..j.skeleton.vertex_count() {
            assert_eq!(lookup(bottom, q), Some(&Polynomial::one(4)));
        }
        // diagonal entries are the down-edge products
        let xi = Covector::from_ints(&[1, 2, 3, 4]);
        let pol = Polarization::build(&j.skeleton, xi).unwrap();
        for p in 0..j.skeleton.vertex_count() {
            let mut prod = Polynomial::one(4);
            for &e in j.skeleton.edges_at(p) {
                if !pol.points_up(e) {
                    prod = &prod * &Polynomial::from_covector(j.skeleton.axial(e));
                }
            }
            assert_eq!(lookup(p, p), Some(&prod));
        }
        // entries outside the flow-out are absent
        let top = j.vertex_of(&[3, 4].into_iter().collect()).unwrap();
        assert!(lookup(top, bottom).is_none());
    }
}
