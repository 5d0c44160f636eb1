//! Polarizing vectors, Morse indices, Betti numbers and the non-cyclic
//! conditions.
//!
//! A vector `xi` is polarizing when no axial value annihilates it; it
//! orients every edge (towards the positive pairing) and assigns each
//! vertex the index `sigma_p` = number of outgoing edges with negative
//! pairing. Counting vertices by index gives the combinatorial Betti
//! numbers, which do not depend on the choice of `xi`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{Signed, Zero};
use rand_core::{RngCore, SeedableRng};

use crate::covector::Covector;
use crate::rational::{rat, Rational};
use crate::skeleton::{EdgeId, OneSkeleton, SubSkeleton, VertexId};

#[derive(Clone, Debug)]
pub struct Polarization {
    pub xi: Covector,
    /// Injective vertex function strictly increasing along upward edges.
    pub phi: Vec<Rational>,
    /// Morse index per vertex.
    pub sigma: Vec<usize>,
    /// Per oriented edge: pairing of its axial value with `xi` is positive.
    pub up: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarizeError {
    NotPolarizing {
        edge: EdgeId,
    },
    /// NCA1 fails: a closed oriented path (vertex cycle witness).
    CyclicOrientation(Vec<VertexId>),
    /// Supplied phi is not injective or not increasing along the orientation.
    BadPhi,
}

impl fmt::Display for PolarizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarizeError::NotPolarizing { edge } => {
                write!(f, "xi pairs to zero with the axial value of edge {}", edge)
            }
            PolarizeError::CyclicOrientation(cycle) => {
                write!(f, "oriented cycle through vertices {:?}", cycle)
            }
            PolarizeError::BadPhi => write!(f, "phi is not injective and compatible"),
        }
    }
}

pub fn is_polarizing(skel: &OneSkeleton, xi: &Covector) -> bool {
    (0..skel.edge_count()).all(|e| !skel.axial(e).pair(xi).is_zero())
}

/// Seeded rejection sampling of a polarizing integer vector: tries vectors
/// with growing coordinate bound until every edge pairs nonzero.
/// Deterministic for a fixed seed.
pub fn sample_polarizing(skel: &OneSkeleton, seed: u64) -> Covector {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = skel.dim();
    let mut bound: u64 = 2;
    loop {
        for _ in 0..64 {
            let coords: Vec<Rational> = (0..n)
                .map(|_| {
                    let span = 2 * bound + 1;
                    let v = (rng.next_u64() % span) as i64 - bound as i64;
                    rat(v, 1)
                })
                .collect();
            let xi = Covector::new(coords);
            if is_polarizing(skel, &xi) {
                return xi;
            }
        }
        bound *= 2;
    }
}

/// Indices of all vertices for a polarizing `xi`.
pub fn indices(skel: &OneSkeleton, xi: &Covector) -> Result<Vec<usize>, PolarizeError> {
    let mut sigma = vec![0usize; skel.vertex_count()];
    for e in 0..skel.edge_count() {
        let s = skel.axial(e).pair(xi);
        if s.is_zero() {
            return Err(PolarizeError::NotPolarizing { edge: e });
        }
        if s.is_negative() {
            sigma[skel.src(e)] += 1;
        }
    }
    Ok(sigma)
}

/// Combinatorial Betti numbers `b_0, b_2, ..., b_{2d}`: vertex counts by
/// index.
pub fn betti(skel: &OneSkeleton, xi: &Covector) -> Result<Vec<usize>, PolarizeError> {
    let sigma = indices(skel, xi)?;
    let mut b = vec![0usize; skel.valence() + 1];
    for s in sigma {
        b[s] += 1;
    }
    Ok(b)
}

/// Betti numbers of an edge-subset component, computed with respect to the
/// subset's own stars.
pub fn betti_of_subgraph(
    skel: &OneSkeleton,
    sub: &SubSkeleton,
    xi: &Covector,
) -> Result<Vec<usize>, PolarizeError> {
    let mut sigma: BTreeMap<VertexId, usize> = sub.vertices.iter().map(|&v| (v, 0)).collect();
    let mut max_valence = 0;
    for &v in &sub.vertices {
        let star = sub.edges_at(skel, v);
        max_valence = max_valence.max(star.len());
        for e in star {
            let s = skel.axial(e).pair(xi);
            if s.is_zero() {
                return Err(PolarizeError::NotPolarizing { edge: e });
            }
            if s.is_negative() {
                *sigma.get_mut(&v).unwrap() += 1;
            }
        }
    }
    let mut b = vec![0usize; max_valence + 1];
    for (_, s) in sigma {
        b[s] += 1;
    }
    Ok(b)
}

/// A polarizing vector for just the edges of a subset.
pub fn sample_polarizing_for_edges(skel: &OneSkeleton, edges: &[EdgeId], seed: u64) -> Covector {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = skel.dim();
    let mut bound: u64 = 2;
    loop {
        for _ in 0..64 {
            let coords: Vec<Rational> = (0..n)
                .map(|_| {
                    let span = 2 * bound + 1;
                    let v = (rng.next_u64() % span) as i64 - bound as i64;
                    rat(v, 1)
                })
                .collect();
            let xi = Covector::new(coords);
            if edges.iter().all(|&e| !skel.axial(e).pair(&xi).is_zero()) {
                return xi;
            }
        }
        bound *= 2;
    }
}

/// Interior product `iota_xi(alpha ^ beta) = alpha(xi) beta - beta(xi) alpha`.
pub fn contract_pair(alpha: &Covector, beta: &Covector, xi: &Covector) -> Covector {
    &beta.scale(&alpha.pair(xi)) - &alpha.scale(&beta.pair(xi))
}

/// Genericity: at every vertex, for every quadruple of distinct edges split
/// into two pairs, the two contractions are linearly independent. Valence-3
/// skeleta are generic for every `xi`.
pub fn is_generic(skel: &OneSkeleton, xi: &Covector) -> bool {
    for v in 0..skel.vertex_count() {
        let star = skel.edges_at(v);
        let d = star.len();
        if d < 4 {
            continue;
        }
        let mut quad = [0usize; 4];
        // all 4-subsets, then the three pairings of each
        let combos = four_subsets(d);
        for combo in combos {
            quad.copy_from_slice(&combo);
            for (p, q) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
                let c1 =
                    contract_pair(skel.axial(star[quad[p.0]]), skel.axial(star[quad[p.1]]), xi);
                let c2 =
                    contract_pair(skel.axial(star[quad[q.0]]), skel.axial(star[quad[q.1]]), xi);
                if c1.is_parallel(&c2) {
                    return false;
                }
            }
        }
    }
    true
}

fn four_subsets(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

impl Polarization {
    /// Builds the orientation, indices and a compatible injective phi from
    /// longest-path levels plus a rank perturbation. Fails with a cycle
    /// witness when the orientation has a closed path.
    pub fn build(skel: &OneSkeleton, xi: Covector) -> Result<Polarization, PolarizeError> {
        let sigma = indices(skel, &xi)?;
        let up: Vec<bool> = (0..skel.edge_count())
            .map(|e| skel.axial(e).pair(&xi).is_positive())
            .collect();
        let order = topological_order(skel, &up)?;
        // longest oriented path ending at each vertex
        let mut level = vec![0u64; skel.vertex_count()];
        for &v in &order {
            for &e in skel.edges_at(v) {
                if up[e] {
                    let w = skel.dst(e);
                    level[w] = level[w].max(level[v] + 1);
                }
            }
        }
        let count = skel.vertex_count() as i64;
        let phi: Vec<Rational> = (0..skel.vertex_count())
            .map(|v| rat(level[v] as i64, 1) + rat(v as i64, 2 * count))
            .collect();
        Ok(Polarization { xi, phi, sigma, up })
    }

    /// Wraps an externally supplied compatible injective phi.
    pub fn with_phi(
        skel: &OneSkeleton,
        xi: Covector,
        phi: Vec<Rational>,
    ) -> Result<Polarization, PolarizeError> {
        let sigma = indices(skel, &xi)?;
        let up: Vec<bool> = (0..skel.edge_count())
            .map(|e| skel.axial(e).pair(&xi).is_positive())
            .collect();
        for e in 0..skel.edge_count() {
            if up[e] && phi[skel.dst(e)] <= phi[skel.src(e)] {
                return Err(PolarizeError::BadPhi);
            }
        }
        let mut sorted = phi.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(PolarizeError::BadPhi);
        }
        Ok(Polarization { xi, phi, sigma, up })
    }

    pub fn index(&self, v: VertexId) -> usize {
        self.sigma[v]
    }

    pub fn phi(&self, v: VertexId) -> &Rational {
        &self.phi[v]
    }

    pub fn points_up(&self, e: EdgeId) -> bool {
        self.up[e]
    }

    /// Vertices sorted by increasing phi.
    pub fn vertices_by_phi(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = (0..self.phi.len()).collect();
        vs.sort_by(|&a, &b| self.phi[a].cmp(&self.phi[b]));
        vs
    }

    /// Sorted distinct critical values (the phi values themselves).
    pub fn critical_values(&self) -> Vec<Rational> {
        let mut vals = self.phi.clone();
        vals.sort();
        vals.dedup();
        vals
    }

    /// Midpoints of consecutive critical values: one regular value in each
    /// bounded interval.
    pub fn regular_midpoints(&self) -> Vec<Rational> {
        let vals = self.critical_values();
        vals.windows(2)
            .map(|w| (&w[0] + &w[1]) / rat(2, 1))
            .collect()
    }
}

/// Topological order of the oriented graph; errors with a cycle witness.
fn topological_order(skel: &OneSkeleton, up: &[bool]) -> Result<Vec<VertexId>, PolarizeError> {
    let vcount = skel.vertex_count();
    let mut indegree = vec![0usize; vcount];
    for e in 0..skel.edge_count() {
        if up[e] {
            indegree[skel.dst(e)] += 1;
        }
    }
    let mut queue: Vec<VertexId> = (0..vcount).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(vcount);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        order.push(v);
        for &e in skel.edges_at(v) {
            if up[e] {
                let w = skel.dst(e);
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
    }
    if order.len() == vcount {
        Ok(order)
    } else {
        Err(PolarizeError::CyclicOrientation(find_cycle(skel, up)))
    }
}

fn find_cycle(skel: &OneSkeleton, up: &[bool]) -> Vec<VertexId> {
    // iterative DFS with colors; returns the vertex cycle
    let vcount = skel.vertex_count();
    let mut color = vec![0u8; vcount]; // 0 white, 1 gray, 2 black
    let mut parent: Vec<Option<VertexId>> = vec![None; vcount];
    for start in 0..vcount {
        if color[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, false)];
        while let Some((v, processed)) = stack.pop() {
            if processed {
                color[v] = 2;
                continue;
            }
            if color[v] == 1 {
                continue;
            }
            color[v] = 1;
            stack.push((v, true));
            for &e in skel.edges_at(v) {
                if !up[e] {
                    continue;
                }
                let w = skel.dst(e);
                if color[w] == 0 {
                    parent[w] = Some(v);
                    stack.push((w, false));
                } else if color[w] == 1 {
                    // back edge v -> w closes the cycle
                    let mut cycle = vec![w];
                    let mut cur = v;
                    while cur != w {
                        cycle.push(cur);
                        cur = parent[cur].expect("path back to cycle head");
                    }
                    cycle.reverse();
                    return cycle;
                }
            }
        }
    }
    Vec::new()
}

/// All vertices reachable from `p` along upward edges, including `p`.
pub fn flow_out(skel: &OneSkeleton, pol: &Polarization, p: VertexId) -> BTreeSet<VertexId> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![p];
    seen.insert(p);
    while let Some(v) = stack.pop() {
        for &e in skel.edges_at(v) {
            if pol.up[e] {
                let w = skel.dst(e);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}

#[derive(Debug, Clone)]
pub struct Nca2Violation {
    /// Two independent axial values spanning the offending plane.
    pub plane: (Covector, Covector),
    pub component_vertices: Vec<VertexId>,
    pub b0: usize,
}

#[derive(Debug, Clone)]
pub struct NonCyclicReport {
    pub nca1: Result<(), Vec<VertexId>>,
    pub nca2: Vec<Nca2Violation>,
}

impl NonCyclicReport {
    pub fn passes(&self) -> bool {
        self.nca1.is_ok() && self.nca2.is_empty()
    }
}

/// NCA1: the xi-orientation is acyclic. NCA2: for every 2-plane spanned by
/// a pair of axial values at a common vertex, each connected component of
/// the in-plane subgraph has zeroth Betti number 1 (checked with its own
/// sampled polarizing vector).
pub fn check_noncyclic(
    skel: &OneSkeleton,
    xi: &Covector,
) -> Result<NonCyclicReport, PolarizeError> {
    if !is_polarizing(skel, xi) {
        let bad = (0..skel.edge_count())
            .find(|&e| skel.axial(e).pair(xi).is_zero())
            .unwrap();
        return Err(PolarizeError::NotPolarizing { edge: bad });
    }
    let nca1 = match Polarization::build(skel, xi.clone()) {
        Ok(_) => Ok(()),
        Err(PolarizeError::CyclicOrientation(c)) => Err(c),
        Err(other) => return Err(other),
    };
    let mut nca2 = Vec::new();
    let mut seen_planes: BTreeSet<Vec<Vec<Rational>>> = BTreeSet::new();
    for v in 0..skel.vertex_count() {
        let star = skel.edges_at(v);
        for i in 0..star.len() {
            for j in (i + 1)..star.len() {
                let a = skel.axial(star[i]);
                let b = skel.axial(star[j]);
                if crate::linalg::rank_of(&[a, b]) < 2 {
                    continue;
                }
                let key = plane_key(a, b);
                if !seen_planes.insert(key) {
                    continue;
                }
                for comp in skel.subskeleton_by_plane(a, b).expect("independent pair") {
                    let xi_c = sample_polarizing_for_edges(skel, &comp.edges, 0);
                    let b_list = betti_of_subgraph(skel, &comp, &xi_c)
                        .expect("sampled vector is polarizing for the component");
                    if b_list[0] != 1 {
                        nca2.push(Nca2Violation {
                            plane: (a.clone(), b.clone()),
                            component_vertices: comp.vertices.clone(),
                            b0: b_list[0],
                        });
                    }
                }
            }
        }
    }
    Ok(NonCyclicReport { nca1, nca2 })
}

/// Canonical key for the span of two independent covectors: reduced row
/// echelon form of the 2 x n matrix.
fn plane_key(a: &Covector, b: &Covector) -> Vec<Vec<Rational>> {
    let mut rows = vec![a.0.clone(), b.0.clone()];
    let n = a.dim();
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(r) = (pivot_row..2).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].clone();
        for c in 0..n {
            rows[pivot_row][c] = &rows[pivot_row][c] / &inv;
        }
        for r2 in 0..2 {
            if r2 != pivot_row && !rows[r2][col].is_zero() {
                let f = rows[r2][col].clone();
                for c in 0..n {
                    let sub = &rows[pivot_row][c] * &f;
                    rows[r2][c] = &rows[r2][c] - &sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == 2 {
            break;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn sampled_vectors_polarize() {
        let oct = builders::octahedron_skeleton();
        for seed in 0..20 {
            let xi = sample_polarizing(&oct, seed);
            assert!(is_polarizing(&oct, &xi));
        }
    }

    #[test]
    fn johnson_accepts_natural_xi() {
        let j = builders::johnson(4, 2).unwrap();
        let xi = Covector::from_ints(&[1, 2, 3, 4]);
        assert!(is_polarizing(&j.skeleton, &xi));
    }

    #[test]
    fn betti_fixtures() {
        let oct = builders::octahedron_skeleton();
        let xi = sample_polarizing(&oct, 1);
        assert_eq!(betti(&oct, &xi).unwrap(), vec![1, 1, 2, 1, 1]);

        let s6 = builders::s6();
        let xi = sample_polarizing(&s6, 1);
        assert_eq!(betti(&s6, &xi).unwrap(), vec![0, 1, 1, 0]);

        let g8 = builders::ramified_cover(2);
        let xi = sample_polarizing(&g8, 1);
        assert_eq!(betti(&g8, &xi).unwrap(), vec![2, 4, 2]);

        let cube = builders::cube_skeleton();
        let xi = sample_polarizing(&cube, 1);
        assert_eq!(betti(&cube, &xi).unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn betti_invariance_and_poincare_duality() {
        for (skel, label) in [
            (builders::octahedron_skeleton(), "octahedron"),
            (builders::s6(), "s6"),
            (builders::ramified_cover(2), "gamma8"),
            (builders::johnson(4, 2).unwrap().skeleton, "J(4,2)"),
        ] {
            let reference = betti(&skel, &sample_polarizing(&skel, 0)).unwrap();
            let d = skel.valence();
            for k in 0..=d {
                assert_eq!(reference[k], reference[d - k], "duality on {}", label);
            }
            assert_eq!(
                reference.iter().sum::<usize>(),
                skel.vertex_count(),
                "total on {}",
                label
            );
            for seed in 1..20 {
                let xi = sample_polarizing(&skel, seed);
                assert_eq!(
                    betti(&skel, &xi).unwrap(),
                    reference,
                    "invariance on {}",
                    label
                );
            }
        }
    }

    #[test]
    fn negating_xi_flips_indices() {
        let oct = builders::octahedron_skeleton();
        let xi = sample_polarizing(&oct, 3);
        let si = indices(&oct, &xi).unwrap();
        let sneg = indices(&oct, &-&xi).unwrap();
        let d = oct.valence();
        for v in 0..oct.vertex_count() {
            assert_eq!(sneg[v], d - si[v]);
        }
    }

    #[test]
    fn s6_is_cyclic_for_every_xi() {
        let s6 = builders::s6();
        for seed in 0..10 {
            let xi = sample_polarizing(&s6, seed);
            match Polarization::build(&s6, xi) {
                Err(PolarizeError::CyclicOrientation(cycle)) => {
                    assert!(!cycle.is_empty());
                }
                other => panic!("expected a cycle, got {:?}", other.map(|_| ())),
            }
        }
    }

    #[test]
    fn phi_is_injective_and_compatible() {
        let j = builders::johnson(4, 2).unwrap();
        let xi = Covector::from_ints(&[1, 2, 3, 4]);
        let pol = Polarization::build(&j.skeleton, xi).unwrap();
        for e in 0..j.skeleton.edge_count() {
            if pol.points_up(e) {
                assert!(pol.phi(j.skeleton.dst(e)) > pol.phi(j.skeleton.src(e)));
            }
        }
        // order agrees with the subset-sum function
        let by_phi = pol.vertices_by_phi();
        let sums: Vec<u64> = by_phi
            .iter()
            .map(|&v| j.subsets[v].iter().map(|&x| x as u64).sum())
            .collect();
        let mut sorted = sums.clone();
        sorted.sort();
        assert_eq!(sums, sorted);
    }

    #[test]
    fn edge_graph_polarization() {
        let l = builders::edge_plus();
        let xi = Covector::from_ints(&[1]);
        let pol = Polarization::build(&l, xi).unwrap();
        assert_eq!(pol.index(0), 0);
        assert_eq!(pol.index(1), 1);
    }

    #[test]
    fn three_valent_is_always_generic() {
        let cube = builders::cube_skeleton();
        for seed in 0..5 {
            let xi = sample_polarizing(&cube, seed);
            assert!(is_generic(&cube, &xi));
        }
    }

    #[test]
    fn degeneracy_hyperplane_xi_is_not_generic() {
        // At the octahedron vertex +e3 the planes span(alpha(±e1 edges)) and
        // span(alpha(±e2 edges)) intersect in the line through e3*, so any
        // polarizing xi with xi_3 = 0 contracts the two pairs to parallel
        // covectors.
        let oct = builders::octahedron_skeleton();
        let xi = Covector::from_ints(&[1, 2, 0]);
        assert!(is_polarizing(&oct, &xi));
        assert!(!is_generic(&oct, &xi));
        // a garden-variety xi is generic
        let xi = Covector::from_ints(&[1, 2, 4]);
        assert!(is_polarizing(&oct, &xi));
        assert!(is_generic(&oct, &xi));
    }

    #[test]
    fn flow_out_extremes() {
        let oct = builders::octahedron_skeleton();
        let xi = Covector::from_ints(&[1, 2, 4]);
        let pol = Polarization::build(&oct, xi).unwrap();
        let by_phi = pol.vertices_by_phi();
        let min = by_phi[0];
        let max = *by_phi.last().unwrap();
        assert_eq!(flow_out(&oct, &pol, max).len(), 1);
        assert_eq!(flow_out(&oct, &pol, min).len(), oct.vertex_count());
    }

    #[test]
    fn noncyclic_verdicts() {
        let oct = builders::octahedron_skeleton();
        let xi = Covector::from_ints(&[1, 2, 4]);
        let rep = check_noncyclic(&oct, &xi).unwrap();
        assert!(rep.passes());

        let g8 = builders::ramified_cover(2);
        let xi = sample_polarizing(&g8, 0);
        let rep = check_noncyclic(&g8, &xi).unwrap();
        assert!(rep.nca1.is_ok());
        assert!(!rep.nca2.is_empty());
        assert_eq!(rep.nca2[0].b0, 2);

        let s6 = builders::s6();
        let xi = sample_polarizing(&s6, 0);
        let rep = check_noncyclic(&s6, &xi).unwrap();
        assert!(rep.nca1.is_err());
    }
}
