//! Holonomy of the connection: loop transports based at a vertex generate
//! a subgroup of the permutations of the edge star; for a totally geodesic
//! subgraph the transports restrict to the normal star.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::skeleton::{EdgeId, NotTotallyGeodesic, OneSkeleton, SubSkeleton, VertexId};

/// A permutation of `0..n` given by its image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }
}

pub struct HolonomyReport {
    pub base: VertexId,
    /// The permuted domain: edge ids of the (normal) star at `base`.
    pub domain: Vec<EdgeId>,
    pub generators: Vec<Permutation>,
    /// Group order when the closure stayed within the cap.
    pub order: Option<u64>,
    pub trivial: bool,
}

/// Spanning-tree loop generators of the holonomy at `base`.
///
/// With `sub = None` the full holonomy of the (connected) skeleton is
/// generated. With a sub-skeleton, loops run inside the subgraph and the
/// transports are restricted to the normal star `N_base` (requires total
/// geodesy). `cap` bounds the closure enumeration; above it only the
/// generators are reported.
pub fn holonomy_generators(
    skel: &OneSkeleton,
    sub: Option<&SubSkeleton>,
    base: VertexId,
    cap: u64,
) -> Result<HolonomyReport, NotTotallyGeodesic> {
    let star_of = |v: VertexId| -> Vec<EdgeId> {
        match sub {
            None => skel.edges_at(v).to_vec(),
            Some(s) => s.edges_at(skel, v),
        }
    };
    if let Some(s) = sub {
        s.check_totally_geodesic(skel)?;
    }
    // domain: full star for the whole skeleton, normal star for a subgraph
    let domain: Vec<EdgeId> = match sub {
        None => skel.edges_at(base).to_vec(),
        Some(s) => skel
            .edges_at(base)
            .iter()
            .copied()
            .filter(|&e| !s.contains_edge(e))
            .collect(),
    };
    // BFS tree inside the allowed edge set
    let mut tree_path: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    tree_path.insert(base, Vec::new());
    let mut queue = vec![base];
    let mut head = 0;
    let mut non_tree: Vec<EdgeId> = Vec::new();
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for e in star_of(v) {
            let w = skel.dst(e);
            if tree_path.contains_key(&w) {
                non_tree.push(e);
            } else {
                let mut path = tree_path[&v].clone();
                path.push(e);
                tree_path.insert(w, path);
                queue.push(w);
            }
        }
    }
    // transport the full star around each non-tree loop, then restrict
    let full_star: Vec<EdgeId> = skel.edges_at(base).to_vec();
    let position: BTreeMap<EdgeId, usize> =
        domain.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut generators: BTreeSet<Permutation> = BTreeSet::new();
    for e in non_tree {
        let v = skel.src(e);
        let w = skel.dst(e);
        // loop: base -> v, e, then reverse of the tree path back from w
        let mut loop_edges: Vec<EdgeId> = tree_path[&v].clone();
        loop_edges.push(e);
        for &t in tree_path[&w].iter().rev() {
            loop_edges.push(skel.reverse(t));
        }
        let mut images: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for &g in &full_star {
            images.insert(g, skel.transport_along(&loop_edges, g));
        }
        let perm = Permutation(
            domain
                .iter()
                .map(|&g| {
                    let img = images[&g];
                    *position
                        .get(&img)
                        .expect("total geodesy keeps normal edges normal")
                })
                .collect(),
        );
        if !perm.is_identity() {
            generators.insert(perm);
        }
    }
    let generators: Vec<Permutation> = generators.into_iter().collect();
    let trivial = generators.is_empty();
    let order = closure_order(&generators, domain.len(), cap);
    Ok(HolonomyReport {
        base,
        domain,
        generators,
        order,
        trivial,
    })
}

fn closure_order(generators: &[Permutation], n: usize, cap: u64) -> Option<u64> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(frontier[0].clone());
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = g.compose(&p);
            if seen.len() as u64 >= cap && !seen.contains(&q) {
                return None;
            }
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    Some(seen.len() as u64)
}
