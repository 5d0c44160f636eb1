//! The abstract one-skeleton: a d-valent graph with oriented-edge pairing,
//! axial function, edge multiplicities and a connection.
//!
//! Structure (constant valence, reverse pairing, connection bijections with
//! `theta_rev = theta^{-1}` and `theta_e(e) = rev e`) is enforced at
//! construction. The axioms are checked separately by [`OneSkeleton::validate`]:
//!
//! * A1 - at each vertex the axial covectors are pairwise independent;
//! * A2 - `m_rev * alpha_rev = -m_e * alpha_e` exactly;
//! * A3 - transporting an edge along `e` rescales its covector by some
//!   `lambda > 0` modulo `alpha_e`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed};

use crate::covector::Covector;
use crate::linalg::{rank_of, solve_pair_combination, DependentPair};
use crate::rational::{is_integer, Rational};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub src: VertexId,
    pub dst: VertexId,
    pub rev: EdgeId,
}

#[derive(Clone)]
pub struct OneSkeleton {
    n: usize,
    names: Vec<String>,
    edges: Vec<EdgeSpec>,
    out: Vec<Vec<EdgeId>>,
    axial: Vec<Covector>,
    mult: Vec<Rational>,
    conn: Vec<BTreeMap<EdgeId, EdgeId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    BadVertexCount,
    EdgeEndpointOutOfRange {
        edge: EdgeId,
    },
    BadReversePairing {
        edge: EdgeId,
    },
    NonConstantValence {
        vertex: VertexId,
        got: usize,
        want: usize,
    },
    AxialDimension {
        edge: EdgeId,
    },
    ZeroAxial {
        edge: EdgeId,
    },
    NonPositiveMultiplicity {
        edge: EdgeId,
    },
    ConnectionDomain {
        edge: EdgeId,
    },
    ConnectionNotBijective {
        edge: EdgeId,
    },
    ConnectionNotInverse {
        edge: EdgeId,
    },
    ConnectionEdgeToReverse {
        edge: EdgeId,
    },
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::BadVertexCount => write!(f, "vertex/name count mismatch"),
            StructureError::EdgeEndpointOutOfRange { edge } => {
                write!(f, "edge {} has an endpoint out of range", edge)
            }
            StructureError::BadReversePairing { edge } => {
                write!(f, "reverse pairing broken at edge {}", edge)
            }
            StructureError::NonConstantValence { vertex, got, want } => write!(
                f,
                "vertex {} has valence {} but the skeleton has valence {}",
                vertex, got, want
            ),
            StructureError::AxialDimension { edge } => {
                write!(f, "axial covector of edge {} has wrong dimension", edge)
            }
            StructureError::ZeroAxial { edge } => {
                write!(f, "axial covector of edge {} is zero", edge)
            }
            StructureError::NonPositiveMultiplicity { edge } => {
                write!(f, "multiplicity of edge {} is not positive", edge)
            }
            StructureError::ConnectionDomain { edge } => {
                write!(
                    f,
                    "connection of edge {} is not defined on its source star",
                    edge
                )
            }
            StructureError::ConnectionNotBijective { edge } => {
                write!(
                    f,
                    "connection of edge {} is not a bijection onto the target star",
                    edge
                )
            }
            StructureError::ConnectionNotInverse { edge } => {
                write!(
                    f,
                    "connection of edge {} is not inverse to the reverse connection",
                    edge
                )
            }
            StructureError::ConnectionEdgeToReverse { edge } => {
                write!(
                    f,
                    "connection of edge {} does not map the edge to its reverse",
                    edge
                )
            }
        }
    }
}

impl OneSkeleton {
    pub fn new(
        n: usize,
        names: Vec<String>,
        edges: Vec<EdgeSpec>,
        axial: Vec<Covector>,
        mult: Vec<Rational>,
        conn: Vec<BTreeMap<EdgeId, EdgeId>>,
    ) -> Result<Self, StructureError> {
        // the empty skeleton (no vertices, no edges) is allowed: it is the
        // reduction at a level with no crossing edges
        let vcount = names.len();
        let ecount = edges.len();
        if axial.len() != ecount || mult.len() != ecount || conn.len() != ecount {
            return Err(StructureError::BadVertexCount);
        }
        let mut out: Vec<Vec<EdgeId>> = vec![Vec::new(); vcount];
        for (id, e) in edges.iter().enumerate() {
            if e.src >= vcount || e.dst >= vcount {
                return Err(StructureError::EdgeEndpointOutOfRange { edge: id });
            }
            out[e.src].push(id);
        }
        for (id, e) in edges.iter().enumerate() {
            if e.rev >= ecount {
                return Err(StructureError::BadReversePairing { edge: id });
            }
            let r = &edges[e.rev];
            if r.rev != id || r.src != e.dst || r.dst != e.src {
                return Err(StructureError::BadReversePairing { edge: id });
            }
        }
        let valence = out.first().map(|s| s.len()).unwrap_or(0);
        for (v, star) in out.iter().enumerate() {
            if star.len() != valence {
                return Err(StructureError::NonConstantValence {
                    vertex: v,
                    got: star.len(),
                    want: valence,
                });
            }
        }
        for (id, a) in axial.iter().enumerate() {
            if a.dim() != n {
                return Err(StructureError::AxialDimension { edge: id });
            }
            if a.is_zero() {
                return Err(StructureError::ZeroAxial { edge: id });
            }
        }
        for (id, m) in mult.iter().enumerate() {
            if !m.is_positive() {
                return Err(StructureError::NonPositiveMultiplicity { edge: id });
            }
        }
        let skel = OneSkeleton {
            n,
            names,
            edges,
            out,
            axial,
            mult,
            conn,
        };
        skel.check_connection()?;
        Ok(skel)
    }

    fn check_connection(&self) -> Result<(), StructureError> {
        for e in 0..self.edge_count() {
            let map = &self.conn[e];
            let src_star: BTreeSet<EdgeId> = self.out[self.edges[e].src].iter().copied().collect();
            let dst_star: BTreeSet<EdgeId> = self.out[self.edges[e].dst].iter().copied().collect();
            if map.len() != src_star.len() || !map.keys().all(|k| src_star.contains(k)) {
                return Err(StructureError::ConnectionDomain { edge: e });
            }
            let image: BTreeSet<EdgeId> = map.values().copied().collect();
            if image != dst_star {
                return Err(StructureError::ConnectionNotBijective { edge: e });
            }
            if map[&e] != self.edges[e].rev {
                return Err(StructureError::ConnectionEdgeToReverse { edge: e });
            }
            let rev = self.edges[e].rev;
            for (&g, &h) in map {
                if self.conn[rev][&h] != g {
                    return Err(StructureError::ConnectionNotInverse { edge: e });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn valence(&self) -> usize {
        self.out.first().map(|s| s.len()).unwrap_or(0)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e].src
    }

    pub fn dst(&self, e: EdgeId) -> VertexId {
        self.edges[e].dst
    }

    pub fn reverse(&self, e: EdgeId) -> EdgeId {
        self.edges[e].rev
    }

    pub fn axial(&self, e: EdgeId) -> &Covector {
        &self.axial[e]
    }

    pub fn mult(&self, e: EdgeId) -> &Rational {
        &self.mult[e]
    }

    /// Outgoing oriented edges at `v`.
    pub fn edges_at(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v]
    }

    /// Transport of `g` (outgoing at `src e`) along `e`.
    pub fn theta(&self, e: EdgeId, g: EdgeId) -> EdgeId {
        self.conn[e][&g]
    }

    pub fn connection_map(&self, e: EdgeId) -> &BTreeMap<EdgeId, EdgeId> {
        &self.conn[e]
    }

    /// One representative per unoriented edge (the orientation with the
    /// smaller id).
    pub fn unoriented(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).filter(move |&e| e < self.reverse(e))
    }

    /// The oriented edge from `p` to `q`, when there is exactly one.
    pub fn edge_between(&self, p: VertexId, q: VertexId) -> Option<EdgeId> {
        let mut found = None;
        for &e in &self.out[p] {
            if self.dst(e) == q {
                if found.is_some() {
                    return None;
                }
                found = Some(e);
            }
        }
        found
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                let w = self.dst(e);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Transport an outgoing edge along a path of oriented edges.
    pub fn transport_along(&self, path: &[EdgeId], mut g: EdgeId) -> EdgeId {
        for &e in path {
            debug_assert_eq!(self.src(g), self.src(e));
            g = self.theta(e, g);
        }
        g
    }

    /// Same skeleton with a replacement connection (structure re-checked).
    pub fn with_connection(
        &self,
        conn: Vec<BTreeMap<EdgeId, EdgeId>>,
    ) -> Result<OneSkeleton, StructureError> {
        OneSkeleton::new(
            self.n,
            self.names.clone(),
            self.edges.clone(),
            self.axial.clone(),
            self.mult.clone(),
            conn,
        )
    }

    /// Equivalent axial function: scales the axial value of one oriented
    /// edge by a positive rational, compensating in the multiplicity so A2
    /// still holds. A1 and A3 are insensitive to positive rescaling.
    pub fn rescale_edge(&self, e: EdgeId, lambda: &Rational) -> OneSkeleton {
        assert!(lambda.is_positive(), "rescaling must be positive");
        let mut out = self.clone();
        out.axial[e] = self.axial[e].scale(lambda);
        out.mult[e] = &self.mult[e] / lambda;
        out
    }

    /// Equivalent skeleton with all multiplicities 1 (each axial value is
    /// scaled by its positive multiplicity, preserving A1-A3).
    pub fn normalize_multiplicities(&self) -> OneSkeleton {
        let axial = self
            .axial
            .iter()
            .zip(&self.mult)
            .map(|(a, m)| a.scale(m))
            .collect();
        OneSkeleton {
            n: self.n,
            names: self.names.clone(),
            edges: self.edges.clone(),
            out: self.out.clone(),
            axial,
            mult: vec![Rational::one(); self.edge_count()],
            conn: self.conn.clone(),
        }
    }

    /// Checks axioms A1-A3 and tabulates the A3 coefficients.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        // A1: pairwise independence of the star covectors
        for v in 0..self.vertex_count() {
            let star = &self.out[v];
            for i in 0..star.len() {
                for j in (i + 1)..star.len() {
                    let (a, b) = (star[i], star[j]);
                    if self.axial[a].is_parallel(&self.axial[b]) {
                        report.a1.push(A1Violation {
                            vertex: v,
                            edges: (a, b),
                        });
                    }
                }
            }
        }
        // A2: m_rev * alpha_rev = -m_e * alpha_e
        for e in self.unoriented() {
            let r = self.reverse(e);
            let lhs = self.axial[r].scale(&self.mult[r]);
            let rhs = -&self.axial[e].scale(&self.mult[e]);
            if lhs != rhs {
                report.a2.push(A2Violation { edge: e });
            }
        }
        // A3: alpha_{theta_e(g)} = lambda * alpha_g + c * alpha_e, lambda > 0
        for e in 0..self.edge_count() {
            let mut entries = Vec::new();
            for &g in &self.out[self.src(e)] {
                let image = self.theta(e, g);
                let entry = if g == e {
                    // theta_e(e) = rev(e); alpha_rev is parallel to alpha_e,
                    // so record the lambda = 1 decomposition.
                    let c = self.axial[self.reverse(e)]
                        .ratio_to(&self.axial[e])
                        .map(|r| r - Rational::one());
                    match c {
                        Some(c) => A3Entry {
                            edge_at_src: g,
                            image,
                            lambda: Rational::one(),
                            c,
                            ok: true,
                        },
                        None => {
                            report.a3.push(A3Violation {
                                edge: e,
                                edge_at_src: g,
                                reason: A3Reason::NotInSpan,
                            });
                            continue;
                        }
                    }
                } else {
                    match solve_pair_combination(&self.axial[image], &self.axial[g], &self.axial[e])
                    {
                        Some((lambda, c)) => {
                            let ok = lambda.is_positive();
                            if !ok {
                                report.a3.push(A3Violation {
                                    edge: e,
                                    edge_at_src: g,
                                    reason: A3Reason::NonPositiveLambda(lambda.clone()),
                                });
                            }
                            A3Entry {
                                edge_at_src: g,
                                image,
                                lambda,
                                c,
                                ok,
                            }
                        }
                        None => {
                            report.a3.push(A3Violation {
                                edge: e,
                                edge_at_src: g,
                                reason: A3Reason::NotInSpan,
                            });
                            continue;
                        }
                    }
                };
                entries.push(entry);
            }
            report.a3_table.insert(e, entries);
        }
        report
    }

    /// Largest `l <= min(d, n)` such that every `l`-subset of axial values
    /// at every vertex is linearly independent. Three-independence means a
    /// result of at least 3.
    pub fn independence_level(&self) -> usize {
        let cap = self.valence().min(self.n);
        let mut level = cap.min(1);
        for l in 2..=cap {
            let mut all_ok = true;
            'vertices: for v in 0..self.vertex_count() {
                let star = &self.out[v];
                for subset in subsets(star.len(), l) {
                    let vs: Vec<&Covector> = subset.iter().map(|&i| &self.axial[star[i]]).collect();
                    if rank_of(&vs) < l {
                        all_ok = false;
                        break 'vertices;
                    }
                }
            }
            if all_ok {
                level = l;
            } else {
                break;
            }
        }
        level
    }

    pub fn is_three_independent(&self) -> bool {
        self.independence_level() >= 3
    }

    /// GKM integrality: unit multiplicities, `alpha_rev = -alpha_e`, all
    /// A3 rescalings `lambda = 1`, integer A3 constants `c`, and integer
    /// axial coordinates in the standard lattice.
    pub fn is_gkm(&self) -> (bool, GkmReport) {
        let mut report = GkmReport::default();
        for e in 0..self.edge_count() {
            if !self.mult[e].is_one() {
                report.non_unit_multiplicity.push(e);
            }
            if self.axial[self.reverse(e)] != -&self.axial[e] {
                if e < self.reverse(e) {
                    report.reverse_not_negated.push(e);
                }
            }
            if self.axial[e].0.iter().any(|c| !is_integer(c)) {
                report.non_lattice_axial.push(e);
            }
        }
        let validation = self.validate();
        for (&e, entries) in &validation.a3_table {
            for entry in entries {
                if !entry.ok {
                    continue;
                }
                if !entry.lambda.is_one() {
                    report.non_unit_lambda.push((e, entry.edge_at_src));
                } else if !is_integer(&entry.c) {
                    report.non_integer_c.push((e, entry.edge_at_src));
                }
            }
        }
        report.axioms_ok = validation.passes();
        let ok = report.axioms_ok
            && report.non_unit_multiplicity.is_empty()
            && report.reverse_not_negated.is_empty()
            && report.non_lattice_axial.is_empty()
            && report.non_unit_lambda.is_empty()
            && report.non_integer_c.is_empty();
        (ok, report)
    }

    /// The subgraph of edges whose axial values lie in the plane spanned by
    /// `alpha` and `beta`, split into connected components. Components of
    /// such subgraphs are always totally geodesic.
    pub fn subskeleton_by_plane(
        &self,
        alpha: &Covector,
        beta: &Covector,
    ) -> Result<Vec<SubSkeleton>, DependentPair> {
        if rank_of(&[alpha, beta]) < 2 {
            return Err(DependentPair);
        }
        let in_plane: Vec<EdgeId> = (0..self.edge_count())
            .filter(|&e| rank_of(&[alpha, beta, &self.axial[e]]) == 2)
            .collect();
        Ok(self.components_of_edge_set(&in_plane))
    }

    /// Connected components of an edge subset (closed under reversal).
    pub fn components_of_edge_set(&self, edge_set: &[EdgeId]) -> Vec<SubSkeleton> {
        let set: BTreeSet<EdgeId> = edge_set
            .iter()
            .flat_map(|&e| [e, self.reverse(e)])
            .collect();
        let mut vertex_seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut components = Vec::new();
        let vertices: BTreeSet<VertexId> = set.iter().map(|&e| self.src(e)).collect();
        for &start in &vertices {
            if vertex_seen.contains(&start) {
                continue;
            }
            let mut comp_vertices = BTreeSet::new();
            let mut comp_edges = BTreeSet::new();
            let mut stack = vec![start];
            comp_vertices.insert(start);
            while let Some(v) = stack.pop() {
                for &e in &self.out[v] {
                    if set.contains(&e) {
                        comp_edges.insert(e);
                        comp_edges.insert(self.reverse(e));
                        let w = self.dst(e);
                        if comp_vertices.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
            vertex_seen.extend(comp_vertices.iter().copied());
            components.push(SubSkeleton {
                vertices: comp_vertices.into_iter().collect(),
                edges: comp_edges.into_iter().collect(),
            });
        }
        components
    }
}

/// Enumerates `l`-subsets of `0..n` as index vectors.
fn subsets(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, l: usize) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(out, cur, i + 1, n, l);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, n, l);
    out
}

/// A vertex-and-edge subset of a parent skeleton, closed under reversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubSkeleton {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotTotallyGeodesic {
    pub edge: EdgeId,
    pub offending: EdgeId,
}

impl fmt::Display for NotTotallyGeodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "subgraph is not totally geodesic: transport along edge {} moves edge {} outside",
            self.edge, self.offending
        )
    }
}

impl SubSkeleton {
    /// All edges of `skel` with both endpoints in `vertices`.
    pub fn induced(skel: &OneSkeleton, vertices: &[VertexId]) -> SubSkeleton {
        let vs: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let edges = (0..skel.edge_count())
            .filter(|&e| vs.contains(&skel.src(e)) && vs.contains(&skel.dst(e)))
            .collect();
        SubSkeleton {
            vertices: vs.into_iter().collect(),
            edges,
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Edges of the subset outgoing at `v`.
    pub fn edges_at<'a>(&'a self, skel: &'a OneSkeleton, v: VertexId) -> Vec<EdgeId> {
        skel.edges_at(v)
            .iter()
            .copied()
            .filter(|&e| self.contains_edge(e))
            .collect()
    }

    /// `Some(r)` when every subset vertex has exactly `r` subset edges.
    pub fn regular_valence(&self, skel: &OneSkeleton) -> Option<usize> {
        let mut val = None;
        for &v in &self.vertices {
            let d = self.edges_at(skel, v).len();
            match val {
                None => val = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        val
    }

    /// Verifies that the connection preserves the subset star along subset
    /// edges.
    pub fn check_totally_geodesic(&self, skel: &OneSkeleton) -> Result<(), NotTotallyGeodesic> {
        for &e in &self.edges {
            for &g in &self.edges_at(skel, skel.src(e)) {
                let image = skel.theta(e, g);
                if !self.contains_edge(image) {
                    return Err(NotTotallyGeodesic {
                        edge: e,
                        offending: g,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self, skel: &OneSkeleton) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.vertices[0]];
        seen.insert(self.vertices[0]);
        while let Some(v) = stack.pop() {
            for &e in &self.edges_at(skel, v) {
                let w = skel.dst(e);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Copies the subset out as a standalone skeleton (restriction of the
    /// axial function and connection). Requires constant valence and total
    /// geodesy so the restricted connection is well defined.
    pub fn extract(
        &self,
        skel: &OneSkeleton,
    ) -> Result<(OneSkeleton, Vec<VertexId>), NotTotallyGeodesic> {
        self.check_totally_geodesic(skel)?;
        let vmap: BTreeMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let emap: BTreeMap<EdgeId, usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let names = self
            .vertices
            .iter()
            .map(|&v| skel.names[v].clone())
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&e| EdgeSpec {
                src: vmap[&skel.src(e)],
                dst: vmap[&skel.dst(e)],
                rev: emap[&skel.reverse(e)],
            })
            .collect();
        let axial = self.edges.iter().map(|&e| skel.axial[e].clone()).collect();
        let mult = self.edges.iter().map(|&e| skel.mult[e].clone()).collect();
        let conn = self
            .edges
            .iter()
            .map(|&e| {
                self.edges_at(skel, skel.src(e))
                    .into_iter()
                    .map(|g| (emap[&g], emap[&skel.theta(e, g)]))
                    .collect()
            })
            .collect();
        let skel2 = OneSkeleton::new(skel.n, names, edges, axial, mult, conn)
            .expect("extracted sub-skeleton is structurally sound");
        Ok((skel2, self.vertices.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A1Violation {
    pub vertex: VertexId,
    pub edges: (EdgeId, EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Violation {
    pub edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum A3Reason {
    NotInSpan,
    NonPositiveLambda(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A3Violation {
    pub edge: EdgeId,
    pub edge_at_src: EdgeId,
    pub reason: A3Reason,
}

/// Per-edge A3 coefficients: `alpha_image = lambda * alpha_g + c * alpha_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A3Entry {
    pub edge_at_src: EdgeId,
    pub image: EdgeId,
    pub lambda: Rational,
    pub c: Rational,
    pub ok: bool,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub a1: Vec<A1Violation>,
    pub a2: Vec<A2Violation>,
    pub a3: Vec<A3Violation>,
    pub a3_table: BTreeMap<EdgeId, Vec<A3Entry>>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.a1.is_empty() && self.a2.is_empty() && self.a3.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct GkmReport {
    pub axioms_ok: bool,
    pub non_unit_multiplicity: Vec<EdgeId>,
    pub reverse_not_negated: Vec<EdgeId>,
    pub non_lattice_axial: Vec<EdgeId>,
    pub non_unit_lambda: Vec<(EdgeId, EdgeId)>,
    pub non_integer_c: Vec<(EdgeId, EdgeId)>,
}
