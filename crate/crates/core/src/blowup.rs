//! Blowing up a one-skeleton along a totally geodesic sub-skeleton.
//!
//! Every center vertex is replaced by one new vertex per normal edge; the
//! fibers are complete graphs glued along the center's connection, the old
//! normal edges reattach to the fiber vertices, and the rest of the skeleton
//! is untouched. The singular locus carries a canonical degree-1 Thom class
//! supported on the fiber vertices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed};

use crate::cohomology::{decompose_by_taus, is_class, ClassCheck, CohomologyClass};
use crate::covector::Covector;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::skeleton::{EdgeId, EdgeSpec, OneSkeleton, SubSkeleton, VertexId};

#[derive(Clone, Debug)]
pub enum Weights {
    /// The same positive weight on every normal edge.
    Constant(Rational),
    /// One positive weight per (center vertex, outgoing normal edge).
    PerEdge(BTreeMap<(VertexId, EdgeId), Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowUpError {
    BadCenter(String),
    NotTotallyGeodesic {
        edge: EdgeId,
        offending: EdgeId,
    },
    Condition2Violated {
        center_edge: EdgeId,
        normal_edge: EdgeId,
    },
    BadWeights(String),
    /// The assembled skeleton fails an axiom: the inputs were outside the
    /// construction's hypotheses in a way the earlier checks cannot see.
    ResultViolatesAxioms(String),
}

impl fmt::Display for BlowUpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowUpError::BadCenter(m) => write!(f, "bad blow-up center: {}", m),
            BlowUpError::NotTotallyGeodesic { edge, offending } => write!(
                f,
                "center is not totally geodesic: edge {} moves edge {} outside",
                edge, offending
            ),
            BlowUpError::Condition2Violated {
                center_edge,
                normal_edge,
            } => write!(
                f,
                "normal axial difference along center edge {} for normal edge {} is not a multiple of the center direction",
                center_edge, normal_edge
            ),
            BlowUpError::BadWeights(m) => write!(f, "bad weights: {}", m),
            BlowUpError::ResultViolatesAxioms(m) => {
                write!(f, "blow-up result violates the axioms: {}", m)
            }
        }
    }
}

/// Identity of a result edge before ids are assigned.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum EdgeKey {
    /// Over a center edge, at a normal slot of its source.
    Horizontal(EdgeId, EdgeId),
    /// Inside the fiber over a center vertex: slot a to slot b.
    Vertical(VertexId, EdgeId, EdgeId),
    /// Copy of an untouched edge.
    Outside(EdgeId),
    /// Fiber vertex down to its normal target (keyed by the normal edge).
    FiberOut(EdgeId),
    /// Normal target back up to the fiber vertex.
    FiberIn(EdgeId),
}

pub struct BlowUp {
    pub result: OneSkeleton,
    /// Blow-down on vertices: result vertex -> source vertex.
    pub beta: Vec<VertexId>,
    /// For fiber vertices: (center vertex, normal edge) in the source.
    pub fiber: Vec<Option<(VertexId, EdgeId)>>,
    /// The singular locus inside the result.
    pub singular: SubSkeleton,
    /// Degree-1 class supported on the singular locus.
    pub thom: CohomologyClass,
    /// Expanded positive weights per (center vertex, normal edge).
    pub weights: BTreeMap<(VertexId, EdgeId), Rational>,
    /// The center as a standalone skeleton plus its vertex back-references.
    pub center_skeleton: OneSkeleton,
    pub center_vertices: Vec<VertexId>,
}

pub fn blow_up(
    skel: &OneSkeleton,
    center: &SubSkeleton,
    weights: &Weights,
) -> Result<BlowUp, BlowUpError> {
    if center.vertices.is_empty() {
        return Err(BlowUpError::BadCenter("empty center".into()));
    }
    center
        .check_totally_geodesic(skel)
        .map_err(|e| BlowUpError::NotTotallyGeodesic {
            edge: e.edge,
            offending: e.offending,
        })?;
    let d0 = center
        .regular_valence(skel)
        .ok_or_else(|| BlowUpError::BadCenter("center valence is not constant".into()))?;
    let d = skel.valence();
    if d0 + 1 > d {
        return Err(BlowUpError::BadCenter(
            "center has no normal directions".into(),
        ));
    }
    let center_set: BTreeSet<VertexId> = center.vertices.iter().copied().collect();
    // normal star (sorted) per center vertex
    let normals: BTreeMap<VertexId, Vec<EdgeId>> = center
        .vertices
        .iter()
        .map(|&p| {
            let star: Vec<EdgeId> = skel
                .edges_at(p)
                .iter()
                .copied()
                .filter(|&e| !center.contains_edge(e))
                .collect();
            (p, star)
        })
        .collect();
    for (p, star) in &normals {
        for &a in star {
            if center_set.contains(&skel.dst(a)) {
                return Err(BlowUpError::BadCenter(format!(
                    "normal edge {} at center vertex {} ends inside the center",
                    a, p
                )));
            }
        }
    }
    // expand and check weights
    let mut n: BTreeMap<(VertexId, EdgeId), Rational> = BTreeMap::new();
    match weights {
        Weights::Constant(c) => {
            if !c.is_positive() {
                return Err(BlowUpError::BadWeights("weight must be positive".into()));
            }
            for (&p, star) in &normals {
                for &a in star {
                    n.insert((p, a), c.clone());
                }
            }
        }
        Weights::PerEdge(map) => {
            for (&p, star) in &normals {
                for &a in star {
                    let Some(w) = map.get(&(p, a)) else {
                        return Err(BlowUpError::BadWeights(format!(
                            "missing weight for normal edge {} at vertex {}",
                            a, p
                        )));
                    };
                    if !w.is_positive() {
                        return Err(BlowUpError::BadWeights("weight must be positive".into()));
                    }
                    n.insert((p, a), w.clone());
                }
            }
        }
    }
    // weights constant along horizontal transport, and the normal axial
    // differences are multiples of the center direction
    for &e in &center.edges {
        let (pi, pj) = (skel.src(e), skel.dst(e));
        for &a in &normals[&pi] {
            let a2 = skel.theta(e, a);
            if n[&(pi, a)] != n[&(pj, a2)] {
                return Err(BlowUpError::BadWeights(format!(
                    "weights differ across center edge {}: normal {} vs {}",
                    e, a, a2
                )));
            }
            let diff = &skel.axial(a).clone() - skel.axial(a2);
            if !diff.is_parallel(skel.axial(e)) {
                return Err(BlowUpError::Condition2Violated {
                    center_edge: e,
                    normal_edge: a,
                });
            }
        }
    }

    // vertex layout: fibers first (center order, slot order), then outside
    let mut names: Vec<String> = Vec::new();
    let mut beta: Vec<VertexId> = Vec::new();
    let mut fiber: Vec<Option<(VertexId, EdgeId)>> = Vec::new();
    let mut fiber_id: BTreeMap<(VertexId, EdgeId), usize> = BTreeMap::new();
    for &p in &center.vertices {
        for &a in &normals[&p] {
            fiber_id.insert((p, a), names.len());
            names.push(format!("{}|{}", skel.name(p), skel.name(skel.dst(a))));
            beta.push(p);
            fiber.push(Some((p, a)));
        }
    }
    let mut outside_id: BTreeMap<VertexId, usize> = BTreeMap::new();
    for v in 0..skel.vertex_count() {
        if !center_set.contains(&v) {
            outside_id.insert(v, names.len());
            names.push(skel.name(v).into());
            beta.push(v);
            fiber.push(None);
        }
    }

    // edge keys in a deterministic order
    let mut keys: Vec<EdgeKey> = Vec::new();
    for &e in &center.edges {
        for &a in &normals[&skel.src(e)] {
            keys.push(EdgeKey::Horizontal(e, a));
        }
    }
    for &p in &center.vertices {
        for &a in &normals[&p] {
            for &b in &normals[&p] {
                if a != b {
                    keys.push(EdgeKey::Vertical(p, a, b));
                }
            }
        }
    }
    for e in 0..skel.edge_count() {
        if !center_set.contains(&skel.src(e)) && !center_set.contains(&skel.dst(e)) {
            keys.push(EdgeKey::Outside(e));
        }
    }
    for &p in &center.vertices {
        for &a in &normals[&p] {
            keys.push(EdgeKey::FiberOut(a));
            keys.push(EdgeKey::FiberIn(a));
        }
    }
    let key_id: BTreeMap<EdgeKey, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();

    let src_of = |k: EdgeKey| -> usize {
        match k {
            EdgeKey::Horizontal(e, a) => fiber_id[&(skel.src(e), a)],
            EdgeKey::Vertical(p, a, _) => fiber_id[&(p, a)],
            EdgeKey::Outside(e) => outside_id[&skel.src(e)],
            EdgeKey::FiberOut(a) => fiber_id[&(skel.src(a), a)],
            EdgeKey::FiberIn(a) => outside_id[&skel.dst(a)],
        }
    };
    let dst_of = |k: EdgeKey| -> usize {
        match k {
            EdgeKey::Horizontal(e, a) => fiber_id[&(skel.dst(e), skel.theta(e, a))],
            EdgeKey::Vertical(p, _, b) => fiber_id[&(p, b)],
            EdgeKey::Outside(e) => outside_id[&skel.dst(e)],
            EdgeKey::FiberOut(a) => outside_id[&skel.dst(a)],
            EdgeKey::FiberIn(a) => fiber_id[&(skel.src(a), a)],
        }
    };
    let rev_of = |k: EdgeKey| -> EdgeKey {
        match k {
            EdgeKey::Horizontal(e, a) => EdgeKey::Horizontal(skel.reverse(e), skel.theta(e, a)),
            EdgeKey::Vertical(p, a, b) => EdgeKey::Vertical(p, b, a),
            EdgeKey::Outside(e) => EdgeKey::Outside(skel.reverse(e)),
            EdgeKey::FiberOut(a) => EdgeKey::FiberIn(a),
            EdgeKey::FiberIn(a) => EdgeKey::FiberOut(a),
        }
    };
    let axial_of = |k: EdgeKey| -> Covector {
        match k {
            EdgeKey::Horizontal(e, _) => skel.axial(e).clone(),
            EdgeKey::Vertical(p, a, b) => {
                // alpha_b - (n_b / n_a) alpha_a
                let ratio = &n[&(p, b)] / &n[&(p, a)];
                &skel.axial(b).clone() - &skel.axial(a).scale(&ratio)
            }
            EdgeKey::Outside(e) => skel.axial(e).clone(),
            EdgeKey::FiberOut(a) => skel
                .axial(a)
                .scale(&(Rational::one() / &n[&(skel.src(a), a)])),
            EdgeKey::FiberIn(a) => skel.axial(skel.reverse(a)).clone(),
        }
    };
    let mult_of = |k: EdgeKey| -> Rational {
        match k {
            EdgeKey::Horizontal(e, _) => skel.mult(e).clone(),
            EdgeKey::Vertical(p, a, _) => n[&(p, a)].clone(),
            EdgeKey::Outside(e) => skel.mult(e).clone(),
            EdgeKey::FiberOut(a) => &n[&(skel.src(a), a)] * skel.mult(a),
            EdgeKey::FiberIn(a) => skel.mult(skel.reverse(a)).clone(),
        }
    };
    // result form of a source edge whose source vertex is outside the center
    let resultize = |e: EdgeId| -> EdgeKey {
        if center_set.contains(&skel.dst(e)) {
            EdgeKey::FiberIn(skel.reverse(e))
        } else {
            EdgeKey::Outside(e)
        }
    };
    // star of a fiber vertex (p, a) identified with the source star at p
    let identify = |_p: VertexId, a: EdgeId, k: EdgeKey| -> EdgeId {
        match k {
            EdgeKey::Horizontal(g, slot) => {
                debug_assert_eq!(slot, a);
                g
            }
            EdgeKey::Vertical(_, slot, b) => {
                debug_assert_eq!(slot, a);
                b
            }
            EdgeKey::FiberOut(slot) => {
                debug_assert_eq!(slot, a);
                slot
            }
            _ => unreachable!("not an edge at a fiber vertex"),
        }
    };
    let deidentify = |p: VertexId, a: EdgeId, g: EdgeId| -> EdgeKey {
        if center.contains_edge(g) {
            EdgeKey::Horizontal(g, a)
        } else if g == a {
            EdgeKey::FiberOut(a)
        } else {
            debug_assert_eq!(skel.src(g), p);
            EdgeKey::Vertical(p, a, g)
        }
    };
    let fiber_star = |p: VertexId, a: EdgeId| -> Vec<EdgeKey> {
        let mut star: Vec<EdgeKey> = Vec::new();
        for &g in skel.edges_at(p) {
            if center.contains_edge(g) {
                star.push(EdgeKey::Horizontal(g, a));
            } else if g != a {
                star.push(EdgeKey::Vertical(p, a, g));
            }
        }
        star.push(EdgeKey::FiberOut(a));
        star
    };
    let conn_of = |k: EdgeKey| -> BTreeMap<usize, usize> {
        let mut map = BTreeMap::new();
        match k {
            EdgeKey::Horizontal(e, a) => {
                let a2 = skel.theta(e, a);
                let p = skel.src(e);
                for g in fiber_star(p, a) {
                    let image = match g {
                        EdgeKey::Horizontal(ce, _) => EdgeKey::Horizontal(skel.theta(e, ce), a2),
                        EdgeKey::Vertical(_, _, b) => {
                            EdgeKey::Vertical(skel.dst(e), a2, skel.theta(e, b))
                        }
                        EdgeKey::FiberOut(_) => EdgeKey::FiberOut(a2),
                        _ => unreachable!(),
                    };
                    map.insert(key_id[&g], key_id[&image]);
                }
            }
            EdgeKey::Vertical(p, a, b) => {
                for g in fiber_star(p, a) {
                    let image = match g {
                        EdgeKey::Horizontal(ce, _) => EdgeKey::Horizontal(ce, b),
                        EdgeKey::Vertical(_, _, c) => {
                            if c == b {
                                EdgeKey::Vertical(p, b, a)
                            } else {
                                EdgeKey::Vertical(p, b, c)
                            }
                        }
                        EdgeKey::FiberOut(_) => EdgeKey::FiberOut(b),
                        _ => unreachable!(),
                    };
                    map.insert(key_id[&g], key_id[&image]);
                }
            }
            EdgeKey::Outside(e) => {
                for &g in skel.edges_at(skel.src(e)) {
                    map.insert(key_id[&resultize(g)], key_id[&resultize(skel.theta(e, g))]);
                }
            }
            EdgeKey::FiberOut(a) => {
                let p = skel.src(a);
                for g in fiber_star(p, a) {
                    let source_edge = identify(p, a, g);
                    let image = resultize(skel.theta(a, source_edge));
                    map.insert(key_id[&g], key_id[&image]);
                }
            }
            EdgeKey::FiberIn(a) => {
                let p = skel.src(a);
                let q = skel.dst(a);
                let back = skel.reverse(a);
                for &g in skel.edges_at(q) {
                    let image_src = skel.theta(back, g);
                    map.insert(key_id[&resultize(g)], key_id[&deidentify(p, a, image_src)]);
                }
            }
        }
        map
    };

    let specs: Vec<EdgeSpec> = keys
        .iter()
        .map(|&k| EdgeSpec {
            src: src_of(k),
            dst: dst_of(k),
            rev: key_id[&rev_of(k)],
        })
        .collect();
    let axial: Vec<Covector> = keys.iter().map(|&k| axial_of(k)).collect();
    let mult: Vec<Rational> = keys.iter().map(|&k| mult_of(k)).collect();
    let conn: Vec<BTreeMap<usize, usize>> = keys.iter().map(|&k| conn_of(k)).collect();
    let result = OneSkeleton::new(skel.dim(), names, specs, axial, mult, conn)
        .map_err(|e| BlowUpError::BadCenter(format!("blow-up structure: {}", e)))?;
    let report = result.validate();
    if !report.passes() {
        return Err(BlowUpError::ResultViolatesAxioms(format!(
            "{} A1, {} A2, {} A3 violations",
            report.a1.len(),
            report.a2.len(),
            report.a3.len()
        )));
    }

    // singular locus: fiber vertices with horizontal and vertical edges
    let locus_vertices: Vec<usize> = (0..fiber.len()).filter(|&v| fiber[v].is_some()).collect();
    let locus_edges: Vec<usize> = keys
        .iter()
        .enumerate()
        .filter(|(_, k)| matches!(k, EdgeKey::Horizontal(..) | EdgeKey::Vertical(..)))
        .map(|(i, _)| i)
        .collect();
    let singular = SubSkeleton {
        vertices: locus_vertices,
        edges: locus_edges,
    };
    // the Thom class of the singular locus
    let thom_values: Vec<Polynomial> = (0..result.vertex_count())
        .map(|v| match fiber[v] {
            Some((p, a)) => {
                let tau = skel.axial(a).scale(&(Rational::one() / &n[&(p, a)]));
                Polynomial::from_covector(&tau)
            }
            None => Polynomial::zero(skel.dim()),
        })
        .collect();
    let thom = CohomologyClass {
        degree: 1,
        values: thom_values,
    };
    let (center_skeleton, center_vertices) =
        center
            .extract(skel)
            .map_err(|e| BlowUpError::NotTotallyGeodesic {
                edge: e.edge,
                offending: e.offending,
            })?;
    Ok(BlowUp {
        result,
        beta,
        fiber,
        singular,
        thom,
        weights: n,
        center_skeleton,
        center_vertices,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowUpDecomposeError {
    DecompositionFailure(String),
}

impl fmt::Display for BlowUpDecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowUpDecomposeError::DecompositionFailure(m) => {
                write!(f, "blow-up decomposition failed: {}", m)
            }
        }
    }
}

/// Pullback of a class on the source along the blow-down map.
pub fn pullback(b: &BlowUp, g: &CohomologyClass) -> CohomologyClass {
    CohomologyClass {
        degree: g.degree,
        values: (0..b.result.vertex_count())
            .map(|v| g.values[b.beta[v]].clone())
            .collect(),
    }
}

/// Splits a class on the blow-up as `f = beta^* g + sum_{k>=1} tau^k f_{m-k}`
/// with `g` a class on the source and each `f_{m-k}` a class on the center.
/// Returns `(g, [f_{m-1}, ..., f_{m-s+1}])`.
pub fn blowup_cohomology_decompose(
    skel: &OneSkeleton,
    b: &BlowUp,
    f: &CohomologyClass,
) -> Result<(CohomologyClass, Vec<CohomologyClass>), BlowUpDecomposeError> {
    let m = f.degree;
    let center_count = b.center_vertices.len();
    let s = b.weights.len() / center_count;
    let n = skel.dim();
    // fiberwise tau-power decomposition
    let mut coeffs: Vec<Vec<Polynomial>> = Vec::with_capacity(center_count);
    for (ci, &p) in b.center_vertices.iter().enumerate() {
        let _ = ci;
        let slots: Vec<(usize, EdgeId)> = (0..b.result.vertex_count())
            .filter_map(|v| match b.fiber[v] {
                Some((q, a)) if q == p => Some((v, a)),
                _ => None,
            })
            .collect();
        let taus: Vec<Covector> = slots
            .iter()
            .map(|&(_, a)| {
                skel.axial(a)
                    .scale(&(Rational::one() / &b.weights[&(p, a)]))
            })
            .collect();
        let values: Vec<Polynomial> = slots.iter().map(|&(v, _)| f.values[v].clone()).collect();
        let dec = decompose_by_taus(&values, &taus, m)
            .map_err(|e| BlowUpDecomposeError::DecompositionFailure(alloc::format!("{}", e)))?;
        coeffs.push(dec);
    }
    // assemble the center classes f_{m-k} and check compatibility
    let mut center_classes = Vec::new();
    for k in 1..s {
        let values: Vec<Polynomial> = (0..center_count).map(|ci| coeffs[ci][k].clone()).collect();
        match is_class(&b.center_skeleton, &values) {
            Ok(ClassCheck { ok: true, .. }) => {}
            _ => {
                return Err(BlowUpDecomposeError::DecompositionFailure(
                    "fiber coefficients are not compatible on the center".into(),
                ))
            }
        }
        center_classes.push(CohomologyClass {
            degree: m.saturating_sub(k as u32),
            values,
        });
    }
    // g = f - sum_{k>=1} tau^k f_{m-k} must be constant on fibers
    let mut g_values = vec![Polynomial::zero(n); skel.vertex_count()];
    for v in 0..b.result.vertex_count() {
        match b.fiber[v] {
            Some((p, a)) => {
                let tau = Polynomial::from_covector(
                    &skel
                        .axial(a)
                        .scale(&(Rational::one() / &b.weights[&(p, a)])),
                );
                let ci = b
                    .center_vertices
                    .iter()
                    .position(|&q| q == p)
                    .expect("fiber over a center vertex");
                let mut acc = f.values[v].clone();
                for k in 1..s {
                    let sub = &coeffs[ci][k] * &tau.pow(k as u32);
                    acc = &acc - &sub;
                }
                // equivalently acc should equal the k = 0 coefficient
                if acc != coeffs[ci][0] {
                    return Err(BlowUpDecomposeError::DecompositionFailure(
                        "residue is not constant on a fiber".into(),
                    ));
                }
                g_values[p] = acc;
            }
            None => {
                g_values[b.beta[v]] = f.values[v].clone();
            }
        }
    }
    match is_class(skel, &g_values) {
        Ok(ClassCheck { ok: true, .. }) => {}
        _ => {
            return Err(BlowUpDecomposeError::DecompositionFailure(
                "fiber-constant part is not a class on the source".into(),
            ))
        }
    }
    let g = CohomologyClass {
        degree: m,
        values: g_values,
    };
    Ok((g, center_classes))
}

/// Reassembles `beta^* g + sum tau^k f_{m-k}` on the blow-up.
pub fn reassemble(
    b: &BlowUp,
    g: &CohomologyClass,
    center_classes: &[CohomologyClass],
) -> CohomologyClass {
    let mut acc = pullback(b, g);
    for (idx, fk) in center_classes.iter().enumerate() {
        let k = (idx + 1) as u32;
        let mut term = CohomologyClass {
            degree: acc.degree,
            values: vec![Polynomial::zero(b.result.dim()); b.result.vertex_count()],
        };
        for v in 0..b.result.vertex_count() {
            if let Some((p, _)) = b.fiber[v] {
                let ci = b
                    .center_vertices
                    .iter()
                    .position(|&q| q == p)
                    .expect("fiber over a center vertex");
                term.values[v] = &fk.values[ci] * &b.thom.values[v].pow(k);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::cohomology::{basis, class_check, random_class};
    use crate::poly::graded_dim;
    use crate::rational::{rat, rat_int};

    fn octahedron_vertex_blowup() -> (OneSkeleton, BlowUp) {
        let oct = builders::octahedron_skeleton();
        // blow up the bottom vertex -e3 (builder vertex 5)
        let center = SubSkeleton::induced(&oct, &[5]);
        let b = blow_up(&oct, &center, &Weights::Constant(rat_int(1))).unwrap();
        (oct, b)
    }

    #[test]
    fn octahedron_vertex_blowup_shape() {
        let (oct, b) = octahedron_vertex_blowup();
        assert_eq!(b.result.vertex_count(), 9);
        assert_eq!(b.result.valence(), 4);
        assert!(b.result.validate().passes(), "{:?}", b.result.validate().a3);
        // singular locus is a complete skeleton on 4 vertices
        assert_eq!(b.singular.vertices.len(), 4);
        assert_eq!(b.singular.regular_valence(&b.result), Some(3));
        for &v in &b.singular.vertices {
            for &w in &b.singular.vertices {
                if v != w {
                    assert!(b.result.edge_between(v, w).is_some());
                }
            }
        }
        // blow-down is a bijection away from the center
        let outside: Vec<usize> = (0..b.result.vertex_count())
            .filter(|&v| b.fiber[v].is_none())
            .collect();
        assert_eq!(outside.len(), oct.vertex_count() - 1);
        // thom class is a class
        assert!(class_check(&b.result, &b.thom));
    }

    #[test]
    fn blowdown_is_a_graph_morphism() {
        let (oct, b) = octahedron_vertex_blowup();
        for e in 0..b.result.edge_count() {
            let (u, v) = (b.beta[b.result.src(e)], b.beta[b.result.dst(e)]);
            assert!(
                u == v || oct.edge_between(u, v).is_some(),
                "beta image of edge {} is neither collapsed nor an edge",
                e
            );
        }
    }

    #[test]
    fn geodesic_square_blowup_validates() {
        let oct = builders::octahedron_skeleton();
        let center = SubSkeleton::induced(&oct, &[0, 1, 2, 3]);
        assert_eq!(center.regular_valence(&oct), Some(2));
        let b = blow_up(&oct, &center, &Weights::Constant(rat_int(1))).unwrap();
        assert!(b.result.validate().passes());
        assert_eq!(b.result.vertex_count(), 2 + 4 * 2);
        assert!(class_check(&b.result, &b.thom));
    }

    #[test]
    fn bad_weights_are_rejected() {
        let oct = builders::octahedron_skeleton();
        let center = SubSkeleton::induced(&oct, &[0, 1, 2, 3]);
        // per-edge weights violating invariance along a horizontal edge
        let mut map = BTreeMap::new();
        for &p in &center.vertices {
            for &e in oct.edges_at(p) {
                if !center.contains_edge(e) {
                    // weight depends on the vertex, breaking the constancy
                    map.insert((p, e), rat((p + 1) as i64, 1));
                }
            }
        }
        match blow_up(&oct, &center, &Weights::PerEdge(map)) {
            Err(BlowUpError::BadWeights(_)) => {}
            other => panic!("expected BadWeights, got {:?}", other.err()),
        }
        match blow_up(&oct, &center, &Weights::Constant(rat_int(0))) {
            Err(BlowUpError::BadWeights(_)) => {}
            other => panic!("expected BadWeights, got {:?}", other.err()),
        }
    }

    #[test]
    fn condition2_violation_is_detected() {
        // rescaling one normal edge of the equatorial square breaks the
        // condition that normal axial differences along center edges stay
        // multiples of the center direction
        let oct = builders::octahedron_skeleton();
        let v0 = 0;
        let top = 4;
        let e = oct.edge_between(v0, top).unwrap();
        let skewed = oct.rescale_edge(e, &rat(2, 1));
        assert!(skewed.validate().passes());
        let center = SubSkeleton::induced(&skewed, &[0, 1, 2, 3]);
        match blow_up(&skewed, &center, &Weights::Constant(rat_int(1))) {
            Err(BlowUpError::Condition2Violated { .. }) => {}
            other => panic!("expected Condition2Violated, got {:?}", other.err()),
        }
    }

    #[test]
    fn blowup_cohomology_dimensions() {
        let (oct, b) = octahedron_vertex_blowup();
        // dim H^{2m}(blow-up) = dim H^{2m}(source) + sum_{k=1}^{3} dim S^{m-k}
        for m in 0..=3u32 {
            let lhs = basis(&b.result, m).len() as u64;
            let rhs = basis(&oct, m).len() as u64
                + (1..=3i64).map(|k| graded_dim(m as i64 - k, 3)).sum::<u64>();
            assert_eq!(lhs, rhs, "m = {}", m);
        }
    }

    #[test]
    fn decompose_pullback_and_thom() {
        let (oct, b) = octahedron_vertex_blowup();
        // pullback of a class has trivial fiber components
        let g = random_class(&oct, 2, 5).unwrap();
        let f = pullback(&b, &g);
        let (g2, fs) = blowup_cohomology_decompose(&oct, &b, &f).unwrap();
        assert_eq!(g2, g);
        assert!(fs.iter().all(|c| c.is_zero()));

        // the Thom class itself: g = 0, f_{m-1} = 1
        let (g0, fs) = blowup_cohomology_decompose(&oct, &b, &b.thom).unwrap();
        assert!(g0.is_zero());
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0].values[0], Polynomial::one(3));
        assert!(fs[1].is_zero() && fs[2].is_zero());
    }

    #[test]
    fn decompose_round_trips_random_classes() {
        let (oct, b) = octahedron_vertex_blowup();
        for m in 0..=3u32 {
            for seed in 0..7 {
                let f = random_class(&b.result, m, seed).unwrap();
                let (g, fs) = blowup_cohomology_decompose(&oct, &b, &f).unwrap();
                assert!(class_check(&oct, &g));
                let back = reassemble(&b, &g, &fs);
                assert_eq!(back, f, "m={} seed={}", m, seed);
            }
        }
    }
}
