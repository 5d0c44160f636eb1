//! The graded cohomology of a one-skeleton: vertex-indexed homogeneous
//! polynomials whose difference across every edge is divisible by the axial
//! covector. Degree-m pieces are computed exactly as kernels of linear
//! systems; Thom classes give a free-module basis adapted to a polarization.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed, Zero};

use crate::covector::Covector;
use crate::linalg::Matrix;
use crate::polarize::{betti, flow_out, Polarization, PolarizeError};
use crate::poly::{
    divide_by_linear, graded_dim, monomials_of_degree, restrict_to_hyperplane, Monomial, Polynomial,
};
use crate::rational::Rational;
use crate::skeleton::{OneSkeleton, VertexId};

/// A homogeneous degree-m class: one polynomial per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: u32,
    pub values: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InhomogeneousInput {
    pub vertex: VertexId,
}

impl fmt::Display for InhomogeneousInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "value at vertex {} is not homogeneous of the common degree",
            self.vertex
        )
    }
}

impl CohomologyClass {
    pub fn new(
        skel: &OneSkeleton,
        degree: u32,
        values: Vec<Polynomial>,
    ) -> Result<Self, InhomogeneousInput> {
        assert_eq!(values.len(), skel.vertex_count());
        for (v, p) in values.iter().enumerate() {
            if !p.is_homogeneous_of(degree) {
                return Err(InhomogeneousInput { vertex: v });
            }
        }
        Ok(CohomologyClass { degree, values })
    }

    pub fn zero(skel: &OneSkeleton, degree: u32) -> Self {
        CohomologyClass {
            degree,
            values: vec![Polynomial::zero(skel.dim()); skel.vertex_count()],
        }
    }

    /// The constant class with value `c` at every vertex.
    pub fn constant(skel: &OneSkeleton, c: Rational) -> Self {
        CohomologyClass {
            degree: 0,
            values: vec![Polynomial::constant(skel.dim(), c); skel.vertex_count()],
        }
    }

    pub fn value(&self, v: VertexId) -> &Polynomial {
        &self.values[v]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|p| p.is_zero())
    }

    pub fn support(&self) -> Vec<VertexId> {
        (0..self.values.len())
            .filter(|&v| !self.values[v].is_zero())
            .collect()
    }

    /// Common degree for a graded operation; the zero class belongs to
    /// every graded piece.
    fn join_degree(&self, other: &CohomologyClass) -> u32 {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => self.degree.max(other.degree),
            (true, false) => other.degree,
            (false, true) => self.degree,
            (false, false) => {
                assert_eq!(self.degree, other.degree, "degree mismatch");
                self.degree
            }
        }
    }

    pub fn add(&self, other: &CohomologyClass) -> CohomologyClass {
        CohomologyClass {
            degree: self.join_degree(other),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CohomologyClass) -> CohomologyClass {
        CohomologyClass {
            degree: self.join_degree(other),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CohomologyClass {
        CohomologyClass {
            degree: self.degree,
            values: self.values.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Module action: multiply every value by a homogeneous polynomial.
    pub fn mul_poly(&self, h: &Polynomial) -> CohomologyClass {
        let hd = h.homogeneous_degree().unwrap_or(0);
        CohomologyClass {
            degree: self.degree + hd,
            values: self.values.iter().map(|p| p * h).collect(),
        }
    }

    /// Ring structure: pointwise product of classes.
    pub fn mul_class(&self, other: &CohomologyClass) -> CohomologyClass {
        CohomologyClass {
            degree: self.degree + other.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn pow(&self, skel: &OneSkeleton, k: u32) -> CohomologyClass {
        let mut acc = CohomologyClass::constant(skel, Rational::one());
        for _ in 0..k {
            acc = acc.mul_class(self);
        }
        acc
    }
}

impl fmt::Debug for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class of degree {}:", self.degree)?;
        for (v, p) in self.values.iter().enumerate() {
            writeln!(f, "  [{}] {}", v, p)?;
        }
        Ok(())
    }
}

/// Outcome of the edge compatibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    pub ok: bool,
    /// First failing unoriented edge.
    pub witness: Option<(VertexId, VertexId)>,
}

/// Checks the compatibility condition on every edge: the difference of the
/// endpoint values must be divisible by the axial covector.
pub fn is_class(
    skel: &OneSkeleton,
    values: &[Polynomial],
) -> Result<ClassCheck, InhomogeneousInput> {
    let mut degree = None;
    for (v, p) in values.iter().enumerate() {
        if let Some(d) = p.homogeneous_degree() {
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return Err(InhomogeneousInput { vertex: v }),
                _ => {}
            }
        } else if !p.is_zero() {
            return Err(InhomogeneousInput { vertex: v });
        }
    }
    for e in skel.unoriented() {
        let (u, v) = (skel.src(e), skel.dst(e));
        let diff = &values[u] - &values[v];
        if restrict_to_hyperplane(&diff, skel.axial(e))
            .expect("axial values are nonzero")
            .is_zero()
        {
            continue;
        }
        return Ok(ClassCheck {
            ok: false,
            witness: Some((u, v)),
        });
    }
    Ok(ClassCheck {
        ok: true,
        witness: None,
    })
}

pub fn class_check(skel: &OneSkeleton, class: &CohomologyClass) -> bool {
    matches!(
        is_class(skel, &class.values),
        Ok(ClassCheck { ok: true, .. })
    )
}

/// Column layout for the coefficient vector of a candidate class supported
/// on a vertex subset.
struct CoeffLayout {
    vertices: Vec<VertexId>,
    position: Vec<Option<usize>>,
    monos: Vec<Monomial>,
}

impl CoeffLayout {
    fn new(skel: &OneSkeleton, m: u32, support: Option<&[bool]>) -> CoeffLayout {
        let vertices: Vec<VertexId> = (0..skel.vertex_count())
            .filter(|&v| support.map(|s| s[v]).unwrap_or(true))
            .collect();
        let mut position = vec![None; skel.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = Some(i);
        }
        CoeffLayout {
            vertices,
            position,
            monos: monomials_of_degree(skel.dim(), m),
        }
    }

    fn cols(&self) -> usize {
        self.vertices.len() * self.monos.len()
    }

    fn col(&self, v: VertexId, mono_idx: usize) -> usize {
        self.position[v].expect("vertex in support") * self.monos.len() + mono_idx
    }

    fn vector_to_values(&self, skel: &OneSkeleton, x: &[Rational]) -> Vec<Polynomial> {
        let mut values = vec![Polynomial::zero(skel.dim()); skel.vertex_count()];
        for &v in &self.vertices {
            let mut p = Polynomial::zero(skel.dim());
            for (mi, mono) in self.monos.iter().enumerate() {
                let c = &x[self.col(v, mi)];
                if !c.is_zero() {
                    let mut t = Polynomial::zero(skel.dim());
                    t = &t + &mono_poly(skel.dim(), mono, c.clone());
                    p = &p + &t;
                }
            }
            values[v] = p;
        }
        values
    }
}

fn mono_poly(n: usize, mono: &Monomial, c: Rational) -> Polynomial {
    let mut p = Polynomial::one(n);
    for (i, &e) in mono.0.iter().enumerate() {
        for _ in 0..e {
            p = &p * &Polynomial::var(n, i);
        }
    }
    p.scale(&c)
}

/// Rows expressing the compatibility conditions for all edges touching the
/// support; the kernel of the resulting matrix is the degree-m class space.
fn compatibility_matrix(skel: &OneSkeleton, m: u32, layout: &CoeffLayout) -> Matrix {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for e in skel.unoriented() {
        let (u, v) = (skel.src(e), skel.dst(e));
        let u_in = layout.position[u].is_some();
        let v_in = layout.position[v].is_some();
        if !u_in && !v_in {
            continue;
        }
        let alpha = skel.axial(e);
        let pivot = alpha.pivot().expect("axial values are nonzero");
        // image coordinates: degree-m monomials with zero pivot exponent
        let image_monos: Vec<Monomial> = monomials_of_degree(skel.dim(), m)
            .into_iter()
            .filter(|mo| mo.0[pivot] == 0)
            .collect();
        // restriction of each source monomial
        let restricted: Vec<Polynomial> = layout
            .monos
            .iter()
            .map(|mo| {
                restrict_to_hyperplane(&mono_poly(skel.dim(), mo, Rational::one()), alpha)
                    .expect("axial values are nonzero")
            })
            .collect();
        for target in &image_monos {
            let mut row = vec![Rational::zero(); layout.cols()];
            let mut nonzero = false;
            for (mi, r) in restricted.iter().enumerate() {
                let c = r.coefficient(target);
                if c.is_zero() {
                    continue;
                }
                if u_in {
                    row[layout.col(u, mi)] += &c;
                    nonzero = true;
                }
                if v_in {
                    row[layout.col(v, mi)] -= &c;
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        // no constraints: zero matrix with the right column count
        return Matrix::zero(1, layout.cols().max(1));
    }
    Matrix::from_rows(rows)
}

/// Exact basis of the space of degree-m classes.
pub fn basis(skel: &OneSkeleton, m: u32) -> Vec<CohomologyClass> {
    let layout = CoeffLayout::new(skel, m, None);
    if layout.cols() == 0 {
        return Vec::new();
    }
    let mat = compatibility_matrix(skel, m, &layout);
    mat.kernel_basis()
        .into_iter()
        .map(|x| CohomologyClass {
            degree: m,
            values: layout.vector_to_values(skel, &x),
        })
        .collect()
}

/// Betti-weighted dimension count `sum_k b_{2k} * dim S^{m-k}`.
pub fn dimension_formula(skel: &OneSkeleton, xi: &Covector, m: u32) -> Result<u64, PolarizeError> {
    let b = betti(skel, xi)?;
    Ok(b.iter()
        .enumerate()
        .map(|(k, &bk)| bk as u64 * graded_dim(m as i64 - k as i64, skel.dim()))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompleteDecomposeError {
    NotComplete(String),
    NotAClass,
}

impl fmt::Display for CompleteDecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompleteDecomposeError::NotComplete(m) => {
                write!(f, "not a complete one-skeleton: {}", m)
            }
            CompleteDecomposeError::NotAClass => write!(f, "input is not a compatible class"),
        }
    }
}

/// Writes a class on a complete one-skeleton uniquely as
/// `f = sum_k f_{m-k} tau^k`, k = 0..N-1, with `f_{m-k}` a polynomial of
/// degree m-k; `taus` are the vertex values of the generating class.
pub fn complete_decompose(
    skel: &OneSkeleton,
    taus: &[Covector],
    f: &CohomologyClass,
) -> Result<Vec<Polynomial>, CompleteDecomposeError> {
    let count = skel.vertex_count();
    if taus.len() != count {
        return Err(CompleteDecomposeError::NotComplete(
            "one generating value per vertex required".into(),
        ));
    }
    for i in 0..count {
        for j in 0..count {
            if i == j {
                continue;
            }
            let Some(e) = skel.edge_between(i, j) else {
                return Err(CompleteDecomposeError::NotComplete(alloc::format!(
                    "vertices {} and {} are not joined by a unique edge",
                    i,
                    j
                )));
            };
            let diff = &taus[j] - &taus[i];
            match diff.ratio_to(skel.axial(e)) {
                Some(r) if r.is_positive() => {}
                _ => {
                    return Err(CompleteDecomposeError::NotComplete(alloc::format!(
                        "tau difference along edge ({},{}) is not a positive multiple of the axial value",
                        i, j
                    )))
                }
            }
        }
    }
    let coeffs = decompose_by_taus(&f.values, taus, f.degree)?;
    // reassemble and compare
    let n = skel.dim();
    for (i, tau) in taus.iter().enumerate() {
        let tp = Polynomial::from_covector(tau);
        let mut acc = Polynomial::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            acc = &acc + &(c * &tp.pow(k as u32));
        }
        if acc != f.values[i] {
            return Err(CompleteDecomposeError::NotAClass);
        }
    }
    Ok(coeffs)
}

/// Core of the decomposition: the interpolation polynomial of the top
/// symbol, computed by clearing denominators and dividing exactly, then a
/// peel-and-recurse on `(f - g_m)/tau`.
///
/// Works for any vertex values attached to pairwise distinct `taus`;
/// degenerate (zero) generating values are handled by shifting every tau by
/// a common covector, which changes the power basis by an invertible
/// triangular substitution that is undone afterwards.
pub fn decompose_by_taus(
    values: &[Polynomial],
    taus: &[Covector],
    m: u32,
) -> Result<Vec<Polynomial>, CompleteDecomposeError> {
    let count = taus.len();
    assert_eq!(values.len(), count);
    let n = taus[0].dim();
    if count == 1 {
        return Ok(vec![values[0].clone()]);
    }
    for i in 0..count {
        for j in (i + 1)..count {
            if taus[i] == taus[j] {
                return Err(CompleteDecomposeError::NotComplete(
                    "generating values must be pairwise distinct".into(),
                ));
            }
        }
    }
    if taus.iter().any(|t| t.is_zero()) {
        // shift every value by t*e_1 for an integer t >= 1 that keeps them
        // all nonzero; at most `count` choices of t are excluded
        let l = 0;
        let mut t = Rational::one();
        let shift = loop {
            let candidate: Vec<Covector> = taus
                .iter()
                .map(|tau| {
                    let mut c = tau.clone();
                    c.0[l] += &t;
                    c
                })
                .collect();
            if candidate.iter().all(|c| !c.is_zero()) {
                break candidate;
            }
            t += Rational::one();
        };
        let sigma_coord = &shift[0] - &taus[0];
        let shifted = decompose_by_taus(values, &shift, m)?;
        // f = sum_k g_k (tau + sigma)^k  =>  f_l = sum_{k>=l} C(k,l) g_k sigma^{k-l}
        let sigma = Polynomial::from_covector(&sigma_coord);
        let mut out = Vec::with_capacity(count);
        for l_pow in 0..count {
            let mut acc = Polynomial::zero(n);
            for k in l_pow..count {
                let c = binom_rat(k as u64, l_pow as u64);
                let term = shifted[k].scale(&c);
                acc = &acc + &(&term * &sigma.pow((k - l_pow) as u32));
            }
            out.push(acc);
        }
        return Ok(out);
    }
    let mut out = vec![Polynomial::zero(n); count];
    decompose_rec(values, taus, m, 0, &mut out)?;
    Ok(out)
}

fn binom_rat(n: u64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=k {
        acc = acc * crate::rational::rat((n - k + i) as i64, i as i64);
    }
    acc
}

fn decompose_rec(
    values: &[Polynomial],
    taus: &[Covector],
    m: u32,
    slot: usize,
    out: &mut [Polynomial],
) -> Result<(), CompleteDecomposeError> {
    let count = taus.len();
    if slot == count {
        // powers are exhausted: the residue must vanish identically
        if values.iter().all(|p| p.is_zero()) {
            return Ok(());
        }
        return Err(CompleteDecomposeError::NotAClass);
    }
    if values.iter().all(|p| p.is_zero()) {
        return Ok(());
    }
    let g = if m == 0 {
        // a degree-0 class on a complete graph is a single constant
        let first = values[0].clone();
        if values.iter().any(|p| *p != first) {
            return Err(CompleteDecomposeError::NotAClass);
        }
        first
    } else {
        interpolation_top(values, taus)?
    };
    out[slot] = g.clone();
    if slot + 1 == count {
        // no tau powers left; residues must be exactly zero
        if values.iter().any(|p| *p != g) {
            return Err(CompleteDecomposeError::NotAClass);
        }
        return Ok(());
    }
    if m == 0 {
        return Ok(());
    }
    let peeled: Result<Vec<Polynomial>, CompleteDecomposeError> = values
        .iter()
        .zip(taus.iter())
        .map(|(p, tau)| {
            let diff = p - &g;
            if diff.is_zero() {
                Ok(Polynomial::zero(p.nvars()))
            } else {
                divide_by_linear(&diff, tau).map_err(|_| CompleteDecomposeError::NotAClass)
            }
        })
        .collect();
    decompose_rec(&peeled?, taus, m - 1, slot + 1, out)
}

/// Lagrange-style top coefficient (cleared of denominators):
///
/// g = (-1)^{N+1} * [ sum_i (-1)^i f_i (prod_{k != i} tau_k) C_i ] / D
///
/// with C_i the pair-difference product avoiding i and D the full one; the
/// division by each linear factor of D is exact for compatible values.
fn interpolation_top(
    values: &[Polynomial],
    taus: &[Covector],
) -> Result<Polynomial, CompleteDecomposeError> {
    let count = taus.len();
    let n = taus[0].dim();
    let tau_polys: Vec<Polynomial> = taus.iter().map(Polynomial::from_covector).collect();
    let mut numerator = Polynomial::zero(n);
    for i in 0..count {
        if values[i].is_zero() {
            continue;
        }
        let mut term = values[i].clone();
        for (k, tp) in tau_polys.iter().enumerate() {
            if k != i {
                term = &term * tp;
            }
        }
        for j in 0..count {
            for k in (j + 1)..count {
                if j != i && k != i {
                    let diff = &taus[j] - &taus[k];
                    term = &term * &Polynomial::from_covector(&diff);
                }
            }
        }
        if i % 2 == 1 {
            term = -&term;
        }
        numerator = &numerator + &term;
    }
    let sign_all = if (count + 1) % 2 == 0 { 1 } else { -1 };
    if numerator.is_zero() {
        return Ok(numerator);
    }
    let mut g = numerator;
    for j in 0..count {
        for k in (j + 1)..count {
            let diff = &taus[j] - &taus[k];
            g = divide_by_linear(&g, &diff).map_err(|_| CompleteDecomposeError::NotAClass)?;
        }
    }
    if sign_all < 0 {
        g = -&g;
    }
    Ok(g)
}

/// Generating values of a complete skeleton normalized by `tau_1 = 0`.
pub fn generating_taus(skel: &OneSkeleton) -> Option<Vec<Covector>> {
    let count = skel.vertex_count();
    let mut taus = vec![Covector::zero(skel.dim()); count];
    for j in 1..count {
        let e = skel.edge_between(0, j)?;
        taus[j] = skel.axial(e).clone();
    }
    Some(taus)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThomError {
    Polarize(PolarizeError),
    /// The support-constrained system has no solution, or a required exact
    /// division failed: the skeleton violates the dimension-theorem
    /// hypotheses.
    HypothesesViolated {
        vertex: VertexId,
    },
}

impl fmt::Display for ThomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThomError::Polarize(e) => write!(f, "{}", e),
            ThomError::HypothesesViolated { vertex } => {
                write!(f, "no Thom class at vertex {}: hypotheses violated", vertex)
            }
        }
    }
}

impl From<PolarizeError> for ThomError {
    fn from(e: PolarizeError) -> Self {
        ThomError::Polarize(e)
    }
}

/// The full family of Thom classes for one polarization.
pub struct ThomBasis {
    pub polarization: Polarization,
    pub classes: Vec<CohomologyClass>,
}

/// Product of the axial values on downward edges at `v`.
fn down_product(skel: &OneSkeleton, pol: &Polarization, v: VertexId) -> Polynomial {
    let mut p = Polynomial::one(skel.dim());
    for &e in skel.edges_at(v) {
        if !pol.points_up(e) {
            p = &p * &Polynomial::from_covector(skel.axial(e));
        }
    }
    p
}

impl ThomBasis {
    /// Builds every Thom class, sweeping vertices from the top of phi down.
    ///
    /// For each vertex: solve for a degree-sigma class supported on
    /// `phi >= phi(p)` with the prescribed down-product value at `p`, then
    /// repeatedly clear the lowest vertex outside the flow-out where the
    /// candidate is nonzero by subtracting a multiple of that vertex's
    /// (already built) Thom class.
    pub fn build(skel: &OneSkeleton, pol: &Polarization) -> Result<ThomBasis, ThomError> {
        let mut classes: Vec<Option<CohomologyClass>> = vec![None; skel.vertex_count()];
        let mut order = pol.vertices_by_phi();
        order.reverse();
        for &p in &order {
            let tau = thom_at(skel, pol, p, &classes)?;
            classes[p] = Some(tau);
        }
        Ok(ThomBasis {
            polarization: pol.clone(),
            classes: classes.into_iter().map(|c| c.unwrap()).collect(),
        })
    }

    pub fn class(&self, p: VertexId) -> &CohomologyClass {
        &self.classes[p]
    }
}

fn thom_at(
    skel: &OneSkeleton,
    pol: &Polarization,
    p: VertexId,
    built: &[Option<CohomologyClass>],
) -> Result<CohomologyClass, ThomError> {
    let m = pol.index(p) as u32;
    let prescribed = down_product(skel, pol, p);
    let support: Vec<bool> = (0..skel.vertex_count())
        .map(|v| pol.phi(v) >= pol.phi(p))
        .collect();
    let layout = CoeffLayout::new(skel, m, Some(&support));
    let compat = compatibility_matrix(skel, m, &layout);
    // pin the value at p
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for r in 0..compat.rows() {
        rows.push(
            (0..compat.cols())
                .map(|c| compat.at(r, c).clone())
                .collect(),
        );
        rhs.push(Rational::zero());
    }
    for (mi, mono) in layout.monos.iter().enumerate() {
        let mut row = vec![Rational::zero(); layout.cols()];
        row[layout.col(p, mi)] = Rational::one();
        rows.push(row);
        rhs.push(prescribed.coefficient(mono));
    }
    let mat = Matrix::from_rows(rows);
    let Some(x) = mat.solve(&rhs) else {
        return Err(ThomError::HypothesesViolated { vertex: p });
    };
    let mut values = layout.vector_to_values(skel, &x);
    // clear vertices outside the flow-out, lowest first
    let fp = flow_out(skel, pol, p);
    let by_phi = pol.vertices_by_phi();
    loop {
        let bad = by_phi
            .iter()
            .copied()
            .find(|&q| !fp.contains(&q) && !values[q].is_zero());
        let Some(q) = bad else { break };
        let g = if pol.index(q) as u32 > m {
            // degree forces the value to vanish; a nonzero value here means
            // the hypotheses fail
            return Err(ThomError::HypothesesViolated { vertex: p });
        } else {
            divide_poly_by_product(&values[q], skel, pol, q)
                .ok_or(ThomError::HypothesesViolated { vertex: p })?
        };
        let tau_q = built[q]
            .as_ref()
            .expect("vertices above p are already built");
        for v in 0..values.len() {
            let sub = &tau_q.values[v] * &g;
            values[v] = &values[v] - &sub;
        }
        debug_assert!(values[q].is_zero());
    }
    Ok(CohomologyClass { degree: m, values })
}

/// Exact division by the product of the downward axial values at `q`.
fn divide_poly_by_product(
    f: &Polynomial,
    skel: &OneSkeleton,
    pol: &Polarization,
    q: VertexId,
) -> Option<Polynomial> {
    let mut acc = f.clone();
    for &e in skel.edges_at(q) {
        if !pol.points_up(e) {
            if acc.is_zero() {
                return Some(acc);
            }
            acc = divide_by_linear(&acc, skel.axial(e)).ok()?;
        }
    }
    Some(acc)
}

/// A single Thom class (builds the classes above `p` on the way).
pub fn thom_class(
    skel: &OneSkeleton,
    pol: &Polarization,
    p: VertexId,
) -> Result<CohomologyClass, ThomError> {
    let mut classes: Vec<Option<CohomologyClass>> = vec![None; skel.vertex_count()];
    let mut order = pol.vertices_by_phi();
    order.reverse();
    for &q in &order {
        let tau = thom_at(skel, pol, q, &classes)?;
        if q == p {
            return Ok(tau);
        }
        classes[q] = Some(tau);
    }
    unreachable!("every vertex appears in the sweep")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionFailure {
    pub vertex: Option<VertexId>,
}

impl fmt::Display for DecompositionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertex {
            Some(v) => write!(f, "decomposition failed at vertex {}", v),
            None => write!(f, "decomposition left a nonzero residue"),
        }
    }
}

/// Free-module decomposition `f = sum_p h_p tau_p` by the upward sweep:
/// at each vertex in increasing phi order the residue value divides exactly
/// by the down-product there.
pub fn decompose(
    skel: &OneSkeleton,
    thom: &ThomBasis,
    f: &CohomologyClass,
) -> Result<Vec<Polynomial>, DecompositionFailure> {
    let pol = &thom.polarization;
    let m = f.degree;
    let mut residue = f.clone();
    let mut coeffs = vec![Polynomial::zero(skel.dim()); skel.vertex_count()];
    for v in pol.vertices_by_phi() {
        if residue.values[v].is_zero() {
            continue;
        }
        if pol.index(v) as u32 > m {
            return Err(DecompositionFailure { vertex: Some(v) });
        }
        let h = divide_poly_by_product(&residue.values[v], skel, pol, v)
            .ok_or(DecompositionFailure { vertex: Some(v) })?;
        let tau = &thom.classes[v];
        for w in 0..skel.vertex_count() {
            let sub = &tau.values[w] * &h;
            residue.values[w] = &residue.values[w] - &sub;
        }
        coeffs[v] = h;
    }
    if residue.values.iter().any(|p| !p.is_zero()) {
        return Err(DecompositionFailure { vertex: None });
    }
    Ok(coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformError {
    OutOfRange,
    NotADeformation { edge: (VertexId, VertexId) },
}

impl fmt::Display for DeformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformError::OutOfRange => write!(f, "t outside the safe range"),
            DeformError::NotADeformation { edge } => {
                write!(f, "edge ({},{}) direction not preserved", edge.0, edge.1)
            }
        }
    }
}

/// The space of direction-preserving vertex motions of an edge-reflecting
/// polytope: exactly the degree-1 classes of its skeleton.
pub struct DeformationSpace {
    pub skeleton: OneSkeleton,
    pub input: crate::builders::PolytopeInput,
    pub basis: Vec<CohomologyClass>,
}

pub fn deformation_space(
    p: &crate::builders::PolytopeInput,
) -> Result<DeformationSpace, crate::builders::PolytopeError> {
    let skeleton = crate::builders::polytope_skeleton(p)?;
    let b = basis(&skeleton, 1);
    Ok(DeformationSpace {
        skeleton,
        input: p.clone(),
        basis: b,
    })
}

impl DeformationSpace {
    /// Largest rational `t0 <= 1` such that every edge multiplier stays
    /// positive for `t` in `[0, t0)`.
    pub fn safe_t_range(&self, f: &CohomologyClass) -> Rational {
        let mut t0 = Rational::one();
        for e in self.skeleton.unoriented() {
            let (u, v) = (self.skeleton.src(e), self.skeleton.dst(e));
            let diff = &f.values[v] - &f.values[u];
            let mu = if diff.is_zero() {
                Rational::zero()
            } else {
                diff.to_covector()
                    .and_then(|c| c.ratio_to(self.skeleton.axial(e)))
                    .expect("degree-1 class differences are multiples of the axial value")
            };
            if mu.is_negative() {
                let bound = -Rational::one() / mu;
                if bound < t0 {
                    t0 = bound;
                }
            }
        }
        t0
    }

    /// Emits the moved polytope `Phi + t*f` and verifies every edge
    /// difference is a positive multiple of the original direction.
    pub fn deform(
        &self,
        f: &CohomologyClass,
        t: &Rational,
    ) -> Result<crate::builders::PolytopeInput, DeformError> {
        if t.is_negative() || *t >= self.safe_t_range(f) {
            return Err(DeformError::OutOfRange);
        }
        let vertices: Vec<Covector> = self
            .input
            .vertices
            .iter()
            .enumerate()
            .map(|(v, pos)| {
                let delta = f.values[v]
                    .to_covector()
                    .expect("degree-1 values are covectors");
                pos + &delta.scale(t)
            })
            .collect();
        for e in self.skeleton.unoriented() {
            let (u, v) = (self.skeleton.src(e), self.skeleton.dst(e));
            let diff = &vertices[v] - &vertices[u];
            match diff.ratio_to(self.skeleton.axial(e)) {
                Some(r) if r.is_positive() => {}
                _ => return Err(DeformError::NotADeformation { edge: (u, v) }),
            }
        }
        Ok(crate::builders::PolytopeInput {
            n: self.input.n,
            vertices,
            edges: self.input.edges.clone(),
        })
    }

    /// The translation classes (constant covector at every vertex).
    pub fn translations(&self) -> Vec<CohomologyClass> {
        (0..self.skeleton.dim())
            .map(|i| {
                let val = Polynomial::var(self.skeleton.dim(), i);
                CohomologyClass {
                    degree: 1,
                    values: vec![val; self.skeleton.vertex_count()],
                }
            })
            .collect()
    }

    /// The homothety direction: each vertex moves along its own position.
    pub fn homothety(&self) -> CohomologyClass {
        CohomologyClass {
            degree: 1,
            values: self
                .input
                .vertices
                .iter()
                .map(Polynomial::from_covector)
                .collect(),
        }
    }
}

/// Coefficient vector of a class over the all-vertices layout, for exact
/// rank computations on families of classes.
pub fn class_coefficients(skel: &OneSkeleton, f: &CohomologyClass) -> Vec<Rational> {
    let layout = CoeffLayout::new(skel, f.degree, None);
    let mut out = vec![Rational::zero(); layout.cols()];
    for v in 0..skel.vertex_count() {
        for (mi, mono) in layout.monos.iter().enumerate() {
            out[layout.col(v, mi)] = f.values[v].coefficient(mono);
        }
    }
    out
}

/// Rank of a family of equal-degree classes.
pub fn class_rank(skel: &OneSkeleton, classes: &[CohomologyClass]) -> usize {
    if classes.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = classes
        .iter()
        .map(|c| class_coefficients(skel, c))
        .collect();
    Matrix::from_rows(rows).rank()
}

/// True when `f` lies in the span of `family`.
pub fn in_span(skel: &OneSkeleton, family: &[CohomologyClass], f: &CohomologyClass) -> bool {
    let r0 = class_rank(skel, family);
    let mut all: Vec<CohomologyClass> = family.to_vec();
    all.push(f.clone());
    class_rank(skel, &all) == r0
}

/// Support restricted to a phi half-space, used by the Kirwan kernel
/// splitting check.
pub fn restrict_support(f: &CohomologyClass, keep: impl Fn(VertexId) -> bool) -> CohomologyClass {
    CohomologyClass {
        degree: f.degree,
        values: f
            .values
            .iter()
            .enumerate()
            .map(|(v, p)| {
                if keep(v) {
                    p.clone()
                } else {
                    Polynomial::zero(p.nvars())
                }
            })
            .collect(),
    }
}

/// Seeded random class: a rational combination of the degree-m basis.
pub fn random_class(skel: &OneSkeleton, m: u32, seed: u64) -> Option<CohomologyClass> {
    use rand_core::{RngCore, SeedableRng};
    let b = basis(skel, m);
    if b.is_empty() {
        return None;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut acc = CohomologyClass::zero(skel, m);
    for c in &b {
        let k = (rng.next_u32() % 9) as i64 - 4;
        acc = acc.add(&c.scale(&crate::rational::rat_int(k)));
    }
    Some(acc)
}

/// Seeded random homogeneous polynomial of the given degree.
pub fn random_polynomial(n: usize, degree: u32, rng: &mut rand_chacha::ChaCha8Rng) -> Polynomial {
    use rand_core::RngCore;
    let mut p = Polynomial::zero(n);
    for mono in monomials_of_degree(n, degree) {
        let c = (rng.next_u32() % 9) as i64 - 4;
        if c != 0 {
            p = &p + &mono_poly(n, &mono, crate::rational::rat_int(c));
        }
    }
    p
}

/// The set of vertices strictly above a level.
pub fn vertices_above(pol: &Polarization, c: &Rational) -> BTreeSet<VertexId> {
    (0..pol.phi.len()).filter(|&v| pol.phi(v) > c).collect()
}
