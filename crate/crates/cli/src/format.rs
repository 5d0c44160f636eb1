//! JSON file formats: skeleta, polytopes, cohomology classes and the
//! surgery sidecars. Output is canonical: maps are sorted by key and
//! rationals are reduced `p/q` strings.

use std::collections::BTreeMap;

use gkm::builders::PolytopeInput;
use gkm::cohomology::CohomologyClass;
use gkm::covector::Covector;
use gkm::poly::Polynomial;
use gkm::rational::{format_rational, parse_rational, Rational};
use gkm::skeleton::{EdgeSpec, OneSkeleton};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

#[derive(Serialize, Deserialize)]
pub struct SkeletonFile {
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFile>,
    /// For each edge id: the bijection from outgoing edges at its source
    /// to outgoing edges at its target.
    pub connection: BTreeMap<String, BTreeMap<String, usize>>,
}

#[derive(Serialize, Deserialize)]
pub struct EdgeFile {
    pub id: usize,
    pub src: usize,
    pub dst: usize,
    pub rev: usize,
    pub axial: Vec<String>,
    pub m: String,
}

pub fn skeleton_to_file(skel: &OneSkeleton) -> SkeletonFile {
    let edges = (0..skel.edge_count())
        .map(|e| EdgeFile {
            id: e,
            src: skel.src(e),
            dst: skel.dst(e),
            rev: skel.reverse(e),
            axial: skel.axial(e).0.iter().map(format_rational).collect(),
            m: format_rational(skel.mult(e)),
        })
        .collect();
    let connection = (0..skel.edge_count())
        .map(|e| {
            let map = skel
                .connection_map(e)
                .iter()
                .map(|(&g, &h)| (g.to_string(), h))
                .collect();
            (e.to_string(), map)
        })
        .collect();
    SkeletonFile {
        n: skel.dim(),
        vertices: skel.names().to_vec(),
        edges,
        connection,
    }
}

pub fn skeleton_from_file(file: &SkeletonFile) -> Result<OneSkeleton, FormatError> {
    // edge ids may be arbitrary but must be unique; remap to positions
    let mut position: BTreeMap<usize, usize> = BTreeMap::new();
    for (pos, e) in file.edges.iter().enumerate() {
        if position.insert(e.id, pos).is_some() {
            return err(format!("duplicate edge id {}", e.id));
        }
    }
    let lookup = |id: usize| -> Result<usize, FormatError> {
        position
            .get(&id)
            .copied()
            .ok_or_else(|| FormatError(format!("unknown edge id {}", id)))
    };
    let mut specs = Vec::with_capacity(file.edges.len());
    let mut axial = Vec::with_capacity(file.edges.len());
    let mut mult = Vec::with_capacity(file.edges.len());
    for e in &file.edges {
        specs.push(EdgeSpec {
            src: e.src,
            dst: e.dst,
            rev: lookup(e.rev)?,
        });
        let coords: Result<Vec<Rational>, _> = e.axial.iter().map(|s| parse_rational(s)).collect();
        axial.push(Covector::new(
            coords.map_err(|e| FormatError(e.to_string()))?,
        ));
        mult.push(parse_rational(&e.m).map_err(|e| FormatError(e.to_string()))?);
    }
    let mut conn = vec![BTreeMap::new(); file.edges.len()];
    for (key, map) in &file.connection {
        let id: usize = key
            .parse()
            .map_err(|_| FormatError(format!("bad connection key {}", key)))?;
        let pos = lookup(id)?;
        let mut inner = BTreeMap::new();
        for (gk, hv) in map {
            let g: usize = gk
                .parse()
                .map_err(|_| FormatError(format!("bad connection key {}", gk)))?;
            inner.insert(lookup(g)?, lookup(*hv)?);
        }
        conn[pos] = inner;
    }
    OneSkeleton::new(file.n, file.vertices.clone(), specs, axial, mult, conn)
        .map_err(|e| FormatError(format!("skeleton structure: {}", e)))
}

#[derive(Serialize, Deserialize)]
pub struct PolytopeFile {
    pub n: usize,
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn polytope_to_file(p: &PolytopeInput) -> PolytopeFile {
    PolytopeFile {
        n: p.n,
        vertices: p
            .vertices
            .iter()
            .map(|v| v.0.iter().map(format_rational).collect())
            .collect(),
        edges: p.edges.clone(),
    }
}

pub fn polytope_from_file(file: &PolytopeFile) -> Result<PolytopeInput, FormatError> {
    let vertices: Result<Vec<Covector>, FormatError> = file
        .vertices
        .iter()
        .map(|coords| {
            let parsed: Result<Vec<Rational>, _> =
                coords.iter().map(|s| parse_rational(s)).collect();
            parsed
                .map(Covector::new)
                .map_err(|e| FormatError(e.to_string()))
        })
        .collect();
    Ok(PolytopeInput {
        n: file.n,
        vertices: vertices?,
        edges: file.edges.clone(),
    })
}

#[derive(Serialize, Deserialize)]
pub struct TermFile {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize)]
pub struct ClassFile {
    pub degree: u32,
    /// Vertex id (as a string key) to term list; absent vertices are zero.
    pub values: BTreeMap<String, Vec<TermFile>>,
}

pub fn polynomial_to_terms(p: &Polynomial) -> Vec<TermFile> {
    p.terms()
        .map(|(m, c)| TermFile {
            exponents: m.0.clone(),
            coeff: format_rational(c),
        })
        .collect()
}

pub fn polynomial_from_terms(n: usize, terms: &[TermFile]) -> Result<Polynomial, FormatError> {
    let mut p = Polynomial::zero(n);
    for t in terms {
        if t.exponents.len() != n {
            return err("term exponent vector has wrong length");
        }
        let c = parse_rational(&t.coeff).map_err(|e| FormatError(e.to_string()))?;
        let mut mono = Polynomial::constant(n, c);
        for (i, &e) in t.exponents.iter().enumerate() {
            for _ in 0..e {
                mono = &mono * &Polynomial::var(n, i);
            }
        }
        p = &p + &mono;
    }
    Ok(p)
}

pub fn class_to_file(class: &CohomologyClass) -> ClassFile {
    let values = class
        .values
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(v, p)| (v.to_string(), polynomial_to_terms(p)))
        .collect();
    ClassFile {
        degree: class.degree,
        values,
    }
}

pub fn class_from_file(
    skel: &OneSkeleton,
    file: &ClassFile,
) -> Result<CohomologyClass, FormatError> {
    let mut values = vec![Polynomial::zero(skel.dim()); skel.vertex_count()];
    for (key, terms) in &file.values {
        let v: usize = key
            .parse()
            .map_err(|_| FormatError(format!("bad vertex key {}", key)))?;
        if v >= skel.vertex_count() {
            return err(format!("vertex id {} out of range", v));
        }
        values[v] = polynomial_from_terms(skel.dim(), terms)?;
    }
    CohomologyClass::new(skel, file.degree, values)
        .map_err(|e| FormatError(format!("class values: {}", e)))
}

#[derive(Serialize, Deserialize)]
pub struct BlowUpSidecar {
    /// Result vertex id to source vertex id.
    pub beta: BTreeMap<String, usize>,
    pub thom: ClassFile,
}

/// Provenance sidecar for a reduced skeleton: reduced vertex id to the
/// (lower, upper) crossing pair in the source.
pub type ProvenanceSidecar = BTreeMap<String, (usize, usize)>;

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
