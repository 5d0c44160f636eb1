//! Constructors for the standard one-skeleta: complete graphs, Johnson
//! graphs, products, edge-reflecting polytopes, and the small validator
//! fixtures (the two-vertex triple edge, ramified covers, footballs).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed, Zero};

use crate::covector::Covector;
use crate::linalg::solve_pair_combination;
use crate::rational::{rat, Rational};
use crate::skeleton::{EdgeId, EdgeSpec, OneSkeleton, StructureError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    DegenerateTaus { i: usize, j: usize },
    BadParameters(String),
    Structure(StructureError),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::DegenerateTaus { i, j } => {
                write!(f, "tau_{} = tau_{} gives a zero axial value", i + 1, j + 1)
            }
            BuildError::BadParameters(msg) => write!(f, "bad parameters: {}", msg),
            BuildError::Structure(e) => write!(f, "{}", e),
        }
    }
}

impl From<StructureError> for BuildError {
    fn from(e: StructureError) -> Self {
        BuildError::Structure(e)
    }
}

/// Complete one-skeleton on `taus.len()` vertices: the edge from `p_i` to
/// `p_j` carries `tau_j - tau_i`, and the connection is the permutation
/// invariant one.
pub fn complete(taus: &[Covector]) -> Result<OneSkeleton, BuildError> {
    let count = taus.len();
    if count < 2 {
        return Err(BuildError::BadParameters("need at least 2 vertices".into()));
    }
    let n = taus[0].dim();
    for (i, t) in taus.iter().enumerate() {
        if t.dim() != n {
            return Err(BuildError::BadParameters(format!(
                "tau_{} has wrong dimension",
                i + 1
            )));
        }
    }
    for i in 0..count {
        for j in (i + 1)..count {
            if taus[i] == taus[j] {
                return Err(BuildError::DegenerateTaus { i, j });
            }
        }
    }
    let names = (1..=count).map(|i| format!("p{}", i)).collect();
    // edge ids: (i, j), i != j, in row-major order
    let mut ids = BTreeMap::new();
    let mut edges = Vec::new();
    let mut axial = Vec::new();
    for i in 0..count {
        for j in 0..count {
            if i == j {
                continue;
            }
            ids.insert((i, j), edges.len());
            edges.push((i, j));
            axial.push(&taus[j] - &taus[i]);
        }
    }
    let specs: Vec<EdgeSpec> = edges
        .iter()
        .map(|&(i, j)| EdgeSpec {
            src: i,
            dst: j,
            rev: ids[&(j, i)],
        })
        .collect();
    let conn = edges
        .iter()
        .map(|&(i, j)| {
            let mut map = BTreeMap::new();
            for k in 0..count {
                if k == i {
                    continue;
                }
                let image = if k == j { (j, i) } else { (j, k) };
                map.insert(ids[&(i, k)], ids[&image]);
            }
            map
        })
        .collect();
    let mult = vec![Rational::one(); specs.len()];
    Ok(OneSkeleton::new(n, names, specs, axial, mult, conn)?)
}

/// One-point skeleton in dimension `n` with no edges.
pub fn point(n: usize) -> OneSkeleton {
    OneSkeleton::new(n, vec!["pt".to_string()], vec![], vec![], vec![], vec![]).unwrap()
}

/// The oriented segment with axial value +1 from vertex "0" to vertex "1".
pub fn edge_plus() -> OneSkeleton {
    complete(&[
        Covector::new(vec![Rational::zero()]),
        Covector::new(vec![Rational::one()]),
    ])
    .unwrap()
}

/// The oriented segment with axial value -1 from vertex "0" to vertex "1".
pub fn edge_minus() -> OneSkeleton {
    complete(&[
        Covector::new(vec![Rational::zero()]),
        Covector::new(vec![-Rational::one()]),
    ])
    .unwrap()
}

/// Johnson graph data: the skeleton together with the subset labeling of
/// its vertices.
#[derive(Clone)]
pub struct Johnson {
    pub skeleton: OneSkeleton,
    pub n: usize,
    pub k: usize,
    /// 1-based element subsets, indexed by vertex.
    pub subsets: Vec<BTreeSet<usize>>,
}

impl Johnson {
    pub fn vertex_of(&self, s: &BTreeSet<usize>) -> Option<VertexId> {
        self.subsets.iter().position(|t| t == s)
    }
}

/// Johnson graph J(n,k): vertices are the k-subsets of {1..n}, adjacent
/// when they share k-1 elements; the edge from S to S' = S - {i} + {j}
/// carries `e_j - e_i`, and the connection relabels pairs.
pub fn johnson(n: usize, k: usize) -> Result<Johnson, BuildError> {
    if k < 1 || k + 1 > n {
        return Err(BuildError::BadParameters(format!(
            "johnson needs 1 <= k <= n-1, got n={} k={}",
            n, k
        )));
    }
    let subsets = k_subsets(n, k);
    let index: BTreeMap<Vec<usize>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.iter().copied().collect(), i))
        .collect();
    let names: Vec<String> = subsets.iter().map(subset_name).collect();
    // oriented edge per (S, i, j): i in S, j not in S
    let mut ids: BTreeMap<(usize, usize, usize), EdgeId> = BTreeMap::new();
    let mut raw = Vec::new();
    for (v, s) in subsets.iter().enumerate() {
        for &i in s {
            for j in 1..=n {
                if s.contains(&j) {
                    continue;
                }
                ids.insert((v, i, j), raw.len());
                raw.push((v, i, j));
            }
        }
    }
    let target = |v: usize, i: usize, j: usize| -> usize {
        let mut t = subsets[v].clone();
        t.remove(&i);
        t.insert(j);
        index[&t.iter().copied().collect::<Vec<_>>()]
    };
    let specs: Vec<EdgeSpec> = raw
        .iter()
        .map(|&(v, i, j)| {
            let w = target(v, i, j);
            EdgeSpec {
                src: v,
                dst: w,
                rev: ids[&(w, j, i)],
            }
        })
        .collect();
    let axial: Vec<Covector> = raw
        .iter()
        .map(|&(_, i, j)| &Covector::basis(n, j - 1) - &Covector::basis(n, i - 1))
        .collect();
    // connection along (S,i,j): (k,l) -> (k,l) unless it touches i or j
    let conn: Vec<BTreeMap<EdgeId, EdgeId>> = raw
        .iter()
        .map(|&(v, i, j)| {
            let w = target(v, i, j);
            let mut map = BTreeMap::new();
            for &(vv, a, b) in raw.iter().filter(|&&(vv, _, _)| vv == v) {
                debug_assert_eq!(vv, v);
                let (a2, b2) = if a == i && b == j {
                    (j, i)
                } else if a == i {
                    (j, b)
                } else if b == j {
                    (a, i)
                } else {
                    (a, b)
                };
                map.insert(ids[&(v, a, b)], ids[&(w, a2, b2)]);
            }
            map
        })
        .collect();
    let mult = vec![Rational::one(); specs.len()];
    let skeleton = OneSkeleton::new(n, names, specs, axial, mult, conn)?;
    Ok(Johnson {
        skeleton,
        n,
        k,
        subsets,
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(out: &mut Vec<BTreeSet<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(out, cur, x + 1, n, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 1, n, k);
    out
}

pub fn subset_name(s: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Direct product: vertex pairs, factor-wise edges and connection, axial
/// values embedded by concatenating the two coordinate spaces.
pub fn product(g1: &OneSkeleton, g2: &OneSkeleton) -> OneSkeleton {
    let n = g1.dim() + g2.dim();
    let v1 = g1.vertex_count();
    let v2 = g2.vertex_count();
    let vid = |a: usize, b: usize| a * v2 + b;
    let names: Vec<String> = (0..v1)
        .flat_map(|a| (0..v2).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g1.name(a), g2.name(b)))
        .collect();
    // horizontal edge (e1, b), vertical edge (a, e2)
    let h_id = |e: EdgeId, b: usize| e * v2 + b;
    let h_count = g1.edge_count() * v2;
    let v_id = |a: usize, e: EdgeId| h_count + a * g2.edge_count() + e;
    let mut specs = Vec::new();
    let mut axial = Vec::new();
    let mut mult = Vec::new();
    for e in 0..g1.edge_count() {
        for b in 0..v2 {
            specs.push(EdgeSpec {
                src: vid(g1.src(e), b),
                dst: vid(g1.dst(e), b),
                rev: h_id(g1.reverse(e), b),
            });
            let mut coords = g1.axial(e).0.clone();
            coords.extend(core::iter::repeat(Rational::zero()).take(g2.dim()));
            axial.push(Covector::new(coords));
            mult.push(g1.mult(e).clone());
        }
    }
    for a in 0..v1 {
        for e in 0..g2.edge_count() {
            specs.push(EdgeSpec {
                src: vid(a, g2.src(e)),
                dst: vid(a, g2.dst(e)),
                rev: v_id(a, g2.reverse(e)),
            });
            let mut coords = vec![Rational::zero(); g1.dim()];
            coords.extend(g2.axial(e).0.iter().cloned());
            axial.push(Covector::new(coords));
            mult.push(g2.mult(e).clone());
        }
    }
    let mut conn = Vec::with_capacity(specs.len());
    for e in 0..g1.edge_count() {
        for b in 0..v2 {
            let mut map = BTreeMap::new();
            for &g in g1.edges_at(g1.src(e)) {
                map.insert(h_id(g, b), h_id(g1.theta(e, g), b));
            }
            for &g in g2.edges_at(b) {
                map.insert(v_id(g1.src(e), g), v_id(g1.dst(e), g));
            }
            conn.push(map);
        }
    }
    for a in 0..v1 {
        for e in 0..g2.edge_count() {
            let mut map = BTreeMap::new();
            for &g in g1.edges_at(a) {
                map.insert(h_id(g, g2.src(e)), h_id(g, g2.dst(e)));
            }
            for &g in g2.edges_at(g2.src(e)) {
                map.insert(v_id(a, g), v_id(a, g2.theta(e, g)));
            }
            conn.push(map);
        }
    }
    OneSkeleton::new(n, names, specs, axial, mult, conn)
        .expect("product of structurally sound skeleta is structurally sound")
}

/// Vertex positions and edges of a polytope whose one-skeleton is to be
/// labeled by edge vectors.
#[derive(Clone, Debug)]
pub struct PolytopeInput {
    pub n: usize,
    pub vertices: Vec<Covector>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    BadInput(String),
    NotEdgeReflecting {
        vertex: VertexId,
        edge: (VertexId, VertexId),
        reason: String,
    },
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::BadInput(m) => write!(f, "bad polytope input: {}", m),
            PolytopeError::NotEdgeReflecting {
                vertex,
                edge,
                reason,
            } => write!(
                f,
                "not edge-reflecting at vertex {} across edge ({},{}): {}",
                vertex, edge.0, edge.1, reason
            ),
        }
    }
}

/// Skeleton of an edge-reflecting polytope: axial values are the edge
/// vectors, and the connection pairs each edge at `p` with the unique
/// coplanar edge at the far endpoint having a positive rescaling.
pub fn polytope_skeleton(p: &PolytopeInput) -> Result<OneSkeleton, PolytopeError> {
    let count = p.vertices.len();
    if count == 0 {
        return Err(PolytopeError::BadInput("no vertices".into()));
    }
    for v in &p.vertices {
        if v.dim() != p.n {
            return Err(PolytopeError::BadInput("vertex dimension mismatch".into()));
        }
    }
    for i in 0..count {
        for j in (i + 1)..count {
            if p.vertices[i] == p.vertices[j] {
                return Err(PolytopeError::BadInput(format!(
                    "vertices {} and {} coincide",
                    i, j
                )));
            }
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &(a, b) in &p.edges {
        if a == b || a >= count || b >= count {
            return Err(PolytopeError::BadInput(format!("bad edge ({},{})", a, b)));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for neighbors in adj.iter_mut() {
        neighbors.sort();
        let before = neighbors.len();
        neighbors.dedup();
        if neighbors.len() != before {
            return Err(PolytopeError::BadInput("duplicate edge".into()));
        }
    }
    let degree = adj[0].len();
    for (v, neighbors) in adj.iter().enumerate() {
        if neighbors.len() != degree {
            return Err(PolytopeError::NotEdgeReflecting {
                vertex: v,
                edge: (v, *neighbors.first().unwrap_or(&v)),
                reason: format!("degree {} differs from degree {}", neighbors.len(), degree),
            });
        }
    }
    // connectivity
    {
        let mut seen = vec![false; count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(PolytopeError::BadInput("graph not connected".into()));
        }
    }
    let mut ids = BTreeMap::new();
    let mut raw = Vec::new();
    for v in 0..count {
        for &w in &adj[v] {
            ids.insert((v, w), raw.len());
            raw.push((v, w));
        }
    }
    let alpha = |a: usize, b: usize| -> Covector { &p.vertices[b] - &p.vertices[a] };
    let specs: Vec<EdgeSpec> = raw
        .iter()
        .map(|&(a, b)| EdgeSpec {
            src: a,
            dst: b,
            rev: ids[&(b, a)],
        })
        .collect();
    let axial: Vec<Covector> = raw.iter().map(|&(a, b)| alpha(a, b)).collect();
    let mut conn: Vec<BTreeMap<EdgeId, EdgeId>> = vec![BTreeMap::new(); raw.len()];
    for (eid, &(a, b)) in raw.iter().enumerate() {
        let ab = alpha(a, b);
        let mut map = BTreeMap::new();
        for &q in &adj[a] {
            let g = ids[&(a, q)];
            if q == b {
                map.insert(g, ids[&(b, a)]);
                continue;
            }
            let aq = alpha(a, q);
            // the unique neighbor q' of b, distinct from a, with
            // alpha(b,q') = lambda*alpha(a,q) + c*alpha(a,b), lambda > 0
            let mut partner = None;
            for &q2 in &adj[b] {
                if q2 == a {
                    continue;
                }
                let bq2 = alpha(b, q2);
                if let Some((lambda, _c)) = solve_pair_combination(&bq2, &aq, &ab) {
                    if lambda.is_positive() {
                        if partner.is_some() {
                            return Err(PolytopeError::NotEdgeReflecting {
                                vertex: a,
                                edge: (a, b),
                                reason: format!("edge to {} has two coplanar partners", q),
                            });
                        }
                        partner = Some(ids[&(b, q2)]);
                    }
                }
            }
            let Some(partner) = partner else {
                return Err(PolytopeError::NotEdgeReflecting {
                    vertex: a,
                    edge: (a, b),
                    reason: format!("edge to {} has no coplanar partner", q),
                });
            };
            map.insert(g, partner);
        }
        // the partner assignment must be one-to-one
        let image: BTreeSet<EdgeId> = map.values().copied().collect();
        if image.len() != map.len() {
            return Err(PolytopeError::NotEdgeReflecting {
                vertex: a,
                edge: (a, b),
                reason: "partner assignment is not a bijection".into(),
            });
        }
        conn[eid] = map;
    }
    let mult = vec![Rational::one(); specs.len()];
    let names = (0..count).map(|i| format!("v{}", i)).collect();
    OneSkeleton::new(p.n, names, specs, axial, mult, conn)
        .map_err(|e| PolytopeError::BadInput(format!("structure: {}", e)))
}

/// Octahedron in R^3 with vertices at the signed standard basis vectors.
pub fn octahedron_polytope() -> PolytopeInput {
    let verts = vec![
        Covector::from_ints(&[1, 0, 0]),
        Covector::from_ints(&[-1, 0, 0]),
        Covector::from_ints(&[0, 1, 0]),
        Covector::from_ints(&[0, -1, 0]),
        Covector::from_ints(&[0, 0, 1]),
        Covector::from_ints(&[0, 0, -1]),
    ];
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            // antipodal pairs (0,1), (2,3), (4,5) are not adjacent
            if j == i + 1 && i % 2 == 0 {
                continue;
            }
            edges.push((i, j));
        }
    }
    PolytopeInput {
        n: 3,
        vertices: verts,
        edges,
    }
}

pub fn octahedron_skeleton() -> OneSkeleton {
    polytope_skeleton(&octahedron_polytope()).expect("octahedron is edge-reflecting")
}

/// Unit cube [0,1]^3.
pub fn cube_polytope() -> PolytopeInput {
    let mut verts = Vec::new();
    for z in 0..2 {
        for y in 0..2 {
            for x in 0..2 {
                verts.push(Covector::from_ints(&[x, y, z]));
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..8usize {
        for bit in 0..3 {
            let j = i ^ (1 << bit);
            if i < j {
                edges.push((i, j));
            }
        }
    }
    PolytopeInput {
        n: 3,
        vertices: verts,
        edges,
    }
}

pub fn cube_skeleton() -> OneSkeleton {
    polytope_skeleton(&cube_polytope()).expect("cube is edge-reflecting")
}

/// Square pyramid: apex over a unit square. Not edge-reflecting (the apex
/// has degree 4, the base vertices degree 3).
pub fn square_pyramid_polytope() -> PolytopeInput {
    PolytopeInput {
        n: 3,
        vertices: vec![
            Covector::from_ints(&[0, 0, 0]),
            Covector::from_ints(&[1, 0, 0]),
            Covector::from_ints(&[1, 1, 0]),
            Covector::from_ints(&[0, 1, 0]),
            Covector::new(vec![rat(1, 2), rat(1, 2), rat(1, 1)]),
        ],
        edges: vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
    }
}

/// Two vertices joined by three edges labeled a+b, -a, -b; the connection
/// along each edge swaps the other two. Passes A1-A3, has cycles for every
/// polarizing vector, and is not three-independent.
pub fn s6() -> OneSkeleton {
    let names = vec!["p".to_string(), "q".to_string()];
    let weights = [
        Covector::from_ints(&[1, 1]),
        Covector::from_ints(&[-1, 0]),
        Covector::from_ints(&[0, -1]),
    ];
    // edges 0..3 from p to q, 3..6 the reverses
    let mut specs = Vec::new();
    let mut axial = Vec::new();
    for (i, w) in weights.iter().enumerate() {
        specs.push(EdgeSpec {
            src: 0,
            dst: 1,
            rev: 3 + i,
        });
        axial.push(w.clone());
    }
    for (i, w) in weights.iter().enumerate() {
        specs.push(EdgeSpec {
            src: 1,
            dst: 0,
            rev: i,
        });
        axial.push(-w);
    }
    let swap = |e: usize, g: usize| -> usize {
        // theta_e maps e to its reverse and swaps the remaining two slots
        let (a, b) = match e % 3 {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let slot = g % 3;
        let new_slot = if slot == e % 3 {
            slot
        } else if slot == a {
            b
        } else {
            a
        };
        // image lives on the opposite side
        if e < 3 {
            3 + new_slot
        } else {
            new_slot
        }
    };
    let conn = (0..6)
        .map(|e| {
            let side = if e < 3 { 0..3 } else { 3..6 };
            side.map(|g| (g, swap(e, g))).collect()
        })
        .collect();
    let mult = vec![Rational::one(); 6];
    OneSkeleton::new(2, names, specs, axial, mult, conn).expect("fixture is structurally sound")
}

/// The 4n-cycle labeled by pulling back the square's edge weights
/// (1,0), (0,1), (-1,0), (0,-1) around the boundary.
pub fn ramified_cover(n: usize) -> OneSkeleton {
    assert!(n >= 1);
    let count = 4 * n;
    let w = [
        Covector::from_ints(&[1, 0]),
        Covector::from_ints(&[0, 1]),
        Covector::from_ints(&[-1, 0]),
        Covector::from_ints(&[0, -1]),
    ];
    let names = (0..count).map(|i| format!("v{}", i)).collect();
    // edge 2k: v_k -> v_{k+1}; edge 2k+1: v_{k+1} -> v_k
    let fwd = |k: usize| 2 * k;
    let bwd = |k: usize| 2 * k + 1;
    let mut specs = Vec::new();
    let mut axial = Vec::new();
    for k in 0..count {
        let next = (k + 1) % count;
        specs.push(EdgeSpec {
            src: k,
            dst: next,
            rev: bwd(k),
        });
        axial.push(w[k % 4].clone());
        specs.push(EdgeSpec {
            src: next,
            dst: k,
            rev: fwd(k),
        });
        axial.push(-&w[k % 4]);
    }
    // 2-valent: the connection along an edge sends it to its reverse and
    // the other edge at the source to the other edge at the target.
    let mut conn: Vec<BTreeMap<EdgeId, EdgeId>> = vec![BTreeMap::new(); specs.len()];
    let star = |v: usize| -> [EdgeId; 2] {
        let prev = (v + count - 1) % count;
        [fwd(v), bwd(prev)]
    };
    for e in 0..specs.len() {
        let (src, dst, rev) = (specs[e].src, specs[e].dst, specs[e].rev);
        let mut map = BTreeMap::new();
        map.insert(e, rev);
        let other_src = *star(src).iter().find(|&&g| g != e).unwrap();
        let other_dst = *star(dst).iter().find(|&&g| g != rev).unwrap();
        map.insert(other_src, other_dst);
        conn[e] = map;
    }
    let mult = vec![Rational::one(); specs.len()];
    OneSkeleton::new(2, names, specs, axial, mult, conn).expect("fixture is structurally sound")
}

/// One orbifold edge of football type (m,n): multiplicities n at one pole
/// and m at the other, with weights (n-m)/n and (m-n)/m.
pub fn football(m: i64, n: i64) -> OneSkeleton {
    assert!(m >= 1 && n >= 1 && m != n);
    let names = vec!["p".to_string(), "q".to_string()];
    let specs = vec![
        EdgeSpec {
            src: 0,
            dst: 1,
            rev: 1,
        },
        EdgeSpec {
            src: 1,
            dst: 0,
            rev: 0,
        },
    ];
    let axial = vec![
        Covector::new(vec![rat(n - m, n)]),
        Covector::new(vec![rat(m - n, m)]),
    ];
    let mult = vec![rat(n, 1), rat(m, 1)];
    let conn = vec![BTreeMap::from([(0, 1)]), BTreeMap::from([(1, 0)])];
    OneSkeleton::new(1, names, specs, axial, mult, conn).expect("fixture is structurally sound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarize::{betti, sample_polarizing};

    #[test]
    fn complete_small_cases() {
        let l = edge_plus();
        assert_eq!(l.vertex_count(), 2);
        assert_eq!(l.valence(), 1);
        assert!(l.validate().passes());
        assert_eq!(*l.axial(0), Covector::from_ints(&[1]));

        let taus = [
            Covector::from_ints(&[0, 0]),
            Covector::from_ints(&[1, 0]),
            Covector::from_ints(&[0, 1]),
        ];
        let c3 = complete(&taus).unwrap();
        assert!(c3.validate().passes());
        assert!(c3.is_gkm().0);

        let basis4: Vec<Covector> = (0..4).map(|i| Covector::basis(4, i)).collect();
        let c4 = complete(&basis4).unwrap();
        assert!(c4.validate().passes());
        assert_eq!(c4.valence(), 3);
    }

    #[test]
    fn johnson_4_2_shape() {
        let j = johnson(4, 2).unwrap();
        assert_eq!(j.skeleton.vertex_count(), 6);
        assert_eq!(j.skeleton.valence(), 4);
        assert!(j.skeleton.validate().passes());
        assert!(j.skeleton.is_gkm().0);
        let xi = sample_polarizing(&j.skeleton, 0);
        assert_eq!(betti(&j.skeleton, &xi).unwrap(), vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn johnson_3_1_fails_three_independence() {
        let j = johnson(3, 1).unwrap();
        assert!(j.skeleton.validate().passes());
        assert_eq!(j.skeleton.independence_level(), 2);
    }

    #[test]
    fn johnson_rejects_bad_parameters() {
        assert!(johnson(3, 3).is_err());
        assert!(johnson(2, 0).is_err());
    }

    #[test]
    fn johnson_complementation_symmetry() {
        let a = johnson(5, 2).unwrap().skeleton;
        let b = johnson(5, 3).unwrap().skeleton;
        let xa = sample_polarizing(&a, 0);
        let xb = sample_polarizing(&b, 0);
        assert_eq!(betti(&a, &xa).unwrap(), betti(&b, &xb).unwrap());
    }

    #[test]
    fn products() {
        let l = edge_plus();
        let square = product(&l, &l);
        assert!(square.validate().passes());
        assert_eq!(square.vertex_count(), 4);
        assert_eq!(square.valence(), 2);
        let xi = sample_polarizing(&square, 0);
        assert_eq!(betti(&square, &xi).unwrap(), vec![1, 2, 1]);

        // product with a point changes nothing
        let p = point(0);
        let same = product(&l, &p);
        assert_eq!(same.vertex_count(), l.vertex_count());
        assert_eq!(same.valence(), l.valence());

        // vertex counts multiply
        let taus3: Vec<Covector> = (0..3).map(|i| Covector::basis(3, i)).collect();
        let taus2: Vec<Covector> = (0..2).map(|i| Covector::basis(2, i)).collect();
        let d2 = complete(&taus2).unwrap();
        let d3 = complete(&taus3).unwrap();
        assert_eq!(product(&d3, &d2).vertex_count(), 6);
    }

    #[test]
    fn product_betti_is_convolution() {
        let l = edge_plus();
        let square = product(&l, &l);
        let xi = sample_polarizing(&square, 7);
        assert_eq!(betti(&square, &xi).unwrap(), vec![1, 2, 1]);

        let oct = octahedron_skeleton();
        let prod = product(&oct, &l);
        let xi = sample_polarizing(&prod, 7);
        let b = betti(&prod, &xi).unwrap();
        // (1,1,2,1,1) * (1,1)
        assert_eq!(b, vec![1, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn octahedron_and_cube() {
        let oct = octahedron_skeleton();
        assert!(oct.validate().passes());
        assert_eq!(oct.valence(), 4);
        assert_eq!(oct.independence_level(), 3);

        let cube = cube_skeleton();
        assert!(cube.validate().passes());
        assert_eq!(cube.valence(), 3);
    }

    #[test]
    fn polytope_axials_negate_along_reversal() {
        let oct = octahedron_skeleton();
        for e in oct.unoriented() {
            assert_eq!(*oct.axial(oct.reverse(e)), -&oct.axial(e).clone());
        }
    }

    #[test]
    fn pyramid_is_not_edge_reflecting() {
        match polytope_skeleton(&square_pyramid_polytope()) {
            Err(PolytopeError::NotEdgeReflecting { .. }) => {}
            other => panic!("expected NotEdgeReflecting, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn builder_outputs_validate() {
        assert!(s6().validate().passes());
        assert!(ramified_cover(1).validate().passes());
        assert!(ramified_cover(2).validate().passes());
        assert!(football(1, 2).validate().passes());
        assert!(octahedron_skeleton().validate().passes());
        assert!(cube_skeleton().validate().passes());
        assert!(johnson(4, 2).unwrap().skeleton.validate().passes());
    }
}
