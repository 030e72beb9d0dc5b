//! The cyclic-covering construction: from an embedded resolution graph of
//! `(X, f)` with all multiplicities, build the canonical embedded resolution
//! graph of the n-fold suspension `(X_{f,n}, z)`.
//!
//! Over a vertex `w` sit `gcd(M_w, n)` vertices (`M_w` is the gcd of the
//! multiplicities of `w` and everything adjacent to it), each of multiplicity
//! `m_w / gcd(m_w, n)`; edges and arrowheads are covered by
//! Hirzebruch–Jung strings of the model singularities `X(a, b, N)`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::blowdown::minimalize;
use crate::cf::neg_cf;
use crate::curve::{plane_curve_graph, CurveGraph};
use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, VertexData, VertexId};
use crate::newton::NewtonPair;

/// The Hirzebruch–Jung string of the model `X(a, b, N)`, decorated with the
/// multiplicities of the covering function; empty when the model is smooth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringModel {
    /// Self-intersections are `-quotients[i]`; all quotients are >= 2.
    pub quotients: Vec<u64>,
    /// Multiplicities `m_1, ..., m_t` along the string.
    pub mults: Vec<u64>,
}

impl StringModel {
    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// The string `St(a, b, N)`: requires `gcd(a, b, N) = 1`. With
/// `A = a/(a,N)` and `M = N/(a,N)`, the unique `0 <= lambda < M` with
/// `b + lambda A = m_1 M` determines the quotients (`M/lambda` as a negative
/// continued fraction) and the multiplicities
/// `m_2 = k_1 m_1 - A`, `m_{i+1} = k_i m_i - m_{i-1}`.
pub fn string_model(a: u64, b: u64, n: u64) -> Result<StringModel> {
    if a == 0 || b == 0 || n == 0 {
        return Err(GraphError::InvalidInput("string model needs positive arguments".into()));
    }
    if a.gcd(&b).gcd(&n) != 1 {
        return Err(GraphError::NotCoprime);
    }
    let g = a.gcd(&n);
    let big_a = a / g;
    let big_m = n / g;
    // gcd(A, M) = 1, so lambda = -b * A^{-1} mod M is well defined
    let inv = mod_inverse(big_a % big_m.max(1), big_m.max(1))
        .ok_or(GraphError::Internal("A and M must be coprime".into()))?;
    let lambda = if big_m == 1 {
        0
    } else {
        ((big_m - b % big_m) % big_m).checked_mul(inv).map(|x| x % big_m)
            .ok_or(GraphError::Overflow("string_model"))?
    };
    if lambda == 0 {
        return Ok(StringModel { quotients: vec![], mults: vec![] });
    }
    let m1 = (b as u128 + lambda as u128 * big_a as u128) / big_m as u128;
    let quotients = neg_cf(big_m, lambda)?;
    let mut mults: Vec<u128> = vec![m1];
    let mut prev = big_a as u128;
    for (i, &k) in quotients.iter().enumerate() {
        if i + 1 == quotients.len() {
            break;
        }
        let cur = mults[i];
        let next = (k as u128)
            .checked_mul(cur)
            .and_then(|x| x.checked_sub(prev))
            .ok_or(GraphError::Overflow("string_model"))?;
        mults.push(next);
        prev = cur;
    }
    let mults = mults
        .into_iter()
        .map(|m| u64::try_from(m).map_err(|_| GraphError::Overflow("string_model")))
        .collect::<Result<Vec<u64>>>()?;
    Ok(StringModel { quotients, mults })
}

/// `det` of the resolution graph of `X(a, b, N)`: `N / ((a,N)(b,N))`.
pub fn string_determinant(a: u64, b: u64, n: u64) -> u64 {
    n / (a.gcd(&n) * b.gcd(&n))
}

/// `det` of the normalization of `{z^q = x y^p, t^N = z^r y}` with
/// `gcd(q, p) = 1`: `N q / ((N, r)(N, rp + q))`.
pub fn hj_determinant(q: u64, p: u64, n: u64, r: u64) -> u64 {
    (n * q) / (n.gcd(&r) * n.gcd(&(r * p + q)))
}

/// The covering graph together with the fibers over the base vertices.
#[derive(Debug, Clone)]
pub struct CoverGraph {
    /// Canonical embedded resolution graph of `(X_{f,n}, z)`.
    pub graph: DecoratedGraph,
    /// For each base vertex, its lifts (string interiors are not recorded).
    pub fibers: BTreeMap<VertexId, Vec<VertexId>>,
}

/// `M_w`: gcd of the multiplicities of `w`, its neighbors and its arrowheads.
fn big_m(base: &DecoratedGraph, w: VertexId) -> Result<u64> {
    let mut g = mult_of(base, w)?;
    for v in base.neighbors(w) {
        g = g.gcd(&mult_of(base, v)?);
    }
    for a in base.arrows_at(w) {
        g = g.gcd(&a.multiplicity);
    }
    Ok(g)
}

fn mult_of(base: &DecoratedGraph, v: VertexId) -> Result<u64> {
    base.data(v)?
        .multiplicity
        .ok_or_else(|| GraphError::InvalidInput(format!("vertex {v} has no multiplicity")))
}

/// Runs the covering algorithm over `base` (an embedded resolution graph
/// whose multiplicities satisfy the identity of 1.3(3)) for the covering
/// degree `n >= 1`.
pub fn cyclic_cover(base: &DecoratedGraph, n: u64) -> Result<CoverGraph> {
    if n == 0 {
        return Err(GraphError::InvalidInput("covering degree must be positive".into()));
    }
    if !base.is_tree() {
        return Err(GraphError::NotATree);
    }
    if !base.multiplicities_consistent() {
        return Err(GraphError::InvalidInput(
            "base multiplicities are missing or inconsistent".into(),
        ));
    }
    let mut g = DecoratedGraph::new();
    let mut fibers: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();

    // (a) vertices
    for (w, data) in base.vertices() {
        if data.genus != 0 {
            return Err(GraphError::InvalidInput(
                "covering algorithm requires a rational homology sphere base".into(),
            ));
        }
        let mw = mult_of(base, w)?;
        let copies = big_m(base, w)?.gcd(&n);
        let mult = mw / mw.gcd(&n);
        // 2 - 2g = [(2 - delta) (m_w, n) + sum over adjacent (m_w, m_v, n)]
        //          / (M_w, n)
        let delta = base.degree(w) as i128;
        let mut num = (2 - delta) * mw.gcd(&n) as i128;
        for v in base.neighbors(w) {
            num += mw.gcd(&mult_of(base, v)?).gcd(&n) as i128;
        }
        for a in base.arrows_at(w) {
            num += mw.gcd(&a.multiplicity).gcd(&n) as i128;
        }
        if num % copies as i128 != 0 || (num / copies as i128) % 2 != 0 {
            return Err(GraphError::Internal(format!("genus formula fails over {w}")));
        }
        let genus = (2 - num / copies as i128) / 2;
        if genus < 0 {
            return Err(GraphError::Internal(format!("negative genus over {w}")));
        }
        let lifts = (0..copies)
            .map(|_| {
                let v = g.push_vertex(VertexData {
                    e: 0, // filled in below from the multiplicity identity
                    genus: genus as u32,
                    multiplicity: Some(mult),
                });
                v
            })
            .collect();
        fibers.insert(w, lifts);
    }

    // lays a string between two lifted vertices, or an edge when empty
    let lay = |g: &mut DecoratedGraph,
                   left: VertexId,
                   st: &StringModel,
                   right: Option<VertexId>|
     -> Result<Option<VertexId>> {
        let mut prev = left;
        for (i, &k) in st.quotients.iter().enumerate() {
            let v = g.push_vertex(VertexData {
                e: -(k as i64),
                genus: 0,
                multiplicity: Some(st.mults[i]),
            });
            g.add_edge(prev, v)?;
            prev = v;
        }
        match right {
            Some(r) => {
                g.add_edge(prev, r)?;
                Ok(None)
            }
            None => Ok(Some(prev)),
        }
    };

    // (b) edges
    for (w1, w2) in base.edges() {
        let (m1, m2) = (mult_of(base, w1)?, mult_of(base, w2)?);
        let ce = m1.gcd(&m2).gcd(&n);
        let st = string_model(m1 / ce, m2 / ce, n / ce)?;
        let (f1, f2) = (&fibers[&w1], &fibers[&w2]);
        for j in 0..ce as usize {
            let left = f1[j % f1.len()];
            let right = f2[j % f2.len()];
            lay(&mut g, left, &st, Some(right)).map_err(|e| match e {
                GraphError::DuplicateEdge(..) => GraphError::InvalidInput(
                    "covering graph is not a tree".into(),
                ),
                e => e,
            })?;
        }
    }

    // (c) arrowheads
    for arrow in base.arrows() {
        if arrow.multiplicity != 1 {
            return Err(GraphError::InvalidInput(
                "covering algorithm expects reduced (multiplicity 1) arrowheads".into(),
            ));
        }
        let f = &fibers[&arrow.vertex];
        if f.len() != 1 {
            return Err(GraphError::Internal("arrowhead forces a unique lift".into()));
        }
        let st = string_model(mult_of(base, arrow.vertex)?, 1, n)?;
        let end = lay(&mut g, f[0], &st, None)?.unwrap();
        g.add_arrow(end, 1)?;
    }

    // (d) self-intersections of the lifted vertices
    for lifts in fibers.values() {
        for &v in lifts {
            let m = mult_of(&g, v)? as i128;
            let mut total: i128 = 0;
            for u in g.neighbors(v) {
                total += mult_of(&g, u)? as i128;
            }
            for a in g.arrows_at(v) {
                total += a.multiplicity as i128;
            }
            if total % m != 0 || total / m == 0 {
                return Err(GraphError::Internal(format!(
                    "multiplicity identity has no integral solution at lift {v}"
                )));
            }
            g.data_mut(v)?.e = i64::try_from(-total / m)
                .map_err(|_| GraphError::Overflow("cyclic_cover"))?;
        }
    }
    Ok(CoverGraph { graph: g, fibers })
}

/// Canonical embedded resolution graph of `{f + z^n = 0}` together with the
/// base curve graph it covers.
pub struct SuspensionCover {
    pub curve: CurveGraph,
    pub cover: CoverGraph,
}

/// Builds `Gamma^can(X_{f,n}, z)` for the plane curve with the given Newton
/// pairs.
pub fn suspension_canonical(pairs: &[NewtonPair], n: u64) -> Result<SuspensionCover> {
    if n < 2 {
        return Err(GraphError::InvalidInput("suspension exponent must be at least 2".into()));
    }
    let curve = plane_curve_graph(pairs)?;
    let cover = cyclic_cover(&curve.graph, n)?;
    Ok(SuspensionCover { curve, cover })
}

/// Minimal resolution graph `Gamma^min(X)` (arrowheads and multiplicities
/// forgotten before contracting).
pub fn suspension_minimal(pairs: &[NewtonPair], n: u64) -> Result<DecoratedGraph> {
    let sc = suspension_canonical(pairs, n)?;
    Ok(minimalize(&sc.cover.graph.without_embedding()))
}

/// Minimal embedded resolution graph `Gamma^min(X, z)` (arrowheads kept).
pub fn suspension_minimal_embedded(pairs: &[NewtonPair], n: u64) -> Result<DecoratedGraph> {
    let sc = suspension_canonical(pairs, n)?;
    Ok(minimalize(&sc.cover.graph))
}
