//! Decorated plumbing graphs: vertices carry a self-intersection number and a
//! genus, optionally a multiplicity; arrowheads model the strict transform.
//! Structural queries and the exact intersection-form computations live here.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GraphError, Result};
use crate::matrix::IntMatrix;

/// Identifier of a vertex; stable across mutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Decorations of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexData {
    /// Self-intersection number (Euler number) of the vertex.
    pub e: i64,
    /// Genus of the corresponding exceptional curve.
    pub genus: u32,
    /// Multiplicity decoration, if the graph is embedded (carries a function).
    pub multiplicity: Option<u64>,
}

impl VertexData {
    pub fn new(e: i64) -> Self {
        VertexData { e, genus: 0, multiplicity: None }
    }

    pub fn with_genus(e: i64, genus: u32) -> Self {
        VertexData { e, genus, multiplicity: None }
    }
}

/// An arrowhead attached to a vertex, with the multiplicity of the strict
/// transform it represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub vertex: VertexId,
    pub multiplicity: u64,
}

/// Summary of the first homology of the plumbed 3-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    /// Invariant factors > 1, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// Rank of the free part.
    pub free_rank: usize,
}

impl HomologySummary {
    pub fn is_rational_sphere(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_integral_sphere(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// A decorated graph. Edges are unordered, at most one per vertex pair, no
/// loops; arrowheads are kept separately and count toward vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecoratedGraph {
    vertices: BTreeMap<VertexId, VertexData>,
    edges: BTreeSet<(VertexId, VertexId)>,
    arrows: Vec<Arrow>,
}

impl DecoratedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: VertexId, data: VertexData) -> Result<()> {
        if self.vertices.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.vertices.insert(id, data);
        Ok(())
    }

    /// Adds a vertex with the smallest unused id and returns it.
    pub fn push_vertex(&mut self, data: VertexData) -> VertexId {
        let id = VertexId(self.vertices.keys().last().map_or(0, |v| v.0 + 1));
        self.vertices.insert(id, data);
        id
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let key = if a < b { (a, b) } else { (b, a) };
        if !self.edges.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        Ok(())
    }

    pub fn add_arrow(&mut self, vertex: VertexId, multiplicity: u64) -> Result<()> {
        self.check_vertex(vertex)?;
        self.arrows.push(Arrow { vertex, multiplicity });
        self.arrows.sort();
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.vertices.contains_key(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn data(&self, v: VertexId) -> Result<&VertexData> {
        self.vertices.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn data_mut(&mut self, v: VertexId) -> Result<&mut VertexData> {
        self.vertices.get_mut(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, &VertexData)> {
        self.vertices.iter().map(|(&v, d)| (v, d))
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrows_at(&self, v: VertexId) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.vertex == v)
    }

    pub fn arrow_count_at(&self, v: VertexId) -> usize {
        self.arrows_at(v).count()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }

    /// Number of incident edges, arrowheads not counted.
    pub fn edge_degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Degree in the decorated sense: edges plus arrowheads.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edge_degree(v) + self.arrow_count_at(v)
    }

    /// Removes the edge between `a` and `b`.
    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        let key = if a < b { (a, b) } else { (b, a) };
        if self.edges.remove(&key) {
            Ok(())
        } else {
            Err(GraphError::InvalidInput(format!("no edge between {a} and {b}")))
        }
    }

    /// Removes a vertex together with its incident edges and arrowheads.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<VertexData> {
        let data = self.vertices.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        self.edges.retain(|&(a, b)| a != v && b != v);
        self.arrows.retain(|a| a.vertex != v);
        Ok(data)
    }

    /// Connected components (edges only; arrowheads do not connect anything).
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices.keys().copied() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Number of independent cycles of the underlying graph.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertices.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.cycle_rank() == 0
    }

    pub fn is_forest(&self) -> bool {
        self.cycle_rank() == 0
    }

    pub fn total_genus(&self) -> u64 {
        self.vertices.values().map(|d| d.genus as u64).sum()
    }

    /// The unique simple path between two vertices of a forest, endpoints
    /// included. `None` if they lie in different components.
    pub fn path_between(&self, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        let mut prev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        let mut seen = BTreeSet::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    prev.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Subgraph induced on `keep`; arrowheads at kept vertices survive.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> DecoratedGraph {
        let mut g = DecoratedGraph::new();
        for (&v, d) in &self.vertices {
            if keep.contains(&v) {
                g.vertices.insert(v, *d);
            }
        }
        for &(a, b) in &self.edges {
            if keep.contains(&a) && keep.contains(&b) {
                g.edges.insert((a, b));
            }
        }
        g.arrows = self.arrows.iter().filter(|a| keep.contains(&a.vertex)).copied().collect();
        g
    }

    /// Forgets arrowheads and multiplicities, keeping the plumbing data only.
    pub fn without_embedding(&self) -> DecoratedGraph {
        let mut g = self.clone();
        g.arrows.clear();
        for d in g.vertices.values_mut() {
            d.multiplicity = None;
        }
        g
    }

    /// Minimal connected subgraph of a forest containing `targets`: repeatedly
    /// prunes leaves outside the target set.
    pub fn spanning_subtree(&self, targets: &BTreeSet<VertexId>) -> DecoratedGraph {
        let mut keep: BTreeSet<VertexId> = self.vertex_ids().collect();
        loop {
            let prune: Vec<VertexId> = keep
                .iter()
                .copied()
                .filter(|&v| {
                    !targets.contains(&v)
                        && self.neighbors(v).iter().filter(|w| keep.contains(w)).count() <= 1
                })
                .collect();
            if prune.is_empty() {
                break;
            }
            for v in prune {
                keep.remove(&v);
            }
        }
        self.induced_subgraph(&keep)
    }

    // ----- intersection form -----

    /// The intersection matrix together with the row/column vertex order.
    pub fn intersection_matrix(&self) -> (IntMatrix, Vec<VertexId>) {
        let order: Vec<VertexId> = self.vertex_ids().collect();
        let index: BTreeMap<VertexId, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut m = IntMatrix::zero(order.len());
        for (i, &v) in order.iter().enumerate() {
            *m.at_mut(i, i) = BigInt::from(self.vertices[&v].e);
        }
        for &(a, b) in &self.edges {
            let (i, j) = (index[&a], index[&b]);
            *m.at_mut(i, j) = BigInt::one();
            *m.at_mut(j, i) = BigInt::one();
        }
        (m, order)
    }

    /// Rooted elimination data for a forest: for every vertex the
    /// determinants `A_v` of `-I` restricted to the subtree below `v` and
    /// `B_v` of the subtree minus `v`, plus the DFS pre-order with parents
    /// (`usize::MAX` for roots). `None` when the graph has a cycle.
    #[allow(clippy::type_complexity)]
    fn forest_elimination(&self) -> Option<(Vec<(BigInt, BigInt)>, Vec<(usize, usize)>, Vec<VertexId>)> {
        if !self.is_forest() {
            return None;
        }
        let ids: Vec<VertexId> = self.vertex_ids().collect();
        let n = ids.len();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            let (i, j) = (index[&a], index[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        // DFS pre-order over all components
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let first = order.len();
            order.push((start, usize::MAX));
            let mut i = first;
            while i < order.len() {
                let (v, p) = order[i];
                for &c in &adj[v] {
                    if c != p {
                        seen[c] = true;
                        order.push((c, v));
                    }
                }
                i += 1;
            }
        }
        let mut parent = vec![usize::MAX; n];
        for &(v, p) in &order {
            parent[v] = p;
        }
        let mut ab = vec![(BigInt::zero(), BigInt::zero()); n];
        for &(v, p) in order.iter().rev() {
            let w = BigInt::from(-self.vertices[&ids[v]].e);
            let mut prod = BigInt::one();
            let mut sum = BigInt::zero();
            for &c in &adj[v] {
                if c != p {
                    let (ac, bc) = &ab[c];
                    sum = sum * ac + bc * &prod;
                    prod *= ac;
                }
            }
            ab[v] = (w * &prod - sum, prod);
        }
        Some((ab, order, ids))
    }

    /// `det(-I)` where `I` is the intersection matrix; 1 for the empty graph.
    pub fn determinant(&self) -> BigInt {
        if let Some((ab, order, _)) = self.forest_elimination() {
            let mut det = BigInt::one();
            for &(v, p) in &order {
                if p == usize::MAX {
                    det *= &ab[v].0;
                }
            }
            return det;
        }
        self.intersection_matrix().0.negated().determinant()
    }

    /// Determinant of the subgraph obtained by deleting `removed`.
    pub fn determinant_without(&self, removed: &BTreeSet<VertexId>) -> BigInt {
        let keep: BTreeSet<VertexId> =
            self.vertex_ids().filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep).determinant()
    }

    pub fn is_negative_definite(&self) -> bool {
        if let Some((ab, _, _)) = self.forest_elimination() {
            // leaves-first elimination has positive pivots A_v / B_v iff all
            // subtree determinants are positive
            return ab.iter().all(|(a, _)| a.is_positive());
        }
        self.intersection_matrix().0.negated().is_positive_definite()
    }

    /// First homology of the plumbed 3-manifold: `coker(I)` plus a free part
    /// of rank `2 * total genus + cycle rank`.
    pub fn first_homology(&self) -> HomologySummary {
        let (m, _) = self.intersection_matrix();
        let factors = m.smith_invariant_factors();
        let zero = factors.iter().filter(|f| f.is_zero()).count();
        let torsion =
            factors.into_iter().filter(|f| !f.is_zero() && !f.is_one()).collect();
        HomologySummary {
            torsion,
            free_rank: zero + 2 * self.total_genus() as usize + self.cycle_rank(),
        }
    }

    /// Entry `(I^{-1})_{w1 w2}` for a tree, via subgraph determinants: it is
    /// `-det(G - path(w1, w2)) / det(G)` with determinants taken of `-I`.
    pub fn inverse_entry(&self, w1: VertexId, w2: VertexId) -> Result<BigRational> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        let path = self
            .path_between(w1, w2)
            .ok_or(GraphError::UnknownVertex(w1))?;
        let removed: BTreeSet<VertexId> = path.into_iter().collect();
        let num = self.determinant_without(&removed);
        let den = self.determinant();
        if den.is_zero() {
            return Err(GraphError::NotNegativeDefinite);
        }
        Ok(BigRational::new(-num, den))
    }

    /// Solves the multiplicity system `I * m + m_A = 0` (the arrowheads supply
    /// `m_A`) and returns a copy of the graph with multiplicities filled in.
    /// Fails unless the solution is positive and integral.
    pub fn solve_multiplicities(&self) -> Result<DecoratedGraph> {
        if let Some(sol) = self.solve_multiplicities_tree() {
            return sol;
        }
        let (m, order) = self.intersection_matrix();
        let mut rhs = vec![BigInt::zero(); order.len()];
        for a in &self.arrows {
            let i = order.iter().position(|&v| v == a.vertex).unwrap();
            rhs[i] -= BigInt::from(a.multiplicity);
        }
        let sol = m.solve(&rhs).ok_or(GraphError::NotNegativeDefinite)?;
        let mut g = self.clone();
        for (i, v) in order.iter().enumerate() {
            if !sol[i].is_integer() || !sol[i].is_positive() {
                return Err(GraphError::NonIntegralSolution);
            }
            let value = sol[i]
                .to_integer()
                .to_u64()
                .ok_or(GraphError::Overflow("solve_multiplicities"))?;
            g.vertices.get_mut(v).unwrap().multiplicity = Some(value);
        }
        Ok(g)
    }

    /// Linear-time multiplicity solve on forests by two-pass elimination:
    /// every vertex satisfies `m_v = alpha_v + beta_v * m_parent`. Returns
    /// `None` (falling back to the dense solver) on cycles or zero pivots.
    fn solve_multiplicities_tree(&self) -> Option<Result<DecoratedGraph>> {
        let (_, order, ids) = self.forest_elimination()?;
        let n = ids.len();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut arrow_sum = vec![BigInt::zero(); n];
        for a in &self.arrows {
            arrow_sum[index[&a.vertex]] += BigInt::from(a.multiplicity);
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            let (i, j) = (index[&a], index[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        // upward pass
        let zero = BigRational::zero();
        let mut alpha = vec![zero.clone(); n];
        let mut beta = vec![zero.clone(); n];
        for &(v, p) in order.iter().rev() {
            let mut pivot = BigRational::from(BigInt::from(self.vertices[&ids[v]].e));
            let mut rhs = BigRational::from(-&arrow_sum[v]);
            for &c in &adj[v] {
                if c != p {
                    pivot += &beta[c];
                    rhs -= &alpha[c];
                }
            }
            if pivot.is_zero() {
                return None;
            }
            alpha[v] = rhs / &pivot;
            beta[v] = -(BigRational::one() / pivot);
        }
        // downward pass
        let mut sol = vec![zero; n];
        for &(v, p) in &order {
            sol[v] = if p == usize::MAX {
                alpha[v].clone()
            } else {
                &alpha[v] + &beta[v] * &sol[p]
            };
        }
        let mut g = self.clone();
        for (v, value) in ids.iter().zip(&sol) {
            if !value.is_integer() || !value.is_positive() {
                return Some(Err(GraphError::NonIntegralSolution));
            }
            let Some(value) = value.to_integer().to_u64() else {
                return Some(Err(GraphError::Overflow("solve_multiplicities")));
            };
            g.vertices.get_mut(v).unwrap().multiplicity = Some(value);
        }
        Some(Ok(g))
    }

    /// Checks the multiplicity identity `e_w m_w + sum of neighbor and
    /// arrowhead multiplicities = 0` at every vertex.
    pub fn multiplicities_consistent(&self) -> bool {
        self.vertices.iter().all(|(&w, d)| {
            let Some(mw) = d.multiplicity else { return false };
            let mut total = BigInt::from(d.e) * BigInt::from(mw);
            for v in self.neighbors(w) {
                match self.vertices[&v].multiplicity {
                    Some(mv) => total += BigInt::from(mv),
                    None => return false,
                }
            }
            for a in self.arrows_at(w) {
                total += BigInt::from(a.multiplicity);
            }
            total.is_zero()
        })
    }
}
