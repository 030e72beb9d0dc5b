//! Minimal embedded resolution graph of an irreducible plane curve
//! singularity, built from its Newton pairs.
//!
//! The graph is a horizontal bamboo carrying one arrowhead at its right end,
//! with one vertical bamboo hanging below each node. Writing
//! `p_k/q_k = [u^0_k; u^1_k, ..., u^{t_k}_k]` and
//! `q_k/p_k = [v^0_k; v^1_k, ..., v^{r_k}_k]` as negative continued
//! fractions, the horizontal line is
//!
//! ```text
//! -u^1_1 .. -u^{t_1}_1  (-u^0_2 - 1)  -u^1_2 .. -u^{t_2}_2  ...  -1 ->
//! ```
//!
//! where the `(-u^0_{k+1} - 1)` vertices are the nodes `v_1, ..., v_{s-1}`
//! and the final `-1` vertex is `v_s`, which carries the arrowhead. Below
//! `v_k` hangs the bamboo `-v^{r_k}_k, ..., -v^1_k`, whose leaf is `v'_k`.

use crate::cf::neg_cf;
use crate::error::Result;
use crate::graph::{DecoratedGraph, VertexData, VertexId};
use crate::newton::{a_sequence, p_tail_products, validate_pairs, NewtonPair};

/// The embedded resolution graph together with its distinguished vertices.
#[derive(Debug, Clone)]
pub struct CurveGraph {
    /// Decorated graph with multiplicities filled in and one arrowhead of
    /// multiplicity 1 at `nodes[s-1]`.
    pub graph: DecoratedGraph,
    /// `v'_0, v'_1, ..., v'_s`: the left end of the horizontal line followed
    /// by the leaves of the vertical bamboos.
    pub leaves: Vec<VertexId>,
    /// The nodes `v_1, ..., v_s`.
    pub nodes: Vec<VertexId>,
}

/// Builds the minimal embedded resolution graph of the irreducible plane
/// curve with the given Newton pairs.
pub fn plane_curve_graph(pairs: &[NewtonPair]) -> Result<CurveGraph> {
    validate_pairs(pairs)?;
    let s = pairs.len();
    let mut g = DecoratedGraph::new();
    let mut nodes = Vec::with_capacity(s);
    let mut leaves = Vec::with_capacity(s + 1);

    // horizontal line
    let mut prev: Option<VertexId> = None;
    let link = |g: &mut DecoratedGraph, prev: &mut Option<VertexId>, e: i64| {
        let v = g.push_vertex(VertexData::new(e));
        if let Some(p) = *prev {
            g.add_edge(p, v).unwrap();
        }
        *prev = Some(v);
        v
    };
    for (k, pair) in pairs.iter().enumerate() {
        let u = neg_cf(pair.p, pair.q)?;
        if k > 0 {
            nodes.push(link(&mut g, &mut prev, -(u[0] as i64) - 1));
        }
        for &q in &u[1..] {
            let v = link(&mut g, &mut prev, -(q as i64));
            if k == 0 && leaves.is_empty() {
                leaves.push(v); // v'_0
            }
        }
    }
    nodes.push(link(&mut g, &mut prev, -1));
    g.add_arrow(nodes[s - 1], 1)?;

    // vertical bamboos
    for (k, pair) in pairs.iter().enumerate() {
        let v = neg_cf(pair.q, pair.p)?;
        let mut prev = Some(nodes[k]);
        for &q in v[1..].iter().rev() {
            link(&mut g, &mut prev, -(q as i64));
        }
        leaves.push(prev.unwrap());
    }

    let graph = g.solve_multiplicities()?;
    Ok(CurveGraph { graph, leaves, nodes })
}

/// The closed-form multiplicities of the distinguished vertices:
/// `m(v'_0) = p_1...p_s`, `m(v'_k) = a_k p_{k+1}...p_s` and
/// `m(v_k) = a_k p_k...p_s`.
pub fn distinguished_multiplicities(pairs: &[NewtonPair]) -> Result<(Vec<u64>, Vec<u64>)> {
    let a = a_sequence(pairs)?;
    let tails = p_tail_products(pairs)?;
    let mut leaf_m = vec![tails[0]];
    let mut node_m = Vec::with_capacity(pairs.len());
    for k in 0..pairs.len() {
        leaf_m.push(
            a[k].checked_mul(tails[k + 1])
                .ok_or(crate::error::GraphError::Overflow("multiplicity"))?,
        );
        node_m.push(
            a[k].checked_mul(tails[k])
                .ok_or(crate::error::GraphError::Overflow("multiplicity"))?,
        );
    }
    Ok((leaf_m, node_m))
}
