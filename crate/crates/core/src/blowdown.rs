//! Blow-down calculus: contracting (-1)-vertices and computing minimal
//! models. Contraction keeps multiplicity decorations valid and reattaches
//! arrowheads to the surviving neighbor.

use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, VertexId};

/// True iff `v` may be blown down: rational, self-intersection -1, and of
/// degree at most two counting arrowheads.
pub fn is_contractible(g: &DecoratedGraph, v: VertexId) -> bool {
    let Ok(d) = g.data(v) else { return false };
    if d.e != -1 || d.genus != 0 || g.degree(v) > 2 {
        return false;
    }
    let nbrs = g.neighbors(v);
    let arrows = g.arrow_count_at(v);
    // an arrowhead must have somewhere to land after the contraction
    if arrows > 0 && nbrs.is_empty() {
        return false;
    }
    // contracting between already-adjacent vertices would create a cycle
    if nbrs.len() == 2 && g.has_edge(nbrs[0], nbrs[1]) {
        return false;
    }
    true
}

/// Blows down `v`, modifying the graph in place.
pub fn blow_down(g: &mut DecoratedGraph, v: VertexId) -> Result<()> {
    if !is_contractible(g, v) {
        return Err(GraphError::NotContractible(v));
    }
    let nbrs = g.neighbors(v);
    let arrows: Vec<u64> = g.arrows_at(v).map(|a| a.multiplicity).collect();
    g.remove_vertex(v)?;
    for &w in &nbrs {
        g.data_mut(w)?.e += 1;
    }
    match nbrs.as_slice() {
        [a, b] => g.add_edge(*a, *b)?,
        [a] => {
            for m in arrows {
                g.add_arrow(*a, m)?;
            }
        }
        _ => {}
    }
    Ok(())
}

/// Contracts until no (-1)-vertex is contractible. The order (smallest id
/// first) is fixed for determinism; the result is independent of it.
pub fn minimalize(g: &DecoratedGraph) -> DecoratedGraph {
    let mut g = g.clone();
    loop {
        let Some(v) = g.vertex_ids().find(|&v| is_contractible(&g, v)) else {
            return g;
        };
        blow_down(&mut g, v).expect("contractible vertex must blow down");
    }
}

/// True iff the graph has no contractible vertex.
pub fn is_minimal(g: &DecoratedGraph) -> bool {
    !g.vertex_ids().any(|v| is_contractible(g, v))
}
