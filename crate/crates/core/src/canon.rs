//! Canonical forms for decorated forests (AHU encoding rooted at tree
//! centers) and the isomorphism test built on them.

use std::collections::BTreeSet;

use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, VertexId};

/// Label of a vertex as it enters the encoding: self-intersection, genus,
/// multiplicity (or None) and the sorted arrowhead multiplicities.
fn label(g: &DecoratedGraph, v: VertexId) -> String {
    let d = g.data(v).unwrap();
    let mut arrows: Vec<u64> = g.arrows_at(v).map(|a| a.multiplicity).collect();
    arrows.sort_unstable();
    let m = match d.multiplicity {
        Some(m) => m.to_string(),
        None => "_".into(),
    };
    format!(
        "{};{};{};{}",
        d.e,
        d.genus,
        m,
        arrows.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    )
}

fn encode(g: &DecoratedGraph, v: VertexId, parent: Option<VertexId>) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .into_iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| encode(g, w, Some(v)))
        .collect();
    children.sort();
    format!("({}{})", label(g, v), children.concat())
}

/// Centers of a tree component: the one or two vertices left after repeated
/// leaf removal.
fn centers(g: &DecoratedGraph, comp: &[VertexId]) -> Vec<VertexId> {
    let mut alive: BTreeSet<VertexId> = comp.iter().copied().collect();
    while alive.len() > 2 {
        let leaves: Vec<VertexId> = alive
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().filter(|w| alive.contains(w)).count() <= 1)
            .collect();
        for v in leaves {
            alive.remove(&v);
        }
    }
    alive.into_iter().collect()
}

/// Canonical encoding of a decorated forest; equal strings iff the graphs are
/// isomorphic as decorated graphs. Fails on graphs with cycles.
pub fn canonical_form(g: &DecoratedGraph) -> Result<String> {
    if !g.is_forest() {
        return Err(GraphError::NotATree);
    }
    let mut comps: Vec<String> = g
        .components()
        .into_iter()
        .map(|comp| {
            centers(g, &comp)
                .into_iter()
                .map(|c| encode(g, c, None))
                .min()
                .expect("component is nonempty")
        })
        .collect();
    comps.sort();
    Ok(comps.concat())
}

/// Decorated-graph isomorphism for forests.
pub fn are_isomorphic(a: &DecoratedGraph, b: &DecoratedGraph) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexData;

    fn chain(es: &[i64]) -> DecoratedGraph {
        let mut g = DecoratedGraph::new();
        let ids: Vec<VertexId> = es.iter().map(|&e| g.push_vertex(VertexData::new(e))).collect();
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        g
    }

    #[test]
    fn chain_reversal_is_isomorphic() {
        assert!(are_isomorphic(&chain(&[-2, -3, -5]), &chain(&[-5, -3, -2])).unwrap());
        assert!(!are_isomorphic(&chain(&[-2, -3, -5]), &chain(&[-3, -2, -5])).unwrap());
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let mut a = DecoratedGraph::new();
        let v0 = a.push_vertex(VertexData::new(-2));
        let v1 = a.push_vertex(VertexData::new(-7));
        a.add_edge(v0, v1).unwrap();

        let mut b = DecoratedGraph::new();
        b.add_vertex(VertexId(10), VertexData::new(-7)).unwrap();
        b.add_vertex(VertexId(20), VertexData::new(-2)).unwrap();
        b.add_edge(VertexId(10), VertexId(20)).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn decorations_distinguish() {
        let mut a = DecoratedGraph::new();
        a.push_vertex(VertexData::new(-2));
        let mut b = DecoratedGraph::new();
        b.push_vertex(VertexData::with_genus(-2, 1));
        assert!(!are_isomorphic(&a, &b).unwrap());

        let mut c = a.clone();
        c.add_arrow(VertexId(0), 1).unwrap();
        assert!(!are_isomorphic(&a, &c).unwrap());
        let mut d = a.clone();
        d.data_mut(VertexId(0)).unwrap().multiplicity = Some(3);
        assert!(!are_isomorphic(&a, &d).unwrap());
    }

    #[test]
    fn star_arm_order_irrelevant() {
        // two stars with arms attached in different orders
        let build = |arms: &[&[i64]]| {
            let mut g = DecoratedGraph::new();
            let c = g.push_vertex(VertexData::new(-1));
            for arm in arms {
                let mut prev = c;
                for &e in *arm {
                    let v = g.push_vertex(VertexData::new(e));
                    g.add_edge(prev, v).unwrap();
                    prev = v;
                }
            }
            g
        };
        let a = build(&[&[-2, -3], &[-4], &[-5, -6]]);
        let b = build(&[&[-5, -6], &[-2, -3], &[-4]]);
        assert!(are_isomorphic(&a, &b).unwrap());
        let c = build(&[&[-2, -3], &[-4], &[-6, -5]]);
        assert!(!are_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn forest_components_sorted() {
        let mut a = chain(&[-2, -3]);
        let x = a.push_vertex(VertexData::new(-7));
        let _ = x;
        let mut b = DecoratedGraph::new();
        b.push_vertex(VertexData::new(-7));
        let c0 = b.push_vertex(VertexData::new(-3));
        let c1 = b.push_vertex(VertexData::new(-2));
        b.add_edge(c0, c1).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn even_path_has_two_centers() {
        // paths of even length pick the better of the two centers; a
        // symmetric path equals its reverse
        assert!(are_isomorphic(&chain(&[-2, -3, -3, -2]), &chain(&[-2, -3, -3, -2])).unwrap());
        assert!(are_isomorphic(&chain(&[-2, -3, -5, -7]), &chain(&[-7, -5, -3, -2])).unwrap());
    }
}
