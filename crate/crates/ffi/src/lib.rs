//! C ABI for the suspgraph library.
//!
//! Graphs are exchanged as opaque handles; every fallible call returns an
//! [`SgStatus`] and writes its result through an out-pointer. Strings
//! returned by the library must be released with [`sg_string_free`] and
//! graphs with [`sg_graph_free`].

use std::collections::BTreeMap;
use std::ffi::{c_char, c_int, CStr, CString};
use std::str::FromStr;

use num_bigint::BigInt;

use suspgraph::blowdown::minimalize;
use suspgraph::cover::{suspension_canonical, suspension_minimal, suspension_minimal_embedded};
use suspgraph::curve::plane_curve_graph;
use suspgraph::recover::{recover, recover_with_milnor, Candidate, Recovery};
use suspgraph::{doc, DecoratedGraph, NewtonPair};

/// Opaque decorated plumbing graph.
pub struct SgGraph(DecoratedGraph);

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStatus {
    /// The call succeeded.
    SgOk = 0,
    /// A pointer argument was null.
    SgNullPointer = 1,
    /// A string argument was not valid UTF-8.
    SgInvalidUtf8 = 2,
    /// The input could not be parsed or violates a precondition.
    SgInvalidInput = 3,
    /// The graph is not the resolution graph of any suspension singularity.
    SgNotRealizable = 4,
}

fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, SgStatus> {
    if ptr.is_null() {
        return Err(SgStatus::SgNullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| SgStatus::SgInvalidUtf8)
}

fn graph_arg<'a>(ptr: *const SgGraph) -> Result<&'a DecoratedGraph, SgStatus> {
    if ptr.is_null() {
        return Err(SgStatus::SgNullPointer);
    }
    Ok(unsafe { &(*ptr).0 })
}

fn write_graph(out: *mut *mut SgGraph, g: DecoratedGraph) -> SgStatus {
    if out.is_null() {
        return SgStatus::SgNullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(SgGraph(g))) };
    SgStatus::SgOk
}

fn write_string(out: *mut *mut c_char, s: String) -> SgStatus {
    if out.is_null() {
        return SgStatus::SgNullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SgStatus::SgOk
        }
        Err(_) => SgStatus::SgInvalidInput,
    }
}

fn parse_pairs(text: &str) -> Result<Vec<NewtonPair>, SgStatus> {
    text.split(',')
        .map(|tok| {
            let (p, q) = tok.split_once(':').ok_or(SgStatus::SgInvalidInput)?;
            Ok(NewtonPair::new(
                p.trim().parse().map_err(|_| SgStatus::SgInvalidInput)?,
                q.trim().parse().map_err(|_| SgStatus::SgInvalidInput)?,
            ))
        })
        .collect()
}

fn status(r: Result<SgStatus, SgStatus>) -> SgStatus {
    r.unwrap_or_else(|s| s)
}

/// Parses a graph from the `version 1` text format.
#[no_mangle]
pub extern "C" fn sg_graph_parse(text: *const c_char, out: *mut *mut SgGraph) -> SgStatus {
    status((|| {
        let text = str_arg(text)?;
        let d = doc::parse(text).map_err(|_| SgStatus::SgInvalidInput)?;
        Ok(write_graph(out, d.graph))
    })())
}

/// Serializes a graph into the `version 1` text format.
#[no_mangle]
pub extern "C" fn sg_graph_serialize(g: *const SgGraph, out: *mut *mut c_char) -> SgStatus {
    status((|| {
        let g = graph_arg(g)?;
        Ok(write_string(out, doc::serialize(g, &BTreeMap::new())))
    })())
}

/// Releases a graph handle. Null is ignored.
#[no_mangle]
pub extern "C" fn sg_graph_free(g: *mut SgGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Number of vertices in the graph.
#[no_mangle]
pub extern "C" fn sg_graph_vertex_count(g: *const SgGraph, out: *mut usize) -> SgStatus {
    status((|| {
        let g = graph_arg(g)?;
        if out.is_null() {
            return Err(SgStatus::SgNullPointer);
        }
        unsafe { *out = g.len() };
        Ok(SgStatus::SgOk)
    })())
}

/// Determinant det(-I) of the graph, as a decimal string.
#[no_mangle]
pub extern "C" fn sg_graph_determinant(g: *const SgGraph, out: *mut *mut c_char) -> SgStatus {
    status((|| {
        let g = graph_arg(g)?;
        Ok(write_string(out, g.determinant().to_string()))
    })())
}

/// Blows down all contractible (-1)-vertices.
#[no_mangle]
pub extern "C" fn sg_graph_minimalize(g: *const SgGraph, out: *mut *mut SgGraph) -> SgStatus {
    status((|| {
        let g = graph_arg(g)?;
        Ok(write_graph(out, minimalize(g)))
    })())
}

/// Minimal embedded resolution graph of the plane curve with the given
/// Newton pairs (`"p:q,p:q,..."`).
#[no_mangle]
pub extern "C" fn sg_plane_curve(pairs: *const c_char, out: *mut *mut SgGraph) -> SgStatus {
    status((|| {
        let pairs = parse_pairs(str_arg(pairs)?)?;
        let c = plane_curve_graph(&pairs).map_err(|_| SgStatus::SgInvalidInput)?;
        Ok(write_graph(out, c.graph))
    })())
}

/// Resolution graph of the suspension `{f + z^n = 0}`. `minimal` selects the
/// blown-down graph (otherwise the canonical covering graph is returned) and
/// `with_arrow` keeps the arrowhead and multiplicities of `z`.
#[no_mangle]
pub extern "C" fn sg_suspend(
    pairs: *const c_char,
    n: u64,
    minimal: c_int,
    with_arrow: c_int,
    out: *mut *mut SgGraph,
) -> SgStatus {
    status((|| {
        let pairs = parse_pairs(str_arg(pairs)?)?;
        let bad = |_| SgStatus::SgInvalidInput;
        let g = if minimal == 0 {
            let sc = suspension_canonical(&pairs, n).map_err(bad)?;
            if with_arrow != 0 {
                sc.cover.graph
            } else {
                sc.cover.graph.without_embedding()
            }
        } else if with_arrow != 0 {
            suspension_minimal_embedded(&pairs, n).map_err(bad)?
        } else {
            suspension_minimal(&pairs, n).map_err(bad)?
        };
        Ok(write_graph(out, g))
    })())
}

fn describe(r: &Recovery) -> String {
    fn line(c: &Candidate) -> String {
        let pairs = c
            .pairs
            .iter()
            .map(|p| format!("{}:{}", p.p, p.q))
            .collect::<Vec<_>>()
            .join(",");
        format!("candidate pairs={pairs} n={}\n", c.n)
    }
    match r {
        Recovery::Unique(c) => format!("outcome unique\n{}", line(c)),
        Recovery::S1Family(cs) => {
            let mut s = String::from("outcome s1-family\n");
            for c in cs {
                s.push_str(&line(c));
            }
            s
        }
        Recovery::S2Pair(a, b) => format!("outcome s2-pair\n{}{}", line(a), line(b)),
        Recovery::NotRealizable => "outcome not-realizable\n".into(),
    }
}

/// Recovers the Newton pairs and `n` from a minimal resolution graph. The
/// optional decimal `milnor` number (null to skip) resolves ambiguous
/// families. The result is written as text, one `candidate ...` line per
/// solution after an `outcome ...` line.
#[no_mangle]
pub extern "C" fn sg_recover(
    g: *const SgGraph,
    milnor: *const c_char,
    out: *mut *mut c_char,
) -> SgStatus {
    status((|| {
        let g = graph_arg(g)?;
        let r = if milnor.is_null() {
            recover(g)
        } else {
            let mu = BigInt::from_str(str_arg(milnor)?).map_err(|_| SgStatus::SgInvalidInput)?;
            recover_with_milnor(g, &mu)
        }
        .map_err(|_| SgStatus::SgInvalidInput)?;
        let not_realizable = matches!(r, Recovery::NotRealizable);
        match write_string(out, describe(&r)) {
            SgStatus::SgOk if not_realizable => Ok(SgStatus::SgNotRealizable),
            other => Ok(other),
        }
    })())
}
