//! Plain-text serialization of decorated graphs.
//!
//! The format is line based:
//!
//! ```text
//! version 1
//! # a comment
//! v 0 e=-2 g=0 m=6
//! v 1 e=-3
//! edge 0 1
//! arrow 0 m=1
//! mark root 0
//! ```
//!
//! `v` declares a vertex with its Euler number `e`, optional genus `g`
//! (default 0) and optional multiplicity `m`. `edge` joins two vertices,
//! `arrow` attaches an arrowhead with multiplicity `m`, and `mark` gives a
//! vertex a symbolic name. `#` starts a comment; blank lines are ignored.

use std::collections::BTreeMap;

use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, VertexData, VertexId};

/// A parsed document: the graph plus its named vertices.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub graph: DecoratedGraph,
    pub marks: BTreeMap<String, VertexId>,
}

fn bad(line_no: usize, msg: impl Into<String>) -> GraphError {
    GraphError::InvalidInput(format!("line {}: {}", line_no, msg.into()))
}

fn parse_kv<'a>(token: &'a str, key: &str, line_no: usize) -> Result<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| bad(line_no, format!("expected `{key}=...`, found `{token}`")))
}

/// Parses a document in the text format.
pub fn parse(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    let mut saw_version = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        if !saw_version {
            if head != "version" || tokens.next() != Some("1") {
                return Err(bad(line_no, "expected `version 1` header"));
            }
            saw_version = true;
            continue;
        }
        match head {
            "v" => {
                let id: u32 = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(line_no, "expected vertex id"))?;
                let mut data = VertexData::new(0);
                let mut saw_e = false;
                for tok in tokens {
                    if tok.starts_with("e=") {
                        data.e = parse_kv(tok, "e", line_no)?
                            .parse()
                            .map_err(|_| bad(line_no, "bad euler number"))?;
                        saw_e = true;
                    } else if tok.starts_with("g=") {
                        data.genus = parse_kv(tok, "g", line_no)?
                            .parse()
                            .map_err(|_| bad(line_no, "bad genus"))?;
                    } else if tok.starts_with("m=") {
                        data.multiplicity = Some(
                            parse_kv(tok, "m", line_no)?
                                .parse()
                                .map_err(|_| bad(line_no, "bad multiplicity"))?,
                        );
                    } else {
                        return Err(bad(line_no, format!("unknown attribute `{tok}`")));
                    }
                }
                if !saw_e {
                    return Err(bad(line_no, "vertex needs an euler number `e=...`"));
                }
                doc.graph.add_vertex(VertexId(id), data)?;
            }
            "edge" => {
                let mut id = || -> Result<VertexId> {
                    tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .map(VertexId)
                        .ok_or_else(|| bad(line_no, "expected vertex id"))
                };
                let (a, b) = (id()?, id()?);
                doc.graph.add_edge(a, b)?;
            }
            "arrow" => {
                let v: u32 = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(line_no, "expected vertex id"))?;
                let m: u64 = tokens
                    .next()
                    .ok_or_else(|| bad(line_no, "expected `m=...`"))
                    .and_then(|t| parse_kv(t, "m", line_no))?
                    .parse()
                    .map_err(|_| bad(line_no, "bad multiplicity"))?;
                if m == 0 {
                    return Err(bad(line_no, "arrow multiplicity must be positive"));
                }
                doc.graph.add_arrow(VertexId(v), m)?;
            }
            "mark" => {
                let name = tokens
                    .next()
                    .ok_or_else(|| bad(line_no, "expected mark name"))?
                    .to_string();
                let v: u32 = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(line_no, "expected vertex id"))?;
                if !doc.graph.contains(VertexId(v)) {
                    return Err(bad(line_no, format!("unknown vertex {v}")));
                }
                doc.marks.insert(name, VertexId(v));
            }
            other => return Err(bad(line_no, format!("unknown directive `{other}`"))),
        }
    }
    if !saw_version {
        return Err(GraphError::InvalidInput("missing `version 1` header".into()));
    }
    Ok(doc)
}

/// Serializes a graph (plus optional marks) back into the text format.
pub fn serialize(graph: &DecoratedGraph, marks: &BTreeMap<String, VertexId>) -> String {
    let mut out = String::from("version 1\n");
    for (v, d) in graph.vertices() {
        out.push_str(&format!("v {} e={}", v.0, d.e));
        if d.genus > 0 {
            out.push_str(&format!(" g={}", d.genus));
        }
        if let Some(m) = d.multiplicity {
            out.push_str(&format!(" m={m}"));
        }
        out.push('\n');
    }
    for (a, b) in graph.edges() {
        out.push_str(&format!("edge {} {}\n", a.0, b.0));
    }
    for a in graph.arrows() {
        out.push_str(&format!("arrow {} m={}\n", a.vertex.0, a.multiplicity));
    }
    for (name, v) in marks {
        out.push_str(&format!("mark {} {}\n", name, v.0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "version 1\n\
                    # cusp\n\
                    v 0 e=-3 m=2\n\
                    v 1 e=-1 g=2 m=6\n\
                    v 2 e=-2 m=3\n\
                    edge 0 1\n\
                    edge 1 2\n\
                    arrow 1 m=1\n\
                    mark node 1\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.graph.len(), 3);
        assert_eq!(doc.graph.data(VertexId(1)).unwrap().genus, 2);
        assert_eq!(doc.graph.data(VertexId(0)).unwrap().multiplicity, Some(2));
        assert_eq!(doc.marks["node"], VertexId(1));
        let text2 = serialize(&doc.graph, &doc.marks);
        let doc2 = parse(&text2).unwrap();
        assert_eq!(doc.graph, doc2.graph);
        assert_eq!(doc.marks, doc2.marks);
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = parse("version 1\n\n# nothing\nv 5 e=-2\n").unwrap();
        assert_eq!(doc.graph.len(), 1);
        assert_eq!(doc.graph.data(VertexId(5)).unwrap().e, -2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("v 0 e=-2\n").is_err()); // missing header
        assert!(parse("version 2\n").is_err());
        assert!(parse("version 1\nv 0\n").is_err()); // no euler number
        assert!(parse("version 1\nv 0 e=-2\nv 0 e=-3\n").is_err()); // dup
        assert!(parse("version 1\nedge 0 1\n").is_err()); // unknown vertices
        assert!(parse("version 1\nv 0 e=-2\narrow 0 m=0\n").is_err());
        assert!(parse("version 1\nwat 1 2\n").is_err());
        assert!(parse("version 1\nv 0 e=-2\nmark x 3\n").is_err());
    }
}
