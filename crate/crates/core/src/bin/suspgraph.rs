//! Command-line front end for the suspgraph library.
//!
//! Exit codes: 0 on success, 1 when a graph is not realizable (or a
//! round-trip fails), 2 on invalid input.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use suspgraph::blowdown::minimalize;
use suspgraph::cover::{suspension_canonical, suspension_minimal, suspension_minimal_embedded};
use suspgraph::curve::plane_curve_graph;
use suspgraph::doc;
use suspgraph::recover::{enumerate_s1_family, recover, recover_with_milnor, Candidate, Recovery};
use suspgraph::{DecoratedGraph, NewtonPair, VertexId};

#[derive(Parser)]
#[command(name = "suspgraph", version, about = "Resolution graphs of suspension singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Input graph file (stdin when omitted)
    #[arg(long = "in", value_name = "FILE")]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal embedded resolution graph of an irreducible plane curve
    PlaneCurve {
        /// Newton pairs as p:q,p:q,...
        #[arg(long)]
        pairs: String,
    },
    /// Resolution graph of the suspension {f + z^n = 0}
    Suspend {
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        n: u64,
        /// Emit the canonical (un-contracted) covering graph
        #[arg(long, conflicts_with = "minimal")]
        canonical: bool,
        /// Emit the minimal graph (default)
        #[arg(long)]
        minimal: bool,
        /// Keep the arrowhead and multiplicities of z
        #[arg(long)]
        with_arrow: bool,
    },
    /// Blow down all contractible (-1)-vertices
    Minimalize(GraphInput),
    /// Recover the Newton pairs and n from a minimal resolution graph
    Recover {
        #[command(flatten)]
        input: GraphInput,
        /// Milnor number used to resolve ambiguous families
        #[arg(long)]
        milnor: Option<String>,
    },
    /// First homology of the plumbed 3-manifold
    Homology(GraphInput),
    /// Determinant det(-I) of the graph or of an induced subgraph
    Det {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex ids of the induced subgraph
        #[arg(long)]
        subgraph: Option<String>,
    },
    /// Construct the minimal graph for (pairs, n) and recover it back
    Roundtrip {
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        n: u64,
    },
    /// Decide whether a graph is realized by a suspension singularity
    Realize(GraphInput),
    /// Brieskorn triples sharing the ambiguous star graph for (g, l)
    EnumerateS1 {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        l: u64,
    },
}

fn parse_pairs(text: &str) -> Result<Vec<NewtonPair>, String> {
    text.split(',')
        .map(|tok| {
            let (p, q) = tok
                .split_once(':')
                .ok_or_else(|| format!("bad pair `{tok}`, expected p:q"))?;
            Ok(NewtonPair::new(
                p.trim().parse().map_err(|_| format!("bad integer in `{tok}`"))?,
                q.trim().parse().map_err(|_| format!("bad integer in `{tok}`"))?,
            ))
        })
        .collect()
}

fn read_graph(input: &GraphInput) -> Result<doc::Document, String> {
    let text = match &input.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        }
    };
    doc::parse(&text).map_err(|e| e.to_string())
}

fn print_graph(graph: &DecoratedGraph, marks: &BTreeMap<String, VertexId>) {
    print!("{}", doc::serialize(graph, marks));
}

fn pairs_string(pairs: &[NewtonPair]) -> String {
    pairs
        .iter()
        .map(|p| format!("{}:{}", p.p, p.q))
        .collect::<Vec<_>>()
        .join(",")
}

fn print_candidate(c: &Candidate) {
    println!("candidate pairs={} n={}", pairs_string(&c.pairs), c.n);
    if c.pairs.len() == 1 {
        let k = suspgraph::recover::z_axis_choices([c.pairs[0].p, c.pairs[0].q, c.n]);
        println!("z-axis-choices {k}");
    }
}

fn print_recovery(r: &Recovery) -> u8 {
    match r {
        Recovery::Unique(c) => {
            println!("outcome unique");
            print_candidate(c);
            0
        }
        Recovery::S1Family(cs) => {
            println!("outcome s1-family");
            for c in cs {
                print_candidate(c);
            }
            0
        }
        Recovery::S2Pair(a, b) => {
            println!("outcome s2-pair");
            print_candidate(a);
            print_candidate(b);
            0
        }
        Recovery::NotRealizable => {
            println!("outcome not-realizable");
            1
        }
    }
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::PlaneCurve { pairs } => {
            let pairs = parse_pairs(&pairs)?;
            let c = plane_curve_graph(&pairs).map_err(|e| e.to_string())?;
            let mut marks = BTreeMap::new();
            for (k, &v) in c.leaves.iter().enumerate() {
                marks.insert(format!("leaf{k}"), v);
            }
            for (k, &v) in c.nodes.iter().enumerate() {
                marks.insert(format!("node{}", k + 1), v);
            }
            print_graph(&c.graph, &marks);
            Ok(0)
        }
        Command::Suspend { pairs, n, canonical, minimal: _, with_arrow } => {
            let pairs = parse_pairs(&pairs)?;
            let graph = if canonical {
                let sc = suspension_canonical(&pairs, n).map_err(|e| e.to_string())?;
                if with_arrow {
                    sc.cover.graph
                } else {
                    sc.cover.graph.without_embedding()
                }
            } else if with_arrow {
                suspension_minimal_embedded(&pairs, n).map_err(|e| e.to_string())?
            } else {
                suspension_minimal(&pairs, n).map_err(|e| e.to_string())?
            };
            print_graph(&graph, &BTreeMap::new());
            Ok(0)
        }
        Command::Minimalize(input) => {
            let d = read_graph(&input)?;
            print_graph(&minimalize(&d.graph), &BTreeMap::new());
            Ok(0)
        }
        Command::Recover { input, milnor } => {
            let d = read_graph(&input)?;
            let r = match milnor {
                Some(mu) => {
                    let mu = BigInt::from_str(&mu).map_err(|_| "bad milnor number".to_string())?;
                    recover_with_milnor(&d.graph, &mu)
                }
                None => recover(&d.graph),
            }
            .map_err(|e| e.to_string())?;
            Ok(print_recovery(&r))
        }
        Command::Homology(input) => {
            let d = read_graph(&input)?;
            let h = d.graph.first_homology();
            let torsion = h
                .torsion
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!("torsion {}", if torsion.is_empty() { "-".into() } else { torsion });
            println!("free-rank {}", h.free_rank);
            println!("qhs {}", h.is_rational_sphere());
            println!("zhs {}", h.is_integral_sphere());
            Ok(0)
        }
        Command::Det { input, subgraph } => {
            let d = read_graph(&input)?;
            let g = match subgraph {
                Some(ids) => {
                    let keep = ids
                        .split(',')
                        .map(|t| t.trim().parse().map(VertexId))
                        .collect::<Result<_, _>>()
                        .map_err(|_| "bad vertex id list".to_string())?;
                    d.graph.induced_subgraph(&keep)
                }
                None => d.graph,
            };
            println!("{}", g.determinant());
            Ok(0)
        }
        Command::Roundtrip { pairs, n } => {
            let pairs = parse_pairs(&pairs)?;
            let g = suspension_minimal(&pairs, n).map_err(|e| e.to_string())?;
            let r = recover(&g).map_err(|e| e.to_string())?;
            let me = Candidate { pairs: pairs.clone(), n };
            let triple = |c: &Candidate| {
                let mut t = vec![c.n];
                t.extend(c.pairs.iter().flat_map(|p| [p.p, p.q]));
                t.sort_unstable();
                t
            };
            let ok = match &r {
                // Brieskorn outcomes are canonicalized; compare as multisets
                Recovery::Unique(c) if c.pairs.len() == 1 => triple(c) == triple(&me),
                Recovery::Unique(c) => *c == me,
                Recovery::S1Family(cs) => cs.iter().any(|c| triple(c) == triple(&me)),
                Recovery::S2Pair(a, b) => *a == me || *b == me,
                Recovery::NotRealizable => false,
            };
            print_recovery(&r);
            println!("roundtrip {}", if ok { "ok" } else { "failed" });
            Ok(if ok { 0 } else { 1 })
        }
        Command::Realize(input) => {
            let d = read_graph(&input)?;
            let r = recover(&d.graph).map_err(|e| e.to_string())?;
            let code = print_recovery(&r);
            println!("realizable {}", if code == 0 { "yes" } else { "no" });
            Ok(code)
        }
        Command::EnumerateS1 { g, l } => {
            for (ht, h, n) in enumerate_s1_family(g, l) {
                println!("triple {ht} {h} {n}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
