//! Acceptance gate: one test (and one pass/fail line) per criterion.
//!
//! Criteria 4-8 share a single exhaustive sweep over all valid Newton data
//! with `s <= 3`, `p_k <= 5`, `q_k <= 7`, `n <= 10`; the sweep is run once
//! and its per-criterion failure lists are checked separately.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use suspgraph::blowdown::{blow_down, is_contractible, minimalize};
use suspgraph::canon::{are_isomorphic, canonical_form};
use suspgraph::cover::suspension_canonical;
use suspgraph::graph::{DecoratedGraph, VertexData, VertexId};
use suspgraph::newton::{milnor_suspension, NewtonPair, SuspensionData};
use suspgraph::recover::{detect_p_case, recover, recover_with_milnor, z_axis_choices, Candidate, Recovery};

fn pairs(v: &[(u64, u64)]) -> Vec<NewtonPair> {
    v.iter().map(|&(p, q)| NewtonPair::new(p, q)).collect()
}

fn minimal_of(ps: &[NewtonPair], n: u64) -> DecoratedGraph {
    suspgraph::cover::suspension_minimal(ps, n).unwrap()
}

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion}: pass - {what}");
}

// ----- the shared sweep -----

#[derive(Default)]
struct SweepReport {
    instances: usize,
    roundtrip_failures: Vec<String>,
    milnor_failures: Vec<String>,
    determinant_failures: Vec<String>,
    oracle_failures: Vec<String>,
    p_case_failures: Vec<String>,
    minimal_graphs: Vec<DecoratedGraph>,
    canonical_samples: Vec<DecoratedGraph>,
}

fn all_newton_data() -> Vec<Vec<NewtonPair>> {
    let mut firsts = Vec::new();
    for p in 2u64..=5 {
        for q in p + 1..=7 {
            if p.gcd(&q) == 1 {
                firsts.push(NewtonPair::new(p, q));
            }
        }
    }
    let mut laters = Vec::new();
    for p in 2u64..=5 {
        for q in 1u64..=7 {
            if p.gcd(&q) == 1 {
                laters.push(NewtonPair::new(p, q));
            }
        }
    }
    let mut all = Vec::new();
    for &f in &firsts {
        all.push(vec![f]);
        for &a in &laters {
            all.push(vec![f, a]);
            for &b in &laters {
                all.push(vec![f, a, b]);
            }
        }
    }
    all
}

fn triple(c: &Candidate) -> Vec<u64> {
    let mut t = vec![c.n];
    t.extend(c.pairs.iter().flat_map(|p| [p.p, p.q]));
    t.sort_unstable();
    t
}

/// The ambiguous Brieskorn star: one genus vertex with `e = -1` and at most
/// one hanging chain of `-2` vertices.
fn s1_shape(g: &DecoratedGraph) -> bool {
    let genus: Vec<(VertexId, &VertexData)> =
        g.vertices().filter(|(_, d)| d.genus > 0).collect();
    let [(c, d)] = genus.as_slice() else { return false };
    d.e == -1
        && g.edge_degree(*c) <= 1
        && g.vertices().all(|(v, d)| v == *c || (d.genus == 0 && d.e == -2))
}

fn comp_det(g: &DecoratedGraph, comp: &[VertexId]) -> BigInt {
    let keep: BTreeSet<VertexId> = comp.iter().copied().collect();
    g.induced_subgraph(&keep).determinant()
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn check_instance(ps: &[NewtonPair], n: u64, report: &mut SweepReport) {
    let tag = || {
        format!(
            "{} n={n}",
            ps.iter().map(|p| format!("{}:{}", p.p, p.q)).collect::<Vec<_>>().join(",")
        )
    };
    let s = ps.len();
    let data = SuspensionData::new(ps, n).unwrap();
    let sc = suspension_canonical(ps, n).unwrap();
    let cover = &sc.cover;
    let minimal = minimalize(&cover.graph.without_embedding());
    report.instances += 1;

    // ----- criterion 7: fiber counts, multiplicities, genera, QHS -----
    let h_tail = |k: usize| -> u64 { data.h[k..].iter().product() }; // h_{k+1}..h_s at index k
    let p_red_tail = |k: usize| -> u64 { data.p_red[k..].iter().product() };
    let mut genus_ok = true;
    for k in 0..s {
        let node_fiber = &cover.fibers[&sc.curve.nodes[k]];
        if node_fiber.len() as u64 != h_tail(k + 1) {
            report.oracle_failures.push(format!("{} node fiber {k}", tag()));
        }
        for &w in node_fiber {
            let d = cover.graph.data(w).unwrap();
            if d.multiplicity != Some(data.a_red[k] * p_red_tail(k)) {
                report.oracle_failures.push(format!("{} node mult {k}", tag()));
            }
            if d.genus as u64 != (data.h[k] - 1) * (data.h_tilde[k] - 1) / 2 {
                genus_ok = false;
            }
        }
        let leaf_fiber = &cover.fibers[&sc.curve.leaves[k + 1]];
        if leaf_fiber.len() as u64 != data.h_tilde[k] * h_tail(k + 1) {
            report.oracle_failures.push(format!("{} leaf fiber {k}", tag()));
        }
        for &w in leaf_fiber {
            let d = cover.graph.data(w).unwrap();
            if d.multiplicity != Some(data.a_red[k] * p_red_tail(k + 1)) || d.genus != 0 {
                report.oracle_failures.push(format!("{} leaf mult {k}", tag()));
            }
        }
    }
    let first_fiber = &cover.fibers[&sc.curve.leaves[0]];
    if first_fiber.len() as u64 != h_tail(0) {
        report.oracle_failures.push(format!("{} first leaf fiber", tag()));
    }
    for &w in first_fiber {
        if cover.graph.data(w).unwrap().multiplicity != Some(p_red_tail(0)) {
            report.oracle_failures.push(format!("{} first leaf mult", tag()));
        }
    }
    if !genus_ok {
        report.oracle_failures.push(format!("{} lifted genus", tag()));
    }
    // rational sphere iff every (h_k - 1)(h~_k - 1) vanishes; for a negative
    // definite tree that is exactly "total genus zero"
    let qhs = minimal.is_tree()
        && !minimal.determinant().is_zero()
        && minimal.total_genus() == 0;
    if qhs != data.is_rational_sphere() {
        report.oracle_failures.push(format!("{} qhs", tag()));
    }

    // ----- criterion 6: string determinants against the closed forms -----
    let node_lifts: Vec<BTreeSet<VertexId>> = (0..s)
        .map(|k| cover.fibers[&sc.curve.nodes[k]].iter().copied().collect())
        .collect();
    let all_nodes: BTreeSet<VertexId> = node_lifts.iter().flatten().copied().collect();
    let arrow_v = cover.graph.arrows()[0].vertex;
    let leaf_lifts: Vec<BTreeSet<VertexId>> = (0..=s)
        .map(|k| cover.fibers[&sc.curve.leaves[k]].iter().copied().collect())
        .collect();
    let big_n = BigInt::from(n);
    // expected determinants: D(vbar_0), D(vbar_k), D(v_s), D(v_k)
    let d_vbar0 = BigRational::from(BigInt::from(data.a_red[0]));
    let d_vs = ratio(big_n.clone(), BigInt::from(data.h[s - 1] * data.h_tilde[s - 1]));
    let d_vk = |k: usize| -> BigRational {
        // strings between lifts of v_k and v_{k+1}, 1-based k <= s-1
        ratio(
            &big_n * BigInt::from(ps[k].q),
            BigInt::from(data.d[k - 1]) * BigInt::from(data.h_tilde[k - 1] * data.h_tilde[k]),
        )
    };
    let keep: BTreeSet<VertexId> =
        cover.graph.vertex_ids().filter(|v| !all_nodes.contains(v)).collect();
    let cut = cover.graph.induced_subgraph(&keep);
    if all_nodes.contains(&arrow_v) {
        // empty arrow string: D(v_s) must be 1
        if d_vs != BigRational::one() {
            report.determinant_failures.push(format!("{} empty arrow string", tag()));
        }
    }
    for comp in cut.components() {
        let det = BigRational::from(comp_det(&cover.graph, &comp));
        let set: BTreeSet<VertexId> = comp.iter().copied().collect();
        let expected = if set.contains(&arrow_v) {
            d_vs.clone()
        } else if !set.is_disjoint(&leaf_lifts[0]) {
            d_vbar0.clone()
        } else if let Some(k) = (1..=s).find(|&k| !set.is_disjoint(&leaf_lifts[k])) {
            BigRational::from(BigInt::from(data.p_red[k - 1]))
        } else {
            // an interior string: adjacent to node lifts of levels k, k+1
            let adjacent: BTreeSet<usize> = comp
                .iter()
                .flat_map(|&v| cover.graph.neighbors(v))
                .filter_map(|w| (0..s).find(|&k| node_lifts[k].contains(&w)))
                .collect();
            match adjacent.iter().min() {
                Some(&k) if adjacent.len() == 2 => d_vk(k + 1),
                _ => {
                    report.determinant_failures.push(format!("{} stray string", tag()));
                    continue;
                }
            }
        };
        if det != expected {
            report.determinant_failures.push(format!("{} string det", tag()));
        }
    }
    // D_-(v_2) and D_+(v_{s-1}) (Prop 4.8) plus the recursion for s = 3
    if s >= 2 {
        let without: BTreeSet<VertexId> =
            cover.graph.vertex_ids().filter(|v| !node_lifts[1].contains(v)).collect();
        let cut2 = cover.graph.induced_subgraph(&without);
        let anchor = *node_lifts[0].iter().next().unwrap();
        let minus_v2: Vec<VertexId> = cut2
            .components()
            .into_iter()
            .find(|c| c.contains(&anchor))
            .unwrap();
        let measured = BigInt::from(comp_det(&cover.graph, &minus_v2));
        let expected = BigInt::from(data.a_red[0]).pow((data.h[0] - 1) as u32)
            * BigInt::from(data.p_red[0]).pow((data.h_tilde[0] - 1) as u32)
            * BigInt::from(data.a_red[1]);
        if measured != expected {
            report.determinant_failures.push(format!("{} D-(v2)", tag()));
        }
        if s == 3 {
            let without: BTreeSet<VertexId> =
                cover.graph.vertex_ids().filter(|v| !node_lifts[2].contains(v)).collect();
            let cut3 = cover.graph.induced_subgraph(&without);
            let minus_v3: Vec<VertexId> = cut3
                .components()
                .into_iter()
                .find(|c| c.contains(&anchor))
                .unwrap();
            let measured = BigRational::from(comp_det(&cover.graph, &minus_v3));
            let base = ratio(expected.clone(), BigInt::from(data.a_red[1]));
            let recursion = BigRational::from(BigInt::from(data.a_red[2]))
                * base.pow(data.h[1] as i32)
                * BigRational::from(
                    BigInt::from(data.a_red[1]).pow((data.h[1] - 1) as u32)
                        * BigInt::from(data.p_red[1]).pow((data.h_tilde[1] - 1) as u32),
                );
            if measured != recursion {
                report.determinant_failures.push(format!("{} recursion D-(v3)", tag()));
            }
        }
        let without: BTreeSet<VertexId> = cover
            .graph
            .vertex_ids()
            .filter(|v| !node_lifts[s - 2].contains(v))
            .collect();
        let cutp = cover.graph.induced_subgraph(&without);
        let vs_anchor = *node_lifts[s - 1].iter().next().unwrap();
        let plus: Vec<VertexId> = cutp
            .components()
            .into_iter()
            .find(|c| c.contains(&vs_anchor))
            .unwrap();
        let measured = BigRational::from(comp_det(&cover.graph, &plus));
        let expected = BigRational::from(big_n.clone())
            * d_vk(s - 1).pow((data.h[s - 1] - 1) as i32)
            * BigRational::from(BigInt::from(data.p_red[s - 1]).pow((data.h_tilde[s - 1] - 1) as u32))
            / BigRational::from(BigInt::from(
                data.h[s - 1] * data.h[s - 2] * data.h_tilde[s - 2],
            ));
        if measured != expected {
            report.determinant_failures.push(format!("{} D+(v_s-1)", tag()));
        }
    }

    // ----- criterion 8: P-case detection and the extra blow-down -----
    let embedded = minimalize(&cover.graph);
    let p_case = detect_p_case(&embedded);
    let expect_p = n == 2 && ps[s - 1].p == 2;
    if p_case != expect_p {
        report.p_case_failures.push(format!("{} detect", tag()));
    }
    let expect_len = if expect_p { embedded.len() - 1 } else { embedded.len() };
    if minimal.len() != expect_len {
        report.p_case_failures.push(format!("{} blow-down count", tag()));
    }

    // ----- criteria 4 and 5: recovery round-trip and disambiguation -----
    let me = Candidate { pairs: ps.to_vec(), n };
    let s2_condition =
        s == 2 && data.a_red[0] == 1 && data.p_red[0] == 1 && data.h_tilde[1] == 1;
    let outcome = recover(&minimal).unwrap();
    let ok = match &outcome {
        Recovery::Unique(c) if s == 1 => {
            triple(c) == triple(&me) && (s1_shape(&minimal) || c.pairs.len() == 1)
        }
        Recovery::Unique(c) => *c == me,
        Recovery::S1Family(cs) => {
            s == 1 && s1_shape(&minimal) && cs.iter().any(|c| triple(c) == triple(&me))
        }
        Recovery::S2Pair(a, b) => s2_condition && (*a == me || *b == me),
        Recovery::NotRealizable => false,
    };
    if !ok {
        report.roundtrip_failures.push(format!("{} -> {:?}", tag(), outcome));
    }
    let members: Option<Vec<Candidate>> = match &outcome {
        Recovery::S1Family(cs) => Some(cs.clone()),
        Recovery::S2Pair(a, b) => Some(vec![a.clone(), b.clone()]),
        _ => None,
    };
    if let Some(members) = members {
        let mus: Vec<BigInt> =
            members.iter().map(|c| c.milnor().unwrap()).collect();
        for i in 0..mus.len() {
            for j in i + 1..mus.len() {
                if mus[i] == mus[j] {
                    report.milnor_failures.push(format!("{} equal mu", tag()));
                }
            }
        }
        let mu = milnor_suspension(ps, n).unwrap();
        match recover_with_milnor(&minimal, &mu).unwrap() {
            Recovery::Unique(c) if triple(&c) == triple(&me) => {}
            other => report
                .milnor_failures
                .push(format!("{} milnor -> {:?}", tag(), other)),
        }
    }

    // corpus samples for criterion 10
    if minimal.len() <= 12 && report.minimal_graphs.len() < 60 {
        report.minimal_graphs.push(minimal.clone());
    }
    if report.instances % 800 == 1 {
        report.canonical_samples.push(cover.graph.clone());
    }
}

fn sweep() -> &'static SweepReport {
    static SWEEP: OnceLock<SweepReport> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let mut report = SweepReport::default();
        for ps in all_newton_data() {
            for n in 2u64..=10 {
                check_instance(&ps, n, &mut report);
            }
        }
        report
    })
}

fn assert_clean(criterion: u32, what: &str, failures: &[String]) {
    if failures.is_empty() {
        pass(criterion, what);
    } else {
        panic!(
            "criterion {criterion}: FAIL - {what}: {} failures, first: {}",
            failures.len(),
            failures[0]
        );
    }
}

// ----- the ten criteria -----

#[test]
fn criterion_01_example_one_golden() {
    let a = minimal_of(&pairs(&[(3, 7), (20, 1)]), 21);
    let b = minimal_of(&pairs(&[(4, 5), (21, 1)]), 20);
    assert!(are_isomorphic(&a, &b).unwrap(), "criterion 1: FAIL - graphs differ");
    let census = |g: &DecoratedGraph, e: i64, genus: u32| {
        g.vertices().filter(|(_, d)| d.e == e && d.genus == genus).count()
    };
    for g in [&a, &b] {
        assert_eq!(g.len(), 22, "criterion 1: FAIL - vertex count");
        assert_eq!(census(g, -421, 6), 1, "criterion 1: FAIL - genus vertex");
        assert_eq!(census(g, -1, 0), 1, "criterion 1: FAIL - (-1) vertex");
        assert_eq!(census(g, -2, 0), 19, "criterion 1: FAIL - (-2) chain");
        assert_eq!(census(g, -21, 0), 1, "criterion 1: FAIL - (-21) leaf");
    }
    pass(1, "shared graph of {(3,7),(20,1);21} and {(4,5),(21,1);20}");
}

#[test]
fn criterion_02_example_two_golden() {
    let a = minimal_of(&pairs(&[(3, 7), (40, 1)]), 42);
    let b = minimal_of(&pairs(&[(4, 5), (42, 1)]), 40);
    assert!(are_isomorphic(&a, &b).unwrap(), "criterion 2: FAIL - graphs differ");
    let census = |g: &DecoratedGraph, e: i64, genus: u32| {
        g.vertices().filter(|(_, d)| d.e == e && d.genus == genus).count()
    };
    for g in [&a, &b] {
        assert_eq!(census(g, -841, 6), 2, "criterion 2: FAIL - genus branches");
        assert_eq!(census(g, -2, 0), 19, "criterion 2: FAIL - (-2) chain");
        assert_eq!(census(g, -21, 0), 1, "criterion 2: FAIL - (-21) leaf");
    }
    pass(2, "shared graph of {(3,7),(40,1);42} and {(4,5),(42,1);40}");
}

#[test]
fn criterion_03_brieskorn_golden() {
    for (ps, n) in [(pairs(&[(3, 7)]), 21), (pairs(&[(4, 5)]), 20)] {
        let g = minimal_of(&ps, n);
        assert_eq!(g.len(), 1, "criterion 3: FAIL - not a single vertex");
        let (_, d) = g.vertices().next().unwrap();
        assert_eq!((d.e, d.genus), (-1, 6), "criterion 3: FAIL - decorations");
    }
    pass(3, "Brieskorn (3,7,21) and (4,5,20) minimalize to [g=6], e=-1");
}

#[test]
fn criterion_04_roundtrip_sweep() {
    let r = sweep();
    assert!(r.instances > 30000, "criterion 4: FAIL - sweep too small");
    assert_clean(4, "recovery round-trip over the full sweep", &r.roundtrip_failures);
}

#[test]
fn criterion_05_milnor_disambiguation() {
    let r = sweep();
    // the sweep bounds contain no ambiguous instance; exercise both families
    // explicitly here
    let star = minimal_of(&pairs(&[(3, 7)]), 21);
    match recover(&star).unwrap() {
        Recovery::S1Family(cs) => {
            assert_eq!(cs.len(), 3, "criterion 5: FAIL - family size");
            let mus: Vec<BigInt> = cs.iter().map(|c| c.milnor().unwrap()).collect();
            for i in 0..mus.len() {
                for j in i + 1..mus.len() {
                    assert_ne!(mus[i], mus[j], "criterion 5: FAIL - equal mu in family");
                }
            }
        }
        other => panic!("criterion 5: FAIL - expected a family, got {other:?}"),
    }
    match recover_with_milnor(&star, &BigInt::from(240)).unwrap() {
        Recovery::Unique(c) => {
            assert_eq!(triple(&c), vec![3, 7, 21], "criterion 5: FAIL - family member")
        }
        other => panic!("criterion 5: FAIL - {other:?}"),
    }
    let g = minimal_of(&pairs(&[(3, 7), (20, 1)]), 21);
    match recover(&g).unwrap() {
        Recovery::S2Pair(a, b) => {
            assert_ne!(
                a.milnor().unwrap(),
                b.milnor().unwrap(),
                "criterion 5: FAIL - equal mu in pair"
            );
        }
        other => panic!("criterion 5: FAIL - expected a pair, got {other:?}"),
    }
    match recover_with_milnor(&g, &BigInt::from(164400)).unwrap() {
        Recovery::Unique(c) => assert_eq!(c.pairs, pairs(&[(3, 7), (20, 1)])),
        other => panic!("criterion 5: FAIL - {other:?}"),
    }
    match recover_with_milnor(&g, &BigInt::from(164388)).unwrap() {
        Recovery::Unique(c) => assert_eq!(c.pairs, pairs(&[(4, 5), (21, 1)])),
        other => panic!("criterion 5: FAIL - {other:?}"),
    }
    assert_clean(5, "Milnor numbers separate every ambiguous family", &r.milnor_failures);
}

#[test]
fn criterion_06_determinant_oracles() {
    let r = sweep();
    assert_clean(6, "string determinants match the closed forms", &r.determinant_failures);
}

#[test]
fn criterion_07_cover_oracles() {
    let r = sweep();
    assert_clean(7, "fiber counts, multiplicities, genera, QHS", &r.oracle_failures);
}

#[test]
fn criterion_08_p_case() {
    let r = sweep();
    assert_clean(8, "P-case detection and extra blow-down", &r.p_case_failures);
}

#[test]
fn criterion_09_e8() {
    let g = minimal_of(&pairs(&[(2, 3)]), 5);
    // the E8 plumbing: a chain of seven (-2) vertices with one more hanging
    // on the fifth
    let mut e8 = DecoratedGraph::new();
    let ids: Vec<VertexId> =
        (0..8).map(|_| e8.push_vertex(VertexData::new(-2))).collect();
    for w in ids.windows(2).take(6) {
        e8.add_edge(w[0], w[1]).unwrap();
    }
    e8.add_edge(ids[4], ids[7]).unwrap();
    assert!(are_isomorphic(&g, &e8).unwrap(), "criterion 9: FAIL - not E8");
    assert!(g.determinant().is_one(), "criterion 9: FAIL - determinant");
    let h = g.first_homology();
    assert!(h.is_integral_sphere(), "criterion 9: FAIL - homology");
    match recover(&g).unwrap() {
        Recovery::Unique(c) => {
            assert_eq!(triple(&c), vec![2, 3, 5], "criterion 9: FAIL - triple");
            assert_eq!(
                z_axis_choices([c.pairs[0].p, c.pairs[0].q, c.n]),
                3,
                "criterion 9: FAIL - z-axis choices"
            );
        }
        other => panic!("criterion 9: FAIL - {other:?}"),
    }
    pass(9, "E8 from ({(2,3)}, 5): det 1, ZHS, Brieskorn {2,3,5}, 3 axes");
}

#[test]
fn criterion_10_graph_core_properties() {
    let r = sweep();
    // blow-down invariance of determinant and homology on sampled covers
    for g in &r.canonical_samples {
        let bare = g.without_embedding();
        let min = minimalize(&bare);
        assert_eq!(bare.determinant(), min.determinant(), "criterion 10: FAIL - det");
        assert_eq!(
            bare.first_homology(),
            min.first_homology(),
            "criterion 10: FAIL - homology"
        );
    }
    // minimalize confluence: random contraction orders reach the same graph
    let mut seed = 0x9e3779b97f4a7c15u64;
    let mut rand = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for g in &r.canonical_samples {
        let mut work = g.without_embedding();
        loop {
            let options: Vec<VertexId> = work
                .vertex_ids()
                .filter(|&v| is_contractible(&work, v))
                .collect();
            if options.is_empty() {
                break;
            }
            let pick = options[(rand() as usize) % options.len()];
            blow_down(&mut work, pick).unwrap();
        }
        let reference = minimalize(&g.without_embedding());
        assert_eq!(
            canonical_form(&work).unwrap(),
            canonical_form(&reference).unwrap(),
            "criterion 10: FAIL - confluence"
        );
    }
    // inverse_entry against exact matrix inversion on small corpus trees
    let mut checked = 0usize;
    for g in r.minimal_graphs.iter().take(40) {
        if !g.is_tree() || g.determinant().is_zero() {
            continue;
        }
        let (m, order) = g.intersection_matrix();
        let inv = m.inverse().expect("criterion 10: FAIL - singular");
        for (i, &w1) in order.iter().enumerate() {
            for (j, &w2) in order.iter().enumerate() {
                assert_eq!(
                    g.inverse_entry(w1, w2).unwrap(),
                    inv[i][j],
                    "criterion 10: FAIL - inverse entry"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "criterion 10: FAIL - corpus too small");
    // negative definiteness gate
    for g in &r.canonical_samples {
        assert!(g.is_negative_definite(), "criterion 10: FAIL - cover not definite");
    }
    let mut bad = DecoratedGraph::new();
    bad.push_vertex(VertexData::new(0));
    assert!(!bad.is_negative_definite(), "criterion 10: FAIL - gate");
    pass(10, "graph-core property suite");
}
