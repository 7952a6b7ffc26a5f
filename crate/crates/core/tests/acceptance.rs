//! Acceptance checks. Each criterion prints one `criterion N: PASS|FAIL ...`
//! line; the process fails if any criterion does.
//!
//! Set `HOMHOM_LONG=1` to add the five-vertex directed search.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use homhom::catalog::{example1, fig6, fig7};
use homhom::census::{run_census, CensusParams, CensusReport};
use homhom::classify::{classify_diamond_vertex_uniform, recognize_gardiner, GardinerTag};
use homhom::enumerate::{search_mh_not_hh, Constraints};
use homhom::graph::{underlying_graph, SimpleGraph};
use homhom::{
    decide, isomorphic, Color, ColoredStructure, Decider, ExtensionClass, Flags, Membership, Poset,
};

fn report(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn census(poset: &str, n: usize, flags: Flags, constraints: Constraints) -> CensusReport {
    let params = CensusParams::new(poset, n, flags, constraints).unwrap();
    run_census(&params).unwrap()
}

fn chain3_census(n: usize) -> CensusReport {
    census("chain3", n, Flags::PLAIN, Constraints::free())
}

fn plain_census(n: usize) -> CensusReport {
    census(
        "chain2",
        n,
        Flags::PLAIN,
        Constraints::plain(&Poset::chain(2)),
    )
}

fn m2_uniform_census(n: usize) -> CensusReport {
    census("m2", n, Flags::PLAIN, Constraints::vertex_uniform())
}

/// Every census run by criteria 2 to 5, shared by the cross-cutting checks.
fn all_censuses() -> &'static [CensusReport] {
    static ALL: OnceLock<Vec<CensusReport>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut out = Vec::new();
        out.extend((1..=3).map(chain3_census));
        out.extend((1..=6).map(plain_census));
        out.extend((1..=4).map(m2_uniform_census));
        out
    })
}

fn graph_of(doc: &homhom::io::StructureDoc) -> SimpleGraph {
    underlying_graph(&doc.to_structure().unwrap())
}

fn criterion_1_example1_verdicts() -> bool {
    let start = Instant::now();
    let g = example1();
    let mh = decide(&g, ExtensionClass::MH);
    let hh = decide(&g, ExtensionClass::HH);
    let elapsed = start.elapsed();
    let witness = hh.witness.as_ref().map(|w| w.named_pairs(&g));
    let expected = vec![
        ("a".to_owned(), "a".to_owned()),
        ("b".to_owned(), "a".to_owned()),
    ];
    let ok = mh.membership == Membership::Member
        && hh.membership == Membership::NonMember
        && witness.as_ref() == Some(&expected)
        && elapsed < Duration::from_secs(1);
    report(
        1,
        ok,
        &format!(
            "MH={:?} HH={:?} witness={witness:?} in {elapsed:?}",
            mh.membership, hh.membership
        ),
    );
    ok
}

fn criterion_2_chain_theorem_equivalence() -> bool {
    let start = Instant::now();
    let mut classes = 0;
    let mut mismatches = Vec::new();
    for n in 1..=3 {
        let r = chain3_census(n);
        classes += r.classes;
        for p in &r.profiles {
            let mh = p.member(ExtensionClass::MH);
            let hh = p.member(ExtensionClass::HH);
            let cls = p.chain.as_ref().map(|c| c.member);
            if mh.is_none() || mh != hh || cls != mh {
                mismatches.push(format!(
                    "n={n}#{}: MH={mh:?} HH={hh:?} chain={cls:?}",
                    p.index
                ));
            }
        }
        mismatches.extend(r.disagreements.iter().map(|d| format!("n={n}: {d:?}")));
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed < Duration::from_secs(600);
    report(
        2,
        ok,
        &format!(
            "{classes} chain3 classes n<=3, {} disagreements in {elapsed:?}",
            mismatches.len()
        ),
    );
    if !ok {
        eprintln!("{mismatches:#?}");
    }
    ok
}

fn criterion_3_plain_hh_is_complete_or_null() -> bool {
    let start = Instant::now();
    let mut unexpected = Vec::new();
    let mut mh_hh_split = Vec::new();
    for n in 1..=5 {
        let r = plain_census(n);
        for p in &r.profiles {
            let g = graph_of(&p.structure);
            let edges = g.edges().len();
            let complete_or_null = edges == 0 || edges == n * (n - 1) / 2;
            let hh = p.member(ExtensionClass::HH);
            if hh != Some(complete_or_null) {
                unexpected.push(format!("{} (HH={hh:?})", g.to_graph6()));
            }
            if p.member(ExtensionClass::MH) != hh {
                mh_hh_split.push(g.to_graph6());
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = unexpected.is_empty() && mh_hh_split.is_empty() && elapsed < Duration::from_secs(600);
    report(
        3,
        ok,
        &format!(
            "HH members beyond complete/null: {unexpected:?}; MH!=HH: {mh_hh_split:?}; {elapsed:?}"
        ),
    );
    if !ok {
        eprintln!("HH set differs from complete and null graphs: {unexpected:?}");
    }
    ok
}

fn criterion_4_gardiner_soundness() -> bool {
    let ii = |g: &SimpleGraph| decide(&g.to_structure(), ExtensionClass::II).membership;
    let members = [
        ("2K3", SimpleGraph::union_of_cliques(2, 3)),
        ("K2,2", SimpleGraph::complete_bipartite(2, 2)),
        ("C5", SimpleGraph::cycle(5)),
        ("L(K3,3)", GardinerTag::LineGraphK33.build()),
    ];
    let non_members = [("P3", SimpleGraph::path(3)), ("C6", SimpleGraph::cycle(6))];
    let mut bad: Vec<String> = Vec::new();
    let start = Instant::now();
    for (name, g) in &members {
        if ii(g) != Membership::Member {
            bad.push(format!("{name} not II"));
        }
    }
    for (name, g) in &non_members {
        if ii(g) != Membership::NonMember {
            bad.push(format!("{name} II"));
        }
    }
    let mut graphs = 0;
    for n in 1..=6 {
        for p in &plain_census(n).profiles {
            graphs += 1;
            let tag = recognize_gardiner(&graph_of(&p.structure));
            if p.member(ExtensionClass::II) != Some(tag.is_some()) {
                bad.push(format!("n={n}#{} recognizer {tag:?}", p.index));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(1800);
    report(
        4,
        ok,
        &format!(
            "named cases and {graphs} plain graphs n<=6, {} mismatches in {elapsed:?}",
            bad.len()
        ),
    );
    if !ok {
        eprintln!("{bad:#?}");
    }
    ok
}

fn c5_red_k5(vertex: Color) -> ColoredStructure {
    let p = Arc::new(Poset::m2());
    let (b, r) = (p.color("b").unwrap(), p.color("r").unwrap());
    let edges: Vec<(usize, usize, Color)> = (0..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, if matches!(j - i, 1 | 4) { r } else { b }))
        .collect();
    ColoredStructure::undirected(p, vec![vertex; 5], &edges).unwrap()
}

fn criterion_5_bicolored_diamond_theorem() -> bool {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut classes = 0;
    for n in 1..=4 {
        let r = m2_uniform_census(n);
        classes += r.classes;
        for p in &r.profiles {
            let cls = p.diamond.as_ref().map(|c| c.member);
            let (mh, hh) = (p.member(ExtensionClass::MH), p.member(ExtensionClass::HH));
            if cls.is_none() || mh != cls || hh != cls {
                bad.push(format!(
                    "n={n}#{}: classifier={cls:?} MH={mh:?} HH={hh:?}",
                    p.index
                ));
            }
        }
    }
    for c in Poset::m2().colors() {
        let g = c5_red_k5(c);
        let cls = classify_diamond_vertex_uniform(&g).unwrap();
        let mh = decide(&g, ExtensionClass::MH).is_member();
        let hh = decide(&g, ExtensionClass::HH).is_member();
        if !(cls.member && mh && hh) {
            bad.push(format!("C5-red K5, vertex {c}: {cls:?} MH={mh} HH={hh}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(1800);
    report(
        5,
        ok,
        &format!(
            "{classes} M2 vertex-uniform classes n<=4 plus C5-red K5, {} mismatches in {elapsed:?}",
            bad.len()
        ),
    );
    if !ok {
        eprintln!("{bad:#?}");
    }
    ok
}

fn criterion_6_pump_soundness() -> bool {
    let mut pumps = 0;
    let mut bad = Vec::new();
    for r in all_censuses() {
        for p in &r.profiles {
            if let Some(cfg) = p.pump {
                pumps += 1;
                if p.member(ExtensionClass::MH) != Some(false) {
                    bad.push(format!("{} n={} #{}: {cfg:?}", r.poset, r.n, p.index));
                }
            }
        }
    }
    let ok = bad.is_empty();
    report(
        6,
        ok,
        &format!("{pumps} pump configurations, {} in MH members", bad.len()),
    );
    if !ok {
        eprintln!("{bad:#?}");
    }
    ok
}

fn criterion_7_hierarchy_consistency() -> bool {
    let mut total = 0;
    let mut bad = Vec::new();
    for r in all_censuses() {
        for p in &r.profiles {
            total += 1;
            if !p.consistent {
                bad.push(format!("{} n={} #{}", r.poset, r.n, p.index));
            }
        }
    }
    let ok = bad.is_empty();
    report(
        7,
        ok,
        &format!("{total} profiles, {} inconsistent", bad.len()),
    );
    if !ok {
        eprintln!("{bad:#?}");
    }
    ok
}

fn criterion_8_counterexample_families() -> bool {
    let mut lines = Vec::new();
    let mut ok = true;
    let cases = [
        ("Fig6(1)", fig6(1).unwrap()),
        ("Fig6(2)", fig6(2).unwrap()),
        ("Fig6(3)", fig6(3).unwrap()),
        ("Fig7(1)", fig7(1).unwrap()),
    ];
    for (name, g) in &cases {
        let start = Instant::now();
        let mh = decide(g, ExtensionClass::MH).membership;
        let hh = decide(g, ExtensionClass::HH).membership;
        let elapsed = start.elapsed();
        let good = mh == Membership::Member
            && hh == Membership::NonMember
            && elapsed < Duration::from_secs(300);
        ok &= good;
        lines.push(format!("{name} MH={mh:?} HH={hh:?} {elapsed:?}"));
    }
    let iso = isomorphic(&cases[0].1, &example1()).unwrap().is_some();
    ok &= iso;
    report(
        8,
        ok,
        &format!("{}; Fig6(1)~Example1={iso}", lines.join("; ")),
    );
    ok
}

fn criterion_9_separation_search() -> bool {
    let chain2 = Arc::new(Poset::chain(2));
    let counts: Vec<(usize, usize)> = (1..=3)
        .map(|n| {
            let found = search_mh_not_hh(
                chain2.clone(),
                n,
                Flags::DIGRAPH_LOOPS,
                &Constraints::free(),
                Decider::new(),
            )
            .unwrap()
            .count();
            (n, found)
        })
        .collect();
    let e1 = example1();
    let m2 = Arc::new(Poset::m2());
    let found: Vec<ColoredStructure> =
        search_mh_not_hh(m2, 4, Flags::PLAIN, &Constraints::free(), Decider::new())
            .unwrap()
            .collect();
    let recovered = found.iter().any(|g| isomorphic(g, &e1).unwrap().is_some());
    report(
        9,
        recovered,
        &format!(
            "directed+loops chain2 (n, count) {counts:?}; M2 n=4 undirected: {} found, Example1 recovered={recovered}",
            found.len()
        ),
    );
    recovered
}

/// Visits 2^30 labeled structures; takes tens of minutes.
fn criterion_9_directed_loops_five_vertices() -> bool {
    let chain2 = Arc::new(Poset::chain(2));
    let constraints = Constraints::free().with_cap(1 << 31);
    let found = search_mh_not_hh(
        chain2,
        5,
        Flags::DIGRAPH_LOOPS,
        &constraints,
        Decider::new(),
    )
    .unwrap()
    .count();
    report(
        9,
        true,
        &format!("directed+loops chain2 n=5: {found} found"),
    );
    true
}

fn main() {
    let criteria: [fn() -> bool; 9] = [
        criterion_1_example1_verdicts,
        criterion_2_chain_theorem_equivalence,
        criterion_3_plain_hh_is_complete_or_null,
        criterion_4_gardiner_soundness,
        criterion_5_bicolored_diamond_theorem,
        criterion_6_pump_soundness,
        criterion_7_hierarchy_consistency,
        criterion_8_counterexample_families,
        criterion_9_separation_search,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    if std::env::var_os("HOMHOM_LONG").is_some() {
        criterion_9_directed_loops_five_vertices();
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
