//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cozero::ring::oracle;
use cozero::solvers::brute::{brute_force_chromatic, brute_force_clique};
use cozero::solvers::{
    chromatic_number, is_isomorphism, is_perfect_desk_scale, max_clique, CycleLocation,
};
use cozero::verify::{
    check_null_graph, check_perfection_on, check_reduction, default_rings, principal_maximal_ideal,
    Witness,
};
use cozero::{parse_spec, CozeroGraph, Graph, Limits, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring(text: &str) -> RingSpec {
    parse_spec(text).expect("valid ring spec")
}

/// Pascal's triangle, independent of the library's binomial.
fn choose(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// Exact ω and χ with validated witnesses.
fn omega_chi(g: &Graph, limits: &Limits) -> Result<(usize, usize), String> {
    let clique = max_clique(g, limits).map_err(|e| e.to_string())?;
    let coloring = chromatic_number(g, limits).map_err(|e| e.to_string())?;
    if !g.is_clique(&clique.witness) || clique.witness.len() != clique.size {
        return Err("clique witness does not validate".into());
    }
    if !g.is_proper_coloring(&coloring.assignment)
        || coloring.assignment.iter().any(|&c| c >= coloring.count)
    {
        return Err("coloring witness does not validate".into());
    }
    Ok((clique.size, coloring.count))
}

/// Expected values for ω = χ on products of fields.
fn formula_cases(cases: &[(&str, usize, Option<usize>)], budget: Duration) -> Outcome {
    let limits = Limits::default();
    let mut details = Vec::new();
    for &(text, expected, vertices) in cases {
        let spec = ring(text);
        let start = Instant::now();
        let g = CozeroGraph::build(&spec).map_err(|e| e.to_string())?;
        let (omega, chi) = omega_chi(g.graph(), &limits)?;
        let elapsed = start.elapsed();
        // vertex count from unit enumeration: |R| - |U| - 1
        let units = spec
            .elements()
            .filter(|a| oracle::is_unit(&spec, a))
            .count();
        let derived = spec.cardinality() as usize - units - 1;
        if g.order() != derived || vertices.is_some_and(|v| v != g.order()) {
            return Err(format!(
                "{text}: {} vertices, expected {derived}",
                g.order()
            ));
        }
        if g.order() <= 20 {
            let brute = brute_force_clique(g.graph()).map_err(|e| e.to_string())?;
            if brute != omega {
                return Err(format!("{text}: omega {omega} but subsets give {brute}"));
            }
        }
        if omega != expected || chi != expected {
            return Err(format!(
                "{text}: omega={omega} chi={chi}, expected {expected}"
            ));
        }
        if elapsed > budget {
            return Err(format!("{text}: took {elapsed:.2?}, limit {budget:?}"));
        }
        details.push(format!("{text}={omega} ({}v, {elapsed:.1?})", g.order()));
    }
    Ok(details.join(", "))
}

const BOOLEAN_CASES: [(&str, usize, Option<usize>); 4] = [
    ("Z2xZ2", 2, None),
    ("Z2xZ2xZ2", 3, None),
    ("Z2xZ2xZ2xZ2", 6, None),
    ("Z2xZ2xZ2xZ2xZ2", 10, Some(30)),
];

const MIXED_CASES: [(&str, usize, Option<usize>); 4] = [
    ("Z2xZ3", 2, None),
    ("Z2xZ3xZ5", 3, Some(21)),
    ("Z3xZ5xZ7", 3, Some(56)),
    ("Z2xZ3xZ5xZ7", 6, None),
];

fn criterion_1() -> Outcome {
    formula_cases(&BOOLEAN_CASES, Duration::from_secs(10))
}

fn criterion_2() -> Outcome {
    formula_cases(&MIXED_CASES, Duration::from_secs(60))
}

fn criterion_3() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for (text, _, _) in BOOLEAN_CASES.iter().chain(&MIXED_CASES) {
        let g = CozeroGraph::build(&ring(text)).map_err(|e| e.to_string())?;
        let p = is_perfect_desk_scale(g.graph(), &limits).map_err(|e| format!("{text}: {e}"))?;
        if !p.perfect || p.certificate.is_some() {
            return Err(format!("{text}: reported imperfect: {:?}", p.certificate));
        }
        checked += 1;
    }
    let c5 = Graph::cycle(5);
    let p = is_perfect_desk_scale(&c5, &limits).map_err(|e| e.to_string())?;
    let cert = p.certificate.ok_or("C5 reported perfect")?;
    if p.perfect
        || cert.location != CycleLocation::Graph
        || cert.cycle.len() != 5
        || !cert.validate(&c5, 5)
    {
        return Err(format!("bad C5 certificate {cert:?}"));
    }
    let report = check_perfection_on(&ring("Z2xZ2"), &c5, &limits).map_err(|e| e.to_string())?;
    if report.pass || !matches!(&report.witness, Some(Witness::OddCycle(c)) if c.validate(&c5, 5)) {
        return Err("C5 injected into the perfection check did not fail with a certificate".into());
    }
    Ok(format!(
        "{checked} rings perfect; C5 rejected with hole {:?}",
        cert.cycle
    ))
}

fn regular_suite_rings() -> Vec<RingSpec> {
    default_rings()
        .into_iter()
        .filter(|r| r.is_von_neumann_regular())
        .collect()
}

fn criterion_4() -> Outcome {
    let limits = Limits::default();
    let rings = regular_suite_rings();
    for spec in &rings {
        let report = check_reduction(spec, &limits).map_err(|e| format!("{spec}: {e}"))?;
        if !report.pass {
            return Err(format!("{spec}: {}", report.observed));
        }
        // re-validate the bijection here rather than trusting the report
        let Some(Witness::Reduction {
            representatives,
            mapping,
        }) = &report.witness
        else {
            return Err(format!("{spec}: no bijection"));
        };
        let g = CozeroGraph::build(spec).map_err(|e| e.to_string())?;
        let q = g.induced_subgraph(representatives);
        let n = spec.crt_split().split().factor_count();
        let boolean = CozeroGraph::build(&RingSpec::boolean(n).unwrap()).unwrap();
        if !is_isomorphism(q.graph(), boolean.graph(), mapping) {
            return Err(format!("{spec}: bijection does not validate"));
        }
        let (qo, qc) = omega_chi(q.graph(), &limits)?;
        let (fo, fc) = omega_chi(g.graph(), &limits)?;
        if (qo, qc) != (fo, fc) {
            return Err(format!("{spec}: quotient {qo}/{qc} vs full {fo}/{fc}"));
        }
    }
    let g = CozeroGraph::build(&ring("Z3xZ3")).unwrap();
    let q = g.quotient_by_associates().map_err(|e| e.to_string())?.graph;
    if (q.order(), q.edge_count()) != (2, 1) {
        return Err(format!(
            "Z3xZ3 quotient has {} vertices and {} edges",
            q.order(),
            q.edge_count()
        ));
    }
    Ok(format!(
        "{} regular rings reduce to the Boolean graph; Z3xZ3 quotient is 2v/1e",
        rings.len()
    ))
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    for (text, null) in [
        ("Z4", true),
        ("Z8", true),
        ("Z9", true),
        ("Z25", true),
        ("Z27", true),
        ("Z2xZ2", false),
        ("Z2xZ4", false),
    ] {
        let spec = ring(text);
        let g = CozeroGraph::build(&spec).map_err(|e| e.to_string())?;
        let edgeless = g.edge_count() == 0;
        let principal = principal_maximal_ideal(&spec).is_some();
        if edgeless != null || principal != null {
            return Err(format!(
                "{text}: edgeless={edgeless} local-principal={principal}, expected {null}"
            ));
        }
        let report = check_null_graph(&spec, &limits).map_err(|e| e.to_string())?;
        if !report.pass {
            return Err(format!("{text}: {}", report.observed));
        }
    }
    Ok("5 edgeless local rings, 2 non-local rings with edges".into())
}

fn criterion_6() -> Outcome {
    let rings: Vec<RingSpec> = default_rings()
        .into_iter()
        .filter(|r| r.cardinality() <= 200)
        .collect();
    let mut pairs = 0usize;
    let mut discrepancies = Vec::new();
    for spec in &rings {
        let g = CozeroGraph::build(spec).map_err(|e| e.to_string())?;
        if &g.containment_graph() != g.graph() {
            discrepancies.push(format!("{spec}: adjacency"));
        }
        let ideals: Vec<_> = spec
            .elements()
            .map(|b| oracle::principal_ideal(spec, &b))
            .collect();
        for a in spec.elements() {
            for b in spec.elements() {
                pairs += 1;
                if spec.in_principal_ideal(&a, &b)
                    != ideals[spec.index_of(&b)].contains(spec.index_of(&a))
                {
                    discrepancies.push(format!("{spec}: {a} in R{b}"));
                }
            }
        }
        if spec.is_von_neumann_regular() != oracle::is_von_neumann_regular(spec) {
            discrepancies.push(format!("{spec}: regularity"));
        }
    }
    if discrepancies.is_empty() {
        Ok(format!(
            "{} rings, {pairs} membership pairs, 0 discrepancies",
            rings.len()
        ))
    } else {
        Err(format!(
            "{} discrepancies, first {}",
            discrepancies.len(),
            discrepancies[0]
        ))
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let n = rng.random_range(1..=max_order);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn criterion_7() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0fe);
    for i in 0..100 {
        let g = random_graph(&mut rng, 20);
        let found = max_clique(&g, &limits).map_err(|e| e.to_string())?;
        let brute = brute_force_clique(&g).map_err(|e| e.to_string())?;
        if found.size != brute || !g.is_clique(&found.witness) {
            return Err(format!("clique graph {i}: {} vs {brute}", found.size));
        }
    }
    for i in 0..100 {
        let g = random_graph(&mut rng, 12);
        let found = chromatic_number(&g, &limits).map_err(|e| e.to_string())?;
        let brute = brute_force_chromatic(&g).map_err(|e| e.to_string())?;
        if found.count != brute || !g.is_proper_coloring(&found.assignment) {
            return Err(format!("coloring graph {i}: {} vs {brute}", found.count));
        }
    }
    Ok("100 clique and 100 coloring instances, 0 discrepancies".into())
}

fn criterion_8() -> Outcome {
    let rings = regular_suite_rings();
    let mut associate_pairs = 0usize;
    for spec in &rings {
        let g = CozeroGraph::build(spec).map_err(|e| e.to_string())?;
        let graph = g.graph();
        let signatures: Vec<_> = g
            .labels()
            .iter()
            .map(|x| oracle::principal_ideal(spec, x))
            .collect();
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if signatures[u] != signatures[v] {
                    continue;
                }
                associate_pairs += 1;
                if graph.has_edge(u, v) || graph.neighbors(u) != graph.neighbors(v) {
                    return Err(format!(
                        "{spec}: associates {} {} differ",
                        g.label(u),
                        g.label(v)
                    ));
                }
            }
        }
        let parts = g.nzc_partition().map_err(|e| format!("{spec}: {e}"))?;
        let n = spec.factor_count();
        let mut seen = vec![0usize; g.order()];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                seen[v] += 1;
                if g.label(v).residues().iter().filter(|&&r| r == 0).count() != i + 1 {
                    return Err(format!("{spec}: {} in A_{}", g.label(v), i + 1));
                }
            }
            // one vertex per associate class; over Z2 that is the whole part
            let mut reps: Vec<usize> = Vec::new();
            for &v in part {
                if reps.iter().all(|&r| signatures[r] != signatures[v]) {
                    reps.push(v);
                }
            }
            let boolean = spec.moduli().iter().all(|&m| m == 2);
            if !graph.is_clique(&reps) || (boolean && !graph.is_clique(part)) {
                return Err(format!("{spec}: A_{} is not complete", i + 1));
            }
            if boolean && part.len() != choose(n, i + 1) {
                return Err(format!("{spec}: |A_{}| = {}", i + 1, part.len()));
            }
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(format!("{spec}: parts do not partition the vertices"));
        }
    }
    Ok(format!(
        "{} regular rings, {associate_pairs} associate pairs, parts complete",
        rings.len()
    ))
}

fn criterion_9() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cozero"))
            .args(["verify", "--format", "json"])
            .env_remove("COZERO_MAX_CARDINALITY")
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    if first.status.code() != Some(0) || second.status.code() != Some(0) {
        return Err(format!(
            "exit status {:?} / {:?}: {}",
            first.status.code(),
            second.status.code(),
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if first.stdout != second.stdout {
        return Err("outputs differ".into());
    }
    let reports: serde_json::Value =
        serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    let count = reports.as_array().map_or(0, Vec::len);
    Ok(format!(
        "{count} reports, {} identical bytes, exit 0",
        first.stdout.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("formula on Z2^n", criterion_1),
        ("formula on mixed fields", criterion_2),
        ("perfection", criterion_3),
        ("quotient reduction", criterion_4),
        ("null graphs", criterion_5),
        ("oracle equivalence", criterion_6),
        ("solver exactness", criterion_7),
        ("associate and zero-count properties", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS [{elapsed:.1?}] {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {} {name}: FAIL [{elapsed:.1?}] {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
