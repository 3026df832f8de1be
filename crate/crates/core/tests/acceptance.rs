//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Built without the test harness so the
//! report shows up in plain `cargo test` output.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use motif_kit::combinatorics::{iter_subsets, max_matching_with_cover, BipartiteGraph, Side};
use motif_kit::csct::{solve_csct, CsctInstance};
use motif_kit::estimators::{
    degree3_decomposition, dist_to_clique_set, dist_to_co_cluster_set, edge_cliques, greedy_vertex_clique_cover,
    is_co_cluster, max_leaf_oracle, min_vertex_cover,
};
use motif_kit::generators::{self, Reduction};
use motif_kit::sampling::{self, InstanceShape};
use motif_kit::solvers::{
    solve_brute, solve_co_cluster, solve_dist_clique, solve_edge_clique_cover, solve_max_leaf_xp,
    solve_vertex_clique_cover, solve_vertex_cover,
};
use motif_kit::{verify_solution, Coloring, Graph, Instance, Motif, SolveOutcome};
use rand::Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = took <= limit;
    let pass = out.ok && in_time;
    println!(
        "criterion {id} {name}: {} ({}; {:.2}s, limit {}s)",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn check_yes(inst: &Instance, out: &SolveOutcome) -> bool {
    match out {
        SolveOutcome::Yes(w) => verify_solution(inst, w).unwrap(),
        SolveOutcome::No => true,
    }
}

fn oracle_equivalence() -> Outcome {
    type Solver = fn(&Instance) -> SolveOutcome;
    let solvers: [(&str, Solver); 6] = [
        ("dist-clique", |i| solve_dist_clique(i).unwrap()),
        ("vc", |i| solve_vertex_cover(i).unwrap()),
        ("vcc", |i| solve_vertex_clique_cover(i, &greedy_vertex_clique_cover(&i.graph)).unwrap()),
        ("ecc", |i| solve_edge_clique_cover(i, &edge_cliques(&i.graph)).unwrap()),
        ("cocluster", |i| solve_co_cluster(i).unwrap()),
        ("maxleaf", |i| solve_max_leaf_xp(i).unwrap()),
    ];
    let shape = InstanceShape::default();
    let mut failures = Vec::new();
    let mut yes = 0;
    for (k, (name, solver)) in solvers.iter().enumerate() {
        let mut rng = sampling::rng(1000 + k as u64);
        for case in 0..200 {
            let inst = sampling::random_instance(&mut rng, &shape);
            let expect = solve_brute(&inst).unwrap();
            let got = solver(&inst);
            yes += got.is_yes() as usize;
            if got.is_yes() != expect.is_yes() || !check_yes(&inst, &got) {
                failures.push(format!("{name}#{case}"));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!("6x200 instances, {yes} YES, mismatches: {:?}", failures),
    }
}

fn csct_exhaustive(inst: &CsctInstance) -> bool {
    let m = inst.sets.len();
    (0u32..1 << m).any(|mask| {
        let chosen: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let mut covered = vec![false; inst.universe];
        let mut per_color: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in &chosen {
            for &e in &inst.sets[i].elements {
                covered[e] = true;
            }
            *per_color.entry(inst.sets[i].color).or_default() += 1;
        }
        covered.iter().all(|&c| c) && per_color.iter().all(|(c, k)| *k <= inst.thresholds[c])
    })
}

fn csct_correctness() -> Outcome {
    let mut rng = sampling::rng(2);
    let mut bad = 0;
    let mut some = 0;
    for _ in 0..200 {
        let n = rng.gen_range(0..=10);
        let m = rng.gen_range(0..=12);
        let colors = rng.gen_range(1..=3);
        let inst = sampling::random_csct(&mut rng, n, m, colors);
        let got = solve_csct(&inst).unwrap();
        some += got.is_some() as usize;
        let valid = got.as_ref().is_none_or(|s| inst.accepts(s));
        if got.is_some() != csct_exhaustive(&inst) || !valid {
            bad += 1;
        }
    }
    Outcome {
        ok: bad == 0,
        detail: format!("200 instances, {some} feasible, {bad} disagreements"),
    }
}

fn reduction_soundness() -> Outcome {
    let mut failures = Vec::new();
    let mut yes = BTreeMap::new();
    for (k, red) in Reduction::ALL.iter().enumerate() {
        let mut rng = sampling::rng(3000 + k as u64);
        for case in 0..50 {
            let source = generators::random_source(*red, &mut rng);
            let gen = source.generate().unwrap();
            let expect = source.solve_source();
            let got = gen.solve_designated().unwrap();
            *yes.entry(red.name()).or_insert(0) += expect as usize;
            if got.is_yes() != expect || !check_yes(&gen.instance, &got) {
                failures.push(format!("{}#{case}", red.name()));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!(
            "{} reductions x50, YES per reduction {:?}, mismatches {:?}",
            Reduction::ALL.len(),
            yes,
            failures
        ),
    }
}

fn structural_claims() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (k, red) in Reduction::ALL.iter().enumerate() {
        let mut rng = sampling::rng(4000 + k as u64);
        for case in 0..50 {
            let gen = generators::random_source(*red, &mut rng).generate().unwrap();
            checked += 1;
            if let Err(e) = gen.check_claims() {
                failures.push(format!("{}#{case}: {e}", red.name()));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!("{checked} generated instances, failures {:?}", failures),
    }
}

fn degree3_bounds() -> Outcome {
    let mut rng = sampling::rng(5);
    let mut bad = 0;
    let mut max_ratio = 0.0f64;
    for _ in 0..100 {
        let g = sampling::random_connected_non_cycle(&mut rng, 10);
        let ml = max_leaf_oracle(&g).unwrap();
        let dec = degree3_decomposition(&g).unwrap();
        let paths_ok = dec.paths.iter().all(|p| {
            p.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && g.induced(&p.vertices).m() + 1 == p.vertices.len()
        });
        if ml > 0 {
            max_ratio = max_ratio.max(dec.paths.len() as f64 / ml as f64);
        }
        if dec.s.len() > 4 * ml || dec.paths.len() > 5 * ml.max(1) || !paths_ok {
            bad += 1;
        }
    }
    Outcome {
        ok: bad == 0,
        detail: format!("100 graphs, {bad} violations, max paths/ml {max_ratio:.2}"),
    }
}

fn max_matching_exhaustive(b: &BipartiteGraph) -> usize {
    fn go(edges: &[(usize, usize)], i: usize, used_l: u32, used_r: u32) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(edges, i + 1, used_l, used_r);
        let (l, r) = edges[i];
        if used_l >> l & 1 == 0 && used_r >> r & 1 == 0 {
            skip.max(1 + go(edges, i + 1, used_l | 1 << l, used_r | 1 << r))
        } else {
            skip
        }
    }
    go(&b.edges().collect::<Vec<_>>(), 0, 0, 0)
}

fn matching_suite() -> Outcome {
    let mut rng = sampling::rng(6);
    let mut bad = 0;
    for _ in 0..500 {
        let (l, r) = (rng.gen_range(0..=7), rng.gen_range(0..=7));
        let p = rng.gen_range(0.1..0.7);
        let b = sampling::random_bipartite(&mut rng, l, r, p);
        let res = max_matching_with_cover(&b);
        let covers = b.edges().all(|(u, v)| {
            res.cover.contains(&Side::Left(u)) || res.cover.contains(&Side::Right(v))
        });
        if res.size() != max_matching_exhaustive(&b) || !covers || res.cover.len() != res.size() {
            bad += 1;
        }
    }
    Outcome {
        ok: bad == 0,
        detail: format!("500 bipartite graphs, {bad} violations"),
    }
}

fn exhaustive_min(g: &Graph, ok: impl Fn(&Graph, &[usize]) -> bool) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    iter_subsets(&all)
        .filter(|del| {
            let keep: Vec<usize> = all.iter().copied().filter(|v| !del.contains(v)).collect();
            ok(g, &keep)
        })
        .map(|d| d.len())
        .min()
        .unwrap()
}

fn estimator_minimality() -> Outcome {
    let mut rng = sampling::rng(7);
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = sampling::random_graph(&mut rng, n, p);
        let vc = exhaustive_min(&g, |g, keep| g.induced(keep).m() == 0);
        let dc = exhaustive_min(&g, |g, keep| g.is_clique(keep));
        let cc = exhaustive_min(&g, |g, keep| is_co_cluster(&g.induced(keep)));
        let (a, b, c) = (min_vertex_cover(&g), dist_to_clique_set(&g), dist_to_co_cluster_set(&g));
        let all: Vec<usize> = (0..n).collect();
        let rest = |del: &[usize]| -> Vec<usize> { all.iter().copied().filter(|v| !del.contains(v)).collect() };
        let valid = g.induced(&rest(&a)).m() == 0
            && g.is_clique(&rest(&b))
            && is_co_cluster(&g.induced(&rest(&c)));
        if a.len() != vc || b.len() != dc || c.len() != cc || !valid {
            bad += 1;
        }
    }
    Outcome {
        ok: bad == 0,
        detail: format!("100 graphs, {bad} mismatches"),
    }
}

/// A clique of `clique` vertices plus `k` outsiders, each missing many
/// clique neighbors so that the outsiders form the unique small deletion set.
fn clique_plus(clique: usize, k: usize, seed: u64) -> (Graph, Coloring) {
    let mut rng = sampling::rng(seed);
    let n = clique + k;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for x in clique..n {
        for u in 0..clique {
            if rng.gen_bool(0.05) {
                edges.push((u, x));
            }
        }
        for y in x + 1..n {
            if rng.gen_bool(0.3) {
                edges.push((x, y));
            }
        }
    }
    let colors = (0..n).map(|v| if v < clique { v % 6 } else { 6 + (v - clique) % 3 }).collect();
    (Graph::from_edges(n, &edges).unwrap(), Coloring::new(colors))
}

fn scaling_smoke() -> Outcome {
    let (g, col) = clique_plus(200, 12, 8);
    let mut details = Vec::new();
    let mut ok = true;
    // YES: every outsider plus connectors; NO: needs more outsider colors than exist
    let mut yes_motif = Motif::new();
    for c in 6..9 {
        yes_motif.add(c, 4);
    }
    for c in 0..6 {
        yes_motif.add(c, 2);
    }
    let no_motif = Motif::from_pairs([(6, 5), (0, 3)]).unwrap();
    // every outsider and nothing else: YES iff the outsiders induce a
    // connected graph, and every subset of them passes the color filter
    let outsiders: Vec<usize> = (200..212).collect();
    let outsiders_connected = motif_kit::connected_components(&g, &outsiders).len() == 1;
    let all_out = Motif::from_pairs([(6, 4), (7, 4), (8, 4)]).unwrap();
    let cases = [
        ("yes-case", yes_motif, true),
        ("no-case", no_motif, false),
        ("outsiders-only", all_out, outsiders_connected),
    ];
    for (label, motif, expect) in cases {
        let inst = Instance::new(g.clone(), col.clone(), motif).unwrap();
        let start = Instant::now();
        let out = solve_dist_clique(&inst).unwrap();
        ok &= check_yes(&inst, &out) && expect == out.is_yes();
        details.push(format!("{label} {} in {:.2}s", if out.is_yes() { "YES" } else { "NO" }, start.elapsed().as_secs_f64()));
    }
    let deletion = dist_to_clique_set(&g).len();
    ok &= deletion == 12;
    Outcome {
        ok,
        detail: format!("n=212, deletion set {deletion}, {}", details.join(", ")),
    }
}

fn main() {
    let results = [
        run(1, "oracle-equivalence", Duration::from_secs(120), oracle_equivalence),
        run(2, "csct-dp", Duration::from_secs(10), csct_correctness),
        run(3, "reduction-soundness", Duration::from_secs(120), reduction_soundness),
        run(4, "structural-claims", Duration::from_secs(5), structural_claims),
        run(5, "degree3-bounds", Duration::from_secs(30), degree3_bounds),
        run(6, "matching-koenig", Duration::from_secs(10), matching_suite),
        run(7, "estimator-minimality", Duration::from_secs(30), estimator_minimality),
        run(8, "dist-clique-scaling", Duration::from_secs(60), scaling_smoke),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &p)| !p).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
