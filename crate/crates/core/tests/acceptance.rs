//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::io::Write;
use std::time::{Duration, Instant};

use p5gem::classify::classify;
use p5gem::instances::{
    gallery_g1, gallery_g2, gen_class_instance, gen_target_delta, irreducible_clique_expansions,
    sample_irreducible_pendant, BagMode, GenSpec,
};
use p5gem::pattern::{clique_number, find_induced, Pattern};
use p5gem::reductions::{extend_list_coloring, find_d1_catalog, CatalogShape, ListAssignment};
use p5gem::solver::{
    back_degree_profile, case_branches, exact_chromatic, replay, solve, solve_with, SolveOptions,
};
use p5gem::structure::{clique_reduce, expand, lift_coloring, Template, TemplateId};
use p5gem::{verify_coloring, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// written past the test harness's capture so every line shows in the run log
fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stdout().lock(), "criterion {criterion}: {verdict} ({detail})");
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn skeleton(class: TemplateId, mode: BagMode) -> GenSpec {
    GenSpec { class, sizes: vec![], mode, seed: 0, pendant: vec![] }
}

#[test]
fn criterion_1_gallery_sharpness() {
    let g1 = gallery_g1();
    let start = Instant::now();
    let (chi1, _) = exact_chromatic(&g1).unwrap();
    let t1 = start.elapsed();
    let g2 = gallery_g2(9).unwrap();
    let start = Instant::now();
    let (chi2, _) = exact_chromatic(&g2).unwrap();
    let t2 = start.elapsed();
    let got = (g1.max_degree(), clique_number(&g1).0, chi1, g2.max_degree(), clique_number(&g2).0, chi2);
    let ok = got == (8, 6, 8, 9, 7, 8) && t1 < Duration::from_secs(30) && t2 < Duration::from_secs(5);
    report(1, ok, &format!("G1 (Δ, ω, χ) = {:?} in {t1:?}; G2(9) = {:?} in {t2:?}", (got.0, got.1, got.2), (got.3, got.4, got.5)));
    assert!(ok);
}

struct SuiteResult {
    instances: usize,
    failures: Vec<String>,
    replay_failures: Vec<String>,
    median: Duration,
}

fn coloring_suite() -> SuiteResult {
    let mut times = Vec::new();
    let mut failures = Vec::new();
    let mut replay_failures = Vec::new();
    for class in TemplateId::ALL {
        for mode in [BagMode::Clique, BagMode::Cograph] {
            for seed in 0..23u64 {
                let spec = match gen_target_delta(&skeleton(class, mode), 9, seed) {
                    Ok(s) => s,
                    Err(e) => {
                        failures.push(format!("{class} {mode:?} seed {seed}: {e}"));
                        continue;
                    }
                };
                let (g, _) = gen_class_instance(&spec).unwrap();
                assert!(g.n() <= 40 && clique_number(&g).0 <= 8 && g.max_degree() == 9);
                let start = Instant::now();
                let outcome = solve(&g);
                times.push(start.elapsed());
                match outcome {
                    Ok((c, trace)) if verify_coloring(&g, &c) && c.palette <= 8 => match replay(&g, &trace) {
                        Ok(r) if verify_coloring(&g, &r) && r.palette == c.palette => {}
                        other => replay_failures.push(format!("{spec:?}: {other:?}")),
                    },
                    other => failures.push(format!("{spec:?}: {other:?}")),
                }
            }
        }
    }
    times.sort();
    let median = times.get(times.len() / 2).copied().unwrap_or_default();
    SuiteResult { instances: times.len(), failures, replay_failures, median }
}

#[test]
fn criterion_2_delta_nine_suite() {
    let r = coloring_suite();
    let ok = r.instances >= 500 && r.failures.is_empty() && r.median < Duration::from_secs(1);
    report(2, ok, &format!("{} instances, {} failures, median {:?}", r.instances, r.failures.len(), r.median));
    assert!(ok, "{:#?}", r.failures);
}

#[test]
fn criterion_3_delta_reduction() {
    let mut count = 0;
    let mut failures = Vec::new();
    for t in 10..=12 {
        let g = gallery_g2(t).unwrap();
        if solve(&g).is_ok() {
            failures.push(format!("strict solve accepted G2({t}), which contains a gem"));
        }
        match solve_with(&g, SolveOptions { require_p5_gem_free: false }) {
            Ok((c, _)) if verify_coloring(&g, &c) && c.palette as usize <= t - 1 => {}
            other => failures.push(format!("G2({t}): {other:?}")),
        }
        count += 1;
    }
    for class in TemplateId::ALL {
        for (i, target) in [10usize, 11, 12].into_iter().enumerate() {
            for mode in [BagMode::Clique, BagMode::Cograph] {
                let spec = match gen_target_delta(&skeleton(class, mode), target, 100 + i as u64) {
                    Ok(s) => s,
                    Err(e) => {
                        failures.push(format!("{class} Δ={target} {mode:?}: {e}"));
                        continue;
                    }
                };
                let (g, _) = gen_class_instance(&spec).unwrap();
                match solve(&g) {
                    Ok((c, _)) if verify_coloring(&g, &c) && c.palette as usize <= target - 1 => {}
                    other => failures.push(format!("{spec:?}: {other:?}")),
                }
                count += 1;
            }
        }
    }
    let ok = count >= 50 && failures.is_empty();
    report(3, ok, &format!("{count} instances with Δ in 10..=12, {} failures", failures.len()));
    assert!(ok, "{failures:#?}");
}

fn naive_colorable(g: &Graph, k: u32, colors: &mut Vec<u32>) -> bool {
    let v = colors.len();
    if v == g.n() {
        return true;
    }
    for c in 1..=k {
        if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
            colors.push(c);
            if naive_colorable(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

#[test]
fn criterion_4_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut mismatches = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let naive = (0..=n as u32).find(|&k| naive_colorable(&g, k, &mut Vec::new())).unwrap() as usize;
        let (chi, c) = exact_chromatic(&g).unwrap();
        if chi != naive || !verify_coloring(&g, &c) || c.colors_used() != chi {
            mismatches += 1;
        }
    }
    report(4, mismatches == 0, &format!("200 graphs, {mismatches} mismatches"));
    assert_eq!(mismatches, 0);
}

#[test]
fn criterion_5_clique_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    let mut failures = Vec::new();
    while tested < 120 {
        let class = *TemplateId::ALL.choose(&mut rng).unwrap();
        let t = Template::new(class);
        let (bags, pendant) = if t.pendant().is_some() {
            (t.len() - 1, (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=3)).collect())
        } else {
            (t.len(), vec![])
        };
        let sizes = (0..bags).map(|_| rng.gen_range(1..=3)).collect();
        let spec = GenSpec { class, sizes, mode: BagMode::Cograph, seed: rng.gen(), pendant };
        let Ok((g, part)) = gen_class_instance(&spec) else { continue };
        if g.n() > 18 {
            continue;
        }
        tested += 1;
        let red = clique_reduce(&g, &t, &part).unwrap();
        let (chi, _) = exact_chromatic(&g).unwrap();
        let (chi_star, star_coloring) = exact_chromatic(&red.star).unwrap();
        let omega = (clique_number(&g).0, clique_number(&red.star).0);
        let lifted = lift_coloring(&g, &red, &star_coloring);
        let lift_ok = lifted.as_ref().is_ok_and(|c| verify_coloring(&g, c));
        if omega.0 != omega.1 || chi != chi_star || !lift_ok {
            failures.push(format!("{spec:?}: ω {omega:?}, χ ({chi}, {chi_star}), lift {lifted:?}"));
        }
    }
    let ok = failures.is_empty();
    report(5, ok, &format!("{tested} cograph expansions with n <= 18, {} failures", failures.len()));
    assert!(ok, "{failures:#?}");
}

#[test]
fn criterion_6_case_order_degeneracy() {
    let mut violations = Vec::new();
    let mut counts = Vec::new();
    for branch in case_branches() {
        let template = Template::new(branch.template);
        let instances: Vec<(Graph, _)> = if branch.template == TemplateId::H {
            sample_irreducible_pendant(6, 200_000)
        } else {
            irreducible_clique_expansions(branch.template, 8)
                .into_iter()
                .map(|sizes| expand(&template, &sizes.iter().map(|&s| Graph::complete(s)).collect::<Vec<_>>(), &[]))
                .collect()
        };
        let mut found = 0;
        for (g, bags) in instances {
            if !branch.applies(&bags.sizes()) {
                continue;
            }
            found += 1;
            let (sets, seq) = branch.select(&bags);
            let removed: Vec<usize> = sets.concat();
            let (rest, map) = g.without(&removed);
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in map.iter().enumerate() {
                local[v] = i;
            }
            let order: Vec<usize> = seq.iter().map(|&v| local[v]).collect();
            let profile = back_degree_profile(&rest, &order).unwrap();
            if profile > branch.bound(8) {
                violations.push(format!("{} {}: sizes {:?} profile {profile}", branch.template, branch.name, bags.sizes()));
            }
        }
        counts.push((format!("{} {}", branch.template, branch.name), found));
    }
    let short: Vec<_> = counts.iter().filter(|(_, c)| *c < 20).collect();
    let ok = violations.is_empty() && short.is_empty();
    report(6, ok, &format!("{} violations; irreducible instances per branch {counts:?}", violations.len()));
    assert!(violations.is_empty(), "{violations:#?}");
    assert!(short.is_empty(), "fewer than 20 irreducible instances exist for {short:?}");
}

#[test]
fn criterion_7_d1_extension_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let start = Instant::now();
    let mut failures = 0;
    let mut total = 0;
    for shape in CatalogShape::all() {
        let h = shape.graph();
        for _ in 0..10_000 {
            let lists = (0..h.n())
                .map(|v| {
                    let mut palette: Vec<u32> = (1..=8).collect();
                    palette.shuffle(&mut rng);
                    palette.truncate(h.degree(v) - 1);
                    palette
                })
                .collect();
            total += 1;
            let l = ListAssignment { lists };
            match extend_list_coloring(&h, &l) {
                Ok(c) if (0..h.n()).all(|v| l.lists[v].contains(&c[v]))
                    && h.edges().into_iter().all(|(u, v)| c[u] != c[v]) => {}
                _ => failures += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(60);
    report(7, ok, &format!("{total} assignments over {} shapes, {failures} failures in {elapsed:?}", CatalogShape::all().len()));
    assert!(ok);
}

fn brute_first_tuple(g: &Graph, p: Pattern) -> Option<Vec<usize>> {
    fn go(g: &Graph, p: Pattern, t: &mut Vec<usize>) -> bool {
        if t.len() == p.order() {
            return true;
        }
        for v in 0..g.n() {
            if t.contains(&v) {
                continue;
            }
            t.push(v);
            let i = t.len() - 1;
            if (0..i).all(|j| g.has_edge(t[i], t[j]) == p.adjacent(i, j)) && go(g, p, t) {
                return true;
            }
            t.pop();
        }
        false
    }
    let mut t = Vec::new();
    go(g, p, &mut t).then_some(t)
}

fn brute_has_catalog(g: &Graph) -> bool {
    (0u32..1 << g.n()).filter(|m| matches!(m.count_ones(), 8 | 9)).any(|m| {
        let set: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
        CatalogShape::identify(&g.induced_subgraph(&set).unwrap().0).is_some()
    })
}

#[test]
fn criterion_8_detection_differential() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut disagreements = 0;
    let mut catalog_hits = 0;
    for i in 0..500 {
        let n = rng.gen_range(1..=9);
        // a third of the graphs are dense so catalog shapes actually occur
        let g = if i % 3 == 0 {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.85) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        } else {
            random_graph(&mut rng, n)
        };
        for p in [Pattern::P5, Pattern::Gem, Pattern::C5] {
            if find_induced(&g, p).map(|w| w.vertices) != brute_first_tuple(&g, p) {
                disagreements += 1;
            }
        }
        let fast = find_d1_catalog(&g);
        if fast.is_some() {
            catalog_hits += 1;
        }
        let witness_ok = fast.as_ref().is_none_or(|w| {
            let (sub, _) = g.induced_subgraph(&w.vertices()).unwrap();
            CatalogShape::identify(&sub) == Some(w.shape)
        });
        if fast.is_some() != brute_has_catalog(&g) || !witness_ok {
            disagreements += 1;
        }
    }
    report(8, disagreements == 0, &format!("500 graphs, {catalog_hits} with catalog shapes, {disagreements} disagreements"));
    assert_eq!(disagreements, 0);
}

#[test]
fn criterion_9_trace_replay() {
    let r = coloring_suite();
    let ok = r.instances >= 500 && r.replay_failures.is_empty();
    report(9, ok, &format!("{} traces replayed, {} failures", r.instances - r.failures.len(), r.replay_failures.len()));
    assert!(ok, "{:#?}", r.replay_failures);
}

#[test]
fn classification_of_generated_members() {
    // ground truth versus the classifier on a handful of members
    for class in TemplateId::ALL {
        let spec = gen_target_delta(&skeleton(class, BagMode::Clique), 9, 1).unwrap();
        let (g, _) = gen_class_instance(&spec).unwrap();
        assert!(classify(&g).is_ok(), "{class}");
    }
}
