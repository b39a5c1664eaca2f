//! Acceptance suite: eight criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p perfectsolve --test acceptance -- --nocapture`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use perfectsolve::basic::recognize_basic;
use perfectsolve::berge::is_berge_small;
use perfectsolve::decompose::{build_block, validate_certificate, BlockSide, DecompositionTrace};
use perfectsolve::detect::{enumerate_quadruples, find_end, forcing};
use perfectsolve::io::{generate, random_trigraph, GeneratorSpec};
use perfectsolve::oracle::{alpha_bf, chi_bf, compatible_fragments_bf, has_bsp_bf, omega_bf, proper_2joins_bf};
use perfectsolve::trigraph::classify_class_f;
use perfectsolve::{alpha, color, main_solve, robust_solve, ColorOutcome, Error, RobustOutcome, SolveOptions, Trigraph};
use perfectsolve::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS: u64 = 1200;

/// Small instance from the generator: sizes 8 to 14, every fifth a graph.
fn corpus_spec(seed: u64) -> GeneratorSpec {
    let spec = GeneratorSpec::new(seed, 8 + (seed % 7) as usize);
    if seed % 5 == 0 {
        spec.graph()
    } else {
        spec
    }
}

struct Instance {
    seed: u64,
    t: Trigraph,
    in_class: bool,
}

fn corpus() -> Vec<Instance> {
    (0..CORPUS)
        .map(|seed| {
            let (t, _) = generate(&corpus_spec(seed)).expect("generator");
            let in_class =
                is_berge_small(&t).unwrap() && classify_class_f(&t).in_class && !has_bsp_bf(&t).unwrap();
            Instance { seed, t, in_class }
        })
        .collect()
}

fn as_graph(t: &Trigraph) -> Option<Graph> {
    t.is_graph().then(|| t.full_realization())
}

type Outcome = Result<String, String>;

fn oracle_equivalence(corpus: &[Instance]) -> Outcome {
    let (mut solved, mut certs, mut in_class) = (0, 0, 0);
    for inst in corpus {
        let t = &inst.t;
        let exact = alpha_bf(t).unwrap().0;
        in_class += inst.in_class as usize;
        match alpha(t) {
            Ok(out) => {
                solved += 1;
                if out.alpha != exact {
                    return Err(format!("seed {}: alpha {} but exhaustive {}", inst.seed, out.alpha, exact));
                }
            }
            Err(Error::NotInClass(cert)) => {
                certs += 1;
                if inst.in_class {
                    return Err(format!("seed {}: in-class instance rejected: {}", inst.seed, cert.reason));
                }
                validate_certificate(&cert).map_err(|e| format!("seed {}: certificate invalid: {e}", inst.seed))?;
            }
            Err(e) => return Err(format!("seed {}: {e}", inst.seed)),
        }
    }
    Ok(format!("{} instances, {in_class} in class, {solved} solved exactly, {certs} certificates validated", corpus.len()))
}

fn coloring_correctness(corpus: &[Instance]) -> Outcome {
    let mut colored = 0;
    for inst in corpus {
        let Some(g) = as_graph(&inst.t) else { continue };
        match color(&g).map_err(|e| e.to_string())? {
            ColorOutcome::Colored(c) => {
                colored += 1;
                c.validate(&g).map_err(|e| format!("seed {}: {e}", inst.seed))?;
                let (omega, chi) = (omega_bf(&g).unwrap(), chi_bf(&g).unwrap());
                if c.num_colors != omega || c.num_colors != chi {
                    return Err(format!("seed {}: {} colours, omega {omega}, chi {chi}", inst.seed, c.num_colors));
                }
                let cover = robust_solve(&g.complement()).map_err(|e| e.to_string())?;
                cover.validate(&g.complement()).map_err(|e| format!("seed {}: {e}", inst.seed))?;
                match cover {
                    RobustOutcome::Optimal { stable_set, clique_cover } => {
                        // a clique of G and a partition of V into stable sets of G
                        if stable_set.len() != c.num_colors || clique_cover.len() != c.num_colors {
                            return Err(format!("seed {}: dual sizes differ", inst.seed));
                        }
                    }
                    _ => return Err(format!("seed {}: no dual cover for a coloured graph", inst.seed)),
                }
            }
            ColorOutcome::NotInClass(cert) => {
                validate_certificate(&cert).map_err(|e| format!("seed {}: {e}", inst.seed))?;
            }
            ColorOutcome::Imperfect(c) => {
                return Err(format!("seed {}: Berge graph reported imperfect ({} cliques)", inst.seed, c.cliques.len()));
            }
        }
    }
    if colored == 0 {
        return Err("no graph was coloured".into());
    }
    Ok(format!("{colored} graphs coloured with omega = chi colours and an equal dual cover"))
}

fn iteration_bound(corpus: &[Instance]) -> Outcome {
    let (mut classes, mut max_iter) = (0, 0);
    for inst in corpus {
        let Some(g) = as_graph(&inst.t) else { continue };
        if let ColorOutcome::Colored(c) = color(&g).map_err(|e| e.to_string())? {
            let n = g.vertex_count();
            for s in &c.class_stats {
                classes += 1;
                max_iter = max_iter.max(s.iterations);
                if s.iterations > n || !s.full_rank {
                    return Err(format!("seed {}: {} iterations, full rank {}", inst.seed, s.iterations, s.full_rank));
                }
            }
        }
    }
    Ok(format!("{classes} colour classes, at most {max_iter} iterations each, full rank throughout"))
}

fn gadget_identities(corpus: &[Instance]) -> Outcome {
    let opts = SolveOptions { verify_gadgets: true };
    let mut checks = 0;
    for inst in corpus {
        match main_solve(&inst.t, &[], &opts) {
            Ok(out) => {
                checks += out.stats.gadget_checks;
                if let Some(m) = out.stats.gadget_mismatches.first() {
                    return Err(format!("seed {}: {m}", inst.seed));
                }
            }
            Err(e) if inst.in_class => return Err(format!("seed {}: in-class instance failed: {e}", inst.seed)),
            Err(_) => {}
        }
    }
    if checks == 0 {
        return Err("no decomposition step was checked".into());
    }
    Ok(format!("{checks} decomposition steps matched exhaustive alpha of both sides"))
}

/// Seeds `{a1, b1} ∪ extra` for one or two extra vertices. Absence of a
/// fragment is only claimed for seeds of four or more vertices; three-vertex
/// seeds (used by detection) may close early without one.
fn forcing_minimality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0c1);
    let (mut runs, mut found) = (0, 0);
    for i in 0..200 {
        let n = rng.gen_range(6..=10);
        let t = random_trigraph(&mut rng, n, 0.45, 0.1);
        for z in enumerate_quadruples(&t) {
            let all = compatible_fragments_bf(&t, &z).unwrap();
            let free: Vec<usize> = t.vertices().filter(|&u| ![z.a1, z.b1, z.a2, z.b2].contains(&u)).collect();
            let mut seeds: Vec<VertexSet> = free.iter().map(|&u| [z.a1, z.b1, u].into()).collect();
            for (k, &u) in free.iter().enumerate() {
                seeds.extend(free[k + 1..].iter().map(|&v| VertexSet::from([z.a1, z.b1, u, v])));
            }
            for r0 in seeds {
                runs += 1;
                let containing: Vec<_> = all.iter().filter(|s| r0.is_subset(&s.x())).collect();
                match forcing(&t, &z, &r0) {
                    Some(s) => {
                        found += 1;
                        if !s.violations(&t).is_empty() || !s.is_compatible_with(&z) || !r0.is_subset(&s.x()) {
                            return Err(format!("trigraph {i}: invalid fragment {:?}", s.x()));
                        }
                        if let Some(c) = containing.iter().find(|c| !s.x().is_subset(&c.x())) {
                            return Err(format!("trigraph {i}: {:?} is not inside {:?}", s.x(), c.x()));
                        }
                    }
                    None if r0.len() >= 4 => {
                        if let Some(c) = containing.first() {
                            return Err(format!("trigraph {i}: missed fragment {:?} from seed {r0:?}", c.x()));
                        }
                    }
                    None => {}
                }
            }
        }
    }
    Ok(format!("{runs} seeded runs on 200 trigraphs, {found} fragments, all valid and minimal"))
}

fn blocks_of(t: &Trigraph) -> Result<Vec<Trigraph>, String> {
    let mut splits = proper_2joins_bf(t).unwrap();
    for mut s in proper_2joins_bf(&t.complement()).unwrap() {
        s.complemented = true;
        splits.push(s);
    }
    let mut out = Vec::new();
    for s in &splits {
        for side in [BlockSide::First, BlockSide::Second] {
            out.push(build_block(t, s, side).map_err(|e| format!("block of {s:?}: {e}"))?.trigraph);
        }
    }
    Ok(out)
}

fn structural_closure(corpus: &[Instance]) -> Outcome {
    let (mut instances, mut blocks, mut ends) = (0, 0, 0);
    for inst in corpus.iter().filter(|i| i.in_class && i.t.vertex_count() <= 12) {
        instances += 1;
        for b in blocks_of(&inst.t).map_err(|e| format!("seed {}: {e}", inst.seed))? {
            blocks += 1;
            if !is_berge_small(&b).unwrap() || !classify_class_f(&b).in_class || has_bsp_bf(&b).unwrap() {
                return Err(format!("seed {}: block {b:?} leaves the class", inst.seed));
            }
        }
        if let Some((end, block)) = find_end(&inst.t) {
            ends += 1;
            if recognize_basic(&block.trigraph).is_none() {
                return Err(format!("seed {}: end {:?} has a block that is not basic", inst.seed, end.x()));
            }
        }
    }
    if instances == 0 {
        return Err("no in-class instance with at most 12 vertices".into());
    }
    Ok(format!("{instances} in-class instances, {blocks} blocks in the class, {ends} end blocks basic"))
}

fn recursion_shape(corpus: &[Instance]) -> Outcome {
    let mut nodes = 0;
    let mut bad = None;
    for inst in corpus {
        let Ok(out) = alpha(&inst.t) else { continue };
        out.trace.walk(&mut |node| {
            if let DecompositionTrace::Decomposition { n, n_x, n_y, small_calls, big_calls, .. } = *node {
                nodes += 1;
                let ok = 6 <= n_x && n_x <= n_y && n_x + n_y <= n + 6 && small_calls <= 4 && big_calls == 1;
                if !ok && bad.is_none() {
                    bad = Some(format!(
                        "seed {}: n {n}, blocks {n_x} and {n_y}, {small_calls} small and {big_calls} big calls",
                        inst.seed
                    ));
                }
            }
        });
    }
    match bad {
        Some(b) => Err(b),
        None if nodes == 0 => Err("no decomposition node".into()),
        None => Ok(format!("{nodes} internal nodes with 6 <= |T_X| <= |T_Y|, |T_X| + |T_Y| <= n + 6, <= 4 + 1 calls")),
    }
}

/// Least-squares slope of `ln y` against `ln x`.
fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    num / den
}

fn soft_scaling() -> Outcome {
    let mut points = Vec::new();
    let mut report = Vec::new();
    let mut at_200 = Duration::ZERO;
    for target in [50usize, 100, 200, 400] {
        let mut hit = None;
        for seed in 0..40 {
            let (t, _) = generate(&GeneratorSpec::new(seed, target)).map_err(|e| e.to_string())?;
            let n = t.vertex_count();
            if n * 10 < target * 9 {
                continue;
            }
            let start = Instant::now();
            let res = alpha(&t);
            let mut took = start.elapsed();
            if res.is_ok() {
                // short runs are noisy; keep the best of three
                if took < Duration::from_secs(1) {
                    for _ in 0..2 {
                        let start = Instant::now();
                        alpha(&t).map_err(|e| e.to_string())?;
                        took = took.min(start.elapsed());
                    }
                }
                hit = Some((seed, n, took));
                break;
            }
        }
        let (seed, n, took) = hit.ok_or_else(|| format!("no solved instance near {target} vertices"))?;
        if target == 200 {
            at_200 = took;
        }
        points.push((n as f64, took.as_secs_f64().max(1e-6)));
        report.push(format!("n={n} (seed {seed}) {:.2}s", took.as_secs_f64()));
    }
    let slope = loglog_slope(&points);
    let summary = format!("{}; fitted exponent {slope:.2}", report.join(", "));
    if slope > 6.0 || at_200 > Duration::from_secs(60) {
        return Err(summary);
    }
    Ok(summary)
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(msg) => println!("PASS {id} {name} ({secs:.1}s): {msg}"),
        Err(msg) => println!("FAIL {id} {name} ({secs:.1}s): {msg}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let corpus = corpus();
    let results = [
        run(1, "oracle equivalence", || oracle_equivalence(&corpus)),
        run(2, "coloring correctness", || coloring_correctness(&corpus)),
        run(3, "iteration bound", || iteration_bound(&corpus)),
        run(4, "gadget identities", || gadget_identities(&corpus)),
        run(5, "forcing minimality", forcing_minimality),
        run(6, "structural closure", || structural_closure(&corpus)),
        run(7, "recursion shape", || recursion_shape(&corpus)),
        run(8, "soft scaling", soft_scaling),
    ];
    let failed: Vec<usize> = (1..=8).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
