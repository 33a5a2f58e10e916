//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any fails.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqembed::embed::{
    embed_4colorable, embed_in_dimension, embed_in_plane, parity_coloring,
    sequential_planar_embed_detailed,
};
use seqembed::graph::{
    chromatic_number, enumerate_colorings, families, format_edge_list, is_proper_coloring,
};
use seqembed::hyper::{
    is_strong_coloring, projection_strong_coloring, realizability_obstruction_3uniform,
    sharp_construction, strong_chromatic_number, validate_segment_hypergraph, Hypergraph,
};
use seqembed::lattice::{
    format_placement, interior_lattice_count, is_sequential_segment, verify_embedding, Checks,
};
use seqembed::planar::straight_line_grid_drawing;
use seqembed::{random, BigPlacement, Error, Graph, IntPlacement, IntPoint, LatticePoint};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Counts integer points strictly inside `ab` by walking the coordinate with
/// the largest nonzero difference and testing every intermediate value.
fn brute_interior(a: &[i64], b: &[i64]) -> i64 {
    let (axis, _) = a
        .iter()
        .zip(b)
        .map(|(x, y)| (y - x).abs())
        .enumerate()
        .max_by_key(|&(_, d)| d)
        .unwrap();
    let span = b[axis] - a[axis];
    let steps = span.abs();
    (1..steps)
        .filter(|&t| {
            a.iter()
                .zip(b)
                .all(|(x, y)| ((y - x) * t) % steps == 0)
        })
        .count() as i64
}

fn criterion_1() -> Outcome {
    let mut pairs = 0u64;
    for ax in -15..=15i64 {
        for ay in -15..=15i64 {
            for bx in -15..=15i64 {
                for by in -15..=15i64 {
                    if (ax, ay) == (bx, by) {
                        continue;
                    }
                    let got = interior_lattice_count(
                        &IntPoint::xy(ax, ay),
                        &IntPoint::xy(bx, by),
                    )
                    .unwrap();
                    let want = brute_interior(&[ax, ay], &[bx, by]);
                    ensure(got == want, || format!("({ax},{ay})-({bx},{by}): {got} vs {want}"))?;
                    pairs += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut done = 0;
    while done < 1000 {
        let a: Vec<i64> = (0..3).map(|_| rng.gen_range(-30..=30)).collect();
        let b: Vec<i64> = (0..3).map(|_| rng.gen_range(-30..=30)).collect();
        if a == b {
            continue;
        }
        let got = interior_lattice_count(&IntPoint::new(a.clone()), &IntPoint::new(b.clone())).unwrap();
        ensure(got == brute_interior(&a, &b), || format!("{a:?}-{b:?}"))?;
        done += 1;
    }
    Ok(format!("{pairs} planar pairs, {done} pairs in dimension 3"))
}

fn c5_with_chords() -> Graph {
    let mut g = families::cycle(5);
    g.add_edge(0, 2).unwrap();
    g.add_edge(0, 3).unwrap();
    g
}

/// Placements from the four-class construction, serialized in order.
fn four_colorable_corpus(seed: u64) -> Vec<(Graph, BigPlacement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=30);
        let p = rng.gen_range(0.1..0.9);
        let (g, c) = random::four_partite(&mut rng, n, p);
        let placement = embed_4colorable(&g, &c).unwrap();
        out.push((g, placement));
    }
    for g in [families::complete(4), c5_with_chords(), families::octahedron()] {
        let placement = embed_in_plane(&g).unwrap();
        out.push((g, placement));
    }
    out
}

fn criterion_2_artifact(seed: u64) -> Result<String, String> {
    let mut artifact = String::new();
    let corpus = four_colorable_corpus(seed);
    for (g, p) in &corpus {
        let report = verify_embedding(g, p, Checks::SEQUENTIAL.union(Checks::ONE_EDGE_PER_LINE))
            .map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{}{}", format_edge_list(g), report.to_text()))?;
        artifact.push_str(&format_placement(p));
        artifact.push_str("--\n");
    }
    Ok(artifact)
}

fn criterion_2() -> Outcome {
    criterion_2_artifact(2)?;
    Ok("203 graphs, sequential and one-edge-per-line clean".into())
}

fn maximal_planar_corpus(seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut corpus = vec![
        families::complete(3),
        families::complete(4),
        families::octahedron(),
        families::icosahedron(),
        families::grid(5, 5),
    ];
    for _ in 0..50 {
        let n = rng.gen_range(3..=25);
        let g = random::maximal_planar(&mut rng, n);
        corpus.push(random::shuffle_labels(&mut rng, &g));
    }
    corpus
}

fn criterion_5_artifact(seed: u64) -> Result<(String, Vec<BigPlacement>), String> {
    let mut artifact = String::new();
    let mut placements = Vec::new();
    let mut max_rounds = 0;
    for g in maximal_planar_corpus(seed) {
        let run = sequential_planar_embed_detailed(&g).map_err(|e| e.to_string())?;
        let report = verify_embedding(&g, &run.placement, Checks::ALL).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{}{}", format_edge_list(&g), report.to_text()))?;
        max_rounds = max_rounds.max(run.rounds);
        artifact.push_str(&format_placement(&run.placement));
        artifact.push_str("--\n");
        placements.push(run.placement);
    }
    writeln!(artifact, "max_rounds={max_rounds}").unwrap();
    Ok((artifact, placements))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let check = |g: &Graph, p: &BigPlacement, limit: usize| -> Result<(), String> {
        let c = parity_coloring(p);
        ensure(is_proper_coloring(g, &c).unwrap(), || format!("improper on {}", format_edge_list(g)))?;
        ensure(c.colors_used() <= limit, || format!("{} classes", c.colors_used()))
    };
    for (g, p) in four_colorable_corpus(2) {
        check(&g, &p, 4)?;
        checked += 1;
    }
    let (_, placements) = criterion_5_artifact(5)?;
    for (g, p) in maximal_planar_corpus(5).iter().zip(&placements) {
        check(g, p, 4)?;
        checked += 1;
    }
    let k8 = families::complete(8);
    let p: BigPlacement = embed_in_dimension(&k8, 3).map_err(|e| e.to_string())?;
    check(&k8, &p, 8)?;
    Ok(format!("{} embeddings", checked + 1))
}

/// One representative per isomorphism class of graphs on 4 vertices.
fn graphs_on_four_vertices() -> Vec<Graph> {
    let pairs: Vec<(u64, u64)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    let perms: Vec<Vec<u64>> = {
        let mut all = Vec::new();
        for a in 0..4u64 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = vec![a, b, c, d];
                        if p.iter().collect::<BTreeSet<_>>().len() == 4 {
                            all.push(p);
                        }
                    }
                }
            }
        }
        all
    };
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0..1u32 << pairs.len() {
        let edges: Vec<(u64, u64)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut es: Vec<(u64, u64)> = edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u as usize], p[v as usize]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                es.sort();
                es
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let mut g = Graph::with_vertices(0..4);
            for (u, v) in edges {
                g.add_edge(u, v).unwrap();
            }
            reps.push(g);
        }
    }
    reps
}

fn criterion_4() -> Outcome {
    let small = graphs_on_four_vertices();
    ensure(small.len() == 11, || format!("{} classes on 4 vertices", small.len()))?;
    let named = [
        families::complete(5),
        families::complete_bipartite(3, 3),
        families::petersen(),
        families::octahedron(),
    ];
    for g in small.iter().chain(&named) {
        let chi = chromatic_number(g);
        match embed_in_plane::<BigInt>(g) {
            Ok(p) => {
                ensure(chi <= 4, || format!("embedded a graph with chromatic number {chi}"))?;
                let report = verify_embedding(g, &p, Checks::SEQUENTIAL).unwrap();
                ensure(report.passed(), || report.to_text())?;
            }
            Err(e) => {
                ensure(chi > 4, || format!("failed on chromatic number {chi}: {e}"))?;
                ensure(matches!(e, Error::Uncolorable { .. }) && e.exit_code() == 2, || {
                    format!("wrong failure {e:?}")
                })?;
            }
        }
    }
    let k5 = families::complete(5);
    ensure(embed_in_plane::<BigInt>(&k5).map_err(|e| e.exit_code()) == Err(2), || "K5 exit code".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut trials = 0;
    while trials < 1000 {
        let pts: Vec<IntPoint> = (0..5)
            .map(|_| LatticePoint::xy(rng.gen_range(-50..=50), rng.gen_range(-50..=50)))
            .collect();
        if pts.iter().collect::<BTreeSet<_>>().len() < 5 {
            continue;
        }
        let mut p = IntPlacement::new(2);
        for (v, pt) in pts.into_iter().enumerate() {
            p.insert(v as u64, pt).unwrap();
        }
        let bad = k5
            .edges()
            .any(|(u, v)| !is_sequential_segment(p.point(u).unwrap(), p.point(v).unwrap()).unwrap());
        ensure(bad, || format!("sequential K5 placement {p:?}"))?;
        trials += 1;
    }
    Ok(format!("{} graphs, {trials} random K5 placements", small.len() + named.len()))
}

fn criterion_5() -> Outcome {
    let (artifact, placements) = criterion_5_artifact(5)?;
    let rounds = artifact.lines().last().unwrap().to_string();
    Ok(format!("{} graphs clean, {rounds}", placements.len()))
}

fn criterion_6() -> Outcome {
    let corpus = maximal_planar_corpus(5);
    for g in &corpus {
        let n = g.vertex_count() as i64;
        let drawing = straight_line_grid_drawing::<i64>(g).map_err(|e| e.to_string())?;
        let p = &drawing.placement;
        let report = verify_embedding(g, p, Checks::PLANAR).unwrap();
        ensure(report.passed(), || report.to_text())?;
        for (v, pt) in p.iter() {
            let (x, y) = (*pt.x(), *pt.y());
            ensure((0..=2 * n - 4).contains(&x) && (0..=n - 2).contains(&y), || {
                format!("vertex {v} at ({x},{y}) outside ({})x({}) for n={n}", 2 * n - 4, n - 2)
            })?;
        }
    }
    Ok(format!("{} drawings within (2n-4)x(n-2)", corpus.len()))
}

fn criterion_7_artifact(seed: u64) -> Result<String, String> {
    let mut artifact = String::new();
    for r in [2usize, 3] {
        let h = sharp_construction::<i64>(r).map_err(|e| e.to_string())?;
        ensure(validate_segment_hypergraph(&h).is_valid(), || format!("sharp({r}) invalid"))?;
        let (abs, points) = h.to_abstract();
        // lower bound: every two grid points share an edge
        let grid: Vec<u64> = (0..points.len() as u64)
            .filter(|&i| {
                let p = &points[i as usize];
                (0..r as i64).contains(p.x()) && (0..r as i64).contains(p.y())
            })
            .collect();
        ensure(grid.len() == r * r, || "grid points missing".into())?;
        for (i, &a) in grid.iter().enumerate() {
            for &b in &grid[i + 1..] {
                ensure(abs.edges().iter().any(|e| e.contains(&a) && e.contains(&b)), || {
                    format!("grid points {a},{b} share no edge")
                })?;
            }
        }
        // upper bound: projection coloring
        let c = projection_strong_coloring(&h).map_err(|e| e.to_string())?;
        ensure(is_strong_coloring(&abs, &c).unwrap() && c.colors_used() == r * r, || {
            "projection coloring".into()
        })?;
        let chi = strong_chromatic_number(&abs);
        ensure(chi == r * r, || format!("sharp({r}) has chi_s {chi}"))?;
        writeln!(artifact, "sharp {r} chi_s={chi}").unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in 2..=4usize {
        for _ in 0..100 {
            let h = random::segment_hypergraph::<_, i64>(&mut rng, r, 10, 3);
            ensure(validate_segment_hypergraph(&h).is_valid(), || "generator produced invalid input".into())?;
            let (abs, _) = h.to_abstract();
            let c = projection_strong_coloring(&h).map_err(|e| e.to_string())?;
            ensure(is_strong_coloring(&abs, &c).unwrap(), || format!("not strong on {h:?}"))?;
            let chi = strong_chromatic_number(&abs);
            ensure(chi <= r * r, || format!("chi_s {chi} > {} on {h:?}", r * r))?;
            writeln!(artifact, "r={r} edges={} chi_s={chi}", h.edges.len()).unwrap();
        }
    }
    Ok(artifact)
}

fn criterion_7() -> Outcome {
    criterion_7_artifact(7)?;
    Ok("sharp r=2,3 at r^2; 300 random hypergraphs within r^2".into())
}

fn criterion_8() -> Outcome {
    let h = Hypergraph::from_edges([vec![1, 2, 3], vec![1, 4, 5], vec![2, 5, 6], vec![3, 4, 6]]);
    let chi = strong_chromatic_number(&h);
    ensure(chi == 3, || format!("chi_s = {chi}"))?;
    ensure(realizability_obstruction_3uniform(&h) == Ok(true), || "obstruction not detected".into())?;
    Ok("chi_s=3, obstruction detected".into())
}

fn criterion_9() -> Outcome {
    let g = families::octahedron();
    let colorings = enumerate_colorings(&g, 4);
    ensure(!colorings.is_empty(), || "no colorings".into())?;
    for c in &colorings {
        let p: BigPlacement = embed_4colorable(&g, c).map_err(|e| e.to_string())?;
        let report = verify_embedding(&g, &p, Checks::PLANAR).unwrap();
        ensure(!report.passed(), || format!("planar embedding from {c:?}"))?;
    }
    Ok(format!("{} colorings, all non-planar", colorings.len()))
}

fn criterion_10() -> Outcome {
    let runs = || -> Result<(String, String, String), String> {
        Ok((criterion_2_artifact(2)?, criterion_5_artifact(5)?.0, criterion_7_artifact(7)?))
    };
    let a = runs()?;
    let b = runs()?;
    ensure(a.0 == b.0, || "criterion 2 artifacts differ".into())?;
    ensure(a.1 == b.1, || "criterion 5 artifacts differ".into())?;
    ensure(a.2 == b.2, || "criterion 7 artifacts differ".into())?;
    Ok(format!("{} bytes identical across runs", a.0.len() + a.1.len() + a.2.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("gcd count matches brute force", criterion_1),
        ("four-class embeddings are sequential", criterion_2),
        ("parity colorings are proper", criterion_3),
        ("plane embedding iff 4-colorable", criterion_4),
        ("sequential planar pipeline", criterion_5),
        ("grid drawing bounds", criterion_6),
        ("segment hypergraph strong coloring", criterion_7),
        ("non-realizable 3-uniform example", criterion_8),
        ("octahedron colorings never planar", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
