//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.
//!
//! Ground truth is the BFS oracle; nothing here reuses the path-class code to
//! produce an expected value.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rayon::prelude::*;

use circulant::diameter::diameter_exact_sequential;
use circulant::path::{Direction, PathShape};
use circulant::{
    bfs_distances, bounds_report, build_adjacency, canonical_classes, classify_case,
    diameter_exact, diameter_formula, distance_from_zero, formula_witness, oracle_diameter,
    realize_path, reduce_walk, sweep, CirculantParams, FormulaCase, SweepOptions, WalkSpec,
};

const GRID_N_MIN: u64 = 5;
const GRID_N_MAX: u64 = 400;
const GRID_BUDGET: Duration = Duration::from_secs(120);
const LARGE_N: u64 = 1_000_000;
const LARGE_S: u64 = 997;
const LARGE_BUDGET: Duration = Duration::from_secs(5);
const PROPERTY_CASES: u32 = 200;

/// Diameters computed by BFS over the explicit adjacency before the
/// algorithm existed, then frozen.
const SPOT_DIAMETERS: [(u64, u64, u64); 7] = [
    (12, 3, 3),
    (10, 4, 2),
    (13, 5, 2),
    (14, 5, 3),
    (16, 5, 4),
    (13, 4, 3),
    (14, 4, 3),
];

fn grid() -> Vec<CirculantParams> {
    (GRID_N_MIN..=GRID_N_MAX)
        .flat_map(|n| (2..=(n - 1) / 2).map(move |s| CirculantParams::new(n, s).unwrap()))
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn oracle_equivalence(cells: &[CirculantParams]) -> Outcome {
    let start = Instant::now();
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|p| {
            let bfs = bfs_distances(&build_adjacency(p), 0).unwrap();
            for i in 0..p.n() {
                let d = distance_from_zero(p, i).unwrap().value;
                if d != bfs[i as usize] {
                    return Some(format!("d({i}) in C_{}(1,{}): {d} vs bfs {}", p.n(), p.s(), bfs[i as usize]));
                }
            }
            let exact = diameter_exact(p);
            let oracle = oracle_diameter(p);
            if exact.value != oracle.value || exact.witnesses != oracle.witnesses {
                return Some(format!(
                    "diam C_{}(1,{}): {} {:?} vs oracle {} {:?}",
                    p.n(), p.s(), exact.value, exact.witnesses, oracle.value, oracle.witnesses
                ));
            }
            None
        })
        .collect();
    let elapsed = start.elapsed();
    Outcome::check(
        failures.is_empty() && elapsed < GRID_BUDGET,
        format!(
            "{} cells, {} mismatches{}, {:.1?}",
            cells.len(),
            failures.len(),
            failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default(),
            elapsed
        ),
    )
}

fn formula_equivalence(cells: &[CirculantParams]) -> Outcome {
    let results: Vec<(bool, bool)> = cells
        .par_iter()
        .map(|p| {
            let covered = classify_case(&p.decompose(), p) != FormulaCase::Uncovered;
            let ok = match diameter_formula(p) {
                Some(f) => covered && f.value == oracle_diameter(p).value,
                None => !covered,
            };
            (covered, ok)
        })
        .collect();
    let uncovered = results.iter().filter(|(c, _)| !c).count();
    let mismatches = results.iter().filter(|(_, ok)| !ok).count();
    Outcome::check(
        mismatches == 0,
        format!(
            "{} covered cells, {mismatches} mismatches; uncovered {uncovered}/{} = {:.2}%",
            cells.len() - uncovered,
            cells.len(),
            100.0 * uncovered as f64 / cells.len() as f64
        ),
    )
}

fn table_reproduction() -> Outcome {
    use Direction::{Clockwise as Cw, Counterclockwise as Ccw};
    let p = CirculantParams::new(10, 4).unwrap();
    let classes = canonical_classes(&p, 6).unwrap();
    let rows: [(PathShape, u64, &[u64]); 4] = [
        (PathShape::new(2, Cw, 1, Cw), 3, &[0, 1, 2, 6]),
        (PathShape::new(2, Ccw, 2, Cw), 4, &[0, 9, 8, 2, 6]),
        (PathShape::new(0, Cw, 4, Cw), 4, &[0, 4, 8, 2, 6]),
        (PathShape::new(0, Cw, 1, Ccw), 1, &[0, 6]),
    ];
    let mut missing = Vec::new();
    for (shape, len, vertices) in rows {
        let present = classes.iter().any(|c| c.shape == shape && c.len() == len);
        let realized = realize_path(&p, &shape, 6).map(|r| r.vertices).unwrap_or_default();
        if !present || realized != vertices {
            missing.push(shape.to_string());
        }
    }
    let d6 = distance_from_zero(&p, 6).unwrap().value;
    Outcome::check(
        missing.is_empty() && d6 == 1,
        format!("rows missing: {missing:?}; d(6) = {d6}"),
    )
}

fn witness_validity(cells: &[CirculantParams]) -> Outcome {
    let results: Vec<Option<bool>> = cells
        .par_iter()
        .map(|p| {
            formula_witness(p).map(|w| {
                let bfs = bfs_distances(&build_adjacency(p), 0).unwrap();
                bfs[w as usize] == *bfs.iter().max().unwrap()
            })
        })
        .collect();
    let defined = results.iter().flatten().count();
    let bad = results.iter().flatten().filter(|ok| !**ok).count();
    Outcome::check(defined > 0 && bad == 0, format!("{defined} witnesses, {bad} invalid"))
}

fn bound_domination(cells: &[CirculantParams]) -> Outcome {
    let bad = cells
        .par_iter()
        .filter(|p| {
            let b = bounds_report(p);
            let d = oracle_diameter(p).value;
            let combined_ok = b.combined == b.du.min(b.gobel_neutel).min(b.new_bound);
            !(d <= b.du && d <= b.gobel_neutel && d <= b.new_bound && combined_ok)
        })
        .count();
    Outcome::check(bad == 0, format!("{} cells, {bad} violations", cells.len()))
}

fn spot_values() -> Outcome {
    let mut wrong = Vec::new();
    for (n, s, want) in SPOT_DIAMETERS {
        let p = CirculantParams::new(n, s).unwrap();
        let got = diameter_exact(&p).value;
        let oracle = oracle_diameter(&p).value;
        if got != want || oracle != want {
            wrong.push(format!("C_{n}(1,{s}): got {got}, oracle {oracle}, want {want}"));
        }
    }
    Outcome::check(wrong.is_empty(), format!("{} graphs, wrong: {wrong:?}", SPOT_DIAMETERS.len()))
}

fn triple() -> impl Strategy<Value = (CirculantParams, u64)> {
    (5u64..=600)
        .prop_flat_map(|n| (Just(n), 2..=(n - 1) / 2))
        .prop_flat_map(|(n, s)| (Just(CirculantParams::new(n, s).unwrap()), 0..n))
}

fn property_suites() -> Outcome {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    let mut failures = Vec::new();

    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let symmetric = runner.run(&triple(), |(p, i)| {
        let d = distance_from_zero(&p, i).unwrap().value;
        let mirror = distance_from_zero(&p, (p.n() - i) % p.n()).unwrap().value;
        prop_assert_eq!(d, mirror);
        let adjacent = p.circ_abs(i) == 1 || p.circ_abs(i) == p.s();
        prop_assert_eq!(d == 1, adjacent);
        prop_assert_eq!(d == 0, i == 0);
        Ok(())
    });
    if let Err(e) = symmetric {
        failures.push(format!("symmetry/adjacency: {e}"));
    }

    let walks = (
        triple(),
        0u64..40,
        0u64..40,
        0u64..40,
        0u64..40,
    );
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let reduced = runner.run(&walks, |((p, _), po, mo, pi, mi)| {
        let w = WalkSpec { plus_outer: po, minus_outer: mo, plus_inner: pi, minus_inner: mi };
        let shape = reduce_walk(&w);
        prop_assert!(shape.len() <= w.len());
        prop_assert_eq!(shape.endpoint(&p), w.endpoint(&p));
        Ok(())
    });
    if let Err(e) = reduced {
        failures.push(format!("reduce_walk: {e}"));
    }

    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let realized = runner.run(&triple(), |(p, i)| {
        for class in canonical_classes(&p, i).unwrap() {
            let r = realize_path(&p, &class.shape, i).unwrap();
            prop_assert_eq!(*r.vertices.first().unwrap(), 0);
            prop_assert_eq!(*r.vertices.last().unwrap(), i);
            prop_assert_eq!(r.vertices.len() as u64 - 1, class.len());
        }
        Ok(())
    });
    if let Err(e) = realized {
        failures.push(format!("realize_path: {e}"));
    }

    Outcome::check(
        failures.is_empty(),
        format!("{PROPERTY_CASES} cases per suite, failures: {failures:?}"),
    )
}

fn performance() -> Outcome {
    let p = CirculantParams::new(LARGE_N, LARGE_S).unwrap();
    let start = Instant::now();
    let r = diameter_exact_sequential(&p);
    let large = start.elapsed();

    let mut opts = SweepOptions::new(GRID_N_MIN, GRID_N_MAX);
    opts.verify_oracle = true;
    let start = Instant::now();
    let rows = sweep(&opts);
    let grid = start.elapsed();
    let verified = rows.iter().all(|r| r.verified() && r.agree_oracle == Some(true));

    Outcome::check(
        large < LARGE_BUDGET && grid < GRID_BUDGET && verified,
        format!(
            "C_{LARGE_N}(1,{LARGE_S}) diam {} in {large:.2?} (single thread, budget {LARGE_BUDGET:?}); \
             sweep {}..{} with oracle: {} rows in {grid:.2?}, all verified: {verified}",
            r.value,
            GRID_N_MIN,
            GRID_N_MAX,
            rows.len()
        ),
    )
}

fn main() -> ExitCode {
    let cells = grid();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 oracle equivalence", Box::new(|| oracle_equivalence(&cells))),
        ("2 formula equivalence", Box::new(|| formula_equivalence(&cells))),
        ("3 table reproduction C_10(1,4), i=6", Box::new(table_reproduction)),
        ("4 witness validity", Box::new(|| witness_validity(&cells))),
        ("5 bound domination", Box::new(|| bound_domination(&cells))),
        ("6 spot values", Box::new(spot_values)),
        ("7 property suites", Box::new(property_suites)),
        ("8 performance", Box::new(performance)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
