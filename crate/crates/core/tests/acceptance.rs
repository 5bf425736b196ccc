//! Acceptance suite: one line per criterion with the measured time against
//! its runtime target.
//!
//! Criterion 4 fails on Π(A2) and Π(A3): the literal `G_I(ww0) = -G_I(w)`
//! identity needs `R_w0 = -I`, which holds for B2 only. The test prints the
//! failure and asserts that nothing else in that criterion fails.

use std::time::Instant;

use gmatrix::claims::{run_group, Params, DEFAULT_SEED};
use gmatrix::report::Report;

struct Criterion {
    id: usize,
    title: &'static str,
    groups: &'static [&'static str],
    target: f64,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "G-matrix identity for tilting ideals", groups: &["thm3.1"], target: 60.0 },
    Criterion { id: 2, title: "Cartan, Coxeter and Euler form", groups: &["prop3.3", "cor3.2"], target: 10.0 },
    Criterion { id: 3, title: "Auslander ideals and R_w", groups: &["thm5.4", "cor5"], target: 120.0 },
    Criterion { id: 4, title: "preprojective ideals", groups: &["thm6.7"], target: 300.0 },
    Criterion { id: 5, title: "mutation layer", groups: &["thm3.11"], target: 10.0 },
    Criterion { id: 6, title: "Nakayama and Coxeter suite", groups: &["prop4.1", "prop4.2", "prop4.4"], target: 30.0 },
    Criterion { id: 7, title: "2-term silting complexes", groups: &["thm7.3"], target: 30.0 },
    Criterion { id: 8, title: "structural invariants", groups: &["invariants", "prop3.12"], target: 60.0 },
    Criterion { id: 9, title: "negative controls", groups: &["negative", "prop3.6"], target: 5.0 },
];

/// Failures accepted as documented deviations.
fn known_deviation(r: &Report) -> bool {
    r.claim == "cor-6.11(2)" && (r.algebra == "preprojective:A2" || r.algebra == "preprojective:A3")
}

fn main() {
    let params = Params { n: None, algebra: None, seed: DEFAULT_SEED };
    let mut unexpected = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let mut reports = Vec::new();
        for g in c.groups {
            match run_group(g, &params) {
                Ok(r) => reports.extend(r),
                Err(e) => unexpected.push(format!("criterion {}: group {g} errored: {e}", c.id)),
            }
        }
        let secs = start.elapsed().as_secs_f64();
        let failed: Vec<&Report> = reports.iter().filter(|r| !r.pass).collect();
        let on_time = secs < c.target;
        let pass = failed.is_empty() && on_time && !reports.is_empty();
        println!(
            "criterion {}: {} [{}] {} checks, {} failed, {:.2}s (target < {:.0}s)",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            reports.len(),
            failed.len(),
            secs,
            c.target
        );
        for r in &failed {
            println!("  failed: {} on {}{}", r.claim, r.algebra, r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default());
            if !known_deviation(r) {
                unexpected.push(format!("criterion {}: {} on {}", c.id, r.claim, r.algebra));
            }
        }
        if reports.is_empty() {
            unexpected.push(format!("criterion {}: no checks ran", c.id));
        }
        if !on_time {
            unexpected.push(format!("criterion {}: {secs:.2}s over target", c.id));
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:#?}");
        std::process::exit(1);
    }
    println!("acceptance: only documented deviations failed");
}
