//! The ten acceptance criteria. Run with `--nocapture` to see one line per
//! criterion; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use ischur_core::{
    run_suite, Composition, SchurAlgebra, Suite, SuiteConfig, ThetaMatrix, WeylGroup,
};

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(suite: Suite, grids: &[(usize, usize)]) -> Outcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    for &(n, r) in grids {
        match run_suite(suite, &SuiteConfig::new(n, r)) {
            Ok(rep) => {
                cases += rep.cases;
                if let Some(f) = rep.failures.first() {
                    failures.push(format!(
                        "({n},{r}) {} failures, first: {}",
                        rep.failures.len(),
                        f.case
                    ));
                }
            }
            Err(e) => failures.push(format!("({n},{r}) error: {e}")),
        }
    }
    let grids: Vec<String> = grids.iter().map(|(n, r)| format!("({n},{r})")).collect();
    let mut detail = format!("{suite} on {}: {cases} cases", grids.join(" "));
    if !failures.is_empty() {
        detail = format!("{detail}; {}", failures.join("; "));
    }
    Outcome {
        ok: failures.is_empty(),
        detail,
    }
}

fn dimensions() -> Outcome {
    let frozen = [(1, 1, 2), (1, 2, 3), (2, 1, 8), (2, 2, 36)];
    let mut bad = Vec::new();
    for (n, r) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)] {
        let g = WeylGroup::get(r).unwrap();
        let lams = Composition::all(n, r);
        let mut triples = 0;
        let mut matrices = std::collections::BTreeSet::new();
        for l in &lams {
            for m in &lams {
                for d in g.min_double_coset_reps(l, m).unwrap() {
                    triples += 1;
                    let a = g.matrix_of_triple(l, d, m).unwrap();
                    if g.triple_of_matrix(&a).unwrap() != (l.clone(), d, m.clone()) {
                        bad.push(format!("({n},{r}) triple round trip"));
                    }
                    matrices.insert(a);
                }
            }
        }
        let xi = ThetaMatrix::all(n, r);
        let dim = SchurAlgebra::get(n, r).unwrap().dim();
        if triples != xi.len() || matrices.len() != xi.len() || dim != xi.len() {
            bad.push(format!(
                "({n},{r}) |Xi| = {}, triples = {triples}, image = {}",
                xi.len(),
                matrices.len()
            ));
        }
        if let Some(&(_, _, want)) = frozen.iter().find(|f| f.0 == n && f.1 == r) {
            if xi.len() != want {
                bad.push(format!("({n},{r}) expected {want}, got {}", xi.len()));
            }
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            "dimensions 2, 3, 8, 36 and triple bijection on six grids".into()
        } else {
            bad.join("; ")
        },
    }
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        (
            "dimension and bijection",
            Duration::from_secs(5),
            Box::new(dimensions),
        ),
        (
            "short formulas",
            Duration::from_secs(120),
            Box::new(|| suites(Suite::Short, &[(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)])),
        ),
        (
            "multi-step formulas",
            Duration::from_secs(180),
            Box::new(|| suites(Suite::Multi, &[(2, 2), (2, 3)])),
        ),
        (
            "long formulas",
            Duration::from_secs(300),
            Box::new(|| suites(Suite::Long, &[(1, 2), (2, 2), (2, 3)])),
        ),
        (
            "triangularity",
            Duration::from_secs(120),
            Box::new(|| suites(Suite::Triangular, &[(1, 2), (2, 2)])),
        ),
        (
            "leading terms",
            Duration::from_secs(60),
            Box::new(|| suites(Suite::Leading, &[(2, 2)])),
        ),
        (
            "tensor agreement and commutation",
            Duration::from_secs(120),
            Box::new(|| suites(Suite::Commuting, &[(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)])),
        ),
        (
            "defining relations",
            Duration::from_secs(60),
            Box::new(|| suites(Suite::Relations, &[(2, 2), (1, 3)])),
        ),
        (
            "divided powers and commutations",
            Duration::from_secs(120),
            Box::new(|| suites(Suite::Divided, &[(2, 2), (2, 3), (3, 3)])),
        ),
        (
            "k-binomials",
            Duration::from_secs(30),
            Box::new(|| suites(Suite::Kbinom, &[(2, 2), (3, 2)])),
        ),
    ];

    let mut failed = Vec::new();
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let ok = out.ok && took <= *budget;
        println!(
            "criterion {}: {} {name} ({}; {:.2} s, budget {} s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            budget.as_secs()
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
