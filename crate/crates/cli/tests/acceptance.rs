//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! runtime against a fixed budget, then exits nonzero if any criterion
//! failed for a reason other than a documented gap.
//!
//! Run alone with `cargo test --release -p tree-eigen-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use tree_eigen::composition::{blow_up_unchecked, check_plan};
use tree_eigen::harness::{
    check_class_c, check_kernel_basis, check_matching_nullity, check_simply_structured,
    check_skeleton, check_transfer, run_composition, run_pattern, SuiteReport, TreeSet,
};
use tree_eigen::linalg::eigenspace_dim;
use tree_eigen::rational::{format_vector, int};
use tree_eigen::tree_pattern::{nylen_nullity, transfer_null_pattern};
use tree_eigen::{
    adjacency_matrix, is_class_c, simply_structured_basis, validate_meta_skeleton,
    verify_eigenvector, BlowupPlan, Decomposition, MetaSkeletonSpec, Rational, Replacement, Tree,
    TreePatternMatrix,
};

const SEED: u64 = 0;

/// Why a failing alternation sub-check does not block the run.
const ALTERNATION_GAP: &str =
    "two boundary vertices can be adjacent in a skeleton (for example the tree \
     0-1, 0-2, 0-3, 1-4, 1-5 at eigenvalue 0), so alternation cannot hold; multiplicity, leaf and \
     forced-edge checks are unaffected";

struct Outcome {
    id: u32,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Duration,
    details: Vec<String>,
    /// Set when the only failure is a documented gap.
    gap: Option<&'static str>,
}

fn timed(
    id: u32,
    title: &'static str,
    budget_secs: u64,
    body: impl FnOnce(&mut Vec<String>) -> bool,
) -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let ok = body(&mut details);
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    if elapsed > budget {
        details.push(format!(
            "over budget: {:.1}s > {}s",
            elapsed.as_secs_f64(),
            budget_secs
        ));
    }
    Outcome {
        id,
        title,
        passed: ok && elapsed <= budget,
        elapsed,
        budget,
        details,
        gap: None,
    }
}

/// Summarizes a suite into `details` and returns whether every check passed.
fn suite(report: &SuiteReport, details: &mut Vec<String>) -> bool {
    let checks: u64 = report.checks.values().map(|t| t.checks).sum();
    details.push(format!(
        "{}: {} instances, {} checks",
        report.suite, report.instances, checks
    ));
    for (name, tally) in &report.checks {
        if let Some((index, what)) = &tally.first_failure {
            details.push(format!(
                "  {name}: {} failures, first at #{index}: {what}",
                tally.failures
            ));
        }
    }
    report.passed()
}

fn fixture(details: &mut Vec<String>, name: &str, ok: bool) -> bool {
    if !ok {
        details.push(format!("fixture failed: {name}"));
    }
    ok
}

fn tree(text: &str) -> Tree {
    Tree::parse(text).expect("fixture trees parse")
}

fn signs(v: &[tree_eigen::SignVector]) -> Vec<Vec<i8>> {
    v.iter().map(|x| x.entries().to_vec()).collect()
}

fn matching_trees() -> TreeSet {
    TreeSet::new(7, 8..=14, 1000, SEED)
}

fn sign_trees() -> TreeSet {
    TreeSet::new(8, 9..=10, 2000, SEED)
}

fn criterion_3(trees: &TreeSet) -> Outcome {
    let mut alternation_only = false;
    let mut outcome = timed(3, "skeleton multiplicity and structure", 180, |d| {
        let report = trees.run("skeleton", check_skeleton);
        let mut ok = suite(&report, d);
        let p5 = tree("a b\nb c\nc d\nd e");
        let a = adjacency_matrix(&p5);
        let dec = Decomposition::new(&a, &Rational::zero()).expect("P5 has eigenvalue 0");
        ok &= fixture(
            d,
            "P5 zero skeleton is a path on 5 vertices",
            dec.skeleton.len() == 5,
        );
        if let Some(obs) = report.observations.get("boundary_boundary_edge") {
            if obs.occurrences > 0 {
                let first = obs
                    .first_occurrence
                    .as_ref()
                    .map(|(_, s)| s.as_str())
                    .unwrap_or("");
                d.push(format!(
                    "alternation: {} of {} skeletons join two boundary vertices, first: {first}",
                    obs.occurrences, obs.examined
                ));
                alternation_only = ok;
                ok = false;
            }
        }
        ok
    });
    if alternation_only && outcome.elapsed <= outcome.budget {
        outcome.gap = Some(ALTERNATION_GAP);
    }
    outcome
}

fn criterion_5() -> Outcome {
    timed(5, "class membership by gadget reduction", 120, |d| {
        let mut ok = suite(&sign_trees().run("class_c", check_class_c), d);
        let k2 = is_class_c(&tree("a b"));
        ok &= fixture(
            d,
            "K2 certificate is all ones",
            k2.member && k2.certificate.map(|c| c.entries().to_vec()) == Some(vec![1, 1]),
        );
        let t6 = is_class_c(&tree("z r\nz w\nz y\ny u0\ny u1"));
        ok &= fixture(d, "T6 is a member", t6.member);
        ok &= fixture(
            d,
            "P6 is not a member",
            !is_class_c(&tree("a b\nb c\nc d\nd e\ne f")).member,
        );
        ok
    })
}

fn criterion_6() -> Outcome {
    timed(6, "{0, 1, -1} eigenspace bases", 180, |d| {
        let mut ok = suite(
            &sign_trees().run("simply_structured", check_simply_structured),
            d,
        );
        let p5 = simply_structured_basis(&tree("a b\nb c\nc d\nd e"), 1).map(|b| signs(&b));
        ok &= fixture(d, "P5 basis", p5.ok() == Some(vec![vec![1, 1, 0, -1, -1]]));
        let s221 = tree("m p1\np1 p2\nm q1\nq1 q2\nm s");
        let basis = simply_structured_basis(&s221, 1).map(|b| signs(&b));
        let a = adjacency_matrix(&s221);
        ok &= fixture(
            d,
            "S221 basis has one {0, 1, -1} vector",
            eigenspace_dim(&a, &Rational::one()) == 1
                && basis
                    .as_ref()
                    .is_ok_and(|b| b.len() == 1 && b[0].iter().any(|&e| e != 0)),
        );
        ok
    })
}

/// Meta skeleton m-a, m-a2, m-b, b-c without non-eigen vertices: the edge
/// b-c is in every maximum matching, so blowing it up regardless gives a
/// tree whose skeleton and multiplicity differ from the prediction.
fn negative_control(d: &mut Vec<String>) -> bool {
    let meta = tree("m a\nm a2\nm b\nb c");
    let spec = MetaSkeletonSpec::new(meta.clone(), &[], int(1)).expect("spec");
    let flagged = !validate_meta_skeleton(&spec).is_empty();
    let replacements = meta
        .labels()
        .iter()
        .map(|l| match l.as_str() {
            "a" | "a2" => Replacement::new(tree("x y")),
            _ => Replacement::single(),
        })
        .collect();
    let plan = BlowupPlan { replacements };
    let plan_ok = check_plan(&spec, &plan).is_empty();
    let Ok(b) = blow_up_unchecked(&spec, &plan) else {
        return fixture(d, "negative control blows up", false);
    };
    let a = adjacency_matrix(&b.tree);
    let actual = eigenspace_dim(&a, &int(1));
    let skeleton_differs = Decomposition::new(&a, &int(1))
        .map(|dec| dec.skeleton.canonical_form() != spec.expected_skeleton_form())
        .unwrap_or(true);
    d.push(format!(
        "negative control: flagged {flagged}, predicted {}, actual {actual}, skeleton differs {skeleton_differs}",
        b.predicted_multiplicity
    ));
    fixture(
        d,
        "negative control",
        flagged && plan_ok && actual != b.predicted_multiplicity && skeleton_differs,
    )
}

fn criterion_7() -> Outcome {
    timed(7, "composition from meta skeletons", 120, |d| {
        let ok = match run_composition(100, SEED) {
            Ok(r) => suite(&r, d),
            Err(e) => {
                d.push(format!("generator failed: {e}"));
                false
            }
        };
        ok & negative_control(d)
    })
}

fn criterion_8() -> Outcome {
    timed(8, "tree pattern matrix nullity and transfer", 120, |d| {
        let mut ok = suite(&run_pattern(500, SEED), d);
        let m = TreePatternMatrix::from_json(
            r#"{"order":3,"vertex_order":["a","b","c"],"entries":[["0","2","0"],["3","0","1"],["0","5","0"]]}"#,
        )
        .expect("fixture matrix");
        let zero = Rational::zero();
        let moved = transfer_null_pattern(&m, &[int(1), int(0), int(-1)]);
        ok &= fixture(
            d,
            "weighted path transfer",
            moved.as_ref().is_ok_and(|x| {
                format_vector(x) == ["1", "0", "-3"]
                    && verify_eigenvector(&m, &zero, x).unwrap_or(false)
            }),
        );
        ok &= fixture(
            d,
            "weighted path nullity",
            nylen_nullity(&m, &zero).ok() == Some(1),
        );
        ok
    })
}

fn criterion_9() -> Outcome {
    timed(9, "verify reports are reproducible", 240, |d| {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_tree-eigen"))
                .args(["verify", "--exhaustive-n", "6", "--seed", "7"])
                .env_remove("SEED")
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        d.push(format!(
            "report size {} bytes, exit {:?}",
            a.stdout.len(),
            a.status.code()
        ));
        a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout
    })
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        // Keeps `cargo test -- --list` from running the whole suite.
        return ExitCode::SUCCESS;
    }
    let trees = matching_trees();
    let mut outcomes = Vec::new();
    let mut report = |o: Outcome| {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {status} {} ({:.1}s of {}s)",
            o.id,
            o.title,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs()
        );
        for line in &o.details {
            println!("    {line}");
        }
        outcomes.push((o.id, o.passed, o.gap));
    };
    report(timed(1, "nullity equals unmatched vertex count", 60, |d| {
        suite(&trees.run("matching_nullity", check_matching_nullity), d)
    }));
    report(timed(2, "kernel basis from alternating paths", 60, |d| {
        suite(&trees.run("kernel_basis", check_kernel_basis), d)
    }));
    report(criterion_3(&trees));
    report(timed(4, "projection and lifting round trips", 180, |d| {
        suite(&trees.run("transfer", check_transfer), d)
    }));
    report(criterion_5());
    report(criterion_6());
    report(criterion_7());
    report(criterion_8());
    report(criterion_9());

    let mut blocking = 0;
    for &(id, passed, gap) in &outcomes {
        match (passed, gap) {
            (true, _) => {}
            (false, Some(why)) => println!("note: criterion {id} fails on a documented gap: {why}"),
            (false, None) => blocking += 1,
        }
    }
    let passed = outcomes.iter().filter(|(_, p, _)| *p).count();
    println!(
        "{passed} of {} criteria passed, {blocking} blocking failures",
        outcomes.len()
    );
    if blocking == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
