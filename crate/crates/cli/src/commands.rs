use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use tree_eigen::composition::{
    blow_up, complete_plan, generate_ingredients, parse_composition, validate_meta_skeleton,
};
use tree_eigen::harness::{run_all, VerifyConfig};
use tree_eigen::linalg::{eigenspace_dim, integer_spectrum};
use tree_eigen::matching::matching_number;
use tree_eigen::simply_structured::{
    has_simply_structured_basis, is_class_c, simply_structured_basis,
};
use tree_eigen::skeleton::{Decomposition, SkeletonVertex};
use tree_eigen::tree_pattern::{
    caveats, nullity_via_skeleton, nylen_nullity, pattern_support, transfer_null_pattern,
};
use tree_eigen::{
    adjacency_matrix, classify_vertices, eigenspace_basis, format_rational, parse_rational,
    verify_eigenvector, Forest, Rational, SignVector, Tree, TreePatternMatrix,
};

use crate::report::{edges, labels, rational, vector, Failure, Report};

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("reading {}: {e}", path.display())))
    }
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    Tree::parse(&read_input(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_lambda(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::input(format!("--lambda: {e}")))
}

fn graph_inputs(path: &Path, t: &Forest) -> Value {
    json!({
        "graph": path.display().to_string(),
        "vertex_order": labels(t, &(0..t.len()).collect::<Vec<_>>()),
        "edges": edges(t),
    })
}

/// Fails unless every vector passes the eigen-equation exactly.
fn verified(
    m: &TreePatternMatrix,
    lambda: &Rational,
    vectors: &[Vec<Rational>],
) -> Result<Value, Failure> {
    for x in vectors {
        if !verify_eigenvector(m, lambda, x)? {
            return Err(Failure::refusal(
                "internal consistency failure: emitted vector fails re-verification",
            ));
        }
    }
    Ok(Value::Array(vectors.iter().map(|x| vector(x)).collect()))
}

fn signs(vectors: &[SignVector]) -> Vec<Vec<Rational>> {
    vectors.iter().map(SignVector::to_rationals).collect()
}

pub fn spectrum(path: &Path) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let spectrum = integer_spectrum(&t);
    let integral: usize = spectrum.values().sum();
    let nu = matching_number(&t);
    let eigenvalues: Vec<Value> = spectrum
        .iter()
        .map(|(k, m)| json!({"lambda": k.to_string(), "multiplicity": m}))
        .collect();
    Ok(Report::new(
        "spectrum",
        graph_inputs(path, &t),
        json!({
            "vertices": t.len(),
            "integer_eigenvalues": eigenvalues,
            "non_integer_count": t.len() - integral,
            "matching_number": nu,
            "nullity": t.len() - 2 * nu,
        }),
    ))
}

fn support_json(t: &Forest, d: &Decomposition) -> Value {
    let s = &d.support;
    json!({
        "multiplicity": s.multiplicity,
        "support": labels(t, &s.support()),
        "always_zero": labels(t, &s.always_zero()),
        "boundary": labels(t, &s.boundary),
        "eigen_components": s.eigen_components.iter().map(|c| labels(t, c)).collect::<Vec<_>>(),
    })
}

pub fn eigenspace(path: &Path, lambda: &str) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let lambda = parse_lambda(lambda)?;
    let m = adjacency_matrix(&t);
    let basis = eigenspace_basis(&m, &lambda);
    if basis.dim() == 0 {
        return Err(Failure::refusal(format!(
            "{} is not an eigenvalue",
            format_rational(&lambda)
        )));
    }
    let mut inputs = graph_inputs(path, &t);
    inputs["lambda"] = rational(&lambda);
    let mut results = json!({
        "multiplicity": basis.dim(),
        "basis": verified(&m, &lambda, &basis.vectors)?,
    });
    let d = Decomposition::from_basis(&m, &basis)?;
    results["support"] = support_json(&t, &d);
    Ok(Report::new("eigenspace", inputs, results))
}

pub fn skeleton(path: &Path, lambda: &str, dot: Option<&Path>) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let lambda = parse_lambda(lambda)?;
    let m = adjacency_matrix(&t);
    let d = Decomposition::new(&m, &lambda)?;
    let sk = &d.skeleton;
    let vertices: Vec<Value> = sk
        .kinds
        .iter()
        .enumerate()
        .map(|(s, kind)| {
            let (k, members) = match kind {
                SkeletonVertex::Contracted { members, .. } => ("contracted", members.as_slice()),
                SkeletonVertex::Boundary(v) => ("boundary", std::slice::from_ref(v)),
            };
            json!({"label": sk.forest.label(s).to_string(), "kind": k, "members": labels(&t, members)})
        })
        .collect();
    let meta = d.meta_skeleton()?;
    let meta_vertices: Vec<Value> = (0..meta.tree.len())
        .map(|s| json!({"label": meta.tree.label(s).to_string(), "members": labels(&t, &meta.members[s])}))
        .collect();
    let violations: Vec<String> = sk
        .violations()
        .iter()
        .map(|v| v.describe(&sk.forest))
        .collect();
    if let Some(dot) = dot {
        std::fs::write(dot, sk.to_dot(&t))
            .map_err(|e| Failure::input(format!("writing {}: {e}", dot.display())))?;
    }
    let mut inputs = graph_inputs(path, &t);
    inputs["lambda"] = rational(&lambda);
    if let Some(dot) = dot {
        inputs["dot"] = json!(dot.display().to_string());
    }
    Ok(Report::new(
        "skeleton",
        inputs,
        json!({
            "support": support_json(&t, &d),
            "skeleton": {"vertices": vertices, "edges": edges(&sk.forest), "structure_notes": violations},
            "multiplicity_via_matching": d.multiplicity_via_matching(),
            "meta_skeleton": {
                "vertices": meta_vertices,
                "edges": edges(&meta.tree),
                "non_eigen": labels(&meta.tree, &meta.non_eigen),
            },
        }),
    ))
}

pub fn kernel_basis(path: &Path) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let class = classify_vertices(&t);
    let basis = tree_eigen::kernel_basis(&t);
    let m = adjacency_matrix(&t);
    let matching: Vec<Value> = class
        .matching
        .edges()
        .iter()
        .map(|&(u, v)| json!([t.label(u).to_string(), t.label(v).to_string()]))
        .collect();
    Ok(Report::new(
        "kernel-basis",
        graph_inputs(path, &t),
        json!({
            "matching": matching,
            "may_miss": labels(&t, &class.may_miss_set()),
            "never_missed": labels(&t, &class.never_missed_set()),
            "missed_by_matching": labels(&t, &class.missed),
            "nullity": basis.len(),
            "basis": verified(&m, &Rational::from_integer(0.into()), &signs(&basis))?,
        }),
    ))
}

pub fn classc(path: &Path) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let r = is_class_c(&t);
    let mut results = json!({"member": r.member});
    if let (Some(trace), Some(cert)) = (&r.trace, &r.certificate) {
        let m = adjacency_matrix(&t);
        results["certificate"] = verified(
            &m,
            &Rational::from_integer(1.into()),
            &signs(std::slice::from_ref(cert)),
        )?[0]
            .clone();
        let steps: Vec<Value> = trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "kept": t.label(s.kept).to_string(),
                    "removed": labels(&t, &s.removed()),
                })
            })
            .collect();
        results["reduction"] = json!({
            "steps": steps,
            "terminal": labels(&t, &[trace.terminal.0, trace.terminal.1]),
        });
    }
    Ok(Report::new("classc", graph_inputs(path, &t), results))
}

pub fn basis(path: &Path, lambda: &str) -> Result<Report, Failure> {
    let t = read_tree(path)?;
    let lambda_q = parse_lambda(lambda)?;
    let k = tree_eigen::rational::to_i64(&lambda_q)
        .filter(|k| (-1..=1).contains(k))
        .ok_or_else(|| {
            Failure::refusal(format!(
                "{{0, 1, -1}} bases exist only for eigenvalues 0, 1 and -1, not {lambda}"
            ))
        })?;
    if !has_simply_structured_basis(&t, k)? {
        return Err(Failure::refusal(format!(
            "the eigenspace for {k} has no basis with entries in {{0, 1, -1}}: some eigen-component has no {{1, -1}} eigenvector"
        )));
    }
    let basis = simply_structured_basis(&t, k)?;
    let m = adjacency_matrix(&t);
    let mut inputs = graph_inputs(path, &t);
    inputs["lambda"] = rational(&lambda_q);
    Ok(Report::new(
        "basis",
        inputs,
        json!({
            "multiplicity": basis.len(),
            "basis": verified(&m, &lambda_q, &signs(&basis))?,
        }),
    ))
}

pub fn compose(path: &Path, n_max: usize, seed: u64) -> Result<Report, Failure> {
    let text = read_input(path)?;
    let request =
        parse_composition(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let spec = &request.spec;
    let violations = validate_meta_skeleton(spec);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(|v| v.describe(&spec.tree)).collect();
        return Err(Failure::refusal(format!(
            "invalid meta skeleton: {}",
            text.join("; ")
        )));
    }
    let needs_search = request.replacements.iter().any(Option::is_none);
    let ingredients = if needs_search {
        generate_ingredients(&spec.lambda, n_max, seed)?
    } else {
        generate_ingredients(&spec.lambda, 0, seed)?
    };
    let plan = complete_plan(spec, request.replacements.clone(), &ingredients)?;
    let b = blow_up(spec, &plan)?;
    let m = adjacency_matrix(&b.tree);
    let exact = eigenspace_dim(&m, &spec.lambda);
    let recovered = Decomposition::new(&m, &spec.lambda)
        .map(|d| d.skeleton.canonical_form() == spec.expected_skeleton_form())
        .unwrap_or(false);
    let replacements: Vec<Value> = plan
        .replacements
        .iter()
        .enumerate()
        .map(|(v, r)| {
            json!({
                "vertex": spec.tree.label(v).to_string(),
                "tree": edges(&r.tree),
                "order": r.tree.len(),
                "attachment": r.tree.label(r.attachment).to_string(),
            })
        })
        .collect();
    let inputs = json!({
        "spec": path.display().to_string(),
        "lambda": rational(&spec.lambda),
        "meta_skeleton": edges(&spec.tree),
        "non_eigen": labels(&spec.tree, &spec.non_eigen),
        "n_max": n_max,
    });
    let report = Report::new(
        "compose",
        inputs,
        json!({
            "replacements": replacements,
            "tree": {"vertices": b.tree.len(), "edges": edges(&b.tree), "edge_list": b.tree.serialize()},
            "predicted_multiplicity": b.predicted_multiplicity,
            "exact_multiplicity": exact,
            "skeleton_matches_spec": recovered,
        }),
    );
    Ok(if needs_search {
        report.with_seed(seed)
    } else {
        report
    })
}

pub fn pattern(path: &Path, lambda: &str) -> Result<Report, Failure> {
    let text = read_input(path)?;
    let m = TreePatternMatrix::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let lambda = parse_lambda(lambda)?;
    let f = m.pattern();
    let s = pattern_support(&m, &lambda);
    let nylen = nylen_nullity(&m, &lambda)?;
    let exact = eigenspace_dim(&m, &lambda);
    let mut results = json!({
        "pattern_edges": edges(f),
        "support": labels(f, &s.support),
        "induced_components": s.induced_components,
        "outside_adjacent": s.outside_adjacent,
        "nylen_nullity": nylen,
        "exact_nullity": exact,
        "nullity_via_skeleton": nullity_via_skeleton(&m, &lambda)?,
        "caveats": caveats(&m),
    });
    if m.has_zero_diagonal() {
        let a = TreePatternMatrix::adjacency(f);
        let zero = Rational::from_integer(0.into());
        let moved = eigenspace_basis(&a, &zero)
            .vectors
            .iter()
            .map(|v| transfer_null_pattern(&m, v))
            .collect::<tree_eigen::Result<Vec<_>>>()?;
        results["transferred_null_basis"] = verified(&m, &zero, &moved)?;
    }
    let inputs = json!({
        "matrix": path.display().to_string(),
        "vertex_order": labels(f, &(0..f.len()).collect::<Vec<_>>()),
        "lambda": rational(&lambda),
    });
    Ok(Report::new("pattern", inputs, results))
}

pub fn verify(exhaustive_n: usize, samples: usize, seed: u64) -> Result<Report, Failure> {
    let config = VerifyConfig {
        exhaustive_n,
        samples,
        seed,
        ..VerifyConfig::default()
    };
    let report = run_all(&config)?;
    let inputs = serde_json::to_value(&config).expect("config serializes");
    let results = serde_json::to_value(&report).expect("report serializes");
    let mut out = Report::new("verify", inputs, results).with_seed(seed);
    out.failed = !report.passed;
    Ok(out)
}
