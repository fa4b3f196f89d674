use std::fmt::Write as _;

use braidlift_core::braid::{has_same_label_crossing, orbit_with_edges};
use braidlift_core::complex::{cells_at, ComplexGraph};
use braidlift_core::lift::{invert_lift, SpineSubstitution};
use braidlift_core::perm::Transposition;
use braidlift_core::*;
use serde_json::{json, Value};

/// Result of one command in every output form it supports.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    /// False when a verification command found failures.
    pub ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            dot: None,
            ok: true,
        }
    }
}

fn labels_json(tau: &LabelTuple) -> Value {
    json!(tau.labels())
}

fn pairs(ts: &[Transposition]) -> String {
    ts.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn hurwitz(tau: &LabelTuple, word: &BraidWord) -> Result<Report> {
    let terminal = hurwitz_apply(tau, word)?;
    let mu = total_monodromy(tau);
    let json = json!({
        "d": tau.degree(),
        "initial_labels": labels_json(tau),
        "braid": word.to_string(),
        "terminal_labels": labels_json(&terminal),
        "total_monodromy": mu.to_string(),
    });
    let text = format!("{tau}  --[{word}]-->  {terminal}\ntotal monodromy {mu}\n");
    Ok(Report::new(json, text))
}

pub fn liftable(tau: &LabelTuple, word: &BraidWord) -> Result<Report> {
    let b = ColoredBraid::new(tau.clone(), word.clone())?;
    let terminal = b.terminal();
    let ok = is_liftable(&b);
    let json = json!({
        "initial_labels": labels_json(tau),
        "terminal_labels": labels_json(&terminal),
        "liftable": ok,
    });
    let text = format!(
        "{} ({tau} -> {terminal})\n",
        if ok { "liftable" } else { "not liftable" }
    );
    Ok(Report::new(json, text))
}

pub fn cover_info(tau: &LabelTuple) -> Result<Report> {
    let top = topology(&build_cover(tau));
    let sp = spine(tau);
    let edges: Vec<[usize; 3]> = sp.edges.iter().map(|e| [e.a, e.b, e.index]).collect();
    let json = json!({
        "d": tau.degree(),
        "n": tau.len(),
        "labels": labels_json(tau),
        "euler_characteristic": top.euler_characteristic,
        "genus": top.genus,
        "boundary_cycles": top.boundary_components,
        "total_monodromy": total_monodromy(tau).to_string(),
        "spine": { "edges": edges },
    });
    let mut text = format!(
        "degree {}, {} branch values\nEuler characteristic {}, genus {}, {} boundary component(s)\n",
        tau.degree(),
        tau.len(),
        top.euler_characteristic,
        top.genus,
        top.boundary_components.len()
    );
    for (k, c) in top.boundary_components.iter().enumerate() {
        let _ = writeln!(text, "  boundary {}: {:?}", k + 1, c);
    }
    for e in &sp.edges {
        let _ = writeln!(text, "  e{}: x{} -> x{}", e.index, e.a, e.b);
    }
    Ok(Report::new(json, text))
}

fn lift_json(f: &SpineSubstitution) -> Value {
    let report = lift_report(f);
    let images: Vec<Value> = f
        .images()
        .iter()
        .enumerate()
        .map(|(k, a)| json!({ "edge": k + 1, "word": a.to_string() }))
        .collect();
    json!({
        "initial_labels": labels_json(f.source()),
        "terminal_labels": labels_json(f.target()),
        "liftable": report.liftable,
        "images": images,
        "pi1_rank": report.pi1_rank,
        "h1_matrix": report.h1_matrix,
        "flags": report.flags,
    })
}

pub fn lift(tau: &LabelTuple, word: &BraidWord) -> Result<Report> {
    let f = compute_lift(&ColoredBraid::new(tau.clone(), word.clone())?);
    let report = lift_report(&f);
    let mut text = format!("{} -> {}\n", f.source(), f.target());
    for (k, a) in f.images().iter().enumerate() {
        let _ = writeln!(text, "  f{} <- {a}", k + 1);
    }
    match (&report.h1_matrix, &report.flags) {
        (Some(m), Some(flags)) => {
            let _ = writeln!(text, "H1 action (rank {}): {m:?}", report.pi1_rank);
            let _ = writeln!(
                text,
                "identity: {}, trivial on H1: {}, transvection shape: {}",
                flags.is_identity, flags.h1_trivial, flags.transvection_shape
            );
        }
        _ => text.push_str("not liftable: source and target labels differ\n"),
    }
    Ok(Report::new(lift_json(&f), text))
}

pub fn canonical(tau: &LabelTuple, compare: Option<&LabelTuple>) -> Result<Report> {
    let mu = total_monodromy(tau);
    let canon = canonical_label(tau)?;
    let mut json = json!({
        "labels": labels_json(tau),
        "total_monodromy": mu.to_string(),
        "cycle_type": mu.cycle_type(),
        "canonical_labels": labels_json(&canon),
    });
    let mut text = format!(
        "total monodromy {mu}, cycle type {:?}\ncanonical {canon}\n",
        mu.cycle_type()
    );
    if let Some(other) = compare {
        let eq = equivalent_covers(tau, other)?;
        json["compare_labels"] = labels_json(other);
        json["equivalent"] = json!(eq);
        let _ = writeln!(text, "equivalent to {other}: {eq}");
    }
    Ok(Report::new(json, text))
}

pub fn orbit(tau: &LabelTuple) -> Result<Report> {
    let o = orbit_with_edges(tau);
    let vertices: Vec<String> = o.vertices.iter().map(|v| pairs(v.labels())).collect();
    let edges: Vec<Value> = o
        .edges
        .iter()
        .map(|e| json!([e.source, e.index, e.sign.as_i8(), e.target]))
        .collect();
    let json = json!({
        "d": tau.degree(),
        "size": vertices.len(),
        "base": o.position(tau),
        "vertices": vertices,
        "edges": edges,
    });
    let mut text = format!("orbit of size {}\n", vertices.len());
    for v in &vertices {
        let _ = writeln!(text, "  {v}");
    }
    Ok(Report::new(json, text))
}

pub fn complex(tau: &LabelTuple, radius: Option<usize>) -> Result<Report> {
    let g: ComplexGraph = match radius {
        Some(r) => build_xg_ball(tau, r),
        None => build_xm(tau),
    };
    let mut json = serde_json::to_value(&g).expect("graph serializes");
    if radius.is_none() {
        json["two_cells"] = serde_json::to_value(two_cell_inventory(tau)).expect("cells serialize");
    }
    let text = format!(
        "{} vertices, {} edges, base {}\n",
        g.vertex_count(),
        g.edges.len(),
        g.base
    );
    Ok(Report {
        dot: Some(export_dot(&g)),
        ..Report::new(json, text)
    })
}

pub fn verify(tau: &LabelTuple, word: Option<&BraidWord>, radius: usize) -> Result<Report> {
    let mut failures: Vec<String> = Vec::new();
    let word = word.cloned().unwrap_or_default();
    let b = ColoredBraid::new(tau.clone(), word.clone())?;

    let moved = apply_morphism(&canonical_object(tau), &word)?;
    let validation = validate_object(&moved);
    failures.extend(validation.failures.iter().map(|f| format!("object: {f}")));

    let f = compute_lift(&b);
    if compose_lifts(&invert_lift(&f), &f)? != SpineSubstitution::identity(tau) {
        failures.push("lift: inverse does not cancel".into());
    }
    if invert_lift(&f) != compute_lift(&b.inverse()) {
        failures.push("lift: inverse differs from the lift of the inverse braid".into());
    }

    let covering = check_covering(&build_xg_ball(tau, radius), &build_xm(tau));
    failures.extend(covering.failures.iter().map(|f| format!("covering: {f}")));
    let cells = cells_at(tau);
    for (family, w) in &cells {
        if hurwitz_apply(tau, w)? != *tau {
            failures.push(format!("cells: {family:?} word {w} is not closed"));
        }
    }

    let ok = failures.is_empty();
    let json = json!({
        "labels": labels_json(tau),
        "braid": word.to_string(),
        "object": validation,
        "covering": covering,
        "two_cells_at_base": cells.len(),
        "passed": ok,
        "failures": failures,
    });
    let mut text = format!(
        "{}\n",
        if ok {
            "all checks passed"
        } else {
            "checks failed"
        }
    );
    for f in &failures {
        let _ = writeln!(text, "  {f}");
    }
    Ok(Report {
        ok,
        ..Report::new(json, text)
    })
}

pub fn rewrite(tau: &LabelTuple, word: &BraidWord) -> Result<Report> {
    let b = ColoredBraid::new(tau.clone(), word.clone())?;
    let r = remove_same_label_crossings(&b)?;
    let same_lift = compute_lift(&b) == compute_lift(&r);
    let json = json!({
        "initial_labels": labels_json(tau),
        "input": word.to_string(),
        "output": r.word().to_string(),
        "input_has_equal_crossing": has_same_label_crossing(&b),
        "output_has_equal_crossing": has_same_label_crossing(&r),
        "lift_preserved": same_lift,
    });
    let text = format!("{}\n", r.word());
    Ok(Report {
        ok: same_lift,
        ..Report::new(json, text)
    })
}
