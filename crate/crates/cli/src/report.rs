use std::fmt::Write as _;

use layerwr::expansion::{ExpansionConstant, SquareReport};
use layerwr::layer::BoundReport;
use layerwr::{CodeSummary, HastingsReport, Side, SparsifyReport};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct DistanceRow {
    pub side: Side,
    pub kind: &'static str,
    /// `None` when the side has no logicals.
    pub distance: Option<usize>,
    pub witness: Option<Vec<usize>>,
}

pub struct RelativeRow {
    pub w: usize,
    pub value: ExpansionConstant,
    pub holds: bool,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn summary_line(label: &str, s: &CodeSummary) -> String {
    let p = &s.profile;
    format!(
        "{label:<9} [[{}, {}]]  X-checks {:<5} Z-checks {:<5} wX {:<3} qX {:<3} wZ {:<3} qZ {:<3} degree {}\n",
        s.n, s.k, s.num_x, s.num_z, p.wx, p.qx, p.wz, p.qz, p.total_degree
    )
}

fn timing_line(out: &mut String, timing: Option<&Value>) {
    if let Some(t) = timing.and_then(Value::as_f64) {
        let _ = writeln!(out, "time     {t:.1} ms");
    }
}

fn bound_line(b: Option<&BoundReport>, side: &str) -> String {
    match b {
        Some(b) => match b.ratio() {
            Some(r) => format!("d_{side} >= {r} (input d_{side} = {})\n", b.input_distance),
            None => format!("d_{side}: no bound (input d_{side} = {})\n", b.input_distance),
        },
        None => format!("d_{side}: bound skipped (input too large for exact distance)\n"),
    }
}

pub fn sparsify_text(r: &SparsifyReport, timing: Option<&Value>) -> String {
    let mut out = String::new();
    out.push_str(&summary_line("input", &r.input));
    out.push_str(&summary_line("output", &r.output));
    let _ = writeln!(out, "chi      X={} Q={} Z={} ({})", r.chi.0, r.chi.1, r.chi.2, r.coloring_source);
    let _ = writeln!(
        out,
        "blocks   qubits X={} Q={} Z={}, max map weight {}",
        r.block_qubits.0, r.block_qubits.1, r.block_qubits.2, r.max_map_weight
    );
    out.push_str(&bound_line(r.bound_x.as_ref(), "X"));
    out.push_str(&bound_line(r.bound_z.as_ref(), "Z"));
    let f = &r.flags;
    for (name, ok) in [
        ("boundary_squared_zero", f.boundary_squared_zero),
        ("compatibility", f.compatibility),
        ("embedded_match", f.embedded_match),
        ("block_homology", f.block_homology),
        ("map_weights", f.map_weights),
        ("weight_caps", f.weight_caps),
        ("k_preserved", f.k_preserved),
    ] {
        let _ = writeln!(out, "check    {name:<22} {}", pass(ok));
    }
    timing_line(&mut out, timing);
    out
}

pub fn hastings_text(r: &HastingsReport, timing: Option<&Value>) -> String {
    let mut out = String::new();
    for (name, s) in r.stages() {
        out.push_str(&summary_line(name, &s));
    }
    let checked = r.reasonableness.checks.len();
    let enumerated = r.reasonableness.checks.iter().filter(|c| c.enumeration.is_some()).count();
    let _ = writeln!(
        out,
        "reasonable {} ({checked} checks, {enumerated} by enumeration, routes agree: {})",
        pass(r.reasonableness.reasonable()),
        r.reasonableness.routes_agree()
    );
    let _ = writeln!(
        out,
        "x_reduce   {} qubits -> {}, {} X-checks -> {}",
        r.reduce.input.n, r.reduce.output.n, r.reduce.input.num_x, r.reduce.output.num_x
    );
    let _ = writeln!(out, "z_thicken  {} layers", r.thicken.layers);
    let _ = writeln!(out, "cone       {} checks, image preserved: {}", r.cone.coned.len(), r.cone.image_preserved);
    for e in &r.cone.coned {
        let _ = writeln!(
            out,
            "  z={:<4} vertices {:<3} edges {:<4} faces {:<4} cycles {:<3} layers {:<2} homology {:?}",
            e.z, e.vertices, e.edges, e.faces, e.cycles, e.layers, e.homology
        );
    }
    let _ = writeln!(out, "check    k_preserved   {}", pass(r.k_preserved));
    let _ = writeln!(out, "check    within_bounds {}", pass(r.within_bounds));
    timing_line(&mut out, timing);
    out
}

pub fn verify_text(s: &CodeSummary) -> String {
    let p = &s.profile;
    format!(
        "n           {}\nk           {}\nX-checks    {}\nZ-checks    {}\nweights     wX {} qX {} wZ {} qZ {} degree {}\ncommutation ok\n",
        s.n, s.k, s.num_x, s.num_z, p.wx, p.qx, p.wz, p.qz, p.total_degree
    )
}

pub fn distance_text(rows: &[DistanceRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let rel = if r.kind == "exact" { "=" } else { "<=" };
        let d = r.distance.map_or_else(|| "inf".to_string(), |d| d.to_string());
        let _ = write!(out, "d_{} {rel} {d}", r.side);
        if let Some(w) = &r.witness {
            let _ = write!(out, "  witness {w:?}");
        }
        out.push('\n');
    }
    out
}

pub fn repetition_text(l: usize, c: &ExpansionConstant, bound: Ratio<u64>, rel: &[RelativeRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "R({l})  c* = {}  bound {bound}  {}  witness {:?}",
        c.display(),
        pass(c.at_least(bound)),
        c.witness.as_deref().unwrap_or_default()
    );
    for r in rel {
        let _ = writeln!(
            out,
            "  w={:<3} c^pi* = {:<8} bound 1/{l}  {}  witness {:?}",
            r.w,
            r.value.display(),
            pass(r.holds),
            r.value.witness.as_deref().unwrap_or_default()
        );
    }
    out
}

pub fn square_text(r: &SquareReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "R({})xR({}), projection width {}", r.l1, r.l2, r.w);
    let _ = writeln!(out, "  c*     = {:<8} bound {:<6} {}", r.c.display(), r.c_bound.to_string(), pass(r.c_holds));
    let _ = writeln!(out, "  c^pi*  = {:<8} bound {:<6} {}", r.c_pi.display(), r.c_pi_bound.to_string(), pass(r.c_pi_holds));
    let pinned = r.pinned_ratio.map_or_else(|| "inf".to_string(), |x| x.to_string());
    let _ = writeln!(out, "  pinned = {pinned:<8} bound {:<6} {}", r.pinned_bound.to_string(), pass(r.pinned_holds));
    out
}
