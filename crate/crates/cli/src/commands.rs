use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::ValueEnum;
use layerwr::coloring::ColoringStrategy;
use layerwr::format::canonical_json;
use layerwr::hastings::check_z_reasonable;
use layerwr::{
    cell_table_tsv, check_square_bound, coexpansion_constant, distance_exact, distance_upper, fixtures, hastings_pipeline,
    parse_alist, relative_coexpansion_constant, sparsify as run_sparsify, CodeFile, ColoringFile, CssCode, Error, GraphComplex,
    HastingsOptions, SearchOptions, Side, SparsifyOptions,
};
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::report;
use crate::{ReportArgs, ReportFormat};

/// A failed command: exit code and message.
#[derive(Debug)]
pub struct CmdError {
    pub code: u8,
    pub message: String,
}

type CmdResult = Result<u8, CmdError>;

fn usage(message: impl Into<String>) -> CmdError {
    CmdError {
        code: 1,
        message: message.into(),
    }
}

fn failure(message: impl Into<String>) -> CmdError {
    CmdError {
        code: 2,
        message: message.into(),
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::ThresholdExceeded { .. } => usage(e.to_string()),
            _ => failure(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Induced,
    Relaxed,
}

pub fn parse_chi(s: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [x, q, z] => Ok((x, q, z)),
        _ => Err("expected three comma-separated values X,Q,Z".into()),
    }
}

fn read(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CmdError> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(CodeFile, CssCode), CmdError> {
    let file = CodeFile::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let code = file.to_code()?;
    Ok((file, code))
}

fn emit(format: ReportFormat, text: String, json: &Value) {
    match format {
        ReportFormat::Text => print!("{text}"),
        ReportFormat::Json => print!("{}", canonical_json(json)),
    }
}

fn with_timing(mut v: Value, args: &ReportArgs, start: Instant) -> Value {
    if args.timing {
        v["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
    }
    v
}

pub struct SparsifyArgs {
    pub input: PathBuf,
    pub coloring: Option<PathBuf>,
    pub chi: Option<(usize, usize, usize)>,
    pub strategy: Strategy,
    pub out: Option<PathBuf>,
    pub cells: Option<PathBuf>,
    pub allow_failures: bool,
    pub report: ReportArgs,
}

pub fn sparsify(args: &SparsifyArgs) -> CmdResult {
    let start = Instant::now();
    let (file, code) = load(&args.input)?;
    let coloring = match &args.coloring {
        Some(p) => {
            let cf = ColoringFile::parse(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Some(cf.to_coloring()?)
        }
        None => file.metadata.coloring.clone(),
    };
    let opts = SparsifyOptions {
        coloring,
        chi_override: args.chi,
        strategy: match args.strategy {
            Strategy::Induced => ColoringStrategy::Induced,
            Strategy::Relaxed => ColoringStrategy::Relaxed,
        },
        ..SparsifyOptions::default()
    };
    let result = run_sparsify(&code, &opts)?;
    let failures = result.report.flags.failures();
    if !failures.is_empty() && !args.allow_failures {
        return Err(failure(format!("verification failed: {}", failures.join(", "))));
    }
    if let Some(out) = &args.out {
        let mut of = CodeFile::from_code(&result.code);
        of.metadata.name = file.metadata.name.as_ref().map(|n| format!("{n}-layer"));
        let (x, q, z) = result.report.chi;
        of.metadata.chi = Some([x, q, z]);
        write(out, &of.render())?;
    }
    let cells = args.cells.clone().or_else(|| {
        args.out.as_ref().map(|o| {
            let mut s = o.clone().into_os_string();
            s.push(".cells.tsv");
            PathBuf::from(s)
        })
    });
    if let Some(path) = cells {
        write(&path, &cell_table_tsv(&result.assembly))?;
    }
    let json = with_timing(json!({ "command": "sparsify", "report": result.report }), &args.report, start);
    emit(args.report.report, report::sparsify_text(&result.report, json.get("timing_ms")), &json);
    Ok(if failures.is_empty() { 0 } else { 2 })
}

pub fn hastings(input: &Path, partial: Option<Vec<usize>>, out: Option<&Path>, allow_failures: bool, args: &ReportArgs) -> CmdResult {
    let start = Instant::now();
    let (file, code) = load(input)?;
    let zs: Vec<usize> = partial.clone().unwrap_or_else(|| (0..code.num_z()).collect());
    let pre = check_z_reasonable(&code, &zs)?;
    if !pre.reasonable() {
        let lines: Vec<String> = pre
            .violations
            .iter()
            .map(|v| format!("Z-check {} contains the nontrivial logical on qubits {:?}", v.z, v.support))
            .collect();
        let detail = if lines.is_empty() {
            "reasonableness routes disagree".to_string()
        } else {
            lines.join("; ")
        };
        return Err(failure(format!("input is not Z-type reasonable: {detail}")));
    }
    let result = hastings_pipeline(&code, &HastingsOptions { partial })?;
    let r = &result.report;
    let mut failures = Vec::new();
    if !r.k_preserved {
        failures.push("k_preserved");
    }
    if !r.within_bounds {
        failures.push("within_bounds");
    }
    if !r.cone.image_preserved {
        failures.push("image_preserved");
    }
    if !failures.is_empty() && !allow_failures {
        return Err(failure(format!("verification failed: {}", failures.join(", "))));
    }
    if let Some(out) = out {
        let mut of = CodeFile::from_code(&result.code);
        of.metadata.name = file.metadata.name.as_ref().map(|n| format!("{n}-hastings"));
        write(out, &of.render())?;
    }
    let json = with_timing(json!({ "command": "hastings", "report": r }), args, start);
    emit(args.report, report::hastings_text(r, json.get("timing_ms")), &json);
    Ok(if failures.is_empty() { 0 } else { 2 })
}

pub fn verify(input: &Path, format: ReportFormat) -> CmdResult {
    let file = CodeFile::parse(&read(input)?).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    match file.to_code() {
        Ok(code) => {
            let s = code.summary();
            let json = json!({ "command": "verify", "commutes": true, "summary": s });
            emit(format, report::verify_text(&s), &json);
            Ok(0)
        }
        Err(e @ Error::OddOverlap { .. }) => {
            let json = json!({
                "command": "verify",
                "commutes": false,
                "n": file.n,
                "num_x": file.hx.len(),
                "num_z": file.hz.len(),
                "error": e.to_string(),
            });
            let text = format!(
                "n           {}\nX-checks    {}\nZ-checks    {}\ncommutation FAIL ({e})\n",
                file.n,
                file.hx.len(),
                file.hz.len()
            );
            emit(format, text, &json);
            Ok(2)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn distance(input: &Path, side: Option<Side>, search: Option<(usize, u64)>, args: &ReportArgs) -> CmdResult {
    let start = Instant::now();
    let (_, code) = load(input)?;
    let sides = side.map_or_else(|| vec![Side::X, Side::Z], |s| vec![s]);
    let mut rows = Vec::new();
    for s in sides {
        let (kind, res) = match search {
            Some((trials, seed)) => ("upper", distance_upper(&code, s, SearchOptions::new(trials, seed))?),
            None => ("exact", distance_exact(&code, s)?),
        };
        rows.push(report::DistanceRow {
            side: s,
            kind,
            distance: res.distance.finite(),
            witness: res.witness.map(|w| w.support()),
        });
    }
    let json = with_timing(json!({ "command": "distance", "results": rows }), args, start);
    emit(args.report, report::distance_text(&rows), &json);
    Ok(0)
}

pub fn expansion(rep: Option<usize>, square: Option<&[usize]>, args: &ReportArgs) -> CmdResult {
    let start = Instant::now();
    let (text, json, ok) = match (rep, square) {
        (Some(l), None) => {
            if l == 0 {
                return Err(usage("--rep needs L >= 1"));
            }
            let g = GraphComplex::repetition(l);
            let c = coexpansion_constant(&g)?;
            let lu = l as u64;
            let c_bound = Ratio::new(2, lu);
            let mut rel = Vec::new();
            for w in 1..=l {
                let p: Vec<usize> = (0..w).collect();
                let cp = relative_coexpansion_constant(&g, &p)?;
                rel.push(report::RelativeRow {
                    w,
                    holds: cp.at_least(Ratio::new(1, lu)),
                    value: cp,
                });
            }
            let ok = c.at_least(c_bound) && rel.iter().all(|r| r.holds);
            let json = json!({
                "command": "expansion",
                "complex": format!("R({l})"),
                "c": c.display(),
                "c_witness": c.witness,
                "c_bound": c_bound.to_string(),
                "relative_bound": Ratio::new(1, lu).to_string(),
                "relative": rel.iter().map(|r| json!({
                    "w": r.w, "c_pi": r.value.display(), "witness": r.value.witness, "holds": r.holds,
                })).collect::<Vec<_>>(),
                "holds": ok,
            });
            (report::repetition_text(l, &c, c_bound, &rel), json, ok)
        }
        (None, Some(&[l1, l2, w])) => {
            let r = check_square_bound(l1, l2, w)?;
            let json = json!({
                "command": "expansion",
                "complex": format!("R({l1})xR({l2})"),
                "w": w,
                "c": r.c.display(),
                "c_bound": r.c_bound.to_string(),
                "c_pi": r.c_pi.display(),
                "c_pi_bound": r.c_pi_bound.to_string(),
                "pinned_ratio": r.pinned_ratio.map(|x| x.to_string()),
                "pinned_bound": r.pinned_bound.to_string(),
                "pinned_witness": r.pinned_witness,
                "holds": r.holds(),
            });
            (report::square_text(&r), json, r.holds())
        }
        _ => return Err(usage("give exactly one of --rep L or --square L1 L2 W")),
    };
    let json = with_timing(json, args, start);
    emit(args.report, text, &json);
    Ok(if ok { 0 } else { 2 })
}

pub fn import_alist(inputs: &[PathBuf], hgp: bool, name: Option<String>, out: Option<&Path>) -> CmdResult {
    let mats = inputs
        .iter()
        .map(|p| parse_alist(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display()))))
        .collect::<Result<Vec<_>, _>>()?;
    let code = match (hgp, &mats[..]) {
        (true, [h]) => fixtures::hypergraph_product(h, h),
        (true, [h1, h2]) => fixtures::hypergraph_product(h1, h2),
        (false, [hx, hz]) => CssCode::new(hx.clone(), hz.clone())?,
        _ => return Err(usage("give Hx and Hz, or use --hgp")),
    };
    let mut f = CodeFile::from_code(&code);
    f.metadata.name = name;
    match out {
        Some(p) => write(p, &f.render())?,
        None => print!("{}", f.render()),
    }
    Ok(0)
}
