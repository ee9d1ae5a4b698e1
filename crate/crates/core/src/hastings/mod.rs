//! Weight reduction by X-reduction, Z-thickening and coning.
//!
//! Codes are stored as `CssCode { hx, hz }` throughout; the Z-checks play the
//! role of the top level of the complex here.

mod cellular;
mod cone;
mod reasonable;
mod reduce;

use serde::{Deserialize, Serialize};

pub use cellular::{cellulate, cycle_basis, face_heights, thicken, CellComplex, CycleBasis};
pub use cone::{build_z_graph, cone, coning_complex, ConeEntry, ConeReport, ConingComplex, ZGraph};
pub use reasonable::{
    check_z_reasonable, check_z_reasonable_with, CheckVerdict, ReasonablenessReport, Violation, REASONABLE_THRESHOLD,
};
pub use reduce::{x_reduce, z_heights, z_thicken, OrderingMaps, ReduceReport, ThickenReport};

use crate::complex::{CodeSummary, CssCode, WeightProfile};
use crate::error::{Error, Result};

/// Caps `(𝔴_Z, 𝔮_Z, 𝔴_X, 𝔮_X)` on the pipeline output.
pub const CORRECTED_BOUNDS: (usize, usize, usize, usize) = (36, 3, 42, 4);

#[must_use]
pub fn within_corrected_bounds(p: &WeightProfile) -> bool {
    let (wz, qz, wx, qx) = CORRECTED_BOUNDS;
    p.wz <= wz && p.qz <= qz && p.wx <= wx && p.qx <= qx
}

#[derive(Clone, Debug, Default)]
pub struct HastingsOptions {
    /// Cone only these Z-checks. All of them when `None`.
    pub partial: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HastingsReport {
    pub input: CodeSummary,
    /// Reasonableness of the input on the checks to be coned.
    pub reasonableness: ReasonablenessReport,
    pub reduce: ReduceReport,
    pub thicken: ThickenReport,
    pub cone: ConeReport,
    pub output: CodeSummary,
    pub k_preserved: bool,
    pub within_bounds: bool,
}

impl HastingsReport {
    /// Stage summaries in pipeline order.
    #[must_use]
    pub fn stages(&self) -> [(&'static str, CodeSummary); 4] {
        [
            ("input", self.input),
            ("x_reduce", self.reduce.output),
            ("z_thicken", self.thicken.output),
            ("cone", self.output),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct HastingsResult {
    pub code: CssCode,
    pub report: HastingsReport,
}

/// Runs `x_reduce`, `z_thicken` and `cone` on the original Z-checks.
///
/// # Errors
/// [`Error::Reasonableness`] when a selected Z-check hides a logical, plus
/// any stage error.
pub fn hastings_pipeline(code: &CssCode, opts: &HastingsOptions) -> Result<HastingsResult> {
    let zs: Vec<usize> = opts.partial.clone().unwrap_or_else(|| (0..code.num_z()).collect());
    let reasonableness = check_z_reasonable(code, &zs)?;
    if !reasonableness.reasonable() {
        let z = reasonableness.violations.first().map_or(0, |v| v.z);
        return Err(Error::Reasonableness { z });
    }
    let (reduced, reduce) = x_reduce(code)?;
    let (thick, thicken) = z_thicken(&reduced)?;
    // The original Z-checks keep their indices through both stages.
    let (out, cone) = cone(&thick, &zs)?;
    let output = out.summary();
    let k = code.k();
    let report = HastingsReport {
        input: code.summary(),
        reasonableness,
        k_preserved: reduce.output.k == k && thicken.output.k == k && output.k == k,
        within_bounds: within_corrected_bounds(&output.profile),
        reduce,
        thicken,
        cone,
        output,
    };
    Ok(HastingsResult { code: out, report })
}
