use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{assemble, build_blocks, build_maps, check_compatibility, embedded_complex, LayerAssembly, LayerBlocks};
use crate::coloring::{color_code, validate_coloring, Coloring, ColoringStrategy};
use crate::complex::{CodeSummary, CssCode};
use crate::distance::{distance_exact_with, Distance, Side};
use crate::error::{Error, Result};

/// Inputs to [`sparsify`] beyond the code itself.
#[derive(Clone, Debug)]
pub struct SparsifyOptions {
    /// Use this coloring instead of computing one.
    pub coloring: Option<Coloring>,
    /// Palette sizes to pad up to.
    pub chi_override: Option<(usize, usize, usize)>,
    pub strategy: ColoringStrategy,
    /// Kernel-dimension cap for computing the input distances that feed the
    /// distance bounds. Bounds are omitted above it.
    pub distance_threshold: usize,
}

impl Default for SparsifyOptions {
    fn default() -> Self {
        Self {
            coloring: None,
            chi_override: None,
            strategy: ColoringStrategy::Induced,
            distance_threshold: 20,
        }
    }
}

/// Lower bound on one side's output distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub side: Side,
    pub input_distance: Distance,
    /// `None` when the input distance is infinite or the side has no checks.
    pub numer: Option<u64>,
    pub denom: Option<u64>,
}

impl BoundReport {
    #[must_use]
    pub fn ratio(&self) -> Option<Ratio<u64>> {
        Some(Ratio::new(self.numer?, self.denom?))
    }
}

/// Outcomes of every structural check made by [`sparsify`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationFlags {
    pub boundary_squared_zero: bool,
    pub compatibility: bool,
    pub embedded_match: bool,
    /// `H_1(C^X) = H_1(C^Z) = 0` and the top, middle and bottom homology of
    /// the X, Q and Z blocks has one generator per input element.
    pub block_homology: bool,
    /// Every gluing and defect matrix has row and column weight at most 1.
    pub map_weights: bool,
    /// Weights within (6, 4, 6, 4) and total degree at most 6.
    pub weight_caps: bool,
    pub k_preserved: bool,
}

impl VerificationFlags {
    #[must_use]
    pub fn all(&self) -> bool {
        self.failures().is_empty()
    }

    #[must_use]
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("boundary_squared_zero", self.boundary_squared_zero),
            ("compatibility", self.compatibility),
            ("embedded_match", self.embedded_match),
            ("block_homology", self.block_homology),
            ("map_weights", self.map_weights),
            ("weight_caps", self.weight_caps),
            ("k_preserved", self.k_preserved),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsifyReport {
    pub chi: (usize, usize, usize),
    /// `supplied`, `induced` or `relaxed`.
    pub coloring_source: String,
    pub input: CodeSummary,
    pub output: CodeSummary,
    /// Qubits contributed by the X, Q and Z blocks.
    pub block_qubits: (usize, usize, usize),
    pub max_map_weight: usize,
    pub bound_x: Option<BoundReport>,
    pub bound_z: Option<BoundReport>,
    pub flags: VerificationFlags,
}

#[derive(Clone, Debug)]
pub struct Sparsified {
    pub code: CssCode,
    pub assembly: LayerAssembly,
    pub report: SparsifyReport,
}

/// `min(χ_ᾱ, 2χ_Q) · d_α(A) / 𝔴_α`, where `ᾱ` is the other side.
#[must_use]
pub fn distance_lower_bound(code: &CssCode, chi: (usize, usize, usize), side: Side, d: Distance) -> Option<Ratio<u64>> {
    let d = d.finite()? as u64;
    let (chi_other, w) = match side {
        Side::X => (chi.2, code.hx.max_row_weight()),
        Side::Z => (chi.0, code.hz.max_row_weight()),
    };
    if w == 0 {
        return None;
    }
    let factor = chi_other.min(2 * chi.1) as u64;
    Some(Ratio::new(factor * d, w as u64))
}

fn bound_report(code: &CssCode, chi: (usize, usize, usize), side: Side, threshold: usize) -> Option<BoundReport> {
    let d = distance_exact_with(code, side, threshold).ok()?.distance;
    let r = distance_lower_bound(code, chi, side, d);
    Some(BoundReport {
        side,
        input_distance: d,
        numer: r.map(|r| *r.numer()),
        denom: r.map(|r| *r.denom()),
    })
}

fn block_homology_ok(code: &CssCode, b: &LayerBlocks) -> bool {
    let (cx, cq, cz) = (&b.cx.complex, &b.cq.complex, &b.cz.complex);
    cx.homology_dim(1) == 0
        && cz.homology_dim(1) == 0
        && cx.homology_dim(2) == code.num_x()
        && cq.homology_dim(1) == code.n()
        && cz.homology_dim(0) == code.num_z()
}

fn coloring_error(code: &CssCode, c: &Coloring) -> Result<()> {
    let rep = validate_coloring(code, c);
    let first = rep.violations().next().map(|(cond, msg)| format!("{cond}: {msg}"));
    first.map_or(Ok(()), |m| Err(Error::InvalidColoring(m)))
}

/// Colors, builds, checks and assembles the sparsified code.
///
/// # Errors
/// An invalid coloring or override, or any failed construction identity.
pub fn sparsify(code: &CssCode, opts: &SparsifyOptions) -> Result<Sparsified> {
    let (coloring, source) = match &opts.coloring {
        Some(c) => (c.clone(), "supplied"),
        None => (
            color_code(code, opts.strategy),
            match opts.strategy {
                ColoringStrategy::Induced => "induced",
                ColoringStrategy::Relaxed => "relaxed",
            },
        ),
    };
    let coloring = match opts.chi_override {
        Some(chi) => coloring.with_chi(chi)?,
        None => coloring,
    };
    coloring_error(code, &coloring)?;
    let chi = coloring.chi();
    let blocks = build_blocks(code, chi)?;
    let maps = build_maps(code, &coloring, &blocks)?;
    let compatibility = check_compatibility(&blocks, &maps).all_hold();
    let block_homology = block_homology_ok(code, &blocks);
    let max_map_weight = maps.max_weight();
    let assembly = assemble(code, &coloring, blocks, maps)?;
    embedded_complex(&assembly)?.verify_against(&assembly)?;

    let out = &assembly.output;
    let flags = VerificationFlags {
        boundary_squared_zero: assembly.d1.mul(&assembly.d2)?.is_zero(),
        compatibility,
        embedded_match: true,
        block_homology,
        map_weights: max_map_weight <= 1,
        weight_caps: out.weight_profile().within(6, 4, 6, 4, 6),
        k_preserved: out.k() == code.k(),
    };
    let report = SparsifyReport {
        chi,
        coloring_source: source.to_string(),
        input: code.summary(),
        output: out.summary(),
        block_qubits: assembly.blocks.qubit_counts(),
        max_map_weight,
        bound_x: bound_report(code, chi, Side::X, opts.distance_threshold),
        bound_z: bound_report(code, chi, Side::Z, opts.distance_threshold),
        flags,
    };
    Ok(Sparsified {
        code: out.clone(),
        assembly,
        report,
    })
}
