//! Layer-code weight reduction: surface-code blocks for every check and
//! qubit, glued along their boundaries and along string defects.
//!
//! Coordinates are doubled: integer `c` is stored as `2c` and `c + ½` as
//! `2c + 1`. Each block is a direct sum of identical surface patches, one per
//! layer, so block cell `(layer, s)` sits at `layer * |S_level| + s`.

mod assembly;
mod embedded;
mod sparsify;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coloring::{defect_for, Coloring, Incidence};
use crate::complex::{repetition_complex, tensor_product, ChainComplex, CssCode};
use crate::error::Result;
use crate::gf2::BitMatrix;

pub use assembly::{assemble, check_compatibility, CompatibilityReport, IdentityCheck, LayerAssembly};
pub use embedded::{embedded_complex, lift_logical, EmbeddedComplex};
pub use sparsify::{distance_lower_bound, sparsify, BoundReport, SparsifyOptions, SparsifyReport, Sparsified, VerificationFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Block {
    X,
    Q,
    Z,
}

/// A cell of the layer construction: block, layer (check or qubit index of
/// the input) and two doubled coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellIndex {
    pub block: Block,
    pub layer: usize,
    pub a: i64,
    pub b: i64,
}

/// One surface patch: the per-layer factor of a block.
#[derive(Clone, Debug)]
pub struct Patch {
    pub complex: ChainComplex,
    lookup: Vec<HashMap<(i64, i64), usize>>,
}

impl Patch {
    fn new(complex: ChainComplex) -> Self {
        let lookup = (0..3)
            .map(|lvl| {
                complex
                    .cells(lvl)
                    .iter()
                    .enumerate()
                    .map(|(i, l)| ((l[0], l[1]), i))
                    .collect()
            })
            .collect();
        Self { complex, lookup }
    }

    #[must_use]
    pub fn dim(&self, level: usize) -> usize {
        self.complex.dim(level)
    }

    /// Position of `(a, b)` at `level`, if present.
    #[must_use]
    pub fn position(&self, level: usize, a: i64, b: i64) -> Option<usize> {
        self.lookup.get(level).and_then(|m| m.get(&(a, b)).copied())
    }

    /// Level of a coordinate pair, if it is a cell.
    #[must_use]
    pub fn level_of(&self, a: i64, b: i64) -> Option<usize> {
        (0..3).find(|&l| self.position(l, a, b).is_some())
    }

    #[must_use]
    pub fn coords(&self, level: usize, pos: usize) -> (i64, i64) {
        let l = &self.complex.cells(level)[pos];
        (l[0], l[1])
    }
}

/// A block: `layers` copies of a patch, as one complex.
#[derive(Clone, Debug)]
pub struct BlockComplex {
    pub block: Block,
    pub layers: usize,
    pub patch: Patch,
    pub complex: ChainComplex,
}

impl BlockComplex {
    fn new(block: Block, layers: usize, patch: ChainComplex) -> Result<Self> {
        let labels = (0..layers as i64).map(|i| vec![i]).collect();
        let complex = tensor_product(&ChainComplex::discrete(labels), &patch)?;
        Ok(Self {
            block,
            layers,
            patch: Patch::new(patch),
            complex,
        })
    }

    #[must_use]
    pub fn dim(&self, level: usize) -> usize {
        self.complex.dim(level)
    }

    /// Index within the block at `level` of the cell `(layer, a, b)`.
    #[must_use]
    pub fn index(&self, level: usize, layer: usize, a: i64, b: i64) -> Option<usize> {
        self.patch.position(level, a, b).map(|p| layer * self.patch.dim(level) + p)
    }

    #[must_use]
    pub fn cell(&self, level: usize, idx: usize) -> CellIndex {
        let per = self.patch.dim(level);
        let (a, b) = self.patch.coords(level, idx % per);
        CellIndex {
            block: self.block,
            layer: idx / per,
            a,
            b,
        }
    }

    /// Every cell at `level` as `(index, layer, a, b)`.
    pub fn cells(&self, level: usize) -> impl Iterator<Item = (usize, usize, i64, i64)> + '_ {
        let per = self.patch.dim(level);
        (0..self.dim(level)).map(move |i| {
            let (a, b) = self.patch.coords(level, i % per);
            (i, i / per.max(1), a, b)
        })
    }
}

/// The three blocks `C^X = X ⊗ R_Qᵀ ⊗ R_Zᵀ`, `C^Q = Q ⊗ R_X ⊗ R_Zᵀ` and
/// `C^Z = Z ⊗ R_X ⊗ R_Q`.
#[derive(Clone, Debug)]
pub struct LayerBlocks {
    pub chi: (usize, usize, usize),
    pub cx: BlockComplex,
    pub cq: BlockComplex,
    pub cz: BlockComplex,
}

impl LayerBlocks {
    #[must_use]
    pub fn block(&self, b: Block) -> &BlockComplex {
        match b {
            Block::X => &self.cx,
            Block::Q => &self.cq,
            Block::Z => &self.cz,
        }
    }

    /// Qubit counts per block.
    #[must_use]
    pub fn qubit_counts(&self) -> (usize, usize, usize) {
        (self.cx.dim(1), self.cq.dim(1), self.cz.dim(1))
    }
}

/// Builds the three blocks for `code` with palette sizes `chi = (χ_X, χ_Q, χ_Z)`.
///
/// # Errors
/// A zero palette size.
pub fn build_blocks(code: &CssCode, chi: (usize, usize, usize)) -> Result<LayerBlocks> {
    let (cx_, cq_, cz_) = chi;
    let rx = repetition_complex(cx_)?;
    let rq = repetition_complex(cq_)?;
    let rz = repetition_complex(cz_)?;
    let sx = tensor_product(&rq.transpose(), &rz.transpose())?;
    let sq = tensor_product(&rx, &rz.transpose())?;
    let sz = tensor_product(&rx, &rq)?;
    Ok(LayerBlocks {
        chi,
        cx: BlockComplex::new(Block::X, code.num_x(), sx)?,
        cq: BlockComplex::new(Block::Q, code.n(), sq)?,
        cz: BlockComplex::new(Block::Z, code.num_z(), sz)?,
    })
}

/// Gluing and defect maps, at the two degrees where they are nonzero.
/// Index `[0]` is the map out of degree 2, `[1]` out of degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingMaps {
    pub gqx: [BitMatrix; 2],
    pub gzq: [BitMatrix; 2],
    pub pzx: [BitMatrix; 2],
}

impl GluingMaps {
    /// Max row and column weight over all six matrices.
    #[must_use]
    pub fn max_weight(&self) -> usize {
        self.all()
            .map(|m| m.max_row_weight().max(m.max_col_weight()))
            .max()
            .unwrap_or(0)
    }

    fn all(&self) -> impl Iterator<Item = &BitMatrix> {
        self.gqx.iter().chain(&self.gzq).chain(&self.pzx)
    }
}

fn colors_to_members(members: &[Vec<usize>], eta: &[usize]) -> Vec<HashMap<usize, Vec<usize>>> {
    members
        .iter()
        .map(|m| {
            let mut by: HashMap<usize, Vec<usize>> = HashMap::new();
            for &v in m {
                by.entry(eta[v]).or_default().push(v);
            }
            by
        })
        .collect()
}

/// `g^{QX}` and `g^{ZQ}`:
/// `|x, j, k⟩ ↦ Σ_q 1{j = η(q), q ∼ x} |η(x), q, k⟩` and
/// `|i, q, k⟩ ↦ Σ_z 1{k = η(z), z ∼ q} |i, η(q), z⟩`, zero when `j`
/// (respectively `k`) is a half-integer.
#[must_use]
pub fn build_gluing(code: &CssCode, c: &Coloring, blocks: &LayerBlocks) -> ([BitMatrix; 2], [BitMatrix; 2]) {
    let inc = Incidence::new(code);
    let q_by_color = colors_to_members(&inc.x_support, &c.eta_q);
    let z_by_color = colors_to_members(&inc.z_of_qubit, &c.eta_z);
    let (cx, cq, cz) = (&blocks.cx, &blocks.cq, &blocks.cz);
    let gqx = [2, 1].map(|d| {
        let mut entries = Vec::new();
        for (col, x, j2, k2) in cx.cells(d) {
            if j2 % 2 != 0 {
                continue;
            }
            for &q in q_by_color[x].get(&((j2 / 2) as usize)).map_or(&[][..], Vec::as_slice) {
                let row = cq.index(d - 1, q, 2 * c.eta_x[x] as i64, k2).expect("target cell exists");
                entries.push((row, col));
            }
        }
        BitMatrix::from_entries(cq.dim(d - 1), cx.dim(d), entries)
    });
    let gzq = [2, 1].map(|d| {
        let mut entries = Vec::new();
        for (col, q, i2, k2) in cq.cells(d) {
            if k2 % 2 != 0 {
                continue;
            }
            for &z in z_by_color[q].get(&((k2 / 2) as usize)).map_or(&[][..], Vec::as_slice) {
                let row = cz.index(d - 1, z, i2, 2 * c.eta_q[q] as i64).expect("target cell exists");
                entries.push((row, col));
            }
        }
        BitMatrix::from_entries(cz.dim(d - 1), cq.dim(d), entries)
    });
    (gqx, gzq)
}

/// `p^{ZX}|x, j, k⟩ = Σ_z 1{k = η(z)} 1{j ∈ Γ(x ∧ z)} |η(x), j + ½, z⟩`,
/// zero when `k` is a half-integer.
///
/// # Errors
/// Odd overlaps or repeated qubit colors on a common support.
pub fn build_defect(code: &CssCode, c: &Coloring, blocks: &LayerBlocks) -> Result<[BitMatrix; 2]> {
    let inc = Incidence::new(code);
    let mut defects = Vec::with_capacity(code.num_x());
    for x in 0..code.num_x() {
        let mut by_color: HashMap<usize, Vec<(usize, crate::coloring::StringDefect)>> = HashMap::new();
        for z in inc.z_neighbors_of_x(x) {
            by_color.entry(c.eta_z[z]).or_default().push((z, defect_for(&inc, x, z, &c.eta_q)?));
        }
        defects.push(by_color);
    }
    let (cx, cz) = (&blocks.cx, &blocks.cz);
    Ok([2, 1].map(|d| {
        let mut entries = Vec::new();
        for (col, x, j2, k2) in cx.cells(d) {
            if k2 % 2 != 0 {
                continue;
            }
            let Some(list) = defects[x].get(&((k2 / 2) as usize)) else {
                continue;
            };
            for (z, gamma) in list {
                if gamma.contains_doubled(j2 as usize) {
                    let row = cz.index(d - 1, *z, 2 * c.eta_x[x] as i64, j2 + 1).expect("target cell exists");
                    entries.push((row, col));
                }
            }
        }
        BitMatrix::from_entries(cz.dim(d - 1), cx.dim(d), entries)
    }))
}

/// All three families of maps.
///
/// # Errors
/// As [`build_defect`].
pub fn build_maps(code: &CssCode, c: &Coloring, blocks: &LayerBlocks) -> Result<GluingMaps> {
    let (gqx, gzq) = build_gluing(code, c, blocks);
    let pzx = build_defect(code, c, blocks)?;
    Ok(GluingMaps { gqx, gzq, pzx })
}
