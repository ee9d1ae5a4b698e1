use serde::{Deserialize, Serialize};

use super::{Block, CellIndex, GluingMaps, LayerBlocks};
use crate::coloring::Coloring;
use crate::complex::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// One matrix identity and, when it fails, the first differing column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub witness_column: Option<usize>,
}

impl IdentityCheck {
    fn compare(name: &str, lhs: &BitMatrix, rhs: &BitMatrix) -> Self {
        let diff = lhs.add(rhs).expect("identity sides have equal shapes");
        let witness_column = diff.entries().map(|(_, c)| c).min();
        Self {
            name: name.to_string(),
            holds: witness_column.is_none(),
            witness_column,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub checks: Vec<IdentityCheck>,
}

impl CompatibilityReport {
    #[must_use]
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    #[must_use]
    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

/// Verifies the two chain-map identities and the homotopy identity
/// `g^{ZQ} g^{QX} = ∂^Z p^{ZX} + p^{ZX} ∂^X` as exact matrix equations.
#[must_use]
pub fn check_compatibility(blocks: &LayerBlocks, maps: &GluingMaps) -> CompatibilityReport {
    let d = |b: Block, lvl: usize| blocks.block(b).complex.boundary(lvl);
    let mul = |a: &BitMatrix, b: &BitMatrix| a.mul(b).expect("map shapes are compatible");
    let checks = vec![
        IdentityCheck::compare(
            "d^Q g^QX = g^QX d^X",
            &mul(&d(Block::Q, 1), &maps.gqx[0]),
            &mul(&maps.gqx[1], &d(Block::X, 2)),
        ),
        IdentityCheck::compare(
            "d^Z g^ZQ = g^ZQ d^Q",
            &mul(&d(Block::Z, 1), &maps.gzq[0]),
            &mul(&maps.gzq[1], &d(Block::Q, 2)),
        ),
        IdentityCheck::compare(
            "g^ZQ g^QX = d^Z p^ZX + p^ZX d^X",
            &mul(&maps.gzq[1], &maps.gqx[0]),
            &mul(&d(Block::Z, 1), &maps.pzx[0])
                .add(&mul(&maps.pzx[1], &d(Block::X, 2)))
                .expect("equal shapes"),
        ),
    ];
    CompatibilityReport { checks }
}

/// The glued complex: input, coloring, blocks, maps and output code.
#[derive(Clone, Debug)]
pub struct LayerAssembly {
    pub input: CssCode,
    pub coloring: Coloring,
    pub blocks: LayerBlocks,
    pub maps: GluingMaps,
    /// `∂_2` and `∂_1` of the glued complex.
    pub d2: BitMatrix,
    pub d1: BitMatrix,
    pub output: CssCode,
}

impl LayerAssembly {
    /// Offsets of the X, Q and Z summands at `level`.
    #[must_use]
    pub fn offsets(&self, level: usize) -> [usize; 3] {
        offsets(&self.blocks, level)
    }

    /// Cell at `level` and total index `idx`.
    #[must_use]
    pub fn cell(&self, level: usize, idx: usize) -> CellIndex {
        let [_, oq, oz] = self.offsets(level);
        if idx >= oz {
            self.blocks.cz.cell(level, idx - oz)
        } else if idx >= oq {
            self.blocks.cq.cell(level, idx - oq)
        } else {
            self.blocks.cx.cell(level, idx)
        }
    }

    /// `(level, index, cell)` for every cell, X-checks first, then qubits,
    /// then Z-checks.
    #[must_use]
    pub fn cell_table(&self) -> Vec<(usize, usize, CellIndex)> {
        let mut out = Vec::new();
        for level in [2, 1, 0] {
            let total = self.blocks.cx.dim(level) + self.blocks.cq.dim(level) + self.blocks.cz.dim(level);
            for i in 0..total {
                out.push((level, i, self.cell(level, i)));
            }
        }
        out
    }
}

fn offsets(blocks: &LayerBlocks, level: usize) -> [usize; 3] {
    let x = blocks.cx.dim(level);
    let q = blocks.cq.dim(level);
    [0, x, x + q]
}

/// Assembles `∂_i = [[∂^X, 0, 0], [g^{QX}, ∂^Q, 0], [p^{ZX}, g^{ZQ}, ∂^Z]]`.
///
/// # Errors
/// [`Error::Compatibility`] naming the first failing identity.
pub fn assemble(input: &CssCode, coloring: &Coloring, blocks: LayerBlocks, maps: GluingMaps) -> Result<LayerAssembly> {
    let report = check_compatibility(&blocks, &maps);
    if let Some(f) = report.first_failure() {
        return Err(Error::Compatibility(format!(
            "{} fails at column {}",
            f.name,
            f.witness_column.unwrap_or(0)
        )));
    }
    let total = |lvl: usize| blocks.cx.dim(lvl) + blocks.cq.dim(lvl) + blocks.cz.dim(lvl);
    let build = |lvl: usize, slot: usize| {
        let (ro, co) = (offsets(&blocks, lvl - 1), offsets(&blocks, lvl));
        let mut m = BitMatrix::zeros(total(lvl - 1), total(lvl));
        m.set_block(ro[0], co[0], &blocks.cx.complex.boundary(lvl));
        m.set_block(ro[1], co[1], &blocks.cq.complex.boundary(lvl));
        m.set_block(ro[2], co[2], &blocks.cz.complex.boundary(lvl));
        m.set_block(ro[1], co[0], &maps.gqx[slot]);
        m.set_block(ro[2], co[1], &maps.gzq[slot]);
        m.set_block(ro[2], co[0], &maps.pzx[slot]);
        m
    };
    let d2 = build(2, 0);
    let d1 = build(1, 1);
    let output = CssCode::new(d2.transpose(), d1.clone())?;
    Ok(LayerAssembly {
        input: input.clone(),
        coloring: coloring.clone(),
        blocks,
        maps,
        d2,
        d1,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{color_code, ColoringStrategy};
    use crate::fixtures;
    use crate::layer::{build_blocks, build_maps};

    fn assemble_with(code: &CssCode, c: &Coloring) -> Result<LayerAssembly> {
        let b = build_blocks(code, c.chi())?;
        let m = build_maps(code, c, &b)?;
        assemble(code, c, b, m)
    }

    #[test]
    fn tri_assembles() {
        let code = fixtures::tri();
        let c = color_code(&code, ColoringStrategy::Induced);
        let a = assemble_with(&code, &c).unwrap();
        assert_eq!(a.output.n(), 7);
        assert_eq!(a.output.k(), 1);
        assert_eq!((a.output.num_x(), a.output.num_z()), (3, 3));
        assert!(a.output.weight_profile().within(6, 4, 6, 4, 6));
    }

    #[test]
    fn shor_reference_assembles() {
        let code = fixtures::shor();
        let (x, q, z) = fixtures::shor_coloring();
        let c = Coloring::new(x, q, z);
        let b = build_blocks(&code, c.chi()).unwrap();
        let m = build_maps(&code, &c, &b).unwrap();
        assert!(check_compatibility(&b, &m).all_hold());
        let a = assemble(&code, &c, b, m).unwrap();
        assert_eq!((a.output.n(), a.output.k()), (173, 1));
        assert!(a.output.weight_profile().within(6, 4, 6, 4, 6));
        let table = a.cell_table();
        assert_eq!(table.iter().filter(|(l, _, _)| *l == 1).count(), 173);
    }

    #[test]
    fn zeroed_defect_breaks_homotopy() {
        let code = fixtures::shor();
        let (x, q, z) = fixtures::shor_coloring();
        let c = Coloring::new(x, q, z);
        let b = build_blocks(&code, c.chi()).unwrap();
        let mut m = build_maps(&code, &c, &b).unwrap();
        m.pzx = [
            BitMatrix::zeros(m.pzx[0].rows(), m.pzx[0].cols()),
            BitMatrix::zeros(m.pzx[1].rows(), m.pzx[1].cols()),
        ];
        let rep = check_compatibility(&b, &m);
        assert!(rep.checks[0].holds && rep.checks[1].holds);
        let f = rep.first_failure().unwrap();
        assert!(f.name.starts_with("g^ZQ g^QX"));
        // The witness is an X-layer face above a common qubit of that check.
        let cell = b.cx.cell(2, f.witness_column.unwrap());
        assert_eq!(cell.block, Block::X);
        let support = code.hx.row_support(cell.layer);
        assert!(support.iter().any(|&qq| 2 * c.eta_q[qq] as i64 == cell.a));
        assert!(matches!(assemble(&code, &c, b, m), Err(Error::Compatibility(_))));
    }
}
