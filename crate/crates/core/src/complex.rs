//! Chain complexes over GF(2) with labelled cells, and their CSS-code reading.
//!
//! A complex has levels `0..=top` with `top <= 2`. Main-text orientation is
//! used throughout: level 2 holds X-checks, level 1 qubits, level 0 Z-checks,
//! so `d2 = Hxᵀ` and `d1 = Hz`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A cell label. Factor labels of tensor products are concatenated.
pub type Label = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    cells: Vec<Vec<Label>>,
    boundaries: Vec<BitMatrix>,
}

impl ChainComplex {
    /// `boundaries[i]` is the map from level `i + 1` to level `i`.
    ///
    /// # Errors
    /// Shape mismatches, duplicate labels, more than three levels, or a
    /// nonzero composite `∂∂`.
    pub fn new(cells: Vec<Vec<Label>>, boundaries: Vec<BitMatrix>) -> Result<Self> {
        if cells.is_empty() || cells.len() > 3 {
            return Err(Error::InvalidArgument(format!(
                "a complex needs between 1 and 3 levels, got {}",
                cells.len()
            )));
        }
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} levels need {} boundary maps, got {}",
                cells.len(),
                cells.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.rows() != cells[i].len() || d.cols() != cells[i + 1].len() {
                return Err(Error::DimensionMismatch(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    i + 1,
                    d.rows(),
                    d.cols(),
                    cells[i].len(),
                    cells[i + 1].len()
                )));
            }
        }
        for (i, level) in cells.iter().enumerate() {
            let mut seen = std::collections::HashSet::with_capacity(level.len());
            for l in level {
                if !seen.insert(l) {
                    return Err(Error::InvalidArgument(format!("duplicate label {l:?} at level {i}")));
                }
            }
        }
        for i in 1..boundaries.len() {
            if !boundaries[i - 1].mul(&boundaries[i])?.is_zero() {
                return Err(Error::Commutation(format!("boundary {i} composed with boundary {} is nonzero", i + 1)));
            }
        }
        Ok(Self { cells, boundaries })
    }

    /// A complex concentrated in degree 0.
    #[must_use]
    pub fn discrete(labels: Vec<Label>) -> Self {
        Self {
            cells: vec![labels],
            boundaries: Vec::new(),
        }
    }

    /// Highest level.
    #[must_use]
    pub fn top(&self) -> usize {
        self.cells.len() - 1
    }

    /// Labels at `level`; empty outside `0..=top`.
    #[must_use]
    pub fn cells(&self, level: usize) -> &[Label] {
        self.cells.get(level).map_or(&[], Vec::as_slice)
    }

    #[must_use]
    pub fn dim(&self, level: usize) -> usize {
        self.cells(level).len()
    }

    /// The boundary map `∂_level` from `level` to `level - 1`. Returns an
    /// empty-shaped zero matrix outside the complex.
    #[must_use]
    pub fn boundary(&self, level: usize) -> BitMatrix {
        if level >= 1 && level <= self.boundaries.len() {
            self.boundaries[level - 1].clone()
        } else {
            BitMatrix::zeros(self.dim(level.wrapping_sub(1)), self.dim(level))
        }
    }

    #[must_use]
    pub fn boundary_ref(&self, level: usize) -> Option<&BitMatrix> {
        level.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    fn boundary_rank(&self, level: usize) -> usize {
        self.boundary_ref(level).map_or(0, BitMatrix::rank)
    }

    /// `dim H_level = dim C_level − rank ∂_level − rank ∂_{level+1}`.
    #[must_use]
    pub fn homology_dim(&self, level: usize) -> usize {
        self.dim(level) - self.boundary_rank(level) - self.boundary_rank(level + 1)
    }

    /// Index of every label at `level`.
    #[must_use]
    pub fn index(&self, level: usize) -> HashMap<&Label, usize> {
        self.cells(level).iter().enumerate().map(|(i, l)| (l, i)).collect()
    }

    /// Reverses level order and transposes every differential.
    #[must_use]
    pub fn transpose(&self) -> Self {
        let cells: Vec<_> = self.cells.iter().rev().cloned().collect();
        let boundaries = self.boundaries.iter().rev().map(BitMatrix::transpose).collect();
        Self { cells, boundaries }
    }

    /// Main-text CSS reading of a three-level complex.
    ///
    /// # Errors
    /// The complex does not have exactly three levels.
    pub fn to_css(&self) -> Result<CssCode> {
        if self.cells.len() != 3 {
            return Err(Error::InvalidArgument(format!(
                "a CSS code needs 3 levels, complex has {}",
                self.cells.len()
            )));
        }
        Ok(CssCode {
            hx: self.boundaries[1].transpose(),
            hz: self.boundaries[0].clone(),
        })
    }
}

/// Repetition complex `R(L)`: vertices `1..=L` at level 0 and edges `i^+`
/// at level 1. Labels use doubled coordinates, so vertex `i` is `[2i]` and
/// edge `i^+` is `[2i + 1]`.
///
/// # Errors
/// `L = 0`.
pub fn repetition_complex(len: usize) -> Result<ChainComplex> {
    if len == 0 {
        return Err(Error::InvalidArgument("repetition complex needs at least one vertex".into()));
    }
    let verts: Vec<Label> = (1..=len as i64).map(|i| vec![2 * i]).collect();
    let edges: Vec<Label> = (1..len as i64).map(|i| vec![2 * i + 1]).collect();
    let d = BitMatrix::from_entries(len, len - 1, (0..len - 1).flat_map(|e| [(e, e), (e + 1, e)]));
    ChainComplex::new(vec![verts, edges], vec![d])
}

/// Free-function form of [`ChainComplex::transpose`].
#[must_use]
pub fn transpose_complex(c: &ChainComplex) -> ChainComplex {
    c.transpose()
}

/// Total complex of `A ⊗ B`. Cells at level `k` are pairs of an `A` cell of
/// level `i` and a `B` cell of level `k − i`, ordered by `(A label, B label)`.
///
/// # Errors
/// The product would exceed level 2.
pub fn tensor_product(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
    let top = a.top() + b.top();
    if top > 2 {
        return Err(Error::InvalidArgument(format!("tensor product would reach level {top}")));
    }
    // Columns of each boundary, as supports.
    let cols = |c: &ChainComplex| -> Vec<Vec<Vec<usize>>> {
        (0..=c.top())
            .map(|lvl| match c.boundary_ref(lvl) {
                Some(d) => {
                    let t = d.transpose();
                    (0..t.rows()).map(|r| t.row_support(r)).collect()
                }
                None => vec![Vec::new(); c.dim(lvl)],
            })
            .collect()
    };
    let (acols, bcols) = (cols(a), cols(b));

    let mut levels: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut cells = Vec::new();
        for i in 0..=a.top().min(k) {
            let j = k - i;
            if j > b.top() {
                continue;
            }
            for ai in 0..a.dim(i) {
                for bi in 0..b.dim(j) {
                    cells.push((i, ai, bi));
                }
            }
        }
        cells.sort_by(|&(i, ai, bi), &(i2, ai2, bi2)| {
            (&a.cells(i)[ai], &b.cells(k - i)[bi]).cmp(&(&a.cells(i2)[ai2], &b.cells(k - i2)[bi2]))
        });
        levels.push(cells);
    }
    let index: Vec<HashMap<(usize, usize, usize), usize>> = levels
        .iter()
        .map(|cells| cells.iter().enumerate().map(|(n, &c)| (c, n)).collect())
        .collect();

    let mut boundaries = Vec::with_capacity(top);
    for k in 1..=top {
        let mut entries = Vec::new();
        for (col, &(i, ai, bi)) in levels[k].iter().enumerate() {
            let j = k - i;
            if i >= 1 {
                for &r in &acols[i][ai] {
                    entries.push((index[k - 1][&(i - 1, r, bi)], col));
                }
            }
            if j >= 1 {
                for &r in &bcols[j][bi] {
                    entries.push((index[k - 1][&(i, ai, r)], col));
                }
            }
        }
        boundaries.push(BitMatrix::from_entries(levels[k - 1].len(), levels[k].len(), entries));
    }
    let cells = levels
        .iter()
        .enumerate()
        .map(|(k, cells)| {
            cells
                .iter()
                .map(|&(i, ai, bi)| {
                    let mut l = a.cells(i)[ai].clone();
                    l.extend_from_slice(&b.cells(k - i)[bi]);
                    l
                })
                .collect()
        })
        .collect();
    ChainComplex::new(cells, boundaries)
}

/// Maximum check weights and qubit degrees of a CSS code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    /// Max X-check weight.
    pub wx: usize,
    /// Max number of X-checks on a qubit.
    pub qx: usize,
    /// Max Z-check weight.
    pub wz: usize,
    /// Max number of Z-checks on a qubit.
    pub qz: usize,
    /// Max over qubits of X-degree plus Z-degree.
    pub total_degree: usize,
}

impl WeightProfile {
    /// Componentwise `self <= (wx, qx, wz, qz)` and `total_degree <= total`.
    #[must_use]
    pub fn within(&self, wx: usize, qx: usize, wz: usize, qz: usize, total: usize) -> bool {
        self.wx <= wx && self.qx <= qx && self.wz <= wz && self.qz <= qz && self.total_degree <= total
    }
}

/// Size, logical dimension and weights of a code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub num_x: usize,
    pub num_z: usize,
    pub profile: WeightProfile,
}

/// A CSS code given by its two check matrices over the same qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    pub hx: BitMatrix,
    pub hz: BitMatrix,
}

impl CssCode {
    /// # Errors
    /// Column mismatch or anticommuting checks.
    pub fn new(hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::DimensionMismatch(format!(
                "Hx has {} columns but Hz has {}",
                hx.cols(),
                hz.cols()
            )));
        }
        let prod = hx.mul(&hz.transpose())?;
        if let Some((x, z)) = prod.entries().next() {
            let overlap = (0..hx.cols()).filter(|&q| hx.get(x, q) && hz.get(z, q)).count();
            return Err(Error::OddOverlap { x, z, overlap });
        }
        Ok(Self { hx, hz })
    }

    /// Builds from sparse rows.
    ///
    /// # Errors
    /// As [`CssCode::new`]; also out-of-range indices.
    pub fn from_rows(n: usize, x_rows: &[Vec<usize>], z_rows: &[Vec<usize>]) -> Result<Self> {
        for &q in x_rows.iter().chain(z_rows).flatten() {
            if q >= n {
                return Err(Error::InvalidArgument(format!("qubit index {q} out of range for n = {n}")));
            }
        }
        Self::new(BitMatrix::from_row_supports(n, x_rows), BitMatrix::from_row_supports(n, z_rows))
    }

    #[must_use]
    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            n: self.n(),
            k: self.k(),
            num_x: self.num_x(),
            num_z: self.num_z(),
            profile: self.weight_profile(),
        }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    #[must_use]
    pub fn num_x(&self) -> usize {
        self.hx.rows()
    }

    #[must_use]
    pub fn num_z(&self) -> usize {
        self.hz.rows()
    }

    /// Number of logical qubits.
    #[must_use]
    pub fn k(&self) -> usize {
        self.n() - self.hx.rank() - self.hz.rank()
    }

    #[must_use]
    pub fn weight_profile(&self) -> WeightProfile {
        let xdeg = self.hx.col_weights();
        let zdeg = self.hz.col_weights();
        WeightProfile {
            wx: self.hx.max_row_weight(),
            qx: xdeg.iter().copied().max().unwrap_or(0),
            wz: self.hz.max_row_weight(),
            qz: zdeg.iter().copied().max().unwrap_or(0),
            total_degree: xdeg.iter().zip(&zdeg).map(|(a, b)| a + b).max().unwrap_or(0),
        }
    }

    /// Main-text complex: X-checks, qubits, Z-checks at levels 2, 1, 0.
    #[must_use]
    pub fn to_complex(&self) -> ChainComplex {
        let labels = |m: usize| (0..m as i64).map(|i| vec![i]).collect::<Vec<_>>();
        ChainComplex {
            cells: vec![labels(self.num_z()), labels(self.n()), labels(self.num_x())],
            boundaries: vec![self.hz.clone(), self.hx.transpose()],
        }
    }

    /// Swaps the roles of X and Z.
    #[must_use]
    pub fn dual(&self) -> CssCode {
        CssCode {
            hx: self.hz.clone(),
            hz: self.hx.clone(),
        }
    }
}

/// Complex of a CSS code, validating commutation.
///
/// # Errors
/// As [`CssCode::new`].
pub fn from_css(hx: &BitMatrix, hz: &BitMatrix) -> Result<ChainComplex> {
    Ok(CssCode::new(hx.clone(), hz.clone())?.to_complex())
}

/// Weight profile of a three-level complex.
///
/// # Errors
/// The complex does not have three levels.
pub fn weight_profile(c: &ChainComplex) -> Result<WeightProfile> {
    Ok(c.to_css()?.weight_profile())
}

/// `dim H_1`.
#[must_use]
pub fn logical_dimension(c: &ChainComplex) -> usize {
    c.homology_dim(1)
}
