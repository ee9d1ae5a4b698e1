use serde::{Deserialize, Serialize};

use crate::coloring::{greedy_by_degree, Graph, Incidence};
use crate::complex::{CodeSummary, CssCode};
use crate::error::{Error, Result};

/// Ranks `(q;x)` and `(x;q)` by ascending label, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingMaps {
    /// `qx[x]` lists `supp(x)` ascending; the position of `q` is `(q;x)`.
    pub qx: Vec<Vec<usize>>,
    /// `xq[q]` lists the X-checks on `q` ascending; the position is `(x;q)`.
    pub xq: Vec<Vec<usize>>,
}

impl OrderingMaps {
    #[must_use]
    pub fn new(code: &CssCode) -> Self {
        let inc = Incidence::new(code);
        Self {
            qx: inc.x_support,
            xq: inc.x_of_qubit,
        }
    }

    /// `(q;x)`.
    #[must_use]
    pub fn rank_in_check(&self, q: usize, x: usize) -> Option<usize> {
        self.qx[x].binary_search(&q).ok()
    }

    /// `(x;q)`.
    #[must_use]
    pub fn rank_at_qubit(&self, x: usize, q: usize) -> Option<usize> {
        self.xq[q].binary_search(&x).ok()
    }
}

/// Sorted `x ∧ z` paired consecutively.
///
/// # Errors
/// [`Error::OddOverlap`] if the overlap is odd.
pub(crate) fn paired_common(x_support: &[usize], z_support: &[usize], x: usize, z: usize) -> Result<Vec<[usize; 2]>> {
    let common: Vec<usize> = x_support.iter().copied().filter(|q| z_support.binary_search(q).is_ok()).collect();
    if common.len() % 2 == 1 {
        return Err(Error::OddOverlap {
            x,
            z,
            overlap: common.len(),
        });
    }
    Ok(common.chunks(2).map(|p| [p[0], p[1]]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    /// Repetition lengths `max(𝔮_X, 1)` and `max(𝔴_X, 1)`.
    pub qubit_rep: usize,
    pub check_rep: usize,
    pub input: CodeSummary,
    pub output: CodeSummary,
}

/// X-reduced code. Qubits are `V(𝔮_X) ⊗ Q` then `E(𝔴_X) ⊗ X`; X-checks are
/// `E(𝔮_X) ⊗ Q` then `V(𝔴_X) ⊗ X`; Z-checks keep their indices.
///
/// # Errors
/// Odd overlaps in the input.
pub fn x_reduce(code: &CssCode) -> Result<(CssCode, ReduceReport)> {
    let prof = code.weight_profile();
    let (qr, wr) = (prof.qx.max(1), prof.wx.max(1));
    let n = code.n();
    let maps = OrderingMaps::new(code);
    let inc = Incidence::new(code);
    let vq = |i: usize, q: usize| q * qr + i;
    let ex = |a: usize, x: usize| n * qr + x * (wr - 1) + a;
    let new_n = n * qr + code.num_x() * (wr - 1);

    let mut x_rows: Vec<Vec<usize>> = Vec::new();
    for q in 0..n {
        for i in 0..qr - 1 {
            x_rows.push(vec![vq(i, q), vq(i + 1, q)]);
        }
    }
    for x in 0..code.num_x() {
        for a in 0..wr {
            let mut row = Vec::new();
            if a > 0 {
                row.push(ex(a - 1, x));
            }
            if a + 1 < wr {
                row.push(ex(a, x));
            }
            if let Some(&q) = maps.qx[x].get(a) {
                let i = maps.rank_at_qubit(x, q).expect("q is in supp x");
                row.push(vq(i, q));
            }
            x_rows.push(row);
        }
    }
    let mut z_rows: Vec<Vec<usize>> = Vec::new();
    for z in 0..code.num_z() {
        let mut row: Vec<usize> = inc.z_support[z].iter().flat_map(|&q| (0..qr).map(move |i| vq(i, q))).collect();
        for x in inc.x_neighbors_of_z(z) {
            for [q1, q2] in paired_common(&inc.x_support[x], &inc.z_support[z], x, z)? {
                let (r1, r2) = (maps.rank_in_check(q1, x).unwrap(), maps.rank_in_check(q2, x).unwrap());
                row.extend((r1..r2).map(|a| ex(a, x)));
            }
        }
        z_rows.push(row);
    }
    let out = CssCode::from_rows(new_n, &x_rows, &z_rows)?;
    let report = ReduceReport {
        qubit_rep: qr,
        check_rep: wr,
        input: code.summary(),
        output: out.summary(),
    };
    Ok((out, report))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickenReport {
    /// 0-based heights of the Z-checks.
    pub heights: Vec<usize>,
    pub layers: usize,
    pub input: CodeSummary,
    pub output: CodeSummary,
}

/// Heights from a greedy coloring of the graph joining Z-checks that share a
/// qubit.
#[must_use]
pub fn z_heights(code: &CssCode) -> (Vec<usize>, usize) {
    let inc = Incidence::new(code);
    let mut g = Graph::new(code.num_z());
    for zs in &inc.z_of_qubit {
        g.add_clique(zs);
    }
    let (colors, l) = greedy_by_degree(&g);
    (colors.into_iter().map(|c| c - 1).collect(), l)
}

/// Z-thickened code with the heights of [`z_heights`]. Z-checks are `Z`
/// then `E(L) ⊗ Q`; qubits are `V(L) ⊗ Q` then `E(L) ⊗ X`; X-checks are
/// `V(L) ⊗ X`.
///
/// # Errors
/// Only if the input does not commute.
pub fn z_thicken(code: &CssCode) -> Result<(CssCode, ThickenReport)> {
    let (heights, l) = z_heights(code);
    let n = code.n();
    let inc = Incidence::new(code);
    let vq = |h: usize, q: usize| q * l + h;
    let ex = |h: usize, x: usize| n * l + x * (l - 1) + h;
    let new_n = n * l + code.num_x() * (l - 1);

    let mut z_rows: Vec<Vec<usize>> = (0..code.num_z())
        .map(|z| inc.z_support[z].iter().map(|&q| vq(heights[z], q)).collect())
        .collect();
    for q in 0..n {
        for h in 0..l - 1 {
            let mut row = vec![vq(h, q), vq(h + 1, q)];
            row.extend(inc.x_of_qubit[q].iter().map(|&x| ex(h, x)));
            z_rows.push(row);
        }
    }
    let mut x_rows = Vec::new();
    for x in 0..code.num_x() {
        for h in 0..l {
            let mut row: Vec<usize> = inc.x_support[x].iter().map(|&q| vq(h, q)).collect();
            if h > 0 {
                row.push(ex(h - 1, x));
            }
            if h + 1 < l {
                row.push(ex(h, x));
            }
            x_rows.push(row);
        }
    }
    let out = CssCode::from_rows(new_n, &x_rows, &z_rows)?;
    let report = ThickenReport {
        heights,
        layers: l,
        input: code.summary(),
        output: out.summary(),
    };
    Ok((out, report))
}
