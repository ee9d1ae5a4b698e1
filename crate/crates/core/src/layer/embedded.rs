use super::{BlockComplex, LayerAssembly};
use crate::distance::{is_nontrivial_logical, Side};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, EchelonForm};

/// The maps induced on homology by `g^{QX}_2` and `g^{ZQ}_1`, in the bases
/// `|x⟩ = Σ_{j,k} |x,j,k⟩`, `|q⟩ = Σ_k |1,q,k⟩` and `|z⟩ = |1,1,z⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedComplex {
    /// `|Q| × |X|`; equals `Hxᵀ` for a correct construction.
    pub d2: BitMatrix,
    /// `|Z| × |Q|`; equals `Hz` for a correct construction.
    pub d1: BitMatrix,
}

/// Patch-local vector with ones at the listed coordinates of `level`.
fn patch_vector(block: &BlockComplex, level: usize, keep: impl Fn(i64, i64) -> bool) -> BitVector {
    let p = &block.patch;
    BitVector::from_support(
        p.dim(level),
        (0..p.dim(level)).filter(|&i| {
            let (a, b) = p.coords(level, i);
            keep(a, b)
        }),
    )
}

/// Places a patch vector into `layer` of a block-level vector.
fn place(block: &BlockComplex, level: usize, layer: usize, v: &BitVector, out: &mut BitVector) {
    let per = block.patch.dim(level);
    for i in v.iter_ones() {
        out.set(layer * per + i, true);
    }
}

fn slice(block: &BlockComplex, level: usize, layer: usize, v: &BitVector) -> BitVector {
    let per = block.patch.dim(level);
    v.slice(layer * per, per)
}

/// Coefficient of `rep` when `t` is written as `rep`-multiple plus a
/// boundary, or `None` if `t` is not of that form.
fn homology_coefficient(form: &EchelonForm, t: &BitVector) -> Result<Option<bool>> {
    Ok(form.solve(t)?.map(|y| y.get(y.len() - 1)))
}

fn with_rep(boundary: &BitMatrix, rep: &BitVector) -> EchelonForm {
    EchelonForm::new(&boundary.hstack(&BitMatrix::from_col_vectors(rep.len(), std::slice::from_ref(rep))))
}

pub(crate) fn q_rep(a: &LayerAssembly) -> BitVector {
    patch_vector(&a.blocks.cq, 1, |i, k| i == 2 && k % 2 == 0)
}

/// Recovers the input code from the homology of the blocks.
///
/// # Errors
/// [`Error::Mismatch`] if an image is not a cycle of the expected form.
pub fn embedded_complex(a: &LayerAssembly) -> Result<EmbeddedComplex> {
    let (cx, cq, cz) = (&a.blocks.cx, &a.blocks.cq, &a.blocks.cz);
    let x_rep = patch_vector(cx, 2, |_, _| true);
    let q_rep = q_rep(a);
    let z_rep = patch_vector(cz, 0, |i, j| i == 2 && j == 2);
    let q_form = with_rep(&cq.patch.complex.boundary(2), &q_rep);
    let z_form = with_rep(&cz.patch.complex.boundary(1), &z_rep);

    let mut d2 = BitMatrix::zeros(cq.layers, cx.layers);
    for x in 0..cx.layers {
        let mut v = BitVector::zeros(cx.dim(2));
        place(cx, 2, x, &x_rep, &mut v);
        let t = a.maps.gqx[0].mul_vec(&v)?;
        for q in 0..cq.layers {
            match homology_coefficient(&q_form, &slice(cq, 1, q, &t))? {
                Some(c) => d2.set(q, x, c),
                None => {
                    return Err(Error::Mismatch {
                        what: "d2 (image is not a cycle of the qubit layer)".into(),
                        column: x,
                    })
                }
            }
        }
    }
    let mut d1 = BitMatrix::zeros(cz.layers, cq.layers);
    for q in 0..cq.layers {
        let mut v = BitVector::zeros(cq.dim(1));
        place(cq, 1, q, &q_rep, &mut v);
        let t = a.maps.gzq[1].mul_vec(&v)?;
        for z in 0..cz.layers {
            match homology_coefficient(&z_form, &slice(cz, 0, z, &t))? {
                Some(c) => d1.set(z, q, c),
                None => {
                    return Err(Error::Mismatch {
                        what: "d1 (image is not a cycle of the Z-check layer)".into(),
                        column: q,
                    })
                }
            }
        }
    }
    Ok(EmbeddedComplex { d2, d1 })
}

impl EmbeddedComplex {
    /// Compares with the input of `a`.
    ///
    /// # Errors
    /// [`Error::Mismatch`] with the first differing column.
    pub fn verify_against(&self, a: &LayerAssembly) -> Result<()> {
        let first_diff = |m: &BitMatrix, n: &BitMatrix| m.add(n).ok().and_then(|d| d.entries().map(|(_, c)| c).min());
        if let Some(column) = first_diff(&self.d2, &a.input.hx.transpose()) {
            return Err(Error::Mismatch { what: "d2".into(), column });
        }
        if let Some(column) = first_diff(&self.d1, &a.input.hz) {
            return Err(Error::Mismatch { what: "d1".into(), column });
        }
        Ok(())
    }
}

/// Lifts an X-logical of the input to one of the output:
/// `ℓ = 0 ⊕ ℓ^Q ⊕ ℓ^Z` with `ℓ^Q = Σ_{q ∈ lA} Σ_k |1,q,k⟩` and
/// `∂^Z ℓ^Z = g^{ZQ} ℓ^Q`.
///
/// # Errors
/// [`Error::NotALogical`] if `la` or the lift is not a nontrivial logical;
/// [`Error::SolveFailed`] if the defining system has no solution.
pub fn lift_logical(a: &LayerAssembly, la: &BitVector) -> Result<BitVector> {
    if !is_nontrivial_logical(&a.input, Side::X, la) {
        return Err(Error::NotALogical("input vector is not a nontrivial X-logical of the input code".into()));
    }
    let (cq, cz) = (&a.blocks.cq, &a.blocks.cz);
    let rep = q_rep(a);
    let mut lq = BitVector::zeros(cq.dim(1));
    for q in la.iter_ones() {
        place(cq, 1, q, &rep, &mut lq);
    }
    let t = a.maps.gzq[1].mul_vec(&lq)?;
    let form = EchelonForm::new(&cz.patch.complex.boundary(1));
    let mut lz = BitVector::zeros(cz.dim(1));
    for z in 0..cz.layers {
        let y = form
            .solve(&slice(cz, 0, z, &t))?
            .ok_or_else(|| Error::SolveFailed(format!("no Z-layer correction for Z-check {z}")))?;
        place(cz, 1, z, &y, &mut lz);
    }
    let [_, oq, oz] = a.offsets(1);
    let n = a.output.n();
    let lifted = BitVector::from_support(n, lq.iter_ones().map(|i| oq + i).chain(lz.iter_ones().map(|i| oz + i)));
    if !is_nontrivial_logical(&a.output, Side::X, &lifted) {
        return Err(Error::NotALogical("lifted vector failed the output rank certificate".into()));
    }
    Ok(lifted)
}
