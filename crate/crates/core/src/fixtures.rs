//! Small reference codes and seeded generators for bulk tests.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::CssCode;
use crate::gf2::BitMatrix;

/// Three qubits with checks `XXI` and `ZZZ`.
#[must_use]
pub fn tri() -> CssCode {
    CssCode::from_rows(3, &[vec![0, 1]], &[vec![0, 1, 2]]).expect("valid code")
}

/// The nine-qubit Shor code: X-checks on qubits 1–6 and 4–9, Z-checks on
/// neighbouring pairs within each block of three.
#[must_use]
pub fn shor() -> CssCode {
    CssCode::from_rows(
        9,
        &[vec![0, 1, 2, 3, 4, 5], vec![3, 4, 5, 6, 7, 8]],
        &[vec![0, 1], vec![1, 2], vec![3, 4], vec![4, 5], vec![6, 7], vec![7, 8]],
    )
    .expect("valid code")
}

/// Parity-check matrix of the [7,4] Hamming code; column `j` is the binary
/// expansion of `j + 1`.
#[must_use]
pub fn hamming7() -> BitMatrix {
    BitMatrix::from_entries(3, 7, (0..7).flat_map(|j| (0..3).filter(move |b| (j + 1) >> b & 1 == 1).map(move |b| (b, j))))
}

/// The Steane code: both check matrices are the Hamming parity matrix.
#[must_use]
pub fn steane() -> CssCode {
    CssCode::new(hamming7(), hamming7()).expect("valid code")
}

/// A hand-picked coloring of [`shor`] with palettes `(2, 6, 2)`: `(eta_x, eta_q, eta_z)`, 1-based.
#[must_use]
pub fn shor_coloring() -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    (vec![1, 2], vec![1, 2, 3, 4, 5, 6, 1, 2, 3], vec![1, 2, 1, 2, 1, 2])
}

/// A seeded sparse classical parity-check matrix with `checks` rows over
/// `bits` columns. Each row gets `row_weight` distinct bits, preferring the
/// bits of lowest current degree so column degrees stay balanced.
#[must_use]
pub fn random_classical(bits: usize, checks: usize, row_weight: usize, seed: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let row_weight = row_weight.min(bits);
    let mut degree = vec![0usize; bits];
    let mut rows = Vec::with_capacity(checks);
    for _ in 0..checks {
        let mut cand: Vec<usize> = (0..bits).collect();
        cand.shuffle(&mut rng);
        cand.sort_by_key(|&b| degree[b]);
        let mut row: Vec<usize> = cand[..row_weight].to_vec();
        row.sort_unstable();
        for &b in &row {
            degree[b] += 1;
        }
        rows.push(row);
    }
    BitMatrix::from_row_supports(bits, &rows)
}

/// Hypergraph product of two classical parity-check matrices.
/// Qubits are `bits1 × bits2` followed by `checks1 × checks2`.
#[must_use]
pub fn hypergraph_product(h1: &BitMatrix, h2: &BitMatrix) -> CssCode {
    let (m1, n1) = (h1.rows(), h1.cols());
    let (m2, n2) = (h2.rows(), h2.cols());
    let hx = h1.kron(&BitMatrix::identity(n2)).hstack(&BitMatrix::identity(m1).kron(&h2.transpose()));
    let hz = BitMatrix::identity(n1).kron(h2).hstack(&h1.transpose().kron(&BitMatrix::identity(m2)));
    CssCode::new(hx, hz).expect("hypergraph products commute")
}

/// Parameters of the seeded bulk family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BulkParams {
    pub bits: usize,
    pub checks: usize,
    pub row_weight: usize,
}

/// The `index`-th member of the seeded hypergraph-product family used by the
/// bulk suites. Factor sizes cycle through a few small shapes.
#[must_use]
pub fn bulk_instance(index: u64) -> CssCode {
    const SHAPES: [BulkParams; 4] = [
        BulkParams { bits: 4, checks: 3, row_weight: 2 },
        BulkParams { bits: 4, checks: 2, row_weight: 3 },
        BulkParams { bits: 5, checks: 3, row_weight: 3 },
        BulkParams { bits: 3, checks: 2, row_weight: 2 },
    ];
    let a = SHAPES[(index % 4) as usize];
    let b = SHAPES[((index / 4) % 4) as usize];
    let h1 = random_classical(a.bits, a.checks, a.row_weight, 1000 + 2 * index);
    let h2 = random_classical(b.bits, b.checks, b.row_weight, 1001 + 2 * index);
    hypergraph_product(&h1, &h2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!((tri().n(), tri().k()), (3, 1));
        assert_eq!((shor().n(), shor().k()), (9, 1));
        assert_eq!((steane().n(), steane().k()), (7, 1));
        assert_eq!(hamming7().col_weights(), vec![1, 1, 2, 1, 2, 2, 3]);
    }

    #[test]
    fn hypergraph_product_shape() {
        let h = random_classical(5, 3, 3, 4);
        assert_eq!(h.row_weights(), vec![3, 3, 3]);
        let c = hypergraph_product(&h, &h);
        assert_eq!(c.n(), 25 + 9);
        // k = k1 k2 + k1ᵀ k2ᵀ for the two classical factors.
        let r = h.rank();
        let (k, kt) = (5 - r, 3 - r);
        assert_eq!(c.k(), k * k + kt * kt);
    }

    #[test]
    fn bulk_is_seeded() {
        assert_eq!(bulk_instance(3), bulk_instance(3));
        for i in 0..8 {
            let c = bulk_instance(i);
            assert!(c.hx.mul(&c.hz.transpose()).unwrap().is_zero());
        }
    }
}

