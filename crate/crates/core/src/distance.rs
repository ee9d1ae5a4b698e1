//! Exact and randomized minimum-distance computations for CSS codes.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, Span};

/// Default exhaustion threshold on the kernel dimension.
pub const EXACT_THRESHOLD: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Z,
}

impl Side {
    #[must_use]
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Z,
            Side::Z => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Z => "Z",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Side::X),
            "z" | "Z" => Ok(Side::Z),
            _ => Err(Error::Parse(format!("unknown side {s:?}, expected X or Z"))),
        }
    }
}

/// A distance, or `Infinite` when there is no nontrivial logical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    #[must_use]
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Infinite) => Ordering::Less,
            (Distance::Infinite, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Infinite, Distance::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// A distance together with a minimum-weight witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: Distance,
    pub witness: Option<BitVector>,
}

/// `(check, stabilizer)` matrices for a side: X-logicals commute with
/// Z-checks and are taken modulo X-stabilizers.
fn side_matrices(code: &CssCode, side: Side) -> (&BitMatrix, &BitMatrix) {
    match side {
        Side::X => (&code.hz, &code.hx),
        Side::Z => (&code.hx, &code.hz),
    }
}

/// Whether `v` is a nontrivial logical of the given side, by rank test.
#[must_use]
pub fn is_nontrivial_logical(code: &CssCode, side: Side, v: &BitVector) -> bool {
    let (checks, stabs) = side_matrices(code, side);
    if v.len() != code.n() || !checks.mul_vec(v).map(|s| s.is_zero()).unwrap_or(false) {
        return false;
    }
    let stacked = stabs.vstack(&BitMatrix::from_row_vectors(code.n(), std::slice::from_ref(v)));
    stacked.rank() > stabs.rank()
}

/// Representatives of the logicals of `side`: kernel vectors of the side's
/// checks that extend a basis of the stabilizer row space.
#[must_use]
pub fn logical_basis(code: &CssCode, side: Side) -> Vec<BitVector> {
    let (checks, stabs) = side_matrices(code, side);
    let mut span = Span::new(code.n());
    for r in 0..stabs.rows() {
        span.insert(stabs.row(r));
    }
    checks
        .kernel_basis()
        .into_iter()
        .filter(|v| span.insert(v.clone()))
        .collect()
}

/// Minimum weight of a nontrivial logical of `side`, by enumerating the
/// whole kernel of the side's checks.
///
/// # Errors
/// [`Error::ThresholdExceeded`] if the kernel dimension exceeds `threshold`.
pub fn distance_exact_with(code: &CssCode, side: Side, threshold: usize) -> Result<DistanceResult> {
    let (checks, stabs) = side_matrices(code, side);
    let kernel = checks.kernel_basis();
    if kernel.len() > threshold {
        return Err(Error::ThresholdExceeded {
            dim: kernel.len(),
            threshold,
        });
    }
    // Basis of the kernel split into stabilizer part and completion.
    let mut span = Span::new(code.n());
    let mut image = Vec::new();
    for r in 0..stabs.rows() {
        let row = stabs.row(r);
        if span.insert(row.clone()) {
            image.push(row);
        }
    }
    let completion: Vec<BitVector> = kernel.into_iter().filter(|v| span.insert(v.clone())).collect();
    if completion.is_empty() {
        return Ok(DistanceResult {
            distance: Distance::Infinite,
            witness: None,
        });
    }
    let basis: Vec<&BitVector> = image.iter().chain(&completion).collect();
    let dim = basis.len();
    let first_logical = image.len();
    let words = code.n().div_ceil(64);
    let mut cur = vec![0u64; words];
    let mut coeffs: u64 = 0;
    let mut best: Option<(usize, Vec<u64>)> = None;
    for step in 1u64..(1u64 << dim) {
        let bit = step.trailing_zeros() as usize;
        coeffs ^= 1 << bit;
        for (c, b) in cur.iter_mut().zip(basis[bit].words()) {
            *c ^= b;
        }
        if coeffs >> first_logical == 0 {
            continue;
        }
        let w: usize = cur.iter().map(|x| x.count_ones() as usize).sum();
        let better = match &best {
            None => true,
            Some((bw, bv)) => w < *bw || (w == *bw && lex_less(&cur, bv)),
        };
        if better {
            best = Some((w, cur.clone()));
        }
    }
    let (w, words) = best.expect("a nonzero completion coefficient always occurs");
    let witness = BitVector::from_words(code.n(), words);
    debug_assert!(is_nontrivial_logical(code, side, &witness));
    if !is_nontrivial_logical(code, side, &witness) {
        return Err(Error::NotALogical("exhaustive witness failed certification".into()));
    }
    Ok(DistanceResult {
        distance: Distance::Finite(w),
        witness: Some(witness),
    })
}

/// Lexicographic order on supports: the vector whose smallest differing
/// position is set comes first.
fn lex_less(a: &[u64], b: &[u64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        let d = x ^ y;
        if d != 0 {
            return x & (d & d.wrapping_neg()) != 0;
        }
    }
    false
}

/// [`distance_exact_with`] at [`EXACT_THRESHOLD`].
///
/// # Errors
/// As [`distance_exact_with`].
pub fn distance_exact(code: &CssCode, side: Side) -> Result<DistanceResult> {
    distance_exact_with(code, side, EXACT_THRESHOLD)
}

/// Options for [`distance_upper`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub trials: usize,
    pub seed: u64,
    /// Pivot swaps applied between consecutive scans.
    pub swaps_per_trial: usize,
}

impl SearchOptions {
    #[must_use]
    pub fn new(trials: usize, seed: u64) -> Self {
        Self {
            trials,
            seed,
            swaps_per_trial: 4,
        }
    }
}

/// Upper bound on the distance of `side` from a randomized information-set
/// walk over the kernel of the side's checks. The kernel basis is put in
/// reduced echelon form under a seeded random column order, and each trial
/// applies random pivot exchanges before scanning the rows for the lightest
/// nontrivial logical. The result is the minimum over trials, so it is
/// non-increasing in `trials` for a fixed seed.
///
/// Returns [`Distance::Infinite`] when the code has no logicals of `side`.
///
/// # Errors
/// [`Error::NotALogical`] if the final witness fails the rank certificate.
pub fn distance_upper(code: &CssCode, side: Side, opts: SearchOptions) -> Result<DistanceResult> {
    let (checks, _) = side_matrices(code, side);
    let duals = logical_basis(code, side.other());
    if duals.is_empty() {
        return Ok(DistanceResult {
            distance: Distance::Infinite,
            witness: None,
        });
    }
    let n = code.n();
    let kernel = checks.kernel_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut m = BitMatrix::from_row_vectors(n, &kernel);
    let pivots = m.rref_in_order(order.iter().copied());
    let rows = pivots.len();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut pivot_row: Vec<usize> = pivots.clone();

    let mut best: Option<(usize, BitVector)> = None;
    let scan = |m: &BitMatrix, best: &mut Option<(usize, BitVector)>| {
        for r in 0..rows {
            let w = m.row_weight(r);
            if best.as_ref().is_some_and(|(bw, _)| w > *bw) {
                continue;
            }
            let row = m.row(r);
            if !duals.iter().any(|d| row.dot(d)) {
                continue;
            }
            let better = match best.as_ref() {
                None => true,
                Some((bw, bv)) => w < *bw || row.cmp_weight_lex(bv) == Ordering::Less,
            };
            if better {
                *best = Some((w, row));
            }
        }
    };
    scan(&m, &mut best);
    for _ in 0..opts.trials {
        for _ in 0..opts.swaps_per_trial {
            if rows == 0 || rows == n {
                break;
            }
            // Bring a random non-pivot column into the basis.
            let c = loop {
                let c = rng.gen_range(0..n);
                if !is_pivot[c] {
                    break c;
                }
            };
            let candidates: Vec<usize> = (0..rows).filter(|&r| m.get(r, c)).collect();
            if candidates.is_empty() {
                continue;
            }
            let r = candidates[rng.gen_range(0..candidates.len())];
            m.pivot_on(r, c);
            is_pivot[pivot_row[r]] = false;
            is_pivot[c] = true;
            pivot_row[r] = c;
        }
        scan(&m, &mut best);
    }
    // Some logical row exists in any basis of the kernel, so `best` is set.
    let (w, witness) = best.expect("kernel basis contains a nontrivial logical");
    if !is_nontrivial_logical(code, side, &witness) {
        return Err(Error::NotALogical("search witness failed certification".into()));
    }
    Ok(DistanceResult {
        distance: Distance::Finite(w),
        witness: Some(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn exact_small_codes() {
        let tri = fixtures::tri();
        assert_eq!(distance_exact(&tri, Side::X).unwrap().distance, Distance::Finite(2));
        assert_eq!(distance_exact(&tri, Side::Z).unwrap().distance, Distance::Finite(1));
        let shor = fixtures::shor();
        assert_eq!(distance_exact(&shor, Side::X).unwrap().distance, Distance::Finite(3));
        assert_eq!(distance_exact(&shor, Side::Z).unwrap().distance, Distance::Finite(3));
        let steane = fixtures::steane();
        assert_eq!(distance_exact(&steane, Side::X).unwrap().distance, Distance::Finite(3));
        assert_eq!(distance_exact(&steane, Side::Z).unwrap().distance, Distance::Finite(3));
    }

    #[test]
    fn no_logicals_is_infinite() {
        let c = CssCode::new(BitMatrix::from_row_supports(1, &[vec![0]]), BitMatrix::zeros(0, 1)).unwrap();
        assert_eq!(c.k(), 0);
        assert_eq!(distance_exact(&c, Side::Z).unwrap().distance, Distance::Infinite);
        assert_eq!(distance_exact(&c, Side::X).unwrap().distance, Distance::Infinite);
    }

    #[test]
    fn threshold_is_reported() {
        let c = CssCode::new(BitMatrix::zeros(0, 30), BitMatrix::zeros(0, 30)).unwrap();
        assert_eq!(
            distance_exact(&c, Side::X),
            Err(Error::ThresholdExceeded { dim: 30, threshold: 26 })
        );
    }

    #[test]
    fn witnesses_are_certified() {
        for code in [fixtures::tri(), fixtures::shor(), fixtures::steane()] {
            for side in [Side::X, Side::Z] {
                let r = distance_exact(&code, side).unwrap();
                let w = r.witness.unwrap();
                assert!(is_nontrivial_logical(&code, side, &w));
                assert_eq!(Distance::Finite(w.weight()), r.distance);
            }
        }
    }

    #[test]
    fn search_matches_exact_on_fixtures() {
        let shor = fixtures::shor();
        for side in [Side::X, Side::Z] {
            let r = distance_upper(&shor, side, SearchOptions::new(100, 7)).unwrap();
            assert_eq!(r.distance, Distance::Finite(3));
        }
        let tri = fixtures::tri();
        let r = distance_upper(&tri, Side::Z, SearchOptions::new(10, 1)).unwrap();
        assert_eq!(r.distance, Distance::Finite(1));
    }

    #[test]
    fn search_is_deterministic_and_monotone() {
        let code = fixtures::hypergraph_product(&fixtures::random_classical(6, 4, 3, 11), &fixtures::random_classical(5, 3, 3, 12));
        let mut prev = Distance::Infinite;
        for trials in [0, 5, 20, 80] {
            let a = distance_upper(&code, Side::X, SearchOptions::new(trials, 3)).unwrap();
            let b = distance_upper(&code, Side::X, SearchOptions::new(trials, 3)).unwrap();
            assert_eq!(a, b);
            assert!(a.distance <= prev);
            prev = a.distance;
            let exact = distance_exact(&code, Side::X).unwrap().distance;
            assert!(a.distance >= exact);
        }
    }
}
