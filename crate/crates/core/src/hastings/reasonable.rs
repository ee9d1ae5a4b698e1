use serde::{Deserialize, Serialize};

use crate::complex::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{BitVector, Span};

/// Default cap on `|supp z|` for the subset enumeration.
pub const REASONABLE_THRESHOLD: usize = 22;

/// A nontrivial Z-logical inside the support of a Z-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub z: usize,
    pub support: Vec<usize>,
}

/// Per-check verdicts of the two routes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub z: usize,
    pub weight: usize,
    /// Subset enumeration; `None` above the threshold.
    pub enumeration: Option<bool>,
    /// `ker(Hx restricted to supp z) ⊆ rowspace(Hz)`.
    pub subspace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReasonablenessReport {
    pub checks: Vec<CheckVerdict>,
    pub violations: Vec<Violation>,
}

impl ReasonablenessReport {
    #[must_use]
    pub fn reasonable(&self) -> bool {
        self.violations.is_empty() && self.routes_agree()
    }

    /// Both routes gave the same verdict wherever both ran.
    #[must_use]
    pub fn routes_agree(&self) -> bool {
        self.checks.iter().all(|c| c.enumeration.is_none_or(|e| e == c.subspace))
    }
}

fn enumerate_subsets(code: &CssCode, stabilizers: &Span, support: &[usize]) -> Option<Vec<usize>> {
    // Gray-code walk over subsets, tracking the X-syndrome.
    let cols: Vec<BitVector> = support.iter().map(|&q| code.hx.column(q)).collect();
    let mut syndrome = BitVector::zeros(code.num_x());
    let mut chosen = vec![false; support.len()];
    let mut best: Option<Vec<usize>> = None;
    for step in 1u64..(1u64 << support.len()) {
        let bit = step.trailing_zeros() as usize;
        chosen[bit] = !chosen[bit];
        syndrome.xor_assign(&cols[bit]);
        if !syndrome.is_zero() {
            continue;
        }
        let v = BitVector::from_support(code.n(), (0..support.len()).filter(|&i| chosen[i]).map(|i| support[i]));
        if !stabilizers.contains(&v) {
            let s = v.support();
            if best.as_ref().is_none_or(|b| (s.len(), &s) < (b.len(), b)) {
                best = Some(s);
            }
        }
    }
    best
}

fn subspace_witness(code: &CssCode, stabilizers: &Span, support: &[usize]) -> Option<Vec<usize>> {
    let restricted = code.hx.select_columns(support);
    restricted
        .kernel_basis()
        .into_iter()
        .map(|k| BitVector::from_support(code.n(), k.iter_ones().map(|i| support[i])))
        .find(|v| !stabilizers.contains(v))
        .map(|v| v.support())
}

/// Checks that no nontrivial Z-logical is supported inside any check of `zs`.
/// Every check is tested by the subspace route; checks of weight at most
/// `threshold` are also tested by enumerating all subsets of their support.
///
/// # Errors
/// [`Error::InvalidArgument`] for an out-of-range check index.
pub fn check_z_reasonable_with(code: &CssCode, zs: &[usize], threshold: usize) -> Result<ReasonablenessReport> {
    let stabilizers = Span::from_vectors(code.n(), &(0..code.num_z()).map(|z| code.hz.row(z)).collect::<Vec<_>>());
    let mut checks = Vec::new();
    let mut violations = Vec::new();
    for &z in zs {
        if z >= code.num_z() {
            return Err(Error::InvalidArgument(format!("Z-check {z} out of range")));
        }
        let support = code.hz.row_support(z);
        let sub = subspace_witness(code, &stabilizers, &support);
        let en = (support.len() <= threshold).then(|| enumerate_subsets(code, &stabilizers, &support));
        checks.push(CheckVerdict {
            z,
            weight: support.len(),
            enumeration: en.as_ref().map(Option::is_none),
            subspace: sub.is_none(),
        });
        if let Some(s) = en.flatten().or(sub) {
            violations.push(Violation { z, support: s });
        }
    }
    Ok(ReasonablenessReport { checks, violations })
}

/// [`check_z_reasonable_with`] at [`REASONABLE_THRESHOLD`].
///
/// # Errors
/// As [`check_z_reasonable_with`].
pub fn check_z_reasonable(code: &CssCode, zs: &[usize]) -> Result<ReasonablenessReport> {
    check_z_reasonable_with(code, zs, REASONABLE_THRESHOLD)
}
