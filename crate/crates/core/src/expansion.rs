//! Exhaustive coexpansion constants of small graph complexes.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive scans.
pub const EXPANSION_THRESHOLD: usize = 22;

/// A graph complex `E → V`; multi-edges allowed, loops ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphComplex {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphComplex {
    #[must_use]
    pub fn new(vertices: usize, edges: Vec<[usize; 2]>) -> Self {
        Self { vertices, edges }
    }

    /// `R(L)`: the path on `L` vertices.
    #[must_use]
    pub fn repetition(l: usize) -> Self {
        Self::new(l, (1..l).map(|i| [i - 1, i]).collect())
    }

    /// Degree-0 graph of `A ⊗ B`: vertex `(x, y)` is `x·|V_B| + y`.
    #[must_use]
    pub fn tensor(a: &Self, b: &Self) -> Self {
        let nb = b.vertices;
        let mut edges = Vec::new();
        for y in 0..nb {
            edges.extend(a.edges.iter().map(|&[u, v]| [u * nb + y, v * nb + y]));
        }
        for x in 0..a.vertices {
            edges.extend(b.edges.iter().map(|&[u, v]| [x * nb + u, x * nb + v]));
        }
        Self::new(a.vertices * nb, edges)
    }

    /// `|δs|` for a subset given as a bitmask.
    #[must_use]
    pub fn coboundary_weight(&self, mask: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&[u, v]| (mask >> u & 1) != (mask >> v & 1))
            .count()
    }

    fn check_size(&self) -> Result<()> {
        if self.vertices > EXPANSION_THRESHOLD {
            return Err(Error::ThresholdExceeded {
                dim: self.vertices,
                threshold: EXPANSION_THRESHOLD,
            });
        }
        Ok(())
    }
}

/// A best constant with a subset attaining it. `value` is `None` when no
/// subset constrains the constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionConstant {
    pub value: Option<Ratio<u64>>,
    /// Vertices of the minimizing subset with the smallest bitmask.
    pub witness: Option<Vec<usize>>,
}

impl ExpansionConstant {
    /// `value >= bound`, with an unconstrained value exceeding every bound.
    #[must_use]
    pub fn at_least(&self, bound: Ratio<u64>) -> bool {
        self.value.is_none_or(|v| v >= bound)
    }

    /// The value as text, `inf` when unconstrained.
    #[must_use]
    pub fn display(&self) -> String {
        self.value.map_or_else(|| "inf".to_string(), |v| v.to_string())
    }
}

fn min_constant(a: Option<Ratio<u64>>, b: Option<Ratio<u64>>) -> Option<Ratio<u64>> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Per-subset quantities maintained along a Gray-code walk.
#[derive(Clone, Copy, Debug)]
struct Cut {
    mask: u64,
    size: usize,
    proj: usize,
    cut: usize,
}

/// Minimizes `objective` over all subsets. The subset space is split on the
/// high bits and each part is walked in Gray-code order; the result is the
/// least `(value, mask)`.
fn scan<F>(g: &GraphComplex, in_proj: &[bool], objective: F) -> Option<(Ratio<u64>, u64)>
where
    F: Fn(&Cut) -> Option<Ratio<u64>> + Sync,
{
    let n = g.vertices;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &[u, v] in &g.edges {
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let high = n.min(6);
    let low = n - high;
    (0u64..1 << high)
        .into_par_iter()
        .filter_map(|h| {
            let mask = h << low;
            let mut st = Cut {
                mask,
                size: mask.count_ones() as usize,
                proj: (0..n).filter(|&i| mask >> i & 1 == 1 && in_proj[i]).count(),
                cut: g.coboundary_weight(mask),
            };
            let mut best = objective(&st).map(|v| (v, st.mask));
            for step in 1u64..1 << low {
                let v = step.trailing_zeros() as usize;
                let was_in = st.mask >> v & 1 == 1;
                for &w in &adj[v] {
                    if (st.mask >> w & 1 == 1) == was_in {
                        st.cut += 1;
                    } else {
                        st.cut -= 1;
                    }
                }
                st.mask ^= 1 << v;
                if was_in {
                    st.size -= 1;
                    st.proj -= usize::from(in_proj[v]);
                } else {
                    st.size += 1;
                    st.proj += usize::from(in_proj[v]);
                }
                if let Some(val) = objective(&st) {
                    if best.is_none_or(|b| (val, st.mask) < b) {
                        best = Some((val, st.mask));
                    }
                }
            }
            best
        })
        .min()
}

fn finish(best: Option<(Ratio<u64>, u64)>) -> ExpansionConstant {
    ExpansionConstant {
        value: best.map(|b| b.0),
        witness: best.map(|b| mask_to_vertices(b.1)),
    }
}

/// `c* = min |δs|·|V| / (2|s||s̄|)` over proper nonempty subsets `s`.
///
/// # Errors
/// [`Error::ThresholdExceeded`] above [`EXPANSION_THRESHOLD`] vertices.
pub fn coexpansion_constant(g: &GraphComplex) -> Result<ExpansionConstant> {
    g.check_size()?;
    let n = g.vertices as u64;
    let none = vec![false; g.vertices];
    Ok(finish(scan(g, &none, |c| {
        let s = c.size as u64;
        (s > 0 && s < n).then(|| Ratio::new(c.cut as u64 * n, 2 * s * (n - s)))
    })))
}

/// `c^π* = min |δs|·|V^π| / (|πs||s̄| + |s||πs̄|)` over subsets with a
/// nonzero denominator.
///
/// # Errors
/// Too many vertices, or an empty or out-of-range projection.
pub fn relative_coexpansion_constant(g: &GraphComplex, projection: &[usize]) -> Result<ExpansionConstant> {
    g.check_size()?;
    let mut in_proj = vec![false; g.vertices];
    for &v in projection {
        *in_proj
            .get_mut(v)
            .ok_or_else(|| Error::InvalidArgument(format!("projection vertex {v} out of range")))? = true;
    }
    let p = in_proj.iter().filter(|&&b| b).count() as u64;
    if p == 0 {
        return Err(Error::InvalidArgument("projection must be nonempty".into()));
    }
    let n = g.vertices as u64;
    Ok(finish(scan(g, &in_proj, |c| {
        let (s, ps) = (c.size as u64, c.proj as u64);
        let denom = ps * (n - s) + s * (p - ps);
        (denom > 0).then(|| Ratio::new(c.cut as u64 * p, denom))
    })))
}

fn relative_or_unbounded(g: &GraphComplex, projection: &[usize]) -> Result<ExpansionConstant> {
    if projection.is_empty() {
        g.check_size()?;
        return Ok(ExpansionConstant {
            value: None,
            witness: None,
        });
    }
    relative_coexpansion_constant(g, projection)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorReport {
    pub a: ExpansionConstant,
    pub b: ExpansionConstant,
    pub a_pi: ExpansionConstant,
    pub b_pi: ExpansionConstant,
    pub c: ExpansionConstant,
    pub c_pi: ExpansionConstant,
    /// `min(a, b)`.
    pub c_bound: Option<Ratio<u64>>,
    /// `min(a, b, a^π, b^π)`, or `min(a^π, b)` / `min(a, b^π)` when one
    /// projection is empty.
    pub c_pi_bound: Option<Ratio<u64>>,
    pub holds: bool,
}

/// Computes both factors' constants and the product's, and compares them.
/// An empty projection is the zero projection.
///
/// # Errors
/// Size threshold on the product, or both projections empty.
pub fn check_tensor_bound(ga: &GraphComplex, gb: &GraphComplex, pa: &[usize], pb: &[usize]) -> Result<TensorReport> {
    if pa.is_empty() && pb.is_empty() {
        return Err(Error::InvalidArgument("at least one projection must be nonempty".into()));
    }
    let prod = GraphComplex::tensor(ga, gb);
    prod.check_size()?;
    let a = coexpansion_constant(ga)?;
    let b = coexpansion_constant(gb)?;
    let a_pi = relative_or_unbounded(ga, pa)?;
    let b_pi = relative_or_unbounded(gb, pb)?;
    let nb = gb.vertices;
    let mut proj: Vec<usize> = pa.iter().flat_map(|&x| (0..nb).map(move |y| x * nb + y)).collect();
    proj.extend((0..ga.vertices).flat_map(|x| pb.iter().map(move |&y| x * nb + y)));
    proj.sort_unstable();
    proj.dedup();
    let c = coexpansion_constant(&prod)?;
    let c_pi = relative_coexpansion_constant(&prod, &proj)?;
    let c_bound = min_constant(a.value, b.value);
    let c_pi_bound = if pb.is_empty() {
        min_constant(a_pi.value, b.value)
    } else if pa.is_empty() {
        min_constant(a.value, b_pi.value)
    } else {
        min_constant(min_constant(a.value, b.value), min_constant(a_pi.value, b_pi.value))
    };
    let holds = c_bound.is_none_or(|cb| c.at_least(cb)) && c_pi_bound.is_none_or(|cb| c_pi.at_least(cb));
    Ok(TensorReport {
        a,
        b,
        a_pi,
        b_pi,
        c,
        c_pi,
        c_bound,
        c_pi_bound,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport {
    pub l1: usize,
    pub l2: usize,
    pub w: usize,
    pub c: ExpansionConstant,
    pub c_pi: ExpansionConstant,
    /// `2 / max(L1, L2)`.
    pub c_bound: Ratio<u64>,
    /// `min(1, 2L1/L2) / L1`.
    pub c_pi_bound: Ratio<u64>,
    /// Smallest `|δs| · w / min(|πs|, |πs̄|)` over subsets with a nonzero
    /// minimum, to compare against `min(1, 2L1/L2)`.
    pub pinned_ratio: Option<Ratio<u64>>,
    pub pinned_witness: Option<Vec<usize>>,
    pub pinned_bound: Ratio<u64>,
    pub c_holds: bool,
    pub c_pi_holds: bool,
    pub pinned_holds: bool,
}

impl SquareReport {
    #[must_use]
    pub fn holds(&self) -> bool {
        self.c_holds && self.c_pi_holds && self.pinned_holds
    }
}

/// Checks the coexpansion bounds of the grid `R(L1) ⊗ R(L2)` with the
/// projection onto vertices `(i, j)`, `i < w`.
///
/// # Errors
/// Size threshold, or `w` outside `1..=L1`.
pub fn check_square_bound(l1: usize, l2: usize, w: usize) -> Result<SquareReport> {
    if w == 0 || w > l1 || l2 == 0 {
        return Err(Error::InvalidArgument(format!("need 1 <= w <= L1 and L2 >= 1, got L1={l1} L2={l2} w={w}")));
    }
    let g = GraphComplex::tensor(&GraphComplex::repetition(l1), &GraphComplex::repetition(l2));
    g.check_size()?;
    let proj: Vec<usize> = (0..w * l2).collect();
    let c = coexpansion_constant(&g)?;
    let c_pi = relative_coexpansion_constant(&g, &proj)?;
    let (l1u, l2u, wu) = (l1 as u64, l2 as u64, w as u64);
    let m = Ratio::new(2 * l1u, l2u).min(Ratio::from_integer(1));
    let c_bound = Ratio::new(2, l1u.max(l2u));
    let c_pi_bound = m / l1u;

    let mut in_proj = vec![false; g.vertices];
    for &v in &proj {
        in_proj[v] = true;
    }
    let p = proj.len();
    let pinned = scan(&g, &in_proj, |st| {
        let pmin = st.proj.min(p - st.proj) as u64;
        (pmin > 0).then(|| Ratio::new(st.cut as u64 * wu, pmin))
    });
    Ok(SquareReport {
        l1,
        l2,
        w,
        c_holds: c.at_least(c_bound),
        c_pi_holds: c_pi.at_least(c_pi_bound),
        pinned_holds: pinned.is_none_or(|(r, _)| r >= m),
        pinned_ratio: pinned.map(|b| b.0),
        pinned_witness: pinned.map(|b| mask_to_vertices(b.1)),
        pinned_bound: m,
        c,
        c_pi,
        c_bound,
        c_pi_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: u64, d: u64) -> Ratio<u64> {
        Ratio::new(n, d)
    }

    /// Plain binary-order enumeration straight from the definitions.
    fn brute(g: &GraphComplex, proj: Option<&[usize]>) -> Option<(Ratio<u64>, u64)> {
        let n = g.vertices as u64;
        let mut best: Option<(Ratio<u64>, u64)> = None;
        for mask in 0u64..1 << n {
            let s = u64::from(mask.count_ones());
            let cut = g.coboundary_weight(mask) as u64;
            let val = match proj {
                None => (s > 0 && s < n).then(|| r(cut * n, 2 * s * (n - s))),
                Some(p) => {
                    let ps = p.iter().filter(|&&v| mask >> v & 1 == 1).count() as u64;
                    let pl = p.len() as u64;
                    let d = ps * (n - s) + s * (pl - ps);
                    (d > 0).then(|| r(cut * pl, d))
                }
            };
            if let Some(v) = val {
                if best.is_none_or(|b| (v, mask) < b) {
                    best = Some((v, mask));
                }
            }
        }
        best
    }

    #[test]
    fn repetition_three() {
        let g = GraphComplex::repetition(3);
        assert_eq!(coexpansion_constant(&g).unwrap().value, Some(r(3, 4)));
        assert_eq!(relative_coexpansion_constant(&g, &[0]).unwrap().value, Some(r(1, 2)));
    }

    #[test]
    fn disconnected_is_zero_with_witness() {
        let g = GraphComplex::new(2, vec![]);
        let c = coexpansion_constant(&g).unwrap();
        assert_eq!(c.value, Some(r(0, 1)));
        assert_eq!(c.witness, Some(vec![0]));
        let c = relative_coexpansion_constant(&g, &[0]).unwrap();
        assert_eq!(c.value, Some(r(0, 1)));
    }

    #[test]
    fn repetition_bounds() {
        for l in 2..=10usize {
            let g = GraphComplex::repetition(l);
            assert!(coexpansion_constant(&g).unwrap().at_least(r(2, l as u64)));
            for w in 1..=l {
                let p: Vec<usize> = (0..w).collect();
                assert!(relative_coexpansion_constant(&g, &p).unwrap().at_least(r(1, l as u64)));
            }
        }
    }

    #[test]
    fn full_projection_matches_plain_constant() {
        for l in 2..=6 {
            let g = GraphComplex::repetition(l);
            let all: Vec<usize> = (0..l).collect();
            assert_eq!(
                relative_coexpansion_constant(&g, &all).unwrap().value,
                coexpansion_constant(&g).unwrap().value
            );
        }
    }

    #[test]
    fn square_examples() {
        for (l1, l2, w) in [(2, 2, 1), (3, 2, 2), (2, 4, 1)] {
            let rep = check_square_bound(l1, l2, w).unwrap();
            assert!(rep.holds(), "{rep:?}");
        }
        assert!(check_square_bound(5, 5, 1).is_err());
    }

    #[test]
    fn tensor_examples() {
        let r2 = GraphComplex::repetition(2);
        let rep = check_tensor_bound(&r2, &r2, &[0], &[0]).unwrap();
        assert_eq!(rep.a.value, Some(r(1, 1)));
        assert_eq!(rep.c_bound, Some(r(1, 1)));
        assert!(rep.holds);

        let rep = check_tensor_bound(&GraphComplex::repetition(3), &r2, &[0], &[]).unwrap();
        assert!(rep.holds);

        let edgeless = GraphComplex::new(2, vec![]);
        let rep = check_tensor_bound(&edgeless, &r2, &[0], &[0]).unwrap();
        assert_eq!(rep.a.value, Some(r(0, 1)));
        assert_eq!(rep.c_bound, Some(r(0, 1)));
        assert!(rep.holds);
    }

    fn small_graph() -> impl Strategy<Value = GraphComplex> {
        (2usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..14)
                .prop_map(move |es| GraphComplex::new(n, es.into_iter().filter(|(a, b)| a != b).map(|(a, b)| [a, b]).collect()))
        })
    }

    proptest! {
        #[test]
        fn gray_scan_matches_binary_enumeration(g in small_graph(), k in 1usize..4) {
            let c = coexpansion_constant(&g).unwrap();
            let b = brute(&g, None);
            prop_assert_eq!(c.value, b.map(|x| x.0));
            prop_assert_eq!(c.witness, b.map(|x| mask_to_vertices(x.1)));
            let p: Vec<usize> = (0..k.min(g.vertices)).collect();
            let c = relative_coexpansion_constant(&g, &p).unwrap();
            let b = brute(&g, Some(&p));
            prop_assert_eq!(c.value, b.map(|x| x.0));
            prop_assert_eq!(c.witness, b.map(|x| mask_to_vertices(x.1)));
        }

        #[test]
        fn complementing_leaves_the_objective_unchanged(g in small_graph(), mask in 0u64..256) {
            let n = g.vertices;
            let mask = mask & ((1 << n) - 1);
            let comp = !mask & ((1 << n) - 1);
            prop_assert_eq!(g.coboundary_weight(mask), g.coboundary_weight(comp));
        }
    }
}
