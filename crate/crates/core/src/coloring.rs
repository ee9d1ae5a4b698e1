//! Induced graphs of a CSS code, greedy coloring, and coloring validation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::CssCode;
use crate::error::{Error, Result};

/// Simple undirected graph as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    #[must_use]
    pub fn new(vertices: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); vertices],
        }
    }

    /// Adds `uv`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    /// Adds every edge among `vs`.
    pub fn add_clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.add_edge(u, v);
            }
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[must_use]
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    #[must_use]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[must_use]
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Whether `colors` differ across every edge.
    #[must_use]
    pub fn is_proper(&self, colors: &[usize]) -> bool {
        (0..self.len()).all(|u| self.adj[u].iter().all(|&v| colors[u] != colors[v]))
    }
}

/// Greedy proper coloring visiting vertices in `order`; each vertex gets the
/// smallest 1-based color unused by its colored neighbours. Returns the
/// colors and the number of colors used (at least 1).
#[must_use]
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> (Vec<usize>, usize) {
    let mut colors = vec![0usize; g.len()];
    let mut used = 0;
    for &v in order {
        let taken: BTreeSet<usize> = g.neighbors(v).iter().map(|&u| colors[u]).filter(|&c| c > 0).collect();
        let c = (1..).find(|c| !taken.contains(c)).expect("colors are unbounded");
        colors[v] = c;
        used = used.max(c);
    }
    (colors, used.max(1))
}

/// Vertices by descending degree, ties by index.
#[must_use]
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Greedy coloring in [`degree_order`].
#[must_use]
pub fn greedy_by_degree(g: &Graph) -> (Vec<usize>, usize) {
    greedy_coloring(g, &degree_order(g))
}

/// Row supports and their transposes, shared by the graph builders.
#[derive(Clone, Debug)]
pub struct Incidence {
    pub x_support: Vec<Vec<usize>>,
    pub z_support: Vec<Vec<usize>>,
    pub x_of_qubit: Vec<Vec<usize>>,
    pub z_of_qubit: Vec<Vec<usize>>,
}

impl Incidence {
    #[must_use]
    pub fn new(code: &CssCode) -> Self {
        let x_support: Vec<_> = (0..code.num_x()).map(|x| code.hx.row_support(x)).collect();
        let z_support: Vec<_> = (0..code.num_z()).map(|z| code.hz.row_support(z)).collect();
        let mut x_of_qubit = vec![Vec::new(); code.n()];
        let mut z_of_qubit = vec![Vec::new(); code.n()];
        for (x, s) in x_support.iter().enumerate() {
            for &q in s {
                x_of_qubit[q].push(x);
            }
        }
        for (z, s) in z_support.iter().enumerate() {
            for &q in s {
                z_of_qubit[q].push(z);
            }
        }
        Self {
            x_support,
            z_support,
            x_of_qubit,
            z_of_qubit,
        }
    }

    /// Common qubits of `x` and `z`, ascending.
    #[must_use]
    pub fn common(&self, x: usize, z: usize) -> Vec<usize> {
        let zs = &self.z_support[z];
        self.x_support[x].iter().copied().filter(|q| zs.binary_search(q).is_ok()).collect()
    }

    /// Z-checks sharing a qubit with `x`, ascending.
    #[must_use]
    pub fn z_neighbors_of_x(&self, x: usize) -> Vec<usize> {
        let s: BTreeSet<usize> = self.x_support[x].iter().flat_map(|&q| self.z_of_qubit[q].iter().copied()).collect();
        s.into_iter().collect()
    }

    /// X-checks sharing a qubit with `z`, ascending.
    #[must_use]
    pub fn x_neighbors_of_z(&self, z: usize) -> Vec<usize> {
        let s: BTreeSet<usize> = self.z_support[z].iter().flat_map(|&q| self.x_of_qubit[q].iter().copied()).collect();
        s.into_iter().collect()
    }

    /// Adjacent `(x, z)` pairs in lexicographic order.
    #[must_use]
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.x_support.len())
            .flat_map(|x| self.z_neighbors_of_x(x).into_iter().map(move |z| (x, z)))
            .collect()
    }
}

/// The three induced graphs over X-checks, qubits and Z-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedGraphs {
    pub gx: Graph,
    pub gq: Graph,
    pub gz: Graph,
}

/// Builds the induced graphs: two X-checks are adjacent if they overlap or
/// both overlap a common Z-check; two qubits if some check contains both;
/// Z-checks symmetrically to X-checks.
#[must_use]
pub fn build_induced_graphs(code: &CssCode) -> InducedGraphs {
    let inc = Incidence::new(code);
    let mut gx = Graph::new(code.num_x());
    let mut gq = Graph::new(code.n());
    let mut gz = Graph::new(code.num_z());
    for s in inc.x_support.iter().chain(&inc.z_support) {
        gq.add_clique(s);
    }
    for q in 0..code.n() {
        gx.add_clique(&inc.x_of_qubit[q]);
        gz.add_clique(&inc.z_of_qubit[q]);
    }
    for z in 0..code.num_z() {
        gx.add_clique(&inc.x_neighbors_of_z(z));
    }
    for x in 0..code.num_x() {
        gz.add_clique(&inc.z_neighbors_of_x(x));
    }
    InducedGraphs { gx, gq, gz }
}

/// Color maps for X-checks, qubits and Z-checks with their palette sizes.
/// Colors are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub eta_x: Vec<usize>,
    pub eta_q: Vec<usize>,
    pub eta_z: Vec<usize>,
    pub chi_x: usize,
    pub chi_q: usize,
    pub chi_z: usize,
}

impl Coloring {
    /// Palette sizes default to the largest color used (at least 1).
    #[must_use]
    pub fn new(eta_x: Vec<usize>, eta_q: Vec<usize>, eta_z: Vec<usize>) -> Self {
        let max = |v: &[usize]| v.iter().copied().max().unwrap_or(1).max(1);
        Self {
            chi_x: max(&eta_x),
            chi_q: max(&eta_q),
            chi_z: max(&eta_z),
            eta_x,
            eta_q,
            eta_z,
        }
    }

    #[must_use]
    pub fn chi(&self) -> (usize, usize, usize) {
        (self.chi_x, self.chi_q, self.chi_z)
    }

    /// Enlarges the palettes without touching any assignment.
    ///
    /// # Errors
    /// An override smaller than a color in use.
    pub fn with_chi(mut self, chi: (usize, usize, usize)) -> Result<Self> {
        let check = |name: &str, eta: &[usize], c: usize| -> Result<()> {
            match eta.iter().copied().max() {
                Some(m) if m > c => Err(Error::InvalidColoring(format!(
                    "chi_{name} = {c} is below the largest assigned color {m}"
                ))),
                _ if c == 0 => Err(Error::InvalidColoring(format!("chi_{name} must be positive"))),
                _ => Ok(()),
            }
        };
        check("X", &self.eta_x, chi.0)?;
        check("Q", &self.eta_q, chi.1)?;
        check("Z", &self.eta_z, chi.2)?;
        (self.chi_x, self.chi_q, self.chi_z) = chi;
        Ok(self)
    }
}

/// How [`color_code`] chooses colors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringStrategy {
    /// Greedy proper colorings of the three induced graphs.
    #[default]
    Induced,
    /// Qubits colored properly first; X- and Z-checks then colored only
    /// against the conflicts that the injectivity and defect-disjointness
    /// conditions rule out. Often needs fewer colors.
    Relaxed,
}

/// Colors a code with the given strategy.
#[must_use]
pub fn color_code(code: &CssCode, strategy: ColoringStrategy) -> Coloring {
    let graphs = build_induced_graphs(code);
    let (eta_q, _) = greedy_by_degree(&graphs.gq);
    let (gx, gz) = match strategy {
        ColoringStrategy::Induced => (graphs.gx, graphs.gz),
        ColoringStrategy::Relaxed => relaxed_conflicts(code, &eta_q),
    };
    let (eta_x, _) = greedy_by_degree(&gx);
    let (eta_z, _) = greedy_by_degree(&gz);
    Coloring::new(eta_x, eta_q, eta_z)
}

/// Conflict graphs over X- and Z-checks given a qubit coloring: checks
/// conflict when they share a qubit, or when their defects against a common
/// check of the other type intersect.
#[must_use]
pub fn relaxed_conflicts(code: &CssCode, eta_q: &[usize]) -> (Graph, Graph) {
    let inc = Incidence::new(code);
    let mut gx = Graph::new(code.num_x());
    let mut gz = Graph::new(code.num_z());
    for q in 0..code.n() {
        gx.add_clique(&inc.x_of_qubit[q]);
        gz.add_clique(&inc.z_of_qubit[q]);
    }
    let defect = |x: usize, z: usize| StringDefect::from_colors(inc.common(x, z).iter().map(|&q| eta_q[q]).collect());
    for z in 0..code.num_z() {
        let xs = inc.x_neighbors_of_z(z);
        let ds: Vec<_> = xs.iter().map(|&x| defect(x, z)).collect();
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                if defects_intersect(&ds[i], &ds[j]) {
                    gx.add_edge(xs[i], xs[j]);
                }
            }
        }
    }
    for x in 0..code.num_x() {
        let zs = inc.z_neighbors_of_x(x);
        let ds: Vec<_> = zs.iter().map(|&z| defect(x, z)).collect();
        for i in 0..zs.len() {
            for j in i + 1..zs.len() {
                if defects_intersect(&ds[i], &ds[j]) {
                    gz.add_edge(zs[i], zs[j]);
                }
            }
        }
    }
    (gx, gz)
}

fn defects_intersect(a: &Result<StringDefect>, b: &Result<StringDefect>) -> bool {
    match (a, b) {
        (Ok(a), Ok(b)) => a.intersects(b),
        // A malformed defect is treated as conflicting with everything.
        _ => true,
    }
}

/// Union of half-open intervals `[a, b)` over color values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringDefect {
    pub intervals: Vec<(usize, usize)>,
}

impl StringDefect {
    /// Pairs the sorted colors consecutively.
    ///
    /// # Errors
    /// An odd number of colors, or a repeated color.
    pub fn from_colors(mut colors: Vec<usize>) -> Result<Self> {
        colors.sort_unstable();
        if colors.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ColorCollision(format!("repeated qubit color in {colors:?}")));
        }
        if colors.len() % 2 == 1 {
            return Err(Error::InvalidArgument(format!("odd number of common qubits: {colors:?}")));
        }
        Ok(Self {
            intervals: colors.chunks(2).map(|p| (p[0], p[1])).collect(),
        })
    }

    /// Whether the doubled coordinate `j2` (value `j2 / 2`) lies in the union.
    #[must_use]
    pub fn contains_doubled(&self, j2: usize) -> bool {
        self.intervals.iter().any(|&(a, b)| 2 * a <= j2 && j2 < 2 * b)
    }

    #[must_use]
    pub fn intersects(&self, other: &StringDefect) -> bool {
        self.intervals
            .iter()
            .any(|&(a, b)| other.intervals.iter().any(|&(c, d)| a < d && c < b))
    }
}

/// Defect of the pair `(x, z)` under `eta_q`.
///
/// # Errors
/// [`Error::OddOverlap`] for an odd overlap, [`Error::ColorCollision`] if
/// two common qubits share a color.
pub fn string_defect(code: &CssCode, x: usize, z: usize, eta_q: &[usize]) -> Result<StringDefect> {
    let inc = Incidence::new(code);
    defect_for(&inc, x, z, eta_q)
}

pub(crate) fn defect_for(inc: &Incidence, x: usize, z: usize, eta_q: &[usize]) -> Result<StringDefect> {
    let common = inc.common(x, z);
    if common.len() % 2 == 1 {
        return Err(Error::OddOverlap {
            x,
            z,
            overlap: common.len(),
        });
    }
    StringDefect::from_colors(common.iter().map(|&q| eta_q[q]).collect()).map_err(|e| match e {
        Error::ColorCollision(m) => Error::ColorCollision(format!("X-check {x}, Z-check {z}: {m}")),
        other => other,
    })
}

/// Outcome of [`validate_coloring`], one list of violations per condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    /// Shape and palette-range problems.
    pub range: Vec<String>,
    /// Condition 1: qubit colors injective on each `x ∧ z`.
    pub common_injective: Vec<String>,
    /// Condition 2: qubit colors injective on each check's support.
    pub support_injective: Vec<String>,
    /// Condition 3: check colors injective around each qubit.
    pub qubit_injective: Vec<String>,
    /// Condition 4*: same-colored defects pairwise disjoint.
    pub defects_disjoint: Vec<String>,
}

impl ColoringReport {
    #[must_use]
    pub fn is_valid(&self) -> bool {
        self.violations().next().is_none()
    }

    /// `(condition name, message)` for every violation.
    pub fn violations(&self) -> impl Iterator<Item = (&'static str, &String)> {
        let r: &[String] = &self.range;
        let c1: &[String] = &self.common_injective;
        let c2: &[String] = &self.support_injective;
        let c3: &[String] = &self.qubit_injective;
        let c4: &[String] = &self.defects_disjoint;
        r.iter()
            .map(|m| ("range", m))
            .chain(c1.iter().map(|m| ("condition 1 (injective on common qubits)", m)))
            .chain(c2.iter().map(|m| ("condition 2 (injective on check supports)", m)))
            .chain(c3.iter().map(|m| ("condition 3 (injective on checks at a qubit)", m)))
            .chain(c4.iter().map(|m| ("condition 4* (disjoint string defects)", m)))
    }
}

fn duplicates(colors: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize, usize)> {
    let mut seen: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (item, c) in colors {
        if let Some(&prev) = seen.get(&c) {
            return Some((prev, item, c));
        }
        seen.insert(c, item);
    }
    None
}

/// Checks a coloring against the injectivity conditions 1–3 and the defect
/// disjointness condition 4*.
#[must_use]
pub fn validate_coloring(code: &CssCode, c: &Coloring) -> ColoringReport {
    let mut rep = ColoringReport::default();
    let shapes = [
        ("X", c.eta_x.len(), code.num_x(), &c.eta_x, c.chi_x),
        ("Q", c.eta_q.len(), code.n(), &c.eta_q, c.chi_q),
        ("Z", c.eta_z.len(), code.num_z(), &c.eta_z, c.chi_z),
    ];
    for (name, got, want, eta, chi) in shapes {
        if got != want {
            rep.range.push(format!("eta_{name} has {got} entries, expected {want}"));
        } else if let Some((i, &col)) = eta.iter().enumerate().find(|(_, &col)| col == 0 || col > chi) {
            rep.range.push(format!("eta_{name}[{i}] = {col} is outside 1..={chi}"));
        }
    }
    if !rep.range.is_empty() {
        return rep;
    }
    let inc = Incidence::new(code);
    let pairs = inc.adjacent_pairs();
    for &(x, z) in &pairs {
        let common = inc.common(x, z);
        if let Some((a, b, col)) = duplicates(common.iter().map(|&q| (q, c.eta_q[q]))) {
            rep.common_injective
                .push(format!("qubits {a} and {b} in X-check {x} ∧ Z-check {z} share color {col}"));
        }
    }
    for (kind, supports) in [("X", &inc.x_support), ("Z", &inc.z_support)] {
        for (i, s) in supports.iter().enumerate() {
            if let Some((a, b, col)) = duplicates(s.iter().map(|&q| (q, c.eta_q[q]))) {
                rep.support_injective
                    .push(format!("qubits {a} and {b} in {kind}-check {i} share color {col}"));
            }
        }
    }
    for q in 0..code.n() {
        if let Some((a, b, col)) = duplicates(inc.x_of_qubit[q].iter().map(|&x| (x, c.eta_x[x]))) {
            rep.qubit_injective
                .push(format!("X-checks {a} and {b} on qubit {q} share color {col}"));
        }
        if let Some((a, b, col)) = duplicates(inc.z_of_qubit[q].iter().map(|&z| (z, c.eta_z[z]))) {
            rep.qubit_injective
                .push(format!("Z-checks {a} and {b} on qubit {q} share color {col}"));
        }
    }
    // Condition 4* needs well-defined defects.
    let defects: std::collections::HashMap<(usize, usize), StringDefect> = pairs
        .iter()
        .filter_map(|&(x, z)| defect_for(&inc, x, z, &c.eta_q).ok().map(|d| ((x, z), d)))
        .collect();
    for x in 0..code.num_x() {
        let zs = inc.z_neighbors_of_x(x);
        for (i, &z1) in zs.iter().enumerate() {
            for &z2 in &zs[i + 1..] {
                if c.eta_z[z1] != c.eta_z[z2] {
                    continue;
                }
                if let (Some(d1), Some(d2)) = (defects.get(&(x, z1)), defects.get(&(x, z2))) {
                    if d1.intersects(d2) {
                        rep.defects_disjoint.push(format!(
                            "Z-checks {z1} and {z2} (color {}) have intersecting defects against X-check {x}",
                            c.eta_z[z1]
                        ));
                    }
                }
            }
        }
    }
    for z in 0..code.num_z() {
        let xs = inc.x_neighbors_of_z(z);
        for (i, &x1) in xs.iter().enumerate() {
            for &x2 in &xs[i + 1..] {
                if c.eta_x[x1] != c.eta_x[x2] {
                    continue;
                }
                if let (Some(d1), Some(d2)) = (defects.get(&(x1, z)), defects.get(&(x2, z))) {
                    if d1.intersects(d2) {
                        rep.defects_disjoint.push(format!(
                            "X-checks {x1} and {x2} (color {}) have intersecting defects against Z-check {z}",
                            c.eta_x[x1]
                        ));
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn tri_graphs() {
        let g = build_induced_graphs(&fixtures::tri());
        assert_eq!((g.gx.len(), g.gx.edge_count()), (1, 0));
        assert_eq!((g.gz.len(), g.gz.edge_count()), (1, 0));
        assert_eq!((g.gq.len(), g.gq.edge_count()), (3, 3));
    }

    #[test]
    fn shor_graphs() {
        let g = build_induced_graphs(&fixtures::shor());
        for a in 0..6 {
            for b in a + 1..6 {
                assert!(g.gq.has_edge(a, b));
                assert!(g.gq.has_edge(a + 3, b + 3));
            }
        }
        assert!(!g.gq.has_edge(0, 6));
        assert!(g.gz.has_edge(0, 2));
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(g.gz.has_edge(a, b));
            }
        }
        let (_, chi) = greedy_by_degree(&g.gz);
        assert!(chi >= 4);
    }

    #[test]
    fn single_x_check() {
        let c = CssCode::from_rows(2, &[vec![0, 1]], &[]).unwrap();
        let g = build_induced_graphs(&c);
        assert_eq!(g.gx.len(), 1);
        assert!(g.gz.is_empty());
    }

    #[test]
    fn greedy_examples() {
        let mut tri = Graph::new(3);
        tri.add_clique(&[0, 1, 2]);
        assert_eq!(greedy_by_degree(&tri).1, 3);
        assert_eq!(greedy_by_degree(&Graph::new(4)).1, 1);
        let mut path = Graph::new(3);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        assert_eq!(greedy_coloring(&path, &[0, 1, 2]), (vec![1, 2, 1], 2));
    }

    #[test]
    fn defects() {
        assert_eq!(StringDefect::from_colors(vec![2, 1]).unwrap().intervals, vec![(1, 2)]);
        assert_eq!(StringDefect::from_colors(vec![6, 1, 4, 3]).unwrap().intervals, vec![(1, 3), (4, 6)]);
        let (_, eta_q, _) = fixtures::shor_coloring();
        assert_eq!(string_defect(&fixtures::shor(), 0, 0, &eta_q).unwrap().intervals, vec![(1, 2)]);
        assert!(matches!(StringDefect::from_colors(vec![1, 1]), Err(Error::ColorCollision(_))));
        let odd = CssCode {
            hx: crate::BitMatrix::from_row_supports(2, &[vec![0, 1]]),
            hz: crate::BitMatrix::from_row_supports(2, &[vec![0]]),
        };
        assert!(matches!(string_defect(&odd, 0, 0, &[1, 2]), Err(Error::OddOverlap { .. })));
        let d = StringDefect::from_colors(vec![1, 2]).unwrap();
        assert!(d.contains_doubled(2) && d.contains_doubled(3) && !d.contains_doubled(4));
    }

    #[test]
    fn shor_reference_coloring_is_valid() {
        let (x, q, z) = fixtures::shor_coloring();
        let c = Coloring::new(x, q, z);
        assert_eq!(c.chi(), (2, 6, 2));
        let rep = validate_coloring(&fixtures::shor(), &c);
        assert!(rep.is_valid(), "{rep:?}");
    }

    #[test]
    fn default_colorings_are_valid() {
        for code in [fixtures::tri(), fixtures::shor(), fixtures::steane()] {
            for s in [ColoringStrategy::Induced, ColoringStrategy::Relaxed] {
                let c = color_code(&code, s);
                assert!(validate_coloring(&code, &c).is_valid());
            }
        }
        let relaxed = color_code(&fixtures::shor(), ColoringStrategy::Relaxed);
        assert_eq!(relaxed.chi(), (2, 6, 2));
    }

    #[test]
    fn constant_qubit_color_fails() {
        let c = Coloring::new(vec![1], vec![1, 1, 1], vec![1]);
        let rep = validate_coloring(&fixtures::tri(), &c);
        assert!(!rep.is_valid());
        assert!(!rep.common_injective.is_empty());
        assert!(!rep.support_injective.is_empty());
    }

    #[test]
    fn chi_override() {
        let c = color_code(&fixtures::shor(), ColoringStrategy::Relaxed);
        assert_eq!(c.clone().with_chi((20, 6, 20)).unwrap().chi(), (20, 6, 20));
        assert!(c.with_chi((1, 6, 2)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn proper_colorings_validate(index in 0u64..200) {
            let code = fixtures::bulk_instance(index);
            let c = color_code(&code, ColoringStrategy::Induced);
            let g = build_induced_graphs(&code);
            prop_assert!(g.gx.is_proper(&c.eta_x) && g.gq.is_proper(&c.eta_q) && g.gz.is_proper(&c.eta_z));
            prop_assert!(c.chi_x <= g.gx.max_degree() + 1);
            prop_assert!(c.chi_q <= g.gq.max_degree() + 1);
            prop_assert!(c.chi_z <= g.gz.max_degree() + 1);
            prop_assert!(validate_coloring(&code, &c).is_valid());
        }

        #[test]
        fn splitting_a_color_class_keeps_validity(index in 0u64..200, which in 0usize..3, mask in any::<u64>()) {
            let code = fixtures::bulk_instance(index);
            // Qubit colors move defect intervals, so only the induced
            // strategy is closed under splitting qubit classes.
            let strategy = if which == 1 { ColoringStrategy::Induced } else { ColoringStrategy::Relaxed };
            let mut c = color_code(&code, strategy);
            prop_assert!(validate_coloring(&code, &c).is_valid());
            let (eta, chi) = match which {
                0 => (&mut c.eta_x, &mut c.chi_x),
                1 => (&mut c.eta_q, &mut c.chi_q),
                _ => (&mut c.eta_z, &mut c.chi_z),
            };
            let fresh = *chi + 1;
            for (i, col) in eta.iter_mut().enumerate() {
                if *col == 1 && (mask >> (i % 64)) & 1 == 1 {
                    *col = fresh;
                }
            }
            *chi = fresh;
            prop_assert!(validate_coloring(&code, &c).is_valid());
        }
    }
}
