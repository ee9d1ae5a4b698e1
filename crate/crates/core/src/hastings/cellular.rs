use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::{greedy_by_degree, Graph};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A 2-dimensional cell complex `F → E → V`: a multigraph plus faces given
/// as closed edge walks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CellComplex {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    /// Each face lists its boundary edges in cyclic order.
    pub faces: Vec<Vec<usize>>,
}

impl CellComplex {
    #[must_use]
    pub fn graph(vertices: usize, edges: Vec<[usize; 2]>) -> Self {
        Self {
            vertices,
            edges,
            faces: Vec::new(),
        }
    }

    /// `|V| × |E|` incidence.
    #[must_use]
    pub fn d1(&self) -> BitMatrix {
        BitMatrix::from_entries(
            self.vertices,
            self.edges.len(),
            self.edges.iter().enumerate().flat_map(|(e, &[u, v])| [(u, e), (v, e)]),
        )
    }

    /// `|E| × |F|` incidence.
    #[must_use]
    pub fn d2(&self) -> BitMatrix {
        BitMatrix::from_entries(
            self.edges.len(),
            self.faces.len(),
            self.faces.iter().enumerate().flat_map(|(f, es)| es.iter().map(move |&e| (e, f))),
        )
    }

    /// `[dim H_0, dim H_1, dim H_2]`.
    #[must_use]
    pub fn homology(&self) -> [usize; 3] {
        let r1 = self.d1().rank();
        let r2 = self.d2().rank();
        [self.vertices - r1, self.edges.len() - r1 - r2, self.faces.len() - r2]
    }

    /// Largest number of edges on a face.
    #[must_use]
    pub fn max_face_weight(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest number of faces on an edge.
    #[must_use]
    pub fn max_edge_multiplicity(&self) -> usize {
        self.d2().max_row_weight()
    }

    /// Vertex sequence of face `f`, or `None` if its edges do not form a
    /// simple closed walk.
    #[must_use]
    pub fn face_vertices(&self, f: usize) -> Option<Vec<usize>> {
        let es = &self.faces[f];
        let n = es.len();
        if n < 2 {
            return None;
        }
        let [a, b] = self.edges[es[0]];
        let last = self.edges[es[n - 1]];
        let start = if last.contains(&a) { a } else { b };
        let mut verts = Vec::with_capacity(n);
        let mut cur = start;
        for &e in es {
            let [u, v] = self.edges[e];
            verts.push(cur);
            cur = if u == cur {
                v
            } else if v == cur {
                u
            } else {
                return None;
            };
        }
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        (cur == start && sorted.len() == n).then_some(verts)
    }
}

/// Fundamental cycles of a breadth-first spanning forest, with the weight
/// statistics of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleBasis {
    /// Edge lists in cyclic order.
    pub cycles: Vec<Vec<usize>>,
    pub components: usize,
    pub total_weight: usize,
    pub max_multiplicity: usize,
}

#[must_use]
pub fn cycle_basis(g: &CellComplex) -> CycleBasis {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertices];
    for (e, &[u, v]) in g.edges.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertices];
    let mut depth = vec![usize::MAX; g.vertices];
    let mut tree = vec![false; g.edges.len()];
    let mut components = 0;
    for root in 0..g.vertices {
        if depth[root] != usize::MAX {
            continue;
        }
        components += 1;
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &adj[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = Some((u, e));
                    tree[e] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (e, &[u, v]) in g.edges.iter().enumerate() {
        if tree[e] {
            continue;
        }
        // Climb both endpoints to their lowest common ancestor.
        let (mut a, mut b) = (u, v);
        let (mut up_a, mut up_b) = (Vec::new(), Vec::new());
        while a != b {
            if depth[a] >= depth[b] {
                let (p, pe) = parent[a].expect("non-root has a parent");
                up_a.push(pe);
                a = p;
            } else {
                let (p, pe) = parent[b].expect("non-root has a parent");
                up_b.push(pe);
                b = p;
            }
        }
        let mut cycle = vec![e];
        cycle.extend(up_b);
        cycle.extend(up_a.into_iter().rev());
        cycles.push(cycle);
    }
    let mut mult = vec![0usize; g.edges.len()];
    for c in &cycles {
        for &e in c {
            mult[e] += 1;
        }
    }
    CycleBasis {
        total_weight: cycles.iter().map(Vec::len).sum(),
        max_multiplicity: mult.into_iter().max().unwrap_or(0),
        components,
        cycles,
    }
}

/// Face heights from a greedy coloring of the graph joining faces that share
/// an edge. Returns 0-based heights and the number of heights.
#[must_use]
pub fn face_heights(c: &CellComplex) -> (Vec<usize>, usize) {
    let mut g = Graph::new(c.faces.len());
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); c.edges.len()];
    for (f, es) in c.faces.iter().enumerate() {
        for &e in es {
            on_edge[e].push(f);
        }
    }
    for fs in &on_edge {
        g.add_clique(fs);
    }
    let (colors, l) = greedy_by_degree(&g);
    (colors.into_iter().map(|h| h - 1).collect(), l)
}

/// Thickening of `c` over `layers` heights: vertices `(l, v)`, edges
/// `(l, e)` and vertical `(l⁺, v)`, faces `f` at height `heights[f]` and
/// squares `(l⁺, e)`.
///
/// Index layout: vertex `(l, v)` is `l·|V| + v`; edge `(l, e)` is
/// `l·|E| + e`; vertical `(l⁺, v)` is `L·|E| + l·|V| + v`; face `f` keeps
/// index `f`, square `(l⁺, e)` is `|F| + l·|E| + e`.
#[must_use]
pub fn thicken(c: &CellComplex, heights: &[usize], layers: usize) -> CellComplex {
    let (nv, ne) = (c.vertices, c.edges.len());
    let mut edges = Vec::with_capacity(layers * ne + layers.saturating_sub(1) * nv);
    for l in 0..layers {
        edges.extend(c.edges.iter().map(|&[u, v]| [l * nv + u, l * nv + v]));
    }
    let vertical = |l: usize, v: usize| layers * ne + l * nv + v;
    for l in 0..layers.saturating_sub(1) {
        edges.extend((0..nv).map(|v| [l * nv + v, (l + 1) * nv + v]));
    }
    let mut faces: Vec<Vec<usize>> = c
        .faces
        .iter()
        .zip(heights)
        .map(|(es, &h)| es.iter().map(|&e| h * ne + e).collect())
        .collect();
    for l in 0..layers.saturating_sub(1) {
        for (e, &[u, v]) in c.edges.iter().enumerate() {
            faces.push(vec![l * ne + e, vertical(l, v), (l + 1) * ne + e, vertical(l, u)]);
        }
    }
    CellComplex {
        vertices: layers * nv,
        edges,
        faces,
    }
}

/// Splits every face with four or more edges into triangles by a zig-zag of
/// chords; shorter faces are kept. Vertices and original edges keep their
/// indices and chords are appended. Face `f` of the output lists come from
/// input faces in order.
///
/// # Errors
/// [`Error::NonSimpleFace`] if a face is not a simple cycle.
pub fn cellulate(c: &CellComplex, tag: usize) -> Result<CellComplex> {
    let mut out = CellComplex {
        vertices: c.vertices,
        edges: c.edges.clone(),
        faces: Vec::new(),
    };
    for (f, es) in c.faces.iter().enumerate() {
        let n = es.len();
        if n <= 3 {
            out.faces.push(es.clone());
            continue;
        }
        let vs = c.face_vertices(f).ok_or(Error::NonSimpleFace { z: tag, face: f })?;
        // Boundary edge `i` joins vs[i] and vs[i + 1].
        let side = |i: usize| es[i % n];
        let chord = |out: &mut CellComplex, a: usize, b: usize| {
            out.edges.push([vs[a], vs[b]]);
            out.edges.len() - 1
        };
        let (mut a, mut b) = (1, n - 1);
        let mut ab = chord(&mut out, a, b);
        out.faces.push(vec![side(n - 1), side(0), ab]);
        let mut take_b = true;
        while b - a > 2 {
            if take_b {
                let nb = chord(&mut out, a, b - 1);
                out.faces.push(vec![ab, side(b - 1), nb]);
                b -= 1;
                ab = nb;
            } else {
                let na = chord(&mut out, a + 1, b);
                out.faces.push(vec![side(a), na, ab]);
                a += 1;
                ab = na;
            }
            take_b = !take_b;
        }
        out.faces.push(vec![side(a), side(a + 1), ab]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> CellComplex {
        let edges = (0..n).map(|i| [i, (i + 1) % n]).collect();
        CellComplex {
            vertices: n,
            edges,
            faces: vec![(0..n).collect()],
        }
    }

    #[test]
    fn cycle_basis_examples() {
        let tree = CellComplex::graph(4, vec![[0, 1], [1, 2], [1, 3]]);
        let b = cycle_basis(&tree);
        assert!(b.cycles.is_empty());
        assert_eq!(b.components, 1);

        let tri = CellComplex::graph(3, vec![[0, 1], [1, 2], [2, 0]]);
        let b = cycle_basis(&tri);
        assert_eq!(b.cycles.len(), 1);
        assert_eq!(b.cycles[0].len(), 3);

        let chorded = CellComplex::graph(4, vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2]]);
        let b = cycle_basis(&chorded);
        assert_eq!(b.cycles.len(), 2);
        assert!(b.max_multiplicity <= 2);
        let with_faces = CellComplex {
            faces: b.cycles.clone(),
            ..chorded
        };
        for f in 0..2 {
            assert!(with_faces.face_vertices(f).is_some());
        }
        assert_eq!(with_faces.homology(), [1, 0, 0]);
    }

    #[test]
    fn cellulation_examples() {
        let t = cycle(3);
        assert_eq!(cellulate(&t, 0).unwrap(), t);
        assert_eq!(cellulate(&t, 0).unwrap().homology(), t.homology());

        let oct = cycle(8);
        let c = cellulate(&oct, 0).unwrap();
        assert_eq!(c.max_face_weight(), 3);
        assert_eq!(c.faces.len(), 6);
        assert_eq!(c.homology(), oct.homology());
        assert!(c.d1().mul(&c.d2()).unwrap().is_zero());

        let empty = CellComplex::graph(2, vec![[0, 1]]);
        assert_eq!(cellulate(&empty, 0).unwrap(), empty);
    }

    #[test]
    fn non_simple_face_is_rejected() {
        // A figure-eight walk through vertex 0.
        let c = CellComplex {
            vertices: 5,
            edges: vec![[0, 1], [1, 2], [2, 0], [0, 3], [3, 4], [4, 0]],
            faces: vec![vec![0, 1, 2, 3, 4, 5]],
        };
        assert_eq!(cellulate(&c, 7), Err(Error::NonSimpleFace { z: 7, face: 0 }));
    }

    #[test]
    fn thickening_keeps_homology() {
        let base = CellComplex::graph(4, vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2]]);
        let b = cycle_basis(&base);
        let c = CellComplex { faces: b.cycles, ..base };
        let (h, l) = face_heights(&c);
        assert_eq!(l, 2);
        let t = thicken(&c, &h, l);
        assert_eq!(t.homology(), [1, 0, 0]);
        let cel = cellulate(&t, 0).unwrap();
        assert_eq!(cel.homology(), [1, 0, 0]);
        assert!(cel.max_face_weight() <= 3);
    }

    fn random_graph() -> impl Strategy<Value = CellComplex> {
        (3usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 1..16).prop_map(move |pairs| {
                let edges = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| [a, b]).collect();
                CellComplex::graph(n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn cycle_basis_fills_first_homology(g in random_graph()) {
            let b = cycle_basis(&g);
            prop_assert_eq!(b.cycles.len(), g.edges.len() + b.components - g.vertices);
            let c = CellComplex { faces: b.cycles, ..g.clone() };
            prop_assert!(c.d1().mul(&c.d2()).unwrap().is_zero());
            prop_assert_eq!(c.homology(), [b.components, 0, 0]);
            let simple: Vec<usize> = (0..c.faces.len()).filter(|&f| c.faces[f].len() >= 4).collect();
            for f in simple {
                prop_assert!(c.face_vertices(f).is_some());
            }
        }

        #[test]
        fn cellulation_preserves_homology(g in random_graph(), layers in 1usize..4) {
            let b = cycle_basis(&g);
            let c = CellComplex { faces: b.cycles, ..g };
            let t = thicken(&c, &vec![0; c.faces.len()], layers);
            let cel = cellulate(&t, 0).unwrap();
            prop_assert_eq!(cel.homology(), t.homology());
            prop_assert!(cel.max_face_weight() <= 3);
            prop_assert!(cel.d1().mul(&cel.d2()).unwrap().is_zero());
        }
    }
}
