use serde::{Deserialize, Serialize};

use super::cellular::{cellulate, cycle_basis, face_heights, thicken, CellComplex, CycleBasis};
use super::reasonable::{check_z_reasonable, ReasonablenessReport};
use super::reduce::paired_common;
use crate::coloring::Incidence;
use crate::complex::{CodeSummary, CssCode};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// The graph `G^z`: one vertex per qubit of `z`, one edge per pair of common
/// qubits of `z` and an X-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZGraph {
    pub z: usize,
    /// Vertex `v` is qubit `qubits[v]`.
    pub qubits: Vec<usize>,
    /// `(x, p)` for each edge: the `p`-th pair of `x ∧ z`.
    pub edge_checks: Vec<(usize, usize)>,
    pub graph: CellComplex,
}

impl ZGraph {
    /// Connected components as sorted qubit lists.
    #[must_use]
    pub fn components(&self) -> Vec<Vec<usize>> {
        let d1 = self.graph.d1();
        let mut seen = vec![false; self.qubits.len()];
        let mut out = Vec::new();
        for s in 0..self.qubits.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(self.qubits[v]);
                for e in d1.row_ones(v) {
                    let [a, b] = self.graph.edges[e];
                    let w = if a == v { b } else { a };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Builds `G^z`, pairing each `x ∧ z` in ascending `(q;x)` order.
///
/// # Errors
/// [`Error::OddOverlap`] for anticommuting checks.
pub fn build_z_graph(code: &CssCode, z: usize) -> Result<ZGraph> {
    build_z_graph_with(&Incidence::new(code), z)
}

fn build_z_graph_with(inc: &Incidence, z: usize) -> Result<ZGraph> {
    let qubits = inc.z_support[z].clone();
    let local = |q: usize| qubits.binary_search(&q).expect("common qubit lies in supp z");
    let mut edges = Vec::new();
    let mut edge_checks = Vec::new();
    for x in inc.x_neighbors_of_z(z) {
        for (p, [q1, q2]) in paired_common(&inc.x_support[x], &qubits, x, z)?.into_iter().enumerate() {
            edges.push([local(q1), local(q2)]);
            edge_checks.push((x, p));
        }
    }
    Ok(ZGraph {
        z,
        graph: CellComplex::graph(qubits.len(), edges),
        qubits,
        edge_checks,
    })
}

/// `G^z` with a cycle basis attached, thickened and cellulated.
#[derive(Clone, Debug)]
pub struct ConingComplex {
    pub z_graph: ZGraph,
    pub basis: CycleBasis,
    pub layers: usize,
    /// Vertex `(l, v)` is `l·|V| + v`; edges `0..|E(G^z)|` are the pairing
    /// edges at the lowest height.
    pub complex: CellComplex,
}

/// # Errors
/// Odd overlaps or a non-simple face.
pub fn coning_complex(code: &CssCode, z: usize) -> Result<ConingComplex> {
    coning_complex_with(&Incidence::new(code), z)
}

fn coning_complex_with(inc: &Incidence, z: usize) -> Result<ConingComplex> {
    let z_graph = build_z_graph_with(inc, z)?;
    let basis = cycle_basis(&z_graph.graph);
    let faced = CellComplex {
        faces: basis.cycles.clone(),
        ..z_graph.graph.clone()
    };
    let (heights, layers) = face_heights(&faced);
    let complex = cellulate(&thicken(&faced, &heights, layers), z)?;
    Ok(ConingComplex {
        z_graph,
        basis,
        layers,
        complex,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEntry {
    pub z: usize,
    pub vertices: usize,
    pub pairing_edges: usize,
    pub components: usize,
    pub cycles: usize,
    pub cycle_weight: usize,
    pub max_cycle_multiplicity: usize,
    /// Thickening length from the face conflict coloring.
    pub layers: usize,
    pub edges: usize,
    pub faces: usize,
    /// `[dim H_0, dim H_1, dim H_2]` of the cellulated complex.
    pub homology: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub coned: Vec<ConeEntry>,
    pub reasonableness: ReasonablenessReport,
    /// The components of every coned check span the same space as the
    /// original Z-checks.
    pub image_preserved: bool,
    pub input: CodeSummary,
    pub output: CodeSummary,
}

/// Replaces each Z-check in `zs` by its coning complex. Z-checks are the
/// untouched ones followed by the vertices of each complex; qubits are the
/// input qubits followed by the edges of each complex; X-checks are the
/// input checks followed by the faces of each complex.
///
/// # Errors
/// [`Error::Reasonableness`] if a check in `zs` hides a logical; otherwise
/// as [`coning_complex`].
pub fn cone(code: &CssCode, zs: &[usize]) -> Result<(CssCode, ConeReport)> {
    let mut zs = zs.to_vec();
    zs.sort_unstable();
    zs.dedup();
    let reasonableness = check_z_reasonable(code, &zs)?;
    if !reasonableness.reasonable() {
        let z = reasonableness.violations.first().map_or(zs[0], |v| v.z);
        return Err(Error::Reasonableness { z });
    }
    let inc = Incidence::new(code);
    let complexes: Vec<ConingComplex> = zs.iter().map(|&z| coning_complex_with(&inc, z)).collect::<Result<_>>()?;

    let n = code.n();
    let mut offsets = Vec::with_capacity(complexes.len());
    let mut total = n;
    for c in &complexes {
        offsets.push(total);
        total += c.complex.edges.len();
    }

    let mut z_rows: Vec<Vec<usize>> = (0..code.num_z())
        .filter(|z| zs.binary_search(z).is_err())
        .map(|z| inc.z_support[z].clone())
        .collect();
    let mut x_rows: Vec<Vec<usize>> = inc.x_support.clone();
    for (c, &off) in complexes.iter().zip(&offsets) {
        let d1 = c.complex.d1();
        let nv = c.z_graph.qubits.len();
        for v in 0..c.complex.vertices {
            let mut row: Vec<usize> = d1.row_ones(v).map(|e| off + e).collect();
            if v < nv {
                row.push(c.z_graph.qubits[v]);
            }
            z_rows.push(row);
        }
        for (e, &(x, _)) in c.z_graph.edge_checks.iter().enumerate() {
            x_rows[x].push(off + e);
        }
    }
    for (c, &off) in complexes.iter().zip(&offsets) {
        x_rows.extend(c.complex.faces.iter().map(|f| f.iter().map(|&e| off + e).collect::<Vec<_>>()));
    }
    let out = CssCode::from_rows(total, &x_rows, &z_rows)?;

    let comps: Vec<BitVector> = complexes
        .iter()
        .flat_map(|c| c.z_graph.components())
        .map(|w| BitVector::from_support(n, w))
        .collect();
    let base = code.hz.rank();
    let stacked = code.hz.vstack(&BitMatrix::from_row_vectors(n, &comps));
    let image_preserved = stacked.rank() == base;

    let coned = complexes
        .iter()
        .map(|c| ConeEntry {
            z: c.z_graph.z,
            vertices: c.z_graph.qubits.len(),
            pairing_edges: c.z_graph.edge_checks.len(),
            components: c.basis.components,
            cycles: c.basis.cycles.len(),
            cycle_weight: c.basis.total_weight,
            max_cycle_multiplicity: c.basis.max_multiplicity,
            layers: c.layers,
            edges: c.complex.edges.len(),
            faces: c.complex.faces.len(),
            homology: c.complex.homology(),
        })
        .collect();
    let report = ConeReport {
        coned,
        reasonableness,
        image_preserved,
        input: code.summary(),
        output: out.summary(),
    };
    Ok((out, report))
}
