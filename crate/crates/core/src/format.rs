//! Canonical on-disk formats: code files, coloring files, alist import and
//! the cell table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coloring::Coloring;
use crate::complex::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::layer::{Block, LayerAssembly};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<[usize; 3]>,
}

impl Metadata {
    fn is_empty(&self) -> bool {
        self.name.is_none() && self.coloring.is_none() && self.chi.is_none()
    }
}

/// A CSS code as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub format_version: u32,
    pub n: usize,
    pub hx: Vec<Vec<usize>>,
    pub hz: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

fn check_rows(name: &str, n: usize, rows: &[Vec<usize>]) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if let Some(&q) = row.iter().find(|&&q| q >= n) {
            return Err(Error::Parse(format!("{name} row {r}: qubit {q} out of range for n = {n}")));
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("{name} row {r} is not strictly ascending")));
        }
    }
    Ok(())
}

impl CodeFile {
    #[must_use]
    pub fn from_code(code: &CssCode) -> Self {
        let rows = |m: &BitMatrix| (0..m.rows()).map(|r| m.row_support(r)).collect();
        Self {
            format_version: FORMAT_VERSION,
            n: code.n(),
            hx: rows(&code.hx),
            hz: rows(&code.hz),
            metadata: Metadata::default(),
        }
    }

    /// # Errors
    /// [`Error::OddOverlap`] if the rows do not define a CSS code.
    pub fn to_code(&self) -> Result<CssCode> {
        CssCode::from_rows(self.n, &self.hx, &self.hz)
    }

    /// Parses and validates a code file.
    ///
    /// # Errors
    /// [`Error::Parse`] for malformed JSON, an unknown version or unsorted or
    /// out-of-range rows.
    pub fn parse(text: &str) -> Result<Self> {
        let f: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if f.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format_version {}", f.format_version)));
        }
        check_rows("hx", f.n, &f.hx)?;
        check_rows("hz", f.n, &f.hz)?;
        Ok(f)
    }

    /// Canonical text: sorted keys, one sparse row per line.
    #[must_use]
    pub fn render(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("code files serialize"))
    }
}

/// A coloring supplied on its own. Colors are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub format_version: u32,
    pub eta_x: Vec<usize>,
    pub eta_q: Vec<usize>,
    pub eta_z: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<[usize; 3]>,
}

impl ColoringFile {
    #[must_use]
    pub fn from_coloring(c: &Coloring) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            eta_x: c.eta_x.clone(),
            eta_q: c.eta_q.clone(),
            eta_z: c.eta_z.clone(),
            chi: Some([c.chi_x, c.chi_q, c.chi_z]),
        }
    }

    /// # Errors
    /// [`Error::InvalidColoring`] when `chi` is below a color in use.
    pub fn to_coloring(&self) -> Result<Coloring> {
        let c = Coloring::new(self.eta_x.clone(), self.eta_q.clone(), self.eta_z.clone());
        match self.chi {
            Some([x, q, z]) => c.with_chi((x, q, z)),
            None => Ok(c),
        }
    }

    /// # Errors
    /// [`Error::Parse`] for malformed JSON or an unknown version.
    pub fn parse(text: &str) -> Result<Self> {
        let f: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if f.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format_version {}", f.format_version)));
        }
        Ok(f)
    }

    #[must_use]
    pub fn render(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("coloring files serialize"))
    }
}

/// Deterministic JSON: objects one key per line in sorted order, arrays of
/// scalars on a single line.
#[must_use]
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(depth + 1), Value::String((*k).clone()));
                write_value(out, &map[k.as_str()], depth + 1);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(depth));
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(depth));
        }
        Value::Array(items) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, x, depth);
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Reads a parity-check matrix in alist form: dimensions, maximum weights,
/// column and row weights, then one line per column and per row holding
/// 1-based indices (zero entries are padding). Column and row lists must
/// agree.
///
/// # Errors
/// [`Error::Parse`] on truncated input, bad numbers or inconsistent lists.
pub fn parse_alist(text: &str) -> Result<BitMatrix> {
    let lines: Vec<Vec<usize>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("alist token {t:?}: {e}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let header = |i: usize, len: usize| -> Result<&[usize]> {
        match lines.get(i) {
            Some(l) if l.len() == len => Ok(l),
            _ => Err(Error::Parse(format!("alist header line {} malformed", i + 1))),
        }
    };
    let &[cols, rows] = header(0, 2)? else { unreachable!() };
    let &[max_col, max_row] = header(1, 2)? else { unreachable!() };
    let col_w = header(2, cols)?;
    let row_w = header(3, rows)?;
    if lines.len() < 4 + cols + rows {
        return Err(Error::Parse("alist ended early".into()));
    }
    let lists = |start: usize, weights: &[usize], width: usize, bound: usize| -> Result<Vec<Vec<usize>>> {
        weights
            .iter()
            .enumerate()
            .map(|(i, &w)| {
                let line = &lines[start + i];
                if line.len() > width.max(w) {
                    return Err(Error::Parse(format!("alist list {i} is longer than {width}")));
                }
                let mut list = Vec::new();
                for &v in line {
                    if v > bound {
                        return Err(Error::Parse(format!("alist index {v} exceeds {bound}")));
                    }
                    if v > 0 {
                        list.push(v - 1);
                    }
                }
                list.sort_unstable();
                list.dedup();
                if list.len() != w {
                    return Err(Error::Parse(format!("alist list {i} has {} entries, expected {w}", list.len())));
                }
                Ok(list)
            })
            .collect()
    };
    let col_lists = lists(4, col_w, max_col, rows)?;
    let row_lists = lists(4 + cols, row_w, max_row, cols)?;
    let h = BitMatrix::from_row_supports(cols, &row_lists);
    let from_cols = BitMatrix::from_entries(rows, cols, col_lists.iter().enumerate().flat_map(|(c, l)| l.iter().map(move |&r| (r, c))));
    if h != from_cols {
        return Err(Error::Parse("alist column and row lists disagree".into()));
    }
    Ok(h)
}

/// Tab-separated `level, index, block, layer, a, b` for every cell of the
/// assembled code. Level 2 rows are X-checks, 1 qubits, 0 Z-checks.
#[must_use]
pub fn cell_table_tsv(a: &LayerAssembly) -> String {
    let mut out = String::from("level\tindex\tblock\tlayer\ta\tb\n");
    for (level, idx, c) in a.cell_table() {
        let block = match c.block {
            Block::X => "X",
            Block::Q => "Q",
            Block::Z => "Z",
        };
        let _ = writeln!(out, "{level}\t{idx}\t{block}\t{}\t{}\t{}", c.layer, c.a, c.b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn shor_file_round_trips() {
        let mut f = CodeFile::from_code(&fixtures::shor());
        f.metadata.name = Some("shor".into());
        let text = f.render();
        assert!(text.starts_with("{\n  \"format_version\": 1,\n  \"hx\": [\n    [0, 1, 2, 3, 4, 5],"));
        let back = CodeFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.render(), text);
        assert_eq!(back.to_code().unwrap(), fixtures::shor());
    }

    #[test]
    fn malformed_files_are_rejected() {
        let bad = [
            r#"{"format_version": 2, "n": 2, "hx": [], "hz": []}"#,
            r#"{"format_version": 1, "n": 2, "hx": [[1, 0]], "hz": []}"#,
            r#"{"format_version": 1, "n": 2, "hx": [[0, 2]], "hz": []}"#,
            r#"{"format_version": 1, "n": 2, "hx": [], "hz": [], "extra": 1}"#,
            "not json",
        ];
        for b in bad {
            assert!(matches!(CodeFile::parse(b), Err(Error::Parse(_))), "{b}");
        }
        let anti = CodeFile::parse(r#"{"format_version": 1, "n": 2, "hx": [[0]], "hz": [[0]]}"#).unwrap();
        assert!(matches!(anti.to_code(), Err(Error::OddOverlap { x: 0, z: 0, overlap: 1 })));
    }

    #[test]
    fn coloring_file_round_trips() {
        let (x, q, z) = fixtures::shor_coloring();
        let c = Coloring::new(x, q, z);
        let f = ColoringFile::from_coloring(&c);
        let back = ColoringFile::parse(&f.render()).unwrap();
        assert_eq!(back.to_coloring().unwrap(), c);
        let small = ColoringFile { chi: Some([1, 6, 2]), ..f };
        assert!(matches!(small.to_coloring(), Err(Error::InvalidColoring(_))));
    }

    #[test]
    fn alist_hamming() {
        // Column j of the Hamming matrix holds the bits of j + 1.
        let text = "7 3\n2 4\n1 1 2 1 2 2 3\n4 4 4\n\
                    1 0\n2 0\n1 2\n3 0\n1 3\n2 3\n1 2 3\n\
                    1 3 5 7\n2 3 6 7\n4 5 6 7\n";
        assert_eq!(parse_alist(text).unwrap(), fixtures::hamming7());
        let ragged = "7 3\n3 4\n1 1 2 1 2 2 3\n4 4 4\n1\n2\n1 2\n3\n1 3\n2 3\n1 2 3\n1 3 5 7\n2 3 6 7\n4 5 6 7\n";
        assert_eq!(parse_alist(ragged).unwrap(), fixtures::hamming7());
        let inconsistent = text.replace("4 5 6 7", "4 5 6 6");
        assert!(parse_alist(&inconsistent).is_err());
        assert!(parse_alist("7 3\n2 4\n1 1").is_err());
        assert!(parse_alist(&text.replace("1 2 3\n1 3", "1 2 3\n")).is_err());
    }

    proptest! {
        #[test]
        fn random_code_files_round_trip(s1 in 0u64..500, s2 in 0u64..500, named in proptest::bool::ANY) {
            let code = fixtures::hypergraph_product(
                &fixtures::random_classical(5, 3, 2, s1),
                &fixtures::random_classical(4, 3, 2, s2),
            );
            let mut f = CodeFile::from_code(&code);
            if named {
                f.metadata.name = Some(format!("hgp-{s1}-{s2}"));
                f.metadata.chi = Some([1, 2, 3]);
            }
            let text = f.render();
            let back = CodeFile::parse(&text).unwrap();
            prop_assert_eq!(back.render(), text);
            prop_assert_eq!(back.to_code().unwrap(), code);
        }
    }
}
