//! Dense, bit-packed linear algebra over GF(2).
//!
//! Vectors and matrices pack 64 entries per `u64` word. Matrices are stored
//! row-major; every row starts on a word boundary so that row operations are
//! plain word-wise XORs. All routines are deterministic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn parity(words: impl Iterator<Item = u64>) -> bool {
    words.fold(0u32, |acc, w| acc ^ (w.count_ones() & 1)) == 1
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from the positions of its ones. Repeated positions cancel.
    ///
    /// # Panics
    /// Panics if a position is out of range.
    #[must_use]
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in support {
            v.flip(i);
        }
        v
    }

    #[must_use]
    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_support(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.truncate(words_for(len));
        words.resize(words_for(len), 0);
        if !len.is_multiple_of(WORD) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % WORD)) - 1;
            }
        }
        Self { len, words }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// # Panics
    /// Panics if `i >= len`.
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending positions of the ones.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        ones_in(&self.words)
    }

    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// # Panics
    /// Panics on a length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    #[must_use]
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        parity(self.words.iter().zip(&other.words).map(|(a, b)| a & b))
    }

    /// Concatenation `self ⊕ other`.
    #[must_use]
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// The sub-vector on positions `start..start + len`.
    #[must_use]
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        BitVector::from_support(
            len,
            self.iter_ones().filter(|&i| i >= start && i < start + len).map(|i| i - start),
        )
    }

    /// Compares by weight first, then lexicographically by support.
    #[must_use]
    pub fn cmp_weight_lex(&self, other: &BitVector) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.iter_ones().cmp(other.iter_ones()))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({}; {:?})", self.len, self.support())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn ones_in(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// A matrix over GF(2), row-major and bit-packed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from `(row, col)` positions; repeated positions cancel.
    ///
    /// # Panics
    /// Panics if a position is out of range.
    #[must_use]
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c) in entries {
            m.toggle(r, c);
        }
        m
    }

    /// Builds a matrix from sparse rows, each a list of column positions.
    #[must_use]
    pub fn from_row_supports(cols: usize, rows: &[Vec<usize>]) -> Self {
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter().enumerate().flat_map(|(r, s)| s.iter().map(move |&c| (r, c))),
        )
    }

    /// Stacks vectors as rows.
    ///
    /// # Panics
    /// Panics if lengths differ from `cols`.
    #[must_use]
    pub fn from_row_vectors(cols: usize, rows: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.len(), cols, "row length mismatch");
            m.row_words_mut(r).copy_from_slice(v.words());
        }
        m
    }

    /// Places vectors as columns.
    #[must_use]
    pub fn from_col_vectors(rows: usize, cols: &[BitVector]) -> Self {
        Self::from_row_vectors(rows, cols).transpose()
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range for {}x{}", self.rows, self.cols);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range for {}x{}", self.rows, self.cols);
        let mask = 1u64 << (c % WORD);
        let w = &mut self.data[r * self.stride + c / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range for {}x{}", self.rows, self.cols);
        self.data[r * self.stride + c / WORD] ^= 1u64 << (c % WORD);
    }

    #[must_use]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[must_use]
    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    #[must_use]
    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_support(self.rows, (0..self.rows).filter(|&r| self.get(r, c)))
    }

    /// Ascending column positions of the ones in row `r`.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        ones_in(self.row_words(r))
    }

    #[must_use]
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        self.row_ones(r).collect()
    }

    /// All `(row, col)` positions with value one, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| self.row_ones(r).map(move |c| (r, c)))
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows).map(|r| self.row_weight(r)).collect()
    }

    #[must_use]
    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for (_, c) in self.entries() {
            w[c] += 1;
        }
        w
    }

    #[must_use]
    pub fn max_row_weight(&self) -> usize {
        self.row_weights().into_iter().max().unwrap_or(0)
    }

    #[must_use]
    pub fn max_col_weight(&self) -> usize {
        self.col_weights().into_iter().max().unwrap_or(0)
    }

    #[must_use]
    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, c) in self.entries() {
            t.set(c, r, true);
        }
        t
    }

    /// Product `self · other` over GF(2).
    ///
    /// # Errors
    /// Returns [`Error::DimensionMismatch`] unless `self.cols == other.rows`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let start = r * out.stride;
            for k in ones_in(&self.data[r * self.stride..(r + 1) * self.stride]) {
                let src = other.row_words(k);
                for (d, s) in out.data[start..start + out.stride].iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    ///
    /// # Errors
    /// Returns [`Error::DimensionMismatch`] unless `v.len() == cols`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if parity(self.row_words(r).iter().zip(v.words()).map(|(a, b)| a & b)) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Sum over GF(2).
    ///
    /// # Errors
    /// Returns [`Error::DimensionMismatch`] on a shape mismatch.
    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    #[must_use]
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        }
    }

    /// Horizontal concatenation.
    #[must_use]
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for (r, c) in self.entries() {
            out.set(r, c, true);
        }
        for (r, c) in other.entries() {
            out.set(r, self.cols + c, true);
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &BitMatrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols, "block out of range");
        for (r, c) in block.entries() {
            self.set(row + r, col + c, true);
        }
    }

    /// The sub-matrix on rows `r0..r0+nr` and columns `c0..c0+nc`.
    #[must_use]
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> BitMatrix {
        let mut out = BitMatrix::zeros(nr, nc);
        for r in 0..nr {
            for c in self.row_ones(r0 + r) {
                if c >= c0 && c < c0 + nc {
                    out.set(r, c - c0, true);
                }
            }
        }
        out
    }

    /// Keeps only the listed columns, in the listed order.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, j, true);
                }
            }
        }
        out
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.data.swap(a * s + w, b * s + w);
        }
    }

    /// Reduces `self` in place to reduced row echelon form, visiting columns
    /// in `order`. Returns the pivot column of each of the leading `rank` rows.
    pub(crate) fn rref_in_order(&mut self, order: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in order {
            if next == self.rows {
                break;
            }
            let (w, bit) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (next..self.rows).find(|&r| self.data[r * self.stride + w] & bit != 0) else {
                continue;
            };
            self.swap_rows(next, p);
            for r in 0..self.rows {
                if r != next && self.data[r * self.stride + w] & bit != 0 {
                    self.xor_rows(r, next);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Eliminates column `c` from every row except `r`, which must have a one
    /// there.
    pub(crate) fn pivot_on(&mut self, r: usize, c: usize) {
        debug_assert!(self.get(r, c));
        let (w, bit) = (c / WORD, 1u64 << (c % WORD));
        for other in 0..self.rows {
            if other != r && self.data[other * self.stride + w] & bit != 0 {
                self.xor_rows(other, r);
            }
        }
    }

    /// Kronecker product `self ⊗ other`.
    #[must_use]
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1) in self.entries() {
            for (r2, c2) in other.entries() {
                out.set(r1 * other.rows + r2, c1 * other.cols + c2, true);
            }
        }
        out
    }

    /// Reduced row echelon form with columns visited in ascending order.
    /// Returns the reduced matrix and its pivot columns.
    #[must_use]
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_order(0..self.cols);
        (m, pivots)
    }

    /// Rank over GF(2).
    #[must_use]
    pub fn rank(&self) -> usize {
        // Forward elimination only; the short side is eliminated.
        let mut m = if self.rows <= self.cols { self.clone() } else { self.transpose() };
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let (w, bit) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * m.stride + w] & bit != 0) else {
                continue;
            };
            m.swap_rows(rank, p);
            for r in rank + 1..m.rows {
                if m.data[r * m.stride + w] & bit != 0 {
                    m.xor_rows(r, rank);
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of `{v : self · v = 0}`, one vector per pivot-free column in
    /// ascending column order.
    #[must_use]
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::zeros(self.cols);
                v.set(f, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self · x = b`, with every free variable set to zero, or
    /// `None` if `b` is outside the column space.
    ///
    /// # Errors
    /// Returns [`Error::DimensionMismatch`] unless `b.len() == rows`.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a {}x{} system",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for (r, c) in self.entries() {
            aug.set(r, c, true);
        }
        for r in b.iter_ones() {
            aug.set(r, self.cols, true);
        }
        let pivots = aug.rref_in_order(0..self.cols);
        if (pivots.len()..self.rows).any(|r| aug.get(r, self.cols)) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if aug.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// A basis of the column space, as a list of independent columns taken
    /// greedily in ascending order.
    #[must_use]
    pub fn column_space_basis(&self) -> Vec<BitVector> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        Ok(())
    }
}

/// Incrementally maintained span of vectors, kept in reduced echelon form.
/// Supports membership tests and reduction of new vectors.
#[derive(Clone, Debug)]
pub struct Span {
    len: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Span {
    #[must_use]
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[must_use]
    pub fn from_vectors<'a>(len: usize, vs: impl IntoIterator<Item = &'a BitVector>) -> Self {
        let mut s = Self::new(len);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; the result is zero iff `v` lies in it.
    #[must_use]
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.len, "span length mismatch");
        let v = self.reduce(&v);
        let Some(p) = v.iter_ones().next() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Reduced echelon form of a fixed matrix `A` together with the row
/// transform that produced it, for solving `A x = b` for many `b`.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    cols: usize,
    pivots: Vec<usize>,
    transform: BitMatrix,
}

impl EchelonForm {
    #[must_use]
    pub fn new(a: &BitMatrix) -> Self {
        let aug = a.hstack(&BitMatrix::identity(a.rows()));
        let mut r = aug;
        let pivots = r.rref_in_order(0..a.cols());
        let transform = r.block(0, a.rows(), a.cols(), a.rows());
        Self {
            cols: a.cols(),
            pivots,
            transform,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Same contract as [`BitMatrix::solve`].
    ///
    /// # Errors
    /// Dimension mismatch.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        let c = self.transform.mul_vec(b)?;
        if c.iter_ones().any(|r| r >= self.pivots.len()) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for r in c.iter_ones() {
            x.set(self.pivots[r], true);
        }
        Ok(Some(x))
    }
}

/// Rank of a matrix; free function form.
#[must_use]
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// Kernel basis; free function form of [`BitMatrix::kernel_basis`].
#[must_use]
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVector> {
    m.kernel_basis()
}

/// Linear solve; free function form of [`BitMatrix::solve`].
///
/// # Errors
/// Dimension mismatch between `m` and `b`.
pub fn solve(m: &BitMatrix, b: &BitVector) -> Result<Option<BitVector>> {
    m.solve(b)
}

/// Matrix product; free function form of [`BitMatrix::mul`].
///
/// # Errors
/// Dimension mismatch.
pub fn mat_mul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    a.mul(b)
}
