//! Exact linear algebra over `Q` on finite coordinate spaces.
//!
//! Subspaces are kept in canonical reduced row echelon form (pivot = first
//! nonzero column, pivot entries 1, pivot columns cleared in every other
//! row), so two equal subspaces compare equal. Rows are stored sparse: the
//! subspaces of interest are direct sums of small weight blocks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

/// Sparse vector: `(column, value)` pairs, strictly increasing columns,
/// no zero values.
pub type SparseVec = Vec<(usize, Rational)>;

/// Converts a dense vector to sparse form.
pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, dim: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); dim];
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

/// `a + c * b`.
fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(v: &SparseVec, col: usize) -> Option<&Rational> {
    v.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &v[k].1)
}

/// A subspace of `Q^ambient_dim` in canonical reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSubspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
}

impl TruncatedSubspace {
    pub fn zero(ambient_dim: usize) -> Self {
        TruncatedSubspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        TruncatedSubspace {
            ambient_dim,
            rows: (0..ambient_dim).map(|k| alloc::vec![(k, Rational::one())]).collect(),
        }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient_dim: usize, axes: impl IntoIterator<Item = usize>) -> Result<Self> {
        rref_sparse(ambient_dim, axes.into_iter().map(|k| alloc::vec![(k, Rational::one())]))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis rows, ordered by pivot column.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn dense_rows(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| to_dense(r, self.ambient_dim)).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Canonical representative of `v` modulo this subspace: the unique
    /// vector in `v + W` vanishing on every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let pivots: BTreeMap<usize, usize> =
            self.rows.iter().enumerate().map(|(k, r)| (r[0].0, k)).collect();
        reduce_with(&pivots, &self.rows, v)
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_dims(self.ambient_dim, other.ambient_dim)?;
        Ok(self.rows.iter().all(|r| other.contains_vector(r)))
    }

    /// Same subspace inside `Q^new_dim`, `new_dim >= ambient_dim`, as the
    /// span of the first `ambient_dim` coordinates.
    pub fn embed(&self, new_dim: usize) -> Result<Self> {
        if new_dim < self.ambient_dim {
            return Err(Error::invalid(format!(
                "cannot embed dimension {} into {new_dim}",
                self.ambient_dim
            )));
        }
        Ok(TruncatedSubspace {
            ambient_dim: new_dim,
            rows: self.rows.clone(),
        })
    }
}

fn reduce_with(pivots: &BTreeMap<usize, usize>, rows: &[SparseVec], v: &SparseVec) -> SparseVec {
    // rows vanish on each other's pivots, so the pivot coefficients of `v`
    // can be read off once up front
    let hits: Vec<(usize, Rational)> = v
        .iter()
        .filter_map(|(c, x)| pivots.get(c).map(|&k| (k, -x.clone())))
        .collect();
    let mut out = v.clone();
    for (k, c) in hits {
        out = axpy(&out, &c, &rows[k]);
    }
    out
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::invalid(format!("ambient dimensions differ: {a} vs {b}")))
    }
}

/// Incremental reduced echelon basis.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl EchelonBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBuilder {
            ambient_dim,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> Result<bool> {
        if let Some((c, _)) = v.last() {
            if *c >= self.ambient_dim {
                return Err(Error::invalid(format!(
                    "column {c} out of range for dimension {}",
                    self.ambient_dim
                )));
            }
        }
        let mut r = reduce_with(&self.pivots, &self.rows, &v);
        if r.is_empty() {
            return Ok(false);
        }
        let lead = r[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, x) in r.iter_mut() {
                *x *= &inv;
            }
        }
        let p = r[0].0;
        for row in self.rows.iter_mut() {
            if let Some(x) = entry(row, p) {
                let c = -x.clone();
                *row = axpy(row, &c, &r);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        Ok(true)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        reduce_with(&self.pivots, &self.rows, v).is_empty()
    }

    pub fn finish(self) -> TruncatedSubspace {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        TruncatedSubspace {
            ambient_dim: self.ambient_dim,
            rows,
        }
    }
}

/// Canonical echelon basis of the span of dense rows of equal length.
pub fn rref(rows: &[Vec<Rational>]) -> Result<TruncatedSubspace> {
    let dim = rows.first().map_or(0, Vec::len);
    rref_dense_with_dim(dim, rows)
}

/// As [`rref`], with the ambient dimension given (needed for empty input).
pub fn rref_dense_with_dim(dim: usize, rows: &[Vec<Rational>]) -> Result<TruncatedSubspace> {
    if let Some(r) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::invalid(format!(
            "ragged rows: expected length {dim}, found {}",
            r.len()
        )));
    }
    rref_sparse(dim, rows.iter().map(|r| to_sparse(r)))
}

pub fn rref_sparse(
    ambient_dim: usize,
    rows: impl IntoIterator<Item = SparseVec>,
) -> Result<TruncatedSubspace> {
    let mut b = EchelonBuilder::new(ambient_dim);
    for r in rows {
        b.insert(r)?;
    }
    Ok(b.finish())
}

/// Null space of the map sending the `k`-th ambient basis vector to
/// `images[k]` (a vector of length `codomain_dim`).
pub fn kernel_sparse(codomain_dim: usize, images: &[SparseVec]) -> Result<TruncatedSubspace> {
    let n = images.len();
    // augmented rows [f(e_k) | e_k], codomain columns first
    let mut b = EchelonBuilder::new(codomain_dim + n);
    for (k, img) in images.iter().enumerate() {
        if img.last().is_some_and(|(c, _)| *c >= codomain_dim) {
            return Err(Error::invalid("image vector exceeds codomain dimension"));
        }
        let mut row = img.clone();
        row.push((codomain_dim + k, Rational::one()));
        b.insert(row)?;
    }
    let tail = b
        .finish()
        .rows
        .into_iter()
        .filter(|r| r[0].0 >= codomain_dim)
        .map(|r| r.into_iter().map(|(c, x)| (c - codomain_dim, x)).collect());
    rref_sparse(n, tail)
}

/// Null space of the map whose `k`-th row is the image of the `k`-th
/// ambient basis vector.
pub fn kernel(matrix: &[Vec<Rational>]) -> Result<TruncatedSubspace> {
    let codomain = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != codomain) {
        return Err(Error::invalid("kernel of a ragged matrix"));
    }
    let images: Vec<SparseVec> = matrix.iter().map(|r| to_sparse(r)).collect();
    kernel_sparse(codomain, &images)
}

pub fn sum(a: &TruncatedSubspace, b: &TruncatedSubspace) -> Result<TruncatedSubspace> {
    check_dims(a.ambient_dim, b.ambient_dim)?;
    rref_sparse(a.ambient_dim, a.rows.iter().chain(&b.rows).cloned())
}

/// Zassenhaus: echelonize `[a | a]` and `[b | 0]`; rows with vanishing
/// left half span the intersection.
pub fn intersect(a: &TruncatedSubspace, b: &TruncatedSubspace) -> Result<TruncatedSubspace> {
    check_dims(a.ambient_dim, b.ambient_dim)?;
    let d = a.ambient_dim;
    let mut builder = EchelonBuilder::new(2 * d);
    for r in &a.rows {
        let mut row = r.clone();
        row.extend(r.iter().map(|(c, x)| (c + d, x.clone())));
        builder.insert(row)?;
    }
    for r in &b.rows {
        builder.insert(r.clone())?;
    }
    let tail = builder
        .finish()
        .rows
        .into_iter()
        .filter(|r| r[0].0 >= d)
        .map(|r| r.into_iter().map(|(c, x)| (c - d, x)).collect());
    rref_sparse(d, tail)
}
