//! Integer matrices and their Smith normal form.
//!
//! Boundary matrices are stored sparsely over `i64` and reduced by unit
//! pivots first; whatever is left (usually nothing) goes through a dense
//! arbitrary-precision Smith normal form.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        IntegerMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.data[i * self.cols + j] = value.into();
    }

    fn to_nested(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r[..self.cols].to_vec()).collect()
    }
}

/// Invariant factors `d₁ | d₂ | …` (all positive, ones included) and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    dense_smith(m.to_nested(), m.cols)
}

/// Dense Smith normal form. The pivot is always the entry of least absolute
/// value in the remaining block, ties broken by (row, column).
fn dense_smith(mut a: Vec<Vec<BigInt>>, cols: usize) -> SmithForm {
    let rows = a.len();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut pivot: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&p);
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                *x -= &q * y;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&p);
            for row in a[t..].iter_mut() {
                let y = row[t].clone();
                row[j] -= &q * y;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // pivot must divide the rest; otherwise fold the offending row in
        let offending = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
        if let Some(i) = offending {
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                *x += y;
            }
            continue;
        }
        t += 1;
    }
    let mut invariant_factors: Vec<BigInt> = (0..t).map(|i| a[i][i].abs()).collect();
    invariant_factors.sort();
    SmithForm { rank: t, invariant_factors }
}

/// Sparse matrix over `i64`, stored by rows with sorted column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: vec![Vec::new(); rows] }
    }

    /// Duplicate positions are summed; zeros are dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut entries: Vec<Vec<(usize, i64)>> = vec![Vec::new(); rows];
        for (i, j, x) in triplets {
            assert!(i < rows && j < cols, "entry ({i}, {j}) outside {rows}x{cols}");
            entries[i].push((j, x));
        }
        for row in &mut entries {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(j, x) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == j => last.1 += x,
                    _ => merged.push((j, x)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        SparseMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        lookup(&self.entries[i], j)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |&(j, x)| (i, j, x)))
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.triplets() {
            m.set(i, j, x);
        }
        m
    }

    /// Product `self · other`, checked for overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut triplets = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for &(k, x) in row {
                for &(j, y) in &other.entries[k] {
                    triplets.push((i, j, x.checked_mul(y)?));
                }
            }
        }
        Some(SparseMatrix::from_triplets(self.rows, other.cols, triplets))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    /// Smith normal form: unit pivots are eliminated sparsely, the remainder
    /// is handed to the dense routine. Falls back to the dense routine from
    /// the current state if an `i64` operation would overflow.
    pub fn smith(&self) -> SmithForm {
        let mut rows = self.entries.clone();
        let mut by_col: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (i, row) in rows.iter().enumerate() {
            for &(j, _) in row {
                by_col[j].insert(i);
            }
        }
        let mut units = 0;
        let mut progress = true;
        'passes: while progress {
            progress = false;
            for c in 0..self.cols {
                let pivot = by_col[c].iter().filter(|&&r| lookup(&rows[r], c).abs() == 1).min_by_key(|&&r| (rows[r].len(), r)).copied();
                let Some(r) = pivot else { continue };
                let p = lookup(&rows[r], c);
                let pivot_row = std::mem::take(&mut rows[r]);
                for &(j, _) in &pivot_row {
                    by_col[j].remove(&r);
                }
                let others: Vec<usize> = by_col[c].iter().copied().collect();
                for i in others {
                    let factor = lookup(&rows[i], c).checked_mul(p);
                    match factor.and_then(|f| sub_scaled(&rows[i], &pivot_row, f)) {
                        Some(new_row) => {
                            for &(j, _) in &rows[i] {
                                by_col[j].remove(&i);
                            }
                            for &(j, _) in &new_row {
                                by_col[j].insert(i);
                            }
                            rows[i] = new_row;
                        }
                        None => {
                            rows[r] = pivot_row;
                            break 'passes;
                        }
                    }
                }
                units += 1;
                progress = true;
            }
        }
        let live_cols: Vec<usize> = (0..self.cols).filter(|&j| !by_col[j].is_empty()).collect();
        let mut col_pos = vec![usize::MAX; self.cols];
        for (k, &j) in live_cols.iter().enumerate() {
            col_pos[j] = k;
        }
        let residual: Vec<Vec<BigInt>> = rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut dense = vec![BigInt::zero(); live_cols.len()];
                for &(j, x) in r {
                    dense[col_pos[j]] = BigInt::from(x);
                }
                dense
            })
            .collect();
        let rest = dense_smith(residual, live_cols.len());
        let mut invariant_factors = vec![BigInt::one(); units];
        invariant_factors.extend(rest.invariant_factors);
        SmithForm { rank: units + rest.rank, invariant_factors }
    }
}

fn lookup(row: &[(usize, i64)], j: usize) -> i64 {
    row.binary_search_by_key(&j, |e| e.0).map_or(0, |k| row[k].1)
}

/// `a - f·b` for sorted sparse rows, or `None` on overflow.
fn sub_scaled(a: &[(usize, i64)], b: &[(usize, i64)], f: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let ja = a.get(x).map_or(usize::MAX, |e| e.0);
        let jb = b.get(y).map_or(usize::MAX, |e| e.0);
        let (j, v) = if ja < jb {
            x += 1;
            (ja, a[x - 1].1)
        } else {
            let scaled = b[y].1.checked_mul(f)?;
            y += 1;
            if ja == jb {
                x += 1;
                (ja, a[x - 1].1.checked_sub(scaled)?)
            } else {
                (jb, scaled.checked_neg()?)
            }
        };
        if v != 0 {
            out.push((j, v));
        }
    }
    Some(out)
}
