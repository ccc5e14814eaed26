//! Linear algebra over GF(2): a dense bit-packed matrix and a sparse
//! column-major matrix with persistence-style column reduction.

/// Dense matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// Rank by row elimination on the packed words.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let s = self.stride;
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..self.rows).find(|&r| m[r * s + w] & bit != 0) else {
                continue;
            };
            if p != rank {
                for k in w..s {
                    m.swap(p * s + k, rank * s + k);
                }
            }
            let (head, tail) = m.split_at_mut((rank + 1) * s);
            let pivot = &head[rank * s..];
            for row in tail.chunks_exact_mut(s) {
                if row[w] & bit != 0 {
                    for k in w..s {
                        row[k] ^= pivot[k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Rank of a dense GF(2) matrix.
pub fn gf2_rank(matrix: &Gf2Matrix) -> usize {
    matrix.rank()
}

/// Sparse GF(2) matrix stored by columns; each column is a sorted list of
/// row indices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseGf2Matrix {
    rows: usize,
    columns: Vec<Vec<u32>>,
}

impl SparseGf2Matrix {
    pub fn new(rows: usize, columns: Vec<Vec<u32>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1])
                && c.last().is_none_or(|&r| (r as usize) < rows)));
        SparseGf2Matrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[u32] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn to_dense(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                m.set(r as usize, c, true);
            }
        }
        m
    }

    pub fn from_dense(m: &Gf2Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| m.get(r, c))
                    .map(|r| r as u32)
                    .collect()
            })
            .collect();
        SparseGf2Matrix::new(m.rows(), columns)
    }

    /// `self * other` over GF(2), where `self` is `rows × k` and `other` is
    /// `k × n`.
    pub fn mul(&self, other: &SparseGf2Matrix) -> SparseGf2Matrix {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for &k in col {
                    acc = sym_diff(&acc, &self.columns[k as usize]);
                }
                acc
            })
            .collect();
        SparseGf2Matrix::new(self.rows, columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        self.reduce(None).rank
    }

    /// Column reduction (left-to-right, eliminating on the lowest row).
    /// Columns flagged in `skip` are known to reduce to zero and are not
    /// processed.
    pub fn reduce(&self, skip: Option<&[bool]>) -> Reduction {
        let mut pivot_col: Vec<u32> = vec![u32::MAX; self.rows];
        let mut reduced: Vec<Vec<u32>> = vec![Vec::new(); self.cols()];
        let mut rank = 0;
        for c in 0..self.cols() {
            if skip.is_some_and(|s| s[c]) {
                continue;
            }
            let mut col = self.columns[c].clone();
            while let Some(&low) = col.last() {
                let p = pivot_col[low as usize];
                if p == u32::MAX {
                    break;
                }
                col = sym_diff(&col, &reduced[p as usize]);
            }
            if let Some(&low) = col.last() {
                pivot_col[low as usize] = c as u32;
                reduced[c] = col;
                rank += 1;
            }
        }
        let pivot_rows = pivot_col.iter().map(|&p| p != u32::MAX).collect();
        Reduction { rank, pivot_rows }
    }
}

/// Result of a column reduction.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rank: usize,
    /// Rows that ended up as the lowest entry of some reduced column.
    pub pivot_rows: Vec<bool>,
}

fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
