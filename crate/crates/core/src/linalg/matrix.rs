use super::field::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec<K> = Vec<(usize, K)>;

/// Returns `a + c * b` for sorted sparse vectors.
pub fn add_scaled<K: Field>(a: &[(usize, K)], c: &K, b: &[(usize, K)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<K: Field>(v: &[(usize, K)], c: &K) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c.clone() * x.clone())).collect()
}

pub fn to_dense<K: Field>(v: &[(usize, K)], len: usize) -> Vec<K> {
    let mut out = vec![K::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn to_sparse<K: Field>(v: &[K]) -> SparseVec<K> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Builds a sorted sparse vector from unsorted entries, summing duplicates.
pub fn collect_sparse<K: Field>(entries: impl IntoIterator<Item = (usize, K)>) -> SparseVec<K> {
    let mut v: Vec<(usize, K)> = entries.into_iter().collect();
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<K> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.clone() + x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Row-sparse matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, K::one()));
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<K>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| to_sparse(r)).collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&x| K::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec<K>>) -> Self {
        for row in &data {
            assert!(row.iter().all(|(c, x)| *c < cols && !x.is_zero()));
            assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        }
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_sparse_columns(rows: usize, columns: &[SparseVec<K>]) -> Self {
        let mut data: Vec<SparseVec<K>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col {
                assert!(*i < rows, "column entry out of range");
                if !x.is_zero() {
                    data[*i].push((j, x.clone()));
                }
            }
        }
        Matrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, K)>) -> Self {
        let mut per_row: Vec<Vec<(usize, K)>> = vec![Vec::new(); rows];
        for (r, c, x) in entries {
            assert!(r < rows && c < cols, "triplet out of range");
            per_row[r].push((c, x));
        }
        Matrix {
            rows,
            cols,
            data: per_row.into_iter().map(collect_sparse).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, K)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> K {
        match self.data[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, x: K) {
        assert!(r < self.rows && c < self.cols);
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) if x.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = x,
            Err(_) if x.is_zero() => {}
            Err(k) => row.insert(k, (c, x)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    /// Iterates stored `(row, col, value)` entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &K)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, c.to_owned(), x)))
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(K::zero(), |acc, (c, x)| acc + x.clone() * v[*c].clone())
            })
            .collect()
    }

    pub fn mul_sparse(&self, v: &[(usize, K)]) -> SparseVec<K> {
        let dense = to_dense(v, self.cols);
        to_sparse(&self.mul_vec(&dense))
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Vec::new(), |acc, (k, x)| add_scaled(&acc, x, &other.data[*k]))
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut data: Vec<SparseVec<K>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Rows reordered so that row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Matrix<K> {
        assert_eq!(perm.len(), self.rows);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: perm.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }
}
